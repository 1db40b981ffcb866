use std::collections::BTreeSet;

use crate::anneal::{SampleSet, Vartype};
use crate::error::{Error, Result};
use crate::graver::{in_kernel, mat_vec, minimal_filter, GraverBasis, LatticeVector};
use crate::reformulate::EncodingMap;

/// Cap on pairwise combinations of near-kernel vectors.
pub const MAX_PAIRS: usize = 10_000;

/// Residual 1-norm up to which a decoded sample counts as near the kernel.
pub const NEAR_KERNEL: i64 = 2;

/// Partial Graver basis from kernel-QUBO samples.
///
/// Every sample is decoded through `x = L + E X`. Kernel members go to the
/// pool directly; samples with `0 < ‖A x‖₁ <= 2` are combined pairwise (sums
/// and differences, one round, at most [`MAX_PAIRS`] pairs) and the
/// combinations that land in the kernel join the pool. The pool is then
/// sign-closed and filtered to its ⊑-minimal elements. The result is always
/// flagged partial; see [`certify`].
pub fn extract_partial_graver(samples: &SampleSet, e: &EncodingMap, a: &[Vec<i64>]) -> Result<GraverBasis> {
    if samples.header.vartype != Vartype::Binary {
        return Err(Error::Validation("kernel samples must be binary patterns".into()));
    }
    let mut pool: BTreeSet<LatticeVector> = BTreeSet::new();
    let mut near: BTreeSet<LatticeVector> = BTreeSet::new();
    for r in samples.records() {
        let bits: Vec<u8> = r.config.iter().map(|&v| v as u8).collect();
        let x = e.decode(&bits)?;
        let res: i64 = mat_vec(a, &x).iter().map(|v| v.abs()).sum();
        if res == 0 {
            pool.insert(x);
        } else if res <= NEAR_KERNEL {
            near.insert(x);
        }
    }
    let near: Vec<LatticeVector> = near.into_iter().collect();
    let mut pairs = 0;
    'outer: for i in 0..near.len() {
        for j in i + 1..near.len() {
            if pairs == MAX_PAIRS {
                break 'outer;
            }
            pairs += 1;
            for sign in [1, -1] {
                let v: LatticeVector = near[i].iter().zip(&near[j]).map(|(p, q)| p + sign * q).collect();
                if in_kernel(a, &v) {
                    pool.insert(v);
                }
            }
        }
    }
    let pool: Vec<LatticeVector> = pool.into_iter().collect();
    GraverBasis::new(minimal_filter(&pool, true), a.to_vec(), true)
}

/// Marks `basis` complete when it equals the reference Graver basis.
pub fn certify(basis: &mut GraverBasis, reference: &GraverBasis) -> bool {
    let same = basis.elements() == reference.elements();
    if same {
        basis.mark_complete();
    }
    same
}
