use std::collections::{HashSet, VecDeque};

use super::lattice::{conformal, in_kernel, integer_kernel_basis, matrix_cols, norm1, normal_form, sign_compatible, LatticeVector};
use crate::error::{Error, Result};

/// Set of kernel vectors of `A`, closed under negation.
///
/// `partial` is false only when the set is known to be the whole Graver
/// basis. Elements are kept in a canonical order (1-norm, then lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraverBasis {
    elements: Vec<LatticeVector>,
    matrix: Vec<Vec<i64>>,
    partial: bool,
}

impl GraverBasis {
    /// Validates `A g = 0`, `g != 0`, and sign closure.
    pub fn new(elements: Vec<LatticeVector>, matrix: Vec<Vec<i64>>, partial: bool) -> Result<Self> {
        let n = elements.first().map_or(0, Vec::len);
        for g in &elements {
            Error::check_len(n, g.len())?;
            if g.iter().all(|&x| x == 0) {
                return Err(Error::Validation("zero vector in a Graver set".into()));
            }
            if !matrix.is_empty() && !in_kernel(&matrix, g) {
                return Err(Error::Validation(format!("{g:?} is not in the kernel")));
            }
        }
        let mut set: Vec<LatticeVector> = elements;
        let neg: Vec<LatticeVector> = set.iter().map(|g| g.iter().map(|x| -x).collect()).collect();
        set.extend(neg);
        Ok(GraverBasis {
            elements: canonical(set),
            matrix,
            partial,
        })
    }

    pub fn elements(&self) -> &[LatticeVector] {
        &self.elements
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_partial(&self) -> bool {
        self.partial
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mark_complete(&mut self) {
        self.partial = false;
    }

    /// Subset with the given element indices (taken with their negations).
    pub fn restrict(&self, keep: &[usize]) -> GraverBasis {
        let picked: Vec<LatticeVector> = keep.iter().map(|&i| self.elements[i].clone()).collect();
        GraverBasis::new(picked, self.matrix.clone(), true).expect("subset of a valid set")
    }

    /// One representative per `±g` pair: the one whose first nonzero entry is positive.
    pub fn representatives(&self) -> Vec<LatticeVector> {
        self.elements
            .iter()
            .filter(|g| g.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
            .cloned()
            .collect()
    }
}

fn canonical(mut v: Vec<LatticeVector>) -> Vec<LatticeVector> {
    v.sort_by(|a, b| norm1(a).cmp(&norm1(b)).then_with(|| a.cmp(b)));
    v.dedup();
    v
}

/// Elements of `k` not conformally dominated by another element; with
/// `sign_close` the negations are added first.
pub fn minimal_filter(k: &[LatticeVector], sign_close: bool) -> Vec<LatticeVector> {
    let mut pool: Vec<LatticeVector> = k.iter().filter(|v| v.iter().any(|&x| x != 0)).cloned().collect();
    if sign_close {
        let neg: Vec<LatticeVector> = pool.iter().map(|g| g.iter().map(|x| -x).collect()).collect();
        pool.extend(neg);
    }
    let pool = canonical(pool);
    // anything dominating v has a strictly larger 1-norm, so scanning by
    // increasing norm only needs the minimal elements kept so far
    let mut kept: Vec<LatticeVector> = Vec::new();
    for v in pool {
        if !kept.iter().any(|g| conformal(g, &v)) {
            kept.push(v);
        }
    }
    kept
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PottierOptions {
    pub max_elements: usize,
    /// Skip sums of sign-compatible vectors; such sums already are conformal sums.
    pub skip_sign_compatible: bool,
}

impl Default for PottierOptions {
    fn default() -> Self {
        PottierOptions {
            max_elements: 200_000,
            skip_sign_compatible: true,
        }
    }
}

pub fn pottier(a: &[Vec<i64>], n: usize) -> Result<GraverBasis> {
    pottier_with(a, n, PottierOptions::default())
}

/// Completion from a lattice basis `F`: start with `G = F ∪ -F`, queue all
/// sums `f + g`, and add every nonzero normal form together with its sums
/// against `G`, until the queue is empty.
pub fn pottier_with(a: &[Vec<i64>], n: usize, opts: PottierOptions) -> Result<GraverBasis> {
    if !a.is_empty() {
        Error::check_len(n, matrix_cols(a)?)?;
    }
    let f = integer_kernel_basis(a, n)?;
    let mut g: Vec<LatticeVector> = Vec::new();
    for v in &f {
        g.push(v.clone());
        g.push(v.iter().map(|x| -x).collect());
    }
    let mut queue: VecDeque<LatticeVector> = VecDeque::new();
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let push_sums = |r: &LatticeVector, g: &[LatticeVector], queue: &mut VecDeque<LatticeVector>, seen: &mut HashSet<LatticeVector>| {
        for h in g {
            if opts.skip_sign_compatible && sign_compatible(r, h) {
                continue;
            }
            let s: LatticeVector = r.iter().zip(h).map(|(x, y)| x + y).collect();
            if s.iter().any(|&x| x != 0) && seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    };
    for i in 0..g.len() {
        let r = g[i].clone();
        push_sums(&r, &g[i + 1..], &mut queue, &mut seen);
    }
    while let Some(s) = queue.pop_front() {
        let r = normal_form(s, &g);
        if r.iter().all(|&x| x == 0) {
            continue;
        }
        push_sums(&r, &g, &mut queue, &mut seen);
        g.push(r);
        if g.len() > opts.max_elements {
            return Err(Error::ComputationLimit(format!(
                "Graver completion exceeded {} elements",
                opts.max_elements
            )));
        }
    }
    let elements = minimal_filter(&g, true);
    Ok(GraverBasis {
        elements,
        matrix: a.to_vec(),
        partial: false,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{rational, Rational};
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn set(v: &[&[i64]]) -> Vec<LatticeVector> {
        let mut all: Vec<LatticeVector> = v.iter().map(|x| x.to_vec()).collect();
        all.extend(v.iter().map(|x| x.iter().map(|y| -y).collect::<Vec<_>>()));
        canonical(all)
    }

    #[test]
    fn one_two_one() {
        let g = pottier(&[vec![1, 2, 1]], 3).unwrap();
        assert_eq!(g.elements(), &set(&[&[0, -1, 2], &[1, -1, 1], &[1, 0, -1], &[2, -1, 0]])[..]);
        assert!(!g.is_partial());
    }

    #[test]
    fn small_cases() {
        assert_eq!(pottier(&[vec![1, -1]], 2).unwrap().elements(), &set(&[&[1, 1]])[..]);
        assert!(pottier(&[vec![1, 0], vec![0, 1]], 2).unwrap().is_empty());
        assert!(pottier(&[vec![2]], 1).unwrap().is_empty());
    }

    #[test]
    fn minimal_filter_examples() {
        assert_eq!(minimal_filter(&[vec![1, 0, -1], vec![2, 0, -2]], false), vec![vec![1, 0, -1]]);
        assert!(minimal_filter(&[], true).is_empty());
        // the seven decoded kernel columns of the [1 2 1] walk-through
        let decoded = vec![
            vec![-1, 0, 1],
            vec![-1, 1, -1],
            vec![0, -1, 2],
            vec![0, 0, 0],
            vec![1, -1, 1],
            vec![1, 0, -1],
            vec![2, -1, 0],
        ];
        assert_eq!(
            minimal_filter(&decoded, true),
            set(&[&[0, -1, 2], &[1, -1, 1], &[1, 0, -1], &[2, -1, 0]])
        );
    }

    /// Kernel vectors with all entries in `[-bound, bound]`, found by
    /// enumerating the free coordinates of the row-reduced system.
    pub(crate) fn kernel_in_box(a: &[Vec<i64>], n: usize, bound: i64) -> Vec<LatticeVector> {
        let mut m: Vec<Vec<Rational>> = a.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            let lead = m[r][c].clone();
            for k in 0..n {
                m[r][k] = &m[r][k] / &lead;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in 0..n {
                        let t = &f * &m[r][k];
                        m[i][k] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut out = Vec::new();
        let mut vals = vec![-bound; free.len()];
        if free.is_empty() {
            return out;
        }
        loop {
            let mut x = vec![0i64; n];
            for (k, &c) in free.iter().enumerate() {
                x[c] = vals[k];
            }
            let mut ok = true;
            for (row, &pc) in pivots.iter().enumerate() {
                let s: Rational = free.iter().map(|&c| &m[row][c] * rational(x[c])).sum();
                let v = -s;
                if !v.is_integer() || v.to_integer().abs() > bound.into() {
                    ok = false;
                    break;
                }
                x[pc] = i64::try_from(v.to_integer()).unwrap();
            }
            if ok && x.iter().any(|&v| v != 0) {
                out.push(x);
            }
            let mut k = 0;
            loop {
                if k == free.len() {
                    return out;
                }
                vals[k] += 1;
                if vals[k] <= bound {
                    break;
                }
                vals[k] = -bound;
                k += 1;
            }
        }
    }

    /// Graver basis by box enumeration, certified by doubling the box until
    /// the minimal set stops changing.
    pub(crate) fn brute_graver(a: &[Vec<i64>], n: usize, start: i64) -> Vec<LatticeVector> {
        let mut bound = start;
        let mut prev = minimal_filter(&kernel_in_box(a, n, bound), false);
        loop {
            bound *= 2;
            let next = minimal_filter(&kernel_in_box(a, n, bound), false);
            if next == prev {
                return next;
            }
            prev = next;
        }
    }

    #[test]
    fn skipping_sign_compatible_sums_changes_nothing() {
        for a in [vec![vec![1, 2, 1]], vec![vec![1, 2, 3, 4]], vec![vec![2, -1, 3], vec![1, 1, -2]]] {
            let n = a[0].len();
            let fast = pottier(&a, n).unwrap();
            let slow = pottier_with(
                &a,
                n,
                PottierOptions {
                    skip_sign_compatible: false,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn element_cap() {
        let opts = PottierOptions {
            max_elements: 3,
            ..Default::default()
        };
        assert!(matches!(
            pottier_with(&[vec![1, 2, 3, 4]], 4, opts),
            Err(Error::ComputationLimit(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn matches_box_enumeration(
            rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..=2)
        ) {
            let g = pottier(&rows, 4).unwrap();
            for v in g.elements() {
                prop_assert!(in_kernel(&rows, v));
            }
            prop_assert_eq!(g.elements().to_vec(), brute_graver(&rows, 4, 5));
        }
    }
}
