use crate::error::{Error, Result};

/// Integer vector in `Z^n`.
pub type LatticeVector = Vec<i64>;

/// `u ⊑ v`: same orthant and `|u_i| <= |v_i|` everywhere.
pub fn conformal_leq(u: &[i64], v: &[i64]) -> Result<bool> {
    Error::check_len(u.len(), v.len())?;
    Ok(conformal(u, v))
}

#[inline]
pub(crate) fn conformal(u: &[i64], v: &[i64]) -> bool {
    u.iter()
        .zip(v)
        .all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

/// No coordinate pair has opposite signs.
#[inline]
pub(crate) fn sign_compatible(u: &[i64], v: &[i64]) -> bool {
    u.iter().zip(v).all(|(&a, &b)| a == 0 || b == 0 || a.signum() == b.signum())
}

pub(crate) fn norm1(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

pub(crate) fn mat_vec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub(crate) fn in_kernel(a: &[Vec<i64>], v: &[i64]) -> bool {
    mat_vec(a, v).iter().all(|&x| x == 0)
}

pub(crate) fn matrix_cols(a: &[Vec<i64>]) -> Result<usize> {
    let n = a.first().map_or(0, Vec::len);
    for row in a {
        Error::check_len(n, row.len())?;
    }
    Ok(n)
}

/// Lattice basis of `{x in Z^n : A x = 0}`.
///
/// Unimodular column operations bring `[A; I]` to column echelon form; the
/// identity block under the zero columns of `A` then spans the kernel. The
/// basis is finally size-reduced by pairwise `v_i -= ±v_j` steps that shrink
/// the 1-norm.
pub fn integer_kernel_basis(a: &[Vec<i64>], n: usize) -> Result<Vec<LatticeVector>> {
    if !a.is_empty() {
        Error::check_len(n, matrix_cols(a)?)?;
    }
    let m = a.len();
    // columns of the stacked matrix, each of length m + n
    let mut cols: Vec<Vec<i128>> = (0..n)
        .map(|j| {
            let mut c: Vec<i128> = a.iter().map(|row| i128::from(row[j])).collect();
            c.extend((0..n).map(|k| i128::from(k == j)));
            c
        })
        .collect();
    let mut pivot = 0;
    for row in 0..m {
        if pivot == n {
            break;
        }
        // Euclid on the entries of this row across columns pivot..n
        loop {
            let nonzero: Vec<usize> = (pivot..n).filter(|&j| cols[j][row] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    cols.swap(pivot, j);
                    pivot += 1;
                }
                break;
            }
            let &p = nonzero
                .iter()
                .min_by_key(|&&j| cols[j][row].abs())
                .unwrap();
            for &j in &nonzero {
                if j != p {
                    let q = cols[j][row].div_euclid(cols[p][row]);
                    let (src, dst) = if p < j {
                        let (l, r) = cols.split_at_mut(j);
                        (&l[p], &mut r[0])
                    } else {
                        let (l, r) = cols.split_at_mut(p);
                        (&r[0], &mut l[j])
                    };
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d -= q * s;
                    }
                }
            }
        }
    }
    let mut basis: Vec<LatticeVector> = Vec::with_capacity(n - pivot);
    for col in &cols[pivot..] {
        let v: Result<Vec<i64>> = col[m..]
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::ComputationLimit("kernel entry overflow".into())))
            .collect();
        basis.push(v?);
    }
    size_reduce(&mut basis);
    for v in &mut basis {
        // first nonzero entry positive, for a canonical presentation
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    basis.sort_by_key(|v| (norm1(v), v.clone()));
    Ok(basis)
}

fn size_reduce(basis: &mut [LatticeVector]) {
    let k = basis.len();
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand: Vec<i64> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a - sign * b).collect();
                    if norm1(&cand) < norm1(&basis[i]) {
                        basis[i] = cand;
                        improved = true;
                    }
                }
            }
        }
    }
}

/// Subtract elements of `g` that are conformal to the remainder until none is.
/// Each subtraction lowers the 1-norm, so this terminates.
pub fn vector_normal_form(s: &[i64], g: &[LatticeVector]) -> Result<LatticeVector> {
    for v in g {
        Error::check_len(s.len(), v.len())?;
    }
    Ok(normal_form(s.to_vec(), g))
}

pub(crate) fn normal_form(mut r: Vec<i64>, g: &[LatticeVector]) -> Vec<i64> {
    'outer: loop {
        if r.iter().all(|&x| x == 0) {
            return r;
        }
        for v in g {
            if v.iter().any(|&x| x != 0) && conformal(v, &r) {
                r.iter_mut().zip(v).for_each(|(a, b)| *a -= b);
                continue 'outer;
            }
        }
        return r;
    }
}
