use crate::algebra::{Monomial, MonomialOrder, Polynomial, VarNames};
use crate::error::{Error, Result};

use super::{buchberger_with, GroebnerBasis, Ideal, Limits};

/// `min c.x  s.t.  A x = b, x >= 0` over the integers, with `c >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricIp {
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
    c: Vec<i64>,
}

impl ToricIp {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        let m = a.len();
        let n = c.len();
        Error::check_len(m, b.len())?;
        for row in &a {
            Error::check_len(n, row.len())?;
        }
        if c.iter().any(|&x| x < 0) {
            return Err(Error::Parameter("costs must be non-negative".into()));
        }
        Ok(ToricIp { a, b, c })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.c.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn rhs(&self) -> &[i64] {
        &self.b
    }

    pub fn cost(&self) -> &[i64] {
        &self.c
    }

    fn has_negative(&self) -> bool {
        self.a.iter().flatten().any(|&x| x < 0)
    }

    /// Ring size: `w1..wn`, `z1..zm` and `t` when A has a negative entry.
    fn ring(&self) -> (usize, VarNames) {
        let (m, n) = (self.rows(), self.cols());
        let mut names: Vec<String> = (1..=n).map(|j| format!("w{j}")).collect();
        names.extend((1..=m).map(|i| format!("z{i}")));
        if self.has_negative() {
            names.push("t".into());
        }
        (names.len(), VarNames::new(names))
    }

    pub fn is_feasible_point(&self, x: &[i64]) -> bool {
        x.len() == self.cols()
            && x.iter().all(|&v| v >= 0)
            && self
                .a
                .iter()
                .zip(&self.b)
                .all(|(row, &bi)| row.iter().zip(x).map(|(a, v)| a * v).sum::<i64>() == bi)
    }

    pub fn objective(&self, x: &[i64]) -> i64 {
        self.c.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Binomial ideal whose reduced basis under the cost order is a test set:
/// `z^{a_j-} w_j - z^{a_j+}` for every column, plus `t z1...zm - 1` when some
/// entry of A is negative.
pub fn ct_toric_ideal(ip: &ToricIp) -> Ideal {
    let (m, n) = (ip.rows(), ip.cols());
    let (nv, names) = ip.ring();
    let mut gens = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut pos = vec![0u32; nv];
        let mut neg = vec![0u32; nv];
        neg[j] = 1;
        for i in 0..m {
            let a = ip.a[i][j];
            if a > 0 {
                pos[n + i] = a as u32;
            } else {
                neg[n + i] = a.unsigned_abs() as u32;
            }
        }
        gens.push(Polynomial::binomial(neg, pos));
    }
    if ip.has_negative() {
        let mut prod = vec![1u32; nv];
        prod[..n].iter_mut().for_each(|e| *e = 0);
        gens.push(Polynomial::binomial(prod, vec![0; nv]));
    }
    Ideal::new(gens, names).expect("generators built in the ring")
}

/// Eliminate `z` and `t` first, then compare cost on `w`, then grevlex.
pub fn cost_order(ip: &ToricIp) -> MonomialOrder {
    let (nv, _) = ip.ring();
    let n = ip.cols();
    let tie = MonomialOrder::grevlex(nv);
    let mut cost = vec![0i64; nv];
    cost[..n].copy_from_slice(&ip.c);
    let by_cost = MonomialOrder::weighted(cost, tie).expect("non-negative costs");
    let block: Vec<usize> = (n..nv).collect();
    MonomialOrder::eliminate(&block, by_cost).expect("block inside the ring")
}

/// Reduced basis of the toric ideal under [`cost_order`].
pub fn ct_basis(ip: &ToricIp, limits: Limits) -> Result<GroebnerBasis> {
    buchberger_with(&ct_toric_ideal(ip), &cost_order(ip), limits)
}

/// Optimal solution of the toric program.
///
/// The start monomial is `w^x0` when a feasible `x0` is given and `z^b`
/// otherwise (negative parts of `b` are absorbed by powers of `t`). Its
/// normal form is `w^x*` for an optimal `x*`; any leftover `z` or `t` means
/// the program is infeasible.
pub fn ct_solve(ip: &ToricIp, x0: Option<&[i64]>) -> Result<Vec<i64>> {
    ct_solve_with(ip, x0, Limits::default())
}

pub fn ct_solve_with(ip: &ToricIp, x0: Option<&[i64]>, limits: Limits) -> Result<Vec<i64>> {
    let (m, n) = (ip.rows(), ip.cols());
    let (nv, _) = ip.ring();
    let mut start = vec![0u32; nv];
    match x0 {
        Some(x) => {
            Error::check_len(n, x.len())?;
            if !ip.is_feasible_point(x) {
                return Err(Error::Precondition("starting point is not feasible".into()));
            }
            for j in 0..n {
                start[j] = exponent(x[j])?;
            }
        }
        None => {
            let shift = ip.b.iter().map(|&v| (-v).max(0)).max().unwrap_or(0);
            if shift > 0 && !ip.has_negative() {
                return Err(Error::Infeasible(
                    "negative right-hand side with a non-negative matrix".into(),
                ));
            }
            for i in 0..m {
                start[n + i] = exponent(ip.b[i] + shift)?;
            }
            if ip.has_negative() {
                start[nv - 1] = exponent(shift)?;
            }
        }
    }
    let basis = ct_basis(ip, limits)?;
    let nf = basis.normal_form(&Polynomial::term(
        Monomial::from_exponents(start),
        crate::algebra::rational(1),
    ))?;
    let (mono, _) = nf
        .terms()
        .next()
        .ok_or_else(|| Error::Internal("monomial reduced to zero in a binomial ideal".into()))?;
    if mono.exponents()[n..].iter().any(|&e| e > 0) {
        return Err(Error::Infeasible(
            "normal form keeps constraint variables: no non-negative integer solution".into(),
        ));
    }
    let x: Vec<i64> = mono.exponents()[..n].iter().map(|&e| i64::from(e)).collect();
    if !ip.is_feasible_point(&x) {
        return Err(Error::Internal("normal form decodes to an infeasible point".into()));
    }
    Ok(x)
}

fn exponent(v: i64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Parameter(format!("exponent {v} out of range")))
}
