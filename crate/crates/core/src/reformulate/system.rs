use crate::algebra::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

/// Integer program `min f(x)  s.t.  A x (= or <=) b,  l <= x <= u`.
///
/// A missing bound is `None`. Rows flagged in `inequalities` read `A_i x <= b_i`,
/// all others are equalities. The objective is a polynomial in the `n`
/// variables; an absent objective is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
    lower: Vec<Option<i64>>,
    upper: Vec<Option<i64>>,
    inequalities: Vec<bool>,
    objective: Polynomial,
}

impl ConstraintSystem {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<i64>, lower: Vec<Option<i64>>, upper: Vec<Option<i64>>) -> Result<Self> {
        let n = lower.len();
        if a.len() != b.len() {
            return Err(Error::Validation(format!(
                "A has {} rows but b has {} entries",
                a.len(),
                b.len()
            )));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {i} of A has {} columns but there are {n} variables",
                    row.len()
                )));
            }
        }
        if upper.len() != n {
            return Err(Error::Validation(format!(
                "{n} lower bounds but {} upper bounds",
                upper.len()
            )));
        }
        for j in 0..n {
            if let (Some(l), Some(u)) = (lower[j], upper[j]) {
                if l > u {
                    return Err(Error::Validation(format!("variable {j} has lower bound {l} > upper bound {u}")));
                }
            }
        }
        let m = a.len();
        Ok(ConstraintSystem {
            a,
            b,
            lower,
            upper,
            inequalities: vec![false; m],
            objective: Polynomial::zero(n),
        })
    }

    /// Equality system with finite bounds on every variable.
    pub fn boxed(a: Vec<Vec<i64>>, b: Vec<i64>, lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        Self::new(
            a,
            b,
            lower.into_iter().map(Some).collect(),
            upper.into_iter().map(Some).collect(),
        )
    }

    /// Equality system over `{0,1}^n`.
    pub fn binary(a: Vec<Vec<i64>>, b: Vec<i64>, n: usize) -> Result<Self> {
        Self::boxed(a, b, vec![0; n], vec![1; n])
    }

    pub fn with_inequalities(mut self, rows: &[usize]) -> Result<Self> {
        for &r in rows {
            if r >= self.a.len() {
                return Err(Error::Validation(format!(
                    "inequality row {r} but A has {} rows",
                    self.a.len()
                )));
            }
            self.inequalities[r] = true;
        }
        Ok(self)
    }

    pub fn with_linear_objective(self, c: &[i64]) -> Result<Self> {
        let n = self.num_vars();
        if c.len() != n {
            return Err(Error::Validation(format!("cost vector has {} entries for {n} variables", c.len())));
        }
        let terms = c
            .iter()
            .enumerate()
            .map(|(j, &cj)| (Monomial::var(n, j), crate::algebra::rational(cj)));
        let obj = Polynomial::from_terms(n, terms)?;
        self.with_objective(obj)
    }

    pub fn with_objective(mut self, objective: Polynomial) -> Result<Self> {
        if objective.nvars() != self.num_vars() {
            return Err(Error::Validation(format!(
                "objective has {} variables, system has {}",
                objective.nvars(),
                self.num_vars()
            )));
        }
        self.objective = objective;
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.lower.len()
    }

    pub fn num_rows(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn rhs(&self) -> &[i64] {
        &self.b
    }

    pub fn lower(&self) -> &[Option<i64>] {
        &self.lower
    }

    pub fn upper(&self) -> &[Option<i64>] {
        &self.upper
    }

    pub fn is_inequality(&self, row: usize) -> bool {
        self.inequalities[row]
    }

    pub fn has_inequalities(&self) -> bool {
        self.inequalities.iter().any(|&f| f)
    }

    pub fn objective(&self) -> &Polynomial {
        &self.objective
    }

    /// Integer costs when the objective is linear with integer coefficients
    /// (a constant term is ignored).
    pub fn linear_cost(&self) -> Option<Vec<Rational>> {
        let n = self.num_vars();
        if self.objective.total_degree() > 1 {
            return None;
        }
        Some(
            (0..n)
                .map(|j| self.objective.coefficient(&Monomial::var(n, j)))
                .collect(),
        )
    }

    /// Both bound vectors, or an error naming the first unbounded variable.
    pub fn finite_bounds(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        let mut l = Vec::with_capacity(self.num_vars());
        let mut u = Vec::with_capacity(self.num_vars());
        for j in 0..self.num_vars() {
            match (self.lower[j], self.upper[j]) {
                (Some(a), Some(b)) => {
                    l.push(a);
                    u.push(b);
                }
                _ => return Err(Error::Unbounded(format!("variable {j} has no finite bounds"))),
            }
        }
        Ok((l, u))
    }

    /// `A x - b`
    pub fn residual(&self, x: &[i64]) -> Vec<i64> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(row, &bi)| row.iter().zip(x).map(|(a, v)| a * v).sum::<i64>() - bi)
            .collect()
    }

    pub fn within_bounds(&self, x: &[i64]) -> bool {
        x.len() == self.num_vars()
            && x.iter().enumerate().all(|(j, &v)| {
                self.lower[j].is_none_or(|l| v >= l) && self.upper[j].is_none_or(|u| v <= u)
            })
    }

    pub fn is_feasible(&self, x: &[i64]) -> bool {
        self.within_bounds(x)
            && self
                .residual(x)
                .iter()
                .enumerate()
                .all(|(i, &r)| if self.inequalities[i] { r <= 0 } else { r == 0 })
    }

    pub fn objective_value(&self, x: &[i64]) -> Rational {
        self.objective.eval_i64(x).expect("point length checked by caller")
    }

    /// Exhaustive minimum over the (finite) box: optimal value and all optimal points
    /// in lexicographic order. `None` when nothing is feasible.
    pub fn brute_force(&self) -> Result<Option<(Rational, Vec<Vec<i64>>)>> {
        let (l, u) = self.finite_bounds()?;
        let n = self.num_vars();
        let mut x = l.clone();
        let mut best: Option<(Rational, Vec<Vec<i64>>)> = None;
        if n == 0 {
            return Ok(self.is_feasible(&x).then(|| (self.objective_value(&x), vec![x])));
        }
        loop {
            if self.is_feasible(&x) {
                let v = self.objective_value(&x);
                match &mut best {
                    Some((bv, pts)) if *bv == v => pts.push(x.clone()),
                    Some((bv, _)) if *bv < v => {}
                    _ => best = Some((v, vec![x.clone()])),
                }
            }
            // odometer with the last coordinate fastest keeps lexicographic order
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(best);
                }
                k -= 1;
                if x[k] < u[k] {
                    x[k] += 1;
                    break;
                }
                x[k] = l[k];
            }
        }
    }

    /// Objective is linear (or constant) with all-zero quadratic part.
    pub fn is_linear(&self) -> bool {
        self.objective.total_degree() <= 1
    }
}
