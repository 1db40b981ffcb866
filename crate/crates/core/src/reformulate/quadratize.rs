use std::collections::BTreeMap;

use crate::algebra::{rational, Monomial, Polynomial};

/// Degree reduction of a pseudo-Boolean polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratization {
    /// Quadratic polynomial over the original variables followed by the ancillas.
    pub polynomial: Polynomial,
    /// `ancillas[k] = (i, j)`: variable `n + k` stands for `x_i x_j`
    /// (either factor may itself be an earlier ancilla).
    pub ancillas: Vec<(usize, usize)>,
    /// Sum of one [`rosenberg`] term per ancilla, unweighted.
    pub penalty: Polynomial,
}

impl Quadratization {
    pub fn num_vars(&self) -> usize {
        self.polynomial.nvars()
    }

    /// Extends an assignment of the original variables with consistent ancillas.
    pub fn complete(&self, x: &[u8]) -> Vec<u8> {
        let mut out = x.to_vec();
        for &(i, j) in &self.ancillas {
            out.push(out[i] & out[j]);
        }
        out
    }
}

/// `3y + x_i x_j - 2 y x_i - 2 y x_j`: zero when `y = x_i x_j`, at least one otherwise.
pub fn rosenberg(nvars: usize, i: usize, j: usize, y: usize) -> Polynomial {
    let mono = |vars: &[usize]| {
        let mut e = vec![0u32; nvars];
        for &v in vars {
            e[v] = 1;
        }
        Monomial::from_exponents(e)
    };
    Polynomial::from_terms(
        nvars,
        [
            (mono(&[y]), rational(3)),
            (mono(&[i, j]), rational(1)),
            (mono(&[y, i]), rational(-2)),
            (mono(&[y, j]), rational(-2)),
        ],
    )
    .expect("well-formed terms")
}

/// Repeatedly replaces the pair of variables that occurs in the most terms of
/// degree three or more (ties: lowest indices) by a new ancilla, until the
/// polynomial is quadratic. The input is first reduced with `x² = x`.
pub fn quadratize(f: &Polynomial) -> Quadratization {
    let n = f.nvars();
    let mut terms: Vec<(Vec<usize>, crate::algebra::Rational)> = f
        .multilinearize()
        .terms()
        .map(|(m, c)| (m.support().collect(), c.clone()))
        .collect();
    let mut ancillas: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (vars, _) in terms.iter().filter(|t| t.0.len() > 2) {
            for (a, &i) in vars.iter().enumerate() {
                for &j in &vars[a + 1..] {
                    *counts.entry((i, j)).or_default() += 1;
                }
            }
        }
        // max_by_key keeps the last maximum, so scan in reverse for the lowest pair
        let Some((&(i, j), _)) = counts.iter().rev().max_by_key(|e| *e.1) else { break };
        let y = n + ancillas.len();
        ancillas.push((i, j));
        for (vars, _) in terms.iter_mut().filter(|t| t.0.len() > 2) {
            if vars.contains(&i) && vars.contains(&j) {
                vars.retain(|&v| v != i && v != j);
                vars.push(y);
                vars.sort_unstable();
            }
        }
    }
    let total = n + ancillas.len();
    let mut polynomial = Polynomial::zero(total);
    for (vars, c) in terms {
        let mut e = vec![0u32; total];
        for v in vars {
            e[v] = 1;
        }
        polynomial.add_term(Monomial::from_exponents(e), c);
    }
    let mut penalty = Polynomial::zero(total);
    for (k, &(i, j)) in ancillas.iter().enumerate() {
        penalty = &penalty + &rosenberg(total, i, j, n + k);
    }
    Quadratization {
        polynomial,
        ancillas,
        penalty,
    }
}
