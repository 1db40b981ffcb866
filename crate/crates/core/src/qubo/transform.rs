use num_traits::{Signed, Zero};

use crate::algebra::{rational, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reformulate::ConstraintSystem;

use super::model::{IsingModel, QuboModel};

/// Ising model whose ground states are the maximum cuts: `J_ij = W_ij`, no
/// fields, zero offset. For spins `σ` the cut weight is `(ΣW - E(σ)) / 2`.
pub fn maxcut_to_ising(graph: &Graph) -> IsingModel {
    let mut m = IsingModel::new(graph.num_vertices());
    for &(u, v, w) in graph.edges() {
        m.add_coupling(u, v, rational(w)).expect("graph edges are valid couplings");
    }
    m
}

/// Total weight of the edges whose endpoints carry different spins.
pub fn cut_weight(graph: &Graph, spins: &[i8]) -> i64 {
    graph
        .edges()
        .iter()
        .filter(|&&(u, v, _)| (spins[u] > 0) != (spins[v] > 0))
        .map(|e| e.2)
        .sum()
}

/// Linearized 0/1 program of a QUBO.
#[derive(Clone, Debug)]
pub struct LinearizedQubo {
    /// Variables `x_0..x_{n-1}` followed by one `y_k` per product; all rows
    /// are `<=` links and the objective is linear plus the QUBO offset.
    pub system: ConstraintSystem,
    /// `products[k] = (i, j)` means `y_k` stands for `x_i x_j`.
    pub products: Vec<(usize, usize)>,
}

/// Replaces each product `x_i x_j` by `y` with `y <= x_i`, `y <= x_j`,
/// `y >= x_i + x_j - 1`.
pub fn qubo_to_ilp(q: &QuboModel) -> Result<LinearizedQubo> {
    let n = q.num_vars();
    let products: Vec<(usize, usize)> = q.entries().filter(|e| e.0 != e.1).map(|e| (e.0, e.1)).collect();
    let total = n + products.len();
    let mut a = Vec::with_capacity(3 * products.len());
    for (k, &(i, j)) in products.iter().enumerate() {
        let y = n + k;
        let mut r = vec![0i64; total];
        r[y] = 1;
        r[i] = -1;
        a.push(r.clone());
        r[i] = 0;
        r[j] = -1;
        a.push(r);
        let mut r = vec![0i64; total];
        r[y] = -1;
        r[i] = 1;
        r[j] = 1;
        a.push(r);
    }
    let b: Vec<i64> = (0..products.len()).flat_map(|_| [0, 0, 1]).collect();
    let rows: Vec<usize> = (0..a.len()).collect();
    let mut obj = Polynomial::constant(total, q.offset().clone());
    let mut k = 0;
    for (i, j, c) in q.coefficients() {
        let var = if i == j {
            i
        } else {
            k += 1;
            n + k - 1
        };
        obj.add_term(Monomial::var(total, var), c);
    }
    let system = ConstraintSystem::binary(a, b, total)?
        .with_inequalities(&rows)?
        .with_objective(obj)?;
    Ok(LinearizedQubo { system, products })
}

/// Spins that represent `variable` after [`chain_duplicate`] on a model with
/// `n` spins: the original index, then the appended copies.
pub fn chain_spins(n: usize, variable: usize, copies: usize) -> Vec<usize> {
    std::iter::once(variable).chain(n..n + copies.saturating_sub(1)).collect()
}

/// Splits `variable` into a path of `copies` spins joined by couplings `-p`.
///
/// The couplings of the variable are dealt to the copies round-robin in
/// neighbor order, the field stays on the original spin, and `p (copies - 1)`
/// is added to the offset so unbroken chains keep their original energy.
pub fn chain_duplicate(m: &IsingModel, variable: usize, copies: usize, p: &Rational) -> Result<IsingModel> {
    if !p.is_positive() {
        return Err(Error::Parameter(format!("chain strength must be positive, got {p}")));
    }
    if copies == 0 {
        return Err(Error::Parameter("a chain needs at least one copy".into()));
    }
    if variable >= m.num_spins() {
        return Err(Error::Validation(format!(
            "variable {variable} out of range for {} spins",
            m.num_spins()
        )));
    }
    let mut out = m.clone();
    if copies == 1 {
        return Ok(out);
    }
    let n = m.num_spins();
    for _ in 1..copies {
        out.push_spin();
    }
    let chain = chain_spins(n, variable, copies);
    let neighbors: Vec<(usize, Rational)> = m
        .couplings()
        .filter_map(|(a, b, v)| match (a == variable, b == variable) {
            (true, _) => Some((b, v.clone())),
            (_, true) => Some((a, v.clone())),
            _ => None,
        })
        .collect();
    for (k, (u, v)) in neighbors.into_iter().enumerate() {
        out.remove_coupling(variable, u);
        out.add_coupling(chain[k % copies], u, v)?;
    }
    for w in chain.windows(2) {
        out.add_coupling(w[0], w[1], -p.clone())?;
    }
    out.add_offset(&(p * rational(copies as i64 - 1)));
    Ok(out)
}

/// Whether all spins of the chain agree.
pub fn chain_intact(spins: &[i8], chain: &[usize]) -> bool {
    chain.windows(2).all(|w| spins[w[0]] == spins[w[1]])
}

/// Sum of `|J|` over the couplings that touch `variable`.
pub fn incident_weight(m: &IsingModel, variable: usize) -> Rational {
    m.couplings()
        .filter(|&(a, b, _)| a == variable || b == variable)
        .fold(Rational::zero(), |acc, (_, _, v)| acc + v.abs())
}
