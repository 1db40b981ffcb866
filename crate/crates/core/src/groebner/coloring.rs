use crate::algebra::{Monomial, MonomialOrder, Polynomial, VarNames};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{buchberger_with, is_infeasible, Ideal, Limits};

/// `x_i^k - 1` for every vertex and `sum_d x_i^d x_j^(k-1-d)` for every edge.
/// The variety is the set of proper colorings by k-th roots of unity.
pub fn coloring_system(graph: &Graph, k: u32) -> Result<Ideal> {
    if k == 0 {
        return Err(Error::Parameter("need at least one color".into()));
    }
    let n = graph.num_vertices();
    let mut gens = Vec::with_capacity(n + graph.edges().len());
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        gens.push(Polynomial::binomial(e, vec![0; n]));
    }
    for &(u, v, _) in graph.edges() {
        let terms = (0..k).map(|d| {
            let mut e = vec![0; n];
            e[u] = d;
            e[v] = k - 1 - d;
            (Monomial::from_exponents(e), crate::algebra::rational(1))
        });
        gens.push(Polynomial::from_terms(n, terms)?);
    }
    Ideal::new(gens, VarNames::indexed(n))
}

pub fn is_k_colorable(graph: &Graph, k: u32) -> Result<bool> {
    is_k_colorable_with(graph, k, Limits::default())
}

pub fn is_k_colorable_with(graph: &Graph, k: u32, limits: Limits) -> Result<bool> {
    let ideal = coloring_system(graph, k)?;
    if ideal.generators().is_empty() {
        return Ok(true);
    }
    let order = MonomialOrder::grevlex(graph.num_vertices());
    Ok(!is_infeasible(&buchberger_with(&ideal, &order, limits)?))
}
