use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, Ideal, Limits};

use super::lattice::{integer_kernel_basis, matrix_cols, LatticeVector};
use super::pottier::{minimal_filter, GraverBasis};

/// Graver basis from the toric ideal of the Lawrence lifting `[[A, 0], [I, I]]`.
///
/// The lifted kernel is `{(u, -u) : A u = 0}`. Its toric ideal is the lattice
/// ideal of a kernel basis saturated by the product of all variables
/// (eliminating `t` from `t * prod(x) * prod(y) - 1`). Every reduced basis of
/// that ideal consists of the binomials `x^{u+} y^{u-} - x^{u-} y^{u+}` for
/// the Graver elements `u`, so setting `y = 1` reads them off.
pub fn lawrence_graver(a: &[Vec<i64>], n: usize) -> Result<GraverBasis> {
    lawrence_graver_with(a, n, Limits::default())
}

pub fn lawrence_graver_with(a: &[Vec<i64>], n: usize, limits: Limits) -> Result<GraverBasis> {
    if !a.is_empty() {
        Error::check_len(n, matrix_cols(a)?)?;
    }
    let kernel = integer_kernel_basis(a, n)?;
    if kernel.is_empty() {
        return GraverBasis::new(Vec::new(), a.to_vec(), false);
    }
    // variables: x_0..x_{n-1}, y_0..y_{n-1}, t
    let nv = 2 * n + 1;
    let mut gens = Vec::with_capacity(kernel.len() + 1);
    for u in &kernel {
        let mut plus = vec![0u32; nv];
        let mut minus = vec![0u32; nv];
        for (j, &x) in u.iter().enumerate() {
            let e = x.unsigned_abs() as u32;
            if x > 0 {
                plus[j] = e;
                minus[n + j] = e;
            } else {
                minus[j] = e;
                plus[n + j] = e;
            }
        }
        gens.push(Polynomial::binomial(plus, minus));
    }
    gens.push(Polynomial::binomial(vec![1u32; nv], vec![0; nv]));
    let order = MonomialOrder::eliminate(&[nv - 1], MonomialOrder::grevlex(nv))?;
    let basis = buchberger_with(&Ideal::indexed(gens, nv)?, &order, limits)?;
    let mut elements: Vec<LatticeVector> = Vec::new();
    for g in basis.polynomials() {
        let terms: Vec<&Monomial> = g.terms().map(|(m, _)| m).collect();
        if terms.len() != 2 || terms.iter().any(|m| m.exponent(nv - 1) > 0) {
            continue;
        }
        let u: LatticeVector = (0..n)
            .map(|j| i64::from(terms[0].exponent(j)) - i64::from(terms[1].exponent(j)))
            .collect();
        if u.iter().any(|&x| x != 0) {
            elements.push(u);
        }
    }
    let elements = minimal_filter(&elements, true);
    let mut out = GraverBasis::new(elements, a.to_vec(), false)?;
    out.mark_complete();
    Ok(out)
}
