use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{rational, Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

use super::{buchberger_with, is_infeasible, Ideal, Limits};

/// Minimize a polynomial over binary points satisfying polynomial equalities.
///
/// Builds `<z - f(x), g_k(x), x_i^2 - x_i>` in `x0..x(n-1), z`, computes the
/// lex basis with every `x_i` above `z`, takes the smallest root of the
/// univariate element `g(z)` and recovers a binary point attaining it.
pub fn bpt_solve(objective: &Polynomial, equalities: &[Polynomial], n: usize) -> Result<(Rational, Vec<u8>)> {
    bpt_solve_with(objective, equalities, n, Limits::default())
}

pub fn bpt_solve_with(
    objective: &Polynomial,
    equalities: &[Polynomial],
    n: usize,
    limits: Limits,
) -> Result<(Rational, Vec<u8>)> {
    Error::check_len(n, objective.nvars())?;
    for g in equalities {
        Error::check_len(n, g.nvars())?;
    }
    let nv = n + 1;
    let z = Polynomial::var(nv, n);
    let mut gens = vec![&z - &objective.extend(nv)];
    gens.extend(equalities.iter().map(|g| g.extend(nv)));
    for i in 0..n {
        let x = Polynomial::var(nv, i);
        gens.push(&(&x * &x) - &x);
    }
    let order = MonomialOrder::lex(nv);
    let basis = buchberger_with(&Ideal::indexed(gens.clone(), nv)?, &order, limits)?;
    if is_infeasible(&basis) {
        return Err(Error::Infeasible("constraints have no binary solution".into()));
    }
    let univariate = basis
        .polynomials()
        .iter()
        .find(|g| g.variables() == [n])
        .ok_or_else(|| Error::Internal("lex basis has no element in the objective variable alone".into()))?;
    let coeffs: Vec<Rational> = (0..=univariate.total_degree() as u32)
        .map(|d| {
            let mut e = vec![0; nv];
            e[n] = d;
            univariate.coefficient(&Monomial::from_exponents(e))
        })
        .collect();
    let z_opt = smallest_rational_root(&coeffs)?;

    gens.push(&z - &Polynomial::constant(nv, z_opt.clone()));
    let fixed = buchberger_with(&Ideal::indexed(gens, nv)?, &order, limits)?;
    let x = back_substitute(fixed.polynomials(), n, &z_opt)
        .ok_or_else(|| Error::Internal("no binary point attains the smallest root".into()))?;
    Ok((z_opt, x))
}

// Assign x(n-1), ..., x0 trying 0 before 1; a basis element is checked as
// soon as every variable it uses is assigned.
fn back_substitute(basis: &[Polynomial], n: usize, z: &Rational) -> Option<Vec<u8>> {
    let lowest: Vec<usize> = basis
        .iter()
        .map(|g| g.variables().first().copied().unwrap_or(n))
        .collect();
    let mut point = vec![Rational::zero(); n + 1];
    point[n] = z.clone();
    fn go(v: usize, basis: &[Polynomial], lowest: &[usize], point: &mut Vec<Rational>) -> bool {
        if v == 0 {
            return true;
        }
        let v = v - 1;
        for bit in [0, 1] {
            point[v] = rational(bit);
            let ok = basis
                .iter()
                .zip(lowest)
                .filter(|(_, &lo)| lo == v)
                .all(|(g, _)| g.eval(point).map(|r| r.is_zero()).unwrap_or(false));
            if ok && go(v, basis, lowest, point) {
                return true;
            }
        }
        false
    }
    let consistent = basis
        .iter()
        .zip(&lowest)
        .filter(|(_, &lo)| lo == n)
        .all(|(g, _)| g.eval(&point).map(|r| r.is_zero()).unwrap_or(false));
    if !consistent || !go(n, basis, &lowest, &mut point) {
        return None;
    }
    Some(point[..n].iter().map(|r| u8::from(!r.is_zero())).collect())
}

/// Univariate polynomial with coefficients from degree 0 upward.
fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rational(k as i64))
            .collect(),
    )
}

fn remainder(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let q = r.last().unwrap() / &lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn sturm_chain(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    while !chain.last().unwrap().is_empty() && chain.last().unwrap().len() > 1 {
        let k = chain.len();
        let r: Vec<Rational> = remainder(&chain[k - 2], &chain[k - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    chain.retain(|q| !q.is_empty());
    chain
}

fn sign_changes(chain: &[Vec<Rational>], x: &Rational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|q| {
            let v = eval(q, x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Smallest real root of `p`, which must be rational.
///
/// Roots are counted with a Sturm chain and bracketed by bisection. For the
/// integer primitive multiple of `p`, a rational root has a denominator
/// dividing the leading coefficient `L`, so it lies on the grid `Z / L`; once
/// the bracket is narrower than `1/L` the single grid candidate is tested.
pub(crate) fn smallest_rational_root(p: &[Rational]) -> Result<Rational> {
    let p = trim(p.to_vec());
    if p.len() < 2 {
        return Err(Error::Internal("objective polynomial has no roots".into()));
    }
    let denom_lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().unwrap().abs();
    let cauchy = p[..p.len() - 1]
        .iter()
        .map(|c| (c / p.last().unwrap()).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + rational(1);
    let chain = sturm_chain(&p);
    let count = |a: &Rational, b: &Rational| sign_changes(&chain, a) as i64 - sign_changes(&chain, b) as i64;
    let mut lo = -cauchy.clone() - rational(1);
    let mut hi = cauchy;
    if count(&lo, &hi) < 1 {
        return Err(Error::Internal("objective polynomial has no real roots".into()));
    }
    let step = Rational::new(BigInt::one(), lead.clone());
    while &hi - &lo >= step {
        let mid = (&lo + &hi) / rational(2);
        if count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // the root lies in (lo, hi] and the grid point k/L in there is unique
    let k = (&hi * Rational::from_integer(lead.clone())).floor();
    let candidate = k / Rational::from_integer(lead);
    if candidate > lo && eval(&p, &candidate).is_zero() {
        Ok(candidate)
    } else {
        Err(Error::Internal("smallest objective root is not rational".into()))
    }
}
