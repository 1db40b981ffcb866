use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::error::{Error, Result};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by monomial; no zero coefficient is ever
/// stored, so the zero polynomial is the empty map. The map order is only a
/// storage order: term orders are always passed explicitly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// `LT(f) = LC(f) * LM(f)` under some order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingParts {
    pub monomial: Monomial,
    pub coefficient: Rational,
}

impl LeadingParts {
    pub fn term(&self) -> Polynomial {
        Polynomial::term(self.monomial.clone(), self.coefficient.clone())
    }
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), Rational::one())
    }

    pub fn term(monomial: Monomial, coefficient: Rational) -> Self {
        let nvars = monomial.arity();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Polynomial { nvars, terms }
    }

    /// Sum of the given terms; repeated monomials are combined.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            Error::check_len(nvars, m.arity())?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Binomial `x^a - x^b` from two exponent vectors.
    pub fn binomial(a: Vec<u32>, b: Vec<u32>) -> Self {
        let nvars = a.len();
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::from_exponents(a), Rational::one());
        p.add_term(Monomial::from_exponents(b), -Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Nonzero constant (a unit of the coefficient field).
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Variables occurring in at least one term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for v in m.support() {
                used[v] = true;
            }
        }
        (0..self.nvars).filter(|&v| used[v]).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self, order: &MonomialOrder) -> Result<LeadingParts> {
        Error::check_len(order.arity(), self.nvars)?;
        let (m, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)?;
        Ok(LeadingParts {
            monomial: m.clone(),
            coefficient: c.clone(),
        })
    }

    /// Terms sorted from the largest to the smallest monomial under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `c * x^m * self`
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
        }
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let lc = self.leading(order)?.coefficient;
        Ok(self.scale(&lc.recip()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        Error::check_len(self.nvars, point.len())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                t *= num_traits::pow(point[v].clone(), m.exponent(v) as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluate at an integer point.
    pub fn eval_i64(&self, point: &[i64]) -> Result<Rational> {
        let p: Vec<Rational> = point.iter().map(|&x| rational(x)).collect();
        self.eval(&p)
    }

    /// Evaluate at an integer point in floating point (for objective oracles).
    pub fn eval_f64(&self, point: &[i64]) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut t = to_f64(c);
            for v in m.support() {
                t *= (point[v] as f64).powi(m.exponent(v) as i32);
            }
            total += t;
        }
        total
    }

    /// Replace every variable `i` by the polynomial `images[i]` (all in a common ring).
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        Error::check_len(self.nvars, images.len())?;
        let target = images.first().map(Polynomial::nvars).unwrap_or(0);
        for im in images {
            Error::check_len(target, im.nvars)?;
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for v in m.support() {
                t = &t * &images[v].pow(m.exponent(v));
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitute a rational value for one variable (the variable stays in the ring).
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            out.add_term(
                Monomial::from_exponents(exps),
                c * num_traits::pow(value.clone(), e as usize),
            );
        }
        out
    }

    /// Reduce with `x^2 = x` on every variable.
    pub fn multilinearize(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.multilinear(), c.clone());
        }
        out
    }

    /// Embed into a ring with `nvars >= self.nvars()` indeterminates.
    pub fn extend(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.extend(nvars), c.clone())).collect(),
        }
    }

    /// Rename variables: variable `i` becomes `map[i]` in a ring of `nvars` indeterminates.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Result<Polynomial> {
        Error::check_len(self.nvars, map.len())?;
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; nvars];
            for v in m.support() {
                if map[v] >= nvars {
                    return Err(Error::Dimension {
                        expected: nvars,
                        found: map[v] + 1,
                    });
                }
                exps[map[v]] += m.exponent(v);
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Integer multiple with coprime integer coefficients and a positive
    /// leading coefficient: `z^4 - 3/2 z^2 + 1/2` becomes `2z^4 - 3z^2 + 1`.
    pub fn primitive(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut factor = Rational::new(denom_lcm, content);
        let lead_negative = self
            .leading(order)
            .map(|l| l.coefficient.is_negative())
            .unwrap_or(false);
        if lead_negative {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

pub fn to_f64(c: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or_else(|| {
        // numerator/denominator too large for a direct conversion
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_polynomial(self, None))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_polynomial(self, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        super::super::parse_polynomial(s, &super::super::VarNames::indexed(n)).unwrap()
    }

    #[test]
    fn leading_parts_under_lex() {
        // x + 2z^3 - 3z with x > y > z
        let names = super::super::VarNames::new(["x", "y", "z"]);
        let f = super::super::parse_polynomial("x + 2*z^3 - 3*z", &names).unwrap();
        let lead = f.leading(&MonomialOrder::lex(3)).unwrap();
        assert_eq!(lead.monomial, Monomial::from_exponents(vec![1, 0, 0]));
        assert_eq!(lead.coefficient, rational(1));

        let g = super::super::parse_polynomial("2*z^4 - 3*z^2 + 1", &names).unwrap();
        let lead = g.leading(&MonomialOrder::lex(3)).unwrap();
        assert_eq!(lead.monomial, Monomial::from_exponents(vec![0, 0, 4]));
        assert_eq!(lead.coefficient, rational(2));
        assert_eq!(lead.term(), Polynomial::term(lead.monomial.clone(), rational(2)));
    }

    #[test]
    fn constant_leading_monomial_is_one() {
        let f = Polynomial::constant(3, rational(5));
        let lead = f.leading(&MonomialOrder::grevlex(3)).unwrap();
        assert!(lead.monomial.is_one());
        assert_eq!(lead.coefficient, rational(5));
    }

    #[test]
    fn zero_has_no_leading_term() {
        assert!(matches!(
            Polynomial::zero(2).leading(&MonomialOrder::lex(2)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn primitive_clears_denominators() {
        let f = p("x0^4 - 3/2*x0^2 + 1/2", 1);
        assert_eq!(f.primitive(&MonomialOrder::lex(1)), p("2*x0^4 - 3*x0^2 + 1", 1));
        let g = p("-4*x0 + 6", 1);
        assert_eq!(g.primitive(&MonomialOrder::lex(1)), p("2*x0 - 3", 1));
    }

    #[test]
    fn compose_and_substitute() {
        let f = p("x0*x1 + x1^2", 2);
        // x0 -> x0 + 1, x1 -> 2
        let images = vec![p("x0 + 1", 2), Polynomial::constant(2, rational(2))];
        assert_eq!(f.compose(&images).unwrap(), p("2*x0 + 6", 2));
        assert_eq!(f.substitute(1, &rational(3)), p("3*x0 + 9", 2));
    }

    #[test]
    fn multilinearize_collapses_powers() {
        let f = p("x0^3*x1^2 + x0 - 2*x0^2", 2);
        assert_eq!(f.multilinearize(), p("x0*x1 - x0", 2));
    }

    // brute-force expansion oracle: evaluate on random integer points
    fn eval_all(f: &Polynomial, pts: &[Vec<i64>]) -> Vec<Rational> {
        pts.iter().map(|x| f.eval_i64(x).unwrap()).collect()
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..5, 1i64..4), 0..6).prop_map(
            move |ts| {
                Polynomial::from_terms(
                    n,
                    ts.into_iter()
                        .map(|(e, a, b)| (Monomial::from_exponents(e), ratio(a, b))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f - &f), &Polynomial::zero(3));
            prop_assert!(f.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn products_agree_with_pointwise_evaluation(f in arb_poly(3), g in arb_poly(3)) {
            let pts: Vec<Vec<i64>> = (0..6).map(|k| vec![k - 2, 2 * k - 5, 3 - k]).collect();
            let prod = eval_all(&(&f * &g), &pts);
            let expect: Vec<Rational> = eval_all(&f, &pts).into_iter().zip(eval_all(&g, &pts)).map(|(a, b)| a * b).collect();
            prop_assert_eq!(prod, expect);
        }
    }
}
