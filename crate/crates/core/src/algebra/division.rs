use std::cmp::Ordering;

use num_traits::Zero;

use super::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};

/// Polynomial whose terms are sorted ascending under a fixed order, so the
/// leading term is the last entry. Used wherever many leading-term lookups
/// happen under one order (division, Buchberger).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Sorted {
    pub terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    pub fn new(p: &Polynomial, order: &MonomialOrder) -> Sorted {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned()).expect("arity checked on entry")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.1 *= c;
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.last().map(|t| t.1.clone()) {
            self.scale(&lc.recip());
        }
    }

    /// `self - c * x^m * g`, merged in order.
    pub fn sub_mul(&self, c: &Rational, m: &Monomial, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().unwrap();
                    let (_, bc) = b.next().unwrap();
                    let s = ac - bc;
                    if !s.is_zero() {
                        out.push((am.clone(), s));
                    }
                }
            }
        }
        Sorted { terms: out }
    }

    /// S-polynomial of two nonzero sorted polynomials.
    pub fn s_poly(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let l = f.lm().lcm(g.lm());
        let mf = l.div(f.lm()).unwrap();
        let mg = l.div(g.lm()).unwrap();
        let mut left = Sorted { terms: Vec::new() };
        left = left.sub_mul(&-f.lc().recip(), &mf, f, order);
        left.sub_mul(&g.lc().recip(), &mg, g, order)
    }

    /// Full reduction against `basis`, ignoring quotients.
    pub fn reduce(&self, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
        let mut p = self.clone();
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((lm, lc)) = p.terms.last().cloned() {
            match basis.iter().find(|g| g.lm().divides(&lm)) {
                Some(g) => {
                    let m = lm.div(g.lm()).unwrap();
                    let c = &lc / g.lc();
                    p.terms.pop();
                    let tail = Sorted {
                        terms: g.terms[..g.terms.len() - 1].to_vec(),
                    };
                    p = p.sub_mul(&c, &m, &tail, order);
                }
                None => {
                    rem.push(p.terms.pop().unwrap());
                }
            }
        }
        rem.reverse();
        Sorted { terms: rem }
    }
}

/// Result of dividing `f` by an ordered list: `f = sum q_i g_i + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

fn check_ring(f: &Polynomial, order: &MonomialOrder) -> Result<()> {
    Error::check_len(order.arity(), f.nvars())
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    check_ring(f, order)?;
    check_ring(g, order)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = Sorted::s_poly(&Sorted::new(f, order), &Sorted::new(g, order), order);
    Ok(s.to_polynomial(f.nvars()))
}

/// Multivariate division. The currently largest term is attacked first and
/// divisors are tried in list order, which fixes the quotients.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division> {
    check_ring(f, order)?;
    let mut gs = Vec::with_capacity(divisors.len());
    for g in divisors {
        check_ring(g, order)?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        gs.push(Sorted::new(g, order));
    }
    let n = f.nvars();
    let mut quotients = vec![Polynomial::zero(n); gs.len()];
    let mut p = Sorted::new(f, order);
    let mut rem = Polynomial::zero(n);
    while let Some((lm, lc)) = p.terms.last().cloned() {
        match gs.iter().position(|g| g.lm().divides(&lm)) {
            Some(i) => {
                let g = &gs[i];
                let m = lm.div(g.lm()).unwrap();
                let c = &lc / g.lc();
                quotients[i].add_term(m.clone(), c.clone());
                p = p.sub_mul(&c, &m, g, order);
            }
            None => {
                p.terms.pop();
                rem.add_term(lm, lc);
            }
        }
    }
    Ok(Division {
        remainder: rem,
        quotients,
    })
}
