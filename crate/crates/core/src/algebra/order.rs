use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// A term order on exponent vectors.
///
/// `Lex`, `GrLex` and `GrevLex` carry a variable priority list: `priority[0]`
/// is the largest variable. `Weighted` compares `w . alpha` first and falls
/// back to `tie` on equal weight; with non-negative weights and a well-ordered
/// tie order it is again a monomial order. Chaining `Weighted` orders gives
/// block and elimination orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex(Vec<usize>),
    GrLex(Vec<usize>),
    GrevLex(Vec<usize>),
    Weighted {
        weights: Vec<i64>,
        tie: Box<MonomialOrder>,
    },
}

fn identity(nvars: usize) -> Vec<usize> {
    (0..nvars).collect()
}

fn check_priority(nvars: usize, priority: &[usize]) -> Result<()> {
    Error::check_len(nvars, priority.len())?;
    let mut seen = vec![false; nvars];
    for &v in priority {
        if v >= nvars || seen[v] {
            return Err(Error::Parameter(format!(
                "variable priority {priority:?} is not a permutation of 0..{nvars}"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex(identity(nvars))
    }

    pub fn grlex(nvars: usize) -> Self {
        MonomialOrder::GrLex(identity(nvars))
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder::GrevLex(identity(nvars))
    }

    pub fn lex_with(priority: Vec<usize>) -> Result<Self> {
        check_priority(priority.len(), &priority)?;
        Ok(MonomialOrder::Lex(priority))
    }

    pub fn grlex_with(priority: Vec<usize>) -> Result<Self> {
        check_priority(priority.len(), &priority)?;
        Ok(MonomialOrder::GrLex(priority))
    }

    pub fn grevlex_with(priority: Vec<usize>) -> Result<Self> {
        check_priority(priority.len(), &priority)?;
        Ok(MonomialOrder::GrevLex(priority))
    }

    /// Cost-weighted order: `a > b` iff `w.a > w.b`, or equal weight and `a >_tie b`.
    pub fn weighted(weights: Vec<i64>, tie: MonomialOrder) -> Result<Self> {
        Error::check_len(tie.arity(), weights.len())?;
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::Parameter(
                "cost weights must be non-negative for a well-ordering".into(),
            ));
        }
        Ok(MonomialOrder::Weighted {
            weights,
            tie: Box::new(tie),
        })
    }

    /// Order in which every monomial touching `block` is larger than every
    /// monomial that does not; `tie` decides within equal block degree.
    pub fn eliminate(block: &[usize], tie: MonomialOrder) -> Result<Self> {
        let mut weights = vec![0; tie.arity()];
        for &v in block {
            if v >= weights.len() {
                return Err(Error::Dimension {
                    expected: weights.len(),
                    found: v + 1,
                });
            }
            weights[v] = 1;
        }
        Self::weighted(weights, tie)
    }

    pub fn arity(&self) -> usize {
        match self {
            MonomialOrder::Lex(p) | MonomialOrder::GrLex(p) | MonomialOrder::GrevLex(p) => p.len(),
            MonomialOrder::Weighted { weights, .. } => weights.len(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex(_) => "lex",
            MonomialOrder::GrLex(_) => "grlex",
            MonomialOrder::GrevLex(_) => "grevlex",
            MonomialOrder::Weighted { .. } => "weighted",
        }
    }

    /// Compare two monomials, checking that both live in this order's ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        Error::check_len(self.arity(), a.arity())?;
        Error::check_len(self.arity(), b.arity())?;
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison for hot loops; arities must already agree.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex(p) => lex_cmp(p, ea, eb),
            MonomialOrder::GrLex(p) => a.degree().cmp(&b.degree()).then_with(|| lex_cmp(p, ea, eb)),
            MonomialOrder::GrevLex(p) => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_cmp(p, ea, eb)),
            MonomialOrder::Weighted { weights, tie } => {
                let wa: i128 = weights.iter().zip(ea).map(|(&w, &e)| w as i128 * e as i128).sum();
                let wb: i128 = weights.iter().zip(eb).map(|(&w, &e)| w as i128 * e as i128).sum();
                wa.cmp(&wb).then_with(|| tie.cmp(a, b))
            }
        }
    }
}

fn lex_cmp(priority: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in priority {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

// Right-most nonzero entry of a - b negative means a is larger.
fn revlex_cmp(priority: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in priority.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
