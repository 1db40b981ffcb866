use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use rayon::prelude::*;

use crate::algebra::{MonomialOrder, Polynomial, Sorted, VarNames};
use crate::error::{Error, Result};

/// Finitely generated polynomial ideal. Zero generators are dropped and
/// repeated generators kept once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    names: VarNames,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, names: VarNames) -> Result<Self> {
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in generators {
            Error::check_len(names.len(), g.nvars())?;
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal {
            generators: kept,
            names,
        })
    }

    /// Ideal over `x0..x(n-1)`.
    pub fn indexed(generators: Vec<Polynomial>, nvars: usize) -> Result<Self> {
        Self::new(generators, VarNames::indexed(nvars))
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }
}

/// Caps that turn a runaway computation into an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: u64,
    pub max_degree: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 1_000_000,
            max_degree: 60,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    polynomials: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// Normal form of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Error::check_len(self.order.arity(), f.nvars())?;
        let gs = self.sorted();
        Ok(Sorted::new(f, &self.order).reduce(&gs, &self.order).to_polynomial(f.nvars()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Check that every S-polynomial reduces to zero.
    pub fn audit(&self) -> bool {
        let gs = self.sorted();
        let pairs: Vec<(usize, usize)> = (0..gs.len())
            .flat_map(|i| (i + 1..gs.len()).map(move |j| (i, j)))
            .collect();
        pairs.par_iter().all(|&(i, j)| {
            Sorted::s_poly(&gs[i], &gs[j], &self.order)
                .reduce(&gs, &self.order)
                .is_zero()
        })
    }

    fn sorted(&self) -> Vec<Sorted> {
        self.polynomials
            .iter()
            .map(|g| Sorted::new(g, &self.order))
            .collect()
    }
}

/// True when the basis is `{c}` for a nonzero constant, so the system has no solution.
pub fn is_infeasible(basis: &GroebnerBasis) -> bool {
    basis.polynomials.iter().any(Polynomial::is_unit)
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, order, Limits::default())
}

/// Reduced Groebner basis of `ideal` under `order`.
///
/// Pairs are taken with the smallest lcm first (normal strategy); pairs with
/// coprime leading monomials and pairs covered by the chain criterion are
/// skipped.
pub fn buchberger_with(ideal: &Ideal, order: &MonomialOrder, limits: Limits) -> Result<GroebnerBasis> {
    let n = ideal.nvars();
    Error::check_len(order.arity(), n)?;
    if ideal.generators.is_empty() {
        return Err(Error::Precondition("ideal needs at least one nonzero generator".into()));
    }
    let unit = || GroebnerBasis {
        polynomials: vec![Polynomial::one(n)],
        order: order.clone(),
        reduced: true,
    };

    let mut basis: Vec<Sorted> = Vec::new();
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut processed: u64 = 0;

    for g in &ideal.generators {
        let mut s = Sorted::new(g, order).reduce(&basis, order);
        if s.is_zero() {
            continue;
        }
        s.make_monic();
        if s.lm().is_one() {
            return Ok(unit());
        }
        check_degree(&s, limits)?;
        add_element(&mut basis, s, &mut heap, &mut pending);
    }

    while let Some(Reverse(key)) = heap.pop() {
        let (i, j) = (key.i, key.j);
        pending.remove(&(i, j));
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::ComputationLimit(format!(
                "more than {} S-pairs processed",
                limits.max_pairs
            )));
        }
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let mut s = Sorted::s_poly(&basis[i], &basis[j], order).reduce(&basis, order);
        if s.is_zero() {
            continue;
        }
        s.make_monic();
        if s.lm().is_one() {
            return Ok(unit());
        }
        check_degree(&s, limits)?;
        add_element(&mut basis, s, &mut heap, &mut pending);
    }

    Ok(GroebnerBasis {
        polynomials: interreduce(basis, order)
            .into_iter()
            .map(|s| s.to_polynomial(n))
            .collect(),
        order: order.clone(),
        reduced: true,
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn check_degree(s: &Sorted, limits: Limits) -> Result<()> {
    let d = s.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
    if d > limits.max_degree {
        return Err(Error::ComputationLimit(format!(
            "basis element of degree {d} exceeds the cap {}",
            limits.max_degree
        )));
    }
    Ok(())
}

// Heap key: lcm degree, then insertion indices, so pair order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u64,
    j: usize,
    i: usize,
}

fn add_element(
    basis: &mut Vec<Sorted>,
    s: Sorted,
    heap: &mut BinaryHeap<Reverse<PairKey>>,
    pending: &mut HashSet<(usize, usize)>,
) {
    let j = basis.len();
    for (i, g) in basis.iter().enumerate() {
        let degree = g.lm().lcm(s.lm()).degree();
        heap.push(Reverse(PairKey { degree, j, i }));
        pending.insert((i, j));
    }
    basis.push(s);
}

/// Minimal, inter-reduced, monic basis sorted by decreasing leading monomial.
fn interreduce(basis: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    let mut minimal: Vec<Sorted> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let dominated = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < idx)
        });
        if !dominated {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let lead = minimal[idx].terms.last().cloned().unwrap();
        let tail = Sorted {
            terms: minimal[idx].terms[..minimal[idx].terms.len() - 1].to_vec(),
        };
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = tail.reduce(&others, order);
        r.terms.push(lead);
        r.make_monic();
        out.push(r);
    }
    out
}
