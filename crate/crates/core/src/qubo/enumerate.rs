use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::Rational;
use crate::error::{Error, Result};

use super::model::{bits_to_spins, ising_to_qubo, IsingModel, QuboModel};

/// Largest model the exhaustive search accepts.
pub const MAX_ENUMERATION_VARS: usize = 24;

/// At most this many minimizers are listed; `degeneracy` counts all of them.
pub const MAX_LISTED_ARGMINS: usize = 1 << 16;

/// Exhaustive search result.
#[derive(Clone, Debug, PartialEq)]
pub struct Enumeration<S> {
    pub energy: Rational,
    /// Minimizers in lexicographic order, the smallest first.
    pub argmins: Vec<Vec<S>>,
    pub degeneracy: u64,
    /// `ln Z(β)` with `Z(β) = Σ exp(-β E)`, when a `β` was given.
    pub log_partition: Option<f64>,
}

impl<S> Enumeration<S> {
    pub fn partition(&self) -> Option<f64> {
        self.log_partition.map(f64::exp)
    }
}

/// Energies as integers over a common denominator.
struct Scaled {
    n: usize,
    denom: BigInt,
    linear: Vec<i128>,
    adj: Vec<Vec<(usize, i128)>>,
    offset: i128,
}

fn scale(q: &QuboModel) -> Result<Scaled> {
    let coeffs: Vec<(usize, usize, Rational)> = q.coefficients().collect();
    let denom = coeffs
        .iter()
        .map(|c| c.2.denom().clone())
        .chain(std::iter::once(q.offset().denom().clone()))
        .fold(BigInt::one(), |a, d| a.lcm(&d));
    let too_big = || Error::ComputationLimit("coefficients too large for exact enumeration".into());
    let to_int = |v: &Rational| -> Result<i128> { (v * &denom).to_integer().to_i128().ok_or_else(too_big) };
    let n = q.num_vars();
    let mut linear = vec![0i128; n];
    let mut adj = vec![Vec::new(); n];
    let mut budget = BigInt::zero();
    for (i, j, c) in &coeffs {
        let v = to_int(c)?;
        budget += (c * &denom).to_integer().abs();
        if i == j {
            linear[*i] = v;
        } else {
            adj[*i].push((*j, v));
            adj[*j].push((*i, v));
        }
    }
    let offset = to_int(q.offset())?;
    budget += BigInt::from(offset).abs();
    if budget.bits() > 120 {
        return Err(too_big());
    }
    Ok(Scaled {
        n,
        denom,
        linear,
        adj,
        offset,
    })
}

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Lexicographic key of a state: bit 0 of the state is the first coordinate.
fn lex_key(state: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        state.reverse_bits() >> (64 - n)
    }
}

/// Visits every state whose top `n - low` bits equal `prefix`, in Gray-code order.
fn walk(s: &Scaled, low: usize, prefix: u64, mut visit: impl FnMut(u64, i128)) {
    let mut state = prefix << low;
    let on = |st: u64, i: usize| (st >> i) & 1 == 1;
    let mut energy = s.offset;
    let mut field = vec![0i128; s.n];
    for i in 0..s.n {
        if on(state, i) {
            energy += s.linear[i];
            for &(j, w) in &s.adj[i] {
                field[j] += w;
                if j < i && on(state, j) {
                    energy += w;
                }
            }
        }
    }
    visit(state, energy);
    for step in 1u64..(1u64 << low) {
        let k = step.trailing_zeros() as usize;
        let delta = s.linear[k] + field[k];
        let sign = if on(state, k) { -1 } else { 1 };
        energy += sign * delta;
        state ^= 1 << k;
        for &(j, w) in &s.adj[k] {
            field[j] += sign * w;
        }
        visit(state, energy);
    }
}

struct Best {
    energy: i128,
    keys: BTreeSet<u64>,
    count: u64,
}

impl Best {
    fn offer(&mut self, key: u64, e: i128) {
        if e < self.energy {
            self.energy = e;
            self.keys.clear();
            self.count = 0;
        }
        if e == self.energy {
            self.count += 1;
            self.keys.insert(key);
            if self.keys.len() > MAX_LISTED_ARGMINS {
                self.keys.pop_last();
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        if other.energy < self.energy {
            return other;
        }
        if other.energy == self.energy {
            self.count += other.count;
            self.keys.extend(other.keys);
            while self.keys.len() > MAX_LISTED_ARGMINS {
                self.keys.pop_last();
            }
        }
        self
    }
}

/// Exact minimum and minimizers of a QUBO over all `2ⁿ` points, with
/// `ln Z(β)` when `beta` is given. The search runs in parallel over blocks of
/// states; results do not depend on the thread count.
pub fn brute_force(q: &QuboModel, beta: Option<f64>) -> Result<Enumeration<u8>> {
    let n = q.num_vars();
    if n > MAX_ENUMERATION_VARS {
        return Err(Error::ComputationLimit(format!(
            "{n} variables exceed the enumeration cap of {MAX_ENUMERATION_VARS}"
        )));
    }
    if let Some(b) = beta {
        if !b.is_finite() || b < 0.0 {
            return Err(Error::Parameter(format!("inverse temperature must be finite and >= 0, got {b}")));
        }
    }
    let s = scale(q)?;
    let top = n.min(6);
    let low = n - top;
    let best = (0u64..1 << top)
        .into_par_iter()
        .map(|prefix| {
            let mut b = Best {
                energy: i128::MAX,
                keys: BTreeSet::new(),
                count: 0,
            };
            walk(&s, low, prefix, |st, e| b.offer(lex_key(st, n), e));
            b
        })
        .collect::<Vec<_>>()
        .into_iter()
        .reduce(Best::merge)
        .expect("at least one block");
    let energy = Rational::new(BigInt::from(best.energy), s.denom.clone());
    let argmins = best
        .keys
        .iter()
        .map(|&k| (0..n).map(|i| ((k >> (n - 1 - i)) & 1) as u8).collect())
        .collect();
    let log_partition = beta.map(|beta| {
        let d = s.denom.to_f64().unwrap_or(f64::INFINITY);
        let emin = best.energy;
        let sums: Vec<Kahan> = (0u64..1 << top)
            .into_par_iter()
            .map(|prefix| {
                let mut k = Kahan::default();
                walk(&s, low, prefix, |_, e| k.add((-beta * ((e - emin) as f64 / d)).exp()));
                k
            })
            .collect();
        let mut total = Kahan::default();
        for k in sums {
            total.add(k.sum);
            total.add(k.comp);
        }
        -beta * (emin as f64 / d) + total.value().ln()
    });
    Ok(Enumeration {
        energy,
        argmins,
        degeneracy: best.count,
        log_partition,
    })
}

/// [`brute_force`] on the equivalent QUBO, with minimizers as spins.
pub fn brute_force_ising(m: &IsingModel, beta: Option<f64>) -> Result<Enumeration<i8>> {
    let r = brute_force(&ising_to_qubo(m), beta)?;
    Ok(Enumeration {
        energy: r.energy,
        argmins: r.argmins.iter().map(|x| bits_to_spins(x)).collect(),
        degeneracy: r.degeneracy,
        log_partition: r.log_partition,
    })
}

#[cfg(test)]
mod tests {
    use super::super::model::tests::{all_bits, arb_qubo};
    use super::*;
    use crate::algebra::{rational, ratio};
    use proptest::prelude::*;

    #[test]
    fn empty_model() {
        let q = QuboModel::from_coefficients(0, [], rational(3)).unwrap();
        let r = brute_force(&q, Some(1.0)).unwrap();
        assert_eq!(r.energy, rational(3));
        assert_eq!(r.argmins, vec![Vec::<u8>::new()]);
        assert!((r.log_partition.unwrap() + 3.0).abs() < 1e-12);
    }

    #[test]
    fn ferromagnetic_triangle() {
        let m = IsingModel::from_parts(
            3,
            [(0, 1, rational(-1)), (1, 2, rational(-1)), (0, 2, rational(-1))],
            vec![rational(0); 3],
            rational(0),
        )
        .unwrap();
        let r = brute_force_ising(&m, None).unwrap();
        assert_eq!(r.energy, rational(-3));
        assert_eq!(r.argmins, vec![vec![-1, -1, -1], vec![1, 1, 1]]);
    }

    #[test]
    fn partition_at_zero_counts_states() {
        let q = QuboModel::from_coefficients(10, [(0, 3, rational(5)), (2, 2, ratio(-1, 3))], rational(0)).unwrap();
        let z = brute_force(&q, Some(0.0)).unwrap().partition().unwrap();
        assert!((z - 1024.0).abs() < 1e-9);
    }

    #[test]
    fn cap_and_bad_beta() {
        assert!(matches!(brute_force(&QuboModel::new(25), None), Err(Error::ComputationLimit(_))));
        assert!(matches!(brute_force(&QuboModel::new(2), Some(-1.0)), Err(Error::Parameter(_))));
    }

    #[test]
    fn degenerate_listing_is_capped() {
        let r = brute_force(&QuboModel::new(18), None).unwrap();
        assert_eq!(r.degeneracy, 1 << 18);
        assert_eq!(r.argmins.len(), MAX_LISTED_ARGMINS);
        assert_eq!(r.argmins[0], vec![0u8; 18]);
        assert!(r.argmins.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_naive_enumeration(q in arb_qubo(9), beta in 0.0f64..2.0) {
            let r = brute_force(&q, Some(beta)).unwrap();
            let energies: Vec<(Vec<u8>, Rational)> = all_bits(q.num_vars()).map(|x| { let e = q.energy(&x).unwrap(); (x, e) }).collect();
            let best = energies.iter().map(|e| e.1.clone()).min().unwrap();
            let mut argmins: Vec<Vec<u8>> = energies.iter().filter(|e| e.1 == best).map(|e| e.0.clone()).collect();
            argmins.sort();
            prop_assert_eq!(&r.energy, &best);
            prop_assert_eq!(&r.argmins, &argmins);
            let z: f64 = energies.iter().map(|e| (-beta * crate::algebra::to_f64(&e.1)).exp()).sum();
            prop_assert!((r.log_partition.unwrap() - z.ln()).abs() < 1e-9);
        }
    }
}
