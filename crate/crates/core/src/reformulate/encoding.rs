use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::algebra::{rational, Polynomial};
use crate::error::{Error, Result};

use super::system::ConstraintSystem;

/// Integer-to-binary encoding scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "scheme", content = "mu")]
pub enum Scheme {
    /// Powers of two with a clipped last weight.
    Binary,
    /// All weights one.
    Unary,
    /// Powers of two up to the largest below `mu`, then copies of `mu`, then a remainder.
    Bounded(u64),
}

fn floor_log2(x: u64) -> u32 {
    63 - x.leading_zeros()
}

fn binary_weights(range: u64) -> Vec<u64> {
    if range == 0 {
        return Vec::new();
    }
    let p = floor_log2(range + 1);
    let mut k: Vec<u64> = (0..p).map(|i| 1u64 << i).collect();
    let clipped = range - ((1u64 << p) - 1);
    if clipped > 0 {
        k.push(clipped);
    }
    k
}

/// Weights `k` with `Σk = upper - lower` under the given scheme; every sum of
/// a subset of `k` lies in the range and every value of the range is one.
pub fn make_encoding(lower: i64, upper: i64, scheme: Scheme) -> Result<Vec<u64>> {
    if upper < lower {
        return Err(Error::Validation(format!("upper bound {upper} below lower bound {lower}")));
    }
    let range = upper.abs_diff(lower);
    match scheme {
        Scheme::Binary => Ok(binary_weights(range)),
        Scheme::Unary => Ok(vec![1; range as usize]),
        Scheme::Bounded(mu) => {
            if mu < 1 {
                return Err(Error::Parameter("bounded encoding needs mu >= 1".into()));
            }
            let rho = floor_log2(mu) + 1;
            let full = (1u64 << rho) - 1;
            if range <= full {
                return Ok(binary_weights(range));
            }
            let v = range - full;
            let eta = v / mu;
            let mut k: Vec<u64> = (0..rho).map(|i| 1u64 << i).collect();
            k.extend(std::iter::repeat_n(mu, eta as usize));
            if v - eta * mu != 0 {
                k.push(v - eta * mu);
            }
            Ok(k)
        }
    }
}

/// `x = L + E X`: variable `i` is `lower_i + Σ_j k_ij X_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodingMap {
    lower: Vec<i64>,
    weights: Vec<Vec<u64>>,
    start: Vec<usize>,
}

impl EncodingMap {
    pub fn new(lower: &[i64], upper: &[i64], scheme: Scheme) -> Result<Self> {
        Error::check_len(lower.len(), upper.len())?;
        let weights: Vec<Vec<u64>> = lower
            .iter()
            .zip(upper)
            .map(|(&l, &u)| make_encoding(l, u, scheme))
            .collect::<Result<_>>()?;
        let mut start = Vec::with_capacity(weights.len());
        let mut at = 0;
        for k in &weights {
            start.push(at);
            at += k.len();
        }
        Ok(EncodingMap {
            lower: lower.to_vec(),
            weights,
            start,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.lower.len()
    }

    pub fn num_bits(&self) -> usize {
        self.start.last().map_or(0, |&s| s + self.weights.last().map_or(0, Vec::len))
    }

    pub fn shifts(&self) -> &[i64] {
        &self.lower
    }

    pub fn weights(&self, var: usize) -> &[u64] {
        &self.weights[var]
    }

    pub fn width(&self, var: usize) -> usize {
        self.weights[var].len()
    }

    pub fn bits(&self, var: usize) -> Range<usize> {
        self.start[var]..self.start[var] + self.weights[var].len()
    }

    pub fn upper(&self, var: usize) -> i64 {
        self.lower[var] + self.weights[var].iter().sum::<u64>() as i64
    }

    /// The `n × Σd` matrix `E`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let total = self.num_bits();
        (0..self.num_vars())
            .map(|i| {
                let mut row = vec![0i64; total];
                for (t, &k) in self.weights[i].iter().enumerate() {
                    row[self.start[i] + t] = k as i64;
                }
                row
            })
            .collect()
    }

    pub fn decode(&self, bits: &[u8]) -> Result<Vec<i64>> {
        Error::check_len(self.num_bits(), bits.len())?;
        Ok((0..self.num_vars())
            .map(|i| {
                self.lower[i]
                    + self.weights[i]
                        .iter()
                        .zip(&bits[self.bits(i)])
                        .filter(|(_, &b)| b != 0)
                        .map(|(&k, _)| k as i64)
                        .sum::<i64>()
            })
            .collect())
    }

    /// A bit pattern that decodes to `x`.
    pub fn encode(&self, x: &[i64]) -> Result<Vec<u8>> {
        Error::check_len(self.num_vars(), x.len())?;
        let mut bits = vec![0u8; self.num_bits()];
        for (i, &v) in x.iter().enumerate() {
            if v < self.lower[i] || v > self.upper(i) {
                return Err(Error::Validation(format!(
                    "value {v} of variable {i} outside [{}, {}]",
                    self.lower[i],
                    self.upper(i)
                )));
            }
            let pattern = represent(&self.weights[i], v.abs_diff(self.lower[i]))?;
            bits[self.bits(i)].copy_from_slice(&pattern);
        }
        Ok(bits)
    }

    /// Substitutes the encoding into a polynomial in the original variables.
    pub fn substitute(&self, p: &Polynomial) -> Result<Polynomial> {
        Error::check_len(self.num_vars(), p.nvars())?;
        let total = self.num_bits();
        let images: Vec<Polynomial> = (0..self.num_vars())
            .map(|i| {
                let mut img = Polynomial::constant(total, rational(self.lower[i]));
                for (t, &k) in self.weights[i].iter().enumerate() {
                    img = &img + &Polynomial::var(total, self.start[i] + t).scale(&rational(k as i64));
                }
                img
            })
            .collect();
        Ok(p.compose(&images)?.multilinearize())
    }
}

// Leading powers of two cover everything below their sum; the other weights
// are taken greedily, largest first, and what is left is written in binary.
fn represent(k: &[u64], value: u64) -> Result<Vec<u8>> {
    let p = k.iter().enumerate().take_while(|&(i, &w)| w == 1u64 << i).count();
    let mut out = vec![0u8; k.len()];
    let mut rest = value;
    let mut order: Vec<usize> = (p..k.len()).collect();
    order.sort_by(|&a, &b| k[b].cmp(&k[a]).then(a.cmp(&b)));
    for i in order {
        if k[i] <= rest {
            rest -= k[i];
            out[i] = 1;
        }
    }
    for (i, bit) in out.iter_mut().enumerate().take(p) {
        if rest >> i & 1 == 1 {
            *bit = 1;
        }
    }
    if p < 64 && rest >> p != 0 {
        return Err(Error::Internal(format!("value {value} not representable by {k:?}")));
    }
    Ok(out)
}

/// Replaces every variable by its encoding: `A' = A E`, `b' = b - A L`, the
/// objective composed with `x = L + E X` and reduced with `X² = X`.
pub fn binarize(ip: &ConstraintSystem, scheme: Scheme) -> Result<(ConstraintSystem, EncodingMap)> {
    let (l, u) = ip.finite_bounds()?;
    let map = EncodingMap::new(&l, &u, scheme)?;
    let e = map.matrix();
    let total = map.num_bits();
    let a: Vec<Vec<i64>> = ip
        .matrix()
        .iter()
        .map(|row| {
            (0..total)
                .map(|c| row.iter().zip(&e).map(|(a, er)| a * er[c]).sum())
                .collect()
        })
        .collect();
    let b: Vec<i64> = ip
        .matrix()
        .iter()
        .zip(ip.rhs())
        .map(|(row, bi)| bi - row.iter().zip(&l).map(|(a, x)| a * x).sum::<i64>())
        .collect();
    let rows: Vec<usize> = (0..ip.num_rows()).filter(|&r| ip.is_inequality(r)).collect();
    let sys = ConstraintSystem::binary(a, b, total)?
        .with_inequalities(&rows)?
        .with_objective(map.substitute(ip.objective())?)?;
    Ok((sys, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scheme_examples() {
        assert_eq!(make_encoding(0, 7, Scheme::Binary).unwrap(), vec![1, 2, 4]);
        assert_eq!(make_encoding(0, 8, Scheme::Bounded(4)).unwrap(), vec![1, 2, 4, 1]);
        assert_eq!(make_encoding(0, 3, Scheme::Unary).unwrap(), vec![1, 1, 1]);
        assert_eq!(make_encoding(0, 8, Scheme::Binary).unwrap(), vec![1, 2, 4, 1]);
        assert_eq!(make_encoding(-1, 2, Scheme::Binary).unwrap(), vec![1, 2]);
        assert_eq!(make_encoding(0, 30, Scheme::Bounded(5)).unwrap(), vec![1, 2, 4, 5, 5, 5, 5, 3]);
        assert_eq!(make_encoding(0, 6, Scheme::Bounded(4)).unwrap(), vec![1, 2, 3]);
        assert!(make_encoding(3, 3, Scheme::Binary).unwrap().is_empty());
        assert!(matches!(make_encoding(0, 3, Scheme::Bounded(0)), Err(Error::Parameter(_))));
        assert!(make_encoding(2, 1, Scheme::Unary).is_err());
    }

    #[test]
    fn walk_through_matrices() {
        let map = EncodingMap::new(&[-1; 3], &[2; 3], Scheme::Binary).unwrap();
        assert_eq!(
            map.matrix(),
            vec![vec![1, 2, 0, 0, 0, 0], vec![0, 0, 1, 2, 0, 0], vec![0, 0, 0, 0, 1, 2]]
        );
        assert_eq!(map.shifts(), &[-1, -1, -1]);
    }

    #[test]
    fn single_kernel_row() {
        let ip = ConstraintSystem::boxed(vec![vec![1]], vec![0], vec![-1], vec![2]).unwrap();
        let (bin, map) = binarize(&ip, Scheme::Binary).unwrap();
        let mut decoded = Vec::new();
        for k in 0..4u8 {
            let bits = vec![k & 1, k >> 1 & 1];
            let xi: Vec<i64> = bits.iter().map(|&b| i64::from(b)).collect();
            if bin.is_feasible(&xi) {
                decoded.push(map.decode(&bits).unwrap());
            }
        }
        assert_eq!(decoded, vec![vec![0]]);
    }

    #[test]
    fn binary_system_is_unchanged() {
        let ip = ConstraintSystem::binary(vec![vec![1, 1, 0], vec![0, 1, 1]], vec![1, 1], 3)
            .unwrap()
            .with_linear_objective(&[3, -1, 2])
            .unwrap();
        let (bin, map) = binarize(&ip, Scheme::Bounded(3)).unwrap();
        assert_eq!(bin, ip);
        assert_eq!(map.num_bits(), 3);
    }

    fn arb_scheme() -> impl Strategy<Value = Scheme> {
        prop_oneof![Just(Scheme::Binary), Just(Scheme::Unary), (1u64..9).prop_map(Scheme::Bounded)]
    }

    proptest! {
        #[test]
        fn encodings_are_sound(l in -20i64..20, r in 0i64..40, scheme in arb_scheme()) {
            let k = make_encoding(l, l + r, scheme).unwrap();
            prop_assert_eq!(k.iter().sum::<u64>(), r as u64);
            if let Scheme::Bounded(mu) = scheme {
                let cap = mu.max(1 << floor_log2(mu));
                prop_assert!(k.iter().all(|&w| w <= cap));
            }
            let map = EncodingMap::new(&[l], &[l + r], scheme).unwrap();
            for y in l..=l + r {
                prop_assert_eq!(map.decode(&map.encode(&[y]).unwrap()).unwrap(), vec![y]);
            }
            if k.len() <= 12 {
                for pat in 0u32..1 << k.len() {
                    let bits: Vec<u8> = (0..k.len()).map(|i| (pat >> i & 1) as u8).collect();
                    let y = map.decode(&bits).unwrap()[0];
                    prop_assert!(l <= y && y <= l + r);
                }
            }
        }

        #[test]
        fn binarized_solutions_biject(
            a in prop::collection::vec(-3i64..=3, 2),
            b in -4i64..=4,
            l in prop::collection::vec(-2i64..=0, 2),
            w in prop::collection::vec(0i64..=3, 2),
            scheme in arb_scheme(),
        ) {
            let u: Vec<i64> = l.iter().zip(&w).map(|(x, y)| x + y).collect();
            let ip = ConstraintSystem::boxed(vec![a], vec![b], l, u).unwrap().with_linear_objective(&[1, -2]).unwrap();
            let (bin, map) = binarize(&ip, scheme).unwrap();
            let mut decoded = Vec::new();
            for pat in 0u32..1 << map.num_bits() {
                let bits: Vec<u8> = (0..map.num_bits()).map(|i| (pat >> i & 1) as u8).collect();
                let xi: Vec<i64> = bits.iter().map(|&v| i64::from(v)).collect();
                let x = map.decode(&bits).unwrap();
                prop_assert_eq!(bin.is_feasible(&xi), ip.is_feasible(&x));
                prop_assert_eq!(bin.objective_value(&xi), ip.objective_value(&x));
                if bin.is_feasible(&xi) {
                    decoded.push(x);
                }
            }
            decoded.sort();
            decoded.dedup();
            let expected: Vec<Vec<i64>> = match ip.clone().with_objective(Polynomial::zero(2)).unwrap().brute_force().unwrap() {
                Some((_, pts)) => pts,
                None => vec![],
            };
            prop_assert_eq!(decoded, expected);
        }
    }
}
