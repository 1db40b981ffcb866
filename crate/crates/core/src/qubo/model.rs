use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{rational, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};

/// `E(x) = xᵀQx + offset` over `x ∈ {0,1}ⁿ` with `Q` symmetric.
///
/// Only the upper triangle is stored. Because `x_i² = x_i`, the diagonal
/// is the linear part and an off-diagonal `Q_ij` contributes `2 Q_ij x_i x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuboModel {
    n: usize,
    q: BTreeMap<(usize, usize), Rational>,
    offset: Rational,
}

fn accumulate(map: &mut BTreeMap<(usize, usize), Rational>, key: (usize, usize), v: Rational) {
    if v.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += v;
    if slot.is_zero() {
        map.remove(&key);
    }
}

impl QuboModel {
    pub fn new(n: usize) -> Self {
        QuboModel {
            n,
            q: BTreeMap::new(),
            offset: Rational::zero(),
        }
    }

    /// Builds from coefficient triplets: `(i, i, v)` adds `v x_i`, `(i, j, v)`
    /// adds `v x_i x_j` (split as `Q_ij = Q_ji = v/2`).
    pub fn from_coefficients(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, Rational)>,
        offset: Rational,
    ) -> Result<Self> {
        let mut m = QuboModel::new(n);
        for (i, j, v) in entries {
            m.add_coefficient(i, j, v)?;
        }
        m.offset = offset;
        Ok(m)
    }

    /// Any square matrix; it is replaced by its symmetric part.
    pub fn from_matrix(q: &[Vec<Rational>], offset: Rational) -> Result<Self> {
        let n = q.len();
        let mut m = QuboModel::new(n);
        for (i, row) in q.iter().enumerate() {
            Error::check_len(n, row.len())?;
            for (j, v) in row.iter().enumerate() {
                m.add_coefficient(i, j, v.clone())?;
            }
        }
        m.offset = offset;
        Ok(m)
    }

    /// Quadratic polynomial in `n` variables; squares are reduced with `x² = x`.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let p = p.multilinearize();
        let mut m = QuboModel::new(p.nvars());
        for (mono, c) in p.terms() {
            let support: Vec<usize> = mono.support().collect();
            match support[..] {
                [] => m.offset += c,
                [i] => m.add_coefficient(i, i, c.clone())?,
                [i, j] => m.add_coefficient(i, j, c.clone())?,
                _ => {
                    return Err(Error::Precondition(format!(
                        "term of degree {} in a quadratic model",
                        support.len()
                    )))
                }
            }
        }
        Ok(m)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::constant(self.n, self.offset.clone());
        for (i, j, c) in self.coefficients() {
            let mut e = vec![0u32; self.n];
            e[i] = 1;
            e[j] = 1;
            p.add_term(Monomial::from_exponents(e), c);
        }
        p
    }

    pub fn add_coefficient(&mut self, i: usize, j: usize, v: Rational) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::Validation(format!(
                "index ({i}, {j}) out of range for {} variables",
                self.n
            )));
        }
        let (a, b) = (i.min(j), i.max(j));
        let v = if a == b { v } else { v / rational(2) };
        accumulate(&mut self.q, (a, b), v);
        Ok(())
    }

    pub fn add_offset(&mut self, v: &Rational) {
        self.offset += v;
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Symmetric matrix entry `Q_ij`.
    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.q
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero upper-triangle entries `(i, j, Q_ij)`, `i <= j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.q.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Nonzero energy coefficients: `Q_ii` for `x_i` and `2 Q_ij` for `x_i x_j`.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        self.q.iter().map(|(&(i, j), v)| {
            if i == j {
                (i, j, v.clone())
            } else {
                (i, j, v * rational(2))
            }
        })
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut d = vec![vec![Rational::zero(); self.n]; self.n];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
            d[j][i] = v.clone();
        }
        d
    }

    pub fn energy(&self, x: &[u8]) -> Result<Rational> {
        Error::check_len(self.n, x.len())?;
        let mut e = self.offset.clone();
        for (i, j, c) in self.coefficients() {
            if x[i] != 0 && x[j] != 0 {
                e += c;
            }
        }
        Ok(e)
    }

    /// Drops trailing variables beyond `n`; they must not appear in any entry.
    pub fn with_vars(mut self, n: usize) -> Result<Self> {
        if self.q.keys().any(|&(_, j)| j >= n) {
            return Err(Error::Validation(format!("model uses variables beyond {n}")));
        }
        self.n = n;
        Ok(self)
    }
}

/// `E(σ) = Σ_{i<j} J_ij σ_i σ_j + Σ h_i σ_i + offset` over `σ ∈ {-1,+1}ⁿ`.
///
/// The stored form is the function that is minimized, with no physics signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsingModel {
    n: usize,
    j: BTreeMap<(usize, usize), Rational>,
    h: Vec<Rational>,
    offset: Rational,
}

impl IsingModel {
    pub fn new(n: usize) -> Self {
        IsingModel {
            n,
            j: BTreeMap::new(),
            h: vec![Rational::zero(); n],
            offset: Rational::zero(),
        }
    }

    pub fn from_parts(
        n: usize,
        couplings: impl IntoIterator<Item = (usize, usize, Rational)>,
        fields: Vec<Rational>,
        offset: Rational,
    ) -> Result<Self> {
        Error::check_len(n, fields.len())?;
        let mut m = IsingModel::new(n);
        m.h = fields;
        m.offset = offset;
        for (a, b, v) in couplings {
            m.add_coupling(a, b, v)?;
        }
        Ok(m)
    }

    /// Physics Hamiltonian `H = -Σ J_ij σ_i σ_j - Σ h_i σ_i`, stored with the
    /// signs absorbed.
    pub fn from_hamiltonian(
        n: usize,
        couplings: impl IntoIterator<Item = (usize, usize, Rational)>,
        fields: Vec<Rational>,
    ) -> Result<Self> {
        IsingModel::from_parts(
            n,
            couplings.into_iter().map(|(a, b, v)| (a, b, -v)),
            fields.into_iter().map(|v| -v).collect(),
            Rational::zero(),
        )
    }

    pub fn add_coupling(&mut self, a: usize, b: usize, v: Rational) -> Result<()> {
        if a == b {
            return Err(Error::Validation(format!("self-coupling on spin {a}")));
        }
        if a >= self.n || b >= self.n {
            return Err(Error::Validation(format!(
                "coupling ({a}, {b}) out of range for {} spins",
                self.n
            )));
        }
        accumulate(&mut self.j, (a.min(b), a.max(b)), v);
        Ok(())
    }

    pub fn add_field(&mut self, i: usize, v: &Rational) -> Result<()> {
        if i >= self.n {
            return Err(Error::Validation(format!("field index {i} out of range for {} spins", self.n)));
        }
        self.h[i] += v;
        Ok(())
    }

    pub fn add_offset(&mut self, v: &Rational) {
        self.offset += v;
    }

    pub fn num_spins(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn fields(&self) -> &[Rational] {
        &self.h
    }

    pub fn coupling(&self, a: usize, b: usize) -> Rational {
        self.j
            .get(&(a.min(b), a.max(b)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero couplings `(i, j, J_ij)` with `i < j`.
    pub fn couplings(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.j.iter().map(|(&(a, b), v)| (a, b, v))
    }

    pub fn energy(&self, s: &[i8]) -> Result<Rational> {
        Error::check_len(self.n, s.len())?;
        let mut e = self.offset.clone();
        for (i, h) in self.h.iter().enumerate() {
            if s[i] > 0 {
                e += h;
            } else {
                e -= h;
            }
        }
        for (&(a, b), v) in &self.j {
            if (s[a] > 0) == (s[b] > 0) {
                e += v;
            } else {
                e -= v;
            }
        }
        Ok(e)
    }

    pub(crate) fn push_spin(&mut self) -> usize {
        self.h.push(Rational::zero());
        self.n += 1;
        self.n - 1
    }

    pub(crate) fn remove_coupling(&mut self, a: usize, b: usize) -> Rational {
        self.j.remove(&(a.min(b), a.max(b))).unwrap_or_else(Rational::zero)
    }
}

/// `σ = 2x - 1`
pub fn bits_to_spins(x: &[u8]) -> Vec<i8> {
    x.iter().map(|&b| if b != 0 { 1 } else { -1 }).collect()
}

/// `x = (σ + 1) / 2`
pub fn spins_to_bits(s: &[i8]) -> Vec<u8> {
    s.iter().map(|&v| u8::from(v > 0)).collect()
}

/// Substitutes `x = (σ + 1)/2`; energies agree exactly on corresponding points.
pub fn qubo_to_ising(q: &QuboModel) -> IsingModel {
    let n = q.num_vars();
    let mut m = IsingModel::new(n);
    m.offset = q.offset().clone();
    let half = Rational::new(1.into(), 2.into());
    let quarter = Rational::new(1.into(), 4.into());
    for (i, j, c) in q.coefficients() {
        if i == j {
            // c x = c/2 + c/2 σ
            m.h[i] += &c * &half;
            m.offset += &c * &half;
        } else {
            // c x_i x_j = c/4 (1 + σ_i + σ_j + σ_i σ_j)
            let w = &c * &quarter;
            m.h[i] += &w;
            m.h[j] += &w;
            m.offset += &w;
            accumulate(&mut m.j, (i, j), w);
        }
    }
    m
}

/// Substitutes `σ = 2x - 1`; the inverse of [`qubo_to_ising`].
pub fn ising_to_qubo(m: &IsingModel) -> QuboModel {
    let mut q = QuboModel::new(m.num_spins());
    q.offset = m.offset().clone();
    let two = rational(2);
    for (i, h) in m.fields().iter().enumerate() {
        // h σ = 2h x - h
        accumulate(&mut q.q, (i, i), h * &two);
        q.offset -= h;
    }
    for (i, j, v) in m.couplings() {
        // J σ_i σ_j = J (4 x_i x_j - 2 x_i - 2 x_j + 1)
        accumulate(&mut q.q, (i, j), v * &two);
        accumulate(&mut q.q, (i, i), -(v * &two));
        accumulate(&mut q.q, (j, j), -(v * &two));
        q.offset += v;
    }
    q
}
