use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{to_f64, Rational};
use crate::qubo::{qubo_to_ising, write_ising, write_qubo, IsingModel, QuboModel};

/// Value domain of a sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Vartype {
    /// Entries `-1` / `+1`.
    Spin,
    /// Entries `0` / `1`.
    Binary,
}

/// A model the samplers accept: exact energies, a spin view and a content digest.
pub trait Sampleable: Sync {
    fn vartype(&self) -> Vartype;
    fn num_vars(&self) -> usize;
    /// Equivalent spin model (identical energies under `x = (σ+1)/2`).
    fn to_ising(&self) -> IsingModel;
    fn exact_energy(&self, config: &[i8]) -> Rational;
    fn canonical_text(&self) -> String;

    fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }
}

impl Sampleable for IsingModel {
    fn vartype(&self) -> Vartype {
        Vartype::Spin
    }

    fn num_vars(&self) -> usize {
        self.num_spins()
    }

    fn to_ising(&self) -> IsingModel {
        self.clone()
    }

    fn exact_energy(&self, config: &[i8]) -> Rational {
        self.energy(config).expect("sample length matches the model")
    }

    fn canonical_text(&self) -> String {
        write_ising(self)
    }
}

impl Sampleable for QuboModel {
    fn vartype(&self) -> Vartype {
        Vartype::Binary
    }

    fn num_vars(&self) -> usize {
        QuboModel::num_vars(self)
    }

    fn to_ising(&self) -> IsingModel {
        qubo_to_ising(self)
    }

    fn exact_energy(&self, config: &[i8]) -> Rational {
        let bits: Vec<u8> = config.iter().map(|&v| v as u8).collect();
        self.energy(&bits).expect("sample length matches the model")
    }

    fn canonical_text(&self) -> String {
        write_qubo(self)
    }
}

/// Spin model in floating point with adjacency lists, for the samplers.
#[derive(Clone, Debug)]
pub struct SpinModel {
    pub h: Vec<f64>,
    pub adj: Vec<Vec<(usize, f64)>>,
    pub offset: f64,
}

impl SpinModel {
    pub fn new(m: &IsingModel) -> Self {
        let n = m.num_spins();
        let mut adj = vec![Vec::new(); n];
        for (i, j, v) in m.couplings() {
            let w = to_f64(v);
            adj[i].push((j, w));
            adj[j].push((i, w));
        }
        SpinModel {
            h: m.fields().iter().map(to_f64).collect(),
            adj,
            offset: to_f64(m.offset()),
        }
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn energy(&self, s: &[i8]) -> f64 {
        let mut e = self.offset;
        for i in 0..self.len() {
            let si = f64::from(s[i]);
            e += self.h[i] * si;
            for &(j, w) in &self.adj[i] {
                if j > i {
                    e += w * si * f64::from(s[j]);
                }
            }
        }
        e
    }

    /// `h_i + Σ_j J_ij σ_j`
    pub fn local_field(&self, s: &[i8], i: usize) -> f64 {
        self.h[i] + self.adj[i].iter().map(|&(j, w)| w * f64::from(s[j])).sum::<f64>()
    }
}

/// `[ln 2 / max ΔE, ln 100 / min ΔE]`. `max ΔE` is the worst single-flip
/// change `max_i 2 (|h_i| + Σ_j |J_ij|)`; `min ΔE` is `2 min |c|` over the
/// nonzero fields and couplings, the smallest change a flip can make when
/// only one term differs. A model without any coupling or field gets `[0.1, 1]`.
pub fn default_beta_range(m: &IsingModel) -> (f64, f64) {
    let n = m.num_spins();
    let mut bound: Vec<Rational> = m.fields().iter().map(|h| h.abs()).collect();
    let mut smallest: Option<Rational> = None;
    let mut note = |v: &Rational| {
        if !v.is_zero() && smallest.as_ref().is_none_or(|s| v.abs() < *s) {
            smallest = Some(v.abs());
        }
    };
    m.fields().iter().for_each(&mut note);
    for (i, j, v) in m.couplings() {
        bound[i] += v.abs();
        bound[j] += v.abs();
        note(v);
    }
    let Some(smallest) = smallest else {
        return (0.1, 1.0);
    };
    let max = (0..n).map(|i| 2.0 * to_f64(&bound[i])).fold(0.0, f64::max);
    (2f64.ln() / max, 100f64.ln() / (2.0 * to_f64(&smallest)))
}

/// Converts a spin sample to the model's domain.
pub(crate) fn from_spins(s: &[i8], vt: Vartype) -> Vec<i8> {
    match vt {
        Vartype::Spin => s.to_vec(),
        Vartype::Binary => s.iter().map(|&v| i8::from(v > 0)).collect(),
    }
}
