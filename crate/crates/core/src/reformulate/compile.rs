use serde::Serialize;

use crate::algebra::{format_rational, rational};
use crate::error::{Error, Result};
use crate::qubo::QuboModel;

use super::encoding::{binarize, EncodingMap, Scheme};
use super::penalty::{coefficient_spread, inequality_to_equality, penalty_bound, squared_residual, PenaltyWeights};
use super::quadratize::{quadratize, Quadratization};
use super::system::ConstraintSystem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariableKind {
    Original,
    Slack,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableEntry {
    pub index: usize,
    pub kind: VariableKind,
    pub lower: i64,
    pub weights: Vec<u64>,
    /// Half-open range of QUBO variables.
    pub bits: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AncillaEntry {
    pub index: usize,
    pub factors: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub delta_hb_max: String,
    pub delta_ha_min: String,
    pub rho: String,
    pub absolute: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompileReport {
    pub scheme: Scheme,
    pub variables: Vec<VariableEntry>,
    pub ancillas: Vec<AncillaEntry>,
    pub weights: PenaltyWeights,
    /// Present when the binarized objective is linear.
    pub penalty_bound: Option<BoundEntry>,
    pub offset: String,
    pub num_qubo_vars: usize,
}

/// A compiled program together with the maps needed to read samples back.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub qubo: QuboModel,
    /// Encoding of the original variables followed by the slacks.
    pub encoding: EncodingMap,
    pub report: CompileReport,
    original: usize,
    equality: ConstraintSystem,
    slack_rows: Vec<usize>,
    binary: ConstraintSystem,
    quadratization: Quadratization,
}

impl Compiled {
    pub fn num_original(&self) -> usize {
        self.original
    }

    /// The integer system after slack conversion.
    pub fn equality_system(&self) -> &ConstraintSystem {
        &self.equality
    }

    /// The equality system over the encoding bits.
    pub fn binary_system(&self) -> &ConstraintSystem {
        &self.binary
    }

    pub fn quadratization(&self) -> &Quadratization {
        &self.quadratization
    }

    /// Values of the original variables.
    pub fn decode(&self, sample: &[u8]) -> Result<Vec<i64>> {
        Error::check_len(self.qubo.num_vars(), sample.len())?;
        let mut x = self.encoding.decode(&sample[..self.encoding.num_bits()])?;
        x.truncate(self.original);
        Ok(x)
    }

    /// Zero-penalty sample for a feasible original point.
    pub fn encode(&self, x: &[i64]) -> Result<Vec<u8>> {
        Error::check_len(self.original, x.len())?;
        let mut full = x.to_vec();
        full.resize(self.equality.num_vars(), 0);
        let residual = self.equality.residual(&full);
        for (k, &r) in self.slack_rows.iter().enumerate() {
            full[self.original + k] = -residual[r];
        }
        if !self.equality.is_feasible(&full) {
            return Err(Error::Infeasible(format!("{x:?} violates the constraints")));
        }
        let bits = self.encoding.encode(&full)?;
        Ok(self.quadratization.complete(&bits))
    }

    /// `A' X - b'` on the encoding bits.
    pub fn residual(&self, sample: &[u8]) -> Vec<i64> {
        let bits: Vec<i64> = sample[..self.encoding.num_bits()].iter().map(|&b| i64::from(b)).collect();
        self.binary.residual(&bits)
    }

    pub fn ancillas_consistent(&self, sample: &[u8]) -> bool {
        let n = self.encoding.num_bits();
        self.quadratization
            .ancillas
            .iter()
            .enumerate()
            .all(|(k, &(i, j))| sample[n + k] == sample[i] & sample[j])
    }

    /// No equality residual and all ancillas consistent.
    pub fn is_zero_penalty(&self, sample: &[u8]) -> bool {
        sample.len() == self.qubo.num_vars()
            && self.residual(sample).iter().all(|&r| r == 0)
            && self.ancillas_consistent(sample)
    }
}

/// Slack conversion, binarization, quadratization of the objective and
/// squared-residual penalties, in that order.
///
/// `energy(X) = f(X) + lambda * Σ H_k(X) + rho * |A'X - b'|²`, where `f` is the
/// quadratized objective. Without explicit weights, `rho` and `lambda` are one
/// more than the coefficient spreads of the binarized and the quadratized
/// objective, so every minimizer is zero-penalty whenever a feasible point exists.
pub fn compile_qubo(ip: &ConstraintSystem, scheme: Scheme, weights: Option<PenaltyWeights>) -> Result<Compiled> {
    let original = ip.num_vars();
    let slack_rows: Vec<usize> = (0..ip.num_rows()).filter(|&r| ip.is_inequality(r)).collect();
    let equality = inequality_to_equality(ip)?;
    let (binary, encoding) = binarize(&equality, scheme)?;
    let quad = quadratize(binary.objective());
    let total = quad.num_vars();
    let weights = match weights {
        Some(w) => w,
        None => PenaltyWeights::new(
            coefficient_spread(binary.objective()) + rational(1),
            coefficient_spread(&quad.polynomial) + rational(1),
        )?,
    };
    let residual = squared_residual(binary.matrix(), binary.rhs(), encoding.num_bits())?;
    let energy = &(&quad.polynomial + &quad.penalty.scale(&weights.lambda))
        + &residual.to_polynomial().extend(total).scale(&weights.rho);
    let qubo = QuboModel::from_polynomial(&energy)?;
    let penalty_bound = penalty_bound(&binary).ok().map(|b| BoundEntry {
        delta_hb_max: format_rational(&b.delta_hb_max),
        delta_ha_min: format_rational(&b.delta_ha_min),
        rho: format_rational(&b.rho),
        absolute: format_rational(&b.absolute),
    });
    let variables = (0..equality.num_vars())
        .map(|i| {
            let r = encoding.bits(i);
            VariableEntry {
                index: i,
                kind: if i < original { VariableKind::Original } else { VariableKind::Slack },
                lower: encoding.shifts()[i],
                weights: encoding.weights(i).to_vec(),
                bits: (r.start, r.end),
            }
        })
        .collect();
    let ancillas = quad
        .ancillas
        .iter()
        .enumerate()
        .map(|(k, &f)| AncillaEntry {
            index: encoding.num_bits() + k,
            factors: f,
        })
        .collect();
    let report = CompileReport {
        scheme,
        variables,
        ancillas,
        weights,
        penalty_bound,
        offset: format_rational(qubo.offset()),
        num_qubo_vars: total,
    };
    Ok(Compiled {
        qubo,
        encoding,
        report,
        original,
        equality,
        slack_rows,
        binary,
        quadratization: quad,
    })
}
