use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rational, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::qubo::QuboModel;

use super::system::ConstraintSystem;

/// Appends one slack per `<=` row, `A_i x + s_i = b_i` with
/// `0 <= s_i <= b_i - min A_i x` over the box. Rows are then all equalities.
pub fn inequality_to_equality(ip: &ConstraintSystem) -> Result<ConstraintSystem> {
    let rows: Vec<usize> = (0..ip.num_rows()).filter(|&r| ip.is_inequality(r)).collect();
    if rows.is_empty() {
        return Ok(ip.clone());
    }
    let n = ip.num_vars();
    let total = n + rows.len();
    let mut lower: Vec<Option<i64>> = ip.lower().to_vec();
    let mut upper: Vec<Option<i64>> = ip.upper().to_vec();
    for &r in &rows {
        let mut least = 0i64;
        for (j, &a) in ip.matrix()[r].iter().enumerate() {
            let bound = match a.signum() {
                1 => ip.lower()[j],
                -1 => ip.upper()[j],
                _ => continue,
            };
            let v = bound.ok_or_else(|| Error::Unbounded(format!("row {r} has no finite slack bound")))?;
            least += a * v;
        }
        lower.push(Some(0));
        // an unsatisfiable row keeps a zero slack and stays unsatisfiable
        upper.push(Some((ip.rhs()[r] - least).max(0)));
    }
    let a: Vec<Vec<i64>> = ip
        .matrix()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut row = row.clone();
            row.resize(total, 0);
            if let Some(k) = rows.iter().position(|&x| x == r) {
                row[n + k] = 1;
            }
            row
        })
        .collect();
    ConstraintSystem::new(a, ip.rhs().to_vec(), lower, upper)?.with_objective(ip.objective().extend(total))
}

/// Penalty weights: `rho` on squared equality residuals, `lambda` on the
/// ancilla consistency terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PenaltyWeights {
    #[serde(with = "crate::algebra::rational_text")]
    pub rho: Rational,
    #[serde(with = "crate::algebra::rational_text")]
    pub lambda: Rational,
}

impl PenaltyWeights {
    pub fn new(rho: Rational, lambda: Rational) -> Result<Self> {
        if !rho.is_positive() || !lambda.is_positive() {
            return Err(Error::Parameter("penalty weights must be positive".into()));
        }
        Ok(PenaltyWeights { rho, lambda })
    }
}

/// Quantities behind the choice of `rho` for a linear objective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PenaltyBound {
    /// `Σ max(c_i, 0)`
    pub delta_hb_max: Rational,
    /// `min_j max(1, min_σ ½ Σ_i (-1)^σ_i A_ji)`, which is 1 for every `A`.
    pub delta_ha_min: Rational,
    /// `max(delta_hb_max / delta_ha_min, 1)`
    pub rho: Rational,
    /// `Σ|c_i| + 1`; strictly exceeds any objective gain of leaving the feasible set.
    pub absolute: Rational,
}

pub fn penalty_bound(ip: &ConstraintSystem) -> Result<PenaltyBound> {
    let c = ip
        .linear_cost()
        .ok_or_else(|| Error::Precondition("penalty bound needs a linear objective".into()))?;
    let delta_hb_max: Rational = c.iter().filter(|v| v.is_positive()).sum();
    let delta_ha_min = ip
        .matrix()
        .iter()
        .map(|row| {
            let low = -rational(row.iter().map(|a| a.abs()).sum::<i64>()) / rational(2);
            low.max(rational(1))
        })
        .min()
        .unwrap_or_else(|| rational(1));
    let rho = (&delta_hb_max / &delta_ha_min).max(rational(1));
    let absolute = c.iter().map(|v| v.abs()).sum::<Rational>() + rational(1);
    Ok(PenaltyBound {
        delta_hb_max,
        delta_ha_min,
        rho,
        absolute,
    })
}

/// `Σ_i (A_i x - b_i)²` over binary `x` as a QUBO in `n` variables.
pub fn squared_residual(a: &[Vec<i64>], b: &[i64], n: usize) -> Result<QuboModel> {
    Error::check_len(a.len(), b.len())?;
    let mut q = QuboModel::new(n);
    for (row, &bi) in a.iter().zip(b) {
        Error::check_len(n, row.len())?;
        // (Σ a_j x_j - b)² = Σ (a_j² - 2 b a_j) x_j + Σ_{j<k} 2 a_j a_k x_j x_k + b²
        for j in 0..n {
            if row[j] == 0 {
                continue;
            }
            q.add_coefficient(j, j, rational(row[j] * row[j] - 2 * bi * row[j]))?;
            for k in j + 1..n {
                if row[k] != 0 {
                    q.add_coefficient(j, k, rational(2 * row[j] * row[k]))?;
                }
            }
        }
        q.add_offset(&rational(bi * bi));
    }
    Ok(q)
}

/// Sum of absolute non-constant coefficients: a bound on `max f - min f` over the cube.
pub(crate) fn coefficient_spread(p: &Polynomial) -> Rational {
    p.terms()
        .filter(|(m, _)| !m.is_one())
        .map(|(_, c)| c.abs())
        .fold(Rational::zero(), |a, c| a + c)
}
