use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graver::Objective;

/// `-Σ μ_i x_i + sqrt((1-ε)/ε · Σ σ_i² x_i²)`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapitalBudgeting {
    pub mu: Vec<f64>,
    pub sigma: Vec<f64>,
    pub epsilon: f64,
}

impl CapitalBudgeting {
    pub fn new(mu: Vec<f64>, sigma: Vec<f64>, epsilon: f64) -> Result<Self> {
        Error::check_len(mu.len(), sigma.len())?;
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::Parameter(format!("epsilon must lie in (0, 1), got {epsilon}")));
        }
        Ok(CapitalBudgeting { mu, sigma, epsilon })
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }
}

impl Objective for CapitalBudgeting {
    fn value(&self, x: &[i64]) -> f64 {
        let mut ret = 0.0;
        let mut var = 0.0;
        for ((&m, &s), &v) in self.mu.iter().zip(&self.sigma).zip(x) {
            let v = v as f64;
            ret += m * v;
            var += s * s * v * v;
        }
        -ret + ((1.0 - self.epsilon) / self.epsilon * var).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let f = CapitalBudgeting::new(vec![1.0, 2.0], vec![1.0, 1.0], 0.1).unwrap();
        assert_eq!(f.value(&[0, 0]), 0.0);
        assert!((f.value(&[1, 1]) - (-3.0 + 18f64.sqrt())).abs() < 1e-12);
        assert!(CapitalBudgeting::new(vec![1.0], vec![1.0], 1.0).is_err());
    }
}
