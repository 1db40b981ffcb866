use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qubo::IsingModel;

use super::model::default_beta_range;

/// Interpolation of the inverse temperature between the two endpoints.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Linear,
    #[default]
    Geometric,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnealSchedule {
    pub beta_min: f64,
    pub beta_max: f64,
    /// One sweep per rung of the ladder.
    pub sweeps: usize,
    pub shape: Shape,
    /// Replica count for parallel tempering.
    pub replicas: usize,
    /// Sweeps between exchange attempts.
    pub exchange_interval: usize,
}

pub const DEFAULT_SWEEPS: usize = 1000;
pub const DEFAULT_REPLICAS: usize = 8;

impl AnnealSchedule {
    pub fn new(beta_min: f64, beta_max: f64, sweeps: usize) -> Result<Self> {
        let s = AnnealSchedule {
            beta_min,
            beta_max,
            sweeps,
            shape: Shape::default(),
            replicas: DEFAULT_REPLICAS,
            exchange_interval: 1,
        };
        s.validate()?;
        Ok(s)
    }

    /// Default β range of the model with the default sweep count.
    pub fn for_model(m: &IsingModel) -> Self {
        let (lo, hi) = default_beta_range(m);
        AnnealSchedule::new(lo, hi, DEFAULT_SWEEPS).expect("default range is ordered")
    }

    pub fn with_sweeps(mut self, sweeps: usize) -> Result<Self> {
        self.sweeps = sweeps;
        self.validate()?;
        Ok(self)
    }

    pub fn with_shape(mut self, shape: Shape) -> Self {
        self.shape = shape;
        self
    }

    pub fn with_replicas(mut self, replicas: usize) -> Result<Self> {
        self.replicas = replicas;
        self.validate()?;
        Ok(self)
    }

    pub fn with_exchange_interval(mut self, interval: usize) -> Result<Self> {
        self.exchange_interval = interval;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta_min.is_finite() && self.beta_max.is_finite() && 0.0 < self.beta_min && self.beta_min < self.beta_max) {
            return Err(Error::Parameter(format!(
                "need 0 < beta_min < beta_max, got [{}, {}]",
                self.beta_min, self.beta_max
            )));
        }
        if self.sweeps == 0 {
            return Err(Error::Parameter("sweeps must be at least 1".into()));
        }
        if self.replicas == 0 || self.exchange_interval == 0 {
            return Err(Error::Parameter("replicas and exchange interval must be at least 1".into()));
        }
        Ok(())
    }

    fn ladder(&self, k: usize) -> Vec<f64> {
        if k == 1 {
            return vec![self.beta_max];
        }
        let (a, b) = (self.beta_min, self.beta_max);
        (0..k)
            .map(|i| {
                let t = i as f64 / (k - 1) as f64;
                match self.shape {
                    Shape::Linear => a + (b - a) * t,
                    Shape::Geometric => a * (b / a).powf(t),
                }
            })
            .collect()
    }

    /// β at each sweep of an anneal, hottest first.
    pub fn betas(&self) -> Vec<f64> {
        self.ladder(self.sweeps)
    }

    /// Fixed β of each tempering replica, hottest first.
    pub fn replica_betas(&self) -> Vec<f64> {
        self.ladder(self.replicas)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn ladders() {
        let s = AnnealSchedule::new(0.1, 10.0, 3).unwrap();
        let b = s.betas();
        assert!((b[0] - 0.1).abs() < 1e-12 && (b[1] - 1.0).abs() < 1e-12 && (b[2] - 10.0).abs() < 1e-12);
        let l = s.clone().with_shape(Shape::Linear).betas();
        assert!((l[1] - 5.05).abs() < 1e-12);
        assert_eq!(s.with_sweeps(1).unwrap().betas(), vec![10.0]);
    }

    #[test]
    fn invalid_schedules() {
        assert!(AnnealSchedule::new(0.0, 1.0, 10).is_err());
        assert!(AnnealSchedule::new(2.0, 1.0, 10).is_err());
        assert!(AnnealSchedule::new(0.5, 1.0, 0).is_err());
        assert!(AnnealSchedule::new(0.5, f64::INFINITY, 10).is_err());
    }

    #[test]
    fn default_range_uses_flip_bounds() {
        // worst flips: spin 0 -> 2(1 + 2) = 6; smallest term |h_0| = 1
        let mut m = IsingModel::new(3);
        m.add_field(0, &rational(-1)).unwrap();
        m.add_coupling(0, 1, rational(2)).unwrap();
        let s = AnnealSchedule::for_model(&m);
        assert!((s.beta_min - 2f64.ln() / 6.0).abs() < 1e-15);
        assert!((s.beta_max - 100f64.ln() / 2.0).abs() < 1e-15);
        assert_eq!(s.sweeps, DEFAULT_SWEEPS);
        let z = AnnealSchedule::for_model(&IsingModel::new(2));
        assert_eq!((z.beta_min, z.beta_max), (0.1, 1.0));
    }
}
