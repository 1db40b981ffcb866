use serde::{Deserialize, Serialize};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::reformulate::ConstraintSystem;

use super::pottier::GraverBasis;

/// Objective oracle. Implementations must be pure.
pub trait Objective: Sync {
    fn value(&self, x: &[i64]) -> f64;
}

impl<F: Fn(&[i64]) -> f64 + Sync> Objective for F {
    fn value(&self, x: &[i64]) -> f64 {
        self(x)
    }
}

impl Objective for Polynomial {
    fn value(&self, x: &[i64]) -> f64 {
        self.eval_f64(x)
    }
}

/// Step-length search along one direction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Evaluate every feasible step length.
    #[default]
    Greedy,
    /// Integer ternary search between 1 and the largest feasible step, plus
    /// both endpoints; exact for objectives convex along the direction.
    Bisection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Augmentation {
    pub point: Vec<i64>,
    pub value: f64,
    /// Objective after every move, starting with the initial value.
    pub trajectory: Vec<f64>,
}

// Relative slack so that rounding noise never counts as an improvement.
fn improves(new: f64, old: f64) -> bool {
    new < old - 1e-12 * old.abs().max(1.0)
}

/// Largest `alpha >= 0` with `l <= z + alpha g <= u`.
fn max_step(z: &[i64], g: &[i64], l: &[i64], u: &[i64]) -> i64 {
    let mut best = i64::MAX;
    for j in 0..z.len() {
        let s = match g[j].signum() {
            1 => (u[j] - z[j]) / g[j],
            -1 => (z[j] - l[j]) / -g[j],
            _ => continue,
        };
        best = best.min(s);
    }
    best
}

fn step(z: &[i64], g: &[i64], alpha: i64) -> Vec<i64> {
    z.iter().zip(g).map(|(a, b)| a + alpha * b).collect()
}

fn best_along(f: &dyn Objective, z: &[i64], g: &[i64], amax: i64, strategy: Strategy) -> Option<(f64, i64)> {
    if amax < 1 {
        return None;
    }
    let eval = |a: i64| f.value(&step(z, g, a));
    let mut best: Option<(f64, i64)> = None;
    let mut consider = |v: f64, a: i64| {
        if best.is_none_or(|(bv, ba)| v < bv || (v == bv && a < ba)) {
            best = Some((v, a));
        }
    };
    match strategy {
        Strategy::Greedy => {
            for a in 1..=amax {
                consider(eval(a), a);
            }
        }
        Strategy::Bisection => {
            let (mut lo, mut hi) = (1, amax);
            while hi - lo > 2 {
                let m1 = lo + (hi - lo) / 3;
                let m2 = hi - (hi - lo) / 3;
                if eval(m1) <= eval(m2) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            for a in lo..=hi {
                consider(eval(a), a);
            }
            consider(eval(1), 1);
            consider(eval(amax), amax);
        }
    }
    best
}

/// Repeatedly take the best improving move `z + alpha g` over all directions
/// of `basis` until none improves. Every point visited satisfies `A z = b`
/// and the bounds.
pub fn graver_augment(
    system: &ConstraintSystem,
    f: &dyn Objective,
    basis: &GraverBasis,
    z0: &[i64],
    strategy: Strategy,
) -> Result<Augmentation> {
    let (l, u) = system.finite_bounds()?;
    if z0.len() != system.num_vars() {
        return Err(Error::Dimension {
            expected: system.num_vars(),
            found: z0.len(),
        });
    }
    if !system.is_feasible(z0) {
        return Err(Error::Precondition("starting point is not feasible".into()));
    }
    if system.has_inequalities() {
        return Err(Error::Precondition("augmentation needs an equality system".into()));
    }
    let mut z = z0.to_vec();
    let mut value = f.value(&z);
    let mut trajectory = vec![value];
    loop {
        let mut best: Option<(f64, usize, i64)> = None;
        for (k, g) in basis.elements().iter().enumerate() {
            let amax = max_step(&z, g, &l, &u);
            if let Some((v, a)) = best_along(f, &z, g, amax, strategy) {
                if best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, k, a));
                }
            }
        }
        match best {
            Some((v, k, a)) if improves(v, value) => {
                z = step(&z, &basis.elements()[k], a);
                debug_assert!(system.is_feasible(&z));
                value = v;
                trajectory.push(v);
            }
            _ => break,
        }
    }
    Ok(Augmentation {
        point: z,
        value,
        trajectory,
    })
}
