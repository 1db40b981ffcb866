use std::collections::BTreeSet;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::anneal::{shot_rng, simulated_anneal, AnnealSchedule, Sampleable};
use crate::error::{Error, Result};
use crate::graver::{graver_augment, pottier, GraverBasis, LatticeVector, Objective, Strategy};
use crate::reformulate::{ConstraintSystem, EncodingMap, Scheme};

use super::extract::{certify, extract_partial_graver};
use super::qubo::{kernel_qubo, seed_qubo};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GamaConfig {
    pub scheme: Scheme,
    /// Kernel box `[-2^(w-1), 2^(w-1) - 1]`, clipped to `±(u - l)`.
    pub width: u32,
    /// Per-variable override of `width`.
    pub widths: Option<Vec<u32>>,
    /// Initial seed window width; `None` encodes the whole box.
    pub seed_width: Option<u32>,
    pub kernel_shots: usize,
    pub seed_shots: usize,
    pub seed_rounds: usize,
    pub sweeps: usize,
    /// Fraction of the extracted basis (±pairs) used for augmentation.
    pub basis_fraction: f64,
    /// Augment only this many seeds, drawn uniformly from those found.
    pub max_seeds: Option<usize>,
    pub strategy: Strategy,
    /// Check the extracted basis against the completion algorithm.
    pub certify: bool,
    pub seed: u64,
}

impl Default for GamaConfig {
    fn default() -> Self {
        GamaConfig {
            scheme: Scheme::Binary,
            width: 2,
            widths: None,
            seed_width: None,
            kernel_shots: 2000,
            seed_shots: 2000,
            seed_rounds: 4,
            sweeps: 200,
            basis_fraction: 1.0,
            max_seeds: None,
            strategy: Strategy::Greedy,
            certify: false,
            seed: 0,
        }
    }
}

impl GamaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.kernel_shots == 0 || self.seed_shots == 0 || self.seed_rounds == 0 || self.sweeps == 0 {
            return Err(Error::Parameter("shot budgets, rounds and sweeps must be at least 1".into()));
        }
        if !(self.basis_fraction > 0.0 && self.basis_fraction <= 1.0) {
            return Err(Error::Parameter(format!(
                "basis fraction must lie in (0, 1], got {}",
                self.basis_fraction
            )));
        }
        if self.width == 0 || self.width > 30 || self.widths.iter().flatten().any(|&w| w == 0 || w > 30) {
            return Err(Error::Parameter("encoding widths must lie in 1..=30".into()));
        }
        if self.max_seeds == Some(0) {
            return Err(Error::Parameter("max_seeds must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedRun {
    pub start: Vec<i64>,
    pub point: Vec<i64>,
    pub value: f64,
    /// Objective after every augmentation step, starting at the seed.
    pub trajectory: Vec<f64>,
}

/// Wall-clock seconds per stage. Not serialised, so reports stay reproducible.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StageTimes {
    pub kernel: f64,
    pub seeds: f64,
    pub augment: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GamaReport {
    /// Extracted elements, negations included.
    pub basis_size: usize,
    pub basis_complete: bool,
    /// Elements used for augmentation, negations included.
    pub basis_used: usize,
    /// Sub-seed of the basis-fraction draw.
    pub basis_seed: u64,
    pub basis: Vec<LatticeVector>,
    pub seed_rounds: usize,
    pub seed_shots: u64,
    pub seeds_found: usize,
    pub runs: Vec<SeedRun>,
    pub best: Vec<i64>,
    pub best_value: f64,
    #[serde(skip)]
    pub times: StageTimes,
}

fn sub_seed(seed: u64, stream: u64) -> u64 {
    shot_rng(seed, stream).gen()
}

fn kernel_box(l: &[i64], u: &[i64], cfg: &GamaConfig) -> Result<(Vec<i64>, Vec<i64>)> {
    let n = l.len();
    if let Some(w) = &cfg.widths {
        Error::check_len(n, w.len())?;
    }
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for j in 0..n {
        let w = cfg.widths.as_ref().map_or(cfg.width, |v| v[j]);
        let half = 1i64 << (w - 1);
        let span = u[j] - l[j];
        lo.push((-half).max(-span));
        hi.push((half - 1).min(span));
    }
    Ok((lo, hi))
}

fn window(l: &[i64], u: &[i64], center: &[i64], width: Option<u32>) -> (Vec<i64>, Vec<i64>) {
    match width {
        None => (l.to_vec(), u.to_vec()),
        Some(w) => {
            let half = 1i64 << (w.min(62) - 1);
            let lo = (0..l.len()).map(|j| (center[j] - half).clamp(l[j], u[j])).collect();
            let hi = (0..l.len()).map(|j| (center[j] + half - 1).clamp(l[j], u[j])).collect();
            (lo, hi)
        }
    }
}

fn anneal_decode<M: Sampleable>(q: &M, e: &EncodingMap, shots: usize, sweeps: usize, seed: u64) -> Result<crate::anneal::SampleSet> {
    let schedule = AnnealSchedule::for_model(&q.to_ising()).with_sweeps(sweeps)?;
    let set = simulated_anneal(q, &schedule, shots, seed)?;
    debug_assert_eq!(set.header.num_vars, e.num_bits());
    Ok(set)
}

struct Seeds {
    points: Vec<Vec<i64>>,
    rounds: usize,
    shots: u64,
}

fn find_seeds(ip: &ConstraintSystem, l: &[i64], u: &[i64], cfg: &GamaConfig) -> Result<Seeds> {
    let mut center: Vec<i64> = l.iter().zip(u).map(|(a, b)| a + (b - a + 1) / 2).collect();
    let mut width = cfg.seed_width;
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut shots = 0u64;
    for round in 0..cfg.seed_rounds {
        let (lo, hi) = window(l, u, &center, width);
        let e = EncodingMap::new(&lo, &hi, cfg.scheme)?;
        let q = seed_qubo(ip, &e)?;
        let set = anneal_decode(&q, &e, cfg.seed_shots, cfg.sweeps, sub_seed(cfg.seed, 2 + round as u64))?;
        shots += set.num_shots();
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        for r in set.records() {
            let bits: Vec<u8> = r.config.iter().map(|&v| v as u8).collect();
            let x = e.decode(&bits)?;
            let res: i64 = ip.residual(&x).iter().map(|v| v * v).sum();
            if res == 0 && ip.within_bounds(&x) {
                found.insert(x);
            } else if best.as_ref().is_none_or(|(b, _)| res < *b) {
                best = Some((res, x));
            }
        }
        if !found.is_empty() {
            return Ok(Seeds {
                points: found.into_iter().collect(),
                rounds: round + 1,
                shots,
            });
        }
        if let Some((_, x)) = &best {
            center = x.clone();
        }
        width = width.map(|w| w + 1);
    }
    let detail = match best {
        Some((r, x)) => format!("best squared residual {r} at {x:?} after {shots} shots"),
        None => format!("no samples after {shots} shots"),
    };
    Err(Error::NoSeed(detail))
}

fn pick_fraction(basis: &GraverBasis, fraction: f64, seed: u64) -> GraverBasis {
    if fraction >= 1.0 || basis.is_empty() {
        return basis.clone();
    }
    let reps: Vec<usize> = (0..basis.len())
        .filter(|&i| basis.elements()[i].iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
        .collect();
    let k = ((reps.len() as f64 * fraction).ceil() as usize).clamp(1, reps.len());
    let mut rng = shot_rng(seed, 0);
    let mut idx: Vec<usize> = rand::seq::index::sample(&mut rng, reps.len(), k).into_iter().map(|i| reps[i]).collect();
    idx.sort_unstable();
    basis.restrict(&idx)
}

/// Kernel QUBO → anneal → partial Graver basis; seed QUBO → anneal →
/// feasible seeds; augmentation from every seed in parallel. The objective
/// is only evaluated, never encoded.
pub fn gama_solve(ip: &ConstraintSystem, f: &dyn Objective, cfg: &GamaConfig) -> Result<GamaReport> {
    cfg.validate()?;
    if ip.has_inequalities() {
        return Err(Error::Precondition("GAMA needs an equality system".into()));
    }
    let (l, u) = ip.finite_bounds()?;
    let a = ip.matrix();

    let t = Instant::now();
    let (klo, khi) = kernel_box(&l, &u, cfg)?;
    let ke = EncodingMap::new(&klo, &khi, cfg.scheme)?;
    let kq = kernel_qubo(a, &ke)?;
    let kset = anneal_decode(&kq, &ke, cfg.kernel_shots, cfg.sweeps, sub_seed(cfg.seed, 0))?;
    let mut basis = extract_partial_graver(&kset, &ke, a)?;
    if cfg.certify {
        certify(&mut basis, &pottier(a, ip.num_vars())?);
    }
    let basis_seed = sub_seed(cfg.seed, 1);
    let used = pick_fraction(&basis, cfg.basis_fraction, basis_seed);
    let kernel_time = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let seeds = find_seeds(ip, &l, &u, cfg)?;
    let seeds_found = seeds.points.len();
    let mut points = seeds.points;
    if let Some(k) = cfg.max_seeds.filter(|&k| k < points.len()) {
        let mut rng = shot_rng(sub_seed(cfg.seed, 1), 1);
        let mut idx = rand::seq::index::sample(&mut rng, points.len(), k).into_vec();
        idx.sort_unstable();
        points = idx.into_iter().map(|i| points[i].clone()).collect();
    }
    let mut starts: Vec<(f64, Vec<i64>)> = points.into_iter().map(|x| (f.value(&x), x)).collect();
    starts.sort_by(|p, q| p.0.total_cmp(&q.0).then_with(|| p.1.cmp(&q.1)));
    let seed_time = t.elapsed().as_secs_f64();

    let t = Instant::now();
    let runs: Vec<SeedRun> = starts
        .par_iter()
        .map(|(_, x)| {
            graver_augment(ip, f, &used, x, cfg.strategy).map(|r| SeedRun {
                start: x.clone(),
                point: r.point,
                value: r.value,
                trajectory: r.trajectory,
            })
        })
        .collect::<Result<_>>()?;
    let augment_time = t.elapsed().as_secs_f64();

    let best = runs
        .iter()
        .min_by(|p, q| p.value.total_cmp(&q.value).then_with(|| p.point.cmp(&q.point)))
        .expect("at least one seed");
    Ok(GamaReport {
        basis_size: basis.len(),
        basis_complete: !basis.is_partial(),
        basis_used: used.len(),
        basis_seed,
        basis: used.elements().to_vec(),
        seed_rounds: seeds.rounds,
        seed_shots: seeds.shots,
        seeds_found,
        best: best.point.clone(),
        best_value: best.value,
        runs,
        times: StageTimes {
            kernel: kernel_time,
            seeds: seed_time,
            augment: augment_time,
        },
    })
}
