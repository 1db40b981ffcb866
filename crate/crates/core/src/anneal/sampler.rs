use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::model::{from_spins, Sampleable, SpinModel};
use super::samples::{SampleHeader, SampleSet, SamplerKind};
use super::schedule::AnnealSchedule;

const AUDIT_EVERY: u64 = 1024;

/// One Markov chain: spins, tracked energy and its accepted-move counter.
#[derive(Clone, Debug)]
pub struct Walker {
    pub spins: Vec<i8>,
    energy: f64,
    accepted: u64,
    order: Vec<usize>,
}

impl Walker {
    pub fn new(model: &SpinModel, spins: Vec<i8>) -> Result<Self> {
        Error::check_len(model.len(), spins.len())?;
        if spins.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Validation("spins must be -1 or +1".into()));
        }
        Ok(Walker {
            energy: model.energy(&spins),
            order: (0..spins.len()).collect(),
            spins,
            accepted: 0,
        })
    }

    pub fn random<R: Rng>(model: &SpinModel, rng: &mut R) -> Self {
        let spins = (0..model.len()).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
        Walker::new(model, spins).expect("random spins are valid")
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }
}

/// `min(1, exp((β1 - β2)(E1 - E2)))`
pub fn swap_probability(beta1: f64, beta2: f64, e1: f64, e2: f64) -> f64 {
    let x = (beta1 - beta2) * (e1 - e2);
    if x >= 0.0 {
        1.0
    } else {
        x.exp()
    }
}

/// `n` single-spin Metropolis proposals in a fresh random order.
/// Returns the number of accepted flips.
pub fn mhmc_sweep<R: Rng>(model: &SpinModel, w: &mut Walker, beta: f64, rng: &mut R) -> Result<usize> {
    w.order.shuffle(rng);
    let mut accepted = 0;
    for k in 0..w.order.len() {
        let i = w.order[k];
        let s = f64::from(w.spins[i]);
        let delta = -2.0 * s * model.local_field(&w.spins, i);
        if delta <= 0.0 || rng.gen::<f64>() < (-beta * delta).exp() {
            w.spins[i] = -w.spins[i];
            w.energy += delta;
            w.accepted += 1;
            accepted += 1;
            if w.accepted.is_multiple_of(AUDIT_EVERY) {
                audit(model, w)?;
            }
        }
    }
    Ok(accepted)
}

fn audit(model: &SpinModel, w: &mut Walker) -> Result<()> {
    let full = model.energy(&w.spins);
    let scale = model.h.iter().map(|x| x.abs()).sum::<f64>()
        + model.adj.iter().flatten().map(|(_, x)| x.abs()).sum::<f64>()
        + model.offset.abs();
    if (full - w.energy).abs() > 1e-9 * scale.max(1.0) {
        return Err(Error::Internal(format!(
            "incremental energy {} drifted from {full}",
            w.energy
        )));
    }
    w.energy = full;
    Ok(())
}

/// Generator for shot `shot` of a run seeded with `seed`.
pub fn shot_rng(seed: u64, shot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shot);
    rng
}

fn run_shots<M, F>(model: &M, shots: usize, seed: u64, header: SampleHeader, shot: F) -> Result<SampleSet>
where
    M: Sampleable,
    F: Fn(&SpinModel, &mut ChaCha8Rng) -> Result<Vec<i8>> + Sync,
{
    let spin = SpinModel::new(&model.to_ising());
    let vt = model.vartype();
    let samples: Vec<Vec<i8>> = (0..shots as u64)
        .into_par_iter()
        .map(|k| shot(&spin, &mut shot_rng(seed, k)).map(|s| from_spins(&s, vt)))
        .collect::<Result<_>>()?;
    Ok(SampleSet::from_samples(model, samples, header))
}

/// Each shot starts from uniform random spins and performs one sweep per
/// rung of the β ladder; the final state is recorded.
pub fn simulated_anneal<M: Sampleable>(model: &M, schedule: &AnnealSchedule, shots: usize, seed: u64) -> Result<SampleSet> {
    schedule.validate()?;
    let betas = schedule.betas();
    let header = SampleHeader::new(model, seed, SamplerKind::Anneal, Some(schedule.clone()));
    run_shots(model, shots, seed, header, |m, rng| {
        let mut w = Walker::random(m, rng);
        for &b in &betas {
            mhmc_sweep(m, &mut w, b, rng)?;
        }
        Ok(w.spins)
    })
}

/// Replicas at fixed β on the replica ladder, each sweeping `sweeps` times;
/// every `exchange_interval` sweeps adjacent pairs attempt a swap, hottest
/// pair first. The coldest replica's final state is recorded.
pub fn parallel_tempering<M: Sampleable>(
    model: &M,
    schedule: &AnnealSchedule,
    shots: usize,
    seed: u64,
) -> Result<SampleSet> {
    schedule.validate()?;
    if schedule.replicas < 2 {
        return Err(Error::Parameter("parallel tempering needs at least 2 replicas".into()));
    }
    let betas = schedule.replica_betas();
    let header = SampleHeader::new(model, seed, SamplerKind::Tempering, Some(schedule.clone()));
    run_shots(model, shots, seed, header, |m, rng| {
        let mut ws: Vec<Walker> = betas.iter().map(|_| Walker::random(m, rng)).collect();
        for t in 1..=schedule.sweeps {
            for (w, &b) in ws.iter_mut().zip(&betas) {
                mhmc_sweep(m, w, b, rng)?;
            }
            if t % schedule.exchange_interval == 0 {
                for r in 0..ws.len() - 1 {
                    let p = swap_probability(betas[r], betas[r + 1], ws[r].energy, ws[r + 1].energy);
                    if p >= 1.0 || rng.gen::<f64>() < p {
                        ws.swap(r, r + 1);
                    }
                }
            }
        }
        Ok(ws.pop().expect("at least two replicas").spins)
    })
}
