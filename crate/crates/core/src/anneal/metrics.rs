use crate::error::{Error, Result};

use super::model::{Sampleable, Vartype};
use super::samples::{SampleHeader, SampleSet, SamplerKind};

/// Time to reach the target with confidence `s`, from the empirical success
/// fraction of the set. `tau` is the time of one shot.
pub fn tts(set: &SampleSet, tau: f64, target: f64, s: f64) -> Result<f64> {
    tts_from_probability(set.fraction_at_or_below(target), 1.0, tau, s)
}

/// `m τ ln(1-s) / ln(1-p)`, at least `m τ`; infinite for `p = 0`.
pub fn tts_from_probability(p: f64, m: f64, tau: f64, s: f64) -> Result<f64> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::Parameter(format!("confidence must lie in (0, 1), got {s}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("success probability must lie in [0, 1], got {p}")));
    }
    if !(m > 0.0 && tau > 0.0 && m.is_finite() && tau.is_finite()) {
        return Err(Error::Parameter("m and tau must be positive".into()));
    }
    if p == 0.0 {
        return Ok(f64::INFINITY);
    }
    if p == 1.0 {
        return Ok(m * tau);
    }
    let runs = ((1.0 - s).ln() / (1.0 - p).ln()).max(1.0);
    Ok(m * tau * runs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainBreakStats {
    /// Fraction of shots in which each chain is not unanimous.
    pub per_chain: Vec<f64>,
    /// Fraction of shots with at least one broken chain.
    pub any_broken: f64,
    /// Samples with each chain replaced by its majority vote, on the logical model.
    pub collapsed: SampleSet,
}

fn is_up(v: i8, vt: Vartype) -> bool {
    match vt {
        Vartype::Spin => v > 0,
        Vartype::Binary => v == 1,
    }
}

/// Majority vote per chain, ties going to `+1` (or `1` for binary sets).
/// The vote lands on the chain's first index and the other members are
/// removed; `logical` is the model on the remaining variables.
pub fn chain_break_stats<M: Sampleable>(set: &SampleSet, chains: &[Vec<usize>], logical: &M) -> Result<ChainBreakStats> {
    let n = set.header.num_vars;
    let vt = set.header.vartype;
    let mut owner = vec![None; n];
    for (c, chain) in chains.iter().enumerate() {
        if chain.is_empty() {
            return Err(Error::Validation(format!("chain {c} is empty")));
        }
        for &i in chain {
            if i >= n {
                return Err(Error::Validation(format!("chain {c} names variable {i} of {n}")));
            }
            if owner[i].replace(c).is_some() {
                return Err(Error::Validation(format!("chains are not a partition: variable {i} repeats")));
            }
        }
    }
    let dropped: Vec<bool> = (0..n)
        .map(|i| owner[i].is_some_and(|c: usize| chains[c][0] != i))
        .collect();
    let kept = dropped.iter().filter(|&&d| !d).count();
    if kept != logical.num_vars() || logical.vartype() != vt {
        return Err(Error::Validation(format!(
            "collapsed samples have {kept} variables but the logical model has {}",
            logical.num_vars()
        )));
    }
    let (up, down) = match vt {
        Vartype::Spin => (1i8, -1i8),
        Vartype::Binary => (1, 0),
    };
    let total = set.num_shots();
    let mut broken = vec![0u64; chains.len()];
    let mut any = 0u64;
    let mut samples = Vec::with_capacity(total as usize);
    for r in set.records() {
        let mut x = r.config.clone();
        let mut hit = false;
        for (c, chain) in chains.iter().enumerate() {
            let ups = chain.iter().filter(|&&i| is_up(r.config[i], vt)).count();
            if ups != 0 && ups != chain.len() {
                broken[c] += r.count;
                hit = true;
            }
            x[chain[0]] = if 2 * ups >= chain.len() { up } else { down };
        }
        any += if hit { r.count } else { 0 };
        let y: Vec<i8> = x.into_iter().zip(&dropped).filter(|(_, &d)| !d).map(|(v, _)| v).collect();
        samples.extend(std::iter::repeat_n(y, r.count as usize));
    }
    let frac = |k: u64| if total == 0 { 0.0 } else { k as f64 / total as f64 };
    let mut header = SampleHeader::new(logical, set.header.seed, SamplerKind::Collapsed, set.header.schedule.clone());
    header.chain_break_fraction = Some(frac(any));
    Ok(ChainBreakStats {
        per_chain: broken.into_iter().map(frac).collect(),
        any_broken: frac(any),
        collapsed: SampleSet::from_samples(logical, samples, header),
    })
}
