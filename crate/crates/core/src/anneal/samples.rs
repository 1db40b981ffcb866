use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{to_f64, Rational};
use crate::error::{Error, Result};

use super::model::{Sampleable, Vartype};
use super::schedule::AnnealSchedule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    Anneal,
    Tempering,
    /// Derived from another set by collapsing chains.
    Collapsed,
}

/// Metadata line of a persisted sample set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleHeader {
    pub seed: u64,
    pub digest: String,
    pub vartype: Vartype,
    pub num_vars: usize,
    pub sampler: SamplerKind,
    pub schedule: Option<AnnealSchedule>,
    pub shots: u64,
    pub chain_break_fraction: Option<f64>,
}

impl SampleHeader {
    pub fn new<M: Sampleable>(model: &M, seed: u64, sampler: SamplerKind, schedule: Option<AnnealSchedule>) -> Self {
        SampleHeader {
            seed,
            digest: model.digest(),
            vartype: model.vartype(),
            num_vars: model.num_vars(),
            sampler,
            schedule,
            shots: 0,
            chain_break_fraction: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub config: Vec<i8>,
    pub energy: f64,
    pub count: u64,
}

/// Distinct samples with multiplicities, sorted by energy and then
/// lexicographically.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet {
    pub header: SampleHeader,
    records: Vec<Record>,
}

impl SampleSet {
    /// Aggregates raw samples; energies are evaluated exactly and then rounded.
    pub fn from_samples<M: Sampleable>(model: &M, samples: Vec<Vec<i8>>, mut header: SampleHeader) -> Self {
        header.shots = samples.len() as u64;
        let mut counts: BTreeMap<Vec<i8>, u64> = BTreeMap::new();
        for s in samples {
            *counts.entry(s).or_default() += 1;
        }
        let mut exact: Vec<(Rational, Vec<i8>, u64)> = counts
            .into_iter()
            .map(|(c, k)| (model.exact_energy(&c), c, k))
            .collect();
        exact.sort();
        let records = exact
            .into_iter()
            .map(|(e, config, count)| Record {
                config,
                energy: to_f64(&e),
                count,
            })
            .collect();
        SampleSet { header, records }
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn num_shots(&self) -> u64 {
        self.records.iter().map(|r| r.count).sum()
    }

    pub fn lowest(&self) -> Option<&Record> {
        self.records.first()
    }

    /// Fraction of shots with energy at most `target` (up to rounding).
    pub fn fraction_at_or_below(&self, target: f64) -> f64 {
        let total = self.num_shots();
        if total == 0 {
            return 0.0;
        }
        let tol = 1e-9 * target.abs().max(1.0);
        let hit: u64 = self.records.iter().filter(|r| r.energy <= target + tol).map(|r| r.count).sum();
        hit as f64 / total as f64
    }

    /// Fraction of shots whose configuration satisfies `pred`.
    pub fn fraction_where(&self, pred: impl Fn(&[i8]) -> bool) -> f64 {
        let total = self.num_shots();
        if total == 0 {
            return 0.0;
        }
        let hit: u64 = self.records.iter().filter(|r| pred(&r.config)).map(|r| r.count).sum();
        hit as f64 / total as f64
    }

    /// Checks the digest and that every energy is the rounded exact energy.
    pub fn verify<M: Sampleable>(&self, model: &M) -> Result<()> {
        if self.header.digest != model.digest() {
            return Err(Error::Validation("sample set was produced for a different model".into()));
        }
        for r in &self.records {
            Error::check_len(model.num_vars(), r.config.len())?;
            let e = to_f64(&model.exact_energy(&r.config));
            if e != r.energy {
                return Err(Error::Validation(format!(
                    "recorded energy {} of {:?} re-evaluates to {e}",
                    r.energy, r.config
                )));
            }
        }
        Ok(())
    }

    fn check(&self) -> Result<()> {
        let h = &self.header;
        for (k, r) in self.records.iter().enumerate() {
            if r.count == 0 {
                return Err(Error::Validation(format!("record {k} has count 0")));
            }
            Error::check_len(h.num_vars, r.config.len())?;
            let ok = match h.vartype {
                Vartype::Spin => r.config.iter().all(|&v| v == 1 || v == -1),
                Vartype::Binary => r.config.iter().all(|&v| v == 0 || v == 1),
            };
            if !ok {
                return Err(Error::Validation(format!("record {k} has values outside the domain")));
            }
            if !r.energy.is_finite() {
                return Err(Error::Validation(format!("record {k} has a nonfinite energy")));
            }
        }
        if self.records.windows(2).any(|w| w[0].energy > w[1].energy) {
            return Err(Error::Validation("records are not sorted by energy".into()));
        }
        let distinct: std::collections::BTreeSet<&Vec<i8>> = self.records.iter().map(|r| &r.config).collect();
        if distinct.len() != self.records.len() {
            return Err(Error::Validation("duplicate configurations".into()));
        }
        if self.num_shots() != h.shots {
            return Err(Error::Validation(format!(
                "header says {} shots, records hold {}",
                h.shots,
                self.num_shots()
            )));
        }
        Ok(())
    }

    /// Header line followed by one line per record.
    pub fn to_jsonl(&self) -> Result<String> {
        let mut out = serde_json::to_string(&self.header).map_err(json_err)?;
        out.push('\n');
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).map_err(json_err)?);
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty sample file"))?;
        let header: SampleHeader = serde_json::from_str(first).map_err(|e| Error::parse(1, e.column(), e.to_string()))?;
        let mut records = Vec::new();
        for (k, line) in lines {
            records.push(serde_json::from_str(line).map_err(|e| Error::parse(k + 1, e.column(), e.to_string()))?);
        }
        let set = SampleSet { header, records };
        set.check()?;
        Ok(set)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_jsonl()?)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_jsonl(&std::fs::read_to_string(path)?)
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Internal(e.to_string())
}
