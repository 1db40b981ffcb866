//! Monte Carlo samplers over Ising and QUBO models and their sample statistics.

mod metrics;
mod model;
mod sampler;
mod samples;
mod schedule;

pub use metrics::{chain_break_stats, tts, tts_from_probability, ChainBreakStats};
pub use model::{default_beta_range, Sampleable, SpinModel, Vartype};
pub use sampler::{mhmc_sweep, parallel_tempering, shot_rng, simulated_anneal, swap_probability, Walker};
pub use samples::{Record, SampleHeader, SampleSet, SamplerKind};
pub use schedule::{AnnealSchedule, Shape, DEFAULT_REPLICAS, DEFAULT_SWEEPS};
