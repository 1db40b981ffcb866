//! Graver-augmented multiseed search driven by the annealer.

mod extract;
mod objective;
mod qubo;
mod solve;

pub use extract::{certify, extract_partial_graver, MAX_PAIRS, NEAR_KERNEL};
pub use objective::CapitalBudgeting;
pub use qubo::{kernel_qubo, seed_qubo};
pub use solve::{gama_solve, GamaConfig, GamaReport, SeedRun, StageTimes};
