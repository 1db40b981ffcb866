//! Integer programs and their compilation to QUBO form.

mod compile;
mod encoding;
mod penalty;
mod quadratize;
mod system;

pub use compile::{compile_qubo, AncillaEntry, BoundEntry, CompileReport, Compiled, VariableEntry, VariableKind};
pub use encoding::{binarize, make_encoding, EncodingMap, Scheme};
pub use penalty::{inequality_to_equality, penalty_bound, squared_residual, PenaltyBound, PenaltyWeights};
pub use quadratize::{quadratize, rosenberg, Quadratization};
pub use system::ConstraintSystem;

#[cfg(test)]
pub(crate) use compile::tests::problem_one;
