//! QUBO and Ising models, exact conversions and the exhaustive oracle.

mod enumerate;
mod model;
mod text;
mod transform;

pub use enumerate::{brute_force, brute_force_ising, Enumeration, MAX_ENUMERATION_VARS, MAX_LISTED_ARGMINS};
pub use model::{bits_to_spins, ising_to_qubo, qubo_to_ising, spins_to_bits, IsingModel, QuboModel};
pub use text::{parse_ising, parse_qubo, write_ising, write_qubo};
pub use transform::{
    chain_duplicate, chain_intact, chain_spins, cut_weight, incident_weight, maxcut_to_ising, qubo_to_ilp,
    LinearizedQubo,
};
