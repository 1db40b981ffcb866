pub mod algebra;
pub mod anneal;
pub mod cli;
pub mod error;
pub mod gama;
pub mod graph;
pub mod graver;
pub mod groebner;
pub mod qubo;
pub mod reformulate;

pub use error::{Error, Result};
