//! Groebner bases and the solvers built on them.

mod bpt;
mod buchberger;
mod coloring;
mod toric;

pub use bpt::{bpt_solve, bpt_solve_with};
pub use buchberger::{buchberger, buchberger_with, is_infeasible, GroebnerBasis, Ideal, Limits};
pub use coloring::{coloring_system, is_k_colorable, is_k_colorable_with};
pub use toric::{cost_order, ct_basis, ct_solve, ct_solve_with, ct_toric_ideal, ToricIp};
