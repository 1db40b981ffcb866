//! Integer kernels, Graver bases and augmentation along them.

mod augment;
mod lattice;
mod lawrence;
mod pottier;

pub use augment::{graver_augment, Augmentation, Objective, Strategy};
pub(crate) use lattice::{in_kernel, mat_vec};
pub use lattice::{conformal_leq, integer_kernel_basis, vector_normal_form, LatticeVector};
pub use lawrence::{lawrence_graver, lawrence_graver_with};
pub use pottier::{minimal_filter, pottier, pottier_with, GraverBasis, PottierOptions};
