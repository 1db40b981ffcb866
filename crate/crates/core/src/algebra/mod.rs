//! Exact rational polynomial algebra.

mod division;
mod monomial;
mod order;
mod polynomial;
pub mod rational_text;
mod text;

pub(crate) use division::Sorted;
pub use division::{reduce, s_polynomial, Division};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{ratio, rational, to_f64, LeadingParts, Polynomial};
pub use text::{
    format_polynomial, format_primitive, format_rational, parse_polynomial, parse_polynomial_list, parse_rational,
    VarNames,
};

/// Exact rational number: reduced, with a positive denominator.
pub type Rational = num_rational::BigRational;
