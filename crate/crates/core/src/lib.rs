//! Exact truncated formal power series and Lagrange inversion.
//!
//! - [`exactnum`]: canonical big-integer rationals, the coefficient field.
//! - [`series`]: truncated series with ring operations, derivative,
//!   reciprocal and composition.
//! - [`lagrange`]: the solver for `A = x * phi(A)`, coefficient extraction by
//!   Lagrange inversion, a division-free identity checker and compositional
//!   inverses.
//! - [`enumerate`]: independent integer counts of t-ary trees and forests.
//! - [`cli`]: the `lagrange` command-line tool.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod exactnum;
pub mod lagrange;
pub mod series;

pub use error::{Error, Result};
pub use exactnum::Rational;
pub use series::Series;
