//! Exact sparse multivariate polynomials over the Gaussian rationals.

mod coefficient;
mod linsolve;
mod monomial;
mod polynomial;
mod substitution;

pub use coefficient::{fmt_rational, rat, rat_int, Coefficient, Rational};
pub use linsolve::solve_linear;
pub use monomial::{default_names, MultiIndex};
pub use polynomial::{vanishing_order, Polynomial};
pub use substitution::{substitute, Substitution, SubstitutionStep};
