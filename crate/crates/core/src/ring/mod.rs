//! Exact arithmetic: rationals, Laurent polynomials in `q`, cyclotomic
//! numbers, sparse multivariate Laurent polynomials and rational functions.
//!
//! Nothing in this module touches floating point.

mod coeff;
mod cyclotomic;
mod laurent;
mod poly;
mod qfield;
mod ratfun;
mod unipoly;

pub use coeff::{rat, Coeff, Rational};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use laurent::LaurentQ;
pub use poly::{Monomial, Poly, Var};
pub use qfield::QFn;
pub use ratfun::RationalFunction;
pub use unipoly::UniPoly;
