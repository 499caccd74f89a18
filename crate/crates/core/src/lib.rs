//! Exact computation of link invariants coming from the Yokonuma-Hecke
//! algebra, the algebra of braids and ties, and the framization of the
//! Temperley-Lieb algebra.

pub mod braid;
pub mod error;
pub mod esystem;
pub mod invariants;
pub mod quotients;
pub mod ring;
pub mod ties;
pub mod verify;
pub mod yokonuma;

pub use braid::{parse_braid, BraidWord, FramedBraidWord, LinkRecord};
pub use error::{Error, Result};
pub use esystem::{esystem_solution, ESystemSolution};
pub use invariants::{invariant, InvariantKind, InvariantPolynomial, InvariantSpec};
pub use ring::{Cyclotomic, Poly, Rational};
pub use verify::{run_suite, CheckResult, Suite, VerifyConfig};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 16;
