//! The algebra of braids and ties `ℰ_n(q)` in the basis `E_P b_w`
//! (set partition `P`, permutation `w`), its Markov trace with symbolic `E`,
//! and the comparison map into `Y_{d,n}(q)`.

mod element;
mod partition;
mod trace;

pub use element::{EElement, EGenerator, TiedMonomial};
pub use partition::SetPartition;
pub use trace::{phi_map, ETracer};
