//! The Yokonuma-Hecke algebra `Y_{d,n}(q)` in the basis `t^a g_w` and its
//! Markov trace with generic parameters `z, x_1, ..., x_{d-1}`.

mod element;
mod trace;

pub use element::{Generator, YElement, YMonomial, YokonumaAlgebra};
pub use trace::{specialize_trace, x_var, TraceValue, YTracer};
