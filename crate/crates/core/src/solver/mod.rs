//! Discrete even logarithmic Minkowski solver.

mod config;
mod decompose;
mod descent;
mod functional;
mod result;

pub use config::SolveConfig;
pub use decompose::{direct_sum_combine, solve};
pub use descent::minimize_strict;
pub use functional::{log_functional, m0_functional, volume_gradient};
pub use result::{DecompositionNode, SolvePath, SolveResult, TraceEntry};
