//! Discrete even measures on the sphere and the subspace concentration
//! checker.

mod alpha_beta;
mod concentration;
mod discrete;
mod restrict;

pub use alpha_beta::{alpha_beta, AlphaBetaResult};
pub use concentration::{
    check_subspace_concentration, check_subspace_concentration_with, ConcentrationConfig, ConcentrationReport,
    ConcentrationStatus, EqualityPair, SubspaceRecord, Verdict,
};
pub use discrete::{first_moment_of_pairs, Atom, DiscreteMeasure, FirstMoment};
pub use restrict::{express_in_subspace, restrict_measure};
