//! Cone-volume and L_p surface area measures of origin-symmetric polytopes,
//! the subspace concentration condition for discrete even measures, and
//! reconstruction of a polytope with a prescribed cone-volume measure.
//!
//! Everything is generic over a [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below are the double-precision instantiations used by the CLI.
//!
//! ```
//! use logmink::{solve, DiscreteMeasure64, SolveConfig64};
//!
//! let s = 1.0 / 3f64.sqrt();
//! let mu = DiscreteMeasure64::from_pairs(
//!     2,
//!     vec![(vec![1.0, 0.0], 1.1 * s), (vec![0.5, 0.75f64.sqrt()], 0.9 * s), (vec![-0.5, 0.75f64.sqrt()], 1.1 * s)],
//! )?;
//! let result = solve(&mu, &SolveConfig64::default())?;
//! assert!(result.residual <= 1e-8);
//! println!("volume {}", result.body.volume());
//! # Ok::<(), logmink::Error>(())
//! ```

// `!(x > 0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod measure;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{
    apply_linear_map, build_wulff_body, cone_volume_measure, direct_sum, lp_surface_measure, DirectionSet, Facet,
    Polytope, Side, Subspace, SupportVector,
};
pub use measure::{
    alpha_beta, check_subspace_concentration, restrict_measure, AlphaBetaResult, ConcentrationReport,
    ConcentrationStatus, DiscreteMeasure,
};
pub use scalar::Scalar;
pub use solver::{solve, SolveConfig, SolvePath, SolveResult};

pub type DirectionSet64 = DirectionSet<f64>;
pub type SupportVector64 = SupportVector<f64>;
pub type Polytope64 = Polytope<f64>;
pub type Subspace64 = Subspace<f64>;
pub type DiscreteMeasure64 = DiscreteMeasure<f64>;
pub type ConcentrationReport64 = ConcentrationReport<f64>;
pub type SolveConfig64 = SolveConfig<f64>;
pub type SolveResult64 = SolveResult<f64>;

pub type Polytope32 = Polytope<f32>;
pub type DiscreteMeasure32 = DiscreteMeasure<f32>;
pub type SolveResult32 = SolveResult<f32>;
