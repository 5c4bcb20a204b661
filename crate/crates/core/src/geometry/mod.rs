//! Polytope geometry: Wulff shapes, facet data, measures and linear images.

mod directions;
mod measures;
mod polytope;
mod subspace;
mod transform;
mod wulff;

pub use directions::{DirectionSet, SupportVector};
pub use measures::{cone_volume_measure, lp_surface_measure};
pub use polytope::{Facet, Polytope, Side};
pub use subspace::Subspace;
pub use transform::{apply_linear_map, cartesian_product, direct_sum, sum_of_linear_images};
pub use wulff::{build_wulff_body, build_wulff_body_with, WulffTolerances};
