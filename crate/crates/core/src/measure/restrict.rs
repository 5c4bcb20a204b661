use crate::error::{Error, Result};
use crate::geometry::Subspace;
use crate::linalg;
use crate::measure::{Atom, DiscreteMeasure};
use crate::scalar::Scalar;

/// `μ_ξ`: the part of `μ` on `ξ ∩ S^{n-1}`, written in the orthonormal
/// coordinates of `ξ` (an m-dimensional even measure). Masses are unchanged.
pub fn restrict_measure<T: Scalar>(mu: &DiscreteMeasure<T>, xi: &Subspace<T>) -> Result<DiscreteMeasure<T>> {
    restrict_with(mu, xi, T::tol(1e-9, 1e3), false)
}

/// Like [`restrict_measure`] but every support vector must lie in `ξ`.
pub fn express_in_subspace<T: Scalar>(mu: &DiscreteMeasure<T>, xi: &Subspace<T>) -> Result<DiscreteMeasure<T>> {
    restrict_with(mu, xi, T::tol(1e-9, 1e3), true)
}

fn restrict_with<T: Scalar>(
    mu: &DiscreteMeasure<T>,
    xi: &Subspace<T>,
    tol: T,
    require_all: bool,
) -> Result<DiscreteMeasure<T>> {
    if xi.ambient() != mu.dim() {
        return Err(Error::DimensionMismatch { expected: mu.dim(), found: xi.ambient() });
    }
    let mut atoms = Vec::new();
    for (index, a) in mu.atoms().iter().enumerate() {
        let distance = xi.distance(&a.u);
        if distance <= tol {
            let coords = xi.coords(&a.u);
            let u = linalg::normalized(&coords).ok_or(Error::ZeroVector { index })?;
            atoms.push(Atom { u, mass: a.mass });
        } else if require_all {
            return Err(Error::VectorOutsideSubspace { index, distance: distance.as_f64() });
        }
    }
    if atoms.is_empty() {
        return Err(Error::EmptyMeasure);
    }
    Ok(DiscreteMeasure::from_atoms(xi.dim(), atoms))
}
