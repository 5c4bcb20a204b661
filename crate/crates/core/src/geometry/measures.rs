use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::measure::{Atom, DiscreteMeasure};
use crate::scalar::Scalar;

fn ensure_origin_interior<T: Scalar>(p: &Polytope<T>) -> Result<()> {
    match p.support().values().iter().position(|&h| !(h > T::zero())) {
        Some(index) => Err(Error::OriginNotInterior { index, value: p.support().values()[index].as_f64() }),
        None => Ok(()),
    }
}

/// Cone-volume measure: mass `(1/n) h_i S_i` at `±u_i`; inactive
/// directions are dropped.
pub fn cone_volume_measure<T: Scalar>(p: &Polytope<T>) -> Result<DiscreteMeasure<T>> {
    ensure_origin_interior(p)?;
    let n = T::from_usize_lossy(p.dim());
    Ok(weighted_facet_measure(p, |h, s| h * s / n))
}

/// L_p surface area measure: mass `h_i^(1-p) S_i`.
pub fn lp_surface_measure<T: Scalar>(p: &Polytope<T>, exponent: T) -> Result<DiscreteMeasure<T>> {
    ensure_origin_interior(p)?;
    let one_minus_p = T::one() - exponent;
    Ok(weighted_facet_measure(p, |h, s| h.powf(one_minus_p) * s))
}

fn weighted_facet_measure<T: Scalar>(p: &Polytope<T>, weight: impl Fn(T, T) -> T) -> DiscreteMeasure<T> {
    let atoms = (0..p.directions().len())
        .filter(|&i| p.is_active(i))
        .map(|i| Atom { u: p.directions().rep(i).to_vec(), mass: weight(p.support().values()[i], p.facet_area(i)) })
        .collect();
    DiscreteMeasure::from_atoms(p.dim(), atoms)
}
