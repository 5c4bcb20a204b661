use crate::error::{Error, Result};
use crate::geometry::{build_wulff_body, DirectionSet, Polytope, SupportVector};
use crate::measure::DiscreteMeasure;
use crate::scalar::Scalar;

/// `Φ_μ(P) = ∫ log h_P dμ`, summed over both poles of every atom.
pub fn log_functional<T: Scalar>(mu: &DiscreteMeasure<T>, p: &Polytope<T>) -> Result<T> {
    let mut total = T::zero();
    for (index, a) in mu.atoms().iter().enumerate() {
        let hp = p.support_eval(&a.u);
        let hm = p.support_eval(&a.u.iter().map(|&x| -x).collect::<Vec<_>>());
        if !(hp > T::zero()) || !(hm > T::zero()) {
            return Err(Error::OriginNotInterior { index, value: hp.min(hm).as_f64() });
        }
        total = total + a.mass * (hp.ln() + hm.ln());
    }
    Ok(total)
}

/// Position of each atom of `mu` in `dirs`.
pub(crate) fn match_directions<T: Scalar>(mu: &DiscreteMeasure<T>, dirs: &DirectionSet<T>) -> Result<Vec<usize>> {
    let tol = T::tol(1e-12, 64.0);
    mu.atoms()
        .iter()
        .enumerate()
        .map(|(index, a)| dirs.find(&a.u, tol).ok_or(Error::DirectionNotFound { index }))
        .collect()
}

/// `M_0(h) = V(h)^{-1/n} exp(∫ log h dμ/|μ|)`; invariant under `h -> s·h`.
///
/// `h` is indexed by `dirs`, which must contain every support direction of
/// `mu`.
pub fn m0_functional<T: Scalar>(mu: &DiscreteMeasure<T>, dirs: &DirectionSet<T>, h: &SupportVector<T>) -> Result<T> {
    let idx = match_directions(mu, dirs)?;
    let body = build_wulff_body(dirs, h)?;
    let n = T::from_usize_lossy(dirs.dim());
    let two = T::lit(2.0);
    let exponent: T = mu.atoms().iter().zip(&idx).map(|(a, &j)| two * a.mass / mu.total() * h.values()[j].ln()).sum();
    Ok(body.volume().powf(-T::one() / n) * exponent.exp())
}

/// `∂V/∂h_i = 2 S_i`: both facets of the pair `±u_i` move with `h_i`.
pub fn volume_gradient<T: Scalar>(dirs: &DirectionSet<T>, h: &SupportVector<T>) -> Result<Vec<T>> {
    let body = build_wulff_body(dirs, h)?;
    let two = T::lit(2.0);
    Ok(body.facet_areas().into_iter().map(|s| two * s).collect())
}
