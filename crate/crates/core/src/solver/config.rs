use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Knobs of [`solve`](crate::solver::solve) and
/// [`minimize_strict`](crate::solver::minimize_strict).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig<T> {
    /// Success threshold on `max_i |v̂_i − v_i| / |μ|`.
    pub tol_residual: T,
    pub max_iters: usize,
    /// Sufficient-decrease constant of the Armijo test.
    pub armijo_c: T,
    /// Step shrink factor in `(0, 1)`.
    pub backtrack_ratio: T,
    /// Cap on `h_max / h_min` before the run is declared divergent.
    pub divergence_ratio: T,
    /// Equality band of the concentration check, relative to `|μ|`.
    pub equality_tol: T,
}

impl<T: Scalar> Default for SolveConfig<T> {
    fn default() -> Self {
        Self {
            tol_residual: T::tol(1e-8, 1e3),
            max_iters: 10_000,
            armijo_c: T::lit(1e-4),
            backtrack_ratio: T::lit(0.5),
            divergence_ratio: T::lit(1e8),
            equality_tol: T::tol(1e-9, 1e3),
        }
    }
}

impl<T: Scalar> SolveConfig<T> {
    pub fn validate(&self) -> Result<()> {
        let positive = [self.tol_residual, self.armijo_c, self.divergence_ratio, self.equality_tol];
        if positive.iter().any(|&v| !(v > T::zero())) || self.max_iters == 0 {
            return Err(Error::PreconditionViolated("solver settings must be positive".into()));
        }
        if !(self.backtrack_ratio > T::zero() && self.backtrack_ratio < T::one()) {
            return Err(Error::PreconditionViolated("backtrack_ratio must lie in (0, 1)".into()));
        }
        Ok(())
    }
}
