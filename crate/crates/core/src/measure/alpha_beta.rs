use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Output of [`alpha_beta`]: `β_i = α_i − λ` for `i < n`,
/// `β_n = α_n − λ − t`, with `λ = (1 − t)/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaBetaResult<T> {
    pub t: T,
    pub lambda: T,
    pub beta: Vec<T>,
    /// 1-based index attaining the largest partial average (0 when n = 1).
    pub i_max: usize,
}

impl<T: Scalar> AlphaBetaResult<T> {
    /// Checks the defining properties within `tol`: `t ∈ (0, 1]`,
    /// `λ = (1 − t)/n`, every proper prefix sum of β is `<= 0` and the full
    /// sum vanishes.
    pub fn satisfies_invariants(&self, alpha: &[T], tol: T) -> bool {
        let n = alpha.len();
        let nn = T::from_usize_lossy(n);
        let t_ok = self.t > T::zero() && self.t <= T::one() + tol;
        let lambda_ok = (self.lambda - (T::one() - self.t) / nn).abs() <= tol && self.lambda >= -tol;
        let defs_ok = (0..n).all(|i| {
            let want = if i + 1 < n { alpha[i] - self.lambda } else { alpha[i] - self.lambda - self.t };
            (self.beta[i] - want).abs() <= tol
        });
        let mut prefix = T::zero();
        let mut prefix_ok = true;
        for (i, &b) in self.beta.iter().enumerate() {
            prefix = prefix + b;
            if i + 1 < n && prefix > tol {
                prefix_ok = false;
            }
        }
        t_ok && lambda_ok && defs_ok && prefix_ok && prefix.abs() <= tol
    }
}

/// Given `α_i >= 0` with `Σ α = 1` and every proper partial average
/// `(α_1 + … + α_i)/i < 1/n`, sets `λ` to the largest partial average and
/// `t = 1 − nλ`.
pub fn alpha_beta<T: Scalar>(alpha: &[T]) -> Result<AlphaBetaResult<T>> {
    let n = alpha.len();
    if n == 0 {
        return Err(Error::PreconditionViolated("α must be nonempty".into()));
    }
    if let Some(i) = alpha.iter().position(|&a| !(a >= T::zero())) {
        return Err(Error::PreconditionViolated(format!("α_{} is negative", i + 1)));
    }
    let sum: T = alpha.iter().copied().sum();
    if (sum - T::one()).abs() > T::tol(1e-12, 16.0) {
        return Err(Error::PreconditionViolated(format!("Σα = {sum} ≠ 1")));
    }
    let nn = T::from_usize_lossy(n);
    let inv_n = T::one() / nn;
    let mut lambda = T::zero();
    let mut i_max = 0;
    let mut prefix = T::zero();
    for (i, &a) in alpha.iter().enumerate().take(n - 1) {
        prefix = prefix + a;
        let avg = prefix / T::from_usize_lossy(i + 1);
        if avg >= inv_n {
            return Err(Error::PreconditionViolated(format!(
                "partial average {avg} at i = {} is not below 1/n",
                i + 1
            )));
        }
        if i_max == 0 || avg > lambda {
            lambda = avg;
            i_max = i + 1;
        }
    }
    let t = T::one() - nn * lambda;
    let beta = alpha.iter().enumerate().map(|(i, &a)| if i + 1 < n { a - lambda } else { a - lambda - t }).collect();
    Ok(AlphaBetaResult { t, lambda, beta, i_max })
}
