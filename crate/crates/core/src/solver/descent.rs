//! Strict case: minimize `log M_0` over `y = log h` by gradient descent.
//!
//! With `c_i = v_i/|μ|` the objective is
//! `F(y) = −(1/n) log V(e^y) + Σ 2 c_i y_i`, whose gradient is
//! `∂F/∂y_i = 2 c_i − 2 h_i S_i/(nV)`: the mismatch between the target and
//! the current normalized cone volumes. Trial steps use the Barzilai-Borwein
//! length capped at `MAX_LOG_STEP`, followed by Armijo backtracking.

use crate::error::{Error, Result};
use crate::geometry::{build_wulff_body, cone_volume_measure, DirectionSet, Polytope, SupportVector};
use crate::linalg;
use crate::measure::{check_subspace_concentration, DiscreteMeasure};
use crate::scalar::Scalar;
use crate::solver::functional::log_functional;
use crate::solver::{SolveConfig, SolvePath, SolveResult, TraceEntry};

/// Largest change of any `log h_i` in one step.
const MAX_LOG_STEP: f64 = 1.0;
/// Relative size of objective differences treated as rounding noise.
const NOISE_FLOOR: f64 = 1e-13;

struct Iterate<T> {
    y: Vec<T>,
    f: T,
    grad: Vec<T>,
    residual: T,
}

struct Objective<'a, T> {
    dirs: &'a DirectionSet<T>,
    weights: Vec<T>,
    dim: T,
}

impl<T: Scalar> Objective<'_, T> {
    fn eval(&self, y: Vec<T>) -> Result<(Iterate<T>, Polytope<T>)> {
        let h = SupportVector::new(self.dirs, y.iter().map(|v| v.exp()).collect())?;
        let body = build_wulff_body(self.dirs, &h)?;
        let v = body.volume();
        let two = T::lit(2.0);
        let mut f = -v.ln() / self.dim;
        let mut grad = Vec::with_capacity(y.len());
        let mut residual = T::zero();
        for (i, (&yi, &c)) in y.iter().zip(&self.weights).enumerate() {
            f = f + two * c * yi;
            let share = h.values()[i] * body.facet_area(i) / (self.dim * v);
            grad.push(two * (c - share));
            residual = residual.max((c - share).abs());
        }
        Ok((Iterate { y, f, grad, residual }, body))
    }
}

/// Minimizes `M_0` for a measure meant to satisfy the strict subspace
/// concentration inequality, starting from `h = 1`.
///
/// No concentration check is made up front; on measures outside the strict
/// regime the support numbers blow up and the run stops with
/// [`Error::DivergenceDetected`].
pub fn minimize_strict<T: Scalar>(mu: &DiscreteMeasure<T>, cfg: &SolveConfig<T>) -> Result<SolveResult<T>> {
    cfg.validate()?;
    if mu.is_empty() {
        return Err(Error::EmptyMeasure);
    }
    let n = mu.dim();
    let rank = mu.support_rank();
    if rank < n {
        return Err(Error::UnboundedBody { dim: n, rank });
    }
    let dirs = mu.directions()?;
    let objective = Objective {
        dirs: &dirs,
        weights: mu.atoms().iter().map(|a| a.mass / mu.total()).collect(),
        dim: T::from_usize_lossy(n),
    };

    let (mut cur, _) = objective.eval(vec![T::zero(); mu.len()])?;
    let mut prev: Option<(Vec<T>, Vec<T>)> = None;
    let mut trace = vec![TraceEntry { iteration: 0, objective: cur.f.exp(), residual: cur.residual, step: T::zero() }];
    let max_step = T::lit(MAX_LOG_STEP);
    let mut iterations = 0;
    let mut converged = cur.residual <= cfg.tol_residual;

    while !converged && iterations < cfg.max_iters {
        if log_ratio(&cur.y) > cfg.divergence_ratio.ln() {
            break;
        }
        let g_inf = linalg::norm_inf(&cur.grad);
        let g_sq = linalg::dot(&cur.grad, &cur.grad);
        let mut alpha = match &prev {
            Some((y_prev, g_prev)) => {
                let s = linalg::sub(&cur.y, y_prev);
                let d = linalg::sub(&cur.grad, g_prev);
                let sd = linalg::dot(&s, &d);
                if sd > T::zero() {
                    linalg::dot(&s, &s) / sd
                } else {
                    max_step / g_inf
                }
            }
            None => T::lit(0.5) / g_inf,
        };
        alpha = alpha.min(max_step / g_inf);

        let noise = T::tol(NOISE_FLOOR, 1e3) * cur.f.abs().max(T::one());
        let min_alpha = alpha * T::epsilon();
        let accepted = loop {
            let trial_y: Vec<T> = cur.y.iter().zip(&cur.grad).map(|(&y, &g)| y - alpha * g).collect();
            if let Ok((trial, _)) = objective.eval(trial_y) {
                let armijo = trial.f <= cur.f - cfg.armijo_c * alpha * g_sq;
                // below the rounding floor, fall back to the approximate
                // Armijo test on the directional derivative
                let approximate = (trial.f - cur.f).abs() <= noise
                    && linalg::dot(&trial.grad, &cur.grad) >= -(T::one() - T::lit(2.0) * cfg.armijo_c) * g_sq;
                if armijo || approximate {
                    break Some((trial, alpha));
                }
            }
            alpha = alpha * cfg.backtrack_ratio;
            if alpha < min_alpha {
                break None;
            }
        };
        let Some((next, step)) = accepted else {
            break;
        };
        iterations += 1;
        prev = Some((std::mem::take(&mut cur.y), std::mem::take(&mut cur.grad)));
        cur = next;
        trace.push(TraceEntry { iteration: iterations, objective: cur.f.exp(), residual: cur.residual, step });
        converged = cur.residual <= cfg.tol_residual;
    }

    if !converged {
        let hint = check_subspace_concentration(mu)
            .ok()
            .and_then(|r| r.most_concentrated().map(|rec| rec.subspace.basis().to_vec()))
            .unwrap_or_default();
        return Err(Error::DivergenceDetected {
            iterations,
            ratio: log_ratio(&cur.y).exp().as_f64(),
            residual: cur.residual.as_f64(),
            hint: hint.into_iter().map(|b| b.into_iter().map(|x| x.as_f64()).collect()).collect(),
        });
    }

    // rescale so that V = |μ|
    let h = SupportVector::new(&dirs, cur.y.iter().map(|v| v.exp()).collect())?;
    let body = build_wulff_body(&dirs, &h)?;
    let s = (mu.total() / body.volume()).powf(T::one() / objective.dim);
    let body = build_wulff_body(&dirs, &h.scaled(s))?;
    let achieved = cone_volume_measure(&body)?;
    Ok(SolveResult {
        residual: mu.residual_against(&achieved),
        objective: log_functional(mu, &body)?,
        achieved_measure: achieved,
        body,
        iterations,
        path: SolvePath::Strict,
        trace,
    })
}

/// `log(h_max / h_min)` for `h = e^y`.
fn log_ratio<T: Scalar>(y: &[T]) -> T {
    let (lo, hi) = y.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    hi - lo
}
