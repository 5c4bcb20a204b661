//! Router and equality-case construction.
//!
//! Equality split `R^n = ξ ⊕ ξ'` with `dim ξ = m`: the children solve
//! `a·μ_ξ` in `ξ` and `a·μ_ξ'` in `ξ'`, giving `C` and `C'`. `C` is lifted
//! to `D ⊂ ξ'^⊥` along `ξ^⊥` (so `P_ξ D = C`) and `C'` to `D' ⊂ ξ^⊥` along
//! `ξ'^⊥`. With `r` the reciprocal of `|det P_ξ|` restricted to `ξ'^⊥` and
//! `a = n / sqrt(m(n−m)·r·|μ|)`, the cone-volume measure of `D + D'` is `μ`.

use crate::error::{Error, Result};
use crate::geometry::{build_wulff_body, cone_volume_measure, sum_of_linear_images, Subspace, SupportVector};
use crate::linalg::{self, Matrix, Vector};
use crate::measure::{
    check_subspace_concentration_with, restrict_measure, ConcentrationConfig, ConcentrationStatus, DiscreteMeasure,
};
use crate::scalar::Scalar;
use crate::solver::descent::minimize_strict;
use crate::solver::functional::log_functional;
use crate::solver::{DecompositionNode, SolveConfig, SolvePath, SolveResult};

/// Finds an origin-symmetric polytope whose cone-volume measure is `μ`.
///
/// Routes on the subspace concentration report: violations are errors,
/// strict measures go to [`minimize_strict`], equality cases are split on
/// the first equality pair and solved recursively.
pub fn solve<T: Scalar>(mu: &DiscreteMeasure<T>, cfg: &SolveConfig<T>) -> Result<SolveResult<T>> {
    cfg.validate()?;
    if mu.is_empty() || !(mu.total() > T::zero()) {
        return Err(Error::EmptyMeasure);
    }
    if mu.dim() == 1 {
        return solve_segment(mu);
    }
    let check_cfg = ConcentrationConfig { equality_tol: cfg.equality_tol, ..ConcentrationConfig::default() };
    let report = check_subspace_concentration_with(mu, &check_cfg)?;
    match report.status {
        ConcentrationStatus::Violated => {
            let rec = report.witness_record().expect("violated report carries a witness");
            Err(Error::ConditionViolated {
                dim: rec.subspace.dim(),
                witness: to_f64(rec.subspace.basis()),
                mass: rec.mass.as_f64(),
                bound: rec.bound.as_f64(),
            })
        }
        ConcentrationStatus::StrictlySatisfied => minimize_strict(mu, cfg),
        ConcentrationStatus::SatisfiedWithEquality => {
            let pair = &report.equality_pairs[0];
            let (body, node) = direct_sum_combine(mu, &pair.xi, &pair.xi_prime, cfg)?;
            let achieved = cone_volume_measure(&body)?;
            Ok(SolveResult {
                residual: mu.residual_against(&achieved),
                objective: log_functional(mu, &body)?,
                achieved_measure: achieved,
                body,
                iterations: node.xi_result.iterations + node.xi_prime_result.iterations,
                path: SolvePath::Decomposed(Box::new(node)),
                trace: Vec::new(),
            })
        }
    }
}

/// In R^1 the measure is one antipodal pair of mass `v`; the segment
/// `[-v, v]` has cone volume `v · 1` at each endpoint.
fn solve_segment<T: Scalar>(mu: &DiscreteMeasure<T>) -> Result<SolveResult<T>> {
    let dirs = mu.directions()?;
    let v = mu.atoms()[0].mass;
    let body = build_wulff_body(&dirs, &SupportVector::new(&dirs, vec![v])?)?;
    let achieved = cone_volume_measure(&body)?;
    Ok(SolveResult {
        residual: mu.residual_against(&achieved),
        objective: log_functional(mu, &body)?,
        achieved_measure: achieved,
        body,
        iterations: 0,
        path: SolvePath::Segment,
        trace: Vec::new(),
    })
}

/// Solves the two restricted problems and assembles `D + D'`.
pub fn direct_sum_combine<T: Scalar>(
    mu: &DiscreteMeasure<T>,
    xi: &Subspace<T>,
    xi_prime: &Subspace<T>,
    cfg: &SolveConfig<T>,
) -> Result<(crate::geometry::Polytope<T>, DecompositionNode<T>)> {
    let n = mu.dim();
    if xi.ambient() != n || xi_prime.ambient() != n || !xi.is_complementary(xi_prime) {
        return Err(Error::NotComplementary);
    }
    let m = xi.dim();
    let lift = Lift::new(xi, xi_prime)?;
    let lift_prime = Lift::new(xi_prime, xi)?;
    let r = T::one() / lift.det.abs();

    let nn = T::from_usize_lossy(n);
    let mm = T::from_usize_lossy(m);
    let a = nn / (mm * (nn - mm) * r * mu.total()).sqrt();

    let mu_xi = restrict_measure(mu, xi)?.scaled(a);
    let mu_xi_prime = restrict_measure(mu, xi_prime)?.scaled(a);
    let child = solve(&mu_xi, cfg)?;
    let child_prime = solve(&mu_xi_prime, cfg)?;

    let body = sum_of_linear_images(&child.body, &lift.columns, &child_prime.body, &lift_prime.columns).map_err(
        |e| match e {
            Error::SingularMap { det } => Error::LiftDegenerate { det },
            other => other,
        },
    )?;
    let lifted = child.body.vertices().iter().map(|v| lift.apply(v)).collect();
    let lifted_prime = child_prime.body.vertices().iter().map(|v| lift_prime.apply(v)).collect();
    let node = DecompositionNode {
        xi: xi.clone(),
        xi_prime: xi_prime.clone(),
        a,
        r,
        xi_result: child,
        xi_prime_result: child_prime,
        lifted,
        lifted_prime,
    };
    Ok((body, node))
}

/// Linear map from the coordinates of `σ` onto `τ^⊥` that inverts the
/// orthogonal projection onto `σ`: `P_σ(L y) = B_σ y`.
struct Lift<T> {
    columns: Vec<Vector<T>>,
    det: T,
}

impl<T: Scalar> Lift<T> {
    fn new(sigma: &Subspace<T>, tau: &Subspace<T>) -> Result<Self> {
        let target = tau.orthogonal_complement();
        let w = target.basis();
        // G = B_σ^t W
        let g: Matrix<T> = sigma.basis().iter().map(|b| w.iter().map(|wl| linalg::dot(b, wl)).collect()).collect();
        let det = linalg::det(&g);
        if !(det.abs() > T::tol(1e-12, 1e2)) {
            return Err(Error::LiftDegenerate { det: det.as_f64() });
        }
        let g_inv = linalg::inverse(&g, T::zero()).ok_or(Error::LiftDegenerate { det: det.as_f64() })?;
        // L = W G^{-1}
        let m = sigma.dim();
        let columns = (0..m)
            .map(|k| {
                let mut col = vec![T::zero(); sigma.ambient()];
                for (l, wl) in w.iter().enumerate() {
                    linalg::axpy(&mut col, g_inv[l][k], wl);
                }
                col
            })
            .collect();
        Ok(Self { columns, det })
    }

    fn apply(&self, y: &[T]) -> Vector<T> {
        let mut x = vec![T::zero(); self.columns[0].len()];
        for (c, &yi) in self.columns.iter().zip(y) {
            linalg::axpy(&mut x, yi, c);
        }
        x
    }
}

fn to_f64<T: Scalar>(basis: &[Vector<T>]) -> Vec<Vec<f64>> {
    basis.iter().map(|b| b.iter().map(|x| x.as_f64()).collect()).collect()
}
