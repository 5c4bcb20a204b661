use crate::error::{Error, Result};
use crate::geometry::{build_wulff_body, DirectionSet, Polytope, Subspace, SupportVector};
use crate::linalg::{self, Matrix, Vector};
use crate::scalar::Scalar;

/// Image `φP` of the polytope under an invertible linear map.
///
/// The halfspace `u·x <= h` maps to `(φ^{-t}u)·x <= h`; normals are
/// renormalized and offsets divided by `|φ^{-t}u|`, then the body is
/// rebuilt.
pub fn apply_linear_map<T: Scalar>(p: &Polytope<T>, map: &Matrix<T>) -> Result<Polytope<T>> {
    let n = p.dim();
    if map.len() != n || map.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: map.len() });
    }
    let det = linalg::det(map);
    if !(det.abs() > T::tol(1e-12, 1e2)) {
        return Err(Error::SingularMap { det: det.as_f64() });
    }
    let inv = linalg::inverse(map, T::zero()).ok_or(Error::SingularMap { det: det.as_f64() })?;
    let inv_t = linalg::transpose(&inv);
    let mut reps = Vec::with_capacity(p.directions().len());
    let mut support = Vec::with_capacity(p.directions().len());
    for (u, &h) in p.directions().reps().iter().zip(p.support().values()) {
        let w = linalg::mat_vec(&inv_t, u);
        let len = linalg::norm(&w);
        reps.push(linalg::scale(&w, T::one() / len));
        support.push(h / len);
    }
    let dirs = DirectionSet::new(n, reps)?;
    let h = SupportVector::new(&dirs, support)?;
    build_wulff_body(&dirs, &h)
}

/// `P × Q` in R^{a+b}.
pub fn cartesian_product<T: Scalar>(p: &Polytope<T>, q: &Polytope<T>) -> Result<Polytope<T>> {
    let (a, b) = (p.dim(), q.dim());
    let mut reps: Vec<Vector<T>> = Vec::new();
    for u in p.directions().reps() {
        let mut v = u.clone();
        v.resize(a + b, T::zero());
        reps.push(v);
    }
    for u in q.directions().reps() {
        let mut v = vec![T::zero(); a];
        v.extend_from_slice(u);
        reps.push(v);
    }
    let mut support = p.support().values().to_vec();
    support.extend_from_slice(q.support().values());
    let dirs = DirectionSet::new(a + b, reps)?;
    let h = SupportVector::new(&dirs, support)?;
    build_wulff_body(&dirs, &h)
}

/// `L(P) + L'(Q)` for injective linear maps `L: R^a -> R^n` and
/// `L': R^b -> R^n` given by their columns, with `a + b = n`. Equal to the
/// image of `P × Q` under `[L | L']`.
pub fn sum_of_linear_images<T: Scalar>(
    p: &Polytope<T>,
    p_columns: &[Vector<T>],
    q: &Polytope<T>,
    q_columns: &[Vector<T>],
) -> Result<Polytope<T>> {
    if p_columns.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: p_columns.len() });
    }
    if q_columns.len() != q.dim() {
        return Err(Error::DimensionMismatch { expected: q.dim(), found: q_columns.len() });
    }
    let mut columns = p_columns.to_vec();
    columns.extend_from_slice(q_columns);
    let n = p.dim() + q.dim();
    if columns.iter().any(|c| c.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: columns[0].len() });
    }
    let map = linalg::from_columns(&columns);
    apply_linear_map(&cartesian_product(p, q)?, &map)
}

/// Minkowski sum of `P ⊂ σ` and `Q ⊂ τ` for complementary subspaces.
///
/// `P` and `Q` are given in the orthonormal coordinates of `σ` and `τ`
/// (so `P.dim() == σ.dim()`); the result lives in the ambient space. Its
/// vertices are the extreme pairwise sums and its facet normals lie in
/// `σ^⊥ ∪ τ^⊥`.
pub fn direct_sum<T: Scalar>(
    p: &Polytope<T>,
    sigma: &Subspace<T>,
    q: &Polytope<T>,
    tau: &Subspace<T>,
) -> Result<Polytope<T>> {
    if sigma.ambient() != tau.ambient() || p.dim() != sigma.dim() || q.dim() != tau.dim() {
        return Err(Error::NotComplementary);
    }
    if !sigma.is_complementary(tau) {
        return Err(Error::NotComplementary);
    }
    sum_of_linear_images(p, sigma.basis(), q, tau.basis()).map_err(|e| match e {
        Error::SingularMap { .. } => Error::NotComplementary,
        other => other,
    })
}
