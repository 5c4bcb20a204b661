use crate::geometry::{Polytope, Subspace};
use crate::linalg::Vector;
use crate::measure::DiscreteMeasure;
use crate::scalar::Scalar;

/// One accepted descent iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry<T> {
    pub iteration: usize,
    /// `M_0` at the accepted iterate.
    pub objective: T,
    pub residual: T,
    pub step: T,
}

/// How a body was obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum SolvePath<T> {
    /// One-dimensional base case `[-v, v]`.
    Segment,
    /// Variational minimization (strict subspace concentration).
    Strict,
    /// Equality case: direct sum of two lower-dimensional solutions.
    Decomposed(Box<DecompositionNode<T>>),
}

/// Equality-case split `R^n = ξ ⊕ ξ'`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionNode<T> {
    pub xi: Subspace<T>,
    pub xi_prime: Subspace<T>,
    /// Target scale: children solve `a·μ_ξ` and `a·μ_ξ'`.
    pub a: T,
    /// Reciprocal cosine of the angle between `ξ` and `ξ'^⊥`.
    pub r: T,
    /// Body `C` for `a·μ_ξ`, in the coordinates of `ξ`.
    pub xi_result: SolveResult<T>,
    /// Body `C'` for `a·μ_ξ'`, in the coordinates of `ξ'`.
    pub xi_prime_result: SolveResult<T>,
    /// Vertices of the lift `D ⊂ ξ'^⊥` of `C`.
    pub lifted: Vec<Vector<T>>,
    /// Vertices of the lift `D' ⊂ ξ^⊥` of `C'`.
    pub lifted_prime: Vec<Vector<T>>,
}

impl<T: Scalar> DecompositionNode<T> {
    /// `(m(n−m)/n²)·r·a²·|μ|`, which the construction sets to 1.
    pub fn normalization(&self, total: T) -> T {
        let n = T::from_usize_lossy(self.xi.ambient());
        let m = T::from_usize_lossy(self.xi.dim());
        m * (n - m) / (n * n) * self.r * self.a * self.a * total
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult<T> {
    /// Reconstructed body, scaled so that `V = |μ|`.
    pub body: Polytope<T>,
    /// Cone-volume measure of `body`, recomputed from scratch.
    pub achieved_measure: DiscreteMeasure<T>,
    /// `max_i |v̂_i − v_i| / |μ|`.
    pub residual: T,
    /// `Φ_μ(body)`.
    pub objective: T,
    pub iterations: usize,
    pub path: SolvePath<T>,
    pub trace: Vec<TraceEntry<T>>,
}
