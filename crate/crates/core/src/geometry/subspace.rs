use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::scalar::Scalar;

/// Linear subspace of R^n given by an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vector<T>>,
}

impl<T: Scalar> Subspace<T> {
    /// Checks that `basis` is orthonormal within `1e-12`.
    pub fn new(ambient: usize, basis: Vec<Vector<T>>) -> Result<Self> {
        let tol = T::tol(1e-12, 64.0);
        if basis.len() > ambient {
            return Err(Error::InvalidSubspace("more basis vectors than dimensions".into()));
        }
        for (i, b) in basis.iter().enumerate() {
            if b.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: b.len() });
            }
            for (j, c) in basis.iter().enumerate().skip(i) {
                let want = if i == j { T::one() } else { T::zero() };
                if (linalg::dot(b, c) - want).abs() > tol {
                    return Err(Error::InvalidSubspace(format!("basis not orthonormal at ({i}, {j})")));
                }
            }
        }
        Ok(Self { ambient, basis })
    }

    /// Span of arbitrary vectors (orthonormalized with pivoted Gram-Schmidt).
    pub fn span(ambient: usize, vectors: &[Vector<T>]) -> Self {
        let basis =
            if vectors.is_empty() { Vec::new() } else { linalg::orthonormal_basis(vectors, T::tol(1e-10, 64.0)) };
        Self { ambient, basis }
    }

    /// Span of the listed coordinate axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Self {
        Self { ambient, basis: axes.iter().map(|&k| linalg::unit(ambient, k)).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.basis
    }

    pub fn orthogonal_complement(&self) -> Self {
        Self { ambient: self.ambient, basis: linalg::orthogonal_complement(&self.basis, self.ambient) }
    }

    pub fn distance(&self, v: &[T]) -> T {
        linalg::distance_to_span(&self.basis, v)
    }

    pub fn contains(&self, v: &[T], tol: T) -> bool {
        self.distance(v) <= tol
    }

    /// Coordinates of `v` in the basis (`B^t v`).
    pub fn coords(&self, v: &[T]) -> Vector<T> {
        self.basis.iter().map(|b| linalg::dot(b, v)).collect()
    }

    /// `B y`
    pub fn embed(&self, y: &[T]) -> Vector<T> {
        let mut x = vec![T::zero(); self.ambient];
        for (b, &c) in self.basis.iter().zip(y) {
            linalg::axpy(&mut x, c, b);
        }
        x
    }

    /// Orthogonal projector `B B^t`.
    pub fn projector(&self) -> Matrix<T> {
        let n = self.ambient;
        let mut p = vec![vec![T::zero(); n]; n];
        for b in &self.basis {
            for i in 0..n {
                for j in 0..n {
                    p[i][j] = p[i][j] + b[i] * b[j];
                }
            }
        }
        p
    }

    /// Same subspace, compared through projectors.
    pub fn same_as(&self, other: &Self, tol: T) -> bool {
        if self.ambient != other.ambient || self.dim() != other.dim() {
            return false;
        }
        let (p, q) = (self.projector(), other.projector());
        p.iter().flatten().zip(q.iter().flatten()).all(|(&a, &b)| (a - b).abs() <= tol)
    }

    /// `ξ ∩ τ = {0}` and `dim ξ + dim τ = n`.
    pub fn is_complementary(&self, other: &Self) -> bool {
        if self.dim() + other.dim() != self.ambient {
            return false;
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        linalg::rank(&all, T::tol(1e-10, 64.0)) == self.ambient
    }
}
