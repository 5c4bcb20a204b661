use crate::error::{Error, Result};
use crate::geometry::{DirectionSet, Subspace};
use crate::linalg::{self, Vector};
use crate::scalar::Scalar;

/// One antipodal pair of the support: the rep `u` and the mass carried by
/// each of `u` and `-u`.
#[derive(Debug, Clone, PartialEq)]
pub struct Atom<T> {
    pub u: Vector<T>,
    pub mass: T,
}

/// Even measure on S^{n-1} with finite support.
///
/// `total` counts both poles of every pair: `total == 2 Σ mass`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure<T> {
    dim: usize,
    support: Vec<Atom<T>>,
    total: T,
}

/// Result of the first-moment (closure) diagnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstMoment<T> {
    pub vector: Vector<T>,
    pub residual: T,
    pub pass: bool,
}

impl<T: Scalar> DiscreteMeasure<T> {
    /// Normalizes the vectors and merges antipodal duplicates by summing
    /// their masses (the first occurrence fixes the orientation of the rep).
    pub fn from_pairs(dim: usize, pairs: Vec<(Vector<T>, T)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyMeasure);
        }
        let merge_tol = T::tol(1e-12, 64.0);
        let mut support: Vec<Atom<T>> = Vec::new();
        for (index, (v, mass)) in pairs.into_iter().enumerate() {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            if !(mass > T::zero()) || !mass.is_finite() {
                return Err(Error::ZeroMass { index, mass: mass.as_f64() });
            }
            let u = linalg::normalized(&v).ok_or(Error::ZeroVector { index })?;
            match support.iter_mut().find(|a| linalg::dot(&a.u, &u).abs() > T::one() - merge_tol) {
                Some(atom) => atom.mass = atom.mass + mass,
                None => support.push(Atom { u, mass }),
            }
        }
        Ok(Self::from_atoms(dim, support))
    }

    /// Atoms must already be unit, distinct and positive.
    pub(crate) fn from_atoms(dim: usize, support: Vec<Atom<T>>) -> Self {
        let total = T::lit(2.0) * support.iter().map(|a| a.mass).sum::<T>();
        Self { dim, support, total }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom<T>] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// `|μ| = μ(S^{n-1})`.
    pub fn total(&self) -> T {
        self.total
    }

    pub fn masses(&self) -> Vec<T> {
        self.support.iter().map(|a| a.mass).collect()
    }

    pub fn directions(&self) -> Result<DirectionSet<T>> {
        DirectionSet::new(self.dim, self.support.iter().map(|a| a.u.clone()).collect())
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self::from_atoms(
            self.dim,
            self.support.iter().map(|a| Atom { u: a.u.clone(), mass: a.mass * factor }).collect(),
        )
    }

    /// `μ(ξ ∩ S^{n-1})`, both poles counted.
    pub fn mass_in(&self, xi: &Subspace<T>, tol: T) -> T {
        T::lit(2.0) * self.support.iter().filter(|a| xi.contains(&a.u, tol)).map(|a| a.mass).sum::<T>()
    }

    /// Rank of the support vectors.
    pub fn support_rank(&self) -> usize {
        let v: Vec<Vector<T>> = self.support.iter().map(|a| a.u.clone()).collect();
        linalg::rank(&v, T::tol(1e-10, 64.0))
    }

    /// Mass of the atom parallel to `u`, or zero.
    pub fn mass_at(&self, u: &[T], tol: T) -> T {
        self.support.iter().find(|a| linalg::dot(&a.u, u).abs() > T::one() - tol).map_or(T::zero(), |a| a.mass)
    }

    /// Σ mass·u over the even extension; zero for every even measure.
    pub fn check_first_moment(&self) -> FirstMoment<T> {
        let mut vector = vec![T::zero(); self.dim];
        for a in &self.support {
            for (s, &ui) in vector.iter_mut().zip(&a.u) {
                *s = *s + (a.mass * ui + a.mass * (-ui));
            }
        }
        let residual = linalg::norm(&vector);
        FirstMoment { pass: residual <= T::tol(1e-9, 1e3) * self.total, vector, residual }
    }

    /// Largest per-direction mass discrepancy relative to `|self|`; atoms of
    /// either measure without a counterpart count in full.
    pub fn residual_against(&self, other: &Self) -> T {
        let tol = T::tol(1e-9, 1e3);
        let mut worst = T::zero();
        for a in &self.support {
            worst = worst.max((a.mass - other.mass_at(&a.u, tol)).abs());
        }
        for b in &other.support {
            if self.mass_at(&b.u, tol) == T::zero() {
                worst = worst.max(b.mass);
            }
        }
        worst / self.total
    }
}

/// First moment of a raw (un-merged, not even-extended) list of weighted
/// directions: `Σ mass·u/|u|`. Used on facet-area data, where it vanishes
/// because the boundary is closed.
pub fn first_moment_of_pairs<T: Scalar>(dim: usize, pairs: &[(Vector<T>, T)]) -> Result<FirstMoment<T>> {
    let mut vector = vec![T::zero(); dim];
    let mut total = T::zero();
    for (index, (v, mass)) in pairs.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
        }
        let u = linalg::normalized(v).ok_or(Error::ZeroVector { index })?;
        linalg::axpy(&mut vector, *mass, &u);
        total = total + mass.abs();
    }
    let residual = linalg::norm(&vector);
    Ok(FirstMoment { pass: residual <= T::tol(1e-9, 1e3) * total, vector, residual })
}
