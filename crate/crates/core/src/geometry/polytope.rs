use crate::error::{Error, Result};
use crate::geometry::directions::{DirectionSet, SupportVector};
use crate::linalg::{self, Vector};
use crate::scalar::Scalar;

/// Which member of the antipodal pair a facet belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign<T: Scalar>(self) -> T {
        match self {
            Side::Plus => T::one(),
            Side::Minus => -T::one(),
        }
    }
}

/// Facet record. Inactive directions are kept with `area == 0` and an
/// empty or lower-dimensional vertex list.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet<T> {
    /// Index into the polytope's [`DirectionSet`].
    pub direction: usize,
    pub side: Side,
    /// Support number of the halfspace `side·u·x <= offset`.
    pub offset: T,
    /// (n-1)-dimensional volume.
    pub area: T,
    /// Vertex indices; counter-clockwise seen from outside for n = 3.
    pub vertices: Vec<usize>,
}

/// Origin-symmetric polytope given as the Wulff shape of an even support
/// vector, with its vertices, facets and volume.
///
/// Facets are stored in pairs: `facets[2i]` is the `+u_i` facet and
/// `facets[2i + 1]` the `-u_i` facet. Vertices come in pairs too:
/// `vertices[2k + 1] == -vertices[2k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope<T> {
    pub(crate) dirs: DirectionSet<T>,
    pub(crate) support: SupportVector<T>,
    pub(crate) vertices: Vec<Vector<T>>,
    pub(crate) facets: Vec<Facet<T>>,
    pub(crate) volume: T,
}

impl<T: Scalar> Polytope<T> {
    pub fn dim(&self) -> usize {
        self.dirs.dim()
    }

    pub fn directions(&self) -> &DirectionSet<T> {
        &self.dirs
    }

    /// The support numbers the body was built from (may exceed the true
    /// support function on inactive directions).
    pub fn support(&self) -> &SupportVector<T> {
        &self.support
    }

    pub fn vertices(&self) -> &[Vector<T>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    pub fn volume(&self) -> T {
        self.volume
    }

    /// Facet area of the pair `±u_i` (the two members agree by symmetry;
    /// the mean absorbs rounding).
    pub fn facet_area(&self, i: usize) -> T {
        let two = T::lit(2.0);
        (self.facets[2 * i].area + self.facets[2 * i + 1].area) / two
    }

    pub fn facet_areas(&self) -> Vec<T> {
        (0..self.dirs.len()).map(|i| self.facet_area(i)).collect()
    }

    pub fn is_active(&self, i: usize) -> bool {
        self.facet_area(i) > T::zero()
    }

    /// Outer unit normal of a facet.
    pub fn normal(&self, facet: &Facet<T>) -> Vector<T> {
        linalg::scale(self.dirs.rep(facet.direction), facet.side.sign())
    }

    /// `(1/n) Σ h_F S_F` over all facets of both signs.
    pub fn volume_from_facets(&self) -> T {
        let n = T::from_usize_lossy(self.dim());
        self.facets.iter().map(|f| f.offset * f.area).sum::<T>() / n
    }

    pub fn diameter(&self) -> T {
        let r = self.vertices.iter().fold(T::zero(), |m, v| m.max(linalg::norm(v)));
        r * T::lit(2.0)
    }

    /// `h_P(x) = max_v x·v`.
    pub fn support_eval(&self, x: &[T]) -> T {
        self.vertices.iter().map(|v| linalg::dot(v, x)).fold(T::neg_infinity(), T::max)
    }

    /// `ρ_P(x) = max{λ >= 0 : λx ∈ P}`.
    pub fn radial_eval(&self, x: &[T]) -> Result<T> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        if linalg::norm(x) == T::zero() {
            return Err(Error::ZeroDirection);
        }
        let mut best = T::infinity();
        for (u, &h) in self.dirs.reps().iter().zip(self.support.values()) {
            let d = linalg::dot(u, x).abs();
            if d > T::zero() {
                best = best.min(h / d);
            }
        }
        Ok(best)
    }

    /// Negation-closure check on the vertex set.
    pub fn is_origin_symmetric(&self, tol: T) -> bool {
        self.vertices.iter().all(|v| {
            let neg = linalg::scale(v, -T::one());
            self.vertices.iter().any(|w| linalg::norm_inf(&linalg::sub(w, &neg)) <= tol)
        })
    }

    /// Every vertex satisfies `|x·u_i| <= h_i + tol`.
    pub fn contains_vertices_within(&self, tol: T) -> bool {
        self.vertices.iter().all(|v| {
            self.dirs.reps().iter().zip(self.support.values()).all(|(u, &h)| linalg::dot(u, v).abs() <= h + tol)
        })
    }
}
