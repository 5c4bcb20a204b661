use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::scalar::Scalar;

/// Unit normals, one representative per antipodal pair `{u, -u}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet<T> {
    dim: usize,
    reps: Vec<Vector<T>>,
}

impl<T: Scalar> DirectionSet<T> {
    /// Validates unit length and the absence of (antipodal) duplicates.
    pub fn new(dim: usize, reps: Vec<Vector<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDirections("dimension must be at least 1".into()));
        }
        let unit_tol = T::tol(1e-12, 64.0);
        for (i, u) in reps.iter().enumerate() {
            if u.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: u.len() });
            }
            if (linalg::norm(u) - T::one()).abs() > unit_tol {
                return Err(Error::InvalidDirections(format!("rep {i} is not a unit vector")));
            }
        }
        let dup_tol = T::tol(1e-12, 64.0);
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                if linalg::dot(&reps[i], &reps[j]).abs() > T::one() - dup_tol {
                    return Err(Error::InvalidDirections(format!("reps {i} and {j} are equal or antipodal")));
                }
            }
        }
        Ok(Self { dim, reps })
    }

    /// Normalizes each vector first; zero vectors are rejected.
    pub fn from_unnormalized(dim: usize, vectors: Vec<Vector<T>>) -> Result<Self> {
        let reps = vectors
            .into_iter()
            .map(|v| {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
                }
                linalg::normalized(&v).ok_or(Error::ZeroDirection)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dim, reps)
    }

    /// The 2·n coordinate directions are the reps `e_1, ..., e_n`.
    pub fn coordinate(dim: usize) -> Self {
        Self { dim, reps: (0..dim).map(|k| linalg::unit(dim, k)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Vector<T>] {
        &self.reps
    }

    pub fn rep(&self, i: usize) -> &[T] {
        &self.reps[i]
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.reps, T::tol(1e-10, 64.0))
    }

    /// Index of the rep parallel or antiparallel to `u` (unit), if any.
    pub fn find(&self, u: &[T], tol: T) -> Option<usize> {
        self.reps.iter().position(|r| linalg::dot(r, u).abs() > T::one() - tol)
    }
}

/// Positive support numbers `h_i`, one per rep of a [`DirectionSet`]. The
/// even extension assigns `h(-u_i) = h(u_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportVector<T> {
    values: Vec<T>,
}

impl<T: Scalar> SupportVector<T> {
    pub fn new(dirs: &DirectionSet<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != dirs.len() {
            return Err(Error::DimensionMismatch { expected: dirs.len(), found: values.len() });
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !(**v > T::zero()) || !v.is_finite()) {
            return Err(Error::OriginNotInterior { index: i, value: v.as_f64() });
        }
        Ok(Self { values })
    }

    pub fn uniform(dirs: &DirectionSet<T>, value: T) -> Result<Self> {
        Self::new(dirs, vec![value; dirs.len()])
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> T {
        self.values.iter().fold(T::zero(), |m, &v| m.max(v))
    }

    pub fn min(&self) -> T {
        self.values.iter().fold(T::infinity(), |m, &v| m.min(v))
    }

    pub fn scaled(&self, s: T) -> Self {
        Self { values: self.values.iter().map(|&v| v * s).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_antipodal_duplicates() {
        let err = DirectionSet::new(2, vec![vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidDirections(_)));
    }

    #[test]
    fn rejects_non_unit() {
        assert!(DirectionSet::new(2, vec![vec![2.0, 0.0]]).is_err());
        let d = DirectionSet::from_unnormalized(2, vec![vec![2.0, 0.0]]).unwrap();
        assert_eq!(d.rep(0), &[1.0, 0.0]);
        assert_eq!(DirectionSet::<f64>::from_unnormalized(2, vec![vec![0.0, 0.0]]).unwrap_err(), Error::ZeroDirection);
    }

    #[test]
    fn support_values_must_be_positive() {
        let d = DirectionSet::<f64>::coordinate(2);
        assert!(SupportVector::new(&d, vec![1.0, 0.0]).is_err());
        assert!(SupportVector::new(&d, vec![1.0]).is_err());
        assert!(SupportVector::new(&d, vec![1.0, 2.0]).is_ok());
    }
}
