//! Small dense linear algebra on `Vec`-backed vectors and row-major matrices.
//!
//! Sizes here never exceed 8x8, so everything is written for clarity rather
//! than blocking or vectorization.

use crate::scalar::Scalar;

pub type Vector<T> = Vec<T>;
/// Row-major dense matrix.
pub type Matrix<T> = Vec<Vec<T>>;

#[inline]
pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

#[inline]
pub fn norm<T: Scalar>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

pub fn norm_inf<T: Scalar>(a: &[T]) -> T {
    a.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
}

pub fn scale<T: Scalar>(a: &[T], s: T) -> Vector<T> {
    a.iter().map(|&x| x * s).collect()
}

pub fn add<T: Scalar>(a: &[T], b: &[T]) -> Vector<T> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vector<T> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// `y += s * x`
pub fn axpy<T: Scalar>(y: &mut [T], s: T, x: &[T]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = *yi + s * xi;
    }
}

pub fn normalized<T: Scalar>(a: &[T]) -> Option<Vector<T>> {
    let n = norm(a);
    if n > T::zero() && n.is_finite() {
        Some(scale(a, T::one() / n))
    } else {
        None
    }
}

pub fn unit<T: Scalar>(dim: usize, k: usize) -> Vector<T> {
    let mut e = vec![T::zero(); dim];
    e[k] = T::one();
    e
}

pub fn identity<T: Scalar>(n: usize) -> Matrix<T> {
    (0..n).map(|k| unit(n, k)).collect()
}

pub fn transpose<T: Scalar>(a: &Matrix<T>) -> Matrix<T> {
    if a.is_empty() {
        return Vec::new();
    }
    let cols = a[0].len();
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

pub fn mat_vec<T: Scalar>(a: &Matrix<T>, x: &[T]) -> Vector<T> {
    a.iter().map(|row| dot(row, x)).collect()
}

pub fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let bt = transpose(b);
    a.iter().map(|row| bt.iter().map(|col| dot(row, col)).collect()).collect()
}

/// Builds a matrix whose columns are the given vectors.
pub fn from_columns<T: Scalar>(cols: &[Vector<T>]) -> Matrix<T> {
    transpose(&cols.to_vec())
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
    sign: T,
}

impl<T: Scalar> Lu<T> {
    /// Returns `None` when a pivot falls below `rel_tol` times the largest
    /// entry of `a` (numerically singular).
    pub fn factor(a: &Matrix<T>, rel_tol: T) -> Option<Self> {
        let n = a.len();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = T::one();
        let scale = a.iter().flat_map(|r| r.iter()).fold(T::zero(), |m, &x| m.max(x.abs()));
        if scale == T::zero() {
            return None;
        }
        let threshold = rel_tol * scale;
        for k in 0..n {
            let (p, pmax) =
                (k..n)
                    .map(|i| (i, lu[i][k].abs()))
                    .fold((k, T::zero()), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pmax <= threshold {
                return None;
            }
            if p != k {
                lu.swap(p, k);
                perm.swap(p, k);
                sign = -sign;
            }
            let pivot = lu[k][k];
            let (upper, lower) = lu.split_at_mut(k + 1);
            let row_k = &upper[k];
            for row in lower.iter_mut() {
                let f = row[k] / pivot;
                row[k] = f;
                for (x, &v) in row[k + 1..].iter_mut().zip(&row_k[k + 1..]) {
                    *x = *x - f * v;
                }
            }
        }
        Some(Self { lu, perm, sign })
    }

    pub fn solve(&self, b: &[T]) -> Vector<T> {
        let n = self.lu.len();
        let mut x: Vector<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                x[i] = x[i] - self.lu[i][j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                x[i] = x[i] - self.lu[i][j] * x[j];
            }
            x[i] = x[i] / self.lu[i][i];
        }
        x
    }

    pub fn det(&self) -> T {
        (0..self.lu.len()).fold(self.sign, |d, k| d * self.lu[k][k])
    }
}

/// Determinant by LU; exactly zero when a pivot vanishes.
pub fn det<T: Scalar>(a: &Matrix<T>) -> T {
    if a.is_empty() {
        return T::one();
    }
    Lu::factor(a, T::zero()).map_or(T::zero(), |lu| lu.det())
}

pub fn inverse<T: Scalar>(a: &Matrix<T>, rel_tol: T) -> Option<Matrix<T>> {
    let n = a.len();
    let lu = Lu::factor(a, rel_tol)?;
    let cols: Vec<Vector<T>> = (0..n).map(|k| lu.solve(&unit(n, k))).collect();
    Some(from_columns(&cols))
}

/// Pivoted Gram-Schmidt: an orthonormal basis of `span(vectors)`.
///
/// At each step the remaining vector with the largest residual is taken;
/// the process stops once that residual drops to `rel_tol` times the
/// largest input norm.
pub fn orthonormal_basis<T: Scalar>(vectors: &[Vector<T>], rel_tol: T) -> Vec<Vector<T>> {
    let largest = vectors.iter().fold(T::zero(), |m, v| m.max(norm(v)));
    if largest == T::zero() {
        return Vec::new();
    }
    let threshold = rel_tol * largest;
    let mut residuals: Vec<Vector<T>> = vectors.to_vec();
    let mut basis: Vec<Vector<T>> = Vec::new();
    let dim = vectors[0].len();
    while basis.len() < dim {
        let (best, best_norm) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, norm(r)))
            .fold((usize::MAX, T::zero()), |b, c| if c.1 > b.1 { c } else { b });
        if best == usize::MAX || best_norm <= threshold {
            break;
        }
        let mut q = scale(&residuals[best], T::one() / best_norm);
        // second pass against the existing basis
        for b in &basis {
            let c = dot(&q, b);
            axpy(&mut q, -c, b);
        }
        let q = normalized(&q).expect("nonzero residual");
        for r in residuals.iter_mut() {
            let c = dot(r, &q);
            axpy(r, -c, &q);
        }
        basis.push(q);
    }
    basis
}

pub fn rank<T: Scalar>(vectors: &[Vector<T>], rel_tol: T) -> usize {
    orthonormal_basis(vectors, rel_tol).len()
}

/// Orthonormal basis of the orthogonal complement of `span(basis)` in R^dim.
/// `basis` must already be orthonormal.
pub fn orthogonal_complement<T: Scalar>(basis: &[Vector<T>], dim: usize) -> Vec<Vector<T>> {
    let mut out: Vec<Vector<T>> = Vec::new();
    let target = dim - basis.len();
    // project each unit vector, pick the largest residuals greedily
    let mut candidates: Vec<Vector<T>> = (0..dim)
        .map(|k| {
            let mut e = unit::<T>(dim, k);
            for b in basis {
                let c = dot(&e, b);
                axpy(&mut e, -c, b);
            }
            e
        })
        .collect();
    while out.len() < target {
        let (best, _) = candidates
            .iter()
            .enumerate()
            .map(|(i, r)| (i, norm(r)))
            .fold((0, T::neg_infinity()), |b, c| if c.1 > b.1 { c } else { b });
        let mut q = candidates[best].clone();
        for b in basis.iter().chain(out.iter()) {
            let c = dot(&q, b);
            axpy(&mut q, -c, b);
        }
        let q = normalized(&q).expect("complement vector");
        for r in candidates.iter_mut() {
            let c = dot(r, &q);
            axpy(r, -c, &q);
        }
        out.push(q);
    }
    out
}

/// Euclidean distance from `v` to `span(basis)` for an orthonormal basis.
pub fn distance_to_span<T: Scalar>(basis: &[Vector<T>], v: &[T]) -> T {
    let mut r = v.to_vec();
    for b in basis {
        let c = dot(&r, b);
        axpy(&mut r, -c, b);
    }
    norm(&r)
}
