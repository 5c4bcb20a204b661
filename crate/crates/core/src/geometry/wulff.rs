//! Wulff shape (Aleksandrov body) of an even support vector.
//!
//! Vertices are enumerated by solving every n-subset of the 2m active
//! hyperplanes. Subsets containing a rep together with its antipode are
//! singular, and by symmetry only half of the sign patterns need solving,
//! so the cost is `C(m, n) · 2^(n-1)` solves of an n×n system (one LU per
//! subset of reps). That is ~11k solves for m = 15, n = 4.
//!
//! Face volumes are computed by cone decomposition about the vertex
//! centroid, recursing into each face in the hyperplane's own coordinates
//! (base cases: a point has measure 1, a segment its length, a polygon the
//! shoelace area).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::directions::{DirectionSet, SupportVector};
use crate::geometry::polytope::{Facet, Polytope, Side};
use crate::linalg::{self, Lu, Vector};
use crate::scalar::Scalar;

/// Tolerances of the construction, in units of the body normalized to
/// `max h_i = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WulffTolerances<T> {
    /// Vertex deduplication (max-norm).
    pub dedup: T,
    /// Halfspace membership and facet incidence.
    pub incidence: T,
    /// Facets below `inactive_area · diameter^(n-1)` are recorded as area 0.
    pub inactive_area: T,
    /// Minimum normalized volume.
    pub degenerate_volume: T,
    /// Relative LU pivot threshold for hyperplane subsets.
    pub pivot: T,
}

impl<T: Scalar> Default for WulffTolerances<T> {
    fn default() -> Self {
        Self {
            dedup: T::tol(1e-9, 1e3),
            incidence: T::tol(1e-9, 1e3),
            inactive_area: T::tol(1e-12, 1e2),
            degenerate_volume: T::tol(1e-12, 1e2),
            pivot: T::tol(1e-12, 1e2),
        }
    }
}

/// Intersection of the halfspaces `±x·u_i <= h_i`.
pub fn build_wulff_body<T: Scalar>(dirs: &DirectionSet<T>, h: &SupportVector<T>) -> Result<Polytope<T>> {
    build_wulff_body_with(dirs, h, &WulffTolerances::default())
}

pub fn build_wulff_body_with<T: Scalar>(
    dirs: &DirectionSet<T>,
    h: &SupportVector<T>,
    tol: &WulffTolerances<T>,
) -> Result<Polytope<T>> {
    let n = dirs.dim();
    if h.len() != dirs.len() {
        return Err(Error::DimensionMismatch { expected: dirs.len(), found: h.len() });
    }
    let rank = dirs.rank();
    if rank < n {
        return Err(Error::UnboundedBody { dim: n, rank });
    }
    let h_max = h.max();
    let hn: Vec<T> = h.values().iter().map(|&v| v / h_max).collect();
    let reps = dirs.reps();

    let vertices = enumerate_vertices(reps, &hn, tol);

    // halfspaces of the even extension, in facet order
    let halfspaces: Vec<(Vector<T>, T)> =
        reps.iter().zip(&hn).flat_map(|(u, &hv)| [(u.clone(), hv), (linalg::scale(u, -T::one()), hv)]).collect();

    let radius = vertices.iter().fold(T::zero(), |m, v| m.max(linalg::norm(v)));
    let diameter = radius * T::lit(2.0);
    let area_floor = tol.inactive_area * diameter.powi(n as i32 - 1);

    let mut facets = Vec::with_capacity(halfspaces.len());
    for (k, (normal, offset)) in halfspaces.iter().enumerate() {
        let incident: Vec<usize> = (0..vertices.len())
            .filter(|&v| (linalg::dot(normal, &vertices[v]) - *offset).abs() <= tol.incidence)
            .collect();
        let area = if incident.len() >= n {
            let area = facet_measure(normal, *offset, &incident, &vertices, &halfspaces, tol.incidence);
            if area < area_floor {
                T::zero()
            } else {
                area
            }
        } else {
            T::zero()
        };
        let ordered = order_facet_vertices(normal, &incident, &vertices);
        facets.push(Facet {
            direction: k / 2,
            side: if k % 2 == 0 { Side::Plus } else { Side::Minus },
            offset: *offset,
            area,
            vertices: if area > T::zero() { ordered } else { Vec::new() },
        });
    }

    // cone decomposition about an apex off the origin
    let apex = linalg::scale(&vertices[0], T::lit(0.5));
    let nn = T::from_usize_lossy(n);
    let volume_n: T = halfspaces
        .iter()
        .zip(&facets)
        .map(|((normal, offset), f)| (*offset - linalg::dot(normal, &apex)) * f.area)
        .sum::<T>()
        / nn;
    if !(volume_n >= tol.degenerate_volume) {
        return Err(Error::DegenerateBody { volume: (volume_n * h_max.powi(n as i32)).as_f64() });
    }

    let area_scale = h_max.powi(n as i32 - 1);
    for f in facets.iter_mut() {
        f.area = f.area * area_scale;
        f.offset = h.values()[f.direction];
    }
    let vertices = vertices.into_iter().map(|v| linalg::scale(&v, h_max)).collect();

    Ok(Polytope { dirs: dirs.clone(), support: h.clone(), vertices, facets, volume: volume_n * h_max.powi(n as i32) })
}

/// Feasible intersection points of n hyperplanes, deduplicated, stored as
/// `(x, -x)` pairs.
fn enumerate_vertices<T: Scalar>(reps: &[Vector<T>], hn: &[T], tol: &WulffTolerances<T>) -> Vec<Vector<T>> {
    let n = reps[0].len();
    let m = reps.len();
    let mut out: Vec<Vector<T>> = Vec::new();
    for subset in Combinations::new(m, n) {
        let rows: Vec<Vector<T>> = subset.iter().map(|&i| reps[i].clone()).collect();
        let Some(lu) = Lu::factor(&rows, tol.pivot) else {
            continue;
        };
        // sign of the first row fixed to +; the rest come from x -> -x
        for pattern in 0..(1usize << (n - 1)) {
            let rhs: Vec<T> = subset
                .iter()
                .enumerate()
                .map(|(k, &i)| if k > 0 && (pattern >> (k - 1)) & 1 == 1 { -hn[i] } else { hn[i] })
                .collect();
            let x = lu.solve(&rhs);
            let feasible = reps.iter().zip(hn).all(|(u, &hv)| linalg::dot(u, &x).abs() <= hv + tol.incidence);
            if !feasible {
                continue;
            }
            let duplicate = out.iter().any(|v| linalg::norm_inf(&linalg::sub(v, &x)) <= tol.dedup);
            if !duplicate {
                let neg = linalg::scale(&x, -T::one());
                out.push(x);
                out.push(neg);
            }
        }
    }
    out
}

/// (n-1)-volume of the facet `normal·x = offset` with the given incident
/// vertices.
fn facet_measure<T: Scalar>(
    normal: &[T],
    offset: T,
    incident: &[usize],
    vertices: &[Vector<T>],
    halfspaces: &[(Vector<T>, T)],
    tol: T,
) -> T {
    let points: Vec<Vector<T>> = incident.iter().map(|&i| vertices[i].clone()).collect();
    let (pts, cons) = restrict_to_hyperplane(normal, offset, &points, halfspaces);
    face_volume(&pts, &cons, tol)
}

/// Re-expresses points and halfspaces in orthonormal coordinates of the
/// hyperplane `a·x = b` (|a| = 1).
#[allow(clippy::type_complexity)]
fn restrict_to_hyperplane<T: Scalar>(
    a: &[T],
    b: T,
    points: &[Vector<T>],
    halfspaces: &[(Vector<T>, T)],
) -> (Vec<Vector<T>>, Vec<(Vector<T>, T)>) {
    let d = a.len();
    let basis = linalg::orthogonal_complement(&[a.to_vec()], d);
    let origin = linalg::scale(a, b);
    let pts = points
        .iter()
        .map(|p| {
            let q = linalg::sub(p, &origin);
            basis.iter().map(|e| linalg::dot(e, &q)).collect()
        })
        .collect();
    let cons = halfspaces
        .iter()
        .map(|(c, off)| {
            let proj: Vector<T> = basis.iter().map(|e| linalg::dot(e, c)).collect();
            (proj, *off - linalg::dot(c, &origin))
        })
        .collect();
    (pts, cons)
}

/// Volume of `conv(points)` in R^d, where `points` are the vertices of the
/// polytope cut out by `halfspaces`.
fn face_volume<T: Scalar>(points: &[Vector<T>], halfspaces: &[(Vector<T>, T)], tol: T) -> T {
    if points.is_empty() {
        return T::zero();
    }
    let d = points[0].len();
    match d {
        0 => T::one(),
        1 => {
            let (lo, hi) =
                points.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), p| (lo.min(p[0]), hi.max(p[0])));
            hi - lo
        }
        2 => shoelace(points),
        _ => {
            let centroid = centroid(points);
            let dd = T::from_usize_lossy(d);
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let mut total = T::zero();
            for (a, b) in halfspaces {
                let na = linalg::norm(a);
                if na <= tol {
                    continue;
                }
                let a = linalg::scale(a, T::one() / na);
                let b = *b / na;
                let dist = b - linalg::dot(&a, &centroid);
                if dist <= tol {
                    continue;
                }
                let active: Vec<usize> =
                    (0..points.len()).filter(|&i| (linalg::dot(&a, &points[i]) - b).abs() <= tol).collect();
                if active.len() < d || !seen.insert(active.clone()) {
                    continue;
                }
                let sub: Vec<Vector<T>> = active.iter().map(|&i| points[i].clone()).collect();
                let (pts, cons) = restrict_to_hyperplane(&a, b, &sub, halfspaces);
                total = total + dist * face_volume(&pts, &cons, tol) / dd;
            }
            total
        }
    }
}

fn centroid<T: Scalar>(points: &[Vector<T>]) -> Vector<T> {
    let mut c = vec![T::zero(); points[0].len()];
    for p in points {
        linalg::axpy(&mut c, T::one(), p);
    }
    linalg::scale(&c, T::one() / T::from_usize_lossy(points.len()))
}

/// Area of the convex polygon with the given (unordered) vertices.
fn shoelace<T: Scalar>(points: &[Vector<T>]) -> T {
    if points.len() < 3 {
        return T::zero();
    }
    let c = centroid(points);
    let mut order: Vec<(T, usize)> =
        points.iter().enumerate().map(|(i, p)| ((p[1] - c[1]).atan2(p[0] - c[0]), i)).collect();
    order.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
    let mut twice = T::zero();
    for k in 0..order.len() {
        let p = &points[order[k].1];
        let q = &points[order[(k + 1) % order.len()].1];
        twice = twice + (p[0] - c[0]) * (q[1] - c[1]) - (q[0] - c[0]) * (p[1] - c[1]);
    }
    twice.abs() / T::lit(2.0)
}

/// Counter-clockwise (seen from outside) for n = 3, along the boundary
/// orientation for n = 2, ascending otherwise.
fn order_facet_vertices<T: Scalar>(normal: &[T], incident: &[usize], vertices: &[Vector<T>]) -> Vec<usize> {
    let mut out = incident.to_vec();
    match normal.len() {
        2 => {
            let tangent = [-normal[1], normal[0]];
            out.sort_by(|&a, &b| {
                let (ta, tb) = (linalg::dot(&tangent, &vertices[a]), linalg::dot(&tangent, &vertices[b]));
                ta.partial_cmp(&tb).unwrap_or(std::cmp::Ordering::Equal)
            });
        }
        3 if incident.len() >= 3 => {
            let e1 = linalg::orthogonal_complement(&[normal.to_vec()], 3).remove(0);
            let e2 = cross(normal, &e1);
            let pts: Vec<Vector<T>> = incident.iter().map(|&i| vertices[i].clone()).collect();
            let c = centroid(&pts);
            let angle = |i: usize| {
                let q = linalg::sub(&vertices[i], &c);
                linalg::dot(&e2, &q).atan2(linalg::dot(&e1, &q))
            };
            out.sort_by(|&a, &b| angle(a).partial_cmp(&angle(b)).unwrap_or(std::cmp::Ordering::Equal));
        }
        _ => {}
    }
    out
}

pub(crate) fn cross<T: Scalar>(a: &[T], b: &[T]) -> Vector<T> {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in (i + 1)..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn octahedron() -> Polytope<f64> {
        let s = 1.0 / 3f64.sqrt();
        let dirs = DirectionSet::new(3, vec![vec![s, s, s], vec![s, s, -s], vec![s, -s, s], vec![-s, s, s]]).unwrap();
        let h = SupportVector::uniform(&dirs, s).unwrap();
        build_wulff_body(&dirs, &h).unwrap()
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(6, 3).count(), 20);
        assert_eq!(Combinations::new(3, 3).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn cube() {
        let dirs = DirectionSet::<f64>::coordinate(3);
        let h = SupportVector::uniform(&dirs, 1.0).unwrap();
        let p = build_wulff_body(&dirs, &h).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_relative_eq!(p.volume(), 8.0, max_relative = 1e-12);
        for f in p.facets() {
            assert_relative_eq!(f.area, 4.0, max_relative = 1e-12);
            assert_eq!(f.vertices.len(), 4);
        }
    }

    #[test]
    fn square() {
        let dirs = DirectionSet::<f64>::coordinate(2);
        let h = SupportVector::uniform(&dirs, 1.0).unwrap();
        let p = build_wulff_body(&dirs, &h).unwrap();
        assert_relative_eq!(p.volume(), 4.0, max_relative = 1e-12);
        assert!(p.facets().iter().all(|f| (f.area - 2.0).abs() < 1e-12));
    }

    #[test]
    fn octahedron_from_diagonals() {
        let p = octahedron();
        assert_eq!(p.vertices().len(), 6);
        // 2^n / n!
        assert_relative_eq!(p.volume(), 4.0 / 3.0, max_relative = 1e-12);
        for f in p.facets() {
            assert_relative_eq!(f.area, 3f64.sqrt() / 2.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn segment_in_one_dimension() {
        let dirs = DirectionSet::<f64>::coordinate(1);
        let h = SupportVector::uniform(&dirs, 2.5).unwrap();
        let p = build_wulff_body(&dirs, &h).unwrap();
        assert_relative_eq!(p.volume(), 5.0, max_relative = 1e-14);
        assert_eq!(p.facets()[0].area, 1.0);
    }

    #[test]
    fn inactive_direction_has_zero_area() {
        let dirs = DirectionSet::from_unnormalized(2, vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]]).unwrap();
        // corner cut would need h < sqrt(2); pushed out it is inactive
        let h = SupportVector::new(&dirs, vec![1.0, 1.0, 3.0]).unwrap();
        let p = build_wulff_body(&dirs, &h).unwrap();
        assert_eq!(p.facet_area(2), 0.0);
        assert!(p.facets()[4].vertices.is_empty());
        assert_relative_eq!(p.volume(), 4.0, max_relative = 1e-12);
        // touching exactly at the corner is still area zero
        let h = SupportVector::new(&dirs, vec![1.0, 1.0, 2f64.sqrt()]).unwrap();
        let p = build_wulff_body(&dirs, &h).unwrap();
        assert_eq!(p.facet_area(2), 0.0);
    }

    #[test]
    fn errors() {
        let dirs = DirectionSet::<f64>::new(2, vec![vec![1.0, 0.0]]).unwrap();
        let h = SupportVector::uniform(&dirs, 1.0).unwrap();
        assert_eq!(build_wulff_body(&dirs, &h).unwrap_err(), Error::UnboundedBody { dim: 2, rank: 1 });
        let dirs = DirectionSet::<f64>::coordinate(2);
        let h = SupportVector::new(&dirs, vec![1.0, 1e-14]).unwrap();
        assert!(matches!(build_wulff_body(&dirs, &h).unwrap_err(), Error::DegenerateBody { .. }));
    }

    #[test]
    fn off_face_orientation_is_outward() {
        let p = octahedron();
        for f in p.facets() {
            let v: Vec<&Vec<f64>> = f.vertices.iter().map(|&i| &p.vertices()[i]).collect();
            let n = cross(&linalg::sub(v[1], v[0]), &linalg::sub(v[2], v[0]));
            assert!(linalg::dot(&n, &p.normal(f)) > 0.0);
        }
    }

    #[test]
    fn four_dimensional_cube_and_cross_polytope() {
        let dirs = DirectionSet::<f64>::coordinate(4);
        let p = build_wulff_body(&dirs, &SupportVector::uniform(&dirs, 1.0).unwrap()).unwrap();
        assert_relative_eq!(p.volume(), 16.0, max_relative = 1e-12);
        assert_relative_eq!(p.facet_area(0), 8.0, max_relative = 1e-12);
        // cross-polytope: 8 reps (±1,±1,±1,±1)/2 with leading +
        let mut reps = Vec::new();
        for mask in 0..8u32 {
            let mut v = vec![0.5];
            for k in 0..3 {
                v.push(if mask >> k & 1 == 1 { -0.5 } else { 0.5 });
            }
            reps.push(v);
        }
        let dirs = DirectionSet::new(4, reps).unwrap();
        let p = build_wulff_body(&dirs, &SupportVector::uniform(&dirs, 0.5).unwrap()).unwrap();
        assert_eq!(p.vertices().len(), 8);
        // 2^4 / 4!
        assert_relative_eq!(p.volume(), 16.0 / 24.0, max_relative = 1e-12);
    }

    #[test]
    fn single_precision_cube() {
        let dirs = DirectionSet::<f32>::coordinate(3);
        let p = build_wulff_body(&dirs, &SupportVector::uniform(&dirs, 1.0f32).unwrap()).unwrap();
        assert!((p.volume() - 8.0).abs() < 1e-4);
    }
}
