//! Random instances and independent oracles shared by the integration tests.
#![allow(dead_code)]

use logmink::linalg::{self, Vector};
use logmink::{build_wulff_body, DirectionSet, Polytope, SupportVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vector<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if let Some(u) = linalg::normalized(&v) {
            if linalg::norm(&v) > 1e-3 {
                return u;
            }
        }
    }
}

/// `pairs` well-separated random directions (|u·u'| < 0.98).
pub fn random_directions<R: Rng>(rng: &mut R, n: usize, pairs: usize) -> DirectionSet<f64> {
    loop {
        let mut reps: Vec<Vector<f64>> = Vec::new();
        let mut tries = 0;
        while reps.len() < pairs && tries < 1000 {
            tries += 1;
            let u = random_unit(rng, n);
            if reps.iter().all(|r| linalg::dot(r, &u).abs() < 0.98) {
                reps.push(u);
            }
        }
        if reps.len() == pairs && linalg::rank(&reps, 1e-6) == n {
            return DirectionSet::new(n, reps).unwrap();
        }
    }
}

/// Random origin-symmetric Wulff body in R^n with the given number of
/// direction pairs and support numbers in [0.5, 1.5].
pub fn random_body<R: Rng>(rng: &mut R, n: usize, pairs: usize) -> Polytope<f64> {
    loop {
        let dirs = random_directions(rng, n, pairs);
        let h: Vec<f64> = (0..pairs).map(|_| rng.gen_range(0.5..1.5)).collect();
        if let Ok(p) = build_wulff_body(&dirs, &SupportVector::new(&dirs, h).unwrap()) {
            return p;
        }
    }
}

/// Random matrix with determinant exactly scaled to 1.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<f64>> {
    loop {
        let m: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-1.5..1.5)).collect()).collect();
        let d = linalg::det(&m);
        if d.abs() > 0.2 {
            let s = d.abs().powf(-1.0 / n as f64);
            let mut m: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
            if d < 0.0 {
                m[0].iter_mut().for_each(|x| *x = -*x);
            }
            return m;
        }
    }
}

/// Vertices of a convex polygon sorted counter-clockwise around the origin.
pub fn polygon_ccw(vertices: &[Vector<f64>]) -> Vec<Vector<f64>> {
    let mut v = vertices.to_vec();
    v.sort_by(|a, b| a[1].atan2(a[0]).partial_cmp(&b[1].atan2(b[0])).unwrap());
    v
}

/// Shoelace area of a counter-clockwise polygon.
pub fn shoelace(poly: &[Vector<f64>]) -> f64 {
    let k = poly.len();
    (0..k)
        .map(|i| {
            let (p, q) = (&poly[i], &poly[(i + 1) % k]);
            p[0] * q[1] - q[0] * p[1]
        })
        .sum::<f64>()
        / 2.0
}

/// Edges of a CCW polygon as (outer unit normal, length, cone volume from
/// the origin = area of triangle (0, p, q)).
pub fn polygon_edges(poly: &[Vector<f64>]) -> Vec<(Vector<f64>, f64, f64)> {
    let k = poly.len();
    (0..k)
        .map(|i| {
            let (p, q) = (&poly[i], &poly[(i + 1) % k]);
            let e = [q[0] - p[0], q[1] - p[1]];
            let len = (e[0] * e[0] + e[1] * e[1]).sqrt();
            let normal = vec![e[1] / len, -e[0] / len];
            (normal, len, (p[0] * q[1] - q[0] * p[1]) / 2.0)
        })
        .collect()
}

/// Cone volumes of a 3-polytope per facet by fanning each facet polygon from
/// its first vertex and summing tetrahedra with apex at the origin.
pub fn fan_cone_volumes_3d(p: &Polytope<f64>) -> Vec<f64> {
    p.facets()
        .iter()
        .map(|f| {
            if f.vertices.len() < 3 {
                return 0.0;
            }
            let v = |i: usize| &p.vertices()[f.vertices[i]];
            (1..f.vertices.len() - 1)
                .map(|k| linalg::det(&vec![v(0).clone(), v(k).clone(), v(k + 1).clone()]).abs() / 6.0)
                .sum()
        })
        .collect()
}

/// Brute force over every subset of support vectors: the largest
/// mass/bound ratio over all proper spans.
pub fn brute_force_max_ratio(mu: &logmink::DiscreteMeasure<f64>) -> f64 {
    let n = mu.dim();
    let k = mu.len();
    let mut best: f64 = 0.0;
    for mask in 1u32..(1 << k) {
        let vecs: Vec<Vector<f64>> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| mu.atoms()[i].u.clone()).collect();
        let basis = linalg::orthonormal_basis(&vecs, 1e-10);
        let d = basis.len();
        if d == 0 || d >= n {
            continue;
        }
        let mass: f64 = 2.0
            * mu.atoms().iter().filter(|a| linalg::distance_to_span(&basis, &a.u) <= 1e-9).map(|a| a.mass).sum::<f64>();
        best = best.max(mass / (d as f64 / n as f64 * mu.total()));
    }
    best
}
