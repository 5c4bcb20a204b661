mod common;

use approx::assert_relative_eq;
use common::*;
use logmink::io::{
    measure_from_json, measure_to_json, polytope_from_json, polytope_to_json, result_to_json, to_json_string,
};
use logmink::linalg;
use logmink::measure::ConcentrationStatus;
use logmink::solver::{log_functional, m0_functional, minimize_strict, volume_gradient};
use logmink::{
    build_wulff_body, check_subspace_concentration, cone_volume_measure, solve, DirectionSet, DiscreteMeasure, Error,
    Polytope, SolveConfig, SolvePath, SolveResult, SupportVector,
};
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::PI;

fn cfg() -> SolveConfig<f64> {
    SolveConfig::default()
}

fn hexagon_measure(masses: [f64; 3]) -> DiscreteMeasure<f64> {
    let pairs = (0..3).map(|k| (vec![(k as f64 * PI / 3.0).cos(), (k as f64 * PI / 3.0).sin()], masses[k])).collect();
    DiscreteMeasure::from_pairs(2, pairs).unwrap()
}

fn octahedron_measure() -> DiscreteMeasure<f64> {
    let reps = [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [1.0, -1.0, 1.0], [-1.0, 1.0, 1.0]];
    DiscreteMeasure::from_pairs(3, reps.iter().map(|r| (r.to_vec(), 1.0 / 6.0)).collect()).unwrap()
}

fn cube_measure() -> DiscreteMeasure<f64> {
    DiscreteMeasure::from_pairs(3, (0..3).map(|i| (linalg::unit(3, i), 4.0 / 3.0)).collect()).unwrap()
}

/// Cone volumes of a polygon recomputed from its vertices, matched to the
/// measure's directions.
fn polygon_gap(mu: &DiscreteMeasure<f64>, body: &Polytope<f64>) -> f64 {
    let poly = polygon_ccw(body.vertices());
    let mut seen = vec![0.0; mu.len()];
    for (normal, _, cone) in polygon_edges(&poly) {
        let i = mu.atoms().iter().position(|a| linalg::dot(&a.u, &normal).abs() > 1.0 - 1e-7);
        // Edge normals not in the support would carry unmatched mass.
        match i {
            Some(i) => seen[i] += cone / 2.0,
            None => return f64::INFINITY,
        }
    }
    mu.atoms().iter().zip(&seen).map(|(a, s)| (a.mass - s).abs()).fold(0.0, f64::max) / mu.total()
}

fn assert_round_trip(mu: &DiscreteMeasure<f64>, res: &SolveResult<f64>, tol: f64) {
    let achieved = cone_volume_measure(&res.body).unwrap();
    for a in mu.atoms() {
        let got = achieved.mass_at(&a.u, 1e-9);
        assert!((got - a.mass).abs() <= tol * mu.total(), "mass {got} vs {} at {:?}", a.mass, a.u);
    }
    assert_relative_eq!(res.body.volume(), mu.total(), max_relative = 1e-7);
}

#[test]
fn octahedron_measure_round_trips() {
    let mu = octahedron_measure();
    let res = solve(&mu, &cfg()).unwrap();
    assert_eq!(res.path, SolvePath::Strict);
    assert!(res.residual <= 1e-8);
    assert_round_trip(&mu, &res, 1e-8);
    for v in fan_cone_volumes_3d(&res.body) {
        assert_relative_eq!(v, 1.0 / 6.0, max_relative = 1e-7);
    }
}

#[test]
fn hexagon_measure_gives_regular_hexagon() {
    let mu = hexagon_measure([1.0 / 3f64.sqrt(); 3]);
    let res = solve(&mu, &cfg()).unwrap();
    let h = res.body.support().values();
    for x in h {
        assert_relative_eq!(*x, h[0], max_relative = 1e-7);
    }
    assert_relative_eq!(h[0], 1.0, max_relative = 1e-7);
    assert!(polygon_gap(&mu, &res.body) <= 1e-8);
}

#[test]
fn perturbed_hexagon_matches_shoelace_oracle() {
    let s = 1.0 / 3f64.sqrt();
    let mu = hexagon_measure([s * 1.1, s * 0.9, s * 1.1]);
    let res = solve(&mu, &cfg()).unwrap();
    assert_round_trip(&mu, &res, 1e-8);
    assert!(polygon_gap(&mu, &res.body) <= 1e-8);
    let poly = polygon_ccw(res.body.vertices());
    assert_relative_eq!(shoelace(&poly), mu.total(), max_relative = 1e-8);
}

#[test]
fn cube_measure_decomposes() {
    let mu = cube_measure();
    let res = solve(&mu, &cfg()).unwrap();
    let SolvePath::Decomposed(node) = &res.path else { panic!("expected decomposition, got {:?}", res.path) };
    assert_relative_eq!(node.a, 0.75, max_relative = 1e-14);
    assert_relative_eq!(node.r, 1.0, max_relative = 1e-14);
    assert_relative_eq!(node.normalization(mu.total()), 1.0, max_relative = 1e-12);
    // Child targets: a segment with endpoint cone volume 1, a square with
    // edge cone volume 1.
    assert_eq!(node.xi_result.path, SolvePath::Segment);
    assert_relative_eq!(node.xi_result.body.volume(), 2.0, max_relative = 1e-12);
    assert_relative_eq!(node.xi_prime_result.body.volume(), 4.0, max_relative = 1e-8);
    assert_round_trip(&mu, &res, 1e-8);
    for v in res.body.vertices() {
        assert!(v.iter().all(|x| (x.abs() - 1.0).abs() < 1e-8));
    }
}

#[test]
fn square_measure_gives_square() {
    let mu = DiscreteMeasure::from_pairs(2, vec![(vec![1.0, 0.0], 1.0), (vec![0.0, 1.0], 1.0)]).unwrap();
    let res = solve(&mu, &cfg()).unwrap();
    assert!(matches!(res.path, SolvePath::Decomposed(_)));
    assert_relative_eq!(res.body.volume(), 4.0, max_relative = 1e-12);
    for v in res.body.vertices() {
        assert!(v.iter().all(|x| (x.abs() - 1.0).abs() < 1e-12));
    }
}

#[test]
fn skew_equality_case_gives_parallelogram() {
    let s = 1.0 / 2f64.sqrt();
    let mu = DiscreteMeasure::from_pairs(2, vec![(vec![1.0, 0.0], 1.0), (vec![s, s], 1.0)]).unwrap();
    assert_eq!(check_subspace_concentration(&mu).unwrap().status, ConcentrationStatus::SatisfiedWithEquality);
    let res = solve(&mu, &cfg()).unwrap();
    let SolvePath::Decomposed(node) = &res.path else { panic!("expected decomposition") };
    assert_relative_eq!(node.r, 2f64.sqrt(), max_relative = 1e-12);
    assert_relative_eq!(node.normalization(mu.total()), 1.0, max_relative = 1e-12);
    assert_eq!(res.body.vertices().len(), 4);
    assert!(polygon_gap(&mu, &res.body) <= 1e-8);
}

#[test]
fn one_dimensional_measure_gives_segment() {
    let mu = DiscreteMeasure::from_pairs(1, vec![(vec![-2.0], 0.7)]).unwrap();
    let res = solve(&mu, &cfg()).unwrap();
    assert_eq!(res.path, SolvePath::Segment);
    assert_relative_eq!(res.body.volume(), 1.4, max_relative = 1e-14);
}

#[test]
fn violating_measure_is_rejected_with_witness() {
    let mu = DiscreteMeasure::from_pairs(2, vec![(vec![1.0, 0.0], 1.5), (vec![0.0, 1.0], 0.5)]).unwrap();
    match solve(&mu, &cfg()) {
        Err(Error::ConditionViolated { dim, witness, mass, bound }) => {
            assert_eq!(dim, 1);
            assert!(witness[0][0].abs() > 1.0 - 1e-12);
            assert_relative_eq!(mass, 3.0);
            assert_relative_eq!(bound, 2.0);
        }
        other => panic!("expected ConditionViolated, got {other:?}"),
    }
}

#[test]
fn descent_on_violating_measure_diverges() {
    // Bypass the router: the support numbers escape.
    let mu = DiscreteMeasure::from_pairs(2, vec![(vec![1.0, 0.0], 3.0), (vec![0.0, 1.0], 0.5), (vec![1.0, 1.0], 0.5)])
        .unwrap();
    match minimize_strict(&mu, &cfg()) {
        Err(Error::DivergenceDetected { ratio, hint, .. }) => {
            assert!(ratio > 1.0);
            assert_eq!(hint.len(), 1);
            assert!(hint[0][0].abs() > 1.0 - 1e-9);
        }
        other => panic!("expected divergence, got {other:?}"),
    }
}

#[test]
fn degenerate_support_is_unbounded() {
    let mu = DiscreteMeasure::from_pairs(3, vec![(vec![1.0, 0.0, 0.0], 1.0), (vec![0.0, 1.0, 0.0], 1.0)]).unwrap();
    assert!(matches!(minimize_strict(&mu, &cfg()), Err(Error::UnboundedBody { .. })));
}

#[test]
fn functional_examples() {
    let dirs = DirectionSet::coordinate(3);
    let cube = build_wulff_body(&dirs, &SupportVector::uniform(&dirs, 1.0).unwrap()).unwrap();
    let mu = cube_measure();
    assert_eq!(log_functional(&mu, &cube).unwrap(), 0.0);
    let big = build_wulff_body(&dirs, &SupportVector::uniform(&dirs, 2.0).unwrap()).unwrap();
    assert_relative_eq!(log_functional(&mu, &big).unwrap(), 8.0 * 2f64.ln(), max_relative = 1e-14);

    assert_relative_eq!(m0_functional(&mu, &dirs, &SupportVector::uniform(&dirs, 1.0).unwrap()).unwrap(), 0.5);
    assert_relative_eq!(
        m0_functional(&mu, &dirs, &SupportVector::uniform(&dirs, 2.0).unwrap()).unwrap(),
        0.5,
        max_relative = 1e-14
    );
    // h = (2,1,1): V = 16, exponent (1/3) log 2.
    let h = SupportVector::new(&dirs, vec![2.0, 1.0, 1.0]).unwrap();
    let want = 16f64.powf(-1.0 / 3.0) * 2f64.powf(1.0 / 3.0);
    assert_relative_eq!(m0_functional(&mu, &dirs, &h).unwrap(), want, max_relative = 1e-14);
}

#[test]
fn cube_m0_grid_search_minimum_is_at_uniform_support() {
    // Every box has the same M_0 = 1/2 for the cube measure, so h = 1 is a
    // minimizer but not the only one.
    let mu = cube_measure();
    let dirs = DirectionSet::coordinate(3);
    let m0 = |a: f64, b: f64| m0_functional(&mu, &dirs, &SupportVector::new(&dirs, vec![a, b, 1.0]).unwrap()).unwrap();
    let at_one = m0(1.0, 1.0);
    for i in -20..=20 {
        for j in -20..=20 {
            let v = m0(1.0 + 1e-2 * i as f64, 1.0 + 1e-2 * j as f64);
            assert!(v >= at_one - 1e-15);
            assert_relative_eq!(v, 0.5, max_relative = 1e-14);
        }
    }
    // Cutting the corners shrinks V without changing the exponent.
    let sdirs = DirectionSet::from_unnormalized(
        3,
        vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0], vec![1.0, 1.0, 1.0]],
    )
    .unwrap();
    let cut = m0_functional(&mu, &sdirs, &SupportVector::new(&sdirs, vec![1.0, 1.0, 1.0, 1.2]).unwrap()).unwrap();
    assert!(cut > at_one);
}

#[test]
fn gradient_examples() {
    let dirs = DirectionSet::coordinate(3);
    let g = volume_gradient(&dirs, &SupportVector::uniform(&dirs, 1.0).unwrap()).unwrap();
    g.iter().for_each(|&x| assert_relative_eq!(x, 8.0, max_relative = 1e-14));
    let mu = octahedron_measure();
    let odirs = mu.directions().unwrap();
    let g = volume_gradient(&odirs, &SupportVector::uniform(&odirs, 1.0 / 3f64.sqrt()).unwrap()).unwrap();
    g.iter().for_each(|&x| assert_relative_eq!(x, 3f64.sqrt(), max_relative = 1e-12));
    let sdirs = DirectionSet::from_unnormalized(2, vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]]).unwrap();
    let g = volume_gradient(&sdirs, &SupportVector::new(&sdirs, vec![1.0, 1.0, 10.0]).unwrap()).unwrap();
    assert_eq!(g[2], 0.0);
}

#[test]
fn stationarity_monotonicity_and_minimality() {
    let mut rng = rng(30);
    let tol = cfg().tol_residual;
    for _ in 0..5 {
        let mu = loop {
            let m = cone_volume_measure(&random_body(&mut rng, 3, 6)).unwrap();
            if check_subspace_concentration(&m).unwrap().status == ConcentrationStatus::StrictlySatisfied {
                break m;
            }
        };
        let res = minimize_strict(&mu, &cfg()).unwrap();
        // Euler-Lagrange identity c_i = h_i S_i/(nV).
        let (body, n) = (&res.body, mu.dim() as f64);
        for a in mu.atoms() {
            let i = body.directions().find(&a.u, 1e-12).unwrap();
            let share = body.support().values()[i] * body.facet_area(i) / (n * body.volume());
            assert!((a.mass / mu.total() - share).abs() <= 10.0 * tol);
        }
        for w in res.trace.windows(2) {
            assert!(w[1].objective <= w[0].objective * (1.0 + 1e-12), "objective rose: {:?}", w);
        }
        let dirs = body.directions();
        let m_star = m0_functional(&mu, dirs, body.support()).unwrap();
        for _ in 0..20 {
            let g: Vec<f64> = (0..dirs.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let gm = linalg::norm_inf(&g);
            let h: Vec<f64> = body.support().values().iter().zip(&g).map(|(h, g)| h * (1e-4 * g / gm).exp()).collect();
            let m = m0_functional(&mu, dirs, &SupportVector::new(dirs, h).unwrap()).unwrap();
            assert!(m >= m_star - 1e-12);
        }
    }
}

#[test]
fn result_json_round_trips() {
    let mu = octahedron_measure();
    let res = solve(&mu, &cfg()).unwrap();
    let j = result_to_json(&res);
    let text = to_json_string(&j);
    let back: logmink::io::SolveResultJson = serde_json::from_str(&text).unwrap();
    let body: Polytope<f64> = polytope_from_json(&back.polytope).unwrap();
    assert_relative_eq!(body.volume(), res.body.volume(), max_relative = 1e-14);
    let m: DiscreteMeasure<f64> = measure_from_json(&measure_to_json(&mu)).unwrap();
    assert_eq!(m.len(), mu.len());
    let again = to_json_string(&polytope_to_json(&body));
    assert_eq!(again, to_json_string(&polytope_to_json(&res.body)));
}

#[test]
fn solving_is_deterministic() {
    let s = 1.0 / 3f64.sqrt();
    let mu = hexagon_measure([s * 1.1, s * 0.9, s * 1.1]);
    let a = to_json_string(&result_to_json(&solve(&mu, &cfg()).unwrap()));
    let b = to_json_string(&result_to_json(&solve(&mu, &cfg()).unwrap()));
    assert_eq!(a, b);
}

#[test]
fn f32_solver_reaches_single_precision() {
    let pairs: Vec<(Vec<f32>, f32)> =
        vec![(vec![1.0, 0.0], 0.6), (vec![0.5, 0.866_025_4], 0.5), (vec![-0.5, 0.866_025_4], 0.55)];
    let mu = DiscreteMeasure::from_pairs(2, pairs).unwrap();
    let cfg = SolveConfig::<f32> { tol_residual: 1e-5, ..SolveConfig::default() };
    let res = solve(&mu, &cfg).unwrap();
    assert!(res.residual <= 1e-4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cone_volume_measures_round_trip(seed in any::<u64>(), n in 2usize..=3, pairs in 3usize..=8) {
        let p = random_body(&mut rng(seed), n, pairs.max(n));
        let mu = cone_volume_measure(&p).unwrap();
        let res = solve(&mu, &cfg()).unwrap();
        let achieved = cone_volume_measure(&res.body).unwrap();
        for a in mu.atoms() {
            prop_assert!((achieved.mass_at(&a.u, 1e-9) - a.mass).abs() <= 1e-7 * mu.total());
        }
        if let SolvePath::Decomposed(node) = &res.path {
            prop_assert!((node.normalization(mu.total()) - 1.0).abs() <= 1e-12);
        }
    }
}
