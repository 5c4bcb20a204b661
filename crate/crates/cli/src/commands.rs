use std::fs;
use std::path::{Path, PathBuf};

use logmink::io::{
    measure_from_json, measure_to_json, polytope_from_json, polytope_to_json, polytope_to_off, report_to_json,
    result_to_json, to_json_string, MeasureJson, PairJson, PolytopeJson, SolveResultJson,
};
use logmink::measure::{check_subspace_concentration_with, first_moment_of_pairs, ConcentrationConfig};
use logmink::{
    apply_linear_map, build_wulff_body, cone_volume_measure, lp_surface_measure, ConcentrationStatus, DirectionSet64,
    DiscreteMeasure64, Error, Polytope64, SolveConfig64, SupportVector64,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::manifest::RunManifest;
use crate::{CheckArgs, ConevolArgs, Failure, SolveArgs, TransformArgs, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;
pub const EXIT_EQUALITY: u8 = 10;
pub const EXIT_VIOLATED: u8 = 11;
pub const EXIT_DIVERGED: u8 = 12;

type CmdResult = Result<u8, Failure>;

fn classify(e: Error) -> Failure {
    let code = match &e {
        Error::UnboundedBody { .. }
        | Error::DegenerateBody { .. }
        | Error::OriginNotInterior { .. }
        | Error::SingularMap { .. }
        | Error::ZeroDirection
        | Error::NotComplementary
        | Error::LiftDegenerate { .. } => EXIT_DEGENERATE,
        Error::ConditionViolated { .. } => EXIT_VIOLATED,
        Error::DivergenceDetected { .. } => EXIT_DIVERGED,
        _ => EXIT_INPUT,
    };
    let message = match &e {
        Error::ConditionViolated { witness, .. } | Error::DivergenceDetected { hint: witness, .. } => {
            format!("{e}; subspace basis {witness:?}")
        }
        _ => e.to_string(),
    };
    Failure::new(code, message)
}

fn read_json<T: DeserializeOwned>(path: &Path, manifest: &mut RunManifest) -> Result<T, Failure> {
    manifest.inputs.push(path.to_path_buf());
    let text = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parse_inline<T: DeserializeOwned>(flag: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::new(EXIT_INPUT, format!("--{flag}: {e}")))
}

fn write_file(path: &Path, text: &str, manifest: &mut RunManifest) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    manifest.outputs.push(path.to_path_buf());
    Ok(())
}

fn emit<S: Serialize>(value: &S, output: &Option<PathBuf>, manifest: &mut RunManifest) -> Result<(), Failure> {
    let text = to_json_string(value);
    match output {
        Some(path) => write_file(path, &text, manifest),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_measure(path: &Path, manifest: &mut RunManifest) -> Result<DiscreteMeasure64, Failure> {
    let j: MeasureJson = read_json(path, manifest)?;
    measure_from_json(&j).map_err(classify)
}

#[derive(Serialize)]
struct Diagnostics {
    volume: f64,
    total: f64,
    /// Σ weight·normal over every facet of both signs.
    first_moment: Vec<f64>,
    first_moment_residual: f64,
    first_moment_pass: bool,
}

#[derive(Serialize)]
struct ConevolOutput {
    dim: usize,
    /// `null` for the cone-volume measure.
    p: Option<f64>,
    pairs: Vec<PairJson>,
    diagnostics: Diagnostics,
}

pub fn conevol(args: &ConevolArgs, manifest: &mut RunManifest) -> CmdResult {
    manifest.set("p", args.p);
    let body: Polytope64 = match (&args.polytope, &args.dirs, &args.support) {
        (Some(path), _, _) => {
            let j: PolytopeJson = read_json(path, manifest)?;
            polytope_from_json(&j).map_err(classify)?
        }
        (None, Some(dirs), Some(support)) => {
            manifest.set("dirs", Some(dirs));
            manifest.set("support", Some(support));
            let reps: Vec<Vec<f64>> = parse_inline("dirs", dirs)?;
            let h: Vec<f64> = parse_inline("support", support)?;
            let dim = reps.first().map_or(0, Vec::len);
            let dirs = DirectionSet64::from_unnormalized(dim, reps).map_err(classify)?;
            let h = SupportVector64::new(&dirs, h).map_err(classify)?;
            build_wulff_body(&dirs, &h).map_err(classify)?
        }
        _ => return Err(Failure::new(EXIT_INPUT, "give a polytope file or both --dirs and --support")),
    };
    let n = body.dim() as f64;
    let measure = match args.p {
        Some(p) => lp_surface_measure(&body, p),
        None => cone_volume_measure(&body),
    }
    .map_err(classify)?;
    let raw: Vec<(Vec<f64>, f64)> = body
        .facets()
        .iter()
        .filter(|f| f.area > 0.0)
        .map(|f| {
            let w = match args.p {
                Some(p) => f.offset.powf(1.0 - p) * f.area,
                None => f.offset * f.area / n,
            };
            (body.normal(f), w)
        })
        .collect();
    let fm = first_moment_of_pairs(body.dim(), &raw).map_err(classify)?;
    let out = ConevolOutput {
        dim: body.dim(),
        p: args.p,
        pairs: measure_to_json(&measure).pairs,
        diagnostics: Diagnostics {
            volume: body.volume(),
            total: measure.total(),
            first_moment: fm.vector,
            first_moment_residual: fm.residual,
            first_moment_pass: fm.pass,
        },
    };
    emit(&out, &args.output, manifest)?;
    Ok(EXIT_OK)
}

pub fn check(args: &CheckArgs, manifest: &mut RunManifest) -> CmdResult {
    manifest.set("equality_tol", args.equality_tol);
    let mu = read_measure(&args.measure, manifest)?;
    let mut cfg = ConcentrationConfig::default();
    if let Some(t) = args.equality_tol {
        cfg.equality_tol = t;
    }
    let report = check_subspace_concentration_with(&mu, &cfg).map_err(classify)?;
    emit(&report_to_json(&report), &args.output, manifest)?;
    Ok(match report.status {
        ConcentrationStatus::StrictlySatisfied => EXIT_OK,
        ConcentrationStatus::SatisfiedWithEquality => EXIT_EQUALITY,
        ConcentrationStatus::Violated => EXIT_VIOLATED,
    })
}

fn solve_config(args: &SolveArgs, manifest: &mut RunManifest) -> SolveConfig64 {
    manifest.set("tol", args.tol);
    manifest.set("max_iter", args.max_iter);
    manifest.set("armijo_c", args.armijo_c);
    manifest.set("backtrack_ratio", args.backtrack_ratio);
    manifest.set("divergence_ratio", args.divergence_ratio);
    manifest.set("equality_tol", args.equality_tol);
    let d = SolveConfig64::default();
    SolveConfig64 {
        tol_residual: args.tol.unwrap_or(d.tol_residual),
        max_iters: args.max_iter.unwrap_or(d.max_iters),
        armijo_c: args.armijo_c.unwrap_or(d.armijo_c),
        backtrack_ratio: args.backtrack_ratio.unwrap_or(d.backtrack_ratio),
        divergence_ratio: args.divergence_ratio.unwrap_or(d.divergence_ratio),
        equality_tol: args.equality_tol.unwrap_or(d.equality_tol),
    }
}

pub fn solve(args: &SolveArgs, manifest: &mut RunManifest) -> CmdResult {
    let cfg = solve_config(args, manifest);
    cfg.validate().map_err(classify)?;
    let mu = read_measure(&args.measure, manifest)?;
    if args.off.is_some() && mu.dim() != 3 {
        return Err(Failure::new(
            EXIT_INPUT,
            format!("--off needs a 3-dimensional measure, got dimension {}", mu.dim()),
        ));
    }
    let res = logmink::solve(&mu, &cfg).map_err(classify)?;
    if let Some(path) = &args.trace {
        write_file(path, &logmink::io::trace_to_csv(&res.trace), manifest)?;
    }
    if let Some(path) = &args.off {
        write_file(path, &polytope_to_off(&res.body).map_err(classify)?, manifest)?;
    }
    emit(&result_to_json(&res), &args.output, manifest)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Verdict {
    residual: f64,
    tol: f64,
    pass: bool,
    target_total: f64,
    achieved_total: f64,
}

pub fn verify(args: &VerifyArgs, manifest: &mut RunManifest) -> CmdResult {
    manifest.set("tol", args.tol);
    let tol = args.tol.unwrap_or(SolveConfig64::default().tol_residual);
    let mu = read_measure(&args.measure, manifest)?;
    let result: SolveResultJson = read_json(&args.result, manifest)?;
    let body: Polytope64 = polytope_from_json(&result.polytope).map_err(classify)?;
    if body.dim() != mu.dim() {
        return Err(classify(Error::DimensionMismatch { expected: mu.dim(), found: body.dim() }));
    }
    let achieved = cone_volume_measure(&body).map_err(classify)?;
    let residual = mu.residual_against(&achieved);
    let verdict =
        Verdict { residual, tol, pass: residual <= tol, target_total: mu.total(), achieved_total: achieved.total() };
    emit(&verdict, &args.output, manifest)?;
    if verdict.pass {
        Ok(EXIT_OK)
    } else {
        eprintln!("logmink verify: residual {residual:e} exceeds {tol:e}");
        Ok(EXIT_MISMATCH)
    }
}

pub fn transform(args: &TransformArgs, manifest: &mut RunManifest) -> CmdResult {
    let matrix: Vec<Vec<f64>> = if args.matrix.trim_start().starts_with('[') {
        manifest.set("matrix", Some(&args.matrix));
        parse_inline("matrix", &args.matrix)?
    } else {
        read_json(Path::new(&args.matrix), manifest)?
    };
    let j: PolytopeJson = read_json(&args.polytope, manifest)?;
    let body: Polytope64 = polytope_from_json(&j).map_err(classify)?;
    let n = body.dim();
    if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(Failure::new(EXIT_INPUT, format!("--matrix must be {n}×{n}")));
    }
    let image = apply_linear_map(&body, &matrix).map_err(classify)?;
    emit(&polytope_to_json(&image), &args.output, manifest)?;
    Ok(EXIT_OK)
}
