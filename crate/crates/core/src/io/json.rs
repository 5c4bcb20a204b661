use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::Result;
use crate::geometry::{build_wulff_body, DirectionSet, Polytope, SupportVector};
use crate::io::format_float;
use crate::linalg::Vector;
use crate::measure::{ConcentrationReport, ConcentrationStatus, DiscreteMeasure, Verdict};
use crate::scalar::Scalar;
use crate::solver::{SolvePath, SolveResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub reps: Vec<Vec<f64>>,
    pub support: Vec<f64>,
    #[serde(default)]
    pub vertices: Vec<Vec<f64>>,
    #[serde(default)]
    pub volume: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairJson {
    pub u: Vec<f64>,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureJson {
    pub dim: usize,
    pub pairs: Vec<PairJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordJson {
    pub dim: usize,
    pub basis: Vec<Vec<f64>>,
    pub mass: f64,
    pub bound: f64,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityPairJson {
    pub xi: Vec<Vec<f64>>,
    pub xi_prime: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub status: String,
    pub total: f64,
    pub max_ratio: f64,
    pub witness: Option<Vec<Vec<f64>>>,
    pub equality_pairs: Vec<EqualityPairJson>,
    pub records: Vec<RecordJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeJson {
    pub xi: Vec<Vec<f64>>,
    pub xi_prime: Vec<Vec<f64>>,
    pub a: f64,
    pub r: f64,
    pub lifted: Vec<Vec<f64>>,
    pub lifted_prime: Vec<Vec<f64>>,
    pub xi_result: Box<SolveResultJson>,
    pub xi_prime_result: Box<SolveResultJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResultJson {
    pub polytope: PolytopeJson,
    pub achieved_measure: MeasureJson,
    pub residual: f64,
    pub objective: f64,
    pub iterations: usize,
    pub path: String,
    pub decomposition: Option<NodeJson>,
}

fn vecs<T: Scalar>(v: &[Vector<T>]) -> Vec<Vec<f64>> {
    v.iter().map(|x| x.iter().map(|c| c.as_f64()).collect()).collect()
}

fn from_f64<T: Scalar>(v: &[f64]) -> Vec<T> {
    v.iter().map(|&x| T::lit(x)).collect()
}

pub fn polytope_to_json<T: Scalar>(p: &Polytope<T>) -> PolytopeJson {
    PolytopeJson {
        dim: p.dim(),
        reps: vecs(p.directions().reps()),
        support: p.support().values().iter().map(|x| x.as_f64()).collect(),
        vertices: vecs(p.vertices()),
        volume: p.volume().as_f64(),
    }
}

/// Rebuilds the body from `reps` and `support`; stored vertices and volume
/// are informational.
pub fn polytope_from_json<T: Scalar>(j: &PolytopeJson) -> Result<Polytope<T>> {
    let dirs = DirectionSet::from_unnormalized(j.dim, j.reps.iter().map(|r| from_f64(r)).collect())?;
    let h = SupportVector::new(&dirs, from_f64(&j.support))?;
    build_wulff_body(&dirs, &h)
}

pub fn measure_to_json<T: Scalar>(m: &DiscreteMeasure<T>) -> MeasureJson {
    MeasureJson {
        dim: m.dim(),
        pairs: m
            .atoms()
            .iter()
            .map(|a| PairJson { u: a.u.iter().map(|x| x.as_f64()).collect(), mass: a.mass.as_f64() })
            .collect(),
    }
}

/// Accepts non-unit vectors and antipodal duplicates.
pub fn measure_from_json<T: Scalar>(j: &MeasureJson) -> Result<DiscreteMeasure<T>> {
    DiscreteMeasure::from_pairs(j.dim, j.pairs.iter().map(|p| (from_f64(&p.u), T::lit(p.mass))).collect())
}

fn status_name(s: ConcentrationStatus) -> &'static str {
    match s {
        ConcentrationStatus::StrictlySatisfied => "strictly_satisfied",
        ConcentrationStatus::SatisfiedWithEquality => "satisfied_with_equality",
        ConcentrationStatus::Violated => "violated",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Strict => "strict",
        Verdict::Equality => "equality",
        Verdict::EqualityWithoutComplement => "equality_without_complement",
        Verdict::Violation => "violation",
    }
}

pub fn report_to_json<T: Scalar>(r: &ConcentrationReport<T>) -> ReportJson {
    ReportJson {
        status: status_name(r.status).into(),
        total: r.total.as_f64(),
        max_ratio: r.max_ratio().as_f64(),
        witness: r.witness.as_ref().map(|w| vecs(w.basis())),
        equality_pairs: r
            .equality_pairs
            .iter()
            .map(|p| EqualityPairJson { xi: vecs(p.xi.basis()), xi_prime: vecs(p.xi_prime.basis()) })
            .collect(),
        records: r
            .records
            .iter()
            .map(|rec| RecordJson {
                dim: rec.subspace.dim(),
                basis: vecs(rec.subspace.basis()),
                mass: rec.mass.as_f64(),
                bound: rec.bound.as_f64(),
                verdict: verdict_name(rec.verdict).into(),
            })
            .collect(),
    }
}

pub fn result_to_json<T: Scalar>(r: &SolveResult<T>) -> SolveResultJson {
    let (path, decomposition) = match &r.path {
        SolvePath::Segment => ("segment", None),
        SolvePath::Strict => ("strict", None),
        SolvePath::Decomposed(node) => (
            "decomposed",
            Some(NodeJson {
                xi: vecs(node.xi.basis()),
                xi_prime: vecs(node.xi_prime.basis()),
                a: node.a.as_f64(),
                r: node.r.as_f64(),
                lifted: vecs(&node.lifted),
                lifted_prime: vecs(&node.lifted_prime),
                xi_result: Box::new(result_to_json(&node.xi_result)),
                xi_prime_result: Box::new(result_to_json(&node.xi_prime_result)),
            }),
        ),
    };
    SolveResultJson {
        polytope: polytope_to_json(&r.body),
        achieved_measure: measure_to_json(&r.achieved_measure),
        residual: r.residual.as_f64(),
        objective: r.objective.as_f64(),
        iterations: r.iterations,
        path: path.into(),
        decomposition,
    }
}

/// Pretty-printed JSON with 17 significant digits per float.
pub fn to_json_string<S: Serialize>(value: &S) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigits(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

struct SigDigits<'a>(PrettyFormatter<'a>);

impl Formatter for SigDigits<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_float(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        w.write_all(format_float(f64::from(value)).as_bytes())
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}
