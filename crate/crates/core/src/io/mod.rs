//! File formats: polytope, measure, report and solve-result JSON, ASCII OFF
//! export, and the descent trace as CSV.
//!
//! Every float is written with 17 significant digits (`{:.16e}`), and keys
//! keep struct order, so identical inputs give byte-identical files.

mod json;
mod off;

pub use json::{
    measure_from_json, measure_to_json, polytope_from_json, polytope_to_json, report_to_json, result_to_json,
    to_json_string, MeasureJson, NodeJson, PairJson, PolytopeJson, RecordJson, ReportJson, SolveResultJson,
};
pub use off::{polytope_to_off, trace_to_csv};

/// `x` with 17 significant digits; negative zero prints as zero.
pub fn format_float(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}
