use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::io::format_float;
use crate::scalar::Scalar;
use crate::solver::TraceEntry;

/// ASCII OFF mesh of a 3-polytope; faces are the active facets with their
/// vertices counter-clockwise seen from outside.
pub fn polytope_to_off<T: Scalar>(p: &Polytope<T>) -> Result<String> {
    if p.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.dim() });
    }
    let faces: Vec<&Vec<usize>> = p.facets().iter().filter(|f| f.area > T::zero()).map(|f| &f.vertices).collect();
    let mut out = String::new();
    writeln!(out, "OFF").unwrap();
    writeln!(out, "{} {} 0", p.vertices().len(), faces.len()).unwrap();
    for v in p.vertices() {
        let coords: Vec<String> = v.iter().map(|x| format_float(x.as_f64())).collect();
        writeln!(out, "{}", coords.join(" ")).unwrap();
    }
    for f in faces {
        let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        writeln!(out, "{} {}", f.len(), idx.join(" ")).unwrap();
    }
    Ok(out)
}

pub fn trace_to_csv<T: Scalar>(trace: &[TraceEntry<T>]) -> String {
    let mut out = String::from("iteration,objective,residual,step\n");
    for e in trace {
        writeln!(
            out,
            "{},{},{},{}",
            e.iteration,
            format_float(e.objective.as_f64()),
            format_float(e.residual.as_f64()),
            format_float(e.step.as_f64())
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_wulff_body, DirectionSet, SupportVector};

    #[test]
    fn cube_off() {
        let d = DirectionSet::<f64>::coordinate(3);
        let p = build_wulff_body(&d, &SupportVector::uniform(&d, 1.0).unwrap()).unwrap();
        let off = polytope_to_off(&p).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "8 6 0");
        assert_eq!(lines.len(), 2 + 8 + 6);
        assert!(lines[10].starts_with("4 "));
        let d2 = DirectionSet::<f64>::coordinate(2);
        let sq = build_wulff_body(&d2, &SupportVector::uniform(&d2, 1.0).unwrap()).unwrap();
        assert!(polytope_to_off(&sq).is_err());
    }
}
