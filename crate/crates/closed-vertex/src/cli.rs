//! Command implementations behind the `closed-vertex` binary.
//!
//! Each command returns its stdout payload or a [`CliError`]; the binary
//! maps errors to exit codes (0 success, 1 verification failure, 2 invalid
//! input). Everything is deterministic given flags and seed.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::json;
use thiserror::Error;

use crate::cremona::{cremona_on_x, tau_star_xhat};
use crate::invariants::{
    closed_vertex_invariant, invariant_table, InvariantResult, Rational, ReductionTrace,
    VertexDegrees,
};
use crate::lattice::{CurveClassX, CurveClassXhat};
use crate::nef::{certify_anticanonical, certify_pair_divisors};
use crate::toric::{invariant_curve_graph, verify_vertex_support};

/// Environment variable consulted for the default output format.
pub const FORMAT_ENV_VAR: &str = "CLOSED_VERTEX_FORMAT";

#[derive(Debug, Error)]
pub enum CliError {
    /// Maps to exit code 2.
    #[error("{0}")]
    InvalidInput(String),
    /// Maps to exit code 1; carries the report to print on stdout.
    #[error("verification failed")]
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidInput(_) => 2,
            CliError::VerificationFailed(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(format!("unknown format {other:?} (expected json, csv or plain)")),
        }
    }
}

/// Explicit flag, else the `CLOSED_VERTEX_FORMAT` environment variable,
/// else JSON.
pub fn resolve_format(flag: Option<&str>) -> Result<OutputFormat, CliError> {
    let source = match flag {
        Some(s) => Some(s.to_owned()),
        None => std::env::var(FORMAT_ENV_VAR).ok(),
    };
    match source {
        Some(s) => OutputFormat::from_str(&s).map_err(CliError::InvalidInput),
        None => Ok(OutputFormat::Json),
    }
}

fn rational_json(value: &Rational) -> serde_json::Value {
    json!({
        "num": value.numer().to_string(),
        "den": value.denom().to_string(),
    })
}

fn result_json(g: u32, degrees: [u64; 3], result: &InvariantResult, with_trace: bool) -> serde_json::Value {
    let mut object = json!({
        "g": g,
        "d": degrees,
        "value": rational_json(&result.value),
    });
    if with_trace {
        object["trace"] = serde_json::to_value(&result.trace).unwrap();
    }
    object
}

fn trace_plain(trace: &ReductionTrace) -> String {
    match trace {
        ReductionTrace::Direct { degree } => {
            format!("  closed form applied directly at degree {degree}")
        }
        ReductionTrace::Cremona {
            initial,
            transformed,
            outcome,
        } => {
            let mut s = format!("  class     {initial}\n  transform {transformed}\n");
            match outcome {
                crate::invariants::ReductionOutcome::Witness { witness } => {
                    let _ = write!(s, "  vanishes: multiplicity a_{witness} is negative");
                }
                crate::invariants::ReductionOutcome::Reduced { reduced_degree } => {
                    let _ = write!(
                        s,
                        "  reduces to degree {reduced_degree} on a single (-1,-1) curve"
                    );
                }
            }
            s
        }
    }
}

/// `vertex g d1 d2 d3 [--trace] [--format f]`
pub fn cmd_vertex(
    g: u32,
    d1: u64,
    d2: u64,
    d3: u64,
    trace: bool,
    format: Option<&str>,
) -> Result<String, CliError> {
    let format = resolve_format(format)?;
    let degrees = VertexDegrees::new(g, d1, d2, d3)
        .map_err(|e| CliError::InvalidInput(e.to_string()))?;
    let result = closed_vertex_invariant(&degrees);
    match format {
        OutputFormat::Json => Ok(format!(
            "{}",
            result_json(g, [d1, d2, d3], &result, trace)
        )),
        OutputFormat::Plain => {
            let mut out = format!(
                "N^{}_({},{},{}) = {}/{}",
                g,
                d1,
                d2,
                d3,
                result.value.numer(),
                result.value.denom()
            );
            if trace {
                out.push('\n');
                out.push_str(&trace_plain(&result.trace));
            }
            Ok(out)
        }
        OutputFormat::Csv => Err(CliError::InvalidInput(
            "csv output is only available for the table command".into(),
        )),
    }
}

/// `table --gmax G --dmax D [--format f]`
pub fn cmd_table(g_max: u32, d_max: u64, format: Option<&str>) -> Result<String, CliError> {
    let format = resolve_format(format)?;
    let rows = invariant_table(g_max, d_max);
    match format {
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| result_json(r.g, r.degrees, &r.result, true))
                .collect();
            Ok(serde_json::Value::Array(rows).to_string())
        }
        OutputFormat::Csv => {
            let mut out = String::from("g,d1,d2,d3,num,den\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.g,
                    r.degrees[0],
                    r.degrees[1],
                    r.degrees[2],
                    r.result.value.numer(),
                    r.result.value.denom()
                );
            }
            out.pop();
            Ok(out)
        }
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "g={} d=({},{},{})  {}/{}",
                    r.g,
                    r.degrees[0],
                    r.degrees[1],
                    r.degrees[2],
                    r.result.value.numer(),
                    r.result.value.denom()
                );
            }
            out.pop();
            Ok(out)
        }
    }
}

/// `cremona <class-json> --space x|xhat`
pub fn cmd_cremona(class_json: &str, space: &str) -> Result<String, CliError> {
    match space {
        "x" => {
            let class: CurveClassX = serde_json::from_str(class_json)
                .map_err(|e| CliError::InvalidInput(format!("bad curve class: {e}")))?;
            Ok(serde_json::to_string(&cremona_on_x(&class)).unwrap())
        }
        "xhat" => {
            let class: CurveClassXhat = serde_json::from_str(class_json)
                .map_err(|e| CliError::InvalidInput(format!("bad curve class: {e}")))?;
            Ok(serde_json::to_string(&tau_star_xhat(&class)).unwrap())
        }
        other => Err(CliError::InvalidInput(format!(
            "unknown space {other:?} (expected x or xhat)"
        ))),
    }
}

/// `oracle d1 d2 d3 [--list]`
pub fn cmd_oracle(d1: u64, d2: u64, d3: u64, list: bool) -> Result<String, CliError> {
    let certificate = verify_vertex_support(d1, d2, d3)
        .map_err(|e| CliError::InvalidInput(e.to_string()))?;
    let graph = invariant_curve_graph();
    let mut report = certificate.to_json(graph);
    if !list {
        report.as_object_mut().unwrap().remove("decompositions");
    }
    let text = report.to_string();
    if certificate.verified {
        Ok(text)
    } else {
        Err(CliError::VerificationFailed(text))
    }
}

/// `nef --lemma 6.1|6.2 [--samples N] [--seed S]`
pub fn cmd_nef(lemma: &str, samples: u64, seed: u64) -> Result<String, CliError> {
    let report = match lemma {
        "6.1" => certify_anticanonical(samples, seed),
        "6.2" => certify_pair_divisors(samples, seed),
        other => {
            return Err(CliError::InvalidInput(format!(
                "unknown certificate {other:?} (expected 6.1 or 6.2)"
            )))
        }
    };
    let text = serde_json::to_string(&report).unwrap();
    if report.nef_certified {
        Ok(text)
    } else {
        Err(CliError::VerificationFailed(text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_values_and_formats() {
        let plain = cmd_vertex(0, 1, 1, 1, false, Some("plain")).unwrap();
        assert_eq!(plain, "N^0_(1,1,1) = 1/1");

        let json = cmd_vertex(0, 1, 1, 1, false, Some("json")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["value"]["num"], "1");
        assert_eq!(v["value"]["den"], "1");
        assert!(v.get("trace").is_none());

        let json = cmd_vertex(0, 2, 1, 1, true, Some("json")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["value"]["num"], "0");
        assert_eq!(v["trace"]["kind"], "cremona");
        assert_eq!(v["trace"]["witness"], 3);
    }

    #[test]
    fn vertex_rejects_all_zero_degrees() {
        let err = cmd_vertex(0, 0, 0, 0, false, Some("json")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert_eq!(err.to_string(), "degrees must not all be zero");
    }

    #[test]
    fn vertex_rejects_csv() {
        let err = cmd_vertex(0, 1, 1, 1, false, Some("csv")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn table_csv_has_expected_rows() {
        let out = cmd_table(0, 2, Some("csv")).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "g,d1,d2,d3,num,den");
        // Nine descending degree triples with d1 <= 2, not all zero.
        assert_eq!(lines.len(), 10);
        assert!(lines.contains(&"0,1,1,1,1,1"));
        assert!(lines.contains(&"0,2,1,1,0,1"));
        assert!(lines.contains(&"0,2,2,2,1,8"));
    }

    #[test]
    fn table_is_deterministic() {
        let a = cmd_table(2, 4, Some("json")).unwrap();
        let b = cmd_table(2, 4, Some("json")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cremona_round_trip_on_x() {
        let input = r#"{"d":3,"c":[-1,-1,-1,-1,-1,-1]}"#;
        let once = cmd_cremona(input, "x").unwrap();
        let v: serde_json::Value = serde_json::from_str(&once).unwrap();
        assert_eq!(v, serde_json::json!({"d":1,"c":[0,0,0,0,-1,-1]}));
        let twice = cmd_cremona(&once, "x").unwrap();
        let back: serde_json::Value = serde_json::from_str(&twice).unwrap();
        let orig: serde_json::Value = serde_json::from_str(input).unwrap();
        assert_eq!(back, orig);
    }

    #[test]
    fn cremona_on_xhat_swaps_rulings() {
        let input =
            r#"{"d":0,"c":[0,0,0,0,0,0],"f":{"12":1,"13":0,"14":0,"23":0,"24":0,"34":0}}"#;
        let out = cmd_cremona(input, "xhat").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        // Image is the section class over the complementary line:
        // h - e3 - e4 + f34.
        assert_eq!(v["d"], 1);
        assert_eq!(v["c"], serde_json::json!([0, 0, -1, -1, 0, 0]));
        assert_eq!(v["f"]["34"], 1);
        assert_eq!(v["f"]["12"], 0);
        let twice = cmd_cremona(&out, "xhat").unwrap();
        let back: serde_json::Value = serde_json::from_str(&twice).unwrap();
        let orig: serde_json::Value = serde_json::from_str(input).unwrap();
        assert_eq!(back, orig);
    }

    #[test]
    fn cremona_rejects_garbage() {
        let err = cmd_cremona("not json", "x").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_cremona(r#"{"d":1,"c":[0,0]}"#, "x").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = cmd_cremona(r#"{"d":1,"c":[0,0,0,0,0,0]}"#, "p3").unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn oracle_reports() {
        let out = cmd_oracle(1, 1, 1, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verified"], true);
        assert_eq!(v["decomposition_count"], 1);
        assert!(v.get("decompositions").is_none());

        let out = cmd_oracle(2, 2, 2, true).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["decompositions"][0].as_array().unwrap().len(), 3);

        let err = cmd_oracle(0, 1, 1, false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn nef_reports_are_seeded_and_stable() {
        let a = cmd_nef("6.1", 200, 7).unwrap();
        let b = cmd_nef("6.1", 200, 7).unwrap();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["seed"], 7);
        assert_eq!(v["samples"], 200);
        assert_eq!(v["nef_certified"], true);

        let c = cmd_nef("6.2", 200, 7).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c).unwrap();
        assert_eq!(v["nef_certified"], true);

        let err = cmd_nef("6.3", 10, 0).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
