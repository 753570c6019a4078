use std::path::Path;

use cotwist_core::comodule::Comodule;
use cotwist_core::exactlin::Matrix;
use cotwist_core::hopf::{verify_hopf, Functional, GroupTable, HopfData, PairForm};
use cotwist_core::lie::{check_twist_normalization, verify_lie, verify_rep, JfTable, LiePresentation, RepFile, TwistSeriesFile};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::input::{parse_error, read, CliError};
use crate::lie_cmd::{load_lie, ExprFile, GaugeFile};
use crate::report::RunReport;
use crate::Flags;

pub const KINDS: &[&str] = &[
    "hopf", "lie", "comodule", "rep", "series", "jf-table", "functional", "form", "group-table", "r", "expr",
    "gauge",
];

/// Guess the file kind from its top-level shape.
pub fn detect(v: &Value) -> Option<&'static str> {
    match v {
        Value::Object(m) => {
            let has = |k: &str| m.contains_key(k);
            Some(if has("mult") {
                "hopf"
            } else if has("bracket") {
                "lie"
            } else if has("coaction") {
                "comodule"
            } else if has("matrices") {
                "rep"
            } else if has("order") && has("terms") {
                "series"
            } else if has("degrees") {
                "jf-table"
            } else if has("coefficients") {
                "functional"
            } else if has("matrix") {
                "form"
            } else if m.get("terms").and_then(Value::as_array).is_some_and(|t| {
                t.iter().all(|x| x.get("word").is_some())
            }) {
                "gauge"
            } else if has("terms") {
                "expr"
            } else {
                return None;
            })
        }
        Value::Array(rows) => {
            let first = rows.first().and_then(Value::as_array).and_then(|r| r.first());
            match first {
                Some(Value::Number(_)) => Some("group-table"),
                Some(Value::String(_)) => Some("r"),
                _ => None,
            }
        }
        _ => None,
    }
}

fn schema<T: DeserializeOwned>(path: &Path, text: &str, report: &mut RunReport) -> Option<T> {
    match serde_json::from_str::<T>(text) {
        Ok(x) => {
            report.check("schema", true, || Value::Null);
            Some(x)
        }
        Err(e) => {
            let CliError::Parse { line, column, message, .. } = parse_error(path, &e) else { unreachable!() };
            report.check("schema", false, || json!({ "line": line, "column": column, "message": message }));
            None
        }
    }
}

fn shape(report: &mut RunReport, r: Result<(), String>) {
    let ok = r.is_ok();
    report.check("shape", ok, || json!(r.err()));
}

pub fn validate(file: &Path, kind: Option<&str>, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let text = read(file, report)?;
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => {
            let CliError::Parse { line, column, message, .. } = parse_error(file, &e) else { unreachable!() };
            report.check("parse", false, || json!({ "line": line, "column": column, "message": message }));
            return Ok(());
        }
    };
    report.check("parse", true, || Value::Null);
    let kind = match kind {
        Some(k) if KINDS.contains(&k) => k,
        Some(k) => return Err(CliError::Usage(format!("unknown kind {k:?}; expected one of {}", KINDS.join(", ")))),
        None => match detect(&value) {
            Some(k) => k,
            None => {
                report.check("kind", false, || json!("cannot tell the file kind from its shape; pass --kind"));
                return Ok(());
            }
        },
    };
    report.value("kind", json!(kind));
    match kind {
        "hopf" => {
            if let Some(h) = schema::<HopfData>(file, &text, report) {
                let s = h.check_shapes();
                let ok = s.is_ok();
                shape(report, s.map_err(|e| e.to_string()));
                if ok {
                    report.absorb("axioms", &verify_hopf(&h)?);
                }
            }
        }
        "lie" => {
            if let Some(l) = schema::<LiePresentation>(file, &text, report) {
                match LiePresentation::new(l.bracket, l.names, l.nilradical) {
                    Ok(l) => {
                        shape(report, Ok(()));
                        report.absorb("axioms", &verify_lie(&l)?);
                    }
                    Err(e) => shape(report, Err(e.to_string())),
                }
            }
        }
        "comodule" => {
            if let Some(v) = schema::<Comodule>(file, &text, report) {
                let [a, b, _] = v.coaction.shape();
                shape(report, if a == v.dim && b == v.dim { Ok(()) } else { Err("coaction must be [dim, dim, n]".into()) });
            }
        }
        "rep" => {
            if let Some(r) = schema::<RepFile>(file, &text, report) {
                let l = match &flags.lie {
                    Some(p) => Some(load_lie(p, report)?),
                    None => None,
                };
                match l {
                    Some(l) => match r.to_assignment(&l) {
                        Ok(a) => {
                            shape(report, Ok(()));
                            report.absorb("axioms", &verify_rep(&a, &l)?);
                        }
                        Err(e) => shape(report, Err(e.to_string())),
                    },
                    None => {
                        let d = r.matrices.values().next().map_or(0, Matrix::rows);
                        let ok = r.matrices.values().all(|m| m.rows() == d && m.cols() == d);
                        shape(report, if ok { Ok(()) } else { Err("matrices must be square of one size".into()) });
                    }
                }
            }
        }
        "series" => {
            if let Some(f) = schema::<TwistSeriesFile>(file, &text, report) {
                match f.to_series() {
                    Ok(s) => {
                        shape(report, Ok(()));
                        let n = check_twist_normalization(&s);
                        report.check("normalized", n.is_ok(), || json!("degree-0 term or counit normalization fails"));
                        if let Some(l) = &f.lie {
                            report.absorb("lie", &verify_lie(l)?);
                        }
                    }
                    Err(e) => shape(report, Err(e.to_string())),
                }
            }
        }
        "jf-table" => {
            if let Some(t) = schema::<JfTable>(file, &text, report) {
                let bad = t.degrees.iter().find_map(|(n, es)| {
                    es.iter()
                        .find(|e| {
                            let mut p = e.perm.clone();
                            p.sort_unstable();
                            p != (0..2 * n).collect::<Vec<_>>() || e.split > 2 * n
                        })
                        .map(|_| *n)
                });
                shape(report, bad.map_or(Ok(()), |n| Err(format!("bad permutation or split at degree {n}"))));
            }
        }
        "functional" => {
            schema::<Functional>(file, &text, report);
        }
        "form" => {
            if let Some(f) = schema::<PairForm>(file, &text, report) {
                let ok = f.matrix.is_square() && f.matrix.rows() == f.dim;
                shape(report, if ok { Ok(()) } else { Err("matrix must be dim × dim".into()) });
            }
        }
        "group-table" => {
            if let Some(t) = schema::<Vec<Vec<usize>>>(file, &text, report) {
                let g = GroupTable::new(t);
                let ok = g.is_ok();
                report.check("group", ok, || json!(g.err().map(|e| e.to_string())));
            }
        }
        "r" => {
            if let Some(m) = schema::<Matrix>(file, &text, report) {
                shape(report, if m.is_square() { Ok(()) } else { Err("r must be square".into()) });
            }
        }
        "expr" => {
            if let Some(e) = schema::<ExprFile>(file, &text, report) {
                shape(report, e.to_tensor().map(|_| ()).map_err(|e| e.to_string()));
            }
        }
        "gauge" => {
            if let Some(g) = schema::<GaugeFile>(file, &text, report) {
                let ok = g.terms.iter().all(|t| t.deg > 0);
                shape(report, if ok { Ok(()) } else { Err("gauge terms start at degree 1".into()) });
            }
        }
        _ => unreachable!("kind list is closed"),
    }
    Ok(())
}
