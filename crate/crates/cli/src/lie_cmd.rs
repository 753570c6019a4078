use std::path::Path;

use cotwist_core::exactlin::{format_scalar, parse_scalar, Matrix, Scalar};
use cotwist_core::lie::{
    self, check_twist_normalization, component_span, cybe_residual, drinfeld_series, evaluate_on_pair,
    format_word, gauge_transform, jordanian_twist, radical_nilpotency, residual_vanishes,
    twist_equation_residual, unipotency_check, verify_lie, verify_rep, JfTable, LiePresentation, Pbw,
    RepAssignment, RepFile, Series, TwistSeries, TwistSeriesFile, UTensor,
};
use cotwist_core::Error;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::input::{load, CliError};
use crate::report::{to_value, RunReport};
use crate::Flags;

const DEFAULT_ORDER: usize = 3;

pub fn load_lie(path: &Path, report: &mut RunReport) -> Result<LiePresentation, CliError> {
    let l: LiePresentation = load(path, report)?;
    Ok(LiePresentation::new(l.bracket, l.names, l.nilradical)?)
}

fn lie_for(flags: &Flags, own: Option<LiePresentation>, report: &mut RunReport) -> Result<LiePresentation, CliError> {
    match (&flags.lie, own) {
        (Some(p), _) => load_lie(p, report),
        (None, Some(l)) => Ok(LiePresentation::new(l.bracket, l.names, l.nilradical)?),
        (None, None) => Ok(LiePresentation::aff()),
    }
}

fn check_letters(t: &UTensor, l: &LiePresentation, what: &str) -> Result<(), CliError> {
    if t.terms.keys().flatten().flatten().any(|&i| i >= l.dim) {
        return Err(CliError::Usage(format!("{what}: word letter outside the Lie basis of dimension {}", l.dim)));
    }
    Ok(())
}

/// The `--series` file with its Lie algebra, truncated at `--order`.
fn load_series(flags: &Flags, report: &mut RunReport) -> Result<(TwistSeries, LiePresentation), CliError> {
    let path = flags.series.as_ref().ok_or_else(|| CliError::Usage("--series is required".into()))?;
    let file: TwistSeriesFile = load(path, report)?;
    let s = file.to_series()?;
    let l = lie_for(flags, file.lie, report)?;
    for c in &s.coeffs {
        check_letters(c, &l, &path.display().to_string())?;
    }
    let s = match flags.order {
        Some(n) if n > s.order => {
            return Err(CliError::Usage(format!("--order {n} exceeds the series order {}", s.order)))
        }
        Some(n) => s.truncate(n),
        None => s,
    };
    Ok((s, l))
}

fn load_rep(path: &Path, l: &LiePresentation, report: &mut RunReport) -> Result<RepAssignment, CliError> {
    let f: RepFile = load(path, report)?;
    Ok(f.to_assignment(l)?)
}

fn reps(flags: &Flags, l: &LiePresentation, report: &mut RunReport) -> Result<Vec<RepAssignment>, CliError> {
    flags.rep.iter().map(|p| load_rep(p, l, report)).collect()
}

fn first_rep(flags: &Flags, l: &LiePresentation, report: &mut RunReport) -> Result<RepAssignment, CliError> {
    let mut r = reps(flags, l, report)?;
    if r.is_empty() {
        return Err(CliError::Usage("--rep is required".into()));
    }
    Ok(r.swap_remove(0))
}

fn h_value(flags: &Flags) -> Result<Option<Scalar>, CliError> {
    flags
        .h
        .as_deref()
        .map(|s| parse_scalar(s).map_err(|_| CliError::Usage(format!("--h: cannot parse {s:?} as p/q"))))
        .transpose()
}

fn load_r(path: &Path, l: &LiePresentation, report: &mut RunReport) -> Result<Vec<Vec<Scalar>>, CliError> {
    let m: Matrix = load(path, report)?;
    if m.rows() != l.dim || m.cols() != l.dim {
        return Err(CliError::Usage(format!("{}: r must be a {d} × {d} matrix", path.display(), d = l.dim)));
    }
    Ok(m.to_rows())
}

pub fn format_tensor(t: &UTensor, names: &[String]) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (w, c)) in t.terms.iter().enumerate() {
        let words: Vec<String> = w.iter().map(|x| format_word(x, names)).collect();
        let sign = match (k, c.is_negative()) {
            (0, true) => "−",
            (0, false) => "",
            (_, true) => " − ",
            (_, false) => " + ",
        };
        out.push_str(&format!("{sign}{}·{}", format_scalar(&c.abs()), words.join("⊗")));
    }
    out
}

fn series_value(s: &Series, l: &LiePresentation) -> Value {
    let display: Vec<String> = s.coeffs.iter().map(|c| format_tensor(c, &l.names)).collect();
    json!({ "file": to_value(&TwistSeriesFile::from_series(s, Some(l))), "coefficients": display })
}

fn residual_checks(s: &TwistSeries, l: &LiePresentation, report: &mut RunReport) -> Result<bool, CliError> {
    let res = twist_equation_residual(s, l)?;
    for (d, r) in res.iter().enumerate() {
        report.check(&format!("residual/degree {d}"), r.is_zero(), || json!(format_tensor(r, &l.names)));
    }
    Ok(residual_vanishes(&res))
}

pub fn lie_check(lie: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let l = load_lie(lie, report)?;
    report.absorb("", &verify_lie(&l)?);
    for (k, rep) in reps(flags, &l, report)?.iter().enumerate() {
        report.absorb(&format!("rep {k}"), &verify_rep(rep, &l)?);
        report.value(&format!("rep {k}/nilpotency"), json!(radical_nilpotency(rep, &l)));
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExprTerm {
    pub coef: String,
    pub words: Vec<Vec<usize>>,
}

/// An element of `U(g)^{⊗k}`: one word per tensor slot, letters by basis index.
#[derive(Debug, Serialize, Deserialize)]
pub struct ExprFile {
    #[serde(default)]
    pub arity: Option<usize>,
    pub terms: Vec<ExprTerm>,
}

impl ExprFile {
    pub fn to_tensor(&self) -> Result<UTensor, CliError> {
        let arity = self
            .arity
            .or_else(|| self.terms.first().map(|t| t.words.len()))
            .ok_or_else(|| CliError::Usage("expression without terms needs an arity".into()))?;
        let mut t = UTensor::zero(arity);
        for term in &self.terms {
            if term.words.len() != arity {
                return Err(CliError::Usage(format!("term with {} slots in an arity-{arity} expression", term.words.len())));
            }
            t.add_term(term.words.clone(), parse_scalar(&term.coef)?);
        }
        Ok(t)
    }

    pub fn from_tensor(t: &UTensor) -> Self {
        let terms = t.terms.iter().map(|(w, c)| ExprTerm { coef: format_scalar(c), words: w.clone() }).collect();
        ExprFile { arity: Some(t.arity), terms }
    }
}

pub fn pbw(expr: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let e: ExprFile = load(expr, report)?;
    let l = lie_for(flags, None, report)?;
    let t = e.to_tensor()?;
    check_letters(&t, &l, &expr.display().to_string())?;
    let p = Pbw::new(&l);
    let n = p.normalize(&t);
    let again = p.normalize(&n);
    report.check("idempotent", again == n, || json!(format_tensor(&again, &l.names)));
    report.value("normal-form", to_value(&ExprFile::from_tensor(&n)));
    report.value("display", json!(format_tensor(&n, &l.names)));
    Ok(())
}

pub fn cybe(r: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let l = lie_for(flags, None, report)?;
    let r = load_r(r, &l, report)?;
    let res = cybe_residual(&l, &r)?;
    report.check("cybe", res.is_zero(), || json!(format_tensor(&res, &l.names)));
    Ok(())
}

pub fn twist_residual(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    let norm = check_twist_normalization(&s);
    report.check("normalized", norm.is_ok(), || json!("(ε⊗I)J ≠ 1 or (I⊗ε)J ≠ 1"));
    residual_checks(&s, &l, report)?;
    Ok(())
}

pub fn exp_twist(r: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let l = lie_for(flags, None, report)?;
    let r = load_r(r, &l, report)?;
    let s = lie::exp_twist(&l, &r, flags.order.unwrap_or(DEFAULT_ORDER))?;
    residual_checks(&s, &l, report)?;
    report.value("series", series_value(&s, &l));
    Ok(())
}

pub fn jordanian(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let l = LiePresentation::aff();
    let s = jordanian_twist(flags.order.unwrap_or(DEFAULT_ORDER));
    residual_checks(&s, &l, report)?;
    report.value("series", series_value(&s, &l));
    Ok(())
}

pub fn jf_twist(table: &Path, r: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let t: JfTable = load(table, report)?;
    let l = lie_for(flags, None, report)?;
    let r = load_r(r, &l, report)?;
    let j = lie::jf_twist(&t, &r, flags.order.unwrap_or(DEFAULT_ORDER), &l)?;
    report.check("quantization", j.quantization, || {
        let res = twist_equation_residual(&j.series, &l).unwrap_or_default();
        let first = res.iter().enumerate().find(|(_, x)| !x.is_zero());
        first.map_or(Value::Null, |(d, x)| json!({ "degree": d, "residual": format_tensor(x, &l.names) }))
    });
    report.value("series", series_value(&j.series, &l));
    Ok(())
}

pub fn eval_pair(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    let r = reps(flags, &l, report)?;
    let (rv, rw) = match r.as_slice() {
        [v] => (v, v),
        [v, w] => (v, w),
        _ => return Err(CliError::Usage("eval-pair takes one or two --rep files".into())),
    };
    let h = h_value(flags)?;
    match evaluate_on_pair(&s, &l, rv, rw, h.as_ref()) {
        Ok(m) => {
            if let Some(b) = m.bound {
                report.check_value("degree-bound", m.degree <= b, json!({ "degree": m.degree, "bound": b }));
            }
            report.value("polynomial", to_value(&m));
        }
        Err(e @ Error::DegreeBoundViolated { .. }) => report.check("degree-bound", false, || json!(e.to_string())),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn r_from_twist(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    match lie::r_from_twist(&s, &l) {
        Ok(r) => {
            report.check("triangular", true, || Value::Null);
            report.value("r", series_value(&r, &l));
        }
        Err(e @ Error::Invalid(_)) => report.check("triangular", false, || json!(e.to_string())),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn drinfeld(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    let rv = first_rep(flags, &l, report)?;
    let h = h_value(flags)?;
    let d = drinfeld_series(&s, &l, &rv, h.as_ref())?;
    let c0 = &d.u.coeffs[0];
    report.check("constant-term", c0.is_identity(), || to_value(c0));
    report.value("u", to_value(&d.u));
    report.value("u-plain", to_value(&d.u_plain));
    Ok(())
}

pub fn unipotency(flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    let rv = first_rep(flags, &l, report)?;
    let h = h_value(flags)?.ok_or_else(|| CliError::Usage("unipotency needs --h".into()))?;
    let u = unipotency_check(&s, &l, &rv, &h)?;
    report.check_value("unipotent", u.passed, to_value(&u));
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GaugeTerm {
    pub deg: usize,
    pub coef: String,
    pub word: Vec<usize>,
}

/// `g = 1 + Σ hⁿ gₙ`; the constant 1 is implicit.
#[derive(Debug, Serialize, Deserialize)]
pub struct GaugeFile {
    pub terms: Vec<GaugeTerm>,
}

pub fn gauge(gauge: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let (s, l) = load_series(flags, report)?;
    let gf: GaugeFile = load(gauge, report)?;
    let mut g = Series::one(1, s.order);
    for t in &gf.terms {
        if t.deg == 0 || t.deg > s.order {
            return Err(CliError::Usage(format!("gauge term of degree {} outside 1..={}", t.deg, s.order)));
        }
        g.coeffs[t.deg].add_term(vec![t.word.clone()], parse_scalar(&t.coef)?);
    }
    for c in &g.coeffs {
        check_letters(c, &l, &gauge.display().to_string())?;
    }
    let jg = gauge_transform(&s, &g, &l)?;
    let before = residual_vanishes(&twist_equation_residual(&s, &l)?);
    let after = residual_vanishes(&twist_equation_residual(&jg, &l)?);
    report.check_value("twist-status-preserved", before == after, json!({ "before": before, "after": after }));
    report.value("series", series_value(&jg, &l));
    Ok(())
}

pub fn span_abelian(r: &Path, flags: &Flags, report: &mut RunReport) -> Result<(), CliError> {
    let l = lie_for(flags, None, report)?;
    let r = load_r(r, &l, report)?;
    let c = component_span(&r, &l);
    report.check("subalgebra", c.closed, || json!("span of the components is not closed under the bracket"));
    report.check("abelian", c.abelian, || json!("span of the components is not abelian"));
    report.value("span", to_value(&c));
    Ok(())
}
