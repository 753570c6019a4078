use std::path::Path;

use cotwist_core::comodule::{
    self, categorical_dimension_checked, central_grouplike_from_splits, coefficient_coalgebra, normalize_by_splits,
    u_action, verify_comodule, Comodule, Sign,
};
use cotwist_core::exactlin::{Matrix, Scalar};
use cotwist_core::hopf::{
    self, convolution_inverse, convolve, drinfeld_element, inverse_on, is_hopf_2cocycle, is_trivial_form,
    pseudoinvolutivity_check, rc_from_central_grouplike, rform_rank as rank_of, s2_conjugation, transport_check,
    twist_rform as twist_form, verify_cotriangular as cotriangular, verify_hopf as hopf_axioms, Coalgebra,
    Functional, HopfData, PairForm, TwistElement,
};
use cotwist_core::Error;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::input::{load, CliError};
use crate::report::{to_value, RunReport};

fn load_hopf(path: &Path, report: &mut RunReport) -> Result<HopfData, CliError> {
    let h: HopfData = load(path, report)?;
    h.check_shapes()?;
    Ok(h)
}

fn load_form(path: &Path, h: &HopfData, report: &mut RunReport) -> Result<PairForm, CliError> {
    let f: PairForm = load(path, report)?;
    if f.dim != h.dim || f.matrix.rows() != h.dim || !f.matrix.is_square() {
        return Err(CliError::Usage(format!("{}: form dimension does not match the Hopf algebra", path.display())));
    }
    Ok(f)
}

fn load_comodule(path: &Path, h: &HopfData, report: &mut RunReport) -> Result<Comodule, CliError> {
    let v: Comodule = load(path, report)?;
    let [a, b, n] = v.coaction.shape();
    if a != v.dim || b != v.dim || n != h.dim {
        return Err(CliError::Usage(format!("{}: coaction shape must be [dim, dim, {}]", path.display(), h.dim)));
    }
    Ok(v)
}

fn error_value(e: &Error) -> Value {
    Value::String(e.to_string())
}

pub fn verify_hopf(hopf: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    report.absorb("", &hopf_axioms(&h)?);
    Ok(())
}

pub fn verify_cotriangular(hopf: &Path, rform: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    report.absorb("", &cotriangular(&h, &r)?);
    Ok(())
}

pub fn cocycle_check(hopf: &Path, form: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let j = load_form(form, &h, report)?;
    report.absorb("", &is_hopf_2cocycle(&j, &h)?);
    report.value("trivial", json!(is_trivial_form(&h, &j)));
    Ok(())
}

fn as_functional(j: &PairForm) -> Functional {
    Functional::new(j.matrix.data().to_vec())
}

pub fn twist(hopf: &Path, form: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let j = load_form(form, &h, report)?;
    let carrier = Coalgebra::tensor_square(&h);
    let jf = as_functional(&j);
    let jinv = match convolution_inverse(&jf, &carrier) {
        Ok(x) => x,
        Err(e @ Error::NotInvertible) => {
            report.check("convolution-inverse", false, || error_value(&e));
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let unit = carrier.unit_functional();
    let left = convolve(&jf, &jinv, &carrier)?;
    let right = convolve(&jinv, &jf, &carrier)?;
    report.check("convolution-inverse", left == unit && right == unit, || json!("J∗J⁻¹ ≠ ε⊗ε"));
    let n = h.dim;
    report.value("inverse", to_value(&Matrix::from_vec(n, n, jinv.coefficients)?));
    match hopf::twist(&h, &j) {
        Ok(t) => {
            report.check("twisted-hopf", true, || Value::Null);
            report.value("commutative", json!(t.is_commutative()));
            report.value("twisted", to_value(&t));
        }
        Err(Error::TwistNotHopf(r)) => report.absorb("twisted", &r),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn twist_rform(hopf: &Path, rform: &Path, form: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let j = load_form(form, &h, report)?;
    match twist_form(&r, &j, &h) {
        Ok(rj) => {
            report.check("twisted-cotriangular", true, || Value::Null);
            report.value("rform", to_value(&rj));
        }
        Err(Error::TwistNotCotriangular(a)) => report.absorb("twisted-cotriangular", &a),
        Err(Error::TwistNotHopf(a)) => report.absorb("twisted-hopf", &a),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn drinfeld(hopf: &Path, rform: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let u = drinfeld_element(&h, &r)?;
    report.value("u", to_value(&u));
    let inv = inverse_on(&h, &u);
    report.check("invertible", inv.is_ok(), || json!("u has no convolution inverse"));
    if let Ok(v) = inv {
        report.value("u-inverse", to_value(&v));
    }
    Ok(())
}

pub fn s2_check(hopf: &Path, rform: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let s = s2_conjugation(&h, &r)?;
    report.check("s2-conjugation", s.holds, || to_value(&s.witness));
    report.value("u", to_value(&s.drinfeld));
    Ok(())
}

pub fn rc_build(hopf: &Path, grouplike: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let c: Functional = load(grouplike, report)?;
    match rc_from_central_grouplike(&h, &c) {
        Ok(rc) => {
            report.check("central-grouplike", true, || Value::Null);
            report.absorb("rc", &cotriangular(&h, &rc)?);
            report.value("rc", to_value(&rc));
        }
        Err(e @ (Error::NotGrouplike(_) | Error::NotCentral { .. } | Error::NotInvolutive { .. })) => {
            report.check("central-grouplike", false, || error_value(&e));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn pseudoinvolutivity(hopf: &Path, subcoalgebras: Option<&Path>, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let sets: Vec<Vec<usize>> = match subcoalgebras {
        Some(p) => load(p, report)?,
        None => vec![(0..h.dim).collect()],
    };
    let r = pseudoinvolutivity_check(&h, &sets)?;
    for s in &r.subcoalgebras {
        let value = json!({ "trace": cotwist_core::exactlin::format_scalar(&s.trace), "dim": s.dim });
        report.check_value(&format!("trace{:?}", s.indices), s.passed, value);
    }
    if let Some(id) = r.s2_is_identity {
        report.check("s2-identity", id, || to_value(&h.antipode.mul(&h.antipode)));
    }
    Ok(())
}

pub fn rform_rank(rform: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let r: PairForm = load(rform, report)?;
    if !r.matrix.is_square() || r.matrix.rows() != r.dim {
        return Err(CliError::Usage(format!("{}: form must be dim × dim", rform.display())));
    }
    let k = rank_of(&r);
    report.value("rank", json!(k.rank));
    report.value("minimal", json!(k.minimal));
    Ok(())
}

pub fn comodule_check(hopf: &Path, comodule: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let v = load_comodule(comodule, &h, report)?;
    let axioms = verify_comodule(&v, &h)?;
    report.absorb("", &axioms);
    if axioms.passed() {
        let c = coefficient_coalgebra(&v, &h)?;
        report.check("coefficient-coalgebra-closed", c.closed, || json!("Δ(A_V) ⊄ A_V⊗A_V"));
        report.value("coefficient-coalgebra", to_value(&c));
    }
    Ok(())
}

pub fn catdim(hopf: &Path, rform: &Path, comodule: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let v = load_comodule(comodule, &h, report)?;
    let u = drinfeld_element(&h, &r)?;
    report.value("u-action", to_value(&u_action(&v, &u)));
    match categorical_dimension_checked(&v, &h, &r) {
        Ok(d) => report.check_value("trace-equals-braided-loop", true, to_value(&d)),
        Err(e @ Error::Invalid(_)) => report.check("trace-equals-braided-loop", false, || error_value(&e)),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

pub fn sign_split(hopf: &Path, rform: &Path, comodule: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let v = load_comodule(comodule, &h, report)?;
    let u = drinfeld_element(&h, &r)?;
    match comodule::sign_split(&v, &u) {
        Ok(s) => {
            report.check("semisimple-signs", true, || Value::Null);
            report.value("sign-operator", to_value(&s.sign_operator()));
            report.value("split", to_value(&s));
        }
        Err(Error::NotSemisimpleSigns) => {
            report.check("semisimple-signs", false, || json!({ "u-action": to_value(&u_action(&v, &u)) }));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

#[derive(Deserialize)]
struct SplitEntry {
    comodule: Comodule,
    sign: Sign,
}

pub fn central_grouplike(
    hopf: &Path,
    splits: &Path,
    rform: Option<&Path>,
    report: &mut RunReport,
) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let entries: Vec<SplitEntry> = load(splits, report)?;
    let splits: Vec<(Comodule, Sign)> = entries.into_iter().map(|e| (e.comodule, e.sign)).collect();
    let r = rform.map(|p| load_form(p, &h, report)).transpose()?;
    let c = match central_grouplike_from_splits(&h, &splits) {
        Ok(c) => c,
        Err(e @ Error::Invalid(_)) => return Err(e.into()),
        Err(e) => {
            report.check("central-grouplike", false, || error_value(&e));
            return Ok(());
        }
    };
    report.check_value("central-grouplike", true, to_value(&c));
    if let Some(r) = r {
        let (new_r, u) = normalize_by_splits(&h, &r, &splits)?;
        report.absorb("normalized", &cotriangular(&h, &new_r)?);
        for (k, (v, _)) in splits.iter().enumerate() {
            let tr = comodule::categorical_dimension(v, &u);
            let dim = Scalar::from_integer(v.dim.into());
            let value = json!({ "trace": cotwist_core::exactlin::format_scalar(&tr), "dim": v.dim });
            report.check_value(&format!("trace-equals-dim/{k}"), tr == dim, value);
        }
        report.value("rform", to_value(&new_r));
        report.value("u", to_value(&u));
    }
    Ok(())
}

pub fn braiding(hopf: &Path, rform: &Path, v: &Path, w: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let r = load_form(rform, &h, report)?;
    let v = load_comodule(v, &h, report)?;
    let w = load_comodule(w, &h, report)?;
    let cvw = comodule::braiding(&v, &w, &h, &r)?;
    let cwv = comodule::braiding(&w, &v, &h, &r)?;
    let round = cwv.mul(&cvw);
    report.check("symmetric", round.is_identity(), || to_value(&round));
    report.value("braiding", to_value(&cvw));
    Ok(())
}

pub fn transport(hopf: &Path, element: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let b = load_hopf(hopf, report)?;
    let t: TwistElement = load(element, report)?;
    if t.dim != b.dim || t.matrix.rows() != b.dim || !t.matrix.is_square() {
        return Err(CliError::Usage(format!("{}: element dimension does not match", element.display())));
    }
    let r = transport_check(&b, &t)?;
    report.absorb("cocycle", &r.cocycle);
    report.absorb("twist", &r.twist);
    report.check("agree", r.agree, || json!("cocycle and twist reports differ"));
    Ok(())
}

pub fn group_algebra(table: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let t: Vec<Vec<usize>> = load(table, report)?;
    let h = hopf::build_group_algebra(&t)?;
    report.absorb("", &hopf_axioms(&h)?);
    report.value("hopf", to_value(&h));
    Ok(())
}

pub fn dualize(hopf: &Path, report: &mut RunReport) -> Result<(), CliError> {
    let h = load_hopf(hopf, report)?;
    let d = hopf::dualize(&h);
    report.absorb("", &hopf_axioms(&d)?);
    report.value("hopf", to_value(&d));
    Ok(())
}
