//! Evaluation of series on finite-dimensional representations.

use std::collections::BTreeMap;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::algebra::LiePresentation;
use super::pbw::{Pbw, UTensor};
use super::series::{r_from_twist, Series, TwistSeries};
use crate::error::{Error, Result};
use crate::exactlin::{kron, nilpotency_index, span_basis, Matrix, Scalar};
use crate::report::AxiomReport;

/// `ρ(x_i)` for every basis element, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepAssignment {
    pub matrices: Vec<Matrix>,
}

/// File form: matrices keyed by basis name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub matrices: BTreeMap<String, Matrix>,
}

impl RepFile {
    pub fn to_assignment(&self, l: &LiePresentation) -> Result<RepAssignment> {
        let matrices = l
            .names
            .iter()
            .map(|n| {
                self.matrices
                    .get(n)
                    .cloned()
                    .ok_or_else(|| Error::Invalid(format!("no matrix for basis element {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RepAssignment::new(matrices)
    }

    pub fn from_assignment(rep: &RepAssignment, l: &LiePresentation) -> Self {
        RepFile { matrices: l.names.iter().cloned().zip(rep.matrices.iter().cloned()).collect() }
    }
}

impl RepAssignment {
    pub fn new(matrices: Vec<Matrix>) -> Result<Self> {
        let d = matrices.first().map(Matrix::rows).unwrap_or(0);
        if matrices.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::ShapeMismatch("representation matrices must be square of one size".into()));
        }
        Ok(RepAssignment { matrices })
    }

    pub fn dim(&self) -> usize {
        self.matrices.first().map(Matrix::rows).unwrap_or(0)
    }

    pub fn word(&self, w: &[usize]) -> Matrix {
        w.iter().fold(Matrix::identity(self.dim()), |acc, &i| acc.mul(&self.matrices[i]))
    }

    /// `ρ` on a one-slot element.
    pub fn eval(&self, t: &UTensor) -> Matrix {
        assert_eq!(t.arity, 1);
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in &t.terms {
            m.add_assign_scaled(&self.word(&w[0]), c);
        }
        m
    }
}

/// `ρ(x_i)ρ(x_j) − ρ(x_j)ρ(x_i) = Σ c_{ij}^k ρ(x_k)`, plus nilpotency of the
/// flagged generators.
pub fn verify_rep(rep: &RepAssignment, l: &LiePresentation) -> Result<AxiomReport> {
    if rep.matrices.len() != l.dim {
        return Err(Error::ShapeMismatch("one matrix per basis element".into()));
    }
    let d = rep.dim();
    let mut report = AxiomReport::new();
    let mut w = None;
    'br: for i in 0..l.dim {
        for j in 0..l.dim {
            let lhs = rep.matrices[i].mul(&rep.matrices[j]).sub(&rep.matrices[j].mul(&rep.matrices[i]));
            let mut rhs = Matrix::zeros(d, d);
            for (k, c) in l.bracket_terms(i, j) {
                rhs.add_assign_scaled(&rep.matrices[k], &c);
            }
            if let Some(k) = (0..d * d).find(|&k| lhs.data()[k] != rhs.data()[k]) {
                w = crate::report::compare(&[i, j, k / d, k % d], &lhs.data()[k], &rhs.data()[k]);
                break 'br;
            }
        }
    }
    report.push("bracket", w);
    match l.nilradical.iter().find(|&&i| nilpotency_index(&rep.matrices[i]).is_err()) {
        None => report.push("nilradical-nilpotent", None),
        Some(i) => report.push_note("nilradical-nilpotent", false, format!("ρ({}) is not nilpotent", l.names[*i])),
    }
    Ok(report)
}

fn require_rep(rep: &RepAssignment, l: &LiePresentation) -> Result<()> {
    let r = verify_rep(rep, l)?;
    if r.checks[0].passed {
        Ok(())
    } else {
        Err(Error::Invalid(format!("not a representation:\n{r}")))
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

fn unflatten(v: &[Scalar], d: usize) -> Matrix {
    Matrix::from_vec(d, d, v.to_vec()).expect("square")
}

/// Products `x·y` for all pairs of basis elements, as a spanning set.
fn products(a: &[Vec<Scalar>], b: &[Vec<Scalar>], d: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for x in a {
        let mx = unflatten(x, d);
        for y in b {
            out.push(flatten(&mx.mul(&unflatten(y, d))));
        }
    }
    out
}

/// Nilpotency index `k` of the ideal `I_V` generated by `ρ(n)` in the
/// image algebra `B_V`, or `None` when it is not nilpotent.
pub fn radical_nilpotency(rep: &RepAssignment, l: &LiePresentation) -> Option<usize> {
    let d = rep.dim();
    let dd = d * d;
    if l.nilradical.is_empty() {
        return Some(1);
    }
    // B_V: closure of span{I, ρ(x_i)} under products
    let gens: Vec<Vec<Scalar>> = rep.matrices.iter().map(flatten).collect();
    let mut algebra = span_basis(&[vec![flatten(&Matrix::identity(d))], gens.clone()].concat(), dd);
    loop {
        let mut all = algebra.clone();
        all.extend(products(&algebra, &gens, d));
        let next = span_basis(&all, dd);
        if next.len() == algebra.len() {
            break;
        }
        algebra = next;
    }
    let radical: Vec<Vec<Scalar>> = l.nilradical.iter().map(|&i| flatten(&rep.matrices[i])).collect();
    let left = products(&algebra, &radical, d);
    let ideal = span_basis(&products(&left, &algebra, d), dd);
    if ideal.is_empty() {
        return Some(1);
    }
    let mut power = ideal.clone();
    for k in 2..=dd + 1 {
        power = span_basis(&products(&power, &ideal, d), dd);
        if power.is_empty() {
            return Some(k);
        }
    }
    None
}

/// Whether every term of degree `d` carries at least `d` letters from the
/// flagged nilradical (summed over slots).
pub fn weight_condition(s: &Series, l: &LiePresentation) -> bool {
    s.coeffs.iter().enumerate().all(|(d, c)| {
        c.terms.keys().all(|words| {
            words.iter().flatten().filter(|i| l.nilradical.contains(i)).count() >= d
        })
    })
}

fn substitute(coeffs: &[Matrix], h0: &Scalar) -> Matrix {
    let mut acc = Matrix::zeros(coeffs[0].rows(), coeffs[0].cols());
    let mut power = Scalar::one();
    for c in coeffs {
        acc.add_assign_scaled(c, &power);
        power *= h0;
    }
    acc
}

fn last_nonzero(coeffs: &[Matrix]) -> usize {
    (0..coeffs.len()).rev().find(|&d| !coeffs[d].is_zero()).unwrap_or(0)
}

/// A series evaluated on representations: matrix coefficients per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixPolynomial {
    pub order: usize,
    pub coeffs: Vec<Matrix>,
    /// Highest degree with a nonzero coefficient.
    pub degree: usize,
    /// Degree bound from nilpotency, when the guarantee applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    /// `max(k_V, k_W)` for the representations involved.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Matrix>,
}

fn finish(
    coeffs: Vec<Matrix>,
    order: usize,
    bound: Option<usize>,
    nilpotency: Option<usize>,
    h0: Option<&Scalar>,
) -> Result<MatrixPolynomial> {
    let degree = last_nonzero(&coeffs);
    match bound {
        Some(b) if b > order => {
            return Err(Error::TruncationTooLow {
                order,
                reason: format!("the nilpotency bound is {b}"),
            })
        }
        Some(b) if degree > b => return Err(Error::DegreeBoundViolated { degree, bound: b }),
        None if order > 0 && !coeffs[order].is_zero() => {
            return Err(Error::TruncationTooLow {
                order,
                reason: "nonzero coefficient at the truncation order without a nilpotency guarantee".into(),
            })
        }
        _ => {}
    }
    let value = h0.map(|h| substitute(&coeffs, h));
    Ok(MatrixPolynomial { order, coeffs, degree, bound, nilpotency, value })
}

/// `J|_{V⊗W}` as a polynomial in `h`.
///
/// With the weight condition and nilpotent ideals `I_V^{k_V} = I_W^{k_W} = 0`
/// the degree is at most `k_V + k_W − 2`.
pub fn evaluate_on_pair(
    j: &TwistSeries,
    l: &LiePresentation,
    rv: &RepAssignment,
    rw: &RepAssignment,
    h0: Option<&Scalar>,
) -> Result<MatrixPolynomial> {
    require_rep(rv, l)?;
    require_rep(rw, l)?;
    let p = Pbw::new(l);
    let j = p.series_normalize(j);
    let (dv, dw) = (rv.dim(), rw.dim());
    let coeffs: Vec<Matrix> = j
        .coeffs
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(dv * dw, dv * dw);
            for (w, x) in &c.terms {
                m.add_assign_scaled(&kron(&rv.word(&w[0]), &rw.word(&w[1])), x);
            }
            m
        })
        .collect();
    let (kv, kw) = (radical_nilpotency(rv, l), radical_nilpotency(rw, l));
    let (bound, nilpotency) = match (kv, kw, weight_condition(&j, l)) {
        (Some(a), Some(b), true) => (Some(a + b - 2), Some(a.max(b))),
        _ => (None, None),
    };
    finish(coeffs, j.order, bound, nilpotency, h0)
}

/// Drinfeld element of the twisted triangular structure, in `U(g)[[h]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldElement {
    /// `u = Σ S^J(R₂) R₁` with `S^J(x) = Q⁻¹ S(x) Q`, `Q = m(S⊗I)(J)`.
    pub u: Series,
    /// `m(S⊗I)(R₂₁)` with the untwisted antipode.
    pub u_plain: Series,
    /// `Q = m(S⊗I)(J)`.
    pub q: Series,
}

pub fn drinfeld_element_series(j: &TwistSeries, l: &LiePresentation) -> Result<DrinfeldElement> {
    let p = Pbw::new(l);
    let r = r_from_twist(j, l)?;
    let j = p.series_normalize(j);
    let q = p.series_multiply_slots(&p.series_antipode(&j, 0));
    let qinv = p.series_inverse(&q)?;
    let sr21 = p.series_antipode(&r.flip(), 0);
    let u_plain = p.series_multiply_slots(&sr21);
    let conj = p.series_mul(&p.series_mul(&qinv.place(&[0], 2), &sr21), &q.place(&[0], 2));
    let u = p.series_multiply_slots(&conj);
    Ok(DrinfeldElement { u, u_plain, q })
}

/// Drinfeld series on `V`, both as matrices and as the underlying element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrinfeldSeries {
    pub u: MatrixPolynomial,
    /// Coefficients of `m(S⊗I)(R₂₁)` with the untwisted antipode.
    pub u_plain: Vec<Matrix>,
}

pub fn drinfeld_series(
    j: &TwistSeries,
    l: &LiePresentation,
    rv: &RepAssignment,
    h0: Option<&Scalar>,
) -> Result<DrinfeldSeries> {
    require_rep(rv, l)?;
    let d = drinfeld_element_series(j, l)?;
    let coeffs: Vec<Matrix> = d.u.coeffs.iter().map(|c| rv.eval(c)).collect();
    let u_plain = d.u_plain.coeffs.iter().map(|c| rv.eval(c)).collect();
    let k = radical_nilpotency(rv, l);
    let jn = Pbw::new(l).series_normalize(j);
    let bound = match (k, weight_condition(&jn, l) && weight_condition(&d.u, l)) {
        (Some(k), true) => Some(k - 1),
        _ => None,
    };
    let u = finish(coeffs, j.order, bound, k.filter(|_| bound.is_some()), h0)?;
    Ok(DrinfeldSeries { u, u_plain })
}

/// `(U − I)` nilpotent, and `Ad(U)` unipotent on `End(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotencyReport {
    pub passed: bool,
    /// Nilpotency index of `U − I`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    /// Nilpotency index of `Ad(U) − I` on `End(V)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ad_index: Option<usize>,
    pub u: Matrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

pub fn unipotency_of_matrix(u: &Matrix) -> UnipotencyReport {
    let d = u.rows();
    let i = Matrix::identity(d);
    let index = nilpotency_index(&u.sub(&i)).ok();
    let ad_index = u.inverse().ok().and_then(|uinv| {
        // vec(U X U⁻¹) = (U ⊗ U⁻ᵀ) vec(X) in row-major flattening
        let ad = kron(u, &uinv.transpose());
        nilpotency_index(&ad.sub(&Matrix::identity(d * d))).ok()
    });
    let passed = index.is_some() && ad_index.is_some();
    let violation = (!passed).then(|| {
        if index.is_none() {
            "u − I is not nilpotent".to_string()
        } else {
            "Ad(u) − I is not nilpotent on End(V)".to_string()
        }
    });
    UnipotencyReport { passed, index, ad_index, u: u.clone(), violation }
}

/// Unipotency of the Drinfeld element on `V` at `h = h0`.
pub fn unipotency_check(
    j: &TwistSeries,
    l: &LiePresentation,
    rv: &RepAssignment,
    h0: &Scalar,
) -> Result<UnipotencyReport> {
    let s = drinfeld_series(j, l, rv, Some(h0))?;
    Ok(unipotency_of_matrix(s.u.value.as_ref().expect("substituted")))
}

/// `ρ` on a two-slot element, acting on `V⊗W`.
pub fn eval_pair(t: &UTensor, rv: &RepAssignment, rw: &RepAssignment) -> Matrix {
    let (dv, dw) = (rv.dim(), rw.dim());
    let mut m = Matrix::zeros(dv * dw, dv * dw);
    for (w, x) in &t.terms {
        m.add_assign_scaled(&kron(&rv.word(&w[0]), &rw.word(&w[1])), x);
    }
    m
}
