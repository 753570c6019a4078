//! Cotriangular forms, Drinfeld elements and the `R_c` modification.
//!
//! Conventions (all checks exact, on basis elements):
//!
//! * `R(ab, c) = Σ R(a, c₁) R(b, c₂)`
//! * `R(a, bc) = Σ R(a₁, c) R(a₂, b)`
//! * `Σ R(a₁, b₁) a₂b₂ = Σ b₁a₁ R(a₂, b₂)`
//! * `(R∘τ) ∗ R = ε⊗ε`
//!
//! With these, the braiding `v⊗w ↦ Σ w₀⊗v₀ R(v₁, w₁)` is a comodule map and
//! squares to the identity.

use num_traits::{One, Zero};

use super::coalgebra::{
    convolution_inverse, convolve, convolve_pairs, pair_inverse, Coalgebra, Functional, PairForm,
};
use super::data::HopfData;
use crate::error::{Error, Result};
use crate::exactlin::{frac, Scalar};
use crate::report::{compare, compare_vec, AxiomReport};

pub fn verify_cotriangular(h: &HopfData, r: &PairForm) -> Result<AxiomReport> {
    h.check_shapes()?;
    if r.dim != h.dim {
        return Err(Error::ShapeMismatch("R-form dimension".into()));
    }
    let n = h.dim;
    let co = h.comult_terms();
    let mt = h.mult_terms();
    let mut report = AxiomReport::new();

    match pair_inverse(h, r) {
        Ok(_) => report.push("invertible", None),
        Err(Error::NotInvertible) => report.push_note("invertible", false, "not convolution-invertible"),
        Err(e) => return Err(e),
    }

    // R(ab, c) = Σ R(a, c₁) R(b, c₂)
    let mut w = None;
    'ml: for a in 0..n {
        for b in 0..n {
            let ab = h.mul_basis(a, b);
            for c in 0..n {
                let lhs = r.eval(&ab, &h.basis(c));
                let rhs = co[c]
                    .iter()
                    .fold(Scalar::zero(), |acc, (p, q, x)| acc + x * r.get(a, *p) * r.get(b, *q));
                if let Some(x) = compare(&[a, b, c], &lhs, &rhs) {
                    w = Some(x);
                    break 'ml;
                }
            }
        }
    }
    report.push("multiplicative-left", w);

    // R(a, bc) = Σ R(a₁, c) R(a₂, b)
    let mut w = None;
    'mr: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = r.eval(&h.basis(a), &h.mul_basis(b, c));
                let rhs = co[a]
                    .iter()
                    .fold(Scalar::zero(), |acc, (p, q, x)| acc + x * r.get(*p, c) * r.get(*q, b));
                if let Some(x) = compare(&[a, b, c], &lhs, &rhs) {
                    w = Some(x);
                    break 'mr;
                }
            }
        }
    }
    report.push("multiplicative-right", w);

    // Σ R(a₁, b₁) a₂b₂ = Σ b₁a₁ R(a₂, b₂)
    let mut w = None;
    'qc: for a in 0..n {
        for b in 0..n {
            let mut lhs = vec![Scalar::zero(); n];
            let mut rhs = vec![Scalar::zero(); n];
            for (a1, a2, x) in &co[a] {
                for (b1, b2, y) in &co[b] {
                    let xy = x * y;
                    let rl = r.get(*a1, *b1);
                    if !rl.is_zero() {
                        for (k, m) in &mt[*a2][*b2] {
                            lhs[*k] += &xy * rl * m;
                        }
                    }
                    let rr = r.get(*a2, *b2);
                    if !rr.is_zero() {
                        for (k, m) in &mt[*b1][*a1] {
                            rhs[*k] += &xy * rr * m;
                        }
                    }
                }
            }
            if let Some(x) = compare_vec(&[a, b], &lhs, &rhs) {
                w = Some(x);
                break 'qc;
            }
        }
    }
    report.push("quasi-commutative", w);

    // (R∘τ) ∗ R = ε⊗ε
    let prod = convolve_pairs(h, &r.flipped(), r)?;
    let target = PairForm::counit_pair(h);
    let w = compare_vec(&[], prod.matrix.data(), target.matrix.data()).map(|mut x| {
        let k = x.indices[0];
        x.indices = vec![k / n, k % n];
        x
    });
    report.push("triangular", w);
    Ok(report)
}

fn require_cotriangular(h: &HopfData, r: &PairForm) -> Result<()> {
    let report = verify_cotriangular(h, r)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("(H, R) is not cotriangular:\n{report}")))
    }
}

/// Convolution on `A*`.
pub fn convolve_on(h: &HopfData, f: &Functional, g: &Functional) -> Result<Functional> {
    convolve(f, g, &Coalgebra::of(h))
}

pub fn inverse_on(h: &HopfData, f: &Functional) -> Result<Functional> {
    convolution_inverse(f, &Coalgebra::of(h))
}

/// First pair `(i, j)` where `f(e_i e_j) ≠ f(e_i) f(e_j)`; `[n]` flags `f(1) ≠ 1`.
pub fn grouplike_defect(h: &HopfData, f: &Functional) -> Option<Vec<usize>> {
    let n = h.dim;
    if f.eval(&h.unit) != Scalar::one() {
        return Some(vec![n]);
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = f.eval(&h.mul_basis(i, j));
            if lhs != &f.coefficients[i] * &f.coefficients[j] {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

/// First basis index where `Σ f(a₁) a₂ ≠ Σ a₁ f(a₂)`, i.e. `f` fails to be
/// central in `A*`.
pub fn centrality_defect(h: &HopfData, f: &Functional) -> Option<usize> {
    let n = h.dim;
    let co = h.comult_terms();
    (0..n).find(|&a| {
        let mut l = vec![Scalar::zero(); n];
        let mut r = vec![Scalar::zero(); n];
        for (p, q, x) in &co[a] {
            l[*q] += x * &f.coefficients[*p];
            r[*p] += x * &f.coefficients[*q];
        }
        l != r
    })
}

/// `u(a) = Σ R(a₂, S(a₁))`; checked grouplike in `A*`.
pub fn drinfeld_element(h: &HopfData, r: &PairForm) -> Result<Functional> {
    require_cotriangular(h, r)?;
    let u = drinfeld_functional(h, r);
    if let Some(w) = grouplike_defect(h, &u) {
        return Err(Error::NotGrouplike(w));
    }
    Ok(u)
}

/// The Drinfeld formula without precondition checks.
pub(crate) fn drinfeld_functional(h: &HopfData, r: &PairForm) -> Functional {
    let rs = r.matrix.mul(&h.antipode); // rs[(q, p)] = R(e_q, S(e_p))
    let co = h.comult_terms();
    Functional::new(
        (0..h.dim)
            .map(|a| co[a].iter().fold(Scalar::zero(), |acc, (p, q, x)| acc + x * &rs[(*q, *p)]))
            .collect(),
    )
}

/// Result of comparing `S²` with `a ↦ Σ u(a₁) a₂ u⁻¹(a₃)`.
#[derive(Clone, Debug)]
pub struct S2Conjugation {
    pub holds: bool,
    pub witness: Option<crate::report::Witness>,
    pub drinfeld: Functional,
}

pub fn verify_s2_conjugation(h: &HopfData, r: &PairForm) -> Result<bool> {
    Ok(s2_conjugation(h, r)?.holds)
}

pub fn s2_conjugation(h: &HopfData, r: &PairForm) -> Result<S2Conjugation> {
    let u = drinfeld_element(h, r)?;
    let uinv = inverse_on(h, &u)?;
    let n = h.dim;
    let s2 = h.antipode.mul(&h.antipode);
    let mut witness = None;
    for a in 0..n {
        let mut conj = vec![Scalar::zero(); n];
        for (idx, x) in h.iterated_terms(a, 3) {
            let c = x * &u.coefficients[idx[0]] * &uinv.coefficients[idx[2]];
            if !c.is_zero() {
                conj[idx[1]] += c;
            }
        }
        if let Some(w) = compare_vec(&[a], &s2.column(a), &conj) {
            witness = Some(w);
            break;
        }
    }
    Ok(S2Conjugation { holds: witness.is_none(), witness, drinfeld: u })
}

/// `R_c = ½(ε⊗ε + ε⊗c + c⊗ε − c⊗c)` for a central grouplike `c ∈ A*` with
/// `c∗c = ε`.
pub fn rc_from_central_grouplike(h: &HopfData, c: &Functional) -> Result<PairForm> {
    h.check_shapes()?;
    if c.len() != h.dim {
        return Err(Error::ShapeMismatch("functional length".into()));
    }
    if let Some(w) = grouplike_defect(h, c) {
        return Err(Error::NotGrouplike(w));
    }
    if let Some(index) = centrality_defect(h, c) {
        return Err(Error::NotCentral { index });
    }
    let eps = Functional::new(h.counit.clone());
    let cc = convolve_on(h, c, c)?;
    if let Some(index) = (0..h.dim).find(|&i| cc.coefficients[i] != eps.coefficients[i]) {
        return Err(Error::NotInvolutive { index });
    }
    let rc = PairForm::outer(&eps, &eps)
        .add(&PairForm::outer(&eps, c))
        .add(&PairForm::outer(c, &eps))
        .add(&PairForm::outer(c, c).scale(&-Scalar::one()));
    Ok(rc.scale(&frac(1, 2)))
}

/// `R ↦ R∗R_c`, asserting that the result is cotriangular with Drinfeld
/// element `u∗c`. Returns the new form and its Drinfeld element.
pub fn modify_by_central_grouplike(
    h: &HopfData,
    r: &PairForm,
    c: &Functional,
) -> Result<(PairForm, Functional)> {
    let rc = rc_from_central_grouplike(h, c)?;
    let u = drinfeld_element(h, r)?;
    let new_r = convolve_pairs(h, r, &rc)?;
    let new_u = drinfeld_element(h, &new_r)?;
    let expected = convolve_on(h, &u, c)?;
    if new_u != expected {
        return Err(Error::Invalid("Drinfeld element of R∗R_c differs from u∗c".into()));
    }
    Ok((new_r, new_u))
}
