//! Hopf 2-cocycles and the twisted Hopf algebra `A^J`.

use num_traits::Zero;

use super::coalgebra::{convolve_pairs, pair_inverse, PairForm};
use super::cotriangular::verify_cotriangular;
use super::data::{verify_hopf, HopfData};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};
use crate::report::{compare, AxiomReport};

fn check_form_shape(h: &HopfData, j: &PairForm) -> Result<()> {
    h.check_shapes()?;
    if j.dim != h.dim || !j.matrix.is_square() || j.matrix.rows() != h.dim {
        return Err(Error::ShapeMismatch(format!(
            "form of dimension {} for an algebra of dimension {}",
            j.dim, h.dim
        )));
    }
    Ok(())
}

/// `values[p][r][c] = J(e_p e_r, e_c)`.
fn form_after_left_product(h: &HopfData, j: &PairForm) -> Vec<Vec<Vec<Scalar>>> {
    let n = h.dim;
    let mt = h.mult_terms();
    (0..n)
        .map(|p| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            mt[p][r]
                                .iter()
                                .fold(Scalar::zero(), |acc, (t, m)| acc + m * j.get(*t, c))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `values[a][r][u] = J(e_a, e_r e_u)`.
fn form_after_right_product(h: &HopfData, j: &PairForm) -> Vec<Vec<Vec<Scalar>>> {
    let n = h.dim;
    let mt = h.mult_terms();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|u| {
                            mt[r][u]
                                .iter()
                                .fold(Scalar::zero(), |acc, (t, m)| acc + m * j.get(a, *t))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Checks invertibility, the cocycle identity
/// `Σ J(a₁b₁, c) J(a₂, b₂) = Σ J(a, b₁c₁) J(b₂, c₂)` on all basis triples,
/// and both normalizations `J(a, 1) = ε(a) = J(1, a)`.
pub fn is_hopf_2cocycle(j: &PairForm, h: &HopfData) -> Result<AxiomReport> {
    check_form_shape(h, j)?;
    let n = h.dim;
    let mut report = AxiomReport::new();
    match pair_inverse(h, j) {
        Ok(_) => report.push("invertible", None),
        Err(Error::NotInvertible) => {
            report.push_note("invertible", false, "left-convolution operator is singular or the right identity fails")
        }
        Err(e) => return Err(e),
    }

    let co = h.comult_terms();
    let jl = form_after_left_product(h, j);
    let jr = form_after_right_product(h, j);
    let mut witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut lhs = Scalar::zero();
                for (p, q, x) in &co[a] {
                    for (r, s, y) in &co[b] {
                        let t = j.get(*q, *s);
                        if t.is_zero() {
                            continue;
                        }
                        lhs += x * y * &jl[*p][*r][c] * t;
                    }
                }
                let mut rhs = Scalar::zero();
                for (r, s, y) in &co[b] {
                    for (u, w, z) in &co[c] {
                        let t = j.get(*s, *w);
                        if t.is_zero() {
                            continue;
                        }
                        rhs += y * z * &jr[a][*r][*u] * t;
                    }
                }
                if let Some(wit) = compare(&[a, b, c], &lhs, &rhs) {
                    witness = Some(wit);
                    break 'outer;
                }
            }
        }
    }
    report.push("cocycle", witness);

    let one = &h.unit;
    let mut w_right = None;
    let mut w_left = None;
    for a in 0..n {
        let ea = h.basis(a);
        if w_right.is_none() {
            w_right = compare(&[a], &j.eval(&ea, one), &h.counit[a]);
        }
        if w_left.is_none() {
            w_left = compare(&[a], &j.eval(one, &ea), &h.counit[a]);
        }
    }
    report.push("normalized-right", w_right);
    report.push("normalized-left", w_left);
    Ok(report)
}

/// The twisted Hopf algebra `A^J`:
/// `m^J(a⊗b) = Σ J⁻¹(a₁,b₁) a₂b₂ J(a₃,b₃)` and
/// `S^J(a) = Σ J⁻¹(a₁,S(a₂)) S(a₃) J(S(a₄),a₅)`; coalgebra and unit unchanged.
pub fn twist(h: &HopfData, j: &PairForm) -> Result<HopfData> {
    check_form_shape(h, j)?;
    let n = h.dim;
    let jinv = pair_inverse(h, j)?;
    let mt = h.mult_terms();
    let triples: Vec<_> = (0..n).map(|i| h.iterated_terms(i, 3)).collect();

    let mut mult = Tensor3::zeros([n, n, n]);
    for a in 0..n {
        for b in 0..n {
            for (ia, x) in &triples[a] {
                for (ib, y) in &triples[b] {
                    let left = jinv.get(ia[0], ib[0]);
                    if left.is_zero() {
                        continue;
                    }
                    let right = j.get(ia[2], ib[2]);
                    if right.is_zero() {
                        continue;
                    }
                    let coef = x * y * left * right;
                    for (k, m) in &mt[ia[1]][ib[1]] {
                        mult[[a, b, *k]] += &coef * m;
                    }
                }
            }
        }
    }

    // jinv_s[p][q] = J⁻¹(e_p, S(e_q));  s_j[q][r] = J(S(e_q), e_r)
    let s = &h.antipode;
    let jinv_s = jinv.matrix.mul(s);
    let s_j = s.transpose().mul(&j.matrix);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for (idx, x) in h.iterated_terms(a, 5) {
            let l = &jinv_s[(idx[0], idx[1])];
            let r = &s_j[(idx[3], idx[4])];
            if l.is_zero() || r.is_zero() {
                continue;
            }
            let coef = x * l * r;
            for k in 0..n {
                let sk = &s[(k, idx[2])];
                if !sk.is_zero() {
                    antipode[(k, a)] += &coef * sk;
                }
            }
        }
    }

    let twisted = HopfData {
        dim: n,
        mult,
        unit: h.unit.clone(),
        comult: h.comult.clone(),
        counit: h.counit.clone(),
        antipode,
    };
    let report = verify_hopf(&twisted)?;
    if !report.passed() {
        return Err(Error::TwistNotHopf(Box::new(report)));
    }
    Ok(twisted)
}

/// `R^J = (J∘τ)⁻¹ ∗ R ∗ J`, checked to be cotriangular on `A^J`.
pub fn twist_rform(r: &PairForm, j: &PairForm, h: &HopfData) -> Result<PairForm> {
    check_form_shape(h, j)?;
    check_form_shape(h, r)?;
    if !verify_cotriangular(h, r)?.passed() {
        return Err(Error::Invalid("R is not a cotriangular form on H".into()));
    }
    let jt_inv = pair_inverse(h, &j.flipped())?;
    let rj = convolve_pairs(h, &convolve_pairs(h, &jt_inv, r)?, j)?;
    let twisted = twist(h, j)?;
    let report = verify_cotriangular(&twisted, &rj)?;
    if !report.passed() {
        return Err(Error::TwistNotCotriangular(Box::new(report)));
    }
    Ok(rj)
}

/// Identity check helper: whether a form equals `ε⊗ε`.
pub fn is_trivial_form(h: &HopfData, j: &PairForm) -> bool {
    *j == PairForm::counit_pair(h)
}
