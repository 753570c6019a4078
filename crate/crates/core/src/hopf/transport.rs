//! Cocycles for `H = B*` versus twists for `B`.
//!
//! An element `Σ x_{ij} e_i⊗e_j` of `B⊗B` is the same data as the form on
//! `B*` with matrix `x` in the dual basis. Under that identification the
//! cocycle identity for `B*` at `(f_a, f_b, f_c)` is the `(a, b, c)`
//! coordinate of `(Δ⊗I)(J)(J⊗1) = (I⊗Δ)(J)(1⊗J)` in `B⊗B⊗B`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coalgebra::PairForm;
use super::data::HopfData;
use crate::error::{Error, Result};
use crate::exactlin::{solve_linear, Matrix, Scalar};
use crate::report::{compare, AxiomReport};

/// An element of `B⊗B`, coefficient `(i, j)` on `e_i⊗e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistElement {
    pub dim: usize,
    pub matrix: Matrix,
}

impl TwistElement {
    pub fn one(b: &HopfData) -> Self {
        let n = b.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &b.unit[i] * &b.unit[j];
            }
        }
        TwistElement { dim: n, matrix: m }
    }
}

/// Reinterpret a twist for `B` as a form on `B*` in the dual basis.
pub fn cocycle_transport(t: &TwistElement) -> PairForm {
    PairForm { dim: t.dim, matrix: t.matrix.clone() }
}

/// Reinterpret a form on `B*` (dual basis) as an element of `B⊗B`.
pub fn twist_transport(j: &PairForm) -> TwistElement {
    TwistElement { dim: j.dim, matrix: j.matrix.clone() }
}

type Cube = BTreeMap<(usize, usize, usize), Scalar>;

fn cube_mul(mt: &[Vec<Vec<(usize, Scalar)>>], x: &Cube, y: &Cube) -> Cube {
    let mut out = Cube::new();
    for ((a1, a2, a3), p) in x {
        for ((b1, b2, b3), q) in y {
            let pq = p * q;
            for (k1, m1) in &mt[*a1][*b1] {
                for (k2, m2) in &mt[*a2][*b2] {
                    for (k3, m3) in &mt[*a3][*b3] {
                        *out.entry((*k1, *k2, *k3)).or_insert_with(Scalar::zero) += &pq * m1 * m2 * m3;
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `J` invertible in the algebra `B⊗B`.
pub fn twist_inverse(b: &HopfData, t: &TwistElement) -> Result<TwistElement> {
    let n = b.dim;
    let mt = b.mult_terms();
    // left multiplication by t on B⊗B, column (k, l) = t · (e_k⊗e_l)
    let mut op = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let x = &t.matrix[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    for (p, m1) in &mt[i][k] {
                        for (q, m2) in &mt[j][l] {
                            op[(p * n + q, k * n + l)] += x * m1 * m2;
                        }
                    }
                }
            }
        }
    }
    let one = TwistElement::one(b);
    let sol = match solve_linear(&op, one.matrix.data()) {
        Ok(s) => s,
        Err(Error::NoSolution) => return Err(Error::NotInvertible),
        Err(e) => return Err(e),
    };
    let inv = TwistElement { dim: n, matrix: Matrix::from_vec(n, n, sol)? };
    if twist_product(b, &inv, t) != one || twist_product(b, t, &inv) != one {
        return Err(Error::NotInvertible);
    }
    Ok(inv)
}

/// Product in `B⊗B`.
pub fn twist_product(b: &HopfData, x: &TwistElement, y: &TwistElement) -> TwistElement {
    let n = b.dim;
    let mt = b.mult_terms();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let p = &x.matrix[(i, j)];
            if p.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let q = &y.matrix[(k, l)];
                    if q.is_zero() {
                        continue;
                    }
                    for (u, m1) in &mt[i][k] {
                        for (v, m2) in &mt[j][l] {
                            m[(*u, *v)] += p * q * m1 * m2;
                        }
                    }
                }
            }
        }
    }
    TwistElement { dim: n, matrix: m }
}

/// Invertibility, `(Δ⊗I)(J)(J⊗1) = (I⊗Δ)(J)(1⊗J)` coordinatewise in
/// `B⊗B⊗B`, and `(I⊗ε)(J) = 1 = (ε⊗I)(J)`.
///
/// Check names mirror [`super::is_hopf_2cocycle`] so that reports on the two
/// sides of the duality can be compared entry by entry.
pub fn twist_equations(b: &HopfData, t: &TwistElement) -> Result<AxiomReport> {
    b.check_shapes()?;
    if t.dim != b.dim || t.matrix.rows() != b.dim || t.matrix.cols() != b.dim {
        return Err(Error::ShapeMismatch("twist element dimension".into()));
    }
    let n = b.dim;
    let mut report = AxiomReport::new();
    match twist_inverse(b, t) {
        Ok(_) => report.push("invertible", None),
        Err(Error::NotInvertible) => report.push_note("invertible", false, "not invertible in B⊗B"),
        Err(e) => return Err(e),
    }

    let co = b.comult_terms();
    let mt = b.mult_terms();
    let unit: Vec<(usize, Scalar)> =
        b.unit.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
    let mut delta_left = Cube::new();
    let mut delta_right = Cube::new();
    let mut j_one = Cube::new();
    let mut one_j = Cube::new();
    for i in 0..n {
        for j in 0..n {
            let x = &t.matrix[(i, j)];
            if x.is_zero() {
                continue;
            }
            for (p, q, c) in &co[i] {
                *delta_left.entry((*p, *q, j)).or_insert_with(Scalar::zero) += x * c;
            }
            for (p, q, c) in &co[j] {
                *delta_right.entry((i, *p, *q)).or_insert_with(Scalar::zero) += x * c;
            }
            for (u, c) in &unit {
                *j_one.entry((i, j, *u)).or_insert_with(Scalar::zero) += x * c;
                *one_j.entry((*u, i, j)).or_insert_with(Scalar::zero) += x * c;
            }
        }
    }
    let lhs = cube_mul(&mt, &delta_left, &j_one);
    let rhs = cube_mul(&mt, &delta_right, &one_j);
    let zero = Scalar::zero();
    let mut witness = None;
    'outer: for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                let l = lhs.get(&(a, bb, c)).unwrap_or(&zero);
                let r = rhs.get(&(a, bb, c)).unwrap_or(&zero);
                if let Some(w) = compare(&[a, bb, c], l, r) {
                    witness = Some(w);
                    break 'outer;
                }
            }
        }
    }
    report.push("cocycle", witness);

    // (I⊗ε)(J) and (ε⊗I)(J) against 1_B
    let mut w_right = None;
    let mut w_left = None;
    for a in 0..n {
        let right = (0..n).fold(Scalar::zero(), |acc, j| acc + &t.matrix[(a, j)] * &b.counit[j]);
        let left = (0..n).fold(Scalar::zero(), |acc, i| acc + &b.counit[i] * &t.matrix[(i, a)]);
        if w_right.is_none() {
            w_right = compare(&[a], &right, &b.unit[a]);
        }
        if w_left.is_none() {
            w_left = compare(&[a], &left, &b.unit[a]);
        }
    }
    report.push("normalized-right", w_right);
    report.push("normalized-left", w_left);
    Ok(report)
}

/// Both sides of the cocycle/twist duality for one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransportReport {
    /// Cocycle checks for the transported form on `B*`.
    pub cocycle: AxiomReport,
    /// Twist equations for the element in `B⊗B`.
    pub twist: AxiomReport,
    /// Whether the two reports agree check by check, witnesses included.
    pub agree: bool,
}

/// Run the cocycle check on `dualize(B)` and the twist equations on `B`.
pub fn transport_check(b: &HopfData, t: &TwistElement) -> Result<TransportReport> {
    let dual = super::group::dualize(b);
    let cocycle = super::cocycle::is_hopf_2cocycle(&cocycle_transport(t), &dual)?;
    let twist = twist_equations(b, t)?;
    let agree = cocycle.checks.len() == twist.checks.len()
        && cocycle.checks.iter().zip(&twist.checks).all(|(x, y)| {
            x.name == y.name && x.passed == y.passed && x.witness == y.witness
        });
    Ok(TransportReport { cocycle, twist, agree })
}
