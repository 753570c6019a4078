use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{scalar::serde_vec, Matrix, Scalar, Tensor3};
use crate::report::{compare_vec, AxiomReport};

/// Finite-dimensional Hopf algebra given by structure constants in a basis
/// `e_0 .. e_{dim-1}`:
///
/// * `mult[[i, j, k]]` is the coefficient of `e_k` in `e_i · e_j`,
/// * `comult[[i, j, k]]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`,
/// * `antipode[(i, j)]` is the coefficient of `e_i` in `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfData {
    pub dim: usize,
    pub mult: Tensor3,
    #[serde(with = "serde_vec")]
    pub unit: Vec<Scalar>,
    pub comult: Tensor3,
    #[serde(with = "serde_vec")]
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

/// Sparse Sweedler term `coef · e_left ⊗ e_right`.
pub type CoTerm = (usize, usize, Scalar);

impl HopfData {
    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim;
        let bad = |what: &str| Err(Error::ShapeMismatch(format!("{what} does not match dim {n}")));
        if self.mult.shape() != [n, n, n] {
            return bad("mult");
        }
        if self.comult.shape() != [n, n, n] {
            return bad("comult");
        }
        if self.unit.len() != n {
            return bad("unit");
        }
        if self.counit.len() != n {
            return bad("counit");
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return bad("antipode");
        }
        Ok(())
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    /// Nonzero terms of `Δ(e_i)` for every `i`.
    pub fn comult_terms(&self) -> Vec<Vec<CoTerm>> {
        let mut out = vec![Vec::new(); self.dim];
        for ([i, j, k], c) in self.comult.nonzeros() {
            out[i].push((j, k, c.clone()));
        }
        out
    }

    /// Nonzero terms of `e_i e_j` as `(k, coef)`.
    pub fn mult_terms(&self) -> Vec<Vec<Vec<(usize, Scalar)>>> {
        let n = self.dim;
        let mut out = vec![vec![Vec::new(); n]; n];
        for ([i, j, k], c) in self.mult.nonzeros() {
            out[i][j].push((k, c.clone()));
        }
        out
    }

    /// Iterated coproduct `Δ^{(k-1)}(e_i)` as a sparse list of `k`-tuples.
    pub fn iterated_terms(&self, i: usize, k: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(k >= 1);
        let terms = self.comult_terms();
        let mut cur: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        cur.insert(vec![i], Scalar::one());
        for _ in 1..k {
            // split the last tensor factor
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in &cur {
                let last = *idx.last().unwrap();
                for (p, q, d) in &terms[last] {
                    let mut key = idx[..idx.len() - 1].to_vec();
                    key.push(*p);
                    key.push(*q);
                    *next.entry(key).or_insert_with(Scalar::zero) += c * d;
                }
            }
            next.retain(|_, v| !v.is_zero());
            cur = next;
        }
        cur.into_iter().collect()
    }

    pub fn mul_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for ([i, j, k], c) in self.mult.nonzeros() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k] += c * &x[i] * &y[j];
        }
        out
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim;
        (0..n).map(|k| self.mult[[i, j, k]].clone()).collect()
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.counit).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.mult[[i, j, k]] == self.mult[[j, i, k]])))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.comult[[i, j, k]] == self.comult[[i, k, j]])))
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

/// Check every Hopf axiom exactly, reporting the first violation of each.
pub fn verify_hopf(h: &HopfData) -> Result<AxiomReport> {
    h.check_shapes()?;
    let n = h.dim;
    let co = h.comult_terms();
    let mut report = AxiomReport::new();

    // associativity
    let mut w = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                let lhs = h.mul_vec(&ij, &h.basis(k));
                let rhs = h.mul_vec(&h.basis(i), &h.mul_basis(j, k));
                if let Some(x) = compare_vec(&[i, j, k], &lhs, &rhs) {
                    w = Some(x);
                    break 'assoc;
                }
            }
        }
    }
    report.push("assoc", w);

    // unit
    let mut w = None;
    for i in 0..n {
        let e = h.basis(i);
        w = compare_vec(&[i, 0], &h.mul_vec(&h.unit, &e), &e)
            .or_else(|| compare_vec(&[i, 1], &h.mul_vec(&e, &h.unit), &e));
        if w.is_some() {
            break;
        }
    }
    report.push("unit", w);

    // coassociativity, compared as flattened n^3 vectors
    let mut w = None;
    for i in 0..n {
        let mut left = vec![Scalar::zero(); n * n * n];
        let mut right = vec![Scalar::zero(); n * n * n];
        for (p, q, c) in &co[i] {
            for (a, b, d) in &co[*p] {
                left[(a * n + b) * n + q] += c * d;
            }
            for (a, b, d) in &co[*q] {
                right[(p * n + a) * n + b] += c * d;
            }
        }
        if let Some(x) = compare_vec(&[i], &left, &right) {
            w = Some(x);
            break;
        }
    }
    report.push("coassoc", w);

    // counit
    let mut w = None;
    for i in 0..n {
        let mut left = vec![Scalar::zero(); n];
        let mut right = vec![Scalar::zero(); n];
        for (p, q, c) in &co[i] {
            left[*q] += c * &h.counit[*p];
            right[*p] += c * &h.counit[*q];
        }
        let e = h.basis(i);
        w = compare_vec(&[i, 0], &left, &e).or_else(|| compare_vec(&[i, 1], &right, &e));
        if w.is_some() {
            break;
        }
    }
    report.push("counit", w);

    // bialgebra compatibility
    report.push("bialgebra", bialgebra_witness(h, &co));

    // antipode axioms
    let (left, right) = antipode_witnesses(h, &co);
    report.push("antipode-left", left);
    report.push("antipode-right", right);
    Ok(report)
}

fn comult_vec(h: &HopfData, co: &[Vec<CoTerm>], x: &[Scalar]) -> Matrix {
    let n = h.dim;
    let mut m = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (p, q, c) in &co[i] {
            m[(*p, *q)] += c * xi;
        }
    }
    m
}

fn bialgebra_witness(h: &HopfData, co: &[Vec<CoTerm>]) -> Option<crate::report::Witness> {
    let n = h.dim;
    let mt = h.mult_terms();
    for i in 0..n {
        for j in 0..n {
            let lhs = comult_vec(h, co, &h.mul_basis(i, j));
            let mut rhs = Matrix::zeros(n, n);
            for (p, q, c) in &co[i] {
                for (r, s, d) in &co[j] {
                    let cd = c * d;
                    for (u, x) in &mt[*p][*r] {
                        for (v, y) in &mt[*q][*s] {
                            rhs[(*u, *v)] += &cd * x * y;
                        }
                    }
                }
            }
            if let Some(w) = compare_vec(&[i, j], &flatten(&lhs), &flatten(&rhs)) {
                return Some(w);
            }
            let e_lhs = h.counit_of(&h.mul_basis(i, j));
            let e_rhs = &h.counit[i] * &h.counit[j];
            if let Some(w) = crate::report::compare(&[i, j], &e_lhs, &e_rhs) {
                return Some(w);
            }
        }
    }
    let d1 = comult_vec(h, co, &h.unit);
    let mut one_one = Matrix::zeros(n, n);
    for p in 0..n {
        for q in 0..n {
            one_one[(p, q)] = &h.unit[p] * &h.unit[q];
        }
    }
    if let Some(w) = compare_vec(&[n, n], &flatten(&d1), &flatten(&one_one)) {
        return Some(w);
    }
    crate::report::compare(&[n], &h.counit_of(&h.unit), &Scalar::one())
}

fn antipode_witnesses(
    h: &HopfData,
    co: &[Vec<CoTerm>],
) -> (Option<crate::report::Witness>, Option<crate::report::Witness>) {
    let n = h.dim;
    let mut left = None;
    let mut right = None;
    for i in 0..n {
        let target: Vec<Scalar> = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        let mut l = vec![Scalar::zero(); n];
        let mut r = vec![Scalar::zero(); n];
        for (p, q, c) in &co[i] {
            let sp = h.antipode.column(*p);
            let sq = h.antipode.column(*q);
            for (k, v) in h.mul_vec(&sp, &h.basis(*q)).into_iter().enumerate() {
                l[k] += c * v;
            }
            for (k, v) in h.mul_vec(&h.basis(*p), &sq).into_iter().enumerate() {
                r[k] += c * v;
            }
        }
        if left.is_none() {
            left = compare_vec(&[i], &l, &target);
        }
        if right.is_none() {
            right = compare_vec(&[i], &r, &target);
        }
    }
    (left, right)
}
