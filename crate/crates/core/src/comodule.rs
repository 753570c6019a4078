//! Right comodules over a finite-dimensional Hopf algebra.
//!
//! `coaction[[a, b, i]]` is the coefficient of `v_b ⊗ e_i` in `ρ(v_a)`, so
//! the matrix coefficients are `t_{ba} = Σ_i coaction[[a, b, i]] e_i` and
//! `ρ(v_a) = Σ_b v_b ⊗ t_{ba}`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{solve_linear, span_basis, Matrix, Scalar, Tensor3};
use crate::hopf::{
    centrality_defect, convolve_on, convolve_pairs, drinfeld_element, grouplike_defect,
    rc_from_central_grouplike, verify_cotriangular, Functional, GroupTable, HopfData, PairForm,
};
use crate::report::{compare, AxiomReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comodule {
    pub dim: usize,
    pub coaction: Tensor3,
}

impl Comodule {
    pub fn new(coaction: Tensor3) -> Result<Self> {
        let [d, d2, _] = coaction.shape();
        if d != d2 {
            return Err(Error::ShapeMismatch("coaction must have shape [dim, dim, dim A]".into()));
        }
        Ok(Comodule { dim: d, coaction })
    }

    /// `k` with `ρ(1) = 1 ⊗ 1_A`.
    pub fn trivial(h: &HopfData) -> Self {
        let mut t = Tensor3::zeros([1, 1, h.dim]);
        for i in 0..h.dim {
            t[[0, 0, i]] = h.unit[i].clone();
        }
        Comodule { dim: 1, coaction: t }
    }

    /// `A` itself with `ρ = Δ`.
    pub fn regular(h: &HopfData) -> Self {
        Comodule { dim: h.dim, coaction: h.comult.clone() }
    }

    /// One-dimensional comodule `ρ(v) = v ⊗ x` for a grouplike `x ∈ A`.
    pub fn one_dimensional(x: &[Scalar]) -> Self {
        let mut t = Tensor3::zeros([1, 1, x.len()]);
        for (i, c) in x.iter().enumerate() {
            t[[0, 0, i]] = c.clone();
        }
        Comodule { dim: 1, coaction: t }
    }

    /// The `O(G)`-comodule of a representation `π` of `G`, in the delta
    /// basis: `t_{ba} = Σ_g π(g)_{ba} δ_g`.
    pub fn from_group_rep(g: &GroupTable, pi: &[Matrix]) -> Result<Self> {
        if pi.len() != g.order() {
            return Err(Error::ShapeMismatch("one matrix per group element".into()));
        }
        let d = pi[0].rows();
        for x in 0..g.order() {
            for y in 0..g.order() {
                if pi[x].mul(&pi[y]) != pi[g.mul(x, y)] {
                    return Err(Error::Invalid(format!("not a representation at ({x}, {y})")));
                }
            }
        }
        let mut t = Tensor3::zeros([d, d, g.order()]);
        for (x, m) in pi.iter().enumerate() {
            for a in 0..d {
                for b in 0..d {
                    t[[a, b, x]] = m[(b, a)].clone();
                }
            }
        }
        Ok(Comodule { dim: d, coaction: t })
    }

    fn check(&self, h: &HopfData) -> Result<()> {
        if self.coaction.shape() != [self.dim, self.dim, h.dim] {
            return Err(Error::ShapeMismatch(format!(
                "coaction shape {:?} for a comodule of dimension {} over an algebra of dimension {}",
                self.coaction.shape(),
                self.dim,
                h.dim
            )));
        }
        Ok(())
    }

    /// `t_{ba}` as a vector in `A`.
    pub fn coefficient(&self, b: usize, a: usize) -> Vec<Scalar> {
        let n = self.coaction.shape()[2];
        (0..n).map(|i| self.coaction[[a, b, i]].clone()).collect()
    }

    pub fn direct_sum(&self, other: &Comodule) -> Comodule {
        let n = self.coaction.shape()[2];
        let d = self.dim + other.dim;
        let mut t = Tensor3::zeros([d, d, n]);
        for ([a, b, i], c) in self.coaction.nonzeros() {
            t[[a, b, i]] = c.clone();
        }
        for ([a, b, i], c) in other.coaction.nonzeros() {
            t[[self.dim + a, self.dim + b, i]] = c.clone();
        }
        Comodule { dim: d, coaction: t }
    }
}

/// `(ρ⊗I)∘ρ = (I⊗Δ)∘ρ` and `(I⊗ε)∘ρ = I`.
pub fn verify_comodule(v: &Comodule, h: &HopfData) -> Result<AxiomReport> {
    v.check(h)?;
    h.check_shapes()?;
    let (d, n) = (v.dim, h.dim);
    let co = h.comult_terms();
    let mut report = AxiomReport::new();
    let mut w = None;
    'co: for a in 0..d {
        // coordinates (b, i, j) of v_b ⊗ e_i ⊗ e_j
        let mut left = vec![Scalar::zero(); d * n * n];
        let mut right = vec![Scalar::zero(); d * n * n];
        for c in 0..d {
            for j in 0..n {
                let x = &v.coaction[[a, c, j]];
                if x.is_zero() {
                    continue;
                }
                for b in 0..d {
                    for i in 0..n {
                        let y = &v.coaction[[c, b, i]];
                        if !y.is_zero() {
                            left[(b * n + i) * n + j] += x * y;
                        }
                    }
                }
                for (p, q, y) in &co[j] {
                    right[(c * n + p) * n + q] += x * y;
                }
            }
        }
        if let Some((k, _)) = left.iter().zip(&right).enumerate().find(|(_, (x, y))| x != y) {
            w = compare(&[a, k / (n * n), (k / n) % n, k % n], &left[k], &right[k]);
            break 'co;
        }
    }
    report.push("coassoc", w);

    let mut w = None;
    'cu: for a in 0..d {
        for b in 0..d {
            let lhs = h.counit_of(&v.coefficient(b, a));
            let rhs = if a == b { Scalar::one() } else { Scalar::zero() };
            if let Some(x) = compare(&[a, b], &lhs, &rhs) {
                w = Some(x);
                break 'cu;
            }
        }
    }
    report.push("counit", w);
    Ok(report)
}

fn require_comodule(v: &Comodule, h: &HopfData) -> Result<()> {
    let r = verify_comodule(v, h)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("not a comodule:\n{r}")))
    }
}

/// Spanning set of `A_V` together with its `Δ`-closure check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientCoalgebra {
    /// Echelon basis of `A_V` as vectors in `A`.
    #[serde(with = "crate::exactlin::scalar::serde_vecs")]
    pub basis: Vec<Vec<Scalar>>,
    pub closed: bool,
}

impl CoefficientCoalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    crate::exactlin::coordinates(basis, v).is_some()
}

/// `A_V = span{(f⊗I)ρ(v)}`.
pub fn coefficient_coalgebra(v: &Comodule, h: &HopfData) -> Result<CoefficientCoalgebra> {
    require_comodule(v, h)?;
    let n = h.dim;
    let coeffs: Vec<Vec<Scalar>> =
        (0..v.dim).flat_map(|b| (0..v.dim).map(move |a| (b, a))).map(|(b, a)| v.coefficient(b, a)).collect();
    let basis = span_basis(&coeffs, n);
    let co = h.comult_terms();
    let closed = basis.iter().all(|x| {
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (p, q, y) in &co[i] {
                m[(*p, *q)] += c * y;
            }
        }
        (0..n).all(|j| in_span(&basis, &m.column(j))) && (0..n).all(|i| in_span(&basis, m.row(i)))
    });
    Ok(CoefficientCoalgebra { basis, closed })
}

/// Matrix of `v ↦ (I⊗u)ρ(v)`: entry `(b, a)` is `u(t_{ba})`.
pub fn u_action(v: &Comodule, u: &Functional) -> Matrix {
    let d = v.dim;
    let mut m = Matrix::zeros(d, d);
    for a in 0..d {
        for b in 0..d {
            m[(b, a)] = u.eval(&v.coefficient(b, a));
        }
    }
    m
}

/// `V*` with `ρ(v^b) = Σ_a v^a ⊗ S(t_{ba})`.
pub fn dual_comodule(v: &Comodule, h: &HopfData) -> Result<Comodule> {
    v.check(h)?;
    let d = v.dim;
    let mut t = Tensor3::zeros([d, d, h.dim]);
    for b in 0..d {
        for a in 0..d {
            let s = h.antipode_of(&v.coefficient(b, a));
            for (i, x) in s.into_iter().enumerate() {
                t[[b, a, i]] = x;
            }
        }
    }
    Ok(Comodule { dim: d, coaction: t })
}

/// `V⊗W` with `ρ(v_a⊗w_c) = Σ v_b⊗w_d ⊗ t^V_{ba} t^W_{dc}`.
pub fn tensor_comodule(v: &Comodule, w: &Comodule, h: &HopfData) -> Result<Comodule> {
    v.check(h)?;
    w.check(h)?;
    let (dv, dw) = (v.dim, w.dim);
    let mut t = Tensor3::zeros([dv * dw, dv * dw, h.dim]);
    for a in 0..dv {
        for b in 0..dv {
            let x = v.coefficient(b, a);
            if x.iter().all(Zero::is_zero) {
                continue;
            }
            for c in 0..dw {
                for e in 0..dw {
                    let y = w.coefficient(e, c);
                    if y.iter().all(Zero::is_zero) {
                        continue;
                    }
                    for (i, z) in h.mul_vec(&x, &y).into_iter().enumerate() {
                        t[[a * dw + c, b * dw + e, i]] = z;
                    }
                }
            }
        }
    }
    Ok(Comodule { dim: dv * dw, coaction: t })
}

/// `c_{V,W}(v⊗w) = Σ w₀⊗v₀ R(v₁, w₁)`. Column `a·dim W + c` is the image
/// of `v_a⊗w_c`; row `d·dim V + b` is the coordinate on `w_d⊗v_b`.
pub fn braiding(v: &Comodule, w: &Comodule, h: &HopfData, r: &PairForm) -> Result<Matrix> {
    v.check(h)?;
    w.check(h)?;
    if !verify_cotriangular(h, r)?.passed() {
        return Err(Error::Invalid("R is not cotriangular".into()));
    }
    Ok(braiding_unchecked(v, w, r))
}

fn braiding_unchecked(v: &Comodule, w: &Comodule, r: &PairForm) -> Matrix {
    let (dv, dw) = (v.dim, w.dim);
    let mut m = Matrix::zeros(dw * dv, dv * dw);
    for a in 0..dv {
        for b in 0..dv {
            let x = v.coefficient(b, a);
            for c in 0..dw {
                for e in 0..dw {
                    let val = r.eval(&x, &w.coefficient(e, c));
                    if !val.is_zero() {
                        m[(e * dv + b, a * dw + c)] = val;
                    }
                }
            }
        }
    }
    m
}

/// `tr|_V(u)`.
pub fn categorical_dimension(v: &Comodule, u: &Functional) -> Scalar {
    u_action(v, u).trace()
}

/// Categorical dimension computed twice: as the trace of the Drinfeld
/// element and as the loop `k → V⊗V* → V*⊗V → k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatDim {
    #[serde(with = "crate::exactlin::scalar::serde_str")]
    pub trace: Scalar,
    #[serde(with = "crate::exactlin::scalar::serde_str")]
    pub braided_loop: Scalar,
}

pub fn categorical_dimension_checked(v: &Comodule, h: &HopfData, r: &PairForm) -> Result<CatDim> {
    require_comodule(v, h)?;
    let u = drinfeld_element(h, r)?;
    let trace = categorical_dimension(v, &u);
    let dual = dual_comodule(v, h)?;
    let c = braiding_unchecked(v, &dual, r);
    let d = v.dim;
    // coev(1) = Σ_a v_a ⊗ v^a at index a·d + a; ev(v^b ⊗ v_e) = δ_{be} at b·d + e
    let mut braided_loop = Scalar::zero();
    for a in 0..d {
        for b in 0..d {
            braided_loop += &c[(b * d + b, a * d + a)];
        }
    }
    if trace != braided_loop {
        return Err(Error::Invalid(format!(
            "categorical dimension mismatch: trace {trace}, braided loop {braided_loop}"
        )));
    }
    Ok(CatDim { trace, braided_loop })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> Scalar {
        match self {
            Sign::Plus => Scalar::one(),
            Sign::Minus => -Scalar::one(),
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `V = V₊ ⊕ V₋` by the spectral projectors of the `u`-action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignSplit {
    pub projector_plus: Matrix,
    pub projector_minus: Matrix,
}

impl SignSplit {
    /// `c_V = P₊ − P₋`.
    pub fn sign_operator(&self) -> Matrix {
        self.projector_plus.sub(&self.projector_minus)
    }
}

/// Only the semisimple case `(M − I)(M + I) = 0` is handled.
pub fn sign_split(v: &Comodule, u: &Functional) -> Result<SignSplit> {
    let m = u_action(v, u);
    let i = Matrix::identity(v.dim);
    if !m.sub(&i).mul(&m.add(&i)).is_zero() {
        return Err(Error::NotSemisimpleSigns);
    }
    Ok(split_of(&m))
}

pub(crate) fn split_of(m: &Matrix) -> SignSplit {
    let i = Matrix::identity(m.rows());
    let half = Scalar::new(1.into(), 2.into());
    SignSplit {
        projector_plus: m.add(&i).scale(&half),
        projector_minus: i.sub(m).scale(&half),
    }
}

/// The central grouplike `c` acting as `±ε` on each listed comodule's
/// coefficient coalgebra.
///
/// The coefficient coalgebras must span `A`. Every product of two listed
/// comodules is checked against the tensor rule: `c` must act
/// on `A_{V⊗W}` by the product of the signs.
pub fn central_grouplike_from_splits(h: &HopfData, splits: &[(Comodule, Sign)]) -> Result<Functional> {
    let n = h.dim;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (k, (v, s)) in splits.iter().enumerate() {
        require_comodule(v, h).map_err(|e| Error::Invalid(format!("comodule {k}: {e}")))?;
        for a in 0..v.dim {
            for b in 0..v.dim {
                rows.push(v.coefficient(b, a));
                rhs.push(if a == b { s.value() } else { Scalar::zero() });
            }
        }
    }
    if span_basis(&rows, n).len() < n {
        return Err(Error::Invalid("coefficient coalgebras do not span the algebra".into()));
    }
    let a = Matrix::from_rows(rows)?;
    let c = match solve_linear(&a, &rhs) {
        Ok(x) => Functional::new(x),
        Err(Error::NoSolution) => {
            return Err(Error::InconsistentSigns("sign assignments conflict on a shared coefficient".into()))
        }
        Err(e) => return Err(e),
    };
    for (i, (v, s)) in splits.iter().enumerate() {
        for (j, (w, t)) in splits.iter().enumerate() {
            let sign = s.times(*t).value();
            for a in 0..v.dim {
                for b in 0..v.dim {
                    for p in 0..w.dim {
                        for q in 0..w.dim {
                            let prod = h.mul_vec(&v.coefficient(b, a), &w.coefficient(q, p));
                            let expected = if a == b && p == q { sign.clone() } else { Scalar::zero() };
                            if c.eval(&prod) != expected {
                                return Err(Error::InconsistentSigns(format!(
                                    "tensor rule fails on comodules {i} ⊗ {j}"
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    if let Some(w) = grouplike_defect(h, &c) {
        return Err(Error::NotGrouplike(w));
    }
    if let Some(index) = centrality_defect(h, &c) {
        return Err(Error::NotCentral { index });
    }
    let cc = convolve_on(h, &c, &c)?;
    if let Some(index) = (0..n).find(|&i| cc.coefficients[i] != h.counit[i]) {
        return Err(Error::NotInvolutive { index });
    }
    Ok(c)
}

/// `R ↦ R∗R_c` with `c` read off from the signs; returns the new form and
/// its Drinfeld element.
pub fn normalize_by_splits(
    h: &HopfData,
    r: &PairForm,
    splits: &[(Comodule, Sign)],
) -> Result<(PairForm, Functional)> {
    let c = central_grouplike_from_splits(h, splits)?;
    let rc = rc_from_central_grouplike(h, &c)?;
    let new_r = convolve_pairs(h, r, &rc)?;
    let u = drinfeld_element(h, &new_r)?;
    Ok((new_r, u))
}

/// A basis of the comodule endomorphisms `f` with `ρ∘f = (f⊗I)∘ρ`.
pub fn endomorphisms(v: &Comodule, h: &HopfData) -> Result<Vec<Matrix>> {
    v.check(h)?;
    let (d, n) = (v.dim, h.dim);
    // unknown f[(c, a)] at column c·d + a; equation (a, x, i)
    let mut sys = Matrix::zeros(d * d * n, d * d);
    for a in 0..d {
        for x in 0..d {
            for i in 0..n {
                let row = (a * d + x) * n + i;
                for c in 0..d {
                    sys[(row, c * d + a)] += &v.coaction[[c, x, i]];
                }
                for b in 0..d {
                    let y = &v.coaction[[a, b, i]];
                    if !y.is_zero() {
                        sys[(row, x * d + b)] -= y;
                    }
                }
            }
        }
    }
    sys.nullspace().into_iter().map(|f| Matrix::from_vec(d, d, f)).collect()
}
