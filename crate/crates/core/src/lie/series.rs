//! Truncated `h`-power series with coefficients in `U(g)^{⊗k}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::LiePresentation;
use super::pbw::{Pbw, UTensor, Word};
use crate::error::{Error, Result};
use crate::exactlin::{frac, int, Scalar};

/// `Σ_{d ≤ order} h^d coeffs[d]`, all coefficients of the same arity and
/// kept in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub arity: usize,
    pub order: usize,
    pub coeffs: Vec<UTensor>,
}

/// Twist series live in `U(g)⊗U(g)[[h]]`.
pub type TwistSeries = Series;

impl Series {
    pub fn zero(arity: usize, order: usize) -> Self {
        Series { arity, order, coeffs: vec![UTensor::zero(arity); order + 1] }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        let mut s = Self::zero(arity, order);
        s.coeffs[0] = UTensor::one(arity);
        s
    }

    pub fn from_coeffs(coeffs: Vec<UTensor>) -> Result<Self> {
        let arity = coeffs.first().map(|c| c.arity).ok_or_else(|| Error::Invalid("empty series".into()))?;
        if coeffs.iter().any(|c| c.arity != arity) {
            return Err(Error::ShapeMismatch("series coefficients of mixed arity".into()));
        }
        Ok(Series { arity, order: coeffs.len() - 1, coeffs })
    }

    pub fn coeff(&self, d: usize) -> &UTensor {
        &self.coeffs[d]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series { arity: self.arity, order, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn map(&self, f: impl Fn(&UTensor) -> UTensor) -> Self {
        let coeffs: Vec<UTensor> = self.coeffs.iter().map(f).collect();
        let arity = coeffs[0].arity;
        Series { arity, order: self.order, coeffs }
    }

    pub fn add(&self, other: &Series) -> Self {
        let order = self.order.min(other.order);
        Series {
            arity: self.arity,
            order,
            coeffs: (0..=order).map(|d| self.coeffs[d].add(&other.coeffs[d])).collect(),
        }
    }

    pub fn flip(&self) -> Self {
        self.map(UTensor::flip)
    }

    pub fn place(&self, positions: &[usize], arity: usize) -> Self {
        self.map(|c| c.place(positions, arity))
    }

    pub fn counit_slot(&self, slot: usize) -> Self {
        self.map(|c| c.counit_slot(slot))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == UTensor::one(self.arity) && self.coeffs[1..].iter().all(UTensor::is_zero)
    }

    /// Highest degree with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        (0..=self.order).rev().find(|&d| !self.coeffs[d].is_zero()).unwrap_or(0)
    }
}

impl Pbw<'_> {
    pub fn series_normalize(&self, a: &Series) -> Series {
        a.map(|c| self.normalize(c))
    }

    /// Product truncated at the smaller order.
    pub fn series_mul(&self, a: &Series, b: &Series) -> Series {
        let order = a.order.min(b.order);
        let mut coeffs = vec![UTensor::zero(a.arity); order + 1];
        for i in 0..=order {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if b.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.mul(&a.coeffs[i], &b.coeffs[j]));
            }
        }
        Series { arity: a.arity, order, coeffs }
    }

    /// Inverse of a series with constant term `1⊗⋯⊗1`.
    pub fn series_inverse(&self, a: &Series) -> Result<Series> {
        let one = UTensor::one(a.arity);
        if self.normalize(&a.coeffs[0]) != one {
            return Err(Error::NotNormalized);
        }
        let mut inv = vec![one];
        for n in 1..=a.order {
            let mut acc = UTensor::zero(a.arity);
            for k in 1..=n {
                if a.coeffs[k].is_zero() || inv[n - k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.mul(&a.coeffs[k], &inv[n - k]));
            }
            inv.push(acc.scale(&-Scalar::one()));
        }
        Ok(Series { arity: a.arity, order: a.order, coeffs: inv })
    }

    pub fn series_coproduct(&self, a: &Series, slot: usize) -> Series {
        a.map(|c| self.coproduct_slot(c, slot))
    }

    pub fn series_antipode(&self, a: &Series, slot: usize) -> Series {
        a.map(|c| self.antipode_slot(c, slot))
    }

    pub fn series_multiply_slots(&self, a: &Series) -> Series {
        a.map(|c| self.multiply_slots(c))
    }
}

/// `(ε⊗I)(J) = (I⊗ε)(J) = 1` at every degree, degree-0 term `1⊗1`.
pub fn check_twist_normalization(j: &TwistSeries) -> Result<()> {
    if j.arity != 2 || j.coeffs[0] != UTensor::one(2) {
        return Err(Error::NotNormalized);
    }
    let one = Series::one(1, j.order);
    if j.counit_slot(0) != one || j.counit_slot(1) != one {
        return Err(Error::NotNormalized);
    }
    Ok(())
}

/// Per-degree `(Δ⊗I)(J)(J⊗1) − (I⊗Δ)(J)(1⊗J)` in `U(g)^{⊗3}`.
pub fn twist_equation_residual(j: &TwistSeries, l: &LiePresentation) -> Result<Vec<UTensor>> {
    if j.arity != 2 {
        return Err(Error::ShapeMismatch("twist series must have two tensor slots".into()));
    }
    let p = Pbw::new(l);
    let j = p.series_normalize(j);
    let lhs = p.series_mul(&p.series_coproduct(&j, 0), &j.place(&[0, 1], 3));
    let rhs = p.series_mul(&p.series_coproduct(&j, 1), &j.place(&[1, 2], 3));
    Ok((0..=j.order).map(|d| lhs.coeffs[d].sub(&rhs.coeffs[d])).collect())
}

pub fn residual_vanishes(residual: &[UTensor]) -> bool {
    residual.iter().all(UTensor::is_zero)
}

fn check_antisymmetric(r: &[Vec<Scalar>], dim: usize) -> Result<()> {
    if r.len() != dim || r.iter().any(|row| row.len() != dim) {
        return Err(Error::ShapeMismatch("r must be a dim × dim coefficient matrix".into()));
    }
    for i in 0..dim {
        for j in 0..dim {
            if r[i][j] != -r[j][i].clone() {
                return Err(Error::NotAntisymmetric(i, j));
            }
        }
    }
    Ok(())
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`, normalized.
pub fn cybe_residual(l: &LiePresentation, r: &[Vec<Scalar>]) -> Result<UTensor> {
    check_antisymmetric(r, l.dim)?;
    let p = Pbw::new(l);
    let r = UTensor::from_matrix(r);
    let (r12, r13, r23) = (r.place(&[0, 1], 3), r.place(&[0, 2], 3), r.place(&[1, 2], 3));
    Ok(p.commutator(&r12, &r13).add(&p.commutator(&r12, &r23)).add(&p.commutator(&r13, &r23)))
}

fn factorial(n: usize) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |acc, k| acc * int(k))
}

/// `e^{hr/2} = Σ_{n ≤ N} (h/2)^n rⁿ / n!` over an abelian algebra.
pub fn exp_twist(l: &LiePresentation, r: &[Vec<Scalar>], order: usize) -> Result<TwistSeries> {
    if let Some(([i, j, _], _)) = l.bracket.nonzeros().next() {
        return Err(Error::NotAbelian(i, j));
    }
    check_antisymmetric(r, l.dim)?;
    let p = Pbw::new(l);
    let r = UTensor::from_matrix(r);
    let mut coeffs = vec![UTensor::one(2)];
    let mut power = UTensor::one(2);
    for n in 1..=order {
        power = p.mul(&power, &r);
        coeffs.push(power.scale(&(Scalar::one() / (factorial(n) * int(1i64 << n)))));
    }
    Series::from_coeffs(coeffs)
}

/// Coefficients of `X(X−1)⋯(X−n+1)` in powers of `X`.
fn falling_factorial(n: usize) -> Vec<Scalar> {
    let mut poly = vec![Scalar::one()];
    for k in 0..n {
        // multiply by (X − k)
        let mut next = vec![Scalar::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * int(k as i64);
        }
        poly = next;
    }
    poly
}

/// `Σ_{n ≤ N} hⁿ/n! · X(X−1)⋯(X−n+1) ⊗ Yⁿ` over [`LiePresentation::aff`].
pub fn jordanian_twist(order: usize) -> TwistSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut t = UTensor::zero(2);
        let inv = Scalar::one() / factorial(n);
        for (k, c) in falling_factorial(n).into_iter().enumerate() {
            t.add_term(vec![vec![0; k], vec![1; n]], c * &inv);
        }
        coeffs.push(t);
    }
    Series::from_coeffs(coeffs).expect("nonempty")
}

/// One coefficient `f(s, m)` of the J_f series at some degree `n`: `perm`
/// is a permutation of `0..2n` (0-based), `split` the point `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JfEntry {
    pub perm: Vec<usize>,
    pub split: usize,
    #[serde(with = "crate::exactlin::scalar::serde_str")]
    pub value: Scalar,
}

/// Coefficient tables per degree `n ≥ 2`; unlisted `(s, m)` are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JfTable {
    pub degrees: BTreeMap<usize, Vec<JfEntry>>,
}

impl JfTable {
    /// The table of `e^{hr/2}`: `1/(2ⁿ n!)` on the identity permutation with
    /// split `n`.
    pub fn exponential(order: usize) -> Self {
        let degrees = (2..=order)
            .map(|n| {
                let e = JfEntry {
                    perm: (0..2 * n).collect(),
                    split: n,
                    value: Scalar::one() / (factorial(n) * int(1i64 << n)),
                };
                (n, vec![e])
            })
            .collect();
        JfTable { degrees }
    }
}

/// `L_{s,m}(r^{⊗n})`. Slot `k < n` holds the first component of the `k`-th
/// copy of `r`, slot `n + k` its second component.
pub fn l_sm(p: &Pbw, r: &UTensor, n: usize, perm: &[usize], split: usize) -> UTensor {
    let comps: Vec<(usize, usize, Scalar)> = r
        .terms
        .iter()
        .filter(|(w, _)| w[0].len() == 1 && w[1].len() == 1)
        .map(|(w, c)| (w[0][0], w[1][0], c.clone()))
        .collect();
    let mut raw = UTensor::zero(2);
    let mut choice = vec![0usize; n];
    if comps.is_empty() {
        return raw;
    }
    loop {
        let mut slots = vec![0usize; 2 * n];
        let mut coef = Scalar::one();
        for (k, &c) in choice.iter().enumerate() {
            slots[k] = comps[c].0;
            slots[n + k] = comps[c].1;
            coef *= &comps[c].2;
        }
        let left: Word = perm[..split].iter().map(|&s| slots[s]).collect();
        let right: Word = perm[split..].iter().map(|&s| slots[s]).collect();
        raw.add_term(vec![left, right], coef);
        // next choice
        let mut k = 0;
        while k < n {
            choice[k] += 1;
            if choice[k] < comps.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    p.normalize(&raw)
}

/// A J_f series together with whether its twist residuals vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JfTwist {
    pub series: TwistSeries,
    pub quantization: bool,
}

/// `J_f(r, h) = 1 + hr/2 + Σ_{2 ≤ n ≤ N} hⁿ Σ f(s, m) L_{s,m}(r^{⊗n})`.
pub fn jf_twist(table: &JfTable, r: &[Vec<Scalar>], order: usize, l: &LiePresentation) -> Result<JfTwist> {
    check_antisymmetric(r, l.dim)?;
    for n in 2..=order {
        let entries = table.degrees.get(&n).ok_or(Error::MissingTableEntries { degree: n })?;
        for e in entries {
            let mut sorted = e.perm.clone();
            sorted.sort_unstable();
            if sorted != (0..2 * n).collect::<Vec<_>>() || e.split > 2 * n {
                return Err(Error::Invalid(format!("bad permutation or split at degree {n}")));
            }
        }
    }
    let p = Pbw::new(l);
    let rt = UTensor::from_matrix(r);
    let mut coeffs = vec![UTensor::one(2)];
    if order >= 1 {
        coeffs.push(rt.scale(&frac(1, 2)));
    }
    for n in 2..=order {
        let mut acc = UTensor::zero(2);
        for e in &table.degrees[&n] {
            if e.value.is_zero() {
                continue;
            }
            acc = acc.add(&l_sm(&p, &rt, n, &e.perm, e.split).scale(&e.value));
        }
        coeffs.push(acc);
    }
    let series = Series::from_coeffs(coeffs)?;
    let quantization = residual_vanishes(&twist_equation_residual(&series, l)?);
    Ok(JfTwist { series, quantization })
}

/// `R = J₂₁⁻¹ J`, checked triangular: `R₂₁ R = 1⊗1` mod `h^{N+1}`.
pub fn r_from_twist(j: &TwistSeries, l: &LiePresentation) -> Result<TwistSeries> {
    let p = Pbw::new(l);
    let j = p.series_normalize(j);
    if j.arity != 2 || j.coeffs[0] != UTensor::one(2) {
        return Err(Error::NotNormalized);
    }
    let r = p.series_mul(&p.series_inverse(&j.flip())?, &j);
    if !p.series_mul(&r.flip(), &r).is_one() {
        return Err(Error::Invalid("R₂₁R ≠ 1 for the R-matrix of a twist".into()));
    }
    Ok(r)
}

/// `J^g = Δ(g) J (g⁻¹⊗g⁻¹)` for `g = 1 + Σ hⁿ gₙ`, `ε(gₙ) = 0`.
pub fn gauge_transform(j: &TwistSeries, g: &Series, l: &LiePresentation) -> Result<TwistSeries> {
    if g.arity != 1 || j.arity != 2 {
        return Err(Error::ShapeMismatch("gauge element must have one slot, twist two".into()));
    }
    let p = Pbw::new(l);
    let g = p.series_normalize(&g.truncate(j.order));
    if g.coeffs[0] != UTensor::one(1) {
        return Err(Error::NotNormalized);
    }
    if let Some(d) = (1..=g.order).find(|&d| g.coeffs[d].terms.contains_key(&vec![Vec::new()])) {
        return Err(Error::BadCounit { degree: d });
    }
    let j = p.series_normalize(j).truncate(g.order);
    let ginv = p.series_inverse(&g)?;
    let right = p.series_mul(&ginv.place(&[0], 2), &ginv.place(&[1], 2));
    Ok(p.series_mul(&p.series_mul(&p.series_coproduct(&g, 0), &j), &right))
}

/// One term of a serialized twist series: `(Σ left) ⊗ (Σ right)` at `deg`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    pub deg: usize,
    pub left: Vec<(String, Vec<usize>)>,
    pub right: Vec<(String, Vec<usize>)>,
}

/// File form of a twist series, optionally carrying its Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSeriesFile {
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie: Option<LiePresentation>,
    pub terms: Vec<SeriesTermJson>,
}

impl TwistSeriesFile {
    pub fn from_series(s: &TwistSeries, lie: Option<&LiePresentation>) -> Self {
        let mut terms = Vec::new();
        for (deg, c) in s.coeffs.iter().enumerate() {
            for (w, x) in &c.terms {
                terms.push(SeriesTermJson {
                    deg,
                    left: vec![(crate::exactlin::format_scalar(x), w[0].clone())],
                    right: vec![("1".into(), w[1].clone())],
                });
            }
        }
        TwistSeriesFile { order: s.order, lie: lie.cloned(), terms }
    }

    pub fn to_series(&self) -> Result<TwistSeries> {
        let mut s = Series::zero(2, self.order);
        for t in &self.terms {
            if t.deg > self.order {
                return Err(Error::Invalid(format!("term of degree {} above order {}", t.deg, self.order)));
            }
            for (a, wl) in &t.left {
                let a = crate::exactlin::parse_scalar(a)?;
                for (b, wr) in &t.right {
                    let b = crate::exactlin::parse_scalar(b)?;
                    s.coeffs[t.deg].add_term(vec![wl.clone(), wr.clone()], &a * &b);
                }
            }
        }
        if let Some(l) = &self.lie {
            let max = l.dim;
            if s.coeffs.iter().any(|c| c.terms.keys().flatten().flatten().any(|&i| i >= max)) {
                return Err(Error::Invalid("word letter outside the Lie basis".into()));
            }
        }
        Ok(s)
    }
}
