use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::data::{CoTerm, HopfData};
use crate::error::{Error, Result};
use crate::exactlin::{scalar::serde_vec, solve_linear, Matrix, Scalar};

/// Coalgebra carrier of a convolution product: either `A` itself or the
/// tensor-product coalgebra `A⊗A` (basis `e_i⊗e_j` at index `i·dim + j`).
#[derive(Clone, Debug)]
pub struct Coalgebra {
    dim: usize,
    terms: Vec<Vec<CoTerm>>,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    pub fn of(h: &HopfData) -> Self {
        Coalgebra { dim: h.dim, terms: h.comult_terms(), counit: h.counit.clone() }
    }

    /// `A⊗A` with `Δ(a⊗b) = Σ (a₁⊗b₁)⊗(a₂⊗b₂)`.
    pub fn tensor_square(h: &HopfData) -> Self {
        let n = h.dim;
        let base = h.comult_terms();
        let mut terms = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                let t = &mut terms[i * n + j];
                for (a, b, x) in &base[i] {
                    for (c, d, y) in &base[j] {
                        t.push((a * n + c, b * n + d, x * y));
                    }
                }
            }
        }
        let counit = (0..n * n).map(|k| &h.counit[k / n] * &h.counit[k % n]).collect();
        Coalgebra { dim: n * n, terms, counit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self, i: usize) -> &[CoTerm] {
        &self.terms[i]
    }

    pub fn unit_functional(&self) -> Functional {
        Functional { coefficients: self.counit.clone() }
    }
}

/// Linear functional on a coalgebra carrier, stored by its values on the
/// basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Functional {
    #[serde(with = "serde_vec")]
    pub coefficients: Vec<Scalar>,
}

impl Functional {
    pub fn new(coefficients: Vec<Scalar>) -> Self {
        Functional { coefficients }
    }

    pub fn zero(dim: usize) -> Self {
        Functional { coefficients: vec![Scalar::zero(); dim] }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        self.coefficients
            .iter()
            .zip(x)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Functional { coefficients: self.coefficients.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Functional) -> Self {
        Functional {
            coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Bilinear form on `A`, entry `(i, j)` being its value on `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairForm {
    pub dim: usize,
    pub matrix: Matrix,
}

impl PairForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch("pair form must be square".into()));
        }
        Ok(PairForm { dim: matrix.rows(), matrix })
    }

    /// `ε⊗ε`.
    pub fn counit_pair(h: &HopfData) -> Self {
        let n = h.dim;
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &h.counit[i] * &h.counit[j];
            }
        }
        PairForm { dim: n, matrix: m }
    }

    /// `f ⊗ g` as a form: `(a, b) ↦ f(a) g(b)`.
    pub fn outer(f: &Functional, g: &Functional) -> Self {
        let n = f.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &f.coefficients[i] * &g.coefficients[j];
            }
        }
        PairForm { dim: n, matrix: m }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[(i, j)]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let m = &self.matrix[(i, j)];
                if !yj.is_zero() && !m.is_zero() {
                    acc += xi * yj * m;
                }
            }
        }
        acc
    }

    /// `J∘τ`.
    pub fn flipped(&self) -> Self {
        PairForm { dim: self.dim, matrix: self.matrix.transpose() }
    }

    pub fn to_functional(&self) -> Functional {
        Functional { coefficients: self.matrix.data().to_vec() }
    }

    pub fn from_functional(dim: usize, f: &Functional) -> Result<Self> {
        Ok(PairForm { dim, matrix: Matrix::from_vec(dim, dim, f.coefficients.clone())? })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        PairForm { dim: self.dim, matrix: self.matrix.scale(s) }
    }

    pub fn add(&self, other: &PairForm) -> Self {
        PairForm { dim: self.dim, matrix: self.matrix.add(&other.matrix) }
    }
}

/// `(f∗g)(x) = Σ f(x₁) g(x₂)`.
pub fn convolve(f: &Functional, g: &Functional, carrier: &Coalgebra) -> Result<Functional> {
    if f.len() != carrier.dim || g.len() != carrier.dim {
        return Err(Error::ShapeMismatch(format!(
            "functionals of length {} and {} on a carrier of dimension {}",
            f.len(),
            g.len(),
            carrier.dim
        )));
    }
    let coefficients = (0..carrier.dim)
        .map(|x| {
            carrier.terms[x].iter().fold(Scalar::zero(), |acc, (y, z, c)| {
                let (a, b) = (&f.coefficients[*y], &g.coefficients[*z]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + c * a * b
                }
            })
        })
        .collect();
    Ok(Functional { coefficients })
}

/// Two-sided convolution inverse. Solves the left-convolution system
/// `f∗x = ε` and then checks `x∗f = ε`.
pub fn convolution_inverse(f: &Functional, carrier: &Coalgebra) -> Result<Functional> {
    let n = carrier.dim;
    if f.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "functional of length {} on a carrier of dimension {n}",
            f.len()
        )));
    }
    let mut op = Matrix::zeros(n, n);
    for x in 0..n {
        for (y, z, c) in &carrier.terms[x] {
            let fy = &f.coefficients[*y];
            if !fy.is_zero() {
                op[(x, *z)] += c * fy;
            }
        }
    }
    let inv = match solve_linear(&op, &carrier.counit) {
        Ok(x) => Functional { coefficients: x },
        Err(Error::NoSolution) => return Err(Error::NotInvertible),
        Err(e) => return Err(e),
    };
    let unit = carrier.unit_functional();
    if convolve(f, &inv, carrier)? != unit || convolve(&inv, f, carrier)? != unit {
        return Err(Error::NotInvertible);
    }
    Ok(inv)
}

/// Convolution of two forms on `A⊗A`.
pub fn convolve_pairs(h: &HopfData, a: &PairForm, b: &PairForm) -> Result<PairForm> {
    let carrier = Coalgebra::tensor_square(h);
    let f = convolve(&a.to_functional(), &b.to_functional(), &carrier)?;
    PairForm::from_functional(h.dim, &f)
}

pub fn pair_inverse(h: &HopfData, a: &PairForm) -> Result<PairForm> {
    let carrier = Coalgebra::tensor_square(h);
    let f = convolution_inverse(&a.to_functional(), &carrier)?;
    PairForm::from_functional(h.dim, &f)
}
