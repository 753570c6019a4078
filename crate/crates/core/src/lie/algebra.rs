use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{span_basis, Scalar, Tensor3};
use crate::report::{compare, AxiomReport};

/// Lie algebra by structure constants: `bracket[[i, j, k]]` is the
/// coefficient of `x_k` in `[x_i, x_j]`. `nilradical` flags basis indices
/// spanning an ideal whose images are expected to act nilpotently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiePresentation {
    pub dim: usize,
    pub bracket: Tensor3,
    pub names: Vec<String>,
    #[serde(default)]
    pub nilradical: Vec<usize>,
}

impl LiePresentation {
    pub fn new(bracket: Tensor3, names: Vec<String>, nilradical: Vec<usize>) -> Result<Self> {
        let [a, b, c] = bracket.shape();
        if a != b || b != c || names.len() != a || nilradical.iter().any(|&i| i >= a) {
            return Err(Error::ShapeMismatch("Lie presentation shapes".into()));
        }
        Ok(LiePresentation { dim: a, bracket, names, nilradical })
    }

    /// Two-dimensional `[X, Y] = Y`, with `X` at index 0, `Y` at index 1 and
    /// nilradical `{Y}`.
    pub fn aff() -> Self {
        let mut t = Tensor3::zeros([2, 2, 2]);
        t[[0, 1, 1]] = Scalar::one();
        t[[1, 0, 1]] = -Scalar::one();
        LiePresentation { dim: 2, bracket: t, names: vec!["X".into(), "Y".into()], nilradical: vec![1] }
    }

    /// Abelian algebra with the given basis names, all flagged nilpotent.
    pub fn abelian(names: &[&str]) -> Self {
        let n = names.len();
        LiePresentation {
            dim: n,
            bracket: Tensor3::zeros([n, n, n]),
            names: names.iter().map(|s| s.to_string()).collect(),
            nilradical: (0..n).collect(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn bracket_terms(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        (0..self.dim)
            .filter_map(|k| {
                let c = &self.bracket[[i, j, k]];
                (!c.is_zero()).then(|| (k, c.clone()))
            })
            .collect()
    }

    /// `[x, y]` for vectors in the basis.
    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for ([i, j, k], c) in self.bracket.nonzeros() {
            if x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            out[k] += c * &x[i] * &y[j];
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.nonzeros().next().is_none()
    }

    fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }
}

/// Antisymmetry `c_{ij}^k = −c_{ji}^k` and the Jacobi identity.
pub fn verify_lie(l: &LiePresentation) -> Result<AxiomReport> {
    let n = l.dim;
    if l.bracket.shape() != [n, n, n] || l.names.len() != n {
        return Err(Error::ShapeMismatch("Lie presentation shapes".into()));
    }
    let mut report = AxiomReport::new();
    let mut w = None;
    'anti: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = l.bracket[[i, j, k]].clone();
                let rhs = -l.bracket[[j, i, k]].clone();
                if let Some(x) = compare(&[i, j, k], &lhs, &rhs) {
                    w = Some(x);
                    break 'anti;
                }
            }
        }
    }
    report.push("antisymmetry", w);

    let mut w = None;
    'jac: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (l.basis(i), l.basis(j), l.basis(k));
                let a = l.bracket_vec(&x, &l.bracket_vec(&y, &z));
                let b = l.bracket_vec(&y, &l.bracket_vec(&z, &x));
                let c = l.bracket_vec(&z, &l.bracket_vec(&x, &y));
                if let Some(m) = (0..n).find(|&m| !(&a[m] + &b[m] + &c[m]).is_zero()) {
                    w = compare(&[i, j, k, m], &(&a[m] + &b[m] + &c[m]), &Scalar::zero());
                    break 'jac;
                }
            }
        }
    }
    report.push("jacobi", w);

    let ideal = l.nilradical.iter().all(|&j| {
        (0..n).all(|i| l.bracket_terms(i, j).iter().all(|(k, _)| l.nilradical.contains(k)))
    });
    if ideal {
        report.push("nilradical-ideal", None);
    } else {
        report.push_note("nilradical-ideal", false, "flagged indices are not closed under [g, -]");
    }
    Ok(report)
}

/// Span of the tensor components of `r = Σ r_{ij} x_i⊗x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpan {
    #[serde(with = "crate::exactlin::scalar::serde_vecs")]
    pub basis: Vec<Vec<Scalar>>,
    pub closed: bool,
    pub abelian: bool,
}

/// `r` is given by its coefficient matrix `r[i][j]` on `x_i⊗x_j`.
pub fn component_span(r: &[Vec<Scalar>], l: &LiePresentation) -> ComponentSpan {
    let n = l.dim;
    let mut vectors: Vec<Vec<Scalar>> = r.to_vec();
    vectors.extend((0..n).map(|j| r.iter().map(|row| row[j].clone()).collect()));
    let basis = span_basis(&vectors, n);
    let closed = is_subalgebra(&basis, l);
    let abelian = is_abelian(&basis, l);
    ComponentSpan { basis, closed, abelian }
}

pub fn is_subalgebra(basis: &[Vec<Scalar>], l: &LiePresentation) -> bool {
    basis.iter().all(|x| {
        basis.iter().all(|y| crate::exactlin::coordinates(basis, &l.bracket_vec(x, y)).is_some())
    })
}

pub fn is_abelian(basis: &[Vec<Scalar>], l: &LiePresentation) -> bool {
    basis.iter().all(|x| basis.iter().all(|y| l.bracket_vec(x, y).iter().all(Zero::is_zero)))
}
