//! Group algebras, duals and changes of basis.

use num_traits::{One, Zero};

use super::coalgebra::{Functional, PairForm};
use super::data::HopfData;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Tensor3};

/// Multiplication table of a finite group: `table[g][h]` is the index of `gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {g} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("entry {x} out of range in row {g}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable { table, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    /// Cyclic group `Z/n`.
    pub fn cyclic(n: usize) -> Self {
        Self::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
            .expect("cyclic group")
    }

    /// Direct product, element `(a, b)` at index `a·|H| + b`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> Self {
        let (n, m) = (g.order(), h.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        Self::new(table).expect("direct product of groups")
    }

    /// Group of permutations given as images of `0..k`, closed under
    /// composition `(στ)(i) = σ(τ(i))`. Elements are indexed in the order
    /// given.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        index(&st).ok_or_else(|| Error::NotAGroup("not closed under composition".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(table)
    }
}

/// `k[G]` in the grouplike basis: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn build_group_algebra(mult_table: &[Vec<usize>]) -> Result<HopfData> {
    let g = GroupTable::new(mult_table.to_vec())?;
    Ok(group_algebra(&g))
}

pub fn group_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let mut mult = Tensor3::zeros([n, n, n]);
    let mut comult = Tensor3::zeros([n, n, n]);
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mult[[a, b, g.mul(a, b)]] = Scalar::one();
        }
        comult[[a, a, a]] = Scalar::one();
        antipode[(g.inverse[a], a)] = Scalar::one();
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[g.identity] = Scalar::one();
    HopfData { dim: n, mult, unit, comult, counit: vec![Scalar::one(); n], antipode }
}

/// The dual Hopf algebra in the dual basis: multiplication and
/// comultiplication swap, unit and counit swap, antipode transposes.
pub fn dualize(h: &HopfData) -> HopfData {
    let n = h.dim;
    let mut mult = Tensor3::zeros([n, n, n]);
    let mut comult = Tensor3::zeros([n, n, n]);
    for ([k, i, j], c) in h.comult.nonzeros() {
        mult[[i, j, k]] = c.clone();
    }
    for ([i, j, k], c) in h.mult.nonzeros() {
        comult[[k, i, j]] = c.clone();
    }
    HopfData {
        dim: n,
        mult,
        unit: h.counit.clone(),
        comult,
        counit: h.unit.clone(),
        antipode: h.antipode.transpose(),
    }
}

/// Re-express `h` in the basis `f_j = Σ_i p[(i, j)] e_i`.
pub fn change_basis(h: &HopfData, p: &Matrix) -> Result<HopfData> {
    let n = h.dim;
    if p.rows() != n || p.cols() != n {
        return Err(Error::ShapeMismatch("change-of-basis matrix".into()));
    }
    let q = p.inverse().map_err(|_| Error::Invalid("change-of-basis matrix is singular".into()))?;
    let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
    let mut mult = Tensor3::zeros([n, n, n]);
    for a in 0..n {
        for b in 0..n {
            let prod = q.apply(&h.mul_vec(&cols[a], &cols[b]));
            for (k, v) in prod.into_iter().enumerate() {
                mult[[a, b, k]] = v;
            }
        }
    }
    let co = h.comult_terms();
    let mut comult = Tensor3::zeros([n, n, n]);
    for a in 0..n {
        // Δ(f_a) in the old basis, then apply q⊗q
        let mut old = Matrix::zeros(n, n);
        for (i, x) in cols[a].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (u, v, c) in &co[i] {
                old[(*u, *v)] += c * x;
            }
        }
        let new = q.mul(&old).mul(&q.transpose());
        for b in 0..n {
            for c in 0..n {
                comult[[a, b, c]] = new[(b, c)].clone();
            }
        }
    }
    let counit = (0..n).map(|a| h.counit_of(&cols[a])).collect();
    let unit = q.apply(&h.unit);
    let antipode = q.mul(&h.antipode).mul(p);
    Ok(HopfData { dim: n, mult, unit, comult, counit, antipode })
}

/// A form on `A` expressed in the new basis `f_j = Σ_i p[(i, j)] e_i`.
pub fn change_basis_form(j: &PairForm, p: &Matrix) -> PairForm {
    PairForm { dim: j.dim, matrix: p.transpose().mul(&j.matrix).mul(p) }
}

pub fn change_basis_functional(f: &Functional, p: &Matrix) -> Functional {
    Functional::new(p.transpose().apply(&f.coefficients))
}
