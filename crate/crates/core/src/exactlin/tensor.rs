use std::ops::{Index, IndexMut};

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{format_scalar, serde_str::ScalarLit, Scalar};
use crate::error::{Error, Result};

/// Dense rank-`R` array of scalars, last axis varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const R: usize> {
    shape: [usize; R],
    data: Vec<Scalar>,
}

pub type Tensor3 = Tensor<3>;
pub type Tensor4 = Tensor<4>;

impl<const R: usize> Tensor<R> {
    pub fn zeros(shape: [usize; R]) -> Self {
        let len = shape.iter().product();
        Tensor { shape, data: vec![Scalar::zero(); len] }
    }

    pub fn from_vec(shape: [usize; R], data: Vec<Scalar>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if data.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for tensor of shape {shape:?}",
                data.len()
            )));
        }
        Ok(Tensor { shape, data })
    }

    pub fn shape(&self) -> [usize; R] {
        self.shape
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, idx: [usize; R]) -> usize {
        let mut off = 0;
        for (a, (&i, &n)) in idx.iter().zip(&self.shape).enumerate() {
            debug_assert!(i < n, "axis {a} index {i} out of range {n}");
            off = off * n + i;
        }
        off
    }

    /// Nonzero entries with their multi-indices.
    pub fn nonzeros(&self) -> impl Iterator<Item = ([usize; R], &Scalar)> + '_ {
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(mut off, x)| {
            let mut idx = [0; R];
            for a in (0..R).rev() {
                idx[a] = off % self.shape[a];
                off /= self.shape[a];
            }
            (idx, x)
        })
    }
}

impl<const R: usize> Index<[usize; R]> for Tensor<R> {
    type Output = Scalar;
    fn index(&self, idx: [usize; R]) -> &Scalar {
        &self.data[self.offset(idx)]
    }
}

impl<const R: usize> IndexMut<[usize; R]> for Tensor<R> {
    fn index_mut(&mut self, idx: [usize; R]) -> &mut Scalar {
        let off = self.offset(idx);
        &mut self.data[off]
    }
}

impl Serialize for Tensor<3> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let [a, b, c] = self.shape;
        let nested: Vec<Vec<Vec<String>>> = (0..a)
            .map(|i| {
                (0..b)
                    .map(|j| (0..c).map(|k| format_scalar(&self[[i, j, k]])).collect())
                    .collect()
            })
            .collect();
        nested.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor<3> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Vec<Vec<ScalarLit>>>::deserialize(d)?;
        let a = raw.len();
        let b = raw.first().map_or(0, Vec::len);
        let c = raw.first().and_then(|r| r.first()).map_or(0, Vec::len);
        let mut data = Vec::with_capacity(a * b * c);
        for plane in raw {
            if plane.len() != b {
                return Err(D::Error::custom("ragged rank-3 tensor"));
            }
            for row in plane {
                if row.len() != c {
                    return Err(D::Error::custom("ragged rank-3 tensor"));
                }
                for x in row {
                    data.push(x.into_scalar().map_err(D::Error::custom)?);
                }
            }
        }
        Tensor::from_vec([a, b, c], data).map_err(D::Error::custom)
    }
}
