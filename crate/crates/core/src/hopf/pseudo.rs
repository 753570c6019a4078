use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coalgebra::PairForm;
use super::data::HopfData;
use crate::error::{Error, Result};
use crate::exactlin::{coordinates, scalar::serde_str, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcoalgebraTrace {
    pub indices: Vec<usize>,
    #[serde(with = "serde_str")]
    pub trace: Scalar,
    pub dim: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoinvolutivityReport {
    pub subcoalgebras: Vec<SubcoalgebraTrace>,
    /// Present when one of the index sets is the whole algebra.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s2_is_identity: Option<bool>,
}

impl PseudoinvolutivityReport {
    pub fn passed(&self) -> bool {
        self.subcoalgebras.iter().all(|s| s.passed) && self.s2_is_identity != Some(false)
    }
}

/// `tr(S²|_C)` against `dim C` for basis-aligned subcoalgebras `C`.
///
/// When the whole algebra passes, `S² = I` must hold as well; a full-trace
/// pass with `S² ≠ I` is reported as a failure.
pub fn pseudoinvolutivity_check(
    h: &HopfData,
    subcoalgebras: &[Vec<usize>],
) -> Result<PseudoinvolutivityReport> {
    h.check_shapes()?;
    let n = h.dim;
    let co = h.comult_terms();
    let s2 = h.antipode.mul(&h.antipode);
    let mut out = Vec::new();
    let mut s2_is_identity = None;
    for set in subcoalgebras {
        let mut idx = set.clone();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
            return Err(Error::NotASubcoalgebra { index: bad });
        }
        for &i in &idx {
            if co[i].iter().any(|(p, q, _)| idx.binary_search(p).is_err() || idx.binary_search(q).is_err()) {
                return Err(Error::NotASubcoalgebra { index: i });
            }
        }
        let trace = idx.iter().fold(Scalar::zero(), |acc, &i| acc + &s2[(i, i)]);
        let passed = trace == Scalar::from_integer(idx.len().into());
        if idx.len() == n {
            s2_is_identity = Some(s2.is_identity());
        }
        let dim = idx.len();
        out.push(SubcoalgebraTrace { indices: idx, trace, dim, passed });
    }
    Ok(PseudoinvolutivityReport { subcoalgebras: out, s2_is_identity })
}

/// Trace of `S²` restricted to the span of `basis` (which must be
/// `S²`-stable).
pub fn s2_trace_on(h: &HopfData, basis: &[Vec<Scalar>]) -> Result<Scalar> {
    let s2 = h.antipode.mul(&h.antipode);
    let mut tr = Scalar::zero();
    for (k, v) in basis.iter().enumerate() {
        let image = s2.apply(v);
        let coords = coordinates(basis, &image)
            .ok_or_else(|| Error::Invalid("subspace is not stable under S²".into()))?;
        tr += &coords[k];
    }
    Ok(tr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RformRank {
    pub rank: usize,
    pub minimal: bool,
}

/// Matrix rank of an R-form; nondegenerate ("minimal") when it is full.
pub fn rform_rank(r: &PairForm) -> RformRank {
    let rank = r.matrix.rank();
    RformRank { rank, minimal: rank == r.dim }
}
