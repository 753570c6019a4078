use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("functional is not invertible under convolution")]
    NotInvertible,

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("index set is not a subcoalgebra: Δ(e_{index}) leaves it")]
    NotASubcoalgebra { index: usize },

    #[error("functional is not central in the dual algebra (witness basis index {index})")]
    NotCentral { index: usize },

    #[error("functional is not grouplike in the dual algebra (witness {0:?})")]
    NotGrouplike(Vec<usize>),

    #[error("functional does not square to the counit (witness basis index {index})")]
    NotInvolutive { index: usize },

    #[error("u-action does not satisfy (M-I)(M+I)=0")]
    NotSemisimpleSigns,

    #[error("sign assignment is inconsistent: {0}")]
    InconsistentSigns(String),

    #[error("element of g⊗g is not antisymmetric (witness ({0}, {1}))")]
    NotAntisymmetric(usize, usize),

    #[error("Lie algebra is not abelian (witness [x_{0}, x_{1}] ≠ 0)")]
    NotAbelian(usize, usize),

    #[error("coefficient table has no entries for degree {degree}")]
    MissingTableEntries { degree: usize },

    #[error("truncation order {order} too low: {reason}")]
    TruncationTooLow { order: usize, reason: String },

    #[error("gauge series coefficient at degree {degree} has nonzero counit")]
    BadCounit { degree: usize },

    #[error("series has degree-0 coefficient different from 1")]
    NotNormalized,

    #[error("twisted structure fails the Hopf axioms: {0}")]
    TwistNotHopf(Box<AxiomReport>),

    #[error("twisted R-form fails the cotriangular axioms: {0}")]
    TwistNotCotriangular(Box<AxiomReport>),

    #[error("degree bound violated: nonzero coefficient at degree {degree} > bound {bound}")]
    DegreeBoundViolated { degree: usize, bound: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("scalar parse error: {0:?}")]
    ParseScalar(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
