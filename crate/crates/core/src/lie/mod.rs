//! Lie-algebraic twists: PBW arithmetic in `U(g)^{⊗k}[[h]]`, twist series
//! and their evaluation on representations.

pub mod algebra;
pub mod pbw;
pub mod rep;
pub mod series;

pub use algebra::{component_span, is_abelian, is_subalgebra, verify_lie, ComponentSpan, LiePresentation};
pub use pbw::{format_word, Pbw, UTensor, Word};
pub use rep::{
    drinfeld_element_series, drinfeld_series, eval_pair, evaluate_on_pair, radical_nilpotency, unipotency_check,
    unipotency_of_matrix, verify_rep, weight_condition, DrinfeldElement, DrinfeldSeries, MatrixPolynomial,
    RepAssignment, RepFile, UnipotencyReport,
};
pub use series::{
    check_twist_normalization, cybe_residual, exp_twist, gauge_transform, jf_twist, jordanian_twist, l_sm,
    r_from_twist, residual_vanishes, twist_equation_residual, JfEntry, JfTable, JfTwist, Series,
    SeriesTermJson, TwistSeries, TwistSeriesFile,
};
