//! Finite-dimensional Hopf algebras by structure constants.

pub mod coalgebra;
pub mod cocycle;
pub mod cotriangular;
pub mod data;
pub mod group;
pub mod pseudo;
pub mod transport;

pub use coalgebra::{
    convolution_inverse, convolve, convolve_pairs, pair_inverse, Coalgebra, Functional, PairForm,
};
pub use cocycle::{is_hopf_2cocycle, is_trivial_form, twist, twist_rform};
pub use cotriangular::{
    centrality_defect, convolve_on, drinfeld_element, grouplike_defect, inverse_on,
    modify_by_central_grouplike, rc_from_central_grouplike, s2_conjugation, verify_cotriangular,
    verify_s2_conjugation, S2Conjugation,
};
pub use data::{verify_hopf, CoTerm, HopfData};
pub use group::{
    build_group_algebra, change_basis, change_basis_form, change_basis_functional, dualize,
    group_algebra, GroupTable,
};
pub use pseudo::{
    pseudoinvolutivity_check, rform_rank, s2_trace_on, PseudoinvolutivityReport, RformRank,
    SubcoalgebraTrace,
};
pub use transport::{
    cocycle_transport, transport_check, twist_equations, twist_inverse, twist_product,
    twist_transport, TransportReport, TwistElement,
};
