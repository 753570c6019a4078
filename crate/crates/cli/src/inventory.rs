/// Engine operation (`module::function`) to the command that exposes it.
pub const INVENTORY: &[(&str, &str)] = &[
    ("hopf::verify_hopf", "verify-hopf"),
    ("hopf::convolve", "twist"),
    ("hopf::convolution_inverse", "twist"),
    ("hopf::is_hopf_2cocycle", "cocycle-check"),
    ("hopf::twist", "twist"),
    ("hopf::verify_cotriangular", "verify-cotriangular"),
    ("hopf::twist_rform", "twist-rform"),
    ("hopf::drinfeld_element", "drinfeld"),
    ("hopf::verify_s2_conjugation", "s2-check"),
    ("hopf::rc_from_central_grouplike", "rc-build"),
    ("hopf::pseudoinvolutivity_check", "pseudoinvolutivity"),
    ("hopf::rform_rank", "rform-rank"),
    ("hopf::build_group_algebra", "group-algebra"),
    ("hopf::dualize", "dualize"),
    ("hopf::cocycle_transport", "transport"),
    ("comodule::verify_comodule", "comodule-check"),
    ("comodule::coefficient_coalgebra", "comodule-check"),
    ("comodule::u_action", "catdim"),
    ("comodule::categorical_dimension", "catdim"),
    ("comodule::braiding", "braiding"),
    ("comodule::sign_split", "sign-split"),
    ("comodule::central_grouplike_from_splits", "central-grouplike"),
    ("lie::verify_lie", "lie-check"),
    ("lie::verify_rep", "lie-check"),
    ("lie::pbw_normalize", "pbw"),
    ("lie::cybe_residual", "cybe"),
    ("lie::twist_equation_residual", "twist-residual"),
    ("lie::exp_twist", "exp-twist"),
    ("lie::jordanian_twist", "jordanian"),
    ("lie::jf_twist", "jf-twist"),
    ("lie::evaluate_on_pair", "eval-pair"),
    ("lie::r_from_twist", "r-from-twist"),
    ("lie::drinfeld_series", "drinfeld"),
    ("lie::unipotency_check", "unipotency"),
    ("lie::gauge_transform", "gauge"),
    ("lie::component_span", "span-abelian"),
    ("lie::is_abelian", "span-abelian"),
];
