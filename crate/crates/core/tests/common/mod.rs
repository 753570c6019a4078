#![allow(dead_code)]

pub mod comod;
pub mod lie;

use cotwist_core::exactlin::{frac, int, Scalar};
use cotwist_core::fixtures::*;
use cotwist_core::hopf::{
    rc_from_central_grouplike, twist, verify_cotriangular, twist_rform, Functional, HopfData, PairForm,
};

pub struct CocycleCase {
    pub name: &'static str,
    pub h: HopfData,
    pub j: PairForm,
}

pub struct CotriangularCase {
    pub name: String,
    pub h: HopfData,
    pub r: PairForm,
}

/// Evaluation at a group element, as a functional on a function algebra in
/// the delta basis.
pub fn evaluation(dim: usize, g: usize) -> Functional {
    let mut v = vec![int(0); dim];
    v[g] = int(1);
    Functional::new(v)
}

pub fn cocycles() -> Vec<CocycleCase> {
    vec![
        CocycleCase { name: "k[Z/2], trivial", h: kz2(), j: PairForm::counit_pair(&kz2()) },
        CocycleCase { name: "k[K4], bicharacter", h: kk4(), j: kk4_bicharacter_form() },
        CocycleCase { name: "O(K4), dual bicharacter", h: ok4(), j: ok4_cocycle() },
        CocycleCase { name: "O(D8), Klein cocycle", h: od8(), j: od8_cocycle() },
        CocycleCase { name: "Sweedler, trivial", h: sweedler(), j: PairForm::counit_pair(&sweedler()) },
    ]
}

/// Every cotriangular pair used across the suites.
pub fn cotriangular() -> Vec<CotriangularCase> {
    let mut out = Vec::new();
    let mut push = |name: &str, h: HopfData, r: PairForm| out.push(CotriangularCase { name: name.into(), h, r });
    push("k[Z/2], ε⊗ε", kz2(), PairForm::counit_pair(&kz2()));
    push("k[K4], ε⊗ε", kk4(), PairForm::counit_pair(&kk4()));
    push("O(K4), ε⊗ε", ok4(), PairForm::counit_pair(&ok4()));
    let rc = rc_from_central_grouplike(&oz2(), &oz2_sign_grouplike()).unwrap();
    push("O(Z/2), R_c", oz2(), rc);
    let rc4 = rc_from_central_grouplike(&ok4(), &evaluation(4, 3)).unwrap();
    push("O(K4), R_c", ok4(), rc4);
    for case in cocycles() {
        let eps = PairForm::counit_pair(&case.h);
        if !verify_cotriangular(&case.h, &eps).unwrap().passed() {
            continue;
        }
        let hj = twist(&case.h, &case.j).unwrap();
        let rj = twist_rform(&PairForm::counit_pair(&case.h), &case.j, &case.h).unwrap();
        out.push(CotriangularCase { name: format!("{}, twisted", case.name), h: hj, r: rj });
    }
    for t in [int(0), int(1), int(-2), frac(1, 3)] {
        out.push(CotriangularCase { name: format!("Sweedler, R_{t}"), h: sweedler(), r: sweedler_rform(&t) });
    }
    out
}

pub fn sweedler_parameters() -> Vec<Scalar> {
    vec![int(0), int(1), int(-2), frac(1, 3)]
}
