use cotwist_core::comodule::Comodule;
use cotwist_core::exactlin::{int, Matrix, Tensor3};
use cotwist_core::fixtures::*;
use cotwist_core::hopf::{rc_from_central_grouplike, HopfData, PairForm};

use super::CotriangularCase;

pub fn sgn_oz2() -> Comodule {
    Comodule::one_dimensional(&[int(1), int(-1)])
}

pub fn triv_oz2() -> Comodule {
    Comodule::trivial(&oz2())
}

pub fn oz2_rc() -> PairForm {
    rc_from_central_grouplike(&oz2(), &oz2_sign_grouplike()).unwrap()
}

pub fn group_characters_k4() -> Vec<Comodule> {
    (0..4).map(|c| Comodule::one_dimensional(&(0..4).map(|g| k4_character(c, g)).collect::<Vec<_>>())).collect()
}

/// The one-dimensional comodules `ρ(v) = v⊗g` of `k[G]` and its twists.
pub fn grouplike_comodules(h: &HopfData) -> Vec<Comodule> {
    (0..h.dim).map(|g| Comodule::one_dimensional(&h.basis(g))).collect()
}

pub fn rot(k: usize) -> Matrix {
    let r = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    r.pow(k as u32)
}

/// Irreducible representations of `D8` as `O(D8)`-comodules: four
/// characters and the two-dimensional one.
pub fn d8_irreducibles() -> Vec<Comodule> {
    let g = d8();
    let mut out = Vec::new();
    for (sr, ss) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        let pi: Vec<Matrix> = (0..8)
            .map(|i| {
                let k = (i % 4) as u32;
                let v = if i < 4 { sr.pow(k) } else { ss * sr.pow(k) };
                Matrix::from_i64(&[&[v]])
            })
            .collect();
        out.push(Comodule::from_group_rep(&g, &pi).unwrap());
    }
    let s = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let pi: Vec<Matrix> = (0..8).map(|i| if i < 4 { rot(i) } else { s.mul(&rot(i - 4)) }).collect();
    out.push(Comodule::from_group_rep(&g, &pi).unwrap());
    out
}

/// A complete list of irreducible comodules for the cosemisimple fixtures.
pub fn irreducibles(case: &CotriangularCase) -> Option<Vec<Comodule>> {
    let n = &case.name;
    if n.starts_with("k[") {
        Some(grouplike_comodules(&case.h))
    } else if n.starts_with("O(Z/2)") {
        Some(vec![triv_oz2(), sgn_oz2()])
    } else if n.starts_with("O(K4)") {
        Some(group_characters_k4())
    } else if n.starts_with("O(D8)") {
        Some(d8_irreducibles())
    } else {
        None
    }
}

/// `ρ(v₀) = v₀⊗1 + v₁⊗x`, `ρ(v₁) = v₁⊗g` over Sweedler's algebra.
pub fn sweedler_extension() -> Comodule {
    let mut t = Tensor3::zeros([2, 2, 4]);
    t[[0, 0, 0]] = int(1);
    t[[0, 1, 2]] = int(1);
    t[[1, 1, 1]] = int(1);
    Comodule::new(t).unwrap()
}

/// Comodules exercised for each cotriangular fixture.
pub fn comodules(case: &CotriangularCase) -> Vec<Comodule> {
    let mut out = vec![Comodule::trivial(&case.h), Comodule::regular(&case.h)];
    match irreducibles(case) {
        Some(irr) => out.extend(irr),
        None => {
            out.push(sweedler_extension());
            out.push(Comodule::one_dimensional(&case.h.basis(1)));
        }
    }
    out
}
