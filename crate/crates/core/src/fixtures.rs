//! Small named examples used by tests, the acceptance suite and the CLI.

use num_traits::{One, Zero};

use crate::exactlin::{frac, int, Matrix, Scalar};
use crate::lie::{LiePresentation, RepAssignment};
use crate::hopf::{
    change_basis, dualize, group_algebra, Functional, GroupTable, HopfData, PairForm,
};

fn sign(e: usize) -> Scalar {
    if e.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

pub fn z2() -> GroupTable {
    GroupTable::cyclic(2)
}

/// `Z/2 × Z/2`, element `(x₁, x₂)` at index `2x₁ + x₂`.
pub fn k4() -> GroupTable {
    GroupTable::product(&z2(), &z2())
}

/// `S₃` as permutations of `{0, 1, 2}`; index 0 is the identity.
pub fn s3() -> GroupTable {
    GroupTable::from_permutations(&[
        vec![0, 1, 2],
        vec![1, 0, 2],
        vec![0, 2, 1],
        vec![2, 1, 0],
        vec![1, 2, 0],
        vec![2, 0, 1],
    ])
    .expect("S3")
}

/// Symmetries of a square with vertices `0..4` in cyclic order:
/// `r^k` at index `k`, `s r^k` at index `4 + k`, `s` the reflection fixing
/// vertex 0.
pub fn d8() -> GroupTable {
    let r = |k: usize| -> Vec<usize> { (0..4).map(|i| (i + k) % 4).collect() };
    let s: Vec<usize> = (0..4).map(|i| (4 - i) % 4).collect();
    let mut perms: Vec<Vec<usize>> = (0..4).map(r).collect();
    for k in 0..4 {
        let rk = r(k);
        perms.push(rk.iter().map(|&i| s[i]).collect());
    }
    GroupTable::from_permutations(&perms).expect("D8")
}

/// Indices in [`d8`] of the Klein subgroup `{e, r², s, sr²}`, ordered as
/// the elements `(0,0), (0,1), (1,0), (1,1)` of [`k4`] under
/// `(x₁, x₂) ↦ s^{x₁} r^{2x₂}`.
pub const D8_KLEIN: [usize; 4] = [0, 2, 4, 6];

pub fn kz2() -> HopfData {
    group_algebra(&z2())
}

pub fn kk4() -> HopfData {
    group_algebra(&k4())
}

pub fn ks3() -> HopfData {
    group_algebra(&s3())
}

pub fn kd8() -> HopfData {
    group_algebra(&d8())
}

/// `O(Z/2)` in the delta basis `δ_e, δ_s`.
pub fn oz2() -> HopfData {
    dualize(&kz2())
}

/// Change of basis from deltas to characters: `triv = δ_e + δ_s`,
/// `sgn = δ_e − δ_s`.
pub fn z2_character_basis() -> Matrix {
    Matrix::from_i64(&[&[1, 1], &[1, -1]])
}

/// `O(Z/2)` in the character basis `triv, sgn`.
pub fn oz2_characters() -> HopfData {
    change_basis(&oz2(), &z2_character_basis()).expect("invertible change of basis")
}

/// Evaluation at the nontrivial element of `Z/2`, as a functional on
/// `O(Z/2)` in the delta basis.
pub fn oz2_sign_grouplike() -> Functional {
    Functional::new(vec![Scalar::zero(), Scalar::one()])
}

pub fn ok4() -> HopfData {
    dualize(&kk4())
}

pub fn od8() -> HopfData {
    dualize(&kd8())
}

/// `β((x₁, x₂), (y₁, y₂)) = (−1)^{x₁y₂}` on `K4` (and on its character
/// group, with the same indexing).
pub fn k4_bicharacter(g: usize, h: usize) -> Scalar {
    sign((g / 2) * (h % 2))
}

/// `χ_c(g)` for the character `c = (a, b)` of `K4`: `(−1)^{a x₁ + b x₂}`.
pub fn k4_character(c: usize, g: usize) -> Scalar {
    sign((c / 2) * (g / 2) + (c % 2) * (g % 2))
}

/// `J(g, h) = β(g, h)` on `k[K4]`.
pub fn kk4_bicharacter_form() -> PairForm {
    let m = (0..4).map(|g| (0..4).map(|h| k4_bicharacter(g, h)).collect()).collect();
    PairForm::new(Matrix::from_rows(m).expect("square")).expect("square")
}

/// Coefficients of `Σ β(χ, ψ) e_χ ⊗ e_ψ` in the grouplike basis of
/// `k[K4]`, with `e_χ = ¼ Σ_g χ(g⁻¹) g`. Read as a form on `O(K4)` in the
/// delta basis this is the dual cocycle.
pub fn k4_twist_coefficients() -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for g in 0..4 {
        for h in 0..4 {
            let mut acc = Scalar::zero();
            for x in 0..4 {
                for y in 0..4 {
                    acc += k4_bicharacter(x, y) * k4_character(x, g) * k4_character(y, h);
                }
            }
            m[(g, h)] = acc * frac(1, 16);
        }
    }
    m
}

/// The cocycle on `O(K4)` dual to the bicharacter twist of `k[K4]`.
pub fn ok4_cocycle() -> PairForm {
    PairForm::new(k4_twist_coefficients()).expect("square")
}

/// The same twist pushed into `k[D8]` along [`D8_KLEIN`], read as a
/// cocycle on `O(D8)`.
pub fn od8_cocycle() -> PairForm {
    let small = k4_twist_coefficients();
    let mut m = Matrix::zeros(8, 8);
    for (a, &g) in D8_KLEIN.iter().enumerate() {
        for (b, &h) in D8_KLEIN.iter().enumerate() {
            m[(g, h)] = small[(a, b)].clone();
        }
    }
    PairForm::new(m).expect("square")
}

/// `k[K4]` with the antipode replaced by the rotation `e₁ ↦ e₂ ↦ −e₁`,
/// so that `S²` is `−1` on `e₁, e₂`. Not a Hopf algebra; used as a
/// pseudoinvolutivity counterexample on the subcoalgebra `span{e₀, e₁}`.
pub fn kk4_rotated_antipode() -> HopfData {
    let mut h = kk4();
    let mut s = Matrix::identity(4);
    s[(1, 1)] = Scalar::zero();
    s[(2, 2)] = Scalar::zero();
    s[(2, 1)] = Scalar::one();
    s[(1, 2)] = int(-1);
    h.antipode = s;
    h
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler() -> HopfData {
    use crate::exactlin::Tensor3;
    let mut mult = Tensor3::zeros([4, 4, 4]);
    for i in 0..4 {
        mult[[0, i, i]] = Scalar::one();
        mult[[i, 0, i]] = Scalar::one();
    }
    mult[[1, 1, 0]] = Scalar::one();
    mult[[1, 2, 3]] = Scalar::one();
    mult[[2, 1, 3]] = int(-1);
    mult[[1, 3, 2]] = Scalar::one();
    mult[[3, 1, 2]] = int(-1);
    let mut comult = Tensor3::zeros([4, 4, 4]);
    comult[[0, 0, 0]] = Scalar::one();
    comult[[1, 1, 1]] = Scalar::one();
    comult[[2, 2, 0]] = Scalar::one();
    comult[[2, 1, 2]] = Scalar::one();
    comult[[3, 3, 1]] = Scalar::one();
    comult[[3, 0, 3]] = Scalar::one();
    let mut antipode = Matrix::zeros(4, 4);
    antipode[(0, 0)] = Scalar::one();
    antipode[(1, 1)] = Scalar::one();
    antipode[(3, 2)] = int(-1);
    antipode[(2, 3)] = Scalar::one();
    HopfData {
        dim: 4,
        mult,
        unit: vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        comult,
        counit: vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        antipode,
    }
}

/// The one-parameter family of cotriangular forms on [`sweedler`].
pub fn sweedler_rform(t: &Scalar) -> PairForm {
    let mut m = Matrix::from_i64(&[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    m[(2, 2)] = t.clone();
    m[(2, 3)] = t.clone();
    m[(3, 2)] = -t.clone();
    m[(3, 3)] = t.clone();
    PairForm::new(m).expect("square")
}

/// `[X, Y] = Y`.
pub fn aff_lie() -> LiePresentation {
    LiePresentation::aff()
}

/// Abelian `span{P, Q}`.
pub fn abelian_pq() -> LiePresentation {
    LiePresentation::abelian(&["P", "Q"])
}

/// `x₀∧x₁ = x₀⊗x₁ − x₁⊗x₀` on a two-dimensional algebra.
pub fn wedge01() -> Vec<Vec<Scalar>> {
    vec![vec![Scalar::zero(), Scalar::one()], vec![-Scalar::one(), Scalar::zero()]]
}

/// `X ↦ E₁₁`, `Y ↦ E₁₂`.
pub fn aff_v2() -> RepAssignment {
    RepAssignment::new(vec![Matrix::unit(2, 0, 0), Matrix::unit(2, 0, 1)]).expect("square")
}

/// `X ↦ diag(2, 1, 0)`, `Y ↦ E₁₂ + E₂₃`.
pub fn aff_v3() -> RepAssignment {
    let x = Matrix::diagonal(&[int(2), int(1), int(0)]);
    let y = Matrix::unit(3, 0, 1).add(&Matrix::unit(3, 1, 2));
    RepAssignment::new(vec![x, y]).expect("square")
}

/// `P ↦ E₁₃`, `Q ↦ E₂₃`.
pub fn abelian_v3() -> RepAssignment {
    RepAssignment::new(vec![Matrix::unit(3, 0, 2), Matrix::unit(3, 1, 2)]).expect("square")
}

/// `P ↦ E₁₂`, `Q ↦ 0`.
pub fn abelian_v2() -> RepAssignment {
    RepAssignment::new(vec![Matrix::unit(2, 0, 1), Matrix::zeros(2, 2)]).expect("square")
}
