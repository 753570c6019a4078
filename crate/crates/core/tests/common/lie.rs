use cotwist_core::exactlin::{frac, int, Matrix, Scalar};
use cotwist_core::fixtures::*;
use cotwist_core::lie::{
    exp_twist, gauge_transform, jordanian_twist, LiePresentation, Pbw, RepAssignment, Series, TwistSeries, UTensor,
};

pub struct LieCase {
    pub name: String,
    pub lie: LiePresentation,
    pub j: TwistSeries,
    pub reps: Vec<(&'static str, RepAssignment)>,
    /// Whether the residual of the twist equation vanishes.
    pub twist: bool,
}

/// `1 + h·x` for a single basis letter.
pub fn one_plus_h(letter: usize, order: usize) -> Series {
    let mut g = Series::one(1, order);
    g.coeffs[1] = UTensor::monomial(vec![vec![letter]], int(1));
    g
}

pub fn aff_reps() -> Vec<(&'static str, RepAssignment)> {
    vec![("V2", aff_v2()), ("V3", aff_v3())]
}

pub fn abelian_reps() -> Vec<(&'static str, RepAssignment)> {
    vec![("P,Q ↦ E13,E23", abelian_v3()), ("P ↦ E12", abelian_v2())]
}

pub fn scaled(r: &[Vec<Scalar>], s: &Scalar) -> Vec<Vec<Scalar>> {
    r.iter().map(|row| row.iter().map(|x| x * s).collect()).collect()
}

/// Every twist series used by the suites, truncated at `order ≥ 1`.
pub fn lie_cases(order: usize) -> Vec<LieCase> {
    let aff = aff_lie();
    let ab = abelian_pq();
    let p = Pbw::new(&aff);
    let jordan = jordanian_twist(order);
    let jinv = p.series_inverse(&jordan).unwrap();
    let y = one_plus_h(1, order);
    let mut out = Vec::new();
    let mut push = |name: &str, lie: &LiePresentation, j: TwistSeries, twist: bool| {
        let reps = if lie.is_abelian() { abelian_reps() } else { aff_reps() };
        out.push(LieCase { name: name.into(), lie: lie.clone(), j, reps, twist });
    };
    push("1⊗1", &aff, Series::one(2, order), true);
    push("Jordanian", &aff, jordan.clone(), false);
    push("Jordanian⁻¹", &aff, jinv.clone(), true);
    push("Jordanian⁻¹ flipped", &aff, jinv.flip(), true);
    push("Jordanian⁻¹ gauged by 1+hY", &aff, gauge_transform(&jinv, &y, &aff).unwrap(), true);
    push("Jordanian gauged by 1+hY", &aff, gauge_transform(&jordan, &y, &aff).unwrap(), false);
    let r = wedge01();
    push("exp(hr/2)", &ab, exp_twist(&ab, &r, order).unwrap(), true);
    push("exp(3hr/4)", &ab, exp_twist(&ab, &scaled(&r, &frac(3, 2)), order).unwrap(), true);
    let gp = one_plus_h(0, order);
    push("exp(hr/2) gauged by 1+hP", &ab, gauge_transform(&exp_twist(&ab, &r, order).unwrap(), &gp, &ab).unwrap(), true);
    out
}

/// Coefficients of a product of matrix polynomials, truncated at `order`.
pub fn poly_mul(a: &[Matrix], b: &[Matrix], order: usize) -> Vec<Matrix> {
    let n = a[0].rows();
    (0..=order)
        .map(|d| {
            let mut acc = Matrix::zeros(n, n);
            for i in 0..=d {
                if i < a.len() && d - i < b.len() {
                    acc = acc.add(&a[i].mul(&b[d - i]));
                }
            }
            acc
        })
        .collect()
}
