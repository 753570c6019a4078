mod common;

use common::{cocycles, cotriangular, evaluation};
use cotwist_core::exactlin::{frac, int, Matrix, Scalar, Tensor3};
use cotwist_core::fixtures::*;
use cotwist_core::hopf::*;
use cotwist_core::Error;
use num_traits::Zero;
use proptest::prelude::*;

/// Eq (1) expanded straight from the dense structure tensors.
fn oracle_cocycle_failures(h: &HopfData, j: &PairForm) -> Vec<[usize; 3]> {
    let n = h.dim;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut lhs = Scalar::zero();
                let mut rhs = Scalar::zero();
                for p in 0..n {
                    for q in 0..n {
                        let da = &h.comult[[a, p, q]];
                        let db = &h.comult[[b, p, q]];
                        for r in 0..n {
                            for s in 0..n {
                                // Σ J(a₁b₁, c) J(a₂, b₂) with a₁=p, a₂=q, b₁=r, b₂=s
                                let d2 = &h.comult[[b, r, s]];
                                if !da.is_zero() && !d2.is_zero() {
                                    for t in 0..n {
                                        let m = &h.mult[[p, r, t]];
                                        if !m.is_zero() {
                                            lhs += da * d2 * m * j.get(t, c) * j.get(q, s);
                                        }
                                    }
                                }
                                // Σ J(a, b₁c₁) J(b₂, c₂) with b₁=p, b₂=q, c₁=r, c₂=s
                                let dc = &h.comult[[c, r, s]];
                                if !db.is_zero() && !dc.is_zero() {
                                    for t in 0..n {
                                        let m = &h.mult[[p, r, t]];
                                        if !m.is_zero() {
                                            rhs += db * dc * m * j.get(a, t) * j.get(q, s);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// `m^J` from Eq (2) with the five-fold Sweedler sums expanded densely.
fn oracle_twisted_mult(h: &HopfData, j: &PairForm) -> Tensor3 {
    let n = h.dim;
    let jinv = pair_inverse(h, j).unwrap();
    // Δ²(e_a) coefficient on e_p⊗e_q⊗e_r
    let d2 = |a: usize, p: usize, q: usize, r: usize| {
        (0..n).fold(Scalar::zero(), |acc, x| acc + &h.comult[[a, p, x]] * &h.comult[[x, q, r]])
    };
    let mut out = Tensor3::zeros([n, n, n]);
    for a in 0..n {
        for b in 0..n {
            for (p, q, r) in triples(n) {
                let x = d2(a, p, q, r);
                if x.is_zero() {
                    continue;
                }
                for (s, t, u) in triples(n) {
                    let y = d2(b, s, t, u);
                    if y.is_zero() {
                        continue;
                    }
                    let coef = &x * &y * jinv.get(p, s) * j.get(r, u);
                    if coef.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        out[[a, b, k]] += &coef * &h.mult[[q, t, k]];
                    }
                }
            }
        }
    }
    out
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |p| (0..n).flat_map(move |q| (0..n).map(move |r| (p, q, r))))
}

#[test]
fn verify_hopf_examples() {
    assert!(verify_hopf(&kz2()).unwrap().passed());
    let mut broken = kz2();
    broken.antipode = Matrix::zeros(2, 2);
    let r = verify_hopf(&broken).unwrap();
    let check = r.get("antipode-left").unwrap();
    assert!(!check.passed);
    let w = check.witness.as_ref().unwrap();
    assert_ne!(w.lhs, w.rhs);
    assert!(verify_hopf(&dualize(&kk4())).unwrap().passed());
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["assoc", "unit", "coassoc", "counit", "bialgebra", "antipode-left", "antipode-right"]);
}

#[test]
fn every_fixture_is_a_hopf_algebra() {
    for h in [kz2(), kk4(), ks3(), kd8(), oz2(), oz2_characters(), ok4(), od8(), sweedler()] {
        assert!(verify_hopf(&h).unwrap().passed());
    }
    assert!(!verify_hopf(&kk4_rotated_antipode()).unwrap().passed());
}

#[test]
fn convolve_examples() {
    let h = kz2();
    let carrier = Coalgebra::of(&h);
    let eps = carrier.unit_functional();
    let f = Functional::new(vec![frac(3, 2), int(-7)]);
    assert_eq!(convolve(&eps, &f, &carrier).unwrap(), f);
    let ds = Functional::new(vec![int(0), int(1)]);
    assert_eq!(convolve(&ds, &ds, &carrier).unwrap(), ds);

    let sq = Coalgebra::tensor_square(&kk4());
    let j = kk4_bicharacter_form().to_functional();
    assert_eq!(convolve(&sq.unit_functional(), &j, &sq).unwrap(), j);
    assert!(convolve(&eps, &j, &carrier).is_err());
}

#[test]
fn convolution_inverse_examples() {
    let h = kk4();
    let carrier = Coalgebra::of(&h);
    let eps = carrier.unit_functional();
    assert_eq!(convolution_inverse(&eps, &carrier).unwrap(), eps);
    let sq = Coalgebra::tensor_square(&h);
    let j = kk4_bicharacter_form().to_functional();
    assert_eq!(convolution_inverse(&j, &sq).unwrap(), j);
    assert!(matches!(convolution_inverse(&Functional::zero(4), &carrier), Err(Error::NotInvertible)));
}

#[test]
fn cocycle_examples() {
    let h = kk4();
    assert!(is_hopf_2cocycle(&PairForm::counit_pair(&h), &h).unwrap().passed());
    assert!(is_hopf_2cocycle(&kk4_bicharacter_form(), &h).unwrap().passed());

    let mut bad = kk4_bicharacter_form();
    bad.matrix[(1, 2)] = int(2);
    let r = is_hopf_2cocycle(&bad, &h).unwrap();
    let check = r.get("cocycle").unwrap();
    assert!(!check.passed);
    let w = check.witness.as_ref().unwrap();
    let failing = oracle_cocycle_failures(&h, &bad);
    assert!(failing.contains(&[w.indices[0], w.indices[1], w.indices[2]]));
    assert_eq!(failing[0], [w.indices[0], w.indices[1], w.indices[2]]);
}

#[test]
fn cocycle_check_agrees_with_oracle_on_fixtures() {
    for case in cocycles() {
        let r = is_hopf_2cocycle(&case.j, &case.h).unwrap();
        assert!(r.passed(), "{}", case.name);
        assert!(oracle_cocycle_failures(&case.h, &case.j).is_empty(), "{}", case.name);
    }
}

fn perturbation() -> impl Strategy<Value = (usize, usize, usize, i64)> {
    (0usize..4, 0usize..16, 0usize..16, -3i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn cocycle_check_agrees_with_oracle_on_perturbations((which, i, j, delta) in perturbation()) {
        let cases = cocycles();
        let case = &cases[[1, 2, 4, 0][which]];
        let n = case.h.dim;
        let mut form = case.j.clone();
        form.matrix[(i % n, j % n)] += int(delta);
        let report = is_hopf_2cocycle(&form, &case.h).unwrap();
        let oracle = oracle_cocycle_failures(&case.h, &form);
        let check = report.get("cocycle").unwrap();
        prop_assert_eq!(check.passed, oracle.is_empty());
        if let Some(w) = &check.witness {
            prop_assert_eq!(oracle[0], [w.indices[0], w.indices[1], w.indices[2]]);
        }
    }
}

#[test]
fn twist_examples() {
    for h in [kk4(), ok4(), sweedler(), ks3()] {
        assert_eq!(twist(&h, &PairForm::counit_pair(&h)).unwrap(), h);
    }
    let hj = twist(&kk4(), &kk4_bicharacter_form()).unwrap();
    assert_eq!(hj.mult, kk4().mult);
    assert_eq!(hj.antipode, kk4().antipode);
}

#[test]
fn twisted_multiplication_matches_eq2_expansion() {
    for case in cocycles() {
        let hj = twist(&case.h, &case.j).unwrap();
        assert_eq!(hj.mult, oracle_twisted_mult(&case.h, &case.j), "{}", case.name);
        assert!(verify_hopf(&hj).unwrap().passed(), "{}", case.name);
        assert_eq!(hj.comult, case.h.comult);
        assert_eq!(hj.counit, case.h.counit);
        assert_eq!(hj.unit, case.h.unit);
    }
}

#[test]
fn twisted_antipode_is_an_antipode_for_the_new_product() {
    let h = od8();
    let hj = twist(&h, &od8_cocycle()).unwrap();
    let report = verify_hopf(&hj).unwrap();
    assert!(report.get("antipode-left").unwrap().passed);
    assert!(report.get("antipode-right").unwrap().passed);
}

#[test]
fn cotriangular_examples() {
    assert!(verify_cotriangular(&kk4(), &PairForm::counit_pair(&kk4())).unwrap().passed());
    let rc = rc_from_central_grouplike(&oz2(), &oz2_sign_grouplike()).unwrap();
    assert!(verify_cotriangular(&oz2(), &rc).unwrap().passed());
    let r = verify_cotriangular(&ks3(), &PairForm::counit_pair(&ks3())).unwrap();
    assert!(!r.get("quasi-commutative").unwrap().passed);
    assert!(r.get("triangular").unwrap().passed);
}

#[test]
fn every_cotriangular_fixture_passes() {
    for case in cotriangular() {
        assert!(verify_cotriangular(&case.h, &case.r).unwrap().passed(), "{}", case.name);
    }
}

#[test]
fn twist_rform_examples() {
    let h = kk4();
    let eps = PairForm::counit_pair(&h);
    let j = kk4_bicharacter_form();
    assert_eq!(twist_rform(&eps, &eps, &h).unwrap(), eps);
    let rj = twist_rform(&eps, &j, &h).unwrap();
    for g in 0..4 {
        for k in 0..4 {
            let expected = k4_bicharacter(g, k) / k4_bicharacter(k, g);
            assert_eq!(rj.get(g, k), &expected);
        }
    }
    // J is its own inverse on k[K4] and twisting leaves k[K4] unchanged.
    let jinv = pair_inverse(&h, &j).unwrap();
    assert!(is_hopf_2cocycle(&jinv, &h).unwrap().passed());
    let back = twist_rform(&rj, &jinv, &twist(&h, &j).unwrap()).unwrap();
    assert_eq!(back, eps);
}

#[test]
fn twist_rform_rejects_non_cotriangular_input() {
    let h = ks3();
    assert!(twist_rform(&PairForm::counit_pair(&h), &PairForm::counit_pair(&h), &h).is_err());
}

#[test]
fn drinfeld_examples() {
    let h = kk4();
    let eps = Functional::new(h.counit.clone());
    assert_eq!(drinfeld_element(&h, &PairForm::counit_pair(&h)).unwrap(), eps);

    let rc = rc_from_central_grouplike(&oz2(), &oz2_sign_grouplike()).unwrap();
    let u = drinfeld_element(&oz2(), &rc).unwrap();
    assert_eq!(u, oz2_sign_grouplike());
    let triv = [int(1), int(1)];
    let sgn = [int(1), int(-1)];
    assert_eq!(u.eval(&triv), int(1));
    assert_eq!(u.eval(&sgn), int(-1));

    let rj = twist_rform(&PairForm::counit_pair(&h), &kk4_bicharacter_form(), &h).unwrap();
    assert_eq!(drinfeld_element(&h, &rj).unwrap(), eps);
}

#[test]
fn drinfeld_element_matches_grouplike_formula_on_group_algebras() {
    let h = kk4();
    let rj = twist_rform(&PairForm::counit_pair(&h), &kk4_bicharacter_form(), &h).unwrap();
    let u = drinfeld_element(&h, &rj).unwrap();
    for g in 0..4 {
        // u(g) = R(g, g⁻¹) and every element of K4 is its own inverse
        assert_eq!(u.coefficients[g], rj.get(g, g).clone());
    }
}

#[test]
fn s2_conjugation_on_every_cotriangular_fixture() {
    for case in cotriangular() {
        assert!(verify_s2_conjugation(&case.h, &case.r).unwrap(), "{}", case.name);
    }
}

#[test]
fn sweedler_has_s2_conjugated_by_a_nontrivial_drinfeld_element() {
    let h = sweedler();
    assert!(!h.antipode.mul(&h.antipode).is_identity());
    for t in common::sweedler_parameters() {
        let r = sweedler_rform(&t);
        let s = s2_conjugation(&h, &r).unwrap();
        assert!(s.holds);
        assert_eq!(s.drinfeld.coefficients, vec![int(1), int(-1), int(0), int(0)]);
    }
}

#[test]
fn drinfeld_element_rejects_non_cotriangular_forms() {
    assert!(drinfeld_element(&ks3(), &PairForm::counit_pair(&ks3())).is_err());
}

#[test]
fn rc_examples() {
    let h = ok4();
    let eps = Functional::new(h.counit.clone());
    assert_eq!(rc_from_central_grouplike(&h, &eps).unwrap(), PairForm::counit_pair(&h));

    let hc = oz2_characters();
    let p = z2_character_basis();
    let c = change_basis_functional(&oz2_sign_grouplike(), &p);
    let rc = rc_from_central_grouplike(&hc, &c).unwrap();
    assert_eq!(rc.matrix, Matrix::from_i64(&[&[1, 1], &[1, -1]]));

    for g in 1..4 {
        let c = evaluation(4, g);
        let rc = rc_from_central_grouplike(&h, &c).unwrap();
        assert_eq!(drinfeld_element(&h, &rc).unwrap(), c);
    }
}

#[test]
fn rc_precondition_errors() {
    let h = ok4();
    let mut not_grouplike = evaluation(4, 1);
    not_grouplike.coefficients[2] = int(1);
    assert!(matches!(rc_from_central_grouplike(&h, &not_grouplike), Err(Error::NotGrouplike(_))));

    // evaluation at a transposition is grouplike in k[S3] = O(S3)* but not central
    let os3 = dualize(&ks3());
    let transposition = evaluation(6, 1);
    assert!(matches!(rc_from_central_grouplike(&os3, &transposition), Err(Error::NotCentral { .. })));

    // a grouplike of order 3 is central in the commutative O(Z/3)* = k[Z/3] but not involutive
    let oz3 = dualize(&group_algebra(&GroupTable::cyclic(3)));
    assert!(matches!(rc_from_central_grouplike(&oz3, &evaluation(3, 1)), Err(Error::NotInvolutive { .. })));
}

#[test]
fn modifying_by_central_grouplike_multiplies_drinfeld_element() {
    for case in cotriangular() {
        if case.h.dim != 4 || !case.h.is_commutative() || !case.name.contains("O(K4)") {
            continue;
        }
        let u = drinfeld_element(&case.h, &case.r).unwrap();
        for g in 0..4 {
            let c = evaluation(4, g);
            let (new_r, new_u) = modify_by_central_grouplike(&case.h, &case.r, &c).unwrap();
            assert!(verify_cotriangular(&case.h, &new_r).unwrap().passed());
            assert_eq!(new_u, convolve_on(&case.h, &u, &c).unwrap());
        }
    }
    let rc = rc_from_central_grouplike(&oz2(), &oz2_sign_grouplike()).unwrap();
    let (_, u) = modify_by_central_grouplike(&oz2(), &rc, &oz2_sign_grouplike()).unwrap();
    assert_eq!(u.coefficients, oz2().counit);
}

#[test]
fn pseudoinvolutivity_examples() {
    let r = pseudoinvolutivity_check(&kk4(), &[vec![0, 1, 2, 3]]).unwrap();
    assert!(r.passed());
    assert_eq!(r.subcoalgebras[0].trace, int(4));
    assert_eq!(r.s2_is_identity, Some(true));

    let hj = twist(&ok4(), &ok4_cocycle()).unwrap();
    let r = pseudoinvolutivity_check(&hj, &[vec![0, 1, 2, 3]]).unwrap();
    assert!(r.passed());
    assert_eq!(r.subcoalgebras[0].trace, int(4));
    assert_eq!(r.s2_is_identity, Some(true));

    let r = pseudoinvolutivity_check(&kk4_rotated_antipode(), &[vec![0, 1]]).unwrap();
    assert!(!r.passed());
    assert_eq!(r.subcoalgebras[0].trace, int(0));
    assert_eq!(r.subcoalgebras[0].dim, 2);
}

#[test]
fn pseudoinvolutivity_rejects_non_subcoalgebras() {
    assert!(matches!(
        pseudoinvolutivity_check(&sweedler(), &[vec![0, 2]]),
        Err(Error::NotASubcoalgebra { index: 2 })
    ));
    assert!(matches!(pseudoinvolutivity_check(&kk4(), &[vec![7]]), Err(Error::NotASubcoalgebra { index: 7 })));
}

#[test]
fn sweedler_is_not_pseudoinvolutive() {
    let r = pseudoinvolutivity_check(&sweedler(), &[vec![0, 1, 2, 3], vec![0], vec![1]]).unwrap();
    assert_eq!(r.subcoalgebras[0].trace, int(0));
    assert!(!r.subcoalgebras[0].passed);
    assert!(r.subcoalgebras[1].passed && r.subcoalgebras[2].passed);
}

#[test]
fn full_trace_pass_implies_involutive() {
    for case in cocycles() {
        let hj = twist(&case.h, &case.j).unwrap();
        let all: Vec<usize> = (0..hj.dim).collect();
        let r = pseudoinvolutivity_check(&hj, &[all]).unwrap();
        if r.subcoalgebras[0].passed {
            assert_eq!(r.s2_is_identity, Some(true), "{}", case.name);
            assert!(hj.antipode.mul(&hj.antipode).is_identity());
        }
    }
}

#[test]
fn rform_rank_examples() {
    let r = rform_rank(&PairForm::counit_pair(&kz2()));
    assert_eq!((r.rank, r.minimal), (1, false));
    let rc = PairForm::new(Matrix::from_i64(&[&[1, 1], &[1, -1]])).unwrap();
    let r = rform_rank(&rc);
    assert_eq!((r.rank, r.minimal), (2, true));
    assert_eq!(rform_rank(&PairForm::new(Matrix::zeros(3, 3)).unwrap()).rank, 0);
}

#[test]
fn group_algebra_examples() {
    let h = build_group_algebra(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(h.dim, 2);
    assert!(verify_hopf(&h).unwrap().passed());
    assert_eq!(build_group_algebra(&k4().table).unwrap().dim, 4);
    // Latin square with identity 0 that is not associative
    let broken = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(matches!(build_group_algebra(&broken), Err(Error::NotAGroup(_))));
    assert!(matches!(build_group_algebra(&[vec![0, 1], vec![1, 1]]), Err(Error::NotAGroup(_))));
}

#[test]
fn dualize_examples() {
    let o = dualize(&kz2());
    for i in 0..2 {
        for j in 0..2 {
            let expected = if i == j { o.basis(i) } else { vec![int(0), int(0)] };
            assert_eq!(o.mul_basis(i, j), expected);
        }
    }
    assert_eq!(dualize(&dualize(&kk4())), kk4());
    let os3 = dualize(&ks3());
    assert_eq!(os3.dim, 6);
    assert!(os3.is_commutative());
    assert!(!os3.is_cocommutative());
    assert!(verify_hopf(&os3).unwrap().passed());
}

#[test]
fn transport_examples() {
    let b = kk4();
    let one = TwistElement::one(&b);
    let o = dualize(&b);
    assert_eq!(cocycle_transport(&one), PairForm::counit_pair(&o));

    let t = twist_transport(&ok4_cocycle());
    assert_eq!(t.matrix, k4_twist_coefficients());
    let report = transport_check(&b, &t).unwrap();
    assert!(report.cocycle.passed() && report.twist.passed() && report.agree);

    let mut bad = t.clone();
    bad.matrix[(1, 2)] += int(1);
    let report = transport_check(&b, &bad).unwrap();
    assert!(!report.cocycle.passed() && !report.twist.passed() && report.agree);
    let wc = report.cocycle.get("cocycle").unwrap().witness.clone().unwrap();
    let wt = report.twist.get("cocycle").unwrap().witness.clone().unwrap();
    assert_eq!(wc, wt);
}

#[test]
fn twist_inverse_and_product_are_consistent() {
    let b = kd8();
    let t = twist_transport(&od8_cocycle());
    let inv = twist_inverse(&b, &t).unwrap();
    assert_eq!(twist_product(&b, &t, &inv), TwistElement::one(&b));
    assert_eq!(twist_product(&b, &inv, &t), TwistElement::one(&b));
    assert!(twist_equations(&b, &t).unwrap().passed());
}

fn small_form(n: usize) -> impl Strategy<Value = PairForm> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), n * n).prop_map(move |v| {
        let data = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        PairForm::new(Matrix::from_vec(n, n, data).unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn transport_round_trips(j in small_form(4)) {
        prop_assert_eq!(cocycle_transport(&twist_transport(&j)), j.clone());
        let t = twist_transport(&j);
        prop_assert_eq!(twist_transport(&cocycle_transport(&t)), t);
    }

    #[test]
    fn transport_verdicts_agree(j in small_form(4)) {
        let t = twist_transport(&j);
        let report = transport_check(&kk4(), &t).unwrap();
        prop_assert!(report.agree);
    }

    #[test]
    fn convolution_inverse_round_trips(v in proptest::collection::vec((-4i64..=4, 1i64..=3), 4)) {
        for h in [kk4(), sweedler(), ok4()] {
            let carrier = Coalgebra::of(&h);
            let f = Functional::new(v.iter().map(|&(p, q)| frac(p, q)).collect());
            match convolution_inverse(&f, &carrier) {
                Ok(g) => {
                    let eps = carrier.unit_functional();
                    prop_assert_eq!(convolve(&f, &g, &carrier).unwrap(), eps.clone());
                    prop_assert_eq!(convolve(&g, &f, &carrier).unwrap(), eps);
                }
                Err(Error::NotInvertible) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
        }
    }

    #[test]
    fn pair_inverse_round_trips(j in small_form(4)) {
        let h = sweedler();
        if let Ok(inv) = pair_inverse(&h, &j) {
            let eps = PairForm::counit_pair(&h);
            prop_assert_eq!(convolve_pairs(&h, &j, &inv).unwrap(), eps.clone());
            prop_assert_eq!(convolve_pairs(&h, &inv, &j).unwrap(), eps);
        }
    }
}

#[test]
fn hopf_json_round_trips() {
    for h in [kk4(), sweedler(), od8()] {
        let s = serde_json::to_string(&h).unwrap();
        let back: HopfData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
    }
    let j = ok4_cocycle();
    let v: serde_json::Value = serde_json::to_value(&j).unwrap();
    assert_eq!(v["dim"], 4);
    assert_eq!(v["matrix"][0][0], "1/2");
    assert_eq!(serde_json::from_value::<PairForm>(v).unwrap(), j);
}
