//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::comod::{comodules, irreducibles, sgn_oz2};
use common::lie::{lie_cases, one_plus_h, poly_mul};
use common::{cocycles, cotriangular};
use cotwist_core::comodule::*;
use cotwist_core::exactlin::{frac, int, kron, Matrix, Scalar};
use cotwist_core::fixtures::*;
use cotwist_core::hopf::*;
use cotwist_core::lie::*;
use cotwist_core::Error;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn check(cond: bool, detail: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn outcome(r: Result<String, String>) -> Outcome {
    match r {
        Ok(d) => pass(d),
        Err(d) => fail(d),
    }
}

fn run(n: usize, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        fail(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let passed = result.passed && in_time;
    let timing = format!("{} ms, limit {} s", elapsed.as_millis(), limit.as_secs());
    let status = if passed { "PASS" } else { "FAIL" };
    let late = if in_time { "" } else { "; over the time limit" };
    println!("criterion {n:>2} {status}  {title}: {} ({timing}{late})", result.detail);
    passed
}

fn c1() -> Outcome {
    let l = aff_lie();
    let v2 = aff_v2();
    let d = drinfeld_series(&jordanian_twist(3), &l, &v2, None).unwrap();
    let rho_y = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    outcome((|| {
        check(v2.matrices[1] == rho_y, "fixture ρ(Y) differs from [[0,1],[0,0]]")?;
        check(d.u.coeffs[0].is_identity(), "degree-0 coefficient is not I")?;
        check(d.u.coeffs[1] == rho_y, format!("h¹ coefficient is {:?}", d.u.coeffs[1]))?;
        Ok(format!("u = I + h·[[0,1],[0,0]], h² = {:?}, h³ = {:?}", d.u.coeffs[2], d.u.coeffs[3]))
    })())
}

fn c2() -> Outcome {
    let ab = abelian_pq();
    let j = exp_twist(&ab, &wedge01(), 4).unwrap();
    outcome((|| {
        check(residual_vanishes(&twist_equation_residual(&j, &ab).unwrap()), "exp twist residual nonzero")?;
        for (name, v) in common::lie::abelian_reps() {
            let d = drinfeld_series(&j, &ab, &v, None).unwrap();
            check(d.u.coeffs[0].is_identity(), format!("{name}: degree 0 is not I"))?;
            check(d.u.coeffs[1..].iter().all(Matrix::is_zero), format!("{name}: u ≠ I"))?;
        }
        check(drinfeld_element_series(&j, &ab).unwrap().u.is_one(), "u ≠ 1 in U(g)[[h]]")?;
        Ok("residuals vanish at N=4; u = 1".into())
    })())
}

fn c3() -> Outcome {
    let l = aff_lie();
    let res = twist_equation_residual(&jordanian_twist(4), &l).unwrap();
    let bad: Vec<usize> = (0..res.len()).filter(|&d| !res[d].is_zero()).collect();
    if bad.is_empty() {
        pass("residuals vanish at every degree ≤ 4")
    } else {
        let degree2: Vec<String> = res[2]
            .terms
            .iter()
            .map(|(w, c)| {
                let slots: Vec<String> = w.iter().map(|x| format_word(x, &l.names)).collect();
                format!("{c}·{}", slots.join("⊗"))
            })
            .collect();
        fail(format!(
            "residual nonzero at degrees {bad:?} (degree 2: {}); the series solves the mirrored equation F₁₂(Δ⊗I)F = F₂₃(I⊗Δ)F and its inverse has zero residual",
            degree2.join(" + ")
        ))
    }
}

fn c4() -> Outcome {
    let l = aff_lie();
    let wedge = vec![vec![int(0), int(1)], vec![int(-1), int(0)]];
    outcome((|| {
        check(cybe_residual(&l, &wedge).unwrap().is_zero(), "CYBE residual of X∧Y nonzero")?;
        let mut count = 0;
        for case in lie_cases(3).into_iter().filter(|c| c.twist) {
            let n = case.lie.dim;
            let m = case.j.coeffs[1].to_matrix(n);
            let r: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| &m[i][j] - &m[j][i]).collect()).collect();
            check(cybe_residual(&case.lie, &r).unwrap().is_zero(), format!("{}: h¹ part fails CYBE", case.name))?;
            count += 1;
        }
        Ok(format!("X∧Y solves CYBE; h¹ parts of {count} residual-free twists solve CYBE"))
    })())
}

fn c5() -> Outcome {
    outcome((|| {
        let mut pairs = 0;
        let mut v2_degree = None;
        for case in lie_cases(4) {
            for (nv, v) in &case.reps {
                for (nw, w) in &case.reps {
                    let e = evaluate_on_pair(&case.j, &case.lie, v, w, None).map_err(|e| format!("{}: {e}", case.name))?;
                    let n = e.nilpotency.ok_or(format!("{}: no nilpotency guarantee", case.name))?;
                    check(
                        e.degree <= 2 * n - 2,
                        format!("{} on {nv}⊗{nw}: degree {} > 2·{n}−2", case.name, e.degree),
                    )?;
                    if case.name == "Jordanian" && *nv == "V2" && *nw == "V2" {
                        v2_degree = Some((n, e.degree));
                    }
                    pairs += 1;
                }
            }
        }
        let (n, d) = v2_degree.ok_or("V2 fixture missing")?;
        check((n, d) == (2, 1), format!("V2: n={n}, degree {d}"))?;
        Ok(format!("{pairs} twist/pair combinations within the bound; V2: n=2, degree 1 ≤ 2"))
    })())
}

/// Nonzero `ab = −ba` among basis and character-basis vectors.
fn anticommuting_pair(h: &HopfData) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let n = h.dim;
    let mut candidates: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis(i)).collect();
    candidates.extend((0..4).map(|c| (0..4).map(|g| k4_character(c, g)).collect::<Vec<_>>()));
    for a in &candidates {
        for b in &candidates {
            let ab = h.mul_vec(a, b);
            let ba = h.mul_vec(b, a);
            if ab.iter().any(|x| !x.is_zero()) && ab.iter().zip(&ba).all(|(x, y)| x == &-y.clone()) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

fn c6() -> Outcome {
    let h = ok4();
    let j = ok4_cocycle();
    outcome((|| {
        check(is_hopf_2cocycle(&j, &h).unwrap().passed(), "not a Hopf 2-cocycle")?;
        let hj = twist(&h, &j).unwrap();
        check(verify_hopf(&hj).unwrap().passed(), "twisted algebra fails the Hopf axioms")?;
        match anticommuting_pair(&hj) {
            Some((a, b)) => Ok(format!("cocycle and Hopf checks pass; anticommuting pair {a:?}, {b:?}")),
            None => Err(format!(
                "cocycle and Hopf checks pass, but no anticommuting pair: the twisted algebra is {}commutative{}",
                if hj.is_commutative() { "" } else { "not " },
                if hj.mult == h.mult { " and equal to O(K4)" } else { "" }
            )),
        }
    })())
}

/// Central grouplike involutions among sign vectors and evaluations.
fn central_grouplikes(h: &HopfData) -> Vec<Functional> {
    let n = h.dim;
    let mut out = Vec::new();
    let mut candidates: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect()).collect();
    for mask in 0u32..(1 << n) {
        candidates.push((0..n).map(|k| if mask & (1 << k) != 0 { int(-1) } else { int(1) }).collect());
    }
    for c in candidates {
        let f = Functional::new(c);
        if rc_from_central_grouplike(h, &f).is_ok() && !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

fn c7() -> Outcome {
    outcome((|| {
        let mut modified = 0;
        for case in cotriangular() {
            check(
                verify_s2_conjugation(&case.h, &case.r).unwrap(),
                format!("{}: S² ≠ u∗I∗u⁻¹", case.name),
            )?;
            let u = drinfeld_element(&case.h, &case.r).unwrap();
            for c in central_grouplikes(&case.h) {
                let rc = rc_from_central_grouplike(&case.h, &c).unwrap();
                let new_u = drinfeld_element(&case.h, &convolve_pairs(&case.h, &case.r, &rc).unwrap()).unwrap();
                check(new_u == convolve_on(&case.h, &u, &c).unwrap(), format!("{}: u' ≠ u∗c", case.name))?;
                modified += 1;
            }
        }
        let h = oz2();
        let rc = rc_from_central_grouplike(&h, &oz2_sign_grouplike()).unwrap();
        let u = drinfeld_element(&h, &rc).unwrap();
        let d = categorical_dimension(&sgn_oz2(), &u);
        check(d == int(-1), format!("dim_c(sgn) = {d}"))?;
        Ok(format!("S² conjugation on all fixtures; {modified} (R∗R_c) cases give u∗c; dim_c(sgn) = −1"))
    })())
}

fn c8() -> Outcome {
    outcome((|| {
        let mut count = 0;
        for case in cocycles().into_iter().filter(|c| c.h.is_commutative() || c.h.is_cocommutative()) {
            let hj = twist(&case.h, &case.j).unwrap();
            let whole: Vec<usize> = (0..hj.dim).collect();
            let report = pseudoinvolutivity_check(&hj, &[whole]).unwrap();
            check(report.passed(), format!("{}: tr(S²) ≠ dim", case.name))?;
            check(report.s2_is_identity == Some(true), format!("{}: S² ≠ I", case.name))?;
            count += 1;
        }
        Ok(format!("{count} twisted group and function algebras: tr(S²) = dim and S² = I"))
    })())
}

fn c9() -> Outcome {
    outcome((|| {
        let order = 4;
        let mut runs = 0;
        for case in lie_cases(order) {
            let g = one_plus_h(case.lie.nilradical[0], order);
            let jg = gauge_transform(&case.j, &g, &case.lie).unwrap();
            for (name, v) in &case.reps {
                for h0 in [int(1), int(-1), frac(5, 3)] {
                    let a = unipotency_check(&case.j, &case.lie, v, &h0).map_err(|e| format!("{}: {e}", case.name))?;
                    let b = unipotency_check(&jg, &case.lie, v, &h0).map_err(|e| format!("{}: {e}", case.name))?;
                    check(a.passed, format!("{} on {name} at h={h0}: {:?}", case.name, a.violation))?;
                    check(b.passed == a.passed, format!("{} on {name}: gauge changes the verdict", case.name))?;
                    runs += 1;
                }
            }
        }
        Ok(format!("{runs} twist/rep/h0 combinations pass, unchanged under gauge"))
    })())
}

fn c10() -> Outcome {
    outcome((|| {
        let mut count = 0;
        for case in cotriangular().into_iter().filter(|c| c.name.starts_with("O(Z/2)") || c.name.starts_with("O(K4)")) {
            let irr = irreducibles(&case).ok_or("no irreducibles")?;
            let u = drinfeld_element(&case.h, &case.r).unwrap();
            let splits: Vec<(Comodule, Sign)> = irr
                .into_iter()
                .map(|v| {
                    let positive = categorical_dimension(&v, &u) == Scalar::from_integer(v.dim.into());
                    (v, if positive { Sign::Plus } else { Sign::Minus })
                })
                .collect();
            let (_, u2) = normalize_by_splits(&case.h, &case.r, &splits).map_err(|e| format!("{}: {e}", case.name))?;
            for v in comodules(&case) {
                let t = categorical_dimension(&v, &u2);
                check(t == Scalar::from_integer(v.dim.into()), format!("{}: tr(u') = {t} ≠ {}", case.name, v.dim))?;
                count += 1;
            }
        }
        Ok(format!("tr(u'|V) = dim V on {count} fixture comodules"))
    })())
}

fn small_form(n: usize) -> impl Strategy<Value = PairForm> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), n * n).prop_map(move |v| {
        let data = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        PairForm::new(Matrix::from_vec(n, n, data).unwrap()).unwrap()
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { failure_persistence: None, ..Config::with_cases(cases) }, proptest::test_runner::TestRng::deterministic_rng(
        proptest::test_runner::RngAlgorithm::ChaCha,
    ))
}

fn convolution_round_trips() -> Result<(), String> {
    let algebras = [kk4(), sweedler(), ok4(), od8()];
    let strategy = proptest::collection::vec((-4i64..=4, 1i64..=3), 8);
    runner(64)
        .run(&strategy, |v| {
            for h in &algebras {
                let carrier = Coalgebra::of(h);
                let f = Functional::new(v[..h.dim].iter().map(|&(p, q)| frac(p, q)).collect());
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
            Ok(())
        })
        .map_err(|e| format!("convolution inverse: {e}"))
}

fn transport_round_trips() -> Result<(), String> {
    runner(64)
        .run(&small_form(4), |j| {
            let t = twist_transport(&j);
            prop_assert_eq!(cocycle_transport(&t), j);
            prop_assert_eq!(twist_transport(&cocycle_transport(&t)), t);
            Ok(())
        })
        .map_err(|e| format!("transport: {e}"))?;
    for case in cocycles() {
        check(cocycle_transport(&twist_transport(&case.j)) == case.j, format!("transport: {}", case.name))?;
    }
    Ok(())
}

fn braiding_symmetry() -> Result<usize, String> {
    let mut pairs = 0;
    for case in cotriangular() {
        let vs = comodules(&case);
        for v in &vs {
            for w in &vs {
                let cvw = braiding(v, w, &case.h, &case.r).map_err(|e| e.to_string())?;
                let cwv = braiding(w, v, &case.h, &case.r).map_err(|e| e.to_string())?;
                check(cwv.mul(&cvw).is_identity(), format!("braiding: {}", case.name))?;
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

fn pbw_idempotence() -> Result<(), String> {
    let word = proptest::collection::vec(0usize..2, 0..=5);
    let strategy = proptest::collection::vec((word, -5i64..=5), 1..5);
    let l = aff_lie();
    let p = Pbw::new(&l);
    runner(128)
        .run(&strategy, |terms| {
            let mut t = UTensor::zero(1);
            for (w, c) in terms {
                t.add_term(vec![w], int(c));
            }
            let n = p.normalize(&t);
            prop_assert_eq!(p.normalize(&n), n);
            Ok(())
        })
        .map_err(|e| format!("PBW: {e}"))
}

fn quantum_yang_baxter() -> Result<usize, String> {
    let order = 4;
    let mut triples = 0;
    for case in lie_cases(order).into_iter().filter(|c| c.twist) {
        let r = r_from_twist(&case.j, &case.lie).map_err(|e| e.to_string())?;
        let reps: Vec<&RepAssignment> = case.reps.iter().map(|(_, v)| v).collect();
        for &a in &reps {
            for &b in &reps {
                for &c in &reps {
                    let dims = [a.dim(), b.dim(), c.dim()];
                    let on = |slots: (usize, usize)| -> Vec<Matrix> {
                        r.coeffs
                            .iter()
                            .map(|t| {
                                let n = dims.iter().product();
                                let mut m = Matrix::zeros(n, n);
                                for (w, x) in &t.terms {
                                    let reps = [a, b, c];
                                    let f: Vec<Matrix> = (0..3)
                                        .map(|k| {
                                            if k == slots.0 {
                                                reps[k].word(&w[0])
                                            } else if k == slots.1 {
                                                reps[k].word(&w[1])
                                            } else {
                                                Matrix::identity(dims[k])
                                            }
                                        })
                                        .collect();
                                    m.add_assign_scaled(&kron(&kron(&f[0], &f[1]), &f[2]), x);
                                }
                                m
                            })
                            .collect()
                    };
                    let (r12, r13, r23) = (on((0, 1)), on((0, 2)), on((1, 2)));
                    let lhs = poly_mul(&poly_mul(&r12, &r13, order), &r23, order);
                    let rhs = poly_mul(&poly_mul(&r23, &r13, order), &r12, order);
                    check(lhs == rhs, format!("QYBE: {}", case.name))?;
                    triples += 1;
                }
            }
        }
    }
    Ok(triples)
}

fn c11() -> Outcome {
    outcome((|| {
        convolution_round_trips()?;
        transport_round_trips()?;
        let pairs = braiding_symmetry()?;
        pbw_idempotence()?;
        let triples = quantum_yang_baxter()?;
        Ok(format!(
            "convolution inverse and transport round trips, braiding symmetry on {pairs} pairs, PBW idempotence, QYBE on {triples} triples"
        ))
    })())
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let s = Duration::from_secs;
    let results = [
        run(1, "Drinfeld element of the Jordanian twist on V2", s(1), c1),
        run(2, "exponential twist over an abelian algebra", s(1), c2),
        run(3, "Jordanian cocycle identity", s(5), c3),
        run(4, "CYBE and first-order extraction", s(1), c4),
        run(5, "degree bound on representation pairs", s(1), c5),
        run(6, "K4 cocycle, twisted Hopf algebra, anticommuting pair", s(1), c6),
        run(7, "S² conjugation, R∗R_c and negative objects", s(1), c7),
        run(8, "pseudoinvolutivity of twisted fixtures", s(1), c8),
        run(9, "unipotency harness with gauge invariance", s(5), c9),
        run(10, "trace of the normalized Drinfeld element", s(1), c10),
        run(11, "property suites", s(30), c11),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
