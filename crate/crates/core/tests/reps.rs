use num_complex::Complex64;
use proptest::prelude::*;
use qosc::qgroup::Subgroup;
use qosc::reps::*;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rels(s: Subgroup) -> RelationSet {
    RelationSet::printed(s).unwrap()
}

fn rep_a_example() -> TruncatedRep {
    build_rep_a(&RepParamsA::constrained(1.0, re(0.7), re(0.5), 1.2, 20)).unwrap()
}

#[test]
fn printed_subgroup_relations_follow_from_rtt() {
    for s in [Subgroup::A, Subgroup::B] {
        for r in printed_relations_in_ideal(s).unwrap() {
            assert!(r.zero, "{s:?} {}: {}", r.name, r.residual);
        }
    }
}

#[test]
fn subgroup_a_rep_satisfies_relations() {
    let v = verify_rep(&rep_a_example(), &rels(Subgroup::A)).unwrap();
    assert!(v.hermitian && v.diagonal_ok);
    assert_eq!(v.residuals.len(), 24);
    assert!(v.passed, "{v:#?}");
    assert!(v.max < 1e-10);
}

#[test]
fn subgroup_a_constraint_is_enforced() {
    let p = RepParamsA {
        b: re(1.0),
        ..RepParamsA::constrained(1.0, re(0.7), re(0.5), 1.2, 20)
    };
    assert!(matches!(build_rep_a(&p), Err(RepError::InvalidParams(_))));
}

#[test]
fn ladder_structure() {
    let rep = rep_a_example();
    for (name, offset) in [("K2", 1), ("K3", 2)] {
        let m = rep.mat(name);
        for ((i, j), z) in m.indexed_iter() {
            if j != i + offset {
                assert_eq!(*z, re(0.0), "{name} at ({i},{j})");
            }
        }
    }
}

#[test]
fn subgroup_b_closed_form_matches_recursion() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.5, 25);
    for n in 0..25 {
        let c = k2_sq_closed(&p, n).unwrap();
        let r = k2_sq_recursion(&p, n);
        assert!((c - r).abs() <= 1e-12 * c.abs().max(1.0), "n = {n}: {c} vs {r}");
    }
    let v = verify_rep(&build_rep_b(&p).unwrap(), &rels(Subgroup::B)).unwrap();
    assert!(v.passed, "{v:#?}");
}

#[test]
fn subgroup_b_at_the_pole_uses_the_recursion() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.44, 24);
    assert!(p.at_pole());
    assert!(k2_sq_closed(&p, 3).is_none());
    let v = verify_rep(&build_rep_b(&p).unwrap(), &rels(Subgroup::B)).unwrap();
    assert!(v.passed, "{v:#?}");
}

#[test]
fn inadmissible_parameters_are_rejected() {
    let p = RepParamsB::new(0.3, re(1.0), 1.2, 1.5, 10);
    assert!(matches!(
        build_rep_b(&p),
        Err(RepError::InadmissibleParams { n: 1, .. })
    ));
}

#[test]
fn corrupted_ladder_is_detected_locally() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.5, 24);
    let mut rep = build_rep_b(&p).unwrap();
    let k = rep.mats["K2"][[4, 5]];
    rep.mats.get_mut("K2").unwrap()[[4, 5]] = k * 1.1;
    rep.mats.get_mut("K2*").unwrap()[[5, 4]] = (k * 1.1).conj();
    let v = verify_rep(&rep, &rels(Subgroup::B)).unwrap();
    assert!(!v.passed);
    let worst = v.residuals.iter().max_by(|a, b| a.max.total_cmp(&b.max)).unwrap();
    assert!(worst.max > 1e-3);
    let (r, c) = worst.location.unwrap();
    assert!((4..=6).contains(&r) && (4..=6).contains(&c), "{worst:?}");
}

#[test]
fn broken_star_partner_fails_hermiticity() {
    let mut rep = rep_a_example();
    rep.mats.get_mut("K2*").unwrap()[[3, 2]] += re(0.5);
    let v = verify_rep(&rep, &rels(Subgroup::A)).unwrap();
    assert!(!v.hermitian && !v.passed);
}

#[test]
fn two_sided_window() {
    let p = RepParamsB {
        window_start: 3,
        ..RepParamsB::new(1.0, re(0.3), 1.2, 1.0, 20)
    };
    let rep = build_rep_b(&p).unwrap();
    assert_eq!(rep.states[0], 3);
    assert_eq!(rep.interior.first(), Some(&1));
    let v = verify_rep(&rep, &rels(Subgroup::B)).unwrap();
    assert!(v.passed, "{v:#?}");
}

#[test]
fn casimir_is_scalar_at_q1_one() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.0, 24);
    let c = casimir_check(&build_rep_b(&p).unwrap(), &p).unwrap();
    assert!(c.scalar_on_interior, "{c:#?}");
    assert!(c.max_commutator <= REP_TOL);
    assert!(c.matches_lowest_state);
    let computed = 0.09 + 1.0 / 1.44;
    assert!((c.scalar - computed).abs() < 1e-12);
    // the printed eigenvalue A^2 + q^-2 |B|^2 is not what the rep gives
    assert!(!c.matches_printed);
    assert!(c.discrepancy.is_some());
    assert_eq!(c.central_at, vec!["Q1 = 1".to_string()]);
}

#[test]
fn casimir_at_zero_b() {
    let p = RepParamsB::new(1.3, re(0.0), 1.2, 1.0, 24);
    let c = casimir_check(&build_rep_b(&p).unwrap(), &p).unwrap();
    assert!(c.scalar_on_interior);
    assert!((c.scalar - 1.69 / 1.44).abs() < 1e-12);
}

#[test]
fn casimir_is_not_central_for_generic_q1() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.5, 24);
    let c = casimir_check(&build_rep_b(&p).unwrap(), &p).unwrap();
    assert!(!c.scalar_on_interior);
    let k2 = c.symbolic.iter().find(|s| s.generator == "K2").unwrap();
    assert_ne!(k2.generic, "0");
    assert_eq!(k2.vanishes_at, vec!["Q1 = 1".to_string()]);
}

#[test]
fn casimir_needs_subgroup_b() {
    let p = RepParamsB::new(1.0, re(0.3), 1.2, 1.0, 24);
    assert!(matches!(
        casimir_check(&rep_a_example(), &p),
        Err(RepError::WrongSubgroup { .. })
    ));
}

#[test]
fn uqsu2_identification() {
    let u = uqsu2_check().unwrap();
    assert!(u.confluent);
    assert_eq!(u.conjugation, "(q) Xp");
    assert!(u.hopf_passed, "{u:#?}");
    // the identification lands on the commutator with the opposite sign
    assert!(!u.matches_displayed);
    assert!(u.matches_reversed_commutator);
    let bad: Vec<_> = u.forward.iter().filter(|r| !r.zero).map(|r| r.name.as_str()).collect();
    assert_eq!(
        bad,
        [
            "K2 K2* = (Q1) K2* K2 - K1* K1 + L2 L2",
            "(K2 K2* = (Q1) K2* K2 - K1* K1 + L2 L2)*"
        ]
    );
}

/// `k2,7` scaled by 1.1, keeping the star partner consistent.
fn corrupted(mut rep: TruncatedRep) -> TruncatedRep {
    rep.mats.get_mut("K2").unwrap()[[6, 7]] *= 1.1;
    let k = rep.mats["K2"][[6, 7]];
    rep.mats.get_mut("K2*").unwrap()[[7, 6]] = k.conj();
    rep
}

fn param() -> impl Strategy<Value = f64> {
    0.5f64..2.0
}

fn phase() -> impl Strategy<Value = f64> {
    0.0f64..std::f64::consts::TAU
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn closed_form_equals_recursion(a in param(), b in 0.0f64..2.0, q in param(), q1 in param(), n in 0i32..=30) {
        prop_assume!((q1 - q * q).abs() > 0.05);
        let p = RepParamsB::new(a, re(b), q, q1, 31);
        let r = q1 / q;
        let scale = a * a * (q1.powi(n) + q.powi(2 * n)) / (q1 - q * q).abs()
            + b * b * (q1.powi(n) + r.powi(2 * n)) / (q1 - r * r).abs();
        let c = k2_sq_closed(&p, n).unwrap();
        prop_assert!((c - k2_sq_recursion(&p, n)).abs() <= 1e-10 * scale.max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn subgroup_a_reps_pass(a in param(), cr in param(), ct in phase(), dr in param(), dt in phase(), q in param(), dim in 20usize..=32) {
        let p = RepParamsA::constrained(a, Complex64::from_polar(cr, ct), Complex64::from_polar(dr, dt), q, dim);
        let v = verify_rep(&build_rep_a(&p).unwrap(), &rels(Subgroup::A)).unwrap();
        prop_assert!(v.passed, "max scaled {}", v.max_scaled);
    }

    #[test]
    fn subgroup_b_reps_pass(a in param(), bf in 0.0f64..0.9, bt in phase(), q in param(), q1 in param(), dim in 20usize..=32) {
        let p = RepParamsB::new(a, Complex64::from_polar(a * bf, bt), q, q1, dim);
        let rep = build_rep_b(&p);
        prop_assume!(rep.is_ok());
        let v = verify_rep(&rep.unwrap(), &rels(Subgroup::B)).unwrap();
        prop_assert!(v.passed, "max scaled {}", v.max_scaled);
    }

    #[test]
    fn rephasing_leaves_residuals_unchanged(seed in proptest::collection::vec(phase(), 20)) {
        let rep = rep_a_example();
        prop_assert!(verify_rep(&rep.rephased(&seed), &rels(Subgroup::A)).unwrap().passed);
        let bad = corrupted(rep);
        let v0 = verify_rep(&bad, &rels(Subgroup::A)).unwrap();
        let v1 = verify_rep(&bad.rephased(&seed), &rels(Subgroup::A)).unwrap();
        for (r0, r1) in v0.residuals.iter().zip(&v1.residuals).filter(|(r, _)| r.max > 1e-6) {
            prop_assert!((r0.max - r1.max).abs() <= 1e-9 * r0.max);
        }
    }

    #[test]
    fn residuals_scale_quadratically(l in 0.5f64..2.0) {
        let build = |l: f64| {
            let p = RepParamsA::constrained(l, re(0.7 * l), re(0.5 * l), 1.2, 20);
            verify_rep(&corrupted(build_rep_a(&p).unwrap()), &rels(Subgroup::A)).unwrap()
        };
        let (v1, vl) = (build(1.0), build(l));
        for (r1, rl) in v1.residuals.iter().zip(&vl.residuals).filter(|(r, _)| r.max > 1e-6) {
            prop_assert!((rl.max - l * l * r1.max).abs() <= 1e-8 * (l * l * r1.max).max(1e-12));
        }
        prop_assert_eq!(v1.passed, vl.passed);
    }
}
