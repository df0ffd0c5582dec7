use qosc::braided::*;
use qosc::field::Specialization;
use qosc::rmatrix::{known_braidings_at_q_squared, rprime_from_c, BigRMatrix};

fn failures(rep: &AxiomReport) -> Vec<String> {
    rep.results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{}: {:?}", r.axiom, r.counterexample))
        .collect()
}

#[test]
fn axioms_hold_for_generic_rprime() {
    let b = BraidedStructure::paper();
    let rep = braided_axiom_suite(&b, "R'").unwrap();
    assert_eq!(rep.results.len(), AXIOMS.len());
    assert!(rep.passed, "{:#?}", failures(&rep));
}

#[test]
fn axioms_hold_for_known_braidings_at_q_squared() {
    for (name, c) in known_braidings_at_q_squared() {
        let b = BraidedStructure::new(rprime_from_c(&c), Specialization::q1_eq_q_squared()).unwrap();
        let rep = braided_axiom_suite(&b, name).unwrap();
        println!("{name}: passed = {}", rep.passed);
        assert!(rep.passed, "{name}: {:#?}", failures(&rep));
    }
}

#[test]
fn plain_flip_breaks_the_coproduct() {
    let b = BraidedStructure::new(BigRMatrix::identity(9), Specialization::generic()).unwrap();
    let rep = braided_axiom_suite(&b, "flip").unwrap();
    let dm = rep.results.iter().find(|r| r.axiom == AXIOMS[9]).unwrap();
    assert!(!dm.passed);
    let hom = braided_coproduct_homomorphism_check(&BraidedStructure::paper(), false).unwrap();
    assert!(!hom.passed);
}

#[test]
fn explicit_braidings_match() {
    let b = BraidedStructure::paper();
    for e in explicit_braidings_check(&b).unwrap() {
        assert!(e.matches, "{}: expected {}, got {}", e.input, e.expected, e.computed);
    }
}

#[test]
fn coproduct_is_a_homomorphism_into_the_braided_square() {
    let rep = braided_coproduct_homomorphism_check(&BraidedStructure::paper(), true).unwrap();
    assert!(rep.passed, "{rep:#?}");
    assert!(rep.confluent);
    let (_, c) = known_braidings_at_q_squared()
        .into_iter()
        .find(|(n, _)| *n == "sol1")
        .unwrap();
    let b = BraidedStructure::new(rprime_from_c(&c), Specialization::q1_eq_q_squared()).unwrap();
    let rep = braided_coproduct_homomorphism_check(&b, true).unwrap();
    assert!(rep.passed, "{rep:#?}");
}

#[test]
fn relation_tensors_are_killed_by_m_psi() {
    for r in relation_tensors_check(&BraidedStructure::paper()).unwrap() {
        assert!(r.zero, "{}: {}", r.name, r.residual);
    }
}

#[test]
fn star_structure() {
    let rep = braided_star_check(&BraidedStructure::paper()).unwrap();
    let bad = |v: &[(String, bool)]| {
        v.iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.clone())
            .collect::<Vec<_>>()
    };
    println!("Δ∘* failures: {:?}", bad(&rep.coproduct));
    println!("S∘* failures: {:?}", bad(&rep.antipode));
    println!("tensor * failures: {:?}", bad(&rep.tensor_star));
    assert!(rep.passed);
}

#[test]
fn psi_is_not_involutive() {
    let inv = involutivity(&BraidedStructure::paper()).unwrap();
    assert_eq!(inv.len(), 9);
    assert!(inv.iter().any(|(_, ok)| !ok));
}

#[test]
fn suite_covers_every_input_class() {
    let rep = braided_axiom_suite(&BraidedStructure::paper(), "R'").unwrap();
    let tested: Vec<usize> = rep.results.iter().map(|r| r.tested).collect();
    assert!(tested.iter().all(|&n| n >= 12), "{tested:?}");
    let star = braided_star_check(&BraidedStructure::paper()).unwrap();
    assert_eq!(star.coproduct.len(), 12);
    assert_eq!(star.tensor_star.len(), 36);
}

#[test]
fn perturbed_braiding_fails_an_axiom() {
    let (_, mut c) = known_braidings_at_q_squared().remove(0);
    c[4] = "q^3".parse().unwrap();
    let b = BraidedStructure::new(rprime_from_c(&c), Specialization::q1_eq_q_squared()).unwrap();
    let rep = braided_axiom_suite(&b, "perturbed").unwrap();
    assert!(!rep.passed);
}
