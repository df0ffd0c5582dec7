//! The braided Hopf axioms, checked on generators, on the nine degree-2
//! products, and on generator pairs and triples.

use serde::Serialize;

use super::{BraidedError, BraidedStructure, Tensor};
use crate::field::FieldElem;
use crate::ncalg::NCPoly;

pub const AXIOMS: [&str; 14] = [
    "m(id⊗m) = m(m⊗id)",
    "m(id⊗η) = m(η⊗id) = id",
    "(id⊗Δ)Δ = (Δ⊗id)Δ",
    "(ε⊗id)Δ = (id⊗ε)Δ = id",
    "m(id⊗S)Δ = m(S⊗id)Δ = ηε",
    "ψ(m⊗id) = (id⊗m)(ψ⊗id)(id⊗ψ)",
    "ψ(id⊗m) = (m⊗id)(id⊗ψ)(ψ⊗id)",
    "(id⊗Δ)ψ = (ψ⊗id)(id⊗ψ)(Δ⊗id)",
    "(Δ⊗id)ψ = (id⊗ψ)(ψ⊗id)(id⊗Δ)",
    "Δm = (m⊗m)(id⊗ψ⊗id)(Δ⊗Δ)",
    "Sm = mψ(S⊗S)",
    "ΔS = (S⊗S)ψΔ",
    "εm = ε⊗ε",
    "(ψ⊗id)(id⊗ψ)(ψ⊗id) = (id⊗ψ)(ψ⊗id)(id⊗ψ)",
];

#[derive(Debug, Clone, Serialize)]
pub struct AxiomResult {
    pub axiom: &'static str,
    pub tested: usize,
    pub passed: bool,
    /// First failing input and its residual.
    pub counterexample: Option<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub label: String,
    pub params: String,
    pub results: Vec<AxiomResult>,
    pub passed: bool,
}

fn pure(ps: &[&NCPoly]) -> Tensor {
    ps.iter().fold(Tensor::basis(vec![], FieldElem::one()), |acc, p| {
        acc.tensor(&Tensor::from_poly(p))
    })
}

fn unit() -> NCPoly {
    NCPoly::one()
}

type Named<'a> = (String, Vec<&'a NCPoly>);

fn run(
    b: &BraidedStructure,
    axiom: &'static str,
    inputs: &[Named<'_>],
    f: &dyn Fn(&[&NCPoly]) -> Result<Vec<Tensor>, BraidedError>,
) -> Result<AxiomResult, BraidedError> {
    let mut counterexample = None;
    for (name, xs) in inputs {
        for r in f(xs)? {
            let r = r.normalized(&b.osc)?;
            if !r.is_zero() && counterexample.is_none() {
                counterexample = Some((name.clone(), r.display(&b.osc)));
            }
        }
    }
    Ok(AxiomResult {
        axiom,
        tested: inputs.len(),
        passed: counterexample.is_none(),
        counterexample,
    })
}

pub fn braided_axiom_suite(b: &BraidedStructure, label: &str) -> Result<AxiomReport, BraidedError> {
    let elems = b.test_elements()?;
    let gens = &elems[..3];
    let singles: Vec<Named> = elems.iter().map(|(n, p)| (n.clone(), vec![p])).collect();
    let mut pairs: Vec<Named> = Vec::new();
    for (gn, g) in gens {
        for (en, e) in &elems {
            pairs.push((format!("({gn}, {en})"), vec![g, e]));
            if en.contains(' ') {
                pairs.push((format!("({en}, {gn})"), vec![e, g]));
            }
        }
    }
    let mut triples: Vec<Named> = Vec::new();
    for (xn, x) in gens {
        for (yn, y) in gens {
            for (zn, z) in gens {
                triples.push((format!("({xn}, {yn}, {zn})"), vec![x, y, z]));
            }
        }
    }
    let nf = |p: &NCPoly| b.nf(p);
    let one = unit();
    let mut results = Vec::new();

    results.push(run(b, AXIOMS[0], &triples, &|v| {
        let l = nf(&nf(&v[0].mul(v[1]))?.mul(v[2]))?;
        let r = nf(&v[0].mul(&nf(&v[1].mul(v[2]))?))?;
        Ok(vec![Tensor::from_poly(&l.sub(&r))])
    })?);
    results.push(run(b, AXIOMS[1], &singles, &|v| {
        let x = Tensor::from_poly(v[0]);
        Ok(vec![
            b.mul_at(&pure(&[v[0], &one]), 0)?.sub(&x),
            b.mul_at(&pure(&[&one, v[0]]), 0)?.sub(&x),
        ])
    })?);
    results.push(run(b, AXIOMS[2], &singles, &|v| {
        let d = b.coproduct(v[0])?;
        Ok(vec![b.coproduct_at(&d, 0)?.sub(&b.coproduct_at(&d, 1)?)])
    })?);
    results.push(run(b, AXIOMS[3], &singles, &|v| {
        let d = b.coproduct(v[0])?;
        let x = Tensor::from_poly(v[0]);
        Ok(vec![b.counit_at(&d, 0).sub(&x), b.counit_at(&d, 1).sub(&x)])
    })?);
    results.push(run(b, AXIOMS[4], &singles, &|v| {
        let d = b.coproduct(v[0])?;
        let e = Tensor::from_poly(&NCPoly::scalar(b.counit(v[0])));
        Ok(vec![
            b.mul_at(&b.antipode_at(&d, 1)?, 0)?.sub(&e),
            b.mul_at(&b.antipode_at(&d, 0)?, 0)?.sub(&e),
        ])
    })?);
    results.push(run(b, AXIOMS[5], &triples, &|v| {
        let xy = nf(&v[0].mul(v[1]))?;
        let l = b.psi_at(&pure(&[&xy, v[2]]), 0)?;
        let t = pure(v);
        let r = b.mul_at(&b.psi_at(&b.psi_at(&t, 1)?, 0)?, 1)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[6], &triples, &|v| {
        let yz = nf(&v[1].mul(v[2]))?;
        let l = b.psi_at(&pure(&[v[0], &yz]), 0)?;
        let t = pure(v);
        let r = b.mul_at(&b.psi_at(&b.psi_at(&t, 0)?, 1)?, 0)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[7], &pairs, &|v| {
        let t = pure(v);
        let l = b.coproduct_at(&b.psi_at(&t, 0)?, 1)?;
        let r = b.psi_at(&b.psi_at(&b.coproduct_at(&t, 0)?, 1)?, 0)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[8], &pairs, &|v| {
        let t = pure(v);
        let l = b.coproduct_at(&b.psi_at(&t, 0)?, 0)?;
        let r = b.psi_at(&b.psi_at(&b.coproduct_at(&t, 1)?, 0)?, 1)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[9], &pairs, &|v| {
        let l = b.coproduct(&nf(&v[0].mul(v[1]))?)?;
        let r = b.braided_mul(&b.coproduct(v[0])?, &b.coproduct(v[1])?)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[10], &pairs, &|v| {
        let l = Tensor::from_poly(&b.antipode(&nf(&v[0].mul(v[1]))?)?);
        let s = pure(&[&b.antipode(v[0])?, &b.antipode(v[1])?]);
        let r = b.mul_at(&b.psi_at(&s, 0)?, 0)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[11], &singles, &|v| {
        let l = b.coproduct(&b.antipode(v[0])?)?;
        let d = b.psi_at(&b.coproduct(v[0])?, 0)?;
        let r = b.antipode_at(&b.antipode_at(&d, 0)?, 1)?;
        Ok(vec![l.sub(&r)])
    })?);
    results.push(run(b, AXIOMS[12], &pairs, &|v| {
        let l = b.counit(&nf(&v[0].mul(v[1]))?);
        let r = &b.counit(v[0]) * &b.counit(v[1]);
        Ok(vec![Tensor::from_poly(&NCPoly::scalar(&l - &r))])
    })?);
    results.push(run(b, AXIOMS[13], &triples, &|v| {
        let t = pure(v);
        let l = b.psi_at(&b.psi_at(&b.psi_at(&t, 0)?, 1)?, 0)?;
        let r = b.psi_at(&b.psi_at(&b.psi_at(&t, 1)?, 0)?, 1)?;
        Ok(vec![l.sub(&r)])
    })?);

    let passed = results.iter().all(|r| r.passed);
    Ok(AxiomReport {
        label: label.to_string(),
        params: b.params.label(),
        results,
        passed,
    })
}
