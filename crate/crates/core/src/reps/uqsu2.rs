//! Subgroup B at `Q1 = 1` under `L2 = q^H`, `K1 = K1* = q^-H`,
//! `K2 = s X-`, `K2* = s X+` with `s^2 = q - q^-1`, compared against
//!
//! ```text
//! q^H X± = q^±1 X± q^H,   X+ X- - X- X+ = (q^2H - q^-2H)/(q - q^-1)
//! ```
//!
//! and the Hopf structure `Δ(X±) = X± ⊗ q^-H + q^H ⊗ X±`,
//! `S(X±) = -q^∓1 X±`, `ε(X±) = 0`, `ε(q^±H) = 1`.

use serde::Serialize;

use super::{RelationSet, RepError};
use crate::field::{FieldElem, Specialization};
use crate::ncalg::{parse_presentation, tensor_algebra, CrossRules, GenId, NCPoly, NamedResidual, RewriteSystem};
use crate::qgroup::Subgroup;

/// Everything except the commutator, which depends on the sign.
pub const UQ_PRESENTATION: &str = "\
generators: Xm Xp qmH qH
weights: Xm 2, Xp 2
star: Xp Xm, qH qH, qmH qmH
qH Xp = (q) Xp qH
qH Xm = (q^-1) Xm qH
qmH Xp = (q^-1) Xp qmH
qmH Xm = (q) Xm qmH
qH qmH = 1
qmH qH = 1
";

#[derive(Debug, Clone, Serialize)]
pub struct UqReport {
    pub confluent: bool,
    /// Normal form of `q^H X+ q^-H`.
    pub conjugation: String,
    /// Images of the subgroup-B relations reduced by the displayed relations.
    pub forward: Vec<NamedResidual>,
    /// Displayed relations reduced by the images of the subgroup-B relations.
    pub backward: Vec<NamedResidual>,
    pub matches_displayed: bool,
    /// The same comparison with `X+ X- - X- X+` replaced by its negative.
    pub matches_reversed_commutator: bool,
    pub coproduct: Vec<NamedResidual>,
    pub counit: Vec<NamedResidual>,
    pub antipode: Vec<NamedResidual>,
    pub star: Vec<NamedResidual>,
    pub hopf_passed: bool,
    pub passed: bool,
}

/// The displayed algebra; `sign = -1` flips the commutator.
pub fn uq_algebra(sign: i64) -> Result<RewriteSystem, RepError> {
    let mut rs = parse_presentation(UQ_PRESENTATION)?;
    let g = |n: &str| rs.g(n);
    let c = (&FieldElem::q() - &FieldElem::monomial(1, -1, 0)).inv()? * FieldElem::from_int(sign);
    let rhs = g("Xm")
        .mul(&g("Xp"))
        .add(&g("qH").mul(&g("qH")).sub(&g("qmH").mul(&g("qmH"))).scale(&c));
    let (xp, xm) = (rs.id("Xp")?, rs.id("Xm")?);
    rs.add_rule(xp, xm, rhs)?;
    Ok(rs)
}

fn relation_polys(rs: &RewriteSystem) -> Vec<(String, NCPoly)> {
    rs.sorted_rules()
        .into_iter()
        .map(|((g, h), rhs)| {
            let lhs = NCPoly::word(vec![g, h]);
            (
                format!("{} = {}", rs.word_string(&[g, h]), rs.display(&rhs)),
                lhs.sub(&rhs),
            )
        })
        .collect()
}

/// Image of a subgroup-B relation, divided by the lowest power of `s`.
fn identify(b: &RewriteSystem, p: &NCPoly, uq: &RewriteSystem) -> Result<NCPoly, RepError> {
    let s2 = &FieldElem::q() - &FieldElem::monomial(1, -1, 0);
    let image = |n: &str| -> Result<GenId, RepError> {
        Ok(uq.id(match n {
            "L2" => "qH",
            "K1" | "K1*" => "qmH",
            "K2" => "Xm",
            "K2*" => "Xp",
            other => other,
        })?)
    };
    let ladder = |w: &[GenId]| w.iter().filter(|&&g| b.name(g).starts_with("K2")).count();
    let dmin = p.terms().map(|(w, _)| ladder(w)).min().unwrap_or(0);
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let extra = ladder(w) - dmin;
        if extra % 2 == 1 {
            return Err(RepError::InvalidParams("relation mixes ladder parities".into()));
        }
        let c = c * &s2.pow(extra as i32 / 2)?;
        let w: Vec<GenId> = w.iter().map(|&g| image(b.name(g))).collect::<Result<_, _>>()?;
        out.add_term(w, &c);
    }
    Ok(out)
}

/// Forward and backward residuals of the identification against `uq`.
fn compare(uq: &RewriteSystem) -> Result<(Vec<NamedResidual>, Vec<NamedResidual>), RepError> {
    let at_one = Specialization::q1(FieldElem::one());
    let rels = RelationSet::printed(Subgroup::B)?;
    let mut forward = Vec::new();
    let mut images = Vec::new();
    for (name, p) in &rels.relations {
        let p = p.try_map_coeffs(|c| at_one.apply(c))?;
        let img = identify(&rels.system, &p, uq)?;
        forward.push(NamedResidual::new(name.clone(), uq, &uq.normal_form(&img)?));
        images.push(img);
    }
    // q^H q^-H = q^-H q^H = 1 is part of the identification
    let one = NCPoly::one();
    images.push(uq.g("qH").mul(&uq.g("qmH")).sub(&one));
    images.push(uq.g("qmH").mul(&uq.g("qH")).sub(&one));
    let mut free = uq.clone();
    for ((g, h), _) in uq.sorted_rules() {
        free.remove_rule(g, h);
    }
    let (img_sys, _) = free.with_relations(&images)?;
    let mut backward = Vec::new();
    for (name, p) in relation_polys(uq) {
        backward.push(NamedResidual::new(name, &img_sys, &img_sys.normal_form(&p)?));
    }
    Ok((forward, backward))
}

fn all_zero(v: &[NamedResidual]) -> bool {
    v.iter().all(|r| r.zero)
}

pub fn uqsu2_check() -> Result<UqReport, RepError> {
    let uq = uq_algebra(1)?;
    let confluent = uq.check_confluence()?.is_empty();
    let g = |n: &str| uq.g(n);
    let conjugation = uq.display(&uq.normal_form(&g("qH").mul(&g("Xp")).mul(&g("qmH")))?);

    let (forward, backward) = compare(&uq)?;
    let matches_displayed = all_zero(&forward) && all_zero(&backward);
    let (f2, b2) = compare(&uq_algebra(-1)?)?;
    let matches_reversed_commutator = all_zero(&f2) && all_zero(&b2);

    let rels = relation_polys(&uq);
    let right = uq.renamed("'", 0);
    let ta = tensor_algebra(&uq, &right, CrossRules::Commuting)?;
    let t = |a: &str, b: &str| ta.pure_tensor(&g(a), &g(b));
    let delta = |id: GenId| -> NCPoly {
        match uq.name(id) {
            "qH" => t("qH", "qH"),
            "qmH" => t("qmH", "qmH"),
            "Xp" => t("Xp", "qmH").add(&t("qH", "Xp")),
            "Xm" => t("Xm", "qmH").add(&t("qH", "Xm")),
            _ => unreachable!(),
        }
    };
    let eps = |id: GenId| -> FieldElem {
        if uq.name(id).starts_with('X') {
            FieldElem::zero()
        } else {
            FieldElem::one()
        }
    };
    let s_gen = |id: GenId| -> NCPoly {
        match uq.name(id) {
            "qH" => g("qmH"),
            "qmH" => g("qH"),
            "Xp" => g("Xp").scale(&-FieldElem::monomial(1, -1, 0)),
            "Xm" => g("Xm").scale(&-FieldElem::q()),
            _ => unreachable!(),
        }
    };
    // S reverses products
    let antipode = |p: &NCPoly| -> NCPoly {
        p.terms().fold(NCPoly::zero(), |acc, (w, c)| {
            acc.add(&w.iter().rev().fold(NCPoly::scalar(c.clone()), |a, &h| a.mul(&s_gen(h))))
        })
    };

    let mut coproduct = Vec::new();
    let mut counit = Vec::new();
    let mut antipode_res = Vec::new();
    let mut star = Vec::new();
    for (name, p) in &rels {
        let d = p.substitute(&|id| Some(delta(id)));
        coproduct.push(NamedResidual::new(
            format!("Δ({name})"),
            &ta.system,
            &ta.system.normal_form(&d)?,
        ));
        let e = p.substitute(&|id| Some(NCPoly::scalar(eps(id))));
        counit.push(NamedResidual::new(format!("ε({name})"), &uq, &e));
        let s = antipode(p);
        antipode_res.push(NamedResidual::new(format!("S({name})"), &uq, &uq.normal_form(&s)?));
        let st = uq.star(p)?;
        star.push(NamedResidual::new(format!("({name})*"), &uq, &uq.normal_form(&st)?));
    }
    for gen in ["qH", "qmH", "Xp", "Xm"] {
        let id = uq.id(gen)?;
        let parts = ta.split(&ta.system.normal_form(&delta(id))?);
        let want = NCPoly::scalar(eps(id));
        let mut l = NCPoly::zero();
        let mut r = NCPoly::zero();
        for (u, v, c) in &parts {
            let (u, v) = (NCPoly::term(c.clone(), u.clone()), NCPoly::word(v.clone()));
            l = l.add(&antipode(&u).mul(&v));
            r = r.add(&u.mul(&antipode(&v)));
        }
        for (side, x) in [("m(S⊗id)Δ", l), ("m(id⊗S)Δ", r)] {
            let res = uq.normal_form(&x.sub(&want))?;
            antipode_res.push(NamedResidual::new(format!("{side}({gen}) = ε({gen})"), &uq, &res));
        }
        // Δ(g*) = (*⊗*)Δ(g)
        let gs = uq.star_gen(id)?;
        let lhs = ta.system.normal_form(&delta(gs))?;
        let mut rhs = NCPoly::zero();
        for (u, v, c) in &parts {
            let us = uq.star(&NCPoly::word(u.clone()))?;
            let vs = right.star(&NCPoly::word(v.clone()))?;
            rhs = rhs.add(&ta.pure_tensor(&us, &vs).scale(c));
        }
        let rhs = ta.system.normal_form(&rhs)?;
        star.push(NamedResidual::new(
            format!("Δ({gen}*) = Δ({gen})^(*⊗*)"),
            &ta.system,
            &lhs.sub(&rhs),
        ));
    }
    let hopf_passed = all_zero(&coproduct) && all_zero(&counit) && all_zero(&antipode_res) && all_zero(&star);
    Ok(UqReport {
        confluent,
        conjugation,
        forward,
        backward,
        matches_displayed,
        matches_reversed_commutator,
        coproduct,
        counit,
        antipode: antipode_res,
        star,
        hopf_passed,
        passed: confluent && matches_displayed && hopf_passed,
    })
}
