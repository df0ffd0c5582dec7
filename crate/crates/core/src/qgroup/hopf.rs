//! Hopf structure of the quantum matrix: inverse matrix, the element `δ`
//! with a formal inverse, coproduct and counit homomorphism checks, and
//! the square of the antipode.

use serde::Serialize;

use super::{parse_in, quantum_matrix, specialize, QGroupError, QuantumMatrix, Subgroup};
use crate::field::{FieldElem, Specialization};
use crate::ncalg::{tensor_algebra, CrossRules, GenId, Generator, NCPoly, NamedResidual, RewriteSystem, TensorAlgebra};

fn all_zero(rs: &[NamedResidual]) -> bool {
    rs.iter().all(|r| r.zero)
}

const DELTA_FULL: &str = "L2 K1* K1 - (q^-2 Q1^2) L2 K3* K3 + L1 K3 K2* + L1* K3* K2 \
                          - (q Q1^-1) L1* K2* K1 - (q^-1 Q1) L1 K2 K1*";
const DELTA_A: &str = "L2 K1* K1 - (q^2) L2 K3* K3";
const DELTA_B: &str = "L2 K1* K1";

// t^-1 = M δ^-1, entries of M row by row
const INV_FULL: [[&str; 3]; 3] = [
    [
        "L2 K1* - (q Q1^-1) L1* K2*",
        "-(Q1^-2) L2 K3* + (q^-1 Q1^-1) L1 K2*",
        "(q Q1^-2) L1* K3* - (q^-1) L1 K1*",
    ],
    [
        "-(Q1^2) L2 K3 + (q Q1) L1* K2",
        "L2 K1 - (q^-1 Q1) L1 K2",
        "(q^-1 Q1^2) L1 K3 - (q) L1* K1",
    ],
    [
        "(q^2 Q1^-1) K3 K2* - (q) K2 K1*",
        "(q^-2 Q1) K3* K2 - (q^-1) K2* K1",
        "K1* K1 - (q^-2 Q1^2) K3* K3",
    ],
];
const INV_A: [[&str; 3]; 3] = [
    ["L2 K1*", "-(q^-4) L2 K3*", "0"],
    ["-(q^4) L2 K3", "L2 K1", "0"],
    ["K3 K2* - (q) K2 K1*", "K3* K2 - (q^-1) K2* K1", "K1* K1 - (q^2) K3* K3"],
];
const INV_B: [[&str; 3]; 3] = [
    ["L2 K1*", "0", "0"],
    ["0", "L2 K1", "0"],
    ["-(q) K2 K1*", "-(q^-1) K2* K1", "K1* K1"],
];

/// `g δ = μ_g δ g`.
fn multiplier(name: &str) -> FieldElem {
    let m = |s: &str| s.parse::<FieldElem>().expect("valid literal");
    let (base, starred) = match name.strip_suffix('*') {
        Some(b) => (b, true),
        None => (name, false),
    };
    let mu = match base {
        "K2" => m("q^-1 Q1^2"),
        "K3" => m("q^-2 Q1^4"),
        "L1" => m("q Q1^-2"),
        _ => FieldElem::one(),
    };
    if starred {
        mu.inv().expect("nonzero")
    } else {
        mu
    }
}

/// `δ` for the algebra's subgroup, at its parameters.
pub fn delta_element(qm: &QuantumMatrix) -> Result<NCPoly, QGroupError> {
    let s = match qm.subgroup {
        Subgroup::Full => DELTA_FULL,
        Subgroup::A => DELTA_A,
        Subgroup::B => DELTA_B,
    };
    specialize(&parse_in(&qm.system, s)?, &qm.params)
}

/// `M` with `t^-1 = M δ^-1`.
pub fn inverse_matrix(qm: &QuantumMatrix) -> Result<[[NCPoly; 3]; 3], QGroupError> {
    let tab = match qm.subgroup {
        Subgroup::Full => &INV_FULL,
        Subgroup::A => &INV_A,
        Subgroup::B => &INV_B,
    };
    let mut out: [[NCPoly; 3]; 3] = Default::default();
    for (i, row) in tab.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            out[i][j] = specialize(&parse_in(&qm.system, s)?, &qm.params)?;
        }
    }
    Ok(out)
}

/// The algebra with a formal generator `d = δ^-1` of top rank and rules
/// `d g -> μ_g g d`. Normal words end in a power of `d`; an expression
/// `sum_k A_k d^k` vanishes iff `sum_k A_k δ^(K-k)` does, which is how
/// `δ δ^-1 = 1` is applied.
#[derive(Debug, Clone)]
pub struct LocalizedAlgebra {
    pub qm: QuantumMatrix,
    pub system: RewriteSystem,
    pub d: GenId,
    pub delta: NCPoly,
}

impl LocalizedAlgebra {
    pub fn new(qm: &QuantumMatrix) -> Result<Self, QGroupError> {
        let base = &qm.system;
        let top = base.generators().iter().map(|g| g.rank).max().unwrap_or(0);
        let mut gens = base.generators().to_vec();
        gens.push(Generator::new("d", Some("d"), top + 1));
        let mut sys = RewriteSystem::new(gens)?;
        let d = base.num_generators() as GenId;
        for ((g, h), rhs) in base.sorted_rules() {
            sys.add_rule(g, h, rhs)?;
        }
        for g in 0..d {
            let mu = qm.params.apply(&multiplier(base.name(g)))?;
            sys.add_rule(d, g, NCPoly::term(mu, vec![g, d]))?;
        }
        Ok(LocalizedAlgebra {
            qm: qm.clone(),
            system: sys,
            d,
            delta: delta_element(qm)?,
        })
    }

    pub fn d(&self) -> NCPoly {
        NCPoly::gen(self.d)
    }

    /// `d`-free numerator `sum_k A_k δ^(K-k)` in normal form.
    pub fn numerator(&self, p: &NCPoly) -> Result<NCPoly, QGroupError> {
        let nf = self.system.normal_form(p)?;
        let mut parts: Vec<NCPoly> = Vec::new();
        for (w, c) in nf.terms() {
            let k = w.iter().rev().take_while(|&&g| g == self.d).count();
            debug_assert!(!w[..w.len() - k].contains(&self.d));
            if parts.len() <= k {
                parts.resize(k + 1, NCPoly::zero());
            }
            parts[k].add_term(w[..w.len() - k].to_vec(), c);
        }
        let top = parts.len().saturating_sub(1);
        let mut acc = NCPoly::zero();
        for (k, a) in parts.iter().enumerate() {
            let mut term = a.clone();
            for _ in k..top {
                term = term.mul(&self.delta);
            }
            acc = acc.add(&term);
        }
        Ok(self.qm.system.normal_form(&acc)?)
    }

    pub fn residual(&self, name: impl Into<String>, p: &NCPoly) -> Result<NamedResidual, QGroupError> {
        let n = self.numerator(p)?;
        Ok(NamedResidual::new(name, &self.qm.system, &n))
    }

    /// Left over overlaps; empty when the `d` rules respect the relations.
    pub fn overlaps(&self) -> Result<usize, QGroupError> {
        Ok(self.system.check_confluence()?.len())
    }
}

/// Parameters at which a subgroup is a consistent algebra.
pub fn natural_params(subgroup: Subgroup) -> Specialization {
    match subgroup {
        Subgroup::A => Specialization::q1_eq_q_squared(),
        _ => Specialization::generic(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InverseReport {
    pub subgroup: Subgroup,
    pub params: String,
    pub localized_confluent: bool,
    /// Entries of `t t^-1 - 1`.
    pub right: Vec<NamedResidual>,
    /// Entries of `t^-1 t - 1`.
    pub left: Vec<NamedResidual>,
    pub passed: bool,
}

pub fn inverse_check(subgroup: Subgroup) -> Result<InverseReport, QGroupError> {
    let qm = quantum_matrix(subgroup, &natural_params(subgroup))?;
    let loc = LocalizedAlgebra::new(&qm)?;
    let m = inverse_matrix(&qm)?;
    let t = qm.t();
    let d = loc.d();
    let mut right = Vec::new();
    let mut left = Vec::new();
    for i in 0..3 {
        for k in 0..3 {
            let id = if i == k { NCPoly::one() } else { NCPoly::zero() };
            let mut r = id.neg();
            let mut l = id.neg();
            for j in 0..3 {
                r = r.add(&t[i][j].mul(&m[j][k]).mul(&d));
                l = l.add(&m[i][j].mul(&d).mul(&t[j][k]));
            }
            right.push(loc.residual(format!("(t t^-1 - 1)[{}{}]", i + 1, k + 1), &r)?);
            left.push(loc.residual(format!("(t^-1 t - 1)[{}{}]", i + 1, k + 1), &l)?);
        }
    }
    let localized_confluent = loc.overlaps()? == 0;
    let passed = localized_confluent && all_zero(&right) && all_zero(&left);
    Ok(InverseReport {
        subgroup,
        params: qm.params.label(),
        localized_confluent,
        right,
        left,
        passed,
    })
}

/// Commuting square `H ⊗ H'` of an algebra with itself.
fn square(qm: &QuantumMatrix) -> Result<TensorAlgebra, QGroupError> {
    let right = qm.system.renamed("'", 0);
    Ok(tensor_algebra(&qm.system, &right, CrossRules::Commuting)?)
}

/// `Δ(t_ij) = sum_k t_ik ⊗ t_kj` inside the square.
fn coproduct_map(qm: &QuantumMatrix, sq: &TensorAlgebra) -> impl Fn(GenId) -> Option<NCPoly> {
    let t = qm.t();
    let images: Vec<NCPoly> = (0..qm.system.num_generators() as GenId)
        .map(|g| {
            let (i, j) = qm.position(g);
            (0..3).fold(NCPoly::zero(), |acc, k| acc.add(&sq.pure_tensor(&t[i][k], &t[k][j])))
        })
        .collect();
    move |g| Some(images[g as usize].clone())
}

fn counit_value(qm: &QuantumMatrix, g: GenId) -> NCPoly {
    let (i, j) = qm.position(g);
    if i == j {
        NCPoly::one()
    } else {
        NCPoly::zero()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaReport {
    pub subgroup: Subgroup,
    pub params: String,
    pub delta: String,
    /// `g δ - μ_g δ g` for every generator.
    pub commutations: Vec<NamedResidual>,
    pub star: NamedResidual,
    pub coproduct: NamedResidual,
    pub counit: NamedResidual,
    pub passed: bool,
}

pub fn delta_checks(subgroup: Subgroup) -> Result<DeltaReport, QGroupError> {
    let qm = quantum_matrix(subgroup, &natural_params(subgroup))?;
    let rs = &qm.system;
    let delta = delta_element(&qm)?;
    let mut commutations = Vec::new();
    for g in 0..rs.num_generators() as GenId {
        let name = rs.name(g);
        let mu = qm.params.apply(&multiplier(name))?;
        let gp = NCPoly::gen(g);
        let p = gp.mul(&delta).sub(&delta.mul(&gp).scale(&mu));
        commutations.push(NamedResidual::new(
            format!("{name} δ - ({mu}) δ {name}"),
            rs,
            &rs.normal_form(&p)?,
        ));
    }
    let star = NamedResidual::new("δ* - δ", rs, &rs.normal_form(&rs.star(&delta)?.sub(&delta))?);
    let sq = square(&qm)?;
    let cop = delta.substitute(&coproduct_map(&qm, &sq));
    let target = sq.pure_tensor(&delta, &delta);
    let coproduct = NamedResidual::new("Δ(δ) - δ ⊗ δ", &sq.system, &sq.system.normal_form(&cop.sub(&target))?);
    let eps = delta.substitute(&|g| Some(counit_value(&qm, g)));
    let counit = NamedResidual::new("ε(δ) - 1", rs, &eps.sub(&NCPoly::one()));
    let passed = all_zero(&commutations) && star.zero && coproduct.zero && counit.zero;
    Ok(DeltaReport {
        subgroup,
        params: qm.params.label(),
        delta: rs.display(&delta),
        commutations,
        star,
        coproduct,
        counit,
        passed,
    })
}

fn rule_relations(qm: &QuantumMatrix) -> Vec<(String, NCPoly)> {
    qm.system
        .sorted_rules()
        .into_iter()
        .map(|((g, h), rhs)| {
            let lhs = NCPoly::word(vec![g, h]);
            (
                format!("{} = {}", qm.system.word_string(&[g, h]), qm.system.display(&rhs)),
                lhs.sub(&rhs),
            )
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct HomomorphismReport {
    pub map: String,
    pub residuals: Vec<NamedResidual>,
    pub passed: bool,
}

/// `Δ` applied to every relation reduces to zero in the commuting square.
pub fn coproduct_check(qm: &QuantumMatrix) -> Result<HomomorphismReport, QGroupError> {
    let sq = square(qm)?;
    let map = coproduct_map(qm, &sq);
    let mut residuals = Vec::new();
    for (name, rel) in rule_relations(qm) {
        let nf = sq.system.normal_form(&rel.substitute(&map))?;
        residuals.push(NamedResidual::new(format!("Δ({name})"), &sq.system, &nf));
    }
    // masked entries must have vanishing coproduct for a sub-bialgebra
    let t = qm.t();
    for (i, row) in super::T_ENTRIES.iter().enumerate() {
        for (j, name) in row.iter().enumerate() {
            if qm.subgroup.keeps(name) {
                continue;
            }
            let c = (0..3).fold(NCPoly::zero(), |acc, k| acc.add(&sq.pure_tensor(&t[i][k], &t[k][j])));
            residuals.push(NamedResidual::new(
                format!("Δ({name})"),
                &sq.system,
                &sq.system.normal_form(&c)?,
            ));
        }
    }
    Ok(HomomorphismReport {
        map: "Δ".into(),
        passed: all_zero(&residuals),
        residuals,
    })
}

/// `ε(t) = 1` sends every relation to zero.
pub fn counit_check(qm: &QuantumMatrix) -> Result<HomomorphismReport, QGroupError> {
    let residuals: Vec<NamedResidual> = rule_relations(qm)
        .into_iter()
        .map(|(name, rel)| {
            let v = rel.substitute(&|g| Some(counit_value(qm, g)));
            NamedResidual::new(format!("ε({name})"), &qm.system, &v)
        })
        .collect();
    Ok(HomomorphismReport {
        map: "ε".into(),
        passed: all_zero(&residuals),
        residuals,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AntipodeReport {
    pub params: String,
    /// `S(S(g)) - g` for each requested generator.
    pub residuals: Vec<NamedResidual>,
    pub passed: bool,
}

/// `S(S(g)) = g` for the full group, with `S(t_ij) = M_ij d`, `S(d) = δ`
/// and `S` an antihomomorphism.
pub fn antipode_square_check(params: &Specialization, gens: &[&str]) -> Result<AntipodeReport, QGroupError> {
    let qm = quantum_matrix(Subgroup::Full, params)?;
    let loc = LocalizedAlgebra::new(&qm)?;
    let m = inverse_matrix(&qm)?;
    let s_gen = |g: GenId| -> NCPoly {
        let (i, j) = qm.position(g);
        m[i][j].mul(&loc.d())
    };
    let mut residuals = Vec::new();
    for name in gens {
        let g = qm.system.id(name)?;
        let (i, j) = qm.position(g);
        // S(M_ij) term by term, reversing words
        let mut sm = NCPoly::zero();
        for (w, c) in m[i][j].terms() {
            let mut acc = NCPoly::scalar(c.clone());
            for &x in w.iter().rev() {
                acc = acc.mul(&s_gen(x));
            }
            sm = sm.add(&acc);
        }
        let ss = loc.delta.mul(&sm);
        residuals.push(loc.residual(format!("S(S({name})) - {name}"), &ss.sub(&NCPoly::gen(g)))?);
    }
    Ok(AntipodeReport {
        params: params.label(),
        passed: all_zero(&residuals),
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_subgroup_b() {
        let rep = inverse_check(Subgroup::B).unwrap();
        assert!(rep.passed, "{rep:#?}");
    }

    #[test]
    fn delta_of_subgroup_b() {
        let rep = delta_checks(Subgroup::B).unwrap();
        assert!(rep.passed, "{rep:#?}");
    }
}
