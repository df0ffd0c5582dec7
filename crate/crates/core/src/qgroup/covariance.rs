//! Covariance of the oscillator under `x' = x t` with entries of `t`
//! commuting with `x`.

use serde::Serialize;

use super::{quantum_matrix, QGroupError, Subgroup};
use crate::field::Specialization;
use crate::ncalg::{tensor_algebra, CrossRules, NCPoly, NamedResidual};
use crate::oscillator::{self, COVECTOR, RELATION_NAMES};

#[derive(Debug, Clone, Serialize)]
pub struct CovarianceReport {
    pub subgroup: Subgroup,
    pub params: String,
    /// Relations of the subgroup that kill or reorder products against the
    /// generator order; a nonempty list means the subgroup algebra is
    /// degenerate at these parameters.
    pub degenerate: Vec<String>,
    /// The descent rules alone are confluent.
    pub algebra_confluent: bool,
    /// Primed oscillator relations reduced with the descent rules.
    pub residuals: Vec<NamedResidual>,
    pub passed: bool,
}

pub fn covariance_check(subgroup: Subgroup, params: &Specialization) -> Result<CovarianceReport, QGroupError> {
    let qm = quantum_matrix(subgroup, params)?;
    let degenerate = qm.degenerate_rules();
    let pbw = qm.descent_part()?;
    let osc = oscillator::oscillator().try_map_coeffs(&|c| params.apply(c))?;
    let ta = tensor_algebra(&pbw.system, &osc, CrossRules::Commuting)?;
    let x: Vec<NCPoly> = COVECTOR.iter().map(|n| ta.embed_right(&osc.g(n))).collect();
    // x'_j = sum_i x_i t_ij, written with t on the left
    let xp: Vec<NCPoly> = (0..3)
        .map(|j| {
            (0..3).fold(NCPoly::zero(), |acc, i| {
                acc.add(&ta.embed_left(&pbw.entry(i, j)).mul(&x[i]))
            })
        })
        .collect();
    let q = params.q.clone();
    let q1 = params.q1.clone();
    let (a, ad, n) = (&xp[0], &xp[1], &xp[2]);
    let rels = [
        a.mul(ad).sub(&ad.mul(a).scale(&q1)).sub(&n.mul(n)),
        a.mul(n).sub(&n.mul(a).scale(&q)),
        n.mul(ad).sub(&ad.mul(n).scale(&q)),
    ];
    let mut residuals = Vec::new();
    for (name, r) in RELATION_NAMES.iter().zip(rels) {
        let nf = ta.system.normal_form(&r)?;
        residuals.push(NamedResidual::new(format!("({name})'"), &ta.system, &nf));
    }
    let algebra_confluent = pbw.is_confluent();
    let passed = degenerate.is_empty() && algebra_confluent && residuals.iter().all(|r| r.zero);
    Ok(CovarianceReport {
        subgroup,
        params: params.label(),
        degenerate,
        algebra_confluent,
        residuals,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_group_is_covariant() {
        let rep = covariance_check(Subgroup::Full, &Specialization::generic()).unwrap();
        assert!(rep.passed, "{rep:#?}");
    }
}
