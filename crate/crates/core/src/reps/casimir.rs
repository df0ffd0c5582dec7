//! `C = K1* K1 + (q^-2 - 1) K2* K2 + q^-2 L2^2` on subgroup B.

use ndarray::Array2;
use num_complex::Complex64;
use serde::Serialize;

use super::{eval_poly, interior_scaled_max, k2_sq, RelationSet, RepError, RepParamsB, TruncatedRep, REP_TOL};
use crate::field::{FieldElem, Specialization};
use crate::ncalg::parse_poly;
use crate::qgroup::{quantum_matrix, Subgroup};

pub const CASIMIR: &str = "K1* K1 + (q^-2 - 1) K2* K2 + (q^-2) L2 L2";

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicCentrality {
    pub generator: String,
    /// Normal form of `C g - g C` at generic parameters.
    pub generic: String,
    /// Specializations, among those tried, at which it vanishes.
    pub vanishes_at: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CasimirReport {
    pub q: f64,
    pub q1: f64,
    /// Diagonal of `C` on the interior.
    pub diagonal: Vec<f64>,
    /// Largest scaled deviation of the interior block from `scalar * 1`.
    pub deviation: f64,
    pub scalar_on_interior: bool,
    /// `C` on the first state.
    pub scalar: f64,
    /// `A^2 + q^-2 |B|^2`, the eigenvalue as printed.
    pub printed_value: f64,
    /// `|k1,0|^2 + (q^-2 - 1)|k2,0|^2 + q^-2 A^2`, evaluated from the
    /// k-formulas directly.
    pub lowest_state_value: f64,
    pub matches_printed: bool,
    pub matches_lowest_state: bool,
    /// Set whenever the printed value disagrees with the computed one.
    pub discrepancy: Option<String>,
    /// Largest scaled interior entry of `[C, g]` per generator.
    pub commutators: Vec<(String, f64)>,
    pub max_commutator: f64,
    pub symbolic: Vec<SymbolicCentrality>,
    /// Specializations at which every symbolic commutator vanishes.
    pub central_at: Vec<String>,
}

fn specializations() -> Vec<Specialization> {
    vec![
        Specialization::generic(),
        Specialization::q1(FieldElem::one()),
        Specialization::q1_eq_q_squared(),
    ]
}

/// Reduces `C g - g C` for each generator of subgroup B.
pub fn symbolic_centrality() -> Result<Vec<SymbolicCentrality>, RepError> {
    let gens = ["K1", "K1*", "K2", "K2*", "L2"];
    let mut out: Vec<SymbolicCentrality> = Vec::new();
    for (k, sp) in specializations().into_iter().enumerate() {
        let qm = quantum_matrix(Subgroup::B, &sp)?.descent_part()?;
        let rs = &qm.system;
        let c = parse_poly(rs, CASIMIR).map_err(RepError::InvalidParams)?;
        let c = c.try_map_coeffs(|x| sp.apply(x))?;
        for (i, g) in gens.iter().enumerate() {
            let g = rs.g(g);
            let r = rs.normal_form(&c.mul(&g).sub(&g.mul(&c)))?;
            if k == 0 {
                out.push(SymbolicCentrality {
                    generator: gens[i].to_string(),
                    generic: rs.display(&r),
                    vanishes_at: Vec::new(),
                });
            }
            if r.is_zero() {
                out[i].vanishes_at.push(sp.label());
            }
        }
    }
    Ok(out)
}

fn commutator(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    a.dot(b) - b.dot(a)
}

pub fn casimir_check(rep: &TruncatedRep, p: &RepParamsB) -> Result<CasimirReport, RepError> {
    if rep.subgroup != Subgroup::B {
        return Err(RepError::WrongSubgroup {
            expected: "B",
            got: rep.subgroup.name(),
        });
    }
    let (q, q1) = (rep.q, rep.q1);
    let qm2 = q.powi(-2);
    let rels = RelationSet::printed(Subgroup::B)?;
    let cp = parse_poly(&rels.system, CASIMIR).map_err(RepError::InvalidParams)?;
    let (c, c_scale) = eval_poly(rep, &rels.system, &cp)?;
    let first = rep.interior[0];
    let scalar = c[[first, first]].re;
    let shifted = &c - &Array2::<Complex64>::eye(rep.dim()) * Complex64::from(scalar);
    let (deviation, _) = interior_scaled_max(rep, &shifted, Some(&c_scale));
    let diagonal = rep.interior.iter().map(|&i| c[[i, i]].re).collect();

    let n0 = rep.states[first];
    let lowest_state_value =
        p.b.norm_sqr() * (q1 / q).powi(2 * n0) + (qm2 - 1.0) * k2_sq(p, n0) + qm2 * p.a * p.a * q.powi(2 * n0);
    let printed_value = p.a * p.a + qm2 * p.b.norm_sqr();
    let tol = REP_TOL * scalar.abs().max(1.0);
    let matches_printed = (scalar - printed_value).abs() <= tol;
    let matches_lowest_state = (scalar - lowest_state_value).abs() <= tol;
    let discrepancy = (!matches_printed).then(|| {
        format!(
            "printed eigenvalue A^2 + q^-2 |B|^2 = {printed_value} differs from the computed {scalar} \
             (|B|^2 + q^-2 A^2 = {})",
            p.b.norm_sqr() + qm2 * p.a * p.a
        )
    });

    let mut commutators = Vec::new();
    for (name, g) in &rep.mats {
        let ga = g.mapv(|z| z.norm());
        let scale = c_scale.dot(&ga) + ga.dot(&c_scale);
        let (v, _) = interior_scaled_max(rep, &commutator(&c, g), Some(&scale));
        commutators.push((name.clone(), v));
    }
    let max_commutator = commutators.iter().map(|(_, v)| *v).fold(0.0, f64::max);

    let symbolic = symbolic_centrality()?;
    let central_at = specializations()
        .iter()
        .map(|s| s.label())
        .filter(|l| symbolic.iter().all(|s| s.vanishes_at.contains(l)))
        .collect();
    Ok(CasimirReport {
        q,
        q1,
        diagonal,
        deviation,
        scalar_on_interior: deviation <= REP_TOL,
        scalar,
        printed_value,
        lowest_state_value,
        matches_printed,
        matches_lowest_state,
        discrepancy,
        commutators,
        max_commutator,
        symbolic,
        central_at,
    })
}
