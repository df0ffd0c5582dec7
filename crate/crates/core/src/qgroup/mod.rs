//! The quantum matrix `t` coacting on the covector `(a, a*, qN)`:
//!
//! ```text
//!     ( K1  K3*  L1  )
//! t = ( K3  K1*  L1* )
//!     ( K2  K2*  L2  )
//! ```
//!
//! Its relations are derived from `R t1 t2 = t2 t1 R`. The module also
//! holds the Hopf structure (`Δ t = t ⊗ t`, `ε t = 1`, `S t = t^-1`), the
//! element `δ` with a formal inverse, and the covariance check for the
//! full group and the two subgroups.

mod covariance;
mod hopf;
mod printed;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldError, Specialization};
use crate::ncalg::{Generator, NCPoly, NcError, Overlap, RewriteSystem};
use crate::rmatrix::{pair, paper_r, BigRMatrix};

pub use crate::ncalg::NamedResidual;
pub use covariance::{covariance_check, CovarianceReport};
pub use hopf::{
    antipode_square_check, coproduct_check, counit_check, delta_checks, delta_element, inverse_check, inverse_matrix,
    natural_params, AntipodeReport, DeltaReport, HomomorphismReport, InverseReport, LocalizedAlgebra,
};
pub use printed::{match_printed_relations, printed_relations, MatchingReport, PrintedMatch, RuleOrigin};

/// Entry names of `t`, row by row.
pub const T_ENTRIES: [[&str; 3]; 3] = [["K1", "K3*", "L1"], ["K3", "K1*", "L1*"], ["K2", "K2*", "L2"]];

// (name, partner, rank, weight). Third-row entries weigh 2, which orients
// the relations the way they are usually written, e.g. `K2 K2* -> ... + L2 L2`.
const GENERATORS: [(&str, &str, u32, u32); 9] = [
    ("L2", "L2", 1, 2),
    ("L1*", "L1", 2, 1),
    ("L1", "L1*", 3, 1),
    ("K3*", "K3", 4, 1),
    ("K3", "K3*", 5, 1),
    ("K2*", "K2", 6, 2),
    ("K2", "K2*", 7, 2),
    ("K1*", "K1", 8, 1),
    ("K1", "K1*", 9, 1),
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QGroupError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("built-in expression: {0}")]
    Data(String),
}

/// Which entries of `t` are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    Full,
    /// `L1 = L1* = 0`, seven entries.
    A,
    /// `L1 = L1* = K3 = K3* = 0`, five entries.
    B,
}

impl Subgroup {
    pub const ALL: [Subgroup; 3] = [Subgroup::Full, Subgroup::A, Subgroup::B];

    pub fn masked(self) -> &'static [&'static str] {
        match self {
            Subgroup::Full => &[],
            Subgroup::A => &["L1", "L1*"],
            Subgroup::B => &["L1", "L1*", "K3", "K3*"],
        }
    }

    pub fn keeps(self, name: &str) -> bool {
        !self.masked().contains(&name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::Full => "full",
            Subgroup::A => "A",
            Subgroup::B => "B",
        }
    }
}

impl std::str::FromStr for Subgroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" | "Full" => Ok(Subgroup::Full),
            "A" | "a" => Ok(Subgroup::A),
            "B" | "b" => Ok(Subgroup::B),
            _ => Err(format!("unknown subgroup `{s}` (expected full, A or B)")),
        }
    }
}

/// Generators of `t` (restricted to a subgroup) with no relations yet.
pub fn free_matrix_algebra(subgroup: Subgroup) -> RewriteSystem {
    let gens = GENERATORS
        .iter()
        .filter(|g| subgroup.keeps(g.0))
        .map(|&(n, s, r, w)| Generator::new(n, Some(s), r).with_weight(w))
        .collect();
    RewriteSystem::new(gens).expect("generator table is valid")
}

/// A quantum-matrix algebra: the entries of `t` with oriented relations.
#[derive(Debug, Clone)]
pub struct QuantumMatrix {
    pub subgroup: Subgroup,
    pub params: Specialization,
    pub system: RewriteSystem,
    /// Nonzero entry equations of `R t1 t2 = t2 t1 R`, before elimination.
    pub relations: Vec<NCPoly>,
    /// Eliminated relations whose leading word is not quadratic.
    pub unused: Vec<NCPoly>,
    pub overlaps: Vec<Overlap>,
}

impl QuantumMatrix {
    /// Entry `t_ij` as a polynomial (zero if masked).
    pub fn entry(&self, i: usize, j: usize) -> NCPoly {
        entry_in(&self.system, i, j)
    }

    pub fn t(&self) -> [[NCPoly; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    /// `(i, j)` position of a generator.
    pub fn position(&self, g: u16) -> (usize, usize) {
        let n = self.system.name(g);
        for (i, row) in T_ENTRIES.iter().enumerate() {
            if let Some(j) = row.iter().position(|e| *e == n) {
                return (i, j);
            }
        }
        unreachable!("every generator is an entry of t")
    }

    pub fn is_confluent(&self) -> bool {
        self.overlaps.is_empty()
    }

    /// Rules `g h -> ...` with `g` ranked below `h`. These are products of
    /// generators forced to vanish or reorder against the PBW ordering.
    pub fn degenerate_rules(&self) -> Vec<String> {
        self.system
            .sorted_rules()
            .into_iter()
            .filter(|((g, h), _)| !self.system.is_descent(*g, *h))
            .map(|((g, h), rhs)| format!("{} = {}", self.system.word_string(&[g, h]), self.system.display(&rhs)))
            .collect()
    }

    /// Copy of the algebra keeping only descent rules (PBW type).
    pub fn descent_part(&self) -> Result<QuantumMatrix, QGroupError> {
        let mut sys = self.system.clone();
        for ((g, h), _) in self.system.sorted_rules() {
            if !sys.is_descent(g, h) {
                sys.remove_rule(g, h);
            }
        }
        let overlaps = sys.check_confluence()?;
        Ok(QuantumMatrix {
            system: sys,
            overlaps,
            ..self.clone()
        })
    }

    /// Star of `t_ij` is again an entry, as the pairing requires.
    pub fn star_is_entrywise(&self) -> bool {
        let conj = |n: &str| match n.strip_suffix('*') {
            Some(b) => b.to_string(),
            None if n == "L2" => n.to_string(),
            None => format!("{n}*"),
        };
        self.system
            .generators()
            .iter()
            .all(|g| g.star.as_deref() == Some(conj(&g.name).as_str()))
    }
}

fn entry_in(rs: &RewriteSystem, i: usize, j: usize) -> NCPoly {
    match rs.id(T_ENTRIES[i][j]) {
        Ok(g) => NCPoly::gen(g),
        Err(_) => NCPoly::zero(),
    }
}

/// The 81 entry equations `sum R[(ij),(mn)] t_mk t_nl - sum t_jn t_im
/// R[(mn),(kl)]` over the generators of `rs`, zeros dropped.
pub fn rtt_relations(rs: &RewriteSystem, r: &BigRMatrix) -> Vec<NCPoly> {
    let t = |i: usize, j: usize| entry_in(rs, i, j);
    let mut out = Vec::new();
    for ij in 0..9 {
        let (i, j) = (ij / 3, ij % 3);
        for kl in 0..9 {
            let (k, l) = (kl / 3, kl % 3);
            let mut p = NCPoly::zero();
            for m in 0..3 {
                for n in 0..3 {
                    let a = r.get(ij, pair(m, n));
                    if !a.is_zero() {
                        p = p.add(&t(m, k).mul(&t(n, l)).scale(a));
                    }
                    let b = r.get(pair(m, n), kl);
                    if !b.is_zero() {
                        p = p.sub(&t(j, n).mul(&t(i, m)).scale(b));
                    }
                }
            }
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    out
}

/// Derives the quantum-matrix algebra of `r`, restricted to a subgroup.
pub fn quantum_matrix_from_r(r: &BigRMatrix, subgroup: Subgroup) -> Result<QuantumMatrix, QGroupError> {
    let free = free_matrix_algebra(subgroup);
    let relations = rtt_relations(&free, r);
    let (system, unused) = free.with_relations(&relations)?;
    let overlaps = system.check_confluence()?;
    Ok(QuantumMatrix {
        subgroup,
        params: Specialization::generic(),
        system,
        relations,
        unused,
        overlaps,
    })
}

/// The quantum matrix of the oscillator R-matrix at the given parameters.
pub fn quantum_matrix(subgroup: Subgroup, params: &Specialization) -> Result<QuantumMatrix, QGroupError> {
    let r = paper_r().try_map(|x| params.apply(x))?;
    let mut qm = quantum_matrix_from_r(&r, subgroup)?;
    qm.params = params.clone();
    Ok(qm)
}

/// Canonical generating set and its rank, as returned by the derivation.
#[derive(Debug, Clone, Serialize)]
pub struct RttSummary {
    pub entry_equations: usize,
    pub rules: Vec<String>,
    pub unused: usize,
    pub confluent: bool,
}

pub fn rtt_generate_relations(r: &BigRMatrix) -> Result<(QuantumMatrix, RttSummary), QGroupError> {
    let qm = quantum_matrix_from_r(r, Subgroup::Full)?;
    let rules = qm
        .system
        .sorted_rules()
        .into_iter()
        .map(|((g, h), rhs)| format!("{} = {}", qm.system.word_string(&[g, h]), qm.system.display(&rhs)))
        .collect();
    let summary = RttSummary {
        entry_equations: qm.relations.len(),
        rules,
        unused: qm.unused.len(),
        confluent: qm.is_confluent(),
    };
    Ok((qm, summary))
}

pub(crate) fn parse_in(rs: &RewriteSystem, s: &str) -> Result<NCPoly, QGroupError> {
    crate::ncalg::parse_poly(rs, s).map_err(|e| QGroupError::Data(format!("`{s}`: {e}")))
}

pub(crate) fn specialize(p: &NCPoly, params: &Specialization) -> Result<NCPoly, QGroupError> {
    Ok(p.try_map_coeffs(|c| params.apply(c))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElem;
    use crate::rmatrix::Matrix;

    fn rule(qm: &QuantumMatrix, lhs: &str) -> String {
        let w = qm.system.parse_word(lhs).unwrap();
        qm.system.display(qm.system.rule(w[0], w[1]).expect("rule present"))
    }

    #[test]
    fn full_group_has_36_confluent_descent_rules() {
        let qm = quantum_matrix(Subgroup::Full, &Specialization::generic()).unwrap();
        assert_eq!(qm.system.num_rules(), 36);
        assert!(qm.unused.is_empty());
        assert!(qm.is_confluent());
        assert!(qm.degenerate_rules().is_empty());
        assert!(qm.star_is_entrywise());
    }

    #[test]
    fn sample_rules() {
        let qm = quantum_matrix(Subgroup::Full, &Specialization::generic()).unwrap();
        assert_eq!(rule(&qm, "K1 K3"), "(q^2/Q1^2) K3 K1");
        assert_eq!(rule(&qm, "L1 L2"), "(q/Q1) L2 L1");
    }

    #[test]
    fn identity_r_gives_commuting_entries() {
        let qm = quantum_matrix_from_r(&Matrix::identity(9), Subgroup::Full).unwrap();
        assert_eq!(qm.system.num_rules(), 36);
        for ((g, h), rhs) in qm.system.sorted_rules() {
            assert_eq!(rhs, NCPoly::word(vec![h, g]));
        }
    }

    #[test]
    fn su11_limit_commutes_up_to_the_determinant() {
        // q = Q1 = 1 with L1 = L1* = K2 = K2* = 0 and L2 = 1
        let one = FieldElem::one();
        let r = paper_r().substitute(&one, &one).unwrap();
        let qm = quantum_matrix_from_r(&r, Subgroup::Full).unwrap();
        let rs = &qm.system;
        let image = |g: u16| match rs.name(g) {
            "L1" | "L1*" | "K2" | "K2*" => Some(NCPoly::zero()),
            "L2" => Some(NCPoly::one()),
            _ => None,
        };
        let det = parse_in(rs, "K1* K1 - K3* K3 - 1").unwrap();
        let mut saw_det = false;
        for ((g, h), rhs) in rs.sorted_rules() {
            let rel = NCPoly::word(vec![g, h]).sub(&rhs).substitute(&image);
            if rel.is_zero() {
                continue;
            }
            let w = [g, h];
            let commutator = NCPoly::word(w.to_vec()).sub(&NCPoly::word(vec![h, g]));
            if rel == commutator {
                continue;
            }
            assert!(rel == det || rel == det.neg(), "{}", rs.display(&rel));
            saw_det = true;
        }
        assert!(saw_det);
    }

    #[test]
    fn subgroup_a_degenerates_off_the_special_line() {
        let qm = quantum_matrix(Subgroup::A, &Specialization::generic()).unwrap();
        let deg = qm.degenerate_rules();
        assert!(deg.iter().any(|d| d.starts_with("L2 K3 =")), "{deg:?}");
        let qm = quantum_matrix(Subgroup::A, &Specialization::q1_eq_q_squared()).unwrap();
        assert!(qm.degenerate_rules().is_empty());
        assert!(qm.is_confluent());
    }
}
