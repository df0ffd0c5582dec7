//! 9×9 matrices on the degree-two word basis of the covector `(a, a*, qN)`:
//! Yang–Baxter and covector consistency checks, the braiding conditions on
//! R', and a numeric search for braiding solutions at `Q1 = q^2`.

mod conditions;
mod covector;
mod cpoly;
mod data;
mod matrix;
mod solve;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElem, FieldError};

pub use conditions::{
    braiding_constraints, braiding_constraints_at_q_squared, qybe_check, rprime_conditions, rprime_residuals,
    triangularity_check, verify_candidate, ybe_residual, FifthReading, RprimeReport, CONDITION_NAMES,
};
pub use covector::{
    covector_coefficient_constraints, covector_constraints, covector_constraints_ansatz, covector_ideal,
    covector_relations, solve_linear, IdealReport, LinearSolution,
};
pub use cpoly::{CPoly, NumPoly};
pub use data::{
    c_values, known_braidings_at_q_squared, paper_r, paper_rprime, r_ansatz, r_from_slots, r_slot_values,
    rprime_ansatz, rprime_from_c, RPRIME_SLOTS, R_SLOTS,
};
pub use matrix::{pair, Matrix, Ring};
pub use solve::{refine_numeric, solve_braidings_numeric, Solution, SolveOptions, SolveReport, TemplateCheck};

/// 9×9 matrix over the parameter field.
pub type BigRMatrix = Matrix<FieldElem>;

/// Degree-two word basis in Kronecker order.
pub const BASIS2: [&str; 9] = [
    "a a", "a a*", "a qN", "a* a", "a* a*", "a* qN", "qN a", "qN a*", "qN qN",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RMatrixError {
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix JSON: {0}")]
    Json(String),
    #[error("q must be positive and different from 1 (got {0})")]
    BadPoint(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub origin: String,
    pub poly: CPoly,
}

/// Polynomial equations `poly = 0` in named unknowns, each tagged with the
/// condition and entry it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSet {
    pub unknowns: Vec<String>,
    pub constraints: Vec<Constraint>,
}

impl ConstraintSet {
    pub fn new(unknowns: Vec<String>, constraints: Vec<Constraint>) -> Self {
        ConstraintSet { unknowns, constraints }
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    /// Drops repeated polynomials (and their negatives), keeping the first
    /// origin tag.
    pub fn deduplicated(self) -> Self {
        let mut seen: Vec<CPoly> = Vec::new();
        let mut out = Vec::new();
        for c in self.constraints {
            let neg = CPoly::zero().minus(&c.poly);
            if seen.iter().any(|s| *s == c.poly || *s == neg) {
                continue;
            }
            seen.push(c.poly.clone());
            out.push(c);
        }
        ConstraintSet::new(self.unknowns, out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "unknowns": self.unknowns,
            "constraints": self.constraints.iter().map(|c| serde_json::json!({
                "origin": c.origin,
                "poly": c.poly.fmt_with(&self.unknowns),
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<String>>,
}

/// 81 entries in the field grammar, as nine rows of nine strings.
pub fn matrix_to_json(m: &BigRMatrix) -> serde_json::Value {
    let n = m.dim();
    let rows = (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    serde_json::to_value(MatrixJson { rows }).expect("strings serialise")
}

pub fn matrix_from_json(v: &serde_json::Value) -> Result<BigRMatrix, RMatrixError> {
    let mj: MatrixJson = serde_json::from_value(v.clone()).map_err(|e| RMatrixError::Json(e.to_string()))?;
    let n = mj.rows.len();
    if n == 0 || mj.rows.iter().any(|r| r.len() != n) {
        return Err(RMatrixError::Json("matrix must be square".into()));
    }
    let mut m = Matrix::zeros(n);
    for (r, row) in mj.rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            let v: FieldElem = s
                .parse()
                .map_err(|e: FieldError| RMatrixError::Json(format!("[{r},{c}]: {e}")))?;
            m.set(r, c, v);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let m = paper_r();
        let v = matrix_to_json(&m);
        assert_eq!(v["rows"][3][1], "(-Q1 + q^2)/q^2");
        assert_eq!(matrix_from_json(&v).unwrap(), m);
        assert!(matrix_from_json(&serde_json::json!({"rows": [["q"], ["1"]]})).is_err());
    }
}
