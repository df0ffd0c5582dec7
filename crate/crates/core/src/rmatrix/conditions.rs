use super::cpoly::CPoly;
use super::matrix::{Matrix, Ring};
use super::{BigRMatrix, Constraint, ConstraintSet, RMatrixError};
use crate::field::FieldElem;

/// `A12 B13 C23 - C23 B13 A12` on the three-copy space.
pub fn ybe_residual<T: Ring>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> Matrix<T> {
    let (a12, _, _) = a.legs();
    let (_, b13, _) = b.legs();
    let (_, _, c23) = c.legs();
    a12.mul(&b13).mul(&c23).sub(&c23.mul(&b13).mul(&a12))
}

/// `R12 R13 R23 = R23 R13 R12`, exactly.
pub fn qybe_check(m: &BigRMatrix) -> bool {
    ybe_residual(m, m, m).is_zero()
}

/// Which form of the last braiding condition to impose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FifthReading {
    /// `R'21 R = R21 R`, which forces `R' = R` when R is invertible.
    AsPrinted,
    /// `R21 R' = R'21 R`.
    Exchange,
}

pub const CONDITION_NAMES: [&str; 6] = [
    "R'12 R'13 R'23 = R'23 R'13 R'12",
    "R'12 R'13 R23 = R23 R'13 R'12",
    "R12 R'13 R'23 = R'23 R'13 R12",
    "(PR' + 1)(PR - 1) = 0",
    "R'21 R = R21 R (as printed)",
    "R21 R' = R'21 R",
];

/// Residual matrices (left minus right) of every braiding condition, in
/// the order of [`CONDITION_NAMES`].
pub fn rprime_residuals<T: Ring>(r: &Matrix<T>, rp: &Matrix<T>) -> Vec<Matrix<T>> {
    let p: Matrix<T> = Matrix::swap();
    let one = Matrix::identity(9);
    let hecke = p.mul(rp).add(&one).mul(&p.mul(r).sub(&one));
    let r21 = r.flipped();
    let rp21 = rp.flipped();
    vec![
        ybe_residual(rp, rp, rp),
        ybe_residual(rp, rp, r),
        ybe_residual(r, rp, rp),
        hecke,
        rp21.mul(r).sub(&r21.mul(r)),
        r21.mul(rp).sub(&rp21.mul(r)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RprimeReport {
    pub braid: bool,
    pub mixed_left: bool,
    pub mixed_right: bool,
    pub hecke: bool,
    pub fifth_as_printed: bool,
    pub fifth_exchange: bool,
}

impl RprimeReport {
    pub fn as_list(&self) -> [(&'static str, bool); 6] {
        [
            (CONDITION_NAMES[0], self.braid),
            (CONDITION_NAMES[1], self.mixed_left),
            (CONDITION_NAMES[2], self.mixed_right),
            (CONDITION_NAMES[3], self.hecke),
            (CONDITION_NAMES[4], self.fifth_as_printed),
            (CONDITION_NAMES[5], self.fifth_exchange),
        ]
    }

    /// All conditions except the printed fifth one.
    pub fn all_with_exchange(&self) -> bool {
        self.braid && self.mixed_left && self.mixed_right && self.hecke && self.fifth_exchange
    }
}

pub fn rprime_conditions(r: &BigRMatrix, rp: &BigRMatrix) -> RprimeReport {
    let v: Vec<bool> = rprime_residuals(r, rp).iter().map(Matrix::is_zero).collect();
    RprimeReport {
        braid: v[0],
        mixed_left: v[1],
        mixed_right: v[2],
        hecke: v[3],
        fifth_as_printed: v[4],
        fifth_exchange: v[5],
    }
}

/// `R^-1 = R21`.
pub fn triangularity_check(r: &BigRMatrix) -> Result<bool, RMatrixError> {
    let inv = r.inverse().ok_or(RMatrixError::NotInvertible)?;
    Ok(inv == r.flipped())
}

/// Polynomial conditions on `C1..C14` for a braiding matrix compatible
/// with `r` (all conditions, with the chosen fifth reading).
pub fn braiding_constraints(r: &BigRMatrix, fifth: FifthReading) -> ConstraintSet {
    let rp = super::data::rprime_ansatz();
    let rc = r.map(|x| CPoly::constant(14, x.clone()));
    let res = rprime_residuals(&rc, &rp);
    let mut constraints = Vec::new();
    for (k, m) in res.iter().enumerate() {
        let skip = match fifth {
            FifthReading::AsPrinted => k == 5,
            FifthReading::Exchange => k == 4,
        };
        if skip {
            continue;
        }
        for (row, col, p) in m.nonzero() {
            constraints.push(Constraint {
                origin: format!("{} [{},{}]", CONDITION_NAMES[k], row + 1, col + 1),
                poly: p.clone(),
            });
        }
    }
    ConstraintSet::new((1..=14).map(|i| format!("C{i}")).collect(), constraints).deduplicated()
}

/// Constraints on `C1..C14` at `Q1 = q^2`, with R specialised there.
pub fn braiding_constraints_at_q_squared(fifth: FifthReading) -> ConstraintSet {
    let r = super::data::paper_r()
        .at_q1_eq_q_squared()
        .expect("R has no pole at Q1 = q^2");
    braiding_constraints(&r, fifth)
}

/// Exact check that a candidate `C1..C14` satisfies a constraint set.
pub fn verify_candidate(cs: &ConstraintSet, c: &[FieldElem]) -> bool {
    cs.constraints.iter().all(|k| k.poly.eval(c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::super::data::{paper_r, paper_rprime};
    use super::*;

    #[test]
    fn identity_satisfies_qybe() {
        assert!(qybe_check(&Matrix::identity(9)));
        assert!(triangularity_check(&Matrix::identity(9)).unwrap());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        assert_eq!(triangularity_check(&Matrix::zeros(9)), Err(RMatrixError::NotInvertible));
    }

    #[test]
    fn rprime_equal_to_r_fails_hecke_generically() {
        let r = paper_r();
        let rep = rprime_conditions(&r, &r);
        assert!(!rep.hecke);
        let rep = rprime_conditions(&r, &paper_rprime());
        assert!(rep.all_with_exchange());
        // R'21 R = R21 R would force R' = R, which only holds at Q1 = q^2
        assert!(!rep.fifth_as_printed);
        let r2 = r.at_q1_eq_q_squared().unwrap();
        let rp2 = paper_rprime().at_q1_eq_q_squared().unwrap();
        assert!(rprime_conditions(&r2, &rp2).fifth_as_printed);
    }
}
