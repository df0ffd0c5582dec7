//! Explicit matrices and ansatz patterns on the pair basis
//! `(a a, a a*, a qN, a* a, a* a*, a* qN, qN a, qN a*, qN qN)`.

use super::cpoly::CPoly;
use super::matrix::{Matrix, Ring};
use super::BigRMatrix;
use crate::field::FieldElem;

/// Slots of the general R ansatz as `(row, col)` (1-based), listed for
/// `A1..A17`. Entries `(1,1)` and `(5,5)` are fixed to 1.
pub const R_SLOTS: [(usize, usize); 17] = [
    (2, 2),
    (4, 2),
    (9, 2),
    (3, 3),
    (7, 3),
    (2, 4),
    (4, 4),
    (9, 4),
    (6, 6),
    (8, 6),
    (3, 7),
    (7, 7),
    (6, 8),
    (8, 8),
    (2, 9),
    (4, 9),
    (9, 9),
];

/// Slots of the general braiding matrix: for each `C1..C14` the list of
/// `(row, col)` positions it occupies (1-based).
pub const RPRIME_SLOTS: [&[(usize, usize)]; 14] = [
    &[(1, 1), (5, 5)],
    &[(2, 2)],
    &[(4, 2)],
    &[(9, 2)],
    &[(3, 3), (8, 8)],
    &[(6, 8), (7, 3)],
    &[(2, 4)],
    &[(4, 4)],
    &[(9, 4)],
    &[(6, 6), (7, 7)],
    &[(3, 7), (8, 6)],
    &[(2, 9)],
    &[(4, 9)],
    &[(9, 9)],
];

fn q() -> FieldElem {
    FieldElem::q()
}

fn q1() -> FieldElem {
    FieldElem::q1()
}

fn ex(s: &str) -> FieldElem {
    s.parse().expect("valid literal")
}

fn from_entries(entries: &[((usize, usize), FieldElem)]) -> BigRMatrix {
    let mut m = Matrix::zeros(9);
    for ((r, c), v) in entries {
        m.set(r - 1, c - 1, v.clone());
    }
    m
}

/// The unique R solving covector consistency and the Yang–Baxter equation
/// for generic `q`, `Q1`.
pub fn paper_r() -> BigRMatrix {
    let d = ex("(q^2 - Q1)/q^2");
    from_entries(&[
        ((1, 1), FieldElem::one()),
        ((2, 2), ex("Q1^2/q^2")),
        ((3, 3), ex("Q1/q")),
        ((4, 2), d.clone()),
        ((4, 4), ex("1/Q1")),
        ((5, 5), FieldElem::one()),
        ((6, 6), ex("1/q")),
        ((6, 8), d.clone()),
        ((7, 3), d),
        ((7, 7), ex("1/q")),
        ((8, 8), ex("Q1/q")),
        ((9, 2), ex("Q1/q^2")),
        ((9, 4), ex("-1/Q1")),
        ((9, 9), FieldElem::one()),
    ])
}

/// The braiding matrix R' for generic `q`, `Q1`.
pub fn paper_rprime() -> BigRMatrix {
    let d = ex("(q^2 - Q1)/Q1");
    let s = ex("q^2/Q1");
    from_entries(&[
        ((1, 1), s.clone()),
        ((2, 2), q1()),
        ((3, 3), q()),
        ((4, 2), d.clone()),
        ((4, 4), ex("q^2/Q1^2")),
        ((5, 5), s.clone()),
        ((6, 6), ex("q/Q1")),
        ((6, 8), d.clone()),
        ((7, 3), d),
        ((7, 7), ex("q/Q1")),
        ((8, 8), q()),
        ((9, 2), FieldElem::one()),
        ((9, 4), ex("-q^2/Q1^2")),
        ((9, 9), s),
    ])
}

/// Values of `A1..A17` read off a matrix.
pub fn r_slot_values(m: &BigRMatrix) -> Vec<FieldElem> {
    R_SLOTS.iter().map(|&(r, c)| m.get(r - 1, c - 1).clone()).collect()
}

/// Matrix in the R pattern with the given `A1..A17`.
pub fn r_from_slots(a: &[FieldElem]) -> BigRMatrix {
    let mut m = Matrix::zeros(9);
    m.set(0, 0, FieldElem::one());
    m.set(4, 4, FieldElem::one());
    for (k, &(r, c)) in R_SLOTS.iter().enumerate() {
        m.set(r - 1, c - 1, a[k].clone());
    }
    m
}

/// The R ansatz over unknowns `A1..A17`.
pub fn r_ansatz() -> Matrix<CPoly> {
    let mut m = Matrix::zeros(9);
    m.set(0, 0, CPoly::constant(17, FieldElem::one()));
    m.set(4, 4, CPoly::constant(17, FieldElem::one()));
    for (k, &(r, c)) in R_SLOTS.iter().enumerate() {
        m.set(r - 1, c - 1, CPoly::var(17, k));
    }
    m
}

/// Matrix in the braiding pattern with the given `C1..C14`.
pub fn rprime_from_c<T: Ring>(c: &[T]) -> Matrix<T> {
    let mut m = Matrix::zeros(9);
    for (k, slots) in RPRIME_SLOTS.iter().enumerate() {
        for &(r, col) in slots.iter() {
            m.set(r - 1, col - 1, c[k].clone());
        }
    }
    m
}

/// The braiding ansatz over unknowns `C1..C14`.
pub fn rprime_ansatz() -> Matrix<CPoly> {
    let vars: Vec<CPoly> = (0..14).map(|k| CPoly::var(14, k)).collect();
    rprime_from_c(&vars)
}

/// `C1..C14` of a matrix in the braiding pattern, or `None` if it leaves
/// the pattern (entries outside it, or tied slots that differ).
pub fn c_values(m: &BigRMatrix) -> Option<Vec<FieldElem>> {
    let mut out = Vec::with_capacity(14);
    for slots in RPRIME_SLOTS.iter() {
        let (r, c) = slots[0];
        let v = m.get(r - 1, c - 1).clone();
        if slots.iter().any(|&(r, c)| *m.get(r - 1, c - 1) != v) {
            return None;
        }
        out.push(v);
    }
    (rprime_from_c(&out) == *m).then_some(out)
}

/// Named braiding solutions at `Q1 = q^2`, as exact `C1..C14`.
pub fn known_braidings_at_q_squared() -> Vec<(&'static str, Vec<FieldElem>)> {
    let base = |c4: &str, c9: &str, c14: &str| -> Vec<FieldElem> {
        [
            "1", "q^2", "0", c4, "q", "0", "0", "q^-2", c9, "q^-1", "0", "0", "0", c14,
        ]
        .iter()
        .map(|s| ex(s))
        .collect()
    };
    vec![
        ("R'(Q1=q^2)", base("1", "-q^-2", "1")),
        ("sol1", base("0", "0", "-1")),
        ("sol2", base("2", "0", "1")),
        ("sol3", base("0", "-2*q^-2", "1")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rprime_is_proportional_to_r() {
        let s = ex("q^2/Q1");
        assert_eq!(paper_rprime(), paper_r().scale(&s));
    }

    #[test]
    fn spot_entries() {
        assert_eq!(paper_r().get(3, 1).to_string(), "(-Q1 + q^2)/q^2");
        assert_eq!(paper_rprime().get(8, 8).to_string(), "q^2/Q1");
        assert_eq!(r_from_slots(&r_slot_values(&paper_r())), paper_r());
    }

    #[test]
    fn specialised_rprime_is_first_template() {
        let c = c_values(&paper_rprime().at_q1_eq_q_squared().unwrap()).unwrap();
        assert_eq!(c, known_braidings_at_q_squared()[0].1);
    }
}
