//! The two-parameter deformed oscillator on `a`, `a*`, `qN`:
//!
//! ```text
//! a a* - Q1 a* a = qN qN,   a qN = q qN a,   qN a* = q a* qN
//! ```
//!
//! with `(a)* = a*` and `qN` self-conjugate.

use crate::field::FieldElem;
use crate::ncalg::{parse_presentation, NCPoly, RewriteSystem};

pub const PRESENTATION: &str = "\
generators: a* qN a
star: a a*, qN qN
a a* = (Q1) a* a + qN qN
a qN = (q) qN a
qN a* = (q) a* qN
";

/// Covector component names in basis order `x = (a, a*, qN)`.
pub const COVECTOR: [&str; 3] = ["a", "a*", "qN"];

pub fn oscillator() -> RewriteSystem {
    parse_presentation(PRESENTATION).expect("built-in presentation is valid")
}

/// The three defining relations as elements of the free algebra (each
/// `= 0`), written over the generators of `rs` (which must contain `a`,
/// `a*`, `qN`, possibly renamed with `suffix`).
pub fn relations(rs: &RewriteSystem, suffix: &str) -> [NCPoly; 3] {
    let g = |n: &str| rs.g(&format!("{n}{suffix}"));
    let (a, ad, n) = (g("a"), g("a*"), g("qN"));
    let q = FieldElem::q();
    let q1 = FieldElem::q1();
    [
        a.mul(&ad).sub(&ad.mul(&a).scale(&q1)).sub(&n.mul(&n)),
        a.mul(&n).sub(&n.mul(&a).scale(&q)),
        n.mul(&ad).sub(&ad.mul(&n).scale(&q)),
    ]
}

/// Human labels for [`relations`].
pub const RELATION_NAMES: [&str; 3] = ["a a* - Q1 a* a - qN^2", "a qN - q qN a", "qN a* - q a* qN"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_reduce_to_zero() {
        let rs = oscillator();
        for r in relations(&rs, "") {
            assert!(rs.normal_form(&r).unwrap().is_zero());
        }
        assert!(rs.check_confluence().unwrap().is_empty());
    }
}
