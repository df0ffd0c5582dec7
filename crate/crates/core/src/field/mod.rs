//! Exact rational functions in the deformation parameters `q` and `Q1`.
//!
//! Every [`FieldElem`] is kept in canonical form: numerator and denominator
//! are coprime and the denominator's leading coefficient (lex order, `q < Q1`)
//! is 1. Structural equality is therefore equality of rational functions.

mod parse;
pub mod poly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use poly::{Monomial, Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator {den} vanishes at the evaluation point")]
    EvalPole { den: String },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    num: Poly,
    den: Poly,
}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        FieldElem {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rat(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rat(r: Rat) -> Self {
        FieldElem {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    /// The parameter `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The parameter `Q1`.
    pub fn q1() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c * q^a * Q1^b` with possibly negative exponents.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        let num = Monomial::new(a.max(0) as u32, b.max(0) as u32);
        let den = Monomial::new((-a).max(0) as u32, (-b).max(0) as u32);
        FieldElem {
            num: Poly::term(num, Rat::from_integer(c.into())),
            den: Poly::term(den, Rat::one()),
        }
        .canonical()
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational constant, if this element does not depend on `q`, `Q1`.
    pub fn as_rat(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    fn canonical(self) -> Self {
        Self::reduce(self.num, self.den)
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_den(num, den)
    }

    fn normalize_den(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            FieldElem { num, den }
        } else {
            let s = lc.recip();
            FieldElem {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, FieldError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn eval_rat(&self, q: &Rat, q1: &Rat) -> Result<Rat, FieldError> {
        let d = self.den.eval_rat(q, q1);
        if d.is_zero() {
            return Err(FieldError::EvalPole {
                den: print_poly(&self.den),
            });
        }
        Ok(self.num.eval_rat(q, q1) / d)
    }

    pub fn eval_f64(&self, q: f64, q1: f64) -> Result<f64, FieldError> {
        let d = self.den.eval_f64(q, q1);
        if d == 0.0 {
            return Err(FieldError::EvalPole {
                den: print_poly(&self.den),
            });
        }
        Ok(self.num.eval_f64(q, q1) / d)
    }

    /// Evaluates at a [`NumericPoint`].
    pub fn eval(&self, p: &NumericPoint) -> Result<NumValue, FieldError> {
        match p {
            NumericPoint::Exact { q, q1 } => self.eval_rat(q, q1).map(NumValue::Exact),
            NumericPoint::Float { q, q1 } => self.eval_f64(*q, *q1).map(NumValue::Float),
        }
    }

    /// Substitutes field elements for `q` and `Q1`, e.g. `Q1 -> q^2`.
    pub fn substitute(&self, q: &FieldElem, q1: &FieldElem) -> Result<Self, FieldError> {
        let n = subst_poly(&self.num, q, q1);
        let d = subst_poly(&self.den, q, q1);
        n.checked_div(&d)
    }

    /// The two-parameter specialization `Q1 = q^2`.
    pub fn at_q1_eq_q_squared(&self) -> Result<Self, FieldError> {
        let q = Self::q();
        self.substitute(&q, &(&q * &q))
    }

    /// Specialization `Q1 = c` for a rational constant.
    pub fn at_q1(&self, c: &FieldElem) -> Result<Self, FieldError> {
        self.substitute(&Self::q(), c)
    }
}

fn subst_poly(p: &Poly, q: &FieldElem, q1: &FieldElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (m, c) in p.terms() {
        let mut t = FieldElem::from_rat(c.clone());
        for _ in 0..m.q {
            t = &t * q;
        }
        for _ in 0..m.q1 {
            t = &t * q1;
        }
        acc += &t;
    }
    acc
}

/// Parameter change `q -> q', Q1 -> Q1'` applied to coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    pub q: FieldElem,
    pub q1: FieldElem,
}

impl Specialization {
    pub fn generic() -> Self {
        Specialization {
            q: FieldElem::q(),
            q1: FieldElem::q1(),
        }
    }

    pub fn q1_eq_q_squared() -> Self {
        Self::q1(FieldElem::monomial(1, 2, 0))
    }

    pub fn q1(c: FieldElem) -> Self {
        Specialization {
            q: FieldElem::q(),
            q1: c,
        }
    }

    pub fn is_generic(&self) -> bool {
        *self == Self::generic()
    }

    pub fn apply(&self, x: &FieldElem) -> Result<FieldElem, FieldError> {
        if self.is_generic() {
            return Ok(x.clone());
        }
        x.substitute(&self.q, &self.q1)
    }

    pub fn label(&self) -> String {
        if self.is_generic() {
            "generic".to_string()
        } else if self.q == FieldElem::q() {
            format!("Q1 = {}", self.q1)
        } else {
            format!("q = {}, Q1 = {}", self.q, self.q1)
        }
    }
}

/// Evaluation point for numeric checks.
#[derive(Clone, Debug, PartialEq)]
pub enum NumericPoint {
    Exact { q: Rat, q1: Rat },
    Float { q: f64, q1: f64 },
}

impl NumericPoint {
    /// A floating point with both parameters strictly positive.
    pub fn positive(q: f64, q1: f64) -> Option<Self> {
        (q > 0.0 && q1 > 0.0 && q.is_finite() && q1.is_finite()).then_some(NumericPoint::Float { q, q1 })
    }

    pub fn exact(q: Rat, q1: Rat) -> Self {
        NumericPoint::Exact { q, q1 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NumValue {
    Exact(Rat),
    Float(f64),
}

impl NumValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            NumValue::Exact(r) => poly::rat_to_f64(r),
            NumValue::Float(x) => *x,
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;

    fn add(self, o: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return FieldElem::reduce(self.num.add(&o.num), self.den.clone());
        }
        let g = poly::gcd(&self.den, &o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            if num.is_zero() {
                return FieldElem::zero();
            }
            return FieldElem {
                num,
                den: self.den.mul(&o.den),
            };
        }
        let d1g = self.den.exact_div(&g).expect("gcd divides");
        let d2g = o.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d2g).add(&o.num.mul(&d1g));
        if num.is_zero() {
            return FieldElem::zero();
        }
        let g2 = poly::gcd(&num, &g);
        let num = num.exact_div(&g2).expect("gcd divides");
        let den = d1g.mul(&o.den.exact_div(&g2).expect("gcd divides"));
        FieldElem::normalize_den(num, den)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;

    fn mul(self, o: &FieldElem) -> FieldElem {
        if self.is_zero() || o.is_zero() {
            return FieldElem::zero();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        let g1 = poly::gcd(&self.num, &o.den);
        let g2 = poly::gcd(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (
                self.num.exact_div(&g1).expect("gcd divides"),
                o.den.exact_div(&g1).expect("gcd divides"),
            )
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (
                o.num.exact_div(&g2).expect("gcd divides"),
                self.den.exact_div(&g2).expect("gcd divides"),
            )
        };
        FieldElem::normalize_den(n1.mul(&n2), d1.mul(&d2))
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;

    fn sub(self, o: &FieldElem) -> FieldElem {
        self + &(-o)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        -&self
    }
}

/// Panics on division by zero; use [`FieldElem::checked_div`] otherwise.
impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;

    fn div(self, o: &FieldElem) -> FieldElem {
        self.checked_div(o).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, o: &FieldElem) {
        *self = &*self + o;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, o: &FieldElem) {
        *self = &*self - o;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, o: &FieldElem) {
        *self = &*self * o;
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::one()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::print(self))
    }
}

impl FromStr for FieldElem {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

pub(crate) fn print_poly(p: &Poly) -> String {
    parse::print_poly(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_to_one() {
        assert_eq!(fe("(q^2 - Q1)/q^2") + fe("Q1/q^2"), FieldElem::one());
    }

    #[test]
    fn add_zero_is_identity() {
        let x = fe("(q + 3*Q1)/(q - Q1)");
        assert_eq!(&x + &FieldElem::zero(), x);
    }

    #[test]
    fn sum_of_reciprocals() {
        assert_eq!(fe("1/Q1") + fe("1/q"), fe("(q + Q1)/(q*Q1)"));
    }

    #[test]
    fn inverse_pairs() {
        assert_eq!(fe("Q1^2/q^2") * fe("q^2/Q1^2"), FieldElem::one());
        assert_eq!(fe("q^2*Q1^-1").inv().unwrap(), fe("Q1/q^2"));
        let x = fe("(q - 1)/(q + Q1)");
        assert_eq!(&x * &FieldElem::one(), x);
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(FieldElem::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn evaluation() {
        let q = Rat::from_integer(2.into());
        let q1 = Rat::from_integer(3.into());
        assert_eq!(fe("Q1^2/q^2").eval_rat(&q, &q1).unwrap(), Rat::new(9.into(), 4.into()));
        let zero = Rat::zero();
        assert!(matches!(
            fe("1/Q1").eval_rat(&q, &zero),
            Err(FieldError::EvalPole { .. })
        ));
    }

    #[test]
    fn two_parameter_specialization_kills_difference() {
        let x = fe("(q^2 - Q1)/q^2");
        assert!(x.at_q1_eq_q_squared().unwrap().is_zero());
        let q = Rat::new(13.into(), 10.into());
        assert!(x.eval_rat(&q, &(&q * &q)).unwrap().is_zero());
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let x = fe("1/(2*q - 4*Q1)");
        assert!(x.denominator().leading_coeff().is_one());
        assert_eq!(x, fe("(-1/4)/(Q1 - 1/2*q)"));
    }

    #[test]
    fn common_factor_cancels() {
        let x = fe("(q^2 - Q1^2)/(q - Q1)");
        assert_eq!(x, fe("q + Q1"));
        assert!(x.denominator().is_one());
    }
}
