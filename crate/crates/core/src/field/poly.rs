//! Polynomials in the two deformation parameters `q` and `Q1` with exact
//! rational coefficients.
//!
//! Terms are kept sorted in descending lexicographic order with `q < Q1`,
//! so `Q1` is the main variable. The gcd works on the recursive view
//! `Q[q][Q1]`: univariate Euclid for contents, primitive pseudo-remainder
//! sequences for the primitive parts.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Exponent pair `q^q * Q1^q1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub q: u32,
    pub q1: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, q1: 0 };

    pub fn new(q: u32, q1: u32) -> Self {
        Monomial { q, q1 }
    }

    pub fn mul(self, o: Monomial) -> Monomial {
        Monomial {
            q: self.q + o.q,
            q1: self.q1 + o.q1,
        }
    }

    pub fn min(self, o: Monomial) -> Monomial {
        Monomial {
            q: self.q.min(o.q),
            q1: self.q1.min(o.q1),
        }
    }

    pub fn divides(self, o: Monomial) -> bool {
        self.q <= o.q && self.q1 <= o.q1
    }

    pub fn is_one(self) -> bool {
        self.q == 0 && self.q1 == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.q1.cmp(&o.q1).then(self.q.cmp(&o.q))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    /// Descending by monomial; no zero coefficients.
    terms: Vec<(Monomial, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(it: I) -> Self {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(Rat::zero) += c;
        }
        Poly {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rat::zero)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m, _)) => it.fold(*m, |acc, (m, _)| acc.min(*m)),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Exact division by a monomial; panics if it does not divide every term.
    pub fn div_monomial(&self, m: Monomial) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    assert!(m.divides(*t), "monomial does not divide polynomial");
                    (Monomial::new(t.q - m.q, t.q1 - m.q1), c.clone())
                })
                .collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &o.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ma, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.is_monomial() {
            let (m, c) = &o.terms[0];
            return self.mul_monomial(*m).scale(c);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return o.mul_monomial(*m).scale(c);
        }
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(ma.mul(*mb)).or_insert_with(Rat::zero) += ca * cb;
            }
        }
        Poly {
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn eval_rat(&self, q: &Rat, q1: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            acc += c * pow_rat(q, m.q) * pow_rat(q1, m.q1);
        }
        acc
    }

    pub fn eval_f64(&self, q: f64, q1: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| rat_to_f64(c) * q.powi(m.q as i32) * q1.powi(m.q1 as i32))
            .sum()
    }

    /// Makes the leading coefficient 1; returns the polynomial and the
    /// factor that was divided out.
    pub fn monic(&self) -> (Poly, Rat) {
        match self.terms.first() {
            None => (Poly::zero(), Rat::one()),
            Some((_, c)) if c.is_one() => (self.clone(), Rat::one()),
            Some((_, c)) => {
                let lc = c.clone();
                (self.scale(&lc.recip()), lc)
            }
        }
    }

    fn to_recursive(&self) -> RPoly {
        let deg = self.terms.first().map(|(m, _)| m.q1).unwrap_or(0) as usize;
        let mut out: Vec<UPoly> = vec![UPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let u = &mut out[m.q1 as usize];
            let k = m.q as usize;
            if u.0.len() <= k {
                u.0.resize(k + 1, Rat::zero());
            }
            u.0[k] = c.clone();
        }
        let mut r = RPoly(out);
        r.trim();
        r
    }

    fn from_recursive(r: &RPoly) -> Poly {
        let mut terms = Vec::new();
        for (j, u) in r.0.iter().enumerate().rev() {
            for (i, c) in u.0.iter().enumerate().rev() {
                if !c.is_zero() {
                    terms.push((Monomial::new(i as u32, j as u32), c.clone()));
                }
            }
        }
        Poly { terms }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_monomial() {
            let (m, c) = &d.terms[0];
            if !self.terms.iter().all(|(t, _)| m.divides(*t)) {
                return None;
            }
            return Some(self.div_monomial(*m).scale(&c.recip()));
        }
        let q = self.to_recursive().exact_div(&d.to_recursive())?;
        Some(Poly::from_recursive(&q))
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn degree_q1(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.q1).unwrap_or(0)
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic().0;
    }
    if b.is_zero() {
        return a.monic().0;
    }
    if a.is_monomial() || b.is_monomial() {
        let m = a.min_exponents().min(b.min_exponents());
        return Poly::term(m, Rat::one());
    }
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let m = ma.min(mb);
    let ra = a.div_monomial(ma).to_recursive();
    let rb = b.div_monomial(mb).to_recursive();
    let g = Poly::from_recursive(&ra.gcd(&rb)).mul_monomial(m);
    g.monic().0
}

pub(crate) fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = bigint_to_f64(r.numer());
    let d = bigint_to_f64(r.denom());
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        // Scale both down to keep the ratio representable.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = bigint_to_f64(&(r.numer() >> shift));
        let d = bigint_to_f64(&(r.denom() >> shift));
        n / d
    }
}

fn bigint_to_f64(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(if b.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Dense univariate polynomial in `q`, ascending coefficients, trimmed.
#[derive(Clone, Debug, PartialEq)]
struct UPoly(Vec<Rat>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lc(&self) -> &Rat {
        self.0.last().expect("lc of zero polynomial")
    }

    fn scale(&self, s: &Rat) -> UPoly {
        if s.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|c| c * s).collect())
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = o.0.get(i).cloned().unwrap_or_else(Rat::zero);
            v.push(a - b);
        }
        let mut u = UPoly(v);
        u.trim();
        u
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut u = UPoly(v);
        u.trim();
        u
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero());
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (UPoly::zero(), r);
        }
        let mut quot = vec![Rat::zero(); r.0.len() - d.0.len() + 1];
        let lc_inv = d.lc().recip();
        while !r.is_zero() && r.0.len() >= d.0.len() {
            let k = r.0.len() - d.0.len();
            let c = r.lc() * &lc_inv;
            for (i, dc) in d.0.iter().enumerate() {
                r.0[i + k] -= &c * dc;
            }
            quot[k] = c;
            r.0.pop();
            r.trim();
        }
        let mut q = UPoly(quot);
        q.trim();
        (q, r)
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }
}

/// Recursive view `Q[q][Q1]`: coefficients of ascending powers of Q1.
#[derive(Clone, Debug)]
struct RPoly(Vec<UPoly>);

impl RPoly {
    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    fn div_content(&self, c: &UPoly) -> RPoly {
        if c.is_constant() {
            let s = c.0[0].recip();
            return RPoly(self.0.iter().map(|u| u.scale(&s)).collect());
        }
        RPoly(
            self.0
                .iter()
                .map(|u| {
                    let (q, r) = u.divrem(c);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn primitive(&self) -> RPoly {
        let c = self.content();
        self.div_content(&c)
    }

    fn prem(&self, b: &RPoly) -> RPoly {
        let mut a = self.clone();
        let lcb = b.lc().clone();
        while !a.is_zero() && a.deg() >= b.deg() {
            let k = a.deg() - b.deg();
            let lca = a.lc().clone();
            let mut next: Vec<UPoly> = a.0.iter().map(|u| u.mul(&lcb)).collect();
            for (i, bc) in b.0.iter().enumerate() {
                next[i + k] = next[i + k].sub(&bc.mul(&lca));
            }
            a = RPoly(next);
            a.trim();
        }
        a
    }

    fn gcd(&self, o: &RPoly) -> RPoly {
        let ca = self.content();
        let cb = o.content();
        let c = ca.gcd(&cb);
        let mut a = self.div_content(&ca);
        let mut b = o.div_content(&cb);
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.deg() == 0 {
                // primitive of Q1-degree 0 is a unit
                a = RPoly(vec![UPoly(vec![Rat::one()])]);
                break;
            }
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        RPoly(a.0.iter().map(|u| u.mul(&c)).collect())
    }

    fn exact_div(&self, d: &RPoly) -> Option<RPoly> {
        let mut a = self.clone();
        if a.is_zero() {
            return Some(a);
        }
        if a.deg() < d.deg() {
            return None;
        }
        let mut quot = vec![UPoly::zero(); a.deg() - d.deg() + 1];
        while !a.is_zero() {
            if a.deg() < d.deg() {
                return None;
            }
            let k = a.deg() - d.deg();
            let (c, r) = a.lc().divrem(d.lc());
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.0.iter().enumerate() {
                a.0[i + k] = a.0[i + k].sub(&dc.mul(&c));
            }
            debug_assert!(a.0.last().is_some_and(|u| u.is_zero()));
            a.trim();
            quot[k] = c;
        }
        let mut q = RPoly(quot);
        q.trim();
        Some(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn p(terms: &[(u32, u32, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(a, b, c)| (Monomial::new(a, b), r(c))))
    }

    #[test]
    fn leading_term_uses_q1_as_main_variable() {
        let x = p(&[(5, 0, 1), (0, 1, 1)]);
        assert_eq!(x.leading().unwrap().0, Monomial::new(0, 1));
    }

    #[test]
    fn gcd_of_products() {
        // (q^2 - Q1)(q + Q1) and (q^2 - Q1)(q - 1)
        let f = p(&[(2, 0, 1), (0, 1, -1)]);
        let g = p(&[(1, 0, 1), (0, 1, 1)]);
        let h = p(&[(1, 0, 1), (0, 0, -1)]);
        let a = f.mul(&g);
        let b = f.mul(&h);
        let d = gcd(&a, &b);
        assert_eq!(d, f.monic().0);
    }

    #[test]
    fn gcd_with_monomial_content() {
        let a = p(&[(3, 1, 2), (2, 2, 4)]); // 2 q^2 Q1 (q + 2 Q1)
        let b = p(&[(2, 3, 1)]);
        assert_eq!(gcd(&a, &b), p(&[(2, 1, 1)]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[(2, 0, 1), (0, 1, -1)]);
        let b = p(&[(1, 0, 1), (0, 1, 1)]);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = p(&[(2, 0, 1), (0, 1, -1), (1, 1, 3)]);
        let g = p(&[(1, 0, 1), (0, 1, 1), (0, 0, 2)]);
        let prod = f.mul(&g);
        assert_eq!(prod.exact_div(&g).unwrap(), f);
        assert!(f.exact_div(&g).is_none());
    }
}
