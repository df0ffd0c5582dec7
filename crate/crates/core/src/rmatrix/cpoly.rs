//! Commutative polynomials in ansatz unknowns with field coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::matrix::Ring;
use crate::field::{FieldElem, FieldError};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, FieldElem>,
}

impl CPoly {
    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        let mut p = CPoly {
            nvars,
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        CPoly {
            nvars,
            terms: [(e, FieldElem::one())].into_iter().collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &FieldElem)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Value when the polynomial has no variables left.
    pub fn as_constant(&self) -> Option<FieldElem> {
        match self.terms.len() {
            0 => Some(FieldElem::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, e: Vec<u8>, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Substitutes field values for every unknown.
    pub fn eval(&self, vals: &[FieldElem]) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = &t * &vals[i];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients specialised to numbers, for fast numeric evaluation.
    pub fn to_numeric(&self, q: f64, q1: f64) -> Result<NumPoly, FieldError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            terms.push((c.eval_f64(q, q1)?, e.clone()));
        }
        Ok(NumPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> Result<FieldElem, FieldError>) -> Result<Self, FieldError> {
        let mut p = CPoly {
            nvars: self.nvars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c)?);
        }
        Ok(p)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{k}", names[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                parts.push(format!("({c})"));
            } else if c.is_one() {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("({c})*{}", mono.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl Ring for CPoly {
    fn zero() -> Self {
        CPoly::default()
    }
    fn one() -> Self {
        CPoly::constant(0, FieldElem::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.nvars = r.nvars.max(o.nvars);
        for (e, c) in &o.terms {
            r.add_term(pad(e, r.nvars), c.clone());
        }
        r.normalise_width();
        r
    }
    fn minus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.nvars = r.nvars.max(o.nvars);
        for (e, c) in &o.terms {
            r.add_term(pad(e, r.nvars), -c);
        }
        r.normalise_width();
        r
    }
    fn times(&self, o: &Self) -> Self {
        let n = self.nvars.max(o.nvars);
        let mut r = CPoly {
            nvars: n,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            let e1 = pad(e1, n);
            for (e2, c2) in &o.terms {
                let e2 = pad(e2, n);
                let e: Vec<u8> = e1.iter().zip(&e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }
}

impl CPoly {
    fn normalise_width(&mut self) {
        let n = self.nvars;
        if self.terms.keys().any(|e| e.len() != n) {
            let old = std::mem::take(&mut self.terms);
            for (e, c) in old {
                self.add_term(pad(&e, n), c);
            }
        }
    }
}

fn pad(e: &[u8], n: usize) -> Vec<u8> {
    let mut v = e.to_vec();
    v.resize(n, 0);
    v
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.fmt_with(&names))
    }
}

/// Polynomial with `f64` coefficients; evaluation and gradient.
#[derive(Clone, Debug)]
pub struct NumPoly {
    nvars: usize,
    terms: Vec<(f64, Vec<u8>)>,
}

impl NumPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, e)| c * e.iter().zip(x).map(|(&k, &v)| v.powi(k as i32)).product::<f64>())
            .sum()
    }

    /// Adds the gradient into `out`.
    pub fn gradient(&self, x: &[f64], out: &mut [f64]) {
        for (c, e) in &self.terms {
            for j in 0..self.nvars {
                if e[j] == 0 {
                    continue;
                }
                let mut t = c * e[j] as f64;
                for (i, (&k, &v)) in e.iter().zip(x).enumerate() {
                    let k = if i == j { k - 1 } else { k };
                    t *= v.powi(k as i32);
                }
                out[j] += t;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let x = CPoly::var(2, 0);
        let y = CPoly::var(2, 1);
        let p = x.plus(&y).times(&x.minus(&y));
        let v = p.eval(&[FieldElem::from_int(3), FieldElem::q()]);
        assert_eq!(v, &FieldElem::from_int(9) - &(&FieldElem::q() * &FieldElem::q()));
        assert!(x.minus(&x).is_zero());
        let c = CPoly::constant(0, FieldElem::from_int(2));
        assert_eq!(
            c.times(&x).eval(&[FieldElem::one(), FieldElem::zero()]),
            FieldElem::from_int(2)
        );
    }

    #[test]
    fn numeric_gradient_matches_finite_difference() {
        let x = CPoly::var(2, 0);
        let y = CPoly::var(2, 1);
        let p = x
            .times(&x)
            .times(&y)
            .plus(&CPoly::constant(2, FieldElem::q()).times(&y));
        let np = p.to_numeric(1.5, 2.0).unwrap();
        let pt = [0.7, -1.1];
        let mut g = [0.0; 2];
        np.gradient(&pt, &mut g);
        let h = 1e-6;
        for j in 0..2 {
            let mut a = pt;
            a[j] += h;
            let mut b = pt;
            b[j] -= h;
            let fd = (np.eval(&a) - np.eval(&b)) / (2.0 * h);
            assert!((fd - g[j]).abs() < 1e-6);
        }
    }
}
