use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::BraidedError;
use crate::field::FieldElem;
use crate::ncalg::{NCPoly, RewriteSystem, Word};

/// Element of an n-fold tensor power of a free algebra: words in each
/// factor with field coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, FieldElem>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(words: Vec<Word>, c: FieldElem) -> Self {
        let mut t = Tensor::zero(words.len());
        t.add_term(words, &c);
        t
    }

    pub fn from_poly(p: &NCPoly) -> Self {
        let mut t = Tensor::zero(1);
        for (w, c) in p.terms() {
            t.add_term(vec![w.clone()], c);
        }
        t
    }

    /// Inverse of [`Tensor::from_poly`]; panics unless the arity is one.
    pub fn to_poly(&self) -> NCPoly {
        assert_eq!(self.arity, 1);
        NCPoly::from_terms(self.terms.iter().map(|(ws, c)| (c.clone(), ws[0].clone())))
    }

    /// Scalar value of an arity-zero tensor.
    pub fn to_scalar(&self) -> FieldElem {
        assert_eq!(self.arity, 0);
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &FieldElem)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: &FieldElem) {
        debug_assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut r = self.clone();
        if r.terms.is_empty() {
            r.arity = o.arity;
        }
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        self.add(&o.scale(&-FieldElem::one()))
    }

    pub fn scale(&self, s: &FieldElem) -> Tensor {
        let mut r = Tensor::zero(self.arity);
        for (w, c) in &self.terms {
            r.add_term(w.clone(), &(c * s));
        }
        r
    }

    /// Outer tensor product.
    pub fn tensor(&self, o: &Tensor) -> Tensor {
        let mut r = Tensor::zero(self.arity + o.arity);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                r.add_term(w, &(c * d));
            }
        }
        r
    }

    /// Replaces factors `k..k+n` by `f` of them, extended linearly.
    pub fn apply(&self, k: usize, n: usize, f: &dyn Fn(&[Word]) -> Tensor) -> Tensor {
        let mut out: Option<Tensor> = None;
        for (ws, c) in &self.terms {
            let img = f(&ws[k..k + n]);
            let arity = self.arity - n + img.arity;
            let acc = out.get_or_insert_with(|| Tensor::zero(arity));
            for (iw, d) in &img.terms {
                let mut w = ws[..k].to_vec();
                w.extend(iw.iter().cloned());
                w.extend(ws[k + n..].iter().cloned());
                acc.add_term(w, &(c * d));
            }
        }
        out.unwrap_or_else(|| Tensor::zero(self.arity))
    }

    /// Swaps two factors.
    pub fn flip(&self, k: usize) -> Tensor {
        self.apply(k, 2, &|ws: &[Word]| {
            Tensor::basis(vec![ws[1].clone(), ws[0].clone()], FieldElem::one())
        })
    }

    /// Every factor reduced to normal form.
    pub fn normalized(&self, rs: &RewriteSystem) -> Result<Tensor, BraidedError> {
        let mut out = Tensor::zero(self.arity);
        for (ws, c) in &self.terms {
            let mut acc = Tensor::basis(vec![], c.clone());
            for w in ws {
                let nf = rs.normal_form(&NCPoly::word(w.clone()))?;
                acc = acc.tensor(&Tensor::from_poly(&nf));
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    pub fn display(&self, rs: &RewriteSystem) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (ws, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let body = ws.iter().map(|w| rs.word_string(w)).collect::<Vec<_>>().join(" ⊗ ");
            if c.is_one() {
                s.push_str(&body);
            } else {
                let _ = write!(s, "({c}) {body}");
            }
        }
        s
    }
}
