use std::fmt;

use crate::field::{FieldElem, FieldError};

/// Minimal commutative ring interface for matrix entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
}

impl Ring for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
}

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c));
            }
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.n + c] = v;
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Ring, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).plus(&a.times(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Nonzero entries `(row, col, value)` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (i / n, i % n, v))
    }
}

/// Side length of the single-copy space.
pub const D: usize = 3;

/// Index of the pair `(i, j)` in the Kronecker basis.
pub fn pair(i: usize, j: usize) -> usize {
    D * i + j
}

impl<T: Ring> Matrix<T> {
    /// Swap matrix `P` on the two-copy space: `P e_(i,j) = e_(j,i)`.
    pub fn swap() -> Self {
        Matrix::from_fn(D * D, |r, c| if c == pair(r % D, r / D) { T::one() } else { T::zero() })
    }

    /// `M21 = P M P`.
    pub fn flipped(&self) -> Self {
        assert_eq!(self.n, D * D);
        Matrix::from_fn(D * D, |r, c| self.get(pair(r % D, r / D), pair(c % D, c / D)).clone())
    }

    /// Leg embeddings `(M12, M13, M23)` on the three-copy space.
    pub fn legs(&self) -> (Self, Self, Self) {
        assert_eq!(self.n, D * D);
        let n3 = D * D * D;
        let idx = |r: usize| (r / (D * D), (r / D) % D, r % D);
        let delta = |a: usize, b: usize| a == b;
        let m12 = Matrix::from_fn(n3, |r, c| {
            let ((i, j, k), (l, m, n)) = (idx(r), idx(c));
            if delta(k, n) {
                self.get(pair(i, j), pair(l, m)).clone()
            } else {
                T::zero()
            }
        });
        let m13 = Matrix::from_fn(n3, |r, c| {
            let ((i, j, k), (l, m, n)) = (idx(r), idx(c));
            if delta(j, m) {
                self.get(pair(i, k), pair(l, n)).clone()
            } else {
                T::zero()
            }
        });
        let m23 = Matrix::from_fn(n3, |r, c| {
            let ((i, j, k), (l, m, n)) = (idx(r), idx(c));
            if delta(i, l) {
                self.get(pair(j, k), pair(m, n)).clone()
            } else {
                T::zero()
            }
        });
        (m12, m13, m23)
    }
}

impl Matrix<FieldElem> {
    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for c in 0..n {
                    a.data.swap(piv * n + c, col * n + c);
                    inv.data.swap(piv * n + c, col * n + c);
                }
            }
            let p = a.get(col, col).inv().ok()?;
            for c in 0..n {
                let v = a.get(col, c) * &p;
                a.set(col, c, v);
                let v = inv.get(col, c) * &p;
                inv.set(col, c, v);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = a.get(r, c) - &(&f * a.get(col, c));
                    a.set(r, c, v);
                    let v = inv.get(r, c) - &(&f * inv.get(col, c));
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    pub fn substitute(&self, q: &FieldElem, q1: &FieldElem) -> Result<Self, FieldError> {
        self.try_map(|x| x.substitute(q, q1))
    }

    pub fn at_q1_eq_q_squared(&self) -> Result<Self, FieldError> {
        self.try_map(FieldElem::at_q1_eq_q_squared)
    }

    pub fn eval_f64(&self, q: f64, q1: f64) -> Result<Matrix<f64>, FieldError> {
        self.try_map(|x| x.eval_f64(q, q1))
    }
}

impl Matrix<f64> {
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_squares_to_identity() {
        let p: Matrix<FieldElem> = Matrix::swap();
        assert_eq!(p.mul(&p), Matrix::identity(9));
        let m = Matrix::from_fn(9, |r, c| FieldElem::from_int((10 * r + c) as i64));
        assert_eq!(p.mul(&m).mul(&p), m.flipped());
    }

    #[test]
    fn legs_of_identity_are_identity() {
        let (a, b, c) = Matrix::<FieldElem>::identity(9).legs();
        let i = Matrix::identity(27);
        assert_eq!((a, b, c), (i.clone(), i.clone(), i));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_fn(3, |r, c| {
            if r == c {
                FieldElem::q()
            } else if c == r + 1 {
                FieldElem::q1()
            } else {
                FieldElem::zero()
            }
        });
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert!(Matrix::<FieldElem>::zeros(3).inverse().is_none());
    }
}
