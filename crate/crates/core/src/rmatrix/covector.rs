//! Consistency of the covector relations `x1 x2 = x2 x1 R` with the
//! oscillator relations, for `x = (a, a*, qN)`.

use super::cpoly::CPoly;
use super::matrix::{pair, Matrix, Ring, D};
use super::{BigRMatrix, Constraint, ConstraintSet};
use crate::field::FieldElem;
use crate::ncalg::{NCPoly, RewriteSystem, Word};
use crate::oscillator::{self, COVECTOR};

fn covector_ids(rs: &RewriteSystem) -> [u16; 3] {
    COVECTOR.map(|n| rs.id(n).expect("oscillator generator"))
}

/// The nine relations `x_i x_j - sum_(k,l) x_l x_k R[(k,l),(i,j)]` in the
/// free algebra, indexed by the pair `(i, j)`.
pub fn covector_relations(rs: &RewriteSystem, m: &BigRMatrix) -> Vec<NCPoly> {
    let x = covector_ids(rs);
    (0..D * D)
        .map(|col| {
            let (i, j) = (col / D, col % D);
            let mut p = NCPoly::word(vec![x[i], x[j]]);
            for k in 0..D {
                for l in 0..D {
                    let c = m.get(pair(k, l), col);
                    p.add_term(vec![x[l], x[k]], &-c);
                }
            }
            p
        })
        .collect()
}

/// Coefficient constraints for a matrix whose entries are polynomials in
/// unknowns (constant polynomials for a concrete matrix).
pub fn covector_coefficient_constraints(m: &Matrix<CPoly>, unknowns: Vec<String>) -> ConstraintSet {
    let rs = oscillator::oscillator();
    let x = covector_ids(&rs);
    let nv = unknowns.len();
    // normal forms of the reversed pairs x_l x_k
    let nf = |w: Word| rs.normal_form(&NCPoly::word(w)).expect("oscillator terminates");
    let mut constraints = Vec::new();
    for col in 0..D * D {
        let (i, j) = (col / D, col % D);
        let mut acc: std::collections::BTreeMap<Word, CPoly> = Default::default();
        let mut push = |p: &NCPoly, s: &CPoly| {
            for (w, c) in p.terms() {
                let e = acc.entry(w.clone()).or_insert_with(CPoly::zero);
                *e = e.plus(&s.times(&CPoly::constant(nv, c.clone())));
            }
        };
        push(&nf(vec![x[i], x[j]]), &CPoly::constant(nv, FieldElem::one()));
        for k in 0..D {
            for l in 0..D {
                let c = m.get(pair(k, l), col);
                if c.is_zero() {
                    continue;
                }
                push(&nf(vec![x[l], x[k]]), &CPoly::zero().minus(c));
            }
        }
        for (w, p) in acc {
            if !p.is_zero() {
                constraints.push(Constraint {
                    origin: format!(
                        "covector ({} {}) coefficient of {}",
                        COVECTOR[i],
                        COVECTOR[j],
                        rs.word_string(&w)
                    ),
                    poly: p,
                });
            }
        }
    }
    ConstraintSet::new(unknowns, constraints)
}

/// Degree-two comparison of the covector relation span with the span of
/// the oscillator relations.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdealReport {
    pub rank: usize,
    pub oscillator_rank: usize,
    pub joint_rank: usize,
}

impl IdealReport {
    /// Both spans coincide.
    pub fn equal(&self) -> bool {
        self.rank == self.oscillator_rank && self.joint_rank == self.rank
    }

    pub fn quotient_dim(&self) -> usize {
        D * D - self.rank
    }
}

fn rank_of(rows: &[Vec<FieldElem>]) -> usize {
    let mut m: Vec<Vec<FieldElem>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("nonzero pivot");
        for r in 0..m.len() {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] * &inv;
            for cc in c..ncols {
                let v = &m[r][cc] - &(&f * &m[rank][cc]);
                m[r][cc] = v;
            }
        }
        rank += 1;
    }
    rank
}

pub fn covector_ideal(m: &BigRMatrix) -> IdealReport {
    let rs = oscillator::oscillator();
    let x = covector_ids(&rs);
    let words: Vec<Word> = (0..D * D).map(|p| vec![x[p / D], x[p % D]]).collect();
    let vec_of = |p: &NCPoly| -> Vec<FieldElem> { words.iter().map(|w| p.coeff(w)).collect() };
    let cov: Vec<Vec<FieldElem>> = covector_relations(&rs, m).iter().map(vec_of).collect();
    let osc: Vec<Vec<FieldElem>> = oscillator::relations(&rs, "").iter().map(vec_of).collect();
    let joint: Vec<Vec<FieldElem>> = cov.iter().chain(osc.iter()).cloned().collect();
    IdealReport {
        rank: rank_of(&cov),
        oscillator_rank: rank_of(&osc),
        joint_rank: rank_of(&joint),
    }
}

/// All covector consistency constraints for a concrete matrix: surviving
/// normal-form coefficients plus one entry if the relation spans differ.
/// Empty iff the covector algebra is exactly the oscillator algebra.
pub fn covector_constraints(m: &BigRMatrix) -> ConstraintSet {
    let mc = m.map(|x| CPoly::constant(0, x.clone()));
    let mut cs = covector_coefficient_constraints(&mc, Vec::new());
    let ideal = covector_ideal(m);
    if !ideal.equal() {
        cs.constraints.push(Constraint {
            origin: format!(
                "degree-2 relation span: rank {} (oscillator {}, joint {})",
                ideal.rank, ideal.oscillator_rank, ideal.joint_rank
            ),
            poly: CPoly::constant(0, FieldElem::one()),
        });
    }
    cs
}

/// Linear constraints on `A1..A17` from the general R ansatz.
pub fn covector_constraints_ansatz() -> ConstraintSet {
    covector_coefficient_constraints(&super::data::r_ansatz(), (1..=17).map(|i| format!("A{i}")).collect())
}

/// Solution space of a linear constraint set.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Inconsistent,
    Unique(Vec<FieldElem>),
    /// A particular solution and the dimension of the solution space.
    Family(Vec<FieldElem>, usize),
}

/// Exact solution of constraints of total degree at most one.
pub fn solve_linear(cs: &ConstraintSet) -> Option<LinearSolution> {
    let n = cs.unknowns.len();
    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    for k in &cs.constraints {
        if k.poly.total_degree() > 1 {
            return None;
        }
        let mut row = vec![FieldElem::zero(); n + 1];
        for (e, c) in k.poly.terms() {
            match e.iter().position(|&x| x > 0) {
                Some(i) => row[i] = c.clone(),
                None => row[n] = -c,
            }
        }
        rows.push(row);
    }
    // reduced row echelon form
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().expect("nonzero");
        for cc in 0..=n {
            rows[rank][cc] = &rows[rank][cc] * &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for cc in 0..=n {
                let v = &rows[r][cc] - &(&f * &rows[rank][cc]);
                rows[r][cc] = v;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[n].is_zero()) {
        return Some(LinearSolution::Inconsistent);
    }
    let mut sol = vec![FieldElem::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = rows[r][n].clone();
    }
    Some(if rank == n {
        LinearSolution::Unique(sol)
    } else {
        LinearSolution::Family(sol, n - rank)
    })
}

#[cfg(test)]
mod tests {
    use super::super::data::paper_r;
    use super::*;

    #[test]
    fn paper_r_is_consistent() {
        assert!(covector_constraints(&paper_r()).is_empty());
        let rep = covector_ideal(&paper_r());
        assert!(rep.equal());
        assert_eq!(rep.quotient_dim(), 6);
    }

    #[test]
    fn flip_is_inconsistent() {
        assert!(!covector_constraints(&Matrix::identity(9)).is_empty());
    }
}
