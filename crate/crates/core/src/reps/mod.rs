//! Truncated representations of the subgroups A and B on states `|n⟩`,
//! with `L2|n⟩ = A q^n |n⟩`, `K1` diagonal, `K2` lowering by one and `K3`
//! lowering by two. Star partners are conjugate transposes.

mod casimir;
mod uqsu2;

use std::collections::BTreeMap;

use ndarray::Array2;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldError, Specialization};
use crate::ncalg::{parse_poly, NCPoly, NamedResidual, NcError, RewriteSystem};
use crate::qgroup::{quantum_matrix, QGroupError, Subgroup};

pub use casimir::{casimir_check, CasimirReport, SymbolicCentrality};
pub use uqsu2::{uqsu2_check, UqReport, UQ_PRESENTATION};

/// Tolerance on interior entries, relative to the entry's term scale
/// when that exceeds one.
pub const REP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("inadmissible parameters: |k2,{n}|^2 = {value} < 0")]
    InadmissibleParams { n: i32, value: f64 },
    #[error("operation needs subgroup {expected}, got {got}")]
    WrongSubgroup { expected: &'static str, got: &'static str },
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    QGroup(#[from] QGroupError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParamsA {
    pub a: f64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub q: f64,
    pub dim: usize,
}

impl RepParamsA {
    /// `|B|^2 - A^2 - q^2 |D|^2`.
    pub fn constraint_residual(&self) -> f64 {
        self.b.norm_sqr() - self.a * self.a - self.q * self.q * self.d.norm_sqr()
    }

    /// Parameters with `B` real positive, fixed by the constraint.
    pub fn constrained(a: f64, c: Complex64, d: Complex64, q: f64, dim: usize) -> Self {
        let b = (a * a + q * q * d.norm_sqr()).sqrt();
        RepParamsA {
            a,
            b: Complex64::new(b, 0.0),
            c,
            d,
            q,
            dim,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParamsB {
    pub a: f64,
    pub b: Complex64,
    pub q: f64,
    pub q1: f64,
    pub dim: usize,
    /// Label of the first state. Zero is the lowest-weight choice; any
    /// other value gives a window into a two-sided ladder, with the bottom
    /// state masked as well.
    pub window_start: i32,
}

impl RepParamsB {
    pub fn new(a: f64, b: Complex64, q: f64, q1: f64, dim: usize) -> Self {
        RepParamsB {
            a,
            b,
            q,
            q1,
            dim,
            window_start: 0,
        }
    }

    /// Whether the closed form for `|k2,n|^2` has a pole (`Q1 = q^2`).
    pub fn at_pole(&self) -> bool {
        (self.q1 - self.q * self.q).abs() <= 1e-9 * self.q1.abs().max(1.0)
    }
}

/// `|k2,n|^2 = A^2 (Q1^n - q^2n)/(Q1 - q^2) - |B|^2 (Q1^n - (Q1/q)^2n)/(Q1 - (Q1/q)^2)`,
/// or `None` at the pole.
pub fn k2_sq_closed(p: &RepParamsB, n: i32) -> Option<f64> {
    if p.at_pole() {
        return None;
    }
    let (q, q1) = (p.q, p.q1);
    let r = q1 / q;
    let t1 = power_quotient(q1, q * q, n);
    let t2 = power_quotient(q1, r * r, n);
    Some(p.a * p.a * t1 - p.b.norm_sqr() * t2)
}

/// `(x^n - y^n)/(x - y)` for positive `x != y`. Near the pole the quotient
/// is summed as `x^(n-1) + x^(n-2) y + ... + y^(n-1)` instead, which
/// avoids the cancellation in the numerator.
fn power_quotient(x: f64, y: f64, n: i32) -> f64 {
    if (x - y).abs() > 0.25 * x.abs().max(y.abs()) {
        return (x.powi(n) - y.powi(n)) / (x - y);
    }
    let m = n.unsigned_abs() as i32;
    let sum: f64 = (0..m).map(|k| x.powi(k) * y.powi(m - 1 - k)).sum();
    if n >= 0 {
        sum
    } else {
        // x^-m - y^-m = -(x^m - y^m) / (xy)^m
        -sum / (x * y).powi(m)
    }
}

/// `|k2,n|^2` from `|k2,n+1|^2 = Q1 |k2,n|^2 - |k1,n|^2 + A^2 q^2n` and
/// `|k2,0|^2 = 0`, run up or down from zero.
pub fn k2_sq_recursion(p: &RepParamsB, n: i32) -> f64 {
    let (q, q1) = (p.q, p.q1);
    let src = |m: i32| p.a * p.a * q.powi(2 * m) - p.b.norm_sqr() * (q1 / q).powi(2 * m);
    let mut k = 0.0;
    if n >= 0 {
        for m in 0..n {
            k = q1 * k + src(m);
        }
    } else {
        for m in (n..0).rev() {
            k = (k - src(m)) / q1;
        }
    }
    k
}

/// Closed form unless at its pole.
pub fn k2_sq(p: &RepParamsB, n: i32) -> f64 {
    k2_sq_closed(p, n).unwrap_or_else(|| k2_sq_recursion(p, n))
}

/// Generator matrices on a window of states.
#[derive(Debug, Clone)]
pub struct TruncatedRep {
    pub subgroup: Subgroup,
    pub q: f64,
    pub q1: f64,
    /// State label `n` of each basis index.
    pub states: Vec<i32>,
    pub mats: BTreeMap<String, Array2<Complex64>>,
    /// Indices kept away from truncation artifacts.
    pub interior: Vec<usize>,
}

impl TruncatedRep {
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn mat(&self, name: &str) -> &Array2<Complex64> {
        &self.mats[name]
    }

    fn insert_with_star(&mut self, name: &str, m: Array2<Complex64>) {
        let star = dagger(&m);
        self.mats.insert(name.to_string(), m);
        self.mats.insert(format!("{name}*"), star);
    }

    /// Conjugates every generator by `diag(exp(i phases))`.
    pub fn rephased(&self, phases: &[f64]) -> TruncatedRep {
        let u = Array2::from_diag(&ndarray::Array1::from_iter(
            phases.iter().map(|t| Complex64::from_polar(1.0, *t)),
        ));
        let ud = dagger(&u);
        let mut r = self.clone();
        // diagonal generators commute with the gauge
        for (name, m) in &self.mats {
            if !name.ends_with('*') && !matches!(name.as_str(), "L2" | "K1") {
                r.insert_with_star(name, u.dot(m).dot(&ud));
            }
        }
        r
    }
}

pub fn dagger(m: &Array2<Complex64>) -> Array2<Complex64> {
    m.t().mapv(|z| z.conj())
}

fn diag(values: impl Iterator<Item = Complex64>) -> Array2<Complex64> {
    Array2::from_diag(&ndarray::Array1::from_iter(values))
}

/// `offset`-step lowering matrix with `m[i-offset][i] = k(i)`.
fn lowering(dim: usize, offset: usize, k: impl Fn(usize) -> Complex64) -> Array2<Complex64> {
    let mut m = Array2::zeros((dim, dim));
    for i in offset..dim {
        m[[i - offset, i]] = k(i);
    }
    m
}

fn interior(dim: usize, bottom: usize, top: usize) -> Vec<usize> {
    (bottom..dim.saturating_sub(top)).collect()
}

pub fn build_rep_a(p: &RepParamsA) -> Result<TruncatedRep, RepError> {
    if p.dim < 4 || p.q <= 0.0 {
        return Err(RepError::InvalidParams(format!(
            "need dim >= 4 and q > 0, got dim {} and q {}",
            p.dim, p.q
        )));
    }
    let res = p.constraint_residual();
    if res.abs() > 1e-12 * (p.b.norm_sqr()).max(1.0) {
        return Err(RepError::InvalidParams(format!(
            "|B|^2 = A^2 + q^2 |D|^2 violated by {res:e}"
        )));
    }
    let q = p.q;
    let qn = |n: usize| q.powi(n as i32);
    let mut rep = TruncatedRep {
        subgroup: Subgroup::A,
        q,
        q1: q * q,
        states: (0..p.dim as i32).collect(),
        mats: BTreeMap::new(),
        // k2,0 and k3,0 are nonzero, so the ladder continues below the
        // window as well as above it
        interior: interior(p.dim, 2, 4),
    };
    rep.mats
        .insert("L2".into(), diag((0..p.dim).map(|n| Complex64::from(p.a * qn(n)))));
    rep.insert_with_star("K1", diag((0..p.dim).map(|n| p.b * qn(n))));
    rep.insert_with_star("K2", lowering(p.dim, 1, |n| p.c * qn(n)));
    rep.insert_with_star("K3", lowering(p.dim, 2, |n| p.d * qn(n)));
    Ok(rep)
}

pub fn build_rep_b(p: &RepParamsB) -> Result<TruncatedRep, RepError> {
    if p.dim < 3 || p.q <= 0.0 || p.q1 <= 0.0 {
        return Err(RepError::InvalidParams(format!(
            "need dim >= 3 and q, Q1 > 0, got dim {}, q {}, Q1 {}",
            p.dim, p.q, p.q1
        )));
    }
    let states: Vec<i32> = (0..p.dim as i32).map(|i| p.window_start + i).collect();
    let mut k2 = Vec::with_capacity(p.dim);
    for &n in &states {
        let v = k2_sq(p, n);
        let scale = (p.a * p.a + p.b.norm_sqr()) * (p.q.powi(2 * n) + (p.q1 / p.q).powi(2 * n) + p.q1.powi(n));
        if v < -1e-12 * scale.max(1.0) {
            return Err(RepError::InadmissibleParams { n, value: v });
        }
        k2.push(v.max(0.0).sqrt());
    }
    let (q, r) = (p.q, p.q1 / p.q);
    let bottom = usize::from(p.window_start != 0);
    let mut rep = TruncatedRep {
        subgroup: Subgroup::B,
        q,
        q1: p.q1,
        states: states.clone(),
        mats: BTreeMap::new(),
        interior: interior(p.dim, bottom, 2),
    };
    rep.mats.insert(
        "L2".into(),
        diag(states.iter().map(|&n| Complex64::from(p.a * q.powi(n)))),
    );
    rep.insert_with_star("K1", diag(states.iter().map(|&n| p.b * r.powi(n))));
    rep.insert_with_star("K2", lowering(p.dim, 1, |i| Complex64::from(k2[i])));
    Ok(rep)
}

// lhs = rhs, in the generator names of the quantum group
const RELATIONS_A: [(&str, &str); 12] = [
    ("K1 K1*", "K1* K1"),
    ("K1 K2", "(q^-1) K2 K1"),
    ("K1 K2*", "(q) K2* K1"),
    ("K1 K3", "(q^-2) K3 K1"),
    ("K1 K3*", "(q^2) K3* K1"),
    ("K1 L2", "L2 K1"),
    ("K2 K2*", "(q^2) K2* K2 + (q^2) K3* K3 - K1* K1 + L2 L2"),
    ("K2 K3", "(q^-1) K3 K2"),
    ("K2 K3*", "(q^3) K3* K2"),
    ("K2 L2", "(q) L2 K2"),
    ("K3 K3*", "(q^4) K3* K3"),
    ("K3 L2", "(q^2) L2 K3"),
];

const RELATIONS_B: [(&str, &str); 6] = [
    ("K1 K1*", "K1* K1"),
    ("K1 K2", "(q Q1^-1) K2 K1"),
    ("K1 K2*", "(q^-1 Q1) K2* K1"),
    ("K1 L2", "L2 K1"),
    ("K2 K2*", "(Q1) K2* K2 - K1* K1 + L2 L2"),
    ("K2 L2", "(q) L2 K2"),
];

pub fn printed_subgroup_relations(subgroup: Subgroup) -> &'static [(&'static str, &'static str)] {
    match subgroup {
        Subgroup::A => &RELATIONS_A,
        Subgroup::B => &RELATIONS_B,
        Subgroup::Full => &[],
    }
}

/// Free algebra on the kept generators, with the star.
fn free_subgroup_algebra(subgroup: Subgroup) -> Result<RewriteSystem, RepError> {
    let names: Vec<&str> = ["K1*", "K1", "K2*", "K2", "K3*", "K3", "L2"]
        .into_iter()
        .filter(|n| subgroup.keeps(n))
        .collect();
    let mut text = format!("generators: {}\nstar: L2 L2", names.join(" "));
    for n in names.iter().filter(|n| !n.ends_with('*') && **n != "L2") {
        text.push_str(&format!(", {n} {n}*"));
    }
    Ok(crate::ncalg::parse_presentation(&text)?)
}

/// Relations `lhs - rhs` of a subgroup together with their star images.
#[derive(Debug, Clone)]
pub struct RelationSet {
    pub subgroup: Subgroup,
    pub system: RewriteSystem,
    pub relations: Vec<(String, NCPoly)>,
}

impl RelationSet {
    pub fn printed(subgroup: Subgroup) -> Result<Self, RepError> {
        let system = free_subgroup_algebra(subgroup)?;
        let mut relations = Vec::new();
        for (l, r) in printed_subgroup_relations(subgroup) {
            let p = parse(&system, l)?.sub(&parse(&system, r)?);
            let s = system.star(&p)?;
            relations.push((format!("{l} = {r}"), p));
            relations.push((format!("({l} = {r})*"), s));
        }
        Ok(RelationSet {
            subgroup,
            system,
            relations,
        })
    }
}

fn parse(rs: &RewriteSystem, s: &str) -> Result<NCPoly, RepError> {
    parse_poly(rs, s).map_err(|e| RepError::InvalidParams(format!("`{s}`: {e}")))
}

/// Matrix of a polynomial in the generators, together with the entrywise
/// scale `sum |c| |M_1| ... |M_k|` of its terms, which bounds the size of
/// floating-point cancellation in each entry.
pub fn eval_poly(
    rep: &TruncatedRep,
    rs: &RewriteSystem,
    p: &NCPoly,
) -> Result<(Array2<Complex64>, Array2<f64>), RepError> {
    let n = rep.dim();
    let mut out = Array2::<Complex64>::zeros((n, n));
    let mut scale = Array2::<f64>::zeros((n, n));
    for (w, c) in p.terms() {
        let c = c.eval_f64(rep.q, rep.q1)?;
        let mut m = Array2::<Complex64>::eye(n);
        let mut a = Array2::<f64>::eye(n);
        for &g in w {
            let name = rs.name(g);
            let gm = rep
                .mats
                .get(name)
                .ok_or_else(|| RepError::InvalidParams(format!("no matrix for `{name}`")))?;
            m = m.dot(gm);
            a = a.dot(&gm.mapv(|z| z.norm()));
        }
        out.scaled_add(Complex64::from(c), &m);
        scale.scaled_add(c.abs(), &a);
    }
    Ok((out, scale))
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationResidual {
    pub relation: String,
    /// Largest absolute interior entry.
    pub max: f64,
    /// Largest interior `|r_ij| / max(scale_ij, 1)`.
    pub scaled: f64,
    /// `(row state, column state)` of the largest scaled entry.
    pub location: Option<(i32, i32)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepVerification {
    pub subgroup: Subgroup,
    pub dim: usize,
    pub interior: (i32, i32),
    pub hermitian: bool,
    pub diagonal_ok: bool,
    pub residuals: Vec<RelationResidual>,
    pub max: f64,
    pub max_scaled: f64,
    pub passed: bool,
}

/// Largest interior entry of `m` and where it sits.
pub fn interior_max(rep: &TruncatedRep, m: &Array2<Complex64>) -> (f64, Option<(i32, i32)>) {
    interior_scaled_max(rep, m, None)
}

/// Largest interior `|m_ij| / max(scale_ij, 1)`.
pub fn interior_scaled_max(
    rep: &TruncatedRep,
    m: &Array2<Complex64>,
    scale: Option<&Array2<f64>>,
) -> (f64, Option<(i32, i32)>) {
    let mut best = (0.0, None);
    for &i in &rep.interior {
        for &j in &rep.interior {
            let s = scale.map_or(1.0, |s| s[[i, j]].max(1.0));
            let v = m[[i, j]].norm() / s;
            if v > best.0 {
                best = (v, Some((rep.states[i], rep.states[j])));
            }
        }
    }
    best
}

pub fn verify_rep(rep: &TruncatedRep, rels: &RelationSet) -> Result<RepVerification, RepError> {
    let hermitian = rep.mats.iter().all(|(n, m)| {
        let partner = match n.strip_suffix('*') {
            Some(b) => b.to_string(),
            None if n == "L2" => n.clone(),
            None => format!("{n}*"),
        };
        rep.mats.get(&partner).is_some_and(|s| *s == dagger(m))
    });
    let diagonal_ok = ["L2", "K1", "K1*"].iter().all(|n| {
        let m = rep.mat(n);
        m.indexed_iter()
            .all(|((i, j), z)| i == j || *z == Complex64::new(0.0, 0.0))
    });
    let mut residuals = Vec::new();
    for (name, p) in &rels.relations {
        let (m, scale) = eval_poly(rep, &rels.system, p)?;
        let (max, _) = interior_max(rep, &m);
        let (scaled, location) = interior_scaled_max(rep, &m, Some(&scale));
        residuals.push(RelationResidual {
            relation: name.clone(),
            max,
            scaled,
            location,
        });
    }
    let max = residuals.iter().map(|r| r.max).fold(0.0, f64::max);
    let max_scaled = residuals.iter().map(|r| r.scaled).fold(0.0, f64::max);
    let bounds = |v: &[usize]| (rep.states[v[0]], rep.states[v[v.len() - 1]]);
    Ok(RepVerification {
        subgroup: rep.subgroup,
        dim: rep.dim(),
        interior: if rep.interior.is_empty() {
            (0, -1)
        } else {
            bounds(&rep.interior)
        },
        hermitian,
        diagonal_ok,
        residuals,
        max,
        max_scaled,
        passed: hermitian && diagonal_ok && max_scaled <= REP_TOL,
    })
}

/// The printed subgroup relations reduced by the quantum-group relations
/// of that subgroup (A at `Q1 = q^2`, B generic).
pub fn printed_relations_in_ideal(subgroup: Subgroup) -> Result<Vec<NamedResidual>, RepError> {
    let params = match subgroup {
        Subgroup::A => Specialization::q1_eq_q_squared(),
        _ => Specialization::generic(),
    };
    let qm = quantum_matrix(subgroup, &params)?.descent_part()?;
    let mut out = Vec::new();
    for (l, r) in printed_subgroup_relations(subgroup) {
        let p = parse(&qm.system, l)?.sub(&parse(&qm.system, r)?);
        let nf = qm.system.normal_form(&p)?;
        out.push(NamedResidual::new(format!("{l} = {r}"), &qm.system, &nf));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_quotient_both_branches() {
        for n in [-7, -1, 0, 1, 2, 9] {
            let (x, y) = (1.3f64, 1.2f64);
            let direct = (x.powi(n) - y.powi(n)) / (x - y);
            let summed: f64 = if n >= 0 {
                (0..n).map(|k| x.powi(k) * y.powi(n - 1 - k)).sum()
            } else {
                -(0..-n).map(|k| x.powi(k) * y.powi(-n - 1 - k)).sum::<f64>() / (x * y).powi(-n)
            };
            assert!((power_quotient(x, y, n) - direct).abs() <= 1e-12 * direct.abs().max(1.0));
            assert!((summed - direct).abs() <= 1e-12 * direct.abs().max(1.0), "n = {n}");
        }
        // derivative n x^(n-1) in the limit
        let x = 1.5f64;
        let v = power_quotient(x, x + 1e-9, 22);
        assert!((v - 22.0 * x.powi(21)).abs() <= 1e-7 * v);
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constraint_arithmetic() {
        let p = RepParamsA::constrained(1.0, c(0.7), c(0.5), 1.2, 20);
        assert!((p.b.norm_sqr() - 1.36).abs() < 1e-12);
    }

    #[test]
    fn closed_form_at_zero_b() {
        let p = RepParamsB::new(1.0, c(0.0), 1.2, 1.5, 10);
        for n in 0..10 {
            let want = (1.5f64.powi(n) - 1.44f64.powi(n)) / (1.5 - 1.44);
            assert!((k2_sq_closed(&p, n).unwrap() - want).abs() < 1e-10 * want.max(1.0));
            assert!((k2_sq_recursion(&p, n) - want).abs() < 1e-10 * want.max(1.0));
        }
    }

    #[test]
    fn diagonal_only_rep_is_exact() {
        let rep = build_rep_a(&RepParamsA {
            a: 1.0,
            b: c(1.0),
            c: c(0.0),
            d: c(0.0),
            q: 1.3,
            dim: 8,
        })
        .unwrap();
        let v = verify_rep(&rep, &RelationSet::printed(Subgroup::A).unwrap()).unwrap();
        assert_eq!(v.max, 0.0);
    }
}
