//! The commonly quoted form of the quantum-matrix relations, and a
//! matching of those lines against the derived rules.

use serde::Serialize;

use super::{parse_in, QGroupError, QuantumMatrix};
use crate::ncalg::{NCPoly, RewriteSystem, Word};

// `lhs = rhs` with generic q, Q1. The K2 L2 line is usually printed with a
// stray closing parenthesis; the grouping below is the one the derivation
// produces.
const PRINTED: [(&str, &str); 20] = [
    ("K1 K1*", "K1* K1 + (q^2 Q1^-2) L1* L1 + (q^-2 Q1 (q^2 - Q1)) K3* K3"),
    ("K1 K2", "(q Q1^-1) K2 K1"),
    (
        "K1 K2*",
        "(q^-1 Q1) K2* K1 + (q Q1^-1) L2 L1 + (q^-2 Q1 (q^2 - Q1)) K3* K2",
    ),
    ("K1 K3", "(q^2 Q1^-2) K3 K1"),
    ("K1 K3*", "(Q1) K3* K1 + L1 L1"),
    ("K1 L1", "(q) L1 K1"),
    ("K1 L1*", "(q Q1^-1) L1* K1 + (q^-1 (q^2 - Q1)) L1 K3"),
    ("K1 L2", "L2 K1 + (q^-1 (q^2 - Q1)) L1 K2"),
    ("K2 K2*", "(Q1) K2* K2 + (q^-2 Q1^2) K3* K3 - K1* K1 + L2 L2"),
    ("K2 K3", "(q Q1^-1) K3 K2"),
    ("K2 K3*", "(q^-1 Q1^2) K3* K2 + L2 L1"),
    ("K2 L1", "(Q1) L1 K2"),
    ("K2 L1*", "L1* K2 + (q^-1 (q^2 - Q1)) L2 K3"),
    ("K2 L2", "(q) L2 K2 - (q Q1^-1) L1* K1 + (q^-1 Q1) L1 K3"),
    ("K3 K3*", "(q^-2 Q1^3) K3* K3 + L1* L1"),
    ("K3 L1", "(q^-1 Q1^2) L1 K3"),
    ("K3 L1*", "(q) L1* K3"),
    ("K3 L2", "(Q1) L2 K3"),
    ("L1 L1*", "(q^2 Q1^-2) L1* L1"),
    ("L1 L2", "(q Q1^-1) L2 L1"),
];

/// The printed relations as `(label, lhs - rhs)` over the full algebra.
pub fn printed_relations(rs: &RewriteSystem) -> Result<Vec<(String, NCPoly)>, QGroupError> {
    PRINTED
        .iter()
        .map(|(l, r)| {
            let p = parse_in(rs, l)?.sub(&parse_in(rs, r)?);
            Ok((format!("{l} = {r}"), p))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RuleOrigin {
    Printed(usize),
    StarOfPrinted(usize),
    Unmatched,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrintedMatch {
    pub line: String,
    /// The relation reduces to zero with the derived rules.
    pub in_ideal: bool,
    /// Left side of the derived rule with the same leading word.
    pub rule: Option<String>,
    /// The printed right side coincides with that rule term by term.
    pub verbatim: bool,
    pub star_rule: Option<String>,
    pub star_in_ideal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchingReport {
    pub printed: Vec<PrintedMatch>,
    pub rules: Vec<(String, RuleOrigin)>,
    /// Distinct printed lines hit distinct rules, and every rule is a
    /// printed line or the star of one.
    pub bijective: bool,
    /// The star of every derived rule reduces to zero.
    pub star_closed: bool,
    pub unmatched: Vec<String>,
}

impl MatchingReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.star_closed
    }
}

fn leading_rule(rs: &RewriteSystem, p: &NCPoly) -> Option<(Word, bool)> {
    let lw = rs.leading_word(p)?;
    if lw.len() != 2 {
        return None;
    }
    let rhs = rs.rule(lw[0], lw[1])?;
    let lc = p.coeff(&lw).inv().ok()?;
    let mut rel = NCPoly::word(lw.clone());
    rel = rel.sub(rhs);
    Some((lw, p.scale(&lc) == rel))
}

pub fn match_printed_relations(qm: &QuantumMatrix) -> Result<MatchingReport, QGroupError> {
    let rs = &qm.system;
    let printed = printed_relations(rs)?;
    let rules = rs.sorted_rules();
    let mut origin: Vec<RuleOrigin> = vec![RuleOrigin::Unmatched; rules.len()];
    let idx = |w: &Word| rules.iter().position(|((g, h), _)| [*g, *h] == w[..]);
    let mut out = Vec::new();
    let mut hit = Vec::new();
    for (k, (line, p)) in printed.iter().enumerate() {
        let in_ideal = rs.normal_form(p)?.is_zero();
        let lr = leading_rule(rs, p);
        if let Some((w, _)) = &lr {
            if let Some(i) = idx(w) {
                origin[i] = RuleOrigin::Printed(k);
                hit.push(i);
            }
        }
        let sp = rs.star(p)?;
        let star_in_ideal = rs.normal_form(&sp)?.is_zero();
        let sr = leading_rule(rs, &sp);
        if let Some((w, _)) = &sr {
            if let Some(i) = idx(w) {
                if origin[i] == RuleOrigin::Unmatched {
                    origin[i] = RuleOrigin::StarOfPrinted(k);
                }
            }
        }
        out.push(PrintedMatch {
            line: line.clone(),
            in_ideal,
            rule: lr.as_ref().map(|(w, _)| rs.word_string(w)),
            verbatim: lr.as_ref().is_some_and(|(_, v)| *v),
            star_rule: sr.as_ref().map(|(w, _)| rs.word_string(w)),
            star_in_ideal,
        });
    }
    let mut distinct = hit.clone();
    distinct.sort();
    distinct.dedup();
    let mut star_closed = true;
    for ((g, h), rhs) in &rules {
        let rel = NCPoly::word(vec![*g, *h]).sub(rhs);
        if !rs.normal_form(&rs.star(&rel)?)?.is_zero() {
            star_closed = false;
        }
    }
    let unmatched: Vec<String> = rules
        .iter()
        .zip(&origin)
        .filter(|(_, o)| **o == RuleOrigin::Unmatched)
        .map(|(((g, h), _), _)| rs.word_string(&[*g, *h]))
        .collect();
    let bijective =
        distinct.len() == printed.len() && out.iter().all(|m| m.in_ideal && m.star_in_ideal) && unmatched.is_empty();
    Ok(MatchingReport {
        printed: out,
        rules: rules
            .iter()
            .zip(origin)
            .map(|(((g, h), _), o)| (rs.word_string(&[*g, *h]), o))
            .collect(),
        bijective,
        star_closed,
        unmatched,
    })
}
