//! Plain-text algebra presentations.
//!
//! ```text
//! # deformed oscillator
//! generators: a* qN a
//! star: a a*, qN qN
//! a a* = (Q1) a* a + qN qN
//! a qN = (q) qN a
//! qN a* = (q) a* qN
//! ```
//!
//! Generators are listed in increasing rank. An optional `weights:` line
//! gives `name w` pairs (default weight 1). Coefficients are field
//! expressions in parentheses; a bare `-` negates the next term and `0`
//! denotes the empty sum.

use std::fmt::Write as _;

use super::{Generator, NCPoly, NcError, RewriteSystem};
use crate::field::FieldElem;

enum Tok {
    Plus,
    Minus,
    Coef(String),
    Name(String),
}

fn tokens(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '+' {
            out.push(Tok::Plus);
            i += 1;
        } else if c == '-' || c == '\u{2212}' {
            out.push(Tok::Minus);
            i += 1;
        } else if c == '(' {
            let mut depth = 0;
            let start = i;
            loop {
                match cs.get(i) {
                    Some('(') => depth += 1,
                    Some(')') => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    Some(_) => {}
                    None => return Err("unbalanced parenthesis".into()),
                }
                i += 1;
            }
            out.push(Tok::Coef(cs[start + 1..i].iter().collect()));
            i += 1;
        } else {
            let start = i;
            while i < cs.len() && !cs[i].is_whitespace() && cs[i] != '(' {
                i += 1;
            }
            out.push(Tok::Name(cs[start..i].iter().collect()));
        }
    }
    Ok(out)
}

/// Parses a polynomial such as `(Q1) a* a + qN qN` against `rs`.
pub fn parse_poly(rs: &RewriteSystem, s: &str) -> Result<NCPoly, String> {
    let toks = tokens(s)?;
    let mut out = NCPoly::zero();
    let mut sign = FieldElem::one();
    let mut coef: Option<FieldElem> = None;
    let mut word = Vec::new();
    let mut pending = false;
    let flush = |out: &mut NCPoly, sign: &FieldElem, coef: &mut Option<FieldElem>, word: &mut Vec<u16>| {
        let c = coef.take().unwrap_or_else(FieldElem::one);
        out.add_term(std::mem::take(word), &(sign * &c));
    };
    for t in toks {
        match t {
            Tok::Plus | Tok::Minus => {
                if pending {
                    flush(&mut out, &sign, &mut coef, &mut word);
                    pending = false;
                    sign = FieldElem::one();
                }
                if matches!(t, Tok::Minus) {
                    sign = -sign;
                }
            }
            Tok::Coef(e) => {
                let v: FieldElem = e.parse().map_err(|e| format!("coefficient: {e}"))?;
                coef = Some(match coef.take() {
                    Some(c) => &c * &v,
                    None => v,
                });
                pending = true;
            }
            Tok::Name(n) => {
                if let Ok(g) = rs.id(&n) {
                    word.push(g);
                } else if let Ok(v) = n.parse::<FieldElem>() {
                    coef = Some(match coef.take() {
                        Some(c) => &c * &v,
                        None => v,
                    });
                } else {
                    return Err(format!("unknown generator `{n}`"));
                }
                pending = true;
            }
        }
    }
    if pending {
        flush(&mut out, &sign, &mut coef, &mut word);
    } else {
        return Err("empty expression".into());
    }
    Ok(out)
}

/// Reads a presentation; rules are added with orientation checks.
pub fn parse_presentation(text: &str) -> Result<RewriteSystem, NcError> {
    let err = |line: usize, msg: String| NcError::Presentation { line, msg };
    let mut names: Option<Vec<String>> = None;
    let mut stars: Vec<(String, String)> = Vec::new();
    let mut weights: Vec<(String, u32)> = Vec::new();
    let mut rules: Vec<(usize, String, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("generators:") {
            names = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("star:") {
            for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
                let v: Vec<&str> = pair.split_whitespace().collect();
                if v.len() != 2 {
                    return Err(err(ln, format!("bad star pair `{}`", pair.trim())));
                }
                stars.push((v[0].into(), v[1].into()));
            }
        } else if let Some(rest) = line.strip_prefix("weights:") {
            for pair in rest.split(',').filter(|p| !p.trim().is_empty()) {
                let v: Vec<&str> = pair.split_whitespace().collect();
                let w = v
                    .get(1)
                    .and_then(|w| w.parse().ok())
                    .filter(|_| v.len() == 2)
                    .ok_or_else(|| err(ln, format!("bad weight `{}`", pair.trim())))?;
                weights.push((v[0].into(), w));
            }
        } else if let Some((l, r)) = line.split_once('=') {
            rules.push((ln, l.trim().to_string(), r.trim().to_string()));
        } else {
            return Err(err(ln, format!("cannot parse `{line}`")));
        }
    }
    let names = names.ok_or_else(|| err(0, "missing `generators:` line".into()))?;
    let mut gens: Vec<Generator> = names
        .iter()
        .enumerate()
        .map(|(i, n)| Generator::new(n, None, i as u32 + 1))
        .collect();
    let find = |gens: &[Generator], n: &str| gens.iter().position(|g| g.name == n);
    for (a, b) in &stars {
        let ia = find(&gens, a).ok_or_else(|| NcError::UnknownGenerator(a.clone()))?;
        let ib = find(&gens, b).ok_or_else(|| NcError::UnknownGenerator(b.clone()))?;
        gens[ia].star = Some(b.clone());
        gens[ib].star = Some(a.clone());
    }
    for (n, w) in &weights {
        let i = find(&gens, n).ok_or_else(|| NcError::UnknownGenerator(n.clone()))?;
        gens[i].weight = *w;
    }
    let mut rs = RewriteSystem::new(gens)?;
    for (ln, l, r) in rules {
        let lhs = rs.parse_word(&l)?;
        if lhs.len() != 2 {
            return Err(err(ln, "left-hand side must be a word of length 2".into()));
        }
        let rhs = parse_poly(&rs, &r).map_err(|m| err(ln, m))?;
        rs.add_rule(lhs[0], lhs[1], rhs)?;
    }
    Ok(rs)
}

impl RewriteSystem {
    /// Inverse of [`parse_presentation`].
    pub fn to_presentation(&self) -> String {
        let mut order: Vec<&Generator> = self.gens.iter().collect();
        order.sort_by_key(|g| g.rank);
        let mut s = String::from("generators:");
        for g in &order {
            let _ = write!(s, " {}", g.name);
        }
        s.push('\n');
        let mut pairs = Vec::new();
        for g in &order {
            if let Some(p) = &g.star {
                let rank_p = self.gens[self.by_name[p] as usize].rank;
                if rank_p >= g.rank {
                    pairs.push(format!("{} {p}", g.name));
                }
            }
        }
        if !pairs.is_empty() {
            let _ = writeln!(s, "star: {}", pairs.join(", "));
        }
        let heavy: Vec<String> = order
            .iter()
            .filter(|g| g.weight != 1)
            .map(|g| format!("{} {}", g.name, g.weight))
            .collect();
        if !heavy.is_empty() {
            let _ = writeln!(s, "weights: {}", heavy.join(", "));
        }
        let mut rules = self.sorted_rules();
        rules.reverse();
        for ((g, h), rhs) in rules {
            let _ = writeln!(s, "{} = {}", self.word_string(&[g, h]), self.display(&rhs));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const OSC: &str = "\
# deformed oscillator
generators: a* qN a
star: a a*, qN qN
a a* = (Q1) a* a + qN qN
a qN = (q) qN a
qN a* = (q) a* qN
";

    #[test]
    fn round_trip() {
        let rs = parse_presentation(OSC).unwrap();
        assert_eq!(rs.num_rules(), 3);
        assert!(rs.check_confluence().unwrap().is_empty());
        let again = parse_presentation(&rs.to_presentation()).unwrap();
        assert_eq!(again.to_presentation(), rs.to_presentation());
    }

    #[test]
    fn signs_and_scalars() {
        let rs = parse_presentation(OSC).unwrap();
        let p = parse_poly(&rs, "- (q^2) a a* + 2 qN - 1").unwrap();
        assert_eq!(
            p.coeff(&rs.parse_word("a a*").unwrap()),
            -(&FieldElem::q() * &FieldElem::q())
        );
        assert_eq!(p.coeff(&rs.parse_word("qN").unwrap()), FieldElem::from_int(2));
        assert_eq!(p.constant_term(), FieldElem::from_int(-1));
        assert!(parse_poly(&rs, "0").unwrap().is_zero());
    }

    #[test]
    fn reports_bad_lines() {
        assert!(parse_presentation("generators: x y\nx y z = y").is_err());
        assert!(parse_presentation("generators: x y\nx y = w").is_err());
        assert!(matches!(
            parse_presentation("generators: x y\nx y = y x"),
            Err(NcError::BadOrientation { .. })
        ));
    }
}
