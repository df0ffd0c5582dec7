//! Text grammar for field elements: `(q^2 - Q1)/q^2`, `Q1^-1`, `3/2*q`.
//!
//! Printing is canonical, and `parse(print(x)) == x` for every element.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{FieldElem, FieldError, Monomial, Poly, Rat};

pub(super) fn print(x: &FieldElem) -> String {
    let num = print_poly(&x.num);
    if x.den.is_one() {
        return num;
    }
    let num = if x.num.terms().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = print_poly(&x.den);
    let den_is_atom = x.den.terms().len() == 1 && {
        let (m, _) = &x.den.terms()[0];
        (m.q == 0) != (m.q1 == 0)
    };
    if den_is_atom {
        format!("{num}/{den}")
    } else {
        format!("{num}/({den})")
    }
}

pub(super) fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = print_monomial(*m);
        if mono.is_empty() {
            out.push_str(&print_rat(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&print_rat(&a));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn print_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn print_monomial(m: Monomial) -> String {
    let mut parts = Vec::new();
    match m.q {
        0 => {}
        1 => parts.push("q".to_string()),
        e => parts.push(format!("q^{e}")),
    }
    match m.q1 {
        0 => {}
        1 => parts.push("Q1".to_string()),
        e => parts.push(format!("Q1^{e}")),
    }
    parts.join("*")
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Q,
    Q1,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, FieldError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some((start, c)) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' | '.' => {
                let mut end = start + 1;
                while let Some(&(j, d)) = it.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        end = j + 1;
                        it.next();
                    } else {
                        break;
                    }
                }
                Tok::Num(parse_decimal(&s[start..end], start)?)
            }
            'q' => Tok::Q,
            'Q' if it.peek().map(|t| t.1) == Some('1') => {
                it.next();
                Tok::Q1
            }
            _ => {
                return Err(FieldError::Parse {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

fn parse_decimal(s: &str, pos: usize) -> Result<Rat, FieldError> {
    let err = || FieldError::Parse {
        pos,
        msg: format!("bad number `{s}`"),
    };
    let (int, frac) = match s.split_once('.') {
        Some((a, b)) => (a, b),
        None => (s, ""),
    };
    if frac.contains('.') || (int.is_empty() && frac.is_empty()) {
        return Err(err());
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| err())?;
    let d = num_traits::pow(BigInt::from(10), frac.len());
    Ok(Rat::new(n, d))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, FieldError> {
        Err(FieldError::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<FieldElem, FieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem, FieldError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.factor()?;
                    acc = acc.checked_div(&d).map_err(|_| FieldError::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                Some(Tok::Num(_) | Tok::Q | Tok::Q1 | Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<FieldElem, FieldError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            return self.factor();
        }
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.here();
            let e = self.exponent()?;
            return base.pow(e).map_err(|_| FieldError::Parse {
                pos: at,
                msg: "negative power of zero".into(),
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, FieldError> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let e = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let v: i32 = r.to_integer().try_into().map_err(|_| FieldError::Parse {
                    pos: self.here(),
                    msg: "exponent too large".into(),
                })?;
                self.pos += 1;
                v
            }
            _ => return self.err("expected integer exponent"),
        };
        if paren {
            if self.peek() != Some(&Tok::RParen) {
                return self.err("expected `)`");
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn primary(&mut self) -> Result<FieldElem, FieldError> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.pos += 1;
                Ok(FieldElem::from_rat(r))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(FieldElem::q())
            }
            Some(Tok::Q1) => {
                self.pos += 1;
                Ok(FieldElem::q1())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected number, `q`, `Q1` or `(`"),
        }
    }
}

pub(super) fn parse(s: &str) -> Result<FieldElem, FieldError> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonically() {
        let x: FieldElem = "(q^2 - Q1)/q^2".parse().unwrap();
        assert_eq!(x.to_string(), "(-Q1 + q^2)/q^2");
        let y: FieldElem = "Q1^-1".parse().unwrap();
        assert_eq!(y.to_string(), "1/Q1");
        let z: FieldElem = "q^2/(Q1*q)".parse().unwrap();
        assert_eq!(z.to_string(), "q/Q1");
        let w: FieldElem = "1/(q*Q1^2)".parse().unwrap();
        assert_eq!(w.to_string(), "1/(q*Q1^2)");
    }

    #[test]
    fn unicode_minus_and_decimals() {
        let x: FieldElem = "1.3 \u{2212} q".parse().unwrap();
        let y: FieldElem = "13/10 - q".parse().unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn rejects_garbage() {
        assert!("q + ".parse::<FieldElem>().is_err());
        assert!("Q2".parse::<FieldElem>().is_err());
        assert!("1/(q - q)".parse::<FieldElem>().is_err());
        assert!("q^x".parse::<FieldElem>().is_err());
    }

    #[test]
    fn implicit_multiplication() {
        let x: FieldElem = "2q Q1".parse().unwrap();
        assert_eq!(x, FieldElem::monomial(2, 1, 1));
    }
}
