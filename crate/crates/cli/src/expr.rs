//! Expressions over the Artin generators and the lattice atoms.
//!
//! ```text
//! expr := term*
//! term := atom ('^' int)?
//! atom := 's' int | 'S' int | 'A[' int ',' int ']' | 'a[' int ',' int ',' int ']' | '(' expr ')'
//! ```

use std::fmt;

use braidnil::{NilElement, NilError, Sign};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {msg}")]
pub struct ParseError {
    pub offset: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Sigma(usize, Sign),
    A(usize, usize),
    Alpha(usize, usize, usize),
    Group(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub atom: Atom,
    pub exp: i64,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expr {
    pub terms: Vec<Term>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self, signed: bool) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let neg = match self.peek() {
            Some(b'-') if signed => {
                self.pos += 1;
                true
            }
            Some(b'+') if signed => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if digits == self.pos {
            return self.err(digits, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[digits..self.pos]).expect("ascii digits");
        let v: i64 = match text.parse() {
            Ok(v) => v,
            Err(_) => return self.err(start, "integer too large"),
        };
        Ok(if neg { -v } else { v })
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.int(false)?;
        usize::try_from(v).or_else(|_| self.err(start, "index too large"))
    }

    fn expr(&mut self, closing: bool) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None if closing => return self.err(self.pos, "unclosed '('"),
                None => break,
                Some(b')') if closing => break,
                Some(b')') => return self.err(self.pos, "unmatched ')'"),
                _ => terms.push(self.term()?),
            }
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let offset = self.pos;
        let atom = match self.peek() {
            Some(c @ (b's' | b'S')) => {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'0'..=b'9')) {
                    return self.err(self.pos, "expected a generator index");
                }
                let sign = if c == b's' { Sign::Pos } else { Sign::Neg };
                Atom::Sigma(self.index()?, sign)
            }
            Some(c @ (b'A' | b'a')) => {
                self.pos += 1;
                if self.peek() != Some(b'[') {
                    return self.err(self.pos, "expected '['");
                }
                self.pos += 1;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                let atom = if c == b'A' {
                    Atom::A(i, j)
                } else {
                    self.expect(b',')?;
                    Atom::Alpha(i, j, self.index()?)
                };
                self.expect(b']')?;
                atom
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr(true)?;
                self.expect(b')')?;
                Atom::Group(inner)
            }
            Some(_) => {
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                return self.err(self.pos, format!("unexpected '{ch}'"));
            }
            None => return self.err(self.pos, "unexpected end of input"),
        };
        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.int(true)?
        } else {
            1
        };
        Ok(Term { atom, exp, offset })
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .expr(false)
}

/// Evaluation failure tagged with the byte offset of the offending term.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {source}")]
pub struct EvalError {
    pub offset: usize,
    pub source: NilError,
}

impl Expr {
    pub fn eval(&self, n: usize) -> Result<NilElement, EvalError> {
        let mut acc = NilElement::identity(n);
        for t in &self.terms {
            let at = |source| EvalError {
                offset: t.offset,
                source,
            };
            let x = match &t.atom {
                Atom::Sigma(k, s) => NilElement::sigma(n, *k, *s).map_err(at)?,
                Atom::A(i, j) => NilElement::a_gen(n, *i, *j, 1).map_err(at)?,
                Atom::Alpha(i, j, k) => NilElement::alpha_gen(n, *i, *j, *k, 1).map_err(at)?,
                Atom::Group(e) => e.eval(n)?,
            };
            let x = x.pow(t.exp).map_err(at)?;
            acc = acc.mul(&x).map_err(at)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            match &t.atom {
                Atom::Sigma(k, Sign::Pos) => write!(f, "s{k}")?,
                Atom::Sigma(k, Sign::Neg) => write!(f, "S{k}")?,
                Atom::A(i, j) => write!(f, "A[{i},{j}]")?,
                Atom::Alpha(i, j, k) => write!(f, "a[{i},{j},{k}]")?,
                Atom::Group(e) => write!(f, "({e})")?,
            }
            if t.exp != 1 {
                write!(f, "^{}", t.exp)?;
            }
        }
        Ok(())
    }
}

/// The normal form written as an expression: the lift of the permutation,
/// then the pure exponents, then the central coordinates.
pub fn normal_form_text(x: &NilElement) -> String {
    let mut parts: Vec<String> = braidnil::tits_lift(x.perm())
        .letters()
        .iter()
        .map(|l| l.to_string())
        .collect();
    let pow = |e: i64| {
        if e == 1 {
            String::new()
        } else {
            format!("^{e}")
        }
    };
    for (p, e) in x.pure().entries() {
        parts.push(format!("A[{},{}]{}", p.0, p.1, pow(e)));
    }
    for (t, c) in x.comm().entries() {
        parts.push(format!("a[{},{},{}]{}", t.0, t.1, t.2, pow(c)));
    }
    if parts.is_empty() {
        "()".to_string()
    } else {
        parts.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidnil::{BraidWord, Order};

    #[test]
    fn delta_five_and_b1() {
        let d = parse("s4 s3 s2^-1 s1^-1").unwrap().eval(5).unwrap();
        let w = BraidWord::from_pairs(5, &[(4, 1), (3, 1), (2, -1), (1, -1)]).unwrap();
        assert_eq!(d, NilElement::collect(&w).unwrap());
        let x = parse("a[1,2,4] (s4 s3 s2^-1 s1^-1)")
            .unwrap()
            .eval(5)
            .unwrap();
        assert_eq!(x.order().unwrap(), Order::Finite(5));
    }

    #[test]
    fn empty_is_identity() {
        assert!(parse("").unwrap().eval(4).unwrap().is_identity());
        assert!(parse("  ()  ").unwrap().eval(4).unwrap().is_identity());
    }

    #[test]
    fn alternative_inverse_letters() {
        let a = parse("S2 s1^2").unwrap().eval(3).unwrap();
        let b = parse("s2^-1 A[1,2]").unwrap().eval(3).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("( s1 s2 ) ^ 3").unwrap().to_string(), "(s1 s2)^3");
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse("s1 x2").unwrap_err().offset, 3);
        assert_eq!(parse("s1 (s2").unwrap_err().offset, 6);
        assert_eq!(parse("A[1 2]").unwrap_err().offset, 4);
        assert_eq!(parse("s1)").unwrap_err().offset, 2);
        assert_eq!(parse("s").unwrap_err().offset, 1);
        assert_eq!(parse("s1^").unwrap_err().offset, 3);
        assert_eq!(parse("s99999999999999999999").unwrap_err().offset, 1);
        let e = parse("s1 s7").unwrap().eval(3).unwrap_err();
        assert_eq!(e.offset, 3);
    }

    #[test]
    fn printing_round_trips() {
        for src in [
            "",
            "s1 S2^3 (A[1,3] a[3,1,2]^-2)^2",
            "a[1,2,4] (s4 s3 s2^-1 s1^-1)",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap().to_string(), e.to_string());
            assert_eq!(
                parse(&e.to_string()).unwrap().eval(5).unwrap(),
                e.eval(5).unwrap()
            );
        }
        let x = parse("s3 s1^-1 A[2,4]^5 a[1,3,4]")
            .unwrap()
            .eval(4)
            .unwrap();
        let back = parse(&normal_form_text(&x)).unwrap().eval(4).unwrap();
        assert_eq!(back, x);
    }
}
