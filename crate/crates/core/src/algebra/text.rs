//! Polynomial text format.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | identifier | '(' poly ')'
//! ```
//!
//! Identifiers match `[A-Za-z][A-Za-z0-9_]*`. With implicit multiplication
//! enabled, an identifier that is not a ring variable is split into a
//! concatenation of variable names when that split is unique (`x0y3`).
//!
//! Rendering lists terms by descending total degree, ties broken
//! lexicographically in ring variable order, so that a printed polynomial
//! does not depend on the ring's term order: `x0*x2 - x1^2`.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    pub implicit_multiplication: bool,
}

impl ParseOptions {
    pub fn implicit() -> Self {
        ParseOptions {
            implicit_multiplication: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = vec![];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((start, t));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring<K>>,
    opts: ParseOptions,
}

impl<'a, K: Field> Parser<'a, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<Polynomial<K>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Polynomial<K>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        position: self.offset(),
                        message: "exponent too large".into(),
                    })?;
                    if e > u16::MAX as u32 {
                        return self.err("exponent too large");
                    }
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<K>> {
        let ctx = self.ring.ctx();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = match self.peek().cloned() {
                        Some(Tok::Int(d)) => d,
                        _ => return self.err("expected a denominator"),
                    };
                    let at = self.offset();
                    self.pos += 1;
                    let c = K::from_ratio(ctx, &n, &d).map_err(|_| Error::Parse {
                        position: at,
                        message: "zero denominator".into(),
                    })?;
                    return Ok(Polynomial::constant(self.ring, c));
                }
                Ok(Polynomial::constant(self.ring, K::from_bigint(ctx, &n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    return Ok(Polynomial::var(self.ring, i));
                }
                if self.opts.implicit_multiplication {
                    if let Some(parts) = split_identifier(&name, self.ring.names()) {
                        let mut acc = Polynomial::one(self.ring);
                        for i in parts {
                            acc = &acc * &Polynomial::var(self.ring, i);
                        }
                        return Ok(acc);
                    }
                }
                Err(Error::UnknownVariable(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Unique split of `word` into a concatenation of variable names.
fn split_identifier(word: &str, names: &[String]) -> Option<Vec<usize>> {
    // count[i] = number of splits of word[i..], capped at 2
    let n = word.len();
    let mut count = vec![0u8; n + 1];
    let mut choice = vec![None; n + 1];
    count[n] = 1;
    for i in (0..n).rev() {
        for (k, name) in names.iter().enumerate() {
            if word[i..].starts_with(name.as_str()) {
                let c = count[i + name.len()];
                if c > 0 {
                    count[i] = (count[i] + c).min(2);
                    choice[i] = Some(k);
                }
            }
        }
    }
    if count[0] != 1 {
        return None;
    }
    let mut out = vec![];
    let mut i = 0;
    while i < n {
        let k = choice[i]?;
        out.push(k);
        i += names[k].len();
    }
    Some(out)
}

/// Parses `text` into a polynomial of `ring`.
pub fn parse_poly<K: Field>(text: &str, ring: &Arc<Ring<K>>, opts: ParseOptions) -> Result<Polynomial<K>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
        opts,
    };
    let f = p.poly()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Display order: higher total degree first, then lexicographic in ring
/// variable order.
pub fn display_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.exponents().cmp(b.exponents()))
}

fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = vec![];
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical text of a polynomial.
pub fn render<K: Field>(f: &Polynomial<K>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let mut terms: Vec<&(K, Monomial)> = f.terms().iter().collect();
    terms.sort_by(|a, b| display_order(&b.1, &a.1));
    let mut out = String::new();
    for (k, (c, m)) in terms.into_iter().enumerate() {
        let (neg, mag) = K::signed_parts(ring.ctx(), c);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = render_monomial(m, ring.names());
        if mon.is_empty() {
            out.push_str(&mag);
        } else {
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&mon);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{Modulus, Rational, Zp};
    use crate::algebra::monomial::MonomialOrder;

    fn ring() -> Arc<Ring<Rational>> {
        let names = ["x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"]
            .map(String::from)
            .to_vec();
        Ring::new(names, (), MonomialOrder::degrevlex()).unwrap()
    }

    #[test]
    fn parses_scroll_binomials() {
        let r = ring();
        let f1 = parse_poly("x0*x2 - x1^2", &r, ParseOptions::default()).unwrap();
        assert_eq!(f1.to_string(), "x0*x2 - x1^2");
        assert_eq!(f1.len(), 2);
        let h = parse_poly("x0y3 - x1y2", &r, ParseOptions::implicit()).unwrap();
        assert_eq!(h.to_string(), "x0*y3 - x1*y2");
        assert!(matches!(
            parse_poly("x0y3 - x1y2", &r, ParseOptions::default()),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn zero_and_constants() {
        let r = ring();
        assert!(Polynomial::parse(&r, "0").unwrap().is_zero());
        assert_eq!(Polynomial::parse(&r, "3/6").unwrap().to_string(), "1/2");
        assert_eq!(Polynomial::parse(&r, "-4").unwrap().to_string(), "-4");
        assert_eq!(Polynomial::parse(&r, " x1 - x1 ").unwrap().to_string(), "0");
    }

    #[test]
    fn juxtaposition_and_parentheses() {
        let r = ring();
        let a = Polynomial::parse(&r, "2 x0 x1").unwrap();
        assert_eq!(a.to_string(), "2*x0*x1");
        let b = Polynomial::parse(&r, "(x0 + x1)^2").unwrap();
        assert_eq!(b.to_string(), "x0^2 + 2*x0*x1 + x1^2");
        let c = Polynomial::parse(&r, "-3/4*x0 + x1*x2^2").unwrap();
        assert_eq!(c.to_string(), "x1*x2^2 - 3/4*x0");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        match Polynomial::parse(&r, "x0 + $") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        match Polynomial::parse(&r, "x0 +") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Polynomial::parse(&r, "x0^y1"), Err(Error::Parse { .. })));
        assert!(matches!(Polynomial::parse(&r, "1/0"), Err(Error::Parse { .. })));
        assert!(matches!(Polynomial::parse(&r, "(x0"), Err(Error::Parse { .. })));
        assert!(matches!(Polynomial::parse(&r, ""), Err(Error::Parse { .. })));
        assert_eq!(
            Polynomial::parse(&r, "z9"),
            Err(Error::UnknownVariable("z9".into()))
        );
    }

    #[test]
    fn ambiguous_split_is_rejected() {
        let names = ["a", "ab", "b", "ba"].map(String::from).to_vec();
        assert_eq!(split_identifier("aba", &names), None);
        assert_eq!(split_identifier("bb", &names), Some(vec![2, 2]));
        assert_eq!(split_identifier("c", &names), None);
    }

    #[test]
    fn prime_field_rendering_is_symmetric() {
        let names = ["x0", "x1", "x2"].map(String::from).to_vec();
        let r3 = Ring::<Zp>::new(names.clone(), Modulus::new(3).unwrap(), MonomialOrder::degrevlex()).unwrap();
        let f = Polynomial::parse(&r3, "x0*x2 - x1^2").unwrap();
        assert_eq!(f.to_string(), "x0*x2 - x1^2");
        assert_eq!(Polynomial::parse(&r3, "2*x0").unwrap().to_string(), "-x0");
        let r2 = Ring::<Zp>::new(names, Modulus::new(2).unwrap(), MonomialOrder::degrevlex()).unwrap();
        let g = Polynomial::parse(&r2, "x0*x2 - x1^2").unwrap();
        assert_eq!(g.to_string(), "x0*x2 + x1^2");
        // 1/2 in F_3 is 2
        assert_eq!(Polynomial::parse(&r3, "1/2").unwrap().to_string(), "-1");
    }
}
