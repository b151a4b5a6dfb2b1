//! Text format for ideals.
//!
//! ```text
//! # comment
//! ring poly 3 QQ degrevlex
//! x1^2 - 3*x2*x3
//! 1/2*x1*x2
//! ```
//!
//! The header names the ring kind (`poly` or `ext`), the number of variables,
//! the field (only `QQ`) and optionally a term order. Each following
//! non-empty line is one generator. Variables are `x1..xn` or `e1..en`; in an
//! exterior algebra products are taken in the order written, so `e2*e1`
//! means `-e1*e2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::ring::{Monomial, Polynomial, Rational, Ring, RingKind, TermOrder};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_ring(header: &str, line: usize) -> Result<Ring> {
    let words: Vec<&str> = header.split_whitespace().collect();
    let col = |k: usize| -> usize {
        let mut pos = 0;
        let mut seen = 0;
        for (i, ch) in header.char_indices() {
            if !ch.is_whitespace() && (i == 0 || header[..i].ends_with(char::is_whitespace)) {
                if seen == k {
                    pos = i;
                    break;
                }
                seen += 1;
            }
        }
        pos + 1
    };
    if words.first() != Some(&"ring") {
        return Err(err(line, col(0), "expected `ring <poly|ext> <n> QQ [order]`"));
    }
    let kind = match words.get(1) {
        Some(&"poly") => RingKind::Polynomial,
        Some(&"ext") => RingKind::Exterior,
        _ => return Err(err(line, col(1), "ring kind must be `poly` or `ext`")),
    };
    let n: usize = words
        .get(2)
        .and_then(|w| w.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| err(line, col(2), "expected a positive number of variables"))?;
    match words.get(3) {
        Some(&"QQ") => {}
        _ => return Err(err(line, col(3), "only the field QQ is supported")),
    }
    let order = match words.get(4) {
        None => TermOrder::DegRevLex,
        Some(w) => TermOrder::from_name(w).ok_or_else(|| err(line, col(4), format!("unknown term order `{w}`")))?,
    };
    if words.len() > 5 {
        return Err(err(line, col(5), "unexpected text after the term order"));
    }
    Ring::new(kind, n, order).map_err(|e| err(line, 1, e.to_string()))
}

struct Lexer {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
}

impl Lexer {
    fn new(src: &str, line: usize) -> Self {
        Lexer {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            line,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |c| c.0) + 1
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        err(self.line, self.column(), msg)
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("digits"))
    }
}

/// Parses one generator line.
pub fn parse_polynomial(ring: &Ring, src: &str, line: usize) -> Result<Polynomial> {
    let n = ring.n();
    let mut lx = Lexer::new(src, line);
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Rational::one();
        match lx.peek() {
            None if first => return Err(lx.error("empty generator")),
            None => break,
            Some('+') => {
                lx.pos += 1;
            }
            Some('-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => return Err(lx.error(format!("expected `+` or `-`, found `{c}`"))),
        }
        first = false;
        let mut coef = sign;
        let mut mono = Monomial::one(n);
        let mut expect_factor = true;
        while expect_factor {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = lx.number()?;
                    let mut value = Rational::from_integer(num);
                    if lx.peek() == Some('/') {
                        lx.pos += 1;
                        let den = lx.number()?;
                        if den.is_zero() {
                            return Err(lx.error("division by zero"));
                        }
                        value /= Rational::from_integer(den);
                    }
                    coef *= value;
                }
                Some(c) if c == 'x' || c == 'e' => {
                    let col = lx.column();
                    lx.pos += 1;
                    let idx = lx.number().map_err(|_| err(line, col, "expected a variable index"))?;
                    let idx: usize = idx.try_into().unwrap_or(usize::MAX);
                    if idx == 0 || idx > n {
                        return Err(err(line, col, format!("variable index {idx} out of range 1..={n}")));
                    }
                    let mut exp = 1u32;
                    if lx.peek() == Some('^') {
                        lx.pos += 1;
                        let e = lx.number()?;
                        exp = e.try_into().map_err(|_| lx.error("exponent too large"))?;
                        if exp > 1000 {
                            return Err(lx.error("exponent too large"));
                        }
                    }
                    for _ in 0..exp {
                        let v = Monomial::var(n, idx - 1);
                        match ring.mul_monomials(&mono, &v) {
                            Some((s, m)) => {
                                mono = m;
                                if s < 0 {
                                    coef = -coef;
                                }
                            }
                            None => coef = Rational::zero(),
                        }
                    }
                }
                Some(c) => return Err(lx.error(format!("unexpected character `{c}`"))),
                None => return Err(lx.error("unexpected end of line")),
            }
            expect_factor = lx.peek() == Some('*');
            if expect_factor {
                lx.pos += 1;
            }
        }
        if !coef.is_zero() && ring.is_valid_monomial(&mono) {
            terms.push((mono, coef));
        }
    }
    Ok(Polynomial::from_terms(n, terms))
}

/// Parses a whole ideal file.
pub fn parse_ideal(text: &str) -> Result<GradedIdeal> {
    let mut ring: Option<Ring> = None;
    let mut gens = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        match &ring {
            None => ring = Some(parse_ring(content, line)?),
            Some(r) => {
                let content = content.trim_end().trim_end_matches(',');
                gens.push(parse_polynomial(r, content, line)?);
                lines.push(line);
            }
        }
    }
    let ring = ring.ok_or_else(|| err(1, 1, "missing ring header"))?;
    GradedIdeal::new(ring, gens).map_err(|e| match e {
        Error::NotHomogeneous { index } => err(lines[index], 1, "generator is not homogeneous"),
        Error::ZeroGenerator { index } => err(lines[index], 1, "generator is zero"),
        other => other,
    })
}

/// Writes an ideal in the format accepted by [`parse_ideal`].
pub fn format_ideal(ideal: &GradedIdeal) -> String {
    let ring = ideal.ring();
    let mut s = format!("ring {} {} QQ {}\n", ring.kind().tag(), ring.n(), ring.order().name());
    for g in ideal.generators() {
        s.push_str(&ring.format_polynomial(g));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn parses_polynomial_ideal() {
        let i = parse_ideal("# test\nring poly 3 QQ\nx1^2 - 3*x2*x3\n1/2*x1*x2 # half\n").unwrap();
        assert_eq!(i.generators().len(), 2);
        let r = i.ring();
        assert_eq!(r.format_polynomial(&i.generators()[0]), "x1^2 - 3*x2*x3");
        assert_eq!(r.format_polynomial(&i.generators()[1]), "1/2*x1*x2");
        let round = parse_ideal(&format_ideal(&i)).unwrap();
        assert_eq!(round.generators(), i.generators());
    }

    #[test]
    fn exterior_products_carry_signs() {
        let i = parse_ideal("ring ext 3 QQ\ne2*e1 + e1*e3\n").unwrap();
        let g = &i.generators()[0];
        assert_eq!(g.coefficient(&Monomial::new(vec![1, 1, 0])), rat(-1));
        assert_eq!(g.coefficient(&Monomial::new(vec![1, 0, 1])), rat(1));
    }

    #[test]
    fn reports_positions() {
        let e = parse_ideal("ring poly 2 QQ\nx1 + x3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 6, .. }), "{e}");
        let e = parse_ideal("ring poly 2 QQ\nx1 + x2^2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_ideal("ring foo 2 QQ\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 6, .. }), "{e}");
        let e = parse_ideal("ring poly 2 QQ\nx1 ? x2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 4, .. }), "{e}");
        assert!(parse_ideal("ring poly 2 QQ\nx1 - x1\n").is_err());
    }
}
