//! Series input syntax.
//!
//! ```text
//! expr     := sign? term (('+' | '-') term)*
//! term     := rational ('*' 'z' ('^' uint)?)? | 'z' ('^' uint)?
//! rational := uint ('/' uint)?
//! ```
//!
//! Whitespace between tokens is ignored. Repeated powers are summed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::Rational;
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("syntax error at position {pos}: negative powers are not allowed")]
    NegativePower { pos: usize },
    #[error("syntax error at position {pos}: zero denominator")]
    ZeroDenominator { pos: usize },
}

/// A parsed polynomial: distinct powers with their nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeriesExpr {
    terms: BTreeMap<u64, Rational>,
}

impl SeriesExpr {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).expr()
    }

    /// `(coefficient, power)` pairs in increasing power.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.terms.iter().map(|(p, c)| (c, *p))
    }

    fn push(&mut self, coeff: Rational, power: u64) {
        let slot = self.terms.entry(power).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&power);
        }
    }

    /// The series at `precision`, plus the powers that had to be dropped.
    pub fn to_series(&self, precision: usize) -> (Series, Vec<u64>) {
        let mut coeffs = vec![Rational::zero(); precision + 1];
        let mut dropped = Vec::new();
        for (power, c) in &self.terms {
            match usize::try_from(*power) {
                Ok(p) if p <= precision => coeffs[p] = c.clone(),
                _ => dropped.push(*power),
            }
        }
        (Series::from_coeffs(coeffs), dropped)
    }
}

/// Parses `text` into a series of the given precision. Terms above the
/// precision are silently dropped; use [`SeriesExpr`] to see them.
pub fn parse_series(text: &str, precision: usize) -> Result<Series, ParseError> {
    Ok(SeriesExpr::parse(text)?.to_series(precision).0)
}

/// Renders a series in the input syntax, so that
/// `parse_series(&render_expr(s), s.precision()) == s`.
pub fn render_expr(series: &Series) -> String {
    let mut out = String::new();
    for (power, c) in series.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let var = match power {
            0 => String::new(),
            1 => "z".to_string(),
            p => format!("z^{p}"),
        };
        match (power, magnitude.is_one()) {
            (0, _) => out.push_str(&magnitude.to_string()),
            (_, true) => out.push_str(&var),
            (_, false) => out.push_str(&format!("{magnitude}*{var}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.terms.keys().next_back().copied().unwrap_or(0);
        let coeffs = (0..=top)
            .map(|p| self.terms.get(&p).cloned().unwrap_or_default())
            .collect();
        f.write_str(&render_expr(&Series::from_coeffs(coeffs)))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect_found(&mut self, expected: &str) -> ParseError {
        match self.peek() {
            Some(b) => self.error(format!("expected {expected}, found '{}'", b as char)),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<SeriesExpr, ParseError> {
        let mut out = SeriesExpr::default();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, p) = self.term()?;
            out.push(if negative { -c } else { c }, p);
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else if self.peek().is_none() {
                return Ok(out);
            } else {
                return Err(self.expect_found("'+', '-' or end of input"));
            }
        }
    }

    fn term(&mut self) -> Result<(Rational, u64), ParseError> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok((Rational::one(), self.power()?))
            }
            Some(b) if b.is_ascii_digit() => {
                let c = self.rational()?;
                if self.eat(b'*') {
                    if !self.eat(b'z') {
                        return Err(self.expect_found("'z'"));
                    }
                    Ok((c, self.power()?))
                } else {
                    Ok((c, 0))
                }
            }
            _ => Err(self.expect_found("a number or 'z'")),
        }
    }

    fn power(&mut self) -> Result<u64, ParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        if self.peek() == Some(b'-') {
            return Err(ParseError::NegativePower { pos: self.pos });
        }
        let start = self.pos;
        let digits = self
            .digits()
            .ok_or_else(|| self.expect_found("an exponent"))?;
        digits.parse().map_err(|_| ParseError::Syntax {
            pos: start,
            msg: "exponent too large".into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self
            .digits()
            .ok_or_else(|| self.expect_found("a number"))?
            .parse()
            .expect("ascii digits");
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let den_pos = {
            self.skip_ws();
            self.pos
        };
        let den: BigInt = self
            .digits()
            .ok_or_else(|| self.expect_found("a denominator"))?
            .parse()
            .expect("ascii digits");
        Rational::new(num, den).map_err(|_| ParseError::ZeroDenominator { pos: den_pos })
    }
}
