use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntForm, Monomial};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Alias,
    Indexed,
}

struct Term {
    pos: usize,
    coeff: BigInt,
    vars: Vec<usize>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    style: Option<(Style, usize)>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        digits.parse().ok()
    }

    fn variable(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let (style, idx) = match self.src.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(d) if d.is_ascii_digit() => {
                        self.pos += 1;
                        if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                            return Err(self.err("variable index must be a single digit"));
                        }
                        (Style::Indexed, usize::from(d - b'0'))
                    }
                    _ => (Style::Alias, 0),
                }
            }
            Some(b'y') => {
                self.pos += 1;
                (Style::Alias, 1)
            }
            Some(b'z') => {
                self.pos += 1;
                (Style::Alias, 2)
            }
            Some(b'w') => {
                self.pos += 1;
                (Style::Alias, 3)
            }
            _ => return Err(self.err("expected a variable")),
        };
        match self.style {
            Some((s, _)) if s != style => return Err(Error::MixedVariableStyles { pos: start }),
            None => self.style = Some((style, start)),
            _ => {}
        }
        Ok(idx)
    }

    fn power(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(d @ b'1'..=b'3') if !self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit) => {
                self.pos += 1;
                Ok(u32::from(d - b'0'))
            }
            _ => Err(self.err("exponent must be 1, 2 or 3")),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        self.skip_ws();
        let pos = self.pos;
        let mut coeff = BigInt::one();
        let mut vars = Vec::new();
        let mut expect_factor = true;
        if let Some(c) = self.integer() {
            coeff = c;
            expect_factor = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                expect_factor = true;
            } else if matches!(self.peek(), Some(b'x' | b'y' | b'z' | b'w')) {
                expect_factor = true;
            }
        }
        if expect_factor {
            loop {
                let v = self.variable()?;
                let k = self.power()?;
                vars.extend(std::iter::repeat_n(v, k as usize));
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Term { pos, coeff, vars })
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.err("empty input")),
            _ => false,
        };
        loop {
            out.push(self.term(negative)?);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }
}

fn parse_terms(text: &str) -> Result<(Vec<Term>, Style)> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, style: None };
    let terms = p.terms()?;
    for t in &terms {
        if t.vars.len() != 3 && !(t.vars.is_empty() && t.coeff.is_zero()) {
            return Err(Error::NonHomogeneousDegree3 { pos: t.pos, degree: t.vars.len() as u32 });
        }
    }
    Ok((terms, p.style.map_or(Style::Alias, |(s, _)| s)))
}

/// Parses a cubic form; the number of variables is one more than the
/// largest index used (at least 1).
///
/// ```
/// let f = cubic3_core::parse_form("x0^2*x1 - 3*x1^2*x2").unwrap();
/// assert_eq!(f.nvars(), 3);
/// assert_eq!(f.to_string(), "x^2*y - 3*y^2*z");
/// ```
pub fn parse_form(text: &str) -> Result<IntForm> {
    let (terms, _) = parse_terms(text)?;
    let nvars = terms.iter().flat_map(|t| t.vars.iter()).max().map_or(1, |m| m + 1);
    build(terms, nvars)
}

/// Parses a cubic form in exactly `nvars` variables, so forms that do not
/// mention every variable keep their ambient dimension.
pub fn parse_form_in(text: &str, nvars: usize) -> Result<IntForm> {
    let (terms, _) = parse_terms(text)?;
    let used = terms.iter().flat_map(|t| t.vars.iter()).max().map_or(0, |m| m + 1);
    if used > nvars {
        return Err(Error::DimensionMismatch { expected: nvars, found: used });
    }
    build(terms, nvars)
}

fn build(terms: Vec<Term>, nvars: usize) -> Result<IntForm> {
    let mut f = IntForm::zero(nvars);
    for t in terms {
        if t.vars.is_empty() {
            continue;
        }
        f.add_term(Monomial::new(t.vars[0], t.vars[1], t.vars[2]), t.coeff);
    }
    Ok(f)
}
