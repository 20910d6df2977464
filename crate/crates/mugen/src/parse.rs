//! Text syntax for ideals.
//!
//! ```text
//! ideal    := monomial ("," monomial)*
//! monomial := "1" | factor ("*" factor)*
//! factor   := var ("^" uint)?
//! var      := "x" | "y" | "z" | "t" | "x" uint
//! ```
//!
//! `x, y, z, t` are `x1, x2, x3, x4`. Whitespace is ignored everywhere.

use std::fmt;

use mugen_core::{minimalize, Exponent, Monomial, MonomialIdeal};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    Unexpected { found: char, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    NegativeExponent,
    /// `x0`, or an index too large to address.
    BadVariable,
    /// A variable beyond the requested number of variables.
    ArityExceeded { index: usize, arity: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Character offset into the original text, 0-based.
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: ", self.position + 1)?;
        match &self.kind {
            ParseErrorKind::Empty => f.write_str("empty ideal"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "unexpected '{found}', expected {expected}")
            }
            ParseErrorKind::UnexpectedEnd { expected } => write!(f, "unexpected end, expected {expected}"),
            ParseErrorKind::NegativeExponent => f.write_str("exponents must be nonnegative"),
            ParseErrorKind::BadVariable => f.write_str("variable indices start at x1"),
            ParseErrorKind::ArityExceeded { index, arity } => {
                write!(f, "variable x{index} does not exist in {arity} variables")
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed ideal with the input monomials that were dropped as redundant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub ideal: MonomialIdeal,
    pub redundant: Vec<Monomial>,
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    parse_ideal_with(text, None).map(|p| p.ideal)
}

/// Parses in exactly `arity` variables when given, else in as many as the
/// highest variable index used (at least one).
pub fn parse_ideal_with(text: &str, arity: Option<usize>) -> Result<Parsed, ParseError> {
    let chars: Vec<(usize, char)> =
        text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut p = Parser { chars: &chars, at: 0, end: text.chars().count() };
    if chars.is_empty() {
        return Err(ParseError { position: 0, kind: ParseErrorKind::Empty });
    }
    let mut raw: Vec<(usize, Vec<(usize, Exponent)>)> = Vec::new();
    loop {
        let start = p.position();
        raw.push((start, p.monomial()?));
        match p.peek() {
            None => break,
            Some(',') => p.at += 1,
            Some(c) => return Err(p.error(ParseErrorKind::Unexpected { found: c, expected: "',' or '*'" })),
        }
    }

    let highest = raw.iter().flat_map(|(_, fs)| fs.iter().map(|(v, _)| *v)).max().unwrap_or(1);
    let n = match arity {
        Some(n) => {
            if let Some((pos, index)) = raw
                .iter()
                .find_map(|(pos, fs)| fs.iter().find(|(v, _)| *v > n).map(|(v, _)| (*pos, *v)))
            {
                return Err(ParseError { position: pos, kind: ParseErrorKind::ArityExceeded { index, arity: n } });
            }
            n
        }
        None => highest.max(1),
    };
    let monomials: Vec<Monomial> = raw
        .into_iter()
        .map(|(_, factors)| {
            let mut exps = vec![Exponent::ZERO; n];
            for (v, e) in factors {
                exps[v - 1] += &e;
            }
            Monomial::new(exps)
        })
        .collect();
    let ideal = minimalize(&monomials).expect("at least one monomial");
    let mut redundant = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for m in monomials {
        let kept = ideal.generators().binary_search(&m).is_ok();
        if !kept || !seen.insert(m.clone()) {
            redundant.push(m);
        }
    }
    Ok(Parsed { ideal, redundant })
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.position(), kind }
    }

    fn expect_more(&self, expected: &'static str) -> Result<char, ParseError> {
        self.peek().ok_or_else(|| self.error(ParseErrorKind::UnexpectedEnd { expected }))
    }

    fn monomial(&mut self) -> Result<Vec<(usize, Exponent)>, ParseError> {
        if self.peek() == Some('1') {
            self.at += 1;
            return Ok(Vec::new());
        }
        let mut factors = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.at += 1;
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> Result<(usize, Exponent), ParseError> {
        let var = self.var()?;
        if self.peek() != Some('^') {
            return Ok((var, Exponent::ONE));
        }
        self.at += 1;
        match self.expect_more("an exponent")? {
            '-' => Err(self.error(ParseErrorKind::NegativeExponent)),
            c if c.is_ascii_digit() => Ok((var, Exponent::from_biguint(self.uint()))),
            c => Err(self.error(ParseErrorKind::Unexpected { found: c, expected: "an exponent" })),
        }
    }

    fn var(&mut self) -> Result<usize, ParseError> {
        let start = self.position();
        let c = self.expect_more("a variable")?;
        self.at += 1;
        match c {
            'y' => Ok(2),
            'z' => Ok(3),
            't' => Ok(4),
            'x' if self.peek().is_some_and(|d| d.is_ascii_digit()) => {
                let index = self.uint();
                match usize::try_from(index) {
                    Ok(i) if (1..1 << 20).contains(&i) => Ok(i),
                    _ => Err(ParseError { position: start, kind: ParseErrorKind::BadVariable }),
                }
            }
            'x' => Ok(1),
            found => {
                self.at -= 1;
                Err(self.error(ParseErrorKind::Unexpected { found, expected: "a variable" }))
            }
        }
    }

    fn uint(&mut self) -> BigUint {
        let mut digits = String::new();
        while let Some(d) = self.peek().filter(char::is_ascii_digit) {
            digits.push(d);
            self.at += 1;
        }
        digits.parse().expect("nonempty digit string")
    }
}
