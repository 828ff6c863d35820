//! Problem files: the input grammar, parsing and rendering.
//!
//! Grammar (one item per line, `#` starts a comment, blank lines ignored):
//!
//! ```text
//! char 7                  # optional; defaults to 32003
//! vars x,y,z,t            # declaration order = descending variable order
//! y*z - z^2               # one generator per line, over + - * ^
//! y^2 - x*t
//! ```

use std::fmt;

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::polynomial::{Polynomial, Term};
use crate::ring::Ring;

pub const DEFAULT_CHARACTERISTIC: u64 = 32003;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// A parsed input system. Generators are kept as text (the round-trippable
/// source of truth) alongside their parsed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub generators_text: Vec<String>,
    pub generators: Vec<Polynomial>,
    pub homogeneous: bool,
}

impl ProblemSpec {
    pub fn ring(&self) -> Ring {
        Ring::new(
            PrimeField::new(self.characteristic).expect("validated at parse"),
            self.vars.clone(),
        )
    }

    /// Renders back to file text; `parse_problem(render(self)) == self`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("char {}\n", self.characteristic));
        out.push_str(&format!("vars {}\n", self.vars.join(",")));
        for g in &self.generators_text {
            out.push_str(g);
            out.push('\n');
        }
        out
    }

    /// Builds from already-rendered generator lines, validating them.
    pub fn from_parts(
        characteristic: u64,
        vars: Vec<String>,
        generators_text: Vec<String>,
    ) -> Result<Self, ParseError> {
        let mut text = format!("char {}\nvars {}\n", characteristic, vars.join(","));
        for g in &generators_text {
            text.push_str(g);
            text.push('\n');
        }
        parse_problem(&text)
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemSpec, ParseError> {
    let mut characteristic: Option<u64> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut generators_text = Vec::new();
    let mut generators = Vec::new();
    let mut ring: Option<Ring> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("char ") {
            if vars.is_some() || characteristic.is_some() {
                return Err(ParseError {
                    line: line_no,
                    msg: "char must appear once, before vars".into(),
                });
            }
            let p: u64 = rest.trim().parse().map_err(|_| ParseError {
                line: line_no,
                msg: format!("invalid characteristic '{}'", rest.trim()),
            })?;
            if PrimeField::new(p).is_err() {
                return Err(ParseError {
                    line: line_no,
                    msg: format!("characteristic {p} is not prime"),
                });
            }
            characteristic = Some(p);
        } else if let Some(rest) = line.strip_prefix("vars ") {
            if vars.is_some() {
                return Err(ParseError {
                    line: line_no,
                    msg: "duplicate vars line".into(),
                });
            }
            let names: Vec<String> = rest
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            if names.is_empty() {
                return Err(ParseError {
                    line: line_no,
                    msg: "vars line declares no variables".into(),
                });
            }
            for n in &names {
                if !n.chars().next().unwrap().is_ascii_alphabetic()
                    || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(ParseError {
                        line: line_no,
                        msg: format!("invalid variable name '{n}'"),
                    });
                }
            }
            let p = characteristic.unwrap_or(DEFAULT_CHARACTERISTIC);
            characteristic = Some(p);
            ring = Some(Ring::new(PrimeField::new(p).unwrap(), names.clone()));
            vars = Some(names);
        } else {
            let ring = ring.as_ref().ok_or(ParseError {
                line: line_no,
                msg: "generator before vars declaration".into(),
            })?;
            let poly = parse_poly(ring, line).map_err(|msg| ParseError { line: line_no, msg })?;
            if poly.is_zero() {
                return Err(ParseError {
                    line: line_no,
                    msg: "zero generator".into(),
                });
            }
            generators_text.push(line.to_string());
            generators.push(poly);
        }
    }

    let vars = vars.ok_or(ParseError {
        line: text.lines().count() + 1,
        msg: "missing vars declaration".into(),
    })?;
    if generators.is_empty() {
        return Err(ParseError {
            line: text.lines().count() + 1,
            msg: "empty generator list".into(),
        });
    }
    let homogeneous = generators.iter().all(|g| g.is_homogeneous());
    Ok(ProblemSpec {
        characteristic: characteristic.unwrap(),
        vars,
        generators_text,
        generators,
        homogeneous,
    })
}

/// Parses a single polynomial over `+ - * ^` with integer coefficients.
pub fn parse_poly(ring: &Ring, input: &str) -> Result<Polynomial, String> {
    let tokens = tokenize(input)?;
    let mut terms: Vec<Term> = Vec::new();
    let mut pos = 0;
    let mut sign: i64 = 1;
    // leading sign
    if pos < tokens.len() {
        match tokens[pos] {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                sign = -1;
                pos += 1;
            }
            _ => {}
        }
    }
    if pos >= tokens.len() {
        return Err("empty polynomial".into());
    }
    loop {
        let (term, next) = parse_term(ring, &tokens, pos, sign)?;
        terms.push(term);
        pos = next;
        if pos >= tokens.len() {
            break;
        }
        sign = match tokens[pos] {
            Tok::Plus => 1,
            Tok::Minus => -1,
            _ => return Err("expected + or - between terms".into()),
        };
        pos += 1;
        if pos >= tokens.len() {
            return Err("trailing operator".into());
        }
    }
    Ok(Polynomial::from_terms(&ring.field, terms))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Star,
    Caret,
    Plus,
    Minus,
}

fn tokenize(input: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        n.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n.parse().map_err(|_| format!("integer overflow '{n}'"))?));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(name));
            }
            other => return Err(format!("unexpected character '{other}'")),
        }
    }
    Ok(out)
}

fn parse_term(
    ring: &Ring,
    tokens: &[Tok],
    mut pos: usize,
    sign: i64,
) -> Result<(Term, usize), String> {
    let mut coeff: u64 = if sign < 0 {
        ring.field.neg(1)
    } else {
        1
    };
    let mut exps = vec![0u32; ring.nvars()];
    loop {
        match tokens.get(pos) {
            Some(Tok::Int(n)) => {
                coeff = ring.field.mul(coeff, ring.field.from_u64(*n));
                pos += 1;
            }
            Some(Tok::Ident(name)) => {
                let vi = ring
                    .var_index(name)
                    .ok_or_else(|| format!("unknown variable '{name}'"))?;
                pos += 1;
                let mut e = 1u32;
                if let Some(Tok::Caret) = tokens.get(pos) {
                    pos += 1;
                    match tokens.get(pos) {
                        Some(Tok::Int(n)) => {
                            e = u32::try_from(*n).map_err(|_| "exponent too large".to_string())?;
                            pos += 1;
                        }
                        _ => return Err("expected integer exponent after ^".into()),
                    }
                }
                exps[vi] += e;
            }
            _ => return Err("expected coefficient or variable".into()),
        }
        match tokens.get(pos) {
            Some(Tok::Star) => {
                pos += 1;
            }
            _ => break,
        }
    }
    Ok((
        Term {
            coeff,
            mono: Monomial::new(exps),
        },
        pos,
    ))
}
