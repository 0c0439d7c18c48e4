//! Parser for the `.ca` input format: ring and ideal declarations.
//!
//! Grammar (whitespace-insensitive, `#` starts a line comment):
//!
//! ```text
//! document := (ringdecl | idealdecl)*
//! ringdecl := "ring" NAME "=" VAR+ ("weights" INT+)? ";"
//! idealdecl := "ideal" NAME "(" NAME ")" "=" poly ("," poly)* ";"
//! poly     := "-"? term (("+" | "-") term)*
//! term     := coeff ("*" factor)* | factor ("*" factor)*
//! factor   := VAR ("^" INT)?
//! coeff    := INT ("/" INT)?
//! ```
//!
//! Integer literals are exact (arbitrary precision). Errors carry the
//! line and column of the first offending token.

use std::fmt;
use std::sync::Arc;

use comalg::poly::Coeff;
use comalg::{Ideal, Monomial, PolyRing, Polynomial};
use num_bigint::BigInt;

/// A parse or resolution error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed document: named rings and named ideals, in declaration
/// order.
#[derive(Debug, Clone)]
pub struct SourceDocument {
    pub rings: Vec<(String, Arc<PolyRing>)>,
    /// (ideal name, ring name, ideal)
    pub ideals: Vec<(String, String, Ideal)>,
}

impl PartialEq for SourceDocument {
    fn eq(&self, other: &Self) -> bool {
        self.rings == other.rings
            && self.ideals.len() == other.ideals.len()
            && self
                .ideals
                .iter()
                .zip(&other.ideals)
                .all(|(a, b)| a.0 == b.0 && a.1 == b.1 && a.2.generators() == b.2.generators())
    }
}

impl SourceDocument {
    pub fn ring(&self, name: &str) -> Option<&Arc<PolyRing>> {
        self.rings.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, _, i)| i)
    }

    pub fn first_ideal(&self) -> Option<(&str, &Ideal)> {
        self.ideals.first().map(|(n, _, i)| (n.as_str(), i))
    }

    /// Render the document back to source text. `parse_source` of the
    /// result yields an equal document.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for (name, ring) in &self.rings {
            out.push_str(&format!("ring {name} = {}", ring.var_names().join(" ")));
            if ring.weights().iter().any(|&w| w != 1) {
                out.push_str(" weights ");
                let ws: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
                out.push_str(&ws.join(" "));
            }
            out.push_str(";\n");
        }
        for (name, ring_name, ideal) in &self.ideals {
            let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
            let body = if gens.is_empty() {
                "0".to_string()
            } else {
                gens.join(", ")
            };
            out.push_str(&format!("ideal {name}({ring_name}) = {body};\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let (start_line, start_col) = (line, col);
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token {
                tok: Tok::Ident(s),
                line: start_line,
                col: start_col,
            });
        } else if c.is_ascii_digit() {
            let (start_line, start_col) = (line, col);
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            tokens.push(Token {
                tok: Tok::Int(s),
                line: start_line,
                col: start_col,
            });
        } else if "=();,+-*/^".contains(c) {
            tokens.push(Token {
                tok: Tok::Sym(c),
                line,
                col,
            });
            chars.next();
            col += 1;
        } else {
            return Err(ParseError {
                message: format!("unexpected character '{c}'"),
                line,
                col,
            });
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    doc: SourceDocument,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, at: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            message: message.into(),
            line: at.line,
            col: at.col,
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.err(&t, format!("expected '{c}', found {}", t.tok))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Token), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            _ => self.err(&t, format!("expected {what}, found {}", t.tok)),
        }
    }

    fn parse_document(&mut self) -> Result<(), ParseError> {
        loop {
            let t = self.peek().clone();
            match &t.tok {
                Tok::Eof => return Ok(()),
                Tok::Ident(kw) if kw == "ring" => self.parse_ring()?,
                Tok::Ident(kw) if kw == "ideal" => self.parse_ideal()?,
                _ => {
                    return self.err(&t, format!("expected 'ring' or 'ideal', found {}", t.tok))
                }
            }
        }
    }

    fn parse_ring(&mut self) -> Result<(), ParseError> {
        self.next(); // "ring"
        let (name, name_tok) = self.expect_ident("ring name")?;
        if self.doc.ring(&name).is_some() {
            return self.err(&name_tok, format!("duplicate ring {name}"));
        }
        self.expect_sym('=')?;
        let mut vars: Vec<String> = Vec::new();
        loop {
            let t = self.peek().clone();
            match &t.tok {
                Tok::Ident(v) if v != "weights" => {
                    if vars.contains(v) {
                        return self.err(&t, format!("duplicate variable {v}"));
                    }
                    vars.push(v.clone());
                    self.next();
                }
                _ => break,
            }
        }
        if vars.is_empty() {
            let t = self.peek().clone();
            return self.err(&t, "expected at least one variable name");
        }
        let mut weights: Vec<u32> = Vec::new();
        if self.peek().tok == Tok::Ident("weights".into()) {
            self.next();
            loop {
                let t = self.peek().clone();
                match &t.tok {
                    Tok::Int(s) => {
                        let w: u32 = match s.parse() {
                            Ok(w) if w > 0 => w,
                            _ => return self.err(&t, format!("invalid weight {s}")),
                        };
                        weights.push(w);
                        self.next();
                    }
                    _ => break,
                }
            }
            if weights.len() != vars.len() {
                let t = self.peek().clone();
                return self.err(
                    &t,
                    format!("{} variables but {} weights", vars.len(), weights.len()),
                );
            }
        } else {
            weights = vec![1; vars.len()];
        }
        self.expect_sym(';')?;
        let ring = match PolyRing::new(vars, weights) {
            Ok(r) => r,
            Err(e) => return self.err(&name_tok, e.to_string()),
        };
        self.doc.rings.push((name, ring));
        Ok(())
    }

    fn parse_ideal(&mut self) -> Result<(), ParseError> {
        self.next(); // "ideal"
        let (name, name_tok) = self.expect_ident("ideal name")?;
        if self.doc.ideal(&name).is_some() {
            return self.err(&name_tok, format!("duplicate ideal {name}"));
        }
        self.expect_sym('(')?;
        let (ring_name, ring_tok) = self.expect_ident("ring name")?;
        let ring = match self.doc.ring(&ring_name) {
            Some(r) => r.clone(),
            None => return self.err(&ring_tok, format!("unknown ring {ring_name}")),
        };
        self.expect_sym(')')?;
        self.expect_sym('=')?;
        let mut gens = Vec::new();
        loop {
            gens.push(self.parse_poly(&ring)?);
            let t = self.peek().clone();
            match t.tok {
                Tok::Sym(',') => {
                    self.next();
                }
                Tok::Sym(';') => {
                    self.next();
                    break;
                }
                _ => return self.err(&t, format!("expected ',' or ';', found {}", t.tok)),
            }
        }
        let ideal = Ideal::new(&ring, gens);
        self.doc.ideals.push((name, ring_name, ideal));
        Ok(())
    }

    fn parse_poly(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if self.peek().tok == Tok::Sym('-') {
            self.next();
            negate = true;
        }
        let mut acc = self.parse_term(ring)?;
        if negate {
            acc = -acc;
        }
        loop {
            let t = self.peek().clone();
            let sign = match t.tok {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => break,
            };
            self.next();
            let term = self.parse_term(ring)?;
            acc = if sign { &acc - &term } else { &acc + &term };
        }
        Ok(acc)
    }

    fn parse_term(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
        let t = self.peek().clone();
        let mut acc = match &t.tok {
            Tok::Int(_) => {
                let c = self.parse_coeff()?;
                Polynomial::constant(ring, c)
            }
            Tok::Ident(_) => self.parse_factor(ring)?,
            _ => {
                return self.err(&t, format!("expected a coefficient or variable, found {}", t.tok))
            }
        };
        while self.peek().tok == Tok::Sym('*') {
            self.next();
            let f = self.parse_factor(ring)?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn parse_coeff(&mut self) -> Result<Coeff, ParseError> {
        let t = self.next();
        let numer = match &t.tok {
            Tok::Int(s) => BigInt::parse_bytes(s.as_bytes(), 10).expect("digits"),
            _ => return self.err(&t, format!("expected an integer, found {}", t.tok)),
        };
        if self.peek().tok == Tok::Sym('/') {
            self.next();
            let t = self.next();
            let denom = match &t.tok {
                Tok::Int(s) => BigInt::parse_bytes(s.as_bytes(), 10).expect("digits"),
                _ => return self.err(&t, format!("expected a denominator, found {}", t.tok)),
            };
            if denom == BigInt::from(0) {
                return self.err(&t, "zero denominator");
            }
            Ok(Coeff::new(numer, denom))
        } else {
            Ok(Coeff::from(numer))
        }
    }

    fn parse_factor(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
        let (name, tok) = self.expect_ident("a variable")?;
        let idx = match ring.var_index(&name) {
            Some(i) => i,
            None => return self.err(&tok, format!("unknown variable {name}")),
        };
        let mut exp = 1u32;
        if self.peek().tok == Tok::Sym('^') {
            self.next();
            let t = self.next();
            exp = match &t.tok {
                Tok::Int(s) => match s.parse() {
                    Ok(e) => e,
                    Err(_) => return self.err(&t, format!("exponent {s} out of range")),
                },
                _ => return self.err(&t, format!("expected an exponent, found {}", t.tok)),
            };
        }
        let m = Monomial::var(ring.num_vars(), idx).pow(exp);
        Ok(Polynomial::monomial(ring, m, Coeff::from(BigInt::from(1))))
    }
}

/// Parse a `.ca` document, reporting the first error with its line and
/// column.
pub fn parse_source(text: &str) -> Result<SourceDocument, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        doc: SourceDocument {
            rings: Vec::new(),
            ideals: Vec::new(),
        },
    };
    parser.parse_document()?;
    Ok(parser.doc)
}
