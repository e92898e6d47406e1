//! Parser for algebra expressions.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor   := ident ['^*' | '\'']
//! rational := int ['/' int]
//! ```
//!
//! Identifiers resolve to vertices or edges of the loaded graph; whitespace
//! is ignored. A bare rational denotes that multiple of the unit.

use num_bigint::BigInt;
use num_traits::Zero;

use rewrite_algebra::{AlgElem, Algebra, Q};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Ghost,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '/' => out.push((start, Tok::Slash)),
            '\'' => out.push((start, Tok::Ghost)),
            '*' => out.push((start, Tok::Star)),
            '^' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_whitespace() {
                    j += 1;
                }
                if chars.get(j) != Some(&'*') {
                    return Err(CliError::Expr(format!("expected '*' after '^' at offset {start}")));
                }
                out.push((start, Tok::Ghost));
                i = j;
            }
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                out.push((start, Tok::Int(s.parse().expect("digits parse"))));
            }
            c if c.is_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..=i].iter().collect())));
            }
            other => return Err(CliError::Expr(format!("unexpected character {other:?} at offset {start}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    alg: &'a Algebra,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> String {
        self.toks.get(self.pos).map_or("end of input".into(), |(o, _)| format!("offset {o}"))
    }

    fn expr(&mut self) -> Result<AlgElem, CliError> {
        let mut acc = AlgElem::zero();
        let mut sign = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            -1
        } else {
            1
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                None => return Ok(acc),
                Some(_) => return Err(CliError::Expr(format!("expected '+' or '-' at {}", self.offset()))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<AlgElem, CliError> {
        if let Some(Tok::Int(_)) = self.peek() {
            let c = self.rational()?;
            if self.peek() != Some(&Tok::Star) {
                return Ok(self.alg.one().scale(&c));
            }
            self.pos += 1;
            return Ok(self.product()?.scale(&c));
        }
        self.product()
    }

    fn product(&mut self) -> Result<AlgElem, CliError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn rational(&mut self) -> Result<Q, CliError> {
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(CliError::Expr(format!("expected a number at {}", self.offset())));
        };
        self.pos += 1;
        if self.peek() != Some(&Tok::Slash) {
            return Ok(Q::from_integer(n));
        }
        self.pos += 1;
        let Some(Tok::Int(d)) = self.peek().cloned() else {
            return Err(CliError::Expr(format!("malformed rational: expected a denominator at {}", self.offset())));
        };
        if d.is_zero() {
            return Err(CliError::Expr("malformed rational: zero denominator".into()));
        }
        self.pos += 1;
        Ok(Q::new(n, d))
    }

    fn factor(&mut self) -> Result<AlgElem, CliError> {
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            return Err(CliError::Expr(format!("expected an identifier at {}", self.offset())));
        };
        self.pos += 1;
        let ghost = self.peek() == Some(&Tok::Ghost);
        if ghost {
            self.pos += 1;
        }
        let gr = self.alg.graph().graph();
        match (gr.vertex_index(&name), gr.edge_index(&name)) {
            (Some(_), Some(_)) => Err(CliError::Expr(format!("identifier {name} names both a vertex and an edge"))),
            (Some(v), None) if !ghost => Ok(self.alg.vertex(v)),
            (Some(_), None) => Err(CliError::Expr(format!("vertex {name} has no ghost"))),
            (None, Some(e)) => Ok(if ghost { self.alg.ghost(e) } else { self.alg.edge(e) }),
            (None, None) => Err(CliError::Expr(format!("unknown identifier {name}"))),
        }
    }
}

/// Parses an expression and returns its normal form in `alg`.
pub fn parse_expr(text: &str, alg: &Algebra) -> Result<AlgElem, CliError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(CliError::Expr("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, alg };
    let e = p.expr()?;
    Ok(alg.nf(&e))
}
