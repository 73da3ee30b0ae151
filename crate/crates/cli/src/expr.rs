//! Parser for one-variable polynomial expressions.
//!
//! Accepted grammar: sums and differences of terms, a term is a product of
//! factors (explicit `*` or juxtaposition like `4x^3`), a factor is a
//! rational literal (`8/9`, `-3`, `1.25`) or the variable (`x` or `x1`)
//! with an optional nonnegative integer exponent.

use std::fmt;

use sturm_core::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at offset {})", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some(t) => Err(err(t.position, "unexpected trailing input")),
    }
}

/// Comma-separated rational coefficients, lowest degree first.
pub fn parse_coeffs(input: &str) -> Result<Polynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in input.split(',') {
        let value: Rational = piece.trim().parse().map_err(|e| ParseError {
            position: offset,
            message: format!("bad coefficient {:?}: {e}", piece.trim()),
        })?;
        coeffs.push(value);
        offset += piece.len() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Plus,
    Minus,
    Star,
    Caret,
    Number(String),
    Variable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    kind: TokenKind,
    position: usize,
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        position,
        message: message.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let position = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => tokens.push(Token {
                kind: TokenKind::Plus,
                position,
            }),
            b'-' => tokens.push(Token {
                kind: TokenKind::Minus,
                position,
            }),
            b'*' => tokens.push(Token {
                kind: TokenKind::Star,
                position,
            }),
            b'^' => tokens.push(Token {
                kind: TokenKind::Caret,
                position,
            }),
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j < bytes.len() && (bytes[j] == b'/' || bytes[j] == b'.') {
                    let k = j + 1;
                    let mut l = k;
                    while l < bytes.len() && bytes[l].is_ascii_digit() {
                        l += 1;
                    }
                    if l == k {
                        return Err(err(j, "expected digits after fraction separator"));
                    }
                    j = l;
                }
                let text = &input[i..j];
                tokens.push(Token {
                    kind: TokenKind::Number(text.to_string()),
                    position,
                });
                i = j;
                continue;
            }
            b'x' => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                match &input[i..j] {
                    "x" | "x1" => tokens.push(Token {
                        kind: TokenKind::Variable,
                        position,
                    }),
                    other => {
                        return Err(err(position, format!("unknown variable {other:?}")));
                    }
                }
                i = j;
                continue;
            }
            c => {
                return Err(err(
                    position,
                    format!("unexpected character {:?}", c as char),
                ));
            }
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_position(&self) -> usize {
        self.tokens.last().map_or(0, |t| t.position + 1)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.bump();
                }
                TokenKind::Minus => {
                    negate = true;
                    self.bump();
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                TokenKind::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                Some(TokenKind::Number(_)) | Some(TokenKind::Variable) => {
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let Some(token) = self.bump() else {
            return Err(err(self.end_position(), "expected a term"));
        };
        let base = match token.kind {
            TokenKind::Number(text) => {
                let value: Rational = text.parse().map_err(|e| {
                    err(
                        token.position,
                        format!("bad rational literal {text:?}: {e}"),
                    )
                })?;
                Polynomial::constant(value)
            }
            TokenKind::Variable => Polynomial::monomial(Rational::one(), 1),
            _ => {
                return Err(err(token.position, "expected a number or the variable"));
            }
        };
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.bump();
            let Some(exp_token) = self.bump() else {
                return Err(err(self.end_position(), "expected an exponent after ^"));
            };
            let TokenKind::Number(text) = exp_token.kind else {
                return Err(err(exp_token.position, "expected an integer exponent"));
            };
            let exponent: usize = text.parse().map_err(|_| {
                err(
                    exp_token.position,
                    format!("exponent must be a nonnegative integer, got {text:?}"),
                )
            })?;
            return Ok(power(&base, exponent));
        }
        Ok(base)
    }
}

fn power(base: &Polynomial, exponent: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for _ in 0..exponent {
        acc = &acc * base;
    }
    acc
}
