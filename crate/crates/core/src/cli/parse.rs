//! Expression parsing for the CLI.
//!
//! Grammar (single variable per expression):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*        -- juxtaposition allowed only ")("
//! factor := atom ('^' nat)?
//! atom   := int | var | '(' expr ')'
//! ```
//!
//! Product forms are either a comma list of integers ("0,1,-3") or a product
//! of shift atoms ("(y)(y+2)"); factored products are lists of
//! "(expr)^nat" parts.

use num_bigint::BigInt;
use num_traits::Num;
use std::fmt;

use crate::abc::FactoredPart;
use crate::polynomial::IntPoly;

/// Exponents beyond this are rejected at parse time; expansion would be
/// unreasonable long before the numeric limit.
pub const MAX_EXPONENT: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        let tok = match bytes[i] {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                Tok::Int(BigInt::from_str_radix(digits, 10).expect("digit run"))
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                Tok::Ident(text[start..i].to_string())
            }
            b'+' => {
                i += 1;
                Tok::Plus
            }
            b'-' => {
                i += 1;
                Tok::Minus
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'^' => {
                i += 1;
                Tok::Caret
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b',' => {
                i += 1;
                Tok::Comma
            }
            _ => {
                let ch = text[i..].chars().next().expect("in range");
                return Err(ParseError::new(pos, format!("unexpected character '{ch}'")));
            }
        };
        out.push(Token { tok, pos });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    var: &'a str,
    text_len: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &str, var: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            var,
            text_len: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.pos)
            .unwrap_or(self.text_len)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(self.here(), message))
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.advance();
                Ok(())
            }
            Some(t) => {
                let got = t.describe();
                self.fail(format!("expected {what}, found {got}"))
            }
            None => self.fail(format!("expected {what}, found end of input")),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => {
                let got = t.describe();
                self.fail(format!("expected end of input, found {got}"))
            }
        }
    }

    fn prev_is_rparen(&self) -> bool {
        self.pos > 0 && self.tokens[self.pos - 1].tok == Tok::RParen
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.advance();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.advance();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.advance();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.advance();
                    acc = acc.mul(&self.factor()?);
                }
                // implicit multiplication, strictly between ")(" tokens
                Some(Tok::LParen) if self.prev_is_rparen() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.advance();
        let e = self.nat("exponent")?;
        Ok(base.pow(e))
    }

    fn nat(&mut self, what: &str) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Token {
                    tok: Tok::Int(n),
                    pos,
                }) = self.advance()
                else {
                    unreachable!("peeked an integer");
                };
                match u32::try_from(&n) {
                    Ok(e) if e <= MAX_EXPONENT => Ok(e),
                    _ => Err(ParseError::new(
                        pos,
                        format!("{what} {n} exceeds the limit of {MAX_EXPONENT}"),
                    )),
                }
            }
            _ => self.fail(format!("{what} must be a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(_)) => {
                let Some(Token { tok: Tok::Int(n), .. }) = self.advance() else {
                    unreachable!("peeked an integer");
                };
                Ok(IntPoly::from_coeffs(vec![n]))
            }
            Some(Tok::Ident(name)) => {
                if name != self.var {
                    return self.fail(format!(
                        "unknown variable '{name}' (this expression is in '{}')",
                        self.var
                    ));
                }
                self.advance();
                Ok(IntPoly::from_i64s(&[0, 1]))
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(t) => {
                let got = t.describe();
                self.fail(format!(
                    "expected an integer, '{}', or '(', found {got}",
                    self.var
                ))
            }
            None => self.fail("unexpected end of input"),
        }
    }

    /// A possibly negated integer literal.
    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.advance();
                true
            }
            Some(Tok::Plus) => {
                self.advance();
                false
            }
            _ => false,
        };
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Token { tok: Tok::Int(n), .. }) = self.advance() else {
                    unreachable!("peeked an integer");
                };
                Ok(if negative { -n } else { n })
            }
            _ => self.fail(format!("expected {what}")),
        }
    }
}

/// Parse a polynomial in the named variable.
pub fn parse_poly(text: &str, var: &str) -> Result<IntPoly, ParseError> {
    let mut p = Parser::new(text, var)?;
    if p.peek().is_none() {
        return p.fail("empty expression");
    }
    let poly = p.expr()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parse a product form: a comma list of integer shifts or a product of
/// shift atoms like "(y)(y+2)(y-3)". Multiplicity is kept; order is not
/// significant (the caller sorts).
pub fn parse_product_form(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut p = Parser::new(text, "y")?;
    if p.peek().is_none() {
        return p.fail("empty product form");
    }
    let shifts = if p.peek() == Some(&Tok::LParen) {
        parse_shift_atoms(&mut p)?
    } else {
        parse_comma_shifts(&mut p)?
    };
    p.expect_end()?;
    Ok(shifts)
}

fn parse_comma_shifts(p: &mut Parser<'_>) -> Result<Vec<BigInt>, ParseError> {
    let mut shifts = vec![p.int("an integer shift")?];
    while p.peek() == Some(&Tok::Comma) {
        p.advance();
        shifts.push(p.int("an integer shift")?);
    }
    Ok(shifts)
}

fn parse_shift_atoms(p: &mut Parser<'_>) -> Result<Vec<BigInt>, ParseError> {
    let mut shifts = Vec::new();
    let mut seen_var: Option<String> = None;
    loop {
        p.expect(Tok::LParen, "'('")?;
        match p.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if let Some(prev) = &seen_var {
                    if *prev != name {
                        return p.fail(format!(
                            "inconsistent variable '{name}' (the form started with '{prev}')"
                        ));
                    }
                } else {
                    seen_var = Some(name);
                }
                p.advance();
            }
            _ => return p.fail("expected the variable inside a shift atom"),
        }
        let shift = match p.peek() {
            Some(Tok::RParen) => BigInt::from(0),
            Some(Tok::Plus) | Some(Tok::Minus) => p.int("an integer shift")?,
            _ => return p.fail("expected '+', '-', or ')' in a shift atom"),
        };
        p.expect(Tok::RParen, "')'")?;
        shifts.push(shift);
        match p.peek() {
            Some(Tok::Star) => {
                p.advance();
            }
            Some(Tok::LParen) => {}
            _ => return Ok(shifts),
        }
    }
}

/// Parse a factored product: one or more "(expr)^nat" parts in the named
/// variable, '*'-separated or juxtaposed, exponent defaulting to 1.
pub fn parse_factored_product(text: &str, var: &str) -> Result<Vec<FactoredPart>, ParseError> {
    let mut p = Parser::new(text, var)?;
    if p.peek().is_none() {
        return p.fail("empty factored product");
    }
    let mut parts = Vec::new();
    loop {
        p.expect(Tok::LParen, "'(' opening a factored part")?;
        let base = p.expr()?;
        p.expect(Tok::RParen, "')'")?;
        let exponent = if p.peek() == Some(&Tok::Caret) {
            p.advance();
            p.nat("exponent")?
        } else {
            1
        };
        parts.push(FactoredPart::new(base, exponent));
        match p.peek() {
            Some(Tok::Star) => {
                p.advance();
            }
            Some(Tok::LParen) => {}
            None => return Ok(parts),
            Some(t) => {
                let got = t.describe();
                return p.fail(format!("expected '*', '(', or end of input, found {got}"));
            }
        }
    }
}

/// Render shifts the way [`parse_product_form`] reads them back.
pub fn format_product_form(shifts: &[BigInt], var: &str) -> String {
    use num_traits::{Signed, Zero};
    let mut out = String::new();
    for q in shifts {
        if q.is_zero() {
            out.push_str(&format!("({var})"));
        } else if q.is_negative() {
            out.push_str(&format!("({var}-{})", q.magnitude()));
        } else {
            out.push_str(&format!("({var}+{q})"));
        }
    }
    out
}

/// Render factored parts the way [`parse_factored_product`] reads them back.
pub fn format_factored_product(parts: &[FactoredPart], var: &str) -> String {
    parts
        .iter()
        .map(|p| {
            let base = p.base.to_string_var(var);
            if p.exponent == 1 {
                format!("({base})")
            } else {
                format!("({base})^{}", p.exponent)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
