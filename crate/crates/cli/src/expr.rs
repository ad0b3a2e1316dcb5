//! Expression language for Weyl-algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' exponent)?
//! atom   := 'p' | 'q' | 'T' | rational | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! Multiplication must be written explicitly: `pq` is rejected.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;
use weyl_order::arith::parse_rational;
use weyl_order::{Rational, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: unexpected character `{ch}`")]
    Lexical { pos: Pos, ch: char },
    #[error("{pos}: unknown identifier `{name}` (write products explicitly, e.g. `p*q`)")]
    UnknownIdentifier { pos: Pos, name: String },
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: negative exponent {value}")]
    NegativeExponent { pos: Pos, value: String },
    #[error("{pos}: exponent {value} is not a non-negative integer")]
    NonIntegerExponent { pos: Pos, value: String },
    #[error("{pos}: zero denominator in `{literal}`")]
    ZeroDenominator { pos: Pos, literal: String },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Lexical { pos, .. }
            | ParseError::UnknownIdentifier { pos, .. }
            | ParseError::Syntax { pos, .. }
            | ParseError::NegativeExponent { pos, .. }
            | ParseError::NonIntegerExponent { pos, .. }
            | ParseError::ZeroDenominator { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    P,
    Q,
    T,
    Rational(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(s), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            _ => return Err(ParseError::Lexical { pos, ch: c }),
        };
        chars.next();
        col += 1;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {want}")))
        }
    }

    fn unexpected(&self, msg: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg: format!("{msg}, found {}", self.peek()) }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let kind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr { kind: kind(Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            let pos = self.pos();
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos };
        }
        match self.peek() {
            Tok::Ident(_) | Tok::Int(_) | Tok::LParen | Tok::LBracket => {
                Err(self.unexpected("expected `*` between factors"))
            }
            _ => Ok(lhs),
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let pos = self.pos();
            self.bump();
            let inner = self.factor()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), pos });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let e = self.exponent()?;
        if *self.peek() == Tok::Caret {
            return Err(self.unexpected("chained exponents need parentheses"));
        }
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), pos })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        let mut text = String::new();
        let parenthesized = *self.peek() == Tok::LParen;
        if parenthesized {
            self.bump();
        }
        match self.peek() {
            Tok::Minus => {
                self.bump();
                text.push('-');
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        match self.bump() {
            (Tok::Int(s), _) => text.push_str(&s),
            (t, p) => {
                return Err(ParseError::Syntax { pos: p, msg: format!("expected exponent, found {t}") })
            }
        }
        if *self.peek() == Tok::Slash {
            self.bump();
            match self.bump() {
                (Tok::Int(s), _) => {
                    text.push('/');
                    text.push_str(&s);
                }
                (t, p) => {
                    return Err(ParseError::Syntax { pos: p, msg: format!("expected denominator, found {t}") })
                }
            }
        }
        if parenthesized {
            self.expect(Tok::RParen)?;
        }
        let value = parse_rational(&text)
            .ok_or_else(|| ParseError::ZeroDenominator { pos, literal: text.clone() })?;
        if value.is_negative() {
            return Err(ParseError::NegativeExponent { pos, value: text });
        }
        if !value.is_integer() {
            return Err(ParseError::NonIntegerExponent { pos, value: text });
        }
        value
            .to_integer()
            .try_into()
            .map_err(|_| ParseError::NonIntegerExponent { pos, value: text })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let kind = match self.bump().0 {
            Tok::Ident(name) => match name.as_str() {
                "p" => ExprKind::P,
                "q" => ExprKind::Q,
                "T" => ExprKind::T,
                _ => return Err(ParseError::UnknownIdentifier { pos, name }),
            },
            Tok::Int(num) => {
                let mut literal = num;
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(den), _) => {
                            literal.push('/');
                            literal.push_str(&den);
                        }
                        (t, p) => {
                            return Err(ParseError::Syntax {
                                pos: p,
                                msg: format!("expected denominator, found {t}"),
                            })
                        }
                    }
                }
                let r = parse_rational(&literal)
                    .ok_or(ParseError::ZeroDenominator { pos, literal })?;
                ExprKind::Rational(r)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                ExprKind::Group(Box::new(inner))
            }
            Tok::LBracket => {
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                ExprKind::Commutator(Box::new(a), Box::new(b))
            }
            t => {
                self.at -= usize::from(t != Tok::Eof);
                return Err(self.unexpected("expected `p`, `q`, `T`, a number, `(` or `[`"));
            }
        };
        Ok(Expr { kind, pos })
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut parser = Parser { toks, at: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.unexpected("expected operator or end of input"));
    }
    Ok(e)
}

/// Lowers an expression to its canonical form.
pub fn lower(e: &Expr) -> WeylElement {
    match &e.kind {
        ExprKind::P => WeylElement::p(),
        ExprKind::Q => WeylElement::q(),
        ExprKind::T => WeylElement::t(),
        ExprKind::Rational(r) if r.is_zero() => WeylElement::zero(),
        ExprKind::Rational(r) => WeylElement::constant(r.clone()),
        ExprKind::Neg(x) => -lower(x),
        ExprKind::Add(a, b) => &lower(a) + &lower(b),
        ExprKind::Sub(a, b) => &lower(a) - &lower(b),
        ExprKind::Mul(a, b) => &lower(a) * &lower(b),
        ExprKind::Pow(x, k) => lower(x).pow(*k),
        ExprKind::Commutator(a, b) => {
            let (a, b) = (lower(a), lower(b));
            &(&a * &b) - &(&b * &a)
        }
        ExprKind::Group(x) => lower(x),
    }
}

pub fn parse_and_lower(input: &str) -> Result<WeylElement, ParseError> {
    parse(input).map(|e| lower(&e))
}
