//! Expression grammar for the `expand` subcommand.
//!
//! ```text
//! expr    := term (('+'|'-') term)*
//! term    := factor (('*'|'.') factor)*      '*' outer, '.' internal
//! factor  := rational | atom | 'Delta' factor | 'DeltaL' factor
//!          | 'DeltaR' factor | '-' factor | '(' expr ')'
//! atom    := NAME '[' int ((','|'|') int)* ']'
//! ```
//!
//! A `|` between index entries records a bar at that gap, so `PS[1,1|3]`
//! is the segmented word `11|3`.

use parkhopf::coeffs::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Dot,
    Slash,
    Comma,
    Bar,
    LBracket,
    RBracket,
    LParen,
    RParen,
}

#[derive(Debug)]
pub struct ParseError {
    pub at: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.at, self.message)
    }
}

pub fn lex(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '.' => {
                out.push((i, Token::Dot));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            ',' => {
                out.push((i, Token::Comma));
                i += 1;
            }
            '|' => {
                out.push((i, Token::Bar));
                i += 1;
            }
            '[' => {
                out.push((i, Token::LBracket));
                i += 1;
            }
            ']' => {
                out.push((i, Token::RBracket));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: i64 = src[start..i].parse().map_err(|_| ParseError {
                    at: start,
                    message: "integer out of range".into(),
                })?;
                out.push((start, Token::Int(value)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(src[start..i].to_string())));
            }
            other => {
                return Err(ParseError {
                    at: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

/// One basis atom: name, index entries, and bar gaps (1-based).
#[derive(Debug, Clone)]
pub struct Atom {
    pub basis: String,
    pub index: Vec<u32>,
    pub bars: Vec<usize>,
    pub at: usize,
}

#[derive(Debug, Clone)]
pub enum Expr {
    Scalar(Rational),
    Atom(Atom),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Internal(Box<Expr>, Box<Expr>),
    Delta(Box<Expr>),
    HalfDelta(Box<Expr>, bool),
}

pub struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let tokens = lex(src)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            len: src.len(),
        };
        let e = p.expr()?;
        if p.pos < p.tokens.len() {
            return Err(ParseError {
                at: p.tokens[p.pos].0,
                message: "trailing input".into(),
            });
        }
        Ok(e)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(a, _)| *a)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ParseError> {
        let at = self.here();
        match self.bump() {
            Some(ref t) if t == want => Ok(()),
            _ => Err(ParseError {
                at,
                message: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Token::Dot) => {
                    self.bump();
                    acc = Expr::Internal(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Token::Minus) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(&Token::RParen, "closing parenthesis")?;
                Ok(e)
            }
            Some(Token::Int(n)) => {
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    let dat = self.here();
                    match self.bump() {
                        Some(Token::Int(d)) if d != 0 => {
                            Ok(Expr::Scalar(Rational::new(n.into(), d.into())))
                        }
                        _ => Err(ParseError {
                            at: dat,
                            message: "expected nonzero denominator".into(),
                        }),
                    }
                } else {
                    Ok(Expr::Scalar(Rational::from_integer(n.into())))
                }
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "Delta" => Ok(Expr::Delta(Box::new(self.factor()?))),
                "DeltaL" => Ok(Expr::HalfDelta(Box::new(self.factor()?), true)),
                "DeltaR" => Ok(Expr::HalfDelta(Box::new(self.factor()?), false)),
                _ => self.atom(name, at),
            },
            _ => Err(ParseError {
                at,
                message: "expected a factor".into(),
            }),
        }
    }

    fn atom(&mut self, basis: String, at: usize) -> Result<Expr, ParseError> {
        self.expect(&Token::LBracket, "'[' after basis name")?;
        let mut index = Vec::new();
        let mut bars = Vec::new();
        if matches!(self.peek(), Some(Token::RBracket)) {
            self.bump();
            return Ok(Expr::Atom(Atom {
                basis,
                index,
                bars,
                at,
            }));
        }
        loop {
            let iat = self.here();
            match self.bump() {
                Some(Token::Int(v)) if v >= 1 => index.push(v as u32),
                _ => {
                    return Err(ParseError {
                        at: iat,
                        message: "expected a positive index entry".into(),
                    })
                }
            }
            match self.bump() {
                Some(Token::Comma) => {}
                Some(Token::Bar) => bars.push(index.len()),
                Some(Token::RBracket) => break,
                _ => {
                    return Err(ParseError {
                        at: self.here(),
                        message: "expected ',', '|' or ']'".into(),
                    })
                }
            }
        }
        Ok(Expr::Atom(Atom {
            basis,
            index,
            bars,
            at,
        }))
    }
}
