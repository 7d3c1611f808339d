//! Shared recursive-descent parser for integer polynomial expressions.
//!
//! Grammar (used by variety equations over x0..x8 and zeta literals over T):
//! integer literals, named variables, `+ - * ^`, parentheses, unary minus;
//! `^` binds tightest, then `*`, then `+ -`. Exponents are nonnegative
//! integer literals.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum ExprError {
    Syntax { pos: usize, expected: String },
    UnknownVariable { pos: usize, name: String },
}

/// A normalized sparse polynomial: exponent vector (one entry per variable)
/// to nonzero coefficient.
pub(crate) type SparsePoly = BTreeMap<Vec<u32>, BigInt>;

pub(crate) fn sparse_zero() -> SparsePoly {
    BTreeMap::new()
}

pub(crate) fn sparse_constant(c: BigInt, nvars: usize) -> SparsePoly {
    let mut out = BTreeMap::new();
    if !c.is_zero() {
        out.insert(vec![0; nvars], c);
    }
    out
}

pub(crate) fn sparse_add(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = a.clone();
    for (exps, c) in b {
        let entry = out.entry(exps.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            out.remove(exps);
        }
    }
    out
}

pub(crate) fn sparse_neg(a: &SparsePoly) -> SparsePoly {
    a.iter().map(|(e, c)| (e.clone(), -c)).collect()
}

pub(crate) fn sparse_mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out: SparsePoly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(exps).or_insert_with(BigInt::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub(crate) fn sparse_pow(a: &SparsePoly, mut n: u32, nvars: usize) -> SparsePoly {
    let mut result = sparse_constant(BigInt::from(1), nvars);
    let mut base = a.clone();
    while n > 0 {
        if n & 1 == 1 {
            result = sparse_mul(&result, &base);
        }
        n >>= 1;
        if n > 0 {
            base = sparse_mul(&base, &base);
        }
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    end: usize,
}

fn lex(src: &str) -> Result<Lexer, ExprError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: BigInt = src[start..i].parse().expect("digits parse");
                tokens.push((start, Token::Int(lit)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(ExprError::Syntax {
                    pos: i,
                    expected: "integer, variable, operator, or parenthesis".into(),
                })
            }
        }
    }
    Ok(Lexer {
        tokens,
        end: src.len(),
    })
}

pub(crate) struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    resolve: &'a dyn Fn(&str) -> Option<usize>,
    nvars: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(
        src: &str,
        resolve: &'a dyn Fn(&str) -> Option<usize>,
        nvars: usize,
    ) -> Result<Self, ExprError> {
        let lexer = lex(src)?;
        Ok(Parser {
            tokens: lexer.tokens,
            pos: 0,
            end: lexer.end,
            resolve,
            nvars,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ExprError::Syntax {
                pos: self.here(),
                expected: what.into(),
            })
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.tokens.len()
    }

    pub(crate) fn error_here(&self, expected: &str) -> ExprError {
        ExprError::Syntax {
            pos: self.here(),
            expected: expected.into(),
        }
    }

    pub(crate) fn eat_slash(&mut self) -> Result<(), ExprError> {
        self.expect(&Token::Slash, "'/'")
    }

    pub(crate) fn parse_expr(&mut self) -> Result<SparsePoly, ExprError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = sparse_add(&acc, &rhs);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = sparse_add(&acc, &sparse_neg(&rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<SparsePoly, ExprError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.parse_factor()?;
            acc = sparse_mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<SparsePoly, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            let inner = self.parse_factor()?;
            return Ok(sparse_neg(&inner));
        }
        let mut base = self.parse_atom()?;
        while self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let pos = self.here();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let exp: u32 = n.try_into().map_err(|_| ExprError::Syntax {
                        pos,
                        expected: "nonnegative integer exponent".into(),
                    })?;
                    if exp > MAX_EXPONENT {
                        return Err(ExprError::Syntax {
                            pos,
                            expected: format!("exponent at most {}", MAX_EXPONENT),
                        });
                    }
                    base = sparse_pow(&base, exp, self.nvars);
                }
                _ => {
                    return Err(ExprError::Syntax {
                        pos,
                        expected: "integer exponent after '^'".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<SparsePoly, ExprError> {
        let pos = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(sparse_constant(n, self.nvars)),
            Some(Token::Ident(name)) => match (self.resolve)(&name) {
                Some(idx) => {
                    let mut exps = vec![0u32; self.nvars];
                    exps[idx] = 1;
                    let mut out = BTreeMap::new();
                    out.insert(exps, BigInt::from(1));
                    Ok(out)
                }
                None => Err(ExprError::UnknownVariable { pos, name }),
            },
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(&Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ExprError::Syntax {
                pos,
                expected: "integer, variable, '-', or '('".into(),
            }),
        }
    }
}
