//! Textual variety descriptions, brute-force point counting over F_{q^m},
//! and the persistent count cache.
//!
//! A variety file is a header `p=<int> e=<int> <affine|projective> n=<int>`
//! followed by equation lines `<name>: <polynomial>` with integer
//! coefficients in the variables x0..x8. Coefficients are integers reduced
//! mod p at evaluation time, so every system is defined over the prime
//! field; `e` declares the ground field F_q = F_{p^e} the variety is viewed
//! over.

mod cache;
mod count;

pub use cache::read_cached_counts;
pub use count::{count_points, count_series, naive_count_points, CountOptions, CountSeries};

use crate::expr::{ExprError, Parser, SparsePoly};
use crate::field::{is_prime_u64, FieldError};
use num_bigint::BigInt;
use num_traits::Zero;
use sha2::{Digest, Sha256};
use std::fmt;
use thiserror::Error;

pub const DEFAULT_MAX_VARIABLES: usize = 8;

#[derive(Debug, Error)]
pub enum VarietyError {
    #[error("syntax error at line {line}, column {col}: expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },
    #[error("unknown variable '{name}' at line {line}, column {col}")]
    UnknownVariable {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("equation '{equation}' is not homogeneous: monomial {monomial_a} vs {monomial_b}")]
    NonHomogeneous {
        equation: String,
        monomial_a: String,
        monomial_b: String,
    },
    #[error("bad field parameters: p = {0} is not prime")]
    BadFieldParams(u64),
    #[error("{vars} variables exceed the cap of {cap}")]
    TooManyVariables { vars: usize, cap: usize },
    #[error("enumeration budget exceeded: needs {required} candidate tuples, budget {budget}; largest feasible term count {feasible_terms}")]
    BudgetExceeded {
        required: u128,
        budget: u64,
        feasible_terms: usize,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Affine(u32),
    Projective(u32),
}

impl Ambient {
    /// Number of coordinate variables: n for affine space, n+1 for P^n.
    pub fn variables(&self) -> usize {
        match self {
            Ambient::Affine(n) => *n as usize,
            Ambient::Projective(n) => *n as usize + 1,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Affine(n) => write!(f, "affine n={}", n),
            Ambient::Projective(n) => write!(f, "projective n={}", n),
        }
    }
}

/// One polynomial equation: canonically ordered sparse terms
/// (coefficient, exponent vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub terms: Vec<(BigInt, Vec<u32>)>,
}

impl Equation {
    fn from_sparse(name: String, sparse: SparsePoly) -> Self {
        Equation {
            name,
            terms: sparse.into_iter().map(|(e, c)| (c, e)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn monomial_string(exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i)),
            _ => parts.push(format!("x{}^{}", i, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// A parsed and validated polynomial system over F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietySpec {
    pub p: u64,
    pub e: u32,
    pub ambient: Ambient,
    pub equations: Vec<Equation>,
    pub name: String,
}

impl VarietySpec {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn variables(&self) -> usize {
        self.ambient.variables()
    }

    /// Stable content digest (display name excluded): identical systems over
    /// identical fields share cache entries.
    pub fn digest(&self) -> String {
        let mut canon = format!("p={};e={};{};", self.p, self.e, self.ambient);
        for eq in &self.equations {
            canon.push_str("eq:");
            for (c, exps) in &eq.terms {
                canon.push_str(&format!("{}@{:?};", c, exps));
            }
        }
        let hash = Sha256::digest(canon.as_bytes());
        hash.iter().map(|b| format!("{:02x}", b)).collect()
    }

    /// The closed hyperplane section x_k = 0 as a variety over the same
    /// field: the original system plus the linear equation x_k.
    pub fn hyperplane_section(&self, k: usize) -> VarietySpec {
        assert!(matches!(self.ambient, Ambient::Projective(_)));
        assert!(k < self.variables());
        let mut exps = vec![0u32; self.variables()];
        exps[k] = 1;
        let mut equations = self.equations.clone();
        equations.push(Equation {
            name: format!("hyperplane_x{}", k),
            terms: vec![(BigInt::from(1), exps)],
        });
        VarietySpec {
            p: self.p,
            e: self.e,
            ambient: self.ambient,
            equations,
            name: format!("{} ∩ {{x{}=0}}", self.name, k),
        }
    }

    /// The open complement of x_k = 0 as the affine chart x_k = 1, with the
    /// remaining coordinates renumbered x0..x_{n-1}.
    pub fn affine_chart(&self, k: usize) -> VarietySpec {
        let Ambient::Projective(n) = self.ambient else {
            panic!("affine charts only make sense for projective ambients");
        };
        assert!(k < self.variables());
        let mut equations = Vec::new();
        for eq in &self.equations {
            let mut sparse: SparsePoly = std::collections::BTreeMap::new();
            for (c, exps) in &eq.terms {
                let new_exps: Vec<u32> = exps
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k)
                    .map(|(_, &e)| e)
                    .collect();
                let entry = sparse.entry(new_exps).or_insert_with(BigInt::zero);
                *entry += c;
            }
            sparse.retain(|_, c| !c.is_zero());
            let eq = Equation::from_sparse(eq.name.clone(), sparse);
            if !eq.is_zero() {
                equations.push(eq);
            }
        }
        VarietySpec {
            p: self.p,
            e: self.e,
            ambient: Ambient::Affine(n),
            equations,
            name: format!("{} ∖ {{x{}=0}}", self.name, k),
        }
    }
}

pub fn parse_variety(text: &str) -> Result<VarietySpec, VarietyError> {
    parse_variety_with_cap(text, DEFAULT_MAX_VARIABLES)
}

pub fn parse_variety_with_cap(text: &str, max_vars: usize) -> Result<VarietySpec, VarietyError> {
    let mut lines = text.lines().enumerate();

    // header: p=<int> e=<int> <affine|projective> n=<int>
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| VarietyError::Syntax {
            line: 1,
            col: 1,
            expected: "header line 'p=<int> e=<int> <affine|projective> n=<int>'".into(),
        })?;
    let header_line = header_line + 1;

    let mut tokens = Vec::new();
    let mut offset = 0;
    for tok in header.split_whitespace() {
        let col = header[offset..].find(tok).unwrap() + offset;
        tokens.push((col + 1, tok));
        offset = col + tok.len();
    }
    let syntax = |col: usize, expected: &str| VarietyError::Syntax {
        line: header_line,
        col,
        expected: expected.into(),
    };
    if tokens.len() != 4 {
        return Err(syntax(
            header.len() + 1,
            "header 'p=<int> e=<int> <affine|projective> n=<int>'",
        ));
    }
    let key_value = |idx: usize, key: &str| -> Result<u64, VarietyError> {
        let (col, tok) = tokens[idx];
        let prefix = format!("{}=", key);
        let value = tok
            .strip_prefix(&prefix)
            .ok_or_else(|| syntax(col, &format!("'{}=<int>'", key)))?;
        value
            .parse::<u64>()
            .map_err(|_| syntax(col, &format!("integer value for {}", key)))
    };
    let p = key_value(0, "p")?;
    let e = key_value(1, "e")?;
    let ambient_kind = tokens[2].1;
    let n = key_value(3, "n")?;

    if !is_prime_u64(p) {
        return Err(VarietyError::BadFieldParams(p));
    }
    if e == 0 || e > u64::from(u32::MAX) {
        return Err(syntax(tokens[1].0, "extension degree e >= 1"));
    }
    let ambient = match ambient_kind {
        "affine" => Ambient::Affine(n as u32),
        "projective" => Ambient::Projective(n as u32),
        _ => return Err(syntax(tokens[2].0, "'affine' or 'projective'")),
    };
    let nvars = ambient.variables();
    if nvars > max_vars {
        return Err(VarietyError::TooManyVariables {
            vars: nvars,
            cap: max_vars,
        });
    }

    // equation lines: <name>: <polynomial>
    let mut equations = Vec::new();
    for (line_idx, line) in lines {
        let line_no = line_idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let colon = line.find(':').ok_or_else(|| VarietyError::Syntax {
            line: line_no,
            col: line.len() + 1,
            expected: "':' after the equation name".into(),
        })?;
        let name = line[..colon].trim();
        let valid_name = !name.is_empty()
            && name
                .chars()
                .next()
                .map_or(false, |c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_name {
            return Err(VarietyError::Syntax {
                line: line_no,
                col: 1,
                expected: "equation name (identifier)".into(),
            });
        }
        let expr_src = &line[colon + 1..];
        let expr_offset = colon + 1;

        let resolve = |ident: &str| -> Option<usize> {
            let digits = ident.strip_prefix('x')?;
            if digits.is_empty() || digits.len() > 1 || !digits.chars().all(|c| c.is_ascii_digit())
            {
                return None;
            }
            let idx: usize = digits.parse().ok()?;
            if idx < nvars {
                Some(idx)
            } else {
                None
            }
        };
        let map_err = |err: ExprError| match err {
            ExprError::Syntax { pos, expected } => VarietyError::Syntax {
                line: line_no,
                col: expr_offset + pos + 1,
                expected,
            },
            ExprError::UnknownVariable { pos, name } => VarietyError::UnknownVariable {
                line: line_no,
                col: expr_offset + pos + 1,
                name,
            },
        };
        let mut parser = Parser::new(expr_src, &resolve, nvars).map_err(map_err)?;
        let sparse = parser.parse_expr().map_err(map_err)?;
        if !parser.at_end() {
            return Err(map_err(parser.error_here("end of equation")));
        }
        let equation = Equation::from_sparse(name.to_string(), sparse);

        // projective systems must be homogeneous
        if let Ambient::Projective(_) = ambient {
            let mut degrees = equation
                .terms
                .iter()
                .map(|(_, exps)| (exps, exps.iter().sum::<u32>()));
            if let Some((first_exps, first_deg)) = degrees.next() {
                if let Some((bad_exps, _)) =
                    degrees.find(|(_, deg)| *deg != first_deg)
                {
                    return Err(VarietyError::NonHomogeneous {
                        equation: equation.name.clone(),
                        monomial_a: monomial_string(first_exps),
                        monomial_b: monomial_string(bad_exps),
                    });
                }
            }
        }
        equations.push(equation);
    }

    Ok(VarietySpec {
        p,
        e: e as u32,
        ambient,
        equations,
        name: String::new(),
    })
}
