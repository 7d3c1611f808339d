//! Zeta functions as exact rational functions, and the algebra on them:
//! series from point counts, Padé reconstruction with a validation guard,
//! products over strata, quotients for open complements, ground-field descent
//! by T ↦ T^e, and exact expansion back into count sequences.

use crate::expr::{ExprError, Parser};
use crate::poly::{QPoly, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

pub const DEFAULT_DEGREE_CAP: usize = 24;
pub const DEFAULT_GUARD: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("series coefficient z_{index} is not a nonnegative integer (corrupted counts)")]
    NonIntegralSeries { index: usize },
    #[error("need at least {needed} series terms, have {available}")]
    InsufficientTerms { needed: usize, available: usize },
    #[error("no rational function of total degree <= {cap} matches; best candidate regenerates the series only up to index {matched_up_to}")]
    NoStableFit { cap: usize, matched_up_to: usize },
    #[error("zeta functions live over different ground fields")]
    FieldMismatch,
    #[error("ground field p^{e} does not descend by e' = {e_prime}")]
    BadBaseChange { e: u32, e_prime: u32 },
    #[error("reconstructed rational function is not integral (synthetic series)")]
    NonIntegralZeta,
    #[error("numerator and denominator must have constant term 1")]
    ConstantTermNotOne,
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
}

impl From<ExprError> for ZetaError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Syntax { pos, expected } => ZetaError::Syntax { pos, expected },
            ExprError::UnknownVariable { pos, name } => ZetaError::Syntax {
                pos,
                expected: format!("variable T, found '{}'", name),
            },
        }
    }
}

/// Truncated power series with exact rational coefficients, z_0 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        assert!(
            coeffs.first().map_or(false, |z| z.is_one()),
            "a zeta series starts with z_0 = 1"
        );
        PowerSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Index of the last known coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// A zeta function Z = numerator/denominator with both in 1 + T·ℤ[T],
/// coprime, over the ground field of size q = p^e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFunction {
    num: ZPoly,
    den: ZPoly,
    p: u64,
    e: u32,
}

impl ZetaFunction {
    /// Normalizing constructor: checks constant terms and clears the gcd.
    pub fn new(num: ZPoly, den: ZPoly, p: u64, e: u32) -> Result<Self, ZetaError> {
        if !num.coeff(0).is_one() || !den.coeff(0).is_one() {
            return Err(ZetaError::ConstantTermNotOne);
        }
        let mut g = num.gcd(&den);
        if g.degree() >= 1 {
            // a common divisor of two constant-term-1 polynomials has
            // constant term ±1; normalize to +1 so quotients stay in shape
            if !g.coeff(0).is_one() {
                g = -&g;
            }
            let num = num.divexact(&g).expect("gcd divides");
            let den = den.divexact(&g).expect("gcd divides");
            Ok(ZetaFunction { num, den, p, e })
        } else {
            Ok(ZetaFunction { num, den, p, e })
        }
    }

    pub fn one(p: u64, e: u32) -> Self {
        ZetaFunction {
            num: ZPoly::one(),
            den: ZPoly::one(),
            p,
            e,
        }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// q = p^e as a big integer.
    pub fn q(&self) -> BigInt {
        BigInt::from(self.p).pow(self.e)
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Degree as a rational function: deg(num) - deg(den).
    pub fn rational_degree(&self) -> i64 {
        self.num.degree() as i64 - self.den.degree() as i64
    }

    fn check_same_field(&self, other: &ZetaFunction) -> Result<(), ZetaError> {
        if self.p != other.p || self.e != other.e {
            return Err(ZetaError::FieldMismatch);
        }
        Ok(())
    }

    /// Z(X) = Z(U)·Z(F) for a decomposition into strata.
    pub fn multiply(&self, other: &ZetaFunction) -> Result<ZetaFunction, ZetaError> {
        self.check_same_field(other)?;
        ZetaFunction::new(
            &self.num * &other.num,
            &self.den * &other.den,
            self.p,
            self.e,
        )
    }

    /// Z(U) = Z(X)/Z(F) for the open complement of a closed stratum.
    pub fn divide(&self, other: &ZetaFunction) -> Result<ZetaFunction, ZetaError> {
        self.check_same_field(other)?;
        ZetaFunction::new(
            &self.num * &other.den,
            &self.den * &other.num,
            self.p,
            self.e,
        )
    }

    /// Substitute T ↦ T^e' and descend the recorded ground field from
    /// p^e to p^(e/e'): a variety over the extension viewed over the base.
    pub fn base_change_down(&self, e_prime: u32) -> Result<ZetaFunction, ZetaError> {
        if e_prime == 0 || self.e % e_prime != 0 {
            return Err(ZetaError::BadBaseChange {
                e: self.e,
                e_prime,
            });
        }
        if e_prime == 1 {
            return Ok(self.clone());
        }
        ZetaFunction::new(
            self.num.substitute_power(e_prime as usize),
            self.den.substitute_power(e_prime as usize),
            self.p,
            self.e / e_prime,
        )
    }

    /// N_1..N_M from the logarithmic derivative T·Z'/Z, exactly. Counts may
    /// be negative for synthetic inputs; offending indices are flagged.
    pub fn expand(&self, terms: usize) -> Expansion {
        assert!(terms >= 1);
        let t_num_prime = shift_up(&self.num.derivative());
        let t_den_prime = shift_up(&self.den.derivative());
        // T·f'/f = -Σ_m (power sums of reciprocal roots of f)·T^m
        let from_num = t_num_prime.series_div(&self.num, terms);
        let from_den = t_den_prime.series_div(&self.den, terms);
        let mut counts = Vec::with_capacity(terms);
        let mut negative_indices = Vec::new();
        for m in 1..=terms {
            let n_m = &from_num[m] - &from_den[m];
            if n_m.is_negative() {
                negative_indices.push(m);
            }
            counts.push(n_m);
        }
        Expansion {
            counts,
            negative_indices,
        }
    }
}

/// T·f for a polynomial f.
fn shift_up(f: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return ZPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend(f.coeffs().iter().cloned());
    ZPoly::from_coeffs(coeffs)
}

/// Renders as a parseable zeta literal `(num)/(den)`.
impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Result of expanding a zeta function back into counts N_1..N_M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    /// counts[i] = N_{i+1}.
    pub counts: Vec<BigInt>,
    /// 1-based indices m where N_m < 0 (impossible for genuine varieties).
    pub negative_indices: Vec<usize>,
}

/// z_0 = 1 and n·z_n = Σ_{m=1..n} N_m·z_{n-m}, exactly. Any z_n that is not
/// a nonnegative integer signals corrupted counts.
pub fn series_from_counts(counts: &[BigInt]) -> Result<PowerSeries, ZetaError> {
    assert!(!counts.is_empty(), "need at least one count");
    let mut z: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=counts.len() {
        let mut sum = BigInt::zero();
        for m in 1..=n {
            sum += &counts[m - 1] * &z[n - m];
        }
        let (q, r) = sum.div_rem(&BigInt::from(n as u64));
        if !r.is_zero() || q.is_negative() {
            return Err(ZetaError::NonIntegralSeries { index: n });
        }
        z.push(q);
    }
    Ok(PowerSeries {
        coeffs: z.into_iter().map(BigRational::from_integer).collect(),
    })
}

/// Fraction-free Gaussian elimination (Bareiss) on the row-integerized
/// augmented system; returns a particular solution with free variables set
/// to zero, or None when inconsistent.
fn solve_linear_system(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows == 0 {
        return Some(vec![]);
    }

    // clear denominators per row
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for (row, rhs) in a.iter().zip(b) {
        let mut lcm = BigInt::one();
        for x in row.iter().chain(std::iter::once(rhs)) {
            lcm = lcm.lcm(x.denom());
        }
        let lcm_r = BigRational::from_integer(lcm);
        let mut out: Vec<BigInt> = row.iter().map(|x| (x * &lcm_r).to_integer()).collect();
        out.push((rhs * &lcm_r).to_integer());
        m.push(out);
    }

    // Bareiss forward elimination with column pivot tracking
    let width = cols + 1;
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        for r in rank + 1..rows {
            for c in 0..width {
                if c == col {
                    continue;
                }
                let val = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c])
                    .div_rem(&prev)
                    .0;
                m[r][c] = val;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // inconsistent when a zero row has nonzero rhs
    for r in rank..rows {
        if m[r][..cols].iter().all(|x| x.is_zero()) && !m[r][cols].is_zero() {
            return None;
        }
    }

    // back-substitute over the rationals, free variables zero
    let mut sol = vec![BigRational::zero(); cols];
    for i in (0..rank).rev() {
        let col = pivot_cols[i];
        let mut acc = BigRational::from_integer(m[i][cols].clone());
        for c in col + 1..cols {
            if !m[i][c].is_zero() {
                acc -= BigRational::from_integer(m[i][c].clone()) * &sol[c];
            }
        }
        sol[col] = acc / BigRational::from_integer(m[i][col].clone());
    }
    Some(sol)
}

/// Padé reconstruction by iterative deepening: the smallest total degree D
/// whose [D/D] fit regenerates every provided coefficient (including at
/// least `guard` coefficients beyond the fitting window) wins.
pub fn reconstruct_rational(
    series: &PowerSeries,
    p: u64,
    e: u32,
    degree_cap: usize,
    guard: usize,
) -> Result<ZetaFunction, ZetaError> {
    let z = &series.coeffs;
    let order = series.order();
    if order < 2 + guard {
        return Err(ZetaError::InsufficientTerms {
            needed: 2 + guard + 1,
            available: order + 1,
        });
    }
    let mut best_matched = 0usize;

    for d in 1..=degree_cap {
        if 2 * d + guard > order {
            break;
        }
        // rows k = d+1 .. 2d: sum_{j=1..d} z_{k-j} v_j = -z_k   (v_0 = 1)
        let mut a = Vec::with_capacity(d);
        let mut b = Vec::with_capacity(d);
        for k in d + 1..=2 * d {
            let row: Vec<BigRational> = (1..=d)
                .map(|j| {
                    if k >= j {
                        z[k - j].clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect();
            a.push(row);
            b.push(-z[k].clone());
        }
        let Some(v_tail) = solve_linear_system(&a, &b) else {
            continue;
        };
        let mut v_coeffs = vec![BigRational::one()];
        v_coeffs.extend(v_tail);
        let v = QPoly::from_coeffs(v_coeffs);

        // numerator = (Z·v) truncated at degree d; the tail d+1..2d must
        // vanish by construction
        let mut u_coeffs = vec![BigRational::zero(); d + 1];
        let mut consistent = true;
        for k in 0..=2 * d {
            let mut w = BigRational::zero();
            for j in 0..=k.min(v.degree()) {
                w += v.coeff(j) * &z[k - j];
            }
            if k <= d {
                u_coeffs[k] = w;
            } else if !w.is_zero() {
                consistent = false;
                break;
            }
        }
        if !consistent {
            continue;
        }
        let u = QPoly::from_coeffs(u_coeffs);

        // full regeneration check against every provided coefficient
        let mut regen: Vec<BigRational> = Vec::with_capacity(order + 1);
        let mut matched = 0usize;
        let mut all = true;
        for k in 0..=order {
            let mut s = u.coeff(k);
            for j in 1..=k.min(v.degree()) {
                s -= v.coeff(j) * &regen[k - j];
            }
            if s == z[k] {
                matched += 1;
            } else if all {
                all = false;
            }
            regen.push(s);
            if !all {
                break;
            }
        }
        best_matched = best_matched.max(matched);
        if !all {
            continue;
        }

        // normalize: clear the rational gcd, pin constant terms to 1
        let g = u.gcd_monic(&v);
        let (mut u, mut v) = if g.degree() >= 1 {
            (u.divrem(&g).0, v.divrem(&g).0)
        } else {
            (u, v)
        };
        let v0 = v.coeff(0);
        debug_assert!(!v0.is_zero());
        u = u.scale(&v0.recip());
        v = v.scale(&v0.recip());
        let (Some(num), Some(den)) = (u.to_z(), v.to_z()) else {
            return Err(ZetaError::NonIntegralZeta);
        };
        return ZetaFunction::new(num, den, p, e);
    }

    Err(ZetaError::NoStableFit {
        cap: degree_cap,
        matched_up_to: best_matched.saturating_sub(1),
    })
}

/// Parse a zeta literal `(<poly>)/(<poly>)` in the variable T with integer
/// coefficients and constant terms 1.
pub fn parse_zeta_literal(text: &str, p: u64, e: u32) -> Result<ZetaFunction, ZetaError> {
    let resolve = |name: &str| if name == "T" { Some(0) } else { None };
    let mut parser = Parser::new(text.trim(), &resolve, 1)?;
    let num = parser.parse_expr()?;
    parser.eat_slash()?;
    let den = parser.parse_expr()?;
    if !parser.at_end() {
        return Err(parser.error_here("end of literal").into());
    }
    let to_zpoly = |sparse: std::collections::BTreeMap<Vec<u32>, BigInt>| {
        let deg = sparse.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (exps, c) in sparse {
            coeffs[exps[0] as usize] = c;
        }
        ZPoly::from_coeffs(coeffs)
    };
    ZetaFunction::new(to_zpoly(num), to_zpoly(den), p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_i64(v)
    }

    fn series(v: &[i64]) -> PowerSeries {
        series_from_counts(&big(v)).unwrap()
    }

    fn ints(s: &PowerSeries) -> Vec<BigInt> {
        s.coeffs().iter().map(|z| z.to_integer()).collect()
    }

    #[test]
    fn series_of_projective_line_over_f2() {
        // N_m = 2^m + 1 → 1/((1-T)(1-2T)) = 1 + 3T + 7T^2 + 15T^3 + ...
        let s = series(&[3, 5, 9, 17]);
        assert_eq!(ints(&s), big(&[1, 3, 7, 15, 31]));
    }

    #[test]
    fn series_of_a_rational_point() {
        let s = series(&[1, 1, 1]);
        assert_eq!(ints(&s), big(&[1, 1, 1, 1]));
    }

    #[test]
    fn series_of_two_points_is_square_of_point() {
        let s = series(&[2, 2, 2]);
        assert_eq!(ints(&s), big(&[1, 2, 3, 4])); // 1/(1-T)^2
    }

    #[test]
    fn corrupted_counts_are_rejected() {
        assert_eq!(
            series_from_counts(&big(&[1, 0])),
            Err(ZetaError::NonIntegralSeries { index: 2 })
        );
        assert_eq!(
            series_from_counts(&big(&[-3])),
            Err(ZetaError::NonIntegralSeries { index: 1 })
        );
    }

    fn counts_pow(base: i64, add: i64, m: usize) -> Vec<BigInt> {
        (1..=m)
            .map(|i| BigInt::from(base).pow(i as u32) + BigInt::from(add))
            .collect()
    }

    #[test]
    fn reconstruct_projective_line_over_f5() {
        let counts = counts_pow(5, 1, 8);
        let s = series_from_counts(&counts).unwrap();
        let z = reconstruct_rational(&s, 5, 1, DEFAULT_DEGREE_CAP, DEFAULT_GUARD).unwrap();
        assert_eq!(z.numerator(), &ZPoly::one());
        assert_eq!(z.denominator(), &(&zp(&[1, -1]) * &zp(&[1, -5])));
    }

    #[test]
    fn reconstruct_multiplicative_group() {
        // N_m = 5^m - 1 → (1-T)/(1-5T)
        let counts = counts_pow(5, -1, 8);
        let s = series_from_counts(&counts).unwrap();
        let z = reconstruct_rational(&s, 5, 1, DEFAULT_DEGREE_CAP, DEFAULT_GUARD).unwrap();
        assert_eq!(z.numerator(), &zp(&[1, -1]));
        assert_eq!(z.denominator(), &zp(&[1, -5]));
    }

    #[test]
    fn insufficient_terms_reported() {
        let s = series(&[3, 5, 9]);
        assert!(matches!(
            reconstruct_rational(&s, 2, 1, 24, 4),
            Err(ZetaError::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn no_stable_fit_for_non_rational_series() {
        // factorial-ish growth admits no small rational function
        let coeffs: Vec<BigRational> = [1i64, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800]
            .iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let s = PowerSeries::from_rationals(coeffs);
        assert!(matches!(
            reconstruct_rational(&s, 2, 1, 3, 2),
            Err(ZetaError::NoStableFit { .. })
        ));
    }

    #[test]
    fn multiply_point_and_affine_line_gives_projective_line() {
        let a1 = ZetaFunction::new(ZPoly::one(), zp(&[1, -2]), 2, 1).unwrap();
        let pt = ZetaFunction::new(ZPoly::one(), zp(&[1, -1]), 2, 1).unwrap();
        let p1 = a1.multiply(&pt).unwrap();
        assert_eq!(p1.denominator(), &(&zp(&[1, -1]) * &zp(&[1, -2])));
        assert!(p1.numerator().is_one());
        // identity
        assert_eq!(p1.multiply(&ZetaFunction::one(2, 1)).unwrap(), p1);
    }

    #[test]
    fn multiply_exercises_cancellation() {
        // Z(G_m)·Z(two points) = ((1-T)/(1-qT))·(1/(1-T)^2) = 1/((1-T)(1-qT))
        let gm = ZetaFunction::new(zp(&[1, -1]), zp(&[1, -5]), 5, 1).unwrap();
        let two_pts =
            ZetaFunction::new(ZPoly::one(), &zp(&[1, -1]) * &zp(&[1, -1]), 5, 1).unwrap();
        let prod = gm.multiply(&two_pts).unwrap();
        assert!(prod.numerator().is_one());
        assert_eq!(prod.denominator(), &(&zp(&[1, -1]) * &zp(&[1, -5])));
    }

    #[test]
    fn divide_recovers_affine_line_and_self_division() {
        let p1 = ZetaFunction::new(ZPoly::one(), &zp(&[1, -1]) * &zp(&[1, -4]), 2, 2).unwrap();
        let pt = ZetaFunction::new(ZPoly::one(), zp(&[1, -1]), 2, 2).unwrap();
        let a1 = p1.divide(&pt).unwrap();
        assert!(a1.numerator().is_one());
        assert_eq!(a1.denominator(), &zp(&[1, -4]));
        assert!(p1.divide(&p1).unwrap().is_one());
    }

    #[test]
    fn field_mismatch_detected() {
        let a = ZetaFunction::one(2, 1);
        let b = ZetaFunction::one(3, 1);
        assert_eq!(a.multiply(&b), Err(ZetaError::FieldMismatch));
    }

    #[test]
    fn base_change_point_and_projective_line() {
        // point over F_4 viewed over F_2: 1/(1-T) → 1/(1-T^2)
        let pt = ZetaFunction::new(ZPoly::one(), zp(&[1, -1]), 2, 2).unwrap();
        let down = pt.base_change_down(2).unwrap();
        assert_eq!(down.denominator(), &zp(&[1, 0, -1]));
        assert_eq!(down.e(), 1);
        // e' = 1 is the identity
        assert_eq!(pt.base_change_down(1).unwrap(), pt);
        // P^1 over F_4 viewed over F_2
        let p1 = ZetaFunction::new(ZPoly::one(), &zp(&[1, -1]) * &zp(&[1, -4]), 2, 2).unwrap();
        let down = p1.base_change_down(2).unwrap();
        assert_eq!(
            down.denominator(),
            &(&zp(&[1, 0, -1]) * &zp(&[1, 0, -4]))
        );
        assert!(matches!(
            p1.base_change_down(4),
            Err(ZetaError::BadBaseChange { .. })
        ));
    }

    #[test]
    fn expand_examples() {
        let p1 = ZetaFunction::new(ZPoly::one(), &zp(&[1, -1]) * &zp(&[1, -2]), 2, 1).unwrap();
        assert_eq!(p1.expand(3).counts, big(&[3, 5, 9]));

        let gm = ZetaFunction::new(zp(&[1, -1]), zp(&[1, -5]), 5, 1).unwrap();
        assert_eq!(gm.expand(2).counts, big(&[4, 24]));

        // synthetic input with negative expansion
        let synth = ZetaFunction::new(zp(&[1, -3]), zp(&[1, -1]), 5, 1).unwrap();
        let exp = synth.expand(2);
        assert_eq!(exp.counts, big(&[-2, -8]));
        assert_eq!(exp.negative_indices, vec![1, 2]);
    }

    #[test]
    fn round_trip_expand_after_reconstruct() {
        let counts = counts_pow(3, 1, 9);
        let s = series_from_counts(&counts).unwrap();
        let z = reconstruct_rational(&s, 3, 1, 24, 4).unwrap();
        assert_eq!(z.expand(9).counts, counts);
    }

    #[test]
    fn degree_additive_under_multiply() {
        let a = ZetaFunction::new(zp(&[1, -1]), &zp(&[1, -3]) * &zp(&[1, -9]), 3, 1).unwrap();
        let b = ZetaFunction::new(ZPoly::one(), zp(&[1, -1]), 3, 1).unwrap();
        let prod = a.multiply(&b).unwrap();
        assert_eq!(
            prod.rational_degree(),
            a.rational_degree() + b.rational_degree()
        );
    }

    #[test]
    fn literal_round_trip() {
        let z = parse_zeta_literal("(1 - 2*T)/((1 - T)*(1 - 4*T))", 2, 2).unwrap();
        assert_eq!(z.numerator(), &zp(&[1, -2]));
        assert_eq!(z.denominator(), &zp(&[1, -5, 4]));
        let reparsed = parse_zeta_literal(&z.to_string(), 2, 2).unwrap();
        assert_eq!(reparsed, z);
    }

    #[test]
    fn literal_requires_constant_term_one() {
        assert_eq!(
            parse_zeta_literal("(T)/(1 - T)", 2, 1),
            Err(ZetaError::ConstantTermNotOne)
        );
    }

    #[test]
    fn literal_reduces_common_factors() {
        let z = parse_zeta_literal("((1 - T)*(1 - 2*T))/((1 - T)*(1 - 4*T))", 2, 2).unwrap();
        assert_eq!(z.numerator(), &zp(&[1, -2]));
        assert_eq!(z.denominator(), &zp(&[1, -4]));
    }
}
