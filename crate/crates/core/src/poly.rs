//! Dense univariate polynomials with exact coefficients.
//!
//! `ZPoly` stores `BigInt` coefficients in ascending degree order; the
//! representation is canonical (no trailing zeros, the zero polynomial is the
//! empty vector). `QPoly` is the rational analogue used where divisions are
//! unavoidable (Sturm chains, gcd normalization). The `modp` submodule holds
//! the small `u64` arithmetic over prime fields that the factorizer and field
//! construction share.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial over the integers, coefficients ascending, canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly { coeffs: vec![c] }.trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        ZPoly { coeffs }.trimmed()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        }
        .trimmed()
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divide every coefficient by `k`, which must divide exactly.
    pub fn divexact_scalar(&self, k: &BigInt) -> ZPoly {
        assert!(!k.is_zero());
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "coefficient not divisible");
                    q
                })
                .collect(),
        }
    }

    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let c = self.content();
        self.divexact_scalar(&c)
    }

    /// T ↦ T^k substitution.
    pub fn substitute_power(&self, k: usize) -> ZPoly {
        assert!(k >= 1);
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.degree() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        ZPoly { coeffs }.trimmed()
    }

    /// T^deg · P(1/T): the coefficient list reversed.
    pub fn reversed(&self) -> ZPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        ZPoly { coeffs }.trimmed()
    }

    /// Quotient and remainder by a monic divisor, exact over the integers.
    pub fn divrem_monic(&self, d: &ZPoly) -> (ZPoly, ZPoly) {
        assert!(d.leading().is_one(), "divisor must be monic");
        let dd = d.degree();
        if self.coeffs.len() <= dd {
            return (ZPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        rem.truncate(dd);
        (ZPoly { coeffs: quo }.trimmed(), ZPoly { coeffs: rem }.trimmed())
    }

    /// Exact division; returns None when the divisor does not divide self over ℤ.
    pub fn divexact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let dd = d.degree();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly { coeffs: quo }.trimmed())
    }

    /// Primitive gcd over ℤ, sign-normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.sign_normalized();
        }
        if other.is_zero() {
            return self.sign_normalized();
        }
        let ca = self.content();
        let cb = other.content();
        let mut a = self.divexact_scalar(&ca);
        let mut b = other.divexact_scalar(&cb);
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // primitive PRS: pseudo-remainder, then strip the content each step
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.sign_normalized().scale(&ca.gcd(&cb))
    }

    fn sign_normalized(&self) -> ZPoly {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Pseudo-remainder of self by d (lc(d)^(deg diff + 1) · self mod d).
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree();
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut i = rem.len();
        while i > dd {
            i -= 1;
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            for r in rem.iter_mut() {
                *r *= &lead;
            }
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                    rem[i - dd + j] -= &c * dc;
                }
            }
        }
        ZPoly { coeffs: rem }.trimmed()
    }

    /// Truncated product: self · other mod T^(n+1).
    pub fn mul_truncated(&self, other: &ZPoly, n: usize) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(n + 1);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        ZPoly { coeffs: out }.trimmed()
    }

    /// Coefficients 0..=n of the power series self / other, which requires
    /// other(0) = ±1 so that the expansion stays integral.
    pub fn series_div(&self, other: &ZPoly, n: usize) -> Vec<BigInt> {
        let d0 = other.coeff(0);
        assert!(
            d0.is_one() || (-&d0).is_one(),
            "series division needs a unit constant term"
        );
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeff(k);
            for j in 1..=k.min(other.degree()) {
                acc -= other.coeff(j) * &out[k - j];
            }
            // d0 = ±1
            out.push(if d0.is_one() { acc } else { -acc });
        }
        out
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({})", self)
    }
}

/// Renders in the CLI literal grammar, e.g. `1 - 2*T + 5*T^2`.
impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "T")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, other: &ZPoly) -> ZPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        ZPoly { coeffs }.trimmed()
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, other: &ZPoly) -> ZPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        ZPoly { coeffs }.trimmed()
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ZPoly { coeffs }.trimmed()
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Polynomial over the rationals, same conventions as `ZPoly`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        QPoly { coeffs }.trimmed()
    }

    pub fn from_z(p: &ZPoly) -> Self {
        QPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        }
        .trimmed()
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        if k.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn divrem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero());
        let dd = d.degree();
        if self.coeffs.len() < d.coeffs.len() {
            return (QPoly::zero(), self.clone());
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigRational::zero()) / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * dc;
            }
            quo[i - dd] = q;
        }
        rem.truncate(dd);
        (QPoly { coeffs: quo }.trimmed(), QPoly { coeffs: rem }.trimmed())
    }

    /// Monic gcd over ℚ.
    pub fn gcd_monic(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.recip())
    }

    /// Integer polynomial equal to self, if all coefficients are integral.
    pub fn to_z(&self) -> Option<ZPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(ZPoly::from_coeffs(coeffs))
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly { coeffs }.trimmed()
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, other: &QPoly) -> QPoly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly { coeffs }.trimmed()
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Arithmetic for polynomials over 𝔽_p with word-sized coefficients
/// (p < 2^31, so products fit in u128 accumulators). Coefficients ascending,
/// trailing zeros trimmed.
pub(crate) mod modp {
    use num_bigint::BigUint;
    use num_traits::Zero;

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn deg(v: &[u64]) -> Option<usize> {
        if v.is_empty() {
            None
        } else {
            Some(v.len() - 1)
        }
    }

    pub fn inv_scalar(a: u64, p: u64) -> u64 {
        // extended Euclid on signed words
        let (mut t, mut new_t): (i128, i128) = (0, 1);
        let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        assert!(r == 1, "not invertible");
        (t.rem_euclid(p as i128)) as u64
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, &c) in a.iter().enumerate() {
            out[i] = c;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i] = (out[i] + c) % p;
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, &c) in a.iter().enumerate() {
            out[i] = c;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i] = (out[i] + p - c) % p;
        }
        trim(&mut out);
        out
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut acc = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                // p < 2^31 keeps each product < 2^62; the u128 sum cannot overflow
                acc[i + j] += (x as u128) * (y as u128);
            }
        }
        let mut out: Vec<u64> = acc.iter().map(|&c| (c % p as u128) as u64).collect();
        trim(&mut out);
        out
    }

    pub fn scale(a: &[u64], k: u64, p: u64) -> Vec<u64> {
        let mut out: Vec<u64> = a
            .iter()
            .map(|&c| ((c as u128 * k as u128) % p as u128) as u64)
            .collect();
        trim(&mut out);
        out
    }

    pub fn make_monic(a: &[u64], p: u64) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => scale(a, inv_scalar(lead, p), p),
        }
    }

    pub fn divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        assert!(!d.is_empty());
        if a.len() < d.len() {
            return (Vec::new(), a.to_vec());
        }
        let dd = d.len() - 1;
        let lead_inv = inv_scalar(d[dd], p);
        let mut rem = a.to_vec();
        let mut quo = vec![0u64; a.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = (rem[i] as u128 * lead_inv as u128 % p as u128) as u64;
            rem[i] = 0;
            if q == 0 {
                continue;
            }
            for j in 0..dd {
                let t = (q as u128 * d[j] as u128) % p as u128;
                rem[i - dd + j] = ((rem[i - dd + j] as u128 + p as u128 - t) % p as u128) as u64;
            }
            quo[i - dd] = q;
        }
        rem.truncate(dd);
        trim(&mut rem);
        trim(&mut quo);
        (quo, rem)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        while !b.is_empty() {
            let r = divrem(&a, &b, p).1;
            a = b;
            b = r;
        }
        make_monic(&a, p)
    }

    /// Extended gcd: returns (g, s, t) with s·a + t·b = g, g monic.
    pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.last() {
            None => (Vec::new(), Vec::new(), Vec::new()),
            Some(&lead) => {
                let inv = inv_scalar(lead, p);
                (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
            }
        }
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        if a.len() <= 1 {
            return Vec::new();
        }
        let mut out: Vec<u64> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u128 % p as u128) * c as u128 % p as u128) as u64)
            .collect();
        trim(&mut out);
        out
    }

    /// base^exp mod (m, p) by square-and-multiply over a big exponent.
    pub fn pow_mod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> Vec<u64> {
        assert!(deg(modulus).map_or(false, |d| d >= 1));
        let mut result = vec![1u64];
        if exp.is_zero() {
            return result;
        }
        let b = divrem(base, modulus, p).1;
        let bits = exp.bits();
        for i in (0..bits).rev() {
            result = divrem(&mul(&result, &result, p), modulus, p).1;
            if exp.bit(i) {
                result = divrem(&mul(&result, &b, p), modulus, p).1;
            }
        }
        result
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        let mut acc: u128 = 0;
        for &c in a.iter().rev() {
            acc = (acc * x as u128 + c as u128) % p as u128;
        }
        acc as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_i64(v)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        let p = zp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert!(zp(&[0, 0]).is_zero());
    }

    #[test]
    fn mul_and_divexact_round_trip() {
        let a = zp(&[1, -2]);
        let b = zp(&[1, 0, 3]);
        let prod = &a * &b;
        assert_eq!(prod.divexact(&a).unwrap(), b);
        assert_eq!(prod.divexact(&b).unwrap(), a);
        assert!(prod.divexact(&zp(&[1, 1])).is_none());
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = &zp(&[1, -1]) * &zp(&[1, 2]);
        let b = &zp(&[1, -1]) * &zp(&[1, 0, 5]);
        let g = a.gcd(&b);
        assert_eq!(g, zp(&[-1, 1]).sign_normalized());
        assert_eq!(g, zp(&[1, -1]).sign_normalized());
    }

    #[test]
    fn series_division_matches_geometric_series() {
        // 1/(1-2T) = 1 + 2T + 4T^2 + ...
        let s = ZPoly::one().series_div(&zp(&[1, -2]), 4);
        let want: Vec<BigInt> = [1, 2, 4, 8, 16].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(s, want);
    }

    #[test]
    fn display_literal_grammar() {
        assert_eq!(zp(&[1, -2, 5]).to_string(), "1 - 2*T + 5*T^2");
        assert_eq!(zp(&[1, 1]).to_string(), "1 + T");
        assert_eq!(zp(&[1, 0, -1]).to_string(), "1 - T^2");
        assert_eq!(ZPoly::one().to_string(), "1");
    }

    #[test]
    fn qpoly_divrem_and_gcd() {
        let a = QPoly::from_z(&zp(&[2, 3, 1])); // (T+1)(T+2)
        let b = QPoly::from_z(&zp(&[1, 1]));
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, QPoly::from_z(&zp(&[2, 1])));
        let g = a.gcd_monic(&b);
        assert_eq!(g, QPoly::from_z(&zp(&[1, 1])));
    }

    #[test]
    fn modp_ext_gcd_bezout() {
        let p = 7;
        let a = vec![1, 0, 1]; // x^2 + 1
        let b = vec![1, 1]; // x + 1
        let (g, s, t) = modp::ext_gcd(&a, &b, p);
        let lhs = modp::add(&modp::mul(&s, &a, p), &modp::mul(&t, &b, p), p);
        assert_eq!(lhs, g);
    }

    #[test]
    fn modp_pow_mod_fermat() {
        // x^p ≡ x mod (irreducible of degree 1 shifted): check small case
        let p = 5;
        let m = vec![2, 0, 1]; // x^2 + 2, irreducible over F_5
        let x = vec![0, 1];
        let xp = modp::pow_mod(&x, &num_bigint::BigUint::from(25u32), &m, p);
        assert_eq!(xp, x); // x^(p^2) = x in F_25
    }
}
