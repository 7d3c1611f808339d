//! Exact arithmetic in F_q = F_{p^e} and its extensions.
//!
//! Elements are dense residue-coefficient vectors modulo a monic irreducible
//! modulus over the prime field. Everything is exact; exponents may be
//! arbitrary nonnegative big integers. `FieldParams` is immutable and can be
//! shared freely between threads; elements are plain data.

use crate::poly::modp;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::sync::atomic::{AtomicU64, Ordering};
use thiserror::Error;

/// Default upper bound on the characteristic.
pub const DEFAULT_PRIME_LIMIT: u64 = 1 << 31;
/// Default cap on the extension degree accepted by `find_irreducible`.
pub const DEFAULT_DEGREE_CAP: u32 = 24;

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NotPrime(u64),
    #[error("p = {0} exceeds the configured prime limit {1}")]
    PrimeTooLarge(u64, u64),
    #[error("extension degree {0} exceeds the cap {1}")]
    CapExceeded(u32, u32),
    #[error("modulus must be monic of degree {expected}")]
    BadModulusShape { expected: u32 },
    #[error("modulus coefficients must be reduced into [0, p)")]
    ModulusNotReduced,
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not match the field shape")]
    BadElement,
}

/// Parameters of F_{p^e}: the prime, the degree, and the monic irreducible
/// modulus (coefficients ascending, constant term first, length e+1).
#[derive(Debug, Clone)]
pub struct FieldParams {
    id: u64,
    p: u64,
    e: u32,
    modulus: Vec<u64>,
}

/// An element of F_{p^e}: exactly e coefficients, each reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: u64,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Monic irreducibility over F_p: f of degree d is irreducible iff
/// gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= d/2.
fn is_irreducible_modp(f: &[u64], p: u64) -> bool {
    let d = match modp::deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    for i in 1..=(d / 2) {
        let exp = BigUint::from(p).pow(i as u32);
        let xpi = modp::pow_mod(&x, &exp, f, p);
        let diff = modp::sub(&xpi, &x, p);
        let g = modp::gcd(&diff, f, p);
        if modp::deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// The first monic irreducible polynomial of degree e over F_p in the
/// element-index order (candidate k has coefficients given by the base-p
/// digits of k, constant term least significant). Deterministic.
pub fn find_irreducible(p: u64, e: u32) -> Result<Vec<u64>, FieldError> {
    find_irreducible_with_cap(p, e, DEFAULT_DEGREE_CAP)
}

pub fn find_irreducible_with_cap(p: u64, e: u32, cap: u32) -> Result<Vec<u64>, FieldError> {
    if !is_prime_u64(p) {
        return Err(FieldError::NotPrime(p));
    }
    if e == 0 || e > cap {
        return Err(FieldError::CapExceeded(e, cap));
    }
    let e = e as usize;
    // odometer over the e lower coefficients, constant term fastest
    let mut digits = vec![0u64; e];
    loop {
        let mut f = digits.clone();
        f.push(1);
        if is_irreducible_modp(&f, p) {
            return Ok(f);
        }
        let mut i = 0;
        loop {
            if i == e {
                unreachable!("an irreducible polynomial of every degree exists over F_p");
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

impl FieldParams {
    /// Build F_{p^e} with an explicit modulus, validating every invariant.
    pub fn new(p: u64, e: u32, modulus: Vec<u64>) -> Result<Self, FieldError> {
        Self::with_limits(p, e, modulus, DEFAULT_PRIME_LIMIT, DEFAULT_DEGREE_CAP)
    }

    pub fn with_limits(
        p: u64,
        e: u32,
        modulus: Vec<u64>,
        prime_limit: u64,
        degree_cap: u32,
    ) -> Result<Self, FieldError> {
        if p > prime_limit {
            return Err(FieldError::PrimeTooLarge(p, prime_limit));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 || e > degree_cap {
            return Err(FieldError::CapExceeded(e, degree_cap));
        }
        if modulus.len() != e as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulusShape { expected: e });
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::ModulusNotReduced);
        }
        if !is_irreducible_modp(&modulus, p) {
            return Err(FieldError::ReducibleModulus);
        }
        Ok(FieldParams {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            p,
            e,
            modulus,
        })
    }

    /// Build F_{p^e} on the deterministic modulus from `find_irreducible`.
    pub fn generate(p: u64, e: u32) -> Result<Self, FieldError> {
        let modulus = find_irreducible(p, e)?;
        Self::new(p, e, modulus)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// q = p^e.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.e)
    }

    fn wrap(&self, coeffs: Vec<u64>) -> FieldElement {
        debug_assert_eq!(coeffs.len(), self.e as usize);
        debug_assert!(coeffs.iter().all(|&c| c < self.p));
        FieldElement {
            field: self.id,
            coeffs,
        }
    }

    fn check(&self, a: &FieldElement) -> Result<(), FieldError> {
        if a.field != self.id {
            return Err(FieldError::FieldMismatch);
        }
        if a.coeffs.len() != self.e as usize {
            return Err(FieldError::BadElement);
        }
        Ok(())
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(vec![0; self.e as usize])
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The residue class of x (zero in degree-1 fields, where x ≡ -modulus[0]).
    pub fn generator(&self) -> FieldElement {
        if self.e == 1 {
            self.from_u64(self.p - self.modulus[0])
        } else {
            let mut c = vec![0; self.e as usize];
            c[1] = 1;
            self.wrap(c)
        }
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut c = vec![0; self.e as usize];
        c[0] = n % self.p;
        self.wrap(c)
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let p = BigInt::from(self.p);
        let mut r = n.mod_floor(&p);
        if r.is_negative() {
            r += &p;
        }
        self.from_u64(r.to_u64().expect("reduced residue fits u64"))
    }

    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(FieldError::BadElement);
        }
        Ok(self.wrap(coeffs))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_raw(&a.coeffs, &b.coeffs)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.sub_raw(&a.coeffs, &b.coeffs)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_raw(&a.coeffs, &b.coeffs)))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        let inv = self.inv_raw(&b.coeffs).ok_or(FieldError::DivisionByZero)?;
        Ok(self.wrap(self.mul_raw(&a.coeffs, &inv)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        let inv = self.inv_raw(&a.coeffs).ok_or(FieldError::DivisionByZero)?;
        Ok(self.wrap(inv))
    }

    /// a^exp for an arbitrary nonnegative big-integer exponent.
    pub fn pow(&self, a: &FieldElement, exp: &BigUint) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        Ok(self.wrap(self.pow_raw(&a.coeffs, exp)))
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    /// All q elements, each exactly once, in ascending element-index order
    /// (the index of an element is sum of coeffs[i]·p^i).
    pub fn enumerate(&self) -> ElementIter<'_> {
        ElementIter {
            field: self,
            digits: vec![0; self.e as usize],
            done: false,
        }
    }

    // ---- raw coefficient-vector arithmetic (hot paths) ----

    pub(crate) fn zero_raw(&self) -> Vec<u64> {
        vec![0; self.e as usize]
    }

    pub(crate) fn is_zero_raw(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub(crate) fn from_u64_raw(&self, n: u64) -> Vec<u64> {
        let mut c = vec![0; self.e as usize];
        c[0] = n % self.p;
        c
    }

    pub(crate) fn add_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
            .collect()
    }

    pub(crate) fn sub_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| if x >= y { x - y } else { x + self.p - y })
            .collect()
    }

    pub(crate) fn neg_raw(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .map(|&x| if x == 0 { 0 } else { self.p - x })
            .collect()
    }

    pub(crate) fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let e = self.e as usize;
        let p = self.p as u128;
        if e == 1 {
            return vec![((a[0] as u128 * b[0] as u128) % p) as u64];
        }
        let mut acc = vec![0u128; 2 * e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u128 * y as u128;
            }
        }
        // fold x^i = x^(i-e)·(-modulus) for i from the top down
        for i in (e..2 * e - 1).rev() {
            let c = acc[i] % p;
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus.iter().enumerate().take(e) {
                if m != 0 {
                    acc[i - e + j] += c * (self.p - m) as u128;
                }
            }
        }
        acc.truncate(e);
        acc.iter().map(|&c| (c % p) as u64).collect()
    }

    pub(crate) fn inv_raw(&self, a: &[u64]) -> Option<Vec<u64>> {
        if self.is_zero_raw(a) {
            return None;
        }
        let mut trimmed = a.to_vec();
        modp::trim(&mut trimmed);
        let (g, s, _) = modp::ext_gcd(&trimmed, &self.modulus, self.p);
        debug_assert_eq!(modp::deg(&g), Some(0));
        let mut out = modp::divrem(&s, &self.modulus, self.p).1;
        out.resize(self.e as usize, 0);
        Some(out)
    }

    pub(crate) fn pow_raw(&self, a: &[u64], exp: &BigUint) -> Vec<u64> {
        if exp.is_zero() {
            return self.from_u64_raw(1);
        }
        let mut result = self.from_u64_raw(1);
        let bits = exp.bits();
        for i in (0..bits).rev() {
            result = self.mul_raw(&result, &result);
            if exp.bit(i) {
                result = self.mul_raw(&result, a);
            }
        }
        result
    }

    /// Decode an element index (< p^e) into its coefficient vector.
    pub(crate) fn element_from_index(&self, mut idx: u64) -> Vec<u64> {
        let mut c = vec![0; self.e as usize];
        for slot in c.iter_mut() {
            *slot = idx % self.p;
            idx /= self.p;
        }
        debug_assert_eq!(idx, 0, "index out of range for the field size");
        c
    }
}

pub struct ElementIter<'a> {
    field: &'a FieldParams,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for ElementIter<'_> {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        if self.done {
            return None;
        }
        let out = self.field.wrap(self.digits.clone());
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.field.p {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}
