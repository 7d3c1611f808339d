//! Weil weight classification of zeta factors.
//!
//! An algebraic integer α has weight r for q when every complex embedding
//! satisfies σ(α)·conj(σ(α)) = q^r. At the level of irreducible integer
//! polynomials h ∈ 1 + T·ℤ[T] this becomes fully decidable with exact
//! arithmetic: the leading coefficient pins the only possible weight, the
//! coefficient functional equation a_d·a_j = q^(rj)·a_(d-j) certifies that
//! reciprocal roots pair β ↔ q^r/β, and a Sturm count of the trace
//! polynomial inside (-2√(q^r), 2√(q^r)) certifies that every pair is a
//! complex-conjugate pair on the circle |β| = q^(r/2).

use crate::factor::{canonical_factor_sort, factor_integer_poly, FactorError};
use crate::poly::{QPoly, ZPoly};
use crate::slopes::{newton_polygon, SlopeMultiset};
use crate::sturm::{count_roots_in_symmetric_interval, eval_at_sqrt_multiple};
use crate::zeta::{ZetaError, ZetaFunction};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("candidate weight of {factor} is {got:?}, not the requested {requested}")]
    NotPrechecked {
        factor: String,
        requested: u32,
        got: Option<u32>,
    },
    #[error("factor {factor} is not pure of weight {requested}")]
    NotPure { factor: String, requested: u32 },
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

/// q^r as a big integer for the ground field p^e.
fn q_pow_r(p: u64, e: u32, r: u32) -> BigInt {
    BigInt::from(p).pow(e * r)
}

/// Largest j with p^j dividing |n| exactly, or None when |n| is not a pure
/// power of p (n = ±1 gives Some(0)).
fn pure_power_exponent(n: &BigInt, p: u64) -> Option<u64> {
    let mut n = n.abs();
    let p = BigInt::from(p);
    let mut j = 0u64;
    while n > BigInt::one() {
        let (q, rem) = num_integer::Integer::div_rem(&n, &p);
        if !rem.is_zero() {
            return None;
        }
        j += 1;
        n = q;
    }
    Some(j)
}

/// The only weight an irreducible factor can carry: the unique r ≥ 0 with
/// lead(h)² = q^(r·deg h), read off the pure p-power shape of the leading
/// coefficient. None when no such integer exists.
pub fn candidate_weight(h: &ZPoly, p: u64, e: u32) -> Option<u32> {
    let d = h.degree() as u64;
    assert!(d >= 1, "weight classification needs degree >= 1");
    debug_assert!(h.coeff(0).is_one());
    let j = pure_power_exponent(&h.leading(), p)?;
    let denom = e as u64 * d;
    if (2 * j) % denom != 0 {
        return None;
    }
    u32::try_from(2 * j / denom).ok()
}

/// Exact purity test: every reciprocal root of h has modulus q^(r/2).
///
/// Requires the candidate weight to match r (call after `candidate_weight`).
pub fn is_pure_weight(h: &ZPoly, p: u64, e: u32, r: u32) -> Result<bool, WeightError> {
    let got = candidate_weight(h, p, e);
    if got != Some(r) {
        return Err(WeightError::NotPrechecked {
            factor: h.to_string(),
            requested: r,
            got,
        });
    }
    Ok(pure_weight_inner(h, p, e, r))
}

fn pure_weight_inner(h: &ZPoly, p: u64, e: u32, r: u32) -> bool {
    let d = h.degree();
    let c = q_pow_r(p, e, r);

    // degree-1 factors 1 ∓ sT with s² = q^r are exactly the ±√(q^r) cases
    if d == 1 {
        return true;
    }
    // the quadratic with reciprocal roots ±√(q^r) (irreducible when q^r is
    // not a perfect square)
    if d == 2 && h.coeff(1).is_zero() && h.coeff(2) == -&c {
        return true;
    }

    // functional equation a_d·a_j = q^(rj)·a_(d-j): reciprocal roots pair
    // β ↔ q^r/β as a multiset
    let lead = h.leading();
    let mut cj = BigInt::one();
    for j in 0..=d {
        if &lead * h.coeff(j) != &cj * h.coeff(d - j) {
            return false;
        }
        cj *= &c;
    }

    // a fixed-point-free involution forces even degree, and the leading
    // coefficient must be +q^(r·d/2); the sign -q^(r·d/2) would put ±√(q^r)
    // among the reciprocal roots, excluded above
    if d % 2 != 0 {
        return false;
    }
    let n = d / 2;
    if lead != c.clone().pow(n as u32) {
        return false;
    }

    // trace polynomial: with u = β + q^r/β,
    // h reversed/monic factors through P_tr(u) = a_n + Σ a_(n-i)·W_i(u),
    // W_0 = 2, W_1 = u, W_(i+1) = u·W_i - q^r·W_(i-1)
    let u_poly = ZPoly::from_i64(&[0, 1]);
    let mut w_prev = ZPoly::from_i64(&[2]);
    let mut w_cur = u_poly.clone();
    let mut trace = ZPoly::constant(h.coeff(n));
    for i in 1..=n {
        trace = &trace + &w_cur.scale(&h.coeff(n - i));
        if i < n {
            let w_next = &(&u_poly * &w_cur) - &w_prev.scale(&c);
            w_prev = std::mem::replace(&mut w_cur, w_next);
        }
    }
    debug_assert_eq!(trace.degree(), n);

    // purity ⟺ all n roots of the trace polynomial are real and inside
    // (-2√(q^r), 2√(q^r)); endpoints are never roots for irreducible h
    let trace_q = QPoly::from_z(&trace);
    let two = BigRational::from_integer(BigInt::from(2));
    if eval_at_sqrt_multiple(&trace_q, &two, &c).sign() == Ordering::Equal
        || eval_at_sqrt_multiple(&trace_q, &(-&two), &c).sign() == Ordering::Equal
    {
        return false;
    }
    count_roots_in_symmetric_interval(&trace_q, &two, &c) == n
}

/// One weight bucket of a decomposition: the factors that landed on the
/// numerator side and on the denominator side, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightBucket {
    pub num_factors: Vec<(ZPoly, u32)>,
    pub den_factors: Vec<(ZPoly, u32)>,
}

impl WeightBucket {
    fn is_empty(&self) -> bool {
        self.num_factors.is_empty() && self.den_factors.is_empty()
    }

    pub fn num_degree(&self) -> usize {
        self.num_factors.iter().map(|(h, m)| h.degree() * *m as usize).sum()
    }

    pub fn den_degree(&self) -> usize {
        self.den_factors.iter().map(|(h, m)| h.degree() * *m as usize).sum()
    }

    pub fn num_product(&self) -> ZPoly {
        product(&self.num_factors)
    }

    pub fn den_product(&self) -> ZPoly {
        product(&self.den_factors)
    }

    /// Slope multisets of the numerator-side and denominator-side products.
    pub fn slope_multisets(&self, p: u64, e: u32) -> (SlopeMultiset, SlopeMultiset) {
        (side_slopes(&self.num_factors, p, e), side_slopes(&self.den_factors, p, e))
    }
}

fn product(factors: &[(ZPoly, u32)]) -> ZPoly {
    let mut acc = ZPoly::one();
    for (h, m) in factors {
        for _ in 0..*m {
            acc = &acc * h;
        }
    }
    acc
}

fn side_slopes(factors: &[(ZPoly, u32)], p: u64, e: u32) -> SlopeMultiset {
    let mut out = SlopeMultiset::new();
    for (h, m) in factors {
        let (_, s) = newton_polygon(h, p, e);
        for (slope, mult) in s.iter() {
            out.insert(slope.clone(), mult * *m as u64);
        }
    }
    out
}

/// The full factor-level weight decomposition of a zeta function: one bucket
/// per pure weight, plus a leftover bucket of factors that are pure of no
/// integer weight. A nonempty leftover certifies that the input is not the
/// zeta function of a variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub p: u64,
    pub e: u32,
    pub buckets: BTreeMap<u32, WeightBucket>,
    pub leftover: WeightBucket,
}

impl WeightDecomposition {
    pub fn weights_present(&self) -> Vec<u32> {
        self.buckets.keys().copied().collect()
    }

    /// The weight-r part as a rational function; 1 when the bucket is empty.
    pub fn weight_part(&self, r: u32) -> ZetaFunction {
        match self.buckets.get(&r) {
            None => ZetaFunction::one(self.p, self.e),
            Some(bucket) => ZetaFunction::new(
                bucket.num_product(),
                bucket.den_product(),
                self.p,
                self.e,
            )
            .expect("bucket polynomials have constant term 1"),
        }
    }

    pub fn leftover_part(&self) -> ZetaFunction {
        ZetaFunction::new(
            self.leftover.num_product(),
            self.leftover.den_product(),
            self.p,
            self.e,
        )
        .expect("leftover polynomials have constant term 1")
    }

    /// Product of every weight part and the leftover; equals the classified
    /// zeta function.
    pub fn assemble(&self) -> ZetaFunction {
        let mut acc = self.leftover_part();
        for r in self.weights_present() {
            acc = acc
                .multiply(&self.weight_part(r))
                .expect("same ground field");
        }
        acc
    }
}

/// Factor the numerator and denominator and assign every irreducible factor
/// to its pure weight bucket (side preserved) or to the leftover bucket.
pub fn classify(z: &ZetaFunction) -> Result<WeightDecomposition, FactorError> {
    let p = z.p();
    let e = z.e();
    let mut buckets: BTreeMap<u32, WeightBucket> = BTreeMap::new();
    let mut leftover = WeightBucket::default();

    for (is_num, poly) in [(true, z.numerator()), (false, z.denominator())] {
        for (h, m) in factor_integer_poly(poly)?.factors {
            let bucket = match candidate_weight(&h, p, e) {
                Some(r) if pure_weight_inner(&h, p, e, r) => {
                    buckets.entry(r).or_default()
                }
                _ => &mut leftover,
            };
            if is_num {
                bucket.num_factors.push((h, m));
            } else {
                bucket.den_factors.push((h, m));
            }
        }
    }
    buckets.retain(|_, b| !b.is_empty());
    for b in buckets.values_mut() {
        canonical_factor_sort(&mut b.num_factors);
        canonical_factor_sort(&mut b.den_factors);
    }
    canonical_factor_sort(&mut leftover.num_factors);
    canonical_factor_sort(&mut leftover.den_factors);
    Ok(WeightDecomposition {
        p,
        e,
        buckets,
        leftover,
    })
}

/// The weight-r part Z^(r) of a zeta function.
pub fn weight_part(z: &ZetaFunction, r: u32) -> Result<ZetaFunction, FactorError> {
    Ok(classify(z)?.weight_part(r))
}

/// Z^(r) written as (f/g)·(1 - √(q^r)·T)^m0·(1 + √(q^r)·T)^m1 with f, g
/// coprime in 1 + T·ℤ[T] and neither having ±√(q^r) as a reciprocal root.
/// m0, m1 are signed: negative multiplicities sit in the denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedForm {
    pub f: ZPoly,
    pub g: ZPoly,
    pub m0: i64,
    pub m1: i64,
    pub r: u32,
    pub p: u64,
    pub e: u32,
}

/// Compute the reduced form of a pure weight-r part.
pub fn reduced_form(zr: &ZetaFunction, r: u32) -> Result<ReducedForm, WeightError> {
    let p = zr.p();
    let e = zr.e();
    let c = q_pow_r(p, e, r);
    let sqrt_c: Option<BigInt> = if (e * r) % 2 == 0 {
        Some(BigInt::from(p).pow(e * r / 2))
    } else {
        None
    };

    let mut m0 = 0i64;
    let mut m1 = 0i64;
    let mut f = ZPoly::one();
    let mut g = ZPoly::one();

    for (is_num, poly) in [(true, zr.numerator()), (false, zr.denominator())] {
        let sign: i64 = if is_num { 1 } else { -1 };
        for (h, mult) in factor_integer_poly(poly)?.factors {
            match candidate_weight(&h, p, e) {
                Some(got) if got == r && pure_weight_inner(&h, p, e, r) => {}
                _ => {
                    return Err(WeightError::NotPure {
                        factor: h.to_string(),
                        requested: r,
                    })
                }
            }
            let signed = sign * mult as i64;
            match &sqrt_c {
                Some(s) => {
                    // q^r = s²: the fixed points appear as linear factors
                    if h.degree() == 1 && h.coeff(1) == -s {
                        m0 += signed;
                        continue;
                    }
                    if h.degree() == 1 && h.coeff(1) == *s {
                        m1 += signed;
                        continue;
                    }
                }
                None => {
                    // q^r not a square: the pair enters through 1 - q^r·T²
                    if h.degree() == 2 && h.coeff(1).is_zero() && h.coeff(2) == -&c {
                        m0 += signed;
                        m1 += signed;
                        continue;
                    }
                }
            }
            let target = if is_num { &mut f } else { &mut g };
            for _ in 0..mult {
                *target = &*target * &h;
            }
        }
    }
    Ok(ReducedForm {
        f,
        g,
        m0,
        m1,
        r,
        p,
        e,
    })
}

/// m(X/F_q, r): the order of zero (positive) or pole (negative) of the zeta
/// function at T = 1/√(q^r), read off the reduced form of its weight-r part.
pub fn m_order(z: &ZetaFunction, r: u32) -> Result<i64, WeightError> {
    let part = weight_part(z, r)?;
    Ok(reduced_form(&part, r)?.m0)
}

/// Determinant of Frobenius on a pure weight-r polynomial: the product of
/// its reciprocal roots, reported against the reference value q^(r·b/2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDeterminant {
    pub value: BigInt,
    pub p: u64,
    /// reference = p^(half_exponent/2) = q^(r·b/2)
    pub half_exponent: u64,
    pub matches: bool,
}

impl FrobeniusDeterminant {
    pub fn reference_string(&self) -> String {
        if self.half_exponent % 2 == 0 {
            BigInt::from(self.p).pow((self.half_exponent / 2) as u32).to_string()
        } else {
            format!("{}^({}/2)", self.p, self.half_exponent)
        }
    }
}

impl fmt::Display for FrobeniusDeterminant {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "det = {} vs q^(r·b/2) = {}",
            self.value,
            self.reference_string()
        )
    }
}

/// det = (-1)^b · lead(P_r); matches iff det = +q^(r·b/2) exactly.
pub fn det_frobenius(p_r: &ZPoly, p: u64, e: u32, r: u32) -> FrobeniusDeterminant {
    let b = p_r.degree();
    let mut value = p_r.leading();
    if b % 2 == 1 {
        value = -value;
    }
    let half_exponent = e as u64 * r as u64 * b as u64;
    let matches = value.is_positive()
        && &value * &value == BigInt::from(p).pow(half_exponent.try_into().expect("exponent fits"));
    FrobeniusDeterminant {
        value,
        p,
        half_exponent,
        matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_i64(v)
    }

    fn zf(num: &[i64], den: &[i64], p: u64, e: u32) -> ZetaFunction {
        ZetaFunction::new(zp(num), zp(den), p, e).unwrap()
    }

    #[test]
    fn candidate_weight_examples() {
        assert_eq!(candidate_weight(&zp(&[1, 3, 5]), 5, 1), Some(1));
        assert_eq!(candidate_weight(&zp(&[1, -1]), 5, 1), Some(0));
        assert_eq!(candidate_weight(&zp(&[1, -3]), 5, 1), None); // 9 is not a power of 5
        assert_eq!(candidate_weight(&zp(&[1, -2]), 2, 2), Some(1)); // over F_4
        assert_eq!(candidate_weight(&zp(&[1, -5]), 5, 1), Some(2));
    }

    #[test]
    fn pure_weight_accepts_sqrt_q_line() {
        // 1 - 2T over q = 4: the reciprocal root is exactly √4
        assert_eq!(is_pure_weight(&zp(&[1, -2]), 2, 2, 1), Ok(true));
    }

    #[test]
    fn pure_weight_accepts_supersingular_quadratic() {
        // 1 + 5T²: roots ±i√5 have modulus √5
        assert_eq!(is_pure_weight(&zp(&[1, 0, 5]), 5, 1, 1), Ok(true));
    }

    #[test]
    fn pure_weight_rejects_functional_equation_impostor() {
        // 1 - 5T + 5T² satisfies the functional equation but has real roots
        // (5±√5)/2 of unequal modulus: the trace root u = 5 exceeds 2√5
        assert_eq!(is_pure_weight(&zp(&[1, -5, 5]), 5, 1, 1), Ok(false));
    }

    #[test]
    fn pure_weight_accepts_ordinary_elliptic_numerator() {
        assert_eq!(is_pure_weight(&zp(&[1, 3, 5]), 5, 1, 1), Ok(true));
        assert_eq!(is_pure_weight(&zp(&[1, -4, 7]), 7, 1, 1), Ok(true));
    }

    #[test]
    fn pure_weight_accepts_nonsquare_quadratic_minimal_poly() {
        // 1 - 5T² has reciprocal roots ±√5
        assert_eq!(is_pure_weight(&zp(&[1, 0, -5]), 5, 1, 1), Ok(true));
    }

    #[test]
    fn pure_weight_rejects_mixed_weight_quartic() {
        // (1-T)(1-5T)·(weight mix) assembled so the leading coefficient
        // mimics weight 1: (1-T)(1-5T) has lead 5, degree 2
        let h = &zp(&[1, -1]) * &zp(&[1, -5]);
        assert_eq!(is_pure_weight(&h, 5, 1, 1), Ok(false));
    }

    #[test]
    fn precheck_is_enforced() {
        assert!(matches!(
            is_pure_weight(&zp(&[1, -3]), 5, 1, 1),
            Err(WeightError::NotPrechecked { .. })
        ));
        assert!(matches!(
            is_pure_weight(&zp(&[1, 3, 5]), 5, 1, 2),
            Err(WeightError::NotPrechecked { .. })
        ));
    }

    #[test]
    fn classify_multiplicative_group() {
        let gm = zf(&[1, -1], &[1, -5], 5, 1);
        let d = classify(&gm).unwrap();
        assert_eq!(d.weights_present(), vec![0, 2]);
        assert_eq!(d.weight_part(0), zf(&[1, -1], &[1], 5, 1));
        assert_eq!(d.weight_part(2), zf(&[1], &[1, -5], 5, 1));
        assert!(d.weight_part(1).is_one());
        assert!(d.leftover_part().is_one());
        assert_eq!(d.assemble(), gm);
    }

    #[test]
    fn classify_elliptic_fixture() {
        let z = zf(&[1, 3, 5], &[1, -6, 5], 5, 1);
        let d = classify(&z).unwrap();
        assert_eq!(d.weights_present(), vec![0, 1, 2]);
        assert_eq!(d.weight_part(1), zf(&[1, 3, 5], &[1], 5, 1));
        assert_eq!(d.weight_part(0), zf(&[1], &[1, -1], 5, 1));
        assert_eq!(d.weight_part(2), zf(&[1], &[1, -5], 5, 1));
        assert_eq!(d.assemble(), z);
    }

    #[test]
    fn classify_reports_leftover() {
        let z = zf(&[1, -3], &[1, -1], 5, 1);
        let d = classify(&z).unwrap();
        assert_eq!(d.leftover.num_factors, vec![(zp(&[1, -3]), 1)]);
        assert!(!d.leftover_part().is_one());
        assert_eq!(d.assemble(), z);
    }

    #[test]
    fn reduced_form_examples() {
        // (1-2T)² over q=4, r=1: m0 = 2
        let zr = zf(&[1, -4, 4], &[1], 2, 2);
        let rf = reduced_form(&zr, 1).unwrap();
        assert_eq!((rf.m0, rf.m1), (2, 0));
        assert!(rf.f.is_one() && rf.g.is_one());

        // ordinary elliptic numerator: no ±√5 reciprocal roots
        let zr = zf(&[1, 3, 5], &[1], 5, 1);
        let rf = reduced_form(&zr, 1).unwrap();
        assert_eq!((rf.m0, rf.m1), (0, 0));
        assert_eq!(rf.f, zp(&[1, 3, 5]));

        // 1/(1 - 25T²) over q=5, r=2: √(q²) = 5 rational, both factors in
        // the denominator
        let zr = zf(&[1], &[1, 0, -25], 5, 1);
        let rf = reduced_form(&zr, 2).unwrap();
        assert_eq!((rf.m0, rf.m1), (-1, -1));
        assert!(rf.f.is_one() && rf.g.is_one());

        // supersingular pair over q=5 (nonsquare): (1 - 5T²) gives m0 = m1
        let zr = zf(&[1, 0, -5], &[1], 5, 1);
        let rf = reduced_form(&zr, 1).unwrap();
        assert_eq!((rf.m0, rf.m1), (1, 1));
    }

    #[test]
    fn reduced_form_rejects_impure_input() {
        let zr = zf(&[1, -6, 5], &[1], 5, 1); // (1-T)(1-5T): weights 0 and 2
        assert!(matches!(
            reduced_form(&zr, 1),
            Err(WeightError::NotPure { .. })
        ));
    }

    #[test]
    fn m_order_examples() {
        // weight-1 part (1-2T)² over q=4
        let z = zf(&[1, -4, 4], &[1, -1], 2, 2);
        assert_eq!(m_order(&z, 1).unwrap(), 2);

        // P¹ over F_4 has trivial weight-1 part
        let p1 = zf(&[1], &[1, -5, 4], 2, 2);
        assert_eq!(m_order(&p1, 1).unwrap(), 0);

        // pole of order 1 at 1/√(q²) for 1/(1-5T) over q=5
        let gm_pole = zf(&[1], &[1, -5], 5, 1);
        assert_eq!(m_order(&gm_pole, 2).unwrap(), -1);
    }

    #[test]
    fn m_order_invariant_under_base_change() {
        // (1+5T)²/((1-T)(1-25T)) over q=25: m1-heavy supersingular shape
        let z = zf(&[1, 10, 25], &[1, -26, 25], 5, 2);
        let down = z.base_change_down(2).unwrap();
        for r in [0u32, 1, 2] {
            assert_eq!(m_order(&z, r).unwrap(), m_order(&down, r).unwrap());
        }
    }

    #[test]
    fn det_frobenius_examples() {
        // elliptic numerator: det = 5 = q^(1·2/2)
        let det = det_frobenius(&zp(&[1, 3, 5]), 5, 1, 1);
        assert_eq!(det.value, BigInt::from(5));
        assert!(det.matches);
        assert_eq!(det.reference_string(), "5");

        // weight 0: det = 1 = q^0
        let det = det_frobenius(&zp(&[1, -1]), 5, 1, 0);
        assert_eq!(det.value, BigInt::from(1));
        assert!(det.matches);

        // 1 - 2T over q=4: det = 2 = 4^(1/2), the identity holds with √q
        let det = det_frobenius(&zp(&[1, -2]), 2, 2, 1);
        assert_eq!(det.value, BigInt::from(2));
        assert!(det.matches);
        assert_eq!(det.reference_string(), "2");

        // sign failure: 1 + 5T at weight 2 has det = -5
        let det = det_frobenius(&zp(&[1, 5]), 5, 1, 2);
        assert_eq!(det.value, BigInt::from(-5));
        assert!(!det.matches);
    }

    #[test]
    fn pure_factors_have_autodual_slopes() {
        // the machine form of the symmetry statement, on a small corpus
        use crate::slopes::is_autodual;
        let corpus: Vec<(ZPoly, u64, u32, u32)> = vec![
            (zp(&[1, 3, 5]), 5, 1, 1),
            (zp(&[1, 0, 5]), 5, 1, 1),
            (zp(&[1, -2]), 2, 2, 1),
            (zp(&[1, -1]), 7, 1, 0),
            (zp(&[1, -49]), 7, 1, 4),
            (zp(&[1, 0, -5]), 5, 1, 1),
            (zp(&[1, 2, 3, 14, 49]), 7, 1, 1), // abelian-surface shape
        ];
        for (h, p, e, r) in corpus {
            if is_pure_weight(&h, p, e, r).unwrap() {
                let (_, s) = newton_polygon(&h, p, e);
                let rq = BigRational::from_integer(BigInt::from(r));
                assert!(is_autodual(&s, &rq), "slopes of {} not {}-autodual", h, r);
            }
        }
    }
}
