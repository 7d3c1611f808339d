//! Sturm sequences over ℚ with exact sign evaluation at points of the form
//! t·√c (c a positive integer, possibly a non-square).
//!
//! Used by the purity classifier: the trace polynomial of a candidate factor
//! must have all of its roots real and inside (-2√c, 2√c), which reduces to a
//! Sturm variation count with endpoint signs computed in the quadratic ring
//! generated by √c.

use crate::poly::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;

/// A value a + b·√c with exact rational a, b.
#[derive(Clone, Debug)]
pub struct QuadValue {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigInt,
}

impl QuadValue {
    pub fn rational(a: BigRational, c: BigInt) -> Self {
        QuadValue {
            a,
            b: BigRational::zero(),
            c,
        }
    }

    /// b·√c.
    pub fn sqrt_multiple(b: BigRational, c: BigInt) -> Self {
        QuadValue {
            a: BigRational::zero(),
            b,
            c,
        }
    }

    pub fn add_rational(&self, r: &BigRational) -> QuadValue {
        QuadValue {
            a: &self.a + r,
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }

    pub fn mul(&self, other: &QuadValue) -> QuadValue {
        debug_assert_eq!(self.c, other.c);
        let c = BigRational::from_integer(self.c.clone());
        QuadValue {
            a: &self.a * &other.a + &self.b * &other.b * &c,
            b: &self.a * &other.b + &self.b * &other.a,
            c: self.c.clone(),
        }
    }

    /// Exact sign of a + b√c (c > 0).
    pub fn sign(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            _ => {
                // mixed signs: compare a^2 with c·b^2, the sign of the larger
                // magnitude side wins
                let a2 = &self.a * &self.a;
                let cb2 = &self.b * &self.b * BigRational::from_integer(self.c.clone());
                match a2.cmp(&cb2) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                }
            }
        }
    }
}

/// Horner evaluation of a rational polynomial at x = m·√c.
pub fn eval_at_sqrt_multiple(poly: &QPoly, m: &BigRational, c: &BigInt) -> QuadValue {
    let x = QuadValue::sqrt_multiple(m.clone(), c.clone());
    let mut acc = QuadValue::rational(BigRational::zero(), c.clone());
    for coeff in poly.coeffs().iter().rev() {
        acc = acc.mul(&x).add_rational(coeff);
    }
    acc
}

/// The Sturm chain of `poly`: p0 = poly, p1 = poly', p_{i+1} = -rem(p_{i-1}, p_i).
pub fn sturm_chain(poly: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![poly.clone()];
    let d = poly.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].divrem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(signs: &[Ordering]) -> usize {
    let mut count = 0;
    let mut last: Option<Ordering> = None;
    for &s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// Number of distinct real roots of `poly` in the open interval
/// (-m√c, m√c), assuming neither endpoint is a root of `poly`.
pub fn count_roots_in_symmetric_interval(poly: &QPoly, m: &BigRational, c: &BigInt) -> usize {
    let chain = sturm_chain(poly);
    let lo: Vec<Ordering> = chain
        .iter()
        .map(|p| eval_at_sqrt_multiple(p, &-m.clone(), c).sign())
        .collect();
    let hi: Vec<Ordering> = chain
        .iter()
        .map(|p| eval_at_sqrt_multiple(p, m, c).sign())
        .collect();
    variations(&lo).saturating_sub(variations(&hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ZPoly;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_z(&ZPoly::from_i64(coeffs))
    }

    #[test]
    fn quad_value_signs() {
        // 7 - 3√5 > 0 since 49 > 45
        let v = QuadValue {
            a: q(7, 1),
            b: q(-3, 1),
            c: BigInt::from(5),
        };
        assert_eq!(v.sign(), Ordering::Greater);
        // 2 - √5 < 0 since 4 < 5
        let v = QuadValue {
            a: q(2, 1),
            b: q(-1, 1),
            c: BigInt::from(5),
        };
        assert_eq!(v.sign(), Ordering::Less);
        // -1 + √2 > 0
        let v = QuadValue {
            a: q(-1, 1),
            b: q(1, 1),
            c: BigInt::from(2),
        };
        assert_eq!(v.sign(), Ordering::Greater);
    }

    #[test]
    fn eval_at_sqrt() {
        // (u^2 - 5) at u = √5 is 0; at u = 2√5 it is 15
        let p = qp(&[-5, 0, 1]);
        let at_sqrt5 = eval_at_sqrt_multiple(&p, &q(1, 1), &BigInt::from(5));
        assert_eq!(at_sqrt5.sign(), Ordering::Equal);
        let at_two = eval_at_sqrt_multiple(&p, &q(2, 1), &BigInt::from(5));
        assert_eq!(at_two.sign(), Ordering::Greater);
    }

    #[test]
    fn counts_roots_of_quadratics() {
        // u^2 - 2: both roots ±√2 inside (-2√2, 2√2)
        let p = qp(&[-2, 0, 1]);
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(2, 1), &BigInt::from(2)),
            2
        );
        // u - 5 with interval (-2√5, 2√5): 5 > 2√5 ≈ 4.47, so zero roots inside
        let p = qp(&[-5, 1]);
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(2, 1), &BigInt::from(5)),
            0
        );
        // u: one root at 0
        let p = qp(&[0, 1]);
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(2, 1), &BigInt::from(5)),
            1
        );
    }

    #[test]
    fn counts_roots_with_rational_endpoints() {
        // (u-1)(u+1)(u-3) with c = 4 (√c = 2 rational): roots ±1 inside (-4, 4), root 3 inside
        let p = qp(&[3, -1, -3, 1]);
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(2, 1), &BigInt::from(4)),
            3
        );
        // same cubic, interval (-2, 2): only ±1 inside
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(1, 1), &BigInt::from(4)),
            2
        );
    }

    #[test]
    fn complex_roots_are_not_counted() {
        // u^2 + 1 has no real roots
        let p = qp(&[1, 0, 1]);
        assert_eq!(
            count_roots_in_symmetric_interval(&p, &q(2, 1), &BigInt::from(9)),
            0
        );
    }
}
