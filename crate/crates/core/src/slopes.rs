//! Newton polygons and Frobenius slope multisets.
//!
//! Slopes use the p-adic valuation normalized by v(q) = 1 for q = p^e, so a
//! coefficient a_i contributes the point (i, ord_p(a_i)/e). The slope multiset
//! is read off the lower convex hull: each hull segment contributes its slope
//! with multiplicity equal to the segment width. Everything is exact; zero
//! coefficients contribute no point (valuation +∞).

use crate::multiset::Multiset;
use crate::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A multiset of exact rational slopes; total multiplicity equals the degree
/// of the source polynomial.
pub type SlopeMultiset = Multiset<BigRational>;

/// Coefficient valuations and the lower convex hull of a polynomial in
/// 1 + T·ℤ[T], with respect to v(p) = 1/e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygonData {
    /// (index, ord_p(a_i)/e) for each nonzero coefficient a_i.
    pub points: Vec<(usize, BigRational)>,
    /// Lower hull vertices, index-ascending, slopes strictly increasing.
    pub vertices: Vec<(usize, BigRational)>,
    pub p: u64,
    pub e: u32,
}

fn ord_p(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// Newton polygon and slope multiset of P ∈ 1 + T·ℤ[T].
pub fn newton_polygon(poly: &ZPoly, p: u64, e: u32) -> (NewtonPolygonData, SlopeMultiset) {
    assert!(poly.coeff(0).is_one(), "constant term must be 1");
    let pb = BigInt::from(p);
    let eb = BigInt::from(e as u64);

    // integer-scaled valuations (ord_p values); divide by e only for display
    let mut pts: Vec<(usize, u64)> = Vec::new();
    for (i, c) in poly.coeffs().iter().enumerate() {
        if !c.is_zero() {
            pts.push((i, ord_p(c, &pb)));
        }
    }

    // lower convex hull by monotone chain (x strictly increasing already)
    let mut hull: Vec<(usize, u64)> = Vec::new();
    for &(x, y) in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            // keep only strict right turns: drop (x2,y2) when it lies on or
            // above the segment (x1,y1)-(x,y)
            let lhs = (y2 as i128 - y1 as i128) * (x as i128 - x1 as i128);
            let rhs = (y as i128 - y1 as i128) * (x2 as i128 - x1 as i128);
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((x, y));
    }

    let mut slopes = SlopeMultiset::new();
    for w in hull.windows(2) {
        let (x1, y1) = w[0];
        let (x2, y2) = w[1];
        let width = (x2 - x1) as u64;
        let slope = BigRational::new(
            BigInt::from(y2 as i128 - y1 as i128),
            BigInt::from(width) * &eb,
        );
        slopes.insert(slope, width);
    }

    let to_q = |(i, v): (usize, u64)| (i, BigRational::new(BigInt::from(v), eb.clone()));
    let data = NewtonPolygonData {
        points: pts.iter().copied().map(to_q).collect(),
        vertices: hull.iter().copied().map(to_q).collect(),
        p,
        e,
    };
    (data, slopes)
}

/// The multiset { r - s : s ∈ S }.
pub fn reflect(s: &SlopeMultiset, r: &BigRational) -> SlopeMultiset {
    s.map(|slope| r - slope)
}

/// S is r-autodual when S = r - S, i.e. s and r - s are equi-multiple.
pub fn is_autodual(s: &SlopeMultiset, r: &BigRational) -> bool {
    *s == reflect(s, r)
}

/// Autoduality of the combined multiplicity function modulo 2:
/// (μ_num + μ_den)(s) ≡ (μ_num + μ_den)(r - s) mod 2 for every s.
pub fn is_autodual_mod2(num: &SlopeMultiset, den: &SlopeMultiset, r: &BigRational) -> bool {
    let combined = num.union(den);
    let support: Vec<BigRational> = combined
        .support()
        .cloned()
        .chain(combined.support().map(|s| r - s))
        .collect();
    support.iter().all(|s| {
        let reflected = r - s;
        combined.multiplicity(s) % 2 == combined.multiplicity(&reflected) % 2
    })
}

/// Every slope a/b in lowest terms must have multiplicity divisible by b.
/// On failure returns the first offending slope.
pub fn dieudonne_manin_check(s: &SlopeMultiset) -> Result<(), BigRational> {
    for (slope, mult) in s.iter() {
        let denom = slope.denom().magnitude().clone();
        let denom: u64 = denom.try_into().unwrap_or(u64::MAX);
        if denom == 0 || mult % denom != 0 {
            return Err(slope.clone());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn slopes_of(coeffs: &[i64], p: u64, e: u32) -> SlopeMultiset {
        newton_polygon(&ZPoly::from_i64(coeffs), p, e).1
    }

    #[test]
    fn ordinary_weight_one_slopes() {
        // 1 - 3T + 5T^2 over p=5: hull (0,0),(1,0),(2,1) → slopes {0, 1}
        let s = slopes_of(&[1, -3, 5], 5, 1);
        assert_eq!(s.multiplicity(&rat(0, 1)), 1);
        assert_eq!(s.multiplicity(&rat(1, 1)), 1);
        assert_eq!(s.cardinality(), 2);
    }

    #[test]
    fn supersingular_slopes() {
        // 1 + 5T^2 over p=5: hull (0,0),(2,1) → slopes {1/2, 1/2}
        let s = slopes_of(&[1, 0, 5], 5, 1);
        assert_eq!(s.multiplicity(&rat(1, 2)), 2);
        assert_eq!(s.cardinality(), 2);
    }

    #[test]
    fn half_slope_over_f4() {
        // 1 - 2T over q = 4 (p=2, e=2): ord_2(2)/2 = 1/2
        let s = slopes_of(&[1, -2], 2, 2);
        assert_eq!(s.multiplicity(&rat(1, 2)), 1);
        assert_eq!(s.cardinality(), 1);
    }

    #[test]
    fn vertices_have_strictly_increasing_slopes() {
        // (1-T)(1-5T)(1-25T) = 1 - 31T + 155T^2 - 125T^3
        let (data, s) = newton_polygon(&ZPoly::from_i64(&[1, -31, 155, -125]), 5, 1);
        assert_eq!(data.vertices.len(), 4); // all breakpoints: slopes 0,1,2
        assert_eq!(s.cardinality(), 3);
        assert_eq!(data.vertices[0], (0, rat(0, 1)));
        for w in data.vertices.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn reflect_examples() {
        let s: SlopeMultiset = [(rat(0, 1), 1), (rat(1, 1), 1)].into_iter().collect();
        assert_eq!(reflect(&s, &rat(1, 1)), s);

        let fixed: SlopeMultiset = [(rat(1, 2), 1)].into_iter().collect();
        assert_eq!(reflect(&fixed, &rat(1, 1)), fixed);

        let asym: SlopeMultiset = [(rat(0, 1), 2), (rat(1, 1), 1)].into_iter().collect();
        let want: SlopeMultiset = [(rat(0, 1), 1), (rat(1, 1), 2)].into_iter().collect();
        assert_eq!(reflect(&asym, &rat(1, 1)), want);
    }

    #[test]
    fn autodual_examples() {
        let s: SlopeMultiset = [(rat(0, 1), 1), (rat(1, 1), 1)].into_iter().collect();
        assert!(is_autodual(&s, &rat(1, 1)));
        let fixed: SlopeMultiset = [(rat(1, 2), 1)].into_iter().collect();
        assert!(is_autodual(&fixed, &rat(1, 1)));
        let asym: SlopeMultiset = [(rat(0, 1), 2), (rat(1, 1), 1)].into_iter().collect();
        assert!(!is_autodual(&asym, &rat(1, 1)));
    }

    #[test]
    fn autodual_mod2_examples() {
        let num: SlopeMultiset = [(rat(1, 2), 2)].into_iter().collect();
        assert!(is_autodual_mod2(&num, &SlopeMultiset::new(), &rat(1, 1)));

        let num: SlopeMultiset = [(rat(0, 1), 1)].into_iter().collect();
        assert!(!is_autodual_mod2(&num, &SlopeMultiset::new(), &rat(1, 1)));

        let num: SlopeMultiset = [(rat(0, 1), 2), (rat(1, 1), 1)].into_iter().collect();
        let den: SlopeMultiset = [(rat(1, 1), 1)].into_iter().collect();
        assert!(is_autodual_mod2(&num, &den, &rat(1, 1)));
    }

    #[test]
    fn dieudonne_manin_examples() {
        let ok: SlopeMultiset = [(rat(1, 2), 2)].into_iter().collect();
        assert!(dieudonne_manin_check(&ok).is_ok());

        let bad: SlopeMultiset = [(rat(1, 2), 1)].into_iter().collect();
        assert_eq!(dieudonne_manin_check(&bad), Err(rat(1, 2)));

        let mixed: SlopeMultiset = [(rat(0, 1), 1), (rat(1, 3), 3), (rat(1, 1), 1)]
            .into_iter()
            .collect();
        assert!(dieudonne_manin_check(&mixed).is_ok());
    }

    #[test]
    fn total_mass_equals_degree() {
        for coeffs in [&[1i64, 7, 3, 9, 81][..], &[1, 0, 0, 27], &[1, -1]] {
            let poly = ZPoly::from_i64(coeffs);
            let (_, s) = newton_polygon(&poly, 3, 1);
            assert_eq!(s.cardinality() as usize, poly.degree());
        }
    }

    proptest! {
        #[test]
        fn slopes_are_multiplicative(
            a in proptest::collection::vec(-30i64..30, 0..4),
            b in proptest::collection::vec(-30i64..30, 0..4),
        ) {
            let mut ac = vec![1i64];
            ac.extend(a);
            let mut bc = vec![1i64];
            bc.extend(b);
            let pa = ZPoly::from_i64(&ac);
            let pb = ZPoly::from_i64(&bc);
            let prod = &pa * &pb;
            let sa = newton_polygon(&pa, 2, 1).1;
            let sb = newton_polygon(&pb, 2, 1).1;
            let sp = newton_polygon(&prod, 2, 1).1;
            prop_assert_eq!(sp, sa.union(&sb));
        }

        #[test]
        fn reflect_is_an_involution(
            slopes in proptest::collection::vec((0i64..6, 1i64..4, 1u64..4), 0..6),
            rn in -3i64..6,
        ) {
            let s: SlopeMultiset = slopes
                .into_iter()
                .map(|(n, d, m)| (rat(n, d), m))
                .collect();
            let r = rat(rn, 1);
            prop_assert_eq!(reflect(&reflect(&s, &r), &r), s);
        }
    }
}
