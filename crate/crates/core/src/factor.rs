//! Complete factorization over ℤ of polynomials with constant term 1.
//!
//! Pipeline: reverse to a monic polynomial, Yun squarefree decomposition,
//! Berlekamp factorization modulo a deterministically chosen prime, quadratic
//! Hensel lifting to a Mignotte-style coefficient bound, subset recombination
//! with exact trial division, and reversal back. Factors are normalized to
//! constant term +1 (automatic under reversal of monic factors) and returned
//! in a canonical order, so results are reproducible byte for byte.

use crate::poly::{modp, ZPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub const DEFAULT_FACTOR_DEGREE_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("polynomial must have constant term 1")]
    ConstantTermNotOne,
}

/// Irreducible factorization ∏ h_i^{m_i} with h_i ∈ 1 + T·ℤ[T], pairwise
/// distinct, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(ZPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> ZPoly {
        let mut acc = ZPoly::one();
        for (h, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * h;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(h, m)| h.degree() * *m as usize)
            .sum()
    }
}

/// Canonical factor order: by degree, then by coefficient list.
pub(crate) fn canonical_factor_sort(factors: &mut [(ZPoly, u32)]) {
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
}

pub fn factor_integer_poly(poly: &ZPoly) -> Result<Factorization, FactorError> {
    factor_integer_poly_with_cap(poly, DEFAULT_FACTOR_DEGREE_CAP)
}

pub fn factor_integer_poly_with_cap(
    poly: &ZPoly,
    cap: usize,
) -> Result<Factorization, FactorError> {
    if !poly.coeff(0).is_one() {
        return Err(FactorError::ConstantTermNotOne);
    }
    if poly.degree() > cap {
        return Err(FactorError::DegreeCapExceeded {
            degree: poly.degree(),
            cap,
        });
    }
    if poly.degree() == 0 {
        return Ok(Factorization { factors: vec![] });
    }

    // reverse to a monic polynomial; factors reverse back with constant term 1
    let monic = poly.reversed();
    debug_assert!(monic.leading().is_one());

    let mut factors: Vec<(ZPoly, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&monic) {
        for irr in factor_squarefree_monic(&part) {
            factors.push((irr.reversed(), mult));
        }
    }
    canonical_factor_sort(&mut factors);
    let out = Factorization { factors };
    debug_assert_eq!(&out.product(), poly);
    Ok(out)
}

/// Yun's algorithm on a monic integer polynomial: returns squarefree parts
/// with their multiplicities. All divisions are exact over ℤ.
fn yun_squarefree(f: &ZPoly) -> Vec<(ZPoly, u32)> {
    let deriv = f.derivative();
    let g = f.gcd(&deriv);
    if g.degree() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut v = f.divexact(&g).expect("gcd divides");
    let mut w = deriv.divexact(&g).expect("gcd divides");
    let mut i = 1u32;
    while v.degree() >= 1 {
        let z = &w - &v.derivative();
        let h = v.gcd(&z);
        if h.degree() >= 1 {
            out.push((h.clone(), i));
        }
        v = v.divexact(&h).expect("gcd divides");
        w = z.divexact(&h).expect("gcd divides");
        i += 1;
    }
    out
}

fn next_prime_after(n: u64) -> u64 {
    let mut c = n + 1;
    loop {
        if crate::field::is_prime_u64(c) {
            return c;
        }
        c += 1;
    }
}

/// Smallest prime > 2·deg(f) modulo which f stays squarefree of full degree
/// with nonzero trailing coefficient. Deterministic.
fn choose_prime(f: &ZPoly) -> u64 {
    let mut p = next_prime_after(2 * f.degree() as u64);
    loop {
        let pb = BigInt::from(p);
        let lead_ok = !f.leading().mod_floor(&pb).is_zero();
        let trail_ok = !f.coeff(0).mod_floor(&pb).is_zero();
        if lead_ok && trail_ok {
            let fm = reduce_modp(f, p);
            let d = modp::derivative(&fm, p);
            if modp::deg(&modp::gcd(&fm, &d, p)) == Some(0) {
                return p;
            }
        }
        p = next_prime_after(p);
    }
}

fn reduce_modp(f: &ZPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pb);
            u64::try_from(r).expect("reduced residue fits u64")
        })
        .collect();
    modp::trim(&mut out);
    out
}

/// Factor a squarefree monic integer polynomial into monic irreducibles.
fn factor_squarefree_monic(f: &ZPoly) -> Vec<ZPoly> {
    let d = f.degree();
    if d <= 1 {
        return vec![f.clone()];
    }
    let p = choose_prime(f);
    let modular = berlekamp(&reduce_modp(f, p), p);
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // lift to p^k beyond twice the factor coefficient bound
    let bound = factor_coeff_bound(f);
    let mut modulus = BigInt::from(p);
    while modulus <= &bound * BigInt::from(2) {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift_tree(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

/// Mignotte-style bound on the coefficients of any monic factor:
/// 2^d · (‖f‖₂ + 1).
fn factor_coeff_bound(f: &ZPoly) -> BigInt {
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    (BigInt::one() << f.degree()) * norm
}

// ---- Berlekamp over F_p (deterministic) ----

fn berlekamp(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let d = modp::deg(f).expect("nonzero");
    if d == 1 {
        return vec![modp::make_monic(f, p)];
    }
    let f = modp::make_monic(f, p);

    // Q[i] = coefficients of x^(i·p) mod f
    let xp = modp::pow_mod(&[0, 1], &num_bigint::BigUint::from(p), &f, p);
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
    let mut cur = vec![1u64];
    for _ in 0..d {
        let mut padded = cur.clone();
        padded.resize(d, 0);
        rows.push(padded);
        cur = modp::divrem(&modp::mul(&cur, &xp, p), &f, p).1;
    }

    // nullspace of (Q - I)^T: vectors v with v(x)^p ≡ v(x) mod f
    let mut mat = vec![vec![0u64; d]; d];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..d {
            let mut val = row[j] % p;
            if i == j {
                val = (val + p - 1) % p;
            }
            mat[j][i] = val; // transpose
        }
    }
    let basis = nullspace_modp(mat, p);
    let r = basis.len();
    if r == 1 {
        return vec![f];
    }

    let mut factors: Vec<Vec<u64>> = vec![f];
    'outer: for v in &basis {
        let mut vpoly = v.clone();
        modp::trim(&mut vpoly);
        if modp::deg(&vpoly).map_or(true, |dv| dv == 0) {
            continue; // constants split nothing
        }
        let mut s = 0u64;
        while s < p {
            let mut next: Vec<Vec<u64>> = Vec::with_capacity(factors.len());
            let shifted = modp::sub(&vpoly, &[s], p);
            for g in &factors {
                if modp::deg(g) == Some(1) {
                    next.push(g.clone());
                    continue;
                }
                let w = modp::gcd(g, &shifted, p);
                let dw = modp::deg(&w);
                if dw == Some(0) || dw == modp::deg(g) {
                    next.push(g.clone());
                } else {
                    let q = modp::divrem(g, &w, p).0;
                    next.push(modp::make_monic(&q, p));
                    next.push(w);
                }
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
            s += 1;
        }
    }
    debug_assert_eq!(factors.len(), r);
    factors
}

fn nullspace_modp(mut mat: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let pivot_row = (rank..rows).find(|&r| mat[r][col] % p != 0);
        let Some(pr) = pivot_row else { continue };
        mat.swap(rank, pr);
        let inv = modp::inv_scalar(mat[rank][col], p);
        for x in mat[rank].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..rows {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..cols {
                    let t = (factor as u128 * mat[rank][c] as u128) % p as u128;
                    mat[r][c] = ((mat[r][c] as u128 + p as u128 - t) % p as u128) as u64;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for col in 0..cols {
            if let Some(pr) = pivot_of_col[col] {
                let val = mat[pr][free] % p;
                if val != 0 {
                    v[col] = p - val;
                }
            }
        }
        basis.push(v);
    }
    basis
}

// ---- Hensel lifting over ℤ/p^k (all factors monic) ----

fn rem_mod(f: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::from_coeffs(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    rem_mod(&(a * b), m)
}

/// Quotient and remainder by a monic divisor, all coefficients kept reduced
/// mod m throughout (the divisor must already be reduced).
fn divrem_monic_mod(a: &ZPoly, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(d.leading().is_one());
    let dd = d.degree();
    let mut rem: Vec<BigInt> = a.coeffs().iter().map(|c| c.mod_floor(m)).collect();
    if rem.len() <= dd {
        return (ZPoly::zero(), ZPoly::from_coeffs(rem));
    }
    let mut quo = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = std::mem::replace(&mut rem[i], BigInt::zero());
        if q.is_zero() {
            continue;
        }
        for j in 0..dd {
            let dc = d.coeff(j);
            if !dc.is_zero() {
                rem[i - dd + j] = (&rem[i - dd + j] - &q * dc).mod_floor(m);
            }
        }
        quo[i - dd] = q;
    }
    rem.truncate(dd);
    (ZPoly::from_coeffs(quo), ZPoly::from_coeffs(rem))
}

fn lift_modp_poly(f: &[u64]) -> ZPoly {
    ZPoly::from_coeffs(f.iter().map(|&c| BigInt::from(c)).collect())
}

/// One quadratic step: from a factorization f ≡ g·h (mod m) with Bezout data
/// s·g + t·h ≡ 1 (mod m) to the same shape mod m².
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = rem_mod(&(f - &(g * h)), &m2);
    let delta_g = divrem_monic_mod(&mul_mod(t, &e, &m2), g, &m2).1;
    let g_new = rem_mod(&(g + &delta_g), &m2);
    let (h_new, rem) = divrem_monic_mod(f, &g_new, &m2);
    debug_assert!(rem.is_zero(), "monic Hensel step must divide exactly");

    let one = ZPoly::one();
    let b = rem_mod(&(&(&mul_mod(s, &g_new, &m2) + &mul_mod(t, &h_new, &m2)) - &one), &m2);
    let s_full = mul_mod(s, &rem_mod(&(&one - &b), &m2), &m2);
    let s_new = divrem_monic_mod(&s_full, &h_new, &m2).1;
    let num = rem_mod(&(&one - &mul_mod(&s_new, &g_new, &m2)), &m2);
    let (t_new, trem) = divrem_monic_mod(&num, &h_new, &m2);
    debug_assert!(trem.is_zero(), "Bezout update must divide exactly");
    (g_new, h_new, s_new, t_new)
}

/// Lift a pair (g, h) with f ≡ g·h mod p up to at least `target`, returning
/// (g, h) reduced mod target.
fn hensel_lift_pair(f: &ZPoly, g0: &[u64], h0: &[u64], p: u64, target: &BigInt) -> (ZPoly, ZPoly) {
    let (one, s0, t0) = modp::ext_gcd(g0, h0, p);
    debug_assert_eq!(modp::deg(&one), Some(0));
    let mut g = lift_modp_poly(g0);
    let mut h = lift_modp_poly(h0);
    let mut s = lift_modp_poly(&s0);
    let mut t = lift_modp_poly(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let f_red = rem_mod(f, &(&m * &m));
        let (gn, hn, sn, tn) = hensel_step(&f_red, &g, &h, &s, &t, &m);
        g = gn;
        h = hn;
        s = sn;
        t = tn;
        m = &m * &m;
    }
    (rem_mod(&g, target), rem_mod(&h, target))
}

/// Lift every modular factor of the monic f to the target modulus.
fn hensel_lift_tree(f: &ZPoly, modular: &[Vec<u64>], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if modular.len() == 1 {
        return vec![rem_mod(f, target)];
    }
    let mid = modular.len() / 2;
    let (left, right) = modular.split_at(mid);
    let prod = |fs: &[Vec<u64>]| -> Vec<u64> {
        fs.iter()
            .fold(vec![1u64], |acc, g| modp::mul(&acc, g, p))
    };
    let (g, h) = hensel_lift_pair(f, &prod(left), &prod(right), p, target);
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

// ---- recombination ----

fn symmetric(f: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / BigInt::from(2);
    ZPoly::from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Zassenhaus subset search: combine lifted modular factors into true integer
/// factors of the monic f by trial division, ascending subset size.
fn recombine(f: &ZPoly, pool: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut f = f.clone();
    let mut pool = pool;
    let mut out: Vec<ZPoly> = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut indices: Vec<usize> = (0..size).collect();
        'subsets: loop {
            // trailing-coefficient pre-filter before the full product
            let mut const_term = BigInt::one();
            for &i in &indices {
                const_term = (&const_term * &pool[i].coeff(0)).mod_floor(modulus);
            }
            let half = modulus / BigInt::from(2);
            let const_sym = if const_term > half {
                const_term - modulus
            } else {
                const_term
            };
            let divides_const = !const_sym.is_zero() && (f.coeff(0) % &const_sym).is_zero();
            if divides_const {
                let mut cand = ZPoly::one();
                for &i in &indices {
                    cand = mul_mod(&cand, &pool[i], modulus);
                }
                let cand = symmetric(&cand, modulus);
                if let Some(quot) = f.divexact(&cand) {
                    out.push(cand);
                    f = quot;
                    let drop: std::collections::BTreeSet<usize> = indices.iter().copied().collect();
                    pool = pool
                        .into_iter()
                        .enumerate()
                        .filter(|(i, _)| !drop.contains(i))
                        .map(|(_, g)| g)
                        .collect();
                    if 2 * size > pool.len() {
                        break 'subsets;
                    }
                    indices = (0..size).collect();
                    continue 'subsets;
                }
            }
            // next combination in lexicographic order
            let n = pool.len();
            let mut i = size;
            loop {
                if i == 0 {
                    break 'subsets;
                }
                i -= 1;
                if indices[i] != i + n - size {
                    indices[i] += 1;
                    for j in i + 1..size {
                        indices[j] = indices[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        size += 1;
    }
    if f.degree() >= 1 {
        out.push(f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_i64(v)
    }

    fn factors_of(v: &[i64]) -> Vec<(ZPoly, u32)> {
        factor_integer_poly(&zp(v)).unwrap().factors
    }

    #[test]
    fn rational_roots_split() {
        // 1 - 5T + 6T^2 = (1-2T)(1-3T)
        let fs = factors_of(&[1, -5, 6]);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(zp(&[1, -3]), 1)));
        assert!(fs.contains(&(zp(&[1, -2]), 1)));
    }

    #[test]
    fn difference_of_squares() {
        let fs = factors_of(&[1, 0, -1]);
        assert_eq!(fs, vec![(zp(&[1, -1]), 1), (zp(&[1, 1]), 1)]);
    }

    #[test]
    fn quartic_cyclotomic_shape() {
        // 1 - T^4 = (1-T)(1+T)(1+T^2)
        let fs = factors_of(&[1, 0, 0, 0, -1]);
        assert_eq!(
            fs,
            vec![(zp(&[1, -1]), 1), (zp(&[1, 1]), 1), (zp(&[1, 0, 1]), 1)]
        );
    }

    #[test]
    fn construct_then_factor_recovers_all_three() {
        // elliptic weight-1 numerator times (1-T)(1-5T)
        let p1 = zp(&[1, 3, 5]);
        let prod = &(&p1 * &zp(&[1, -1])) * &zp(&[1, -5]);
        let fs = factor_integer_poly(&prod).unwrap().factors;
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&(p1, 1)));
        assert!(fs.contains(&(zp(&[1, -1]), 1)));
        assert!(fs.contains(&(zp(&[1, -5]), 1)));
    }

    #[test]
    fn multiplicities_recovered() {
        // (1-T)^3 (1+2T)^2
        let mut prod = ZPoly::one();
        for _ in 0..3 {
            prod = &prod * &zp(&[1, -1]);
        }
        for _ in 0..2 {
            prod = &prod * &zp(&[1, 2]);
        }
        let fs = factor_integer_poly(&prod).unwrap().factors;
        assert_eq!(fs, vec![(zp(&[1, -1]), 3), (zp(&[1, 2]), 2)]);
    }

    #[test]
    fn irreducible_quadratic_stays_whole() {
        let fs = factors_of(&[1, -3, 13]); // complex roots, irreducible
        assert_eq!(fs, vec![(zp(&[1, -3, 13]), 1)]);
    }

    #[test]
    fn unit_polynomial_has_empty_factorization() {
        assert!(factors_of(&[1]).is_empty());
    }

    #[test]
    fn cap_and_constant_term_errors() {
        let mut coeffs = vec![0i64; 66];
        coeffs[0] = 1;
        coeffs[65] = 1;
        assert!(matches!(
            factor_integer_poly(&zp(&coeffs)),
            Err(FactorError::DegreeCapExceeded { degree: 65, cap: 64 })
        ));
        assert!(matches!(
            factor_integer_poly(&zp(&[2, 1])),
            Err(FactorError::ConstantTermNotOne)
        ));
    }

    #[test]
    fn product_invariant_holds() {
        for coeffs in [
            &[1i64, -1, -1, 1][..],       // (1-T)^2 (1+T)
            &[1, 2, 3, 4, 5],             // arbitrary
            &[1, 0, 0, 0, 0, 0, 0, 0, 1], // 1 + T^8
        ] {
            let p = zp(coeffs);
            let f = factor_integer_poly(&p).unwrap();
            assert_eq!(f.product(), p);
            for (h, _) in &f.factors {
                assert!(h.coeff(0).is_one());
            }
        }
    }

    #[test]
    fn factorization_is_deterministic() {
        let p = zp(&[1, -1, 2, -2, 3, -3]);
        assert_eq!(
            factor_integer_poly(&p).unwrap(),
            factor_integer_poly(&p).unwrap()
        );
    }
}
