//! Brute-force rational point counting over F_{q^m}.
//!
//! The fast path enumerates all but the last free coordinate of each chart
//! and counts the solutions of the restricted univariate system exactly, as
//! deg gcd(g, y^(q^m) - y). Charts whose equations vanish identically are
//! counted in closed form without enumeration. The naive reference counter
//! (`naive_count_points`) enumerates and tests every candidate point and is
//! kept independent of the fast path; tests compare the two.

use super::{Ambient, VarietyError, VarietySpec};
use crate::field::FieldParams;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::path::Path;

/// Tuning for the counting engine.
#[derive(Debug, Clone)]
pub struct CountOptions {
    /// Maximum number of candidate tuples enumerated per count_points call.
    pub budget: u64,
    /// Worker threads; None uses the global pool, Some(1) forces serial.
    pub jobs: Option<usize>,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            budget: 100_000_000,
            jobs: None,
        }
    }
}

/// The count sequence N_1..N_M of a variety, keyed by the spec digest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub spec_digest: String,
    pub counts: Vec<BigInt>,
}

/// An equation reduced into a chart: coefficients mod p over the free
/// variables only.
type ChartEq = Vec<(u64, Vec<u32>)>;

enum Chart {
    /// Some equation is a nonzero constant: no points.
    Dead,
    /// Every equation vanishes identically: q^(m·free) points.
    Free(usize),
    /// A genuine system over `free` variables.
    System { free: usize, eqs: Vec<ChartEq> },
}

/// Substitute the chart's fixed coordinates (zeros and a pivot 1) into the
/// integer equations and reduce coefficients mod p.
fn build_chart(spec: &VarietySpec, zeros: usize, pivot: Option<usize>) -> Chart {
    let nvars = spec.variables();
    let free_start = pivot.map_or(zeros, |k| k + 1);
    let free: Vec<usize> = (free_start..nvars).collect();
    let p = spec.p;

    let mut eqs: Vec<ChartEq> = Vec::new();
    for eq in &spec.equations {
        let mut reduced: std::collections::BTreeMap<Vec<u32>, u64> = Default::default();
        'term: for (coeff, exps) in &eq.terms {
            for z in 0..zeros {
                if exps[z] > 0 {
                    continue 'term; // x_z = 0 kills the term
                }
            }
            // pivot variable is 1: exponent drops out
            let free_exps: Vec<u32> = free.iter().map(|&i| exps[i]).collect();
            let c = coeff.mod_floor(&BigInt::from(p)).to_u64().unwrap();
            let entry = reduced.entry(free_exps).or_insert(0);
            *entry = (*entry + c) % p;
        }
        reduced.retain(|_, c| *c != 0);
        if reduced.is_empty() {
            continue; // equation vanishes on this chart
        }
        if reduced.len() == 1 && reduced.keys().next().unwrap().iter().all(|&e| e == 0) {
            return Chart::Dead; // nonzero constant
        }
        eqs.push(reduced.into_iter().map(|(e, c)| (c, e)).collect());
    }
    if eqs.is_empty() {
        Chart::Free(free.len())
    } else {
        Chart::System {
            free: free.len(),
            eqs,
        }
    }
}

fn charts_of(spec: &VarietySpec) -> Vec<Chart> {
    match spec.ambient {
        Ambient::Affine(_) => vec![build_chart(spec, 0, None)],
        Ambient::Projective(n) => (0..=n as usize)
            .map(|k| build_chart(spec, k, Some(k)))
            .collect(),
    }
}

/// Candidate tuples the fast path would enumerate for this chart list.
fn required_budget(charts: &[Chart], q_m: &BigUint) -> u128 {
    let mut total: u128 = 0;
    for chart in charts {
        if let Chart::System { free, eqs: _ } = chart {
            let add = match free {
                0 => 0u128,
                1 => 1,
                v => match q_m.to_u128() {
                    Some(q) => q.checked_pow(*v as u32 - 1).unwrap_or(u128::MAX),
                    None => u128::MAX,
                },
            };
            total = total.saturating_add(add);
        }
    }
    total
}

/// N_m = #X(F_{q^m}), exactly.
pub fn count_points(spec: &VarietySpec, m: u32, opts: &CountOptions) -> Result<BigInt, VarietyError> {
    assert!(m >= 1, "extension degree m starts at 1");
    let charts = charts_of(spec);
    let em64 = spec.e as u64 * m as u64;
    let q_m = BigUint::from(spec.p).pow(u32::try_from(em64).map_err(|_| {
        VarietyError::Field(crate::field::FieldError::CapExceeded(u32::MAX, u32::MAX))
    })?);

    let required = required_budget(&charts, &q_m);
    if required > opts.budget as u128 {
        return Err(VarietyError::BudgetExceeded {
            required,
            budget: opts.budget,
            feasible_terms: 0,
        });
    }

    // the ground field is only needed when a chart actually enumerates
    let needs_field = charts.iter().any(|c| matches!(c, Chart::System { .. }));
    let field = if needs_field {
        Some(FieldParams::generate(spec.p, em64 as u32)?)
    } else {
        None
    };

    let mut total = BigInt::zero();
    for chart in &charts {
        match chart {
            Chart::Dead => {}
            Chart::Free(v) => {
                total += BigInt::from(q_m.pow(*v as u32));
            }
            Chart::System { free, eqs } => {
                let field = field.as_ref().unwrap();
                total += count_system_chart(field, &q_m, *free, eqs, opts);
            }
        }
    }
    Ok(total)
}

/// A univariate polynomial over F_{q^m}: dense, coefficients are raw field
/// element vectors, no trailing zeros.
type UPoly = Vec<Vec<u64>>;

fn utrim(v: &mut UPoly, field: &FieldParams) {
    while v.last().map_or(false, |c| field.is_zero_raw(c)) {
        v.pop();
    }
}

fn umulmod(a: &UPoly, b: &UPoly, modulus: &UPoly, field: &FieldParams) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod: UPoly = vec![field.zero_raw(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero_raw(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = field.mul_raw(x, y);
            prod[i + j] = field.add_raw(&prod[i + j], &t);
        }
    }
    utrim(&mut prod, field);
    urem(prod, modulus, field)
}

/// Remainder of a by d (d nonzero, trimmed).
fn urem(mut a: UPoly, d: &UPoly, field: &FieldParams) -> UPoly {
    let dd = d.len() - 1;
    let lead_inv = field
        .inv_raw(&d[dd])
        .expect("divisor has nonzero leading coefficient");
    while a.len() > dd {
        let top = a.len() - 1;
        let q = field.mul_raw(&a[top], &lead_inv);
        if !field.is_zero_raw(&q) {
            for j in 0..dd {
                let t = field.mul_raw(&q, &d[j]);
                a[top - dd + j] = field.sub_raw(&a[top - dd + j], &t);
            }
        }
        a.pop();
        utrim(&mut a, field);
    }
    a
}

fn ugcd(mut a: UPoly, mut b: UPoly, field: &FieldParams) -> UPoly {
    utrim(&mut a, field);
    utrim(&mut b, field);
    while !b.is_empty() {
        let r = urem(a, &b, field);
        a = b;
        b = r;
    }
    a
}

/// O(1) root counting for monic quadratics, backed by a once-per-chart
/// table: squares of F_{q^m} in odd characteristic, the Artin-Schreier
/// image t² + t in characteristic 2.
struct QuadSolver {
    char2: bool,
    bits: Vec<u64>,
}

fn element_index(field: &FieldParams, elem: &[u64]) -> u64 {
    let mut idx = 0u64;
    for &c in elem.iter().rev() {
        idx = idx * field.p() + c;
    }
    idx
}

impl QuadSolver {
    fn build(field: &FieldParams, q_m: u64) -> QuadSolver {
        let mut bits = vec![0u64; (q_m as usize + 63) / 64];
        let char2 = field.p() == 2;
        let mut t = field.zero_raw();
        for _ in 0..q_m {
            let image = if char2 {
                field.add_raw(&field.mul_raw(&t, &t), &t)
            } else {
                field.mul_raw(&t, &t)
            };
            let j = element_index(field, &image) as usize;
            bits[j / 64] |= 1 << (j % 64);
            // next element in index order
            for slot in t.iter_mut() {
                *slot += 1;
                if *slot < field.p() {
                    break;
                }
                *slot = 0;
            }
        }
        QuadSolver { char2, bits }
    }

    fn marked(&self, idx: u64) -> bool {
        self.bits[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// Distinct roots of y² + b·y + c.
    fn roots_of_monic_quadratic(&self, field: &FieldParams, b: &[u64], c: &[u64]) -> u64 {
        if self.char2 {
            if field.is_zero_raw(b) {
                return 1; // squaring is a bijection
            }
            // y = b·t turns the equation into t² + t = c/b²
            let b_inv = field.inv_raw(b).expect("nonzero");
            let z = field.mul_raw(&field.mul_raw(c, &b_inv), &b_inv);
            if self.marked(element_index(field, &z)) {
                2
            } else {
                0
            }
        } else {
            // (2y + b)² = b² - 4c
            let b2 = field.mul_raw(b, b);
            let four_c = field.mul_raw(&field.from_u64_raw(4), c);
            let disc = field.sub_raw(&b2, &four_c);
            if field.is_zero_raw(&disc) {
                1
            } else if self.marked(element_index(field, &disc)) {
                2
            } else {
                0
            }
        }
    }
}

/// Number of distinct roots of g in F_{q^m}: deg gcd(g, y^(q^m) - y).
fn root_count(g: &UPoly, q_m: &BigUint, field: &FieldParams) -> u64 {
    let deg = g.len() - 1;
    if deg == 0 {
        return 0;
    }
    if deg == 1 {
        return 1; // linear: exactly one root in the field
    }
    // y^(q^m) mod g by square-and-multiply
    let y: UPoly = vec![field.zero_raw(), field.from_u64_raw(1)];
    let mut acc: UPoly = vec![field.from_u64_raw(1)];
    for i in (0..q_m.bits()).rev() {
        acc = umulmod(&acc, &acc, g, field);
        if q_m.bit(i) {
            acc = umulmod(&acc, &y, g, field);
        }
    }
    // gcd(g, y^(q^m) - y)
    acc.resize(2.max(acc.len()), field.zero_raw());
    acc[1] = field.sub_raw(&acc[1], &field.from_u64_raw(1));
    let mut diff = acc;
    utrim(&mut diff, field);
    let g_cd = ugcd(g.clone(), diff, field);
    g_cd.len().saturating_sub(1) as u64
}

/// One equation compiled against a concrete field: per power of the last
/// variable, the prefix-variable terms with coefficients embedded as field
/// constants.
struct CompiledEq {
    by_ydeg: Vec<Vec<(Vec<u64>, Vec<u32>)>>,
}

fn compile_eqs(eqs: &[ChartEq], free: usize, field: &FieldParams) -> (Vec<CompiledEq>, Vec<u32>) {
    let prefix_vars = free - 1;
    let mut max_exp = vec![0u32; prefix_vars];
    let mut compiled = Vec::with_capacity(eqs.len());
    for eq in eqs {
        let ydeg_max = eq.iter().map(|(_, e)| e[prefix_vars]).max().unwrap_or(0) as usize;
        let mut by_ydeg: Vec<Vec<(Vec<u64>, Vec<u32>)>> = vec![Vec::new(); ydeg_max + 1];
        for (c, exps) in eq {
            let ydeg = exps[prefix_vars] as usize;
            let prefix: Vec<u32> = exps[..prefix_vars].to_vec();
            for (i, &e) in prefix.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
            by_ydeg[ydeg].push((field.from_u64_raw(*c), prefix));
        }
        compiled.push(CompiledEq { by_ydeg });
    }
    (compiled, max_exp)
}

/// Solutions of the restricted univariate system at one prefix; None means
/// every value of the last variable works.
fn prefix_solutions(
    compiled: &[CompiledEq],
    powers: &[Vec<Vec<u64>>],
    q_m: &BigUint,
    field: &FieldParams,
    quad: Option<&QuadSolver>,
) -> Option<u64> {
    let mut gcd_acc: Option<UPoly> = None;
    for eq in compiled {
        let mut coeffs: UPoly = Vec::with_capacity(eq.by_ydeg.len());
        for terms in &eq.by_ydeg {
            let mut acc = field.zero_raw();
            for (c, exps) in terms {
                let mut t = c.clone();
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        t = field.mul_raw(&t, &powers[i][e as usize]);
                    }
                }
                acc = field.add_raw(&acc, &t);
            }
            coeffs.push(acc);
        }
        utrim(&mut coeffs, field);
        if coeffs.is_empty() {
            continue; // this equation vanishes at the prefix
        }
        if coeffs.len() == 1 {
            return Some(0); // nonzero constant: no solutions, short-circuit
        }
        gcd_acc = Some(match gcd_acc {
            None => coeffs,
            Some(g) => {
                let g = ugcd(g, coeffs, field);
                if g.len() == 1 {
                    return Some(0); // coprime system
                }
                g
            }
        });
    }
    match gcd_acc {
        None => None, // all equations vanished: the last variable is free
        Some(g) => {
            if g.len() == 3 {
                if let Some(solver) = quad {
                    let lead_inv = field.inv_raw(&g[2]).expect("nonzero leading coefficient");
                    let b = field.mul_raw(&g[1], &lead_inv);
                    let c = field.mul_raw(&g[0], &lead_inv);
                    return Some(solver.roots_of_monic_quadratic(field, &b, &c));
                }
            }
            Some(root_count(&g, q_m, field))
        }
    }
}

fn count_system_chart(
    field: &FieldParams,
    q_m: &BigUint,
    free: usize,
    eqs: &[ChartEq],
    opts: &CountOptions,
) -> BigInt {
    if free == 0 {
        // all equations are nonzero constants mod p or vanished at build
        // time; a System chart with no free variables cannot occur because
        // build_chart already classified constants
        unreachable!("constant systems are resolved during chart construction");
    }
    let (compiled, max_exp) = compile_eqs(eqs, free, field);

    if free == 1 {
        // single candidate: the empty prefix
        let powers: Vec<Vec<Vec<u64>>> = Vec::new();
        return match prefix_solutions(&compiled, &powers, q_m, field, None) {
            None => BigInt::from(q_m.clone()),
            Some(k) => BigInt::from(k),
        };
    }

    let prefix_vars = free - 1;
    let q_m_u64 = q_m.to_u64().expect("budget check bounds the field size");
    let prefix_total = q_m_u64
        .checked_pow(prefix_vars as u32)
        .expect("budget check bounds the prefix space");

    // a square/Artin-Schreier table turns quadratic restrictions into O(1)
    // lookups; building it costs one pass over the field, worth it when the
    // prefix space is at least comparable
    let has_quadratic = compiled.iter().any(|eq| eq.by_ydeg.len() == 3);
    let quad_solver = if has_quadratic && 4 * prefix_total >= q_m_u64 && q_m_u64 <= 1 << 28 {
        Some(QuadSolver::build(field, q_m_u64))
    } else {
        None
    };
    let quad = quad_solver.as_ref();

    let eval_range = |lo: u64, hi: u64| -> u64 {
        let mut sum = 0u64;
        let mut powers: Vec<Vec<Vec<u64>>> = max_exp
            .iter()
            .map(|&e| Vec::with_capacity(e as usize + 1))
            .collect();
        for idx in lo..hi {
            // decode the prefix: base-q digits, then power tables
            let mut rest = idx;
            for (i, table) in powers.iter_mut().enumerate() {
                let digit = rest % q_m_u64;
                rest /= q_m_u64;
                let x = field.element_from_index(digit);
                table.clear();
                table.push(field.from_u64_raw(1));
                for e in 1..=max_exp[i] as usize {
                    let next = field.mul_raw(&table[e - 1], &x);
                    table.push(next);
                }
            }
            sum += match prefix_solutions(&compiled, &powers, q_m, field) {
                None => q_m_u64,
                Some(k) => k,
            };
        }
        sum
    };

    const CHUNK: u64 = 1 << 12;
    let run_parallel = || -> u64 {
        if prefix_total <= CHUNK {
            return eval_range(0, prefix_total);
        }
        let chunks = prefix_total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * CHUNK;
                let hi = (lo + CHUNK).min(prefix_total);
                eval_range(lo, hi)
            })
            .sum()
    };

    let total: u64 = match opts.jobs {
        Some(1) => eval_range(0, prefix_total),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(run_parallel),
        None => run_parallel(),
    };
    BigInt::from(total)
}

/// Slow reference counter: enumerates every candidate point and tests the
/// equations term by term. Independent of the chart/gcd fast path; used as
/// the test oracle.
pub fn naive_count_points(spec: &VarietySpec, m: u32) -> Result<BigInt, VarietyError> {
    let em = spec.e as u64 * m as u64;
    let field = FieldParams::generate(spec.p, u32::try_from(em).expect("degree fits"))?;
    let nvars = spec.variables();

    let consts: Vec<Vec<(Vec<u64>, Vec<u32>)>> = spec
        .equations
        .iter()
        .map(|eq| {
            eq.terms
                .iter()
                .map(|(c, exps)| {
                    let r = c.mod_floor(&BigInt::from(spec.p)).to_u64().unwrap();
                    (field.from_u64_raw(r), exps.clone())
                })
                .collect()
        })
        .collect();

    let satisfied = |point: &[Vec<u64>]| -> bool {
        consts.iter().all(|terms| {
            let mut acc = field.zero_raw();
            for (c, exps) in terms {
                let mut t = c.clone();
                for (i, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        t = field.mul_raw(&t, &point[i]);
                    }
                }
                acc = field.add_raw(&acc, &t);
            }
            field.is_zero_raw(&acc)
        })
    };

    let elements: Vec<Vec<u64>> = field.enumerate().map(|a| a.coeffs().to_vec()).collect();
    let mut total = BigInt::zero();
    match spec.ambient {
        Ambient::Affine(_) => {
            let mut count = 0u64;
            for_tuples(&elements, nvars, &mut |point| {
                if satisfied(point) {
                    count += 1;
                }
            });
            total += count;
        }
        Ambient::Projective(n) => {
            for k in 0..=n as usize {
                let mut count = 0u64;
                let tail = nvars - k - 1;
                for_tuples(&elements, tail, &mut |suffix| {
                    let mut point: Vec<Vec<u64>> = Vec::with_capacity(nvars);
                    for _ in 0..k {
                        point.push(field.zero_raw());
                    }
                    point.push(field.from_u64_raw(1));
                    point.extend(suffix.iter().cloned());
                    if satisfied(&point) {
                        count += 1;
                    }
                });
                total += count;
            }
        }
    }
    Ok(total)
}

fn for_tuples(elements: &[Vec<u64>], len: usize, visit: &mut dyn FnMut(&[Vec<u64>])) {
    let mut tuple: Vec<Vec<u64>> = vec![elements[0].clone(); len];
    let mut idx = vec![0usize; len];
    loop {
        visit(&tuple);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            idx[i] += 1;
            if idx[i] < elements.len() {
                tuple[i] = elements[idx[i]].clone();
                break;
            }
            idx[i] = 0;
            tuple[i] = elements[0].clone();
            i += 1;
        }
    }
}

/// N_1..N_M with cache consultation and write-back.
pub fn count_series(
    spec: &VarietySpec,
    terms: usize,
    opts: &CountOptions,
    cache_path: Option<&Path>,
) -> Result<CountSeries, VarietyError> {
    assert!(terms >= 1);
    let digest = spec.digest();
    let cached = match cache_path {
        Some(path) => super::cache::read_cached_counts(path, &digest)?,
        None => Default::default(),
    };

    let mut counts = Vec::with_capacity(terms);
    let mut fresh: Vec<(u32, BigInt)> = Vec::new();
    for m in 1..=terms as u32 {
        if let Some(n) = cached.get(&m) {
            counts.push(n.clone());
            continue;
        }
        match count_points(spec, m, opts) {
            Ok(n) => {
                debug_assert!(!n.is_negative());
                fresh.push((m, n.clone()));
                counts.push(n);
            }
            Err(VarietyError::BudgetExceeded {
                required, budget, ..
            }) => {
                return Err(VarietyError::BudgetExceeded {
                    required,
                    budget,
                    feasible_terms: m as usize - 1,
                })
            }
            Err(other) => return Err(other),
        }
    }
    if let Some(path) = cache_path {
        if !fresh.is_empty() {
            super::cache::append_counts(path, &digest, &fresh)?;
        }
    }
    Ok(CountSeries {
        spec_digest: digest,
        counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::parse_variety;

    fn opts() -> CountOptions {
        CountOptions::default()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn projective_line_over_f5() {
        let spec = parse_variety("p=5 e=1 projective n=1\n").unwrap();
        assert_eq!(count_points(&spec, 1, &opts()).unwrap(), BigInt::from(6));
    }

    #[test]
    fn affine_line_over_f4_in_degree_two() {
        let spec = parse_variety("p=2 e=2 affine n=1\n").unwrap();
        assert_eq!(count_points(&spec, 2, &opts()).unwrap(), BigInt::from(16));
    }

    #[test]
    fn elliptic_fixture_matches_the_naive_oracle() {
        let spec =
            parse_variety("p=5 e=1 projective n=2\nf: x0*x2^2 - x1^3 - x1*x0^2 - x0^3\n").unwrap();
        let naive = naive_count_points(&spec, 1).unwrap();
        assert_eq!(naive, BigInt::from(9)); // frozen from the 31-point scan
        assert_eq!(count_points(&spec, 1, &opts()).unwrap(), naive);
        // a couple of extensions as well
        for m in 2..=3 {
            assert_eq!(
                count_points(&spec, m, &opts()).unwrap(),
                naive_count_points(&spec, m).unwrap()
            );
        }
    }

    #[test]
    fn count_series_of_projective_spaces() {
        let p1 = parse_variety("p=2 e=1 projective n=1\n").unwrap();
        let s = count_series(&p1, 4, &opts(), None).unwrap();
        assert_eq!(s.counts, big(&[3, 5, 9, 17]));

        let p2 = parse_variety("p=2 e=1 projective n=2\n").unwrap();
        let s = count_series(&p2, 3, &opts(), None).unwrap();
        assert_eq!(s.counts, big(&[7, 21, 73]));
    }

    #[test]
    fn multiplicative_group_as_affine_hyperbola() {
        let spec = parse_variety("p=5 e=1 affine n=2\nf: x0*x1 - 1\n").unwrap();
        for m in 1..=3 {
            let expect = BigInt::from(5i64.pow(m) - 1);
            assert_eq!(count_points(&spec, m, &opts()).unwrap(), expect);
            assert_eq!(naive_count_points(&spec, m).unwrap(), expect);
        }
    }

    #[test]
    fn fast_path_agrees_with_naive_on_small_corpus() {
        let corpus = [
            "p=2 e=1 projective n=2\nconic: x0*x1 - x2^2\n",
            "p=3 e=1 projective n=2\nnodal: x2^2*x0 - x1^3 - x1^2*x0\n",
            "p=2 e=1 affine n=3\nsurf: x0*x1*x2 - 1\n",
            "p=3 e=1 affine n=2\ncusp: x1^2 - x0^3\n",
            "p=2 e=2 projective n=1\n",
            "p=5 e=1 affine n=1\nzero_eq: 5*x0\n",
        ];
        for src in corpus {
            let spec = parse_variety(src).unwrap();
            for m in 1..=2 {
                assert_eq!(
                    count_points(&spec, m, &opts()).unwrap(),
                    naive_count_points(&spec, m).unwrap(),
                    "disagreement on {src} at m={m}"
                );
            }
        }
    }

    #[test]
    fn stratification_counts_add_up() {
        // N(X) = N(X ∩ {x0=0}) + N(X ∖ {x0=0}) for projective fixtures
        let fixtures = [
            "p=5 e=1 projective n=2\nf: x0*x2^2 - x1^3 - x1*x0^2 - x0^3\n",
            "p=3 e=1 projective n=2\n",
            "p=2 e=1 projective n=3\nquadric: x0*x1 - x2*x3\n",
        ];
        for src in fixtures {
            let spec = parse_variety(src).unwrap();
            let section = spec.hyperplane_section(0);
            let chart = spec.affine_chart(0);
            for m in 1..=2 {
                let whole = count_points(&spec, m, &opts()).unwrap();
                let closed = count_points(&section, m, &opts()).unwrap();
                let open = count_points(&chart, m, &opts()).unwrap();
                assert_eq!(whole, &closed + &open, "stratification failed for {src}");
            }
        }
    }

    #[test]
    fn base_change_tower_coherence() {
        // counting with (p, e·k, m) equals counting with (p, e, k·m)
        let over_f4 = parse_variety("p=2 e=2 affine n=2\nf: x0*x1 - 1\n").unwrap();
        let over_f2 = parse_variety("p=2 e=1 affine n=2\nf: x0*x1 - 1\n").unwrap();
        for m in 1..=3 {
            assert_eq!(
                count_points(&over_f4, m, &opts()).unwrap(),
                count_points(&over_f2, 2 * m, &opts()).unwrap()
            );
        }
    }

    #[test]
    fn parallel_and_serial_agree() {
        let spec =
            parse_variety("p=5 e=1 projective n=2\nf: x0*x2^2 - x1^3 - x1*x0^2 - x0^3\n").unwrap();
        let serial = CountOptions {
            jobs: Some(1),
            ..opts()
        };
        let parallel = CountOptions {
            jobs: Some(4),
            ..opts()
        };
        for m in 1..=4 {
            assert_eq!(
                count_points(&spec, m, &serial).unwrap(),
                count_points(&spec, m, &parallel).unwrap()
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let spec = parse_variety("p=5 e=1 affine n=3\nf: x0*x1*x2 - 1\n").unwrap();
        let tight = CountOptions {
            budget: 10,
            ..opts()
        };
        match count_points(&spec, 2, &tight) {
            Err(VarietyError::BudgetExceeded {
                required, budget, ..
            }) => {
                assert_eq!(required, 625);
                assert_eq!(budget, 10);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn count_series_reports_largest_feasible_terms() {
        let spec = parse_variety("p=5 e=1 affine n=2\nf: x0*x1 - 1\n").unwrap();
        let tight = CountOptions {
            budget: 30,
            ..opts()
        };
        match count_series(&spec, 4, &tight, None) {
            Err(VarietyError::BudgetExceeded { feasible_terms, .. }) => {
                assert_eq!(feasible_terms, 2) // 5 and 25 fit, 125 does not
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn projective_point_with_no_free_variables() {
        // P^0 is a single point; the pivot chart has no free variables
        let spec = parse_variety("p=7 e=1 projective n=0\n").unwrap();
        assert_eq!(count_points(&spec, 1, &opts()).unwrap(), BigInt::from(1));
        // and a dead chart: constant equation 1 = 0
        let dead = parse_variety("p=7 e=1 projective n=0\nf: x0^2\n").unwrap();
        assert_eq!(count_points(&dead, 1, &opts()).unwrap(), BigInt::from(0));
    }

    #[test]
    fn closed_forms_skip_field_construction() {
        // e·m = 26 exceeds the field degree cap, but P^1 needs no field
        let spec = parse_variety("p=2 e=2 projective n=1\n").unwrap();
        let n13 = count_points(&spec, 13, &opts()).unwrap();
        let q13 = BigInt::from(4).pow(13);
        assert_eq!(n13, &q13 + 1);
    }
}
