//! Exact membership, transforms and enumeration for q-Weil polynomials.
//!
//! A monic integer polynomial is a Weil polynomial for the modulus `N = q^w`
//! when every complex root `α` satisfies `|α|² = N`. Membership is decided
//! without floating point:
//!
//! 1. strip the real roots `±√N` (or powers of `x² − N` when `√N` is
//!    irrational);
//! 2. check the reversal identity `x^{2g} p₁(N/x) = N^g p₁(x)`;
//! 3. rewrite `p₁(x) = x^g h(x + N/x)`;
//! 4. certify that `h` has all `g` roots in `[−2√N, 2√N]` with a Sturm count
//!    evaluated in `Z[√N]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, exact_sqrt, isqrt, prime_power};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::sturm::root_count_with_multiplicity;
use crate::surd::QuadraticSurd;

/// Residue cardinality `q` (a prime power) and weight `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilParams {
    q: BigInt,
    w: u32,
    modulus: BigInt,
}

impl WeilParams {
    pub fn new(q: BigInt, w: u32) -> Result<Self> {
        if prime_power(&q).is_none() {
            return Err(Error::NotPrimePower(q.to_string()));
        }
        let modulus = q.pow(w);
        Ok(Self { q, w, modulus })
    }

    pub fn from_u64(q: u64, w: u32) -> Result<Self> {
        Self::new(BigInt::from(q), w)
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn weight(&self) -> u32 {
        self.w
    }

    /// `N = q^w`
    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }
}

/// Witness that every root of a polynomial lies on the circle `|z|² = N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilCertificate {
    pub mult_plus: usize,
    pub mult_minus: usize,
    pub real_weil_part: IntPolynomial,
    pub sturm_count: usize,
    pub epsilon: i8,
}

impl WeilCertificate {
    /// Rebuild `(x − √N)^{m₊}(x + √N)^{m₋} · x^g h(x + N/x)`.
    pub fn reconstruct(&self, n: &BigInt) -> IntPolynomial {
        let p1 = inverse_transform(&self.real_weil_part, n);
        let linear = match exact_sqrt(n) {
            Some(s) => {
                &IntPolynomial::linear(&s).pow(self.mult_plus as u32)
                    * &IntPolynomial::linear(&-s).pow(self.mult_minus as u32)
            }
            None => {
                debug_assert_eq!(self.mult_plus, self.mult_minus);
                IntPolynomial::new(vec![-n.clone(), BigInt::zero(), BigInt::one()])
                    .pow(self.mult_plus as u32)
            }
        };
        &linear * &p1
    }
}

/// Stage at which a candidate failed certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum Rejection {
    /// Odd remainder degree, or `x^{2g}p₁(N/x) ≠ ±N^g p₁(x)`.
    Reversal,
    /// Reversal holds with sign −1, so no `h` with `p₁ = x^g h(x + N/x)` exists.
    Transform,
    /// `h` has fewer than `g` roots (with multiplicity) in `[−2√N, 2√N]`.
    RootLocation { found: usize, expected: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeilVerdict {
    Certified(WeilCertificate),
    Rejected(Rejection),
}

impl WeilVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, WeilVerdict::Certified(_))
    }

    pub fn certificate(&self) -> Option<&WeilCertificate> {
        match self {
            WeilVerdict::Certified(c) => Some(c),
            WeilVerdict::Rejected(_) => None,
        }
    }
}

pub fn is_weil_polynomial(p: &IntPolynomial, params: &WeilParams) -> Result<WeilVerdict> {
    is_weil_polynomial_mod(p, params.modulus())
}

/// Same as [`is_weil_polynomial`] for an arbitrary positive modulus `N`.
pub fn is_weil_polynomial_mod(p: &IntPolynomial, n: &BigInt) -> Result<WeilVerdict> {
    if !n.is_positive() {
        return Err(Error::BadModulus(n.to_string()));
    }
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let (mult_plus, mult_minus, p1) = strip_real_roots(p, n);
    if p1.degree() % 2 == 1 {
        return Ok(WeilVerdict::Rejected(Rejection::Reversal));
    }
    let g = p1.degree() / 2;
    let epsilon = match reversal_sign(&p1, n) {
        Some(e) => e,
        None => return Ok(WeilVerdict::Rejected(Rejection::Reversal)),
    };
    if epsilon < 0 {
        return Ok(WeilVerdict::Rejected(Rejection::Transform));
    }
    let h = match transform_unchecked(&p1, n) {
        Some(h) => h,
        None => return Ok(WeilVerdict::Rejected(Rejection::Transform)),
    };
    let (lo, hi) = circle_shadow(n);
    let found = root_count_with_multiplicity(&h, &lo, &hi)?;
    if found != g {
        return Ok(WeilVerdict::Rejected(Rejection::RootLocation {
            found,
            expected: g,
        }));
    }
    Ok(WeilVerdict::Certified(WeilCertificate {
        mult_plus,
        mult_minus,
        real_weil_part: h,
        sturm_count: found,
        epsilon,
    }))
}

/// `[−2√N, 2√N]` as elements of `Q(√N)`.
fn circle_shadow(n: &BigInt) -> (QuadraticSurd, QuadraticSurd) {
    let hi = QuadraticSurd::sqrt_times(BigRational::from_integer(BigInt::from(2)), n);
    (-&hi, hi)
}

fn strip_real_roots(p: &IntPolynomial, n: &BigInt) -> (usize, usize, IntPolynomial) {
    let mut rest = p.clone();
    let strip = |rest: &mut IntPolynomial, f: &IntPolynomial| {
        let mut k = 0;
        while let Some(q) = rest.exact_div_monic(f) {
            *rest = q;
            k += 1;
        }
        k
    };
    match exact_sqrt(n) {
        Some(s) => {
            let plus = strip(&mut rest, &IntPolynomial::linear(&s));
            let minus = strip(&mut rest, &IntPolynomial::linear(&-s));
            (plus, minus, rest)
        }
        None => {
            let quad = IntPolynomial::new(vec![-n.clone(), BigInt::zero(), BigInt::one()]);
            let k = strip(&mut rest, &quad);
            (k, k, rest)
        }
    }
}

/// `Some(ε)` when `x^{2g} p₁(N/x) = ε N^g p₁(x)` with `ε = ±1`.
fn reversal_sign(p1: &IntPolynomial, n: &BigInt) -> Option<i8> {
    let g = (p1.degree() / 2) as u32;
    let rev = p1.scaled_reversal(n);
    let ng = n.pow(g);
    let scaled = IntPolynomial::new(p1.coeffs().iter().map(|c| c * &ng).collect());
    if rev == scaled {
        Some(1)
    } else if rev == -&scaled {
        Some(-1)
    } else {
        None
    }
}

/// Coefficients of `x^{g−k}(x² + N)^k` for `k = 0..=g`.
fn transform_basis(g: usize, n: &BigInt) -> Vec<IntPolynomial> {
    let base = IntPolynomial::new(vec![n.clone(), BigInt::zero(), BigInt::one()]);
    (0..=g)
        .map(|k| {
            let mut shift = vec![BigInt::zero(); g - k];
            shift.push(BigInt::one());
            &IntPolynomial::new(shift) * &base.pow(k as u32)
        })
        .collect()
}

/// Triangular solve for `h` with `p₁ = x^g h(x + N/x)`; `None` if no such `h`.
fn transform_unchecked(p1: &IntPolynomial, n: &BigInt) -> Option<IntPolynomial> {
    let g = p1.degree() / 2;
    let basis = transform_basis(g, n);
    let mut rem = p1.clone();
    let mut h = vec![BigInt::zero(); g + 1];
    for k in (0..=g).rev() {
        let c = rem.coeff(g + k);
        if !c.is_zero() {
            let term = IntPolynomial::new(basis[k].coeffs().iter().map(|b| b * &c).collect());
            rem = &rem - &term;
        }
        h[k] = c;
    }
    rem.is_zero().then(|| IntPolynomial::new(h))
}

/// `x^g h(x + N/x)` for `h` of degree `g`.
pub fn inverse_transform(h: &IntPolynomial, n: &BigInt) -> IntPolynomial {
    if h.is_zero() {
        return IntPolynomial::zero();
    }
    let g = h.degree();
    transform_basis(g, n)
        .iter()
        .zip(h.coeffs())
        .fold(IntPolynomial::zero(), |acc, (b, c)| {
            &acc + &IntPolynomial::new(b.coeffs().iter().map(|x| x * c).collect())
        })
}

/// The unique monic `h` with `p₁(x) = x^g h(x + N/x)`.
pub fn real_weil_transform(p1: &IntPolynomial, n: &BigInt) -> Result<IntPolynomial> {
    if !n.is_positive() {
        return Err(Error::BadModulus(n.to_string()));
    }
    if !p1.is_monic() {
        return Err(Error::NotMonic);
    }
    if p1.degree() % 2 == 1 {
        return Err(Error::OddDegree(p1.degree()));
    }
    let vanishes_at_root = match exact_sqrt(n) {
        Some(s) => p1.eval(&s).is_zero() || p1.eval(&-s).is_zero(),
        None => p1
            .exact_div_monic(&IntPolynomial::new(vec![
                -n.clone(),
                BigInt::zero(),
                BigInt::one(),
            ]))
            .is_some(),
    };
    if vanishes_at_root {
        return Err(Error::RootAtSqrtModulus);
    }
    if reversal_sign(p1, n) != Some(1) {
        return Err(Error::ReversalFails);
    }
    transform_unchecked(p1, n).ok_or(Error::ReversalFails)
}

/// Enumeration output in its JSON wire shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub q: String,
    pub w: u32,
    pub degree: usize,
    pub polynomials: Vec<IntPolynomial>,
}

pub fn enumerate_weil_polynomials(
    params: &WeilParams,
    m: usize,
    irreducible_only: bool,
) -> Result<Vec<IntPolynomial>> {
    enumerate_weil_polynomials_mod(params.modulus(), m, irreducible_only)
}

pub fn enumeration_report(
    params: &WeilParams,
    m: usize,
    irreducible_only: bool,
) -> Result<Enumeration> {
    Ok(Enumeration {
        q: params.q().to_string(),
        w: params.weight(),
        degree: m,
        polynomials: enumerate_weil_polynomials(params, m, irreducible_only)?,
    })
}

/// Every monic integer polynomial of degree `m` whose roots satisfy
/// `|α|² = N`, sorted by [`IntPolynomial`]'s order (coefficients compared
/// from the top down).
///
/// The search runs over the top half of the coefficient box
/// `|a_i| ≤ C(m, m−i) N^{(m−i)/2}` with Newton power-sum pruning
/// `|p_k| ≤ m N^{k/2}` at every prefix. The lower half is then forced by
/// `a_i N^i = a_0 a_{m−i}` (the root multiset is closed under `α ↦ N/α = ᾱ`)
/// with `a_0 = ±N^{m/2}`. Every survivor is certified exactly.
pub fn enumerate_weil_polynomials_mod(
    n: &BigInt,
    m: usize,
    irreducible_only: bool,
) -> Result<Vec<IntPolynomial>> {
    if !n.is_positive() {
        return Err(Error::BadModulus(n.to_string()));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let all = enumerate_all_weil(n, m);
    if !irreducible_only {
        return Ok(all);
    }
    let divisors: Vec<IntPolynomial> = (1..=m / 2).flat_map(|d| enumerate_all_weil(n, d)).collect();
    Ok(all
        .into_iter()
        .filter(|p| !has_divisor(p, &divisors))
        .collect())
}

fn has_divisor(p: &IntPolynomial, divisors: &[IntPolynomial]) -> bool {
    divisors.iter().any(|d| p.exact_div_monic(d).is_some())
}

/// `N^{m/2}` when it is an integer.
fn half_power(n: &BigInt, m: usize) -> Option<BigInt> {
    if m % 2 == 0 {
        Some(n.pow((m / 2) as u32))
    } else {
        exact_sqrt(n).map(|s| s.pow(m as u32))
    }
}

struct WeilSearch<'a> {
    n: &'a BigInt,
    m: usize,
    /// floor of `C(m, k) N^{k/2}`, indexed by k.
    coeff_box: Vec<BigInt>,
    /// floor of `m N^{k/2}` for k up to 2m.
    power_box: Vec<BigInt>,
}

impl<'a> WeilSearch<'a> {
    fn new(n: &'a BigInt, m: usize) -> Self {
        let coeff_box = (0..=m)
            .map(|k| {
                let c = binomial(m as u64, k as u64);
                isqrt(&(&c * &c * n.pow(k as u32)))
            })
            .collect();
        let mm = BigInt::from(m);
        let power_box = (0..=2 * m)
            .map(|k| isqrt(&(&mm * &mm * n.pow(k as u32))))
            .collect();
        Self {
            n,
            m,
            coeff_box,
            power_box,
        }
    }

    /// Candidate range for `e_k` given `e_1..e_{k-1}` and `p_1..p_{k-1}`.
    fn next_range(&self, e: &[BigInt], p: &[BigInt]) -> Option<(BigInt, BigInt)> {
        let k = e.len() + 1;
        let s = newton_partial(e, p, k);
        let kk = BigInt::from(k);
        // p_k = s + (-1)^{k-1} k e_k, |p_k| <= B
        let b = &self.power_box[k];
        let (lo, hi) = if k % 2 == 1 {
            (ceil_div(&(-b - &s), &kk), floor_div(&(b - &s), &kk))
        } else {
            (ceil_div(&(&s - b), &kk), floor_div(&(&s + b), &kk))
        };
        let cb = &self.coeff_box[k];
        let lo = lo.max(-cb.clone());
        let hi = hi.min(cb.clone());
        (lo <= hi).then_some((lo, hi))
    }

    fn search(&self, epsilon: i8, a0: &BigInt, top: Option<BigInt>) -> Vec<IntPolynomial> {
        let mut out = Vec::new();
        let mut e = Vec::new();
        let mut p = Vec::new();
        if let Some(e1) = top {
            p.push(e1.clone());
            e.push(e1);
        }
        self.dfs(epsilon, a0, &mut e, &mut p, &mut out);
        out
    }

    fn dfs(
        &self,
        epsilon: i8,
        a0: &BigInt,
        e: &mut Vec<BigInt>,
        p: &mut Vec<BigInt>,
        out: &mut Vec<IntPolynomial>,
    ) {
        let half = self.m / 2;
        if e.len() == half {
            if let Some(poly) = self.complete(a0, e) {
                out.push(poly);
            }
            return;
        }
        let Some((lo, hi)) = self.next_range(e, p) else {
            return;
        };
        let k = e.len() + 1;
        let mut ek = lo;
        while ek <= hi {
            // middle coefficient vanishes when the reversal sign is -1
            if !(epsilon < 0 && self.m % 2 == 0 && k == half && !ek.is_zero()) {
                let pk = newton_partial(e, p, k) + sign_pow(k - 1) * BigInt::from(k) * &ek;
                e.push(ek.clone());
                p.push(pk);
                self.dfs(epsilon, a0, e, p, out);
                e.pop();
                p.pop();
            }
            ek += 1;
        }
    }

    /// Fill the lower half from the symmetry, re-check bounds, certify.
    fn complete(&self, a0: &BigInt, e: &[BigInt]) -> Option<IntPolynomial> {
        let m = self.m;
        let mut a = vec![BigInt::zero(); m + 1];
        a[m] = BigInt::one();
        for (k, ek) in e.iter().enumerate() {
            let k = k + 1;
            a[m - k] = sign_pow(k) * ek;
        }
        for i in 0..m.div_ceil(2) {
            let num = a0 * &a[m - i];
            let den = self.n.pow(i as u32);
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return None;
            }
            if i > 0 && q.abs() > self.coeff_box[m - i] {
                return None;
            }
            a[i] = q;
        }
        a[0] = a0.clone();
        let poly = IntPolynomial::new(a);
        if !self.power_sums_bounded(&poly) {
            return None;
        }
        match is_weil_polynomial_mod(&poly, self.n) {
            Ok(WeilVerdict::Certified(_)) => Some(poly),
            _ => None,
        }
    }

    fn power_sums_bounded(&self, poly: &IntPolynomial) -> bool {
        power_sums(poly, 2 * self.m)
            .iter()
            .enumerate()
            .all(|(i, pk)| pk.abs() <= self.power_box[i + 1])
    }
}

fn enumerate_all_weil(n: &BigInt, m: usize) -> Vec<IntPolynomial> {
    let Some(r) = half_power(n, m) else {
        return Vec::new();
    };
    let search = WeilSearch::new(n, m);
    let mut out: Vec<IntPolynomial> = [1i8, -1]
        .into_par_iter()
        .flat_map(|eps| {
            let a0 = if eps > 0 { r.clone() } else { -r.clone() };
            if m / 2 == 0 {
                return search.search(eps, &a0, None);
            }
            let Some((lo, hi)) = search.next_range(&[], &[]) else {
                return Vec::new();
            };
            let tops: Vec<BigInt> = num_iter_inclusive(&lo, &hi);
            tops.into_par_iter()
                .flat_map(|e1| {
                    if eps < 0 && m == 2 && !e1.is_zero() {
                        return Vec::new();
                    }
                    search.search(eps, &a0, Some(e1))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn num_iter_inclusive(lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    let mut v = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        v.push(x.clone());
        x += 1;
    }
    v
}

fn sign_pow(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_{i=1}^{k−1} (−1)^{i−1} e_i p_{k−i}` (terms with `i > len(e)` vanish).
fn newton_partial(e: &[BigInt], p: &[BigInt], k: usize) -> BigInt {
    (1..k)
        .filter(|&i| i <= e.len())
        .map(|i| sign_pow(i - 1) * &e[i - 1] * &p[k - i - 1])
        .sum()
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Power sums `p_1..p_count` of the roots of a monic polynomial.
pub fn power_sums(poly: &IntPolynomial, count: usize) -> Vec<BigInt> {
    let m = poly.degree();
    let e: Vec<BigInt> = (1..=m).map(|k| sign_pow(k) * poly.coeff(m - k)).collect();
    let mut p: Vec<BigInt> = Vec::with_capacity(count);
    for k in 1..=count {
        let mut s = newton_partial(&e, &p, k);
        if k <= m {
            s += sign_pow(k - 1) * BigInt::from(k) * &e[k - 1];
        }
        p.push(s);
    }
    p
}

/// Per-degree and cumulative counts of irreducible Weil polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilCount {
    pub per_degree: BTreeMap<usize, usize>,
    pub cumulative: BTreeMap<usize, usize>,
}

pub fn count_weil_integers(q: u64, w: u32, d_max: usize) -> Result<WeilCount> {
    if d_max == 0 {
        return Err(Error::InvalidParameter("d_max must be at least 1".into()));
    }
    let params = WeilParams::from_u64(q, w)?;
    let mut per_degree = BTreeMap::new();
    let mut cumulative = BTreeMap::new();
    let mut running = 0;
    for d in 1..=d_max {
        let c = enumerate_weil_polynomials(&params, d, true)?.len();
        running += c;
        per_degree.insert(d, c);
        cumulative.insert(d, running);
    }
    Ok(WeilCount {
        per_degree,
        cumulative,
    })
}

/// Monic integer polynomials of degree `d` with all roots real and inside
/// `[−2√N, 2√N]` (real Weil polynomials), sorted.
pub fn enumerate_real_weil_polynomials(n: &BigInt, d: usize) -> Result<Vec<IntPolynomial>> {
    if !n.is_positive() {
        return Err(Error::BadModulus(n.to_string()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let four_n: BigInt = n * BigInt::from(4);
    // |a_{d-k}| <= C(d,k) (2√N)^k, |p_k| <= d (2√N)^k, p_k >= 0 for even k
    let coeff_box: Vec<BigInt> = (0..=d)
        .map(|k| {
            let c = binomial(d as u64, k as u64);
            isqrt(&(&c * &c * four_n.pow(k as u32)))
        })
        .collect();
    let dd = BigInt::from(d);
    let power_box: Vec<BigInt> = (0..=2 * d)
        .map(|k| isqrt(&(&dd * &dd * four_n.pow(k as u32))))
        .collect();
    let (lo, hi) = circle_shadow(n);

    fn dfs(
        d: usize,
        coeff_box: &[BigInt],
        power_box: &[BigInt],
        e: &mut Vec<BigInt>,
        p: &mut Vec<BigInt>,
        out: &mut Vec<IntPolynomial>,
    ) {
        let k = e.len() + 1;
        if k > d {
            let mut a = vec![BigInt::zero(); d + 1];
            a[d] = BigInt::one();
            for (i, ei) in e.iter().enumerate() {
                a[d - i - 1] = sign_pow(i + 1) * ei;
            }
            out.push(IntPolynomial::new(a));
            return;
        }
        let s = newton_partial(e, p, k);
        let kk = BigInt::from(k);
        let b = &power_box[k];
        let p_lo = if k % 2 == 0 {
            BigInt::zero()
        } else {
            -b.clone()
        };
        // p_k = s + sgn k e_k in [p_lo, b]
        let (lo, hi) = if k % 2 == 1 {
            (ceil_div(&(&p_lo - &s), &kk), floor_div(&(b - &s), &kk))
        } else {
            (ceil_div(&(&s - b), &kk), floor_div(&(&s - &p_lo), &kk))
        };
        let lo = lo.max(-coeff_box[k].clone());
        let hi = hi.min(coeff_box[k].clone());
        let mut ek = lo;
        while ek <= hi {
            e.push(ek.clone());
            p.push(&s + sign_pow(k - 1) * &kk * &ek);
            dfs(d, coeff_box, power_box, e, p, out);
            e.pop();
            p.pop();
            ek += 1;
        }
    }

    let mut candidates = Vec::new();
    dfs(
        d,
        &coeff_box,
        &power_box,
        &mut Vec::new(),
        &mut Vec::new(),
        &mut candidates,
    );
    let mut out: Vec<IntPolynomial> = candidates
        .into_par_iter()
        .filter(|h| {
            power_sums(h, 2 * d)
                .iter()
                .enumerate()
                .all(|(i, pk)| pk.abs() <= power_box[i + 1] && (i % 2 == 0 || !pk.is_negative()))
        })
        .filter(|h| root_count_with_multiplicity(h, &lo, &hi).ok() == Some(d))
        .collect();
    out.sort();
    Ok(out)
}

/// Possible minimal polynomials of a Hecke eigenvalue `a_p(f) = α + ᾱ` with
/// `α` a Weil `p`-number of weight `k − 1`: monic irreducible, totally real,
/// roots in `[−2p^{(k−1)/2}, 2p^{(k−1)/2}]`, degree at most `A`.
pub fn hecke_trace_candidates(p: u64, k: u32, a: usize) -> Result<Vec<IntPolynomial>> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(
            "weight k must be at least 2".into(),
        ));
    }
    if a == 0 {
        return Err(Error::InvalidParameter(
            "degree bound A must be at least 1".into(),
        ));
    }
    let n = BigInt::from(p).pow(k - 1);
    let by_degree: Vec<Vec<IntPolynomial>> = (1..=a)
        .map(|d| enumerate_real_weil_polynomials(&n, d))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for d in 1..=a {
        let divisors: Vec<IntPolynomial> = by_degree[..d / 2].iter().flatten().cloned().collect();
        out.extend(
            by_degree[d - 1]
                .iter()
                .filter(|h| !has_divisor(h, &divisors))
                .cloned(),
        );
    }
    Ok(out)
}
