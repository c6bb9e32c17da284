//! Explicit depth and conductor bounds for local parameters whose field of
//! rationality has bounded degree.
//!
//! Two routes are implemented. The direct one bounds the image of inertia by
//! `|GL_n(k_w)|` for a residue field `k_w` containing enough roots of unity;
//! the improved one only needs the order of a `p`-Sylow subgroup (wild
//! inertia is a `p`-group). Both feed `depth ≤ |image| · e_K / (p − 1)` and
//! `conductor ≤ n (depth + 1)`. All results are exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    euler_phi, factorize, is_prime, lcm_all, multiplicative_order, smallest_prime_not_dividing,
};
use crate::error::{Error, Result};
use crate::rational::{big_str, opt_big_str, ratio_str};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldParams {
    pub p: u64,
    pub e_k: u64,
    /// Residue degree; carried for reports, not used by the bounds.
    pub f_k: u64,
}

impl LocalFieldParams {
    pub fn new(p: u64, e_k: u64, f_k: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e_k == 0 || f_k == 0 {
            return Err(Error::InvalidParameter(
                "e_K and f_K must be positive".into(),
            ));
        }
        Ok(Self { p, e_k, f_k })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DepthMethod {
    V1,
    V2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthBoundReport {
    pub method: DepthMethod,
    pub n: u64,
    pub a: u64,
    pub field: LocalFieldParams,
    /// lcm of all `m` with `φ(m) ≤ nA` (v1 only)
    #[serde(with = "opt_big_str", default)]
    pub f: Option<BigInt>,
    /// auxiliary prime coprime to `f` (v1 only)
    pub l: Option<u64>,
    /// `Q = l^{ord_f(l)}` (v1 only)
    #[serde(with = "opt_big_str", default)]
    pub residue_field_size: Option<BigInt>,
    #[serde(with = "opt_big_str", default)]
    pub gl_order: Option<BigInt>,
    /// bound on the order of a `p`-Sylow subgroup (v2 only)
    #[serde(with = "opt_big_str", default)]
    pub sylow_bound: Option<BigInt>,
    #[serde(with = "ratio_str")]
    pub depth: BigRational,
    #[serde(with = "ratio_str")]
    pub conductor: BigRational,
    pub caveats: Vec<String>,
}

/// lcm of every `m ≥ 1` with `φ(m) ≤ B`; such `m` satisfy `m ≤ 2B²`.
pub fn lcm_phi_le(b: u64) -> Result<BigInt> {
    if b == 0 {
        return Err(Error::InvalidParameter("B must be at least 1".into()));
    }
    Ok(lcm_all((1..=2 * b * b).filter(|&m| euler_phi(m) <= b)))
}

/// `|GL_n(F_Q)| = ∏_{i<n} (Q^n − Q^i)`.
pub fn gl_order(n: u64, q: &BigInt) -> Result<BigInt> {
    if n == 0 || q < &BigInt::from(2) {
        return Err(Error::InvalidParameter("need n >= 1 and Q >= 2".into()));
    }
    let qn = q.pow(n as u32);
    Ok((0..n).fold(BigInt::one(), |acc, i| acc * (&qn - q.pow(i as u32))))
}

fn finish(n: u64, image_bound: &BigInt, field: &LocalFieldParams) -> (BigRational, BigRational) {
    let depth = BigRational::new(
        image_bound * BigInt::from(field.e_k),
        BigInt::from(field.p - 1),
    );
    let conductor = BigRational::from_integer(BigInt::from(n)) * (&depth + BigRational::one());
    (depth, conductor)
}

pub fn depth_bound_v1(n: u64, a: u64, field: &LocalFieldParams) -> Result<DepthBoundReport> {
    if n == 0 || a == 0 {
        return Err(Error::InvalidParameter("n and A must be at least 1".into()));
    }
    let f = lcm_phi_le(n * a)?;
    let l = smallest_prime_not_dividing(&f);
    let order = multiplicative_order(l, &f);
    let q = BigInt::from(l).pow(order as u32);
    let gl = gl_order(n, &q)?;
    let (depth, conductor) = finish(n, &gl, field);
    Ok(DepthBoundReport {
        method: DepthMethod::V1,
        n,
        a,
        field: *field,
        f: Some(f),
        l: Some(l),
        residue_field_size: Some(q),
        gl_order: Some(gl),
        sylow_bound: None,
        depth,
        conductor,
        caveats: Vec::new(),
    })
}

/// `m ⌊n/t⌋ + Σ_{i≥1} ⌊n/(p^i t)⌋`
pub fn sylow_formula(n: u64, p: u64, t: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let mut total = m * (n / t);
    let mut pi = p;
    while pi.saturating_mul(t) <= n {
        total += n / (pi * t);
        pi = pi.saturating_mul(p);
    }
    Ok(total)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `φ(p^m)`, with `φ(1) = 1`.
fn phi_prime_power(p: u64, m: u32) -> BigInt {
    if m == 0 {
        BigInt::one()
    } else {
        BigInt::from(p).pow(m - 1) * BigInt::from(p - 1)
    }
}

/// Max over `t | p − 1` and `m ≥ 0` with `φ(p^m) ≤ tA` of `p^{sylow_formula}`.
pub fn sylow_order_bound(n: u64, p: u64, a: u64) -> Result<BigInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || a == 0 {
        return Err(Error::InvalidParameter("n and A must be at least 1".into()));
    }
    let mut best = 0u64;
    for t in divisors(p - 1) {
        let cap = BigInt::from(t) * BigInt::from(a);
        let mut m = 0u32;
        while phi_prime_power(p, m + 1) <= cap {
            m += 1;
        }
        best = best.max(sylow_formula(n, p, t, m as u64)?);
    }
    Ok(BigInt::from(p).pow(best as u32))
}

pub fn depth_bound_v2(n: u64, a: u64, field: &LocalFieldParams) -> Result<DepthBoundReport> {
    let sylow = sylow_order_bound(n, field.p, a)?;
    let (depth, conductor) = finish(n, &sylow, field);
    let caveats = if field.p == 2 {
        vec!["p2_caveat".to_string()]
    } else {
        Vec::new()
    };
    Ok(DepthBoundReport {
        method: DepthMethod::V2,
        n,
        a,
        field: *field,
        f: None,
        l: None,
        residue_field_size: None,
        gl_order: None,
        sylow_bound: Some(sylow),
        depth,
        conductor,
        caveats,
    })
}

pub fn depth_bound(
    method: DepthMethod,
    n: u64,
    a: u64,
    field: &LocalFieldParams,
) -> Result<DepthBoundReport> {
    match method {
        DepthMethod::V1 => depth_bound_v1(n, a, field),
        DepthMethod::V2 => depth_bound_v2(n, a, field),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicReport {
    pub n: u64,
    #[serde(rename = "N")]
    pub modulus: u64,
    #[serde(with = "ratio_str")]
    pub ratio: BigRational,
    #[serde(with = "big_str")]
    pub admissible_constant: BigInt,
    pub within_bound: bool,
}

/// `∏_{p^r ‖ N} min(φ(p^r), n, n²/φ(p^r))`, compared against `n^n`.
pub fn cyclotomic_ratio(n: u64, modulus: u64) -> Result<CyclotomicReport> {
    if n == 0 || modulus == 0 {
        return Err(Error::InvalidParameter("n and N must be at least 1".into()));
    }
    let nn = BigRational::from_integer(BigInt::from(n));
    let ratio = factorize(modulus)
        .into_iter()
        .map(|(p, r)| {
            let phi = BigRational::from_integer(BigInt::from(p.pow(r - 1) * (p - 1)));
            let c = &nn * &nn / &phi;
            phi.min(nn.clone()).min(c)
        })
        .fold(BigRational::one(), |acc, x| acc * x);
    let admissible_constant = BigInt::from(n).pow(n as u32);
    let within_bound = ratio <= BigRational::from_integer(admissible_constant.clone());
    debug_assert!(!ratio.is_zero());
    Ok(CyclotomicReport {
        n,
        modulus,
        ratio,
        admissible_constant,
        within_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn field(p: u64) -> LocalFieldParams {
        LocalFieldParams::new(p, 1, 1).unwrap()
    }

    #[test]
    fn lcm_phi_examples() {
        assert_eq!(lcm_phi_le(1).unwrap(), 2.into());
        assert_eq!(lcm_phi_le(2).unwrap(), 12.into());
        assert_eq!(lcm_phi_le(4).unwrap(), 120.into());
    }

    #[test]
    fn gl_examples() {
        assert_eq!(gl_order(1, &3.into()).unwrap(), 2.into());
        assert_eq!(gl_order(2, &2.into()).unwrap(), 6.into());
        assert_eq!(gl_order(2, &25.into()).unwrap(), 374400.into());
    }

    #[test]
    fn v1_chain() {
        let rep = depth_bound_v1(1, 1, &field(5)).unwrap();
        assert_eq!(rep.f, Some(2.into()));
        assert_eq!(rep.l, Some(3));
        assert_eq!(rep.residue_field_size, Some(3.into()));
        assert_eq!(rep.gl_order, Some(2.into()));
        assert_eq!(rep.depth, r(1, 2));
        assert_eq!(rep.conductor, r(3, 2));

        assert_eq!(depth_bound_v1(1, 1, &field(2)).unwrap().depth, r(2, 1));

        let rep = depth_bound_v1(2, 1, &field(5)).unwrap();
        assert_eq!(rep.f, Some(12.into()));
        assert_eq!(rep.l, Some(5));
        assert_eq!(rep.residue_field_size, Some(25.into()));
        assert_eq!(rep.gl_order, Some(374400.into()));
        assert_eq!(rep.depth, r(93600, 1));
    }

    #[test]
    fn sylow_examples() {
        assert_eq!(sylow_formula(2, 3, 2, 1).unwrap(), 1);
        assert_eq!(sylow_formula(2, 3, 1, 1).unwrap(), 2);
        assert_eq!(sylow_formula(1, 5, 4, 1).unwrap(), 0);
        assert_eq!(sylow_order_bound(2, 3, 1).unwrap(), 3.into());
        assert_eq!(sylow_order_bound(2, 3, 3).unwrap(), 9.into());
        assert_eq!(sylow_order_bound(1, 3, 1).unwrap(), 1.into());
    }

    #[test]
    fn v2_examples() {
        assert_eq!(depth_bound_v2(2, 1, &field(3)).unwrap().depth, r(3, 2));
        assert_eq!(depth_bound_v2(1, 1, &field(5)).unwrap().depth, r(1, 4));
        let two = depth_bound_v2(1, 1, &field(2)).unwrap();
        assert_eq!(two.caveats, vec!["p2_caveat".to_string()]);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_ratio(2, 8).unwrap().ratio, r(1, 1));
        assert_eq!(cyclotomic_ratio(3, 7).unwrap().ratio, r(3, 2));
        let one = cyclotomic_ratio(2, 1).unwrap();
        assert_eq!(one.ratio, r(1, 1));
        assert!(one.within_bound);
    }

    #[test]
    fn validation() {
        assert!(LocalFieldParams::new(4, 1, 1).is_err());
        assert!(LocalFieldParams::new(5, 0, 1).is_err());
        assert!(lcm_phi_le(0).is_err());
        assert!(gl_order(0, &3.into()).is_err());
    }

    #[test]
    fn report_json_uses_strings() {
        let rep = depth_bound_v1(1, 1, &field(5)).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["depth"], "1/2");
        assert_eq!(v["gl_order"], "2");
        assert_eq!(v["method"], "v1");
        let back: DepthBoundReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
