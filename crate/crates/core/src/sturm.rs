//! Sturm sequences with exact sign evaluation at points of `Q(√D)`.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::surd::QuadraticSurd;

/// Sturm chain of a squarefree polynomial, each member content-normalized
/// to a primitive integer polynomial (positive scaling keeps every sign).
pub fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.to_rational().content_normalized());
    loop {
        let n = chain.len();
        let r = chain[n - 2].to_rational().rem(&chain[n - 1].to_rational());
        if r.is_zero() {
            break;
        }
        let neg = crate::poly::RatPolynomial::new(r.coeffs().iter().map(|c| -c.clone()).collect());
        chain.push(neg.content_normalized());
    }
    chain
}

pub fn sign_at(p: &IntPolynomial, x: &QuadraticSurd) -> Ordering {
    let mut acc = QuadraticSurd::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * x) + &QuadraticSurd::rational(BigRational::from_integer(c.clone()));
    }
    acc.signum()
}

fn variations(chain: &[IntPolynomial], x: &QuadraticSurd) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|q| sign_at(q, x))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `h` in the closed interval `[lo, hi]`.
pub fn sturm_root_count(
    h: &IntPolynomial,
    lo: &QuadraticSurd,
    hi: &QuadraticSurd,
) -> Result<usize> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo > hi {
        return Err(Error::EmptyInterval);
    }
    if h.degree() == 0 {
        return Ok(0);
    }
    let sf = h.squarefree_part();
    let chain = sturm_chain(&sf);
    // V(lo) - V(hi) counts roots in (lo, hi]
    let open_closed = variations(&chain, lo) - variations(&chain, hi);
    let at_lo = usize::from(sign_at(&sf, lo) == Ordering::Equal);
    Ok(open_closed + at_lo)
}

/// Real roots of `h` in `[lo, hi]` counted with multiplicity.
pub fn root_count_with_multiplicity(
    h: &IntPolynomial,
    lo: &QuadraticSurd,
    hi: &QuadraticSurd,
) -> Result<usize> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    h.squarefree_decomposition()
        .iter()
        .map(|(f, m)| sturm_root_count(f, lo, hi).map(|c| c * m))
        .sum()
}

/// Distinct real roots of `h`, ascending, each to about 1e-15 relative accuracy.
///
/// Roots are isolated exactly by bisection on Sturm counts over rational
/// endpoints and then refined by exact sign bisection.
pub fn real_roots(h: &IntPolynomial) -> Result<Vec<f64>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if h.degree() == 0 {
        return Ok(Vec::new());
    }
    let sf = h.squarefree_part();
    let chain = sturm_chain(&sf);
    let lead = sf.leading().expect("nonzero").abs();
    // Cauchy bound: every root lies in (-B, B)
    let bound: num_bigint::BigInt =
        sf.coeffs().iter().map(|c| c.abs()).max().expect("nonzero") / &lead + 2;
    let r = |x: &BigRational| QuadraticSurd::rational(x.clone());
    let count = |lo: &BigRational, hi: &BigRational| {
        variations(&chain, &r(lo)) - variations(&chain, &r(hi))
    };

    let mut isolated = Vec::new();
    let mut stack = vec![(
        BigRational::from_integer(-bound.clone()),
        BigRational::from_integer(bound),
    )];
    while let Some((lo, hi)) = stack.pop() {
        match count(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    // each (lo, hi] holds one root; sf has opposite signs just past lo and at hi
    let mut roots: Vec<f64> = isolated
        .into_iter()
        .map(|(mut lo, mut hi)| {
            let sign_hi = sign_at(&sf, &r(&hi));
            if sign_hi == Ordering::Equal {
                return hi.to_f64().unwrap_or(f64::NAN);
            }
            for _ in 0..64 {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                match sign_at(&sf, &r(&mid)) {
                    Ordering::Equal => return mid.to_f64().unwrap_or(f64::NAN),
                    s if s == sign_hi => hi = mid,
                    _ => lo = mid,
                }
            }
            ((lo + hi) / BigRational::from_integer(2.into()))
                .to_f64()
                .unwrap_or(f64::NAN)
        })
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}
