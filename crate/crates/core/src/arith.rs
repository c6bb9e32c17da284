//! Small integer helpers shared by the enumerators and bound calculators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
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

/// Smallest prime that does not divide `f`.
pub fn smallest_prime_not_dividing(f: &BigInt) -> u64 {
    let mut l = 2u64;
    loop {
        if is_prime(l) && !(f % l).is_zero() {
            return l;
        }
        l += 1;
    }
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Prime-power factorization `n = ∏ p^r`, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut r = 0;
            while n % p == 0 {
                n /= p;
                r += 1;
            }
            out.push((p, r));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, k)` with `q = p^k` when `q` is a prime power.
pub fn prime_power(q: &BigInt) -> Option<(BigInt, u32)> {
    if q < &BigInt::from(2) {
        return None;
    }
    let mut p = BigInt::from(2);
    let limit = q.sqrt();
    while p <= limit {
        if (q % &p).is_zero() {
            break;
        }
        p += 1;
    }
    if p > limit {
        return Some((q.clone(), 1));
    }
    let mut rest = q.clone();
    let mut k = 0u32;
    while (&rest % &p).is_zero() {
        rest /= &p;
        k += 1;
    }
    rest.is_one().then_some((p, k))
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multiplicative order of `a` modulo `m`; `1` when `m ≤ 2`.
pub fn multiplicative_order(a: u64, m: &BigInt) -> u64 {
    if m <= &BigInt::from(2) {
        return 1;
    }
    let a = BigInt::from(a);
    debug_assert!(a.gcd(m).is_one());
    let mut x = &a % m;
    let mut k = 1u64;
    while !x.is_one() {
        x = (x * &a) % m;
        k += 1;
    }
    k
}

pub fn lcm_all<I: IntoIterator<Item = u64>>(it: I) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, m| acc.lcm(&BigInt::from(m)))
}

pub fn big_to_f64(n: &BigInt) -> f64 {
    n.to_f64().unwrap_or(f64::INFINITY)
}
