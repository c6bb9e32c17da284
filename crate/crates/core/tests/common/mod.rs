//! Independent floating-point oracles shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use weilbounds::weil::is_weil_polynomial_mod;
use weilbounds::IntPolynomial;

/// All complex roots of a monic polynomial (coefficients low-first, leading
/// 1 omitted) by Durand–Kerner iteration.
pub fn roots(lower: &[f64]) -> Vec<Complex64> {
    let m = lower.len();
    if m == 0 {
        return Vec::new();
    }
    let radius = 1.0 + lower.iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| seed.powu(k as u32) * (radius / 2.0))
        .collect();
    let eval = |x: Complex64| {
        lower
            .iter()
            .rev()
            .fold(Complex64::new(1.0, 0.0), |acc, &c| acc * x + c)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..m {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..m {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    z
}

fn f64_coeffs(p: &IntPolynomial) -> Vec<f64> {
    let c = p.coeffs();
    c[..c.len() - 1]
        .iter()
        .map(|v| v.to_string().parse::<f64>().unwrap())
        .collect()
}

fn on_circle(rs: &[Complex64], n: f64, tol: f64) -> bool {
    rs.iter().all(|z| (z.norm_sqr() - n).abs() <= tol * n)
}

/// Float prefilter: every root satisfies `||α|² − N| ≤ 1e-6 N`, judged on the
/// squarefree part so repeated roots keep full accuracy. The loose first pass
/// on `p` itself only discards obvious misses (a k-fold root is found to
/// about `ε^{1/k}`).
pub fn float_weil(p: &IntPolynomial, n: u64) -> bool {
    let nf = n as f64;
    if !on_circle(&roots(&f64_coeffs(p)), nf, 0.3) {
        return false;
    }
    on_circle(&roots(&f64_coeffs(&p.squarefree_part())), nf, 1e-6)
}

/// Monic degree-`m` integer polynomials with all roots on `|α|² = N`, found by
/// scanning the coefficient box and testing roots numerically.
///
/// Only the top half of the box is scanned: the constant term is `±N^{m/2}`
/// and, since the roots are stable under `α ↦ N/α`, the lower coefficients
/// satisfy `a_i N^i = a_0 a_{m−i}`. Survivors of the float filter are
/// confirmed by the exact certifier. Returns `(confirmed, float_only)`.
pub fn oracle_enumerate(n: u64, m: usize) -> (Vec<IntPolynomial>, Vec<IntPolynomial>) {
    let nf = n as f64;
    let a0_abs = nf.powf(m as f64 / 2.0);
    if (a0_abs - a0_abs.round()).abs() > 1e-9 {
        return (Vec::new(), Vec::new());
    }
    let a0_abs = a0_abs.round() as i128;
    let binom = |k: usize| (0..k).fold(1.0, |acc, i| acc * (m - i) as f64 / (i + 1) as f64);
    // free coefficients a_{m-1}, ..., a_{m - top}
    let top = m / 2;
    let bounds: Vec<i128> = (1..=top)
        .map(|k| (binom(k) * nf.powf(k as f64 / 2.0) + 1e-9).floor() as i128)
        .collect();
    let mut confirmed = Vec::new();
    let mut float_only = Vec::new();
    let big_n = BigInt::from(n);
    for a0 in [a0_abs, -a0_abs] {
        let mut free = vec![0i128; top];
        for (slot, b) in free.iter_mut().zip(&bounds) {
            *slot = -b;
        }
        loop {
            let mut a = vec![0i128; m + 1];
            a[m] = 1;
            a[0] = a0;
            for (k, v) in free.iter().enumerate() {
                a[m - 1 - k] = *v;
            }
            let mut ok = true;
            for i in 1..m - top {
                let num = a0 * a[m - i];
                let den = (n as i128).pow(i as u32);
                if num % den != 0 {
                    ok = false;
                    break;
                }
                a[i] = num / den;
            }
            if ok {
                ok = (1..m).all(|i| a[i] * (n as i128).pow(i as u32) == a0 * a[m - i]);
            }
            if ok {
                let p = IntPolynomial::new(a.iter().map(|&v| BigInt::from(v)).collect());
                if float_weil(&p, n) {
                    if is_weil_polynomial_mod(&p, &big_n).unwrap().is_certified() {
                        confirmed.push(p);
                    } else {
                        float_only.push(p);
                    }
                }
            }
            // odometer over the free coefficients
            let mut k = 0;
            while k < top {
                if free[k] < bounds[k] {
                    free[k] += 1;
                    break;
                }
                free[k] = -bounds[k];
                k += 1;
            }
            if k == top {
                break;
            }
        }
    }
    confirmed.sort();
    confirmed.dedup();
    float_only.sort();
    (confirmed, float_only)
}
