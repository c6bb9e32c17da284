//! Extremal trigonometric majorants and minorants of interval indicators on
//! the torus, and their products over rectangles in `T^r`.
//!
//! For `I = [a, b)` the degree-`κ` pair has coefficients
//!
//! ```text
//! c_ν^± = Ĵ(ν/(κ+1)) f̂(ν) ± K̂(ν/(κ+1)) (e(−νa) + e(−νb)) / (2κ+2)
//! ```
//!
//! with `f̂(ν) = (e(−νa) − e(−νb)) / (2πiν)` and `f̂(0) = |I|`. The variation
//! term is a Fejér kernel centred at each endpoint, so `P⁻ ≤ 1_I ≤ P⁺` and the
//! means differ by exactly `2/(κ+1)`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trig::TrigPolynomial;

/// `(Ĵ(t), K̂(t))` for `|t| < 1`.
pub fn beurling_transforms(t: f64) -> Result<(f64, f64)> {
    if t.is_nan() || t.abs() >= 1.0 {
        return Err(Error::OutOfDomain(t));
    }
    let a = t.abs();
    let j = if a == 0.0 {
        1.0
    } else {
        PI * a * (1.0 - a) / (PI * a).tan() + a
    };
    Ok((j, 1.0 - a))
}

/// Half-open arc `[start, start + length)` on `T = R/Z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusInterval {
    start: f64,
    length: f64,
}

impl TorusInterval {
    /// `[a, b)` with `a, b ∈ [0, 1]`; `b < a` wraps around, `[0, 1)` is the whole torus.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        for v in [a, b] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfDomain(v));
            }
        }
        let length = if b >= a { b - a } else { 1.0 - a + b };
        Ok(Self {
            start: a.rem_euclid(1.0),
            length,
        })
    }

    pub fn point(a: f64) -> Self {
        Self {
            start: a.rem_euclid(1.0),
            length: 0.0,
        }
    }

    pub fn full() -> Self {
        Self {
            start: 0.0,
            length: 1.0,
        }
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        (self.start + self.length).rem_euclid(1.0)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn is_point(&self) -> bool {
        self.length == 0.0
    }

    pub fn is_full(&self) -> bool {
        self.length >= 1.0
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.start).rem_euclid(1.0) < self.length
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorusRectangle {
    intervals: Vec<TorusInterval>,
}

impl TorusRectangle {
    pub fn new(intervals: Vec<TorusInterval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::InvalidParameter(
                "rectangle needs rank at least 1".into(),
            ));
        }
        Ok(Self { intervals })
    }

    pub fn point(x: &[f64]) -> Result<Self> {
        Self::new(x.iter().map(|&a| TorusInterval::point(a)).collect())
    }

    pub fn full(rank: usize) -> Result<Self> {
        Self::new(vec![TorusInterval::full(); rank])
    }

    pub fn rank(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[TorusInterval] {
        &self.intervals
    }

    pub fn volume(&self) -> f64 {
        self.intervals.iter().map(|i| i.length()).product()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.rank() && self.intervals.iter().zip(x).all(|(i, &t)| i.contains(t))
    }
}

/// Rank-1 minorant/majorant pair, kept as dense coefficient vectors indexed
/// by `ν + κ` for fast pointwise evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct VaalerPair {
    interval: TorusInterval,
    kappa: u32,
    minus: Vec<Complex64>,
    plus: Vec<Complex64>,
}

fn e(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * t)
}

/// Fejér kernel `Σ_{|ν|≤κ} K̂(ν/(κ+1)) e(ν(x − a))` as coefficients.
fn fejer(a: f64, kappa: u32) -> Vec<Complex64> {
    let k = kappa as i32;
    (-k..=k)
        .map(|nu| {
            let t = nu as f64 / (kappa + 1) as f64;
            e(-(nu as f64) * a) * (1.0 - t.abs())
        })
        .collect()
}

pub fn vaaler_pair(interval: TorusInterval, kappa: u32) -> Result<VaalerPair> {
    if kappa == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let k = kappa as i32;
    let width = 2.0 / (kappa + 1) as f64;
    let (minus, plus) = if interval.is_point() {
        // Two merged jumps: a doubled Fejér bump over a zero minorant.
        let bump = fejer(interval.start, kappa);
        let plus: Vec<_> = bump.iter().map(|c| c * width).collect();
        (vec![Complex64::default(); plus.len()], plus)
    } else if interval.is_full() {
        let bump = fejer(interval.start, kappa);
        let mut plus: Vec<_> = bump.iter().map(|c| c * width).collect();
        let mut minus: Vec<_> = bump.iter().map(|c| -c * width).collect();
        plus[k as usize] += 1.0;
        minus[k as usize] += 1.0;
        (minus, plus)
    } else {
        let a = interval.start;
        let b = a + interval.length;
        let mut minus = Vec::with_capacity(2 * k as usize + 1);
        let mut plus = Vec::with_capacity(2 * k as usize + 1);
        for nu in -k..=k {
            let t = nu as f64 / (kappa + 1) as f64;
            let (j_hat, k_hat) = beurling_transforms(t)?;
            let (ea, eb) = (e(-(nu as f64) * a), e(-(nu as f64) * b));
            let f_hat = if nu == 0 {
                Complex64::new(interval.length, 0.0)
            } else {
                (ea - eb) / Complex64::new(0.0, TAU * nu as f64)
            };
            let main = f_hat * j_hat;
            let var = (ea + eb) * (k_hat / (2 * kappa + 2) as f64);
            minus.push(main - var);
            plus.push(main + var);
        }
        (minus, plus)
    };
    Ok(VaalerPair {
        interval,
        kappa,
        minus,
        plus,
    })
}

/// `Σ_{|ν|≤κ} c_ν e(νx)` for Hermitian `c` stored at `ν + κ`.
fn eval_dense(c: &[Complex64], x: f64) -> f64 {
    let k = c.len() / 2;
    let z = e(x);
    let mut w = z;
    let mut total = 0.0;
    for nu in 1..=k {
        total += (c[k + nu] * w).re;
        w *= z;
    }
    c[k].re + 2.0 * total
}

impl VaalerPair {
    pub fn interval(&self) -> TorusInterval {
        self.interval
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn minorant(&self) -> TrigPolynomial {
        TrigPolynomial::from_symmetric_slice(&self.minus)
    }

    pub fn majorant(&self) -> TrigPolynomial {
        TrigPolynomial::from_symmetric_slice(&self.plus)
    }

    pub fn minorant_mean(&self) -> f64 {
        self.minus[self.kappa as usize].re
    }

    pub fn majorant_mean(&self) -> f64 {
        self.plus[self.kappa as usize].re
    }

    pub fn mean_gap(&self) -> f64 {
        self.majorant_mean() - self.minorant_mean()
    }

    pub fn minorant_at(&self, x: f64) -> f64 {
        eval_dense(&self.minus, x)
    }

    pub fn majorant_at(&self, x: f64) -> f64 {
        eval_dense(&self.plus, x)
    }
}

/// Minorant/majorant of a rectangle built from one rank-1 pair per side:
/// the majorant is `∏ P_i⁺` and the minorant is
/// `∏ P_i⁺ − Σ_i (P_i⁺ − P_i⁻) ∏_{j≠i} P_j⁺`.
#[derive(Clone, Debug, PartialEq)]
pub struct RectPair {
    rect: TorusRectangle,
    kappa: u32,
    factors: Vec<VaalerPair>,
}

pub fn rect_pair(rect: &TorusRectangle, kappa: u32) -> Result<RectPair> {
    let factors = rect
        .intervals()
        .iter()
        .map(|&i| vaaler_pair(i, kappa))
        .collect::<Result<Vec<_>>>()?;
    Ok(RectPair {
        rect: rect.clone(),
        kappa,
        factors,
    })
}

fn telescoped(plus: &[f64], minus: &[f64]) -> f64 {
    let full: f64 = plus.iter().product();
    let correction: f64 = (0..plus.len())
        .map(|i| {
            let others: f64 = plus
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v)
                .product();
            (plus[i] - minus[i]) * others
        })
        .sum();
    full - correction
}

impl RectPair {
    pub fn rect(&self) -> &TorusRectangle {
        &self.rect
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn factors(&self) -> &[VaalerPair] {
        &self.factors
    }

    pub fn majorant_mean(&self) -> f64 {
        self.factors.iter().map(VaalerPair::majorant_mean).product()
    }

    pub fn minorant_mean(&self) -> f64 {
        let plus: Vec<f64> = self.factors.iter().map(VaalerPair::majorant_mean).collect();
        let minus: Vec<f64> = self.factors.iter().map(VaalerPair::minorant_mean).collect();
        telescoped(&plus, &minus)
    }

    /// `∏(|I_i| + 2/(κ+1)) − ∏ max(|I_i| − 2/(κ+1), 0)`
    pub fn gap_bound(&self) -> f64 {
        let w = 2.0 / (self.kappa + 1) as f64;
        let lens = self.rect.intervals().iter().map(|i| i.length());
        let upper: f64 = lens.clone().map(|l| l + w).product();
        let lower: f64 = lens.map(|l| (l - w).max(0.0)).product();
        upper - lower
    }

    pub fn majorant_at(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.factors.len(), "point has wrong rank");
        self.factors
            .iter()
            .zip(x)
            .map(|(f, &t)| f.majorant_at(t))
            .product()
    }

    pub fn minorant_at(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.factors.len(), "point has wrong rank");
        let plus: Vec<f64> = self
            .factors
            .iter()
            .zip(x)
            .map(|(f, &t)| f.majorant_at(t))
            .collect();
        let minus: Vec<f64> = self
            .factors
            .iter()
            .zip(x)
            .map(|(f, &t)| f.minorant_at(t))
            .collect();
        telescoped(&plus, &minus)
    }

    /// Dense majorant; has `(2κ+1)^r` coefficients.
    pub fn majorant(&self) -> TrigPolynomial {
        let mut it = self.factors.iter().map(VaalerPair::majorant);
        let first = it.next().expect("rank at least 1");
        it.fold(first, |acc, p| acc.tensor(&p))
    }

    /// Dense minorant; has `(2κ+1)^r` coefficients.
    pub fn minorant(&self) -> TrigPolynomial {
        let plus: Vec<TrigPolynomial> = self.factors.iter().map(VaalerPair::majorant).collect();
        let mut result = self.majorant();
        for (i, f) in self.factors.iter().enumerate() {
            let mut term: Option<TrigPolynomial> = None;
            for (j, p) in plus.iter().enumerate() {
                let factor = if i == j {
                    p.sub(&f.minorant())
                } else {
                    p.clone()
                };
                term = Some(match term {
                    None => factor,
                    Some(t) => t.tensor(&factor),
                });
            }
            result = result.sub(&term.expect("rank at least 1"));
        }
        result
    }
}
