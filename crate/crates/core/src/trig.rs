//! Finite Fourier series on the r-torus `T^r = (R/Z)^r`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multi-index of a Fourier coefficient.
pub type Frequency = Vec<i32>;

/// `Σ_ν c_ν e(⟨ν, x⟩)` with `e(t) = exp(2πit)`. Coefficients are expected to
/// be Hermitian (`c_{−ν} = conj(c_ν)`), so the function is real-valued.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPolynomial {
    rank: usize,
    degree: u32,
    coeffs: BTreeMap<Frequency, Complex64>,
}

/// Groups acting on frequency vectors by permuting and/or negating coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeylGroup {
    Permutations,
    SignFlips,
    SignedPermutations,
}

impl TrigPolynomial {
    pub fn new(rank: usize, coeffs: BTreeMap<Frequency, Complex64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("rank must be at least 1".into()));
        }
        if let Some(nu) = coeffs.keys().find(|nu| nu.len() != rank) {
            return Err(Error::InvalidParameter(format!(
                "frequency {nu:?} does not have rank {rank}"
            )));
        }
        let degree = coeffs
            .keys()
            .flat_map(|nu| nu.iter().map(|v| v.unsigned_abs()))
            .max()
            .unwrap_or(0);
        Ok(Self {
            rank,
            degree,
            coeffs,
        })
    }

    /// Rank-1 polynomial from the coefficients `c_{−κ}, …, c_κ`.
    pub fn from_symmetric_slice(c: &[Complex64]) -> Self {
        assert!(c.len() % 2 == 1, "need an odd number of coefficients");
        let k = (c.len() / 2) as i32;
        let coeffs = c
            .iter()
            .enumerate()
            .map(|(i, &v)| (vec![i as i32 - k], v))
            .collect();
        Self::new(1, coeffs).expect("rank 1")
    }

    pub fn constant(rank: usize, value: f64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0; rank], Complex64::new(value, 0.0));
        Self::new(rank, coeffs).expect("rank checked by caller")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Frequency, Complex64> {
        &self.coeffs
    }

    pub fn coeff(&self, nu: &[i32]) -> Complex64 {
        self.coeffs.get(nu).copied().unwrap_or_default()
    }

    /// Integral over the torus, i.e. `c_0`.
    pub fn mean(&self) -> f64 {
        self.coeff(&vec![0; self.rank]).re
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|(nu, c)| {
            let neg: Frequency = nu.iter().map(|v| -v).collect();
            (self.coeff(&neg).conj() - c).norm() <= tol
        })
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.rank, "point has wrong rank");
        let mut total = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for (nu, c) in &self.coeffs {
            let phase: f64 = nu.iter().zip(x).map(|(&v, &t)| v as f64 * t).sum();
            total += c * Complex64::from_polar(1.0, TAU * phase);
            scale += c.norm();
        }
        debug_assert!(
            total.im.abs() <= 1e-10 * (1.0 + scale),
            "imaginary residue {}",
            total.im
        );
        total.re
    }

    /// Values at `x_j = j/n` for `j = 0..n`, via one inverse FFT (rank 1 only).
    pub fn evaluate_grid(&self, n: usize) -> Result<Vec<f64>> {
        if self.rank != 1 {
            return Err(Error::InvalidParameter(
                "grid evaluation needs rank 1".into(),
            ));
        }
        if n <= 2 * self.degree as usize {
            return Err(Error::InvalidParameter(format!(
                "grid of {n} points aliases degree {}",
                self.degree
            )));
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        for (nu, c) in &self.coeffs {
            buf[nu[0].rem_euclid(n as i32) as usize] += c;
        }
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
        Ok(buf.into_iter().map(|z| z.re).collect())
    }

    /// Smallest `C` with `|c_ν| ≤ C/|ν|_∞` for every `ν ≠ 0`.
    pub fn decay_constant(&self) -> f64 {
        self.coeffs
            .iter()
            .filter_map(|(nu, c)| {
                let size = nu.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
                (size > 0).then(|| size as f64 * c.norm())
            })
            .fold(0.0, f64::max)
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut coeffs = self.coeffs.clone();
        for (nu, c) in &other.coeffs {
            *coeffs.entry(nu.clone()).or_default() += c * sign;
        }
        Self::new(self.rank, coeffs).expect("same rank")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(nu, c)| (nu.clone(), c * s))
            .collect();
        Self::new(self.rank, coeffs).expect("same rank")
    }

    /// Product of functions in disjoint variables: rank adds.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (mu, a) in &self.coeffs {
            for (nu, b) in &other.coeffs {
                let key: Frequency = mu.iter().chain(nu).copied().collect();
                coeffs.insert(key, a * b);
            }
        }
        Self::new(self.rank + other.rank, coeffs).expect("ranks positive")
    }

    /// Coefficientwise average over the orbit of each frequency.
    pub fn weyl_symmetrize(&self, group: WeylGroup) -> Self {
        let elements = group_elements(self.rank, group);
        let weight = 1.0 / elements.len() as f64;
        let mut coeffs: BTreeMap<Frequency, Complex64> = BTreeMap::new();
        for (nu, c) in &self.coeffs {
            for (perm, signs) in &elements {
                let image: Frequency = perm.iter().zip(signs).map(|(&i, &s)| s * nu[i]).collect();
                *coeffs.entry(image).or_default() += c * weight;
            }
        }
        Self::new(self.rank, coeffs).expect("same rank")
    }
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(r - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, r - 1);
            out.push(q);
        }
    }
    out
}

fn group_elements(r: usize, group: WeylGroup) -> Vec<(Vec<usize>, Vec<i32>)> {
    let perms = match group {
        WeylGroup::SignFlips => vec![(0..r).collect()],
        _ => permutations(r),
    };
    let signs: Vec<Vec<i32>> = match group {
        WeylGroup::Permutations => vec![vec![1; r]],
        _ => (0..1u32 << r)
            .map(|mask| {
                (0..r)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect(),
    };
    perms
        .iter()
        .flat_map(|p| signs.iter().map(move |s| (p.clone(), s.clone())))
        .collect()
}

impl Serialize for TrigPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(&Frequency, f64, f64)> =
            self.coeffs.iter().map(|(nu, c)| (nu, c.re, c.im)).collect();
        let mut st = s.serialize_struct("TrigPolynomial", 3)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &rows)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for TrigPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rank: usize,
            coeffs: Vec<(Frequency, f64, f64)>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|(nu, re, im)| (nu, Complex64::new(re, im)))
            .collect();
        TrigPolynomial::new(raw.rank, coeffs).map_err(de::Error::custom)
    }
}
