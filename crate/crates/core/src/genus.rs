//! Genus bounds for curves over `F_q` whose Frobenius angles lie in a fixed
//! finite set `S`.
//!
//! The main tool is the family of inequalities
//! `2 q^{n/2} Σ_j g_j cos(nθ_j) ≤ q^n + 1` (nonnegativity of `#C(F_{q^n})`),
//! maximized over real multiplicities `g_j ≥ 0` as a linear program.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{big_to_f64, is_prime};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::rational::{big_str, parse_decimal, parse_ratio};
use crate::simplex::{maximize, LpOutcome, LpScalar};
use crate::surd::QuadraticSurd;
use crate::weil::{enumerate_weil_polynomials, WeilParams};

/// A Frobenius angle in `[0, π]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Angle {
    /// `r·π` with `r` rational
    PiMultiple(BigRational),
    Radians(f64),
}

impl Angle {
    /// Accepts `0.5pi`, `2/3pi`, `pi`, `1π` (exact) or a bare number of radians.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let stripped = s
            .strip_suffix("pi")
            .or_else(|| s.strip_suffix('π'))
            .map(|t| t.trim().trim_end_matches('*'));
        match stripped {
            Some("") => Ok(Angle::PiMultiple(BigRational::one())),
            Some(t) => parse_ratio(t).map(Angle::PiMultiple).map_err(Error::Parse),
            None => s
                .parse::<f64>()
                .map(Angle::Radians)
                .map_err(|e| Error::Parse(format!("{s:?}: {e}"))),
        }
    }

    pub fn radians(&self) -> f64 {
        match self {
            Angle::PiMultiple(r) => r.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI,
            Angle::Radians(x) => *x,
        }
    }

    pub fn pi_multiple(&self) -> Option<&BigRational> {
        match self {
            Angle::PiMultiple(r) => Some(r),
            Angle::Radians(_) => None,
        }
    }

    /// `cos(nθ)` when it is rational.
    pub fn exact_cos(&self, n: u32) -> Option<BigRational> {
        let r = self.pi_multiple()?;
        let two = BigRational::from_integer(2.into());
        let t = r * BigRational::from_integer(n.into());
        let t = &t - (&t / &two).floor() * &two;
        let half = |v: i64| BigRational::new(v.into(), 2.into());
        let third = |v: i64| BigRational::new(v.into(), 3.into());
        if t.is_zero() {
            Some(BigRational::one())
        } else if t == BigRational::one() {
            Some(-BigRational::one())
        } else if t == half(1) || t == half(3) {
            Some(BigRational::zero())
        } else if t == third(1) || t == third(5) {
            Some(half(1))
        } else if t == third(2) || t == third(4) {
            Some(half(-1))
        } else {
            None
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::PiMultiple(r) => write!(f, "{r}pi"),
            Angle::Radians(x) => write!(f, "{x}"),
        }
    }
}

/// Strictly increasing angles in `[0, π]`, optionally with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleSet {
    angles: Vec<Angle>,
    multiplicities: Option<Vec<f64>>,
}

impl AngleSet {
    pub fn new(angles: Vec<Angle>) -> Result<Self> {
        for a in &angles {
            let x = a.radians();
            if !(0.0..=std::f64::consts::PI + 1e-15).contains(&x) {
                return Err(Error::InvalidParameter(format!(
                    "angle {a} outside [0, pi]"
                )));
            }
        }
        if angles.windows(2).any(|w| w[0].radians() >= w[1].radians()) {
            return Err(Error::InvalidParameter(
                "angles must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            angles,
            multiplicities: None,
        })
    }

    /// Comma-separated list, e.g. `"0.5pi,1pi"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.split(',').map(Angle::parse).collect::<Result<_>>()?)
    }

    pub fn with_multiplicities(mut self, m: Vec<f64>) -> Result<Self> {
        if m.len() != self.angles.len() || m.iter().any(|&g| g.is_nan() || g < 0.0) {
            return Err(Error::InvalidParameter(
                "multiplicities must be nonnegative and align with angles".into(),
            ));
        }
        self.multiplicities = Some(m);
        Ok(self)
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn multiplicities(&self) -> Option<&[f64]> {
        self.multiplicities.as_deref()
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    /// `2·lcm` of the denominators when every angle is a rational multiple of π, else 16.
    pub fn default_n_max(&self) -> u32 {
        let dens: Option<Vec<BigInt>> = self
            .angles
            .iter()
            .map(|a| a.pi_multiple().map(|r| r.denom().clone()))
            .collect();
        match dens {
            Some(d) => {
                let l: BigInt = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
                (l * BigInt::from(2)).to_u32().unwrap_or(16)
            }
            None => 16,
        }
    }
}

/// `q^n + 1 − 2 q^{n/2} Σ_j g_j cos(nθ_j)`; missing multiplicities count as 0.
pub fn point_count(q: u64, n: u32, set: &AngleSet) -> f64 {
    let qf = q as f64;
    let zeros = vec![0.0; set.len()];
    let mults = set.multiplicities().unwrap_or(&zeros);
    let s: f64 = set
        .angles()
        .iter()
        .zip(mults)
        .map(|(a, g)| g * (n as f64 * a.radians()).cos())
        .sum();
    qf.powi(n as i32) + 1.0 - 2.0 * qf.powf(n as f64 / 2.0) * s
}

/// Exact version of [`point_count`] for multiplicities in `Q(√q)`; `None`
/// when some `cos(nθ_j)` is irrational.
pub fn point_count_exact(
    q: u64,
    n: u32,
    angles: &[Angle],
    mults: &[QuadraticSurd],
) -> Option<QuadraticSurd> {
    assert_eq!(
        angles.len(),
        mults.len(),
        "multiplicities must align with angles"
    );
    let mut s = QuadraticSurd::zero();
    for (a, g) in angles.iter().zip(mults) {
        s = s + QuadraticSurd::rational(a.exact_cos(n)?) * g.clone();
    }
    let qb = BigInt::from(q);
    let total =
        QuadraticSurd::from_int(1) + QuadraticSurd::rational(BigRational::from_integer(qb.pow(n)));
    Some(total - half_power(q, n) * QuadraticSurd::from_int(2) * s)
}

/// `q^{n/2}` in `Q(√q)`.
fn half_power(q: u64, n: u32) -> QuadraticSurd {
    let qb = BigInt::from(q);
    let k = BigRational::from_integer(qb.pow(n / 2));
    if n % 2 == 0 {
        QuadraticSurd::rational(k)
    } else {
        QuadraticSurd::sqrt_times(k, &qb)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ArithmeticMode {
    /// exact over `Q(√q)` whenever every `cos(nθ_j)` is rational
    #[default]
    Auto,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpVerdict {
    Optimal,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum LpValue {
    Exact(String),
    Float(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LpReport {
    pub q: u64,
    pub n_max: u32,
    pub angles: Vec<String>,
    pub mode: &'static str,
    pub verdict: LpVerdict,
    pub optimum: Option<LpValue>,
    pub optimum_f64: Option<f64>,
    pub genus_floor: Option<u64>,
    pub binding_rows: Vec<u32>,
    pub multiplicities: Vec<f64>,
    pub multiplicities_exact: Option<Vec<String>>,
    /// largest `−point_count` over the rows, float mode only
    pub max_residual: Option<f64>,
    #[serde(skip)]
    pub exact_optimum: Option<QuadraticSurd>,
    #[serde(skip)]
    pub exact_multiplicities: Option<Vec<QuadraticSurd>>,
}

fn solve<T: LpScalar>(
    n_max: u32,
    k: usize,
    coef: impl Fn(u32, usize) -> T,
    rhs: impl Fn(u32) -> T,
) -> LpOutcome<T> {
    let rows: Vec<Vec<T>> = (1..=n_max)
        .map(|n| (0..k).map(|j| coef(n, j)).collect())
        .collect();
    let b: Vec<T> = (1..=n_max).map(rhs).collect();
    let c = vec![T::one(); k];
    maximize(&c, &rows, &b)
}

fn floor_surd(v: &QuadraticSurd) -> Option<u64> {
    let mut k = v.to_f64().floor() as i64;
    let at = |k: i64| v - &QuadraticSurd::from_int(k);
    while at(k).is_negative() {
        k -= 1;
    }
    while !at(k + 1).is_negative() {
        k += 1;
    }
    u64::try_from(k).ok()
}

pub fn max_genus_lp(
    q: u64,
    set: &AngleSet,
    n_max: Option<u32>,
    mode: ArithmeticMode,
) -> Result<LpReport> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "q must be at least 2, got {q}"
        )));
    }
    if set.is_empty() {
        return Err(Error::InvalidParameter("angle set is empty".into()));
    }
    let n_max = n_max.unwrap_or_else(|| set.default_n_max());
    if n_max == 0 {
        return Err(Error::InvalidParameter("N_max must be at least 1".into()));
    }
    let angles = set.angles();
    let k = angles.len();
    let exact_cos: Option<Vec<Vec<BigRational>>> = (1..=n_max)
        .map(|n| angles.iter().map(|a| a.exact_cos(n)).collect())
        .collect();
    let mut report = LpReport {
        q,
        n_max,
        angles: angles.iter().map(ToString::to_string).collect(),
        mode: "float",
        verdict: LpVerdict::Unbounded,
        optimum: None,
        optimum_f64: None,
        genus_floor: None,
        binding_rows: Vec::new(),
        multiplicities: Vec::new(),
        multiplicities_exact: None,
        max_residual: None,
        exact_optimum: None,
        exact_multiplicities: None,
    };

    match (mode, exact_cos) {
        (ArithmeticMode::Auto, Some(cos)) => {
            report.mode = "exact";
            let two = BigRational::from_integer(2.into());
            let outcome = solve(
                n_max,
                k,
                |n, j| half_power(q, n) * QuadraticSurd::rational(&two * &cos[n as usize - 1][j]),
                |n| {
                    QuadraticSurd::from_int(1)
                        + QuadraticSurd::rational(BigRational::from_integer(BigInt::from(q).pow(n)))
                },
            );
            if let LpOutcome::Optimal { value, x, slack } = outcome {
                report.verdict = LpVerdict::Optimal;
                report.optimum = Some(LpValue::Exact(value.to_string()));
                report.optimum_f64 = Some(value.to_f64());
                report.genus_floor = floor_surd(&value);
                report.binding_rows = (1..=n_max)
                    .zip(&slack)
                    .filter(|(_, s)| s.is_zero())
                    .map(|(n, _)| n)
                    .collect();
                report.multiplicities = x.iter().map(QuadraticSurd::to_f64).collect();
                report.multiplicities_exact = Some(x.iter().map(ToString::to_string).collect());
                report.exact_optimum = Some(value);
                report.exact_multiplicities = Some(x);
            }
        }
        _ => {
            let qf = q as f64;
            let outcome = solve(
                n_max,
                k,
                |n, j| 2.0 * qf.powf(n as f64 / 2.0) * (n as f64 * angles[j].radians()).cos(),
                |n| qf.powi(n as i32) + 1.0,
            );
            if let LpOutcome::Optimal { value, x, slack } = outcome {
                report.verdict = LpVerdict::Optimal;
                report.optimum = Some(LpValue::Float(value));
                report.optimum_f64 = Some(value);
                report.genus_floor = Some((value + 1e-9).floor().max(0.0) as u64);
                report.binding_rows = (1..=n_max)
                    .zip(&slack)
                    .filter(|(n, s)| s.abs() <= 1e-9 * (qf.powi(*n as i32) + 1.0))
                    .map(|(n, _)| n)
                    .collect();
                let with = set
                    .clone()
                    .with_multiplicities(x.iter().map(|v| v.max(0.0)).collect())?;
                let worst = (1..=n_max)
                    .map(|n| -point_count(q, n, &with))
                    .fold(f64::NEG_INFINITY, f64::max);
                report.max_residual = Some(worst.max(0.0));
                report.multiplicities = x;
            }
        }
    }
    Ok(report)
}

/// `23 s² q^{2s} ln q`
pub fn ehr_bound(q: u64, s: u32) -> Result<f64> {
    if q < 2 || s == 0 {
        return Err(Error::InvalidParameter("need q >= 2 and |S| >= 1".into()));
    }
    let (qf, sf) = (q as f64, s as f64);
    Ok(23.0 * sf * sf * qf.powf(2.0 * sf) * qf.ln())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FermatData {
    pub p: u64,
    pub r: u32,
    #[serde(with = "big_str")]
    pub genus: BigInt,
    pub angles: Vec<String>,
    pub multiplicities: Vec<String>,
    #[serde(with = "big_str")]
    pub maximal_count: BigInt,
    pub point_count: String,
    pub maximal: bool,
}

/// Data of the curve `x^{p^r+1} + y^{p^r+1} + z^{p^r+1} = 0` over `F_p`:
/// its Frobenius eigenvalues are `2r`-th roots of `−p^r`, so it is maximal
/// over `F_{p^{2r}}`.
pub fn fermat_data(p: u64, r: u32) -> Result<FermatData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let pr = BigInt::from(p).pow(r);
    let genus: BigInt = &pr * (&pr - 1) / 2;
    let angles: Vec<Angle> = (0..r)
        .map(|k| Angle::PiMultiple(BigRational::new((2 * k + 1).into(), (2 * r).into())))
        .collect();
    let share = BigRational::new(genus.clone(), r.into());
    let mults = vec![share; r as usize];
    let maximal_count: BigInt = BigInt::one() + &pr * &pr + BigInt::from(2) * &genus * &pr;
    let surd_mults: Vec<QuadraticSurd> =
        mults.iter().cloned().map(QuadraticSurd::rational).collect();
    let count = point_count_exact(p, 2 * r, &angles, &surd_mults)
        .ok_or_else(|| Error::Invariant("Fermat angles lost exactness".into()))?;
    let maximal =
        count == QuadraticSurd::rational(BigRational::from_integer(maximal_count.clone()));
    Ok(FermatData {
        p,
        r,
        genus,
        angles: angles.iter().map(ToString::to_string).collect(),
        multiplicities: mults.iter().map(ToString::to_string).collect(),
        maximal_count,
        point_count: count.to_string(),
        maximal,
    })
}

/// `c (g / ln³ g)^{1/4}`
pub fn madan_madden_min_exponent(g: f64, c: f64) -> Result<f64> {
    if g.is_nan() || g < 3.0 {
        return Err(Error::InvalidParameter(format!(
            "g must be at least 3, got {g}"
        )));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidParameter("constant must be positive".into()));
    }
    Ok(c * (g / g.ln().powi(3)).powf(0.25))
}

/// Upper end of the genus search.
pub const GENUS_SEARCH_CAP: u64 = 1_000_000_000_000_000_000;
/// First integer past the minimum of `g / ln³ g` (at `e³`).
const INCREASING_FROM: u64 = 21;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeJongFactor {
    pub polynomial: IntPolynomial,
    #[serde(with = "big_str")]
    pub value_at_one: BigInt,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeJongReport {
    pub q: u64,
    pub d: u32,
    pub c: f64,
    pub factors: Vec<DeJongFactor>,
    #[serde(with = "big_str")]
    pub p1_product: BigInt,
    /// largest `g` with exponent bound at most `P1_product`; `None` if no `g ≥ 21` qualifies
    pub genus_bound: Option<u64>,
    /// the search stopped at [`GENUS_SEARCH_CAP`]
    pub capped: bool,
    pub caveat: &'static str,
}

pub fn dejong_genus_bound(q: u64, d: u32, c: f64) -> Result<DeJongReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    if c.is_nan() || c <= 0.0 {
        return Err(Error::InvalidParameter("constant must be positive".into()));
    }
    let params = WeilParams::from_u64(q, 1)?;
    let mut factors = Vec::new();
    for m in 1..=2 * d as usize {
        for poly in enumerate_weil_polynomials(&params, m, true)? {
            let value_at_one = poly.eval(&BigInt::one()).abs();
            if value_at_one.is_zero() {
                return Err(Error::Invariant(format!("{poly} vanishes at 1")));
            }
            factors.push(DeJongFactor {
                polynomial: poly,
                value_at_one,
            });
        }
    }
    let p1_product = factors
        .iter()
        .fold(BigInt::one(), |acc, f| acc * &f.value_at_one);
    let target = big_to_f64(&p1_product);
    let f = |g: u64| c * ((g as f64) / (g as f64).ln().powi(3)).powf(0.25);

    let (genus_bound, capped) = if f(INCREASING_FROM) > target {
        (None, false)
    } else {
        let mut lo = INCREASING_FROM;
        let mut hi = lo.saturating_mul(2);
        let mut capped = false;
        while f(hi) <= target {
            lo = hi;
            if hi >= GENUS_SEARCH_CAP {
                capped = true;
                break;
            }
            hi = hi.saturating_mul(2).min(GENUS_SEARCH_CAP);
        }
        if capped {
            (Some(GENUS_SEARCH_CAP), true)
        } else {
            while hi - lo > 1 {
                let mid = lo + (hi - lo) / 2;
                if f(mid) <= target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            (Some(lo), false)
        }
    };
    Ok(DeJongReport {
        q,
        d,
        c,
        factors,
        p1_product,
        genus_bound,
        capped,
        caveat: "implicit constant c is a parameter; only the shape of the bound is established",
    })
}

/// Parses a nonnegative multiplicity written as a decimal or `num/den`.
pub fn parse_multiplicity(s: &str) -> Result<BigRational> {
    let r = if s.contains('/') {
        parse_ratio(s)
    } else {
        parse_decimal(s)
    }
    .map_err(Error::Parse)?;
    if r.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "negative multiplicity {s}"
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(q: u64, s: &str, n: u32) -> LpReport {
        max_genus_lp(
            q,
            &AngleSet::parse(s).unwrap(),
            Some(n),
            ArithmeticMode::Auto,
        )
        .unwrap()
    }

    #[test]
    fn angle_parsing() {
        assert_eq!(
            Angle::parse("pi").unwrap(),
            Angle::PiMultiple(BigRational::one())
        );
        assert_eq!(
            Angle::parse("2/3pi").unwrap(),
            Angle::PiMultiple(BigRational::new(2.into(), 3.into()))
        );
        assert_eq!(
            Angle::parse("0.5pi").unwrap(),
            Angle::PiMultiple(BigRational::new(1.into(), 2.into()))
        );
        assert_eq!(Angle::parse("1.25").unwrap(), Angle::Radians(1.25));
        assert!(Angle::parse("xpi").is_err());
        assert!(AngleSet::parse("1pi,0.5pi").is_err());
        assert!(AngleSet::parse("1.5pi").is_err());
        assert_eq!(AngleSet::parse("0.5pi,2/3pi").unwrap().default_n_max(), 12);
        assert_eq!(AngleSet::parse("1.0").unwrap().default_n_max(), 16);
    }

    #[test]
    fn exact_cosines() {
        let a = Angle::parse("2/3pi").unwrap();
        assert_eq!(a.exact_cos(3), Some(BigRational::one()));
        assert_eq!(
            a.exact_cos(1),
            Some(BigRational::new((-1).into(), 2.into()))
        );
        assert_eq!(Angle::parse("1/4pi").unwrap().exact_cos(1), None);
        assert_eq!(
            Angle::parse("1/4pi").unwrap().exact_cos(4),
            Some(-BigRational::one())
        );
    }

    #[test]
    fn lp_examples() {
        let r = lp(2, "1pi", 4);
        assert_eq!(r.optimum, Some(LpValue::Exact("5/4".into())));
        assert_eq!(r.binding_rows, vec![2]);
        let r = lp(3, "0.5pi", 4);
        assert_eq!(r.optimum, Some(LpValue::Exact("41/9".into())));
        assert_eq!(r.binding_rows, vec![4]);
        assert_eq!(r.genus_floor, Some(4));
        let r = lp(4, "2/3pi", 6);
        assert_eq!(r.optimum, Some(LpValue::Exact("65/16".into())));
        assert_eq!(r.binding_rows, vec![3]);
    }

    #[test]
    fn lp_unbounded() {
        let r = lp(2, "1pi", 1);
        assert_eq!(r.verdict, LpVerdict::Unbounded);
        assert!(r.optimum.is_none());
    }

    #[test]
    fn float_mode_agrees() {
        let s = AngleSet::parse("0.5pi").unwrap();
        let r = max_genus_lp(3, &s, Some(4), ArithmeticMode::Float).unwrap();
        assert_eq!(r.mode, "float");
        assert!((r.optimum_f64.unwrap() - 41.0 / 9.0).abs() < 1e-9);
        assert!(r.max_residual.unwrap() < 1e-9);
    }

    #[test]
    fn point_counts() {
        let s = AngleSet::parse("0.5pi")
            .unwrap()
            .with_multiplicities(vec![3.0])
            .unwrap();
        assert!((point_count(3, 4, &s) - 28.0).abs() < 1e-9);
        let s = AngleSet::parse("1pi")
            .unwrap()
            .with_multiplicities(vec![3.0])
            .unwrap();
        assert!((point_count(9, 1, &s) - 28.0).abs() < 1e-9);
        assert_eq!(point_count(5, 2, &AngleSet::parse("1pi").unwrap()), 26.0);
        let exact = point_count_exact(
            3,
            4,
            AngleSet::parse("0.5pi").unwrap().angles(),
            &[QuadraticSurd::from_int(3)],
        );
        assert_eq!(exact, Some(QuadraticSurd::from_int(28)));
    }

    #[test]
    fn ehr_values() {
        assert!((ehr_bound(2, 1).unwrap() - 92.0 * 2f64.ln()).abs() < 1e-9);
        assert!((ehr_bound(2, 2).unwrap() - 1020.4).abs() < 0.1);
        let ratio = ehr_bound(3, 4).unwrap() / ehr_bound(3, 2).unwrap();
        assert!((ratio - 4.0 * 3f64.powi(4)).abs() < 1e-9);
        assert!(ehr_bound(1, 1).is_err());
    }

    #[test]
    fn fermat_examples() {
        let f = fermat_data(3, 1).unwrap();
        assert_eq!(f.genus, 3.into());
        assert_eq!(f.angles, vec!["1/2pi"]);
        assert_eq!(f.maximal_count, 28.into());
        assert!(f.maximal);
        assert_eq!(fermat_data(2, 1).unwrap().genus, 1.into());
        let f = fermat_data(2, 2).unwrap();
        assert_eq!(f.genus, 6.into());
        assert!(f.maximal);
        assert!(fermat_data(4, 1).is_err());
    }

    #[test]
    fn madan_madden_values() {
        assert!((madan_madden_min_exponent(1e6, 1.0).unwrap() - 4.41).abs() < 0.01);
        let e3 = 3f64.exp();
        let v = madan_madden_min_exponent(e3, 1.0).unwrap();
        assert!((v - (e3 / 27.0).powf(0.25)).abs() < 1e-12);
        assert!(
            madan_madden_min_exponent(1e8, 1.0).unwrap()
                > madan_madden_min_exponent(1e6, 1.0).unwrap()
        );
        assert!(madan_madden_min_exponent(2.0, 1.0).is_err());
    }

    #[test]
    fn dejong_q2_d1() {
        let r = dejong_genus_bound(2, 1, 1.0).unwrap();
        assert_eq!(r.factors.len(), 6);
        assert_eq!(r.p1_product, 120.into());
        let g = r.genus_bound.unwrap();
        let p = 120.0;
        assert!(madan_madden_min_exponent(g as f64, 1.0).unwrap() <= p);
        assert!(madan_madden_min_exponent(g as f64 + 1.0, 1.0).unwrap() > p);
    }
}
