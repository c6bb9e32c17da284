//! Seeded families of Satake parameters on `T^r` and the small-ball estimates
//! that make finite admissible sets sparse in them.
//!
//! A family is an i.i.d. sample from an absolutely continuous density on the
//! torus. Rectangle and point masses are bounded above by family averages of
//! the majorants from [`crate::vaaler`]; with `κ ≈ log |F|` those averages
//! decay like `(2/(κ+1))^r`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sturm::real_roots;
use crate::vaaler::{rect_pair, TorusRectangle};
use crate::weil::{enumerate_weil_polynomials, hecke_trace_candidates, WeilParams};

/// Points per generator stream and per reduction chunk. Fixed so results do
/// not depend on the number of threads.
pub const CHUNK: usize = 4096;

/// Distance below which a family point counts as equal to an admissible point.
pub const POINT_TOLERANCE: f64 = 1e-12;

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Debug, Default)]
struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Nonnegative piecewise-linear density on `[0, 1]`, normalized to mass 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(f64, f64)>", into = "Vec<(f64, f64)>")]
pub struct PiecewiseLinear {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// mass to the left of each knot
    cdf: Vec<f64>,
}

impl PiecewiseLinear {
    /// Knots `(x, density)` with `x` strictly increasing from 0 to 1.
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        let bad = |m: &str| Error::Unnormalizable(m.to_string());
        if knots.len() < 2 {
            return Err(bad("need at least two knots"));
        }
        if knots[0].0 != 0.0 || knots[knots.len() - 1].0 != 1.0 {
            return Err(bad("knots must span [0, 1]"));
        }
        if knots
            .windows(2)
            .any(|w| w[0].0.is_nan() || w[1].0.is_nan() || w[0].0 >= w[1].0)
        {
            return Err(bad("knot positions must be strictly increasing"));
        }
        if knots.iter().any(|&(_, y)| !(y >= 0.0 && y.is_finite())) {
            return Err(bad("density values must be finite and nonnegative"));
        }
        let (xs, raw): (Vec<f64>, Vec<f64>) = knots.into_iter().unzip();
        let mut cdf = vec![0.0];
        for i in 1..xs.len() {
            let seg = 0.5 * (raw[i - 1] + raw[i]) * (xs[i] - xs[i - 1]);
            cdf.push(cdf[i - 1] + seg);
        }
        let total = cdf[cdf.len() - 1];
        if total.is_nan() || total <= 0.0 {
            return Err(bad("density has zero mass"));
        }
        Ok(Self {
            xs,
            ys: raw.iter().map(|y| y / total).collect(),
            cdf: cdf.iter().map(|c| c / total).collect(),
        })
    }

    /// Parses `"x:y,x:y,…"`.
    pub fn parse(s: &str) -> Result<Self> {
        let knots = s
            .split(',')
            .map(|pair| {
                let (x, y) = pair
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected x:y, got {pair:?}")))?;
                let num = |t: &str| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                };
                Ok((num(x)?, num(y)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(knots)
    }

    pub fn knots(&self) -> Vec<(f64, f64)> {
        self.xs
            .iter()
            .copied()
            .zip(self.ys.iter().copied())
            .collect()
    }

    pub fn density(&self, x: f64) -> f64 {
        let i = self.segment_at(x);
        let t = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        self.ys[i] + t * (self.ys[i + 1] - self.ys[i])
    }

    fn segment_at(&self, x: f64) -> usize {
        self.xs[1..self.xs.len() - 1].partition_point(|&k| k <= x)
    }

    pub fn inverse_cdf(&self, u: f64) -> f64 {
        let i = self.cdf[1..self.cdf.len() - 1].partition_point(|&c| c <= u);
        let mass = u - self.cdf[i];
        let (y0, width) = (self.ys[i], self.xs[i + 1] - self.xs[i]);
        let slope = (self.ys[i + 1] - y0) / width;
        // y0 t + slope t²/2 = mass, in the cancellation-free form
        let disc = (y0 * y0 + 2.0 * slope * mass).max(0.0);
        let denom = y0 + disc.sqrt();
        let t = if denom > 0.0 { 2.0 * mass / denom } else { 0.0 };
        (self.xs[i] + t.clamp(0.0, width)).min(self.xs[i + 1])
    }

    /// Positive on its support with no zero-approach inside it.
    fn is_bounded_below(&self) -> bool {
        self.ys.windows(2).all(|w| (w[0] > 0.0) == (w[1] > 0.0))
    }
}

impl TryFrom<Vec<(f64, f64)>> for PiecewiseLinear {
    type Error = Error;

    fn try_from(knots: Vec<(f64, f64)>) -> Result<Self> {
        Self::new(knots)
    }
}

impl From<PiecewiseLinear> for Vec<(f64, f64)> {
    fn from(p: PiecewiseLinear) -> Self {
        p.knots()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum DensitySpec {
    Lebesgue {
        rank: usize,
    },
    Product {
        factors: Vec<PiecewiseLinear>,
        bounded_below: bool,
    },
}

impl DensitySpec {
    pub fn lebesgue(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("rank must be at least 1".into()));
        }
        Ok(DensitySpec::Lebesgue { rank })
    }

    pub fn product(factors: Vec<PiecewiseLinear>, bounded_below: bool) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "product density needs a factor".into(),
            ));
        }
        if bounded_below && !factors.iter().all(PiecewiseLinear::is_bounded_below) {
            return Err(Error::Unnormalizable(
                "density approaches zero inside its support".into(),
            ));
        }
        Ok(DensitySpec::Product {
            factors,
            bounded_below,
        })
    }

    pub fn rank(&self) -> usize {
        match self {
            DensitySpec::Lebesgue { rank } => *rank,
            DensitySpec::Product { factors, .. } => factors.len(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            DensitySpec::Lebesgue { .. } => "lebesgue",
            DensitySpec::Product { .. } => "product",
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng, out: &mut Vec<f64>) {
        match self {
            DensitySpec::Lebesgue { rank } => {
                out.extend((0..*rank).map(|_| rng.random::<f64>()));
            }
            DensitySpec::Product { factors, .. } => {
                for f in factors {
                    let x = f.inverse_cdf(rng.random::<f64>());
                    out.push(if x >= 1.0 { 0.0 } else { x });
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyMeta {
    pub q: Option<u64>,
    pub seed: Option<u64>,
    pub density: String,
    pub size: usize,
}

/// Weighted points on `T^r`, stored row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralFamily {
    rank: usize,
    coords: Vec<f64>,
    weights: Vec<f64>,
    pub meta: FamilyMeta,
}

impl SpectralFamily {
    /// Family from explicit points; weights default to 1.
    pub fn new(rank: usize, points: &[Vec<f64>], weights: Option<Vec<f64>>) -> Result<Self> {
        if rank == 0 || points.is_empty() {
            return Err(Error::InvalidParameter(
                "family needs rank and points".into(),
            ));
        }
        if points.iter().any(|p| p.len() != rank) {
            return Err(Error::InvalidParameter("point of wrong rank".into()));
        }
        let weights = weights.unwrap_or_else(|| vec![1.0; points.len()]);
        if weights.len() != points.len() || weights.iter().any(|&w| w.is_nan() || w < 0.0) {
            return Err(Error::InvalidParameter(
                "weights must be nonnegative, one per point".into(),
            ));
        }
        if weights.iter().sum::<f64>() <= 0.0 {
            return Err(Error::InvalidParameter("weights sum to zero".into()));
        }
        Ok(Self {
            rank,
            coords: points.iter().flatten().map(|x| x.rem_euclid(1.0)).collect(),
            weights,
            meta: FamilyMeta {
                q: None,
                seed: None,
                density: "explicit".into(),
                size: points.len(),
            },
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.rank..(i + 1) * self.rank]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.rank)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weighted averages of several functions at once, with a chunked
    /// compensated reduction in fixed order.
    fn averages<const K: usize>(&self, f: impl Fn(&[f64]) -> [f64; K] + Sync) -> [f64; K] {
        let partial: Vec<([Compensated; K], Compensated)> = self
            .coords
            .par_chunks(CHUNK * self.rank)
            .zip(self.weights.par_chunks(CHUNK))
            .map(|(xs, ws)| {
                let mut acc = [Compensated::default(); K];
                let mut total = Compensated::default();
                for (x, &w) in xs.chunks_exact(self.rank).zip(ws) {
                    let v = f(x);
                    for k in 0..K {
                        acc[k].add(w * v[k]);
                    }
                    total.add(w);
                }
                (acc, total)
            })
            .collect();
        let mut acc = [Compensated::default(); K];
        let mut total = Compensated::default();
        for (a, t) in &partial {
            for k in 0..K {
                acc[k].add(a[k].value());
            }
            total.add(t.value());
        }
        let t = total.value();
        std::array::from_fn(|k| acc[k].value() / t)
    }

    fn effective_size(&self) -> f64 {
        let s: f64 = self.weights.iter().sum();
        let s2: f64 = self.weights.iter().map(|w| w * w).sum();
        s * s / s2
    }
}

/// `size` i.i.d. draws; chunk `i` uses the ChaCha stream `i` of `seed`.
pub fn sample_family(density: &DensitySpec, size: usize, seed: u64) -> Result<SpectralFamily> {
    if size == 0 {
        return Err(Error::InvalidParameter(
            "family size must be at least 1".into(),
        ));
    }
    let rank = density.rank();
    let chunks = size.div_ceil(CHUNK);
    let coords: Vec<f64> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let n = CHUNK.min(size - c * CHUNK);
            let mut out = Vec::with_capacity(n * rank);
            for _ in 0..n {
                density.draw(&mut rng, &mut out);
            }
            out
        })
        .collect();
    Ok(SpectralFamily {
        rank,
        coords,
        weights: vec![1.0; size],
        meta: FamilyMeta {
            q: None,
            seed: Some(seed),
            density: density.tag().into(),
            size,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureEstimate {
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
}

pub fn estimate_measure(
    family: &SpectralFamily,
    rect: &TorusRectangle,
    kappa: u32,
) -> Result<MeasureEstimate> {
    if rect.rank() != family.rank() {
        return Err(Error::InvalidParameter(
            "rectangle and family ranks differ".into(),
        ));
    }
    let pair = rect_pair(rect, kappa)?;
    let [exact, lower, upper] = family.averages(|x| {
        [
            if rect.contains(x) { 1.0 } else { 0.0 },
            pair.minorant_at(x),
            pair.majorant_at(x),
        ]
    });
    Ok(MeasureEstimate {
        exact,
        lower,
        upper,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseFraction {
    pub exact: f64,
    /// `Σ_z` family average of the point majorant at `z`
    pub upper: f64,
    /// `|Z| (2/(κ+1))^r + deviation`
    pub ceiling: f64,
    /// three standard errors of the family average behind `upper`
    pub deviation: f64,
}

fn torus_close(x: &[f64], z: &[f64]) -> bool {
    x.iter().zip(z).all(|(&a, &b)| {
        let d = (a - b).rem_euclid(1.0);
        d.min(1.0 - d) <= POINT_TOLERANCE
    })
}

pub fn sparse_fraction(
    family: &SpectralFamily,
    z: &[Vec<f64>],
    kappa: u32,
) -> Result<SparseFraction> {
    if z.is_empty() {
        return Err(Error::InvalidParameter("admissible set is empty".into()));
    }
    let r = family.rank();
    let pairs = z
        .iter()
        .map(|p| {
            if p.len() != r {
                return Err(Error::InvalidParameter(
                    "admissible point of wrong rank".into(),
                ));
            }
            rect_pair(&TorusRectangle::point(p)?, kappa)
        })
        .collect::<Result<Vec<_>>>()?;
    let [exact, upper, second] = family.averages(|x| {
        let hit = z.iter().any(|p| torus_close(x, p));
        let s: f64 = pairs.iter().map(|p| p.majorant_at(x)).sum();
        [if hit { 1.0 } else { 0.0 }, s, s * s]
    });
    let variance = (second - upper * upper).max(0.0);
    let deviation = 3.0 * (variance / family.effective_size()).sqrt();
    let base = z.len() as f64 * (2.0 / (kappa + 1) as f64).powi(r as i32);
    Ok(SparseFraction {
        exact,
        upper,
        ceiling: base + deviation,
        deviation,
    })
}

/// Torus points `θ/2π` of the Satake parameters whose trace `2 q^{(k−1)/2} cos θ`
/// is a root of some Hecke candidate polynomial.
pub fn admissible_points(q: u64, k: u32, a: usize) -> Result<Vec<f64>> {
    let scale = 2.0 * (q as f64).powf((k - 1) as f64 / 2.0);
    let mut points = Vec::new();
    for h in hecke_trace_candidates(q, k, a)? {
        for t in real_roots(&h)? {
            let c = (t / scale).clamp(-1.0, 1.0);
            points.push(c.acos() / std::f64::consts::TAU);
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();
    Ok(points)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SerreRow {
    pub size: usize,
    pub kappa: u32,
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
    pub ceiling: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SerreTable {
    pub q: u64,
    pub k: u32,
    #[serde(rename = "A")]
    pub a: usize,
    pub seed: u64,
    pub density: DensitySpec,
    pub admissible: Vec<f64>,
    /// no candidate traces exist; every row is identically zero
    pub empty_admissible: bool,
    pub rows: Vec<SerreRow>,
}

/// `κ = ⌈ln size⌉`, at least 1.
pub fn kappa_for_size(size: usize) -> u32 {
    ((size as f64).ln().ceil() as u32).max(1)
}

pub fn serre_decay_experiment(
    q: u64,
    k: u32,
    a: usize,
    sizes: &[usize],
    seed: u64,
    density: &DensitySpec,
) -> Result<SerreTable> {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "sizes must be nonempty and increasing".into(),
        ));
    }
    if density.rank() != 1 {
        return Err(Error::InvalidParameter(
            "trace experiment runs in rank 1".into(),
        ));
    }
    let admissible = admissible_points(q, k, a)?;
    let z: Vec<Vec<f64>> = admissible.iter().map(|&t| vec![t]).collect();
    let mut rows = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let kappa = kappa_for_size(size);
        let row = if z.is_empty() {
            SerreRow {
                size,
                kappa,
                exact: 0.0,
                lower: 0.0,
                upper: 0.0,
                ceiling: 0.0,
            }
        } else {
            let mut family = sample_family(density, size, seed)?;
            family.meta.q = Some(q);
            let s = sparse_fraction(&family, &z, kappa)?;
            SerreRow {
                size,
                kappa,
                exact: s.exact,
                // point minorants vanish identically
                lower: 0.0,
                upper: s.upper,
                ceiling: s.ceiling,
            }
        };
        rows.push(row);
    }
    Ok(SerreTable {
        q,
        k,
        a,
        seed,
        density: density.clone(),
        empty_admissible: z.is_empty(),
        admissible,
        rows,
    })
}

/// Smallest `d ≤ cap` whose cumulative count of weight-1 `q`-Weil integers
/// reaches `m`; `None` when the cap is reached first.
pub fn min_degree_for_count(q: u64, m: usize, cap: usize) -> Result<Option<usize>> {
    if m == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let params = WeilParams::from_u64(q, 1)?;
    let mut running = 0;
    for d in 1..=cap {
        running += enumerate_weil_polynomials(&params, d, true)?.len();
        if running >= m {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
