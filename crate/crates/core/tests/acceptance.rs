//! Acceptance suite: every criterion at its stated tolerance, one PASS/FAIL
//! line each. Runs as a plain binary so the lines always reach the log.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weilbounds::conductor::{cyclotomic_ratio, depth_bound_v1, lcm_phi_le, LocalFieldParams};
use weilbounds::genus::{
    dejong_genus_bound, fermat_data, madan_madden_min_exponent, max_genus_lp, point_count_exact,
    AngleSet, ArithmeticMode, LpReport, LpValue,
};
use weilbounds::plancherel::{sample_family, serre_decay_experiment, sparse_fraction, DensitySpec};
use weilbounds::surd::QuadraticSurd;
use weilbounds::vaaler::{rect_pair, vaaler_pair, TorusInterval, TorusRectangle};
use weilbounds::weil::{
    count_weil_integers, enumerate_weil_polynomials, enumerate_weil_polynomials_mod, WeilParams,
};
use weilbounds::IntPolynomial;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    check(
        elapsed < limit,
        format!("{what} took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn c1_weil_q2_degree2() -> Outcome {
    let start = Instant::now();
    let params = WeilParams::from_u64(2, 1).map_err(|e| e.to_string())?;
    let got = enumerate_weil_polynomials(&params, 2, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut expected: Vec<IntPolynomial> = (-2..=2)
        .map(|a| IntPolynomial::from_i64s(&[2, -a, 1]))
        .collect();
    expected.push(IntPolynomial::from_i64s(&[-2, 0, 1]));
    expected.sort();
    check(got == expected, format!("enumerator returned {got:?}"))?;
    let (oracle, float_only) = common::oracle_enumerate(2, 2);
    check(oracle == got, format!("oracle returned {oracle:?}"))?;
    check(
        float_only.is_empty(),
        "float filter admitted a non-Weil polynomial",
    )?;
    within(elapsed, Duration::from_secs(1), "enumeration")?;
    Ok(format!("6 polynomials, oracle agrees, {elapsed:.2?}"))
}

fn c2_oracle_sweep() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=16u64 {
        for m in 1..=4 {
            let exact = enumerate_weil_polynomials_mod(&BigInt::from(n), m, false)
                .map_err(|e| e.to_string())?;
            let (oracle, float_only) = common::oracle_enumerate(n, m);
            check(
                exact == oracle,
                format!(
                    "N={n} m={m}: exact {} vs oracle {}",
                    exact.len(),
                    oracle.len()
                ),
            )?;
            check(
                float_only.is_empty(),
                format!("N={n} m={m}: float-only survivors {float_only:?}"),
            )?;
            total += exact.len();
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "sweep")?;
    Ok(format!("64 cases, {total} polynomials, {elapsed:.2?}"))
}

fn c3_vaaler_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let grid = 1 << 16;
    let mut worst_gap = 0.0f64;
    let mut worst_sandwich = 0.0f64;
    let mut worst_decay = 0.0f64;
    for kappa in [4u32, 16, 64, 256] {
        for _ in 0..200 {
            let (a, b): (f64, f64) = (rng.random(), rng.random());
            let interval = TorusInterval::new(a, b).map_err(|e| e.to_string())?;
            let pair = vaaler_pair(interval, kappa).map_err(|e| e.to_string())?;
            worst_gap = worst_gap.max((pair.mean_gap() - 2.0 / (kappa + 1) as f64).abs());
            let (lo, hi) = (pair.minorant(), pair.majorant());
            worst_decay = worst_decay
                .max(lo.decay_constant())
                .max(hi.decay_constant());
            let lo_vals = lo.evaluate_grid(grid).map_err(|e| e.to_string())?;
            let hi_vals = hi.evaluate_grid(grid).map_err(|e| e.to_string())?;
            for j in 0..grid {
                let x = j as f64 / grid as f64;
                let f = if interval.contains(x) { 1.0 } else { 0.0 };
                worst_sandwich = worst_sandwich.max(lo_vals[j] - f).max(f - hi_vals[j]);
            }
        }
    }
    check(worst_gap <= 1e-12, format!("gap error {worst_gap:e}"))?;
    check(
        worst_sandwich <= 1e-9,
        format!("sandwich violated by {worst_sandwich:e}"),
    )?;
    check(worst_decay <= 2.0, format!("decay constant {worst_decay}"))?;
    Ok(format!(
        "gap err {worst_gap:.1e}, sandwich slack {worst_sandwich:.1e}, decay C {worst_decay:.3}"
    ))
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

fn c4_small_ball_rate() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for r in 1..=3usize {
        for kappa in 1..=64u32 {
            let x: Vec<f64> = (0..r).map(|_| rng.random()).collect();
            let pair = rect_pair(
                &TorusRectangle::point(&x).map_err(|e| e.to_string())?,
                kappa,
            )
            .map_err(|e| e.to_string())?;
            let scaled = pair.majorant_mean() * ((kappa + 1) as f64).powi(r as i32);
            let target = 2f64.powi(r as i32);
            check(
                (scaled - target).abs() <= 1e-12 * target,
                format!("r={r} kappa={kappa}: {scaled}"),
            )?;
        }
    }
    let mut slopes = Vec::new();
    for r in 1..=2usize {
        let z: Vec<Vec<f64>> = (0..5)
            .map(|_| (0..r).map(|_| rng.random()).collect())
            .collect();
        let family = sample_family(
            &DensitySpec::lebesgue(r).map_err(|e| e.to_string())?,
            100_000,
            11,
        )
        .map_err(|e| e.to_string())?;
        let kappas = [8u32, 16, 32, 64];
        let mut logs = Vec::new();
        for &k in &kappas {
            let s = sparse_fraction(&family, &z, k).map_err(|e| e.to_string())?;
            logs.push(s.ceiling.ln());
        }
        let lk: Vec<f64> = kappas.iter().map(|&k| (k as f64).ln()).collect();
        let b = slope(&lk, &logs);
        check(
            (b + r as f64).abs() <= 0.2,
            format!("rank {r}: slope {b:.3}"),
        )?;
        slopes.push(format!("r={r} slope {b:.3}"));
    }
    Ok(format!(
        "mean scaling exact for r<=3, kappa<=64; {}",
        slopes.join(", ")
    ))
}

fn c5_serre_decay() -> Outcome {
    let density = DensitySpec::lebesgue(1).map_err(|e| e.to_string())?;
    let sizes = [100, 1000, 10_000, 100_000];
    let run =
        || serre_decay_experiment(2, 2, 1, &sizes, 20240, &density).map_err(|e| e.to_string());
    let table = run()?;
    check(
        table.admissible.len() == 5,
        format!("|Z| = {}", table.admissible.len()),
    )?;
    let uppers: Vec<f64> = table.rows.iter().map(|r| r.upper).collect();
    check(
        uppers.windows(2).all(|w| w[0] > w[1]),
        format!("not decreasing: {uppers:?}"),
    )?;
    for row in &table.rows {
        let cap = 10.0 * 2.0 / (row.kappa + 1) as f64;
        check(
            row.upper < cap,
            format!("size {}: upper {} >= {cap}", row.size, row.upper),
        )?;
    }
    check(run()? == table, "second run differs")?;
    let shown: Vec<String> = uppers.iter().map(|u| format!("{u:.4}")).collect();
    Ok(format!("|Z|=5, upper {}", shown.join(" > ")))
}

fn lp_exact(q: u64, angles: &str, n: u32) -> Result<LpReport, String> {
    let set = AngleSet::parse(angles).map_err(|e| e.to_string())?;
    max_genus_lp(q, &set, Some(n), ArithmeticMode::Auto).map_err(|e| e.to_string())
}

fn feasible_exact(q: u64, angles: &str, report: &LpReport) -> Result<(), String> {
    let set = AngleSet::parse(angles).map_err(|e| e.to_string())?;
    let mults = report
        .exact_multiplicities
        .as_ref()
        .ok_or("no exact solution")?;
    for n in 1..=report.n_max {
        let count = point_count_exact(q, n, set.angles(), mults).ok_or("lost exactness")?;
        check(
            !count.signum().is_lt(),
            format!("q={q}: #C(F_q^{n}) = {count} < 0"),
        )?;
    }
    Ok(())
}

fn c6_genus_lp() -> Outcome {
    let a = lp_exact(3, "0.5pi", 4)?;
    check(
        a.optimum == Some(LpValue::Exact("41/9".into())),
        format!("{:?}", a.optimum),
    )?;
    feasible_exact(3, "0.5pi", &a)?;
    let b = lp_exact(2, "1pi", 4)?;
    check(
        b.optimum == Some(LpValue::Exact("5/4".into())),
        format!("{:?}", b.optimum),
    )?;
    feasible_exact(2, "1pi", &b)?;
    Ok("41/9 and 5/4 exact, point counts nonnegative".into())
}

fn c7_fermat() -> Outcome {
    let mut parts = Vec::new();
    for p in [2u64, 3, 5] {
        let f = fermat_data(p, 1).map_err(|e| e.to_string())?;
        let lp = lp_exact(p, "0.5pi", 8)?;
        let bound = lp.exact_optimum.ok_or("LP not exact")?;
        let genus = QuadraticSurd::rational(BigRational::from_integer(f.genus.clone()));
        check(
            genus <= bound,
            format!("p={p}: genus {} above LP {bound}", f.genus),
        )?;
        let pb = BigInt::from(p);
        let expected: BigInt = BigInt::from(1) + &pb * &pb + BigInt::from(2) * &f.genus * &pb;
        check(
            f.maximal && f.maximal_count == expected,
            format!("p={p}: maximality fails"),
        )?;
        parts.push(format!("p={p}: g={} <= {bound}", f.genus));
    }
    Ok(parts.join("; "))
}

fn c8_dejong() -> Outcome {
    let r = dejong_genus_bound(2, 1, 1.0).map_err(|e| e.to_string())?;
    check(
        r.p1_product == BigInt::from(120),
        format!("P(1) product {}", r.p1_product),
    )?;
    check(
        r.factors.iter().all(|f| f.value_at_one.is_positive()),
        "zero factor",
    )?;
    let g = r.genus_bound.ok_or("no genus bound")? as f64;
    let p = 120.0;
    let at = madan_madden_min_exponent(g, 1.0).map_err(|e| e.to_string())?;
    let next = madan_madden_min_exponent(g + 1.0, 1.0).map_err(|e| e.to_string())?;
    check(
        at <= p && p < next,
        format!("bracketing fails at g={g}: {at} / {next}"),
    )?;
    Ok(format!("P1 = 120, genus bound {g}"))
}

fn c9_bound_calculators() -> Outcome {
    let limit = Duration::from_secs(5);
    let start = Instant::now();
    let field = LocalFieldParams::new(5, 1, 1).map_err(|e| e.to_string())?;
    let rep = depth_bound_v1(1, 1, &field).map_err(|e| e.to_string())?;
    check(
        rep.depth == BigRational::new(1.into(), 2.into()),
        format!("depth {}", rep.depth),
    )?;
    within(start.elapsed(), limit, "depth_bound_v1")?;

    let start = Instant::now();
    let l = lcm_phi_le(2).map_err(|e| e.to_string())?;
    check(l == BigInt::from(12), format!("lcm_phi_le(2) = {l}"))?;
    within(start.elapsed(), limit, "lcm_phi_le")?;

    let start = Instant::now();
    for n in 1..=5 {
        for modulus in 1..=10_000 {
            let c = cyclotomic_ratio(n, modulus).map_err(|e| e.to_string())?;
            check(
                c.within_bound,
                format!("n={n} N={modulus}: ratio {}", c.ratio),
            )?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, limit, "cyclotomic sweep")?;
    Ok(format!(
        "depth 1/2, lcm 12, 50000 cyclotomic ratios <= n^n in {elapsed:.2?}"
    ))
}

fn c10_count_growth() -> Outcome {
    let mut fitted = 0.0f64;
    let mut rows = Vec::new();
    let mut data = Vec::new();
    for q in [2u64, 3] {
        let counts = count_weil_integers(q, 1, 6).map_err(|e| e.to_string())?;
        for (&d, &c) in &counts.cumulative {
            if c > 0 {
                let ratio = (c as f64).ln() / ((d * d) as f64 * (q as f64).ln());
                fitted = fitted.max(ratio);
                data.push((q, d, c));
            }
        }
        let list: Vec<String> = counts
            .cumulative
            .values()
            .map(ToString::to_string)
            .collect();
        rows.push(format!("q={q}: [{}]", list.join(",")));
    }
    for &(q, d, c) in &data {
        check(
            (c as f64).ln() <= fitted * (d * d) as f64 * (q as f64).ln() + 1e-12,
            format!("q={q} d={d}"),
        )?;
    }
    check(fitted.is_finite() && fitted > 0.0, "no data")?;
    Ok(format!(
        "fitted C = {fitted:.4}; cumulative {}",
        rows.join(" ")
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "Weil enumeration exactness (q=2, w=1, m=2)",
            c1_weil_q2_degree2,
        ),
        (
            "oracle equivalence sweep (N <= 16, m <= 4)",
            c2_oracle_sweep,
        ),
        ("Vaaler identities", c3_vaaler_identities),
        ("small-ball rate", c4_small_ball_rate),
        ("Serre-decay experiment", c5_serre_decay),
        ("genus LP exactness", c6_genus_lp),
        ("Fermat consistency", c7_fermat),
        ("de Jong pipeline", c8_dejong),
        ("bound calculators", c9_bound_calculators),
        ("count-growth shape", c10_count_growth),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
