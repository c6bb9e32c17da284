use weilbounds::genus::{
    dejong_genus_bound, fermat_data, max_genus_lp, point_count, AngleSet, ArithmeticMode, LpVerdict,
};

fn optimum(q: u64, angles: &str, n: u32, mode: ArithmeticMode) -> Option<f64> {
    let set = AngleSet::parse(angles).unwrap();
    max_genus_lp(q, &set, Some(n), mode).unwrap().optimum_f64
}

#[test]
fn exact_and_float_modes_agree() {
    let cases = [
        (3, "0.5pi", 4),
        (2, "1pi", 4),
        (4, "2/3pi", 6),
        (5, "1/3pi,1pi", 6),
        (2, "0.5pi,2/3pi", 12),
        (7, "0pi,1/2pi", 8),
        (9, "1/3pi,1/2pi,2/3pi", 12),
    ];
    for (q, s, n) in cases {
        let exact = optimum(q, s, n, ArithmeticMode::Auto);
        let float = optimum(q, s, n, ArithmeticMode::Float);
        match (exact, float) {
            (Some(e), Some(f)) => assert!(
                (e - f).abs() <= 1e-9 * e.abs().max(1.0),
                "{q} {s}: {e} vs {f}"
            ),
            (None, None) => {}
            other => panic!("{q} {s}: verdicts differ {other:?}"),
        }
    }
}

#[test]
fn lp_nonincreasing_in_n_max() {
    let values: Vec<f64> = [2, 4, 6, 8]
        .iter()
        .map(|&n| optimum(3, "0.5pi", n, ArithmeticMode::Auto).unwrap_or(f64::INFINITY))
        .collect();
    assert!(values.windows(2).all(|w| w[1] <= w[0]), "{values:?}");
    assert!(values[3].is_finite());
}

#[test]
fn float_solutions_are_feasible() {
    let set = AngleSet::parse("0.3,1.1,2.9").unwrap();
    let r = max_genus_lp(5, &set, None, ArithmeticMode::Auto).unwrap();
    assert_eq!(r.mode, "float");
    assert_eq!(r.n_max, 16);
    assert_eq!(r.verdict, LpVerdict::Optimal);
    let with = set.with_multiplicities(r.multiplicities.clone()).unwrap();
    for n in 1..=r.n_max {
        assert!(point_count(5, n, &with) >= -1e-9 * 5f64.powi(n as i32));
    }
}

#[test]
fn fermat_ratio_tends_to_one() {
    let ratios: Vec<f64> = [2u64, 3, 5, 7, 11]
        .iter()
        .map(|&p| {
            let g = fermat_data(p, 1)
                .unwrap()
                .genus
                .to_string()
                .parse::<f64>()
                .unwrap();
            optimum(p, "0.5pi", 8, ArithmeticMode::Auto).unwrap() / g
        })
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
    assert!(*ratios.last().unwrap() < 1.6);
    assert!(ratios.iter().all(|&r| r >= 1.0));
}

#[test]
fn fermat_higher_r_is_maximal() {
    for (p, r) in [(2u64, 2u32), (2, 3), (3, 2), (5, 2)] {
        assert!(fermat_data(p, r).unwrap().maximal, "p={p} r={r}");
    }
}

#[test]
fn dejong_monotone_in_d() {
    let d1 = dejong_genus_bound(2, 1, 1.0).unwrap();
    let d2 = dejong_genus_bound(2, 2, 1.0).unwrap();
    assert!(d2.p1_product >= d1.p1_product);
    assert!(d2.genus_bound >= d1.genus_bound);
    assert!(d2.factors.len() > d1.factors.len());
}
