//! Property checks shared by the invariant suite and the acceptance harness.
//! Each check returns `Err` with a description of the first failure.

#![allow(dead_code)]

use std::sync::OnceLock;

use hecke_bounds::bounds::{
    coef_t, gl2_objective, gl2_objective_with_budget, gl2_quotient, gln_objective, interval_bound,
    ramanujan_cutoff, rc_real_bound, walji_shifted_bound, DerivedConstants,
};
use hecke_bounds::empirical::{
    delta_coefficients, delta_coefficients_in, second_form_coefficients, sign_density, Arithmetic,
    CoefficientTable, DensityEstimate, Predicate, PrimeFilter,
};
use hecke_bounds::optimizer::{
    evaluate_ladder, gln_bound, maximize_ladder, minimize_allocation,
    minimize_allocation_with_budget,
};
use hecke_bounds::{Allocation, CombinationSpec, SearchConfig, ThresholdLadder};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub type CheckResult = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> CheckResult,
}

pub const EMPIRICAL_LIMIT: usize = 100_000;

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn prop<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> CheckResult {
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs())
}

fn ladder_from(x0: f64, gaps: &[f64]) -> ThresholdLadder {
    let mut cut = vec![x0];
    for g in gaps {
        cut.push(cut.last().unwrap() * (1.0 + g));
    }
    ThresholdLadder::new(cut).unwrap()
}

// ---------------------------------------------------------------- bounds

pub fn cutoff_root_property() -> CheckResult {
    let mut prev = 0.0;
    for i in 0..=4000 {
        let x = 10f64.powf(6.0 * i as f64 / 4000.0).max(1.0 + 1e-9);
        let c = ramanujan_cutoff(x).map_err(|e| e.to_string())?;
        let resid = c.powi(4) - 3.0 * c * c - 1.0 - x;
        ensure(resid.abs() <= 1e-10 * (1.0 + x), || {
            format!("residual {resid} at x = {x}")
        })?;
        ensure(c > prev, || format!("not increasing at x = {x}"))?;
        prev = c;
    }
    Ok(())
}

pub fn t_symmetry() -> CheckResult {
    let strat = (
        proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..7),
        proptest::collection::vec(0.0f64..std::f64::consts::TAU, 7),
        any::<bool>(),
    )
        .prop_flat_map(|(ls, phases, twist)| {
            let n = ls.len();
            (
                Just(ls),
                Just(phases),
                Just(twist),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        });
    prop(256, strat, |(ls, phases, twist, perm)| {
        let lambdas: Vec<Complex64> = ls.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
        prop_assume!(lambdas.iter().any(|l| l.norm() > 1e-3));
        let base = CombinationSpec::new(lambdas.clone()).with_twist_inequivalent(twist);
        let moved: Vec<Complex64> = perm
            .iter()
            .map(|&i| lambdas[i] * Complex64::from_polar(1.0, phases[i]))
            .collect();
        let other = CombinationSpec::new(moved).with_twist_inequivalent(twist);
        let (t0, t1) = (coef_t(&base).unwrap(), coef_t(&other).unwrap());
        prop_assert!(rel_close(t0, t1, 1e-12), "{t0} vs {t1}");
        Ok(())
    })
}

pub fn gl2_monotone_in_allocation() -> CheckResult {
    let strat = (
        proptest::collection::vec(-2.0f64..2.0, 1..4),
        1.1f64..30.0,
        proptest::collection::vec(0.05f64..1.5, 0..5),
        proptest::collection::vec(0.01f64..1.0, 6),
        0usize..6,
        0.05f64..1.0,
    );
    prop(256, strat, |(ls, x0, gaps, fr, coord, bump)| {
        prop_assume!(ls.iter().any(|l| l.abs() > 1e-2));
        let spec = CombinationSpec::real(&ls);
        let ladder = ladder_from(x0, &gaps);
        let m = ladder.cells();
        let scale = 0.5 * spec.budget() / (m as f64 + 1.0);
        let alloc = Allocation {
            tail_y: fr[0] * scale,
            ladder_y: fr[1..=m].iter().map(|f| f * scale).collect(),
        };
        let v0 = gl2_objective(&spec, &ladder, &alloc).unwrap();
        let mut more = alloc.clone();
        let j = coord % (m + 1);
        if j == 0 {
            more.tail_y *= 1.0 + bump;
        } else {
            more.ladder_y[j - 1] *= 1.0 + bump;
        }
        let v1 = gl2_objective(&spec, &ladder, &more).unwrap();
        prop_assert!(v1 < v0, "coordinate {j}: {v1} >= {v0}");
        Ok(())
    })
}

pub fn gl2_monotone_in_gaps() -> CheckResult {
    let strat = (
        1.1f64..30.0,
        proptest::collection::vec(0.05f64..1.5, 1..6),
        proptest::collection::vec(0.001f64..0.5, 7),
        0usize..6,
        0.01f64..3.0,
    );
    prop(256, strat, |(x0, gaps, ys, cell, widen)| {
        let k = DerivedConstants::new(&CombinationSpec::real(&[1.0, -0.5, 0.25])).unwrap();
        let ladder = ladder_from(x0, &gaps);
        let cut = ladder.cutoffs();
        let env: Vec<f64> = cut.iter().map(|&x| k.envelope(x)).collect();
        let m = ladder.cells();
        let alloc = Allocation {
            tail_y: ys[0],
            ladder_y: ys[1..=m].to_vec(),
        };
        let v0 = gl2_quotient(k.a, k.t, &env, cut, &alloc);
        let j = 1 + cell % m;
        let mut wider = env.clone();
        wider[j] += widen * (env[j] - env[0]);
        let v1 = gl2_quotient(k.a, k.t, &wider, cut, &alloc);
        prop_assert!(v1 < v0, "gap {j}: {v1} >= {v0}");
        Ok(())
    })
}

pub fn congruence_specialization() -> CheckResult {
    let strat = (
        1usize..10,
        1.2f64..50.0,
        proptest::collection::vec(0.05f64..1.5, 0..6),
        proptest::collection::vec(0.0f64..1.0, 7),
    );
    prop(256, strat, |(h, x0, gaps, fr)| {
        let spec = CombinationSpec::uniform(h).with_twist_inequivalent(false);
        let ladder = ladder_from(x0, &gaps);
        let cut = ladder.cutoffs();
        let m = ladder.cells();
        let scale = h as f64 / (m as f64 + 1.0);
        let alloc = Allocation {
            tail_y: fr[0] * scale,
            ladder_y: fr[1..=m].iter().map(|f| f * scale).collect(),
        };
        let general = gl2_objective(&spec, &ladder, &alloc).unwrap();
        let c = |x: f64| ((3.0 + (13.0 + 4.0 * x).sqrt()) / 2.0).sqrt();
        let (c0, top, y) = (c(x0), ladder.top(), alloc.tail_y);
        let mut num = 1.0 / h as f64
            - (2.0 * y).sqrt() / top
            - (2.0 * y.powi(3)).powf(0.25) * c0 / top.powf(1.5);
        for k in 1..=m {
            let yk = alloc.ladder_y[k - 1];
            let ck = c(cut[k]);
            num -= 2.0 * (ck * ck - c0 * c0) * yk / cut[k - 1].powi(2);
            num -= 2f64.powf(0.25) * (ck - c0) * yk.powf(0.75) / cut[k - 1].powf(1.5);
        }
        let display = num / (2.0 * c0 * c0);
        prop_assert!(
            (general - display).abs() <= 1e-12 * display.abs().max(1.0),
            "{general} vs {display}"
        );
        Ok(())
    })
}

pub fn walji_specialization() -> CheckResult {
    for lambda in [0.1, 0.5, 1.0, 2.0] {
        let spec = CombinationSpec::real(&[-2.0 * lambda, 1.0]).with_pole_orders(vec![2, 3]);
        for x in [5.0, 10.0, 50.0] {
            let a = walji_shifted_bound(lambda, x).unwrap();
            let b = gln_objective(&spec, x, 2.0 / (x * x)).unwrap();
            ensure(rel_close(a, b, 1e-12), || {
                format!("lambda {lambda}, X {x}: {a} vs {b}")
            })?;
        }
    }
    Ok(())
}

pub fn single_rep_display() -> CheckResult {
    prop(256, (1u32..40, 1.05f64..500.0), |(m, x)| {
        let spec = CombinationSpec::real(&[1.0]).with_pole_orders(vec![m]);
        let sm = f64::from(m).sqrt();
        let display = 1.0 / (2.0 * x * x)
            - sm / (2.0 * x.powf(2.5))
            - sm / (2.0 * x.powi(3))
            - 1.0 / (2.0 * x.powi(4));
        let got = gln_objective(&spec, x, 1.0 / (x * x)).unwrap();
        prop_assert!(
            (got - display).abs() <= 1e-12 * (1.0 / (x * x)),
            "{got} vs {display}"
        );
        Ok(())
    })
}

pub fn interval_remark_identity() -> CheckResult {
    for b in [1.4f64, 2.0, 3.0] {
        let got = interval_bound(1.0, -1.0, -b, b).unwrap();
        let remark =
            (b.powi(4) + 4.0 * b.powi(3) + 5.0 * b * b - 8.0 * b - 11.0) / (b + 4.0).powi(4);
        ensure(
            (got - remark).abs() <= 1e-12 * remark.abs().max(1e-3),
            || format!("b = {b}: {got} vs {remark}"),
        )?;
    }
    Ok(())
}

pub fn rc_real_one_eighth() -> CheckResult {
    let v = rc_real_bound(&CombinationSpec::real(&[1.0])).unwrap();
    ensure(v == 0.125, || format!("{v} != 1/8"))
}

pub fn bounds_checks() -> Vec<Check> {
    vec![
        Check {
            name: "c(x) root and monotonicity",
            run: cutoff_root_property,
        },
        Check {
            name: "T permutation and phase symmetry",
            run: t_symmetry,
        },
        Check {
            name: "gl2 decreasing in allocation",
            run: gl2_monotone_in_allocation,
        },
        Check {
            name: "gl2 decreasing in ladder gaps",
            run: gl2_monotone_in_gaps,
        },
        Check {
            name: "congruence specialization",
            run: congruence_specialization,
        },
        Check {
            name: "shifted GL(2) specialization",
            run: walji_specialization,
        },
        Check {
            name: "single-rep GL(n) display",
            run: single_rep_display,
        },
        Check {
            name: "interval quartic identity",
            run: interval_remark_identity,
        },
        Check {
            name: "rc_real_bound = 1/8",
            run: rc_real_one_eighth,
        },
    ]
}

// ------------------------------------------------------------- optimizer

fn small_spec() -> impl Strategy<Value = CombinationSpec> {
    (
        proptest::collection::vec(-2.0f64..2.0, 1..=2),
        any::<bool>(),
    )
        .prop_filter_map("nonzero", |(ls, twist)| {
            ls.iter()
                .any(|l| l.abs() > 0.05)
                .then(|| CombinationSpec::real(&ls).with_twist_inequivalent(twist))
        })
}

fn small_ladder() -> impl Strategy<Value = ThresholdLadder> {
    (1.1f64..40.0, proptest::collection::vec(0.05f64..2.0, 0..=2))
        .prop_map(|(x0, gaps)| ladder_from(x0, &gaps))
}

/// Exhaustive search on the face `sum = r` (the objective decreases in every
/// coordinate, so the minimum lies there) with step `1e-3 * r`, refined with
/// step `1e-5 * r` in a window of one coarse step around the best point.
pub fn grid_oracle(spec: &CombinationSpec, ladder: &ThresholdLadder) -> f64 {
    let k = DerivedConstants::new(spec).unwrap();
    let cut = ladder.cutoffs();
    let env: Vec<f64> = cut.iter().map(|&x| k.envelope(x)).collect();
    let r = spec.budget();
    let m = ladder.cells();
    let eval = |free: &[f64]| -> f64 {
        let used: f64 = free.iter().sum();
        if used > r {
            return f64::INFINITY;
        }
        let alloc = Allocation {
            tail_y: (r - used).max(0.0),
            ladder_y: free.to_vec(),
        };
        gl2_quotient(k.a, k.t, &env, cut, &alloc)
    };
    let search = |center: &[f64], half: f64, step: f64| -> (Vec<f64>, f64) {
        let n = (2.0 * half / step).round() as i64;
        let axis = |c: f64| -> Vec<f64> {
            (0..=n)
                .map(|i| c - half + step * i as f64)
                .filter(|v| *v >= 0.0 && *v <= r)
                .collect()
        };
        let mut best = (center.to_vec(), eval(center));
        match m {
            0 => {}
            1 => {
                for a in axis(center[0]) {
                    let v = eval(&[a]);
                    if v < best.1 {
                        best = (vec![a], v);
                    }
                }
            }
            _ => {
                let ax1 = axis(center[1]);
                for a in axis(center[0]) {
                    for &b in &ax1 {
                        let v = eval(&[a, b]);
                        if v < best.1 {
                            best = (vec![a, b], v);
                        }
                    }
                }
            }
        }
        best
    };
    let coarse = 1e-3 * r;
    let start = vec![r / 2.0; m];
    let (p, _) = search(&start, r / 2.0, coarse);
    search(&p, coarse, 1e-5 * r).1
}

pub fn oracle_equivalence() -> CheckResult {
    prop(20, (small_spec(), small_ladder()), |(spec, ladder)| {
        let sol = minimize_allocation(&spec, &ladder).unwrap();
        let grid = grid_oracle(&spec, &ladder);
        prop_assert!(
            (sol.value - grid).abs() <= 1e-4,
            "solver {} vs grid {grid} (r = {}, m = {})",
            sol.value,
            spec.len(),
            ladder.cells()
        );
        prop_assert!(
            sol.value <= grid + 1e-12,
            "grid beat the solver: {grid} < {}",
            sol.value
        );
        Ok(())
    })
}

pub fn validity() -> CheckResult {
    let strat = (
        proptest::collection::vec(-2.0f64..2.0, 1..5),
        any::<bool>(),
        1.1f64..60.0,
        proptest::collection::vec(0.02f64..2.0, 0..9),
    );
    prop(128, strat, |(ls, twist, x0, gaps)| {
        prop_assume!(ls.iter().any(|l| l.abs() > 1e-2));
        let spec = CombinationSpec::real(&ls).with_twist_inequivalent(twist);
        let ladder = ladder_from(x0, &gaps);
        let r = evaluate_ladder(&spec, &ladder).unwrap();
        prop_assert!(r.allocation.validate(&ladder, spec.budget()).is_ok());
        let direct = gl2_objective(&spec, &ladder, &r.allocation).unwrap();
        prop_assert!((direct - r.value).abs() <= 1e-10, "{direct} vs {}", r.value);
        prop_assert!(r.converged, "residual {}", r.inner_residual);
        Ok(())
    })?;
    let config = SearchConfig {
        ladder_length: 3,
        starts: 2,
        ..SearchConfig::default()
    };
    for spec in [
        CombinationSpec::real(&[1.0]),
        CombinationSpec::real(&[0.7, -1.3]),
    ] {
        let r = maximize_ladder(&spec, &config).map_err(|e| e.to_string())?;
        let direct = gl2_objective(&spec, &r.ladder, &r.allocation).map_err(|e| e.to_string())?;
        ensure((direct - r.value).abs() <= 1e-10, || {
            format!("search: {direct} vs {}", r.value)
        })?;
    }
    for m in [1u32, 3, 7] {
        let spec = CombinationSpec::real(&[1.0]).with_pole_orders(vec![m]);
        let r = gln_bound(&spec, &SearchConfig::default()).map_err(|e| e.to_string())?;
        let direct = gln_objective(&spec, r.ladder.base(), r.allocation.tail_y)
            .map_err(|e| e.to_string())?;
        ensure((direct - r.value).abs() <= 1e-10, || {
            format!("gln M = {m}: {direct} vs {}", r.value)
        })?;
    }
    Ok(())
}

pub fn monotone_budget() -> CheckResult {
    let strat = (
        small_spec(),
        small_ladder(),
        proptest::collection::vec(0.0f64..3.0, 2..6),
    );
    prop(128, strat, |(spec, ladder, mut budgets)| {
        budgets.sort_by(f64::total_cmp);
        let mut prev = f64::INFINITY;
        for b in budgets {
            let sol = minimize_allocation_with_budget(&spec, &ladder, b).unwrap();
            prop_assert!(
                sol.value <= prev + 1e-15,
                "budget {b}: {} > {prev}",
                sol.value
            );
            let direct = gl2_objective_with_budget(&spec, &ladder, &sol.allocation, b).unwrap();
            prop_assert!((direct - sol.value).abs() <= 1e-10);
            prev = sol.value;
        }
        Ok(())
    })
}

pub fn determinism() -> CheckResult {
    let spec = CombinationSpec::real(&[1.0, -1.0]);
    for seed in [0u64, 17] {
        let config = SearchConfig {
            ladder_length: 4,
            seed,
            starts: 4,
            ..SearchConfig::default()
        };
        let a = maximize_ladder(&spec, &config).map_err(|e| e.to_string())?;
        let b = maximize_ladder(&spec, &config).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("seed {seed}: {a:?} != {b:?}"))?;
    }
    let g = CombinationSpec::real(&[1.0]).with_pole_orders(vec![3]);
    let a = gln_bound(&g, &SearchConfig::default()).map_err(|e| e.to_string())?;
    let b = gln_bound(&g, &SearchConfig::default()).map_err(|e| e.to_string())?;
    ensure(a == b, || "gln_bound differs between runs".into())
}

/// `(spec, m, published constant)` for the three searched `GL(2)` bounds.
pub fn published_gl2() -> [(CombinationSpec, usize, f64); 3] {
    [
        (CombinationSpec::real(&[1.0]), 7, 0.1118),
        (CombinationSpec::real(&[1.0, -1.0]), 8, 0.0414),
        (
            CombinationSpec::uniform(4).with_twist_inequivalent(false),
            8,
            0.0156,
        ),
    ]
}

pub fn published_dominance() -> CheckResult {
    for (spec, m, constant) in published_gl2() {
        let config = SearchConfig::default().with_ladder_length(m);
        let r = maximize_ladder(&spec, &config).map_err(|e| e.to_string())?;
        ensure(r.value >= constant - 5e-4, || {
            format!("m = {m}: search found {} < {constant} - 5e-4", r.value)
        })?;
    }
    Ok(())
}

pub fn optimizer_checks() -> Vec<Check> {
    vec![
        Check {
            name: "validity",
            run: validity,
        },
        Check {
            name: "oracle equivalence",
            run: oracle_equivalence,
        },
        Check {
            name: "monotone budget",
            run: monotone_budget,
        },
        Check {
            name: "determinism",
            run: determinism,
        },
        Check {
            name: "dominance over published constants",
            run: published_dominance,
        },
    ]
}

// ------------------------------------------------------------- empirical

pub struct Tables {
    pub delta: CoefficientTable,
    pub second: CoefficientTable,
}

pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables {
        delta: delta_coefficients(EMPIRICAL_LIMIT).unwrap(),
        second: second_form_coefficients(EMPIRICAL_LIMIT).unwrap(),
    })
}

/// One row of the empirical dominance table.
pub struct DensityRow {
    pub name: &'static str,
    pub estimate: DensityEstimate,
    pub bound: f64,
}

pub fn density_rows() -> Vec<DensityRow> {
    let t = tables();
    let n = EMPIRICAL_LIMIT;
    let neg = Predicate::Below { t: 0.0 };
    let all = PrimeFilter::All;
    vec![
        DensityRow {
            name: "a_p < 0",
            estimate: sign_density(&[&t.delta], &[1.0], neg, all, n).unwrap(),
            bound: 0.1118,
        },
        DensityRow {
            name: "a_p < 0, p = 1 mod 8",
            estimate: sign_density(
                &[&t.delta],
                &[1.0],
                neg,
                PrimeFilter::Congruence {
                    modulus: 8,
                    class: 1,
                },
                n,
            )
            .unwrap(),
            bound: 0.0625,
        },
        DensityRow {
            name: "|a_p| > 1",
            estimate: sign_density(&[&t.delta], &[1.0], Predicate::AbsAbove { c: 1.0 }, all, n)
                .unwrap(),
            bound: 0.001355,
        },
        DensityRow {
            name: "a_p(delta) < a_p(g)",
            estimate: sign_density(&[&t.delta, &t.second], &[1.0, -1.0], neg, all, n).unwrap(),
            bound: 0.0414,
        },
    ]
}

pub fn exactness() -> CheckResult {
    let t = tables();
    let small = delta_coefficients(5_000).map_err(|e| e.to_string())?;
    ensure(
        small.coefficients() == &t.delta.coefficients()[..5_000],
        || "delta differs on the overlap of N = 5000 and N = 100000".into(),
    )?;
    let small = second_form_coefficients(5_000).map_err(|e| e.to_string())?;
    ensure(
        small.coefficients() == &t.second.coefficients()[..5_000],
        || "weight-16 form differs on the overlap".into(),
    )?;
    let exact = delta_coefficients_in(20_000, Arithmetic::Arbitrary).map_err(|e| e.to_string())?;
    ensure(
        exact.coefficients() == &t.delta.coefficients()[..20_000],
        || "fixed-width and arbitrary-precision delta differ".into(),
    )
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn multiplicativity() -> CheckResult {
    let n = EMPIRICAL_LIMIT;
    let strat = (2usize..=n / 2)
        .prop_flat_map(move |m| (Just(m), 2usize..=(n / m).max(2)))
        .prop_filter("coprime, in range", move |&(a, b)| {
            a * b <= n && gcd(a, b) == 1
        });
    let t = tables();
    prop(200, strat, |(a, b)| {
        for table in [&t.delta, &t.second] {
            prop_assert_eq!(
                table.is_multiplicative_at(a, b),
                Some(true),
                "{} at ({}, {})",
                table.label,
                a,
                b
            );
        }
        Ok(())
    })
}

pub fn ramanujan_bound() -> CheckResult {
    let t = tables();
    for table in [&t.delta, &t.second] {
        ensure(table.deligne_violation().is_none(), || {
            format!("{} violates Deligne", table.label)
        })?;
        let sieve = primal::Sieve::new(table.limit());
        for p in sieve.primes_from(2).take_while(|&p| p <= table.limit()) {
            let a = table.normalized_ap(p).map_err(|e| e.to_string())?;
            ensure(a.abs() <= 2.0, || {
                format!("{}: |a_{p}| = {}", table.label, a.abs())
            })?;
        }
    }
    Ok(())
}

pub fn empirical_dominance() -> CheckResult {
    for row in density_rows() {
        ensure(row.estimate.proportion >= row.bound, || {
            format!("{}: {} < {}", row.name, row.estimate.proportion, row.bound)
        })?;
    }
    Ok(())
}

pub fn dirichlet_consistency() -> CheckResult {
    let mut failures = Vec::new();
    for row in density_rows() {
        for w in &row.estimate.dirichlet_weighted {
            let gap = (w.ratio - row.estimate.proportion).abs();
            if gap >= 0.05 {
                failures.push(format!(
                    "{} at s = {}: ratio {:.4} vs proportion {:.4}",
                    row.name, w.s, w.ratio, row.estimate.proportion
                ));
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))
}

pub fn empirical_checks() -> Vec<Check> {
    vec![
        Check {
            name: "exact coefficients agree across N and widths",
            run: exactness,
        },
        Check {
            name: "Hecke multiplicativity",
            run: multiplicativity,
        },
        Check {
            name: "Ramanujan bound",
            run: ramanujan_bound,
        },
        Check {
            name: "empirical density above each bound",
            run: empirical_dominance,
        },
        Check {
            name: "Dirichlet-weighted ratios near proportion",
            run: dirichlet_consistency,
        },
    ]
}
