//! Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_bounds::bounds::{
    congruence_bound_rc, product_bound, rc_real_bound, split_bound_quadratic,
};
use hecke_bounds::optimizer::{
    evaluate_ladder, gln_bound, maximize_ladder, positivity_threshold, ThresholdFamily,
    PUBLISHED_LADDERS,
};
use hecke_bounds::{CombinationSpec, SearchConfig, ThresholdLadder};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn published(i: usize) -> ThresholdLadder {
    ThresholdLadder::new(PUBLISHED_LADDERS[i].to_vec()).unwrap()
}

fn criterion_1() -> Outcome {
    let spec = CombinationSpec::real(&[1.0]);
    let ((at, search), dt) = timed(|| {
        let at = evaluate_ladder(&spec, &published(0)).unwrap();
        let search =
            maximize_ladder(&spec, &SearchConfig::default().with_ladder_length(7)).unwrap();
        (at, search)
    });
    let pass = (at.value - 0.1118).abs() <= 5e-4
        && at.value <= 0.13
        && search.value >= 0.1118
        && dt < Duration::from_secs(10);
    outcome(
        pass,
        format!(
            "ladder value {:.6}, search (m = 7) {:.6}, {:.2} s",
            at.value,
            search.value,
            dt.as_secs_f64()
        ),
    )
}

fn ladder_criterion(spec: CombinationSpec, i: usize, constant: f64, limit: Option<u64>) -> Outcome {
    let (r, dt) = timed(|| evaluate_ladder(&spec, &published(i)).unwrap());
    let in_time = limit.map_or(true, |s| dt < Duration::from_secs(s));
    outcome(
        (r.value - constant).abs() <= 5e-4 && in_time,
        format!(
            "ladder value {:.6} vs {constant}, {:.3} s",
            r.value,
            dt.as_secs_f64()
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (m, constant, window) in [(3u32, 0.001355, (9.0, 10.0)), (7, 3.49e-4, (17.0, 19.0))] {
        let spec = CombinationSpec::real(&[1.0]).with_pole_orders(vec![m]);
        let (r, dt) = timed(|| gln_bound(&spec, &SearchConfig::default()).unwrap());
        let x = r.ladder.base();
        pass &= r.value >= constant - 1e-5
            && (window.0..=window.1).contains(&x)
            && dt < Duration::from_secs(5);
        parts.push(format!(
            "M = {m}: {:.6e} at X = {x:.3} ({:.3} s)",
            r.value,
            dt.as_secs_f64()
        ));
    }
    outcome(pass, parts.join(", "))
}

fn criterion_5() -> Outcome {
    let mut errs = Vec::new();
    let mut check = |name: String, got: f64, want: f64| {
        if (got - want).abs() > 1e-12 {
            errs.push(format!("{name}: {got} vs {want}"));
        }
    };
    check(
        "rc single".into(),
        rc_real_bound(&CombinationSpec::real(&[1.0])).unwrap(),
        0.125,
    );
    check(
        "rc difference".into(),
        rc_real_bound(&CombinationSpec::real(&[1.0, -1.0])).unwrap(),
        0.0625,
    );
    check(
        "product".into(),
        product_bound(&[], [1.0, 0.0], 0.0).unwrap(),
        1.0 / 32.0,
    );
    for n in 1..=10u32 {
        let nf = f64::from(n);
        check(
            format!("split n = {n}"),
            split_bound_quadratic(n, 3, 0.0).unwrap(),
            (nf + 1.0) / (72.0 * nf * nf),
        );
    }
    for h in 1..=12u32 {
        check(
            format!("congruence h = {h}"),
            congruence_bound_rc(2, h, 0.0).unwrap(),
            1.0 / (8.0 * f64::from(h)),
        );
    }
    let pass = errs.is_empty();
    let detail = if pass {
        "all closed forms within 1e-12".to_string()
    } else {
        errs.join("; ")
    };
    outcome(pass, detail)
}

fn criterion_6() -> Outcome {
    let b = positivity_threshold(ThresholdFamily::IntervalRemark, 1.0, 3.0).unwrap();
    outcome((b - 1.3371).abs() <= 1e-3, format!("root b = {b:.6}"))
}

fn criterion_7() -> Outcome {
    let (r, dt) = timed(common::oracle_equivalence);
    let pass = r.is_ok() && dt < Duration::from_secs(60);
    let detail = match r {
        Ok(()) => format!("20 specs agree within 1e-4, {:.2} s", dt.as_secs_f64()),
        Err(e) => e,
    };
    outcome(pass, detail)
}

fn criterion_8() -> Outcome {
    let (rows, dt) = timed(|| {
        common::tables();
        common::density_rows()
    });
    let mut pass = dt < Duration::from_secs(120);
    let mut parts = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let p = row.estimate.proportion;
        let window = match i {
            0 => (0.45, 0.55),
            2 => (0.34, 0.44),
            _ => (0.0, 1.0),
        };
        pass &= p >= row.bound && p >= window.0 && p <= window.1;
        parts.push(format!("{} {:.4} (bound {})", row.name, p, row.bound));
    }
    parts.push(format!("{:.1} s", dt.as_secs_f64()));
    outcome(pass, parts.join(", "))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for check in common::bounds_checks()
        .into_iter()
        .chain(common::optimizer_checks())
        .chain(common::empirical_checks())
    {
        count += 1;
        let r = (check.run)();
        println!(
            "    {:<4} {}",
            if r.is_ok() { "ok" } else { "FAIL" },
            check.name
        );
        if let Err(e) = r {
            println!("         {e}");
            failures.push(check.name);
        }
    }
    let pass = failures.is_empty();
    let detail = if pass {
        format!("{count} invariant suites pass")
    } else {
        format!(
            "{} of {count} failed: {}",
            failures.len(),
            failures.join(", ")
        )
    };
    outcome(pass, detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 GL(2) negativity constant 0.1118", criterion_1),
        ("2 pairwise comparison constant 0.0414", || {
            ladder_criterion(CombinationSpec::real(&[1.0, -1.0]), 1, 0.0414, Some(10))
        }),
        ("3 Maass congruence constant 0.0156", || {
            ladder_criterion(
                CombinationSpec::uniform(4).with_twist_inequivalent(false),
                2,
                0.0156,
                None,
            )
        }),
        ("4 GL(n) constants 0.001355 and 3.49e-4", criterion_4),
        ("5 Ramanujan-case closed forms", criterion_5),
        ("6 interval-bound root 1.3371", criterion_6),
        ("7 allocation solver vs grid oracle", criterion_7),
        ("8 empirical dominance at N = 100000", criterion_8),
        ("9 invariant suites", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let o = run();
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of 9 acceptance criteria pass", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
