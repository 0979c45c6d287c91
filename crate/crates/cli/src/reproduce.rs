//! `hecke reproduce`: every reference constant recomputed and judged.

use clap::{Args, ValueEnum};
use hecke_bounds::bounds::{
    congruence_bound_rc, product_bound, rc_real_bound, split_bound_quadratic,
    split_bound_quadratic_magnitude,
};
use hecke_bounds::empirical::{
    delta_coefficients, monte_carlo_bound_check, second_form_coefficients, sign_density,
    CoefficientTable, MonteCarloEvent, Predicate, PrimeFilter, RNG_ID,
};
use hecke_bounds::optimizer::{positivity_threshold, ThresholdFamily, PUBLISHED_LADDERS};
use hecke_bounds::{
    evaluate_ladder, gln_bound, maximize_ladder, CombinationSpec, SearchConfig, ThresholdLadder,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bound::bound_row;
use crate::empirical::{montecarlo_row, table_row, DEFAULT_COUNT};
use crate::error::Result;
use crate::report::{sig, Comparison, Row, RunReport};
use crate::Context;

const EMPIRICAL_LIMIT: usize = 100_000;
const LADDER_TOLERANCE: f64 = 5e-4;
const CLOSED_FORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    /// GL(2) constants at the reference ladders and from search.
    Gl2,
    /// GL(n) optima for pole orders 3 and 7.
    Gln,
    /// Closed forms under Ramanujan.
    Closed,
    /// The interval sign change.
    Interval,
    /// Prime densities for `Delta` and `E_4 Delta`.
    Empirical,
    /// Sato-Tate sampling against the closed forms.
    Montecarlo,
}

const ALL_GROUPS: [Group; 6] = [
    Group::Gl2,
    Group::Gln,
    Group::Closed,
    Group::Interval,
    Group::Empirical,
    Group::Montecarlo,
];

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Run only these groups (repeatable).
    #[arg(long, value_enum)]
    only: Vec<Group>,
    /// Largest `n` for the coefficient tables.
    #[arg(long)]
    limit: Option<usize>,
    /// Samples per Monte Carlo row.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

fn at_least(target: f64, tolerance: f64) -> Comparison {
    Comparison::AtLeast { target, tolerance }
}

fn within(target: f64, tolerance: f64) -> Comparison {
    Comparison::Within { target, tolerance }
}

fn gl2_rows(seed: u64) -> Result<Vec<Row>> {
    let cases = [
        ("a_v < 0", CombinationSpec::real(&[1.0]), 7, 0.1118, 0.0),
        (
            "a_v(pi_1) < a_v(pi_2)",
            CombinationSpec::real(&[1.0, -1.0]),
            8,
            0.0414,
            LADDER_TOLERANCE,
        ),
        (
            "sum of four < 0, twist-equivalent",
            CombinationSpec::uniform(4).with_twist_inequivalent(false),
            8,
            0.0156,
            LADDER_TOLERANCE,
        ),
    ];
    let mut rows = Vec::new();
    for (i, (name, spec, m, constant, search_tol)) in cases.into_iter().enumerate() {
        let ladder = ThresholdLadder::new(PUBLISHED_LADDERS[i].to_vec())?;
        let at = evaluate_ladder(&spec, &ladder)?;
        rows.push(
            bound_row(&format!("gl2 {name}, reference ladder"), &at)?
                .judged(within(constant, LADDER_TOLERANCE)),
        );
        let config = SearchConfig {
            seed,
            ..SearchConfig::default().with_ladder_length(m)
        };
        let best = maximize_ladder(&spec, &config)?;
        rows.push(
            bound_row(&format!("gl2 {name}, search m = {m}"), &best)?
                .judged(at_least(constant, search_tol)),
        );
    }
    Ok(rows)
}

fn gln_rows() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (m, constant, lo, hi) in [(3u32, 0.001355, 9.0, 10.0), (7, 3.49e-4, 17.0, 19.0)] {
        let spec = CombinationSpec::real(&[1.0]).with_pole_orders(vec![m]);
        let r = gln_bound(&spec, &SearchConfig::default())?;
        let detail = serde_json::to_value(&r)?;
        rows.push(
            Row::new(format!("gln M = {m}, value"), r.value, detail.clone())
                .judged(at_least(constant, 1e-5)),
        );
        rows.push(
            Row::new(format!("gln M = {m}, optimal X"), r.ladder.base(), detail)
                .judged(Comparison::InRange { lo, hi }),
        );
    }
    Ok(rows)
}

fn closed_rows() -> Result<Vec<Row>> {
    let exact = |name: &str, value: f64, want: f64| {
        Row::new(name, value, Value::Null).judged(within(want, CLOSED_FORM_TOLERANCE))
    };
    Ok(vec![
        exact(
            "rc a_v < 0",
            rc_real_bound(&CombinationSpec::real(&[1.0]))?,
            1.0 / 8.0,
        ),
        exact(
            "rc a_v(pi_1) < a_v(pi_2)",
            rc_real_bound(&CombinationSpec::real(&[1.0, -1.0]))?,
            1.0 / 16.0,
        ),
        exact(
            "congruence h = 4",
            congruence_bound_rc(2, 4, 0.0)?,
            1.0 / 32.0,
        ),
        exact(
            "congruence h = 12",
            congruence_bound_rc(2, 12, 0.0)?,
            1.0 / 96.0,
        ),
        exact(
            "product a_v(s) a_v(t) < 0",
            product_bound(&[], [1.0, 0.0], 0.0)?,
            1.0 / 32.0,
        ),
        exact(
            "split n = 3, GL(2)",
            split_bound_quadratic(3, 2, 0.0)?,
            1.0 / 72.0,
        ),
        exact(
            "split n = 2, GL(3)",
            split_bound_quadratic(2, 3, 0.0)?,
            3.0 / 288.0,
        ),
        exact(
            "split |a_v| > 1, n = 1",
            split_bound_quadratic_magnitude(1)?,
            1.0 / 36.0,
        ),
    ])
}

fn interval_rows() -> Result<Vec<Row>> {
    let family = ThresholdFamily::IntervalRemark;
    let b = positivity_threshold(family, 1.0, 3.0)?;
    Ok(vec![Row::new(
        "interval sign change b",
        b,
        json!({ "family": family }),
    )
    .judged(within(1.3371, 1e-3))])
}

struct DensityCase<'a> {
    name: &'static str,
    tables: Vec<&'a CoefficientTable>,
    weights: Vec<f64>,
    predicate: Predicate,
    filter: PrimeFilter,
    bound: f64,
    window: Option<(f64, f64)>,
}

fn empirical_rows(limit: usize) -> Result<Vec<Row>> {
    let (delta, second) = rayon::join(
        || delta_coefficients(limit),
        || second_form_coefficients(limit),
    );
    let (delta, second) = (delta?, second?);
    let mut rows = vec![table_row(&delta)?, table_row(&second)?];

    let neg = Predicate::Below { t: 0.0 };
    let all = PrimeFilter::All;
    let case = |name, tables, weights, predicate, filter, bound, window| DensityCase {
        name,
        tables,
        weights,
        predicate,
        filter,
        bound,
        window,
    };
    let cases = [
        case(
            "density a_p < 0",
            vec![&delta],
            vec![1.0],
            neg,
            all,
            0.1118,
            Some((0.45, 0.55)),
        ),
        case(
            "density a_p < 0, p = 1 mod 8",
            vec![&delta],
            vec![1.0],
            neg,
            PrimeFilter::Congruence {
                modulus: 8,
                class: 1,
            },
            0.0625,
            None,
        ),
        case(
            "density |a_p| > 1",
            vec![&delta],
            vec![1.0],
            Predicate::AbsAbove { c: 1.0 },
            all,
            0.001355,
            Some((0.34, 0.44)),
        ),
        case(
            "density a_p(Delta) < a_p(E_4 Delta)",
            vec![&delta, &second],
            vec![1.0, -1.0],
            neg,
            all,
            0.0414,
            None,
        ),
    ];
    for DensityCase {
        name,
        tables,
        weights,
        predicate,
        filter,
        bound,
        window,
    } in cases
    {
        let est = sign_density(&tables, &weights, predicate, filter, limit)?;
        let detail = serde_json::to_value(&est)?;
        let mut row = Row::new(name, est.proportion, detail.clone())
            .judged(at_least(bound, 0.0))
            .note(format!("{} of {} primes", est.hits, est.total));
        for w in &est.dirichlet_weighted {
            row = row.note(format!("p^-s weighted, s = {}: {}", w.s, sig(w.ratio)));
        }
        rows.push(row);
        if let Some((lo, hi)) = window {
            rows.push(
                Row::new(format!("{name}, expected range"), est.proportion, detail)
                    .judged(Comparison::InRange { lo, hi }),
            );
        }
    }
    Ok(rows)
}

fn montecarlo_rows(count: usize, seed: u64) -> Result<Vec<Row>> {
    let cases = [
        (
            "sato-tate a < 0",
            vec![1.0],
            MonteCarloEvent::Below { t: 0.0 },
        ),
        (
            "sato-tate a < -1/4",
            vec![1.0],
            MonteCarloEvent::Below { t: -0.25 },
        ),
        (
            "sato-tate a_1 < a_2",
            vec![1.0, -1.0],
            MonteCarloEvent::Below { t: 0.0 },
        ),
        (
            "sato-tate -2 < a_1 - a_2 < 2",
            vec![1.0, -1.0],
            MonteCarloEvent::Interval { a: -2.0, b: 2.0 },
        ),
    ];
    cases
        .into_iter()
        .map(|(name, lambdas, event)| {
            let check =
                monte_carlo_bound_check(&CombinationSpec::real(&lambdas), event, count, seed)?;
            montecarlo_row(name, &check)
        })
        .collect()
}

pub fn run(args: ReproduceArgs, ctx: &Context) -> Result<RunReport> {
    let mut groups = if args.only.is_empty() {
        ALL_GROUPS.to_vec()
    } else {
        args.only.clone()
    };
    groups.sort();
    groups.dedup();
    let limit = ctx
        .config
        .pick(args.limit, "limit")?
        .unwrap_or(EMPIRICAL_LIMIT);
    let count = ctx
        .config
        .pick(args.count, "count")?
        .unwrap_or(DEFAULT_COUNT);
    let seed = ctx.config.pick(args.seed, "seed")?.unwrap_or(0);

    let mut rows = Vec::new();
    for group in &groups {
        rows.extend(match group {
            Group::Gl2 => gl2_rows(seed)?,
            Group::Gln => gln_rows()?,
            Group::Closed => closed_rows()?,
            Group::Interval => interval_rows()?,
            Group::Empirical => empirical_rows(limit)?,
            Group::Montecarlo => montecarlo_rows(count, seed)?,
        });
    }
    let input = json!({ "groups": groups, "limit": limit, "count": count });
    Ok(RunReport::new(ctx.argv.clone(), input, rows).seeded(seed, RNG_ID))
}
