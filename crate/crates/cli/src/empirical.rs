//! `hecke empirical ...`

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use hecke_bounds::empirical::{
    delta_coefficients_in, monte_carlo_bound_check, second_form_coefficients_in, sign_density,
    Arithmetic, CoefficientTable, MonteCarloCheck, MonteCarloEvent, Predicate, PrimeFilter, RNG_ID,
};
use hecke_bounds::CombinationSpec;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::report::{sig, Comparison, Row, RunReport};
use crate::Context;

pub const DEFAULT_COUNT: usize = 1_000_000;

#[derive(Debug, Subcommand)]
pub enum EmpiricalCommand {
    /// Compute exact coefficients of a level-one eigenform and write them as CSV.
    Generate(GenerateArgs),
    /// Proportion of primes at which a coefficient predicate holds.
    Density(DensityArgs),
    /// Sato-Tate Monte Carlo estimate compared with the closed-form bound.
    Montecarlo(MonteCarloArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Form {
    /// `Delta`, weight 12.
    Delta,
    /// `E_4 Delta`, weight 16.
    Weight16,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ArithmeticArg {
    Auto,
    Fixed128,
    Fixed256,
    Arbitrary,
}

impl From<ArithmeticArg> for Arithmetic {
    fn from(a: ArithmeticArg) -> Self {
        match a {
            ArithmeticArg::Auto => Self::Auto,
            ArithmeticArg::Fixed128 => Self::Fixed128,
            ArithmeticArg::Fixed256 => Self::Fixed256,
            ArithmeticArg::Arbitrary => Self::Arbitrary,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    form: Form,
    /// Largest `n`, at most 1000000.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(short, long, value_name = "PATH")]
    output: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    arithmetic: ArithmeticArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PredicateArg {
    /// `a_p(f) < t`.
    Neg,
    /// `|a_p(f)| > 1`.
    AbsGt1,
    /// `a_p(f) - a_p(g) < t`, with `g` the second table.
    Compare,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// Coefficient table written by `generate`; give it twice for `compare`.
    #[arg(long = "table", value_name = "PATH", required = true, num_args = 1)]
    tables: Vec<PathBuf>,
    /// Second table, the same as a second `--table`.
    #[arg(long, value_name = "PATH")]
    table2: Option<PathBuf>,
    #[arg(long, value_enum)]
    predicate: PredicateArg,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
    /// Only primes `p = class (mod modulus)`.
    #[arg(long = "mod", value_name = "MODULUS", requires = "class")]
    modulus: Option<u64>,
    #[arg(long, requires = "modulus")]
    class: Option<u64>,
    /// Only primes of the form `m^2 + 27 n^2`.
    #[arg(long, conflicts_with = "modulus")]
    cubic_split: bool,
    /// Largest prime considered; defaults to the table size.
    #[arg(long)]
    limit: Option<usize>,
    /// Lower bound to check the proportion against.
    #[arg(long)]
    bound: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MonteCarloArgs {
    /// Real coefficients lambda_i, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    lambdas: Vec<f64>,
    /// Threshold of the event `sum lambda_i a_i < t`, `t <= 0`.
    #[arg(
        long,
        default_value_t = 0.0,
        allow_hyphen_values = true,
        conflicts_with = "interval"
    )]
    t: f64,
    /// The event `a < x < b` instead; needs two coefficients.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_name = "A,B"
    )]
    interval: Option<Vec<f64>>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

pub fn run(cmd: EmpiricalCommand, ctx: &Context) -> Result<RunReport> {
    match cmd {
        EmpiricalCommand::Generate(a) => generate(a, ctx),
        EmpiricalCommand::Density(a) => density(a, ctx),
        EmpiricalCommand::Montecarlo(a) => montecarlo(a, ctx),
    }
}

pub fn table_row(table: &CoefficientTable) -> Result<Row> {
    table.validate()?;
    let detail = json!({
        "label": table.label,
        "weight": table.weight,
        "limit": table.limit(),
        "c2": table.get(2).map(|c| c.to_string()),
    });
    Ok(Row::new(
        format!("{} coefficients", table.label),
        table.limit() as f64,
        detail,
    )
    .note(format!("weight {}, Deligne bound holds", table.weight)))
}

fn generate(a: GenerateArgs, ctx: &Context) -> Result<RunReport> {
    let limit = ctx
        .config
        .pick(a.limit, "limit")?
        .ok_or_else(|| CliError::usage("--limit is required (or set limit in --config)"))?;
    let arithmetic = Arithmetic::from(a.arithmetic);
    let table = match a.form {
        Form::Delta => delta_coefficients_in(limit, arithmetic)?,
        Form::Weight16 => second_form_coefficients_in(limit, arithmetic)?,
    };
    table.write_csv(&a.output)?;
    let row = table_row(&table)?.note(format!("written to {}", a.output.display()));
    let input = json!({
        "form": table.label,
        "limit": limit,
        "arithmetic": arithmetic,
        "output": a.output,
    });
    Ok(RunReport::new(ctx.argv.clone(), input, vec![row]))
}

fn density(a: DensityArgs, ctx: &Context) -> Result<RunReport> {
    let mut paths = a.tables.clone();
    paths.extend(a.table2.clone());
    let tables = paths
        .iter()
        .map(CoefficientTable::read_csv)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let (weights, predicate): (Vec<f64>, Predicate) = match (a.predicate, tables.len()) {
        (PredicateArg::Neg, 1) => (vec![1.0], Predicate::Below { t: a.t }),
        (PredicateArg::AbsGt1, 1) => (vec![1.0], Predicate::AbsAbove { c: 1.0 }),
        (PredicateArg::Compare, 2) => (vec![1.0, -1.0], Predicate::Below { t: a.t }),
        (PredicateArg::Compare, n) => {
            return Err(CliError::usage(format!(
                "--predicate compare needs two tables, got {n}"
            )))
        }
        (_, n) => {
            return Err(CliError::usage(format!(
                "this predicate needs one table, got {n}"
            )))
        }
    };
    let filter = match (a.modulus, a.class, a.cubic_split) {
        (Some(modulus), Some(class), _) => PrimeFilter::Congruence { modulus, class },
        (_, _, true) => PrimeFilter::CubicSplit,
        _ => PrimeFilter::All,
    };
    let available = tables
        .iter()
        .map(CoefficientTable::limit)
        .min()
        .unwrap_or(0);
    let limit = ctx.config.pick(a.limit, "limit")?.unwrap_or(available);
    let refs: Vec<&CoefficientTable> = tables.iter().collect();
    let est = sign_density(&refs, &weights, predicate, filter, limit)?;

    let mut row = Row::new("proportion", est.proportion, serde_json::to_value(&est)?)
        .note(format!(
            "{} of {} primes up to {}",
            est.hits, est.total, est.limit
        ))
        .note(format!("{}, {}", est.predicate, est.filter));
    for w in &est.dirichlet_weighted {
        row = row.note(format!("p^-s weighted, s = {}: {}", w.s, sig(w.ratio)));
    }
    if let Some(bound) = a.bound {
        row = row.judged(Comparison::AtLeast {
            target: bound,
            tolerance: 0.0,
        });
    }
    let input = json!({
        "tables": paths,
        "weights": weights,
        "predicate": predicate,
        "filter": filter,
        "limit": limit,
        "bound": a.bound,
    });
    Ok(RunReport::new(ctx.argv.clone(), input, vec![row]))
}

pub fn montecarlo_row(name: &str, check: &MonteCarloCheck) -> Result<Row> {
    let mut row = Row::new(name, check.empirical, serde_json::to_value(check)?).note(format!(
        "bound {}, sigma {}, {} hits of {}",
        sig(check.bound),
        sig(check.sigma),
        check.hits,
        check.count
    ));
    row.comparison = Some(Comparison::AtLeast {
        target: check.bound,
        tolerance: 3.0 * check.sigma,
    });
    Ok(row.verdict(check.pass))
}

fn montecarlo(a: MonteCarloArgs, ctx: &Context) -> Result<RunReport> {
    let count = ctx.config.pick(a.count, "count")?.unwrap_or(DEFAULT_COUNT);
    let seed = ctx.config.pick(a.seed, "seed")?.unwrap_or(0);
    let event = match a.interval.as_deref() {
        None => MonteCarloEvent::Below { t: a.t },
        Some([lo, hi]) => MonteCarloEvent::Interval { a: *lo, b: *hi },
        Some(v) => {
            return Err(CliError::usage(format!(
                "--interval takes two values A,B, got {}",
                v.len()
            )))
        }
    };
    let spec = CombinationSpec::real(&a.lambdas);
    let check = monte_carlo_bound_check(&spec, event, count, seed)?;
    let input = json!({ "lambdas": a.lambdas, "event": event, "count": count });
    let row = montecarlo_row("empirical probability", &check)?;
    Ok(RunReport::new(ctx.argv.clone(), input, vec![row]).seeded(seed, RNG_ID))
}
