//! `hecke bound ...`

use clap::{ArgAction, Args, Subcommand, ValueEnum};
use hecke_bounds::bounds::{
    congruence_bound_rc, gln_objective, interval_bound, product_bound, rc_real_bound,
    rc_real_part_bound, rc_sector_bound, split_bound_cubic, split_bound_quadratic,
    split_bound_quadratic_magnitude, split_gln_bound,
};
use hecke_bounds::optimizer::{positivity_threshold, ThresholdFamily};
use hecke_bounds::{
    evaluate_ladder, gln_bound, maximize_ladder, BoundResult, CombinationSpec, SearchConfig,
    ThresholdLadder,
};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::report::{sig, sig_list, Row, RunReport};
use crate::Context;

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// GL(2) bound for `sum lambda_i a_v < t` at a given ladder or the best
    /// ladder found by search.
    Gl2(Gl2Args),
    /// GL(n) bound for `sum lambda_i a_v < -t` without Ramanujan.
    Gln(GlnArgs),
    /// Bounds that assume Ramanujan for every summand.
    Rc(RcArgs),
    /// `a_v < t` on one ray class out of `h`.
    Congruence(CongruenceArgs),
    /// Events at places split completely in an abelian extension.
    Split(SplitArgs),
    /// Events on squares and products of coefficients.
    Product(ProductArgs),
    /// `a < lambda_1 a_v(pi_1) + lambda_2 a_v(pi_2) < b`.
    Interval(IntervalArgs),
    /// Sign change of a one-parameter bound family.
    Threshold(ThresholdArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Real coefficients lambda_i, comma separated. Defaults to `1`.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "uniform"
    )]
    pub lambdas: Vec<f64>,

    /// `h` coefficients equal to `1/h`.
    #[arg(long, value_name = "H")]
    pub uniform: Option<usize>,

    /// Ranks `n_i`; a single value applies to every summand.
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<u32>,

    /// Pole orders `M_i`; a single value applies to every summand.
    #[arg(long, value_delimiter = ',')]
    pub poles: Vec<u32>,

    /// Whether the representations are pairwise twist-inequivalent.
    #[arg(
        long,
        default_value_t = true,
        action = ArgAction::Set,
        num_args = 0..=1,
        default_missing_value = "true"
    )]
    pub twist_inequivalent: bool,

    /// Real part of the shift `t`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t: f64,

    /// Imaginary part of the shift `t`.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t_imag: f64,
}

fn broadcast(values: &[u32], r: usize, default: u32, name: &str) -> Result<Vec<u32>> {
    match values {
        [] => Ok(vec![default; r]),
        [v] => Ok(vec![*v; r]),
        v if v.len() == r => Ok(v.to_vec()),
        v => Err(CliError::usage(format!(
            "--{name} has {} values but there are {r} coefficients",
            v.len()
        ))),
    }
}

impl SpecArgs {
    pub fn build(&self) -> Result<CombinationSpec> {
        let base = match (self.uniform, self.lambdas.as_slice()) {
            (Some(h), _) => CombinationSpec::uniform(h),
            (None, []) => CombinationSpec::real(&[1.0]),
            (None, l) => CombinationSpec::real(l),
        };
        let r = base.len();
        Ok(base
            .with_dims(broadcast(&self.dims, r, 2, "dims")?)
            .with_pole_orders(broadcast(&self.poles, r, 1, "poles")?)
            .with_twist_inequivalent(self.twist_inequivalent)
            .with_complex_shift(Complex64::new(self.t, self.t_imag)))
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Number of ladder cells; the ladder has `m + 1` cutoffs.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random starts on top of the deterministic ones.
    #[arg(long)]
    pub starts: Option<usize>,
    #[arg(long)]
    pub x_min: Option<f64>,
    #[arg(long)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub outer_iterations: Option<usize>,
    #[arg(long)]
    pub inner_tolerance: Option<f64>,
}

impl SearchArgs {
    pub fn resolve(&self, config: &Config) -> Result<SearchConfig> {
        let d = SearchConfig::default();
        let c = SearchConfig {
            ladder_length: config.pick(self.m, "m")?.unwrap_or(d.ladder_length),
            x_min: config.pick(self.x_min, "x_min")?.unwrap_or(d.x_min),
            x_max: config.pick(self.x_max, "x_max")?.unwrap_or(d.x_max),
            outer_iterations: config
                .pick(self.outer_iterations, "outer_iterations")?
                .unwrap_or(d.outer_iterations),
            inner_tolerance: config
                .pick(self.inner_tolerance, "inner_tolerance")?
                .unwrap_or(d.inner_tolerance),
            seed: config.pick(self.seed, "seed")?.unwrap_or(d.seed),
            starts: config.pick(self.starts, "starts")?.unwrap_or(d.starts),
        };
        c.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Args)]
pub struct Gl2Args {
    #[command(flatten)]
    spec: SpecArgs,
    /// Cutoffs `X_0 < ... < X_m`, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "search",
        required_unless_present = "search"
    )]
    ladder: Vec<f64>,
    /// Search for the best ladder instead of evaluating a given one.
    #[arg(long)]
    search: bool,
    #[command(flatten)]
    search_args: SearchArgs,
}

#[derive(Debug, Args)]
pub struct GlnArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Evaluate the objective at this cutoff instead of optimizing.
    #[arg(long, requires = "y")]
    x: Option<f64>,
    /// Adversarial mass for `--x`.
    #[arg(long, requires = "x")]
    y: Option<f64>,
    #[command(flatten)]
    search_args: SearchArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RcPart {
    /// `sum lambda_i a_v < t`.
    Real,
    /// `Re sum lambda_i a_v < t`.
    RealPart,
    /// `arg(sum lambda_i a_v - t)` outside `(-epsilon, epsilon)`.
    Sector,
}

#[derive(Debug, Args)]
pub struct RcArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value = "real")]
    part: RcPart,
    /// Half-width of the excluded sector.
    #[arg(long, required_if_eq("part", "sector"))]
    epsilon: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CongruenceArgs {
    /// Rank of the representation.
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Number of ray classes.
    #[arg(long)]
    h: u32,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SplitKind {
    /// Abelian of order `n` over a quadratic field, `pi` on `GL(d)`.
    Quadratic,
    /// Abelian of order `n` over a cubic field.
    Cubic,
    /// `|a_v| > 1` through the symmetric square.
    Magnitude,
    /// `a_v < 0` without Ramanujan at cutoff `--x`.
    Gln,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, value_enum, default_value = "quadratic")]
    kind: SplitKind,
    /// Order of the Galois group over the base field.
    #[arg(long)]
    n: u32,
    /// Rank of the representation (quadratic only).
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
    /// Cutoff for `--kind gln`.
    #[arg(long, required_if_eq("kind", "gln"))]
    x: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Coefficients of the squares `a_v(pi_i)^2`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambdas: Vec<f64>,
    /// Coefficients `nu_1, nu_2` of the two products.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    nus: Vec<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
}

#[derive(Debug, Args)]
pub struct IntervalArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda1: f64,
    #[arg(long, allow_hyphen_values = true)]
    lambda2: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyKind {
    /// `interval(1, -1, -b, b)` in `b`.
    Interval,
    /// One GL(n) summand with pole order `--pole-order`, in `X`.
    SingleRep,
    /// The shifted GL(2) family with `--lambda`, in `X`.
    Shifted,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long, default_value_t = 1)]
    pole_order: u32,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    lambda: f64,
    #[arg(long)]
    lo: f64,
    #[arg(long)]
    hi: f64,
}

pub fn run(cmd: BoundCommand, ctx: &Context) -> Result<RunReport> {
    let argv = ctx.argv.clone();
    match cmd {
        BoundCommand::Gl2(a) => gl2(a, ctx),
        BoundCommand::Gln(a) => gln(a, ctx),
        BoundCommand::Rc(a) => {
            let spec = a.spec.build()?;
            let value = match a.part {
                RcPart::Real => rc_real_bound(&spec)?,
                RcPart::RealPart => rc_real_part_bound(&spec)?,
                RcPart::Sector => rc_sector_bound(&spec, a.epsilon.unwrap_or_default())?,
            };
            let input =
                json!({ "spec": spec, "part": format!("{:?}", a.part), "epsilon": a.epsilon });
            Ok(RunReport::new(
                argv,
                input,
                vec![Row::new("rc bound", value, Value::Null)],
            ))
        }
        BoundCommand::Congruence(a) => {
            let value = congruence_bound_rc(a.n, a.h, a.t)?;
            let input = json!({ "n": a.n, "h": a.h, "t": a.t });
            Ok(RunReport::new(
                argv,
                input,
                vec![Row::new("congruence bound", value, Value::Null)],
            ))
        }
        BoundCommand::Split(a) => {
            let value = match a.kind {
                SplitKind::Quadratic => split_bound_quadratic(a.n, a.d, a.t)?,
                SplitKind::Cubic => split_bound_cubic(a.n, a.t)?,
                SplitKind::Magnitude => split_bound_quadratic_magnitude(a.n)?,
                SplitKind::Gln => split_gln_bound(a.n, a.x.unwrap_or_default())?,
            };
            let input = json!({
                "kind": format!("{:?}", a.kind).to_lowercase(),
                "n": a.n,
                "d": a.d,
                "t": a.t,
                "x": a.x,
            });
            Ok(RunReport::new(
                argv,
                input,
                vec![Row::new("split bound", value, Value::Null)],
            ))
        }
        BoundCommand::Product(a) => {
            let nus: [f64; 2] = match a.nus.as_slice() {
                [n1] => [*n1, 0.0],
                [n1, n2] => [*n1, *n2],
                v => {
                    return Err(CliError::usage(format!(
                        "--nus takes one or two values, got {}",
                        v.len()
                    )))
                }
            };
            let value = product_bound(&a.lambdas, nus, a.t)?;
            let input = json!({ "lambdas": a.lambdas, "nus": nus, "t": a.t });
            Ok(RunReport::new(
                argv,
                input,
                vec![Row::new("product bound", value, Value::Null)],
            ))
        }
        BoundCommand::Interval(a) => {
            let value = interval_bound(a.lambda1, a.lambda2, a.a, a.b)?;
            let input = json!({ "lambda1": a.lambda1, "lambda2": a.lambda2, "a": a.a, "b": a.b });
            Ok(RunReport::new(
                argv,
                input,
                vec![Row::new("interval bound", value, Value::Null)],
            ))
        }
        BoundCommand::Threshold(a) => {
            let family = match a.family {
                FamilyKind::Interval => ThresholdFamily::IntervalRemark,
                FamilyKind::SingleRep => ThresholdFamily::SingleRepGln {
                    pole_order: a.pole_order,
                },
                FamilyKind::Shifted => ThresholdFamily::WaljiShifted { lambda: a.lambda },
            };
            let root = positivity_threshold(family, a.lo, a.hi)?;
            let input = json!({ "family": family, "lo": a.lo, "hi": a.hi });
            let row = Row::new("sign change", root, Value::Null).note(family.name());
            Ok(RunReport::new(argv, input, vec![row]))
        }
    }
}

pub fn bound_row(name: &str, r: &BoundResult) -> Result<Row> {
    Ok(Row::new(name, r.value, serde_json::to_value(r)?)
        .note(format!("ladder      {}", sig_list(r.ladder.cutoffs())))
        .note(format!("tail y      {}", sig(r.allocation.tail_y)))
        .note(format!("cell y      {}", sig_list(&r.allocation.ladder_y)))
        .note(format!(
            "converged   {} (residual {})",
            r.converged,
            sig(r.inner_residual)
        )))
}

fn gl2(a: Gl2Args, ctx: &Context) -> Result<RunReport> {
    let spec = a.spec.build()?;
    if a.search {
        let config = a.search_args.resolve(&ctx.config)?;
        let r = maximize_ladder(&spec, &config)?;
        let input = json!({ "spec": spec, "search": config });
        let report = RunReport::new(ctx.argv.clone(), input, vec![bound_row("gl2 bound", &r)?]);
        Ok(report.seeded(config.seed, hecke_bounds::empirical::RNG_ID))
    } else {
        let ladder = ThresholdLadder::new(a.ladder)?;
        let r = evaluate_ladder(&spec, &ladder)?;
        let input = json!({ "spec": spec, "ladder": ladder });
        Ok(RunReport::new(
            ctx.argv.clone(),
            input,
            vec![bound_row("gl2 bound", &r)?],
        ))
    }
}

fn gln(a: GlnArgs, ctx: &Context) -> Result<RunReport> {
    let spec = a.spec.build()?;
    if let (Some(x), Some(y)) = (a.x, a.y) {
        let value = gln_objective(&spec, x, y)?;
        let input = json!({ "spec": spec, "x": x, "y": y });
        return Ok(RunReport::new(
            ctx.argv.clone(),
            input,
            vec![Row::new("gln objective", value, Value::Null)],
        ));
    }
    let config = a.search_args.resolve(&ctx.config)?;
    let r = gln_bound(&spec, &config)?;
    let row = Row::new("gln bound", r.value, serde_json::to_value(&r)?)
        .note(format!("X           {}", sig(r.ladder.base())))
        .note(format!("y           {}", sig(r.allocation.tail_y)));
    let input = json!({ "spec": spec, "x_min": config.x_min, "x_max": config.x_max });
    Ok(RunReport::new(ctx.argv.clone(), input, vec![row]))
}
