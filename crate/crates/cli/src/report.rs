//! The run report shared by every subcommand, and its human rendering.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "hecke";

/// How a row's value is judged against its target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Comparison {
    AtLeast { target: f64, tolerance: f64 },
    Within { target: f64, tolerance: f64 },
    InRange { lo: f64, hi: f64 },
}

impl Comparison {
    pub fn holds(&self, value: f64) -> bool {
        match *self {
            Self::AtLeast { target, tolerance } => value >= target - tolerance,
            Self::Within { target, tolerance } => (value - target).abs() <= tolerance,
            Self::InRange { lo, hi } => (lo..=hi).contains(&value),
        }
    }

    fn describe(&self) -> String {
        match *self {
            Self::AtLeast {
                target,
                tolerance: 0.0,
            } => {
                format!(">= {}", sig(target))
            }
            Self::AtLeast { target, tolerance } => {
                format!(">= {} - {}", sig(target), sig(tolerance))
            }
            Self::Within { target, tolerance } => format!("{} +- {}", sig(target), sig(tolerance)),
            Self::InRange { lo, hi } => format!("in [{}, {}]", sig(lo), sig(hi)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub name: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub detail: Value,
    /// Extra lines for the human rendering only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Row {
    pub fn new(name: impl Into<String>, value: f64, detail: Value) -> Self {
        Self {
            name: name.into(),
            value,
            comparison: None,
            pass: None,
            detail,
            notes: Vec::new(),
        }
    }

    pub fn judged(mut self, comparison: Comparison) -> Self {
        self.pass = Some(comparison.holds(self.value));
        self.comparison = Some(comparison);
        self
    }

    /// A pass/fail verdict decided by the caller rather than by a comparison.
    pub fn verdict(mut self, pass: bool) -> Self {
        self.pass = Some(pass);
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng: Option<&'static str>,
    pub input: Value,
    pub results: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub wall_clock_seconds: f64,
}

impl RunReport {
    pub fn new(command: Vec<String>, input: Value, results: Vec<Row>) -> Self {
        let verdicts: Vec<bool> = results.iter().filter_map(|r| r.pass).collect();
        let pass = (!verdicts.is_empty()).then(|| verdicts.iter().all(|&p| p));
        Self {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            command,
            seed: None,
            rng: None,
            input,
            results,
            pass,
            wall_clock_seconds: 0.0,
        }
    }

    pub fn seeded(mut self, seed: u64, rng: &'static str) -> Self {
        self.seed = Some(seed);
        self.rng = Some(rng);
        self
    }

    pub fn render_human(&self, out: &mut impl Write) -> io::Result<()> {
        let width = self.results.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for row in &self.results {
            write!(out, "{:<width$}  {:>12}", row.name, sig(row.value))?;
            if let Some(c) = row.comparison {
                write!(out, "  {:<22}", c.describe())?;
            }
            match row.pass {
                Some(true) => write!(out, "  PASS")?,
                Some(false) => write!(out, "  FAIL")?,
                None => {}
            }
            writeln!(out)?;
            for note in &row.notes {
                writeln!(out, "{:width$}    {note}", "")?;
            }
        }
        if let Some(seed) = self.seed {
            writeln!(out, "seed {seed} ({})", self.rng.unwrap_or("-"))?;
        }
        if let Some(pass) = self.pass {
            writeln!(out, "overall: {}", if pass { "PASS" } else { "FAIL" })?;
        }
        writeln!(out, "wall clock {:.3} s", self.wall_clock_seconds)
    }
}

/// Six significant digits, scientific outside `[1e-4, 1e6)`.
pub fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exp) {
        format!("{:.*}", (5 - exp).max(0) as usize, x)
    } else {
        format!("{x:.5e}")
    }
}

pub fn sig_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| sig(x)).collect::<Vec<_>>().join(", ")
}
