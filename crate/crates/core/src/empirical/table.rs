//! Exact Fourier coefficient tables and their CSV format.
//!
//! ```text
//! # label=delta
//! # weight=12
//! # limit=5
//! 1,1
//! 2,-24
//! 3,252
//! 4,-1472
//! 5,4830
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::series::to_f64;
use crate::error::{Error, Result};

/// Coefficients `c_1, ..., c_N` of a normalized Hecke eigenform of weight
/// `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    pub label: String,
    pub weight: u32,
    coeffs: Vec<BigInt>,
}

impl CoefficientTable {
    /// Builds and validates a table; `coeffs[0]` is `c_1`.
    pub fn new(label: impl Into<String>, weight: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        let table = Self {
            label: label.into(),
            weight,
            coeffs,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn limit(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Checks `c_1 = 1`, a nonempty range, an even weight of at least 2, and
    /// the Deligne bound `c_p^2 <= 4 p^{k-1}` at every prime `p <= N`.
    pub fn validate(&self) -> Result<()> {
        if self.coeffs.is_empty() {
            return Err(Error::DataIntegrity(format!("{}: empty table", self.label)));
        }
        if self.weight < 2 || self.weight % 2 == 1 {
            return Err(Error::DataIntegrity(format!(
                "{}: weight {} is not an even integer >= 2",
                self.label, self.weight
            )));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::DataIntegrity(format!(
                "{}: c_1 = {}, expected 1",
                self.label, self.coeffs[0]
            )));
        }
        if let Some(p) = self.deligne_violation() {
            return Err(Error::DataIntegrity(format!(
                "{}: |c_{p}| = {} exceeds 2 {p}^{}",
                self.label,
                self.get(p).unwrap(),
                f64::from(self.weight - 1) / 2.0
            )));
        }
        Ok(())
    }

    /// The first prime at which `c_p^2 > 4 p^{k-1}`, compared exactly.
    pub fn deligne_violation(&self) -> Option<usize> {
        let sieve = primal::Sieve::new(self.limit());
        sieve
            .primes_from(2)
            .take_while(|&p| p <= self.limit())
            .find(|&p| {
                let c = self.get(p).unwrap();
                let bound = BigInt::from(4) * BigInt::from(p).pow(self.weight - 1);
                c * c > bound
            })
    }

    /// `c_{mn} = c_m c_n`, or `None` when `mn > N`.
    pub fn is_multiplicative_at(&self, m: usize, n: usize) -> Option<bool> {
        let mn = m.checked_mul(n)?;
        Some(self.get(mn)? == &(self.get(m)? * self.get(n)?))
    }

    /// `c_p / p^{(k-1)/2}`, in `[-2, 2]` for a validated table.
    pub fn normalized_ap(&self, p: usize) -> Result<f64> {
        if !primal::is_prime(p as u64) {
            return Err(Error::Domain {
                name: "p",
                value: p as f64,
                domain: "a prime",
            });
        }
        let c = self.get(p).ok_or(Error::Domain {
            name: "p",
            value: p as f64,
            domain: "p <= table limit",
        })?;
        Ok(self.normalizer(p) * to_f64(c))
    }

    pub(crate) fn normalizer(&self, p: usize) -> f64 {
        (p as f64).powf(-(f64::from(self.weight) - 1.0) / 2.0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "# label={}\n# weight={}\n# limit={}\n",
            self.label,
            self.weight,
            self.limit()
        );
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(out, "{},{c}", i + 1).unwrap();
        }
        out
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_csv())?;
        Ok(())
    }

    pub fn read_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path)?;
        Self::parse_csv(&text, &path.display().to_string())
    }

    /// Parses the CSV format; `origin` names the source in error messages.
    pub fn parse_csv(text: &str, origin: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse {
            path: origin.to_string(),
            line,
            message,
        };
        let (mut label, mut weight, mut limit) = (None, None, None);
        let mut coeffs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                let Some((key, value)) = header.trim().split_once('=') else {
                    continue;
                };
                let value = value.trim();
                match key.trim() {
                    "label" => label = Some(value.to_string()),
                    "weight" => {
                        weight = Some(
                            value
                                .parse::<u32>()
                                .map_err(|e| err(line_no, format!("bad weight {value:?}: {e}")))?,
                        )
                    }
                    "limit" => {
                        limit = Some(
                            value
                                .parse::<usize>()
                                .map_err(|e| err(line_no, format!("bad limit {value:?}: {e}")))?,
                        )
                    }
                    _ => {}
                }
                continue;
            }
            let (n, c) = line
                .split_once(',')
                .ok_or_else(|| err(line_no, format!("expected `n,c_n`, got {line:?}")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|e| err(line_no, format!("bad index {:?}: {e}", n.trim())))?;
            if n != coeffs.len() + 1 {
                return Err(err(
                    line_no,
                    format!("expected index {}, got {n}", coeffs.len() + 1),
                ));
            }
            let c: BigInt = c
                .trim()
                .parse()
                .map_err(|e| err(line_no, format!("bad coefficient {:?}: {e}", c.trim())))?;
            coeffs.push(c);
        }
        let end = text.lines().count().max(1);
        let label = label.ok_or_else(|| err(end, "missing `# label=` header".into()))?;
        let weight = weight.ok_or_else(|| err(end, "missing `# weight=` header".into()))?;
        let limit = limit.ok_or_else(|| err(end, "missing `# limit=` header".into()))?;
        if limit != coeffs.len() {
            return Err(err(
                end,
                format!("header says limit={limit} but {} rows follow", coeffs.len()),
            ));
        }
        Self::new(label, weight, coeffs)
    }
}
