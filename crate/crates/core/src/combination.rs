//! Inputs shared by every bound: the linear combination of Hecke
//! coefficients, the threshold ladder, and the adversarial allocation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A linear combination `sum_i lambda_i a_v(pi_i)` together with the data
/// each bound needs about the representations `pi_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CombinationSpec {
    pub lambdas: Vec<Complex64>,
    /// Rank `n_i` of `GL(n_i)` for each representation.
    pub dims: Vec<u32>,
    /// Order `M_i` of the pole at `s = 1` of `L(pi_i^{x2} x pi_i^{v x2}, s)`.
    pub pole_orders: Vec<u32>,
    pub twist_inequivalent: bool,
    pub shift_t: Complex64,
}

impl CombinationSpec {
    /// A combination of `GL(2)` representations with the given coefficients,
    /// simple poles, no shift, and pairwise twist inequivalence.
    pub fn new(lambdas: Vec<Complex64>) -> Self {
        let r = lambdas.len();
        Self {
            lambdas,
            dims: vec![2; r],
            pole_orders: vec![1; r],
            twist_inequivalent: true,
            shift_t: Complex64::new(0.0, 0.0),
        }
    }

    pub fn real(lambdas: &[f64]) -> Self {
        Self::new(lambdas.iter().map(|&l| Complex64::new(l, 0.0)).collect())
    }

    /// `h` copies of `1/h`, the shape used by congruence-class arguments.
    pub fn uniform(h: usize) -> Self {
        Self::real(&vec![1.0 / h as f64; h])
    }

    pub fn with_dims(mut self, dims: Vec<u32>) -> Self {
        self.dims = dims;
        self
    }

    pub fn with_pole_orders(mut self, pole_orders: Vec<u32>) -> Self {
        self.pole_orders = pole_orders;
        self
    }

    pub fn with_twist_inequivalent(mut self, twist_inequivalent: bool) -> Self {
        self.twist_inequivalent = twist_inequivalent;
        self
    }

    pub fn with_shift(mut self, t: f64) -> Self {
        self.shift_t = Complex64::new(t, 0.0);
        self
    }

    pub fn with_complex_shift(mut self, t: Complex64) -> Self {
        self.shift_t = t;
        self
    }

    /// Number of representations, which is also the allocation budget.
    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn budget(&self) -> f64 {
        self.len() as f64
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.lambdas.len();
        if r == 0 {
            return Err(Error::InvalidSpec(
                "at least one coefficient is required".into(),
            ));
        }
        if self.lambdas.iter().all(|l| l.norm() == 0.0) {
            return Err(Error::InvalidSpec("all coefficients are zero".into()));
        }
        if let Some(l) = self
            .lambdas
            .iter()
            .find(|l| !l.re.is_finite() || !l.im.is_finite())
        {
            return Err(Error::InvalidSpec(format!("non-finite coefficient {l}")));
        }
        if self.dims.len() != r || self.pole_orders.len() != r {
            return Err(Error::InvalidSpec(format!(
                "{r} coefficients but {} dims and {} pole orders",
                self.dims.len(),
                self.pole_orders.len()
            )));
        }
        if self.dims.contains(&0) {
            return Err(Error::InvalidSpec(
                "every dimension n_i must be at least 1".into(),
            ));
        }
        if self.pole_orders.contains(&0) {
            return Err(Error::InvalidSpec(
                "every pole order M_i must be at least 1".into(),
            ));
        }
        if !self.shift_t.re.is_finite() || !self.shift_t.im.is_finite() {
            return Err(Error::InvalidSpec("shift t must be finite".into()));
        }
        Ok(())
    }

    /// The shift as a real number; rejects a nonzero imaginary part.
    pub(crate) fn real_shift(&self) -> Result<f64> {
        if self.shift_t.im != 0.0 {
            return Err(Error::InvalidSpec(format!(
                "this bound needs a real shift, got t = {}",
                self.shift_t
            )));
        }
        Ok(self.shift_t.re)
    }

    pub(crate) fn abs_lambdas(&self) -> impl Iterator<Item = f64> + '_ {
        self.lambdas.iter().map(|l| l.norm())
    }
}

/// Increasing cutoffs `1 < X_0 < X_1 < ... < X_m`.
#[derive(Debug, Clone, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ThresholdLadder(Vec<f64>);

impl ThresholdLadder {
    pub fn new(cutoffs: Vec<f64>) -> Result<Self> {
        if cutoffs.is_empty() {
            return Err(Error::InvalidLadder(
                "a ladder needs at least one cutoff".into(),
            ));
        }
        if let Some(x) = cutoffs.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidLadder(format!("non-finite cutoff {x}")));
        }
        if cutoffs[0] <= 1.0 {
            return Err(Error::InvalidLadder(format!(
                "the first cutoff must exceed 1, got {}",
                cutoffs[0]
            )));
        }
        if let Some(w) = cutoffs.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidLadder(format!(
                "cutoffs must increase strictly, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self(cutoffs))
    }

    pub fn cutoffs(&self) -> &[f64] {
        &self.0
    }

    /// The base cutoff `X = X_0`.
    pub fn base(&self) -> f64 {
        self.0[0]
    }

    /// The top cutoff `X_m`.
    pub fn top(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    /// Number of cells `m` above the base cutoff.
    pub fn cells(&self) -> usize {
        self.0.len() - 1
    }
}

impl TryFrom<Vec<f64>> for ThresholdLadder {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ThresholdLadder> for Vec<f64> {
    fn from(l: ThresholdLadder) -> Self {
        l.0
    }
}

/// Adversarial mass: `tail_y` sits above the top cutoff, `ladder_y[k-1]`
/// in the cell `(X_{k-1}, X_k]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Allocation {
    pub tail_y: f64,
    pub ladder_y: Vec<f64>,
}

impl Allocation {
    pub fn zeros(cells: usize) -> Self {
        Self {
            tail_y: 0.0,
            ladder_y: vec![0.0; cells],
        }
    }

    pub fn total(&self) -> f64 {
        self.tail_y + self.ladder_y.iter().sum::<f64>()
    }

    /// Checks nonnegativity, the cell count, and the budget. A relative
    /// slack of `1e-12` absorbs rounding in solver output.
    pub fn validate(&self, ladder: &ThresholdLadder, budget: f64) -> Result<()> {
        if self.ladder_y.len() != ladder.cells() {
            return Err(Error::DimensionMismatch {
                expected: ladder.cells(),
                got: self.ladder_y.len(),
            });
        }
        for &y in std::iter::once(&self.tail_y).chain(&self.ladder_y) {
            if !(y >= 0.0) || !y.is_finite() {
                return Err(Error::Domain {
                    name: "allocation entry",
                    value: y,
                    domain: "finite and >= 0",
                });
            }
        }
        let total = self.total();
        if total > budget * (1.0 + 1e-12) + 1e-300 {
            return Err(Error::BudgetExceeded { total, budget });
        }
        Ok(())
    }
}
