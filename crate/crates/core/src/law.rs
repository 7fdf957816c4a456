//! The common interface of base and weighted distributions.

use serde::{Deserialize, Serialize};

use crate::base::BaseDistribution;
use crate::error::Result;

/// Closed support `[lower, upper]`; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Support {
    pub lower: f64,
    pub upper: f64,
}

impl Support {
    pub fn new(lower: f64, upper: f64) -> Self {
        debug_assert!(lower < upper);
        Self { lower, upper }
    }

    pub fn real_line() -> Self {
        Self::new(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lower && x <= self.upper
    }

    pub fn is_bounded(&self) -> bool {
        self.lower.is_finite() && self.upper.is_finite()
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Power-law tail exponents: `P(X > x) ~ x^{-alpha}` for the upper tail and
/// `P(X < -x) ~ x^{-alpha}` for the lower one. `None` means lighter than any
/// power.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct TailIndices {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl TailIndices {
    /// Whether `E|X|^order` is finite.
    pub fn moment_exists(&self, order: f64) -> bool {
        let ok = |idx: Option<f64>| idx.map_or(true, |a| a > order);
        ok(self.lower) && ok(self.upper)
    }
}

/// A univariate continuous law.
pub trait ContinuousLaw {
    fn support(&self) -> Support;

    fn pdf(&self, x: f64) -> f64;

    /// Derivative of the density on the support interior.
    fn pdf_derivative(&self, x: f64) -> f64;

    fn cdf(&self, x: f64) -> f64;

    /// Survival function `1 - cdf`, evaluated without cancellation.
    fn sf(&self, x: f64) -> f64;

    fn ln_cdf(&self, x: f64) -> f64 {
        self.cdf(x).ln()
    }

    fn ln_sf(&self, x: f64) -> f64 {
        self.sf(x).ln()
    }

    /// Inverse of the CDF on `(0, 1)`.
    fn quantile(&self, p: f64) -> Result<f64>;

    /// Inverse of the survival function on `(0, 1)`.
    fn isf(&self, s: f64) -> Result<f64> {
        self.quantile(1.0 - s)
    }

    fn tail_indices(&self) -> TailIndices;

    /// The unweighted law this one is built from (itself for a base law).
    fn base(&self) -> &BaseDistribution;
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(crate::error::Error::Domain {
            value: p,
            domain: "(0, 1)",
        })
    }
}
