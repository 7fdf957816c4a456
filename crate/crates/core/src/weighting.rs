//! Information weighting of a base law.
//!
//! With `F` the base CDF and `S = 1 - F` its survival function, the three
//! weighted densities are
//!
//! ```text
//! left:  -f ln F
//! right: -f ln S
//! two:   -f ln(F S) / 2
//! ```
//!
//! and every weighted CDF is a fixed transform of `F`, `F_w = h(F)`, with the
//! uniform cores
//!
//! ```text
//! h_left(u)  = u (1 - ln u)
//! h_right(u) = u + (1 - u) ln(1 - u)
//! h_two(u)   = u - u ln(u) / 2 + (1 - u) ln(1 - u) / 2 = u + psi(u)
//! ```
//!
//! The cores are mirror images of each other: the weighted survival function
//! is `S_w = h_dual(S)` where left and right swap and two-sided maps to
//! itself. Quantiles, sampling and tail evaluation all go through these
//! transforms and the base closed forms.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::base::BaseDistribution;
use crate::error::{Error, Result};
use crate::law::{check_probability, ContinuousLaw, Support, TailIndices};
use crate::numerics::{find_root, RootConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightingSide {
    Left,
    Right,
    TwoSided,
}

impl WeightingSide {
    pub const ALL: [WeightingSide; 3] = [WeightingSide::Left, WeightingSide::Right, WeightingSide::TwoSided];

    /// The side whose core gives this side's survival function.
    pub fn dual(self) -> Self {
        match self {
            WeightingSide::Left => WeightingSide::Right,
            WeightingSide::Right => WeightingSide::Left,
            WeightingSide::TwoSided => WeightingSide::TwoSided,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WeightingSide::Left => "left",
            WeightingSide::Right => "right",
            WeightingSide::TwoSided => "two",
        }
    }
}

impl fmt::Display for WeightingSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WeightingSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(WeightingSide::Left),
            "right" | "r" => Ok(WeightingSide::Right),
            "two" | "two-sided" | "two_sided" | "twosided" | "2tail" | "both" => Ok(WeightingSide::TwoSided),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected one of left, right, two".into(),
            }),
        }
    }
}

/// `x ln x` with the limit value 0 at `x = 0`.
fn xlogx(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// `sum_{k>=2} 2 u^{k-2} / (k (k-1))`, so that `h_right(u) = u^2/2 * series`.
fn right_core_series(u: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = 1.0;
    for k in 2..40 {
        let k = k as f64;
        let term = 2.0 * pow / (k * (k - 1.0));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
        pow *= u;
    }
    sum
}

const SERIES_CUTOFF: f64 = 0.1;

pub fn h_left(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else {
        u * (1.0 - u.ln())
    }
}

pub fn h_right(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else if u < SERIES_CUTOFF {
        0.5 * u * u * right_core_series(u)
    } else {
        u + (1.0 - u) * (-u).ln_1p()
    }
}

pub fn h_two(u: f64) -> f64 {
    0.5 * (h_left(u) + h_right(u))
}

/// Zero-mean wavelet on `[0, 1]` with `h_two(u) = u + psi_u(u)`.
pub fn psi_u(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            value: x,
            domain: "[0, 1]",
        });
    }
    Ok(-0.5 * xlogx(x) + 0.5 * xlogx(1.0 - x))
}

/// Exact quantile of the two-sided weighted `U(0, 1)`: the `u` with
/// `h_two(u) = alpha`.
pub fn ppf_u2tail(alpha: f64) -> Result<f64> {
    check_probability(alpha)?;
    Ok(UniformCore::new(WeightingSide::TwoSided).inverse(alpha))
}

/// The reflected-wavelet approximation `alpha - psi_u(alpha)` to
/// [`ppf_u2tail`]. It inverts `u + psi_u(u)` only to first order in `psi_u`
/// (at `alpha = 0.9` it gives 0.9677 against the exact 0.9503).
pub fn ppf_u2tail_first_order(alpha: f64) -> Result<f64> {
    check_probability(alpha)?;
    Ok(alpha - psi_u(alpha)?)
}

/// The uniform core `h` of one weighting side, viewed as a CDF on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformCore {
    side: WeightingSide,
}

/// A core inverse, kept on whichever side of 1/2 preserves precision.
#[derive(Debug, Clone, Copy, PartialEq)]
enum CorePoint {
    /// `u = h^{-1}(p)` directly.
    Lower(f64),
    /// `s = 1 - h^{-1}(p)`.
    Upper(f64),
}

const TABLE_KNOTS: usize = 4096;

impl UniformCore {
    pub fn new(side: WeightingSide) -> Self {
        Self { side }
    }

    pub fn side(&self) -> WeightingSide {
        self.side
    }

    pub fn dual(&self) -> Self {
        Self::new(self.side.dual())
    }

    pub fn cdf(&self, u: f64) -> f64 {
        match self.side {
            WeightingSide::Left => h_left(u),
            WeightingSide::Right => h_right(u),
            WeightingSide::TwoSided => h_two(u),
        }
    }

    /// `h'(u)`, the weighted density of the uniform law.
    pub fn density(&self, u: f64) -> f64 {
        if !(0.0..=1.0).contains(&u) {
            return 0.0;
        }
        match self.side {
            WeightingSide::Left => -u.ln(),
            WeightingSide::Right => -(-u).ln_1p(),
            WeightingSide::TwoSided => -0.5 * (u.ln() + (-u).ln_1p()),
        }
    }

    /// `ln h(e^v)` for `v <= 0`, accurate for arbitrarily negative `v`.
    pub fn ln_cdf_of_ln(&self, v: f64) -> f64 {
        if v >= 0.0 {
            return 0.0;
        }
        if v == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        let u = v.exp();
        match self.side {
            WeightingSide::Left => v + (-v).ln_1p(),
            WeightingSide::Right => {
                if u < SERIES_CUTOFF {
                    2.0 * v - std::f64::consts::LN_2 + right_core_series(u).ln()
                } else {
                    h_right(u).ln()
                }
            }
            WeightingSide::TwoSided => {
                // h_two(u) = (u/2) [(1 - ln u) + h_right(u)/u]
                let right_over_u = if u < SERIES_CUTOFF {
                    0.5 * u * right_core_series(u)
                } else {
                    h_right(u) / u
                };
                -std::f64::consts::LN_2 + v + ((1.0 - v) + right_over_u).ln()
            }
        }
    }

    /// Solve `ln h(e^v) = ln p` for `v` and return `u = e^v`.
    fn inverse_log_scale(&self, p: f64) -> f64 {
        let target = p.ln();
        let g = |v: f64| self.ln_cdf_of_ln(v) - target;
        let mut lo = target - 1.0;
        while g(lo) > 0.0 {
            lo *= 2.0;
        }
        let cfg = RootConfig {
            x_tol: 1e-16,
            f_tol: 0.0,
            max_iters: 400,
        };
        // g is continuous and increasing with g(lo) <= 0 <= g(0).
        let v = find_root(g, lo, 0.0, &cfg).expect("bracketed monotone core inverse");
        v.exp()
    }

    fn table(&self) -> &'static [f64] {
        static TABLES: OnceLock<[Vec<f64>; 3]> = OnceLock::new();
        let tables = TABLES.get_or_init(|| {
            WeightingSide::ALL.map(|side| {
                let core = UniformCore::new(side);
                (0..=TABLE_KNOTS)
                    .map(|i| match i {
                        0 => 0.0,
                        TABLE_KNOTS => 1.0,
                        _ => {
                            let p = i as f64 / TABLE_KNOTS as f64;
                            if p <= 0.5 {
                                core.inverse_log_scale(p)
                            } else {
                                1.0 - core.dual().inverse_log_scale(1.0 - p)
                            }
                        }
                    })
                    .collect()
            })
        });
        let idx = WeightingSide::ALL.iter().position(|s| *s == self.side).unwrap();
        &tables[idx]
    }

    /// Interpolate in the knot table, then polish with safeguarded Newton
    /// steps on `h(u) = p` inside the knot bracket.
    fn inverse_from_table(&self, p: f64) -> f64 {
        let table = self.table();
        let pos = p * TABLE_KNOTS as f64;
        let i = (pos.floor() as usize).min(TABLE_KNOTS - 1);
        let (mut lo, mut hi) = (table[i], table[i + 1]);
        let frac = pos - i as f64;
        let mut u = lo + frac * (hi - lo);
        for _ in 0..60 {
            let r = self.cdf(u) - p;
            if r == 0.0 {
                return u;
            }
            if r > 0.0 {
                hi = u;
            } else {
                lo = u;
            }
            let d = self.density(u);
            let mut next = u - r / d;
            if !(next > lo && next < hi) {
                next = 0.5 * (lo + hi);
            }
            if (next - u).abs() <= 2.0 * f64::EPSILON * u || next == lo || next == hi {
                return next;
            }
            u = next;
        }
        u
    }

    fn locate(&self, p: f64) -> CorePoint {
        let edge = 1.0 / TABLE_KNOTS as f64;
        if p < edge {
            CorePoint::Lower(self.inverse_log_scale(p))
        } else if p > 1.0 - edge {
            CorePoint::Upper(self.dual().inverse_log_scale(1.0 - p))
        } else {
            let u = self.inverse_from_table(p);
            if u <= 0.5 {
                CorePoint::Lower(u)
            } else {
                CorePoint::Upper(1.0 - u)
            }
        }
    }

    /// `h^{-1}(p)` for `p` in `[0, 1]`.
    pub fn inverse(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return 0.0;
        }
        if p >= 1.0 {
            return 1.0;
        }
        match self.locate(p) {
            CorePoint::Lower(u) => u,
            CorePoint::Upper(s) => 1.0 - s,
        }
    }
}

/// A base law together with a weighting side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedDistribution {
    base: BaseDistribution,
    side: WeightingSide,
}

impl WeightedDistribution {
    pub fn new(base: BaseDistribution, side: WeightingSide) -> Self {
        Self { base, side }
    }

    pub fn left(base: BaseDistribution) -> Self {
        Self::new(base, WeightingSide::Left)
    }

    pub fn right(base: BaseDistribution) -> Self {
        Self::new(base, WeightingSide::Right)
    }

    pub fn two_sided(base: BaseDistribution) -> Self {
        Self::new(base, WeightingSide::TwoSided)
    }

    pub fn side(&self) -> WeightingSide {
        self.side
    }

    pub fn core(&self) -> UniformCore {
        UniformCore::new(self.side)
    }

    /// Points where the weighted and base densities cross.
    pub fn crossing_points(&self) -> Result<Vec<f64>> {
        let e_inv = (-1.0f64).exp();
        match self.side {
            WeightingSide::Left => Ok(vec![self.base.quantile(e_inv)?]),
            WeightingSide::Right => Ok(vec![self.base.isf(e_inv)?]),
            WeightingSide::TwoSided => {
                let c = two_sided_crossing_fraction();
                Ok(vec![self.base.quantile(c)?, self.base.isf(c)?])
            }
        }
    }
}

/// `(1 - sqrt(e^2 - 4)/e) / 2`: the base-CDF level at which the two-sided
/// weight `-ln(F S)/2` equals one (the other crossing is at one minus it).
pub fn two_sided_crossing_fraction() -> f64 {
    let e = std::f64::consts::E;
    0.5 * (1.0 - (e * e - 4.0).sqrt() / e)
}

impl fmt::Display for WeightedDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.base, self.side)
    }
}

impl ContinuousLaw for WeightedDistribution {
    fn support(&self) -> Support {
        self.base.support()
    }

    fn pdf(&self, x: f64) -> f64 {
        let f = self.base.pdf(x);
        if f == 0.0 {
            return 0.0;
        }
        let weight = match self.side {
            WeightingSide::Left => -self.base.ln_cdf(x),
            WeightingSide::Right => -self.base.ln_sf(x),
            WeightingSide::TwoSided => -0.5 * (self.base.ln_cdf(x) + self.base.ln_sf(x)),
        };
        f * weight
    }

    fn pdf_derivative(&self, x: f64) -> f64 {
        let f = self.base.pdf(x);
        if f == 0.0 {
            return 0.0;
        }
        let df = self.base.pdf_derivative(x);
        let left = || -df * self.base.ln_cdf(x) - f * (f / self.base.cdf(x));
        let right = || -df * self.base.ln_sf(x) + f * (f / self.base.sf(x));
        match self.side {
            WeightingSide::Left => left(),
            WeightingSide::Right => right(),
            WeightingSide::TwoSided => 0.5 * (left() + right()),
        }
    }

    fn cdf(&self, x: f64) -> f64 {
        let u = self.base.cdf(x);
        if u <= 0.5 {
            self.core().cdf(u)
        } else {
            1.0 - self.core().dual().cdf(self.base.sf(x))
        }
    }

    fn sf(&self, x: f64) -> f64 {
        let s = self.base.sf(x);
        if s <= 0.5 {
            self.core().dual().cdf(s)
        } else {
            1.0 - self.core().cdf(self.base.cdf(x))
        }
    }

    fn ln_cdf(&self, x: f64) -> f64 {
        if self.base.cdf(x) <= 0.5 {
            self.core().ln_cdf_of_ln(self.base.ln_cdf(x))
        } else {
            (-self.sf(x)).ln_1p()
        }
    }

    fn ln_sf(&self, x: f64) -> f64 {
        if self.base.sf(x) <= 0.5 {
            self.core().dual().ln_cdf_of_ln(self.base.ln_sf(x))
        } else {
            (-self.cdf(x)).ln_1p()
        }
    }

    fn quantile(&self, p: f64) -> Result<f64> {
        check_probability(p)?;
        match self.core().locate(p) {
            CorePoint::Lower(u) => self.base.quantile(u),
            CorePoint::Upper(s) => self.base.isf(s),
        }
    }

    fn isf(&self, s: f64) -> Result<f64> {
        check_probability(s)?;
        match self.core().dual().locate(s) {
            CorePoint::Lower(t) => self.base.isf(t),
            CorePoint::Upper(u) => self.base.quantile(u),
        }
    }

    fn tail_indices(&self) -> TailIndices {
        let t = self.base.tail_indices();
        let doubled = |a: Option<f64>| a.map(|a| 2.0 * a);
        match self.side {
            WeightingSide::Left => TailIndices {
                lower: t.lower,
                upper: doubled(t.upper),
            },
            WeightingSide::Right => TailIndices {
                lower: doubled(t.lower),
                upper: t.upper,
            },
            WeightingSide::TwoSided => t,
        }
    }

    fn base(&self) -> &BaseDistribution {
        &self.base
    }
}

/// Either an unweighted base law or a weighted one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Base(BaseDistribution),
    Weighted(WeightedDistribution),
}

impl Law {
    pub fn new(base: BaseDistribution, side: Option<WeightingSide>) -> Self {
        match side {
            None => Law::Base(base),
            Some(s) => Law::Weighted(WeightedDistribution::new(base, s)),
        }
    }

    pub fn side(&self) -> Option<WeightingSide> {
        match self {
            Law::Base(_) => None,
            Law::Weighted(w) => Some(w.side()),
        }
    }

    fn inner(&self) -> &dyn ContinuousLaw {
        match self {
            Law::Base(b) => b,
            Law::Weighted(w) => w,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Base(b) => write!(f, "{b}"),
            Law::Weighted(w) => write!(f, "{w}"),
        }
    }
}

impl ContinuousLaw for Law {
    fn support(&self) -> Support {
        self.inner().support()
    }
    fn pdf(&self, x: f64) -> f64 {
        self.inner().pdf(x)
    }
    fn pdf_derivative(&self, x: f64) -> f64 {
        self.inner().pdf_derivative(x)
    }
    fn cdf(&self, x: f64) -> f64 {
        self.inner().cdf(x)
    }
    fn sf(&self, x: f64) -> f64 {
        self.inner().sf(x)
    }
    fn ln_cdf(&self, x: f64) -> f64 {
        self.inner().ln_cdf(x)
    }
    fn ln_sf(&self, x: f64) -> f64 {
        self.inner().ln_sf(x)
    }
    fn quantile(&self, p: f64) -> Result<f64> {
        self.inner().quantile(p)
    }
    fn isf(&self, s: f64) -> Result<f64> {
        self.inner().isf(s)
    }
    fn tail_indices(&self) -> TailIndices {
        self.inner().tail_indices()
    }
    fn base(&self) -> &BaseDistribution {
        match self {
            Law::Base(b) => b,
            Law::Weighted(w) => w.base(),
        }
    }
}

/// `H(x) = -ln S(x)`; `+inf` where the survival function vanishes.
pub fn cumulative_hazard(d: &BaseDistribution, x: f64) -> f64 {
    -d.ln_sf(x)
}
