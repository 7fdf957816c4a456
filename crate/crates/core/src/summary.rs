//! Summary quantities: moments, mean shift, information generating function,
//! modes, quantile-based shape coefficients and cumulative residual entropy.

use serde::{Deserialize, Serialize};

use crate::base::BaseDistribution;
use crate::error::{Error, Result};
use crate::law::ContinuousLaw;
use crate::numerics::{find_root, integrate, Estimate, QuadratureConfig, RootConfig};

/// A numeric result that may not exist (divergent integral, heavy tail).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Quantity {
    Ok { value: f64 },
    Undefined { reason: String },
}

impl Quantity {
    pub fn ok(value: f64) -> Self {
        Quantity::Ok { value }
    }

    pub fn undefined(reason: impl Into<String>) -> Self {
        Quantity::Undefined { reason: reason.into() }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Quantity::Ok { value } => Some(*value),
            Quantity::Undefined { .. } => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Quantity::Ok { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            Quantity::Ok { .. } => "ok",
            Quantity::Undefined { .. } => "undefined",
        }
    }

    /// Map a quadrature outcome: divergence becomes `Undefined`, other
    /// errors propagate.
    fn from_integral(r: Result<Estimate>) -> Result<Self> {
        match r {
            Ok(est) => Ok(Quantity::ok(est.value)),
            Err(Error::Divergent { value, abs_err }) => Ok(Quantity::undefined(format!(
                "integral diverges (partial value {value:.6e}, error estimate {abs_err:.3e})"
            ))),
            Err(e) => Err(e),
        }
    }
}

/// Integrate `g` against the support of `law`, split at a few quantiles so
/// that peaks and far tails get their own panels.
pub(crate) fn integrate_over_support<L, G>(law: &L, g: G, cfg: &QuadratureConfig) -> Result<Estimate>
where
    L: ContinuousLaw + ?Sized,
    G: Fn(f64) -> f64,
{
    let support = law.support();
    let mut cuts = vec![support.lower];
    for p in [0.01, 0.5, 0.99] {
        let q = law.quantile(p)?;
        if q > *cuts.last().unwrap() && q < support.upper {
            cuts.push(q);
        }
    }
    cuts.push(support.upper);
    let mut total = Estimate { value: 0.0, abs_err: 0.0 };
    for w in cuts.windows(2) {
        let est = integrate(&g, w[0], w[1], cfg)?;
        total.value += est.value;
        total.abs_err += est.abs_err;
    }
    Ok(total)
}

/// Total probability mass `int f dx`.
pub fn normalization<L: ContinuousLaw + ?Sized>(law: &L, cfg: &QuadratureConfig) -> Result<Quantity> {
    Quantity::from_integral(integrate_over_support(law, |x| law.pdf(x), cfg))
}

/// `E[(X - c)^k]`, with the tail-index pre-check.
fn moment_about<L: ContinuousLaw + ?Sized>(law: &L, order: i32, c: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
    let tails = law.tail_indices();
    if !tails.moment_exists(order as f64) {
        return Ok(Quantity::undefined(format!(
            "power-law tail (indices lower {:?}, upper {:?}) too heavy for a moment of order {order}",
            tails.lower, tails.upper
        )));
    }
    let r = integrate_over_support(
        law,
        |x| {
            let f = law.pdf(x);
            if f == 0.0 {
                0.0
            } else {
                (x - c).powi(order) * f
            }
        },
        cfg,
    );
    Quantity::from_integral(r)
}

/// Mean and variance by quadrature.
pub fn moments<L: ContinuousLaw + ?Sized>(law: &L, cfg: &QuadratureConfig) -> Result<(Quantity, Quantity)> {
    let mean = moment_about(law, 1, 0.0, cfg)?;
    let var = match mean.value() {
        Some(m) => moment_about(law, 2, m, cfg)?,
        None => Quantity::undefined("mean does not exist"),
    };
    Ok((mean, var))
}

pub fn mean<L: ContinuousLaw + ?Sized>(law: &L, cfg: &QuadratureConfig) -> Result<Quantity> {
    moment_about(law, 1, 0.0, cfg)
}

/// `-int F ln F dx`: how far left weighting moves the mean.
pub fn mean_shift(d: &BaseDistribution, cfg: &QuadratureConfig) -> Result<Quantity> {
    if !d.tail_indices().moment_exists(1.0) {
        return Ok(Quantity::undefined("base mean does not exist"));
    }
    let r = integrate_over_support(
        d,
        |x| {
            let lf = d.ln_cdf(x);
            if lf == f64::NEG_INFINITY || lf == 0.0 {
                0.0
            } else {
                -lf.exp() * lf
            }
        },
        cfg,
    );
    Quantity::from_integral(r)
}

/// Cumulative residual entropy `-int S ln S dx`.
pub fn cre(d: &BaseDistribution, cfg: &QuadratureConfig) -> Result<Quantity> {
    if !d.tail_indices().moment_exists(1.0) {
        return Ok(Quantity::undefined("base mean does not exist"));
    }
    let r = integrate_over_support(
        d,
        |x| {
            let ls = d.ln_sf(x);
            if ls == f64::NEG_INFINITY || ls == 0.0 {
                0.0
            } else {
                -ls.exp() * ls
            }
        },
        cfg,
    );
    Quantity::from_integral(r)
}

fn info_generating_unchecked(d: &BaseDistribution, t: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
    if !d.support().upper.is_finite() {
        return Ok(Quantity::undefined(
            "support unbounded above: F^t does not decay, the integral diverges",
        ));
    }
    let r = integrate_over_support(
        d,
        |x| {
            let lf = d.ln_cdf(x);
            if lf == f64::NEG_INFINITY {
                0.0
            } else {
                (t * lf).exp()
            }
        },
        cfg,
    );
    Quantity::from_integral(r)
}

/// `I(t) = int F(x)^t dx` for `t >= 1`.
pub fn info_generating(d: &BaseDistribution, t: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::Domain {
            value: t,
            domain: "[1, inf)",
        });
    }
    info_generating_unchecked(d, t, cfg)
}

/// `-dI/dt` at `t = 1` by central difference (step `1e-5`, tight
/// quadrature), falling back to a forward difference when `I(1 - h)` is
/// unavailable.
pub fn info_generating_slope(d: &BaseDistribution) -> Result<Quantity> {
    const H: f64 = 1e-5;
    let cfg = QuadratureConfig::tight();
    let at = |t: f64| -> Result<Option<f64>> { Ok(info_generating_unchecked(d, t, &cfg)?.value()) };
    let Some(_) = at(1.0)? else {
        return Ok(Quantity::undefined("I(t) diverges"));
    };
    let mut vals = Vec::new();
    for t in [1.0 - H, 1.0 + H] {
        vals.push(at(t)?);
    }
    if let (Some(lo), Some(hi)) = (vals[0], vals[1]) {
        return Ok(Quantity::ok(-(hi - lo) / (2.0 * H)));
    }
    let mut fwd = Vec::new();
    for t in [1.0, 1.0 + H, 1.0 + 2.0 * H] {
        match at(t)? {
            Some(v) => fwd.push(v),
            None => return Ok(Quantity::undefined("I(t) diverges near t = 1")),
        }
    }
    Ok(Quantity::ok(-(-3.0 * fwd[0] + 4.0 * fwd[1] - fwd[2]) / (2.0 * H)))
}

/// A local maximum of a density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mode {
    pub x: f64,
    /// Sits on a finite support endpoint (the density may be unbounded there).
    pub boundary: bool,
}

const MODE_GRID: usize = 2048;

/// All local maxima of the density: sign scan of the derivative over the
/// central 99.9% region, each bracket polished by Brent. Decreasing
/// (increasing) behaviour at a finite lower (upper) endpoint is reported as
/// a boundary mode.
pub fn mode<L: ContinuousLaw + ?Sized>(law: &L) -> Result<Vec<Mode>> {
    let lo = law.quantile(0.0005)?;
    let hi = law.quantile(0.9995)?;
    let support = law.support();
    let xs: Vec<f64> = (0..MODE_GRID)
        .map(|i| lo + (hi - lo) * i as f64 / (MODE_GRID - 1) as f64)
        .collect();
    let ds: Vec<f64> = xs.iter().map(|&x| law.pdf_derivative(x)).collect();

    let mut modes = Vec::new();
    if support.lower.is_finite() && ds[0] < 0.0 {
        modes.push(Mode {
            x: support.lower,
            boundary: true,
        });
    }
    let cfg = RootConfig::precise();
    for i in 0..MODE_GRID - 1 {
        if ds[i] > 0.0 && ds[i + 1] <= 0.0 {
            let x = if ds[i + 1] == 0.0 {
                xs[i + 1]
            } else {
                find_root(|x| law.pdf_derivative(x), xs[i], xs[i + 1], &cfg)?
            };
            modes.push(Mode { x, boundary: false });
        }
    }
    if support.upper.is_finite() && ds[MODE_GRID - 1] > 0.0 {
        modes.push(Mode {
            x: support.upper,
            boundary: true,
        });
    }
    Ok(modes)
}

pub fn percentiles<L: ContinuousLaw + ?Sized>(law: &L, ps: &[f64]) -> Result<Vec<f64>> {
    ps.iter().map(|&p| law.quantile(p)).collect()
}

/// Bowley skewness `((Q3 - Q2) - (Q2 - Q1)) / (Q3 - Q1)`.
pub fn bowley<L: ContinuousLaw + ?Sized>(law: &L) -> Result<f64> {
    let q = percentiles(law, &[0.25, 0.5, 0.75])?;
    Ok(((q[2] - q[1]) - (q[1] - q[0])) / (q[2] - q[0]))
}

/// Percentile kurtosis `(Q3 - Q1) / (2 (P90 - P10))`.
pub fn kurtosis_kappa<L: ContinuousLaw + ?Sized>(law: &L) -> Result<f64> {
    let q = percentiles(law, &[0.1, 0.25, 0.75, 0.9])?;
    Ok(0.5 * (q[2] - q[1]) / (q[3] - q[0]))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryReport {
    pub mean: Quantity,
    pub variance: Quantity,
    pub modes: Vec<Mode>,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub p10: f64,
    pub p90: f64,
    pub bowley_b1: f64,
    pub kurtosis_kappa: f64,
    /// Mean shift of the underlying base law.
    pub mean_shift: Quantity,
    /// Cumulative residual entropy of the underlying base law.
    pub cre: Quantity,
}

pub fn summarize<L: ContinuousLaw + ?Sized>(law: &L, cfg: &QuadratureConfig) -> Result<SummaryReport> {
    let (mean, variance) = moments(law, cfg)?;
    let p = percentiles(law, &[0.1, 0.25, 0.5, 0.75, 0.9])?;
    Ok(SummaryReport {
        mean,
        variance,
        modes: mode(law)?,
        q1: p[1],
        q2: p[2],
        q3: p[3],
        p10: p[0],
        p90: p[4],
        bowley_b1: ((p[3] - p[2]) - (p[2] - p[1])) / (p[3] - p[1]),
        kurtosis_kappa: 0.5 * (p[3] - p[1]) / (p[4] - p[0]),
        mean_shift: mean_shift(law.base(), cfg)?,
        cre: cre(law.base(), cfg)?,
    })
}
