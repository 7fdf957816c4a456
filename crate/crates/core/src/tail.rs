//! Tail diagnostics: survival ratios, exponential-dominance probes,
//! regular-variation limits, the Hill estimator and arc lengths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::ContinuousLaw;
use crate::numerics::{extrapolate_to_zero, integrate, QuadratureConfig};
use crate::sampling::{sample, SampleStream};
use crate::summary::Quantity;
use crate::weighting::{WeightedDistribution, WeightingSide};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailSide {
    Lower,
    Upper,
}

impl TailSide {
    /// The tail that a weighting side makes heavier.
    pub fn weighted_by(side: WeightingSide) -> Self {
        match side {
            WeightingSide::Left => TailSide::Lower,
            WeightingSide::Right | WeightingSide::TwoSided => TailSide::Upper,
        }
    }
}

/// `ln` of the tail mass beyond `x` on the given side.
fn ln_tail<L: ContinuousLaw + ?Sized>(law: &L, side: TailSide, x: f64) -> f64 {
    match side {
        TailSide::Lower => law.ln_cdf(x),
        TailSide::Upper => law.ln_sf(x),
    }
}

/// Weighted over base tail mass: `S_w / S` for right and two-sided
/// weighting, `F_w / F` for left weighting.
pub fn heaviness_ratio(w: &WeightedDistribution, xs: &[f64]) -> Vec<(f64, f64)> {
    let side = TailSide::weighted_by(w.side());
    xs.iter()
        .map(|&x| (x, (ln_tail(w, side, x) - ln_tail(w.base(), side, x)).exp()))
        .collect()
}

/// Points where the base tail mass is `e^{-1}, e^{-2}, ..., e^{-n}`.
pub fn tail_grid<L: ContinuousLaw + ?Sized>(law: &L, side: TailSide, n: usize) -> Result<Vec<f64>> {
    (1..=n)
        .map(|k| {
            let s = (-(k as f64)).exp();
            match side {
                TailSide::Lower => law.quantile(s),
                TailSide::Upper => law.isf(s),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trend {
    Diverging,
    Vanishing,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub lambda: f64,
    pub trend: Trend,
    /// Least-squares slope of `lambda |x| + ln tail(x)` over the last decade.
    pub slope: f64,
}

const SLOPE_FLOOR: f64 = 1e-3;

/// Trend of `e^{lambda |x|} tail(x)` along `xs`, which should march outward
/// into the chosen tail. Only points with `|x - x_0|` in the last decade of
/// the grid distance are fitted.
pub fn exp_dominance_probe<L: ContinuousLaw + ?Sized>(
    law: &L,
    side: TailSide,
    lambdas: &[f64],
    xs: &[f64],
) -> Result<Vec<ProbeResult>> {
    if let Some(&l) = lambdas.iter().find(|&&l| !(l > 0.0)) {
        return Err(Error::Domain {
            value: l,
            domain: "(0, inf)",
        });
    }
    let far = xs.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .filter(|x| x.abs() >= 0.1 * far)
        .map(|&x| (x.abs(), ln_tail(law, side, x)))
        .filter(|(_, l)| l.is_finite())
        .collect();
    Ok(lambdas
        .iter()
        .map(|&lambda| {
            if pts.len() < 3 {
                return ProbeResult {
                    lambda,
                    trend: Trend::Inconclusive,
                    slope: f64::NAN,
                };
            }
            let n = pts.len() as f64;
            let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
            let my = pts.iter().map(|p| lambda * p.0 + p.1).sum::<f64>() / n;
            let (mut sxy, mut sxx) = (0.0, 0.0);
            for &(x, l) in &pts {
                sxy += (x - mx) * (lambda * x + l - my);
                sxx += (x - mx) * (x - mx);
            }
            let slope = sxy / sxx;
            let trend = if slope.abs() < SLOPE_FLOOR {
                Trend::Inconclusive
            } else if slope > 0.0 {
                Trend::Diverging
            } else {
                Trend::Vanishing
            };
            ProbeResult { lambda, trend, slope }
        })
        .collect())
}

/// `x_0 + scale * j` for `j` geometric on `[1, 1000]`, moving into the tail,
/// with `x_0` the median and `scale` the distance to the 10% tail point.
pub fn default_probe_grid<L: ContinuousLaw + ?Sized>(law: &L, side: TailSide) -> Result<Vec<f64>> {
    let x0 = law.quantile(0.5)?;
    let (edge, sign) = match side {
        TailSide::Lower => (law.quantile(0.1)?, -1.0),
        TailSide::Upper => (law.isf(0.1)?, 1.0),
    };
    let scale = (edge - x0).abs().max(1e-12);
    Ok((0..=60)
        .map(|i| x0 + sign * scale * 10f64.powf(i as f64 * 3.0 / 60.0))
        .collect())
}

pub const RV_GRID: [f64; 7] = [1e3, 1e6, 1e12, 1e24, 1e48, 1e96, 1e192];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RvLimit {
    pub t: f64,
    /// `(x, S(t x) / S(x))` at every grid point where both survivals are
    /// representable in log form.
    pub samples: Vec<(f64, f64)>,
    /// Extrapolated `lim S(t x) / S(x)`.
    pub limit: f64,
    /// `-ln(limit) / ln t`, when the limit is positive.
    pub index: Option<f64>,
    pub note: Option<String>,
}

/// Upper-tail regular-variation ratio `S(t x) / S(x)` over `xs`, extrapolated
/// in `z = 1 / ln x` to `z = 0` through the last four points (this removes
/// logarithmic slowly varying factors). A log ratio below `-30` at the far
/// end is read as a zero limit.
pub fn rv_limit<L: ContinuousLaw + ?Sized>(law: &L, t: f64, xs: &[f64]) -> Result<RvLimit> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            value: t,
            domain: "(0, inf)",
        });
    }
    let mut zs = Vec::new();
    let mut logs = Vec::new();
    let mut samples = Vec::new();
    let mut dropped = 0;
    for &x in xs {
        let (a, b) = (law.ln_sf(t * x), law.ln_sf(x));
        if a.is_finite() && b.is_finite() && x > 1.0 {
            let lr = a - b;
            samples.push((x, lr.exp()));
            zs.push(1.0 / x.ln());
            logs.push(lr);
        } else {
            dropped += 1;
        }
    }
    let note = (dropped > 0).then(|| format!("{dropped} grid point(s) beyond the representable survival range"));
    let Some(&last) = logs.last() else {
        return Ok(RvLimit {
            t,
            samples,
            limit: f64::NAN,
            index: None,
            note: Some("no representable grid points".into()),
        });
    };
    let limit = if last < -30.0 {
        0.0
    } else {
        let k = logs.len().min(4);
        extrapolate_to_zero(&zs[zs.len() - k..], &logs[logs.len() - k..]).exp()
    };
    let index = (limit > 0.0 && t != 1.0).then(|| -limit.ln() / t.ln());
    Ok(RvLimit {
        t,
        samples,
        limit,
        index,
        note,
    })
}

/// Hill estimate of the upper tail index from the `k` largest samples.
pub fn hill(samples: &[f64], k: usize) -> Result<f64> {
    let n = samples.len();
    if k < 2 || k >= n {
        return Err(Error::Input(format!("Hill needs 2 <= k < n (k = {k}, n = {n})")));
    }
    if let Some(&x) = samples.iter().find(|&&x| !(x > 0.0)) {
        return Err(Error::Domain {
            value: x,
            domain: "(0, inf)",
        });
    }
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let threshold = xs[n - k - 1].ln();
    let mean_excess = xs[n - k..].iter().map(|x| x.ln() - threshold).sum::<f64>() / k as f64;
    Ok(1.0 / mean_excess)
}

/// `int_a^b sqrt(1 + f^2) dx`, the length of the CDF curve.
pub fn arc_length<L: ContinuousLaw + ?Sized>(law: &L, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
    if !a.is_finite() || !b.is_finite() {
        return Ok(Quantity::undefined("unbounded range: the integrand tends to 1"));
    }
    let f = |x: f64| (1.0 + law.pdf(x).powi(2)).sqrt();
    match integrate(f, a, b, cfg) {
        Ok(est) => Ok(Quantity::ok(est.value)),
        Err(Error::Divergent { .. }) => Ok(Quantity::undefined("arc-length integral diverges")),
        Err(e) => Err(e),
    }
}

/// Arc length from the `percentile` point to the upper support end.
pub fn tail_arc_length<L: ContinuousLaw + ?Sized>(law: &L, percentile: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
    let a = law.quantile(percentile)?;
    arc_length(law, a, law.support().upper, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HillEstimate {
    pub alpha: f64,
    pub k: usize,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingSurvival {
    pub x: f64,
    pub base: f64,
    pub weighted: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailOptions {
    pub lambdas: Vec<f64>,
    pub ts: Vec<f64>,
    pub percentile: f64,
    /// Sample size for the Hill estimate; `None` skips it.
    pub hill_n: Option<usize>,
    pub seed: u64,
}

impl Default for TailOptions {
    fn default() -> Self {
        Self {
            lambdas: vec![0.1, 0.5, 1.5],
            ts: vec![2.0, 5.0],
            percentile: 0.9,
            hill_n: None,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailReport {
    pub side: TailSide,
    pub lambda_probe: Vec<ProbeResult>,
    pub ratio_samples: Vec<(f64, f64)>,
    pub rv: Vec<RvLimit>,
    pub rv_index_estimate: Option<f64>,
    pub hill_estimate: Option<HillEstimate>,
    pub arc_length_total: Quantity,
    pub arc_length_tail: Quantity,
    /// Survivals at the outermost density crossing on the weighted side.
    pub survival_at_crossing: Option<CrossingSurvival>,
}

pub fn tail_report(w: &WeightedDistribution, opts: &TailOptions, cfg: &QuadratureConfig) -> Result<TailReport> {
    let side = TailSide::weighted_by(w.side());
    let grid = default_probe_grid(w, side)?;
    let lambda_probe = exp_dominance_probe(w, side, &opts.lambdas, &grid)?;
    let ratio_samples = heaviness_ratio(w, &tail_grid(w.base(), side, 20)?);

    let rv = opts
        .ts
        .iter()
        .map(|&t| rv_limit(w, t, &RV_GRID))
        .collect::<Result<Vec<_>>>()?;
    let rv_index_estimate = rv.iter().find_map(|r| r.index);

    let hill_estimate = match opts.hill_n {
        Some(n) => {
            let xs = sample(w, n, &mut SampleStream::new(opts.seed))?;
            let k = (n / 100).max(2);
            match hill(&xs, k) {
                Ok(alpha) => Some(HillEstimate {
                    alpha,
                    k,
                    n,
                    seed: opts.seed,
                }),
                Err(Error::Domain { .. }) => None,
                Err(e) => return Err(e),
            }
        }
        None => None,
    };

    let support = w.support();
    let arc_length_total = arc_length(w, support.lower, support.upper, cfg)?;
    let arc_length_tail = tail_arc_length(w, opts.percentile, cfg)?;

    let crossings = w.crossing_points()?;
    let x = match side {
        TailSide::Lower => crossings[0],
        TailSide::Upper => *crossings.last().unwrap(),
    };
    let survival_at_crossing = Some(CrossingSurvival {
        x,
        base: w.base().sf(x),
        weighted: w.sf(x),
    });

    Ok(TailReport {
        side,
        lambda_probe,
        ratio_samples,
        rv,
        rv_index_estimate,
        hill_estimate,
        arc_length_total,
        arc_length_tail,
        survival_at_crossing,
    })
}
