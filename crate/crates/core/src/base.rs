//! Catalog of base distributions with closed-form densities, CDFs, survival
//! functions and (mostly closed-form) quantiles.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::{check_probability, ContinuousLaw, Support, TailIndices};
use crate::numerics::{find_root, RootConfig};
use crate::special::{self, erf, erfc};

/// Parameterized family, in the usual location / scale / shape conventions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Uniform { a: f64, b: f64 },
    Normal { mu: f64, sigma: f64 },
    Exponential { rate: f64 },
    Logistic { mu: f64, s: f64 },
    Rayleigh { sigma: f64 },
    Pareto { alpha: f64, xm: f64 },
    Cauchy { x0: f64, gamma: f64 },
    Weibull { scale: f64, shape: f64 },
    MaxwellBoltzmann { a: f64 },
    Kumaraswamy { a: f64, b: f64 },
    Gumbel { mu: f64, beta: f64 },
    Frechet { alpha: f64, scale: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Uniform { .. } => "uniform",
            Family::Normal { .. } => "normal",
            Family::Exponential { .. } => "exponential",
            Family::Logistic { .. } => "logistic",
            Family::Rayleigh { .. } => "rayleigh",
            Family::Pareto { .. } => "pareto",
            Family::Cauchy { .. } => "cauchy",
            Family::Weibull { .. } => "weibull",
            Family::MaxwellBoltzmann { .. } => "maxwell",
            Family::Kumaraswamy { .. } => "kumaraswamy",
            Family::Gumbel { .. } => "gumbel",
            Family::Frechet { .. } => "frechet",
        }
    }

    fn params(&self) -> Vec<f64> {
        match *self {
            Family::Uniform { a, b } => vec![a, b],
            Family::Normal { mu, sigma } => vec![mu, sigma],
            Family::Exponential { rate } => vec![rate],
            Family::Logistic { mu, s } => vec![mu, s],
            Family::Rayleigh { sigma } => vec![sigma],
            Family::Pareto { alpha, xm } => vec![alpha, xm],
            Family::Cauchy { x0, gamma } => vec![x0, gamma],
            Family::Weibull { scale, shape } => vec![scale, shape],
            Family::MaxwellBoltzmann { a } => vec![a],
            Family::Kumaraswamy { a, b } => vec![a, b],
            Family::Gumbel { mu, beta } => vec![mu, beta],
            Family::Frechet { alpha, scale } => vec![alpha, scale],
        }
    }
}

/// A validated member of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BaseDistribution {
    family: Family,
}

fn positive(family: &'static str, what: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            family,
            reason: format!("{what} must be positive and finite, got {v}"),
        })
    }
}

fn finite(family: &'static str, what: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            family,
            reason: format!("{what} must be finite, got {v}"),
        })
    }
}

impl BaseDistribution {
    pub fn new(family: Family) -> Result<Self> {
        let name = family.name();
        match family {
            Family::Uniform { a, b } => {
                finite(name, "a", a)?;
                finite(name, "b", b)?;
                if a >= b {
                    return Err(Error::InvalidParameter {
                        family: name,
                        reason: format!("need a < b, got a = {a}, b = {b}"),
                    });
                }
            }
            Family::Normal { mu, sigma } => {
                finite(name, "mu", mu)?;
                positive(name, "sigma", sigma)?;
            }
            Family::Exponential { rate } => positive(name, "rate", rate)?,
            Family::Logistic { mu, s } => {
                finite(name, "mu", mu)?;
                positive(name, "s", s)?;
            }
            Family::Rayleigh { sigma } => positive(name, "sigma", sigma)?,
            Family::Pareto { alpha, xm } => {
                positive(name, "alpha", alpha)?;
                positive(name, "xm", xm)?;
            }
            Family::Cauchy { x0, gamma } => {
                finite(name, "x0", x0)?;
                positive(name, "gamma", gamma)?;
            }
            Family::Weibull { scale, shape } => {
                positive(name, "scale", scale)?;
                positive(name, "shape", shape)?;
            }
            Family::MaxwellBoltzmann { a } => positive(name, "a", a)?,
            Family::Kumaraswamy { a, b } => {
                positive(name, "a", a)?;
                positive(name, "b", b)?;
            }
            Family::Gumbel { mu, beta } => {
                finite(name, "mu", mu)?;
                positive(name, "beta", beta)?;
            }
            Family::Frechet { alpha, scale } => {
                positive(name, "alpha", alpha)?;
                positive(name, "scale", scale)?;
            }
        }
        Ok(Self { family })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn name(&self) -> &'static str {
        self.family.name()
    }

    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        Self::new(Family::Uniform { a, b })
    }
    pub fn normal(mu: f64, sigma: f64) -> Result<Self> {
        Self::new(Family::Normal { mu, sigma })
    }
    pub fn exponential(rate: f64) -> Result<Self> {
        Self::new(Family::Exponential { rate })
    }
    pub fn logistic(mu: f64, s: f64) -> Result<Self> {
        Self::new(Family::Logistic { mu, s })
    }
    pub fn rayleigh(sigma: f64) -> Result<Self> {
        Self::new(Family::Rayleigh { sigma })
    }
    pub fn pareto(alpha: f64, xm: f64) -> Result<Self> {
        Self::new(Family::Pareto { alpha, xm })
    }
    pub fn cauchy(x0: f64, gamma: f64) -> Result<Self> {
        Self::new(Family::Cauchy { x0, gamma })
    }
    pub fn weibull(scale: f64, shape: f64) -> Result<Self> {
        Self::new(Family::Weibull { scale, shape })
    }
    pub fn maxwell(a: f64) -> Result<Self> {
        Self::new(Family::MaxwellBoltzmann { a })
    }
    pub fn kumaraswamy(a: f64, b: f64) -> Result<Self> {
        Self::new(Family::Kumaraswamy { a, b })
    }
    pub fn gumbel(mu: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Gumbel { mu, beta })
    }
    pub fn frechet(alpha: f64, scale: f64) -> Result<Self> {
        Self::new(Family::Frechet { alpha, scale })
    }

    /// The ten standard reference laws: `U(0,1)`, `N(0,1)`, `E(1)`,
    /// `logistic(0,1)`, `Ray(1)`, `Par(2,1)`, `Cau(0,1)`, `Wei(1,2)`,
    /// `Maxw(1)`, `Kum(2,3)`.
    pub fn reference_catalog() -> Vec<Self> {
        vec![
            Self::uniform(0.0, 1.0).unwrap(),
            Self::normal(0.0, 1.0).unwrap(),
            Self::exponential(1.0).unwrap(),
            Self::logistic(0.0, 1.0).unwrap(),
            Self::rayleigh(1.0).unwrap(),
            Self::pareto(2.0, 1.0).unwrap(),
            Self::cauchy(0.0, 1.0).unwrap(),
            Self::weibull(1.0, 2.0).unwrap(),
            Self::maxwell(1.0).unwrap(),
            Self::kumaraswamy(2.0, 3.0).unwrap(),
        ]
    }

    /// Whether the density is symmetric about some center, and where.
    pub fn symmetry_center(&self) -> Option<f64> {
        match self.family {
            Family::Uniform { a, b } => Some(0.5 * (a + b)),
            Family::Normal { mu, .. } => Some(mu),
            Family::Logistic { mu, .. } => Some(mu),
            Family::Cauchy { x0, .. } => Some(x0),
            _ => None,
        }
    }

    /// Standard normal `z <= 0` with `Phi(z) = q`, `q <= 1/2`, solved on
    /// the log scale so tiny `q` keep full relative precision.
    fn normal_lower_z(q: f64) -> Result<f64> {
        let target = q.ln();
        find_root(|z| special::ln_normal_cdf(z) - target, -40.0, 0.0, &SOLVE_CFG)
    }

    /// Maxwell–Boltzmann point with `ln F(x) = ln_p` (or `ln S(x) = ln_p`
    /// when `upper`).
    fn maxwell_solve(&self, a: f64, ln_p: f64, upper: bool) -> Result<f64> {
        let hi = 40.0 * a;
        if upper {
            find_root(|x| ln_p - self.ln_sf(x), 0.0, hi, &SOLVE_CFG)
        } else {
            find_root(|x| self.ln_cdf(x.max(f64::MIN_POSITIVE)) - ln_p, 0.0, hi, &SOLVE_CFG)
        }
    }
}

const SOLVE_CFG: RootConfig = RootConfig {
    x_tol: 1e-15,
    f_tol: 0.0,
    max_iters: 300,
};

impl ContinuousLaw for BaseDistribution {
    fn support(&self) -> Support {
        match self.family {
            Family::Uniform { a, b } => Support::new(a, b),
            Family::Normal { .. } | Family::Logistic { .. } | Family::Cauchy { .. } | Family::Gumbel { .. } => {
                Support::real_line()
            }
            Family::Exponential { .. }
            | Family::Rayleigh { .. }
            | Family::Weibull { .. }
            | Family::MaxwellBoltzmann { .. }
            | Family::Frechet { .. } => Support::new(0.0, f64::INFINITY),
            Family::Pareto { xm, .. } => Support::new(xm, f64::INFINITY),
            Family::Kumaraswamy { .. } => Support::new(0.0, 1.0),
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x.is_nan() || !self.support().contains(x) {
            return 0.0;
        }
        match self.family {
            Family::Uniform { a, b } => 1.0 / (b - a),
            Family::Normal { mu, sigma } => special::normal_pdf((x - mu) / sigma) / sigma,
            Family::Exponential { rate } => rate * (-rate * x).exp(),
            Family::Logistic { mu, s } => {
                let e = (-((x - mu) / s).abs()).exp();
                e / (s * (1.0 + e) * (1.0 + e))
            }
            Family::Rayleigh { sigma } => {
                let s2 = sigma * sigma;
                x / s2 * (-0.5 * x * x / s2).exp()
            }
            Family::Pareto { alpha, xm } => alpha / xm * (xm / x).powf(alpha + 1.0),
            Family::Cauchy { x0, gamma } => {
                let z = (x - x0) / gamma;
                1.0 / (PI * gamma * (1.0 + z * z))
            }
            Family::Weibull { scale, shape } => {
                let z = x / scale;
                shape / scale * z.powf(shape - 1.0) * (-z.powf(shape)).exp()
            }
            Family::MaxwellBoltzmann { a } => {
                let z = x / a;
                (2.0 / PI).sqrt() * z * z * (-0.5 * z * z).exp() / a
            }
            Family::Kumaraswamy { a, b } => {
                let xa = x.powf(a);
                a * b * x.powf(a - 1.0) * (1.0 - xa).powf(b - 1.0)
            }
            Family::Gumbel { mu, beta } => {
                let z = (x - mu) / beta;
                (-(z + (-z).exp())).exp() / beta
            }
            Family::Frechet { alpha, scale } => {
                if x <= 0.0 {
                    return 0.0;
                }
                let lz = (x / scale).ln();
                ((alpha / scale).ln() - (1.0 + alpha) * lz - (-alpha * lz).exp()).exp()
            }
        }
    }

    fn pdf_derivative(&self, x: f64) -> f64 {
        let f = self.pdf(x);
        if f == 0.0 {
            return 0.0;
        }
        match self.family {
            Family::Uniform { .. } => 0.0,
            Family::Normal { mu, sigma } => -(x - mu) / (sigma * sigma) * f,
            Family::Exponential { rate } => -rate * f,
            Family::Logistic { mu, s } => -f * (0.5 * (x - mu) / s).tanh() / s,
            Family::Rayleigh { sigma } => f * (1.0 / x - x / (sigma * sigma)),
            Family::Pareto { alpha, .. } => -(alpha + 1.0) * f / x,
            Family::Cauchy { x0, gamma } => {
                let z = (x - x0) / gamma;
                -2.0 * z * f / (gamma * (1.0 + z * z))
            }
            Family::Weibull { scale, shape } => {
                let z = x / scale;
                f * ((shape - 1.0) / x - shape * z.powf(shape - 1.0) / scale)
            }
            Family::MaxwellBoltzmann { a } => f * (2.0 / x - x / (a * a)),
            Family::Kumaraswamy { a, b } => {
                let xa = x.powf(a);
                f * ((a - 1.0) / x - (b - 1.0) * a * x.powf(a - 1.0) / (1.0 - xa))
            }
            Family::Gumbel { mu, beta } => {
                let z = (x - mu) / beta;
                f * ((-z).exp() - 1.0) / beta
            }
            Family::Frechet { alpha, scale } => {
                let zma = (x / scale).powf(-alpha);
                f * (alpha * zma - (1.0 + alpha)) / x
            }
        }
    }

    fn cdf(&self, x: f64) -> f64 {
        let sup = self.support();
        if x <= sup.lower {
            return 0.0;
        }
        if x >= sup.upper {
            return 1.0;
        }
        match self.family {
            Family::Uniform { a, b } => (x - a) / (b - a),
            Family::Normal { mu, sigma } => special::normal_cdf((x - mu) / sigma),
            Family::Exponential { rate } => -(-rate * x).exp_m1(),
            Family::Logistic { mu, s } => 1.0 / (1.0 + (-(x - mu) / s).exp()),
            Family::Rayleigh { sigma } => -(-0.5 * (x / sigma).powi(2)).exp_m1(),
            Family::Pareto { alpha, xm } => -(alpha * (xm / x).ln()).exp_m1(),
            Family::Cauchy { x0, gamma } => 1.0_f64.atan2(-(x - x0) / gamma) / PI,
            Family::Weibull { scale, shape } => -(-(x / scale).powf(shape)).exp_m1(),
            Family::MaxwellBoltzmann { a } => {
                let z = x / a;
                if z < 2.0_f64.sqrt() {
                    special::gamma_p_three_halves_series(0.5 * z * z)
                } else {
                    erf(z * FRAC_1_SQRT_2) - (2.0 / PI).sqrt() * z * (-0.5 * z * z).exp()
                }
            }
            Family::Kumaraswamy { a, b } => -(b * (-x.powf(a)).ln_1p()).exp_m1(),
            Family::Gumbel { mu, beta } => (-(-(x - mu) / beta).exp()).exp(),
            Family::Frechet { alpha, scale } => (-(x / scale).powf(-alpha)).exp(),
        }
    }

    fn sf(&self, x: f64) -> f64 {
        let sup = self.support();
        if x <= sup.lower {
            return 1.0;
        }
        if x >= sup.upper {
            return 0.0;
        }
        match self.family {
            Family::Uniform { a, b } => (b - x) / (b - a),
            Family::Normal { mu, sigma } => special::normal_cdf(-(x - mu) / sigma),
            Family::Exponential { rate } => (-rate * x).exp(),
            Family::Logistic { mu, s } => 1.0 / (1.0 + ((x - mu) / s).exp()),
            Family::Rayleigh { sigma } => (-0.5 * (x / sigma).powi(2)).exp(),
            Family::Pareto { alpha, xm } => (xm / x).powf(alpha),
            Family::Cauchy { x0, gamma } => 1.0_f64.atan2((x - x0) / gamma) / PI,
            Family::Weibull { scale, shape } => (-(x / scale).powf(shape)).exp(),
            Family::MaxwellBoltzmann { a } => {
                let z = x / a;
                if z < 2.0_f64.sqrt() {
                    1.0 - special::gamma_p_three_halves_series(0.5 * z * z)
                } else {
                    erfc(z * FRAC_1_SQRT_2) + (2.0 / PI).sqrt() * z * (-0.5 * z * z).exp()
                }
            }
            Family::Kumaraswamy { a, b } => (b * (-x.powf(a)).ln_1p()).exp(),
            Family::Gumbel { mu, beta } => -(-(-(x - mu) / beta).exp()).exp_m1(),
            Family::Frechet { alpha, scale } => -(-(x / scale).powf(-alpha)).exp_m1(),
        }
    }

    fn ln_cdf(&self, x: f64) -> f64 {
        let sup = self.support();
        if x <= sup.lower {
            return f64::NEG_INFINITY;
        }
        if x >= sup.upper {
            return 0.0;
        }
        match self.family {
            Family::Normal { mu, sigma } => special::ln_normal_cdf((x - mu) / sigma),
            Family::Logistic { mu, s } => -softplus(-(x - mu) / s),
            Family::Gumbel { mu, beta } => -(-(x - mu) / beta).exp(),
            Family::Frechet { alpha, scale } => -(x / scale).powf(-alpha),
            _ => {
                let c = self.cdf(x);
                if c > 0.5 {
                    (-self.sf(x)).ln_1p()
                } else {
                    c.ln()
                }
            }
        }
    }

    fn ln_sf(&self, x: f64) -> f64 {
        let sup = self.support();
        if x <= sup.lower {
            return 0.0;
        }
        if x >= sup.upper {
            return f64::NEG_INFINITY;
        }
        match self.family {
            Family::Normal { mu, sigma } => special::ln_normal_cdf(-(x - mu) / sigma),
            Family::Exponential { rate } => -rate * x,
            Family::Logistic { mu, s } => -softplus((x - mu) / s),
            Family::Rayleigh { sigma } => -0.5 * (x / sigma).powi(2),
            Family::Pareto { alpha, xm } => alpha * (xm / x).ln(),
            Family::Weibull { scale, shape } => -(x / scale).powf(shape),
            Family::Kumaraswamy { a, b } => b * (-x.powf(a)).ln_1p(),
            Family::Frechet { alpha, scale } => {
                let y = (x / scale).powf(-alpha);
                if y < 1e-8 {
                    -alpha * (x / scale).ln() - 0.5 * y
                } else {
                    (-(-y).exp_m1()).ln()
                }
            }
            Family::Cauchy { x0, gamma } => {
                let z = (x - x0) / gamma;
                if z > 1e8 {
                    // atan2(1, z) = 1/z - 1/(3 z^3) + ...
                    -(PI * z).ln()
                } else {
                    (1.0_f64.atan2(z) / PI).ln()
                }
            }
            _ => {
                let s = self.sf(x);
                if s > 0.5 {
                    (-self.cdf(x)).ln_1p()
                } else {
                    s.ln()
                }
            }
        }
    }

    fn quantile(&self, p: f64) -> Result<f64> {
        check_probability(p)?;
        let x = match self.family {
            Family::Uniform { a, b } => a + p * (b - a),
            Family::Normal { mu, sigma } => {
                let z = if p <= 0.5 {
                    Self::normal_lower_z(p)?
                } else {
                    -Self::normal_lower_z(1.0 - p)?
                };
                mu + sigma * z
            }
            Family::MaxwellBoltzmann { a } => {
                if p <= 0.5 {
                    self.maxwell_solve(a, p.ln(), false)?
                } else {
                    self.maxwell_solve(a, (1.0 - p).ln(), true)?
                }
            }
            Family::Exponential { rate } => -(-p).ln_1p() / rate,
            Family::Logistic { mu, s } => mu + s * (p / (1.0 - p)).ln(),
            Family::Rayleigh { sigma } => sigma * (-2.0 * (-p).ln_1p()).sqrt(),
            Family::Pareto { alpha, xm } => xm * (-(-p).ln_1p() / alpha).exp(),
            Family::Cauchy { x0, gamma } => {
                if p < 0.5 {
                    x0 - gamma / (PI * p).tan()
                } else {
                    x0 + gamma / (PI * (1.0 - p)).tan()
                }
            }
            Family::Weibull { scale, shape } => scale * (-(-p).ln_1p()).powf(1.0 / shape),
            Family::Kumaraswamy { a, b } => (-((-p).ln_1p() / b).exp_m1()).powf(1.0 / a),
            Family::Gumbel { mu, beta } => mu - beta * (-p.ln()).ln(),
            Family::Frechet { alpha, scale } => scale * (-p.ln()).powf(-1.0 / alpha),
        };
        Ok(x)
    }

    fn isf(&self, s: f64) -> Result<f64> {
        check_probability(s)?;
        let x = match self.family {
            Family::Uniform { a, b } => b - s * (b - a),
            Family::Normal { mu, sigma } => {
                let z = if s <= 0.5 {
                    -Self::normal_lower_z(s)?
                } else {
                    Self::normal_lower_z(1.0 - s)?
                };
                mu + sigma * z
            }
            Family::MaxwellBoltzmann { a } => {
                if s <= 0.5 {
                    self.maxwell_solve(a, s.ln(), true)?
                } else {
                    self.maxwell_solve(a, (1.0 - s).ln(), false)?
                }
            }
            Family::Exponential { rate } => -s.ln() / rate,
            Family::Logistic { mu, s: sc } => mu + sc * ((1.0 - s) / s).ln(),
            Family::Rayleigh { sigma } => sigma * (-2.0 * s.ln()).sqrt(),
            Family::Pareto { alpha, xm } => xm * (-s.ln() / alpha).exp(),
            Family::Cauchy { x0, gamma } => {
                if s < 0.5 {
                    x0 + gamma / (PI * s).tan()
                } else {
                    x0 - gamma / (PI * (1.0 - s)).tan()
                }
            }
            Family::Weibull { scale, shape } => scale * (-s.ln()).powf(1.0 / shape),
            Family::Kumaraswamy { a, b } => (-(s.ln() / b).exp_m1()).powf(1.0 / a),
            Family::Gumbel { mu, beta } => mu - beta * (-(-s).ln_1p()).ln(),
            Family::Frechet { alpha, scale } => scale * (-(-s).ln_1p()).powf(-1.0 / alpha),
        };
        Ok(x)
    }

    fn tail_indices(&self) -> TailIndices {
        match self.family {
            Family::Pareto { alpha, .. } | Family::Frechet { alpha, .. } => TailIndices {
                lower: None,
                upper: Some(alpha),
            },
            Family::Cauchy { .. } => TailIndices {
                lower: Some(1.0),
                upper: Some(1.0),
            },
            _ => TailIndices::default(),
        }
    }

    fn base(&self) -> &BaseDistribution {
        self
    }
}

/// `ln(1 + e^y)` without overflow.
fn softplus(y: f64) -> f64 {
    if y > 30.0 {
        y + (-y).exp().ln_1p()
    } else {
        y.exp().ln_1p()
    }
}

impl fmt::Display for BaseDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.family.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

/// Parses `name(p1,p2)`; names are case-insensitive and trailing parameters
/// with a conventional default may be omitted (`normal` = `normal(0,1)`).
impl FromStr for BaseDistribution {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        let s = input.trim();
        let (name, args) = match s.find('(') {
            Some(open) => {
                let close = s.rfind(')').ok_or_else(|| parse_err("missing `)`".into()))?;
                if close != s.len() - 1 || close < open {
                    return Err(parse_err("unexpected text after `)`".into()));
                }
                (&s[..open], &s[open + 1..close])
            }
            None => (s, ""),
        };
        let name = name.trim().to_ascii_lowercase().replace(['-', '_', ' '], "");
        let mut values = Vec::new();
        if !args.trim().is_empty() {
            for tok in args.split(',') {
                let v: f64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("`{}` is not a number", tok.trim())))?;
                values.push(v);
            }
        }

        // (canonical name, defaults; NaN marks a required parameter)
        let (canonical, defaults): (&str, &[f64]) = match name.as_str() {
            "uniform" | "unif" | "u" => ("uniform", &[0.0, 1.0]),
            "normal" | "norm" | "gaussian" | "n" => ("normal", &[0.0, 1.0]),
            "exponential" | "exp" | "expon" | "e" => ("exponential", &[1.0]),
            "logistic" => ("logistic", &[0.0, 1.0]),
            "rayleigh" | "ray" => ("rayleigh", &[1.0]),
            "pareto" | "par" => ("pareto", &[f64::NAN, 1.0]),
            "cauchy" | "cau" => ("cauchy", &[0.0, 1.0]),
            "weibull" | "wei" => ("weibull", &[f64::NAN, f64::NAN]),
            "maxwell" | "maxwellboltzmann" | "maxw" => ("maxwell", &[1.0]),
            "kumaraswamy" | "kum" => ("kumaraswamy", &[f64::NAN, f64::NAN]),
            "gumbel" => ("gumbel", &[0.0, 1.0]),
            "frechet" | "fréchet" => ("frechet", &[f64::NAN, 1.0]),
            other => return Err(parse_err(format!("unknown distribution `{other}`"))),
        };
        if values.len() > defaults.len() {
            return Err(parse_err(format!(
                "{canonical} takes at most {} parameters, got {}",
                defaults.len(),
                values.len()
            )));
        }
        let mut p = defaults.to_vec();
        p[..values.len()].copy_from_slice(&values);
        if p.iter().any(|v| v.is_nan()) {
            return Err(parse_err(format!(
                "{canonical} needs at least {} parameters",
                defaults.iter().take_while(|d| d.is_nan()).count().max(1)
            )));
        }
        let family = match canonical {
            "uniform" => Family::Uniform { a: p[0], b: p[1] },
            "normal" => Family::Normal { mu: p[0], sigma: p[1] },
            "exponential" => Family::Exponential { rate: p[0] },
            "logistic" => Family::Logistic { mu: p[0], s: p[1] },
            "rayleigh" => Family::Rayleigh { sigma: p[0] },
            "pareto" => Family::Pareto { alpha: p[0], xm: p[1] },
            "cauchy" => Family::Cauchy { x0: p[0], gamma: p[1] },
            "weibull" => Family::Weibull { scale: p[0], shape: p[1] },
            "maxwell" => Family::MaxwellBoltzmann { a: p[0] },
            "kumaraswamy" => Family::Kumaraswamy { a: p[0], b: p[1] },
            "gumbel" => Family::Gumbel { mu: p[0], beta: p[1] },
            _ => Family::Frechet { alpha: p[0], scale: p[1] },
        };
        BaseDistribution::new(family)
    }
}

impl<'de> Deserialize<'de> for BaseDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let family = Family::deserialize(d)?;
        BaseDistribution::new(family).map_err(serde::de::Error::custom)
    }
}
