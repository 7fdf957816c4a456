//! Bivariate left weighting: `f_w(x, y) = -f(x, y) ln F(x, y) / 2`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::base::BaseDistribution;
use crate::error::{Error, Result};
use crate::law::{ContinuousLaw, Support};
use crate::numerics::{integrate, Estimate, QuadratureConfig};
use crate::summary::{integrate_over_support, Quantity};
use crate::weighting::WeightedDistribution;

type Surface = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum JointBase {
    Independent(BaseDistribution, BaseDistribution),
    Custom {
        pdf: Surface,
        cdf: Surface,
        x_range: Support,
        y_range: Support,
    },
}

impl fmt::Debug for JointBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JointBase::Independent(a, b) => write!(f, "Independent({a}, {b})"),
            JointBase::Custom { x_range, y_range, .. } => {
                write!(f, "Custom([{}, {}] x [{}, {}])", x_range.lower, x_range.upper, y_range.lower, y_range.upper)
            }
        }
    }
}

const AUDIT_POINTS: usize = 7;
const AUDIT_TOL: f64 = 1e-3;

impl JointBase {
    pub fn independent(x: BaseDistribution, y: BaseDistribution) -> Self {
        JointBase::Independent(x, y)
    }

    /// A user-supplied joint law on a bounded box. The CDF's mixed partial
    /// (central finite difference) must match the pdf to `1e-3` on an
    /// interior grid.
    pub fn custom<P, C>(pdf: P, cdf: C, x_range: Support, y_range: Support) -> Result<Self>
    where
        P: Fn(f64, f64) -> f64 + Send + Sync + 'static,
        C: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        if !x_range.is_bounded() || !y_range.is_bounded() {
            return Err(Error::Input("custom joint laws need a bounded support box".into()));
        }
        let (hx, hy) = (1e-4 * x_range.width(), 1e-4 * y_range.width());
        for i in 1..=AUDIT_POINTS {
            for j in 1..=AUDIT_POINTS {
                let x = x_range.lower + x_range.width() * i as f64 / (AUDIT_POINTS + 1) as f64;
                let y = y_range.lower + y_range.width() * j as f64 / (AUDIT_POINTS + 1) as f64;
                let mixed = (cdf(x + hx, y + hy) - cdf(x + hx, y - hy) - cdf(x - hx, y + hy) + cdf(x - hx, y - hy))
                    / (4.0 * hx * hy);
                let p = pdf(x, y);
                if !((mixed - p).abs() <= AUDIT_TOL * p.abs().max(1.0)) {
                    return Err(Error::InconsistentJoint { x, y, mixed, pdf: p });
                }
            }
        }
        Ok(JointBase::Custom {
            pdf: Arc::new(pdf),
            cdf: Arc::new(cdf),
            x_range,
            y_range,
        })
    }

    pub fn pdf(&self, x: f64, y: f64) -> f64 {
        match self {
            JointBase::Independent(a, b) => a.pdf(x) * b.pdf(y),
            JointBase::Custom { pdf, .. } => pdf(x, y),
        }
    }

    pub fn cdf(&self, x: f64, y: f64) -> f64 {
        match self {
            JointBase::Independent(a, b) => a.cdf(x) * b.cdf(y),
            JointBase::Custom { cdf, .. } => cdf(x, y),
        }
    }

    fn ln_cdf(&self, x: f64, y: f64) -> f64 {
        match self {
            JointBase::Independent(a, b) => a.ln_cdf(x) + b.ln_cdf(y),
            JointBase::Custom { cdf, .. } => cdf(x, y).ln(),
        }
    }

    pub fn range(&self, axis: Axis) -> Support {
        match (self, axis) {
            (JointBase::Independent(a, _), Axis::X) => a.support(),
            (JointBase::Independent(_, b), Axis::Y) => b.support(),
            (JointBase::Custom { x_range, .. }, Axis::X) => *x_range,
            (JointBase::Custom { y_range, .. }, Axis::Y) => *y_range,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone)]
pub struct JointWeighted {
    base: JointBase,
}

impl JointWeighted {
    pub fn new(base: JointBase) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &JointBase {
        &self.base
    }

    pub fn pdf(&self, x: f64, y: f64) -> f64 {
        let f = self.base.pdf(x, y);
        if f == 0.0 {
            return 0.0;
        }
        -0.5 * f * self.base.ln_cdf(x, y)
    }

    /// Integrate `g` along the other axis.
    fn integrate_other<G: Fn(f64) -> f64>(&self, axis: Axis, g: G, cfg: &QuadratureConfig) -> Result<Estimate> {
        let other = match axis {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        };
        match (&self.base, other) {
            (JointBase::Independent(a, _), Axis::X) => integrate_over_support(a, g, cfg),
            (JointBase::Independent(_, b), Axis::Y) => integrate_over_support(b, g, cfg),
            (JointBase::Custom { .. }, _) => {
                let r = self.base.range(other);
                integrate(g, r.lower, r.upper, cfg)
            }
        }
    }

    /// Marginal density at `coord` on `axis`, by quadrature over the other
    /// coordinate.
    pub fn marginal(&self, axis: Axis, coord: f64, cfg: &QuadratureConfig) -> Result<Quantity> {
        let r = self.integrate_other(
            axis,
            |t| match axis {
                Axis::X => self.pdf(coord, t),
                Axis::Y => self.pdf(t, coord),
            },
            cfg,
        );
        match r {
            Ok(est) => Ok(Quantity::ok(est.value)),
            Err(Error::Divergent { .. }) => Ok(Quantity::undefined("marginal integral diverges")),
            Err(e) => Err(e),
        }
    }

    /// Total mass by nested quadrature (outer over `x`).
    pub fn normalization(&self, cfg: &QuadratureConfig) -> Result<Quantity> {
        let inner = |x: f64| match self.marginal(Axis::X, x, cfg) {
            Ok(Quantity::Ok { value }) => value,
            _ => f64::NAN,
        };
        let r = self.integrate_other(Axis::Y, inner, cfg);
        match r {
            Ok(est) => Ok(Quantity::ok(est.value)),
            Err(Error::Divergent { .. }) | Err(Error::NonFiniteIntegrand { .. }) => {
                Ok(Quantity::undefined("joint mass integral diverges"))
            }
            Err(e) => Err(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdditivityCheck {
    pub points: usize,
    /// Max `|f_w(x, y) - (f_Y f_IX + f_X f_IY) / 2|`.
    pub corrected_max_dev: f64,
    /// Same without the 1/2, for comparison.
    pub uncorrected_max_dev: f64,
}

/// Interior grid at the base quantiles `i / (n + 1)`.
fn quantile_grid(d: &BaseDistribution, n: usize) -> Result<Vec<f64>> {
    (1..=n).map(|i| d.quantile(i as f64 / (n + 1) as f64)).collect()
}

/// Compare the joint weighted density of independent `dx`, `dy` with the
/// separable form built from their one-dimensional left weightings.
pub fn independence_additivity_check(dx: &BaseDistribution, dy: &BaseDistribution, n: usize) -> Result<AdditivityCheck> {
    if n == 0 {
        return Err(Error::Input("grid size must be positive".into()));
    }
    let j = JointWeighted::new(JointBase::independent(*dx, *dy));
    let (ix, iy) = (WeightedDistribution::left(*dx), WeightedDistribution::left(*dy));
    let (xs, ys) = (quantile_grid(dx, n)?, quantile_grid(dy, n)?);
    let (mut corrected, mut uncorrected) = (0.0f64, 0.0f64);
    for &x in &xs {
        for &y in &ys {
            let sep = dy.pdf(y) * ix.pdf(x) + dx.pdf(x) * iy.pdf(y);
            let v = j.pdf(x, y);
            corrected = corrected.max((v - 0.5 * sep).abs());
            uncorrected = uncorrected.max((v - sep).abs());
        }
    }
    Ok(AdditivityCheck {
        points: n * n,
        corrected_max_dev: corrected,
        uncorrected_max_dev: uncorrected,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointCheck {
    pub normalization: Quantity,
    /// Max deviation of numeric marginals from `(f_I + f) / 2`, both axes.
    pub marginal_max_dev: f64,
    pub marginal_points_per_axis: usize,
    pub additivity: AdditivityCheck,
}

pub const MARGINAL_POINTS: usize = 25;

/// Normalization, marginal identity and additivity for an independent pair.
pub fn joint_check(dx: &BaseDistribution, dy: &BaseDistribution, grid: usize, cfg: &QuadratureConfig) -> Result<JointCheck> {
    let j = JointWeighted::new(JointBase::independent(*dx, *dy));
    let mut dev = 0.0f64;
    for (axis, d) in [(Axis::X, dx), (Axis::Y, dy)] {
        let w = WeightedDistribution::left(*d);
        for c in quantile_grid(d, MARGINAL_POINTS)? {
            let expected = 0.5 * (w.pdf(c) + d.pdf(c));
            let got = j.marginal(axis, c, cfg)?.value().unwrap_or(f64::NAN);
            dev = dev.max((got - expected).abs());
        }
    }
    Ok(JointCheck {
        normalization: j.normalization(cfg)?,
        marginal_max_dev: dev,
        marginal_points_per_axis: MARGINAL_POINTS,
        additivity: independence_additivity_check(dx, dy, grid)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unif() -> BaseDistribution {
        BaseDistribution::uniform(0.0, 1.0).unwrap()
    }

    fn expo() -> BaseDistribution {
        BaseDistribution::exponential(1.0).unwrap()
    }

    #[test]
    fn point_values() {
        let u = JointWeighted::new(JointBase::independent(unif(), unif()));
        let e_inv = (-1.0f64).exp();
        assert!((u.pdf(e_inv, 1.0) - 0.5).abs() < 1e-15);
        for (x, y) in [(0.1, 0.7), (0.5, 0.5), (0.93, 0.02)] {
            let f: f64 = 0.5 * (-f64::ln(x) - f64::ln(y));
            assert!((u.pdf(x, y) - f).abs() < 1e-15);
        }
        let e = JointWeighted::new(JointBase::independent(expo(), expo()));
        let expected = (-2.0f64).exp() * (1.0 / (1.0 - e_inv)).ln();
        assert!((e.pdf(1.0, 1.0) - expected).abs() < 1e-15);
        assert!((expected - 0.0620).abs() < 1e-4);
    }

    #[test]
    fn marginal_examples() {
        let cfg = QuadratureConfig::default();
        let u = JointWeighted::new(JointBase::independent(unif(), unif()));
        let m = u.marginal(Axis::X, 0.5, &cfg).unwrap().value().unwrap();
        assert!((m - 0.5 * (1.0 - 0.5f64.ln())).abs() < 1e-9);
        let n = BaseDistribution::normal(0.0, 1.0).unwrap();
        let j = JointWeighted::new(JointBase::independent(n, n));
        let m = j.marginal(Axis::Y, 0.0, &cfg).unwrap().value().unwrap();
        let expected = 0.5 * (WeightedDistribution::left(n).pdf(0.0) + n.pdf(0.0));
        assert!((m - expected).abs() < 1e-9);
    }

    #[test]
    fn marginal_near_lower_edge() {
        let cfg = QuadratureConfig::default();
        let u = JointWeighted::new(JointBase::independent(unif(), unif()));
        let x = 1e-12;
        let m = u.marginal(Axis::X, x, &cfg).unwrap().value().unwrap();
        assert!((m - 0.5 * (1.0 - f64::ln(x))).abs() < 1e-8);
    }

    #[test]
    fn normalization_of_products() {
        let cfg = QuadratureConfig::default();
        for (a, b) in [(unif(), unif()), (expo(), expo())] {
            let j = JointWeighted::new(JointBase::independent(a, b));
            let mass = j.normalization(&cfg).unwrap().value().unwrap();
            assert!((mass - 1.0).abs() < 1e-6, "{mass}");
        }
    }

    #[test]
    fn additivity_corrected_and_uncorrected() {
        let r = independence_additivity_check(&unif(), &unif(), 101).unwrap();
        assert!(r.corrected_max_dev < 1e-12);
        assert!(r.uncorrected_max_dev > 1.0);
        let r = independence_additivity_check(&expo(), &expo(), 41).unwrap();
        assert!(r.corrected_max_dev < 1e-12);
        assert_eq!(r.points, 41 * 41);
    }

    #[test]
    fn custom_joint_audit() {
        let box_ = Support::new(0.0, 1.0);
        // FGM copula with uniform margins, theta = 0.5
        let pdf = |x: f64, y: f64| 1.0 + 0.5 * (1.0 - 2.0 * x) * (1.0 - 2.0 * y);
        let cdf = |x: f64, y: f64| x * y * (1.0 + 0.5 * (1.0 - x) * (1.0 - y));
        let j = JointBase::custom(pdf, cdf, box_, box_).unwrap();
        let w = JointWeighted::new(j);
        // unit mass needs E[-ln F(X, Y)] = 2, which dependence breaks
        let mass = w.normalization(&QuadratureConfig::default()).unwrap().value().unwrap();
        assert!((mass - 0.940_602_427_7).abs() < 1e-7, "{mass}");

        let bad = JointBase::custom(|_, _| 2.0, |x, y| x * y, box_, box_);
        assert!(matches!(bad, Err(Error::InconsistentJoint { .. })));
        let unbounded = JointBase::custom(pdf, cdf, Support::real_line(), box_);
        assert!(unbounded.is_err());
    }

    #[test]
    fn joint_check_bundle() {
        let r = joint_check(&unif(), &expo(), 21, &QuadratureConfig::default()).unwrap();
        assert!((r.normalization.value().unwrap() - 1.0).abs() < 1e-6);
        assert!(r.marginal_max_dev < 1e-6);
        assert!(r.additivity.corrected_max_dev < 1e-12);
    }
}
