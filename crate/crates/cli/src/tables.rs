//! Reference tables, recomputed from the library on every run. Only the
//! published comparison values are stored.

use infoweight::summary::{moments, normalization};
use infoweight::tail::{arc_length, tail_arc_length};
use infoweight::{BaseDistribution, ContinuousLaw, Law, QuadratureConfig, Quantity, WeightedDistribution, WeightingSide};

use crate::output::{Cell, Table};
use crate::CliError;

pub const HEADER: [&str; 8] = [
    "table",
    "distribution",
    "side",
    "quantity",
    "status",
    "computed_value",
    "published_value",
    "delta",
];

fn row(table: &str, law: &dyn std::fmt::Display, side: Option<WeightingSide>, quantity: &str, q: &Quantity, published: Option<f64>) -> Vec<Cell> {
    let v = q.value();
    let delta = match (v, published) {
        (Some(a), Some(b)) => Some(a - b),
        _ => None,
    };
    vec![
        table.into(),
        law.to_string().into(),
        side.map_or("none", |s| s.as_str()).into(),
        quantity.into(),
        q.status().into(),
        v.into(),
        published.into(),
        delta.into(),
    ]
}

/// Fails with exit code 3 when a quantity that must be finite is not.
pub fn require_finite(q: Quantity, what: &str) -> Result<Quantity, CliError> {
    match &q {
        Quantity::Ok { value } if value.is_finite() => Ok(q),
        Quantity::Ok { value } => Err(CliError::Numeric(format!("{what}: non-finite value {value}"))),
        Quantity::Undefined { reason } => Err(CliError::Numeric(format!("{what}: {reason}"))),
    }
}

fn spec(s: &str) -> BaseDistribution {
    s.parse().expect("built-in spec")
}

/// (spec, weighted?, mean, variance); `None` marks an undefined entry.
const MOMENTS: [(&str, bool, Option<f64>, Option<f64>); 20] = [
    ("uniform(0,1)", true, Some(0.25), Some(0.048611)),
    ("uniform(0,1)", false, Some(0.5), Some(0.083333)),
    ("normal(0,1)", true, Some(-0.903197), Some(0.779875)),
    ("normal(0,1)", false, Some(0.0), Some(1.0)),
    ("exponential(1)", true, Some(0.355066), Some(0.179946)),
    ("exponential(1)", false, Some(1.0), Some(1.0)),
    ("logistic(0,1)", true, Some(-1.644934), Some(2.988185)),
    ("logistic(0,1)", false, Some(0.0), Some(3.289868)),
    ("rayleigh(1)", true, Some(0.716437), Some(0.196849)),
    ("rayleigh(1)", false, Some(1.253314), Some(0.4292034)),
    ("pareto(2,1)", true, Some(1.227411), Some(0.138392)),
    ("pareto(2,1)", false, Some(2.0), None),
    ("cauchy(0,1)", true, None, None),
    ("cauchy(0,1)", false, None, None),
    ("weibull(1,2)", true, Some(0.506598), Some(0.098424)),
    ("weibull(1,2)", false, Some(0.886227), Some(0.214602)),
    ("maxwell(1)", true, Some(1.02814), Some(0.239568)),
    ("maxwell(1)", false, Some(1.595769), Some(0.453521)),
    ("kumaraswamy(2,3)", true, Some(0.278825), Some(0.025917)),
    // published variance is E[X^2] = 0.25; the variance is 0.041020...
    ("kumaraswamy(2,3)", false, Some(0.457143), Some(0.25)),
];

pub fn moments_table(cfg: &QuadratureConfig) -> Result<Table, CliError> {
    let mut t = Table::new(HEADER.to_vec());
    for (s, weighted, pm, pv) in MOMENTS {
        let side = weighted.then_some(WeightingSide::Left);
        let law = Law::new(spec(s), side);
        let (m, v) = moments(&law, cfg)?;
        t.push(row("moments", &law.base(), side, "mean", &m, pm));
        t.push(row("moments", &law.base(), side, "variance", &v, pv));
    }
    Ok(t)
}

pub fn normalize_table(cfg: &QuadratureConfig) -> Result<Table, CliError> {
    let mut t = Table::new(HEADER.to_vec());
    for b in BaseDistribution::reference_catalog() {
        for side in WeightingSide::ALL {
            let w = WeightedDistribution::new(b, side);
            let m = require_finite(normalization(&w, cfg)?, &format!("mass of {w}"))?;
            t.push(row("normalize", &b, Some(side), "mass", &m, Some(1.0)));
        }
    }
    Ok(t)
}

/// (base, two-sided?, arc length, tail arc length past the 90% point,
/// survival at the upper two-sided crossing, 90% point)
#[allow(clippy::approx_constant)]
const TAILS: [(&str, bool, [f64; 4]); 4] = [
    ("uniform(0,1)", false, [1.41421, 0.141421, 0.161378, 0.9]),
    ("uniform(0,1)", true, [1.43633, 0.11206, 0.234758, 0.95035]),
    ("kumaraswamy(2,3)", false, [1.48334, 0.295092, 0.161382, 0.7321]),
    ("kumaraswamy(2,3)", true, [1.44321, 0.235125, 0.234763, 0.7953]),
];

pub fn tails_table(cfg: &QuadratureConfig) -> Result<Table, CliError> {
    let mut t = Table::new(HEADER.to_vec());
    for (s, two, published) in TAILS {
        let b = spec(s);
        let side = two.then_some(WeightingSide::TwoSided);
        let law = Law::new(b, side);
        let s = law.support();
        let x_cross = *WeightedDistribution::two_sided(b)
            .crossing_points()?
            .last()
            .ok_or_else(|| CliError::Numeric(format!("no density crossing for {b}")))?;
        let values = [
            ("arc_length", require_finite(arc_length(&law, s.lower, s.upper, cfg)?, "arc length")?),
            ("tail_arc_length_p90", require_finite(tail_arc_length(&law, 0.9, cfg)?, "tail arc length")?),
            ("survival_at_crossing", Quantity::ok(law.sf(x_cross))),
            ("quantile_p90", Quantity::ok(law.quantile(0.9)?)),
        ];
        for ((name, q), p) in values.iter().zip(published) {
            t.push(row("tails", &b, side, name, q, Some(p)));
        }
    }
    Ok(t)
}
