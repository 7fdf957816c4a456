//! Acceptance suite. Prints one `[PASS]` / `[FAIL]` line per criterion, with
//! the failing checks listed underneath. Exits non-zero when the set of
//! failing criteria differs from `EXPECTED_RED`.
//!
//! Reference values marked `oracle` come from `tools/oracles.py` (mpmath at
//! 40 digits); values marked `published` are the literature figures.

#![allow(clippy::approx_constant, clippy::excessive_precision)]

use std::process::ExitCode;
use std::time::Instant;

use infoweight::joint::joint_check;
use infoweight::sampling::{ks_statistic, sample, SampleStream};
use infoweight::summary::{self, bowley, kurtosis_kappa, mean_shift, moments, percentiles};
use infoweight::tail::{self, arc_length, heaviness_ratio, hill, rv_limit, tail_arc_length, TailSide, Trend, RV_GRID};
use infoweight::weighting::{h_two, psi_u, two_sided_crossing_fraction, UniformCore};
use infoweight::{BaseDistribution, ContinuousLaw, Law, QuadratureConfig, WeightedDistribution, WeightingSide};

/// Criteria known to fail: left weighting of Pareto(2,1) squares the upper
/// survival function, so its tail index is 4 and neither the regular
/// variation limit `t^-2` nor a Hill estimate near 2 can hold for it.
const EXPECTED_RED: &[u32] = &[7];

const SEED: u64 = 20_240_601;

struct Check {
    label: String,
    pass: bool,
    detail: String,
}

struct Criterion {
    id: u32,
    name: &'static str,
    checks: Vec<Check>,
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Self {
            id,
            name,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            pass,
            detail: detail.into(),
        });
    }

    /// `|got - want| <= tol`.
    fn close(&mut self, label: impl Into<String>, got: f64, want: f64, tol: f64) {
        let pass = (got - want).abs() <= tol;
        self.check(label, pass, format!("got {got:.10}, want {want:.10} (tol {tol:e})"));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn report(&self) {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {} ({ok}/{} checks)", self.id, self.name, self.checks.len());
        for c in self.checks.iter().filter(|c| !c.pass) {
            println!("       x {}: {}", c.label, c.detail);
        }
    }
}

fn base(spec: &str) -> BaseDistribution {
    spec.parse().unwrap()
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "normalization of every catalog law under all three weightings");
    let start = Instant::now();
    for b in BaseDistribution::reference_catalog() {
        for side in WeightingSide::ALL {
            let w = WeightedDistribution::new(b, side);
            match summary::normalization(&w, &QuadratureConfig::tight()) {
                Ok(m) => match m.value() {
                    Some(v) => c.close(format!("{w}"), v, 1.0, 1e-8),
                    None => c.check(format!("{w}"), false, "mass undefined"),
                },
                Err(e) => c.check(format!("{w}"), false, e.to_string()),
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    c.check("runtime", secs < 10.0, format!("{secs:.2} s (limit 10 s)"));
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "mean/variance table");
    // (label, law, published mean, published var, oracle mean, oracle var); None = undefined
    type Row = (&'static str, Law, Option<f64>, Option<f64>, Option<f64>, Option<f64>);
    let l = |s: &str| Law::new(base(s), Some(WeightingSide::Left));
    let b = |s: &str| Law::new(base(s), None);
    let rows: Vec<Row> = vec![
        ("IU(0,1)", l("uniform(0,1)"), Some(0.25), Some(0.048611), Some(0.25), Some(0.048611111111111111)),
        ("U(0,1)", b("uniform(0,1)"), Some(0.5), Some(0.083333), Some(0.5), Some(1.0 / 12.0)),
        ("IN(0,1)", l("normal(0,1)"), Some(-0.903197), Some(0.779875), Some(-0.90319728556862535), Some(0.77987026018882476)),
        ("N(0,1)", b("normal(0,1)"), Some(0.0), Some(1.0), Some(0.0), Some(1.0)),
        ("IE(1)", l("exponential(1)"), Some(0.355066), Some(0.179946), Some(0.35506593315177356), Some(0.17994624309941882)),
        ("E(1)", b("exponential(1)"), Some(1.0), Some(1.0), Some(1.0), Some(1.0)),
        ("Ilogistic", l("logistic(0,1)"), Some(-1.644934), Some(2.988185), Some(-1.6449340668482264), Some(2.988173855737796)),
        ("logistic", b("logistic(0,1)"), Some(0.0), Some(3.289868), Some(0.0), Some(std::f64::consts::PI.powi(2) / 3.0)),
        ("IRay(1)", l("rayleigh(1)"), Some(0.716437), Some(0.196849), Some(0.71643712595110383), Some(0.19684971086246931)),
        ("Ray(1)", b("rayleigh(1)"), Some(1.253314), Some(0.4292034), Some((std::f64::consts::PI / 2.0).sqrt()), Some((4.0 - std::f64::consts::PI) / 2.0)),
        ("IPar(2,1)", l("pareto(2,1)"), Some(1.227411), Some(0.138392), Some(1.2274112777602188), Some(0.13839562207525354)),
        ("Par(2,1)", b("pareto(2,1)"), Some(2.0), None, Some(2.0), None),
        ("ICau(1)", l("cauchy(0,1)"), None, None, None, None),
        ("Cau(1)", b("cauchy(0,1)"), None, None, None, None),
        ("IWei(1,2)", l("weibull(1,2)"), Some(0.506598), Some(0.098424), Some(0.50659755005382617), Some(0.098424855431234657)),
        ("Wei(1,2)", b("weibull(1,2)"), Some(0.886227), Some(0.214602), Some(std::f64::consts::PI.sqrt() / 2.0), Some(1.0 - std::f64::consts::PI / 4.0)),
        ("IMaxw(1)", l("maxwell(1)"), Some(1.02814), Some(0.239568), Some(1.0281401576260276), Some(0.23956566688380129)),
        ("Maxw(1)", b("maxwell(1)"), Some(1.595769), Some(0.453521), Some(2.0 * (2.0 / std::f64::consts::PI).sqrt()), Some((3.0 * std::f64::consts::PI - 8.0) / std::f64::consts::PI)),
        ("IKum(2,3)", l("kumaraswamy(2,3)"), Some(0.278825), Some(0.025917), Some(0.27882513608507726), Some(0.025870129826593246)),
    ];
    for (label, law, pm, pv, om, ov) in rows {
        let (m, v) = match moments(&law, &cfg()) {
            Ok(r) => r,
            Err(e) => {
                c.check(label, false, e.to_string());
                continue;
            }
        };
        for (what, q, published, oracle) in [("mean", &m, pm, om), ("variance", &v, pv, ov)] {
            match (q.value(), published) {
                (Some(got), Some(p)) => {
                    c.close(format!("{label} {what} vs published"), got, p, 1e-4);
                    c.close(format!("{label} {what} vs oracle"), got, oracle.unwrap(), 1e-6);
                }
                (None, None) => c.check(format!("{label} {what} undefined"), true, ""),
                (got, p) => c.check(format!("{label} {what}"), false, format!("got {got:?}, want {p:?}")),
            }
        }
    }
    // Kum(2,3) base: the published variance 0.25 is E[X^2], not the variance.
    let kum = base("kumaraswamy(2,3)");
    let (m, v) = moments(&kum, &cfg()).unwrap();
    c.close("Kum(2,3) mean vs published", m.value().unwrap(), 16.0 / 35.0, 1e-4);
    c.close("Kum(2,3) variance vs oracle", v.value().unwrap(), 0.041020408163265306, 1e-6);
    println!(
        "       note: Kum(2,3) variance computed {:.6}, published 0.25 (documented discrepancy)",
        v.value().unwrap()
    );
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "point numerics");
    let median_u = UniformCore::new(WeightingSide::Left).inverse(0.5);
    c.close("median constant", median_u, 0.186682, 1e-6);
    c.close("median constant vs oracle", median_u, 0.18668230885083704, 1e-12);

    let n = base("normal(0,1)");
    let inl = WeightedDistribution::left(n);
    match summary::mode(&inl) {
        Ok(modes) if modes.len() == 1 => c.close("IN mode", modes[0].x, -0.863778, 1e-5),
        other => c.check("IN mode", false, format!("{other:?}")),
    }
    let q = percentiles(&inl, &[0.25, 0.5, 0.75]).unwrap();
    for (got, want, name) in [(q[0], -1.4932, "Q1"), (q[1], -0.8901, "Q2"), (q[2], -0.2990, "Q3")] {
        c.close(format!("IN {name}"), got, want, 1e-3);
    }
    let b1 = bowley(&inl).unwrap();
    c.check("IN Bowley in (-0.02, 0)", b1 > -0.02 && b1 < 0.0, format!("{b1}"));
    c.close("IN kappa", kurtosis_kappa(&inl).unwrap(), 0.2635, 2e-3);
    let n2 = WeightedDistribution::two_sided(n);
    c.close("N_2tail kappa", kurtosis_kappa(&n2).unwrap(), 0.2811, 2e-3);

    let cu = WeightedDistribution::two_sided(base("uniform(0,1)")).crossing_points().unwrap();
    c.close("two-sided crossing low", cu[0], 0.161378, 1e-6);
    c.close("two-sided crossing high", cu[1], 0.838622, 1e-6);
    let ce = WeightedDistribution::two_sided(base("exponential(1)")).crossing_points().unwrap();
    c.close("exponential crossing low", ce[0], 0.176, 1e-3);
    c.close("exponential crossing high", ce[1], 1.824, 1e-3);

    let x = two_sided_crossing_fraction();
    let peak = psi_u(x).unwrap();
    c.close("psi maximum value", peak, 0.0733805, 1e-6);
    c.close("psi maximum location", x, 0.161378, 1e-6);
    let is_max = psi_u(x - 1e-4).unwrap() < peak && psi_u(x + 1e-4).unwrap() < peak;
    c.check("psi maximum is a local max", is_max, "");
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "arc lengths, tail areas and 90% points on bounded supports");
    let u = base("uniform(0,1)");
    let k = base("kumaraswamy(2,3)");
    let u2 = WeightedDistribution::two_sided(u);
    let k2 = WeightedDistribution::two_sided(k);
    let mut both = |label: &str, got: f64, published: f64, oracle: f64| {
        c.close(format!("{label} vs published"), got, published, 5e-3);
        c.close(format!("{label} vs oracle"), got, oracle, 1e-6);
    };
    let full = |law: &dyn ContinuousLaw| arc_length(law, 0.0, 1.0, &cfg()).unwrap().value().unwrap();
    let tail90 = |law: &dyn ContinuousLaw| tail_arc_length(law, 0.9, &cfg()).unwrap().value().unwrap();

    both("arc U", full(&u), 1.41421, std::f64::consts::SQRT_2);
    both("arc U_2tail", full(&u2), 1.43633, 1.4363258712010367);
    both("arc Kum", full(&k), 1.48334, 1.4833391911844919);
    both("arc Kum_2tail", full(&k2), 1.44321, 1.4432131688278926);

    both("tail arc U", tail90(&u), 0.141421, 0.1414213562373095);
    both("tail arc U_2tail", tail90(&u2), 0.11206, 0.11206735331512453);
    both("tail arc Kum", tail90(&k), 0.295092, 0.29521412754239565);
    both("tail arc Kum_2tail", tail90(&k2), 0.235125, 0.23517052525883531);

    let xu = u2.crossing_points().unwrap()[1];
    let xk = k2.crossing_points().unwrap()[1];
    both("Kum crossing x", xk, 0.67495, 0.67495345436865855);
    both("survival U at crossing", u.sf(xu), 0.161378, 0.16137820985148149);
    both("survival U_2tail at crossing", u2.sf(xu), 0.234758, 0.23475868939123575);
    both("survival Kum at crossing", k.sf(xk), 0.161382, 0.16137820985148149);
    both("survival Kum_2tail at crossing", k2.sf(xk), 0.234763, 0.23475868939123575);

    both("90% point U", u.quantile(0.9).unwrap(), 0.9, 0.9);
    both("90% point U_2tail", u2.quantile(0.9).unwrap(), 0.95035, 0.95034684366692879);
    both("90% point Kum", k.quantile(0.9).unwrap(), 0.7321, 0.73201169159974632);
    both("90% point Kum_2tail", k2.quantile(0.9).unwrap(), 0.7953, 0.79526767998526405);
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "mean shift identity and two-sided mean preservation");
    for b in BaseDistribution::reference_catalog() {
        let bm = summary::mean(&b, &cfg()).unwrap();
        let Some(bm) = bm.value() else { continue };
        let shift = mean_shift(&b, &cfg()).unwrap().value().unwrap();
        let lm = summary::mean(&WeightedDistribution::left(b), &cfg()).unwrap().value().unwrap();
        c.close(format!("{b}: mean - shift = left mean"), bm - shift, lm, 1e-6);
        c.check(format!("{b}: left mean <= mean"), lm <= bm, format!("{lm} vs {bm}"));
        if b.symmetry_center().is_some() {
            let tm = summary::mean(&WeightedDistribution::two_sided(b), &cfg()).unwrap().value().unwrap();
            c.close(format!("{b}: two-sided mean"), tm, bm, 1e-7);
        }
    }
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "joint weighting: mass, marginals, additivity");
    for (spec, grid) in [("uniform(0,1)", 101), ("exponential(1)", 41), ("normal(0,1)", 41)] {
        let b = base(spec);
        match joint_check(&b, &b, grid, &cfg()) {
            Ok(r) => {
                match r.normalization.value() {
                    Some(v) => c.close(format!("{spec}^2 mass"), v, 1.0, 1e-6),
                    None => c.check(format!("{spec}^2 mass"), false, "undefined"),
                }
                c.check(
                    format!("{spec}^2 marginals"),
                    r.marginal_max_dev <= 1e-6,
                    format!("max deviation {:e} over {} points/axis", r.marginal_max_dev, r.marginal_points_per_axis),
                );
                c.check(
                    format!("{spec}^2 corrected additivity"),
                    r.additivity.corrected_max_dev < 1e-12,
                    format!("max deviation {:e}", r.additivity.corrected_max_dev),
                );
                println!(
                    "       note: {spec}^2 additivity without the 1/2 factor deviates by up to {:.4}",
                    r.additivity.uncorrected_max_dev
                );
            }
            Err(e) => c.check(spec, false, e.to_string()),
        }
    }
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "tail index preservation, Hill estimate, survival ratio identity");
    for alpha in [1.5f64, 2.0, 3.0] {
        let p = BaseDistribution::pareto(alpha, 1.0).unwrap();
        for t in [2.0f64, 5.0] {
            let target = t.powf(-alpha);
            for side in WeightingSide::ALL {
                let w = WeightedDistribution::new(p, side);
                let r = rv_limit(&w, t, &RV_GRID).unwrap();
                let rel = (r.limit / target - 1.0).abs();
                c.check(
                    format!("{w} rv limit t={t}"),
                    rel <= 0.01,
                    format!("limit {:.6}, t^-alpha {:.6}, rel err {:.3}", r.limit, target, rel),
                );
            }
        }
    }

    let n = 200_000;
    let ipar = WeightedDistribution::left(base("pareto(2,1)"));
    let xs = sample(&ipar, n, &mut SampleStream::new(SEED)).unwrap();
    let a = hill(&xs, n / 100).unwrap();
    c.check("Hill on left-weighted Pareto(2,1)", (1.8..=2.2).contains(&a), format!("alpha-hat {a:.4}, want [1.8, 2.2]"));
    let rpar = WeightedDistribution::right(base("pareto(2,1)"));
    let xs = sample(&rpar, n, &mut SampleStream::new(SEED)).unwrap();
    println!("       note: Hill on right-weighted Pareto(2,1): {:.4}", hill(&xs, n / 100).unwrap());

    for b in BaseDistribution::reference_catalog() {
        let w = WeightedDistribution::right(b);
        let grid = tail::tail_grid(&b, TailSide::Upper, 30).unwrap();
        let worst = heaviness_ratio(&w, &grid)
            .into_iter()
            .map(|(x, r)| (r - (1.0 - b.ln_sf(x))).abs())
            .fold(0.0, f64::max);
        c.check(format!("{b} ratio identity"), worst <= 1e-12, format!("max deviation {worst:e}"));
    }
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "sampling: KS self-tests and reproducibility");
    let n = 10_000;
    let root = SampleStream::new(SEED);
    let mut id = 0;
    for b in BaseDistribution::reference_catalog() {
        for side in WeightingSide::ALL {
            let w = WeightedDistribution::new(b, side);
            let xs = sample(&w, n, &mut root.split(id)).unwrap();
            let ks = ks_statistic(&xs, |x| w.cdf(x)).unwrap();
            c.check(format!("{w} KS"), ks.passes(), format!("D = {:.5}, threshold {:.5}", ks.d, ks.threshold));
            let again = sample(&w, n, &mut root.split(id)).unwrap();
            let same = xs.iter().zip(&again).all(|(a, b)| a.to_bits() == b.to_bits());
            c.check(format!("{w} bit-reproducible"), same, "");
            id += 1;
        }
    }
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "invariants in their literally true forms");
    let symmetric = ["uniform(0,1)", "normal(0,1)", "logistic(0,1)", "cauchy(0,1)"];
    for b in BaseDistribution::reference_catalog() {
        let (l, r, t) = (
            WeightedDistribution::left(b),
            WeightedDistribution::right(b),
            WeightedDistribution::two_sided(b),
        );
        let mut worst_rt = 0.0f64;
        let mut worst_lin = 0.0f64;
        let mut worst_comp = 0.0f64;
        for i in 1..200 {
            let u0 = i as f64 / 200.0;
            let x = b.quantile(u0).unwrap();
            for w in [&l, &r, &t] {
                let p = w.core().cdf(u0);
                let back = w.quantile(p).unwrap();
                worst_rt = worst_rt.max((back - x).abs() / x.abs().max(1.0));
            }
            let lin = 0.5 * (l.pdf(x) + r.pdf(x));
            worst_lin = worst_lin.max((t.pdf(x) - lin).abs() / lin.abs().max(f64::MIN_POSITIVE));
            let f = b.cdf(x);
            worst_comp = worst_comp.max((t.cdf(x) - (f + psi_u(f).unwrap())).abs());
        }
        c.check(format!("{b} quantile round trip"), worst_rt < 1e-9, format!("{worst_rt:e}"));
        c.check(format!("{b} two-sided = mean of one-sided pdfs"), worst_lin <= 1e-15, format!("{worst_lin:e}"));
        c.check(format!("{b} composition law"), worst_comp <= 1e-14, format!("{worst_comp:e}"));

        let mut worst_cdf = 0.0f64;
        for w in [&l, &r, &t] {
            for i in 1..=25 {
                let x = w.quantile(i as f64 / 26.0).unwrap();
                let lo = w.support().lower;
                let lo = if lo.is_finite() { lo } else { f64::NEG_INFINITY };
                let q = infoweight::numerics::integrate(|s| w.pdf(s), lo, x, &QuadratureConfig::tight()).unwrap();
                worst_cdf = worst_cdf.max((q.value - w.cdf(x)).abs());
            }
        }
        c.check(format!("{b} cdf = integral of pdf"), worst_cdf <= 1e-7, format!("{worst_cdf:e}"));

        if symmetric.contains(&b.to_string().as_str()) {
            let mu = b.symmetry_center().unwrap();
            let mut worst = 0.0f64;
            for i in 1..100 {
                let d = b.quantile(0.5 + 0.49 * i as f64 / 100.0).unwrap() - mu;
                worst = worst.max((l.pdf(mu + d) - r.pdf(mu - d)).abs());
            }
            c.check(format!("{b} left/right mirror"), worst <= 1e-13, format!("{worst:e}"));
        }
    }
    let z = infoweight::numerics::integrate(|x| psi_u(x).unwrap(), 0.0, 1.0, &cfg()).unwrap();
    c.close("psi has zero mean", z.value, 0.0, 1e-10);
    c.close("h_two at the 90% point", h_two(0.95034684366692879), 0.9, 1e-12);

    // Two-sided logistic CDF, corrected closed form.
    let lg = WeightedDistribution::two_sided(base("logistic(0,1)"));
    let mut worst = 0.0f64;
    for i in -40..=40 {
        let x = i as f64 * 0.25;
        let ex = f64::exp(x);
        let closed = 1.0 - 0.5 * (x * ex - (ex - 1.0) * ex.ln_1p() + 2.0) / (ex + 1.0);
        worst = worst.max((lg.cdf(x) - closed).abs());
    }
    c.check("two-sided logistic cdf closed form", worst < 1e-13, format!("{worst:e}"));

    // Exponential dominance is not universal: e^{x/2} S_w(x) vanishes for
    // the right-weighted exponential.
    let e = WeightedDistribution::right(base("exponential(1)"));
    let grid = tail::default_probe_grid(&e, TailSide::Upper).unwrap();
    let probe = tail::exp_dominance_probe(&e, TailSide::Upper, &[0.5, 1.5], &grid).unwrap();
    c.check(
        "right-weighted exponential probe",
        probe[0].trend == Trend::Vanishing && probe[1].trend == Trend::Diverging,
        format!("{probe:?}"),
    );
    c
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ];
    println!();
    for c in &criteria {
        c.report();
    }
    let red: Vec<u32> = criteria.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    println!(
        "\nacceptance: {}/{} criteria pass; failing {:?}; expected failing {:?} ({:.1} s)",
        criteria.len() - red.len(),
        criteria.len(),
        red,
        EXPECTED_RED,
        start.elapsed().as_secs_f64()
    );
    if red == EXPECTED_RED {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing set differs from the expected set");
        ExitCode::FAILURE
    }
}
