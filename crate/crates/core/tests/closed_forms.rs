//! Weighted densities and CDFs against hand-derived closed forms.

use infoweight::{BaseDistribution, ContinuousLaw, WeightedDistribution};

fn rel_close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs().max(1e-300) || (got - want).abs() <= 1e-300
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..n).map(move |i| lo + (hi - lo) * i as f64 / n as f64)
}

#[test]
fn left_uniform() {
    let w = WeightedDistribution::left(BaseDistribution::uniform(0.0, 1.0).unwrap());
    for x in grid(0.0, 1.0, 50) {
        assert!(rel_close(w.pdf(x), -x.ln(), 1e-13), "{x}");
        assert!(rel_close(w.cdf(x), x * (1.0 - x.ln()), 1e-13), "{x}");
    }
}

#[test]
fn right_exponential() {
    let w = WeightedDistribution::right(BaseDistribution::exponential(1.0).unwrap());
    for x in grid(0.0, 30.0, 60) {
        assert!(rel_close(w.pdf(x), x * (-x).exp(), 1e-13), "{x}");
        assert!(rel_close(w.sf(x), (1.0 + x) * (-x).exp(), 1e-12), "{x}");
    }
}

#[test]
fn left_exponential() {
    let w = WeightedDistribution::left(BaseDistribution::exponential(2.0).unwrap());
    for x in grid(0.0, 5.0, 40) {
        let f = 2.0 * (-2.0 * x).exp();
        let want = -f * (-(-2.0 * x).exp_m1()).ln();
        assert!(rel_close(w.pdf(x), want, 1e-12), "{x}");
    }
}

#[test]
fn right_pareto() {
    for alpha in [1.5, 2.0, 3.0] {
        let w = WeightedDistribution::right(BaseDistribution::pareto(alpha, 1.0).unwrap());
        for x in grid(1.0, 50.0, 49) {
            let pdf = alpha * alpha * x.powf(-alpha - 1.0) * x.ln();
            let sf = x.powf(-alpha) * (1.0 + alpha * x.ln());
            assert!(rel_close(w.pdf(x), pdf, 1e-12), "{alpha} {x}");
            assert!(rel_close(w.sf(x), sf, 1e-12), "{alpha} {x}");
        }
    }
}

#[test]
fn right_weibull_and_rayleigh() {
    let (lam, k) = (1.5, 2.5);
    let b = BaseDistribution::weibull(lam, k).unwrap();
    let w = WeightedDistribution::right(b);
    for x in grid(0.0, 4.0, 40) {
        assert!(rel_close(w.pdf(x), b.pdf(x) * (x / lam).powf(k), 1e-12), "{x}");
    }
    let r = WeightedDistribution::right(BaseDistribution::rayleigh(1.0).unwrap());
    for x in grid(0.0, 6.0, 40) {
        let want = x * (-x * x / 2.0).exp() * x * x / 2.0;
        assert!(rel_close(r.pdf(x), want, 1e-12), "{x}");
    }
}

#[test]
fn left_extreme_value_families() {
    // max-stable laws: -ln F is elementary
    let g = BaseDistribution::gumbel(0.5, 2.0).unwrap();
    let wg = WeightedDistribution::left(g);
    for x in grid(-4.0, 12.0, 40) {
        let z = (x - 0.5) / 2.0;
        assert!(rel_close(wg.pdf(x), g.pdf(x) * (-z).exp(), 1e-12), "{x}");
    }
    let fr = BaseDistribution::frechet(3.0, 2.0).unwrap();
    let wf = WeightedDistribution::left(fr);
    for x in grid(0.5, 20.0, 40) {
        assert!(rel_close(wf.pdf(x), fr.pdf(x) * (x / 2.0).powf(-3.0), 1e-12), "{x}");
    }
}

#[test]
fn two_sided_logistic() {
    let w = WeightedDistribution::two_sided(BaseDistribution::logistic(0.0, 1.0).unwrap());
    for x in grid(-15.0, 15.0, 60) {
        let ex = x.exp();
        let cdf = 1.0 - 0.5 * (x * ex - (ex - 1.0) * ex.ln_1p() + 2.0) / (ex + 1.0);
        assert!((w.cdf(x) - cdf).abs() < 1e-13, "{x}");
        let f = (-x).exp() / (1.0 + (-x).exp()).powi(2);
        let want = -0.5 * f * ((1.0 / (1.0 + (-x).exp())).ln() + (1.0 / (1.0 + ex)).ln());
        assert!(rel_close(w.pdf(x), want, 1e-12), "{x}");
    }
}

#[test]
fn two_sided_symmetric_bases_stay_symmetric() {
    for b in ["normal(1,2)", "logistic(-1,0.5)", "cauchy(0,3)", "uniform(-2,4)"] {
        let b: BaseDistribution = b.parse().unwrap();
        let c = b.symmetry_center().unwrap();
        let w = WeightedDistribution::two_sided(b);
        for d in grid(0.0, 2.9, 20) {
            assert!(rel_close(w.pdf(c + d), w.pdf(c - d), 1e-13), "{b} {d}");
            assert!((w.cdf(c + d) + w.cdf(c - d) - 1.0).abs() < 1e-14, "{b} {d}");
        }
    }
}
