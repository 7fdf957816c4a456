//! Numerical kernels shared by every other module.

pub mod quadrature;
pub mod roots;

pub use quadrature::{integrate, Estimate, QuadratureConfig};
pub use roots::{find_root, RootConfig};

/// Symmetric difference quotient `(f(x + h) - f(x - h)) / 2h`.
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Second-order one-sided difference looking forward from `x`.
pub fn forward_difference<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
}

/// Polynomial extrapolation to `z = 0` through the points `(z_i, y_i)`
/// (Neville's scheme).
pub fn extrapolate_to_zero(z: &[f64], y: &[f64]) -> f64 {
    assert_eq!(z.len(), y.len());
    let mut p = y.to_vec();
    let n = p.len();
    for level in 1..n {
        for i in 0..n - level {
            let (zi, zj) = (z[i], z[i + level]);
            p[i] = (zj * p[i] - zi * p[i + 1]) / (zj - zi);
        }
    }
    p[0]
}
