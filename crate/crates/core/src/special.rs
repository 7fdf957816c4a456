//! Special functions backing the normal and Maxwell–Boltzmann laws.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

pub use libm::{erf, erfc};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Standard normal density.
pub fn normal_pdf(z: f64) -> f64 {
    (-0.5 * z * z - LN_SQRT_2PI).exp()
}

pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z * FRAC_1_SQRT_2)
}

/// `ln Phi(z)`, finite far below the underflow point of `Phi`.
pub fn ln_normal_cdf(z: f64) -> f64 {
    if z > 0.0 {
        return (-0.5 * erfc(z * FRAC_1_SQRT_2)).ln_1p();
    }
    if z > -30.0 {
        return normal_cdf(z).ln();
    }
    // Mills-ratio asymptotic series; seven terms are exact to f64 for z <= -30.
    let x2 = 1.0 / (z * z);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..8 {
        term *= -((2 * k - 1) as f64) * x2;
        sum += term;
    }
    -0.5 * z * z - LN_SQRT_2PI - (-z).ln() + sum.ln()
}

/// Regularized lower incomplete gamma `P(3/2, z)` by its power series; used
/// for small arguments where `erf(x) - c x e^{-x^2/2}` cancels.
pub fn gamma_p_three_halves_series(z: f64) -> f64 {
    if z <= 0.0 {
        return 0.0;
    }
    let a = 1.5;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 1.0;
    loop {
        term *= z / (a + n);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
        n += 1.0;
    }
    // Gamma(5/2) = 3 sqrt(pi) / 4
    let gamma_a1 = 0.75 * PI.sqrt();
    (a * z.ln() - z).exp() / gamma_a1 * sum
}
