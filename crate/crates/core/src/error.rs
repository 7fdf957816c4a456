use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },

    #[error("argument {value} outside domain {domain}")]
    Domain { value: f64, domain: &'static str },

    #[error("cannot parse distribution spec `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("root not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("no convergence after {iterations} iterations (last estimate {estimate})")]
    RootNotConverged { iterations: usize, estimate: f64 },

    #[error("integral did not converge: value {value}, error estimate {abs_err}")]
    Divergent { value: f64, abs_err: f64 },

    #[error("integrand returned a non-finite value at x = {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("joint cdf inconsistent with pdf at ({x}, {y}): mixed partial {mixed}, pdf {pdf}")]
    InconsistentJoint { x: f64, y: f64, mixed: f64, pdf: f64 },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
