//! Seeded inverse-transform sampling and the Kolmogorov–Smirnov statistic.
//!
//! Uniforms come from ChaCha20 (`rand_chacha`), 53 random bits per draw,
//! mapped to the open interval as `(k + 1/2) 2^-53`. A stream is identified by
//! `(seed, stream)`: the seed keys the cipher and the stream id selects the
//! ChaCha nonce, so `split(i)` hands out non-overlapping sequences without a
//! jump-ahead.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::law::ContinuousLaw;

pub const ALGORITHM_ID: &str = "chacha20/rand_chacha-0.9/seed_from_u64/open53";

#[derive(Debug, Clone)]
pub struct SampleStream {
    seed: u64,
    stream: u64,
    consumed: u64,
    rng: ChaCha20Rng,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamMetadata {
    pub algorithm_id: String,
    pub seed: u64,
    pub stream: u64,
    pub consumed: u64,
}

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            seed,
            stream,
            consumed: 0,
            rng,
        }
    }

    /// Fresh stream `id` under the same seed, for handing to another worker.
    pub fn split(&self, id: u64) -> Self {
        Self::with_stream(self.seed, id)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Uniforms drawn so far.
    pub fn consumed(&self) -> u64 {
        self.consumed
    }

    pub fn algorithm_id(&self) -> &'static str {
        ALGORITHM_ID
    }

    pub fn metadata(&self) -> StreamMetadata {
        StreamMetadata {
            algorithm_id: ALGORITHM_ID.to_string(),
            seed: self.seed,
            stream: self.stream,
            consumed: self.consumed,
        }
    }

    /// Uniform on the open interval `(0, 1)`.
    pub fn next_uniform(&mut self) -> f64 {
        self.consumed += 1;
        let bits = self.rng.next_u64() >> 11;
        (bits as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// `n` draws `quantile(U_i)`.
pub fn sample<L: ContinuousLaw + ?Sized>(law: &L, n: usize, stream: &mut SampleStream) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::Input("sample size must be at least 1".into()));
    }
    (0..n).map(|_| law.quantile(stream.next_uniform())).collect()
}

/// Inverse transform of caller-supplied uniforms.
pub fn sample_from_uniforms<L: ContinuousLaw + ?Sized>(law: &L, us: &[f64]) -> Result<Vec<f64>> {
    us.iter().map(|&u| law.quantile(u)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    pub n: usize,
    pub d: f64,
    /// Asymptotic 1% critical value `1.63 / sqrt(n)`.
    pub threshold: f64,
}

impl KsResult {
    pub fn passes(&self) -> bool {
        self.d < self.threshold
    }
}

pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<KsResult> {
    if samples.is_empty() {
        return Err(Error::Input("KS statistic needs at least one sample".into()));
    }
    if samples.iter().any(|x| x.is_nan()) {
        return Err(Error::Input("NaN in samples".into()));
    }
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    Ok(KsResult {
        n: xs.len(),
        d,
        threshold: 1.63 / n.sqrt(),
    })
}
