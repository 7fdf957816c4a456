//! Information-weighted continuous distributions.
//!
//! A base density `f` with CDF `F` is reweighted by the self-information of
//! its lower tail (`-ln F`), upper tail (`-ln(1 - F)`), or the average of
//! the two. Every weighted CDF is a fixed function of `F`, so densities,
//! CDFs, quantiles and sampling all reduce to base closed forms.

pub mod base;
pub mod error;
pub mod joint;
pub mod law;
pub mod numerics;
pub mod sampling;
pub mod special;
pub mod summary;
pub mod tail;
pub mod weighting;

pub use base::{BaseDistribution, Family};
pub use error::{Error, Result};
pub use law::{ContinuousLaw, Support, TailIndices};
pub use numerics::{QuadratureConfig, RootConfig};
pub use summary::Quantity;
pub use weighting::{Law, WeightedDistribution, WeightingSide};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
