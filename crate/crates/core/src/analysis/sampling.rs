use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::signal::Signal;

/// Values on the uniform grid `t0 + k dt`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SampledSignal {
    pub t0: f64,
    pub dt: f64,
    pub values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(t0: f64, dt: f64, values: Vec<f64>) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() || !t0.is_finite() {
            return Err(Error::InvalidParameter(format!("grid needs finite t0 and dt > 0, got t0={t0}, dt={dt}")));
        }
        if values.len() < 2 {
            return Err(Error::InvalidParameter("a sampled signal needs at least 2 values".into()));
        }
        Ok(Self { t0, dt, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    #[inline]
    pub fn t(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    /// `(t, value)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().enumerate().map(|(k, &v)| (self.t(k), v))
    }
}

/// Samples `f` at `t0 + k dt`, `k = 0..n`.
pub fn sample_uniform<S: Signal + ?Sized>(f: &S, t0: f64, dt: f64, n: usize) -> Result<SampledSignal> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2 samples, got {n}")));
    }
    let values = (0..n).map(|k| f.value(t0 + k as f64 * dt)).collect();
    SampledSignal::new(t0, dt, values)
}
