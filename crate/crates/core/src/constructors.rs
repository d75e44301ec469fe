//! The named multiplicative constructions.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::PI;
use crate::signal::{FactorSpec, ProductSignalSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Family {
    SineTranslate,
    SineAntisymmetric,
    SincTranslate,
    SincVaried,
}

/// How the factor shifts are given.
#[derive(Debug, Clone, PartialEq)]
pub enum Displacements {
    /// Explicit shifts.
    List(Vec<f64>),
    /// Target local angular frequency; shifts are spaced `π/ω`.
    LocalFrequency(f64),
}

/// A request for one of the named constructions.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperoscillationRequest {
    pub family: Family,
    /// Total bandlimit. Ignored by [`Family::SincVaried`].
    pub omega: f64,
    pub count: usize,
    pub displacements: Displacements,
    /// Per-factor bandlimits for [`Family::SincVaried`].
    pub bandlimits: Vec<f64>,
}

impl SuperoscillationRequest {
    pub fn build(&self) -> Result<ProductSignalSpec> {
        let shifts = |m: usize| -> Result<Vec<f64>> {
            match &self.displacements {
                Displacements::List(v) => Ok(v.clone()),
                Displacements::LocalFrequency(w) => epsilons_from_frequency(*w, m),
            }
        };
        match self.family {
            Family::SineTranslate => build_periodic_translates(self.omega, self.count, &shifts(self.count)?),
            Family::SincTranslate => build_sinc_translates(self.omega, self.count, &shifts(self.count)?),
            Family::SineAntisymmetric => {
                let half = self.count.saturating_sub(1) / 2;
                let eps = match &self.displacements {
                    Displacements::List(v) => v.clone(),
                    // skip the origin: the unshifted factor is always present
                    Displacements::LocalFrequency(w) => epsilons_from_frequency(*w, half + 1)?.split_off(1),
                };
                build_periodic_antisymmetric(self.omega, self.count, &eps, None)
            }
            Family::SincVaried => build_varied_bandwidth(&self.bandlimits),
        }
    }
}

fn check_total(omega: f64, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("factor count must be positive".into()));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::InvalidParameter(format!("total bandlimit must be positive, got {omega}")));
    }
    Ok(())
}

fn check_len(eps: &[f64], n: usize) -> Result<()> {
    if eps.len() != n {
        return Err(Error::InvalidParameter(format!("expected {n} displacements, got {}", eps.len())));
    }
    Ok(())
}

/// `Π sin(Ω/N (t - ε_n))`: zeros at every `ε_n`, bandlimit `Ω`.
pub fn build_periodic_translates(omega: f64, n: usize, eps: &[f64]) -> Result<ProductSignalSpec> {
    check_total(omega, n)?;
    check_len(eps, n)?;
    let w = omega / n as f64;
    let factors = eps.iter().map(|&e| FactorSpec::sine(w, e)).collect::<Result<Vec<_>>>()?;
    ProductSignalSpec::new(factors)
}

/// `sin(Ω' t) Π_n sin(Ω'(t - ε_n)) sin(Ω'(t + ε_n))` for odd `N`, with
/// `Ω' = Ω/N` unless `per_factor` overrides it. Odd about the origin.
pub fn build_periodic_antisymmetric(
    omega: f64,
    n: usize,
    eps_half: &[f64],
    per_factor: Option<f64>,
) -> Result<ProductSignalSpec> {
    check_total(omega, n)?;
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("antisymmetric build needs odd N, got {n}")));
    }
    check_len(eps_half, (n - 1) / 2)?;
    let w = per_factor.unwrap_or(omega / n as f64);
    let mut factors = Vec::with_capacity(n);
    factors.push(FactorSpec::sine(w, 0.0)?);
    for &e in eps_half {
        factors.push(FactorSpec::sine(w, -e)?);
        factors.push(FactorSpec::sine(w, e)?);
    }
    ProductSignalSpec::new(factors)
}

/// Square of the antisymmetric build: an even function whose `2N` factors
/// each carry `Ω/(2N)`, so the declared bandlimit stays `Ω`.
pub fn build_periodic_antisymmetric_squared(omega: f64, n: usize, eps_half: &[f64]) -> Result<ProductSignalSpec> {
    let half = build_periodic_antisymmetric(omega, n, eps_half, Some(omega / (2 * n) as f64))?;
    let mut factors = half.factors().to_vec();
    factors.extend_from_slice(half.factors());
    ProductSignalSpec::new(factors)
}

/// `Π sinc(Ω/N (t - ε_n))`. Square integrable, decays as `|t|^-N`.
pub fn build_sinc_translates(omega: f64, n: usize, eps: &[f64]) -> Result<ProductSignalSpec> {
    check_total(omega, n)?;
    check_len(eps, n)?;
    let w = omega / n as f64;
    let factors = eps.iter().map(|&e| FactorSpec::sinc(w, e)).collect::<Result<Vec<_>>>()?;
    ProductSignalSpec::new(factors)
}

/// Sinc factors all centred on the origin with the given bandlimits.
pub fn build_varied_bandwidth(omegas: &[f64]) -> Result<ProductSignalSpec> {
    if omegas.is_empty() {
        return Err(Error::InvalidParameter("varied-bandwidth build needs at least one bandlimit".into()));
    }
    let factors = omegas.iter().map(|&w| FactorSpec::sinc(w, 0.0)).collect::<Result<Vec<_>>>()?;
    ProductSignalSpec::new(factors)
}

/// `m` displacements `0, ε, 2ε, ...` with `ε = π/ω`.
pub fn epsilons_from_frequency(omega: f64, m: usize) -> Result<Vec<f64>> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::InvalidParameter(format!("local frequency must be positive, got {omega}")));
    }
    let spacing = PI / omega;
    Ok((0..m).map(|i| i as f64 * spacing).collect())
}

/// `m` displacements with the given spacing, centred on the origin.
pub fn centered_epsilons(m: usize, spacing: f64) -> Vec<f64> {
    let mid = (m as f64 - 1.0) / 2.0;
    (0..m).map(|i| (i as f64 - mid) * spacing).collect()
}
