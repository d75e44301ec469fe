//! Two-sided bounds on the dynamic range of the uniformly shifted builds.
//!
//! Every factor is bounded separately at two places: the big lobe and the
//! midpoint between the two central prescribed zeros. Multiplying the
//! per-factor numbers gives under- and overestimates of the lobe and of the
//! superoscillation amplitude, and their ratios bracket `σ`.

use alloc::format;
use alloc::vec::Vec;

use super::dynamic_range::default_domain;
use crate::constructors::{build_periodic_translates, build_sinc_translates, centered_epsilons};
use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::signal::ProductSignalSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BoundFamily {
    SineTranslate,
    SincTranslate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SigmaBounds {
    pub lower: f64,
    pub upper: f64,
    /// `c^N`: product of the smallest per-factor value at the lobe.
    pub lobe_under: f64,
    pub lobe_over: f64,
    /// `d^N`: product of the largest per-factor value at the midpoint.
    pub superosc_over: f64,
    /// `b^N`: product of the smallest per-factor value at the midpoint.
    pub superosc_under: f64,
    pub lobe_location: f64,
    pub midpoint: f64,
}

/// The build a [`SigmaBounds`] describes, with the region and domain on
/// which its `σ` is measured.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundConfiguration {
    pub spec: ProductSignalSpec,
    pub region: (f64, f64),
    pub domain: (f64, f64),
    pub lobe_location: f64,
    pub midpoint: f64,
}

fn check(n: usize, eps: f64, omega: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("bounds need N >= 2, got {n}")));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!("spacing must be positive, got {eps}")));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::InvalidParameter(format!("bandlimit must be positive, got {omega}")));
    }
    Ok(())
}

/// Centred shifts `ε_n`, the prescribed zeros' offset, and the midpoint
/// between the two central zeros relative to that offset.
fn layout(n: usize, eps: f64) -> (Vec<f64>, f64) {
    let shifts = centered_epsilons(n, eps);
    let i = (n - 1) / 2;
    (shifts.clone(), 0.5 * (shifts[i] + shifts[i + 1]))
}

pub fn bound_configuration(family: BoundFamily, n: usize, eps: f64, omega: f64) -> Result<BoundConfiguration> {
    check(n, eps, omega)?;
    let (shifts, mid) = layout(n, eps);
    let nn = n as f64;
    let (spec, offset, lobe) = match family {
        BoundFamily::SineTranslate => (build_periodic_translates(omega, n, &shifts)?, 0.0, nn * PI / (2.0 * omega)),
        BoundFamily::SincTranslate => (build_sinc_translates(omega, n, &shifts)?, nn * PI / omega, 0.0),
    };
    let lo = offset + shifts[0] - 0.5 * eps;
    let hi = offset + shifts[n - 1] + 0.5 * eps;
    let domain = match family {
        BoundFamily::SineTranslate => (-nn * PI / omega, nn * PI / omega),
        BoundFamily::SincTranslate => default_domain(&spec, 0.5 * (lo + hi)),
    };
    Ok(BoundConfiguration { spec, region: (lo, hi), domain, lobe_location: lobe, midpoint: offset + mid })
}

/// Bounds `lower ≤ σ ≤ upper` for `N` factors with uniform spacing `eps`
/// and total bandlimit `omega`.
pub fn sigma_bounds(family: BoundFamily, n: usize, eps: f64, omega: f64) -> Result<SigmaBounds> {
    let cfg = bound_configuration(family, n, eps, omega)?;
    let w = omega / n as f64;
    let shifts: Vec<f64> = cfg.spec.factors().iter().map(|f| f.eps).collect();
    let factor = |x: f64| -> f64 {
        match family {
            BoundFamily::SineTranslate => math::sin(x).abs(),
            BoundFamily::SincTranslate => math::sinc(x).abs(),
        }
    };
    let spread = shifts.iter().fold(0.0f64, |m, e| m.max(e.abs())) * w;
    match family {
        BoundFamily::SineTranslate if spread >= 0.5 * PI => {
            return Err(Error::BoundRegime(format!("lobe estimate cos(Ω ε_n / N) is not positive for N={n}, ε={eps}")))
        }
        BoundFamily::SincTranslate if spread >= PI => {
            return Err(Error::BoundRegime(format!("lobe estimate sinc(Ω ε_n / N) is not positive for N={n}, ε={eps}")))
        }
        _ => {}
    }
    let at_lobe: Vec<f64> = shifts.iter().map(|e| factor(w * (cfg.lobe_location - e))).collect();
    let at_mid: Vec<f64> = shifts.iter().map(|e| factor(w * (cfg.midpoint - e))).collect();
    // every midpoint argument must stay on the monotone flank next to the zero
    let flank = shifts.iter().all(|e| {
        let x = w * (cfg.midpoint - e);
        match family {
            BoundFamily::SineTranslate => x.abs() < 0.5 * PI,
            BoundFamily::SincTranslate => (x - PI).abs() < 0.5 * PI,
        }
    });
    if !flank {
        return Err(Error::BoundRegime(format!("the cluster is too wide for the midpoint estimates (N={n}, ε={eps})")));
    }
    let c = at_lobe.iter().cloned().fold(f64::INFINITY, f64::min);
    let d = at_mid.iter().cloned().fold(0.0, f64::max);
    let b = at_mid.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(c > 0.0) || !(b > 0.0) || !(d > 0.0) {
        return Err(Error::BoundRegime(format!("a per-factor estimate vanishes (c={c}, d={d}, b={b})")));
    }
    let p = n as i32;
    let lobe_under = math::powi(c, p);
    let superosc_over = math::powi(d, p);
    let superosc_under = math::powi(b, p);
    let lobe_over = 1.0;
    let lower = lobe_under / superosc_over;
    let upper = lobe_over / superosc_under;
    if !lower.is_finite() || !upper.is_finite() || lower > upper {
        return Err(Error::BoundRegime(format!("bounds are not usable: lower={lower}, upper={upper}")));
    }
    Ok(SigmaBounds {
        lower,
        upper,
        lobe_under,
        lobe_over,
        superosc_over,
        superosc_under,
        lobe_location: cfg.lobe_location,
        midpoint: cfg.midpoint,
    })
}
