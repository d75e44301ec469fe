//! Dynamic range: the ratio of the largest `|S|` anywhere to the largest
//! `|S|` inside the superoscillating stretch.

use alloc::format;

use crate::error::{Error, Result};
use crate::math;
use crate::signal::{ProductSignalSpec, Signal};

/// Scan points per interval before refinement.
pub const DEFAULT_RESOLUTION: usize = 20_000;

/// Lattice spacings on each side of the shifts covered by the sinc domain.
const SINC_DOMAIN_SPACINGS: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DynamicRangeReport {
    pub sigma: f64,
    pub global_max_abs: f64,
    pub global_argmax: f64,
    pub superosc_max_abs: f64,
    pub superosc_argmax: f64,
    pub region: (f64, f64),
    pub domain: (f64, f64),
    pub lower_bound: Option<f64>,
    pub upper_bound: Option<f64>,
    /// Set when the region holds a global maximum; `sigma` is then 1.
    pub region_covers_maximum: bool,
}

impl DynamicRangeReport {
    pub fn with_bounds(mut self, lower: f64, upper: f64) -> Self {
        self.lower_bound = Some(lower);
        self.upper_bound = Some(upper);
        self
    }

    /// True when no bounds are attached or `lower ≤ σ ≤ upper`.
    pub fn within_bounds(&self) -> bool {
        self.lower_bound.is_none_or(|l| l <= self.sigma) && self.upper_bound.is_none_or(|u| self.sigma <= u)
    }
}

/// `[min z - ε/2, max z + ε/2]` over the prescribed zeros, with `ε` their
/// smallest adjacent spacing.
pub fn default_region(spec: &ProductSignalSpec) -> Result<(f64, f64)> {
    let z = spec.prescribed_zeros();
    if z.len() < 2 {
        return Err(Error::InvalidParameter("default region needs at least two distinct prescribed zeros".into()));
    }
    let eps = z.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    Ok((z[0] - 0.5 * eps, z[z.len() - 1] + 0.5 * eps))
}

/// One period centred on `center` for periodic products; otherwise a
/// symmetric window a few factor lattice spacings beyond the largest shift.
pub fn default_domain(spec: &ProductSignalSpec, center: f64) -> (f64, f64) {
    if let Some(t) = spec.period() {
        return (center - 0.5 * t, center + 0.5 * t);
    }
    let spacing = spec.factors().iter().map(|f| f.zero_spacing()).fold(0.0, f64::max);
    let shift = spec.factors().iter().map(|f| f.eps.abs()).fold(0.0, f64::max);
    let half = (shift + SINC_DOMAIN_SPACINGS * spacing).max(center.abs() + 0.5 * SINC_DOMAIN_SPACINGS * spacing);
    (-half, half)
}

/// Location and value of `max |f|` on `[a, b]`: dense scan, then golden
/// refinement around every sampled peak within half of the top sample.
fn max_abs<S: Signal + ?Sized>(f: &S, a: f64, b: f64, n: usize) -> (f64, f64) {
    let n = n.max(8);
    let h = (b - a) / n as f64;
    let t = |k: usize| if k == n { b } else { a + k as f64 * h };
    let v: alloc::vec::Vec<f64> = (0..=n).map(|k| f.value(t(k)).abs()).collect();
    let top = v.iter().cloned().fold(0.0, f64::max);
    let (mut best_t, mut best) = if v[0] >= v[n] { (a, v[0]) } else { (b, v[n]) };
    let tol = 1e-13 * (1.0 + a.abs().max(b.abs()));
    for k in 1..n {
        if v[k] >= v[k - 1] && v[k] >= v[k + 1] && v[k] >= 0.5 * top {
            let (x, fx) = math::golden_max(|s| f.value(s).abs(), t(k - 1), t(k + 1), tol);
            let (x, fx) = if fx >= v[k] { (x, fx) } else { (t(k), v[k]) };
            if fx > best {
                best = fx;
                best_t = x;
            }
        }
    }
    (best_t, best)
}

/// Dynamic range of an arbitrary signal over `domain` against `region`.
pub fn dynamic_range_on<S: Signal + ?Sized>(
    f: &S,
    domain: (f64, f64),
    region: (f64, f64),
    resolution: usize,
) -> Result<DynamicRangeReport> {
    if !(region.1 > region.0) || !region.0.is_finite() || !region.1.is_finite() {
        return Err(Error::InvalidParameter(format!("empty region [{}, {}]", region.0, region.1)));
    }
    if !(domain.1 > domain.0) {
        return Err(Error::InvalidParameter(format!("empty domain [{}, {}]", domain.0, domain.1)));
    }
    let (rt, rmax) = max_abs(f, region.0, region.1, resolution);
    let (mut gt, mut gmax) = max_abs(f, domain.0, domain.1, resolution);
    if rmax > gmax {
        gmax = rmax;
        gt = rt;
    }
    if !(rmax > 0.0) {
        return Err(Error::InvalidParameter("signal vanishes on the whole region".into()));
    }
    let inside = gt >= region.0 && gt <= region.1;
    let covers = inside || rmax >= gmax * (1.0 - 1e-12);
    let sigma = if covers { 1.0 } else { gmax / rmax };
    Ok(DynamicRangeReport {
        sigma,
        global_max_abs: gmax,
        global_argmax: gt,
        superosc_max_abs: rmax,
        superosc_argmax: rt,
        region,
        domain,
        lower_bound: None,
        upper_bound: None,
        region_covers_maximum: covers,
    })
}

/// Dynamic range of a product; `region` defaults to [`default_region`] and
/// the domain to [`default_domain`].
pub fn dynamic_range(
    spec: &ProductSignalSpec,
    region: Option<(f64, f64)>,
    resolution: usize,
) -> Result<DynamicRangeReport> {
    let region = match region {
        Some(r) => r,
        None => default_region(spec)?,
    };
    let domain = default_domain(spec, 0.5 * (region.0 + region.1));
    dynamic_range_on(spec, domain, region, resolution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_periodic_translates, build_sinc_translates};
    use crate::math::PI;
    use crate::signal::{FactorSpec, FnSignal};
    use alloc::vec;

    #[test]
    fn whole_period_region_gives_unity() {
        let s = ProductSignalSpec::new(vec![FactorSpec::sine(1.0, 0.0).unwrap()]).unwrap();
        let r = dynamic_range(&s, Some((0.0, 2.0 * PI)), 1000).unwrap();
        assert_eq!(r.sigma, 1.0);
        assert!(r.region_covers_maximum);
        assert!((r.global_max_abs - 1.0).abs() < 1e-14);
    }

    #[test]
    fn refined_maximum_beats_the_grid() {
        let f = FnSignal(|t: f64| 1.0 - (t - 0.123_456_789) * (t - 0.123_456_789));
        let (x, v) = max_abs(&f, -1.0, 1.0, 10);
        assert!((x - 0.123_456_789).abs() < 1e-7 && (v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn default_region_spans_zeros() {
        let s = build_periodic_translates(PI, 3, &[-0.1, 0.0, 0.1]).unwrap();
        let (a, b) = default_region(&s).unwrap();
        assert!((a + 0.15).abs() < 1e-15 && (b - 0.15).abs() < 1e-15);
        let single = build_periodic_translates(PI, 1, &[0.0]).unwrap();
        assert!(default_region(&single).is_err());
    }

    #[test]
    fn periodic_build_superoscillates() {
        let s = build_periodic_translates(PI, 3, &[-0.1, 0.0, 0.1]).unwrap();
        let r = dynamic_range(&s, None, DEFAULT_RESOLUTION).unwrap();
        assert!(r.sigma > 100.0 && !r.region_covers_maximum);
        assert!((r.global_argmax.abs() - 1.5).abs() < 1e-6, "{}", r.global_argmax);
        let fine = dynamic_range(&s, None, 2 * DEFAULT_RESOLUTION).unwrap();
        assert!((fine.sigma - r.sigma).abs() < 1e-6 * r.sigma);
    }

    #[test]
    fn sinc_domain_is_symmetric_and_wide() {
        let s = build_sinc_translates(PI, 3, &[-0.1, 0.0, 0.1]).unwrap();
        let (a, b) = default_domain(&s, 3.0);
        assert_eq!(a, -b);
        assert!(b > 24.0);
        let r = dynamic_range(&s, None, DEFAULT_RESOLUTION).unwrap();
        assert!(r.global_argmax.abs() < 1e-6);
        assert!(r.region.0 > 2.8 && r.region.1 < 3.2);
    }
}
