//! Multiplicative against additive: the same zeros, two constructions.

use alloc::vec::Vec;

use crate::additive::{min_energy_interpolant, AdditiveSolution, ConstraintSet, Kernel};
use crate::analysis::dynamic_range::{dynamic_range, dynamic_range_on, DynamicRangeReport};
use crate::error::{Error, Result};
use crate::math::PI;
use crate::scalar::Precision;
use crate::signal::{FactorKind, ProductSignalSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct MethodComparison {
    pub multiplicative: DynamicRangeReport,
    pub additive: DynamicRangeReport,
    pub solution: AdditiveSolution,
    pub constraints: ConstraintSet,
}

impl MethodComparison {
    /// `σ_multiplicative / σ_additive`.
    pub fn ratio(&self) -> f64 {
        self.multiplicative.sigma / self.additive.sigma
    }
}

/// Kernel with the product's band: Dirichlet over one period for sine
/// products, `sinc(Ω t)` for sinc products.
pub fn matched_kernel(spec: &ProductSignalSpec) -> Result<Kernel> {
    if let Some(period) = spec.period() {
        let order = libm::round(spec.bandlimit() * period / (2.0 * PI));
        return Ok(Kernel::Dirichlet { order: order as u32, period });
    }
    if spec.all_sinc() {
        return Ok(Kernel::Sinc { omega: spec.bandlimit() });
    }
    Err(Error::InvalidParameter("comparison needs a periodic sine product or an all-sinc product".into()))
}

/// The product's constructed zeros (each shift for sine factors, both
/// nearest lattice zeros for sinc factors) plus the product's value at its
/// global peak.
pub fn matched_constraints(spec: &ProductSignalSpec, peak: f64) -> Result<ConstraintSet> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for f in spec.factors() {
        match f.kind {
            FactorKind::Sine => pts.push((f.eps, 0.0)),
            FactorKind::Sinc => {
                pts.push((f.eps - f.zero_spacing(), 0.0));
                pts.push((f.eps + f.zero_spacing(), 0.0));
            }
        }
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() <= 1e-15 * a.0.abs().max(1.0));
    if pts.iter().any(|p| (p.0 - peak).abs() <= 1e-12) {
        return Err(Error::InvalidParameter("product peak coincides with a prescribed zero".into()));
    }
    pts.push((peak, spec.eval(peak)));
    ConstraintSet::new(pts)
}

/// Measures `σ` for the product and for the minimum-energy interpolant
/// through its matched constraints, on the same region and domain.
pub fn compare_methods(
    spec: &ProductSignalSpec,
    region: Option<(f64, f64)>,
    precision: Precision,
    resolution: usize,
) -> Result<MethodComparison> {
    let kernel = matched_kernel(spec)?;
    let multiplicative = dynamic_range(spec, region, resolution)?;
    let constraints = matched_constraints(spec, multiplicative.global_argmax)?;
    let solution = min_energy_interpolant(&constraints, kernel, precision)?;
    let additive = dynamic_range_on(&solution, multiplicative.domain, multiplicative.region, resolution)?;
    Ok(MethodComparison { multiplicative, additive, solution, constraints })
}
