use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::signal::{HarmonicSum, ProductSignalSpec};

/// Default sufficient-lift margin as a fraction of `max ψ - min ψ`.
pub const LIFT_MARGIN: f64 = 1e-3;

/// `ψ + C` for a periodic `ψ` given by its harmonics.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LiftedWavefunction {
    pub psi: HarmonicSum,
    pub lift: f64,
    pub period: f64,
}

impl LiftedWavefunction {
    pub fn new(psi: HarmonicSum, lift: f64) -> Result<Self> {
        if !lift.is_finite() {
            return Err(Error::InvalidParameter(format!("lift must be finite, got {lift}")));
        }
        let period = psi.period();
        Ok(Self { psi, lift, period })
    }

    /// Expands a periodic product first.
    pub fn from_spec(spec: &ProductSignalSpec, lift: f64) -> Result<Self> {
        Self::new(spec.expand_to_harmonics()?, lift)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.psi.eval(x) + self.lift
    }

    /// Same function with `(ψ, C)` replaced by `(-ψ, -C)`.
    pub fn mirrored(&self) -> Self {
        Self { psi: self.psi.negated(), lift: -self.lift, period: self.period }
    }

    /// `C_crit + margin` for `sign > 0`, `-max ψ - margin` otherwise, with the
    /// default margin.
    pub fn sufficient(psi: HarmonicSum, sign: f64, resolution: usize) -> Result<Self> {
        let c = critical_lift(&psi, resolution);
        let margin = LIFT_MARGIN * (c.max - c.min);
        let lift = if sign >= 0.0 { c.positive + margin } else { c.negative - margin };
        Self::new(psi, lift)
    }
}

/// Extremes of `ψ` over one period and the lifts that just touch them.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriticalLift {
    /// `-min ψ`: the smallest positive lift keeping `ψ + C ≥ 0`.
    pub positive: f64,
    /// `-max ψ`: the largest negative lift keeping `ψ + C ≤ 0`.
    pub negative: f64,
    pub min: f64,
    pub argmin: f64,
    pub max: f64,
    pub argmax: f64,
}

/// Newton on `ψ'` from `x0`, kept inside `[x0 - h, x0 + h]`.
fn polish(psi: &HarmonicSum, x0: f64, h: f64) -> f64 {
    let mut x = x0;
    for _ in 0..50 {
        let d2 = psi.second_derivative(x);
        if d2 == 0.0 {
            break;
        }
        let step = psi.derivative(x) / d2;
        let next = (x - step).clamp(x0 - h, x0 + h);
        if (next - x).abs() <= 1e-15 * (1.0 + x.abs()) {
            x = next;
            break;
        }
        x = next;
    }
    x
}

/// Every discrete local extremum of `ψ` on an `n`-point periodic grid,
/// refined by a parabolic step and Newton on `ψ'`. Returns `(x, ψ(x))`
/// pairs, minima and maxima mixed.
pub(crate) fn refined_extrema(psi: &HarmonicSum, n: usize) -> Vec<(f64, f64)> {
    let n = n.max(16);
    let t = psi.period();
    let h = t / n as f64;
    let v: Vec<f64> = (0..n).map(|k| psi.eval(k as f64 * h)).collect();
    let mut out = Vec::new();
    for k in 0..n {
        let (l, c, r) = (v[(k + n - 1) % n], v[k], v[(k + 1) % n]);
        let is_min = c <= l && c < r;
        let is_max = c >= l && c > r;
        if !is_min && !is_max {
            continue;
        }
        let mut x = k as f64 * h;
        if let Some((off, _)) = math::parabolic_vertex(l, c, r) {
            x += off * h;
        }
        let x = polish(psi, x, h);
        let y = psi.eval(x);
        // keep the grid value if refinement wandered the wrong way
        let better = if is_min { y <= c } else { y >= c };
        out.push(if better { (x, y) } else { (k as f64 * h, c) });
    }
    out
}

/// `C_crit = -min ψ` and the mirrored `-max ψ`, from a dense scan of
/// `resolution` points with local refinement.
pub fn critical_lift(psi: &HarmonicSum, resolution: usize) -> CriticalLift {
    let ext = refined_extrema(psi, resolution);
    let (mut min, mut argmin, mut max, mut argmax) = (f64::INFINITY, 0.0, f64::NEG_INFINITY, 0.0);
    for &(x, y) in &ext {
        if y < min {
            min = y;
            argmin = x;
        }
        if y > max {
            max = y;
            argmax = x;
        }
    }
    if ext.is_empty() {
        // constant
        let c = psi.eval(0.0);
        return CriticalLift { positive: -c, negative: -c, min: c, argmin: 0.0, max: c, argmax: 0.0 };
    }
    let t = psi.period();
    CriticalLift {
        positive: -min,
        negative: -max,
        min,
        argmin: math::wrap(argmin, t),
        max,
        argmax: math::wrap(argmax, t),
    }
}

/// Termwise `ψ''`.
pub fn second_derivative(psi: &HarmonicSum, x: f64) -> f64 {
    psi.second_derivative(x)
}

/// `ψ''` of a product, which must expand into harmonics.
pub fn second_derivative_of_spec(spec: &ProductSignalSpec, x: f64) -> Result<f64> {
    let h = spec.expand_to_harmonics().map_err(|e| match e {
        Error::NotExpandable(m) | Error::Incommensurate(m) => {
            Error::NotExpandable(format!("expand the product into harmonics first: {m}"))
        }
        other => other,
    })?;
    Ok(h.second_derivative(x))
}
