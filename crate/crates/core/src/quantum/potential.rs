use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::lift::{refined_extrema, LiftedWavefunction};
use crate::error::{Error, Result};
use crate::math;

/// Gridpoints with `|ψ + C| < SINGULAR_RTOL · (max|ψ| + |C|)` are singular.
pub const SINGULAR_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PotentialStatus {
    Regular,
    /// `ψ + C` touches zero without changing sign (critical lift).
    Touching,
    /// `ψ + C` changes sign: the potential has unphysical divergences.
    CrossingSingularities,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Singularity {
    pub index: usize,
    pub x: f64,
    /// Whether the denominator changes sign here.
    pub sign_change: bool,
    /// `V` at the neighbouring gridpoints (periodic).
    pub left: f64,
    pub right: f64,
}

/// `V_k = ψ''(x_k) / (ψ(x_k) + C)` on `x_k = kT/n`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PotentialSpec {
    pub n: usize,
    pub period: f64,
    pub lift: f64,
    pub x: Vec<f64>,
    /// NaN where flagged singular.
    #[cfg_attr(feature = "serde", serde(with = "nan_as_null"))]
    pub v: Vec<f64>,
    pub psi_lifted: Vec<f64>,
    pub singular: Vec<bool>,
    pub singularities: Vec<Singularity>,
    pub status: PotentialStatus,
}

#[cfg(feature = "serde")]
mod nan_as_null {
    use alloc::vec::Vec;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| if x.is_finite() { Some(*x) } else { None }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        let raw: Vec<Option<f64>> = Vec::deserialize(d)?;
        Ok(raw.into_iter().map(|x| x.unwrap_or(f64::NAN)).collect())
    }
}

impl PotentialSpec {
    pub fn h(&self) -> f64 {
        self.period / self.n as f64
    }

    pub fn is_regular(&self) -> bool {
        self.status == PotentialStatus::Regular
    }

    /// `max |V|` over unflagged points.
    pub fn sup_norm(&self) -> f64 {
        self.v.iter().filter(|v| v.is_finite()).fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Error describing the flagged points, if any.
    pub fn require_regular(&self) -> Result<()> {
        match self.singularities.first() {
            None => Ok(()),
            Some(s) => Err(Error::SingularPotential { count: self.singularities.len(), first_x: s.x }),
        }
    }
}

/// Samples the potential of `w` on `n` gridpoints over one period and
/// flags every point where `ψ + C` vanishes or changes sign nearby.
pub fn build_potential(w: &LiftedWavefunction, n: usize) -> Result<PotentialSpec> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("potential grid needs at least 4 points, got {n}")));
    }
    let t = w.period;
    let h = t / n as f64;
    let x: Vec<f64> = (0..n).map(|k| k as f64 * h).collect();
    let psi: Vec<f64> = x.iter().map(|&xk| w.psi.eval(xk)).collect();
    let den: Vec<f64> = psi.iter().map(|p| p + w.lift).collect();
    let raw: Vec<f64> = x.iter().zip(&den).map(|(&xk, d)| w.psi.second_derivative(xk) / d).collect();

    let extrema = refined_extrema(&w.psi, n.max(1024));
    let psi_max = extrema.iter().map(|e| e.1.abs()).chain(psi.iter().map(|p| p.abs())).fold(0.0, f64::max);
    let scale = SINGULAR_RTOL * (psi_max + w.lift.abs());

    let mut flag = vec![false; n];
    let mut crossing = vec![false; n];
    for k in 0..n {
        if den[k].abs() < scale {
            flag[k] = true;
            let (l, r) = (den[(k + n - 1) % n], den[(k + 1) % n]);
            crossing[k] = (l < 0.0) != (r < 0.0);
        }
    }
    // sign changes strictly between gridpoints
    for k in 0..n {
        let j = (k + 1) % n;
        if flag[k] || flag[j] {
            continue;
        }
        if (den[k] < 0.0) != (den[j] < 0.0) {
            let m = if den[k].abs() <= den[j].abs() { k } else { j };
            flag[m] = true;
            crossing[m] = true;
        }
    }
    // an off-grid extremum of ψ dipping across -C inside one cell, or touching it
    for &(xe, ye) in &extrema {
        let d = ye + w.lift;
        let m = (libm::round(math::wrap(xe, t) / h) as usize) % n;
        if flag[m] {
            continue;
        }
        if d.abs() < scale {
            flag[m] = true;
        } else if (d < 0.0) != (den[m] < 0.0) {
            flag[m] = true;
            crossing[m] = true;
        }
    }

    let mut singularities = Vec::new();
    let mut v = raw.clone();
    for k in 0..n {
        if flag[k] {
            v[k] = f64::NAN;
            singularities.push(Singularity {
                index: k,
                x: x[k],
                sign_change: crossing[k],
                left: raw[(k + n - 1) % n],
                right: raw[(k + 1) % n],
            });
        }
    }
    let status = if singularities.iter().any(|s| s.sign_change) {
        PotentialStatus::CrossingSingularities
    } else if singularities.is_empty() {
        PotentialStatus::Regular
    } else {
        PotentialStatus::Touching
    };
    Ok(PotentialSpec { n, period: t, lift: w.lift, x, v, psi_lifted: den, singular: flag, singularities, status })
}

/// Strict local extrema of `V` inside and outside a region, and their
/// densities per unit length.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OscillationReport {
    pub extrema_in: usize,
    pub extrema_out: usize,
    pub length_in: f64,
    pub length_out: f64,
    pub density_in: f64,
    pub density_out: f64,
}

impl OscillationReport {
    /// `density_in / density_out`; infinite when nothing lies outside.
    pub fn ratio(&self) -> f64 {
        if self.density_out > 0.0 {
            self.density_in / self.density_out
        } else {
            f64::INFINITY
        }
    }
}

/// Counts strict local extrema of `V` (periodic neighbours) with `x`
/// inside `region` taken modulo the period, versus outside.
pub fn potential_oscillation_report(p: &PotentialSpec, region: (f64, f64)) -> Result<OscillationReport> {
    p.require_regular()?;
    let (a, b) = region;
    let t = p.period;
    if !(b > a) || b - a >= t {
        return Err(Error::InvalidParameter(format!(
            "region [{a}, {b}] must be nonempty and shorter than the period {t}"
        )));
    }
    let n = p.n;
    let (mut cin, mut cout) = (0usize, 0usize);
    for k in 0..n {
        let (l, c, r) = (p.v[(k + n - 1) % n], p.v[k], p.v[(k + 1) % n]);
        if (c > l && c > r) || (c < l && c < r) {
            if math::wrap(p.x[k] - a, t) < b - a {
                cin += 1;
            } else {
                cout += 1;
            }
        }
    }
    let length_in = b - a;
    let length_out = t - length_in;
    Ok(OscillationReport {
        extrema_in: cin,
        extrema_out: cout,
        length_in,
        length_out,
        density_in: cin as f64 / length_in,
        density_out: cout as f64 / length_out,
    })
}
