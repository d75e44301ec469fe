//! Discrete spectra and bandlimit checks.
//!
//! Periodic signals get an exact one-period DFT. Sinc products are not
//! periodic, so they are tapered over a finite window and the out-of-band
//! energy that sits right next to the band edge is reported separately as
//! leakage.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::sampling::{sample_uniform, SampledSignal};
use crate::error::{Error, Result};
use crate::math::{self, PI};
use crate::signal::{FactorKind, ProductSignalSpec};

/// Frequencies with `|ω| ≤ Ω(1 + BAND_EDGE_RTOL)` count as in band.
pub const BAND_EDGE_RTOL: f64 = 1e-12;

/// Width of the guard band used for the leakage figure, in units of the
/// window's frequency resolution `2π/L`.
const LEAKAGE_GUARD_BINS: f64 = 4.0;

/// Points on `[-Ω, Ω]` for the reference convolution.
const REFERENCE_GRID: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum Taper {
    None,
    /// Tukey window: cosine ramps over a fraction `alpha` of the window.
    Tukey {
        alpha: f64,
    },
}

impl Taper {
    fn weight(&self, j: usize, n: usize) -> f64 {
        match *self {
            Taper::None => 1.0,
            Taper::Tukey { alpha } => {
                if alpha <= 0.0 || n < 2 {
                    return 1.0;
                }
                let u = j as f64 / (n - 1) as f64;
                let edge = u.min(1.0 - u);
                if edge < 0.5 * alpha {
                    0.5 * (1.0 - math::cos(2.0 * PI * edge / alpha))
                } else {
                    1.0
                }
            }
        }
    }
}

/// How to sample a signal for its spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumWindow {
    /// `samples` points over `[0, period)`.
    Periodic { period: f64, samples: usize },
    /// Grid `lo, lo + dt, ...` up to `hi`, weighted by `taper`.
    Windowed { lo: f64, hi: f64, dt: f64, taper: Taper },
}

impl SpectrumWindow {
    /// One exact period for periodic products, otherwise a tapered window
    /// wide enough for the product's decay.
    pub fn auto(spec: &ProductSignalSpec) -> Self {
        let omega = spec.bandlimit();
        if let Some(period) = spec.period() {
            let kmax = libm::ceil(omega * period / (2.0 * PI)) as usize;
            let samples = (4 * kmax + 4).max(64);
            return SpectrumWindow::Periodic { period, samples: samples + samples % 2 };
        }
        let spacing = spec.factors().iter().map(|f| f.zero_spacing()).fold(0.0, f64::max);
        let shift = spec.factors().iter().map(|f| f.eps.abs()).fold(0.0, f64::max);
        let half = libm::ceil(64.0 * spacing + shift);
        SpectrumWindow::Windowed { lo: -half, hi: half, dt: PI / (4.0 * omega), taper: Taper::Tukey { alpha: 0.5 } }
    }
}

/// Two-sided magnitude spectrum with the energy split at a declared band edge.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpectrumReport {
    /// Angular frequencies, ascending.
    pub frequencies: Vec<f64>,
    pub magnitudes: Vec<f64>,
    pub in_band_energy: f64,
    pub out_band_energy: f64,
    /// Signal energy on the analysis window, `dt Σ v²` (after tapering).
    pub total_energy: f64,
    /// Part of `out_band_energy` within a few bins of the band edge.
    pub leakage_energy: f64,
    /// Declared bandlimit.
    pub omega: f64,
    pub tolerance: Option<f64>,
    pub passed: Option<bool>,
    /// Largest deviation from the analytic spectrum relative to its peak,
    /// when one is available.
    pub reference_deviation: Option<f64>,
}

impl SpectrumReport {
    pub fn relative_out_of_band(&self) -> f64 {
        if self.total_energy > 0.0 {
            self.out_band_energy / self.total_energy
        } else {
            0.0
        }
    }
}

/// Two-sided DFT `Σ v_j e^{-2πi jk/n}` for `k` in `-⌊n/2⌋..=⌈n/2⌉-1`, ascending.
fn dft(values: &[f64]) -> Vec<(i64, f64, f64)> {
    let n = values.len();
    let twiddle: Vec<(f64, f64)> = (0..n)
        .map(|m| {
            let x = -2.0 * PI * m as f64 / n as f64;
            (math::cos(x), math::sin(x))
        })
        .collect();
    let lo = -((n / 2) as i64);
    (0..n as i64)
        .map(|i| {
            let k = lo + i;
            let kk = k.rem_euclid(n as i64) as usize;
            let (mut re, mut im) = (0.0, 0.0);
            for (j, v) in values.iter().enumerate() {
                let (c, s) = twiddle[(j * kk) % n];
                re += v * c;
                im += v * s;
            }
            (k, re, im)
        })
        .collect()
}

fn in_band(w: f64, omega: f64) -> bool {
    w.abs() <= omega * (1.0 + BAND_EDGE_RTOL)
}

/// Fourier coefficients `X_k = (1/n) Σ v_j e^{-2πi jk/n}` at `ω_k = 2πk/T`
/// of a grid covering exactly one period; energies split at `omega`.
pub fn periodic_spectrum(s: &SampledSignal, period: f64, omega: f64) -> Result<SpectrumReport> {
    let n = s.len();
    let covered = n as f64 * s.dt;
    if !(period > 0.0) || (covered - period).abs() > 1e-12 * period {
        return Err(Error::GridPeriodMismatch { covered, period });
    }
    let inv = 1.0 / n as f64;
    let mut frequencies = Vec::with_capacity(n);
    let mut magnitudes = Vec::with_capacity(n);
    let (mut e_in, mut e_out, mut leak) = (0.0, 0.0, 0.0);
    let guard = omega + LEAKAGE_GUARD_BINS * 2.0 * PI / period;
    for (k, re, im) in dft(&s.values) {
        let w = 2.0 * PI * k as f64 / period;
        let p = (re * re + im * im) * inv * inv;
        if in_band(w, omega) {
            e_in += period * p;
        } else {
            e_out += period * p;
            if w.abs() <= guard {
                leak += period * p;
            }
        }
        frequencies.push(w);
        magnitudes.push(math::sqrt(p));
    }
    let total = s.dt * s.values.iter().map(|v| v * v).sum::<f64>();
    Ok(SpectrumReport {
        frequencies,
        magnitudes,
        in_band_energy: e_in,
        out_band_energy: e_out,
        total_energy: total,
        leakage_energy: leak,
        omega,
        tolerance: None,
        passed: None,
        reference_deviation: None,
    })
}

/// Continuous-transform approximation `X(ω_k) = dt Σ w_j v_j e^{-iω_k t_j}`
/// on the DFT frequencies of a tapered window.
pub fn windowed_spectrum(s: &SampledSignal, omega: f64, taper: Taper) -> SpectrumReport {
    let n = s.len();
    let y: Vec<f64> = s.values.iter().enumerate().map(|(j, v)| v * taper.weight(j, n)).collect();
    let length = n as f64 * s.dt;
    let dw = 2.0 * PI / length;
    let guard = omega + LEAKAGE_GUARD_BINS * dw;
    let mut frequencies = Vec::with_capacity(n);
    let mut magnitudes = Vec::with_capacity(n);
    let (mut e_in, mut e_out, mut leak) = (0.0, 0.0, 0.0);
    for (k, re, im) in dft(&y) {
        let w = k as f64 * dw;
        let p = (re * re + im * im) * s.dt * s.dt;
        // Parseval: dt Σ y² = (Δω / 2π) Σ |X_k|²
        let e = p / length;
        if in_band(w, omega) {
            e_in += e;
        } else {
            e_out += e;
            if w.abs() <= guard {
                leak += e;
            }
        }
        frequencies.push(w);
        magnitudes.push(math::sqrt(p));
    }
    let total = s.dt * y.iter().map(|v| v * v).sum::<f64>();
    SpectrumReport {
        frequencies,
        magnitudes,
        in_band_energy: e_in,
        out_band_energy: e_out,
        total_energy: total,
        leakage_energy: leak,
        omega,
        tolerance: None,
        passed: None,
        reference_deviation: None,
    }
}

/// Samples `spec` per `window`, computes its spectrum and checks that the
/// relative out-of-band energy is at most `tol`.
pub fn verify_bandlimit(spec: &ProductSignalSpec, tol: f64, window: SpectrumWindow) -> Result<SpectrumReport> {
    let omega = spec.bandlimit();
    let mut report = match window {
        SpectrumWindow::Periodic { period, samples } => {
            let s = sample_uniform(spec, 0.0, period / samples as f64, samples)?;
            periodic_spectrum(&s, period, omega)?
        }
        SpectrumWindow::Windowed { lo, hi, dt, taper } => {
            if !(hi > lo) || !(dt > 0.0) {
                return Err(Error::InvalidParameter(format!("bad window [{lo}, {hi}] with dt {dt}")));
            }
            let n = libm::floor((hi - lo) / dt + 1e-9) as usize + 1;
            let s = sample_uniform(spec, lo, dt, n)?;
            let mut r = windowed_spectrum(&s, omega, taper);
            if spec.all_sinc() {
                let reference = analytic_sinc_spectrum(spec, &r.frequencies);
                let peak = reference.iter().cloned().fold(0.0, f64::max);
                let dev = r.magnitudes.iter().zip(&reference).map(|(m, f)| (m - f).abs()).fold(0.0, f64::max);
                r.reference_deviation = Some(if peak > 0.0 { dev / peak } else { dev });
            }
            r
        }
    };
    report.tolerance = Some(tol);
    report.passed = Some(report.relative_out_of_band() <= tol);
    Ok(report)
}

#[derive(Clone, Copy)]
struct C(f64, f64);

impl C {
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    fn scale(self, s: f64) -> C {
        C(self.0 * s, self.1 * s)
    }
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn cis(x: f64) -> C {
        C(math::cos(x), math::sin(x))
    }
    fn abs(self) -> f64 {
        libm::hypot(self.0, self.1)
    }
}

/// `|F(ω)|` for an all-sinc product, where each factor contributes the
/// phase-shifted rectangle `(π/Ω_i) e^{-iωε_i}` on `|ω| < Ω_i` and the
/// product's transform is their convolution divided by `(2π)^{N-1}`. The
/// convolution is carried out numerically on a fine grid over `[-Ω, Ω]`;
/// outside that interval the result is exactly zero.
pub fn analytic_sinc_spectrum(spec: &ProductSignalSpec, omegas: &[f64]) -> Vec<f64> {
    let sincs: Vec<_> = spec.factors().iter().filter(|f| f.kind == FactorKind::Sinc).collect();
    let big = spec.bandlimit();
    let m = REFERENCE_GRID;
    let delta = 2.0 * big / m as f64;
    let nu = |j: usize| -big + j as f64 * delta;
    let first = sincs[0];
    let mut f: Vec<C> = (0..=m)
        .map(|j| {
            let w = nu(j);
            let h = if w.abs() < first.omega {
                1.0
            } else if w.abs() == first.omega {
                0.5
            } else {
                0.0
            };
            C::cis(-w * first.eps).scale(h * PI / first.omega * first.sign as f64)
        })
        .collect();
    for fac in &sincs[1..] {
        // G(ω) = e^{-iωε}/(2Ω_i) ∫_{ω-Ω_i}^{ω+Ω_i} F(ν) e^{iνε} dν
        let h: Vec<C> = (0..=m).map(|j| f[j].mul(C::cis(nu(j) * fac.eps))).collect();
        let mut cum = vec![C(0.0, 0.0); m + 1];
        for j in 1..=m {
            cum[j] = cum[j - 1].add(h[j - 1].add(h[j]).scale(0.5 * delta));
        }
        let prim = |x: f64| -> C {
            if x <= -big {
                return C(0.0, 0.0);
            }
            if x >= big {
                return cum[m];
            }
            let u = (x + big) / delta;
            let j = (libm::floor(u) as usize).min(m - 1);
            let r = x - nu(j);
            let slope = h[j + 1].sub(h[j]).scale(1.0 / delta);
            cum[j].add(h[j].scale(r)).add(slope.scale(0.5 * r * r))
        };
        let scale = 0.5 / fac.omega * fac.sign as f64;
        f = (0..=m)
            .map(|j| {
                let w = nu(j);
                let integral = prim(w + fac.omega).sub(prim(w - fac.omega));
                C::cis(-w * fac.eps).mul(integral).scale(scale)
            })
            .collect();
    }
    omegas
        .iter()
        .map(|&w| {
            if w.abs() > big {
                return 0.0;
            }
            let u = (w + big) / delta;
            let j = (libm::floor(u) as usize).min(m - 1);
            let r = u - j as f64;
            f[j].scale(1.0 - r).add(f[j + 1].scale(r)).abs()
        })
        .collect()
}
