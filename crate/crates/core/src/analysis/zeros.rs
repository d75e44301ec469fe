//! Zero extraction by scan and bisection.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::PI;
use crate::signal::Signal;

pub const DEFAULT_ZERO_TOL: f64 = 1e-12;

/// Touch candidates must dip below this fraction of the scan's max `|S|`.
const TOUCH_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ZeroSet {
    /// Sign-change zeros, strictly increasing.
    pub zeros: Vec<f64>,
    pub tol: f64,
    /// Even-multiplicity touches: local minima of `|S|` with no sign change.
    pub touch_candidates: Vec<f64>,
}

fn bisect<S: Signal + ?Sized>(f: &S, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f.value(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn golden_min_abs<S: Signal + ?Sized>(f: &S, a: f64, b: f64) -> (f64, f64) {
    let (x, v) = crate::math::golden_max(|t| -f.value(t).abs(), a, b, 1e-14 * (1.0 + a.abs().max(b.abs())));
    (x, -v)
}

/// All sign changes of `f` on `[lo, hi]`, scanned at step `scan_dt` and
/// refined by bisection to width `tol`.
pub fn find_zeros<S: Signal + ?Sized>(f: &S, lo: f64, hi: f64, scan_dt: f64, tol: f64) -> Result<ZeroSet> {
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidParameter(format!("bad zero search range [{lo}, {hi}]")));
    }
    if !(scan_dt > 0.0) || !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("scan step and tolerance must be positive, got {scan_dt}, {tol}")));
    }
    let n = libm::ceil((hi - lo) / scan_dt) as usize;
    let step = (hi - lo) / n as f64;
    let ts: Vec<f64> = (0..=n).map(|k| if k == n { hi } else { lo + k as f64 * step }).collect();
    let vs: Vec<f64> = ts.iter().map(|&t| f.value(t)).collect();
    let peak = vs.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut zeros: Vec<f64> = Vec::new();
    for k in 0..=n {
        if vs[k] == 0.0 {
            zeros.push(ts[k]);
        } else if k < n && vs[k + 1] != 0.0 && (vs[k] < 0.0) != (vs[k + 1] < 0.0) {
            zeros.push(bisect(f, ts[k], ts[k + 1], vs[k], tol));
        }
    }
    zeros.dedup_by(|b, a| *b - *a <= tol);

    let mut touch_candidates = Vec::new();
    for k in 1..n {
        let (l, c, r) = (vs[k - 1], vs[k], vs[k + 1]);
        if c == 0.0 || l == 0.0 || r == 0.0 {
            continue;
        }
        let same_sign = (l < 0.0) == (c < 0.0) && (c < 0.0) == (r < 0.0);
        if same_sign && c.abs() <= l.abs() && c.abs() <= r.abs() {
            let (x, v) = golden_min_abs(f, ts[k - 1], ts[k + 1]);
            if v <= TOUCH_RTOL * peak {
                touch_candidates.push(x);
            }
        }
    }
    touch_candidates.dedup_by(|b, a| *b - *a <= tol);
    Ok(ZeroSet { zeros, tol, touch_candidates })
}

/// `(midpoint, π / spacing)` for each adjacent pair of zeros.
pub fn local_frequencies(z: &ZeroSet) -> Result<Vec<(f64, f64)>> {
    if z.zeros.len() < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 zeros, got {}", z.zeros.len())));
    }
    Ok(z.zeros.windows(2).map(|w| (0.5 * (w[0] + w[1]), PI / (w[1] - w[0]))).collect())
}
