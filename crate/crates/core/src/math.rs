//! Scalar helpers over `libm`, since `core` has no float transcendentals.

pub use core::f64::consts::PI;

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

/// Below this |x| the series branch of `sinc` is used.
pub const SINC_SERIES_CUTOFF: f64 = 1e-4;

/// `sin(x)/x` with the removable singularity filled in.
#[inline]
pub fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_SERIES_CUTOFF {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        sin(x) / x
    }
}

/// Reduces `x` into `[0, period)`.
#[inline]
pub fn wrap(x: f64, period: f64) -> f64 {
    let r = x - period * libm::floor(x / period);
    if r >= period {
        0.0
    } else {
        r
    }
}

/// Vertex of the parabola through three equally spaced samples, as an
/// offset in units of the spacing from the middle sample, plus its value.
pub fn parabolic_vertex(ym: f64, y0: f64, yp: f64) -> Option<(f64, f64)> {
    let denom = ym - 2.0 * y0 + yp;
    if denom == 0.0 {
        return None;
    }
    let off = 0.5 * (ym - yp) / denom;
    if !(-1.0..=1.0).contains(&off) {
        return None;
    }
    let val = y0 - 0.25 * (ym - yp) * off;
    Some((off, val))
}

/// Golden-section maximization of `f` on `[a, b]`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
