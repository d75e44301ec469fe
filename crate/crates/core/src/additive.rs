//! The conventional additive construction: the minimum-energy bandlimited
//! function through prescribed points.
//!
//! With a positive definite kernel `K` (the sinc for square-integrable
//! signals, the normalized Dirichlet kernel for periodic ones) the
//! interpolant is `Σ c_j K(t - t_j)` with `G c = a`, `G_jk = K(t_j - t_k)`.
//! `G` becomes severely ill-conditioned as the points crowd together, so
//! the solve runs at a caller-chosen precision.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Dense;
use crate::math::{self, PI};
use crate::scalar::{self, Field, Precision, Wide};

/// Normalized Dirichlet kernel `D_M(t) = sin((M+½)t) / ((2M+1) sin(t/2))`,
/// `2π`-periodic with `D_M(0) = 1`.
pub fn dirichlet_kernel(m: u32, t: f64) -> f64 {
    let half = math::sin(0.5 * t);
    let order = 2.0 * m as f64 + 1.0;
    if half.abs() < 1e-8 {
        // near t = 2πk, fall back on the cosine sum
        let mut s = 1.0;
        for k in 1..=m {
            s += 2.0 * math::cos(k as f64 * t);
        }
        return s / order;
    }
    math::sin((m as f64 + 0.5) * t) / (order * half)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "lowercase"))]
pub enum Kernel {
    /// `sinc(Ω t)`, bandlimit `Ω`.
    Sinc { omega: f64 },
    /// `D_M(2π t / T)`: harmonics of `2π/T` up to `M`.
    Dirichlet { order: u32, period: f64 },
}

impl Kernel {
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            Kernel::Sinc { omega } => math::sinc(omega * t),
            Kernel::Dirichlet { order, period } => dirichlet_kernel(order, 2.0 * PI * t / period),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Sinc { .. } => "sinc",
            Kernel::Dirichlet { .. } => "dirichlet",
        }
    }

    /// The bandlimit for sinc, the order `M` for Dirichlet.
    pub fn omega_or_order(&self) -> f64 {
        match *self {
            Kernel::Sinc { omega } => omega,
            Kernel::Dirichlet { order, .. } => order as f64,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Kernel::Sinc { omega } if !(omega > 0.0) || !omega.is_finite() => {
                Err(Error::InvalidParameter(format!("sinc bandlimit must be positive, got {omega}")))
            }
            Kernel::Dirichlet { period, .. } if !(period > 0.0) || !period.is_finite() => {
                Err(Error::InvalidParameter(format!("Dirichlet period must be positive, got {period}")))
            }
            _ => Ok(()),
        }
    }

    fn eval_wide(&self, dt: &Wide, pi: &Wide, cc: &mut astro_float::Consts) -> Wide {
        if dt.is_zero() {
            return dt.like(1.0);
        }
        match *self {
            Kernel::Sinc { omega } => {
                let x = dt.mul(&dt.like(omega));
                x.sin(cc).div(&x)
            }
            Kernel::Dirichlet { order, period } => {
                let u = dt.mul(&pi.mul(&pi.like(2.0))).div(&dt.like(period));
                let num = u.mul(&u.like(order as f64 + 0.5)).sin(cc);
                let den = u.mul(&u.like(0.5)).sin(cc).mul(&u.like(2.0 * order as f64 + 1.0));
                num.div(&den)
            }
        }
    }
}

/// Prescribed `(t_j, a_j)` pairs, sorted by `t` and pairwise distinct.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstraintSet {
    points: Vec<(f64, f64)>,
}

impl ConstraintSet {
    pub fn new(mut points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter("constraint set is empty".into()));
        }
        if points.iter().any(|(t, a)| !t.is_finite() || !a.is_finite()) {
            return Err(Error::InvalidParameter("constraint points must be finite".into()));
        }
        points.sort_by(|x, y| x.0.total_cmp(&y.0));
        if points.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter("constraint abscissae must be distinct".into()));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SolveStatus {
    Ok,
    /// The interpolation residual exceeds the tolerance; the solution is
    /// still returned.
    ResidualAboveTolerance,
}

/// Interpolation residual tolerance, relative to `max |a_j|`.
pub const RESIDUAL_RTOL: f64 = 1e-8;

/// The additive interpolant `Σ c_j K(t - t_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditiveSolution {
    pub kernel: Kernel,
    pub centers: Vec<f64>,
    pub coeffs: Vec<f64>,
    /// 2-norm condition number `λ_max / λ_min` of the Gram matrix.
    pub condition_number: f64,
    /// `max_k |Σ_j c_j G_kj - a_k|` evaluated at working precision.
    pub residual: f64,
    pub precision_bits: u32,
    pub status: SolveStatus,
}

impl AdditiveSolution {
    pub fn eval(&self, t: f64) -> f64 {
        // Neumaier summation: the coefficients alternate and can be large
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (c, tj) in self.coeffs.iter().zip(&self.centers) {
            let x = c * self.kernel.eval(t - tj);
            let s = sum + x;
            if sum.abs() >= x.abs() {
                comp += (sum - s) + x;
            } else {
                comp += (x - s) + sum;
            }
            sum = s;
        }
        sum + comp
    }

    /// The quadratic form `cᵀ G c`, proportional to the interpolant's
    /// squared norm in the kernel's native space.
    pub fn energy(&self) -> f64 {
        let n = self.centers.len();
        let mut e = 0.0;
        for i in 0..n {
            for j in 0..n {
                e += self.coeffs[i] * self.coeffs[j] * self.kernel.eval(self.centers[i] - self.centers[j]);
            }
        }
        e
    }
}

impl crate::signal::Signal for AdditiveSolution {
    fn value(&self, t: f64) -> f64 {
        self.eval(t)
    }
}

/// Solves for the minimum-energy interpolant through `c`.
pub fn min_energy_interpolant(c: &ConstraintSet, kernel: Kernel, precision: Precision) -> Result<AdditiveSolution> {
    kernel.validate()?;
    match precision {
        Precision::Native => solve_native(c, kernel),
        Precision::Bits(bits) => {
            if !(54..=4096).contains(&bits) {
                return Err(Error::InvalidParameter(format!(
                    "extended precision must be between 54 and 4096 bits, got {bits}"
                )));
            }
            solve_wide(c, kernel, bits)
        }
    }
}

fn solve_native(c: &ConstraintSet, kernel: Kernel) -> Result<AdditiveSolution> {
    let pts = c.points();
    let gram = Dense::from_fn(pts.len(), |i, j| kernel.eval(pts[i].0 - pts[j].0));
    let a: Vec<f64> = pts.iter().map(|p| p.1).collect();
    finish(c, kernel, gram, a, 53, f64::EPSILON)
}

fn solve_wide(c: &ConstraintSet, kernel: Kernel, bits: u32) -> Result<AdditiveSolution> {
    let mut cc = scalar::consts()?;
    let pi = Wide::pi(bits, &mut cc);
    let pts = c.points();
    let ts: Vec<Wide> = pts.iter().map(|p| Wide::from_f64(p.0, bits)).collect();
    let n = pts.len();
    let mut entries: Vec<Wide> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            if j < i {
                entries.push(entries[j * n + i].clone());
            } else {
                entries.push(kernel.eval_wide(&ts[i].sub(&ts[j]), &pi, &mut cc));
            }
        }
    }
    let gram = Dense { n, a: entries };
    let a: Vec<Wide> = pts.iter().map(|p| Wide::from_f64(p.1, bits)).collect();
    finish(c, kernel, gram, a, bits, libm::ldexp(1.0, -(bits as i32)))
}

fn finish<T: Field>(
    c: &ConstraintSet,
    kernel: Kernel,
    gram: Dense<T>,
    a: Vec<T>,
    bits: u32,
    unit_roundoff: f64,
) -> Result<AdditiveSolution> {
    let ev = gram.symmetric_eigenvalues(unit_roundoff);
    let lo = ev[0].to_f64();
    let hi = ev[ev.len() - 1].to_f64();
    let condition = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    let factor = gram.cholesky().ok_or(Error::NotPositiveDefinite { precision_bits: bits, condition })?;
    let x = factor.cholesky_solve(&a);
    let back = gram.mul_vec(&x);
    let residual = back.iter().zip(&a).map(|(b, ak)| b.sub(ak).abs().to_f64()).fold(0.0, f64::max);
    let amax = c.points().iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    let status = if residual <= RESIDUAL_RTOL * amax.max(f64::MIN_POSITIVE) {
        SolveStatus::Ok
    } else {
        SolveStatus::ResidualAboveTolerance
    };
    Ok(AdditiveSolution {
        kernel,
        centers: c.points().iter().map(|p| p.0).collect(),
        coeffs: x.iter().map(Field::to_f64).collect(),
        condition_number: condition.max(1.0),
        residual,
        precision_bits: bits,
        status,
    })
}
