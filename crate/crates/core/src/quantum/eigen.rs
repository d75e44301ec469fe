//! Lowest eigenpair of the periodic finite-difference Hamiltonian
//! `H = -D₂ + diag(V)`.
//!
//! `H` is cyclic tridiagonal. Its eigenvalue count below a shift comes
//! from the inertia of an `LDLᵀ` factorization that carries the corner
//! entry as a spike in the last row, so the lowest eigenvalue is found by
//! bisection and the vector by inverse iteration with the same factors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::potential::PotentialSpec;
use crate::error::{Error, Result};
use crate::math;

/// Smallest grid accepted by [`solve_ground_state`].
pub const MIN_GRID: usize = 128;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EigenReport {
    #[cfg_attr(feature = "serde", serde(rename = "E0"))]
    pub e0: f64,
    pub node_count: usize,
    pub overlap: f64,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    pub lift: f64,
    /// `‖H v - E₀ v‖₂` for the unit vector `v`.
    pub residual: f64,
    pub x: Vec<f64>,
    pub psi_lifted: Vec<f64>,
    /// Unit 2-norm, oriented so its sum is non-negative.
    pub ground_vec: Vec<f64>,
}

/// `LDLᵀ` of the cyclic tridiagonal matrix with diagonal `a`, off-diagonal
/// `e` (`e[k]` couples `k` and `k+1`) and corner `e[n-1]` coupling `n-1`
/// and `0`. `g` holds the last row of `L` (the spike).
struct CyclicLdl {
    d: Vec<f64>,
    l: Vec<f64>,
    g: Vec<f64>,
}

impl CyclicLdl {
    fn new(a: &[f64], e: &[f64]) -> Self {
        let n = a.len();
        let tiny = math::sqrt(f64::MIN_POSITIVE);
        let guard = |x: f64| if x == 0.0 { tiny } else { x };
        let mut d = vec![0.0; n];
        let mut l = vec![0.0; n];
        let mut g = vec![0.0; n];
        let mut diag = a[0];
        let mut spike = e[n - 1];
        let mut last = a[n - 1];
        for k in 0..n - 2 {
            d[k] = guard(diag);
            l[k] = e[k] / d[k];
            g[k] = spike / d[k];
            diag = a[k + 1] - e[k] * l[k];
            let next_spike = if k + 1 == n - 2 { e[n - 2] } else { 0.0 };
            last -= spike * g[k];
            spike = next_spike - e[k] * g[k];
        }
        d[n - 2] = guard(diag);
        g[n - 2] = spike / d[n - 2];
        last -= spike * g[n - 2];
        d[n - 1] = guard(last);
        Self { d, l, g }
    }

    fn negative_pivots(&self) -> usize {
        self.d.iter().filter(|&&x| x < 0.0).count()
    }

    fn solve(&self, y: &[f64]) -> Vec<f64> {
        let n = y.len();
        let mut z = y.to_vec();
        for k in 0..n - 2 {
            z[k + 1] -= self.l[k] * z[k];
        }
        let mut acc = z[n - 1];
        for k in 0..n - 1 {
            acc -= self.g[k] * z[k];
        }
        z[n - 1] = acc;
        for k in 0..n {
            z[k] /= self.d[k];
        }
        let xl = z[n - 1];
        z[n - 2] -= self.g[n - 2] * xl;
        for k in (0..n - 2).rev() {
            z[k] = z[k] - self.l[k] * z[k + 1] - self.g[k] * xl;
        }
        z
    }
}

/// `H u` with `H = -D₂ + diag(V)` on a periodic grid of spacing `h`.
pub fn apply_hamiltonian(v: &[f64], h: f64, u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let inv = 1.0 / (h * h);
    (0..n)
        .map(|k| {
            let l = u[(k + n - 1) % n];
            let r = u[(k + 1) % n];
            (2.0 * u[k] - l - r) * inv + v[k] * u[k]
        })
        .collect()
}

/// Sign changes between consecutive nonzero entries, wrap pair included.
pub fn count_nodes(v: &[f64]) -> usize {
    let signs: Vec<bool> = v.iter().filter(|x| **x != 0.0).map(|x| *x > 0.0).collect();
    if signs.len() < 2 {
        return 0;
    }
    let m = signs.len();
    (0..m).filter(|&i| signs[i] != signs[(i + 1) % m]).count()
}

/// Extrapolates an `O(h²)` quantity from grids `n` and `2n`.
pub fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

fn norm(v: &[f64]) -> f64 {
    math::sqrt(v.iter().map(|x| x * x).sum())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Lowest eigenpair of the discretized Hamiltonian of `p`.
pub fn solve_ground_state(p: &PotentialSpec) -> Result<EigenReport> {
    p.require_regular()?;
    let n = p.n;
    if n < MIN_GRID {
        return Err(Error::InvalidParameter(format!("eigensolve needs n >= {MIN_GRID}, got {n}")));
    }
    if p.v.len() != n || p.v.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter("potential must hold n finite values".into()));
    }
    let h = p.h();
    let inv = 1.0 / (h * h);
    let e = vec![-inv; n];
    let shifted = |sigma: f64| -> CyclicLdl {
        let a: Vec<f64> = p.v.iter().map(|v| 2.0 * inv + v - sigma).collect();
        CyclicLdl::new(&a, &e)
    };

    // -D₂ is positive semidefinite, so λ₀ ≥ min V; the constant vector's
    // Rayleigh quotient gives λ₀ ≤ mean V.
    let mut lo = p.v.iter().cloned().fold(f64::INFINITY, f64::min);
    let mean = p.v.iter().sum::<f64>() / n as f64;
    let scale = p.sup_norm().max(1.0);
    let mut hi = mean + 1e-12 * scale;
    for _ in 0..200 {
        if hi - lo <= 4.0 * f64::EPSILON * scale {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if shifted(mid).negative_pivots() >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // inverse iteration just below λ₀
    let sigma = lo - 1e-10 * scale;
    let fac = shifted(sigma);
    let mut u = vec![1.0 / math::sqrt(n as f64); n];
    let mut e0 = 0.0;
    let mut residual = f64::INFINITY;
    let hnorm = 4.0 * inv + scale;
    for _ in 0..100 {
        let mut w = fac.solve(&u);
        let nw = norm(&w);
        w.iter_mut().for_each(|x| *x /= nw);
        u = w;
        let hu = apply_hamiltonian(&p.v, h, &u);
        e0 = dot(&u, &hu);
        residual = norm(&hu.iter().zip(&u).map(|(a, b)| a - e0 * b).collect::<Vec<_>>());
        if residual <= 1e-10 * hnorm {
            break;
        }
    }
    if !(residual <= 1e-8 * hnorm) {
        return Err(Error::NotConverged { residual });
    }
    if u.iter().sum::<f64>() < 0.0 {
        u.iter_mut().for_each(|x| *x = -*x);
    }
    let overlap = dot(&u, &p.psi_lifted).abs() / (norm(&u) * norm(&p.psi_lifted));
    Ok(EigenReport {
        e0,
        node_count: count_nodes(&u),
        overlap,
        n,
        lift: p.lift,
        residual,
        x: p.x.clone(),
        psi_lifted: p.psi_lifted.clone(),
        ground_vec: u,
    })
}
