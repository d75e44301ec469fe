//! Factor and product signal representations.
//!
//! A product signal is `S(t) = Π b_i(t)` where every factor is either
//! `±sin(Ω_i (t - ε_i))` or `±sinc(Ω_i (t - ε_i))` with `sinc(x) = sin(x)/x`.
//! The product is bandlimited to `Σ Ω_i` and vanishes wherever any factor
//! does.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{self, PI};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum FactorKind {
    Sine,
    Sinc,
}

/// One bandlimited factor `sign · b(Ω (t - ε))`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawFactor"))]
pub struct FactorSpec {
    pub kind: FactorKind,
    /// Angular bandlimit, strictly positive.
    pub omega: f64,
    /// Translation in `t`.
    pub eps: f64,
    /// Overall sign, `+1` or `-1`.
    pub sign: i8,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawFactor {
    kind: FactorKind,
    omega: f64,
    eps: f64,
    #[serde(default = "default_sign")]
    sign: i8,
}

#[cfg(feature = "serde")]
fn default_sign() -> i8 {
    1
}

#[cfg(feature = "serde")]
impl TryFrom<RawFactor> for FactorSpec {
    type Error = Error;

    fn try_from(raw: RawFactor) -> Result<Self> {
        FactorSpec::new(raw.kind, raw.omega, raw.eps)?.with_sign(raw.sign)
    }
}

impl FactorSpec {
    pub fn new(kind: FactorKind, omega: f64, eps: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParameter(format!("factor bandlimit must be positive and finite, got {omega}")));
        }
        if !eps.is_finite() {
            return Err(Error::InvalidParameter(format!("factor shift must be finite, got {eps}")));
        }
        Ok(Self { kind, omega, eps, sign: 1 })
    }

    pub fn sine(omega: f64, eps: f64) -> Result<Self> {
        Self::new(FactorKind::Sine, omega, eps)
    }

    pub fn sinc(omega: f64, eps: f64) -> Result<Self> {
        Self::new(FactorKind::Sinc, omega, eps)
    }

    pub fn with_sign(mut self, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidParameter(format!("factor sign must be +1 or -1, got {sign}")));
        }
        self.sign = sign;
        Ok(self)
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        let x = self.omega * (t - self.eps);
        let v = match self.kind {
            FactorKind::Sine => math::sin(x),
            FactorKind::Sinc => math::sinc(x),
        };
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// The `k`-th point of the factor's zero lattice `ε + kπ/Ω`. The sinc
    /// factor has no zero at `k = 0`.
    pub fn zero(&self, k: i64) -> Option<f64> {
        if self.kind == FactorKind::Sinc && k == 0 {
            return None;
        }
        Some(self.eps + k as f64 * PI / self.omega)
    }

    /// Spacing of the zero lattice.
    pub fn zero_spacing(&self) -> f64 {
        PI / self.omega
    }
}

/// Anything that can be evaluated pointwise on the real line.
pub trait Signal {
    fn value(&self, t: f64) -> f64;
}

/// Adapter for closures.
pub struct FnSignal<F>(pub F);

impl<F: Fn(f64) -> f64> Signal for FnSignal<F> {
    fn value(&self, t: f64) -> f64 {
        (self.0)(t)
    }
}

impl Signal for FactorSpec {
    fn value(&self, t: f64) -> f64 {
        self.eval(t)
    }
}

impl Signal for ProductSignalSpec {
    fn value(&self, t: f64) -> f64 {
        self.eval(t)
    }
}

impl Signal for HarmonicSum {
    fn value(&self, t: f64) -> f64 {
        self.eval(t)
    }
}

impl<S: Signal + ?Sized> Signal for &S {
    fn value(&self, t: f64) -> f64 {
        (**self).value(t)
    }
}

/// Evaluates one factor.
pub fn eval_factor(f: &FactorSpec, t: f64) -> f64 {
    f.eval(t)
}

/// An ordered, nonempty product of factors together with its bandlimit.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawProduct"))]
pub struct ProductSignalSpec {
    factors: Vec<FactorSpec>,
    omega_total: f64,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawProduct {
    factors: Vec<FactorSpec>,
    omega_total: Option<f64>,
}

#[cfg(feature = "serde")]
impl TryFrom<RawProduct> for ProductSignalSpec {
    type Error = Error;

    fn try_from(raw: RawProduct) -> Result<Self> {
        match raw.omega_total {
            Some(omega) => ProductSignalSpec::with_declared_bandlimit(raw.factors, omega),
            None => ProductSignalSpec::new(raw.factors),
        }
    }
}

/// Relative tolerance accepted between a declared bandlimit and the factor sum.
const DECLARED_BANDLIMIT_RTOL: f64 = 1e-12;

impl ProductSignalSpec {
    pub fn new(factors: Vec<FactorSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("a product needs at least one factor".into()));
        }
        let omega_total = sum_bandlimits(&factors);
        Ok(Self { factors, omega_total })
    }

    /// Builds a product and checks the declared bandlimit against the sum
    /// of factor bandlimits.
    pub fn with_declared_bandlimit(factors: Vec<FactorSpec>, declared: f64) -> Result<Self> {
        let spec = Self::new(factors)?;
        if (spec.omega_total - declared).abs() > DECLARED_BANDLIMIT_RTOL * spec.omega_total {
            return Err(Error::InvalidParameter(format!(
                "declared bandlimit {declared} differs from the factor sum {}",
                spec.omega_total
            )));
        }
        Ok(spec)
    }

    pub fn factors(&self) -> &[FactorSpec] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Declared bandlimit `Σ Ω_i`.
    pub fn bandlimit(&self) -> f64 {
        self.omega_total
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        self.factors.iter().fold(1.0, |acc, f| acc * f.eval(t))
    }

    /// Copy with factors sorted by `(Ω, ε, kind, sign)`.
    pub fn canonical(&self) -> Self {
        let mut factors = self.factors.clone();
        factors.sort_by(|a, b| {
            a.omega
                .total_cmp(&b.omega)
                .then(a.eps.total_cmp(&b.eps))
                .then(a.kind.cmp(&b.kind))
                .then(a.sign.cmp(&b.sign))
        });
        Self { factors, omega_total: self.omega_total }
    }

    pub fn all_sine(&self) -> bool {
        self.factors.iter().all(|f| f.kind == FactorKind::Sine)
    }

    pub fn all_sinc(&self) -> bool {
        self.factors.iter().all(|f| f.kind == FactorKind::Sinc)
    }

    /// Period of an all-sine product with commensurate frequencies.
    pub fn period(&self) -> Option<f64> {
        if !self.all_sine() {
            return None;
        }
        let omegas: Vec<f64> = self.factors.iter().map(|f| f.omega).collect();
        common_fundamental(&omegas).ok().map(|(w0, _)| 2.0 * PI / w0)
    }

    /// The zeros the construction places on purpose: the shifts themselves
    /// for sine factors, the first positive lattice zero for sinc factors.
    /// Sorted ascending.
    pub fn prescribed_zeros(&self) -> Vec<f64> {
        let mut z: Vec<f64> = self
            .factors
            .iter()
            .map(|f| match f.kind {
                FactorKind::Sine => f.eps,
                FactorKind::Sinc => f.eps + f.zero_spacing(),
            })
            .collect();
        z.sort_by(f64::total_cmp);
        z.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * a.abs().max(1.0));
        z
    }

    /// Harmonic expansion of an all-sine commensurate product.
    pub fn expand_to_harmonics(&self) -> Result<HarmonicSum> {
        expand_to_harmonics(self)
    }
}

/// Neumaier-compensated sum of factor bandlimits.
fn sum_bandlimits(factors: &[FactorSpec]) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for f in factors {
        let t = sum + f.omega;
        if sum.abs() >= f.omega.abs() {
            comp += (sum - t) + f.omega;
        } else {
            comp += (f.omega - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

pub fn eval_product(s: &ProductSignalSpec, t: f64) -> f64 {
    s.eval(t)
}

pub fn product_bandlimit(s: &ProductSignalSpec) -> f64 {
    sum_bandlimits(&s.factors)
}

/// One term `a cos(kω₀t) + b sin(kω₀t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarmonicTerm {
    pub k: u32,
    pub a: f64,
    pub b: f64,
}

/// A finite real trigonometric sum over harmonics of `ω₀`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HarmonicSum {
    pub omega0: f64,
    /// Sorted by `k`, no duplicate indices.
    pub terms: Vec<HarmonicTerm>,
}

impl HarmonicSum {
    pub fn new(omega0: f64, mut terms: Vec<HarmonicTerm>) -> Result<Self> {
        if !(omega0 > 0.0) || !omega0.is_finite() {
            return Err(Error::InvalidParameter(format!("fundamental must be positive, got {omega0}")));
        }
        terms.sort_by_key(|t| t.k);
        let mut merged: Vec<HarmonicTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.k == t.k => {
                    last.a += t.a;
                    last.b += t.b;
                }
                _ => merged.push(t),
            }
        }
        Ok(Self { omega0, terms: merged })
    }

    /// `a0 + Σ a cos + b sin` convenience from explicit triples.
    pub fn from_triples(omega0: f64, triples: &[(u32, f64, f64)]) -> Result<Self> {
        Self::new(omega0, triples.iter().map(|&(k, a, b)| HarmonicTerm { k, a, b }).collect())
    }

    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega0
    }

    pub fn max_index(&self) -> u32 {
        self.terms.iter().map(|t| t.k).max().unwrap_or(0)
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|h| {
                if h.k == 0 {
                    h.a
                } else {
                    let x = h.k as f64 * self.omega0 * t;
                    h.a * math::cos(x) + h.b * math::sin(x)
                }
            })
            .sum()
    }

    pub fn derivative(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .filter(|h| h.k > 0)
            .map(|h| {
                let w = h.k as f64 * self.omega0;
                let x = w * t;
                w * (h.b * math::cos(x) - h.a * math::sin(x))
            })
            .sum()
    }

    /// Termwise second derivative: each harmonic picks up `-(kω₀)²`.
    pub fn second_derivative(&self, t: f64) -> f64 {
        self.terms
            .iter()
            .filter(|h| h.k > 0)
            .map(|h| {
                let w = h.k as f64 * self.omega0;
                let x = w * t;
                -w * w * (h.a * math::cos(x) + h.b * math::sin(x))
            })
            .sum()
    }

    pub fn negated(&self) -> Self {
        Self {
            omega0: self.omega0,
            terms: self.terms.iter().map(|h| HarmonicTerm { k: h.k, a: -h.a, b: -h.b }).collect(),
        }
    }
}

const MAX_DENOMINATOR: u64 = 10_000;
const MAX_HARMONIC: u64 = 1 << 14;
const COMMENSURATE_RTOL: f64 = 1e-12;

/// Best rational approximation `p/q` of `x` with `q <= max_q` by continued
/// fractions.
fn rational_approx(x: f64, max_q: u64) -> (u64, u64) {
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut r = x;
    for _ in 0..64 {
        let a = libm::floor(r);
        if a > 1e12 {
            break;
        }
        let a = a as u64;
        let p2 = a.saturating_mul(p1).saturating_add(p0);
        let q2 = a.saturating_mul(q1).saturating_add(q0);
        if q2 > max_q {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a as f64;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (p1, q1.max(1))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Finds `ω₀` and integers `m_i` with `Ω_i = m_i ω₀`.
pub fn common_fundamental(omegas: &[f64]) -> Result<(f64, Vec<u64>)> {
    let base = omegas.iter().copied().fold(f64::INFINITY, f64::min);
    if !(base > 0.0) || !base.is_finite() {
        return Err(Error::InvalidParameter("bandlimits must be positive".into()));
    }
    let mut lcm: u64 = 1;
    let mut ratios = Vec::with_capacity(omegas.len());
    for &w in omegas {
        let r = w / base;
        let (p, q) = rational_approx(r, MAX_DENOMINATOR);
        if (r - p as f64 / q as f64).abs() > COMMENSURATE_RTOL * r {
            return Err(Error::Incommensurate(format!(
                "ratio {r} of bandlimit {w} to {base} has no rational form with denominator <= {MAX_DENOMINATOR}"
            )));
        }
        ratios.push((p, q));
        lcm = lcm / gcd(lcm, q) * q;
        if lcm > MAX_HARMONIC {
            return Err(Error::Incommensurate(format!(
                "common fundamental would need harmonic index > {MAX_HARMONIC}"
            )));
        }
    }
    let mut m: Vec<u64> = ratios.iter().map(|&(p, q)| p * (lcm / q)).collect();
    let g = m.iter().copied().fold(0, gcd);
    for mi in &mut m {
        *mi /= g;
    }
    let omega0 = base / (lcm / g) as f64;
    for (&w, &mi) in omegas.iter().zip(&m) {
        if (mi as f64 * omega0 - w).abs() > COMMENSURATE_RTOL * w {
            return Err(Error::Incommensurate(format!("bandlimit {w} is not a multiple of {omega0}")));
        }
    }
    Ok((omega0, m))
}

/// Exact product-to-sum expansion of an all-sine commensurate product.
///
/// Works on complex exponential coefficients `c_k`, `k ∈ [-K, K]`, where
/// each factor `±sin(mθ - φ)` contributes `c_{±m}`; products are discrete
/// convolutions, so harmonic indices stay exact integers.
pub fn expand_to_harmonics(s: &ProductSignalSpec) -> Result<HarmonicSum> {
    if let Some(f) = s.factors.iter().find(|f| f.kind != FactorKind::Sine) {
        return Err(Error::NotExpandable(format!(
            "only sine factors have a finite harmonic expansion, found {:?} factor with bandlimit {}",
            f.kind, f.omega
        )));
    }
    let omegas: Vec<f64> = s.factors.iter().map(|f| f.omega).collect();
    let (omega0, m) = common_fundamental(&omegas)?;
    let kmax: u64 = m.iter().sum();
    if kmax > MAX_HARMONIC {
        return Err(Error::Incommensurate(format!("expansion would reach harmonic {kmax}")));
    }
    let kmax = kmax as usize;
    let width = 2 * kmax + 1;
    // (re, im) pairs, index k + kmax
    let mut coeffs = vec![(0.0f64, 0.0f64); width];
    coeffs[kmax] = (1.0, 0.0);
    let mut reach = 0usize;
    for (f, &mi) in s.factors.iter().zip(&m) {
        let mi = mi as usize;
        let phi = f.omega * f.eps;
        let sg = f.sign as f64;
        let (sp, cp) = (math::sin(phi), math::cos(phi));
        let plus = (-0.5 * sp * sg, -0.5 * cp * sg);
        let minus = (-0.5 * sp * sg, 0.5 * cp * sg);
        let mut next = vec![(0.0f64, 0.0f64); width];
        for k in (kmax - reach)..=(kmax + reach) {
            let (re, im) = coeffs[k];
            if re == 0.0 && im == 0.0 {
                continue;
            }
            let up = &mut next[k + mi];
            up.0 += re * plus.0 - im * plus.1;
            up.1 += re * plus.1 + im * plus.0;
            let down = &mut next[k - mi];
            down.0 += re * minus.0 - im * minus.1;
            down.1 += re * minus.1 + im * minus.0;
        }
        coeffs = next;
        reach += mi;
    }
    let mut terms = Vec::new();
    if coeffs[kmax].0 != 0.0 {
        terms.push(HarmonicTerm { k: 0, a: coeffs[kmax].0, b: 0.0 });
    }
    for k in 1..=kmax {
        let (re, im) = coeffs[kmax + k];
        if re != 0.0 || im != 0.0 {
            terms.push(HarmonicTerm { k: k as u32, a: 2.0 * re, b: -2.0 * im });
        }
    }
    HarmonicSum::new(omega0, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn three_sines() -> ProductSignalSpec {
        let w = PI / 3.0;
        ProductSignalSpec::new(vec![
            FactorSpec::sine(w, 0.0).unwrap(),
            FactorSpec::sine(w, 0.1).unwrap(),
            FactorSpec::sine(w, 0.2).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn factor_examples() {
        let s = FactorSpec::sine(1.0, 0.0).unwrap();
        assert_eq!(s.eval(PI / 2.0), 1.0);
        let c = FactorSpec::sinc(PI, 0.0).unwrap();
        assert_eq!(c.eval(0.0), 1.0);
        assert!(c.eval(1.0).abs() < 1e-16);
        assert_eq!(c.with_sign(-1).unwrap().eval(0.0), -1.0);
    }

    #[test]
    fn factor_rejects_bad_parameters() {
        assert!(FactorSpec::sine(0.0, 0.0).is_err());
        assert!(FactorSpec::sine(-1.0, 0.0).is_err());
        assert!(FactorSpec::sinc(f64::NAN, 0.0).is_err());
        assert!(FactorSpec::sine(1.0, 0.0).unwrap().with_sign(2).is_err());
        assert!(ProductSignalSpec::new(vec![]).is_err());
    }

    #[test]
    fn product_examples() {
        let f = FactorSpec::sinc(2.0, 0.3).unwrap();
        let single = ProductSignalSpec::new(vec![f]).unwrap();
        assert_eq!(single.eval(1.7), f.eval(1.7));
        assert_eq!(three_sines().eval(0.1).abs(), 0.0);
    }

    #[test]
    fn bandlimit_examples() {
        let w = PI / 3.0;
        let s = ProductSignalSpec::new(vec![FactorSpec::sine(w, 0.0).unwrap(); 3]).unwrap();
        assert!((product_bandlimit(&s) - PI).abs() <= f64::EPSILON * PI);
        let one = ProductSignalSpec::new(vec![FactorSpec::sine(2.0, 0.0).unwrap()]).unwrap();
        assert_eq!(product_bandlimit(&one), 2.0);
        let three = ProductSignalSpec::new(vec![
            FactorSpec::sinc(0.5, 0.0).unwrap(),
            FactorSpec::sinc(0.3, 0.0).unwrap(),
            FactorSpec::sinc(0.2, 0.0).unwrap(),
        ])
        .unwrap();
        assert!((three.bandlimit() - 1.0).abs() <= f64::EPSILON);
    }

    #[test]
    fn declared_bandlimit_is_checked() {
        let f = vec![FactorSpec::sine(1.0, 0.0).unwrap(), FactorSpec::sine(2.0, 0.0).unwrap()];
        assert!(ProductSignalSpec::with_declared_bandlimit(f.clone(), 3.0).is_ok());
        assert!(ProductSignalSpec::with_declared_bandlimit(f, 3.1).is_err());
    }

    #[test]
    fn canonical_order_sorts_by_bandlimit_then_shift() {
        let s = ProductSignalSpec::new(vec![
            FactorSpec::sine(2.0, 0.5).unwrap(),
            FactorSpec::sine(1.0, 0.7).unwrap(),
            FactorSpec::sine(1.0, -0.2).unwrap(),
        ])
        .unwrap();
        let c = s.canonical();
        let key: Vec<(f64, f64)> = c.factors().iter().map(|f| (f.omega, f.eps)).collect();
        assert_eq!(key, vec![(1.0, -0.2), (1.0, 0.7), (2.0, 0.5)]);
    }

    #[test]
    fn single_sine_expands_to_one_term() {
        let s = ProductSignalSpec::new(vec![FactorSpec::sine(1.0, 0.0).unwrap()]).unwrap();
        let h = s.expand_to_harmonics().unwrap();
        assert_eq!(h.terms, vec![HarmonicTerm { k: 1, a: 0.0, b: 1.0 }]);
    }

    #[test]
    fn two_sines_follow_product_to_sum() {
        // sin(u) sin(u - α) = ½cos α - ½cos(2u - α)
        let alpha: f64 = 0.37;
        let s =
            ProductSignalSpec::new(vec![FactorSpec::sine(1.0, 0.0).unwrap(), FactorSpec::sine(1.0, alpha).unwrap()])
                .unwrap();
        let h = s.expand_to_harmonics().unwrap();
        assert_eq!(h.terms.len(), 2);
        let c0 = h.terms[0];
        assert_eq!(c0.k, 0);
        assert!((c0.a - 0.5 * math::cos(alpha)).abs() < 1e-16);
        let c2 = h.terms[1];
        assert_eq!(c2.k, 2);
        // -½cos(2u - α) = -½cos α cos 2u - ½ sin α sin 2u
        assert!((c2.a + 0.5 * math::cos(alpha)).abs() < 1e-16);
        assert!((c2.b + 0.5 * math::sin(alpha)).abs() < 1e-16);
    }

    #[test]
    fn sinc_products_are_not_expandable() {
        let s = ProductSignalSpec::new(vec![FactorSpec::sinc(1.0, 0.0).unwrap()]).unwrap();
        assert!(matches!(s.expand_to_harmonics(), Err(Error::NotExpandable(_))));
    }

    #[test]
    fn incommensurate_frequencies_are_rejected() {
        let s = ProductSignalSpec::new(vec![
            FactorSpec::sine(1.0, 0.0).unwrap(),
            FactorSpec::sine(core::f64::consts::SQRT_2, 0.0).unwrap(),
        ])
        .unwrap();
        assert!(matches!(s.expand_to_harmonics(), Err(Error::Incommensurate(_))));
    }

    #[test]
    fn fundamental_of_mixed_multiples() {
        let (w0, m) = common_fundamental(&[2.0, 3.0]).unwrap();
        assert!((w0 - 1.0).abs() < 1e-15);
        assert_eq!(m, vec![2, 3]);
        let (w0, m) = common_fundamental(&[PI / 3.0, 2.0 * PI / 3.0]).unwrap();
        assert!((w0 - PI / 3.0).abs() < 1e-15);
        assert_eq!(m, vec![1, 2]);
    }

    #[test]
    fn expansion_matches_product_pointwise() {
        let s = three_sines();
        let h = s.expand_to_harmonics().unwrap();
        assert!(h.max_index() as f64 * h.omega0 <= s.bandlimit() * (1.0 + 1e-12));
        let period = s.period().unwrap();
        assert!((period - 6.0).abs() < 1e-12);
        for i in 0..10_000 {
            let t = period * i as f64 / 10_000.0;
            assert!((h.eval(t) - s.eval(t)).abs() <= 1e-12);
        }
    }

    #[test]
    fn harmonic_second_derivative_of_sine() {
        let h = HarmonicSum::from_triples(1.0, &[(1, 0.0, 1.0)]).unwrap();
        assert!((h.second_derivative(PI / 2.0) + 1.0).abs() < 1e-15);
        let c = HarmonicSum::from_triples(1.0, &[(0, 0.7, 0.0)]).unwrap();
        assert_eq!(c.second_derivative(1.3), 0.0);
        assert_eq!(c.eval(1.3), 0.7);
    }

    #[test]
    fn prescribed_zeros_of_sinc_sit_one_lattice_step_out() {
        let w = PI / 3.0;
        let s = ProductSignalSpec::new(vec![
            FactorSpec::sinc(w, -0.1).unwrap(),
            FactorSpec::sinc(w, 0.0).unwrap(),
            FactorSpec::sinc(w, 0.1).unwrap(),
        ])
        .unwrap();
        let z = s.prescribed_zeros();
        assert_eq!(z.len(), 3);
        assert!((z[0] - 2.9).abs() < 1e-12 && (z[2] - 3.1).abs() < 1e-12);
    }
}
