//! Scalars for the dense solves: native `f64` and a fixed-precision binary
//! float backed by `astro-float`.

use alloc::format;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Working precision of a dense solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// IEEE double (53-bit mantissa).
    Native,
    /// Binary float with the given mantissa width in bits.
    Bits(u32),
}

impl Precision {
    pub fn bits(self) -> u32 {
        match self {
            Precision::Native => 53,
            Precision::Bits(b) => b,
        }
    }

    /// `Bits(b)` for `b > 53`, `Native` otherwise.
    pub fn from_bits(bits: u32) -> Self {
        if bits <= 53 {
            Precision::Native
        } else {
            Precision::Bits(bits)
        }
    }
}

/// The arithmetic the dense routines need.
pub trait Field: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn lt(&self, o: &Self) -> bool;
    fn is_finite(&self) -> bool;
    /// A constant at the same precision as `self`.
    fn like(&self, x: f64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Field for f64 {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sqrt(&self) -> Self {
        libm::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn like(&self, x: f64) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// A binary float carrying its own precision.
#[derive(Debug, Clone)]
pub struct Wide {
    v: BigFloat,
    p: usize,
}

impl Wide {
    pub fn from_f64(x: f64, bits: u32) -> Self {
        let p = bits as usize;
        Self { v: BigFloat::from_f64(x, p), p }
    }

    pub fn precision(&self) -> u32 {
        self.p as u32
    }

    /// `sin(self)`; `cc` caches constants between calls.
    pub fn sin(&self, cc: &mut Consts) -> Self {
        Self { v: self.v.sin(self.p, RM, cc), p: self.p }
    }

    pub fn pi(bits: u32, cc: &mut Consts) -> Self {
        let p = bits as usize;
        Self { v: cc.pi(p, RM), p }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

impl Field for Wide {
    fn add(&self, o: &Self) -> Self {
        Self { v: self.v.add(&o.v, self.p, RM), p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Self { v: self.v.sub(&o.v, self.p, RM), p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Self { v: self.v.mul(&o.v, self.p, RM), p: self.p }
    }
    fn div(&self, o: &Self) -> Self {
        Self { v: self.v.div(&o.v, self.p, RM), p: self.p }
    }
    fn neg(&self) -> Self {
        Self { v: self.v.neg(), p: self.p }
    }
    fn sqrt(&self) -> Self {
        Self { v: self.v.sqrt(self.p, RM), p: self.p }
    }
    fn abs(&self) -> Self {
        Self { v: self.v.abs(), p: self.p }
    }
    fn lt(&self, o: &Self) -> bool {
        matches!(self.v.cmp(&o.v), Some(c) if c < 0)
    }
    fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }
    fn like(&self, x: f64) -> Self {
        Self::from_f64(x, self.p as u32)
    }
    fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.v.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        match self.v.as_raw_parts() {
            Some((m, _, s, e, _)) if !m.is_empty() => {
                // mantissa is 0.m with the leading bit at the top of the last word
                let top = m[m.len() - 1];
                let below = if m.len() > 1 { m[m.len() - 2] } else { 0 };
                let mag = libm::ldexp(top as f64, e - 64) + libm::ldexp(below as f64, e - 128);
                if s == Sign::Neg {
                    -mag
                } else {
                    mag
                }
            }
            _ => 0.0,
        }
    }
}

/// Fresh constants cache for the transcendental functions.
pub fn consts() -> Result<Consts> {
    Consts::new().map_err(|e| Error::Precision(format!("{e:?}")))
}
