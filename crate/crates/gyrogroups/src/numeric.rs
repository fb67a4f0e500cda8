//! Scalar backends, tolerance policy, and inner-product primitives.
//!
//! Two interchangeable scalar backends drive every carrier in this crate:
//!
//! * [`f64`] — IEEE double precision, compared under a [`Tolerance`];
//! * [`BigRational`] — exact arbitrary-precision rationals, compared exactly
//!   (the tolerance is ignored). This backend is the oracle: every identity
//!   in the library holds with residual exactly zero on it.
//!
//! No operation in the crate takes a square root of a generic scalar; norms
//! only ever appear squared, which is what keeps the rational backend closed.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GyroError, Result};

/// Absolute/relative comparison band for the floating-point backend.
///
/// Two floats are considered equal when `|x - y| <= atol + rtol * max(|x|, |y|)`.
/// The comparison is symmetric in its arguments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Tolerance {
    /// Default absolute band. Identities in this crate are exact; double
    /// precision roundoff across the ~10 arithmetic operations of any one
    /// identity stays far below this for points bounded away from the
    /// boundary.
    pub const DEFAULT_ATOL: f64 = 1e-12;
    /// Default relative band.
    pub const DEFAULT_RTOL: f64 = 1e-9;

    pub fn new(atol: f64, rtol: f64) -> Result<Self> {
        if !(atol.is_finite() && rtol.is_finite() && atol >= 0.0 && rtol >= 0.0) {
            return Err(GyroError::InvalidTolerance);
        }
        Ok(Self { atol, rtol })
    }

    /// Zero-width tolerance: comparisons require exact equality.
    pub fn exact() -> Self {
        Self { atol: 0.0, rtol: 0.0 }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            atol: Self::DEFAULT_ATOL,
            rtol: Self::DEFAULT_RTOL,
        }
    }
}

/// `true` iff `|x - y| <= atol + rtol * max(|x|, |y|)` on the float backend;
/// exact equality on the rational backend (tolerance ignored). NaN inputs
/// compare unequal.
pub fn approx_eq<S: Scalar>(x: &S, y: &S, tol: &Tolerance) -> bool {
    x.approx_eq(y, tol)
}

/// A scalar usable as the coordinate field of every carrier in this crate.
///
/// Implemented by `f64` and by [`BigRational`]. The trait exists so the disc,
/// the ball, and the axiom engine can be written once and instantiated with
/// either backend.
pub trait Scalar:
    Num
    + Signed
    + Clone
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// `true` when arithmetic is exact and comparisons ignore the tolerance.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    /// The exact quotient `num / den`. `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// The exact value of a finite `f64` (every finite double is a dyadic
    /// rational).
    fn from_f64_value(x: f64) -> Self;

    /// A sampled coordinate. The float backend passes `x` through; the exact
    /// backend snaps to a dyadic grid so that randomly sampled points stay
    /// cheap to compute with.
    fn from_sample(x: f64) -> Self;

    fn to_f64(&self) -> f64;

    fn is_finite_value(&self) -> bool;

    fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool;

    /// Comparison margin. Zero means equal under [`Scalar::approx_eq`]; a
    /// positive value is the amount by which `|x - y|` exceeds the relative
    /// allowance `rtol * max(|x|, |y|)`, so `residual <= atol` iff
    /// `approx_eq` holds. The exact backend reports `0.0` exactly when the
    /// two values are equal and a positive number otherwise.
    fn residual(&self, other: &Self, tol: &Tolerance) -> f64;

    /// Rotation by `theta` radians as a `(cos, sin)` pair. The exact backend
    /// only admits multiples of a quarter turn.
    fn rotation(theta: f64) -> Result<(Self, Self)>;

    /// Parse a decimal (`0.5`, `-3`) or a fraction (`1/2`).
    fn parse(text: &str) -> Result<Self>;

    /// Render for reports: 17 significant digits (round-trip safe) on the
    /// float backend, `p/q` on the rational backend.
    fn render(&self) -> String;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64_value(x: f64) -> Self {
        x
    }

    fn from_sample(x: f64) -> Self {
        x
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        self.residual(other, tol) <= tol.atol
    }

    fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        if !self.is_finite() || !other.is_finite() {
            return f64::INFINITY;
        }
        let diff = (self - other).abs();
        let allowance = tol.rtol * self.abs().max(other.abs());
        (diff - allowance).max(0.0)
    }

    fn rotation(theta: f64) -> Result<(Self, Self)> {
        if !theta.is_finite() {
            return Err(GyroError::NonFinite);
        }
        Ok((theta.cos(), theta.sin()))
    }

    fn parse(text: &str) -> Result<Self> {
        let bad = || GyroError::ParseScalar { text: text.to_string() };
        let value = if let Some((num, den)) = text.split_once('/') {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        } else {
            text.trim().parse().map_err(|_| bad())?
        };
        if !value.is_finite() {
            return Err(GyroError::NonFinite);
        }
        Ok(value)
    }

    fn render(&self) -> String {
        // Normalize -0.0 so that negating the origin does not change output.
        let x = if *self == 0.0 { 0.0 } else { *self };
        format!("{x:.16e}")
    }
}

/// Dyadic grid used by the exact backend when snapping sampled coordinates.
const SAMPLE_GRID: f64 = 256.0;

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64_value(x: f64) -> Self {
        BigRational::from_float(x).expect("finite f64 converts exactly")
    }

    fn from_sample(x: f64) -> Self {
        let k = (x * SAMPLE_GRID).round() as i64;
        Self::from_ratio(k, SAMPLE_GRID as i64)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::INFINITY)
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn approx_eq(&self, other: &Self, _tol: &Tolerance) -> bool {
        self == other
    }

    fn residual(&self, other: &Self, _tol: &Tolerance) -> f64 {
        if self == other {
            return 0.0;
        }
        let diff = (self - other).abs();
        let as_f64 = Scalar::to_f64(&diff);
        if as_f64 > 0.0 {
            as_f64
        } else {
            // A nonzero exact difference must never report as zero.
            f64::MIN_POSITIVE
        }
    }

    fn rotation(theta: f64) -> Result<(Self, Self)> {
        if !theta.is_finite() {
            return Err(GyroError::NonFinite);
        }
        let turns = theta / FRAC_PI_2;
        let k = turns.round();
        if k.abs() > 2f64.powi(52) || (theta - k * FRAC_PI_2).abs() > 1e-12 {
            return Err(GyroError::ExactRotationUnsupported { theta });
        }
        let (cos, sin) = match (k as i64).rem_euclid(4) {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        Ok((Self::from_int(cos), Self::from_int(sin)))
    }

    fn parse(text: &str) -> Result<Self> {
        let bad = || GyroError::ParseScalar { text: text.to_string() };
        let text_trimmed = text.trim();
        if let Some((num, den)) = text_trimmed.split_once('/') {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(BigRational::new(num, den));
        }
        let (sign, digits) = match text_trimmed.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, text_trimmed.strip_prefix('+').unwrap_or(text_trimmed)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let all_digits = format!("{int_part}{frac_part}");
        let mantissa = BigInt::from_str(&all_digits).map_err(|_| bad())?;
        if all_digits.starts_with('-') || all_digits.starts_with('+') {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        Ok(BigRational::new(mantissa * BigInt::from(sign), scale))
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

/// An `n`-vector of scalars, `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S: Scalar> {
    coords: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Result<Self> {
        if coords.is_empty() {
            return Err(GyroError::EmptyVector);
        }
        if coords.iter().any(|c| !c.is_finite_value()) {
            return Err(GyroError::NonFinite);
        }
        Ok(Self { coords })
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector dimension must be at least 1");
        Self {
            coords: vec![S::zero(); dim],
        }
    }

    /// The standard basis vector `e_j`.
    pub fn basis(dim: usize, j: usize) -> Self {
        assert!(j < dim, "basis index out of range");
        let mut v = Self::zeros(dim);
        v.coords[j] = S::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    /// Standard dot product; bilinear and symmetric.
    pub fn inner(&self, other: &Self) -> Result<S> {
        if self.dim() != other.dim() {
            return Err(GyroError::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(dot(&self.coords, &other.coords))
    }

    /// `inner(self, self)`.
    pub fn norm_sq(&self) -> S {
        dot(&self.coords, &self.coords)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c.clone().neg()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Self {
            coords: self.coords.iter().map(|c| k.clone() * c.clone()).collect(),
        }
    }

    /// Largest per-coordinate residual; infinite on dimension mismatch.
    pub fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.residual(b, tol))
            .fold(0.0, f64::max)
    }

    pub fn render(&self) -> String {
        self.coords
            .iter()
            .map(Scalar::render)
            .collect::<Vec<_>>()
            .join(",")
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(GyroError::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

pub(crate) fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Deterministic per-(seed, index) generator used by all samplers. The tag
/// separates streams of different carriers so disc and ball samples drawn
/// from the same seed are independent.
pub(crate) fn sample_rng(seed: u64, index: u64, tag: u8) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&index.to_le_bytes());
    key[16] = tag;
    ChaCha8Rng::from_seed(key)
}

/// One standard normal draw (Box-Muller, cosine branch).
pub(crate) fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u1: f64 = rng.random();
        if u1 > 0.0 {
            let u2: f64 = rng.random();
            return (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
        }
    }
}
