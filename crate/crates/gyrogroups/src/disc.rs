//! The Möbius gyrogroup on the complex open unit disc.
//!
//! Möbius addition
//!
//! ```text
//! a ⊕ z = (a + z) / (1 + ā·z)
//! ```
//!
//! turns the disc `𝔻 = {z ∈ ℂ : |z| < 1}` into a gyrocommutative gyrogroup.
//! It is neither commutative nor associative; the gyrations
//!
//! ```text
//! gyr[a,b] = (a ⊕ b) / (b ⊕ a) = (1 + a·b̄) / (1 + ā·b)
//! ```
//!
//! are unimodular complex numbers that repair both failures at once. They act
//! on the disc as rotations about its center and are stored here as values
//! ([`DiscGyration`]), so identities between gyrations reduce to scalar
//! comparisons.
//!
//! Everything is generic over the scalar backend: with `f64` coordinates the
//! operations are ordinary floating-point arithmetic, with
//! [`num_rational::BigRational`] they are exact.

use num_complex::Complex;

use crate::error::{GyroError, Result};
use crate::numeric::{sample_rng, Scalar, Tolerance};

/// Radius cap used when sampling float-backend points: area-uniform samples
/// are confined to `|z| <= 0.999` to keep denominators well conditioned.
pub const SAMPLE_RADIUS_FLOAT: f64 = 0.999;
/// Radius cap for exact-backend samples, leaving room for the dyadic snap
/// while staying inside the float envelope.
pub const SAMPLE_RADIUS_EXACT: f64 = 0.99;

/// A point of the open unit disc: `re² + im² < 1`, enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscPoint<S: Scalar> {
    z: Complex<S>,
}

impl<S: Scalar> DiscPoint<S> {
    pub fn new(re: S, im: S) -> Result<Self> {
        if !re.is_finite_value() || !im.is_finite_value() {
            return Err(GyroError::NonFinite);
        }
        let norm_sq = re.clone() * re.clone() + im.clone() * im.clone();
        if norm_sq < S::one() {
            Ok(Self {
                z: Complex::new(re, im),
            })
        } else {
            Err(GyroError::OutsideBall {
                norm_sq: norm_sq.render(),
                bound: S::one().render(),
            })
        }
    }

    pub fn origin() -> Self {
        Self {
            z: Complex::new(S::zero(), S::zero()),
        }
    }

    /// Wraps a value that is interior by construction (closure of ⊕, norm
    /// preservation of gyrations). Not a validation point.
    fn wrap(z: Complex<S>) -> Self {
        Self { z }
    }

    pub fn re(&self) -> &S {
        &self.z.re
    }

    pub fn im(&self) -> &S {
        &self.z.im
    }

    pub fn norm_sq(&self) -> S {
        self.z.re.clone() * self.z.re.clone() + self.z.im.clone() * self.z.im.clone()
    }

    /// Möbius addition `self ⊕ z`. The denominator `1 + ā·z` cannot vanish
    /// for interior points since `|ā·z| < 1`.
    pub fn mobius_add(&self, z: &Self) -> Self {
        let one = Complex::new(S::one(), S::zero());
        let num = self.z.clone() + z.z.clone();
        let den = one + self.z.conj() * z.z.clone();
        Self::wrap(num / den)
    }

    /// `⊖self`, the componentwise negation; `⊖z ⊕ z = 0`.
    pub fn neg(&self) -> Self {
        Self::wrap(-self.z.clone())
    }

    /// Möbius subtraction `self ⊖ z = self ⊕ (−z)`.
    pub fn mobius_sub(&self, z: &Self) -> Self {
        self.mobius_add(&z.neg())
    }

    /// The gyration `gyr[a, b] = (1 + a·b̄) / (1 + ā·b)` with `a = self`.
    ///
    /// The denominator is the conjugate of the numerator, so the value is
    /// unimodular by construction (exactly so on the rational backend).
    pub fn gyration(&self, b: &Self) -> DiscGyration<S> {
        let one = Complex::new(S::one(), S::zero());
        let num = one.clone() + self.z.clone() * b.z.conj();
        let den = one + self.z.conj() * b.z.clone();
        DiscGyration { g: num / den }
    }

    /// Area-uniform sample, deterministic in `(seed, index)`: angle uniform
    /// on `[0, 2π)`, radius `cap·√u` with `u` uniform on `[0, 1)`.
    pub fn sample(seed: u64, index: u64) -> Self {
        use rand::Rng;
        let mut rng = sample_rng(seed, index, b'D');
        let theta = std::f64::consts::TAU * rng.random::<f64>();
        let cap = if S::EXACT {
            SAMPLE_RADIUS_EXACT
        } else {
            SAMPLE_RADIUS_FLOAT
        };
        let r = cap * rng.random::<f64>().sqrt();
        Self::new(
            S::from_sample(r * theta.cos()),
            S::from_sample(r * theta.sin()),
        )
        .expect("sampled point is interior")
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        self.residual(other, tol) <= tol.atol
    }

    /// Largest componentwise residual against `other`.
    pub fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        self.z
            .re
            .residual(&other.z.re, tol)
            .max(self.z.im.residual(&other.z.im, tol))
    }

    pub fn render(&self) -> String {
        format!("{},{}", self.z.re.render(), self.z.im.render())
    }
}

/// `Re(1 + a·b̄)`, the attainability margin of `gyr[a,b]`.
///
/// For interior points `|a·b̄| < 1`, so the margin is strictly positive; this
/// is exactly why the equation `gyr[a,b] = −1` has no solution in the disc.
pub fn attainability_margin<S: Scalar>(a: &DiscPoint<S>, b: &DiscPoint<S>) -> S {
    S::one() + a.z.re.clone() * b.z.re.clone() + a.z.im.clone() * b.z.im.clone()
}

/// The general Möbius self-transformation of the disc in polar-decomposed
/// form, `z ↦ e^{iθ}·(a ⊕ z)`.
///
/// On the rational backend only quarter-turn angles are representable; any
/// other `theta` is rejected.
pub fn mobius_transform<S: Scalar>(
    theta: f64,
    a: &DiscPoint<S>,
    z: &DiscPoint<S>,
) -> Result<DiscPoint<S>> {
    let (cos, sin) = S::rotation(theta)?;
    let rot = Complex::new(cos, sin);
    let sum = a.mobius_add(z);
    Ok(DiscPoint::wrap(rot * sum.z))
}

/// The gyration expressed through Möbius addition alone:
///
/// ```text
/// gyr[a,b]z = ⊖(a ⊕ b) ⊕ {a ⊕ (b ⊕ z)}
/// ```
///
/// Equals `a.gyration(b).apply(z)`; the two routes are algebraically
/// independent and are compared in tests.
pub fn gyration_via_addition<S: Scalar>(
    a: &DiscPoint<S>,
    b: &DiscPoint<S>,
    z: &DiscPoint<S>,
) -> DiscPoint<S> {
    a.mobius_add(b)
        .neg()
        .mobius_add(&a.mobius_add(&b.mobius_add(z)))
}

/// A disc gyration as a value: a unimodular complex number `g ≠ −1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscGyration<S: Scalar> {
    g: Complex<S>,
}

impl<S: Scalar> DiscGyration<S> {
    pub fn identity() -> Self {
        Self {
            g: Complex::new(S::one(), S::zero()),
        }
    }

    /// Builds a gyration from raw components. Unimodularity is required
    /// exactly on the rational backend and within the default tolerance on
    /// floats; the exact value `−1` is rejected as unattainable.
    pub fn from_unit_complex(re: S, im: S) -> Result<Self> {
        if !re.is_finite_value() || !im.is_finite_value() {
            return Err(GyroError::NonFinite);
        }
        let norm_sq = re.clone() * re.clone() + im.clone() * im.clone();
        if !norm_sq.approx_eq(&S::one(), &Tolerance::default()) {
            return Err(GyroError::NotUnimodular {
                norm_sq: norm_sq.render(),
            });
        }
        if re == S::zero() - S::one() && im == S::zero() {
            return Err(GyroError::UnattainableGyration);
        }
        Ok(Self {
            g: Complex::new(re, im),
        })
    }

    pub fn re(&self) -> &S {
        &self.g.re
    }

    pub fn im(&self) -> &S {
        &self.g.im
    }

    /// Rotates `z` about the center: the complex product `g·z`, which
    /// preserves `|z|`.
    pub fn apply(&self, z: &DiscPoint<S>) -> DiscPoint<S> {
        DiscPoint::wrap(self.g.clone() * z.z.clone())
    }

    /// The inverse rotation. Since `|g| = 1`, this is complex conjugation;
    /// it coincides with `gyr[b,a]` when `self = gyr[a,b]`.
    pub fn inverse(&self) -> Self {
        Self { g: self.g.conj() }
    }

    /// Composition of two gyrations as rotations. Fails with
    /// [`GyroError::UnattainableGyration`] when the product is exactly `−1`:
    /// the composed rotation is then not itself a gyration, which is why the
    /// gyroautomorphisms of the disc do not close under composition.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let g = self.g.clone() * other.g.clone();
        if g.re == S::zero() - S::one() && g.im == S::zero() {
            return Err(GyroError::UnattainableGyration);
        }
        Ok(Self { g })
    }

    /// Rotation angle in radians (float view).
    pub fn angle(&self) -> f64 {
        self.g.im.to_f64().atan2(self.g.re.to_f64())
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        self.residual(other, tol) <= tol.atol
    }

    pub fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        self.g
            .re
            .residual(&other.g.re, tol)
            .max(self.g.im.residual(&other.g.im, tol))
    }

    pub fn render(&self) -> String {
        format!("{},{}", self.g.re.render(), self.g.im.render())
    }
}
