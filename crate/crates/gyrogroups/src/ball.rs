//! The Möbius gyrogroup on the s-ball of an n-dimensional real inner-product
//! space.
//!
//! Möbius addition extends from the disc to the ball
//! `V_s = {v : ‖v‖ < s}` through the vector form
//!
//! ```text
//!           (1 + (2/s²)·u·v + (1/s²)‖v‖²)·u + (1 − (1/s²)‖u‖²)·v
//! u ⊕ v  =  ────────────────────────────────────────────────────
//!                 1 + (2/s²)·u·v + (1/s⁴)‖u‖²‖v‖²
//! ```
//!
//! Gyrations come in two equivalent forms: the definitional one,
//! `gyr[u,v]z = ⊖(u⊕v) ⊕ {u⊕(v⊕z)}`, and the closed form
//!
//! ```text
//! gyr[u,v]w = w + 2·(A·u + B·v)/D
//! ```
//!
//! with coefficients
//!
//! ```text
//! A = −(1/s⁴)(u·w)‖v‖² + (1/s²)(v·w) + (2/s⁴)(u·v)(v·w)
//! B = −(1/s⁴)(v·w)‖u‖² − (1/s²)(u·w)
//! D = 1 + (2/s²)(u·v) + (1/s⁴)‖u‖²‖v‖²
//! ```
//!
//! `D > 0` for interior `u`, `v` by Cauchy–Schwarz. The closed form makes
//! sense for any ambient `w`, which extends each gyration to a linear,
//! inner-product-preserving map of the whole space; [`gyration_matrix`]
//! materializes that map on the standard basis.
//!
//! For `dim = 2`, `s = 1`, the identification `u₁ + i·u₂ ↔ (u₁, u₂)` carries
//! disc Möbius addition to ball Möbius addition; see [`BallPoint::from_disc`]
//! and [`BallPoint::to_disc`].
//!
//! In the limit `s → ∞` the ball expands to the whole space and `⊕` reduces
//! to vector addition; [`limit_scan`] measures the second-order rate.

use crate::disc::DiscPoint;
use crate::error::{GyroError, Result};
use crate::numeric::{dot, sample_rng, standard_normal, Scalar, Tolerance, Vector};

/// Radius cap (as a fraction of `s`) for float-backend samples.
///
/// Composed operations push points toward the boundary quadratically: for
/// operands of radius `r`, `‖u ⊕ v‖` can reach `2r/(1+r²)`, and the follow-up
/// `⊖x ⊕ y` of two such points divides by a quantity of order
/// `(1 − ‖x‖²/s²)²`. At `r = 0.8` that denominator stays above ~1e-3 and
/// every identity holds to well under the default tolerance in doubles; much
/// closer to the boundary the definitional gyration route loses digits
/// faster than the tolerance allows.
pub const SAMPLE_RADIUS_FLOAT: f64 = 0.8;
/// Radius cap for exact-backend samples, leaving room for the dyadic snap.
/// The exact backend has no roundoff, so its samples range closer to the
/// boundary than the float suite's.
pub const SAMPLE_RADIUS_EXACT: f64 = 0.99;

/// Ambient dimension and ball radius. Every point carries a copy; operations
/// on points from different balls fail with [`GyroError::ParamsMismatch`],
/// never rescale implicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct BallParams<S: Scalar> {
    dim: usize,
    s: S,
}

impl<S: Scalar> BallParams<S> {
    pub fn new(dim: usize, s: S) -> Result<Self> {
        if dim < 1 {
            return Err(GyroError::InvalidDimension);
        }
        if !s.is_finite_value() || s <= S::zero() {
            return Err(GyroError::InvalidRadius);
        }
        Ok(Self { dim, s })
    }

    /// The unit disc seen as a ball: `dim = 2`, `s = 1`.
    pub fn disc() -> Self {
        Self {
            dim: 2,
            s: S::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The ball radius `s`.
    pub fn s(&self) -> &S {
        &self.s
    }

    fn s_sq(&self) -> S {
        self.s.clone() * self.s.clone()
    }
}

/// An interior point of the ball: `‖coords‖² < s²`, enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint<S: Scalar> {
    coords: Vector<S>,
    params: BallParams<S>,
}

impl<S: Scalar> BallPoint<S> {
    pub fn new(coords: Vec<S>, params: &BallParams<S>) -> Result<Self> {
        let coords = Vector::new(coords)?;
        if coords.dim() != params.dim {
            return Err(GyroError::DimensionMismatch {
                expected: params.dim,
                actual: coords.dim(),
            });
        }
        let norm_sq = coords.norm_sq();
        let bound = params.s_sq();
        if norm_sq < bound {
            Ok(Self {
                coords,
                params: params.clone(),
            })
        } else {
            Err(GyroError::OutsideBall {
                norm_sq: norm_sq.render(),
                bound: bound.render(),
            })
        }
    }

    pub fn origin(params: &BallParams<S>) -> Self {
        Self {
            coords: Vector::zeros(params.dim),
            params: params.clone(),
        }
    }

    fn wrap(coords: Vector<S>, params: &BallParams<S>) -> Self {
        Self {
            coords,
            params: params.clone(),
        }
    }

    pub fn coords(&self) -> &[S] {
        self.coords.coords()
    }

    pub fn vector(&self) -> &Vector<S> {
        &self.coords
    }

    pub fn params(&self) -> &BallParams<S> {
        &self.params
    }

    pub fn norm_sq(&self) -> S {
        self.coords.norm_sq()
    }

    /// Möbius addition `self ⊕ v` in the ball.
    pub fn mobius_add(&self, v: &Self) -> Result<Self> {
        ensure_same_params(&self.params, &v.params)?;
        let s2 = self.params.s_sq();
        let two = S::from_int(2);
        let uv = dot(self.coords(), v.coords());
        let nu = self.norm_sq();
        let nv = v.norm_sq();
        let coeff_u =
            S::one() + two.clone() * uv.clone() / s2.clone() + nv.clone() / s2.clone();
        let coeff_v = S::one() - nu.clone() / s2.clone();
        let den = S::one() + two * uv / s2.clone() + nu * nv / (s2.clone() * s2);
        let coords = self
            .coords()
            .iter()
            .zip(v.coords())
            .map(|(ui, vi)| {
                (coeff_u.clone() * ui.clone() + coeff_v.clone() * vi.clone()) / den.clone()
            })
            .collect();
        Ok(Self::wrap(
            Vector::new(coords).expect("interior result is finite"),
            &self.params,
        ))
    }

    /// `⊖self`, the componentwise negation.
    pub fn neg(&self) -> Self {
        Self::wrap(self.coords.neg(), &self.params)
    }

    /// Möbius subtraction `self ⊖ v = self ⊕ (−v)`.
    pub fn mobius_sub(&self, v: &Self) -> Result<Self> {
        self.mobius_add(&v.neg())
    }

    /// Views this point as an ambient vector (gyrations act on those).
    pub fn to_ambient(&self) -> AmbientVector<S> {
        AmbientVector {
            coords: self.coords.clone(),
            params: self.params.clone(),
        }
    }

    /// The coordinate identification `u₁ + i·u₂ ↦ (u₁, u₂)` into the ball
    /// with `dim = 2`, `s = 1`.
    pub fn from_disc(z: &DiscPoint<S>) -> Self {
        Self::wrap(
            Vector::new(vec![z.re().clone(), z.im().clone()]).expect("disc point is finite"),
            &BallParams::disc(),
        )
    }

    /// The inverse identification `(u₁, u₂) ↦ u₁ + i·u₂`; requires `dim = 2`
    /// and `s = 1`.
    pub fn to_disc(&self) -> Result<DiscPoint<S>> {
        if self.params.dim != 2 || self.params.s != S::one() {
            return Err(GyroError::NotDiscCompatible);
        }
        DiscPoint::new(self.coords()[0].clone(), self.coords()[1].clone())
    }

    /// Deterministic interior sample: direction uniform on the sphere via a
    /// normalized Gaussian, radius `cap·s·u^{1/n}`.
    pub fn sample(params: &BallParams<S>, seed: u64, index: u64) -> Self {
        use rand::Rng;
        let mut rng = sample_rng(seed, index, b'B');
        let n = params.dim;
        let cap = if S::EXACT {
            SAMPLE_RADIUS_EXACT
        } else {
            SAMPLE_RADIUS_FLOAT
        };
        let mut direction: Vec<f64> = (0..n).map(|_| standard_normal(&mut rng)).collect();
        let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            direction[0] = 1.0;
        }
        let norm = if norm == 0.0 { 1.0 } else { norm };
        let radius = cap * rng.random::<f64>().powf(1.0 / n as f64);
        let coords = direction
            .iter()
            .map(|x| S::from_sample(x / norm * radius) * params.s.clone())
            .collect();
        Self::new(coords, params).expect("sampled point is interior")
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        self.params == other.params && self.residual(other, tol) <= tol.atol
    }

    pub fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        self.coords.residual(&other.coords, tol)
    }

    pub fn render(&self) -> String {
        self.coords.render()
    }
}

/// A vector of the ambient space carrying ball parameters; its norm is
/// unrestricted. Gyrations extend to linear maps on these.
#[derive(Debug, Clone, PartialEq)]
pub struct AmbientVector<S: Scalar> {
    coords: Vector<S>,
    params: BallParams<S>,
}

impl<S: Scalar> AmbientVector<S> {
    pub fn new(coords: Vec<S>, params: &BallParams<S>) -> Result<Self> {
        let coords = Vector::new(coords)?;
        if coords.dim() != params.dim {
            return Err(GyroError::DimensionMismatch {
                expected: params.dim,
                actual: coords.dim(),
            });
        }
        Ok(Self {
            coords,
            params: params.clone(),
        })
    }

    pub fn basis(params: &BallParams<S>, j: usize) -> Self {
        Self {
            coords: Vector::basis(params.dim, j),
            params: params.clone(),
        }
    }

    pub fn coords(&self) -> &[S] {
        self.coords.coords()
    }

    pub fn vector(&self) -> &Vector<S> {
        &self.coords
    }

    pub fn params(&self) -> &BallParams<S> {
        &self.params
    }

    pub fn norm_sq(&self) -> S {
        self.coords.norm_sq()
    }

    pub fn inner(&self, other: &Self) -> Result<S> {
        ensure_same_params(&self.params, &other.params)?;
        self.coords.inner(&other.coords)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same_params(&self.params, &other.params)?;
        Ok(Self {
            coords: self.coords.add(&other.coords)?,
            params: self.params.clone(),
        })
    }

    pub fn scale(&self, k: &S) -> Self {
        Self {
            coords: self.coords.scale(k),
            params: self.params.clone(),
        }
    }

    /// Reinterprets as a ball point; fails when the norm is not `< s`.
    pub fn to_ball_point(&self) -> Result<BallPoint<S>> {
        BallPoint::new(self.coords().to_vec(), &self.params)
    }

    /// Deterministic ambient sample with coordinates up to `1.25·s` in
    /// magnitude, so probes reach outside the ball.
    pub fn sample(params: &BallParams<S>, seed: u64, index: u64) -> Self {
        use rand::Rng;
        let mut rng = sample_rng(seed, index, b'A');
        let coords = (0..params.dim)
            .map(|_| {
                let x = (2.0 * rng.random::<f64>() - 1.0) * 1.25;
                S::from_sample(x) * params.s.clone()
            })
            .collect();
        Self::new(coords, params).expect("sampled vector is finite")
    }

    pub fn residual(&self, other: &Self, tol: &Tolerance) -> f64 {
        self.coords.residual(&other.coords, tol)
    }

    pub fn render(&self) -> String {
        self.coords.render()
    }
}

/// The scalars of the closed-form gyration `gyr[u,v]w = w + 2(A·u + B·v)/D`.
#[derive(Debug, Clone, PartialEq)]
pub struct GyrationCoefficients<S: Scalar> {
    pub a: S,
    pub b: S,
    pub d: S,
}

fn ensure_same_params<S: Scalar>(a: &BallParams<S>, b: &BallParams<S>) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(GyroError::ParamsMismatch)
    }
}

/// The coefficients `A`, `B`, `D` of the closed-form gyration. `D` does not
/// depend on `w` and is strictly positive for interior `u`, `v`.
pub fn gyration_coeffs<S: Scalar>(
    u: &BallPoint<S>,
    v: &BallPoint<S>,
    w: &AmbientVector<S>,
) -> Result<GyrationCoefficients<S>> {
    ensure_same_params(u.params(), v.params())?;
    ensure_same_params(u.params(), w.params())?;
    let s2 = u.params().s_sq();
    let s4 = s2.clone() * s2.clone();
    let two = S::from_int(2);
    let uw = dot(u.coords(), w.coords());
    let vw = dot(v.coords(), w.coords());
    let uv = dot(u.coords(), v.coords());
    let nu = u.norm_sq();
    let nv = v.norm_sq();
    let a = vw.clone() / s2.clone() + two.clone() * uv.clone() * vw.clone() / s4.clone()
        - uw.clone() * nv.clone() / s4.clone();
    let b = S::zero() - vw * nu.clone() / s4.clone() - uw / s2.clone();
    let d = S::one() + two * uv / s2 + nu * nv / s4;
    Ok(GyrationCoefficients { a, b, d })
}

/// The closed-form gyration `gyr[u,v]w = w + 2(A·u + B·v)/D`, defined for any
/// ambient `w`. Linear in `w`; preserves inner products, hence norms.
pub fn gyrate<S: Scalar>(
    u: &BallPoint<S>,
    v: &BallPoint<S>,
    w: &AmbientVector<S>,
) -> Result<AmbientVector<S>> {
    let GyrationCoefficients { a, b, d } = gyration_coeffs(u, v, w)?;
    let two = S::from_int(2);
    let coords = w
        .coords()
        .iter()
        .zip(u.coords().iter().zip(v.coords()))
        .map(|(wi, (ui, vi))| {
            wi.clone()
                + two.clone() * (a.clone() * ui.clone() + b.clone() * vi.clone()) / d.clone()
        })
        .collect();
    AmbientVector::new(coords, u.params())
}

/// [`gyrate`] restricted to interior points: since gyrations preserve norms,
/// the image of a ball point is again a ball point.
pub fn gyrate_point<S: Scalar>(
    u: &BallPoint<S>,
    v: &BallPoint<S>,
    z: &BallPoint<S>,
) -> Result<BallPoint<S>> {
    gyrate(u, v, &z.to_ambient())?.to_ball_point()
}

/// The definitional gyration `gyr[u,v]z = ⊖(u⊕v) ⊕ {u⊕(v⊕z)}`, which needs
/// ball membership at each stage. Agrees with [`gyrate`] (exactly on the
/// rational backend); the two routes are compared in tests rather than
/// collapsed into one.
pub fn gyrate_via_definition<S: Scalar>(
    u: &BallPoint<S>,
    v: &BallPoint<S>,
    z: &BallPoint<S>,
) -> Result<BallPoint<S>> {
    let vz = v.mobius_add(z)?;
    let uvz = u.mobius_add(&vz)?;
    let uv = u.mobius_add(v)?;
    uv.neg().mobius_add(&uvz)
}

/// The gyration as a matrix: column `j` is `gyr[u,v]e_j`. Orthogonal, since
/// gyrations preserve the inner product.
#[derive(Debug, Clone, PartialEq)]
pub struct GyrationMatrix<S: Scalar> {
    dim: usize,
    columns: Vec<Vector<S>>,
}

impl<S: Scalar> GyrationMatrix<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.columns[j].coords()[i]
    }

    pub fn column(&self, j: usize) -> &Vector<S> {
        &self.columns[j]
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, i| acc + self.entry(i, i).clone())
    }

    pub fn apply(&self, w: &Vector<S>) -> Result<Vector<S>> {
        if w.dim() != self.dim {
            return Err(GyroError::DimensionMismatch {
                expected: self.dim,
                actual: w.dim(),
            });
        }
        let mut out = Vector::zeros(self.dim);
        for (col, wj) in self.columns.iter().zip(w.coords()) {
            out = out.add(&col.scale(wj))?;
        }
        Ok(out)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            columns: (0..dim).map(|j| Vector::basis(dim, j)).collect(),
        }
    }

    /// Largest residual of `MᵀM` against the identity.
    pub fn orthogonality_residual(&self, tol: &Tolerance) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expected = if i == j { S::one() } else { S::zero() };
                let entry = self.columns[i]
                    .inner(&self.columns[j])
                    .expect("columns share the dimension");
                worst = worst.max(entry.residual(&expected, tol));
            }
        }
        worst
    }
}

/// Materializes `gyr[u,v]` as a matrix by applying [`gyrate`] to the standard
/// basis.
pub fn gyration_matrix<S: Scalar>(
    u: &BallPoint<S>,
    v: &BallPoint<S>,
) -> Result<GyrationMatrix<S>> {
    ensure_same_params(u.params(), v.params())?;
    let dim = u.params().dim();
    let columns = (0..dim)
        .map(|j| {
            gyrate(u, v, &AmbientVector::basis(u.params(), j))
                .map(|image| image.coords.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GyrationMatrix { dim, columns })
}

/// One row of the `s → ∞` scan: the same coordinates reinterpreted inside a
/// radius-`s` ball, with `e(s) = ‖u ⊕_s v − (u + v)‖`.
#[derive(Debug, Clone)]
pub struct LimitStep<S: Scalar> {
    pub s: S,
    pub error: f64,
}

/// Scans `s = s₀·2^k` for `k = 0..=doublings`, holding the coordinates of
/// `u` and `v` fixed while the ball expands. Möbius addition reduces to
/// vector addition at second order: `e(s)/e(2s) → 4`.
///
/// Fails if an operand lies outside the smallest ball.
pub fn limit_scan<S: Scalar>(
    u: &Vector<S>,
    v: &Vector<S>,
    s0: &S,
    doublings: u32,
) -> Result<Vec<LimitStep<S>>> {
    if u.dim() != v.dim() {
        return Err(GyroError::DimensionMismatch {
            expected: u.dim(),
            actual: v.dim(),
        });
    }
    let plain_sum = u.add(v)?;
    let mut steps = Vec::with_capacity(doublings as usize + 1);
    let mut s = s0.clone();
    for _ in 0..=doublings {
        let params = BallParams::new(u.dim(), s.clone())?;
        let up = BallPoint::new(u.coords().to_vec(), &params)?;
        let vp = BallPoint::new(v.coords().to_vec(), &params)?;
        let sum = up.mobius_add(&vp)?;
        let error_sq = sum.vector().sub(&plain_sum)?.norm_sq();
        steps.push(LimitStep {
            s: s.clone(),
            error: error_sq.to_f64().sqrt(),
        });
        s = s * S::from_int(2);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Rat = BigRational;

    fn r(num: i64, den: i64) -> Rat {
        Rat::from_ratio(num, den)
    }

    fn unit_params() -> BallParams<Rat> {
        BallParams::new(2, Rat::from_int(1)).unwrap()
    }

    fn pt(coords: Vec<Rat>) -> BallPoint<Rat> {
        let params = BallParams::new(coords.len(), Rat::from_int(1)).unwrap();
        BallPoint::new(coords, &params).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(BallParams::new(0, 1.0).is_err());
        assert!(BallParams::new(2, 0.0).is_err());
        assert!(BallParams::new(2, -1.0).is_err());
        assert!(BallParams::new(2, f64::INFINITY).is_err());
        assert!(BallParams::new(1, 0.5).is_ok());
    }

    #[test]
    fn point_construction_enforces_interior() {
        let params = unit_params();
        assert!(BallPoint::new(vec![r(3, 5), r(4, 5)], &params).is_err());
        assert!(BallPoint::new(vec![r(1, 2), r(0, 1)], &params).is_ok());
        assert!(matches!(
            BallPoint::new(vec![r(1, 2)], &params),
            Err(GyroError::DimensionMismatch { .. })
        ));
        let small = BallParams::new(2, r(1, 2)).unwrap();
        assert!(BallPoint::new(vec![r(1, 2), r(0, 1)], &small).is_err());
        assert!(BallPoint::new(vec![r(1, 4), r(0, 1)], &small).is_ok());
    }

    #[test]
    fn addition_identity_and_pinned_values() {
        let params = unit_params();
        let origin = BallPoint::origin(&params);
        let v = pt(vec![r(1, 10), r(2, 10)]);
        assert_eq!(origin.mobius_add(&v).unwrap(), v);

        // (1/2,0) ⊕ (1/2,0) = (4/5, 0), matching the disc example.
        let u = pt(vec![r(1, 2), r(0, 1)]);
        assert_eq!(u.mobius_add(&u).unwrap(), pt(vec![r(4, 5), r(0, 1)]));

        // (1/2,0) ⊕ (0,1/2) = (10/17, 6/17) and the swapped order gives
        // (6/17, 10/17) — Möbius addition is not commutative.
        let w = pt(vec![r(0, 1), r(1, 2)]);
        assert_eq!(
            u.mobius_add(&w).unwrap(),
            pt(vec![r(10, 17), r(6, 17)])
        );
        assert_eq!(
            w.mobius_add(&u).unwrap(),
            pt(vec![r(6, 17), r(10, 17)])
        );
    }

    #[test]
    fn params_mismatch_is_an_error() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let params2 = BallParams::new(2, Rat::from_int(2)).unwrap();
        let v = BallPoint::new(vec![r(1, 2), r(0, 1)], &params2).unwrap();
        assert_eq!(u.mobius_add(&v), Err(GyroError::ParamsMismatch));
    }

    #[test]
    fn negation_subtraction_cancellation() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        assert_eq!(u.mobius_sub(&u).unwrap(), BallPoint::origin(&unit_params()));
        assert_eq!(
            pt(vec![r(3, 5), r(0, 1)]).neg(),
            pt(vec![r(-3, 5), r(0, 1)])
        );
        // left cancellation: ⊖u ⊕ (u ⊕ v) = v
        let uv = u.mobius_add(&v).unwrap();
        assert_eq!(u.neg().mobius_add(&uv).unwrap(), v);
    }

    #[test]
    fn coefficients_pinned_and_degenerate() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        let w = u.to_ambient();
        let c = gyration_coeffs(&u, &v, &w).unwrap();
        assert_eq!(c.a, r(-1, 16));
        assert_eq!(c.b, r(-1, 4));
        assert_eq!(c.d, r(17, 16));

        // v = 0: A = 0, B = −(1/s²)u·w, D = 1.
        let zero = BallPoint::origin(&unit_params());
        let c = gyration_coeffs(&u, &zero, &w).unwrap();
        assert_eq!(c.a, r(0, 1));
        assert_eq!(c.b, r(-1, 4));
        assert_eq!(c.d, r(1, 1));

        // u = 0: A = (1/s²)v·w, B = 0, D = 1.
        let c = gyration_coeffs(&zero, &v, &w).unwrap();
        assert_eq!(c.a, v.vector().inner(w.vector()).unwrap());
        assert_eq!(c.b, r(0, 1));
        assert_eq!(c.d, r(1, 1));
    }

    #[test]
    fn gyrate_pinned_and_degenerate() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        let w = u.to_ambient();
        let image = gyrate(&u, &v, &w).unwrap();
        assert_eq!(image.coords(), &[r(15, 34), r(-4, 17)]);

        // gyr[u, 0] = id and gyr[u, u] = id.
        let zero = BallPoint::origin(&unit_params());
        let probe = AmbientVector::new(vec![r(5, 4), r(-3, 4)], &unit_params()).unwrap();
        assert_eq!(gyrate(&u, &zero, &probe).unwrap(), probe);
        assert_eq!(gyrate(&u, &u, &probe).unwrap(), probe);
    }

    #[test]
    fn definitional_gyration_agrees() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        let z = pt(vec![r(1, 2), r(0, 1)]);
        let closed = gyrate_point(&u, &v, &z).unwrap();
        let def = gyrate_via_definition(&u, &v, &z).unwrap();
        assert_eq!(closed, def);
        assert_eq!(def.coords(), &[r(15, 34), r(-4, 17)]);

        // gyr[u,v]0 = 0 and gyr[0,v] = id.
        let zero = BallPoint::origin(&unit_params());
        assert_eq!(gyrate_via_definition(&u, &v, &zero).unwrap(), zero);
        assert_eq!(gyrate_via_definition(&zero, &v, &z).unwrap(), z);
    }

    #[test]
    fn matrix_pinned_and_identity_cases() {
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        let m = gyration_matrix(&u, &v).unwrap();
        assert_eq!(m.column(0).coords(), &[r(15, 17), r(-8, 17)]);
        assert_eq!(m.column(1).coords(), &[r(8, 17), r(15, 17)]);
        assert_eq!(m.trace(), r(30, 17));
        assert_eq!(m.orthogonality_residual(&Tolerance::exact()), 0.0);

        let zero = BallPoint::origin(&unit_params());
        assert_eq!(gyration_matrix(&u, &zero).unwrap(), GyrationMatrix::identity(2));
        assert_eq!(gyration_matrix(&u, &u).unwrap(), GyrationMatrix::identity(2));
    }

    #[test]
    fn matrix_matches_disc_rotation() {
        // The matrix for gyr[(1/2,0),(0,1/2)] is rotation by the angle of the
        // disc gyration 15/17 − (8/17)i.
        let u = pt(vec![r(1, 2), r(0, 1)]);
        let v = pt(vec![r(0, 1), r(1, 2)]);
        let m = gyration_matrix(&u, &v).unwrap();
        let g = u.to_disc().unwrap().gyration(&v.to_disc().unwrap());
        assert_eq!(m.entry(0, 0), g.re());
        assert_eq!(m.entry(1, 0), g.im());
        assert_eq!(*m.entry(0, 1), -g.im().clone());
        assert_eq!(m.entry(1, 1), g.re());
    }

    #[test]
    fn disc_correspondence_round_trip_and_intertwining() {
        let a = DiscPoint::new(r(0, 1), r(1, 2)).unwrap();
        let b = DiscPoint::new(r(1, 2), r(0, 1)).unwrap();
        let z = DiscPoint::new(r(6, 17), r(10, 17)).unwrap();
        assert_eq!(BallPoint::from_disc(&z).to_disc().unwrap(), z);

        // from_disc(a ⊕ b) = from_disc(a) ⊕ from_disc(b) = (6/17, 10/17).
        let lhs = BallPoint::from_disc(&a.mobius_add(&b));
        let rhs = BallPoint::from_disc(&a)
            .mobius_add(&BallPoint::from_disc(&b))
            .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.coords(), &[r(6, 17), r(10, 17)]);

        // apply_gyration intertwines with gyrate.
        let g = a.gyration(&b);
        let rotated = BallPoint::from_disc(&g.apply(&z));
        let gyrated = gyrate_point(
            &BallPoint::from_disc(&a),
            &BallPoint::from_disc(&b),
            &BallPoint::from_disc(&z),
        )
        .unwrap();
        assert_eq!(rotated, gyrated);

        // to_disc rejects other parameter spaces.
        let p3 = BallParams::new(3, Rat::from_int(1)).unwrap();
        assert_eq!(
            BallPoint::origin(&p3).to_disc(),
            Err(GyroError::NotDiscCompatible)
        );
        let p_s2 = BallParams::new(2, Rat::from_int(2)).unwrap();
        assert_eq!(
            BallPoint::origin(&p_s2).to_disc(),
            Err(GyroError::NotDiscCompatible)
        );
    }

    #[test]
    fn invertibility_inner_preservation_linearity_exact() {
        let params = BallParams::new(3, Rat::from_int(2)).unwrap();
        let u = BallPoint::new(vec![r(1, 2), r(-1, 4), r(1, 8)], &params).unwrap();
        let v = BallPoint::new(vec![r(-1, 2), r(1, 2), r(3, 4)], &params).unwrap();
        let w1 = AmbientVector::new(vec![r(5, 2), r(0, 1), r(-2, 1)], &params).unwrap();
        let w2 = AmbientVector::new(vec![r(1, 3), r(1, 5), r(2, 1)], &params).unwrap();

        // gyr[v,u] ∘ gyr[u,v] = id on ambient vectors.
        let image = gyrate(&u, &v, &w1).unwrap();
        assert_eq!(gyrate(&v, &u, &image).unwrap(), w1);

        // Inner products preserved.
        let g1 = gyrate(&u, &v, &w1).unwrap();
        let g2 = gyrate(&u, &v, &w2).unwrap();
        assert_eq!(g1.inner(&g2).unwrap(), w1.inner(&w2).unwrap());
        assert_eq!(g1.norm_sq(), w1.norm_sq());

        // Linearity of the extension.
        let alpha = r(3, 7);
        let beta = r(-2, 5);
        let combo = w1.scale(&alpha).add(&w2.scale(&beta)).unwrap();
        assert_eq!(
            gyrate(&u, &v, &combo).unwrap(),
            g1.scale(&alpha).add(&g2.scale(&beta)).unwrap()
        );

        // D > 0.
        let c = gyration_coeffs(&u, &v, &w1).unwrap();
        assert!(c.d > Rat::from_int(0));
    }

    #[test]
    fn one_dimensional_gyrations_are_trivial() {
        let params = BallParams::new(1, Rat::from_int(1)).unwrap();
        let u = BallPoint::new(vec![r(1, 2)], &params).unwrap();
        let v = BallPoint::new(vec![r(-3, 4)], &params).unwrap();
        let w = AmbientVector::new(vec![r(7, 8)], &params).unwrap();
        assert_eq!(gyrate(&u, &v, &w).unwrap(), w);
        assert_eq!(gyration_matrix(&u, &v).unwrap(), GyrationMatrix::identity(1));
        // 1-D Möbius addition is commutative.
        assert_eq!(u.mobius_add(&v).unwrap(), v.mobius_add(&u).unwrap());
    }

    #[test]
    fn limit_scan_second_order_and_degenerate_rows() {
        let u = Vector::new(vec![1.0, 0.0]).unwrap();
        let steps = limit_scan(&u, &u, &10.0, 10).unwrap();
        assert_eq!(steps.len(), 11);
        for pair in steps.windows(2) {
            let ratio = pair[0].error / pair[1].error;
            assert!((3.5..=4.5).contains(&ratio), "ratio {ratio} out of band");
        }

        // v = 0: e(s) = 0 for all s.
        let zero = Vector::new(vec![0.0, 0.0]).unwrap();
        for step in limit_scan(&u, &zero, &10.0, 5).unwrap() {
            assert_eq!(step.error, 0.0);
        }
        // v = −u: cancellation up to float dust in the coefficients.
        for step in limit_scan(&u, &u.neg(), &10.0, 5).unwrap() {
            assert!(step.error <= 1e-15, "error {}", step.error);
        }
        // Exact cancellation on the rational backend.
        type Rat2 = BigRational;
        let ur = Vector::new(vec![Rat2::from_int(1), Rat2::from_int(0)]).unwrap();
        for step in limit_scan(&ur, &ur.neg(), &Rat2::from_int(10), 5).unwrap() {
            assert_eq!(step.error, 0.0);
        }
        // Operand outside the smallest ball.
        assert!(limit_scan(&u, &u, &0.5, 3).is_err());
    }

    #[test]
    fn sampling_dimensions_and_determinism() {
        for (dim, s) in [(1usize, 1.0f64), (2, 0.5), (3, 1.0), (5, 10.0), (10, 10.0)] {
            let params = BallParams::new(dim, s).unwrap();
            for index in 0..16 {
                let p = BallPoint::sample(&params, 9, index);
                assert_eq!(p.coords().len(), dim);
                assert!(p.norm_sq() < s * s);
                assert_eq!(p, BallPoint::sample(&params, 9, index));
            }
        }
        let params = BallParams::new(3, Rat::from_int(2)).unwrap();
        let p = BallPoint::sample(&params, 5, 0);
        assert!(p.norm_sq() < Rat::from_int(4));
    }

    #[test]
    fn float_and_rational_backends_agree_on_shared_points() {
        let tol = Tolerance::default();
        let rparams = BallParams::new(3, Rat::from_int(1)).unwrap();
        let fparams = BallParams::new(3, 1.0).unwrap();
        for index in 0..64u64 {
            let ru = BallPoint::sample(&rparams, 3, 2 * index);
            let rv = BallPoint::sample(&rparams, 3, 2 * index + 1);
            let fu = BallPoint::new(
                ru.coords().iter().map(Scalar::to_f64).collect(),
                &fparams,
            )
            .unwrap();
            let fv = BallPoint::new(
                rv.coords().iter().map(Scalar::to_f64).collect(),
                &fparams,
            )
            .unwrap();
            let exact = ru.mobius_add(&rv).unwrap();
            let float = fu.mobius_add(&fv).unwrap();
            for (e, f) in exact.coords().iter().zip(float.coords()) {
                assert!(Scalar::to_f64(e).approx_eq(f, &tol));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn float_ball_laws(ix in 0u64..1u64 << 40, dim in 1usize..6) {
            let tol = Tolerance::default();
            let params = BallParams::new(dim, 1.0).unwrap();
            let u = BallPoint::sample(&params, 21, 3 * ix);
            let v = BallPoint::sample(&params, 21, 3 * ix + 1);
            let z = BallPoint::sample(&params, 21, 3 * ix + 2);

            // closure
            let sum = u.mobius_add(&v).unwrap();
            prop_assert!(sum.norm_sq() < 1.0);

            // D > 0
            let c = gyration_coeffs(&u, &v, &z.to_ambient()).unwrap();
            prop_assert!(c.d > 0.0);

            // closed form vs definition
            let closed = gyrate_point(&u, &v, &z).unwrap();
            let def = gyrate_via_definition(&u, &v, &z).unwrap();
            prop_assert!(closed.residual(&def, &tol) <= tol.atol);

            // invertibility and norm preservation
            let back = gyrate_point(&v, &u, &closed).unwrap();
            prop_assert!(back.residual(&z, &tol) <= tol.atol);
            prop_assert!(closed.norm_sq().residual(&z.norm_sq(), &tol) <= tol.atol);

            // automorphism: gyr[u,v](u ⊕ v) = gyr[u,v]u ⊕ gyr[u,v]v
            let lhs = gyrate_point(&u, &v, &sum).unwrap();
            let gu = gyrate_point(&u, &v, &u).unwrap();
            let gv = gyrate_point(&u, &v, &v).unwrap();
            let rhs = gu.mobius_add(&gv).unwrap();
            prop_assert!(lhs.residual(&rhs, &tol) <= tol.atol);

            // trace bound: −id is not a gyration
            let m = gyration_matrix(&u, &v).unwrap();
            prop_assert!(m.trace() > -(dim as f64));
        }
    }
}
