//! # gyrogroups
//!
//! Möbius addition and gyrations on the complex open unit disc and on the
//! s-ball of n-dimensional real inner-product space, together with a generic
//! gyrogroup axiom engine and a finite Cayley-table classifier.
//!
//! Möbius addition `a ⊕ z = (a + z)/(1 + āz)` is neither commutative nor
//! associative, yet the disc carries a group-like structure once the
//! *gyrations* `gyr[a,b] = (1 + ab̄)/(1 + āb)` enter the laws:
//!
//! * gyrocommutativity: `a ⊕ b = gyr[a,b](b ⊕ a)`,
//! * left gyroassociativity: `a ⊕ (b ⊕ z) = (a ⊕ b) ⊕ gyr[a,b]z`,
//!
//! and the same structure survives unchanged on the ball of any real
//! inner-product space. This crate implements both carriers over two scalar
//! backends — `f64` and exact [`num_rational::BigRational`] — so every
//! identity can be certified with residual exactly zero, not merely within a
//! float tolerance.
//!
//! ## Modules
//!
//! * [`numeric`] — scalar backends, tolerance policy, vectors.
//! * [`disc`] — the Möbius gyrogroup `(𝔻, ⊕)` with gyrations as unimodular
//!   complex values.
//! * [`ball`] — the Möbius gyrogroup `(V_s, ⊕)`: ball addition, closed-form
//!   and definitional gyrations, gyration matrices, the disc correspondence,
//!   and the `s → ∞` limit scan.
//! * [`axioms`] — the axiom engine: checks G1–G6 and the derived identities
//!   on any [`axioms::Realization`], with replayable counterexamples.
//! * [`finite`] — Cayley-table parsing and exhaustive gyrogroup
//!   classification.
//! * [`cli`] — the `gyrogroups` binary: `add`, `gyr`, `suite`, `table`,
//!   `limit-scan` with deterministic JSON output.
//!
//! ## Example
//!
//! ```
//! use gyrogroups::disc::DiscPoint;
//! use num_rational::BigRational;
//! use gyrogroups::numeric::Scalar;
//!
//! let half = DiscPoint::new(BigRational::from_ratio(1, 2), BigRational::from_int(0)).unwrap();
//! let sum = half.mobius_add(&half);
//! assert_eq!(*sum.re(), BigRational::from_ratio(4, 5)); // 1/2 ⊕ 1/2 = 4/5
//! ```
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example disc_basics`.

#![forbid(unsafe_code)]

pub mod axioms;
pub mod ball;
pub mod cli;
pub mod disc;
pub mod error;
pub mod finite;
pub mod numeric;

pub use axioms::{run_suite, AxiomReport, BallRealization, DiscRealization, SuiteConfig};
pub use ball::{
    gyrate, gyrate_point, gyrate_via_definition, gyration_coeffs, gyration_matrix,
    AmbientVector, BallParams, BallPoint, GyrationCoefficients, GyrationMatrix,
};
pub use disc::{DiscGyration, DiscPoint};
pub use error::GyroError;
pub use finite::{classify, CayleyTable, Classification, Verdict};
pub use numeric::{approx_eq, Scalar, Tolerance, Vector};
