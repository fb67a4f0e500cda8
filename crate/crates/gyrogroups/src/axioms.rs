//! Generic gyrogroup axiom engine.
//!
//! A [`Realization`] presents a carrier — the disc, a ball, or a finite
//! Cayley table — through its operation, negation, zero, gyrator and a
//! deterministic sampler. The engine checks the gyrogroup axioms
//!
//! * G1 left identity, G2 left inverse,
//! * G3 left gyroassociative law,
//! * G4 gyrations are automorphisms (respect ⊕, inverted by `gyr[b,a]`),
//! * G5 left loop property,
//! * G6 gyrocommutative law,
//!
//! and the derived identities (right gyroassociative law, right loop
//! property, nested gyration identity, automorphic inverse property, left
//! cancellation law), producing a machine-readable [`AxiomReport`] with
//! replayable counterexamples.
//!
//! Finite carriers are checked exhaustively over all tuples; continuous
//! carriers are sampled deterministically in `(seed, index)`. On exact
//! carriers every comparison must hold with residual exactly zero; the
//! tolerance only applies to the float backend.
//!
//! Sample indices are independent of one another and the per-check
//! aggregation (failure counts add, residuals combine by max, the kept
//! counterexample is the smallest-index one) is associative and commutative,
//! so a report never depends on evaluation order.

use serde::Serialize;

use crate::ball::{gyrate_point, BallParams, BallPoint};
use crate::disc::DiscPoint;
use crate::error::{GyroError, Result};
use crate::numeric::{Scalar, Tolerance};

/// A carrier presented to the axiom engine.
pub trait Realization {
    type Elem: Clone;

    /// The designated left identity.
    fn zero(&self) -> Self::Elem;

    /// The binary operation `a ⊕ b`.
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The left inverse `⊖a`.
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// The gyration action `gyr[a,b]c`.
    fn gyr(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem;

    /// Deterministic in `(seed, index)`.
    fn sample(&self, seed: u64, index: u64) -> Self::Elem;

    /// Comparison margin between two elements; `0.0` means exactly equal.
    fn residual(&self, x: &Self::Elem, y: &Self::Elem, tol: &Tolerance) -> f64;

    /// Whether comparisons on this carrier are exact (residuals must be zero
    /// to pass, regardless of the configured tolerance).
    fn exact(&self) -> bool;

    fn display(&self, e: &Self::Elem) -> String;

    /// `Some(n)` for finite carriers of `n` elements; checks then quantify
    /// over all tuples instead of sampling.
    fn carrier_len(&self) -> Option<usize> {
        None
    }

    /// The `i`-th element of a finite carrier.
    fn element(&self, _i: usize) -> Option<Self::Elem> {
        None
    }
}

/// Suite parameters: sample count, seed, and float tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: u64,
    pub tolerance: Tolerance,
}

impl SuiteConfig {
    pub fn new(seed: u64, samples: u64, tolerance: Tolerance) -> Result<Self> {
        if samples == 0 {
            return Err(GyroError::NoSamples);
        }
        Ok(Self {
            seed,
            samples,
            tolerance,
        })
    }
}

/// The first failing sample of a check, with enough context to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub sample_index: u64,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub residual: f64,
}

/// Outcome of one identity over the whole sample set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub samples_run: u64,
    pub failures: u64,
    pub max_residual: f64,
    pub first_counterexample: Option<Counterexample>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Machine-readable result of a full suite run. Deterministic for a fixed
/// `(realization, seed, samples, tolerance)`.
///
/// `atol`/`rtol` are the effective values the pass/fail decision used: zero
/// on exact carriers, so `failures == 0` iff `max_residual <= atol` holds
/// for every check on every backend.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub samples: u64,
    pub atol: f64,
    pub rtol: f64,
    pub exact: bool,
    pub checks: Vec<CheckRecord>,
    pub all_passed: bool,
}

impl AxiomReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0, f64::max)
    }
}

/// Names of all checks the suite runs, in report order.
pub const CHECK_NAMES: [&str; 12] = [
    "g1_left_identity",
    "g2_left_inverse",
    "g3_left_gyroassociative",
    "g4_automorphism",
    "g4_gyration_inverse",
    "g5_left_loop",
    "g6_gyrocommutative",
    "right_gyroassociative",
    "right_loop",
    "nested_gyration",
    "automorphic_inverse",
    "left_cancellation",
];

/// Derived identities beyond the axioms G1–G6.
pub const DERIVED_CHECK_NAMES: [&str; 5] = [
    "right_gyroassociative",
    "right_loop",
    "nested_gyration",
    "automorphic_inverse",
    "left_cancellation",
];

/// Number of sampled elements each check consumes per sample index.
pub fn check_arity(name: &str) -> Option<u32> {
    Some(match name {
        "g1_left_identity" | "g2_left_inverse" => 1,
        "g6_gyrocommutative" | "automorphic_inverse" | "left_cancellation" => 2,
        "g3_left_gyroassociative"
        | "g4_gyration_inverse"
        | "g5_left_loop"
        | "right_gyroassociative"
        | "right_loop"
        | "nested_gyration" => 3,
        "g4_automorphism" => 4,
        _ => return None,
    })
}

/// Evaluates both sides of the named identity on a tuple of elements.
/// `None` for unknown names. The single source of truth shared by the
/// suite runner and counterexample replay.
pub fn eval_check<R: Realization>(
    r: &R,
    name: &str,
    t: &[R::Elem],
) -> Option<(R::Elem, R::Elem)> {
    let pair = match name {
        // 0 ⊕ a = a
        "g1_left_identity" => (r.op(&r.zero(), &t[0]), t[0].clone()),
        // ⊖a ⊕ a = 0
        "g2_left_inverse" => (r.op(&r.neg(&t[0]), &t[0]), r.zero()),
        // a ⊕ (b ⊕ c) = (a ⊕ b) ⊕ gyr[a,b]c
        "g3_left_gyroassociative" => (
            r.op(&t[0], &r.op(&t[1], &t[2])),
            r.op(&r.op(&t[0], &t[1]), &r.gyr(&t[0], &t[1], &t[2])),
        ),
        // gyr[a,b](c ⊕ d) = gyr[a,b]c ⊕ gyr[a,b]d
        "g4_automorphism" => (
            r.gyr(&t[0], &t[1], &r.op(&t[2], &t[3])),
            r.op(&r.gyr(&t[0], &t[1], &t[2]), &r.gyr(&t[0], &t[1], &t[3])),
        ),
        // gyr[b,a](gyr[a,b]c) = c
        "g4_gyration_inverse" => (
            r.gyr(&t[1], &t[0], &r.gyr(&t[0], &t[1], &t[2])),
            t[2].clone(),
        ),
        // gyr[a⊕b, b]c = gyr[a,b]c
        "g5_left_loop" => (
            r.gyr(&r.op(&t[0], &t[1]), &t[1], &t[2]),
            r.gyr(&t[0], &t[1], &t[2]),
        ),
        // a ⊕ b = gyr[a,b](b ⊕ a)
        "g6_gyrocommutative" => (
            r.op(&t[0], &t[1]),
            r.gyr(&t[0], &t[1], &r.op(&t[1], &t[0])),
        ),
        // (a ⊕ b) ⊕ c = a ⊕ (b ⊕ gyr[b,a]c)
        "right_gyroassociative" => (
            r.op(&r.op(&t[0], &t[1]), &t[2]),
            r.op(&t[0], &r.op(&t[1], &r.gyr(&t[1], &t[0], &t[2]))),
        ),
        // gyr[a, b⊕a]c = gyr[a,b]c
        "right_loop" => (
            r.gyr(&t[0], &r.op(&t[1], &t[0]), &t[2]),
            r.gyr(&t[0], &t[1], &t[2]),
        ),
        // gyr[b, ⊖gyr[b,a]a]c = gyr[a,b]c
        "nested_gyration" => (
            r.gyr(&t[1], &r.neg(&r.gyr(&t[1], &t[0], &t[0])), &t[2]),
            r.gyr(&t[0], &t[1], &t[2]),
        ),
        // ⊖(a ⊕ b) = ⊖a ⊕ ⊖b
        "automorphic_inverse" => (
            r.neg(&r.op(&t[0], &t[1])),
            r.op(&r.neg(&t[0]), &r.neg(&t[1])),
        ),
        // ⊖a ⊕ (a ⊕ b) = b
        "left_cancellation" => (r.op(&r.neg(&t[0]), &r.op(&t[0], &t[1])), t[1].clone()),
        _ => return None,
    };
    Some(pair)
}

fn draw_tuple<R: Realization>(r: &R, seed: u64, index: u64, arity: u32) -> Vec<R::Elem> {
    match r.carrier_len() {
        Some(n) => {
            // Exhaustive mode: decode the index as base-n digits.
            let mut rest = index;
            (0..arity)
                .map(|_| {
                    let digit = (rest % n as u64) as usize;
                    rest /= n as u64;
                    r.element(digit).expect("digit is in range")
                })
                .collect()
        }
        None => (0..arity)
            .map(|j| r.sample(seed, index * arity as u64 + j as u64))
            .collect(),
    }
}

fn effective_atol<R: Realization>(r: &R, cfg: &SuiteConfig) -> f64 {
    if r.exact() {
        0.0
    } else {
        cfg.tolerance.atol
    }
}

/// Runs one named check over the configured samples (or exhaustively on a
/// finite carrier). Aggregation is order-independent: failure counts add,
/// residuals combine by max, and the counterexample kept is the one with the
/// smallest sample index.
pub fn run_check<R: Realization>(r: &R, cfg: &SuiteConfig, name: &str) -> CheckRecord {
    let arity = check_arity(name).expect("known check name");
    let total = match r.carrier_len() {
        Some(n) => (n as u64).pow(arity),
        None => cfg.samples,
    };
    let atol = effective_atol(r, cfg);

    let mut failures = 0u64;
    let mut max_residual = 0.0f64;
    let mut first_counterexample = None;
    for index in 0..total {
        let tuple = draw_tuple(r, cfg.seed, index, arity);
        let (lhs, rhs) = eval_check(r, name, &tuple).expect("known check name");
        let residual = r.residual(&lhs, &rhs, &cfg.tolerance);
        max_residual = max_residual.max(residual);
        if residual > atol {
            failures += 1;
            if first_counterexample.is_none() {
                first_counterexample = Some(Counterexample {
                    sample_index: index,
                    inputs: tuple.iter().map(|e| r.display(e)).collect(),
                    lhs: r.display(&lhs),
                    rhs: r.display(&rhs),
                    residual,
                });
            }
        }
    }
    CheckRecord {
        name: name.to_string(),
        samples_run: total,
        failures,
        max_residual,
        first_counterexample,
    }
}

/// Re-evaluates the named check at one sample index and returns the residual,
/// reproducing the value recorded in a counterexample.
pub fn replay<R: Realization>(
    r: &R,
    cfg: &SuiteConfig,
    name: &str,
    sample_index: u64,
) -> Option<f64> {
    let arity = check_arity(name)?;
    let tuple = draw_tuple(r, cfg.seed, sample_index, arity);
    let (lhs, rhs) = eval_check(r, name, &tuple)?;
    Some(r.residual(&lhs, &rhs, &cfg.tolerance))
}

pub fn check_g1<R: Realization>(r: &R, cfg: &SuiteConfig) -> CheckRecord {
    run_check(r, cfg, "g1_left_identity")
}

pub fn check_g2<R: Realization>(r: &R, cfg: &SuiteConfig) -> CheckRecord {
    run_check(r, cfg, "g2_left_inverse")
}

pub fn check_g3<R: Realization>(r: &R, cfg: &SuiteConfig) -> CheckRecord {
    run_check(r, cfg, "g3_left_gyroassociative")
}

/// G4 yields two records: the automorphism identity and bijectivity via the
/// inverse gyration `gyr[b,a] ∘ gyr[a,b] = id`.
pub fn check_g4<R: Realization>(r: &R, cfg: &SuiteConfig) -> [CheckRecord; 2] {
    [
        run_check(r, cfg, "g4_automorphism"),
        run_check(r, cfg, "g4_gyration_inverse"),
    ]
}

pub fn check_g5<R: Realization>(r: &R, cfg: &SuiteConfig) -> CheckRecord {
    run_check(r, cfg, "g5_left_loop")
}

pub fn check_g6<R: Realization>(r: &R, cfg: &SuiteConfig) -> CheckRecord {
    run_check(r, cfg, "g6_gyrocommutative")
}

/// One record per derived identity of the disc section: right
/// gyroassociative, right loop, nested gyration, automorphic inverse, left
/// cancellation.
pub fn check_derived_identities<R: Realization>(r: &R, cfg: &SuiteConfig) -> Vec<CheckRecord> {
    DERIVED_CHECK_NAMES
        .iter()
        .map(|name| run_check(r, cfg, name))
        .collect()
}

/// Runs every check and aggregates the report.
pub fn run_suite<R: Realization>(r: &R, cfg: &SuiteConfig) -> AxiomReport {
    let checks: Vec<CheckRecord> = CHECK_NAMES
        .iter()
        .map(|name| run_check(r, cfg, name))
        .collect();
    let all_passed = checks.iter().all(CheckRecord::passed);
    let exact = r.exact();
    AxiomReport {
        seed: cfg.seed,
        samples: cfg.samples,
        atol: effective_atol(r, cfg),
        rtol: if exact { 0.0 } else { cfg.tolerance.rtol },
        exact,
        checks,
        all_passed,
    }
}

/// The Möbius disc gyrogroup presented to the engine. Gyrations act through
/// the canonical unimodular value of `gyr[a,b]`, so the engine exercises a
/// route algebraically independent of the ⊖/⊕ expression it verifies.
#[derive(Debug, Default, Clone, Copy)]
pub struct DiscRealization<S: Scalar> {
    _marker: std::marker::PhantomData<S>,
}

impl<S: Scalar> DiscRealization<S> {
    pub fn new() -> Self {
        Self {
            _marker: std::marker::PhantomData,
        }
    }
}

impl<S: Scalar> Realization for DiscRealization<S> {
    type Elem = DiscPoint<S>;

    fn zero(&self) -> Self::Elem {
        DiscPoint::origin()
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mobius_add(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn gyr(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        a.gyration(b).apply(c)
    }

    fn sample(&self, seed: u64, index: u64) -> Self::Elem {
        DiscPoint::sample(seed, index)
    }

    fn residual(&self, x: &Self::Elem, y: &Self::Elem, tol: &Tolerance) -> f64 {
        x.residual(y, tol)
    }

    fn exact(&self) -> bool {
        S::EXACT
    }

    fn display(&self, e: &Self::Elem) -> String {
        e.render()
    }
}

/// A Möbius ball gyrogroup presented to the engine. Gyrations act through
/// the closed form `w + 2(Au + Bv)/D`, independent of the definitional
/// ⊖/⊕ expression.
#[derive(Debug, Clone)]
pub struct BallRealization<S: Scalar> {
    params: BallParams<S>,
}

impl<S: Scalar> BallRealization<S> {
    pub fn new(params: BallParams<S>) -> Self {
        Self { params }
    }

    pub fn params(&self) -> &BallParams<S> {
        &self.params
    }
}

impl<S: Scalar> Realization for BallRealization<S> {
    type Elem = BallPoint<S>;

    fn zero(&self) -> Self::Elem {
        BallPoint::origin(&self.params)
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mobius_add(b).expect("elements share ball parameters")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn gyr(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        gyrate_point(a, b, c).expect("elements share ball parameters")
    }

    fn sample(&self, seed: u64, index: u64) -> Self::Elem {
        BallPoint::sample(&self.params, seed, index)
    }

    fn residual(&self, x: &Self::Elem, y: &Self::Elem, tol: &Tolerance) -> f64 {
        x.residual(y, tol)
    }

    fn exact(&self) -> bool {
        S::EXACT
    }

    fn display(&self, e: &Self::Elem) -> String {
        e.render()
    }
}
