//! Command-line frontend with deterministic JSON output.
//!
//! Subcommands: `add`, `gyr`, `suite`, `table`, `limit-scan`. Reports go to
//! stdout as single-line JSON with a fixed key order; diagnostics go to
//! stderr. Identical invocations produce byte-identical output.
//!
//! Exit codes: `0` success (all checks passed / gyrogroup verdict), `1`
//! failed checks or a `NotGyrogroup` verdict, `2` invalid operands, parse
//! errors, or usage errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::axioms::{
    run_suite, BallRealization, CheckRecord, DiscRealization, Realization, SuiteConfig,
};
use crate::ball::{
    gyrate, gyration_coeffs, limit_scan, AmbientVector, BallParams, BallPoint,
};
use crate::error::{GyroError, Result};
use crate::finite::{classify, CayleyTable, Verdict};
use crate::numeric::{Scalar, Tolerance, Vector};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(
    name = "gyrogroups",
    version,
    about = "Möbius gyrogroup calculator, axiom suites, and Cayley-table classification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Möbius addition of two points.
    Add(AddArgs),
    /// Apply the gyration gyr[a,b] to a third operand.
    Gyr(GyrArgs),
    /// Run the gyrogroup axiom suite on a carrier.
    Suite(SuiteArgs),
    /// Classify a finite Cayley table.
    Table(TableArgs),
    /// Scan s -> infinity: Möbius addition approaches vector addition.
    LimitScan(LimitScanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    /// IEEE double precision.
    Float,
    /// Exact arbitrary-precision rationals.
    Rational,
}

impl BackendArg {
    fn name(self) -> &'static str {
        match self {
            BackendArg::Float => "float",
            BackendArg::Rational => "rational",
        }
    }
}

/// Exactly one of `--disc` / `--ball`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Carrier {
    /// The complex open unit disc (dim 2, s = 1).
    #[arg(long)]
    disc: bool,
    /// The s-ball of --dim dimensions.
    #[arg(long)]
    ball: bool,
}

#[derive(Debug, Args)]
struct CommonOpts {
    /// Scalar backend.
    #[arg(long, value_enum, default_value_t = BackendArg::Float)]
    backend: BackendArg,
    /// Dimension of the ball (must be 2 with --disc).
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Ball radius: a decimal or a p/q fraction (must be 1 with --disc).
    #[arg(long, default_value = "1")]
    s: String,
    /// Absolute tolerance for float comparisons.
    #[arg(long, default_value_t = Tolerance::DEFAULT_ATOL)]
    atol: f64,
    /// Relative tolerance for float comparisons.
    #[arg(long, default_value_t = Tolerance::DEFAULT_RTOL)]
    rtol: f64,
}

#[derive(Debug, Args)]
struct AddArgs {
    #[command(flatten)]
    carrier: Carrier,
    #[command(flatten)]
    common: CommonOpts,
    /// Left operand: comma-separated coordinates ("re,im" on the disc).
    a: String,
    /// Right operand.
    b: String,
}

#[derive(Debug, Args)]
struct GyrArgs {
    #[command(flatten)]
    carrier: Carrier,
    #[command(flatten)]
    common: CommonOpts,
    /// First gyration generator.
    a: String,
    /// Second gyration generator.
    b: String,
    /// The operand gyr[a,b] acts on (may lie outside the ball in --ball mode).
    w: String,
}

#[derive(Debug, Args)]
struct SuiteArgs {
    #[command(flatten)]
    carrier: Carrier,
    #[command(flatten)]
    common: CommonOpts,
    /// Sampling seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Samples per check.
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    /// Replace the operation by vector addition clipped to the ball — a
    /// known-bad subject used to demonstrate failure reports
    /// (requires --ball with the float backend).
    #[arg(long)]
    break_op: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Path to a Cayley-table file.
    path: PathBuf,
}

#[derive(Debug, Args)]
struct LimitScanArgs {
    /// Scalar backend.
    #[arg(long, value_enum, default_value_t = BackendArg::Float)]
    backend: BackendArg,
    /// Smallest ball radius scanned.
    #[arg(long, default_value = "10")]
    s_start: String,
    /// Number of radius doublings after the first.
    #[arg(long, default_value_t = 10)]
    doublings: u32,
    /// First operand: comma-separated coordinates.
    u: String,
    /// Second operand.
    v: String,
}

/// Runs a parsed invocation; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Add(args) => dispatch_add(args),
        Command::Gyr(args) => dispatch_gyr(args),
        Command::Suite(args) => dispatch_suite(args),
        Command::Table(args) => run_table(args),
        Command::LimitScan(args) => dispatch_limit_scan(args),
    };
    match outcome {
        Ok((json, code)) => {
            // A consumer may close the pipe early (`| head`); that is not an
            // error worth reporting.
            use std::io::Write;
            let mut stdout = std::io::stdout();
            let _ = writeln!(stdout, "{json}");
            let _ = stdout.flush();
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[derive(Serialize)]
struct ConfigEcho {
    carrier: &'static str,
    backend: &'static str,
    dim: usize,
    s: String,
    atol: f64,
    rtol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    break_op: Option<bool>,
}

#[derive(Serialize)]
struct CoefficientsOut {
    a: String,
    b: String,
    d: String,
}

#[derive(Serialize)]
struct OpReport {
    schema_version: &'static str,
    command: &'static str,
    config: ConfigEcho,
    operands: Vec<String>,
    result: String,
    /// Disc mode only: the unimodular representative of gyr[a,b].
    #[serde(skip_serializing_if = "Option::is_none")]
    gyration: Option<String>,
    /// Ball mode only: the closed-form coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<CoefficientsOut>,
}

#[derive(Serialize)]
struct SuiteReport {
    schema_version: &'static str,
    command: &'static str,
    config: ConfigEcho,
    exact: bool,
    checks: Vec<CheckRecord>,
    all_passed: bool,
}

#[derive(Serialize)]
struct TableReport {
    schema_version: &'static str,
    command: &'static str,
    path: String,
    order: usize,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    gyrocommutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trivial_gyrations: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failed_axiom: Option<crate::finite::FailedAxiom>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<crate::finite::TableCounterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    identity: Option<usize>,
    identity_candidates: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverses: Option<Vec<usize>>,
    diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gyration_tables: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize)]
struct LimitRow {
    s: String,
    error: f64,
    /// `e(s)/e(2s)`; absent on the last row or when an error vanishes.
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<f64>,
}

#[derive(Serialize)]
struct LimitReport {
    schema_version: &'static str,
    command: &'static str,
    backend: &'static str,
    dim: usize,
    s_start: String,
    doublings: u32,
    operands: Vec<String>,
    rows: Vec<LimitRow>,
}

fn parse_coords<S: Scalar>(text: &str) -> Result<Vec<S>> {
    text.split(',').map(|t| S::parse(t)).collect()
}

struct CarrierSetup<S: Scalar> {
    name: &'static str,
    params: BallParams<S>,
}

/// Resolves the carrier flags into concrete ball parameters, enforcing the
/// disc's fixed dim = 2, s = 1.
fn setup_carrier<S: Scalar>(carrier: &Carrier, common: &CommonOpts) -> Result<CarrierSetup<S>> {
    let s = S::parse(&common.s)?;
    if carrier.disc {
        if common.dim != 2 {
            return Err(GyroError::NotDiscCompatible);
        }
        if s != S::one() {
            return Err(GyroError::NotDiscCompatible);
        }
        Ok(CarrierSetup {
            name: "disc",
            params: BallParams::disc(),
        })
    } else {
        Ok(CarrierSetup {
            name: "ball",
            params: BallParams::new(common.dim, s)?,
        })
    }
}

fn echo<S: Scalar>(setup: &CarrierSetup<S>, common: &CommonOpts) -> ConfigEcho {
    ConfigEcho {
        carrier: setup.name,
        backend: common.backend.name(),
        dim: setup.params.dim(),
        s: setup.params.s().render(),
        atol: common.atol,
        rtol: common.rtol,
        seed: None,
        samples: None,
        break_op: None,
    }
}

fn dispatch_add(args: &AddArgs) -> Result<(String, i32)> {
    match args.common.backend {
        BackendArg::Float => run_add::<f64>(args),
        BackendArg::Rational => run_add::<BigRational>(args),
    }
}

fn run_add<S: Scalar>(args: &AddArgs) -> Result<(String, i32)> {
    let setup = setup_carrier::<S>(&args.carrier, &args.common)?;
    let a = ball_operand::<S>(&args.a, &setup.params)?;
    let b = ball_operand::<S>(&args.b, &setup.params)?;
    let sum = a.mobius_add(&b)?;
    let report = OpReport {
        schema_version: SCHEMA_VERSION,
        command: "add",
        config: echo(&setup, &args.common),
        operands: vec![a.render(), b.render()],
        result: sum.render(),
        gyration: None,
        coefficients: None,
    };
    Ok((serde_json::to_string(&report).expect("report serializes"), 0))
}

fn ball_operand<S: Scalar>(text: &str, params: &BallParams<S>) -> Result<BallPoint<S>> {
    BallPoint::new(parse_coords(text)?, params)
}

fn dispatch_gyr(args: &GyrArgs) -> Result<(String, i32)> {
    match args.common.backend {
        BackendArg::Float => run_gyr::<f64>(args),
        BackendArg::Rational => run_gyr::<BigRational>(args),
    }
}

fn run_gyr<S: Scalar>(args: &GyrArgs) -> Result<(String, i32)> {
    let setup = setup_carrier::<S>(&args.carrier, &args.common)?;
    let a = ball_operand::<S>(&args.a, &setup.params)?;
    let b = ball_operand::<S>(&args.b, &setup.params)?;

    let (result, gyration, coefficients, operand_w);
    if setup.name == "disc" {
        let w = ball_operand::<S>(&args.w, &setup.params)?;
        let g = a.to_disc()?.gyration(&b.to_disc()?);
        result = BallPoint::from_disc(&g.apply(&w.to_disc()?)).render();
        gyration = Some(g.render());
        coefficients = None;
        operand_w = w.render();
    } else {
        let w = AmbientVector::new(parse_coords(&args.w)?, &setup.params)?;
        let c = gyration_coeffs(&a, &b, &w)?;
        result = gyrate(&a, &b, &w)?.render();
        gyration = None;
        coefficients = Some(CoefficientsOut {
            a: c.a.render(),
            b: c.b.render(),
            d: c.d.render(),
        });
        operand_w = w.render();
    }

    let report = OpReport {
        schema_version: SCHEMA_VERSION,
        command: "gyr",
        config: echo(&setup, &args.common),
        operands: vec![a.render(), b.render(), operand_w],
        result,
        gyration,
        coefficients,
    };
    Ok((serde_json::to_string(&report).expect("report serializes"), 0))
}

fn dispatch_suite(args: &SuiteArgs) -> Result<(String, i32)> {
    match args.common.backend {
        BackendArg::Float => run_suite_cmd::<f64>(args),
        BackendArg::Rational => run_suite_cmd::<BigRational>(args),
    }
}

fn run_suite_cmd<S: Scalar>(args: &SuiteArgs) -> Result<(String, i32)> {
    let setup = setup_carrier::<S>(&args.carrier, &args.common)?;
    let tolerance = Tolerance::new(args.common.atol, args.common.rtol)?;
    let cfg = SuiteConfig::new(args.seed, args.samples, tolerance)?;

    let report = if args.break_op {
        if setup.name != "ball" || S::EXACT {
            return Err(GyroError::Unsupported {
                message: "--break-op requires --ball with the float backend".into(),
            });
        }
        let params = BallParams::new(setup.params.dim(), setup.params.s().to_f64())?;
        run_suite(&ClippedVectorBall::new(params), &cfg)
    } else if setup.name == "disc" {
        run_suite(&DiscRealization::<S>::new(), &cfg)
    } else {
        run_suite(&BallRealization::new(setup.params.clone()), &cfg)
    };

    let exit = if report.all_passed { 0 } else { 1 };
    let mut config = echo(&setup, &args.common);
    config.seed = Some(args.seed);
    config.samples = Some(args.samples);
    config.break_op = Some(args.break_op);
    let out = SuiteReport {
        schema_version: SCHEMA_VERSION,
        command: "suite",
        config,
        exact: report.exact,
        checks: report.checks,
        all_passed: report.all_passed,
    };
    Ok((serde_json::to_string(&out).expect("report serializes"), exit))
}

fn run_table(args: &TableArgs) -> Result<(String, i32)> {
    let text = std::fs::read_to_string(&args.path).map_err(|e| GyroError::TableParse {
        line: 0,
        message: format!("cannot read {}: {e}", args.path.display()),
    })?;
    let table = CayleyTable::parse(&text)?;
    let classification = classify(&table);

    let (verdict, gyrocommutative, trivial_gyrations, failed_axiom, counterexample, exit) =
        match &classification.verdict {
            Verdict::Gyrogroup {
                gyrocommutative,
                trivial_gyrations,
            } => (
                "gyrogroup",
                Some(*gyrocommutative),
                Some(*trivial_gyrations),
                None,
                None,
                0,
            ),
            Verdict::NotGyrogroup {
                failed_axiom,
                counterexample,
            } => (
                "not_gyrogroup",
                None,
                None,
                Some(*failed_axiom),
                Some(counterexample.clone()),
                1,
            ),
        };

    let report = TableReport {
        schema_version: SCHEMA_VERSION,
        command: "table",
        path: args.path.display().to_string(),
        order: classification.order,
        verdict,
        gyrocommutative,
        trivial_gyrations,
        failed_axiom,
        counterexample,
        identity: classification.identity,
        identity_candidates: classification.identity_candidates.clone(),
        inverses: classification.inverses.clone(),
        diagnostics: classification.diagnostics.clone(),
        gyration_tables: classification.gyration_tables.clone(),
    };
    Ok((serde_json::to_string(&report).expect("report serializes"), exit))
}

fn dispatch_limit_scan(args: &LimitScanArgs) -> Result<(String, i32)> {
    match args.backend {
        BackendArg::Float => run_limit_scan::<f64>(args),
        BackendArg::Rational => run_limit_scan::<BigRational>(args),
    }
}

fn run_limit_scan<S: Scalar>(args: &LimitScanArgs) -> Result<(String, i32)> {
    let u = Vector::new(parse_coords::<S>(&args.u)?)?;
    let v = Vector::new(parse_coords::<S>(&args.v)?)?;
    let s0 = S::parse(&args.s_start)?;
    let steps = limit_scan(&u, &v, &s0, args.doublings)?;

    let rows: Vec<LimitRow> = steps
        .iter()
        .enumerate()
        .map(|(k, step)| {
            let ratio = steps.get(k + 1).and_then(|next| {
                let ratio = step.error / next.error;
                ratio.is_finite().then_some(ratio)
            });
            LimitRow {
                s: step.s.render(),
                error: step.error,
                ratio,
            }
        })
        .collect();

    let report = LimitReport {
        schema_version: SCHEMA_VERSION,
        command: "limit-scan",
        backend: args.backend.name(),
        dim: u.dim(),
        s_start: s0.render(),
        doublings: args.doublings,
        operands: vec![u.render(), v.render()],
        rows,
    };
    Ok((serde_json::to_string(&report).expect("report serializes"), 0))
}

/// The Möbius ball realization with its operation replaced by ordinary
/// vector addition clipped to the ball — a deliberately broken subject. The
/// gyrator stays the genuine Möbius one, so the left gyroassociative law
/// fails immediately: plain addition is associative and cannot absorb a
/// nontrivial rotation. Ships in the CLI so failure reports can be
/// demonstrated on demand.
#[derive(Debug, Clone)]
pub struct ClippedVectorBall {
    params: BallParams<f64>,
}

impl ClippedVectorBall {
    pub fn new(params: BallParams<f64>) -> Self {
        Self { params }
    }
}

impl Realization for ClippedVectorBall {
    type Elem = BallPoint<f64>;

    fn zero(&self) -> Self::Elem {
        BallPoint::origin(&self.params)
    }

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let cap = 0.999 * self.params.s();
        let coords: Vec<f64> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| x + y)
            .collect();
        let norm = coords.iter().map(|x| x * x).sum::<f64>().sqrt();
        let scale = if norm >= cap { cap / norm } else { 1.0 };
        BallPoint::new(coords.iter().map(|x| x * scale).collect(), &self.params)
            .expect("clipped point is interior")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn gyr(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        crate::ball::gyrate_point(a, b, c).expect("elements share ball parameters")
    }

    fn sample(&self, seed: u64, index: u64) -> Self::Elem {
        BallPoint::sample(&self.params, seed, index)
    }

    fn residual(&self, x: &Self::Elem, y: &Self::Elem, tol: &Tolerance) -> f64 {
        x.residual(y, tol)
    }

    fn exact(&self) -> bool {
        false
    }

    fn display(&self, e: &Self::Elem) -> String {
        e.render()
    }
}
