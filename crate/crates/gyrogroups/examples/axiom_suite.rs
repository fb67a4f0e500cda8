//! Running the gyrogroup axiom engine: passing carriers and a broken one.
//!
//! ```bash
//! cargo run --example axiom_suite
//! ```

use gyrogroups::axioms::{run_suite, BallRealization, DiscRealization, SuiteConfig};
use gyrogroups::ball::BallParams;
use gyrogroups::cli::ClippedVectorBall;
use gyrogroups::numeric::{Scalar, Tolerance};
use num_rational::BigRational;

fn main() {
    println!("Gyrogroup axiom engine");
    println!("======================\n");

    // 1. The disc, float backend: G1–G6 plus the derived identities.
    let cfg = SuiteConfig::new(42, 2_000, Tolerance::default()).unwrap();
    let report = run_suite(&DiscRealization::<f64>::new(), &cfg);
    println!("1. Disc (float, {} samples/check)", cfg.samples);
    for check in &report.checks {
        println!(
            "   {:24} failures {:4}  max residual {:.2e}",
            check.name, check.failures, check.max_residual
        );
    }
    println!("   all passed: {}\n", report.all_passed);

    // 2. A 3-ball on the exact backend: residuals are exactly zero.
    let params = BallParams::new(3, BigRational::from_int(2)).unwrap();
    let cfg_exact = SuiteConfig::new(42, 150, Tolerance::exact()).unwrap();
    let report = run_suite(&BallRealization::new(params), &cfg_exact);
    println!("2. Ball dim 3, s = 2 (exact rational, {} samples/check)", cfg_exact.samples);
    println!(
        "   all passed: {}, max residual across every check: {:e}",
        report.all_passed,
        report.max_residual()
    );

    // 3. A broken subject: vector addition clipped to the ball, with the
    //    genuine Möbius gyrator. The left gyroassociative law fails and the
    //    report pinpoints a replayable counterexample.
    let params = BallParams::new(2, 1.0).unwrap();
    let cfg_broken = SuiteConfig::new(0, 500, Tolerance::default()).unwrap();
    let report = run_suite(&ClippedVectorBall::new(params), &cfg_broken);
    println!("\n3. Broken subject (clipped vector addition)");
    println!("   all passed: {}", report.all_passed);
    let g3 = report.check("g3_left_gyroassociative").unwrap();
    println!(
        "   {}: {} failures out of {}",
        g3.name, g3.failures, g3.samples_run
    );
    if let Some(cx) = &g3.first_counterexample {
        println!("   first counterexample (sample {}):", cx.sample_index);
        for (label, input) in ["a", "b", "c"].iter().zip(&cx.inputs) {
            println!("     {label} = {input}");
        }
        println!("     lhs = {}", cx.lhs);
        println!("     rhs = {}", cx.rhs);
        println!("     residual = {:.3e}", cx.residual);
    }
}
