//! As s grows, Möbius addition in the s-ball approaches vector addition at
//! second order: the error e(s) = ‖u ⊕ v − (u + v)‖ quarters per doubling.
//!
//! ```bash
//! cargo run --example limit_scan
//! ```

use gyrogroups::ball::limit_scan;
use gyrogroups::numeric::Vector;

fn main() {
    println!("Möbius addition approaches vector addition as s → ∞");
    println!("====================================================\n");

    let u = Vector::new(vec![1.0, 0.0]).unwrap();
    let steps = limit_scan(&u, &u, &10.0, 10).unwrap();

    println!("u = v = (1, 0); scanning s = 10·2^k");
    println!("{:>10}  {:>14}  {:>10}", "s", "e(s)", "e(s)/e(2s)");
    for (k, step) in steps.iter().enumerate() {
        match steps.get(k + 1) {
            Some(next) => println!(
                "{:>10}  {:>14.6e}  {:>10.6}",
                step.s,
                step.error,
                step.error / next.error
            ),
            None => println!("{:>10}  {:>14.6e}  {:>10}", step.s, step.error, "-"),
        }
    }
    println!("\nEvery ratio sits near 4: the deviation vanishes as O(1/s²).");

    println!("\nDegenerate operands cancel exactly:");
    let zero = Vector::new(vec![0.0, 0.0]).unwrap();
    let e0 = limit_scan(&u, &zero, &10.0, 3).unwrap();
    println!(
        "  v = 0:  e(s) = {:?}",
        e0.iter().map(|s| s.error).collect::<Vec<_>>()
    );
    let e1 = limit_scan(&u, &u.neg(), &10.0, 3).unwrap();
    println!(
        "  v = −u: e(s) = {:?}  (u ⊕ (−u) = 0 = u + v)",
        e1.iter().map(|s| s.error).collect::<Vec<_>>()
    );
}
