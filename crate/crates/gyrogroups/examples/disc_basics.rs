//! Möbius addition on the complex unit disc.
//!
//! ```bash
//! cargo run --example disc_basics
//! ```

use gyrogroups::disc::{gyration_via_addition, mobius_transform, DiscPoint};
use gyrogroups::numeric::Tolerance;

fn main() {
    println!("Möbius addition on the unit disc");
    println!("================================\n");

    let a = DiscPoint::new(0.5, 0.0).unwrap();
    let b = DiscPoint::new(0.0, 0.5).unwrap();
    let z = DiscPoint::new(0.25, -0.25).unwrap();

    // 1. The operation and its pinned landmark: 1/2 ⊕ 1/2 = 4/5.
    println!("1. The operation a ⊕ z = (a + z)/(1 + āz)");
    let sum = a.mobius_add(&a);
    println!("   0.5 ⊕ 0.5 = {}  (= 4/5)", pretty(&sum));

    // 2. Neither commutative nor associative.
    println!("\n2. Broken classical laws");
    println!("   a ⊕ b = {}", pretty(&a.mobius_add(&b)));
    println!("   b ⊕ a = {}   (different!)", pretty(&b.mobius_add(&a)));
    let left = a.mobius_add(&b.mobius_add(&z));
    let right = a.mobius_add(&b).mobius_add(&z);
    println!("   a ⊕ (b ⊕ z) = {}", pretty(&left));
    println!("   (a ⊕ b) ⊕ z = {}   (different!)", pretty(&right));

    // 3. Gyrations repair both failures at once.
    println!("\n3. The gyration gyr[a,b] = (1 + ab̄)/(1 + āb) repairs both");
    let g = a.gyration(&b);
    println!("   gyr[a,b] = {},{}  (unimodular)", g.re(), g.im());
    let tol = Tolerance::default();
    let gyro_comm = g.apply(&b.mobius_add(&a));
    println!(
        "   a ⊕ b = gyr[a,b](b ⊕ a)?  residual {:.2e}",
        a.mobius_add(&b).residual(&gyro_comm, &tol)
    );
    let gyro_assoc = a.mobius_add(&b).mobius_add(&g.apply(&z));
    println!(
        "   a ⊕ (b ⊕ z) = (a ⊕ b) ⊕ gyr[a,b]z?  residual {:.2e}",
        left.residual(&gyro_assoc, &tol)
    );

    // 4. Gyrations are rotations: |gyr[a,b]z| = |z|.
    println!("\n4. Gyrations rotate about the center");
    let rotated = g.apply(&z);
    println!("   |z|²        = {:.17}", z.norm_sq());
    println!("   |gyr[a,b]z|² = {:.17}", rotated.norm_sq());
    println!(
        "   and they are expressible through ⊕ alone: gyr[a,b]z = ⊖(a⊕b) ⊕ (a⊕(b⊕z)),\n   \
         residual {:.2e}",
        rotated.residual(&gyration_via_addition(&a, &b, &z), &tol)
    );

    // 5. The polar-decomposed Möbius self-transformation of the disc.
    println!("\n5. The general self-transformation z ↦ e^(iθ)(a ⊕ z)");
    let image = mobius_transform(std::f64::consts::FRAC_PI_2, &a, &a).unwrap();
    println!(
        "   θ = π/2, a = z = 0.5: {}  (= (4/5)i, the landmark rotated)",
        pretty(&image)
    );

    // 6. Subtraction and the left cancellation law.
    println!("\n6. a ⊖ z = a ⊕ (−z) and the left cancellation law");
    println!("   z ⊖ z = {}", pretty(&z.mobius_sub(&z)));
    let cancelled = a.neg().mobius_add(&a.mobius_add(&z));
    println!(
        "   ⊖a ⊕ (a ⊕ z) = {}  (recovers z, residual {:.2e})",
        pretty(&cancelled),
        cancelled.residual(&z, &tol)
    );
}

fn pretty(p: &DiscPoint<f64>) -> String {
    format!("{:+.6}{:+.6}i", p.re(), p.im())
}
