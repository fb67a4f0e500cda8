//! Möbius addition and gyrations on the s-ball of n-dimensional space.
//!
//! ```bash
//! cargo run --example ball_gyrations
//! ```

use gyrogroups::ball::{
    gyrate, gyrate_via_definition, gyration_coeffs, gyration_matrix, AmbientVector, BallParams,
    BallPoint,
};
use gyrogroups::disc::DiscPoint;
use gyrogroups::numeric::Tolerance;

fn main() {
    println!("Möbius gyrations in the ball");
    println!("============================\n");

    // A 3-dimensional ball of radius 2.
    let params = BallParams::new(3, 2.0).unwrap();
    let u = BallPoint::new(vec![0.9, -0.3, 0.2], &params).unwrap();
    let v = BallPoint::new(vec![-0.2, 0.8, 0.5], &params).unwrap();
    let w = AmbientVector::new(vec![2.5, 1.0, -3.0], &params).unwrap();
    let tol = Tolerance::default();

    // 1. Ball addition.
    println!("1. Ball Möbius addition (dim 3, s = 2)");
    let sum = u.mobius_add(&v).unwrap();
    println!("   u ⊕ v = {:?}", sum.coords());
    println!("   ‖u ⊕ v‖² = {:.6} < s² = 4 (closure)", sum.norm_sq());

    // 2. The closed form gyr[u,v]w = w + 2(Au + Bv)/D.
    println!("\n2. Closed-form gyration coefficients");
    let c = gyration_coeffs(&u, &v, &w).unwrap();
    println!("   A = {:.9}", c.a);
    println!("   B = {:.9}", c.b);
    println!("   D = {:.9}  (> 0 by Cauchy–Schwarz)", c.d);
    let image = gyrate(&u, &v, &w).unwrap();
    println!("   gyr[u,v]w = {:?}", image.coords());

    // 3. The gyration extends to a linear, norm-preserving map of the whole
    //    space; `w` above lies outside the ball already.
    println!("\n3. Norm preservation on ambient vectors");
    println!("   ‖w‖²        = {:.12}", w.norm_sq());
    println!("   ‖gyr[u,v]w‖² = {:.12}", image.norm_sq());

    // 4. Agreement with the definitional route ⊖(u⊕v) ⊕ {u⊕(v⊕z)}.
    println!("\n4. Definitional route agreement (interior operand)");
    let z = BallPoint::new(vec![0.4, 0.1, -0.6], &params).unwrap();
    let closed = gyrate(&u, &v, &z.to_ambient()).unwrap();
    let definitional = gyrate_via_definition(&u, &v, &z).unwrap();
    println!("   closed form:  {:?}", closed.coords());
    println!("   definition:   {:?}", definitional.coords());
    println!(
        "   residual: {:.2e}",
        definitional.to_ambient().residual(&closed, &tol)
    );

    // 5. The gyration as an orthogonal matrix.
    println!("\n5. Matrix form (columns are gyr[u,v]e_j)");
    let m = gyration_matrix(&u, &v).unwrap();
    for i in 0..3 {
        println!(
            "   [ {:+.6} {:+.6} {:+.6} ]",
            m.entry(i, 0),
            m.entry(i, 1),
            m.entry(i, 2)
        );
    }
    println!("   trace = {:.6} (> −n: the map −id is never a gyration)", m.trace());
    println!(
        "   orthogonality residual: {:.2e}",
        m.orthogonality_residual(&tol)
    );

    // 6. The disc is the dim-2, s = 1 ball under (u₁, u₂) ↔ u₁ + iu₂.
    println!("\n6. Disc correspondence (dim 2, s = 1)");
    let a = DiscPoint::new(0.5, 0.0).unwrap();
    let b = DiscPoint::new(0.0, 0.5).unwrap();
    let disc_sum = BallPoint::from_disc(&a.mobius_add(&b));
    let ball_sum = BallPoint::from_disc(&a)
        .mobius_add(&BallPoint::from_disc(&b))
        .unwrap();
    println!("   via the disc: {:?}", disc_sum.coords());
    println!("   via the ball: {:?}", ball_sum.coords());
}
