//! The exact rational backend: every identity holds with residual exactly
//! zero, no tolerance involved.
//!
//! ```bash
//! cargo run --example exact_oracle
//! ```

use gyrogroups::ball::{gyrate_point, gyrate_via_definition, gyration_coeffs, BallParams, BallPoint};
use gyrogroups::disc::DiscPoint;
use gyrogroups::numeric::Scalar;
use num_rational::BigRational;

type Rat = BigRational;

fn rat(n: i64, d: i64) -> Rat {
    Rat::from_ratio(n, d)
}

fn main() {
    println!("Exact rational oracle");
    println!("=====================\n");

    // 1. The worked landmarks as exact fractions.
    println!("1. Landmark values");
    let half = DiscPoint::new(rat(1, 2), rat(0, 1)).unwrap();
    let ihalf = DiscPoint::new(rat(0, 1), rat(1, 2)).unwrap();
    let sum = half.mobius_add(&half);
    println!("   1/2 ⊕ 1/2       = {},{}", sum.re(), sum.im());
    let sum = ihalf.mobius_add(&half);
    println!("   (i/2) ⊕ (1/2)   = {},{}  (6/17 + (10/17)i)", sum.re(), sum.im());
    let g = half.gyration(&ihalf);
    println!("   gyr[1/2, i/2]   = {},{}", g.re(), g.im());
    let modulus_sq = g.re().clone() * g.re().clone() + g.im().clone() * g.im().clone();
    println!("   |gyr|²          = {}  (exactly unimodular)", modulus_sq);

    // 2. An identity certified exactly: gyrocommutativity.
    println!("\n2. a ⊕ b = gyr[a,b](b ⊕ a), witnessed by equality of fractions");
    let lhs = half.mobius_add(&ihalf);
    let rhs = g.apply(&ihalf.mobius_add(&half));
    println!("   lhs = {},{}", lhs.re(), lhs.im());
    println!("   rhs = {},{}", rhs.re(), rhs.im());
    println!("   equal: {}", lhs == rhs);

    // 3. Ball gyration coefficients as exact fractions.
    println!("\n3. Ball closed form at u = (1/2, 0), v = (0, 1/2), w = u, s = 1");
    let params = BallParams::new(2, Rat::from_int(1)).unwrap();
    let u = BallPoint::new(vec![rat(1, 2), rat(0, 1)], &params).unwrap();
    let v = BallPoint::new(vec![rat(0, 1), rat(1, 2)], &params).unwrap();
    let c = gyration_coeffs(&u, &v, &u.to_ambient()).unwrap();
    println!("   A = {}   B = {}   D = {}", c.a, c.b, c.d);
    let image = gyrate_point(&u, &v, &u).unwrap();
    println!(
        "   gyr[u,v]u = ({}, {})  — the disc answer in coordinates",
        image.coords()[0],
        image.coords()[1]
    );

    // 4. Closed form vs definitional route: exactly the same fractions.
    println!("\n4. Closed form ≡ ⊖(u⊕v) ⊕ (u⊕(v⊕z)) on random dyadic points");
    let mut all_equal = true;
    for i in 0..500 {
        let a = BallPoint::<Rat>::sample(&params, 7, 3 * i);
        let b = BallPoint::<Rat>::sample(&params, 7, 3 * i + 1);
        let z = BallPoint::<Rat>::sample(&params, 7, 3 * i + 2);
        all_equal &= gyrate_point(&a, &b, &z).unwrap() == gyrate_via_definition(&a, &b, &z).unwrap();
    }
    println!("   500 sampled triples, all exactly equal: {all_equal}");

    // 5. Why this matters: the float backend rounds, the oracle does not.
    println!("\n5. The same computation in doubles accumulates roundoff");
    let fa = DiscPoint::new(0.5, 0.0).unwrap();
    let fb = DiscPoint::new(0.0, 0.5).unwrap();
    let float_lhs = fa.mobius_add(&fb);
    println!("   float re(a ⊕ b) = {:.17}", float_lhs.re());
    println!("   exact re(a ⊕ b) = {} = {:.17}", lhs.re(), Scalar::to_f64(lhs.re()));
    println!("   (the fraction is the ground truth the float value is judged against)");
}
