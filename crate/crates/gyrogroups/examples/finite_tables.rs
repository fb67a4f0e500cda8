//! Classifying finite Cayley tables: groups, near-misses, and verdict replay.
//!
//! ```bash
//! cargo run --example finite_tables
//! ```

use gyrogroups::finite::{classify, replay_counterexample, CayleyTable, Verdict};

fn describe(name: &str, table: &CayleyTable) {
    let c = classify(table);
    match &c.verdict {
        Verdict::Gyrogroup {
            gyrocommutative,
            trivial_gyrations,
        } => println!(
            "   {name:12} gyrogroup  gyrocommutative={gyrocommutative}  trivial_gyrations={trivial_gyrations}"
        ),
        Verdict::NotGyrogroup {
            failed_axiom,
            counterexample,
        } => {
            let replays = replay_counterexample(
                table,
                c.identity,
                c.inverses.as_deref(),
                counterexample,
            );
            println!(
                "   {name:12} NOT a gyrogroup: {failed_axiom} fails (counterexample replays: {replays})"
            );
        }
    }
}

fn main() {
    println!("Finite Cayley tables");
    println!("====================\n");

    println!("1. Groups are degenerate gyrogroups (all gyrations trivial)");
    describe("Z4", &CayleyTable::cyclic(4));
    describe("Z5", &CayleyTable::cyclic(5));
    describe("Klein four", &CayleyTable::klein_four());
    describe("S3", &CayleyTable::symmetric_3());
    println!("   (S3 is not commutative, hence not gyrocommutative)");

    println!("\n2. A near-miss: Z3 with one entry overwritten");
    let mut mutated = CayleyTable::cyclic(3);
    mutated.set(1, 2, 1).unwrap();
    describe("Z3 mutated", &mutated);

    println!("\n3. Parsing the table file format");
    let text = "# order, then one row per element\n3\n0 1 2\n1 2 0\n2 0 1\n";
    let parsed = CayleyTable::parse(text).unwrap();
    describe("parsed Z3", &parsed);

    println!("\n4. A magma with no left identity");
    let constant = CayleyTable::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
    describe("constant", &constant);

    println!("\n5. Missing left inverses");
    let absorbing = CayleyTable::parse("2\n0 1\n1 1").unwrap();
    describe("absorbing", &absorbing);
}
