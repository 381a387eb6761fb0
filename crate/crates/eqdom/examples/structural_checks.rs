//! Structural predicates over multiplication tables: associativity,
//! complete regularity with per-element periods, simplicity, and the
//! J-class partition.
//!
//! ```bash
//! cargo run -p eqdom --example structural_checks
//! ```

use eqdom::catalog;
use eqdom::semigroup::{check_associativity, CompleteRegularity, FiniteSemigroup};

fn inspect(label: &str, s: &FiniteSemigroup) {
    println!("== {label} ({} elements)", s.size());
    match s.complete_regularity() {
        CompleteRegularity::CompletelyRegular { periods } => {
            let listing: Vec<String> = periods
                .iter()
                .enumerate()
                .map(|(i, p)| format!("{}:{}", s.name(i), p))
                .collect();
            println!("   completely regular, periods {}", listing.join(" "));
        }
        CompleteRegularity::NotCompletelyRegular { witness } => {
            println!("   not completely regular, witness {}", s.name(witness));
        }
    }
    println!(
        "   simple: {}, completely simple: {}",
        s.is_simple(),
        s.is_completely_simple()
    );
    let classes: Vec<String> = s
        .j_classes()
        .iter()
        .map(|class| {
            let members: Vec<&str> = class.iter().map(|&m| s.name(m)).collect();
            format!("{{{}}}", members.join(", "))
        })
        .collect();
    println!("   J-classes: {}", classes.join(" "));
}

fn main() {
    for (label, s) in catalog::cr_semigroups() {
        inspect(&label, &s);
    }
    inspect("null2", &catalog::null2());

    // a mutated group table is rejected with the exact violating triples
    let z3 = catalog::cyclic(3);
    let mut table = z3.table().to_vec();
    table[1][2] = 1; // g * g2 changed from e to g
    let violations = check_associativity(&table).unwrap();
    println!(
        "\nmutating one cell of the order-3 group table leaves {} violating triples, first {:?}",
        violations.len(),
        violations[0]
    );
}
