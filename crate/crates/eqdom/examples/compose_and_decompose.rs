//! Strong semilattices of semigroups: validate the structure maps,
//! compose the full multiplication table, decompose it back, and replay
//! the round trip.
//!
//! ```bash
//! cargo run -p eqdom --example compose_and_decompose
//! ```

use eqdom::catalog;
use eqdom::formats::write_slat;
use eqdom::semilattice::{build_strong_semilattice, decompose};

fn main() {
    // the order-2 group sitting above one absorbing element
    let spec = catalog::t3_spec();
    let report = spec.validate();
    println!("spec valid: {}", report.is_valid());

    let built = build_strong_semilattice(&spec).unwrap();
    println!("\ncomposed table:");
    print!("{}", built.semigroup());

    // every product lands in the meet of the factors' components
    let s = built.semigroup();
    for x in 0..s.size() {
        for y in 0..s.size() {
            let meet = built.omega().meet(built.component_of(x), built.component_of(y));
            assert_eq!(built.component_of(s.product(x, y)), meet);
        }
    }
    println!("product components are the meets of the factor components");

    // decompose an existing table: J-classes become components and the
    // structure maps are recovered uniquely
    let t3 = catalog::t3();
    let d = decompose(&t3).unwrap();
    println!(
        "\ndecomposed t3 into {} components; spec file form:\n{}",
        d.omega().size(),
        write_slat(d.spec())
    );

    // rebuilding reproduces the table exactly
    let rebuilt = build_strong_semilattice(d.spec()).unwrap();
    assert_eq!(rebuilt.semigroup().table(), t3.table());
    println!("rebuild reproduces the original table");

    // a broken spec is rejected with every violated condition listed
    let broken = catalog::broken_composition_spec();
    let report = broken.validate();
    println!("\nbroken spec report:\n{report}");
}
