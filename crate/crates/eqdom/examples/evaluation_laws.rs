//! The laws relating term evaluation to a semilattice decomposition:
//! predicting the component of a value, transport along structure maps,
//! and the collapse of anchored terms.
//!
//! ```bash
//! cargo run -p eqdom --example evaluation_laws
//! ```

use eqdom::catalog;
use eqdom::laws::{
    check_collapse_law, check_hom_law, check_same_component_law, predicted_component,
};
use eqdom::semilattice::decompose;
use eqdom::term::{evaluate, parse_term};

fn main() {
    let t3 = catalog::t3();
    let sl = decompose(&t3).unwrap();
    let s = sl.semigroup();
    let vars = vec!["x".to_string()];

    // the decomposition: component 0 is {e, a}, component 1 is {f}
    let upper = 0;
    let lower = 1;
    let a = s.index_of("a").unwrap();

    // the component of a value is the meet of the components of the
    // constants and of the coordinates
    let t = parse_term("x f a", &vars, s).unwrap();
    let predicted = predicted_component(&sl, &t, &[upper]).unwrap();
    let value = evaluate(s, &t, &[a]).unwrap();
    println!(
        "t = {}: predicted component {}, actual component of t(a) = {} is {}",
        t.render(&vars, s),
        sl.omega().name(predicted),
        s.name(value),
        sl.omega().name(sl.component_of(value)),
    );

    // evaluation commutes with the structure map: psi(t(b)) = t(psi(b))
    let square = parse_term("x x", &vars, s).unwrap();
    let hom = check_hom_law(&sl, &square, lower, upper, a).unwrap();
    println!(
        "transport of {}: t(b) = {}, t(psi(b)) = {}, transported = {}, pass = {}",
        square.render(&vars, s),
        s.name(hom.value_at_b),
        s.name(hom.value_at_a),
        s.name(hom.transported),
        hom.pass,
    );

    // a term anchored by a lower constant cannot tell b from its image
    let anchored = parse_term("f x x f", &vars, s).unwrap();
    let same = check_same_component_law(&sl, &anchored, lower, upper, a).unwrap();
    let collapse = check_collapse_law(&sl, &anchored, lower, upper, a).unwrap();
    println!(
        "anchored {}: components agree = {}, values equal = {} (both {})",
        anchored.render(&vars, s),
        same.pass,
        collapse.pass,
        s.name(collapse.value_at_b),
    );

    // the laws hold across the whole two-component catalog
    let mut checked = 0;
    for (_, spec) in catalog::spec_catalog() {
        let built = eqdom::build_strong_semilattice(&spec).unwrap();
        let sg = built.semigroup();
        let texts = ["x x", "x x' f0", "x' x"];
        for &b in built.labeling().members(1) {
            for text in texts {
                let Ok(t) = parse_term(text, &vars, sg) else { continue };
                let check = check_hom_law(&built, &t, 0, 1, b).unwrap();
                assert!(check.pass);
                checked += 1;
            }
        }
    }
    println!("transport law verified on {checked} catalog samples");
}
