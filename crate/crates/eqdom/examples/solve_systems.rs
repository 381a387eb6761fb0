//! The equation language: parse terms, evaluate them at points, and
//! compute full solution sets by exhaustive search.
//!
//! ```bash
//! cargo run -p eqdom --example solve_systems
//! ```

use eqdom::catalog;
use eqdom::formats::write_pts;
use eqdom::geometry::solve;
use eqdom::term::{evaluate, parse_term, Equation, EquationSystem};

fn main() {
    let t3 = catalog::t3();
    let vars = vec!["x".to_string(), "y".to_string()];

    // postfix apostrophe inverts, juxtaposition multiplies
    let t = parse_term("x (y f)' a", &vars, &t3).unwrap();
    println!("parsed: {}", t.render(&vars, &t3));
    for p0 in 0..t3.size() {
        for p1 in 0..t3.size() {
            let v = evaluate(&t3, &t, &[p0, p1]).unwrap();
            print!("t({}, {}) = {}   ", t3.name(p0), t3.name(p1), t3.name(v));
        }
    }
    println!();

    // the idempotency equation selects exactly the idempotents
    let system = EquationSystem::new(
        1,
        vec![Equation {
            lhs: parse_term("x x", &vars[..1], &t3).unwrap(),
            rhs: parse_term("x", &vars[..1], &t3).unwrap(),
        }],
    )
    .unwrap();
    let solutions = solve(&t3, &system).unwrap();
    println!("\nsolutions of x x = x over t3:\n{}", write_pts(&solutions, &t3));

    // inversion is expressible, so group equations work componentwise
    let z3 = catalog::cyclic(3);
    let system = EquationSystem::new(
        2,
        vec![Equation {
            lhs: parse_term("x y", &vars, &z3).unwrap(),
            rhs: parse_term("y' x'", &vars, &z3).unwrap(),
        }],
    )
    .unwrap();
    let solutions = solve(&z3, &system).unwrap();
    println!(
        "points of the order-3 group where x y = y' x': {} of {}",
        solutions.len(),
        z3.size() * z3.size()
    );

    // an inconsistent constant equation has no solutions
    let none = EquationSystem::new(
        1,
        vec![Equation {
            lhs: parse_term("a", &vars[..1], &t3).unwrap(),
            rhs: parse_term("f", &vars[..1], &t3).unwrap(),
        }],
    )
    .unwrap();
    println!("solutions of a = f over t3: {}", solve(&t3, &none).unwrap().len());
}
