//! Shared test infrastructure: an interpreter and a depth-bounded term
//! enumerator written independently of the library's evaluation and
//! closure paths, plus seeded random samplers.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;

use eqdom::semigroup::FiniteSemigroup;
use eqdom::term::{Equation, EquationSystem, Term};

/// Inverse by exhaustive search: the unique `b` with `aba = a`, `bab = b`,
/// and `ab = ba`. Independent of the power formula the library uses.
pub fn search_inverse(s: &FiniteSemigroup, a: usize) -> Option<usize> {
    let mut found = None;
    for b in 0..s.size() {
        if s.product(s.product(a, b), a) == a
            && s.product(s.product(b, a), b) == b
            && s.product(a, b) == s.product(b, a)
        {
            assert!(found.is_none(), "commuting inverse must be unique");
            found = Some(b);
        }
    }
    found
}

/// Straight-line interpreter over the term tree using [`search_inverse`].
pub fn naive_eval(s: &FiniteSemigroup, t: &Term, point: &[usize]) -> Option<usize> {
    match t {
        Term::Variable(i) => point.get(*i).copied(),
        Term::Constant(c) => (*c < s.size()).then_some(*c),
        Term::Product(l, r) => {
            let lv = naive_eval(s, l, point)?;
            let rv = naive_eval(s, r, point)?;
            Some(s.product(lv, rv))
        }
        Term::Inverse(inner) => {
            let v = naive_eval(s, inner, point)?;
            search_inverse(s, v)
        }
    }
}

fn all_points(size: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut points = vec![vec![]];
    for _ in 0..arity {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..size).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    points
}

/// Value vectors of every function realizable by a term of depth at most
/// `max_depth`, deduplicated layer by layer via representative terms and
/// evaluated with [`naive_eval`]. The flag reports whether some layer
/// added nothing, i.e. the set is the whole term clone.
pub fn enumerate_term_functions(
    s: &FiniteSemigroup,
    arity: usize,
    max_depth: usize,
) -> (BTreeSet<Vec<usize>>, bool) {
    let points = all_points(s.size(), arity);
    let vector_of = |t: &Term| -> Vec<usize> {
        points
            .iter()
            .map(|p| naive_eval(s, t, p).expect("input must be completely regular"))
            .collect()
    };

    let mut reps: Vec<(Term, usize)> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for v in 0..arity {
        let t = Term::Variable(v);
        if seen.insert(vector_of(&t)) {
            reps.push((t, 0));
        }
    }
    for c in 0..s.size() {
        let t = Term::Constant(c);
        if seen.insert(vector_of(&t)) {
            reps.push((t, 0));
        }
    }

    let mut saturated = false;
    for depth in 1..=max_depth {
        let mut fresh: Vec<(Term, usize)> = Vec::new();
        for i in 0..reps.len() {
            if reps[i].1 == depth - 1 {
                let t = Term::inverse(reps[i].0.clone());
                if seen.insert(vector_of(&t)) {
                    fresh.push((t, depth));
                }
            }
        }
        for i in 0..reps.len() {
            for j in 0..reps.len() {
                if reps[i].1.max(reps[j].1) != depth - 1 {
                    continue;
                }
                let t = Term::product(reps[i].0.clone(), reps[j].0.clone());
                if seen.insert(vector_of(&t)) {
                    fresh.push((t, depth));
                }
            }
        }
        if fresh.is_empty() {
            saturated = true;
            break;
        }
        reps.extend(fresh);
    }
    (seen, saturated)
}

/// Random term over `arity` variables and `size` constants, with
/// construction depth at most `max_depth`.
pub fn random_term<R: Rng>(rng: &mut R, arity: usize, size: usize, max_depth: usize) -> Term {
    if max_depth == 0 || rng.gen_range(0..10) < 3 {
        if arity > 0 && rng.gen_bool(0.5) {
            Term::Variable(rng.gen_range(0..arity))
        } else {
            Term::Constant(rng.gen_range(0..size))
        }
    } else if rng.gen_range(0..10) < 7 {
        Term::product(
            random_term(rng, arity, size, max_depth - 1),
            random_term(rng, arity, size, max_depth - 1),
        )
    } else {
        Term::inverse(random_term(rng, arity, size, max_depth - 1))
    }
}

/// Random system of up to `max_equations` equations at the given depth.
pub fn random_system<R: Rng>(
    rng: &mut R,
    arity: usize,
    size: usize,
    max_equations: usize,
    max_depth: usize,
) -> EquationSystem {
    let count = rng.gen_range(0..=max_equations);
    let equations = (0..count)
        .map(|_| Equation {
            lhs: random_term(rng, arity, size, max_depth),
            rhs: random_term(rng, arity, size, max_depth),
        })
        .collect();
    EquationSystem::new(arity, equations).expect("sampled terms fit the declared arity")
}

/// Random point of `S^arity`.
pub fn random_point<R: Rng>(rng: &mut R, size: usize, arity: usize) -> Vec<usize> {
    (0..arity).map(|_| rng.gen_range(0..size)).collect()
}
