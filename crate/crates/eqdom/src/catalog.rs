//! Canonical small semigroups and strong-semilattice specs used by the
//! examples and the test campaigns.

use std::collections::BTreeMap;

use crate::semigroup::{build_rees_matrix, ElementIndex, FiniteSemigroup};
use crate::semilattice::{SemilatticeStructure, StrongSemilatticeSpec};

/// The one-element semigroup `{e}`.
pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::from_named_table(&["e"], vec![vec![0]]).unwrap()
}

/// Cyclic group of order `n`. Order 1 is `{e}`, order 2 is `{e, a}`,
/// larger orders are named `e, g, g2, g3, ...`.
pub fn cyclic(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let names: Vec<String> = match n {
        1 => vec!["e".into()],
        2 => vec!["e".into(), "a".into()],
        _ => (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect(),
    };
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteSemigroup::new(names, table).unwrap()
}

/// Left-zero semigroup on `k` elements: `x y = x`.
pub fn left_zero(k: usize) -> FiniteSemigroup {
    assert!(k >= 1);
    let names = (0..k).map(|i| format!("l{i}")).collect();
    let table = (0..k).map(|i| vec![i; k]).collect();
    FiniteSemigroup::new(names, table).unwrap()
}

/// Two-element null semigroup `{z, a}` with every product `z`; the
/// smallest semigroup that is not completely regular.
pub fn null2() -> FiniteSemigroup {
    FiniteSemigroup::from_named_table(&["z", "a"], vec![vec![0, 0], vec![0, 0]]).unwrap()
}

/// Chain semilattice `c0 < c1 < ... < c(k-1)` with meet `min`.
pub fn chain(k: usize) -> FiniteSemigroup {
    assert!(k >= 1);
    let names = (0..k).map(|i| format!("c{i}")).collect();
    let table = (0..k).map(|i| (0..k).map(|j| i.min(j)).collect()).collect();
    FiniteSemigroup::new(names, table).unwrap()
}

/// Four-element diamond meet-semilattice: `bot` below the incomparable
/// `l`, `r`, both below `top`.
pub fn diamond() -> FiniteSemigroup {
    FiniteSemigroup::from_named_table(
        &["bot", "l", "r", "top"],
        vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
    )
    .unwrap()
}

/// The three-element semigroup `{e, a, f}`: `e, a` multiply as the cyclic
/// group of order 2 and `f` absorbs everything. It is the smallest
/// completely regular semigroup with two components that are not both
/// trivial.
pub fn t3() -> FiniteSemigroup {
    FiniteSemigroup::from_named_table(
        &["e", "a", "f"],
        vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
    )
    .unwrap()
}

/// 2x2 rectangular band: the Rees matrix semigroup over the trivial group
/// with two row and two column indices.
pub fn rect_band_2x2() -> FiniteSemigroup {
    build_rees_matrix(&trivial(), 2, 2, &[vec![0, 0], vec![0, 0]]).unwrap()
}

/// Rees matrix semigroup over the order-2 group with `|I| = |Λ| = 2` and
/// every sandwich entry the identity.
pub fn rees_z2_2x2() -> FiniteSemigroup {
    build_rees_matrix(&cyclic(2), 2, 2, &[vec![0, 0], vec![0, 0]]).unwrap()
}

/// Spec over the two-element chain: `lower` sits below `upper`, with
/// `psi` giving the image in `lower` of each `upper` element.
pub fn two_chain_spec(
    lower: FiniteSemigroup,
    upper: FiniteSemigroup,
    psi: Vec<ElementIndex>,
) -> StrongSemilatticeSpec {
    let omega = SemilatticeStructure::new(chain(2)).unwrap();
    let mut maps = BTreeMap::new();
    maps.insert((0, 1), psi);
    StrongSemilatticeSpec::new(omega, vec![lower, upper], maps).unwrap()
}

/// The spec whose composition is isomorphic to [`t3`]: the order-2 group
/// above a single absorbing element `f`.
pub fn t3_spec() -> StrongSemilatticeSpec {
    let f = FiniteSemigroup::from_named_table(&["f"], vec![vec![0]]).unwrap();
    two_chain_spec(f, cyclic(2), vec![0, 0])
}

/// Completely regular semigroups used by the property sweeps, with labels.
pub fn cr_semigroups() -> Vec<(String, FiniteSemigroup)> {
    vec![
        ("trivial".into(), trivial()),
        ("z2".into(), cyclic(2)),
        ("z3".into(), cyclic(3)),
        ("left_zero2".into(), left_zero(2)),
        ("chain2".into(), chain(2)),
        ("chain3".into(), chain(3)),
        ("diamond".into(), diamond()),
        ("t3".into(), t3()),
        ("rect_band_2x2".into(), rect_band_2x2()),
        ("rees_z2_2x2".into(), rees_z2_2x2()),
    ]
}

/// Two-component spec catalog: every component is completely simple and
/// the composed semigroups stay at desk scale (at most six elements).
pub fn spec_catalog() -> Vec<(String, StrongSemilatticeSpec)> {
    let const0 = |upper: &FiniteSemigroup| vec![0; upper.size()];
    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let lz2 = left_zero(2);
    let rb = rect_band_2x2();
    vec![
        ("t3".into(), t3_spec()),
        (
            "trivial_under_trivial".into(),
            two_chain_spec(trivial(), trivial(), vec![0]),
        ),
        ("trivial_under_z3".into(), two_chain_spec(trivial(), z3.clone(), const0(&z3))),
        (
            "z2_under_z2_identity".into(),
            two_chain_spec(z2.clone(), z2.clone(), vec![0, 1]),
        ),
        (
            "trivial_under_left_zero".into(),
            two_chain_spec(trivial(), lz2.clone(), const0(&lz2)),
        ),
        (
            "left_zero_under_z2".into(),
            two_chain_spec(lz2.clone(), z2.clone(), const0(&z2)),
        ),
        (
            "trivial_under_rect_band".into(),
            two_chain_spec(trivial(), rb.clone(), const0(&rb)),
        ),
        (
            "z3_under_z3_identity".into(),
            two_chain_spec(z3.clone(), z3.clone(), vec![0, 1, 2]),
        ),
    ]
}

/// A three-chain spec whose direct top-to-bottom map disagrees with the
/// composite through the middle, violating the composition condition.
pub fn broken_composition_spec() -> StrongSemilatticeSpec {
    let omega = SemilatticeStructure::new(chain(3)).unwrap();
    let z2 = cyclic(2);
    let mut maps = BTreeMap::new();
    maps.insert((0, 1), vec![0, 1]); // identity mid -> bottom
    maps.insert((1, 2), vec![0, 1]); // identity top -> mid
    maps.insert((0, 2), vec![0, 0]); // constant top -> bottom
    StrongSemilatticeSpec::new(omega, vec![z2.clone(), z2.clone(), z2], maps).unwrap()
}
