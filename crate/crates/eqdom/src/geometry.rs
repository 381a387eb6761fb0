//! Algebraic geometry over a finite completely regular semigroup:
//! solution sets of equation systems, point-set algebra, the algebraicity
//! decision procedure, and the union-of-solution-sets campaign that
//! certifies a semigroup is not an equational domain.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::clones::{
    closure_with_observer, enumerate_points, point_count, point_rank, CloneError,
};
use crate::semigroup::{ElementIndex, FiniteSemigroup};
use crate::semilattice::StrongSemilattice;
use crate::term::{evaluate, Equation, EquationSystem, TermError};

/// A finite subset of `S^n`, held in canonical lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    universe: usize,
    arity: usize,
    points: BTreeSet<Vec<ElementIndex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point sets have different arities ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },
    #[error("point sets range over different universes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("point {point:?} does not have arity {arity}")]
    WrongPointArity { point: Vec<usize>, arity: usize },
    #[error("coordinate {value} out of range for universe of size {size}")]
    CoordinateOutOfRange { value: usize, size: usize },
    #[error("point set ranges over {expected} elements, semigroup has {found}")]
    WrongUniverse { expected: usize, found: usize },
    #[error("components {lower} and {upper} are not strictly comparable")]
    NotStrictlyComparable { lower: usize, upper: usize },
    #[error("element {element} is not in component {component}")]
    NotInComponent { element: usize, component: usize },
    #[error("the index semilattice must have more than one element")]
    SingleComponent,
    #[error("probe input {index} is not algebraic, so the union probe does not apply")]
    ProbeInputNotAlgebraic { index: usize },
    #[error(transparent)]
    Clone(#[from] CloneError),
    #[error(transparent)]
    Term(#[from] TermError),
}

impl PointSet {
    pub fn new(
        universe: usize,
        arity: usize,
        points: impl IntoIterator<Item = Vec<ElementIndex>>,
    ) -> Result<Self, GeometryError> {
        if arity == 0 {
            return Err(GeometryError::ZeroArity);
        }
        let mut set = BTreeSet::new();
        for point in points {
            if point.len() != arity {
                return Err(GeometryError::WrongPointArity { point, arity });
            }
            if let Some(&value) = point.iter().find(|&&v| v >= universe) {
                return Err(GeometryError::CoordinateOutOfRange { value, size: universe });
            }
            set.insert(point);
        }
        Ok(PointSet { universe, arity, points: set })
    }

    pub fn empty(universe: usize, arity: usize) -> Result<Self, GeometryError> {
        Self::new(universe, arity, std::iter::empty())
    }

    /// The whole space `S^n`.
    pub fn full(universe: usize, arity: usize) -> Result<Self, GeometryError> {
        Self::new(universe, arity, enumerate_points(universe, arity))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[ElementIndex]) -> bool {
        self.points.contains(point)
    }

    /// Points in canonical lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Vec<ElementIndex>> {
        self.points.iter()
    }

    fn check_compatible(&self, other: &PointSet) -> Result<(), GeometryError> {
        if self.arity != other.arity {
            return Err(GeometryError::ArityMismatch { left: self.arity, right: other.arity });
        }
        if self.universe != other.universe {
            return Err(GeometryError::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet, GeometryError> {
        self.check_compatible(other)?;
        Ok(PointSet {
            universe: self.universe,
            arity: self.arity,
            points: self.points.union(&other.points).cloned().collect(),
        })
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet, GeometryError> {
        self.check_compatible(other)?;
        Ok(PointSet {
            universe: self.universe,
            arity: self.arity,
            points: self.points.intersection(&other.points).cloned().collect(),
        })
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.is_subset(&other.points)
    }
}

/// Exactly the points of `S^n` where every equation of the system reduces
/// to a true equality; the empty system yields all of `S^n`.
pub fn solve(s: &FiniteSemigroup, system: &EquationSystem) -> Result<PointSet, GeometryError> {
    let mut points = Vec::new();
    for point in enumerate_points(s.size(), system.arity()) {
        let mut holds = true;
        for eq in system.equations() {
            if evaluate(s, &eq.lhs, &point)? != evaluate(s, &eq.rhs, &point)? {
                holds = false;
                break;
            }
        }
        if holds {
            points.push(point);
        }
    }
    PointSet::new(s.size(), system.arity(), points)
}

/// Decision of the algebraicity question for one point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicityVerdict {
    /// The set is a solution set; the witness system replays to it
    /// exactly.
    Algebraic { witness: EquationSystem },
    /// The closure reached its fixed point and `stuck` (a point outside
    /// the set) satisfies every equation the set satisfies.
    NotAlgebraic { stuck: Vec<ElementIndex> },
    /// The cap was exhausted before a verdict.
    Unknown { cap: usize, closure_size: usize },
}

/// Verdict plus the closure statistics the reports print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicityDecision {
    pub verdict: AlgebraicityVerdict,
    /// Functions committed before the search ended.
    pub closure_size: usize,
    /// Whether the closure reached its fixed point (an early Algebraic
    /// exit leaves it incomplete on purpose).
    pub closure_complete: bool,
}

/// Decides whether `y` is the solution set of some equation system.
///
/// Clone functions are generated incrementally and bucketed by their
/// restriction to `y`; whenever a newcomer agrees with its bucket
/// representative on `y` but differs outside, the disagreement points are
/// separated and the equation of the two witness terms joins the witness
/// system. All outside points separated means algebraic (the witness is
/// replayed before returning); a completed closure with an unseparated
/// outside point means not algebraic; hitting the cap first means
/// unknown.
pub fn decide_algebraic(
    s: &FiniteSemigroup,
    y: &PointSet,
    cap: usize,
) -> Result<AlgebraicityDecision, GeometryError> {
    if y.universe() != s.size() {
        return Err(GeometryError::WrongUniverse { expected: y.universe(), found: s.size() });
    }
    let arity = y.arity();
    let total = point_count(s.size(), arity);

    let member_ranks: Vec<usize> = y.iter().map(|p| point_rank(p, s.size())).collect();
    let outside_ranks: Vec<usize> = (0..total)
        .filter(|rank| !y.contains(&crate::clones::rank_point(*rank, s.size(), arity)))
        .collect();

    if outside_ranks.is_empty() {
        // the whole space: the empty system suffices
        let witness = EquationSystem::empty(arity)?;
        debug_assert_eq!(&solve(s, &witness)?, y);
        return Ok(AlgebraicityDecision {
            verdict: AlgebraicityVerdict::Algebraic { witness },
            closure_size: 0,
            closure_complete: false,
        });
    }

    let mut buckets: HashMap<Vec<ElementIndex>, usize> = HashMap::new();
    let mut separated = vec![false; outside_ranks.len()];
    let mut remaining = outside_ranks.len();
    let mut witness_equations: Vec<Equation> = Vec::new();

    let (functions, complete) = closure_with_observer(s, arity, cap, |funcs, newest| {
        let f = &funcs[newest];
        let restriction: Vec<ElementIndex> =
            member_ranks.iter().map(|&r| f.values()[r]).collect();
        match buckets.entry(restriction) {
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(newest);
            }
            std::collections::hash_map::Entry::Occupied(slot) => {
                let rep = &funcs[*slot.get()];
                let mut newly_separated = false;
                for (i, &rank) in outside_ranks.iter().enumerate() {
                    if !separated[i] && rep.values()[rank] != f.values()[rank] {
                        separated[i] = true;
                        remaining -= 1;
                        newly_separated = true;
                    }
                }
                if newly_separated {
                    witness_equations.push(Equation {
                        lhs: rep.witness().clone(),
                        rhs: f.witness().clone(),
                    });
                    if remaining == 0 {
                        return ControlFlow::Break(());
                    }
                }
            }
        }
        ControlFlow::Continue(())
    })?;

    let closure_size = functions.len();
    if remaining == 0 {
        let witness = EquationSystem::new(arity, witness_equations)?;
        let replay = solve(s, &witness)?;
        assert_eq!(&replay, y, "witness system must replay to the decided set");
        return Ok(AlgebraicityDecision {
            verdict: AlgebraicityVerdict::Algebraic { witness },
            closure_size,
            closure_complete: complete,
        });
    }
    if complete {
        let first = separated.iter().position(|&done| !done).expect("some point unseparated");
        let stuck = crate::clones::rank_point(outside_ranks[first], s.size(), arity);
        return Ok(AlgebraicityDecision {
            verdict: AlgebraicityVerdict::NotAlgebraic { stuck },
            closure_size,
            closure_complete: true,
        });
    }
    Ok(AlgebraicityDecision {
        verdict: AlgebraicityVerdict::Unknown { cap, closure_size },
        closure_size,
        closure_complete: false,
    })
}

/// The two-variable set `{(x, y) : x = b or y = b}`, the union of the
/// solution sets of `x = b` and `y = b`; it has `2|S| - 1` points.
pub fn theorem2_counterexample(
    sl: &StrongSemilattice,
    lower: usize,
    upper: usize,
    b: ElementIndex,
) -> Result<PointSet, GeometryError> {
    if lower == upper || !sl.omega().leq(lower, upper) {
        return Err(GeometryError::NotStrictlyComparable { lower, upper });
    }
    if sl.component_of(b) != upper {
        return Err(GeometryError::NotInComponent { element: b, component: upper });
    }
    let s = sl.semigroup();
    let mut points = Vec::new();
    for x in 0..s.size() {
        for y in 0..s.size() {
            if x == b || y == b {
                points.push(vec![x, y]);
            }
        }
    }
    PointSet::new(s.size(), 2, points)
}

/// One `(lower, upper, b)` case of the campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignCase {
    pub lower: String,
    pub upper: String,
    pub b: String,
    pub stuck_name: Option<Vec<String>>,
    pub decision: AlgebraicityDecision,
}

/// Report over every strictly comparable component pair and every element
/// of the upper component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub cases: Vec<CampaignCase>,
}

impl CampaignReport {
    /// Passes when no case came back algebraic and every completed case
    /// came back not algebraic; unknown cases weaken the campaign but do
    /// not falsify it.
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|case| {
            !matches!(case.decision.verdict, AlgebraicityVerdict::Algebraic { .. })
        })
    }

    pub fn unknown_count(&self) -> usize {
        self.cases
            .iter()
            .filter(|case| matches!(case.decision.verdict, AlgebraicityVerdict::Unknown { .. }))
            .count()
    }

    pub fn not_algebraic_count(&self) -> usize {
        self.cases
            .iter()
            .filter(|case| {
                matches!(case.decision.verdict, AlgebraicityVerdict::NotAlgebraic { .. })
            })
            .count()
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for case in &self.cases {
            let verdict = match &case.decision.verdict {
                AlgebraicityVerdict::Algebraic { witness } => {
                    format!("algebraic witness-size={}", witness.len())
                }
                AlgebraicityVerdict::NotAlgebraic { .. } => {
                    let stuck = case
                        .stuck_name
                        .as_ref()
                        .map(|names| names.join(","))
                        .unwrap_or_default();
                    format!("not-algebraic stuck=({stuck})")
                }
                AlgebraicityVerdict::Unknown { cap, .. } => format!("unknown cap={cap}"),
            };
            writeln!(
                f,
                "case: alpha={} beta={} b={} verdict={} closure={} complete={}",
                case.lower,
                case.upper,
                case.b,
                verdict,
                case.decision.closure_size,
                if case.decision.closure_complete { "yes" } else { "no" },
            )?;
        }
        write!(
            f,
            "campaign: cases={} not-algebraic={} unknown={} result={}",
            self.cases.len(),
            self.not_algebraic_count(),
            self.unknown_count(),
            if self.pass() { "PASS" } else { "FAIL" },
        )
    }
}

/// Runs [`decide_algebraic`] on the counterexample set of every strictly
/// comparable pair and every element of the upper component. A passing
/// campaign certifies the composed semigroup is not an equational domain.
pub fn verify_theorem2(sl: &StrongSemilattice, cap: usize) -> Result<CampaignReport, GeometryError> {
    let omega = sl.omega();
    if omega.size() <= 1 {
        return Err(GeometryError::SingleComponent);
    }
    let s = sl.semigroup();
    let mut cases = Vec::new();
    for lower in 0..omega.size() {
        for upper in 0..omega.size() {
            if lower == upper || !omega.leq(lower, upper) {
                continue;
            }
            for &b in sl.labeling().members(upper) {
                let m = theorem2_counterexample(sl, lower, upper, b)?;
                let decision = decide_algebraic(s, &m, cap)?;
                let stuck_name = match &decision.verdict {
                    AlgebraicityVerdict::NotAlgebraic { stuck } => {
                        Some(stuck.iter().map(|&e| s.name(e).to_string()).collect())
                    }
                    _ => None,
                };
                cases.push(CampaignCase {
                    lower: omega.name(lower).to_string(),
                    upper: omega.name(upper).to_string(),
                    b: s.name(b).to_string(),
                    stuck_name,
                    decision,
                });
            }
        }
    }
    Ok(CampaignReport { cases })
}

/// Union probe: verifies each input is algebraic, then decides the union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionProbeReport {
    pub input_decisions: Vec<AlgebraicityDecision>,
    pub union_decision: AlgebraicityDecision,
}

impl UnionProbeReport {
    /// A non-algebraic union of algebraic sets certifies the semigroup is
    /// not an equational domain.
    pub fn certifies_not_equational_domain(&self) -> bool {
        matches!(self.union_decision.verdict, AlgebraicityVerdict::NotAlgebraic { .. })
    }
}

/// Checks that every input set is algebraic and decides the algebraicity
/// of their union; a `NotAlgebraic` union verdict is a certificate that
/// `s` is not an equational domain.
pub fn union_probe(
    s: &FiniteSemigroup,
    sets: &[PointSet],
    cap: usize,
) -> Result<UnionProbeReport, GeometryError> {
    assert!(!sets.is_empty(), "probe needs at least one input set");
    let mut input_decisions = Vec::with_capacity(sets.len());
    for (index, set) in sets.iter().enumerate() {
        let decision = decide_algebraic(s, set, cap)?;
        if !matches!(decision.verdict, AlgebraicityVerdict::Algebraic { .. }) {
            return Err(GeometryError::ProbeInputNotAlgebraic { index });
        }
        input_decisions.push(decision);
    }
    let mut union = sets[0].clone();
    for set in &sets[1..] {
        union = union.union(set)?;
    }
    let union_decision = decide_algebraic(s, &union, cap)?;
    Ok(UnionProbeReport { input_decisions, union_decision })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semilattice::decompose;
    use crate::term::{parse_term, EquationSystem};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn system(s: &FiniteSemigroup, var_names: &[&str], lines: &[&str]) -> EquationSystem {
        let names = vars(var_names);
        let equations = lines
            .iter()
            .map(|line| {
                let (l, r) = line.split_once('=').unwrap();
                Equation {
                    lhs: parse_term(l, &names, s).unwrap(),
                    rhs: parse_term(r, &names, s).unwrap(),
                }
            })
            .collect();
        EquationSystem::new(names.len(), equations).unwrap()
    }

    #[test]
    fn solve_examples_over_t3() {
        let t3 = catalog::t3();
        let a = t3.index_of("a").unwrap();

        let sol = solve(&t3, &system(&t3, &["x"], &["x = a"])).unwrap();
        assert_eq!(sol.iter().collect::<Vec<_>>(), vec![&vec![a]]);

        let idem = solve(&t3, &system(&t3, &["x"], &["x x = x"])).unwrap();
        let found: Vec<_> = idem.iter().map(|p| p[0]).collect();
        assert_eq!(found, t3.idempotents());

        let all = solve(&t3, &EquationSystem::empty(2).unwrap()).unwrap();
        assert_eq!(all.len(), 9);

        let none = solve(&t3, &system(&t3, &["x"], &["a = f"])).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn union_and_intersection() {
        let t3 = catalog::t3();
        let a = t3.index_of("a").unwrap();
        let vx = solve(&t3, &system(&t3, &["x", "y"], &["x = a"])).unwrap();
        let vy = solve(&t3, &system(&t3, &["x", "y"], &["y = a"])).unwrap();
        let m = vx.union(&vy).unwrap();
        assert_eq!(m.len(), 5);
        let both = vx.intersection(&vy).unwrap();
        assert_eq!(both.iter().collect::<Vec<_>>(), vec![&vec![a, a]]);

        let empty = PointSet::empty(3, 2).unwrap();
        assert_eq!(vx.union(&empty).unwrap(), vx);

        let other_arity = PointSet::empty(3, 1).unwrap();
        assert!(matches!(
            vx.union(&other_arity),
            Err(GeometryError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn intersection_of_solutions_solves_the_joined_system() {
        let t3 = catalog::t3();
        let s1 = system(&t3, &["x", "y"], &["x x = x"]);
        let s2 = system(&t3, &["x", "y"], &["x y = y x", "y = a"]);
        let joined = s1.join(&s2).unwrap();
        let lhs = solve(&t3, &s1).unwrap().intersection(&solve(&t3, &s2).unwrap()).unwrap();
        assert_eq!(lhs, solve(&t3, &joined).unwrap());
    }

    #[test]
    fn singleton_is_algebraic_with_constant_witness() {
        let t3 = catalog::t3();
        let b = t3.index_of("a").unwrap();
        let y = PointSet::new(3, 1, vec![vec![b]]).unwrap();
        let decision = decide_algebraic(&t3, &y, 10_000).unwrap();
        match decision.verdict {
            AlgebraicityVerdict::Algebraic { witness } => {
                assert_eq!(&solve(&t3, &witness).unwrap(), &y);
            }
            other => panic!("singleton must be algebraic, got {other:?}"),
        }
    }

    #[test]
    fn whole_space_is_algebraic_with_empty_witness() {
        let t3 = catalog::t3();
        let y = PointSet::full(3, 2).unwrap();
        let decision = decide_algebraic(&t3, &y, 10).unwrap();
        match decision.verdict {
            AlgebraicityVerdict::Algebraic { witness } => assert!(witness.is_empty()),
            other => panic!("full space must be algebraic, got {other:?}"),
        }
    }

    // Over t3 the two-variable clone consists of the constant f and the
    // monomials x^p y^q c, and no two of them agree on the union set M,
    // so no outside point is ever separated: every outside point is
    // stuck, and the canonical scan reports (e, e) first.
    #[test]
    fn union_counterexample_over_t3_is_not_algebraic() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        let a = t3.index_of("a").unwrap();
        let e = t3.index_of("e").unwrap();
        let m = theorem2_counterexample(&sl, 1, 0, a).unwrap();
        assert_eq!(m.len(), 5);
        let decision = decide_algebraic(&t3, &m, 100_000).unwrap();
        assert!(decision.closure_complete);
        match decision.verdict {
            AlgebraicityVerdict::NotAlgebraic { stuck } => {
                assert!(!m.contains(&stuck));
                assert_eq!(stuck, vec![e, e]);
            }
            other => panic!("M must not be algebraic, got {other:?}"),
        }
    }

    #[test]
    fn solution_sets_replay_as_algebraic() {
        let t3 = catalog::t3();
        let sys = system(&t3, &["x"], &["x x = x"]);
        let y = solve(&t3, &sys).unwrap();
        let decision = decide_algebraic(&t3, &y, 10_000).unwrap();
        match decision.verdict {
            AlgebraicityVerdict::Algebraic { witness } => {
                assert_eq!(solve(&t3, &witness).unwrap(), y);
            }
            other => panic!("solution set must be algebraic, got {other:?}"),
        }
    }

    #[test]
    fn empty_set_over_z2_is_algebraic() {
        let z2 = catalog::cyclic(2);
        let y = PointSet::empty(2, 1).unwrap();
        let decision = decide_algebraic(&z2, &y, 1000).unwrap();
        match decision.verdict {
            AlgebraicityVerdict::Algebraic { witness } => {
                assert!(solve(&z2, &witness).unwrap().is_empty());
            }
            other => panic!("empty set over Z2 must be algebraic, got {other:?}"),
        }
    }

    #[test]
    fn empty_set_over_trivial_semigroup_is_not_algebraic() {
        let s = catalog::trivial();
        let y = PointSet::empty(1, 1).unwrap();
        let decision = decide_algebraic(&s, &y, 1000).unwrap();
        assert!(matches!(
            decision.verdict,
            AlgebraicityVerdict::NotAlgebraic { .. }
        ));
    }

    #[test]
    fn tiny_cap_reports_unknown() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        let a = t3.index_of("a").unwrap();
        let m = theorem2_counterexample(&sl, 1, 0, a).unwrap();
        let decision = decide_algebraic(&t3, &m, 1).unwrap();
        assert!(matches!(decision.verdict, AlgebraicityVerdict::Unknown { cap: 1, .. }));
    }

    #[test]
    fn counterexample_sizes() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        for b in ["e", "a"] {
            let b = t3.index_of(b).unwrap();
            let m = theorem2_counterexample(&sl, 1, 0, b).unwrap();
            assert_eq!(m.len(), 2 * 3 - 1);
        }
        let chain = catalog::chain(2);
        let sl = decompose(&chain).unwrap();
        let top = chain.index_of("c1").unwrap();
        let m = theorem2_counterexample(&sl, 0, 1, top).unwrap();
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn counterexample_preconditions() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        let a = t3.index_of("a").unwrap();
        let f = t3.index_of("f").unwrap();
        assert!(matches!(
            theorem2_counterexample(&sl, 0, 0, a),
            Err(GeometryError::NotStrictlyComparable { .. })
        ));
        assert!(matches!(
            theorem2_counterexample(&sl, 1, 0, f),
            Err(GeometryError::NotInComponent { .. })
        ));
    }

    #[test]
    fn campaign_over_t3_passes_with_two_cases() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        let report = verify_theorem2(&sl, 100_000).unwrap();
        assert_eq!(report.cases.len(), 2); // b in {e, a}
        assert!(report.pass());
        assert_eq!(report.unknown_count(), 0);
        assert_eq!(report.not_algebraic_count(), 2);
    }

    #[test]
    fn campaign_over_two_chain_passes_with_one_case() {
        let chain = catalog::chain(2);
        let sl = decompose(&chain).unwrap();
        let report = verify_theorem2(&sl, 100_000).unwrap();
        assert_eq!(report.cases.len(), 1);
        assert!(report.pass());
        assert_eq!(report.unknown_count(), 0);
    }

    #[test]
    fn campaign_needs_more_than_one_component() {
        let sl = decompose(&catalog::cyclic(3)).unwrap();
        assert!(matches!(
            verify_theorem2(&sl, 1000),
            Err(GeometryError::SingleComponent)
        ));
    }

    #[test]
    fn union_probe_certifies_t3_is_not_an_equational_domain() {
        let t3 = catalog::t3();
        let vx = solve(&t3, &system(&t3, &["x", "y"], &["x = a"])).unwrap();
        let vy = solve(&t3, &system(&t3, &["x", "y"], &["y = a"])).unwrap();
        let report = union_probe(&t3, &[vx, vy], 100_000).unwrap();
        assert!(report.certifies_not_equational_domain());
    }

    #[test]
    fn union_probe_single_set_is_its_own_union() {
        let t3 = catalog::t3();
        let y = solve(&t3, &system(&t3, &["x"], &["x x = x"])).unwrap();
        let report = union_probe(&t3, &[y], 100_000).unwrap();
        assert!(!report.certifies_not_equational_domain());
        assert!(matches!(
            report.union_decision.verdict,
            AlgebraicityVerdict::Algebraic { .. }
        ));
    }

    #[test]
    fn union_probe_two_singletons_cover_z2() {
        let z2 = catalog::cyclic(2);
        let e = PointSet::new(2, 1, vec![vec![0]]).unwrap();
        let a = PointSet::new(2, 1, vec![vec![1]]).unwrap();
        let report = union_probe(&z2, &[e, a], 10_000).unwrap();
        assert!(!report.certifies_not_equational_domain());
    }

    #[test]
    fn union_probe_rejects_non_algebraic_input() {
        let t3 = catalog::t3();
        let sl = decompose(&t3).unwrap();
        let a = t3.index_of("a").unwrap();
        let m = theorem2_counterexample(&sl, 1, 0, a).unwrap();
        assert!(matches!(
            union_probe(&t3, &[m], 100_000),
            Err(GeometryError::ProbeInputNotAlgebraic { index: 0 })
        ));
    }
}
