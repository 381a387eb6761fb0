//! Extensional closure of the term operations: every function `S^n -> S`
//! reachable from projections and constants under pointwise product and
//! pointwise inversion, each carried with a depth-minimal witness term.
//!
//! Functions are value vectors indexed by the canonical lexicographic
//! enumeration of `S^n` (first coordinate most significant), so equality
//! of functions is equality of vectors.

use std::collections::HashMap;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::semigroup::{ElementIndex, FiniteSemigroup};
use crate::term::Term;

/// Default resource bound: roughly this many value-vector entries are
/// retained before the search gives up.
pub const DEFAULT_CAP_ENTRIES: usize = 2_000_000;

/// Default cap on retained functions for a semigroup of `size` elements
/// at the given arity.
pub fn default_cap(size: usize, arity: usize) -> usize {
    let entries = size.checked_pow(arity as u32).unwrap_or(usize::MAX).max(1);
    (DEFAULT_CAP_ENTRIES / entries).max(1)
}

/// Number of points in `S^n` for `|S| = size`.
pub fn point_count(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

/// Rank of a point in the canonical enumeration of `S^n`.
pub fn point_rank(point: &[ElementIndex], size: usize) -> usize {
    point.iter().fold(0, |acc, &p| acc * size + p)
}

/// Inverse of [`point_rank`].
pub fn rank_point(rank: usize, size: usize, arity: usize) -> Vec<ElementIndex> {
    let mut point = vec![0; arity];
    let mut rest = rank;
    for slot in point.iter_mut().rev() {
        *slot = rest % size;
        rest /= size;
    }
    point
}

/// All points of `S^n` in canonical order.
pub fn enumerate_points(size: usize, arity: usize) -> impl Iterator<Item = Vec<ElementIndex>> {
    (0..point_count(size, arity)).map(move |rank| rank_point(rank, size, arity))
}

/// A term operation in extensional form: its value at every point of
/// `S^n`, plus one witness term of minimal construction depth among those
/// discovered for it.
#[derive(Debug, Clone)]
pub struct TermFunction {
    arity: usize,
    values: Vec<ElementIndex>,
    witness: Term,
}

impl TermFunction {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[ElementIndex] {
        &self.values
    }

    pub fn witness(&self) -> &Term {
        &self.witness
    }
}

/// Functions are identified with their value vectors; witnesses are
/// bookkeeping and do not participate in equality.
impl PartialEq for TermFunction {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.values == other.values
    }
}

impl Eq for TermFunction {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CloneError {
    #[error("closure needs a completely regular semigroup (witness `{witness}`)")]
    NotCompletelyRegular { witness: String },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("cap must be at least 1")]
    ZeroCap,
}

/// Result of the closure search: the functions in discovery order and
/// whether the fixed point was reached within the cap.
#[derive(Debug, Clone)]
pub struct CloneClosure {
    pub functions: Vec<TermFunction>,
    pub complete: bool,
}

/// Drives the breadth-first closure, handing each newly committed
/// function to `observer` (with the whole set so far); the observer can
/// stop the search early. Returns the functions and whether a fixed point
/// was reached.
pub(crate) fn closure_with_observer<F>(
    s: &FiniteSemigroup,
    arity: usize,
    cap: usize,
    mut observer: F,
) -> Result<(Vec<TermFunction>, bool), CloneError>
where
    F: FnMut(&[TermFunction], usize) -> ControlFlow<()>,
{
    if arity == 0 {
        return Err(CloneError::ZeroArity);
    }
    if cap == 0 {
        return Err(CloneError::ZeroCap);
    }
    let inverse: Vec<ElementIndex> = (0..s.size())
        .map(|a| {
            s.cr_inverse(a).map_err(|_| CloneError::NotCompletelyRegular {
                witness: s.name(a).to_string(),
            })
        })
        .collect::<Result<_, _>>()?;

    let points: Vec<Vec<ElementIndex>> = enumerate_points(s.size(), arity).collect();
    let mut funcs: Vec<TermFunction> = Vec::new();
    let mut index: HashMap<Vec<ElementIndex>, usize> = HashMap::new();

    // commit a candidate; Break(true) stops the search, Break(false)
    // reports cap exhaustion
    macro_rules! commit {
        ($values:expr, $witness:expr) => {{
            let values: Vec<ElementIndex> = $values;
            if !index.contains_key(&values) {
                if funcs.len() == cap {
                    return Ok((funcs, false));
                }
                index.insert(values.clone(), funcs.len());
                funcs.push(TermFunction { arity, values, witness: $witness });
                let newest = funcs.len() - 1;
                if observer(&funcs, newest).is_break() {
                    return Ok((funcs, false));
                }
            }
        }};
    }

    // depth-0 seeds: projections first, then constants
    for v in 0..arity {
        commit!(points.iter().map(|p| p[v]).collect(), Term::Variable(v));
    }
    for c in 0..s.size() {
        commit!(vec![c; points.len()], Term::Constant(c));
    }

    // round r commits exactly the functions of minimal construction depth
    // r, so the first witness found for a function is depth-minimal
    let mut frontier_start = 0;
    loop {
        let known = funcs.len();
        if frontier_start == known {
            return Ok((funcs, true));
        }
        for f in frontier_start..known {
            let values = funcs[f].values.iter().map(|&v| inverse[v]).collect();
            let witness = Term::inverse(funcs[f].witness.clone());
            commit!(values, witness);
        }
        for left in 0..known {
            for right in 0..known {
                if left < frontier_start && right < frontier_start {
                    continue;
                }
                let values = funcs[left]
                    .values
                    .iter()
                    .zip(&funcs[right].values)
                    .map(|(&a, &b)| s.product(a, b))
                    .collect();
                let witness =
                    Term::product(funcs[left].witness.clone(), funcs[right].witness.clone());
                commit!(values, witness);
            }
        }
        frontier_start = known;
    }
}

/// Least set of functions `S^n -> S` containing the projections and the
/// constant functions and closed under pointwise product and pointwise
/// inversion, computed to a fixed point or up to `cap` retained functions.
pub fn clone_closure(
    s: &FiniteSemigroup,
    arity: usize,
    cap: usize,
) -> Result<CloneClosure, CloneError> {
    let (functions, complete) =
        closure_with_observer(s, arity, cap, |_, _| ControlFlow::Continue(()))?;
    Ok(CloneClosure { functions, complete })
}
