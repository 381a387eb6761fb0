//! Executable laws tying term evaluation to a strong-semilattice
//! decomposition: where a term's value lands, how structure maps commute
//! with evaluation, and when evaluation cannot tell a point from its image
//! in a lower component.
//!
//! Each check returns a witness record with every intermediate value, so a
//! failure (which would indicate an implementation bug, the laws being
//! theorems) is directly inspectable.

use thiserror::Error;

use crate::semigroup::ElementIndex;
use crate::semilattice::{ComponentLabeling, StrongSemilattice};
use crate::term::{evaluate, Term, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("components {lower} and {upper} are not comparable (need lower <= upper)")]
    NotComparable { lower: usize, upper: usize },
    #[error("element {element} lies in component {found}, expected {expected}")]
    WrongComponent { element: usize, found: usize, expected: usize },
    #[error("law applies to terms in at most one variable, this term uses {found}")]
    TooManyVariables { found: usize },
    #[error("term contains no constant from component {component}")]
    NoAnchorConstant { component: usize },
    #[error("no component supplied for variable {variable}")]
    MissingPointComponent { variable: usize },
    #[error(transparent)]
    Eval(#[from] TermError),
}

/// Component indices of all constant occurrences of `t`, in left-to-right
/// order with repetitions kept.
pub fn constants_components(t: &Term, labeling: &ComponentLabeling) -> Vec<usize> {
    t.constants().iter().map(|&c| labeling.component_of(c)).collect()
}

/// Predicts the component of `t`'s value from the components of its
/// constants and of the point coordinates its variables range over:
/// the meet of all of them.
///
/// `point_components[i]` is the component of the i-th point coordinate;
/// coordinates whose variable does not occur in `t` contribute nothing.
pub fn predicted_component(
    sl: &StrongSemilattice,
    t: &Term,
    point_components: &[usize],
) -> Result<usize, LawError> {
    let omega = sl.omega();
    let mut factors: Vec<usize> = constants_components(t, sl.labeling());
    for v in t.variables() {
        let &c = point_components
            .get(v)
            .ok_or(LawError::MissingPointComponent { variable: v })?;
        factors.push(c);
    }
    let mut iter = factors.into_iter();
    let first = iter.next().expect("terms contain at least one atom");
    Ok(iter.fold(first, |acc, c| omega.meet(acc, c)))
}

fn require_comparable(sl: &StrongSemilattice, lower: usize, upper: usize) -> Result<(), LawError> {
    if sl.omega().leq(lower, upper) {
        Ok(())
    } else {
        Err(LawError::NotComparable { lower, upper })
    }
}

fn require_in_component(
    sl: &StrongSemilattice,
    element: ElementIndex,
    component: usize,
) -> Result<(), LawError> {
    let found = sl.component_of(element);
    if found == component {
        Ok(())
    } else {
        Err(LawError::WrongComponent { element, found, expected: component })
    }
}

fn require_single_variable(t: &Term) -> Result<(), LawError> {
    let vars = t.variables();
    if vars.iter().any(|&v| v > 0) {
        return Err(LawError::TooManyVariables { found: vars.len() });
    }
    Ok(())
}

fn anchored_constant(sl: &StrongSemilattice, t: &Term, component: usize) -> Result<(), LawError> {
    if t.constants().iter().any(|&c| sl.component_of(c) == component) {
        Ok(())
    } else {
        Err(LawError::NoAnchorConstant { component })
    }
}

/// Witness for the transport law: with `a` the image of `b` under the
/// structure map down to `alpha`, the value `t(a)` is the structure-map
/// image of `t(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLawCheck {
    pub alpha: usize,
    pub beta: usize,
    pub b: ElementIndex,
    pub a: ElementIndex,
    pub value_at_b: ElementIndex,
    pub value_at_a: ElementIndex,
    /// Component of `t(b)`.
    pub delta: usize,
    /// Component of `t(a)`.
    pub gamma: usize,
    pub order_holds: bool,
    pub transported: ElementIndex,
    pub pass: bool,
}

/// Checks that evaluation of a one-variable term commutes with the
/// structure maps: `gamma <= delta` and the map from `delta` down to
/// `gamma` carries `t(b)` to `t(a)`.
pub fn check_hom_law(
    sl: &StrongSemilattice,
    t: &Term,
    alpha: usize,
    beta: usize,
    b: ElementIndex,
) -> Result<HomLawCheck, LawError> {
    require_single_variable(t)?;
    require_comparable(sl, alpha, beta)?;
    require_in_component(sl, b, beta)?;
    let a = sl.map_down(alpha, b).expect("comparable pair has a map");

    let s = sl.semigroup();
    let value_at_b = evaluate(s, t, &[b])?;
    let value_at_a = evaluate(s, t, &[a])?;
    let delta = sl.component_of(value_at_b);
    let gamma = sl.component_of(value_at_a);
    let order_holds = sl.omega().leq(gamma, delta);
    let transported = if order_holds {
        sl.map_down(gamma, value_at_b).expect("comparable pair has a map")
    } else {
        value_at_b
    };
    let pass = order_holds && transported == value_at_a;
    Ok(HomLawCheck {
        alpha,
        beta,
        b,
        a,
        value_at_b,
        value_at_a,
        delta,
        gamma,
        order_holds,
        transported,
        pass,
    })
}

/// Witness for the same-component law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameComponentCheck {
    pub value_at_b: ElementIndex,
    pub value_at_image: ElementIndex,
    pub component_at_b: usize,
    pub component_at_image: usize,
    pub pass: bool,
}

/// For a one-variable term anchored by a constant from component `alpha`,
/// evaluating at `b` and at its image in `alpha` lands in one component.
pub fn check_same_component_law(
    sl: &StrongSemilattice,
    t: &Term,
    alpha: usize,
    beta: usize,
    b: ElementIndex,
) -> Result<SameComponentCheck, LawError> {
    require_single_variable(t)?;
    require_comparable(sl, alpha, beta)?;
    require_in_component(sl, b, beta)?;
    anchored_constant(sl, t, alpha)?;
    let a = sl.map_down(alpha, b).expect("comparable pair has a map");

    let s = sl.semigroup();
    let value_at_b = evaluate(s, t, &[b])?;
    let value_at_image = evaluate(s, t, &[a])?;
    let component_at_b = sl.component_of(value_at_b);
    let component_at_image = sl.component_of(value_at_image);
    Ok(SameComponentCheck {
        value_at_b,
        value_at_image,
        component_at_b,
        component_at_image,
        pass: component_at_b == component_at_image,
    })
}

/// Witness for the collapse law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseCheck {
    pub value_at_b: ElementIndex,
    pub value_at_image: ElementIndex,
    pub pass: bool,
}

/// For a one-variable term anchored by a constant from component `alpha`,
/// evaluation cannot distinguish `b` from its image in `alpha`:
/// `t(b) = t(psi(b))` exactly.
pub fn check_collapse_law(
    sl: &StrongSemilattice,
    t: &Term,
    alpha: usize,
    beta: usize,
    b: ElementIndex,
) -> Result<CollapseCheck, LawError> {
    require_single_variable(t)?;
    require_comparable(sl, alpha, beta)?;
    require_in_component(sl, b, beta)?;
    anchored_constant(sl, t, alpha)?;
    let a = sl.map_down(alpha, b).expect("comparable pair has a map");

    let s = sl.semigroup();
    let value_at_b = evaluate(s, t, &[b])?;
    let value_at_image = evaluate(s, t, &[a])?;
    Ok(CollapseCheck { value_at_b, value_at_image, pass: value_at_b == value_at_image })
}
