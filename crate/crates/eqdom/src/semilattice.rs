//! Semilattices and strong semilattices of semigroups: validation of the
//! structure-map conditions, composition of a full multiplication table
//! from components, and decomposition of a table back into components.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::semigroup::{ElementIndex, FiniteSemigroup, SemigroupError};

/// True iff `s` is commutative and idempotent.
pub fn is_semilattice(s: &FiniteSemigroup) -> bool {
    let n = s.size();
    (0..n).all(|x| s.product(x, x) == x)
        && (0..n).all(|x| (0..n).all(|y| s.product(x, y) == s.product(y, x)))
}

/// A commutative idempotent semigroup together with its derived partial
/// order `x <= y iff xy = x`; the product is the meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemilatticeStructure {
    carrier: FiniteSemigroup,
}

impl SemilatticeStructure {
    pub fn new(carrier: FiniteSemigroup) -> Result<Self, StructureError> {
        if !is_semilattice(&carrier) {
            return Err(StructureError::NotSemilattice);
        }
        Ok(SemilatticeStructure { carrier })
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn name(&self, x: ElementIndex) -> &str {
        self.carrier.name(x)
    }

    pub fn meet(&self, x: ElementIndex, y: ElementIndex) -> ElementIndex {
        self.carrier.product(x, y)
    }

    pub fn leq(&self, x: ElementIndex, y: ElementIndex) -> bool {
        self.meet(x, y) == x
    }

    /// All order pairs `(x, y)` with `x <= y`, ascending.
    pub fn order_pairs(&self) -> BTreeSet<(ElementIndex, ElementIndex)> {
        let n = self.size();
        let mut pairs = BTreeSet::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    pairs.insert((x, y));
                }
            }
        }
        pairs
    }
}

/// A semilattice-indexed family of component semigroups with structure
/// maps `psi[(lower, upper)] : S_upper -> S_lower` for comparable pairs.
///
/// Identity maps on each component are implicit; an explicit entry for a
/// pair `(a, a)` is allowed so that validation can detect a broken one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongSemilatticeSpec {
    omega: SemilatticeStructure,
    components: Vec<FiniteSemigroup>,
    maps: BTreeMap<(usize, usize), Vec<ElementIndex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("carrier is not a semilattice (commutative idempotent)")]
    NotSemilattice,
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("map ({lower}, {upper}) relates incomparable indices")]
    MapNotComparable { lower: usize, upper: usize },
    #[error("map ({lower}, {upper}) has {found} entries, expected {expected}")]
    MapWrongLength {
        lower: usize,
        upper: usize,
        expected: usize,
        found: usize,
    },
    #[error("map ({lower}, {upper}) sends element {element} to {image}, out of range {size}")]
    MapImageOutOfRange {
        lower: usize,
        upper: usize,
        element: usize,
        image: usize,
        size: usize,
    },
    #[error("spec validation failed:\n{0}")]
    InvalidSpec(ValidationReport),
    #[error("input is not completely regular (witness `{witness}`)")]
    NotCompletelyRegular { witness: String },
    #[error(
        "quotient multiplication ill-defined: `{s}`*`{t}` lands in class of `{found}`, \
         expected class of `{expected}`"
    )]
    QuotientIllDefined {
        s: String,
        t: String,
        expected: String,
        found: String,
    },
    #[error("quotient is not a semilattice")]
    QuotientNotSemilattice,
    #[error(
        "no strong structure: element `{b}` of class `{upper}` has {candidates} \
         compatible image(s) in class `{lower}`"
    )]
    NoStrongStructure {
        lower: String,
        upper: String,
        b: String,
        candidates: usize,
    },
    #[error(
        "multiplication mismatch: `{s}`*`{t}` = `{expected}` in the table but the \
         structure maps give `{found}`"
    )]
    MultiplicationMismatch {
        s: String,
        t: String,
        expected: String,
        found: String,
    },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// One violated condition of a [`StrongSemilatticeSpec`], with names
/// resolved for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    /// A comparable pair has no structure map.
    MissingMap { lower: String, upper: String },
    /// An explicit map on a pair `(a, a)` is not the identity.
    IdentityBroken { index: String, element: String, image: String },
    /// Composing maps along `lower <= mid <= upper` disagrees with the
    /// direct map.
    CompositionMismatch {
        lower: String,
        mid: String,
        upper: String,
        element: String,
        via_mid: String,
        direct: String,
    },
    /// The two descent routes from `upper` through `left`/`right` to their
    /// meet disagree.
    DescentMismatch {
        left: String,
        right: String,
        upper: String,
        element: String,
        via_left: String,
        via_right: String,
    },
    /// A structure map fails `psi(xy) = psi(x) psi(y)`.
    NotHomomorphism {
        lower: String,
        upper: String,
        x: String,
        y: String,
    },
    /// A component has an element outside every subgroup.
    ComponentNotCompletelyRegular { index: String, witness: String },
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::MissingMap { lower, upper } => {
                write!(f, "missing structure map from `{upper}` down to `{lower}`")
            }
            SpecViolation::IdentityBroken { index, element, image } => write!(
                f,
                "map on (`{index}`, `{index}`) must be the identity but sends `{element}` to `{image}`"
            ),
            SpecViolation::CompositionMismatch {
                lower,
                mid,
                upper,
                element,
                via_mid,
                direct,
            } => write!(
                f,
                "maps do not compose along `{lower}` <= `{mid}` <= `{upper}`: \
                 element `{element}` goes to `{via_mid}` via `{mid}` but `{direct}` directly"
            ),
            SpecViolation::DescentMismatch {
                left,
                right,
                upper,
                element,
                via_left,
                via_right,
            } => write!(
                f,
                "descent from `{upper}` to the meet of `{left}` and `{right}` disagrees: \
                 element `{element}` gives `{via_left}` via `{left}` and `{via_right}` via `{right}`"
            ),
            SpecViolation::NotHomomorphism { lower, upper, x, y } => write!(
                f,
                "map from `{upper}` to `{lower}` is not a homomorphism at `{x}`*`{y}`"
            ),
            SpecViolation::ComponentNotCompletelyRegular { index, witness } => write!(
                f,
                "component `{index}` is not completely regular (witness `{witness}`)"
            ),
        }
    }
}

/// Every violated spec condition; empty iff the spec is valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<SpecViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "spec satisfies all structure conditions");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

impl StrongSemilatticeSpec {
    /// Shape-checks the family; the semantic conditions are examined by
    /// [`StrongSemilatticeSpec::validate`].
    pub fn new(
        omega: SemilatticeStructure,
        components: Vec<FiniteSemigroup>,
        maps: BTreeMap<(usize, usize), Vec<ElementIndex>>,
    ) -> Result<Self, StructureError> {
        if components.len() != omega.size() {
            return Err(StructureError::ComponentCount {
                expected: omega.size(),
                found: components.len(),
            });
        }
        for (&(lower, upper), map) in &maps {
            if lower >= omega.size() || upper >= omega.size() || !omega.leq(lower, upper) {
                return Err(StructureError::MapNotComparable { lower, upper });
            }
            if map.len() != components[upper].size() {
                return Err(StructureError::MapWrongLength {
                    lower,
                    upper,
                    expected: components[upper].size(),
                    found: map.len(),
                });
            }
            for (element, &image) in map.iter().enumerate() {
                if image >= components[lower].size() {
                    return Err(StructureError::MapImageOutOfRange {
                        lower,
                        upper,
                        element,
                        image,
                        size: components[lower].size(),
                    });
                }
            }
        }
        Ok(StrongSemilatticeSpec { omega, components, maps })
    }

    pub fn omega(&self) -> &SemilatticeStructure {
        &self.omega
    }

    pub fn components(&self) -> &[FiniteSemigroup] {
        &self.components
    }

    pub fn component(&self, index: usize) -> &FiniteSemigroup {
        &self.components[index]
    }

    pub fn maps(&self) -> &BTreeMap<(usize, usize), Vec<ElementIndex>> {
        &self.maps
    }

    /// Applies `psi[(lower, upper)]` to a local element of the upper
    /// component. `None` when the map is required but missing.
    pub fn apply_map(
        &self,
        lower: usize,
        upper: usize,
        element: ElementIndex,
    ) -> Option<ElementIndex> {
        if let Some(map) = self.maps.get(&(lower, upper)) {
            return Some(map[element]);
        }
        (lower == upper).then_some(element)
    }

    /// Checks every structure condition and reports all violations:
    /// identity maps, composition along chains, agreement of descent
    /// routes, the homomorphism property, complete regularity of each
    /// component, and presence of every required map.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let k = self.omega.size();
        let name = |i: usize| self.omega.name(i).to_string();

        for lower in 0..k {
            for upper in 0..k {
                if lower != upper
                    && self.omega.leq(lower, upper)
                    && !self.maps.contains_key(&(lower, upper))
                {
                    violations.push(SpecViolation::MissingMap {
                        lower: name(lower),
                        upper: name(upper),
                    });
                }
            }
        }

        // condition 1: explicit self-maps must be identities
        for (&(lower, upper), map) in &self.maps {
            if lower == upper {
                for (element, &image) in map.iter().enumerate() {
                    if image != element {
                        violations.push(SpecViolation::IdentityBroken {
                            index: name(lower),
                            element: self.components[lower].name(element).to_string(),
                            image: self.components[lower].name(image).to_string(),
                        });
                    }
                }
            }
        }

        // condition 2: composition along every chain lower <= mid <= upper
        for lower in 0..k {
            for mid in 0..k {
                for upper in 0..k {
                    if !(self.omega.leq(lower, mid) && self.omega.leq(mid, upper)) {
                        continue;
                    }
                    for b in 0..self.components[upper].size() {
                        let via_mid = self
                            .apply_map(mid, upper, b)
                            .and_then(|m| self.apply_map(lower, mid, m));
                        let direct = self.apply_map(lower, upper, b);
                        if let (Some(via_mid), Some(direct)) = (via_mid, direct) {
                            if via_mid != direct {
                                violations.push(SpecViolation::CompositionMismatch {
                                    lower: name(lower),
                                    mid: name(mid),
                                    upper: name(upper),
                                    element: self.components[upper].name(b).to_string(),
                                    via_mid: self.components[lower].name(via_mid).to_string(),
                                    direct: self.components[lower].name(direct).to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }

        // condition 3: both descent routes from `upper` into the meet of
        // `left` and `right` must agree (implied by condition 2; checked
        // independently anyway)
        for upper in 0..k {
            for left in 0..k {
                for right in 0..k {
                    if !(self.omega.leq(left, upper) && self.omega.leq(right, upper)) {
                        continue;
                    }
                    let meet = self.omega.meet(left, right);
                    for b in 0..self.components[upper].size() {
                        let via_left = self
                            .apply_map(left, upper, b)
                            .and_then(|m| self.apply_map(meet, left, m));
                        let via_right = self
                            .apply_map(right, upper, b)
                            .and_then(|m| self.apply_map(meet, right, m));
                        if let (Some(via_left), Some(via_right)) = (via_left, via_right) {
                            if via_left != via_right {
                                violations.push(SpecViolation::DescentMismatch {
                                    left: name(left),
                                    right: name(right),
                                    upper: name(upper),
                                    element: self.components[upper].name(b).to_string(),
                                    via_left: self.components[meet].name(via_left).to_string(),
                                    via_right: self.components[meet].name(via_right).to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }

        // every map is a homomorphism
        for (&(lower, upper), map) in &self.maps {
            let up = &self.components[upper];
            let down = &self.components[lower];
            'pairs: for x in 0..up.size() {
                for y in 0..up.size() {
                    if map[up.product(x, y)] != down.product(map[x], map[y]) {
                        violations.push(SpecViolation::NotHomomorphism {
                            lower: name(lower),
                            upper: name(upper),
                            x: up.name(x).to_string(),
                            y: up.name(y).to_string(),
                        });
                        break 'pairs;
                    }
                }
            }
        }

        for (index, component) in self.components.iter().enumerate() {
            if let crate::semigroup::CompleteRegularity::NotCompletelyRegular { witness } =
                component.complete_regularity()
            {
                violations.push(SpecViolation::ComponentNotCompletelyRegular {
                    index: name(index),
                    witness: component.name(witness).to_string(),
                });
            }
        }

        ValidationReport { violations }
    }

    /// Per-component record of complete simplicity, for experiments that
    /// need the stronger structure.
    pub fn completely_simple_flags(&self) -> Vec<bool> {
        self.components.iter().map(|c| c.is_completely_simple()).collect()
    }
}

/// Maps every element of a composed (or decomposed) semigroup to its
/// component and back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    component_of: Vec<usize>,
    local_of: Vec<ElementIndex>,
    members: Vec<Vec<ElementIndex>>,
}

impl ComponentLabeling {
    fn from_members(size: usize, members: Vec<Vec<ElementIndex>>) -> Self {
        let mut component_of = vec![0; size];
        let mut local_of = vec![0; size];
        for (c, class) in members.iter().enumerate() {
            for (local, &global) in class.iter().enumerate() {
                component_of[global] = c;
                local_of[global] = local;
            }
        }
        ComponentLabeling { component_of, local_of, members }
    }

    /// Component index of a global element.
    pub fn component_of(&self, element: ElementIndex) -> usize {
        self.component_of[element]
    }

    pub fn local_of(&self, element: ElementIndex) -> ElementIndex {
        self.local_of[element]
    }

    pub fn global_of(&self, component: usize, local: ElementIndex) -> ElementIndex {
        self.members[component][local]
    }

    /// Global elements of one component, ascending.
    pub fn members(&self, component: usize) -> &[ElementIndex] {
        &self.members[component]
    }

    pub fn component_count(&self) -> usize {
        self.members.len()
    }
}

/// A semigroup carrying a verified strong-semilattice structure: the full
/// table, the spec it satisfies, and the element labeling between them.
///
/// Produced either by composing a spec ([`build_strong_semilattice`]) or by
/// decomposing an existing table ([`decompose`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongSemilattice {
    semigroup: FiniteSemigroup,
    spec: StrongSemilatticeSpec,
    labeling: ComponentLabeling,
}

impl StrongSemilattice {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn spec(&self) -> &StrongSemilatticeSpec {
        &self.spec
    }

    pub fn labeling(&self) -> &ComponentLabeling {
        &self.labeling
    }

    pub fn omega(&self) -> &SemilatticeStructure {
        self.spec.omega()
    }

    pub fn component_of(&self, element: ElementIndex) -> usize {
        self.labeling.component_of(element)
    }

    /// Applies the structure map `psi[(lower, component_of(element))]` to a
    /// global element, returning a global element of the lower component.
    pub fn map_down(&self, lower: usize, element: ElementIndex) -> Option<ElementIndex> {
        let upper = self.component_of(element);
        let local = self.labeling.local_of(element);
        let image = self.spec.apply_map(lower, upper, local)?;
        Some(self.labeling.global_of(lower, image))
    }
}

/// Composes the full multiplication table from a validated spec: the
/// product of `s1` in component `a` and `s2` in component `b` is formed by
/// mapping both down to the meet of `a` and `b` and multiplying there.
///
/// Elements are named `"component:local"` and laid out component-major in
/// semilattice index order, so the output is canonical for its spec.
pub fn build_strong_semilattice(
    spec: &StrongSemilatticeSpec,
) -> Result<StrongSemilattice, StructureError> {
    let report = spec.validate();
    if !report.is_valid() {
        return Err(StructureError::InvalidSpec(report));
    }

    let k = spec.omega().size();
    let mut names = Vec::new();
    let mut members: Vec<Vec<ElementIndex>> = Vec::with_capacity(k);
    let mut owner: Vec<(usize, ElementIndex)> = Vec::new();
    for c in 0..k {
        let comp = spec.component(c);
        let mut block = Vec::with_capacity(comp.size());
        for local in 0..comp.size() {
            block.push(owner.len());
            names.push(format!("{}:{}", spec.omega().name(c), comp.name(local)));
            owner.push((c, local));
        }
        members.push(block);
    }

    let n = owner.len();
    let mut table = vec![vec![0; n]; n];
    for (x, &(a, i)) in owner.iter().enumerate() {
        for (y, &(b, j)) in owner.iter().enumerate() {
            let meet = spec.omega().meet(a, b);
            let left = spec.apply_map(meet, a, i).expect("validated spec has all maps");
            let right = spec.apply_map(meet, b, j).expect("validated spec has all maps");
            let local = spec.component(meet).product(left, right);
            table[x][y] = members[meet][local];
        }
    }

    let semigroup = FiniteSemigroup::new(names, table)?;
    let labeling = ComponentLabeling::from_members(n, members);
    Ok(StrongSemilattice { semigroup, spec: spec.clone(), labeling })
}

/// Recovers a strong-semilattice structure from a completely regular
/// multiplication table, or explains precisely why none exists.
///
/// Components are the J-classes; the quotient on classes must be a
/// semilattice; each structure-map image is the unique element of the
/// lower class that multiplies like its preimage against that whole class;
/// finally the composed multiplication is replayed against the input
/// table. Element indices of the result refer to the input semigroup.
pub fn decompose(s: &FiniteSemigroup) -> Result<StrongSemilattice, StructureError> {
    if let crate::semigroup::CompleteRegularity::NotCompletelyRegular { witness } =
        s.complete_regularity()
    {
        return Err(StructureError::NotCompletelyRegular {
            witness: s.name(witness).to_string(),
        });
    }

    let classes = s.j_classes();
    let k = classes.len();
    let mut class_of = vec![0; s.size()];
    for (c, class) in classes.iter().enumerate() {
        for &m in class {
            class_of[m] = c;
        }
    }

    // quotient table from representatives, then verified over all pairs
    let mut quotient = vec![vec![0; k]; k];
    for a in 0..k {
        for b in 0..k {
            quotient[a][b] = class_of[s.product(classes[a][0], classes[b][0])];
        }
    }
    for a in 0..k {
        for b in 0..k {
            for &x in &classes[a] {
                for &y in &classes[b] {
                    let found = class_of[s.product(x, y)];
                    if found != quotient[a][b] {
                        return Err(StructureError::QuotientIllDefined {
                            s: s.name(x).to_string(),
                            t: s.name(y).to_string(),
                            expected: s.name(classes[quotient[a][b]][0]).to_string(),
                            found: s.name(classes[found][0]).to_string(),
                        });
                    }
                }
            }
        }
    }

    let quotient_names: Vec<String> =
        classes.iter().map(|class| s.name(class[0]).to_string()).collect();
    let quotient_sgp = FiniteSemigroup::new(quotient_names, quotient)?;
    if !is_semilattice(&quotient_sgp) {
        return Err(StructureError::QuotientNotSemilattice);
    }
    let omega = SemilatticeStructure::new(quotient_sgp)?;

    // component tables inherited from the input
    let mut components = Vec::with_capacity(k);
    for class in &classes {
        let names = class.iter().map(|&m| s.name(m).to_string()).collect();
        let table = class
            .iter()
            .map(|&x| {
                class
                    .iter()
                    .map(|&y| {
                        let p = s.product(x, y);
                        class.iter().position(|&m| m == p).expect("class is closed")
                    })
                    .collect()
            })
            .collect();
        components.push(FiniteSemigroup::new(names, table)?);
    }

    // structure maps: for each comparable pair, the unique element of the
    // lower class that is indistinguishable from `b` under multiplication
    // by the whole lower class
    let mut maps = BTreeMap::new();
    for lower in 0..k {
        for upper in 0..k {
            if lower == upper || !omega.leq(lower, upper) {
                continue;
            }
            let mut map = Vec::with_capacity(classes[upper].len());
            for &b in &classes[upper] {
                let candidates: Vec<usize> = classes[lower]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| {
                        classes[lower].iter().all(|&a| {
                            s.product(a, b) == s.product(a, c)
                                && s.product(b, a) == s.product(c, a)
                        })
                    })
                    .map(|(local, _)| local)
                    .collect();
                if candidates.len() != 1 {
                    return Err(StructureError::NoStrongStructure {
                        lower: omega.name(lower).to_string(),
                        upper: omega.name(upper).to_string(),
                        b: s.name(b).to_string(),
                        candidates: candidates.len(),
                    });
                }
                map.push(candidates[0]);
            }
            maps.insert((lower, upper), map);
        }
    }

    let spec = StrongSemilatticeSpec::new(omega, components, maps)?;

    // replay the composed multiplication against the original table
    for x in 0..s.size() {
        for y in 0..s.size() {
            let a = class_of[x];
            let b = class_of[y];
            let meet = spec.omega().meet(a, b);
            let x_local = classes[a].iter().position(|&m| m == x).unwrap();
            let y_local = classes[b].iter().position(|&m| m == y).unwrap();
            let left = spec.apply_map(meet, a, x_local).expect("maps are total");
            let right = spec.apply_map(meet, b, y_local).expect("maps are total");
            let composed = classes[meet][spec.component(meet).product(left, right)];
            if composed != s.product(x, y) {
                return Err(StructureError::MultiplicationMismatch {
                    s: s.name(x).to_string(),
                    t: s.name(y).to_string(),
                    expected: s.name(s.product(x, y)).to_string(),
                    found: s.name(composed).to_string(),
                });
            }
        }
    }

    let labeling = ComponentLabeling::from_members(s.size(), classes);
    Ok(StrongSemilattice { semigroup: s.clone(), spec, labeling })
}
