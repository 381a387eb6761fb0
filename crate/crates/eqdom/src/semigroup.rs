//! Finite semigroup kernel: multiplication tables, structural predicates,
//! inversion inside maximal subgroups, J-classes, and the Rees matrix
//! constructor.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Index of an element inside a specific [`FiniteSemigroup`].
///
/// Always interpreted relative to one owning semigroup; operations that
/// receive indices from outside validate them against the owner's size.
pub type ElementIndex = usize;

/// Characters that may not appear in element names because the term
/// grammar and the file formats give them meaning.
pub const RESERVED_NAME_CHARS: &[char] = &['\'', '(', ')', '=', '#'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("expected {expected} table rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("table row {row} has {found} entries, expected {expected}")]
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table entry [{row}][{col}] = {value} is out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("expected {expected} element names, found {found}")]
    WrongNameCount { expected: usize, found: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}` (empty, whitespace, or reserved punctuation)")]
    InvalidName(String),
    #[error("table is not associative: {count} violating triple(s), first at {first:?}")]
    NotAssociative { count: usize, first: (usize, usize, usize) },
    #[error("element `{0}` is not completely regular (no power returns to it)")]
    NotCompletelyRegular(String),
    #[error("`{0}` is not a group: {1}")]
    NotAGroup(String, String),
    #[error("sandwich matrix entry [{row}][{col}] = {value} is not a group element (size {size})")]
    SandwichEntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("sandwich matrix must be {rows}x{cols}, found row {row} of length {found}")]
    SandwichShape {
        rows: usize,
        cols: usize,
        row: usize,
        found: usize,
    },
    #[error("Rees matrix construction needs at least one row and one column index")]
    EmptyReesIndex,
}

/// A finite semigroup presented by its full multiplication table.
///
/// `table[i][j]` is the index of the product of element `i` and element `j`.
/// Construction validates the shape, the element names, and associativity,
/// so every value of this type is a genuine semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    table: Vec<Vec<ElementIndex>>,
}

/// Outcome of the complete-regularity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompleteRegularity {
    /// Every element has a minimal period `p >= 1` with `a^(p+1) = a`;
    /// `periods[i]` is that period for element `i`.
    CompletelyRegular { periods: Vec<usize> },
    /// `witness` has no power returning to itself, so it lies in no subgroup.
    NotCompletelyRegular { witness: ElementIndex },
}

impl CompleteRegularity {
    pub fn holds(&self) -> bool {
        matches!(self, CompleteRegularity::CompletelyRegular { .. })
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "->"
        && !name.chars().any(|c| c.is_whitespace() || RESERVED_NAME_CHARS.contains(&c))
}

/// Validates that `table` is a square array of in-range indices.
fn check_table_shape(table: &[Vec<ElementIndex>]) -> Result<(), SemigroupError> {
    let n = table.len();
    if n == 0 {
        return Err(SemigroupError::Empty);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            return Err(SemigroupError::WrongRowLength {
                row,
                expected: n,
                found: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(SemigroupError::EntryOutOfRange { row, col, value, size: n });
            }
        }
    }
    Ok(())
}

/// Scans every triple `(i, j, k)` and reports the ones where
/// `(a_i a_j) a_k != a_i (a_j a_k)`, in lexicographic order.
///
/// The empty list certifies associativity; a malformed table (wrong shape
/// or out-of-range entry) is an error naming the offending cell.
pub fn check_associativity(
    table: &[Vec<ElementIndex>],
) -> Result<Vec<(usize, usize, usize)>, SemigroupError> {
    check_table_shape(table)?;
    let n = table.len();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    violations.push((i, j, k));
                }
            }
        }
    }
    Ok(violations)
}

impl FiniteSemigroup {
    /// Builds a semigroup from element names and a multiplication table,
    /// rejecting malformed names, malformed tables, and non-associative
    /// tables.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, SemigroupError> {
        check_table_shape(&table)?;
        let n = table.len();
        if names.len() != n {
            return Err(SemigroupError::WrongNameCount { expected: n, found: names.len() });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !valid_name(name) {
                return Err(SemigroupError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        let violations = check_associativity(&table)?;
        if let Some(&first) = violations.first() {
            return Err(SemigroupError::NotAssociative { count: violations.len(), first });
        }
        Ok(FiniteSemigroup { names, table })
    }

    /// Convenience constructor for string-literal names.
    pub fn from_named_table(
        names: &[&str],
        table: Vec<Vec<ElementIndex>>,
    ) -> Result<Self, SemigroupError> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: ElementIndex) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<ElementIndex> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table(&self) -> &[Vec<ElementIndex>] {
        &self.table
    }

    /// Product of two elements. Panics on out-of-range indices; external
    /// input is validated before it reaches this point.
    pub fn product(&self, a: ElementIndex, b: ElementIndex) -> ElementIndex {
        self.table[a][b]
    }

    /// `a` raised to the `k`-th power, `k >= 1`.
    pub fn power(&self, a: ElementIndex, k: usize) -> ElementIndex {
        assert!(k >= 1, "powers start at exponent 1");
        let mut acc = a;
        for _ in 1..k {
            acc = self.product(acc, a);
        }
        acc
    }

    /// The elements `e` with `e e = e`, in index order.
    pub fn idempotents(&self) -> Vec<ElementIndex> {
        (0..self.size()).filter(|&e| self.product(e, e) == e).collect()
    }

    /// Minimal `p >= 1` with `a^(p+1) = a`, or `None` when no power of `a`
    /// returns to `a` (then `a` lies in no subgroup).
    pub fn element_period(&self, a: ElementIndex) -> Option<usize> {
        let mut acc = a;
        for p in 1..=self.size() {
            acc = self.product(acc, a);
            if acc == a {
                return Some(p);
            }
        }
        None
    }

    /// Scans all elements for subgroup membership; a semigroup is
    /// completely regular exactly when it is a union of its maximal
    /// subgroups.
    pub fn complete_regularity(&self) -> CompleteRegularity {
        let mut periods = Vec::with_capacity(self.size());
        for a in 0..self.size() {
            match self.element_period(a) {
                Some(p) => periods.push(p),
                None => return CompleteRegularity::NotCompletelyRegular { witness: a },
            }
        }
        CompleteRegularity::CompletelyRegular { periods }
    }

    pub fn is_completely_regular(&self) -> bool {
        self.complete_regularity().holds()
    }

    /// Inverse of `a` in the maximal subgroup containing it, computed as
    /// `a^(2p-1)` for the minimal period `p`. The result `b` satisfies
    /// `aba = a`, `bab = b`, `ab = ba`, and `ab` idempotent.
    pub fn cr_inverse(&self, a: ElementIndex) -> Result<ElementIndex, SemigroupError> {
        let p = self
            .element_period(a)
            .ok_or_else(|| SemigroupError::NotCompletelyRegular(self.name(a).to_string()))?;
        Ok(self.power(a, 2 * p - 1))
    }

    /// Principal two-sided ideal `{a} ∪ Sa ∪ aS ∪ SaS`, the S^1-ideal
    /// without adjoining an identity element.
    pub fn principal_ideal(&self, a: ElementIndex) -> BTreeSet<ElementIndex> {
        let mut ideal = BTreeSet::new();
        ideal.insert(a);
        for s in 0..self.size() {
            ideal.insert(self.product(s, a));
            ideal.insert(self.product(a, s));
            for t in 0..self.size() {
                ideal.insert(self.product(self.product(s, a), t));
            }
        }
        ideal
    }

    /// Principal left ideal `{a} ∪ Sa`.
    pub fn principal_left_ideal(&self, a: ElementIndex) -> BTreeSet<ElementIndex> {
        let mut ideal = BTreeSet::new();
        ideal.insert(a);
        for s in 0..self.size() {
            ideal.insert(self.product(s, a));
        }
        ideal
    }

    /// Principal right ideal `{a} ∪ aS`.
    pub fn principal_right_ideal(&self, a: ElementIndex) -> BTreeSet<ElementIndex> {
        let mut ideal = BTreeSet::new();
        ideal.insert(a);
        for s in 0..self.size() {
            ideal.insert(self.product(a, s));
        }
        ideal
    }

    /// Partition into J-classes: `a J b` iff the principal two-sided
    /// ideals of `a` and `b` coincide. Classes are ordered by their least
    /// element, members ascending.
    pub fn j_classes(&self) -> Vec<Vec<ElementIndex>> {
        let ideals: Vec<_> = (0..self.size()).map(|a| self.principal_ideal(a)).collect();
        let mut class_of: Vec<Option<usize>> = vec![None; self.size()];
        let mut classes: Vec<Vec<ElementIndex>> = Vec::new();
        for a in 0..self.size() {
            if class_of[a].is_some() {
                continue;
            }
            let k = classes.len();
            classes.push(vec![a]);
            class_of[a] = Some(k);
            for b in a + 1..self.size() {
                if class_of[b].is_none() && ideals[a] == ideals[b] {
                    class_of[b] = Some(k);
                    classes[k].push(b);
                }
            }
        }
        classes
    }

    /// Simple: the only two-sided ideal is the whole semigroup,
    /// equivalently there is exactly one J-class.
    pub fn is_simple(&self) -> bool {
        self.j_classes().len() == 1
    }

    /// Completely simple: simple with minimal left and right ideals.
    ///
    /// For finite semigroups the minimal one-sided ideals always exist, so
    /// on simple finite input the one-sided check cannot fail; it is still
    /// performed rather than assumed.
    pub fn is_completely_simple(&self) -> bool {
        self.is_simple() && self.has_minimal_left_ideal() && self.has_minimal_right_ideal()
    }

    fn has_minimal_left_ideal(&self) -> bool {
        let ideals: Vec<_> = (0..self.size()).map(|a| self.principal_left_ideal(a)).collect();
        ideals
            .iter()
            .any(|l| !ideals.iter().any(|m| m.len() < l.len() && m.is_subset(l)))
    }

    fn has_minimal_right_ideal(&self) -> bool {
        let ideals: Vec<_> = (0..self.size()).map(|a| self.principal_right_ideal(a)).collect();
        ideals
            .iter()
            .any(|l| !ideals.iter().any(|m| m.len() < l.len() && m.is_subset(l)))
    }

    /// A finite semigroup is a group exactly when its table is a Latin
    /// square (every row and column is a permutation).
    pub fn is_group(&self) -> bool {
        let n = self.size();
        for i in 0..n {
            let row: BTreeSet<_> = self.table[i].iter().copied().collect();
            if row.len() != n {
                return false;
            }
            let col: BTreeSet<_> = (0..n).map(|j| self.table[j][i]).collect();
            if col.len() != n {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size())?;
        writeln!(f, "{}", self.names.join(" "))?;
        for row in &self.table {
            let line: Vec<&str> = row.iter().map(|&e| self.name(e)).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rees matrix semigroup M(G; I, Λ; P) over a group `G` with a Λ×I
/// sandwich matrix `P` of group elements.
///
/// Elements are triples `(i, g, λ)` named `"i:g:λ"`, ordered by
/// `(i, g, λ)`; the product is
/// `(i, g, λ)(j, h, μ) = (i, g · p[λ][j] · h, μ)`.
pub fn build_rees_matrix(
    group: &FiniteSemigroup,
    row_count: usize,
    col_count: usize,
    sandwich: &[Vec<ElementIndex>],
) -> Result<FiniteSemigroup, SemigroupError> {
    if !group.is_group() {
        return Err(SemigroupError::NotAGroup(
            group.names().join(","),
            "multiplication table is not a Latin square".to_string(),
        ));
    }
    if row_count == 0 || col_count == 0 {
        return Err(SemigroupError::EmptyReesIndex);
    }
    if sandwich.len() != col_count {
        return Err(SemigroupError::SandwichShape {
            rows: col_count,
            cols: row_count,
            row: sandwich.len(),
            found: 0,
        });
    }
    for (row, entries) in sandwich.iter().enumerate() {
        if entries.len() != row_count {
            return Err(SemigroupError::SandwichShape {
                rows: col_count,
                cols: row_count,
                row,
                found: entries.len(),
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= group.size() {
                return Err(SemigroupError::SandwichEntryOutOfRange {
                    row,
                    col,
                    value,
                    size: group.size(),
                });
            }
        }
    }

    let g = group.size();
    let index = |i: usize, x: usize, l: usize| (i * g + x) * col_count + l;
    let n = row_count * g * col_count;
    let mut names = Vec::with_capacity(n);
    let mut triples = Vec::with_capacity(n);
    for i in 0..row_count {
        for x in 0..g {
            for l in 0..col_count {
                names.push(format!("{}:{}:{}", i, group.name(x), l));
                triples.push((i, x, l));
            }
        }
    }
    let mut table = vec![vec![0; n]; n];
    for (a, &(i, x, l)) in triples.iter().enumerate() {
        for (b, &(j, y, m)) in triples.iter().enumerate() {
            let mid = group.product(group.product(x, sandwich[l][j]), y);
            table[a][b] = index(i, mid, m);
        }
    }
    FiniteSemigroup::new(names, table)
}
