//! Line-oriented text formats: `.sgp` multiplication tables, `.slat`
//! strong-semilattice specs, `.eqs` equation systems, and `.pts` point
//! sets. Lines starting with `#` and blank lines are ignored; everything
//! else is parsed exactly, and errors carry the offending line number.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::geometry::PointSet;
use crate::semigroup::{ElementIndex, FiniteSemigroup};
use crate::semilattice::{SemilatticeStructure, StrongSemilatticeSpec};
use crate::term::{parse_term, shadowed_constants, Equation, EquationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{message}")]
    File { message: String },
}

impl FormatError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Line { line, message: message.into() }
    }

    fn file(message: impl Into<String>) -> Self {
        FormatError::File { message: message.into() }
    }
}

/// Content lines with their 1-based line numbers, comments and blank
/// lines dropped.
struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    cursor: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.trim()))
            .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
            .collect();
        Lines { lines, cursor: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.cursor).copied();
        if item.is_some() {
            self.cursor += 1;
        }
        item
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.cursor).copied()
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        self.next().ok_or_else(|| FormatError::file(format!("unexpected end of file: {what}")))
    }
}

/// An element-name table as read from a file, before the semigroup axioms
/// are checked. `line` is where the table started, for error reporting.
#[derive(Debug, Clone)]
pub struct RawTable {
    pub names: Vec<String>,
    pub table: Vec<Vec<ElementIndex>>,
    pub line: usize,
}

impl RawTable {
    /// Validates names, shape, and associativity.
    pub fn into_semigroup(self) -> Result<FiniteSemigroup, crate::semigroup::SemigroupError> {
        FiniteSemigroup::new(self.names, self.table)
    }
}

fn parse_sgp_block(lines: &mut Lines) -> Result<RawTable, FormatError> {
    let (size_line, size_text) = lines.expect("expected element count")?;
    let size: usize = size_text
        .parse()
        .map_err(|_| FormatError::at(size_line, format!("expected element count, found `{size_text}`")))?;
    if size == 0 {
        return Err(FormatError::at(size_line, "element count must be positive"));
    }

    let (names_line, names_text) = lines.expect("expected element names")?;
    let names: Vec<String> = names_text.split_whitespace().map(|s| s.to_string()).collect();
    if names.len() != size {
        return Err(FormatError::at(
            names_line,
            format!("expected {size} element names, found {}", names.len()),
        ));
    }

    let mut table = Vec::with_capacity(size);
    for row in 0..size {
        let (row_line, row_text) = lines.expect("expected a table row")?;
        let entries: Vec<&str> = row_text.split_whitespace().collect();
        if entries.len() != size {
            return Err(FormatError::at(
                row_line,
                format!("row {row} has {} entries, expected {size}", entries.len()),
            ));
        }
        let mut indices = Vec::with_capacity(size);
        for name in entries {
            let index = names.iter().position(|n| n == name).ok_or_else(|| {
                FormatError::at(row_line, format!("unknown element name `{name}`"))
            })?;
            indices.push(index);
        }
        table.push(indices);
    }
    Ok(RawTable { names, table, line: size_line })
}

/// Parses a `.sgp` file into a raw table; semigroup axioms are checked
/// separately so that a structural report can still be produced for
/// non-associative tables.
pub fn parse_sgp(text: &str) -> Result<RawTable, FormatError> {
    let mut lines = Lines::new(text);
    let raw = parse_sgp_block(&mut lines)?;
    if let Some((line, content)) = lines.peek() {
        return Err(FormatError::at(line, format!("unexpected content `{content}` after table")));
    }
    Ok(raw)
}

/// Canonical `.sgp` text for a semigroup.
pub fn write_sgp(s: &FiniteSemigroup) -> String {
    s.to_string()
}

/// Parses a `.slat` file: an `omega` section, one `component <name>`
/// section per index element, and one `map <lower> <upper>` section per
/// strictly comparable pair, each map line reading `b -> c`. Components
/// must be declared before the maps that mention them.
pub fn parse_slat(text: &str) -> Result<StrongSemilatticeSpec, FormatError> {
    let mut lines = Lines::new(text);

    let (omega_line, header) = lines.expect("expected `omega` section")?;
    if header != "omega" {
        return Err(FormatError::at(omega_line, format!("expected `omega`, found `{header}`")));
    }
    let omega_raw = parse_sgp_block(&mut lines)?;
    let omega_sgp = omega_raw
        .into_semigroup()
        .map_err(|e| FormatError::at(omega_line, format!("omega carrier: {e}")))?;
    let omega = SemilatticeStructure::new(omega_sgp)
        .map_err(|e| FormatError::at(omega_line, e.to_string()))?;

    let k = omega.size();
    let mut components: Vec<Option<FiniteSemigroup>> = vec![None; k];
    let mut maps: BTreeMap<(usize, usize), Vec<ElementIndex>> = BTreeMap::new();

    while let Some((line, header)) = lines.next() {
        let tokens: Vec<&str> = header.split_whitespace().collect();
        match tokens.as_slice() {
            ["component", name] => {
                let index = omega
                    .carrier()
                    .index_of(name)
                    .ok_or_else(|| FormatError::at(line, format!("unknown index `{name}`")))?;
                if components[index].is_some() {
                    return Err(FormatError::at(line, format!("duplicate component `{name}`")));
                }
                let raw = parse_sgp_block(&mut lines)?;
                let sgp = raw
                    .into_semigroup()
                    .map_err(|e| FormatError::at(line, format!("component `{name}`: {e}")))?;
                components[index] = Some(sgp);
            }
            ["map", lower_name, upper_name] => {
                let lower = omega.carrier().index_of(lower_name).ok_or_else(|| {
                    FormatError::at(line, format!("unknown index `{lower_name}`"))
                })?;
                let upper = omega.carrier().index_of(upper_name).ok_or_else(|| {
                    FormatError::at(line, format!("unknown index `{upper_name}`"))
                })?;
                if lower == upper || !omega.leq(lower, upper) {
                    return Err(FormatError::at(
                        line,
                        format!("`{lower_name}` is not strictly below `{upper_name}`"),
                    ));
                }
                if maps.contains_key(&(lower, upper)) {
                    return Err(FormatError::at(
                        line,
                        format!("duplicate map `{lower_name}` `{upper_name}`"),
                    ));
                }
                let lower_sgp = components[lower].as_ref().ok_or_else(|| {
                    FormatError::at(line, format!("component `{lower_name}` not yet defined"))
                })?;
                let upper_sgp = components[upper].as_ref().ok_or_else(|| {
                    FormatError::at(line, format!("component `{upper_name}` not yet defined"))
                })?;

                let mut map = vec![None; upper_sgp.size()];
                for _ in 0..upper_sgp.size() {
                    let (entry_line, entry) = lines.expect("expected a map line `b -> c`")?;
                    let parts: Vec<&str> = entry.split_whitespace().collect();
                    let (b_name, c_name) = match parts.as_slice() {
                        [b, "->", c] => (*b, *c),
                        _ => {
                            return Err(FormatError::at(
                                entry_line,
                                format!("expected `b -> c`, found `{entry}`"),
                            ))
                        }
                    };
                    let b = upper_sgp.index_of(b_name).ok_or_else(|| {
                        FormatError::at(
                            entry_line,
                            format!("`{b_name}` is not an element of component `{upper_name}`"),
                        )
                    })?;
                    let c = lower_sgp.index_of(c_name).ok_or_else(|| {
                        FormatError::at(
                            entry_line,
                            format!("`{c_name}` is not an element of component `{lower_name}`"),
                        )
                    })?;
                    if map[b].is_some() {
                        return Err(FormatError::at(
                            entry_line,
                            format!("duplicate image for `{b_name}`"),
                        ));
                    }
                    map[b] = Some(c);
                }
                maps.insert(
                    (lower, upper),
                    map.into_iter().map(|c| c.expect("all entries filled")).collect(),
                );
            }
            _ => {
                return Err(FormatError::at(
                    line,
                    format!("expected `component <name>` or `map <lower> <upper>`, found `{header}`"),
                ))
            }
        }
    }

    for (index, slot) in components.iter().enumerate() {
        if slot.is_none() {
            return Err(FormatError::file(format!(
                "missing component section for `{}`",
                omega.name(index)
            )));
        }
    }
    let components = components.into_iter().map(|c| c.unwrap()).collect();
    StrongSemilatticeSpec::new(omega, components, maps)
        .map_err(|e| FormatError::file(e.to_string()))
}

/// Canonical `.slat` text: omega, components in index order, maps in
/// `(lower, upper)` order.
pub fn write_slat(spec: &StrongSemilatticeSpec) -> String {
    let mut out = String::new();
    out.push_str("omega\n");
    out.push_str(&write_sgp(spec.omega().carrier()));
    for (index, component) in spec.components().iter().enumerate() {
        out.push_str(&format!("component {}\n", spec.omega().name(index)));
        out.push_str(&write_sgp(component));
    }
    for (&(lower, upper), map) in spec.maps() {
        if lower == upper {
            continue; // identity maps are implicit in the file format
        }
        out.push_str(&format!(
            "map {} {}\n",
            spec.omega().name(lower),
            spec.omega().name(upper)
        ));
        for (b, &c) in map.iter().enumerate() {
            out.push_str(&format!(
                "{} -> {}\n",
                spec.component(upper).name(b),
                spec.component(lower).name(c)
            ));
        }
    }
    out
}

/// An equation system together with its declared variable names and any
/// element names they shadow.
#[derive(Debug, Clone)]
pub struct EqsFile {
    pub system: EquationSystem,
    pub vars: Vec<String>,
    pub shadowed: Vec<String>,
}

/// Parses a `.eqs` file: a `vars` declaration line followed by one
/// `term = term` equation per line.
pub fn parse_eqs(text: &str, s: &FiniteSemigroup) -> Result<EqsFile, FormatError> {
    let mut lines = Lines::new(text);
    let (decl_line, decl) = lines.expect("expected a `vars` declaration")?;
    let mut tokens = decl.split_whitespace();
    if tokens.next() != Some("vars") {
        return Err(FormatError::at(decl_line, format!("expected `vars ...`, found `{decl}`")));
    }
    let vars: Vec<String> = tokens.map(|t| t.to_string()).collect();
    if vars.is_empty() {
        return Err(FormatError::at(decl_line, "declare at least one variable"));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(FormatError::at(decl_line, format!("duplicate variable `{v}`")));
        }
    }

    let mut equations = Vec::new();
    while let Some((line, content)) = lines.next() {
        let mut sides = content.split('=');
        let (lhs_text, rhs_text) = match (sides.next(), sides.next(), sides.next()) {
            (Some(l), Some(r), None) => (l, r),
            _ => {
                return Err(FormatError::at(
                    line,
                    format!("expected exactly one `=` in `{content}`"),
                ))
            }
        };
        let lhs = parse_term(lhs_text, &vars, s)
            .map_err(|e| FormatError::at(line, e.to_string()))?;
        let rhs = parse_term(rhs_text, &vars, s)
            .map_err(|e| FormatError::at(line, e.to_string()))?;
        equations.push(Equation { lhs, rhs });
    }

    let system = EquationSystem::new(vars.len(), equations)
        .map_err(|e| FormatError::file(e.to_string()))?;
    let shadowed = shadowed_constants(&vars, s);
    Ok(EqsFile { system, vars, shadowed })
}

/// Parses a `.pts` file against a semigroup: an `arity n` line followed
/// by one point (n element names) per line. Duplicate points collapse.
pub fn parse_pts(text: &str, s: &FiniteSemigroup) -> Result<PointSet, FormatError> {
    let mut lines = Lines::new(text);
    let (decl_line, decl) = lines.expect("expected an `arity` declaration")?;
    let arity: usize = match decl.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["arity", n] => n
            .parse()
            .map_err(|_| FormatError::at(decl_line, format!("bad arity `{n}`")))?,
        _ => {
            return Err(FormatError::at(decl_line, format!("expected `arity n`, found `{decl}`")))
        }
    };
    if arity == 0 {
        return Err(FormatError::at(decl_line, "arity must be at least 1"));
    }

    let mut points = Vec::new();
    while let Some((line, content)) = lines.next() {
        let names: Vec<&str> = content.split_whitespace().collect();
        if names.len() != arity {
            return Err(FormatError::at(
                line,
                format!("point has {} coordinates, expected {arity}", names.len()),
            ));
        }
        let mut point = Vec::with_capacity(arity);
        for name in names {
            let index = s.index_of(name).ok_or_else(|| {
                FormatError::at(line, format!("unknown element name `{name}`"))
            })?;
            point.push(index);
        }
        points.push(point);
    }
    PointSet::new(s.size(), arity, points).map_err(|e| FormatError::file(e.to_string()))
}

/// Canonical `.pts` text: the arity line, then the points in canonical
/// order, coordinates as element names.
pub fn write_pts(set: &PointSet, s: &FiniteSemigroup) -> String {
    let mut out = format!("arity {}\n", set.arity());
    for point in set.iter() {
        let names: Vec<&str> = point.iter().map(|&e| s.name(e)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
