//! The equation language over a fixed finite semigroup `S`: terms built
//! from variables, one constant per element of `S`, products, and the
//! inverse taken in the maximal subgroup of the argument.
//!
//! Concrete syntax: juxtaposition is the (left-associative) product, a
//! postfix apostrophe is one inverse, parentheses group, and identifiers
//! resolve first against the declared variables and then against the
//! element names of `S`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::semigroup::{ElementIndex, FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Variable(usize),
    Constant(ElementIndex),
    Product(Box<Term>, Box<Term>),
    Inverse(Box<Term>),
}

impl Term {
    pub fn product(lhs: Term, rhs: Term) -> Term {
        Term::Product(Box::new(lhs), Box::new(rhs))
    }

    pub fn inverse(inner: Term) -> Term {
        Term::Inverse(Box::new(inner))
    }

    /// Smallest point arity the term can be evaluated at: one past the
    /// largest variable position, zero for variable-free terms.
    pub fn arity(&self) -> usize {
        match self {
            Term::Variable(i) => i + 1,
            Term::Constant(_) => 0,
            Term::Product(l, r) => l.arity().max(r.arity()),
            Term::Inverse(t) => t.arity(),
        }
    }

    /// Positions of the variables that actually occur.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut vars = BTreeSet::new();
        self.collect_variables(&mut vars);
        vars
    }

    fn collect_variables(&self, vars: &mut BTreeSet<usize>) {
        match self {
            Term::Variable(i) => {
                vars.insert(*i);
            }
            Term::Constant(_) => {}
            Term::Product(l, r) => {
                l.collect_variables(vars);
                r.collect_variables(vars);
            }
            Term::Inverse(t) => t.collect_variables(vars),
        }
    }

    /// Constant occurrences in left-to-right order, repetitions kept.
    pub fn constants(&self) -> Vec<ElementIndex> {
        let mut out = Vec::new();
        self.collect_constants(&mut out);
        out
    }

    fn collect_constants(&self, out: &mut Vec<ElementIndex>) {
        match self {
            Term::Variable(_) => {}
            Term::Constant(c) => out.push(*c),
            Term::Product(l, r) => {
                l.collect_constants(out);
                r.collect_constants(out);
            }
            Term::Inverse(t) => t.collect_constants(out),
        }
    }

    /// Construction depth: atoms are 0, each product or inverse adds one.
    pub fn depth(&self) -> usize {
        match self {
            Term::Variable(_) | Term::Constant(_) => 0,
            Term::Product(l, r) => l.depth().max(r.depth()) + 1,
            Term::Inverse(t) => t.depth() + 1,
        }
    }

    /// Concrete syntax for this term; reparsing the result with the same
    /// variable declaration yields an identical tree.
    pub fn render(&self, vars: &[String], s: &FiniteSemigroup) -> String {
        match self {
            Term::Variable(i) => vars[*i].clone(),
            Term::Constant(c) => s.name(*c).to_string(),
            Term::Product(l, r) => {
                let left = l.render(vars, s);
                let right = match r.as_ref() {
                    // juxtaposition is left-associative, so a product on
                    // the right keeps its parentheses
                    Term::Product(_, _) => format!("({})", r.render(vars, s)),
                    _ => r.render(vars, s),
                };
                format!("{left} {right}")
            }
            Term::Inverse(t) => match t.as_ref() {
                Term::Product(_, _) => format!("({})'", t.render(vars, s)),
                _ => format!("{}'", t.render(vars, s)),
            },
        }
    }
}

/// An equality of two terms over one shared variable context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn render(&self, vars: &[String], s: &FiniteSemigroup) -> String {
        format!("{} = {}", self.lhs.render(vars, s), self.rhs.render(vars, s))
    }
}

/// A finite set of equations in `arity` variables; the empty system is
/// satisfied by every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    arity: usize,
    equations: Vec<Equation>,
}

impl EquationSystem {
    pub fn new(arity: usize, equations: Vec<Equation>) -> Result<Self, TermError> {
        if arity == 0 {
            return Err(TermError::ZeroArity);
        }
        for eq in &equations {
            let needed = eq.lhs.arity().max(eq.rhs.arity());
            if needed > arity {
                return Err(TermError::ArityMismatch { needed, have: arity });
            }
        }
        Ok(EquationSystem { arity, equations })
    }

    pub fn empty(arity: usize) -> Result<Self, TermError> {
        Self::new(arity, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Concatenation of two systems over the same variables.
    pub fn join(&self, other: &EquationSystem) -> Result<EquationSystem, TermError> {
        if self.arity != other.arity {
            return Err(TermError::ArityMismatch { needed: other.arity, have: self.arity });
        }
        let mut equations = self.equations.clone();
        equations.extend(other.equations.iter().cloned());
        EquationSystem::new(self.arity, equations)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("term needs {needed} variables but the context supplies {have}")]
    ArityMismatch { needed: usize, have: usize },
    #[error("variable contexts must declare at least one variable")]
    ZeroArity,
    #[error("constant index {index} out of range for semigroup of size {size}")]
    ConstantOutOfRange { index: usize, size: usize },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Evaluates `t` at a point of `S^n` by structural recursion; the inverse
/// is taken in the maximal subgroup, so evaluation is total exactly on
/// completely regular semigroups.
pub fn evaluate(
    s: &FiniteSemigroup,
    t: &Term,
    point: &[ElementIndex],
) -> Result<ElementIndex, TermError> {
    match t {
        Term::Variable(i) => point
            .get(*i)
            .copied()
            .ok_or(TermError::ArityMismatch { needed: i + 1, have: point.len() }),
        Term::Constant(c) => {
            if *c >= s.size() {
                return Err(TermError::ConstantOutOfRange { index: *c, size: s.size() });
            }
            Ok(*c)
        }
        Term::Product(l, r) => {
            let lv = evaluate(s, l, point)?;
            let rv = evaluate(s, r, point)?;
            Ok(s.product(lv, rv))
        }
        Term::Inverse(inner) => {
            let v = evaluate(s, inner, point)?;
            Ok(s.cr_inverse(v)?)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty term")]
    Empty,
    #[error("unexpected character `{ch}` at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected `{token}` at position {pos}")]
    UnexpectedToken { token: String, pos: usize },
    #[error("unmatched `(` opened at position {pos}")]
    UnclosedParen { pos: usize },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Apostrophe,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch == '(' {
            chars.next();
            tokens.push((pos, Token::LParen));
        } else if ch == ')' {
            chars.next();
            tokens.push((pos, Token::RParen));
        } else if ch == '\'' {
            chars.next();
            tokens.push((pos, Token::Apostrophe));
        } else if ch == '=' || ch == '#' {
            return Err(ParseError::UnexpectedChar { ch, pos });
        } else {
            let mut ident = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() || matches!(c, '(' | ')' | '\'' | '=' | '#') {
                    break;
                }
                ident.push(c);
                chars.next();
            }
            tokens.push((pos, Token::Ident(ident)));
        }
    }
    Ok(tokens)
}

struct TermParser<'a> {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    vars: &'a [String],
    semigroup: &'a FiniteSemigroup,
}

impl<'a> TermParser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.cursor)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Token::Ident(_))) | Some((_, Token::LParen))) {
            let rhs = self.factor()?;
            acc = Term::product(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while matches!(self.peek(), Some((_, Token::Apostrophe))) {
            self.cursor += 1;
            t = Term::inverse(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.tokens.get(self.cursor).cloned() {
            Some((pos, Token::Ident(name))) => {
                self.cursor += 1;
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    return Ok(Term::Variable(i));
                }
                if let Some(c) = self.semigroup.index_of(&name) {
                    return Ok(Term::Constant(c));
                }
                Err(ParseError::UnknownIdentifier { name, pos })
            }
            Some((pos, Token::LParen)) => {
                self.cursor += 1;
                let inner = self.term()?;
                match self.tokens.get(self.cursor) {
                    Some((_, Token::RParen)) => {
                        self.cursor += 1;
                        Ok(inner)
                    }
                    _ => Err(ParseError::UnclosedParen { pos }),
                }
            }
            Some((pos, token)) => Err(ParseError::UnexpectedToken {
                token: describe(&token),
                pos,
            }),
            None => Err(ParseError::Empty),
        }
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::Ident(name) => name.clone(),
        Token::Apostrophe => "'".to_string(),
        Token::LParen => "(".to_string(),
        Token::RParen => ")".to_string(),
    }
}

/// Parses a term. Identifiers resolve against `vars` first and the
/// element names of `s` second, so a variable shadows a like-named
/// constant; [`shadowed_constants`] lists such collisions.
pub fn parse_term(
    text: &str,
    vars: &[String],
    s: &FiniteSemigroup,
) -> Result<Term, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut parser = TermParser { tokens, cursor: 0, vars, semigroup: s };
    let term = parser.term()?;
    if let Some((pos, token)) = parser.peek() {
        return Err(ParseError::UnexpectedToken { token: describe(token), pos: *pos });
    }
    Ok(term)
}

/// Element names hidden by like-named variables under the resolution rule
/// of [`parse_term`].
pub fn shadowed_constants(vars: &[String], s: &FiniteSemigroup) -> Vec<String> {
    vars.iter().filter(|v| s.index_of(v).is_some()).cloned().collect()
}

/// Variable names for rendering synthesized systems: `x y z w` when none
/// of them collides with an element name, positional `x1 x2 ...`
/// otherwise (suffixed with `_` until free).
pub fn fresh_var_names(arity: usize, s: &FiniteSemigroup) -> Vec<String> {
    let letters = ["x", "y", "z", "w"];
    if arity <= letters.len() {
        let candidate: Vec<String> =
            letters[..arity].iter().map(|n| n.to_string()).collect();
        if candidate.iter().all(|n| s.index_of(n).is_none()) {
            return candidate;
        }
    }
    (1..=arity)
        .map(|i| {
            let mut name = format!("x{i}");
            while s.index_of(&name).is_some() {
                name.push('_');
            }
            name
        })
        .collect()
}

impl fmt::Display for Term {
    /// Positional rendering (`$0`, `$1`, `#k`) for contexts without names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Variable(i) => write!(f, "${i}"),
            Term::Constant(c) => write!(f, "#{c}"),
            Term::Product(l, r) => match r.as_ref() {
                Term::Product(_, _) => write!(f, "{l} ({r})"),
                _ => write!(f, "{l} {r}"),
            },
            Term::Inverse(t) => match t.as_ref() {
                Term::Product(_, _) => write!(f, "({t})'"),
                _ => write!(f, "{t}'"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_single_variable() {
        let t3 = catalog::t3();
        let t = parse_term("x", &vars(&["x", "y"]), &t3).unwrap();
        assert_eq!(t, Term::Variable(0));
    }

    #[test]
    fn parse_mixed_term_with_grouping_and_inverse() {
        let t3 = catalog::t3();
        let t = parse_term("x (y f)' a", &vars(&["x", "y"]), &t3).unwrap();
        let f = t3.index_of("f").unwrap();
        let a = t3.index_of("a").unwrap();
        let expected = Term::product(
            Term::product(
                Term::Variable(0),
                Term::inverse(Term::product(Term::Variable(1), Term::Constant(f))),
            ),
            Term::Constant(a),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn parse_double_inverse() {
        let t3 = catalog::t3();
        let t = parse_term("x''", &vars(&["x"]), &t3).unwrap();
        assert_eq!(t, Term::inverse(Term::inverse(Term::Variable(0))));
    }

    #[test]
    fn juxtaposition_is_left_associative() {
        let t3 = catalog::t3();
        let t = parse_term("e a f", &vars(&["x"]), &t3).unwrap();
        assert_eq!(
            t,
            Term::product(
                Term::product(Term::Constant(0), Term::Constant(1)),
                Term::Constant(2)
            )
        );
    }

    #[test]
    fn parse_errors() {
        let t3 = catalog::t3();
        assert_eq!(parse_term("", &vars(&["x"]), &t3), Err(ParseError::Empty));
        assert_eq!(parse_term("   ", &vars(&["x"]), &t3), Err(ParseError::Empty));
        assert!(matches!(
            parse_term("x q", &vars(&["x"]), &t3),
            Err(ParseError::UnknownIdentifier { ref name, pos: 2 }) if name == "q"
        ));
        assert!(matches!(
            parse_term("(x", &vars(&["x"]), &t3),
            Err(ParseError::UnclosedParen { pos: 0 })
        ));
        assert!(matches!(
            parse_term("x )", &vars(&["x"]), &t3),
            Err(ParseError::UnexpectedToken { .. })
        ));
        assert!(matches!(
            parse_term("' x", &vars(&["x"]), &t3),
            Err(ParseError::UnexpectedToken { .. })
        ));
        assert!(matches!(
            parse_term("x = y", &vars(&["x", "y"]), &t3),
            Err(ParseError::UnexpectedChar { ch: '=', .. })
        ));
    }

    #[test]
    fn variables_shadow_constants() {
        let t3 = catalog::t3();
        let t = parse_term("a", &vars(&["a"]), &t3).unwrap();
        assert_eq!(t, Term::Variable(0));
        assert_eq!(shadowed_constants(&vars(&["a", "x"]), &t3), vec!["a".to_string()]);
        assert!(shadowed_constants(&vars(&["x"]), &t3).is_empty());
    }

    #[test]
    fn evaluate_examples() {
        let t3 = catalog::t3();
        let f = t3.index_of("f").unwrap();
        let a = t3.index_of("a").unwrap();
        assert_eq!(evaluate(&t3, &Term::Constant(f), &[a]).unwrap(), f);
        let xf = Term::product(Term::Variable(0), Term::Constant(f));
        assert_eq!(evaluate(&t3, &xf, &[a]).unwrap(), f);

        let z3 = catalog::cyclic(3);
        let inv = Term::inverse(Term::Variable(0));
        assert_eq!(evaluate(&z3, &inv, &[1]).unwrap(), 2); // g' = g2
    }

    #[test]
    fn evaluate_arity_mismatch() {
        let t3 = catalog::t3();
        let err = evaluate(&t3, &Term::Variable(1), &[0]).unwrap_err();
        assert_eq!(err, TermError::ArityMismatch { needed: 2, have: 1 });
    }

    #[test]
    fn render_reparses_to_the_same_tree() {
        let t3 = catalog::t3();
        let names = vars(&["x", "y"]);
        for text in ["x (y f)' a", "x''", "x y f", "(x y) (f a)", "x (y (x a))"] {
            let t = parse_term(text, &names, &t3).unwrap();
            let printed = t.render(&names, &t3);
            let back = parse_term(&printed, &names, &t3).unwrap();
            assert_eq!(back, t, "round trip through `{printed}`");
        }
    }

    #[test]
    fn system_arity_is_checked() {
        let eq = Equation { lhs: Term::Variable(2), rhs: Term::Variable(0) };
        assert!(EquationSystem::new(2, vec![eq.clone()]).is_err());
        assert!(EquationSystem::new(3, vec![eq]).is_ok());
        assert!(EquationSystem::new(0, vec![]).is_err());
    }

    #[test]
    fn fresh_names_avoid_element_names() {
        let t3 = catalog::t3();
        // "e" and "a" are not in the letter pool, so x/y are fine
        assert_eq!(fresh_var_names(2, &t3), vec!["x".to_string(), "y".to_string()]);
        let clash = FiniteSemigroup::from_named_table(&["x"], vec![vec![0]]).unwrap();
        assert_eq!(fresh_var_names(2, &clash), vec!["x1".to_string(), "x2".to_string()]);
    }
}
