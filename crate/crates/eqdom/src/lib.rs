//! Algebraic geometry over finite completely regular semigroups.
//!
//! The crate works with semigroups given by explicit multiplication
//! tables and provides four layers:
//!
//! - [`semigroup`]: the table kernel — associativity checking, structural
//!   predicates, inversion in maximal subgroups, J-classes, and the Rees
//!   matrix construction;
//! - [`semilattice`]: strong semilattices of semigroups — validation of
//!   the structure-map conditions, composition of a full table from
//!   components, and decomposition of a table back into components;
//! - [`term`] and [`laws`]: the equation language (variables, one
//!   constant per element, product, inverse) with a parser, an evaluator,
//!   and executable laws relating evaluation to a decomposition;
//! - [`clones`] and [`geometry`]: the term clone in extensional form,
//!   solution sets, and the decision procedure for whether a finite point
//!   set is the solution set of some equation system — including the
//!   union-of-solution-sets campaign that certifies a semigroup with a
//!   nontrivial decomposition is not an equational domain.
//!
//! [`catalog`] holds the small semigroups and specs the examples and test
//! campaigns run on; [`formats`] reads and writes the `.sgp`, `.slat`,
//! `.eqs`, and `.pts` text formats shared with the command-line tool.
//!
//! Every value is immutable after construction and every operation is a
//! pure function, so anything here can be shared freely across threads.
//! All iteration orders are canonical: rerunning a computation yields
//! byte-identical reports.
//!
//! Each major capability has a runnable example under `examples/`.

pub mod catalog;
pub mod clones;
pub mod formats;
pub mod geometry;
pub mod laws;
pub mod semigroup;
pub mod semilattice;
pub mod term;

pub use clones::{clone_closure, default_cap, CloneClosure, TermFunction};
pub use geometry::{
    decide_algebraic, solve, theorem2_counterexample, union_probe, verify_theorem2,
    AlgebraicityDecision, AlgebraicityVerdict, CampaignReport, PointSet,
};
pub use laws::{
    check_collapse_law, check_hom_law, check_same_component_law, constants_components,
    predicted_component,
};
pub use semigroup::{
    build_rees_matrix, check_associativity, ElementIndex, FiniteSemigroup, SemigroupError,
};
pub use semilattice::{
    build_strong_semilattice, decompose, is_semilattice, SemilatticeStructure,
    StrongSemilattice, StrongSemilatticeSpec, ValidationReport,
};
pub use term::{evaluate, parse_term, Equation, EquationSystem, Term};
