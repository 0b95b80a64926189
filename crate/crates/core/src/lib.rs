//! Certifying recognition of graphs that admit an orientation avoiding a set
//! of oriented three-vertex patterns.
//!
//! For forbidden sets drawn from `{B1, B2, B3, T3}` the [`solver`] decides
//! orientability through the strong components of a skew-symmetric
//! [`constraint`] digraph and returns either an orientation or a
//! contradicting implication path. For `{T3}` the [`obstruction`] module turns
//! that path into an odd donut or even Möbius donut mapping homomorphically
//! into the input. [`patterns`] holds an exhaustive oracle for all six
//! patterns, [`families`] the graph generators, and [`classes`] structural
//! predicates used to cross-check decisions.

pub mod classes;
pub mod constraint;
pub mod families;
pub mod graph;
pub mod obstruction;
pub mod patterns;
pub mod solver;

pub use constraint::{ConstraintDigraph, ConstraintError};
pub use graph::{
    parse_graph, parse_orientation, write_graph, write_orientation, Graph, GraphError, Orientation,
};
pub use obstruction::{extract_t3_obstruction, Obstruction, ObstructionKind, T3Outcome};
pub use patterns::{brute_force_orientable, violations, ForbiddenSet, Pattern, Violation};
pub use solver::{solve, Certificate, SolveError};
