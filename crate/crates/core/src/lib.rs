//! Inertia of edge-weighted trees, unicyclic and bicyclic graphs.
//!
//! Graphs carry exact positive rational edge weights. The structural solver
//! reduces a graph with pendant-pair deletions, degree-2 path contractions
//! and hanging-tree decompositions down to forests, cycles and small bases
//! whose inertia has a closed form. [`oracle::inertia_oracle`] computes the
//! same answer by exact congruence diagonalization.

pub mod base;
pub mod closed_forms;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod solver;
pub mod structure;
pub mod testgen;

pub use base::{describe_base, BaseDescriptor, BaseKind};
pub use graph::{ComponentClass, GraphClass, GraphError, GraphKind, Inertia, WeightedGraph};
pub use matrix::{MatrixError, SymRationalMatrix};
pub use oracle::{inertia_oracle, Ecmo};
pub use rational::{parse_rational, Rational};
pub use solver::{solve, Method, SolveResult};
