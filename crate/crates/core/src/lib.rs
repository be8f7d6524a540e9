//! Locating and neighbor-locating colorings of graphs.
//!
//! - [`family`] and [`graph`]: graph families, joins, hop distances.
//! - [`coloring`] and [`segment`]: color codes and the two validity predicates.
//! - [`construct`]: explicit optimal colorings (paths, cycles, clique
//!   families, joins).
//! - [`formulas`]: closed-form chromatic numbers with branch tags.
//! - [`solver`]: exact backtracking search, the independent oracle.
//! - [`sample`]: random graphs, colorings and sequences for sweeps.
//! - [`certificate`] and [`cli`]: the line-oriented exchange format and the
//!   command-line front end.

pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod sample;
pub mod segment;
pub mod solver;

pub use coloring::{Coloring, Mode, Verdict, Witness};
pub use error::{Error, Result};
pub use family::{build_graph, GraphSpec};
pub use graph::Graph;
