//! Up-color domination on vertex-colored graphs.
//!
//! A set `D` up-color dominates `(G, c)` when it holds no vertex of color 0
//! and every vertex outside `D` has a neighbour in `D` of strictly larger
//! color. The crate computes the minimum size and weight of such sets for a
//! fixed coloring and over all colorings, with linear-time routines for
//! trees, hardness constructions and bound audits.

pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod tree;

pub use error::{Error, Result};
pub use exact::{DominationResult, Limits, Role};
pub use graph::{orient, ColoredGraph, Coloring, Graph, VertexSet};
