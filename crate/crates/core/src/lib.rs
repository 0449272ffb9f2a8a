//! Workbench for 2-edge-colorings of complete multipartite graphs.
//!
//! The pieces fit together like this: [`graph`] defines hosts and colorings;
//! [`constructions`] builds the extremal colorings that pin down sharpness;
//! [`certificates`] validates compact absence arguments against a coloring;
//! [`finders`] does exact search for paths, cycles, and connected matchings;
//! [`hamiltonicity`] holds degree-condition certifiers for balanced
//! bipartite graphs; [`frontier`] checks the arithmetic side conditions and
//! exhaustively verifies small hosts; [`io`] reads and writes instance files.

pub mod certificates;
pub mod constructions;
pub mod finders;
pub mod frontier;
pub mod graph;
pub mod hamiltonicity;
pub mod io;

pub use graph::{Color, ColorSubgraph, MultipartiteHost, SimpleGraph, TwoColoring};
