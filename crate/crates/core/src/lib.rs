//! Distinguishing numbers and distinguishing indices of graphs, with a focus
//! on lexicographic products.
//!
//! Graphs are simple and undirected on vertices `0..n`. Labelings use
//! positive integers. Every labeling produced by [`constructions`] can be
//! certified with [`distinguishing::is_distinguishing`] or
//! [`distinguishing::is_distinguishing_edges`].

pub mod autosearch;
pub mod catalog;
pub mod constructions;
pub mod distinguishing;
pub mod error;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod lexprod;
pub mod permgroup;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
pub use labeling::{EdgeLabeling, VertexLabeling};
pub use permgroup::{Capped, GeneratorSet, Permutation};
