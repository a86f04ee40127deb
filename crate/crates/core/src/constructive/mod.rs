//! Colorers built from constructive arguments rather than blind search:
//! subcubic graphs with four element-uniform colors, fully subdivided graphs
//! and balanced forests with two colors, vertex-parity colorings, balanced
//! bipartite graphs with four colors, and proper edge-colorings.

mod parity;
mod proper;
mod subcubic;
mod subdivided;

use thiserror::Error;

use crate::decomposition::{DecompositionError, Failure};
use crate::graph::Vertex;

pub use parity::{color_balanced_4, is_parity_coloring, vertex_parity_color, Bipartition, ParityPair, ParityViolation};
pub use proper::{induced_coloring_from_subdivided_proper, is_proper, proper_edge_color};
pub use subcubic::{color_subcubic_4, element_properties_hold, Rule, SubcubicColoring};
pub use subdivided::{color_balanced_forest_2, color_fully_subdivided_2};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ConstructiveError {
    #[error("graph has maximum degree {0}, expected at most 3")]
    NotSubcubic(usize),
    #[error("graph has parallel edges")]
    Multigraph,
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("decomposition is not strongly pertinent: {}", .0.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; "))]
    NotStronglyPertinent(Vec<Failure>),
    #[error("a component of the base graph is an odd cycle")]
    OddCycleBase,
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("vertex {vertex} on the even side has odd degree {degree}")]
    NotBalanced { vertex: Vertex, degree: usize },
    #[error("improper parity pair: {0}")]
    ImproperPair(ParityViolation),
    #[error("coloring does not fit the graph: {0}")]
    ShapeMismatch(String),
    #[error("no coloring with at most {k_max} colors was found")]
    NoColoring { k_max: usize },
}
