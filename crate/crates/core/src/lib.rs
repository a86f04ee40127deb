//! Locally irregular edge-colorings: exact solving, decompositions into
//! 2-paths and claws, constructive colorers, and small-graph enumeration.
//!
//! A graph is locally irregular when no edge joins two vertices of equal
//! degree; an edge-coloring is locally irregular when every color class is.

pub mod canon;
pub mod constructive;
pub mod decomposition;
pub mod dot;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod irregularity;
mod search;
pub mod solver;

pub use canon::{canonical_form, canonical_labeling, CanonicalLabel};
pub use dot::{export_dot, Overlay};
pub use enumerate::{enumerate_by_edges, enumerate_graphs, for_each_edge_level, EdgeFamily, EdgeParity, FilterError, GraphClassFilter};
pub use graph::{fully_subdivide, subdivide_edge, EdgeId, Graph, GraphError, GraphJson, Subgraph, Vertex};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use constructive::{
    color_balanced_4, color_balanced_forest_2, color_fully_subdivided_2, color_subcubic_4, element_properties_hold,
    induced_coloring_from_subdivided_proper, is_parity_coloring, is_proper, proper_edge_color, vertex_parity_color,
    Bipartition, ConstructiveError, ParityPair, ParityViolation, Rule, SubcubicColoring,
};
pub use decomposition::{
    classify_two_path, conflicts, for_each_strongly_pertinent_decomposition, for_each_two_path_decomposition,
    pertinent_decomposition, strongly_pertinent_decomposition, two_path_decomposition, validate_decomposition,
    Conflicts, Decomposition, DecompositionError, DecompositionReport, Element, ElementKind, Failure, Mode,
    TwoPathType,
};
pub use harness::{
    check_high_degree_trees, fig6_experiment, fig6_graph, find_tree_needing_3, resume_campaign, run_campaign,
    CampaignConfig, CampaignError, CampaignReport, CampaignTiming, Exceeder, Fig6Report, Family, HighDegreeTreeReport,
    LevelReport, Method, TreeSearchExhausted, TreeWitness,
};
pub use irregularity::{
    color_class, has_ab_path, is_locally_irregular, kempe_component, swap, verify_coloring, ColorPairComponent,
    ColoringError, EdgeColoring, VerificationReport, Violation,
};
pub use search::BranchOrder;
pub use solver::{
    chi_irr, chi_irr_with, decomposability_bound, element_uniform_search, element_uniform_search_with,
    is_decomposable, DecomposabilityCertificate, SolveOptions, SolveResult, SolveStatus,
};
