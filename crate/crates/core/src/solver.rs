//! Exact locally irregular chromatic index, decomposability, and
//! element-uniform search over a decomposition.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::decomposition::{validate_decomposition, Decomposition, DecompositionError, Mode};
use crate::graph::Graph;
use crate::irregularity::EdgeColoring;
use crate::search::{BranchOrder, Outcome, Problem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveStatus {
    /// A valid coloring with exactly `k` colors and none with fewer.
    Colored { k: usize, coloring: EdgeColoring },
    /// No valid coloring with at most `k_max` colors; decomposability unsettled.
    Refuted { k_max: usize },
    /// No locally irregular coloring exists at all.
    NotDecomposable,
    ExceededBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    #[serde(flatten)]
    pub status: SolveStatus,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn colors(&self) -> Option<usize> {
        match self.status {
            SolveStatus::Colored { k, .. } => Some(k),
            _ => None,
        }
    }

    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match &self.status {
            SolveStatus::Colored { coloring, .. } => Some(coloring),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub k_max: usize,
    /// Node limit per call, summed over all `k` tried.
    pub node_budget: Option<u64>,
    pub order: BranchOrder,
}

impl SolveOptions {
    pub fn new(k_max: usize) -> Self {
        SolveOptions {
            k_max,
            node_budget: None,
            order: BranchOrder::default(),
        }
    }
}

/// Every nonempty locally irregular class has at least two edges, so more
/// than `|E| / 2` colors are never needed.
pub fn decomposability_bound(g: &Graph) -> usize {
    g.edge_count() / 2
}

pub fn chi_irr(g: &Graph, k_max: usize) -> SolveResult {
    chi_irr_with(g, &SolveOptions::new(k_max))
}

/// Tries `k = 1, 2, ...` up to `min(k_max, |E| / 2)` and returns the first
/// witness. `NotDecomposable` is only reported once every `k` up to the
/// decomposability bound has been refuted.
pub fn chi_irr_with(g: &Graph, opts: &SolveOptions) -> SolveResult {
    let start = Instant::now();
    let m = g.edge_count();
    if m == 0 {
        return SolveResult {
            status: SolveStatus::Colored {
                k: 0,
                coloring: EdgeColoring::new(0, Vec::new()),
            },
            nodes_explored: 0,
            elapsed: start.elapsed(),
        };
    }
    let bound = decomposability_bound(g);
    let top = opts.k_max.min(bound);
    let mut nodes = 0u64;
    for k in 1..=top {
        let mut p = Problem::single_edges(g, k);
        p.order = opts.order;
        p.budget = opts.node_budget.map(|b| b.saturating_sub(nodes));
        let (outcome, used) = p.solve();
        nodes += used;
        match outcome {
            Outcome::Found(colors) => {
                return SolveResult {
                    status: SolveStatus::Colored {
                        k,
                        coloring: EdgeColoring::new(k, colors),
                    },
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                }
            }
            Outcome::Budget => {
                return SolveResult {
                    status: SolveStatus::ExceededBudget,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                }
            }
            Outcome::Exhausted => {}
        }
    }
    let status = if opts.k_max >= bound {
        SolveStatus::NotDecomposable
    } else {
        SolveStatus::Refuted { k_max: opts.k_max }
    };
    SolveResult {
        status,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    }
}

/// Outcome of the decomposability decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecomposabilityCertificate {
    /// A valid coloring witnessing decomposability.
    Coloring(EdgeColoring),
    /// Every color count up to the bound was refuted after this many nodes.
    Exhausted { bound: usize, nodes: u64 },
}

pub fn is_decomposable(g: &Graph) -> (bool, DecomposabilityCertificate) {
    let bound = decomposability_bound(g);
    let r = chi_irr(g, bound.max(1));
    match r.status {
        SolveStatus::Colored { coloring, .. } => (true, DecomposabilityCertificate::Coloring(coloring)),
        _ => (
            false,
            DecomposabilityCertificate::Exhausted {
                bound,
                nodes: r.nodes_explored,
            },
        ),
    }
}

/// Minimal `k <= k_max` admitting a valid coloring that is constant on every
/// element of `d`; with `enforce_ii`, two same-colored elements may only meet
/// at a vertex that is central for one of them.
pub fn element_uniform_search(
    g: &Graph,
    d: &Decomposition,
    k_max: usize,
    enforce_ii: bool,
) -> Result<SolveResult, DecompositionError> {
    element_uniform_search_with(g, d, &SolveOptions::new(k_max), enforce_ii)
}

pub fn element_uniform_search_with(
    g: &Graph,
    d: &Decomposition,
    opts: &SolveOptions,
    enforce_ii: bool,
) -> Result<SolveResult, DecompositionError> {
    let report = validate_decomposition(g, d, Mode::Any);
    if !report.valid {
        return Err(DecompositionError::Invalid(report.failures));
    }
    let start = Instant::now();
    let units: Vec<Vec<usize>> = d.elements.iter().map(|el| el.edges.clone()).collect();
    let pairs = if enforce_ii { d.pendant_pairs() } else { Vec::new() };
    let mut nodes = 0u64;
    let top = opts.k_max;
    for k in 1..=top {
        let mut p = Problem::new(g, units.clone(), k);
        p.order = opts.order;
        p.budget = opts.node_budget.map(|b| b.saturating_sub(nodes));
        for &(a, b) in &pairs {
            p.forbid_same(a, b);
        }
        let (outcome, used) = p.solve();
        nodes += used;
        match outcome {
            Outcome::Found(unit_colors) => {
                let mut colors = vec![0; g.edge_count()];
                for (el, &c) in d.elements.iter().zip(&unit_colors) {
                    for &e in &el.edges {
                        colors[e] = c;
                    }
                }
                return Ok(SolveResult {
                    status: SolveStatus::Colored {
                        k,
                        coloring: EdgeColoring::new(k, colors),
                    },
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
            Outcome::Budget => {
                return Ok(SolveResult {
                    status: SolveStatus::ExceededBudget,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                })
            }
            Outcome::Exhausted => {}
        }
    }
    let status = if g.edge_count() == 0 {
        SolveStatus::Colored {
            k: 0,
            coloring: EdgeColoring::new(0, Vec::new()),
        }
    } else {
        SolveStatus::Refuted { k_max: top }
    };
    Ok(SolveResult {
        status,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}
