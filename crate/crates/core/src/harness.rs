//! Batch campaigns over enumerated families and the two figure experiments.
//!
//! A campaign walks `n = 1..=n_max`, colors every enumerated graph, and
//! records a histogram of color counts plus every graph that needs more than
//! the target bound. Reports hold only deterministic data; wall-clock times
//! live in a separate [`CampaignTiming`]. Completed levels can be saved as a
//! versioned checkpoint and resumed.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructive::color_subcubic_4;
use crate::decomposition::{for_each_strongly_pertinent_decomposition, strongly_pertinent_decomposition, Decomposition};
use crate::enumerate::{enumerate_by_edges, enumerate_graphs, for_each_edge_level, EdgeFamily, GraphClassFilter};
use crate::graph::{subdivide_edge, Graph};
use crate::graph6::write_graph6;
use crate::irregularity::{verify_coloring, EdgeColoring};
use crate::solver::{
    chi_irr, chi_irr_with, decomposability_bound, element_uniform_search, SolveOptions, SolveResult, SolveStatus,
};

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub name: String,
    pub filter: GraphClassFilter,
}

impl Family {
    pub fn cubic() -> Self {
        Family {
            name: "cubic".into(),
            filter: GraphClassFilter::cubic(),
        }
    }

    pub fn subcubic() -> Self {
        Family {
            name: "subcubic".into(),
            filter: GraphClassFilter::subcubic(),
        }
    }

    pub fn subcubic_min_degree_2() -> Self {
        Family {
            name: "subcubic-min2".into(),
            filter: GraphClassFilter::subcubic_min_degree_2(),
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "cubic" => Some(Family::cubic()),
            "subcubic" => Some(Family::subcubic()),
            "subcubic-min2" => Some(Family::subcubic_min_degree_2()),
            _ => None,
        }
    }

    /// Largest `n` covered by default at desk scale.
    pub fn default_n_max(&self) -> usize {
        if self.filter.regular == Some(3) {
            14
        } else {
            11
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The exact locally irregular chromatic index.
    Exact,
    /// The four-color subcubic colorer on a strongly pertinent decomposition.
    Constructive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub family: Family,
    pub n_max: usize,
    pub bound: usize,
    pub method: Method,
    /// Search-node limit per graph; exceeding it aborts the campaign.
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exceeder {
    pub graph6: String,
    /// Colors needed, when a coloring was found at all.
    pub colors: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub n: usize,
    pub enumerated: usize,
    /// Decomposable graphs colored at this level.
    pub tested: usize,
    pub non_decomposable: usize,
    /// Colors used, mapped to the number of graphs.
    pub histogram: BTreeMap<usize, usize>,
    pub exceeders: Vec<Exceeder>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub version: u32,
    pub config: CampaignConfig,
    /// Completed levels in increasing `n`.
    pub levels: Vec<LevelReport>,
}

impl CampaignReport {
    pub fn new(config: CampaignConfig) -> Self {
        CampaignReport {
            version: CHECKPOINT_VERSION,
            config,
            levels: Vec::new(),
        }
    }

    pub fn tested(&self) -> usize {
        self.levels.iter().map(|l| l.tested).sum()
    }

    pub fn non_decomposable(&self) -> usize {
        self.levels.iter().map(|l| l.non_decomposable).sum()
    }

    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut total = BTreeMap::new();
        for level in &self.levels {
            for (&k, &c) in &level.histogram {
                *total.entry(k).or_insert(0) += c;
            }
        }
        total
    }

    pub fn exceeders(&self) -> Vec<&Exceeder> {
        self.levels.iter().flat_map(|l| &l.exceeders).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.levels.last().map_or(self.config.n_max == 0, |l| l.n == self.config.n_max)
    }

    /// Complete with no graph above the bound.
    pub fn passes(&self) -> bool {
        self.is_complete() && self.exceeders().is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, CampaignError> {
        let report: CampaignReport = serde_json::from_str(text).map_err(|e| CampaignError::Checkpoint(e.to_string()))?;
        if report.version != CHECKPOINT_VERSION {
            return Err(CampaignError::Checkpoint(format!(
                "checkpoint version {} is not {}",
                report.version, CHECKPOINT_VERSION
            )));
        }
        Ok(report)
    }

    /// `n,colors,count` rows, one per nonempty histogram bucket.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("n,colors,count\n");
        for level in &self.levels {
            for (k, c) in &level.histogram {
                out.push_str(&format!("{},{},{}\n", level.n, k, c));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CampaignTiming {
    pub per_level: Vec<(usize, Duration)>,
    pub total: Duration,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CampaignError {
    #[error("node budget exhausted on {graph6} at n = {n}")]
    BudgetExhausted {
        graph6: String,
        n: usize,
        /// Every level finished before the one that ran out.
        partial: Box<CampaignReport>,
    },
    #[error("bad checkpoint: {0}")]
    Checkpoint(String),
    #[error("bad family: {0}")]
    Family(String),
}

enum Outcome {
    Colored(usize),
    NonDecomposable,
    Failed(String),
    Budget,
}

fn color_one(g: &Graph, config: &CampaignConfig) -> Outcome {
    let opts = SolveOptions {
        node_budget: config.node_budget,
        ..SolveOptions::new(decomposability_bound(g).max(1))
    };
    match config.method {
        Method::Exact => match chi_irr_with(g, &opts).status {
            SolveStatus::Colored { k, .. } => Outcome::Colored(k),
            SolveStatus::NotDecomposable => Outcome::NonDecomposable,
            SolveStatus::Refuted { .. } => unreachable!("k_max reaches the decomposability bound"),
            SolveStatus::ExceededBudget => Outcome::Budget,
        },
        Method::Constructive => {
            match chi_irr_with(g, &opts).status {
                SolveStatus::NotDecomposable => return Outcome::NonDecomposable,
                SolveStatus::ExceededBudget => return Outcome::Budget,
                _ => {}
            }
            let colored = strongly_pertinent_decomposition(g)
                .map_err(|e| e.to_string())
                .and_then(|d| color_subcubic_4(g, &d).map_err(|e| e.to_string()));
            match colored {
                Ok(out) => Outcome::Colored(out.coloring.colors_used()),
                Err(e) => Outcome::Failed(e),
            }
        }
    }
}

/// Runs the campaign from scratch.
pub fn run_campaign(config: &CampaignConfig) -> Result<(CampaignReport, CampaignTiming), CampaignError> {
    resume_campaign(CampaignReport::new(config.clone()), |_| {})
}

/// Continues from the levels already in `report`, calling `on_level` after
/// each newly completed level (e.g. to write a checkpoint).
pub fn resume_campaign(
    mut report: CampaignReport,
    mut on_level: impl FnMut(&CampaignReport),
) -> Result<(CampaignReport, CampaignTiming), CampaignError> {
    let config = report.config.clone();
    config.family.filter.validate().map_err(|e| CampaignError::Family(e.to_string()))?;
    let start = Instant::now();
    let mut timing = CampaignTiming::default();
    let first = report.levels.last().map_or(1, |l| l.n + 1);
    for n in first..=config.n_max {
        let level_start = Instant::now();
        let graphs = enumerate_graphs(n, &config.family.filter).map_err(|e| CampaignError::Family(e.to_string()))?;
        let outcomes: Vec<Outcome> = graphs.par_iter().map(|g| color_one(g, &config)).collect();
        let mut level = LevelReport {
            n,
            enumerated: graphs.len(),
            ..Default::default()
        };
        for (g, outcome) in graphs.iter().zip(outcomes) {
            let graph6 = || write_graph6(g).expect("enumerated graphs are simple");
            match outcome {
                Outcome::Colored(k) => {
                    level.tested += 1;
                    *level.histogram.entry(k).or_insert(0) += 1;
                    if k > config.bound {
                        level.exceeders.push(Exceeder {
                            graph6: graph6(),
                            colors: Some(k),
                            error: None,
                        });
                    }
                }
                Outcome::NonDecomposable => level.non_decomposable += 1,
                Outcome::Failed(error) => {
                    level.tested += 1;
                    level.exceeders.push(Exceeder {
                        graph6: graph6(),
                        colors: None,
                        error: Some(error),
                    });
                }
                Outcome::Budget => {
                    return Err(CampaignError::BudgetExhausted {
                        graph6: graph6(),
                        n,
                        partial: Box::new(report),
                    })
                }
            }
        }
        report.levels.push(level);
        timing.per_level.push((n, level_start.elapsed()));
        on_level(&report);
    }
    timing.total = start.elapsed();
    Ok((report, timing))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeWitness {
    pub tree: Graph,
    pub coloring: EdgeColoring,
    /// The exact search with at most two colors, which must be refuted.
    pub two_color_refutation: SolveResult,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("no tree with at most {max_edges} edges needs three colors")]
pub struct TreeSearchExhausted {
    pub max_edges: usize,
}

/// The first tree, in order of edge count and then canonical order, whose
/// locally irregular chromatic index is 3.
pub fn find_tree_needing_3(max_edges: usize) -> Result<TreeWitness, TreeSearchExhausted> {
    let mut found = None;
    for_each_edge_level(max_edges, &EdgeFamily::trees(), |_, level| {
        let hit = level.par_iter().find_first(|t| chi_irr(t, decomposability_bound(t).max(1)).colors() == Some(3));
        found = hit.cloned();
        found.is_none()
    });
    let tree = found.ok_or(TreeSearchExhausted { max_edges })?;
    let coloring = chi_irr(&tree, 3).coloring().expect("three colors suffice").clone();
    Ok(TreeWitness {
        two_color_refutation: chi_irr(&tree, 2),
        tree,
        coloring,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HighDegreeTreeReport {
    pub checked: usize,
    pub non_decomposable: usize,
    /// Decomposable trees with maximum degree at least 5 needing 3 or more colors.
    pub violations: Vec<String>,
}

/// Checks every tree with maximum degree at least 5 and at most `max_edges`
/// edges against the two-color bound.
pub fn check_high_degree_trees(max_edges: usize) -> HighDegreeTreeReport {
    let levels = enumerate_by_edges(max_edges, &EdgeFamily::trees());
    let trees: Vec<&Graph> = levels.iter().flatten().filter(|t| t.max_degree() >= 5).collect();
    let outcomes: Vec<Option<usize>> = trees
        .par_iter()
        .map(|t| chi_irr(t, decomposability_bound(t).max(1)).colors())
        .collect();
    let mut report = HighDegreeTreeReport::default();
    for (t, k) in trees.iter().zip(outcomes) {
        report.checked += 1;
        match k {
            None => report.non_decomposable += 1,
            Some(k) if k > 2 => report.violations.push(write_graph6(t).expect("trees are simple")),
            Some(_) => {}
        }
    }
    report
}

/// The cube with one edge subdivided three times and every other edge once.
pub fn fig6_graph() -> Graph {
    let mut g = Graph::cube();
    for e in 1..g.edge_count() {
        g = subdivide_edge(&g, e, 1).expect("cube edges exist");
    }
    subdivide_edge(&g, 0, 3).expect("edge 0 exists")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig6Report {
    pub graph: Graph,
    pub decompositions_visited: usize,
    /// A strongly pertinent decomposition with no element-uniform coloring in
    /// at most three colors.
    pub refuted: Option<Decomposition>,
    /// A strongly pertinent decomposition with an element-uniform 2-coloring.
    pub two_colorable: Option<(Decomposition, EdgeColoring)>,
}

impl Fig6Report {
    pub fn witnessed(&self) -> bool {
        self.refuted.is_some() && self.two_colorable.is_some()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": self.graph.to_json(),
            "decompositions_visited": self.decompositions_visited,
            "refuted_at_3": self.refuted.as_ref().map(|d| d.to_json_value()),
            "two_colorable": self.two_colorable.as_ref().map(|(d, c)| serde_json::json!({
                "decomposition": d.to_json_value(),
                "coloring": c,
            })),
        })
    }
}

/// Walks the strongly pertinent decompositions of [`fig6_graph`] until both
/// witnesses are found.
pub fn fig6_experiment() -> Fig6Report {
    let g = fig6_graph();
    let mut refuted = None;
    let mut two_colorable = None;
    let visited = for_each_strongly_pertinent_decomposition(&g, |d| {
        let search = |k| element_uniform_search(&g, d, k, false).expect("enumerated decompositions are valid");
        if refuted.is_none() && matches!(search(3).status, SolveStatus::Refuted { .. }) {
            refuted = Some(d.clone());
        }
        if two_colorable.is_none() {
            if let Some(c) = search(2).coloring() {
                debug_assert!(verify_coloring(&g, c).map(|r| r.valid).unwrap_or(false));
                two_colorable = Some((d.clone(), c.clone()));
            }
        }
        refuted.is_none() || two_colorable.is_none()
    })
    .expect("the instance is connected and simple");
    Fig6Report {
        graph: g,
        decompositions_visited: visited,
        refuted,
        two_colorable,
    }
}
