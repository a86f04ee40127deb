//! Isomorph-free generation of small graphs.
//!
//! Two generators share one scheme: grow graphs level by level, keep one
//! representative per canonical label at every level, and prune partial
//! graphs that provably cannot grow into a member of the target family.
//!
//! * [`enumerate_graphs`] adds one vertex at a time. For connected families the
//!   new vertex gets at least one neighbor, which is complete because every
//!   connected graph has a vertex whose removal keeps it connected.
//! * [`enumerate_by_edges`] adds one edge at a time (a pendant edge, an edge
//!   between existing vertices, or a new `K2` component), which suits trees,
//!   bipartite families, and multigraph bases indexed by size.
//!
//! Output order is the order of canonical labels, so runs are reproducible.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalLabel};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeParity {
    Even,
    Odd,
}

/// Selects a family of simple graphs by degree bounds and global properties.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GraphClassFilter {
    pub max_degree: Option<usize>,
    pub min_degree: Option<usize>,
    pub regular: Option<usize>,
    pub connected: bool,
    pub bipartite: Option<bool>,
    pub edge_parity: Option<EdgeParity>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FilterError {
    #[error("minimum degree {min} exceeds maximum degree {max}")]
    MinAboveMax { min: usize, max: usize },
}

impl GraphClassFilter {
    pub fn cubic() -> Self {
        GraphClassFilter {
            regular: Some(3),
            connected: true,
            ..Default::default()
        }
    }

    pub fn subcubic() -> Self {
        GraphClassFilter {
            max_degree: Some(3),
            connected: true,
            ..Default::default()
        }
    }

    pub fn subcubic_min_degree_2() -> Self {
        GraphClassFilter {
            max_degree: Some(3),
            min_degree: Some(2),
            connected: true,
            ..Default::default()
        }
    }

    /// Effective `(min, max)` degree bounds after folding in `regular`.
    fn bounds(&self, n: usize) -> Result<(usize, usize), FilterError> {
        let mut lo = self.min_degree.unwrap_or(0);
        let mut hi = self.max_degree.unwrap_or(usize::MAX);
        if let Some(d) = self.regular {
            lo = lo.max(d);
            hi = hi.min(d);
        }
        if let (Some(min), Some(max)) = (self.min_degree, self.max_degree) {
            if min > max {
                return Err(FilterError::MinAboveMax { min, max });
            }
        }
        Ok((lo, hi.min(n.saturating_sub(1))))
    }

    pub fn validate(&self) -> Result<(), FilterError> {
        self.bounds(usize::MAX).map(|_| ())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if g.has_parallel_edges() {
            return false;
        }
        let degs = g.degrees();
        if let Some(max) = self.max_degree {
            if degs.iter().any(|&d| d > max) {
                return false;
            }
        }
        if let Some(min) = self.min_degree {
            if degs.iter().any(|&d| d < min) {
                return false;
            }
        }
        if let Some(r) = self.regular {
            if degs.iter().any(|&d| d != r) {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if let Some(b) = self.bipartite {
            if g.is_bipartite() != b {
                return false;
            }
        }
        match self.edge_parity {
            Some(EdgeParity::Even) if g.edge_count() % 2 != 0 => return false,
            Some(EdgeParity::Odd) if g.edge_count() % 2 != 1 => return false,
            _ => {}
        }
        true
    }
}

/// All graphs on `n` vertices accepted by `filter`, one per isomorphism class,
/// in canonical-label order. Infeasible filters give an empty list.
pub fn enumerate_graphs(n: usize, filter: &GraphClassFilter) -> Result<Vec<Graph>, FilterError> {
    let (lo, hi) = filter.bounds(n)?;
    if lo > hi && n > 0 {
        return Ok(Vec::new());
    }
    if n == 0 {
        let g = Graph::empty(0);
        return Ok(if filter.accepts(&g) { vec![g] } else { Vec::new() });
    }
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let remaining = n - m - 1;
        let mut seen: HashSet<CanonicalLabel> = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            let open: Vec<Vertex> = (0..m).filter(|&v| h.degree(v) < hi).collect();
            let min_nbrs = usize::from(filter.connected);
            for_each_subset(&open, hi.min(open.len()), |nbrs| {
                if nbrs.len() < min_nbrs {
                    return;
                }
                let child = h.with_new_vertex(nbrs).expect("neighbors are distinct existing vertices");
                if !extendable(&child, filter, lo, hi, remaining) {
                    return;
                }
                let label = canonical_form(&child);
                if seen.insert(label.clone()) {
                    next.push((label, child));
                }
            });
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    let mut out: Vec<(CanonicalLabel, Graph)> = level
        .into_iter()
        .filter(|g| filter.accepts(g))
        .map(|g| (canonical_form(&g), g))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

/// Necessary conditions for `g` to grow into a family member by adding
/// `remaining` more vertices, each with at most `hi` neighbors.
fn extendable(g: &Graph, filter: &GraphClassFilter, lo: usize, hi: usize, remaining: usize) -> bool {
    let degs = g.degrees();
    if degs.iter().any(|&d| d > hi) {
        return false;
    }
    let supply = hi.saturating_mul(remaining);
    let deficit: usize = degs.iter().map(|&d| lo.saturating_sub(d)).sum();
    if deficit > supply {
        return false;
    }
    if let Some(r) = filter.regular {
        // Edges leaving the current vertex set number r * remaining minus twice
        // the edges among the new vertices.
        if (deficit + r * remaining) % 2 != 0 {
            return false;
        }
    }
    if filter.bipartite == Some(true) && !g.is_bipartite() {
        return false;
    }
    true
}

fn for_each_subset(items: &[Vertex], max_size: usize, mut f: impl FnMut(&[Vertex])) {
    fn rec(items: &[Vertex], start: usize, max_size: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex])) {
        f(cur);
        if cur.len() == max_size {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, max_size, cur, f);
            cur.pop();
        }
    }
    let mut cur = Vec::new();
    rec(items, 0, max_size, &mut cur, &mut f);
}

/// Families generated by edge augmentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeFamily {
    pub connected: bool,
    /// Allow parallel edges (loops are never generated).
    pub multigraph: bool,
    pub trees_only: bool,
    pub bipartite_only: bool,
    pub max_degree: Option<usize>,
}

impl EdgeFamily {
    pub fn trees() -> Self {
        EdgeFamily {
            connected: true,
            trees_only: true,
            ..Default::default()
        }
    }

    pub fn connected() -> Self {
        EdgeFamily {
            connected: true,
            ..Default::default()
        }
    }

    /// All graphs without isolated vertices.
    pub fn all() -> Self {
        EdgeFamily::default()
    }

    pub fn connected_bipartite() -> Self {
        EdgeFamily {
            connected: true,
            bipartite_only: true,
            ..Default::default()
        }
    }

    pub fn connected_multigraphs() -> Self {
        EdgeFamily {
            connected: true,
            multigraph: true,
            ..Default::default()
        }
    }
}

/// `levels[m]` holds one graph per isomorphism class with exactly `m` edges and
/// no isolated vertices, for `m = 0..=max_edges`. Level 0 is the one-vertex
/// graph for connected families and the null graph otherwise.
pub fn enumerate_by_edges(max_edges: usize, family: &EdgeFamily) -> Vec<Vec<Graph>> {
    let mut levels = Vec::new();
    for_each_edge_level(max_edges, family, |_, level| {
        levels.push(level.to_vec());
        true
    });
    levels
}

/// Calls `f(m, level)` for `m = 0, 1, ...` (the levels of
/// [`enumerate_by_edges`]) until it returns false or `m = max_edges` is done.
/// Only one level is kept in memory besides the one being built.
pub fn for_each_edge_level(max_edges: usize, family: &EdgeFamily, mut f: impl FnMut(usize, &[Graph]) -> bool) {
    let hi = family.max_degree.unwrap_or(usize::MAX);
    let start = if family.connected {
        Graph::empty(1)
    } else {
        Graph::empty(0)
    };
    let start = if family.multigraph {
        start.into_multigraph()
    } else {
        start
    };
    let mut level = vec![start];
    if !f(0, &level) {
        return;
    }
    for m in 1..=max_edges {
        let mut seen: HashSet<CanonicalLabel> = HashSet::new();
        let mut next: Vec<(CanonicalLabel, Graph)> = Vec::new();
        let mut offer = |child: Graph| {
            if family.bipartite_only && !child.is_bipartite() {
                return;
            }
            let label = canonical_form(&child);
            if seen.insert(label.clone()) {
                next.push((label, child));
            }
        };
        for h in &level {
            let n = h.n();
            for v in 0..n {
                if h.degree(v) < hi {
                    offer(h.with_new_edge(1, v, n).expect("pendant edge is valid"));
                }
            }
            if !family.trees_only {
                for v in 0..n {
                    for u in 0..v {
                        if h.degree(u) >= hi || h.degree(v) >= hi {
                            continue;
                        }
                        if !family.multigraph && h.has_edge(u, v) {
                            continue;
                        }
                        offer(h.with_new_edge(0, u, v).expect("edge between existing vertices"));
                    }
                }
            }
            if !family.connected {
                offer(h.with_new_edge(2, n, n + 1).expect("new component"));
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
        if !f(m, &level) {
            return;
        }
    }
}
