//! Local irregularity, coloring verification, and two-color (Kempe) components.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

/// Total map from edge id to a color in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub k: usize,
    pub colors: Vec<usize>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} edges")]
    Partial { expected: usize, found: usize },
    #[error("edge {edge} has color {color} outside 1..={k}")]
    ColorOutOfRange { edge: EdgeId, color: usize, k: usize },
    #[error("the two colors of a pair must differ")]
    SameColors,
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("component is stale: edge {0} no longer carries one of its colors")]
    StaleComponent(EdgeId),
    #[error("malformed coloring JSON: {0}")]
    Json(String),
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Self {
        EdgeColoring { k, colors }
    }

    /// Coloring whose `k` is the largest color present.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let k = colors.iter().copied().max().unwrap_or(0);
        EdgeColoring { k, colors }
    }

    /// Number of distinct colors that actually appear.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        for &c in &self.colors {
            if c < seen.len() {
                seen[c] = true;
            }
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, ColoringError> {
        serde_json::from_str(text).map_err(|e| ColoringError::Json(e.to_string()))
    }

    fn check(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::Partial {
                expected: g.edge_count(),
                found: self.colors.len(),
            });
        }
        for (edge, &color) in self.colors.iter().enumerate() {
            if color == 0 || color > self.k {
                return Err(ColoringError::ColorOutOfRange { edge, color, k: self.k });
            }
        }
        Ok(())
    }
}

/// One offending edge: both endpoints have the same degree in `color`'s class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub color: usize,
    pub u: Vertex,
    pub v: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

pub fn is_locally_irregular(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| g.degree(u) != g.degree(v))
}

pub fn verify_coloring(g: &Graph, c: &EdgeColoring) -> Result<VerificationReport, ColoringError> {
    c.check(g)?;
    let violations = violations(g, &c.colors, c.k);
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Violations of a possibly partial coloring (color 0 = uncolored, ignored).
pub(crate) fn violations(g: &Graph, colors: &[usize], k: usize) -> Vec<Violation> {
    let deg = class_degrees(g, colors, k);
    let mut out: Vec<Violation> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, _)| colors[e] != 0)
        .filter_map(|(e, &(u, v))| {
            let c = colors[e];
            (deg[u * (k + 1) + c] == deg[v * (k + 1) + c]).then_some(Violation { color: c, u, v })
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `deg[v * (k + 1) + c]` is the number of `c`-colored edges at `v`.
pub(crate) fn class_degrees(g: &Graph, colors: &[usize], k: usize) -> Vec<usize> {
    let mut deg = vec![0usize; g.n() * (k + 1)];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let c = colors[e];
        if c != 0 {
            deg[u * (k + 1) + c] += 1;
            deg[v * (k + 1) + c] += 1;
        }
    }
    deg
}

/// The subgraph formed by the edges of one color, isolated vertices dropped.
pub fn color_class(g: &Graph, c: &EdgeColoring, color: usize) -> Result<Graph, ColoringError> {
    c.check(g)?;
    let edges: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| c.colors[e] == color).collect();
    Ok(g.edge_subgraph(&edges).graph)
}

/// Connected component of the `{a, b}`-colored subgraph that contains `anchor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorPairComponent {
    pub colors: (usize, usize),
    pub anchor: Vertex,
    /// Sorted edge ids; empty when the anchor sees neither color.
    pub edges: Vec<EdgeId>,
}

pub fn kempe_component(
    g: &Graph,
    c: &EdgeColoring,
    a: usize,
    b: usize,
    v: Vertex,
) -> Result<ColorPairComponent, ColoringError> {
    c.check(g)?;
    if a == b {
        return Err(ColoringError::SameColors);
    }
    if v >= g.n() {
        return Err(ColoringError::UnknownVertex(v));
    }
    Ok(ColorPairComponent {
        colors: (a.min(b), a.max(b)),
        anchor: v,
        edges: pair_component(g, &c.colors, a, b, v),
    })
}

/// Exchange the two colors on exactly the component's edges.
pub fn swap(g: &Graph, c: &EdgeColoring, comp: &ColorPairComponent) -> Result<EdgeColoring, ColoringError> {
    c.check(g)?;
    let (a, b) = comp.colors;
    for &e in &comp.edges {
        if e >= g.edge_count() || (c.colors[e] != a && c.colors[e] != b) {
            return Err(ColoringError::StaleComponent(e));
        }
    }
    let mut out = c.clone();
    swap_edges(&mut out.colors, &comp.edges, a, b);
    Ok(out)
}

/// True when `u` and `v` lie in the same `{a, b}`-component; `u == v` is
/// always connected to itself.
pub fn has_ab_path(
    g: &Graph,
    c: &EdgeColoring,
    a: usize,
    b: usize,
    u: Vertex,
    v: Vertex,
) -> Result<bool, ColoringError> {
    c.check(g)?;
    if a == b {
        return Err(ColoringError::SameColors);
    }
    for w in [u, v] {
        if w >= g.n() {
            return Err(ColoringError::UnknownVertex(w));
        }
    }
    Ok(pair_connected(g, &c.colors, a, b, u, v))
}

/// Edge ids of the `{a, b}` component at `v` in a possibly partial coloring.
pub(crate) fn pair_component(g: &Graph, colors: &[usize], a: usize, b: usize, v: Vertex) -> Vec<EdgeId> {
    pair_component_with_vertices(g, colors, a, b, v).0
}

fn pair_component_with_vertices(
    g: &Graph,
    colors: &[usize],
    a: usize,
    b: usize,
    v: Vertex,
) -> (Vec<EdgeId>, Vec<Vertex>) {
    let in_pair = |e: EdgeId| colors[e] == a || colors[e] == b;
    let mut seen_v = vec![false; g.n()];
    let mut seen_e = vec![false; g.edge_count()];
    let mut stack = vec![v];
    let mut verts = vec![v];
    seen_v[v] = true;
    let mut edges = Vec::new();
    while let Some(x) = stack.pop() {
        for &(y, e) in g.incident(x) {
            if !in_pair(e) || seen_e[e] {
                continue;
            }
            seen_e[e] = true;
            edges.push(e);
            if !seen_v[y] {
                seen_v[y] = true;
                verts.push(y);
                stack.push(y);
            }
        }
    }
    edges.sort_unstable();
    (edges, verts)
}

pub(crate) fn pair_connected(g: &Graph, colors: &[usize], a: usize, b: usize, u: Vertex, v: Vertex) -> bool {
    u == v || pair_component_with_vertices(g, colors, a, b, u).1.contains(&v)
}

pub(crate) fn swap_edges(colors: &mut [usize], edges: &[EdgeId], a: usize, b: usize) {
    for &e in edges {
        if colors[e] == a {
            colors[e] = b;
        } else if colors[e] == b {
            colors[e] = a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_1122() -> (Graph, EdgeColoring) {
        (Graph::cycle(4), EdgeColoring::new(2, vec![1, 1, 2, 2]))
    }

    #[test]
    fn predicate_examples() {
        assert!(is_locally_irregular(&Graph::path(2)));
        assert!(!is_locally_irregular(&Graph::path(1)));
        assert!(is_locally_irregular(&Graph::star(3)));
        assert!(!is_locally_irregular(&Graph::cycle(4)));
        assert!(is_locally_irregular(&Graph::empty(3)));
    }

    #[test]
    fn verification_examples() {
        let (g, c) = c4_1122();
        assert!(verify_coloring(&g, &c).unwrap().valid);
        let mono = EdgeColoring::new(1, vec![1; 4]);
        let report = verify_coloring(&g, &mono).unwrap();
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 4);
        assert!(verify_coloring(&Graph::star(3), &EdgeColoring::new(1, vec![1; 3])).unwrap().valid);
        assert_eq!(
            verify_coloring(&g, &EdgeColoring::new(2, vec![1, 1, 2])),
            Err(ColoringError::Partial { expected: 4, found: 3 })
        );
        assert!(matches!(
            verify_coloring(&g, &EdgeColoring::new(2, vec![1, 1, 2, 0])),
            Err(ColoringError::ColorOutOfRange { edge: 3, .. })
        ));
    }

    #[test]
    fn violations_are_sorted_and_deduplicated() {
        let g = Graph::multigraph_from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let report = verify_coloring(&g, &EdgeColoring::new(1, vec![1, 1])).unwrap();
        assert_eq!(report.violations, vec![Violation { color: 1, u: 0, v: 1 }]);
    }

    #[test]
    fn color_class_examples() {
        let (g, c) = c4_1122();
        let class = color_class(&g, &c, 1).unwrap();
        assert_eq!((class.n(), class.edge_count()), (3, 2));
        assert_eq!(color_class(&g, &c, 3).unwrap().n(), 0);
        let star = Graph::star(3);
        let all = color_class(&star, &EdgeColoring::new(1, vec![1; 3]), 1).unwrap();
        assert!(all.same_structure(&star));
    }

    #[test]
    fn components_and_swaps() {
        let (g, c) = c4_1122();
        let comp = kempe_component(&g, &c, 1, 2, 0).unwrap();
        assert_eq!(comp.edges, vec![0, 1, 2, 3]);
        assert!(kempe_component(&g, &c, 3, 4, 0).unwrap().edges.is_empty());
        assert_eq!(kempe_component(&g, &c, 2, 2, 0), Err(ColoringError::SameColors));
        let swapped = swap(&g, &c, &comp).unwrap();
        assert_eq!(swapped.colors, vec![2, 2, 1, 1]);
        let back = swap(&g, &swapped, &kempe_component(&g, &swapped, 1, 2, 0).unwrap()).unwrap();
        assert_eq!(back, c);
        let other = EdgeColoring::new(3, vec![3, 1, 2, 2]);
        assert_eq!(swap(&g, &other, &comp), Err(ColoringError::StaleComponent(0)));
    }

    #[test]
    fn two_triangles_stay_separate() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c = EdgeColoring::new(2, vec![1, 2, 1, 2, 1, 2]);
        assert_eq!(kempe_component(&g, &c, 1, 2, 0).unwrap().edges, vec![0, 1, 2]);
    }

    #[test]
    fn path_queries() {
        let (g, c) = c4_1122();
        assert!(has_ab_path(&g, &c, 1, 2, 0, 2).unwrap());
        // Color 2 forms the path 2-3-0; colors {1, 3} join 0-1-2 only.
        assert!(!has_ab_path(&g, &c, 1, 3, 0, 3).unwrap());
        assert!(has_ab_path(&g, &c, 1, 3, 0, 2).unwrap());
        assert!(has_ab_path(&g, &c, 3, 4, 1, 1).unwrap());
    }
}
