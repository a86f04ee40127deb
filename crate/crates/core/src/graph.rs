//! Undirected graphs and multigraphs with stable vertex and edge identities.
//!
//! Vertices are the dense ids `0..n`. Every edge carries an explicit id equal
//! to its position in the edge list, which is what lets colorings and
//! decompositions refer to edges of a multigraph unambiguously. Endpoints are
//! stored normalized as `(min, max)` and adjacency lists are kept sorted, so
//! every traversal in the crate is deterministic.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("parallel edge {0}-{1} in a simple graph")]
    ParallelEdge(Vertex, Vertex),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("subdivision count must be positive")]
    ZeroSubdivision,
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    multigraph: bool,
}

/// On-disk edge-list form: `{"n": int, "edges": [[u, v], ...], "multigraph": bool}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default)]
    pub multigraph: bool,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            multigraph: false,
        }
    }

    /// Simple graph; rejects loops and repeated endpoint pairs.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::build(n, edges, false)
    }

    /// Loopless multigraph; repeated endpoint pairs become parallel edges.
    pub fn multigraph_from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(Vertex, Vertex)], multigraph: bool) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !multigraph && !seen.insert(e) {
                return Err(GraphError::ParallelEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in normalized.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
            multigraph,
        })
    }

    pub fn cycle(m: usize) -> Self {
        assert!(m >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Self::from_edges(m, &edges).expect("cycle is simple")
    }

    /// Path with `m` edges (and `m + 1` vertices).
    pub fn path(m: usize) -> Self {
        let edges: Vec<_> = (0..m).map(|i| (i, i + 1)).collect();
        Self::from_edges(m + 1, &edges).expect("path is simple")
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Self::from_edges(k + 1, &edges).expect("star is simple")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete graph is simple")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("Petersen graph is simple")
    }

    /// The 3-dimensional cube on vertices `0..8`, `u ~ v` iff they differ in one bit.
    pub fn cube() -> Self {
        let mut edges = Vec::new();
        for u in 0..8usize {
            for bit in 0..3 {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        Self::from_edges(8, &edges).expect("cube is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident `(neighbor, edge)` pairs sorted by neighbor, then edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    /// True when some endpoint pair carries more than one edge.
    pub fn has_parallel_edges(&self) -> bool {
        self.adj
            .iter()
            .any(|list| list.windows(2).any(|w| w[0].0 == w[1].0))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let list = &self.adj[u];
        let i = list.partition_point(|&(w, _)| w < v);
        i < list.len() && list[i].0 == v
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Edge sets of the components that contain at least one edge.
    pub fn edge_components(&self) -> Vec<Vec<EdgeId>> {
        let mut out = Vec::new();
        for comp in self.components() {
            let mut es: Vec<EdgeId> = comp
                .iter()
                .flat_map(|&v| self.adj[v].iter().map(|&(_, e)| e))
                .collect();
            if es.is_empty() {
                continue;
            }
            es.sort_unstable();
            es.dedup();
            out.push(es);
        }
        out
    }

    /// Component index per vertex, following the order of [`Graph::components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut id = vec![0; self.n];
        for (i, comp) in self.components().into_iter().enumerate() {
            for v in comp {
                id[v] = i;
            }
        }
        id
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Proper 2-coloring of the vertices (side 0 holds the smallest vertex of
    /// each component), or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Same vertex count and the same multiset of endpoint pairs; edge ids may differ.
    pub fn same_structure(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Subgraph on the given edges with isolated vertices dropped. Vertices are
    /// renumbered in increasing order of their original ids; edges keep the
    /// order of `edge_ids`.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> Subgraph {
        let mut used: Vec<Vertex> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.edges[e];
                [u, v]
            })
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in used.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<_> = edge_ids
            .iter()
            .map(|&e| {
                let (u, v) = self.edges[e];
                (new_id[u], new_id[v])
            })
            .collect();
        let graph = Self::build(used.len(), &edges, self.multigraph).expect("subgraph of a valid graph");
        Subgraph {
            graph,
            vertex_map: used,
            edge_map: edge_ids.to_vec(),
        }
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`. Edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::build(self.n, &edges, self.multigraph).expect("relabeling preserves validity")
    }

    /// Copy of the graph with one extra vertex joined to `neighbors`.
    pub fn with_new_vertex(&self, neighbors: &[Vertex]) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend(neighbors.iter().map(|&u| (u, self.n)));
        Self::build(self.n + 1, &edges, self.multigraph)
    }

    /// Copy of the graph with one extra edge (and `extra_vertices` new isolated vertices first).
    pub fn with_new_edge(&self, extra_vertices: usize, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Self::build(self.n + extra_vertices, &edges, self.multigraph)
    }

    /// Same edges, marked as a multigraph.
    pub fn into_multigraph(mut self) -> Graph {
        self.multigraph = true;
        self
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            multigraph: self.multigraph,
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph, GraphError> {
        let edges: Vec<_> = json.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::build(json.n, &edges, json.multigraph)
    }

    pub fn from_json_str(text: &str) -> Result<Graph, GraphError> {
        let json: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph JSON serializes")
    }
}

/// An edge-induced subgraph together with the maps back to its host.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertex_map[new] = old`.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[new] = old`.
    pub edge_map: Vec<EdgeId>,
}

/// The fully subdivided graph: every edge `e = (u, v)` of `g` becomes the
/// path `u - (n + e) - v`, with edge ids `2e` for `u - (n + e)` and `2e + 1`
/// for `(n + e) - v`. Loopless multigraphs become simple graphs.
pub fn fully_subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((n + e, v));
    }
    Graph::from_edges(n + g.edge_count(), &edges).expect("subdivision of a loopless graph is simple")
}

/// Replace edge `e = (u, v)` by a path with `times` internal vertices. The first
/// path edge keeps id `e`; the remaining path edges are appended, and the new
/// vertices are `n, n + 1, ...` in order from `u` to `v`.
pub fn subdivide_edge(g: &Graph, e: EdgeId, times: usize) -> Result<Graph, GraphError> {
    if e >= g.edge_count() {
        return Err(GraphError::UnknownEdge(e));
    }
    if times == 0 {
        return Err(GraphError::ZeroSubdivision);
    }
    let n = g.n();
    let (u, v) = g.endpoints(e);
    let mut edges = g.edges().to_vec();
    edges[e] = (u, n);
    for i in 0..times - 1 {
        edges.push((n + i, n + i + 1));
    }
    edges.push((n + times - 1, v));
    Graph::build(n + times, &edges, g.is_multigraph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(0, 1))
        );
        let m = Graph::multigraph_from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(m.edge_count(), 2);
        assert!(m.has_parallel_edges());
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn subdividing_a_triangle_gives_a_hexagon() {
        let s = fully_subdivide(&Graph::cycle(3));
        assert_eq!((s.n(), s.edge_count()), (6, 6));
        assert!(s.degrees().iter().all(|&d| d == 2));
        assert!(s.is_connected() && s.is_bipartite());
    }

    #[test]
    fn subdividing_the_claw_gives_a_spider() {
        let s = fully_subdivide(&Graph::star(3));
        assert_eq!((s.n(), s.edge_count()), (7, 6));
        let mut degs = s.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn subdividing_k4() {
        let s = fully_subdivide(&Graph::complete(4));
        assert_eq!((s.n(), s.edge_count()), (10, 12));
        let degs = s.degrees();
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 4);
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 6);
        assert!(s.is_bipartite());
    }

    #[test]
    fn subdividing_a_multigraph_is_simple() {
        let m = Graph::multigraph_from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let s = fully_subdivide(&m);
        assert!(!s.has_parallel_edges());
        assert_eq!(s.edge_count(), 6);
        assert!(s.is_bipartite());
    }

    #[test]
    fn single_edge_subdivisions() {
        let k2 = Graph::path(1);
        let p3 = subdivide_edge(&k2, 0, 1).unwrap();
        assert_eq!((p3.n(), p3.edges()), (3, &[(0, 2), (1, 2)][..]));
        let p5 = subdivide_edge(&k2, 0, 3).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!(p5.max_degree(), 2);
        assert!(p5.is_connected());
        let c6 = subdivide_edge(&Graph::cycle(4), 2, 2).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2) && c6.is_connected());
        assert_eq!(subdivide_edge(&k2, 5, 1), Err(GraphError::UnknownEdge(5)));
        assert_eq!(subdivide_edge(&k2, 0, 0), Err(GraphError::ZeroSubdivision));
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::petersen();
        let back = Graph::from_json_str(&g.to_json_string()).unwrap();
        assert_eq!(g, back);
        let bad = Graph::from_json_str(r#"{"n": 2, "edges": [[0, 0]]}"#);
        assert_eq!(bad, Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn edge_subgraph_drops_isolated_vertices() {
        let g = Graph::cycle(4);
        let sub = g.edge_subgraph(&[0, 1]);
        assert_eq!(sub.graph.n(), 3);
        assert!(sub.graph.same_structure(&Graph::path(2)));
        assert_eq!(sub.vertex_map, vec![0, 1, 2]);
    }

    #[test]
    fn handshake_on_named_graphs() {
        for g in [Graph::petersen(), Graph::cube(), Graph::complete(5), Graph::star(4)] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
