//! Vertex-parity edge-colorings and the four-coloring of balanced bipartite
//! graphs built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, Graph, Vertex};
use crate::irregularity::EdgeColoring;
use crate::search::{Outcome, Problem};

use super::subdivided::color_fully_subdivided_2;
use super::ConstructiveError;

/// A graph with a 0/1 signature on its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityPair {
    pub graph: Graph,
    pub signature: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityViolation {
    SignatureLength { expected: usize, found: usize },
    NotBinary { vertex: Vertex, value: u8 },
    /// A 0-signed vertex of odd degree.
    OddZeroVertex { vertex: Vertex, degree: usize },
    /// A component with exactly one 1-signed vertex.
    LonelyOne { vertex: Vertex },
}

impl fmt::Display for ParityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityViolation::SignatureLength { expected, found } => {
                write!(f, "signature has {found} entries for {expected} vertices")
            }
            ParityViolation::NotBinary { vertex, value } => write!(f, "vertex {vertex} has signature {value}"),
            ParityViolation::OddZeroVertex { vertex, degree } => {
                write!(f, "vertex {vertex} has signature 0 but odd degree {degree}")
            }
            ParityViolation::LonelyOne { vertex } => {
                write!(f, "vertex {vertex} is the only 1-signed vertex of its component")
            }
        }
    }
}

impl ParityPair {
    pub fn new(graph: Graph, signature: Vec<u8>) -> Self {
        ParityPair { graph, signature }
    }

    /// Number of 1-signed vertices.
    pub fn ones(&self) -> usize {
        self.signature.iter().filter(|&&s| s == 1).count()
    }

    /// A pair is proper when 0-signed vertices have even degree and no
    /// component has exactly one 1-signed vertex.
    pub fn check(&self) -> Result<(), ParityViolation> {
        let g = &self.graph;
        if self.signature.len() != g.n() {
            return Err(ParityViolation::SignatureLength {
                expected: g.n(),
                found: self.signature.len(),
            });
        }
        for (v, &s) in self.signature.iter().enumerate() {
            if s > 1 {
                return Err(ParityViolation::NotBinary { vertex: v, value: s });
            }
            if s == 0 && g.degree(v) % 2 == 1 {
                return Err(ParityViolation::OddZeroVertex {
                    vertex: v,
                    degree: g.degree(v),
                });
            }
        }
        for comp in g.components() {
            let ones: Vec<Vertex> = comp.iter().copied().filter(|&v| self.signature[v] == 1).collect();
            if ones.len() == 1 {
                return Err(ParityViolation::LonelyOne { vertex: ones[0] });
            }
        }
        Ok(())
    }
}

/// Every color present at `v` appears an even number of times when
/// `signature[v] = 0` and an odd number of times when it is 1.
pub fn is_parity_coloring(p: &ParityPair, c: &EdgeColoring) -> bool {
    let g = &p.graph;
    if c.colors.len() != g.edge_count() || p.signature.len() != g.n() {
        return false;
    }
    (0..g.n()).all(|v| {
        let mut counts = vec![0usize; c.k + 1];
        for &(_, e) in g.incident(v) {
            match counts.get_mut(c.colors[e]) {
                Some(x) => *x += 1,
                None => return false,
            }
        }
        counts[1..].iter().all(|&x| x == 0 || x % 2 == usize::from(p.signature[v]))
    })
}

/// Fewest colors (at most `k_max`) of a vertex-parity edge-coloring.
pub fn vertex_parity_color(p: &ParityPair, k_max: usize) -> Result<EdgeColoring, ConstructiveError> {
    p.check().map_err(ConstructiveError::ImproperPair)?;
    let g = &p.graph;
    if g.edge_count() == 0 {
        return Ok(EdgeColoring::new(0, Vec::new()));
    }
    for k in 1..=k_max {
        let mut prob = Problem::single_edges(g, k);
        prob.irregular = false;
        prob.signature = Some(&p.signature);
        if let Outcome::Found(colors) = prob.solve().0 {
            return Ok(EdgeColoring::new(k, colors));
        }
    }
    Err(ConstructiveError::NoColoring { k_max })
}

/// Two sides of a bipartite graph, the first consisting of even-degree vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub even_side: Vec<Vertex>,
    pub other_side: Vec<Vertex>,
}

impl Bipartition {
    /// Some bipartition with an all-even side, preferring the side containing
    /// vertex 0 of each component; `None` when no such bipartition exists.
    pub fn balanced(g: &Graph) -> Option<Bipartition> {
        let side = g.bipartition()?;
        let mut even_side = Vec::new();
        let mut other_side = Vec::new();
        for comp in g.components() {
            let (a, b): (Vec<Vertex>, Vec<Vertex>) = comp.iter().partition(|&&v| side[v] == side[comp[0]]);
            let all_even = |s: &[Vertex]| s.iter().all(|&v| g.degree(v) % 2 == 0);
            if all_even(&a) {
                even_side.extend(a);
                other_side.extend(b);
            } else if all_even(&b) {
                even_side.extend(b);
                other_side.extend(a);
            } else {
                return None;
            }
        }
        even_side.sort_unstable();
        other_side.sort_unstable();
        Some(Bipartition { even_side, other_side })
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ConstructiveError> {
        let bad = |m: String| Err(ConstructiveError::InvalidBipartition(m));
        let mut side = vec![None; g.n()];
        for (s, list) in [(0u8, &self.even_side), (1u8, &self.other_side)] {
            for &v in list {
                if v >= g.n() {
                    return bad(format!("vertex {v} is not in the graph"));
                }
                if side[v].is_some() {
                    return bad(format!("vertex {v} is listed twice"));
                }
                side[v] = Some(s);
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return bad(format!("vertex {v} is on neither side"));
        }
        for &(u, v) in g.edges() {
            if side[u] == side[v] {
                return bad(format!("edge {u}-{v} lies inside one side"));
            }
        }
        for &v in &self.even_side {
            if g.degree(v) % 2 == 1 {
                return Err(ConstructiveError::NotBalanced {
                    vertex: v,
                    degree: g.degree(v),
                });
            }
        }
        Ok(())
    }
}

/// At most four colors for a connected balanced bipartite graph.
///
/// With `|N| ≠ 3` (`N` the possibly-odd side), a vertex-parity coloring with
/// signature 0 on the even side and 1 on `N` is locally irregular, because
/// every edge joins an even and an odd class degree. With `|N| = 3` every
/// even-side vertex has degree 2, so the graph is the full subdivision of a
/// multigraph on `N`; that multigraph is colored with two colors unless it
/// is a triangle, where the 6-cycle gets the run pattern `11 22 33`.
pub fn color_balanced_4(g: &Graph, b: &Bipartition) -> Result<EdgeColoring, ConstructiveError> {
    b.validate(g)?;
    if !g.is_connected() {
        return Err(ConstructiveError::NotConnected);
    }
    if g.edge_count() == 0 {
        return Ok(EdgeColoring::new(0, Vec::new()));
    }
    if b.other_side.len() != 3 {
        let mut signature = vec![0u8; g.n()];
        for &v in &b.other_side {
            signature[v] = 1;
        }
        return vertex_parity_color(&ParityPair::new(g.clone(), signature), 4);
    }
    let index = |v: Vertex| b.other_side.iter().position(|&w| w == v).expect("neighbor lies in N");
    // One multigraph edge per even-side vertex, remembering which graph edge
    // meets which endpoint.
    let mut base_edges = Vec::new();
    let mut halves: Vec<[(Vertex, EdgeId); 2]> = Vec::new();
    for &x in &b.even_side {
        let inc = g.incident(x);
        if inc.len() != 2 {
            return Err(ConstructiveError::ShapeMismatch(format!(
                "vertex {x} has degree {} but |N| = 3 forces degree 2",
                inc.len()
            )));
        }
        let (a, c) = (index(inc[0].0), index(inc[1].0));
        base_edges.push((a, c));
        halves.push([(a, inc[0].1), (c, inc[1].1)]);
    }
    let base = Graph::multigraph_from_edges(3, &base_edges).expect("base is loopless");
    let mut colors = vec![0; g.edge_count()];
    if base.edge_count() == 3 && base.degrees().iter().all(|&d| d == 2) {
        // The base is a triangle and g is a 6-cycle.
        for (e, c) in cycle_runs(g)? {
            colors[e] = c;
        }
        return Ok(EdgeColoring::new(3, colors));
    }
    let sub = color_fully_subdivided_2(&base)?;
    for (i, pair) in halves.iter().enumerate() {
        let (lo, _) = base.endpoints(i);
        for &(end, e) in pair {
            // Edge 2i of the subdivision meets the smaller endpoint.
            colors[e] = if end == lo { sub.colors[2 * i] } else { sub.colors[2 * i + 1] };
        }
    }
    Ok(EdgeColoring::new(sub.k, colors))
}

/// Colors for a cycle of length `4k + 2` in runs `(11 22)^k 33`.
fn cycle_runs(g: &Graph) -> Result<Vec<(EdgeId, usize)>, ConstructiveError> {
    let m = g.edge_count();
    if m % 4 != 2 || g.degrees().iter().any(|&d| d != 2) || !g.is_connected() {
        return Err(ConstructiveError::ShapeMismatch("expected a cycle of length 4k + 2".into()));
    }
    let mut out = Vec::with_capacity(m);
    let (mut v, mut prev) = (0, usize::MAX);
    for j in 0..m {
        let &(w, e) = g.incident(v).iter().find(|&&(_, e)| e != prev).expect("cycle vertex has two edges");
        let c = if j >= m - 2 { 3 } else { 1 + (j / 2) % 2 };
        out.push((e, c));
        prev = e;
        v = w;
    }
    Ok(out)
}
