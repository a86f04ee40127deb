//! Edge-decompositions into 2-paths, claws `K_{1,3}`, and subdivided claws
//! `K_{1,3}''` (the claw with two of its edges subdivided once).
//!
//! A decomposition is *pertinent* when every component consists of 2-paths
//! plus at most one claw-type element, and *strongly pertinent* when, in
//! addition, a subdivided claw is only used in a component that has no
//! pertinent decomposition with a plain claw.
//!
//! Vertices of degree 1 inside an element are its *pendant* vertices; the
//! rest are *central* (one for a 2-path or claw, three for a subdivided claw).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    TwoPath,
    Claw,
    SubdividedClaw,
}

impl ElementKind {
    pub fn edge_count(self) -> usize {
        match self {
            ElementKind::TwoPath => 2,
            ElementKind::Claw => 3,
            ElementKind::SubdividedClaw => 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub kind: ElementKind,
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Sorted central vertices.
    pub central: Vec<Vertex>,
    /// Sorted pendant vertices.
    pub pendant: Vec<Vertex>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("component with edges {edges:?} has an odd number of edges")]
    OddComponent { edges: Vec<EdgeId> },
    #[error("decompositions are defined for simple graphs only")]
    Multigraph,
    #[error("edges {edges:?} do not form a 2-path, claw, or subdivided claw")]
    BadShape { edges: Vec<EdgeId> },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("declared kind {declared:?} but the edges form {found:?}")]
    KindMismatch { declared: ElementKind, found: ElementKind },
    #[error("component with edges {edges:?} has no pertinent decomposition")]
    NotDecomposable { edges: Vec<EdgeId> },
    #[error("element is not part of the decomposition")]
    ForeignElement,
    #[error("element is not a 2-path")]
    NotTwoPath,
    #[error("host graph has maximum degree {0}, expected at most 3")]
    NotSubcubic(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("invalid decomposition: {}", .0.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Failure>),
    #[error("malformed decomposition JSON: {0}")]
    Json(String),
}

impl Element {
    /// Infer the element shape and vertex roles from its edges.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Element, DecompositionError> {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(DecompositionError::UnknownEdge(e));
            }
        }
        let bad = || DecompositionError::BadShape { edges: edges.clone() };
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad());
        }
        let mut verts: Vec<Vertex> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        // An element is a tree, so it has exactly one more vertex than edges.
        if verts.len() != edges.len() + 1 {
            return Err(bad());
        }
        let local_deg = |v: Vertex| {
            edges
                .iter()
                .filter(|&&e| {
                    let (a, b) = g.endpoints(e);
                    a == v || b == v
                })
                .count()
        };
        let degs: Vec<usize> = verts.iter().map(|&v| local_deg(v)).collect();
        let central: Vec<Vertex> = verts.iter().zip(&degs).filter(|(_, &d)| d > 1).map(|(&v, _)| v).collect();
        let pendant: Vec<Vertex> = verts.iter().zip(&degs).filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
        let mut profile = degs.clone();
        profile.sort_unstable();
        let kind = match (edges.len(), profile.as_slice()) {
            (2, [1, 1, 2]) => ElementKind::TwoPath,
            (3, [1, 1, 1, 3]) => ElementKind::Claw,
            (5, [1, 1, 1, 2, 2, 3]) => {
                // Both degree-2 vertices must hang off the degree-3 vertex;
                // the spider with one leg of length 3 has the same degrees.
                let hub = verts[degs.iter().position(|&d| d == 3).expect("profile has a 3")];
                let twos: Vec<Vertex> = verts.iter().zip(&degs).filter(|(_, &d)| d == 2).map(|(&v, _)| v).collect();
                if twos.iter().all(|&y| edges.iter().any(|&e| g.endpoints(e) == (hub.min(y), hub.max(y)))) {
                    ElementKind::SubdividedClaw
                } else {
                    return Err(bad());
                }
            }
            _ => return Err(bad()),
        };
        // A tree with the right vertex count and degree profile could still be
        // disconnected only if it had a cycle, which rules out simple graphs
        // here; check connectivity anyway for multigraph hosts.
        if !edges_connected(g, &edges) {
            return Err(bad());
        }
        Ok(Element {
            kind,
            edges,
            central,
            pendant,
        })
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.central.iter().chain(&self.pendant).copied().collect();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.central.binary_search(&v).is_ok() || self.pendant.binary_search(&v).is_ok()
    }

    pub fn is_central(&self, v: Vertex) -> bool {
        self.central.binary_search(&v).is_ok()
    }

    pub fn is_pendant(&self, v: Vertex) -> bool {
        self.pendant.binary_search(&v).is_ok()
    }

    /// The center of a 2-path or claw; the degree-3 vertex of a subdivided claw.
    pub fn hub(&self, g: &Graph) -> Vertex {
        match self.kind {
            ElementKind::TwoPath | ElementKind::Claw => self.central[0],
            ElementKind::SubdividedClaw => *self
                .central
                .iter()
                .find(|&&v| self.edges.iter().filter(|&&e| incident(g, e, v)).count() == 3)
                .expect("subdivided claw has a degree-3 vertex"),
        }
    }
}

fn incident(g: &Graph, e: EdgeId, v: Vertex) -> bool {
    let (a, b) = g.endpoints(e);
    a == v || b == v
}

fn edges_connected(g: &Graph, edges: &[EdgeId]) -> bool {
    edge_subset_components(g, edges).len() <= 1
}

/// Connected components of an edge subset, each sorted, ordered by smallest edge.
pub(crate) fn edge_subset_components(g: &Graph, edges: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &e in edges {
        let (u, v) = g.endpoints(e);
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
        }
    }
    let mut groups: Vec<(usize, Vec<EdgeId>)> = Vec::new();
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for e in sorted {
        let root = find(&mut parent, g.endpoints(e).0);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, list)) => list.push(e),
            None => groups.push((root, vec![e])),
        }
    }
    groups.into_iter().map(|(_, l)| l).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub elements: Vec<Element>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    kind: ElementKind,
    edges: Vec<EdgeId>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    elements: Vec<ElementJson>,
}

impl Decomposition {
    pub fn from_edge_groups(g: &Graph, groups: &[Vec<EdgeId>]) -> Result<Self, DecompositionError> {
        let elements = groups.iter().map(|grp| Element::from_edges(g, grp)).collect::<Result<_, _>>()?;
        Ok(Decomposition { elements })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }

    /// `{"elements": [{"kind": ..., "edges": [...]}, ...]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let json = DecompositionJson {
            elements: self
                .elements
                .iter()
                .map(|el| ElementJson {
                    kind: el.kind,
                    edges: el.edges.clone(),
                })
                .collect(),
        };
        serde_json::to_value(&json).expect("decomposition serializes")
    }

    /// Parse the JSON form; element roles are recomputed from the host graph.
    pub fn from_json_str(g: &Graph, text: &str) -> Result<Self, DecompositionError> {
        let json: DecompositionJson =
            serde_json::from_str(text).map_err(|e| DecompositionError::Json(e.to_string()))?;
        let mut elements = Vec::with_capacity(json.elements.len());
        for el in json.elements {
            let parsed = Element::from_edges(g, &el.edges)?;
            if parsed.kind != el.kind {
                return Err(DecompositionError::KindMismatch {
                    declared: el.kind,
                    found: parsed.kind,
                });
            }
            elements.push(parsed);
        }
        Ok(Decomposition { elements })
    }

    /// Numbers of 2-paths, claws, and subdivided claws.
    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |k| self.elements.iter().filter(|el| el.kind == k).count();
        (
            count(ElementKind::TwoPath),
            count(ElementKind::Claw),
            count(ElementKind::SubdividedClaw),
        )
    }

    /// Pairs `(i, j)`, `i < j`, of elements sharing a vertex that is pendant
    /// in both. Giving such a pair one color is exactly what the
    /// central-vertex condition on same-colored incident elements forbids.
    pub fn pendant_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                if a.pendant.iter().any(|&v| b.is_pendant(v)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Element index containing each edge.
    pub fn owner(&self, edge_count: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; edge_count];
        for (i, el) in self.elements.iter().enumerate() {
            for &e in &el.edges {
                if e < edge_count {
                    owner[e] = i;
                }
            }
        }
        owner
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Any,
    Pertinent,
    StronglyPertinent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum Failure {
    UnknownEdge { element: usize, edge: EdgeId },
    DuplicateEdge { edge: EdgeId },
    UncoveredEdge { edge: EdgeId },
    BadShape { element: usize },
    TooManyClawTypes { component: usize, count: usize },
    AvoidableSubdividedClaw { component: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::UnknownEdge { element, edge } => write!(f, "element {element} uses unknown edge {edge}"),
            Failure::DuplicateEdge { edge } => write!(f, "edge {edge} is covered twice"),
            Failure::UncoveredEdge { edge } => write!(f, "edge {edge} is not covered"),
            Failure::BadShape { element } => write!(f, "element {element} has an invalid shape"),
            Failure::TooManyClawTypes { component, count } => {
                write!(f, "component {component} has {count} claw-type elements")
            }
            Failure::AvoidableSubdividedClaw { component } => {
                write!(f, "component {component} uses a subdivided claw although a claw suffices")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub valid: bool,
    pub failures: Vec<Failure>,
}

pub fn validate_decomposition(g: &Graph, d: &Decomposition, mode: Mode) -> DecompositionReport {
    let mut failures = Vec::new();
    let mut cover = vec![0usize; g.edge_count()];
    for (i, el) in d.elements.iter().enumerate() {
        let mut known = true;
        for &e in &el.edges {
            if e >= g.edge_count() {
                failures.push(Failure::UnknownEdge { element: i, edge: e });
                known = false;
            } else {
                cover[e] += 1;
            }
        }
        if known {
            match Element::from_edges(g, &el.edges) {
                Ok(parsed) if parsed == *el => {}
                _ => failures.push(Failure::BadShape { element: i }),
            }
        }
    }
    for (e, &c) in cover.iter().enumerate() {
        match c {
            0 => failures.push(Failure::UncoveredEdge { edge: e }),
            1 => {}
            _ => failures.push(Failure::DuplicateEdge { edge: e }),
        }
    }
    if mode != Mode::Any && failures.is_empty() {
        let comp = g.component_ids();
        let n_comp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut claws: Vec<Vec<usize>> = vec![Vec::new(); n_comp];
        for (i, el) in d.elements.iter().enumerate() {
            if el.kind != ElementKind::TwoPath {
                claws[comp[el.central[0]]].push(i);
            }
        }
        for (c, list) in claws.iter().enumerate() {
            if list.len() > 1 {
                failures.push(Failure::TooManyClawTypes {
                    component: c,
                    count: list.len(),
                });
            }
        }
        if mode == Mode::StronglyPertinent {
            for edges in g.edge_components() {
                let c = comp[g.endpoints(edges[0]).0];
                let uses_subdivided = claws[c].iter().any(|&i| d.elements[i].kind == ElementKind::SubdividedClaw);
                if uses_subdivided && find_claw_placement(g, &edges).is_some() {
                    failures.push(Failure::AvoidableSubdividedClaw { component: c });
                }
            }
        }
    }
    DecompositionReport {
        valid: failures.is_empty(),
        failures,
    }
}

/// Decompose every component into 2-paths by pairing edges along a BFS tree.
pub fn two_path_decomposition(g: &Graph) -> Result<Decomposition, DecompositionError> {
    if g.has_parallel_edges() {
        return Err(DecompositionError::Multigraph);
    }
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let pairs = pair_two_paths(g, &all)?;
    Decomposition::from_edge_groups(g, &pairs.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
}

/// Pair the edges of a subset into 2-paths. Each component of the subset is
/// handled by rooting a BFS tree at its smallest vertex; non-tree edges are
/// owned by their later endpoint, and vertices are processed in reverse BFS
/// order, pairing what they own and passing the tree edge to their parent
/// when the count is even (or keeping it to fix an odd count).
pub(crate) fn pair_two_paths(g: &Graph, edges: &[EdgeId]) -> Result<Vec<[EdgeId; 2]>, DecompositionError> {
    let mut in_set = vec![false; g.edge_count()];
    for &e in edges {
        in_set[e] = true;
    }
    let mut out = Vec::with_capacity(edges.len() / 2);
    for comp in edge_subset_components(g, edges) {
        if comp.len() % 2 == 1 {
            return Err(DecompositionError::OddComponent { edges: comp });
        }
        let root = comp
            .iter()
            .map(|&e| g.endpoints(e).0)
            .min()
            .expect("component is nonempty");
        let mut order = vec![root];
        let mut pos = vec![usize::MAX; g.n()];
        let mut parent_edge = vec![usize::MAX; g.n()];
        pos[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if in_set[e] && pos[w] == usize::MAX {
                    pos[w] = order.len();
                    order.push(w);
                    parent_edge[w] = e;
                    queue.push_back(w);
                }
            }
        }
        let mut pending: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
        for &e in &comp {
            let (u, v) = g.endpoints(e);
            if parent_edge[u] == e || parent_edge[v] == e {
                continue;
            }
            let later = if pos[u] > pos[v] { u } else { v };
            pending[later].push(e);
        }
        for &v in order.iter().rev() {
            let mut list = std::mem::take(&mut pending[v]);
            let up = parent_edge[v];
            if up != usize::MAX {
                if list.len() % 2 == 1 {
                    list.push(up);
                } else {
                    let p = g.other_end(up, v);
                    pending[p].push(up);
                }
            }
            debug_assert!(list.len() % 2 == 0, "parity is preserved up the tree");
            list.sort_unstable();
            for pair in list.chunks(2) {
                out.push([pair[0], pair[1]]);
            }
        }
    }
    Ok(out)
}

/// A claw-type placement inside one component: the claw's edges, such that
/// every remaining component has even size.
fn find_claw_placement(g: &Graph, comp: &[EdgeId]) -> Option<Vec<EdgeId>> {
    claw_placements(g, comp, ElementKind::Claw).into_iter().next()
}

fn residual_even(g: &Graph, comp: &[EdgeId], claw: &[EdgeId]) -> bool {
    let rest: Vec<EdgeId> = comp.iter().copied().filter(|e| !claw.contains(e)).collect();
    edge_subset_components(g, &rest).iter().all(|c| c.len() % 2 == 0)
}

/// All feasible placements of one kind, in ascending (hub, leaves) order.
fn claw_placements(g: &Graph, comp: &[EdgeId], kind: ElementKind) -> Vec<Vec<EdgeId>> {
    let set: BTreeSet<EdgeId> = comp.iter().copied().collect();
    let mut verts: Vec<Vertex> = comp
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.endpoints(e);
            [u, v]
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: Vertex| -> Vec<(Vertex, EdgeId)> {
        g.incident(v).iter().copied().filter(|(_, e)| set.contains(e)).collect()
    };
    let mut out = Vec::new();
    for &x in &verts {
        let nb = local(x);
        if nb.len() < 3 {
            continue;
        }
        match kind {
            ElementKind::Claw => {
                for i in 0..nb.len() {
                    for j in i + 1..nb.len() {
                        for k in j + 1..nb.len() {
                            let claw = vec![nb[i].1, nb[j].1, nb[k].1];
                            if residual_even(g, comp, &claw) {
                                let mut c = claw;
                                c.sort_unstable();
                                out.push(c);
                            }
                        }
                    }
                }
            }
            ElementKind::SubdividedClaw => {
                for &(a, ea) in &nb {
                    for &(y2, e2) in &nb {
                        for &(y3, e3) in &nb {
                            if y2 >= y3 || y2 == a || y3 == a {
                                continue;
                            }
                            for &(z2, f2) in &local(y2) {
                                if [x, a, y3].contains(&z2) {
                                    continue;
                                }
                                for &(z3, f3) in &local(y3) {
                                    if [x, a, y2, z2].contains(&z3) {
                                        continue;
                                    }
                                    let mut claw = vec![ea, e2, e3, f2, f3];
                                    if residual_even(g, comp, &claw) {
                                        claw.sort_unstable();
                                        out.push(claw);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            ElementKind::TwoPath => unreachable!("2-paths are not claw placements"),
        }
    }
    out
}

/// Decompose an odd component: first feasible claw, else first feasible
/// subdivided claw, with the residual split into 2-paths.
fn odd_component(g: &Graph, comp: &[EdgeId]) -> Result<Vec<Vec<EdgeId>>, DecompositionError> {
    let claw = claw_placements(g, comp, ElementKind::Claw)
        .into_iter()
        .next()
        .or_else(|| claw_placements(g, comp, ElementKind::SubdividedClaw).into_iter().next())
        .ok_or_else(|| DecompositionError::NotDecomposable { edges: comp.to_vec() })?;
    let rest: Vec<EdgeId> = comp.iter().copied().filter(|e| !claw.contains(e)).collect();
    let mut groups = vec![claw];
    groups.extend(pair_two_paths(g, &rest)?.iter().map(|p| p.to_vec()));
    Ok(groups)
}

/// A pertinent decomposition: 2-paths everywhere, plus one claw-type element
/// in each odd component.
pub fn pertinent_decomposition(g: &Graph) -> Result<Decomposition, DecompositionError> {
    if g.has_parallel_edges() {
        return Err(DecompositionError::Multigraph);
    }
    let mut groups = Vec::new();
    for comp in g.edge_components() {
        if comp.len() % 2 == 0 {
            groups.extend(pair_two_paths(g, &comp)?.iter().map(|p| p.to_vec()));
        } else {
            groups.extend(odd_component(g, &comp)?);
        }
    }
    Decomposition::from_edge_groups(g, &groups)
}

/// Pertinent, and a subdivided claw appears only where no plain claw fits.
/// Because every claw placement is tried before any subdivided one, the
/// pertinent builder already has this property; it is re-checked here.
pub fn strongly_pertinent_decomposition(g: &Graph) -> Result<Decomposition, DecompositionError> {
    let d = pertinent_decomposition(g)?;
    let report = validate_decomposition(g, &d, Mode::StronglyPertinent);
    if !report.valid {
        return Err(DecompositionError::Invalid(report.failures));
    }
    Ok(d)
}

/// Distinct elements sharing a vertex with `el`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflicts {
    pub count: usize,
    pub incident: Vec<usize>,
}

pub fn conflicts(d: &Decomposition, el: &Element) -> Result<Conflicts, DecompositionError> {
    let me = d
        .elements
        .iter()
        .position(|x| x == el)
        .ok_or(DecompositionError::ForeignElement)?;
    let incident: Vec<usize> = d
        .elements
        .iter()
        .enumerate()
        .filter(|&(i, other)| i != me && other.vertices().iter().any(|&v| el.contains(v)))
        .map(|(i, _)| i)
        .collect();
    Ok(Conflicts {
        count: incident.len(),
        incident,
    })
}

/// Neighborhood type of a 2-path in a subcubic host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwoPathType {
    /// A pendant vertex is central for another element.
    A,
    /// The center is shared with another element (where it is pendant).
    B,
    /// Every shared vertex is pendant for all elements involved.
    C,
}

pub fn classify_two_path(g: &Graph, d: &Decomposition, p: &Element) -> Result<TwoPathType, DecompositionError> {
    if g.max_degree() > 3 {
        return Err(DecompositionError::NotSubcubic(g.max_degree()));
    }
    if p.kind != ElementKind::TwoPath {
        return Err(DecompositionError::NotTwoPath);
    }
    if !d.elements.contains(p) {
        return Err(DecompositionError::ForeignElement);
    }
    let others = || d.elements.iter().filter(|x| *x != p);
    if p.pendant.iter().any(|&v| others().any(|q| q.is_central(v))) {
        return Ok(TwoPathType::A);
    }
    if others().any(|q| q.contains(p.central[0])) {
        return Ok(TwoPathType::B);
    }
    Ok(TwoPathType::C)
}

/// Calls `f` on every 2-path decomposition of `g` until it returns false.
/// Returns the number of decompositions visited.
pub fn for_each_two_path_decomposition(g: &Graph, mut f: impl FnMut(&Decomposition) -> bool) -> usize {
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut pairs = Vec::new();
    let mut covered = vec![false; g.edge_count()];
    let mut visited = 0;
    enumerate_pairs(g, &all, &mut covered, &mut pairs, &mut visited, &mut |pairs| {
        let groups: Vec<Vec<EdgeId>> = pairs.iter().map(|p: &[EdgeId; 2]| p.to_vec()).collect();
        let d = Decomposition::from_edge_groups(g, &groups).expect("pairs are 2-paths");
        f(&d)
    });
    visited
}

fn enumerate_pairs(
    g: &Graph,
    edges: &[EdgeId],
    covered: &mut Vec<bool>,
    pairs: &mut Vec<[EdgeId; 2]>,
    visited: &mut usize,
    f: &mut dyn FnMut(&[[EdgeId; 2]]) -> bool,
) -> bool {
    let Some(&e) = edges.iter().find(|&&e| !covered[e]) else {
        *visited += 1;
        return f(pairs);
    };
    let (u, v) = g.endpoints(e);
    let mut partners: Vec<EdgeId> = [u, v]
        .iter()
        .flat_map(|&x| g.incident(x).iter().map(|&(_, f)| f))
        .filter(|&f| f != e && !covered[f] && edges.contains(&f))
        .filter(|&f| g.endpoints(f) != g.endpoints(e))
        .collect();
    partners.sort_unstable();
    partners.dedup();
    covered[e] = true;
    for f2 in partners {
        covered[f2] = true;
        let rest: Vec<EdgeId> = edges.iter().copied().filter(|&x| !covered[x]).collect();
        if edge_subset_components(g, &rest).iter().all(|c| c.len() % 2 == 0) {
            pairs.push([e.min(f2), e.max(f2)]);
            let go_on = enumerate_pairs(g, edges, covered, pairs, visited, f);
            pairs.pop();
            if !go_on {
                covered[f2] = false;
                covered[e] = false;
                return false;
            }
        }
        covered[f2] = false;
    }
    covered[e] = false;
    true
}

/// Calls `f` on every strongly pertinent decomposition of a connected graph
/// until it returns false. Returns the number visited.
pub fn for_each_strongly_pertinent_decomposition(
    g: &Graph,
    mut f: impl FnMut(&Decomposition) -> bool,
) -> Result<usize, DecompositionError> {
    if g.has_parallel_edges() {
        return Err(DecompositionError::Multigraph);
    }
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    if all.len() % 2 == 0 {
        return Ok(for_each_two_path_decomposition(g, f));
    }
    let mut placements = claw_placements(g, &all, ElementKind::Claw);
    if placements.is_empty() {
        placements = claw_placements(g, &all, ElementKind::SubdividedClaw);
    }
    if placements.is_empty() {
        return Err(DecompositionError::NotDecomposable { edges: all });
    }
    let mut visited = 0;
    for claw in placements {
        let rest: Vec<EdgeId> = all.iter().copied().filter(|e| !claw.contains(e)).collect();
        let mut covered = vec![false; g.edge_count()];
        let mut pairs = Vec::new();
        let go_on = enumerate_pairs(g, &rest, &mut covered, &mut pairs, &mut visited, &mut |pairs| {
            let mut groups = vec![claw.clone()];
            groups.extend(pairs.iter().map(|p| p.to_vec()));
            let d = Decomposition::from_edge_groups(g, &groups).expect("valid elements");
            f(&d)
        });
        if !go_on {
            break;
        }
    }
    Ok(visited)
}
