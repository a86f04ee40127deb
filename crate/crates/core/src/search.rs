//! Backtracking engine shared by every exact search in the crate.
//!
//! A problem is a set of *units* (groups of edges forced to share one color)
//! over a host graph. Single edges give plain colorings, decomposition
//! elements give element-uniform colorings, and vertex bundles give the
//! monochromatic-star constraint. Edges outside every unit are ignored.
//!
//! Constraints are checked when a vertex becomes *complete* (all of its
//! problem edges colored), because only then are its per-color degrees final:
//!
//! * local irregularity: no edge of color `c` between two complete vertices of
//!   equal `c`-degree;
//! * parity: every color present at `v` appears an even or odd number of
//!   times according to `signature[v]`;
//! * `must_differ`: listed unit pairs never share a color.
//!
//! Without fixed colors, a new color may only open as `max_used + 1`, which
//! removes the `k!` relabelings of each coloring.

use std::collections::VecDeque;

use crate::graph::{EdgeId, Graph, Vertex};

/// Order in which units are branched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchOrder {
    /// Units sorted by the BFS position of their last vertex, so vertices
    /// complete early and constraints fire near the top of the tree.
    #[default]
    Bfs,
    /// Units by decreasing sum of endpoint degrees, ties by unit index.
    DegreeSum,
}

#[derive(Debug, Clone)]
pub(crate) struct Problem<'a> {
    pub g: &'a Graph,
    pub units: Vec<Vec<EdgeId>>,
    pub k: usize,
    pub irregular: bool,
    pub signature: Option<&'a [u8]>,
    pub must_differ: Vec<Vec<usize>>,
    pub fixed: Vec<Option<usize>>,
    pub order: BranchOrder,
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Color per unit.
    Found(Vec<usize>),
    Exhausted,
    Budget,
}

impl<'a> Problem<'a> {
    pub fn new(g: &'a Graph, units: Vec<Vec<EdgeId>>, k: usize) -> Self {
        let m = units.len();
        Problem {
            g,
            units,
            k,
            irregular: true,
            signature: None,
            must_differ: vec![Vec::new(); m],
            fixed: vec![None; m],
            order: BranchOrder::default(),
            budget: None,
        }
    }

    pub fn single_edges(g: &'a Graph, k: usize) -> Self {
        Self::new(g, (0..g.edge_count()).map(|e| vec![e]).collect(), k)
    }

    pub fn forbid_same(&mut self, a: usize, b: usize) {
        self.must_differ[a].push(b);
        self.must_differ[b].push(a);
    }

    /// Runs the search; returns the outcome and the number of nodes visited.
    pub fn solve(&self) -> (Outcome, u64) {
        let mut s = State::new(self);
        for (u, fixed) in self.fixed.iter().enumerate() {
            if let Some(c) = *fixed {
                if c == 0 || c > self.k || !s.assign(u, c) {
                    return (Outcome::Exhausted, 0);
                }
            }
        }
        let free: Vec<usize> = self
            .branch_order()
            .into_iter()
            .filter(|&u| self.fixed[u].is_none())
            .collect();
        let symmetric = self.fixed.iter().all(Option::is_none);
        let result = s.dfs(&free, 0, symmetric, 0);
        let nodes = s.nodes;
        match result {
            Ok(true) => (Outcome::Found(s.unit_color), nodes),
            Ok(false) => (Outcome::Exhausted, nodes),
            Err(()) => (Outcome::Budget, nodes),
        }
    }

    fn unit_vertices(&self, u: usize) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.units[u]
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.g.endpoints(e);
                [a, b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn branch_order(&self) -> Vec<usize> {
        let m = self.units.len();
        let mut idx: Vec<usize> = (0..m).collect();
        match self.order {
            BranchOrder::DegreeSum => {
                let key = |u: usize| -> usize {
                    self.units[u]
                        .iter()
                        .map(|&e| {
                            let (a, b) = self.g.endpoints(e);
                            self.g.degree(a) + self.g.degree(b)
                        })
                        .sum::<usize>()
                        / self.units[u].len().max(1)
                };
                idx.sort_by_key(|&u| (std::cmp::Reverse(key(u)), u));
            }
            BranchOrder::Bfs => {
                let rank = self.bfs_rank();
                let keys: Vec<(usize, usize)> = (0..m)
                    .map(|u| {
                        let vs = self.unit_vertices(u);
                        let hi = vs.iter().map(|&v| rank[v]).max().unwrap_or(0);
                        let lo = vs.iter().map(|&v| rank[v]).min().unwrap_or(0);
                        (hi, lo)
                    })
                    .collect();
                idx.sort_by_key(|&u| (keys[u], u));
            }
        }
        idx
    }

    /// BFS positions over problem edges, each component started from its
    /// highest-degree vertex (lowest id on ties).
    fn bfs_rank(&self) -> Vec<usize> {
        let n = self.g.n();
        let mut in_problem = vec![false; self.g.edge_count()];
        for unit in &self.units {
            for &e in unit {
                in_problem[e] = true;
            }
        }
        let deg: Vec<usize> = (0..n)
            .map(|v| self.g.incident(v).iter().filter(|&&(_, e)| in_problem[e]).count())
            .collect();
        let mut starts: Vec<Vertex> = (0..n).collect();
        starts.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
        let mut rank = vec![usize::MAX; n];
        let mut next = 0;
        for s in starts {
            if rank[s] != usize::MAX {
                continue;
            }
            rank[s] = next;
            next += 1;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in self.g.incident(v) {
                    if in_problem[e] && rank[w] == usize::MAX {
                        rank[w] = next;
                        next += 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        rank
    }
}

struct State<'p, 'a> {
    p: &'p Problem<'a>,
    stride: usize,
    cdeg: Vec<u32>,
    rem: Vec<u32>,
    in_problem: Vec<bool>,
    edge_color: Vec<usize>,
    unit_color: Vec<usize>,
    nodes: u64,
}

impl<'p, 'a> State<'p, 'a> {
    fn new(p: &'p Problem<'a>) -> Self {
        let n = p.g.n();
        let stride = p.k + 1;
        let mut rem = vec![0u32; n];
        let mut in_problem = vec![false; p.g.edge_count()];
        for unit in &p.units {
            for &e in unit {
                in_problem[e] = true;
                let (a, b) = p.g.endpoints(e);
                rem[a] += 1;
                rem[b] += 1;
            }
        }
        State {
            p,
            stride,
            cdeg: vec![0; n * stride],
            rem,
            in_problem,
            edge_color: vec![0; p.g.edge_count()],
            unit_color: vec![0; p.units.len()],
            nodes: 0,
        }
    }

    fn dfs(&mut self, order: &[usize], pos: usize, symmetric: bool, max_used: usize) -> Result<bool, ()> {
        if pos == order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if let Some(b) = self.p.budget {
            if self.nodes > b {
                return Err(());
            }
        }
        let u = order[pos];
        let top = if symmetric {
            (max_used + 1).min(self.p.k)
        } else {
            self.p.k
        };
        for c in 1..=top {
            if self.p.must_differ[u].iter().any(|&q| self.unit_color[q] == c) {
                continue;
            }
            let ok = self.assign(u, c);
            if ok && self.dfs(order, pos + 1, symmetric, max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(u);
        }
        Ok(false)
    }

    /// Colors unit `u` with `c`; false if a newly completed vertex breaks a
    /// constraint. The unit stays colored either way; call `unassign` to undo.
    fn assign(&mut self, u: usize, c: usize) -> bool {
        self.unit_color[u] = c;
        let mut ok = true;
        for i in 0..self.p.units[u].len() {
            let e = self.p.units[u][i];
            self.edge_color[e] = c;
            let (a, b) = self.p.g.endpoints(e);
            for v in [a, b] {
                self.cdeg[v * self.stride + c] += 1;
                self.rem[v] -= 1;
            }
        }
        for i in 0..self.p.units[u].len() {
            let (a, b) = self.p.g.endpoints(self.p.units[u][i]);
            for v in [a, b] {
                if ok && self.rem[v] == 0 && !self.vertex_ok(v) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, u: usize) {
        let c = self.unit_color[u];
        for &e in &self.p.units[u] {
            self.edge_color[e] = 0;
            let (a, b) = self.p.g.endpoints(e);
            for v in [a, b] {
                self.cdeg[v * self.stride + c] -= 1;
                self.rem[v] += 1;
            }
        }
        self.unit_color[u] = 0;
    }

    fn vertex_ok(&self, v: Vertex) -> bool {
        let s = self.stride;
        if let Some(sig) = self.p.signature {
            let want = u32::from(sig[v]);
            if (1..s).any(|c| {
                let d = self.cdeg[v * s + c];
                d > 0 && d % 2 != want
            }) {
                return false;
            }
        }
        if self.p.irregular {
            for &(w, e) in self.p.g.incident(v) {
                if !self.in_problem[e] || self.rem[w] != 0 {
                    continue;
                }
                let c = self.edge_color[e];
                if self.cdeg[v * s + c] == self.cdeg[w * s + c] {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irregularity::{verify_coloring, EdgeColoring};

    fn find(p: &Problem) -> Option<Vec<usize>> {
        match p.solve().0 {
            Outcome::Found(c) => Some(c),
            _ => None,
        }
    }

    #[test]
    fn c4_needs_two_colors() {
        let g = Graph::cycle(4);
        assert_eq!(find(&Problem::single_edges(&g, 1)), None);
        let c = find(&Problem::single_edges(&g, 2)).unwrap();
        assert!(verify_coloring(&g, &EdgeColoring::new(2, c)).unwrap().valid);
    }

    #[test]
    fn both_orders_agree_on_c6() {
        let g = Graph::cycle(6);
        for order in [BranchOrder::Bfs, BranchOrder::DegreeSum] {
            let mut p = Problem::single_edges(&g, 2);
            p.order = order;
            assert_eq!(p.solve().0, Outcome::Exhausted);
            p.k = 3;
            assert!(matches!(p.solve().0, Outcome::Found(_)));
        }
    }

    #[test]
    fn fixed_colors_are_respected() {
        let g = Graph::cycle(4);
        let mut p = Problem::single_edges(&g, 2);
        p.fixed[0] = Some(2);
        let c = find(&p).unwrap();
        assert_eq!(c[0], 2);
        // Opposite edges sharing a color force two matchings.
        p.fixed[2] = Some(2);
        assert_eq!(find(&p), None);
    }

    #[test]
    fn proper_mode_via_must_differ() {
        let g = Graph::star(3);
        let mut p = Problem::single_edges(&g, 2);
        p.irregular = false;
        for a in 0..3 {
            for b in a + 1..3 {
                p.forbid_same(a, b);
            }
        }
        assert_eq!(find(&p), None);
        p.k = 3;
        assert!(find(&p).is_some());
    }

    #[test]
    fn parity_mode() {
        let g = Graph::star(3);
        let sig = [1u8, 1, 1, 1];
        let mut p = Problem::single_edges(&g, 1);
        p.irregular = false;
        p.signature = Some(&sig);
        assert_eq!(find(&p), Some(vec![1, 1, 1]));
        let even = [0u8, 1, 1, 1];
        p.signature = Some(&even);
        p.k = 3;
        assert_eq!(find(&p), None);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::cycle(14);
        let mut p = Problem::single_edges(&g, 2);
        p.budget = Some(3);
        assert_eq!(p.solve().0, Outcome::Budget);
    }
}
