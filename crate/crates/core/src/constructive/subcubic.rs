//! Four-coloring of subcubic graphs that is constant on the elements of a
//! strongly pertinent decomposition.
//!
//! Two properties are maintained throughout:
//!
//! * (i) every element is monochromatic;
//! * (ii) two incident elements of the same color meet only at a vertex that
//!   is central for one of them.
//!
//! The colorer is a recursion on the element set. A set with at most four
//! edges (or no 2-path) is colored directly. Otherwise a 2-path `p` is
//! removed, the rest colored, and `p` added back by the first rule that
//! applies:
//!
//! * at most three conflicts: `p` has a free color;
//! * a pendant vertex of `p` is central for `r`: free color, else recolor
//!   `p ∪ r` jointly after removing both, else borrow a neighbor's color,
//!   possibly after moving that neighbor to a color missing around it;
//! * the center of `p` is shared: recolorings, Kempe swaps at the vertices of
//!   `p`, and exchanges of two neighbors' colors, each followed by a free
//!   color;
//! * every 2-path touches others only at common pendant vertices: with no
//!   claw, color the graph on pendant vertices (one edge per 2-path)
//!   properly; with a claw, run the contraction endgame that leaves one claw
//!   edge uncolored and repairs it with swaps.
//!
//! A generic repair pass follows a failed rule. If that fails too, the set
//! is solved by exhaustive element-uniform search, and the number of such
//! fallbacks is reported. The final coloring is always verified.

use serde::{Deserialize, Serialize};

use crate::decomposition::{validate_decomposition, Decomposition, Element, ElementKind, Mode};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::irregularity::{pair_component, pair_connected, verify_coloring, violations, EdgeColoring};
use crate::search::{Outcome, Problem};

use super::proper::proper_edge_color;
use super::ConstructiveError;

const K: usize = 4;

/// One step of the construction, in the order applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    FreeColor { element: usize, color: usize },
    Recolor { element: usize, color: usize },
    Swap { a: usize, b: usize, vertex: Vertex },
    Exchange { first: usize, second: usize },
    PairRemoval { first: usize, second: usize },
    ProperColoring { elements: usize },
    Endgame { claw: usize },
    BaseCase { elements: usize },
    Fallback { elements: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubcubicColoring {
    pub coloring: EdgeColoring,
    /// Color of each element, in decomposition order.
    pub element_colors: Vec<usize>,
    pub trace: Vec<Rule>,
    /// Sets that needed the exhaustive search.
    pub fallbacks: usize,
}

/// Checks (i) and (ii) for a coloring of the host graph.
pub fn element_properties_hold(d: &Decomposition, c: &EdgeColoring) -> bool {
    let mut el_color = Vec::with_capacity(d.elements.len());
    for el in &d.elements {
        let Some(&first) = el.edges.first() else {
            return false;
        };
        let Some(&c0) = c.colors.get(first) else {
            return false;
        };
        if el.edges.iter().any(|&e| c.colors.get(e) != Some(&c0)) {
            return false;
        }
        el_color.push(c0);
    }
    for (i, a) in d.elements.iter().enumerate() {
        for (j, b) in d.elements.iter().enumerate().skip(i + 1) {
            if el_color[i] != el_color[j] {
                continue;
            }
            for v in a.vertices() {
                if b.contains(v) && !a.is_central(v) && !b.is_central(v) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn color_subcubic_4(g: &Graph, d: &Decomposition) -> Result<SubcubicColoring, ConstructiveError> {
    if g.has_parallel_edges() {
        return Err(ConstructiveError::Multigraph);
    }
    if g.max_degree() > 3 {
        return Err(ConstructiveError::NotSubcubic(g.max_degree()));
    }
    let report = validate_decomposition(g, d, Mode::StronglyPertinent);
    if !report.valid {
        return Err(ConstructiveError::NotStronglyPertinent(report.failures));
    }
    let mut ctx = Ctx::new(g, &d.elements);
    let all: Vec<usize> = (0..d.elements.len()).collect();
    if !ctx.solve(&all) {
        return Err(ConstructiveError::NoColoring { k_max: K });
    }
    ctx.activate(&all);
    let coloring = EdgeColoring::from_colors(ctx.edge_colors());
    let ok = verify_coloring(g, &coloring).map(|r| r.valid).unwrap_or(false) && element_properties_hold(d, &coloring);
    if !ok {
        return Err(ConstructiveError::NoColoring { k_max: K });
    }
    Ok(SubcubicColoring {
        coloring,
        element_colors: ctx.color,
        trace: ctx.trace,
        fallbacks: ctx.fallbacks,
    })
}

struct Ctx<'a> {
    g: &'a Graph,
    els: &'a [Element],
    /// Elements containing each vertex.
    at: Vec<Vec<usize>>,
    color: Vec<usize>,
    active: Vec<bool>,
    trace: Vec<Rule>,
    fallbacks: usize,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, els: &'a [Element]) -> Self {
        let mut at = vec![Vec::new(); g.n()];
        for (i, el) in els.iter().enumerate() {
            for v in el.vertices() {
                at[v].push(i);
            }
        }
        Ctx {
            g,
            els,
            at,
            color: vec![0; els.len()],
            active: vec![false; els.len()],
            trace: Vec::new(),
            fallbacks: 0,
        }
    }

    fn activate(&mut self, set: &[usize]) {
        self.active.fill(false);
        for &i in set {
            self.active[i] = true;
        }
    }

    /// Active elements sharing a vertex with `i`.
    fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for v in self.els[i].vertices() {
            for &j in &self.at[v] {
                if j != i && self.active[j] && !out.contains(&j) {
                    out.push(j);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn free_colors(&self, i: usize) -> Vec<usize> {
        let used: Vec<usize> = self.neighbors(i).iter().map(|&j| self.color[j]).collect();
        (1..=K).filter(|c| !used.contains(c)).collect()
    }

    fn edge_colors(&self) -> Vec<usize> {
        let mut ec = vec![0; self.g.edge_count()];
        for (i, el) in self.els.iter().enumerate() {
            if self.active[i] {
                for &e in &el.edges {
                    ec[e] = self.color[i];
                }
            }
        }
        ec
    }

    /// Local irregularity and (ii) over the colored active elements.
    fn valid_partial(&self) -> bool {
        if !violations(self.g, &self.edge_colors(), K).is_empty() {
            return false;
        }
        for v in 0..self.g.n() {
            let here: Vec<usize> = self.at[v]
                .iter()
                .copied()
                .filter(|&i| self.active[i] && self.color[i] != 0)
                .collect();
            for (x, &i) in here.iter().enumerate() {
                for &j in &here[x + 1..] {
                    if self.color[i] == self.color[j] && !self.els[i].is_central(v) && !self.els[j].is_central(v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn valid(&self) -> bool {
        (0..self.els.len()).all(|i| !self.active[i] || self.color[i] != 0) && self.valid_partial()
    }

    /// Runs `f`; on failure restores colors, active set, and trace.
    fn attempt(&mut self, f: impl FnOnce(&mut Self) -> bool) -> bool {
        let colors = self.color.clone();
        let active = self.active.clone();
        let len = self.trace.len();
        if f(self) {
            return true;
        }
        self.color = colors;
        self.active = active;
        self.trace.truncate(len);
        false
    }

    fn components(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.els.len()];
        let mut in_set = vec![false; self.els.len()];
        for &i in set {
            in_set[i] = true;
        }
        let mut out = Vec::new();
        for &s in set {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let i = members[k];
                k += 1;
                for v in self.els[i].vertices() {
                    for &j in &self.at[v] {
                        if in_set[j] && comp[j] == usize::MAX {
                            comp[j] = id;
                            members.push(j);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Exhaustive element-uniform search over `set` with (ii).
    fn search(&mut self, set: &[usize]) -> bool {
        let units: Vec<Vec<EdgeId>> = set.iter().map(|&i| self.els[i].edges.clone()).collect();
        for k in 1..=K {
            let mut p = Problem::new(self.g, units.clone(), k);
            for a in 0..set.len() {
                for b in a + 1..set.len() {
                    let (x, y) = (&self.els[set[a]], &self.els[set[b]]);
                    if x.pendant.iter().any(|&v| y.is_pendant(v)) {
                        p.forbid_same(a, b);
                    }
                }
            }
            if let Outcome::Found(cs) = p.solve().0 {
                for (&i, &c) in set.iter().zip(&cs) {
                    self.color[i] = c;
                }
                return true;
            }
        }
        false
    }

    fn fallback(&mut self, set: &[usize]) -> bool {
        self.activate(set);
        self.fallbacks += 1;
        self.trace.push(Rule::Fallback { elements: set.len() });
        self.search(set)
    }

    fn is_two_path(&self, i: usize) -> bool {
        self.els[i].kind == ElementKind::TwoPath
    }

    /// An active element for which a pendant vertex of `p` is central.
    fn central_partner(&self, p: usize) -> Option<usize> {
        self.els[p].pendant.iter().find_map(|&v| {
            self.at[v]
                .iter()
                .copied()
                .find(|&j| j != p && self.active[j] && self.els[j].is_central(v))
        })
    }

    fn center_shared(&self, p: usize) -> bool {
        self.at[self.els[p].central[0]].iter().any(|&j| j != p && self.active[j])
    }

    fn order_key(&self, i: usize) -> (bool, usize, Vertex, Vec<EdgeId>) {
        (
            !self.is_two_path(i),
            self.neighbors(i).len(),
            self.els[i].hub(self.g),
            self.els[i].edges.clone(),
        )
    }

    fn solve(&mut self, set: &[usize]) -> bool {
        for &i in set {
            self.color[i] = 0;
        }
        let comps = self.components(set);
        if comps.len() > 1 {
            return comps.iter().all(|c| self.solve(c));
        }
        self.activate(set);
        let edges: usize = set.iter().map(|&i| self.els[i].edges.len()).sum();
        if edges <= 4 || set.iter().all(|&i| !self.is_two_path(i)) {
            if self.search(set) {
                self.trace.push(Rule::BaseCase { elements: set.len() });
                return true;
            }
            return false;
        }
        let without = |p: usize| -> Vec<usize> { set.iter().copied().filter(|&i| i != p).collect() };

        let low = set
            .iter()
            .copied()
            .filter(|&i| self.neighbors(i).len() <= 3)
            .min_by_key(|&i| self.order_key(i));
        if let Some(p) = low {
            if self.solve(&without(p)) {
                self.activate(set);
                if self.attempt(|c| c.extend_free(p)) {
                    return true;
                }
            }
            return self.fallback(set);
        }

        let mut paths: Vec<usize> = set.iter().copied().filter(|&i| self.is_two_path(i)).collect();
        paths.sort_by_key(|&i| (self.els[i].central[0], self.els[i].edges.clone()));
        if let Some(&p) = paths.iter().find(|&&p| self.central_partner(p).is_some()) {
            if self.solve(&without(p)) {
                self.activate(set);
                if self.claim4_extend(p, set) || self.generic_repair(p) {
                    return true;
                }
            }
            return self.fallback(set);
        }
        if let Some(&p) = paths.iter().find(|&&p| self.center_shared(p)) {
            if self.solve(&without(p)) {
                self.activate(set);
                if self.type_b_extend(p) || self.try_every_color(p) {
                    return true;
                }
            }
            return self.fallback(set);
        }
        if paths.len() == set.len() {
            if self.attempt(|c| c.proper_pendant_coloring(set)) {
                return true;
            }
        } else if self.attempt(|c| c.endgame(set)) {
            return true;
        }
        self.fallback(set)
    }

    fn extend_free(&mut self, p: usize) -> bool {
        for c in self.free_colors(p) {
            self.color[p] = c;
            if self.valid() {
                self.trace.push(Rule::FreeColor { element: p, color: c });
                return true;
            }
        }
        self.color[p] = 0;
        false
    }

    fn set_color(&mut self, i: usize, c: usize) {
        self.color[i] = c;
        self.trace.push(Rule::Recolor { element: i, color: c });
    }

    /// Pendant vertex of `p` central for another element.
    fn claim4_extend(&mut self, p: usize, set: &[usize]) -> bool {
        if self.attempt(|c| c.extend_free(p)) {
            return true;
        }
        let r = self.central_partner(p);
        if let Some(r) = r.filter(|&r| self.is_two_path(r)) {
            if self.attempt(|c| c.pair_removal(p, r, set)) {
                return true;
            }
        }
        for q in self.neighbors(p) {
            if Some(q) == r || !self.is_two_path(q) {
                continue;
            }
            let cq = self.color[q];
            if self.attempt(|c| {
                c.set_color(p, cq);
                c.valid()
            }) {
                return true;
            }
            for nc in self.free_colors(q) {
                if nc == cq {
                    continue;
                }
                if self.attempt(|c| {
                    c.set_color(q, nc);
                    c.set_color(p, cq);
                    c.valid()
                }) {
                    return true;
                }
            }
        }
        false
    }

    /// Remove `p` and `r` together, color the rest, then `r` with a free
    /// color and `p` with a free color or the color of `r`.
    fn pair_removal(&mut self, p: usize, r: usize, set: &[usize]) -> bool {
        let rest: Vec<usize> = set.iter().copied().filter(|&i| i != p && i != r).collect();
        if !self.solve(&rest) {
            return false;
        }
        self.activate(set);
        self.color[p] = 0;
        self.color[r] = 0;
        for cr in self.free_colors(r) {
            self.color[r] = cr;
            let mut options = self.free_colors(p);
            options.push(cr);
            for cp in options {
                self.color[p] = cp;
                if self.valid() {
                    self.trace.push(Rule::PairRemoval { first: p, second: r });
                    return true;
                }
            }
            self.color[p] = 0;
        }
        false
    }

    /// Center of `p` shared with another element.
    fn type_b_extend(&mut self, p: usize) -> bool {
        self.attempt(|c| c.extend_free(p)) || self.repair_moves(p)
    }

    fn generic_repair(&mut self, p: usize) -> bool {
        self.try_every_color(p) || self.repair_moves(p)
    }

    fn try_every_color(&mut self, p: usize) -> bool {
        (1..=K).any(|col| {
            self.attempt(|c| {
                c.set_color(p, col);
                c.valid()
            })
        })
    }

    /// Swap colors `a` and `b` on the `{a, b}`-component at `y`.
    fn swap_at(&mut self, a: usize, b: usize, y: Vertex) -> bool {
        let owner = |e: EdgeId| self.els.iter().position(|el| el.edges.contains(&e));
        let comp = pair_component(self.g, &self.edge_colors(), a, b, y);
        if comp.is_empty() {
            return false;
        }
        let mut touched: Vec<usize> = comp.iter().filter_map(|&e| owner(e)).collect();
        touched.sort_unstable();
        touched.dedup();
        for i in touched {
            self.color[i] = if self.color[i] == a { b } else { a };
        }
        self.trace.push(Rule::Swap { a, b, vertex: y });
        true
    }

    fn swaps_then_free(&mut self, p: usize) -> bool {
        let verts = self.els[p].vertices();
        for a in 1..=K {
            for b in a + 1..=K {
                for &y in &verts {
                    if self.attempt(|c| c.swap_at(a, b, y) && c.extend_free(p)) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Single recolors of neighbors, single swaps at the vertices of `p`, and
    /// neighbor color exchanges (optionally followed by a swap), each
    /// followed by a free-color attempt for `p`.
    fn repair_moves(&mut self, p: usize) -> bool {
        self.color[p] = 0;
        let nbrs = self.neighbors(p);
        for &q in &nbrs {
            for col in 1..=K {
                if col == self.color[q] {
                    continue;
                }
                if self.attempt(|c| {
                    c.set_color(q, col);
                    c.valid_partial() && c.extend_free(p)
                }) {
                    return true;
                }
            }
        }
        if self.swaps_then_free(p) {
            return true;
        }
        for (x, &q1) in nbrs.iter().enumerate() {
            for &q2 in &nbrs[x + 1..] {
                if self.color[q1] == self.color[q2] {
                    continue;
                }
                if self.attempt(|c| {
                    c.color.swap(q1, q2);
                    c.trace.push(Rule::Exchange { first: q1, second: q2 });
                    c.valid_partial() && (c.attempt(|c| c.extend_free(p)) || c.swaps_then_free(p))
                }) {
                    return true;
                }
            }
        }
        false
    }

    /// All elements are 2-paths meeting only at common pendant vertices:
    /// properly color the graph with one edge per 2-path between its pendants.
    fn proper_pendant_coloring(&mut self, set: &[usize]) -> bool {
        let pairs: Vec<(Vertex, Vertex)> = set
            .iter()
            .map(|&q| (self.els[q].pendant[0], self.els[q].pendant[1]))
            .collect();
        let h = Graph::multigraph_from_edges(self.g.n(), &pairs).expect("pendant pairs are distinct");
        let pc = proper_edge_color(&h);
        if pc.colors.iter().any(|&c| c > K) {
            return false;
        }
        for (&q, &c) in set.iter().zip(&pc.colors) {
            self.color[q] = c;
        }
        self.trace.push(Rule::ProperColoring { elements: set.len() });
        self.valid()
    }

    /// One claw-type element `r`, all 2-paths meeting others only at common
    /// pendant vertices. Drop the claw edge `e1 = x v1`, contract the
    /// degree-2 vertices (each 2-path and the remaining claw become edges),
    /// color that graph properly, pull back, and make `e1` match the claw.
    fn endgame(&mut self, set: &[usize]) -> bool {
        let Some(&r) = set.iter().find(|&&i| !self.is_two_path(i)) else {
            return false;
        };
        let els = self.els;
        let el = &els[r];
        let x = el.hub(self.g);
        let direct: Vec<(Vertex, EdgeId)> = el
            .edges
            .iter()
            .filter_map(|&e| {
                let (a, b) = self.g.endpoints(e);
                let leaf = if a == x { b } else if b == x { a } else { return None };
                el.is_pendant(leaf).then_some((leaf, e))
            })
            .collect();
        for (v1, e1) in direct {
            let others: Vec<Vertex> = el.pendant.iter().copied().filter(|&v| v != v1).collect();
            let mut star_edges = Vec::new();
            let mut tags = Vec::new();
            for &q in set {
                if q != r {
                    star_edges.push((self.els[q].pendant[0], self.els[q].pendant[1]));
                    tags.push(Some(q));
                }
            }
            star_edges.push((others[0], others[1]));
            tags.push(None);
            let h = Graph::multigraph_from_edges(self.g.n(), &star_edges).expect("contracted graph is loopless");
            let pc = proper_edge_color(&h);
            if pc.colors.iter().any(|&c| c > K) {
                continue;
            }
            let mut ec = vec![0; self.g.edge_count()];
            for (tag, &c) in tags.iter().zip(&pc.colors) {
                let edges = match tag {
                    Some(q) => &self.els[*q].edges,
                    None => &el.edges,
                };
                for &e in edges {
                    ec[e] = c;
                }
            }
            ec[e1] = 0;
            let spot = Endgame { r, x, v1, e1 };
            if self.fix_endgame(&spot, ec, set) {
                self.trace.push(Rule::Endgame { claw: r });
                return true;
            }
        }
        false
    }

    /// Color `e1` like the rest of its claw and adopt the result if valid.
    fn finish(&mut self, spot: &Endgame, ec: &[usize], set: &[usize]) -> bool {
        let mut ec = ec.to_vec();
        let one = self.els[spot.r]
            .edges
            .iter()
            .map(|&e| ec[e])
            .find(|&c| c != 0)
            .expect("claw has colored edges");
        ec[spot.e1] = one;
        let mut colors = self.color.clone();
        for &q in set {
            let c = ec[self.els[q].edges[0]];
            if c == 0 || self.els[q].edges.iter().any(|&e| ec[e] != c) {
                return false;
            }
            colors[q] = c;
        }
        let old = std::mem::replace(&mut self.color, colors);
        if self.valid() {
            return true;
        }
        self.color = old;
        false
    }

    fn fix_endgame(&mut self, spot: &Endgame, ec0: Vec<usize>, set: &[usize]) -> bool {
        let g = self.g;
        let one = self.els[spot.r].edges.iter().map(|&e| ec0[e]).find(|&c| c != 0).unwrap_or(1);
        // Step 1: v1 sees no edge of the claw's color.
        if self.finish(spot, &ec0, set) {
            return true;
        }
        let paths_at = |ec: &[usize], v: Vertex, skip: &[usize]| -> Vec<(usize, usize)> {
            self.at[v]
                .iter()
                .copied()
                .filter(|&q| self.active[q] && q != spot.r && !skip.contains(&q))
                .map(|q| (q, ec[self.els[q].edges[0]]))
                .collect()
        };
        let at_v1 = paths_at(&ec0, spot.v1, &[]);
        let Some(&(q1, _)) = at_v1.iter().find(|&&(_, c)| c == one) else {
            return false;
        };
        let q2 = at_v1.iter().find(|&&(q, _)| q != q1).copied();
        let two = q2.map(|(_, c)| c);
        let other_end = |q: usize| *self.els[q].pendant.iter().find(|&&v| v != spot.v1).expect("2-path has two ends");
        let u1 = other_end(q1);
        let recolor = |ec: &mut [usize], q: usize, c: usize| {
            for &e in &self.els[q].edges {
                ec[e] = c;
            }
        };
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        let spare: Vec<usize> = (1..=K).filter(|&c| c != one && Some(c) != two).collect();
        // Step 2: move q1 to a color missing at u1.
        for &c in &spare {
            let mut ec = ec0.clone();
            recolor(&mut ec, q1, c);
            candidates.push(ec);
        }
        // Step 3: q1 takes the color of q2, which moves to a color missing at u2.
        if let Some((q2, c2)) = q2 {
            for &c in &spare {
                let mut ec = ec0.clone();
                recolor(&mut ec, q1, c2);
                recolor(&mut ec, q2, c);
                candidates.push(ec);
            }
        }
        // Step 4: swap (one, c) at v1 when v1 and x lie in different
        // components, also after exchanging q1 and q2.
        let mut bases = vec![ec0.clone()];
        if let Some((q2, c2)) = q2 {
            let mut ec = ec0.clone();
            recolor(&mut ec, q1, c2);
            recolor(&mut ec, q2, one);
            bases.push(ec);
        }
        for base in &bases {
            for c in (1..=K).filter(|&c| c != one) {
                if !pair_connected(g, base, one, c, spot.v1, spot.x) {
                    let mut ec = base.clone();
                    let comp = pair_component(g, &ec, one, c, spot.v1);
                    crate::irregularity::swap_edges(&mut ec, &comp, one, c);
                    candidates.push(ec);
                }
            }
        }
        // Steps 5 and 6: swap (two, c) at v1 when v1 and u1 lie in different
        // components, then q1 takes color two; retry after exchanging the
        // colors of the other two 2-paths at u1.
        if let Some(two) = two {
            let mut bases = vec![ec0.clone()];
            let at_u1 = paths_at(&ec0, u1, &[q1]);
            if at_u1.len() == 2 && at_u1[0].1 != at_u1[1].1 {
                let mut ec = ec0.clone();
                recolor(&mut ec, at_u1[0].0, at_u1[1].1);
                recolor(&mut ec, at_u1[1].0, at_u1[0].1);
                bases.push(ec);
            }
            for base in &bases {
                for &c in &spare {
                    if !pair_connected(g, base, two, c, spot.v1, u1) {
                        let mut ec = base.clone();
                        let comp = pair_component(g, &ec, two, c, spot.v1);
                        crate::irregularity::swap_edges(&mut ec, &comp, two, c);
                        recolor(&mut ec, q1, two);
                        candidates.push(ec);
                    }
                }
            }
        }
        // Generic pass: any single swap near the claw, and any recolor of the
        // 2-paths at v1 and u1.
        for a in 1..=K {
            for b in a + 1..=K {
                for y in [spot.v1, spot.x, u1] {
                    let mut ec = ec0.clone();
                    let comp = pair_component(g, &ec, a, b, y);
                    crate::irregularity::swap_edges(&mut ec, &comp, a, b);
                    candidates.push(ec);
                }
            }
        }
        let mut near: Vec<usize> = at_v1.iter().map(|&(q, _)| q).collect();
        near.extend(paths_at(&ec0, u1, &[]).iter().map(|&(q, _)| q));
        for &q in &near {
            for c in 1..=K {
                let mut ec = ec0.clone();
                recolor(&mut ec, q, c);
                candidates.push(ec);
            }
        }
        candidates.iter().any(|ec| self.finish(spot, ec, set))
    }
}

struct Endgame {
    r: usize,
    x: Vertex,
    v1: Vertex,
    e1: EdgeId,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{strongly_pertinent_decomposition, two_path_decomposition};

    fn run(g: &Graph) -> SubcubicColoring {
        let d = strongly_pertinent_decomposition(g).unwrap();
        let out = color_subcubic_4(g, &d).unwrap();
        assert!(verify_coloring(g, &out.coloring).unwrap().valid);
        assert!(element_properties_hold(&d, &out.coloring));
        assert!(out.coloring.colors_used() <= 4);
        out
    }

    #[test]
    fn examples() {
        assert_eq!(run(&Graph::star(3)).coloring.colors_used(), 1);
        let c4 = Graph::cycle(4);
        let d = two_path_decomposition(&c4).unwrap();
        assert_eq!(color_subcubic_4(&c4, &d).unwrap().coloring.colors_used(), 2);
        for g in [Graph::complete(4), Graph::petersen(), Graph::cube(), Graph::complete_bipartite(3, 3)] {
            run(&g);
        }
    }

    #[test]
    fn subdivided_cubic_uses_pendant_coloring() {
        let g = crate::graph::fully_subdivide(&Graph::petersen());
        let out = run(&g);
        assert_eq!(out.fallbacks, 0);
    }

    #[test]
    fn odd_subdivided_cubic() {
        // K4 fully subdivided, then one more subdivision makes the size odd.
        let s = crate::graph::fully_subdivide(&Graph::complete(4));
        let g = crate::graph::subdivide_edge(&s, 0, 1).unwrap();
        let out = run(&g);
        assert!(out.coloring.colors_used() <= 4);
    }

    #[test]
    fn rejects_bad_input() {
        let star = Graph::star(4);
        assert!(matches!(
            color_subcubic_4(&star, &Decomposition::default()),
            Err(ConstructiveError::NotSubcubic(4))
        ));
        let c4 = Graph::cycle(4);
        let half = Decomposition::from_edge_groups(&c4, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            color_subcubic_4(&c4, &half),
            Err(ConstructiveError::NotStronglyPertinent(_))
        ));
    }
}
