//! Proper edge-colorings: Misra–Gries for simple graphs (at most `Δ + 1`
//! colors), tightened to `Δ` when a bounded search finds one; exact search
//! for multigraphs.

use crate::graph::{EdgeId, Graph};
use crate::irregularity::EdgeColoring;
use crate::search::{Outcome, Problem};

use super::ConstructiveError;

const NONE: usize = usize::MAX;

/// Node budget for the attempt to save the `Δ + 1`-st color.
const TIGHTEN_BUDGET: u64 = 100_000;

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.edge_count()
        && colors.iter().all(|&c| c > 0)
        && (0..g.n()).all(|v| {
            let mut seen: Vec<usize> = g.incident(v).iter().map(|&(_, e)| colors[e]).collect();
            let len = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == len
        })
}

/// Adjacent edges get distinct colors. Simple graphs use at most `Δ + 1`
/// colors; multigraphs get an optimal coloring.
pub fn proper_edge_color(g: &Graph) -> EdgeColoring {
    let delta = g.max_degree();
    if g.edge_count() == 0 {
        return EdgeColoring::new(0, Vec::new());
    }
    if g.has_parallel_edges() {
        for k in delta.. {
            if let Some(c) = exact(g, k, None) {
                return EdgeColoring::new(k, c);
            }
        }
        unreachable!("some finite number of colors always suffices");
    }
    let mg = misra_gries(g);
    debug_assert!(is_proper(g, &mg));
    if let Some(c) = exact(g, delta, Some(TIGHTEN_BUDGET)) {
        return EdgeColoring::new(delta, c);
    }
    EdgeColoring::new(delta + 1, mg)
}

fn exact(g: &Graph, k: usize, budget: Option<u64>) -> Option<Vec<usize>> {
    let mut p = Problem::single_edges(g, k);
    p.irregular = false;
    p.budget = budget;
    for v in 0..g.n() {
        let inc = g.incident(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                p.forbid_same(inc[i].1, inc[j].1);
            }
        }
    }
    match p.solve().0 {
        Outcome::Found(c) => Some(c),
        _ => None,
    }
}

struct Coloring<'a> {
    g: &'a Graph,
    stride: usize,
    col: Vec<usize>,
    /// `at[v * stride + c]` is the edge of color `c` at `v`.
    at: Vec<EdgeId>,
}

impl Coloring<'_> {
    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v * self.stride + c] == NONE
    }

    fn free(&self, v: usize) -> usize {
        (1..self.stride).find(|&c| self.is_free(v, c)).expect("Δ + 1 colors leave one free")
    }

    fn set(&mut self, e: EdgeId, c: usize) {
        let (u, v) = self.g.endpoints(e);
        self.col[e] = c;
        self.at[u * self.stride + c] = e;
        self.at[v * self.stride + c] = e;
    }

    fn clear(&mut self, e: EdgeId) {
        let c = self.col[e];
        if c == 0 {
            return;
        }
        let (u, v) = self.g.endpoints(e);
        self.at[u * self.stride + c] = NONE;
        self.at[v * self.stride + c] = NONE;
        self.col[e] = 0;
    }
}

fn misra_gries(g: &Graph) -> Vec<usize> {
    let k = g.max_degree() + 1;
    let mut s = Coloring {
        g,
        stride: k + 1,
        col: vec![0; g.edge_count()],
        at: vec![NONE; g.n() * (k + 1)],
    };
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        // Maximal fan at u: each next edge's color is free at the previous vertex.
        let mut fan = vec![(v, e)];
        loop {
            let last = fan.last().expect("fan is nonempty").0;
            let next = g
                .incident(u)
                .iter()
                .copied()
                .find(|&(w, f)| s.col[f] != 0 && s.is_free(last, s.col[f]) && fan.iter().all(|&(x, _)| x != w));
            match next {
                Some(step) => fan.push(step),
                None => break,
            }
        }
        let c = s.free(u);
        let d = s.free(fan.last().expect("fan is nonempty").0);
        if !s.is_free(u, d) {
            // Invert the cd-path starting at u.
            let mut path = Vec::new();
            let (mut x, mut want) = (u, d);
            loop {
                let f = s.at[x * s.stride + want];
                if f == NONE {
                    break;
                }
                path.push(f);
                x = g.other_end(f, x);
                want = if want == d { c } else { d };
            }
            let old: Vec<usize> = path.iter().map(|&f| s.col[f]).collect();
            for &f in &path {
                s.clear(f);
            }
            for (&f, &oc) in path.iter().zip(&old) {
                s.set(f, if oc == c { d } else { c });
            }
        }
        let mut w = None;
        for i in 0..fan.len() {
            if i > 0 {
                let cf = s.col[fan[i].1];
                if cf == 0 || !s.is_free(fan[i - 1].0, cf) {
                    break;
                }
            }
            if s.is_free(fan[i].0, d) {
                w = Some(i);
                break;
            }
        }
        let w = w.expect("Misra–Gries always finds a rotatable fan prefix");
        let shifted: Vec<usize> = (0..w).map(|j| s.col[fan[j + 1].1]).collect();
        for &(_, f) in &fan[1..=w] {
            s.clear(f);
        }
        for (j, &c2) in shifted.iter().enumerate() {
            s.set(fan[j].1, c2);
        }
        s.set(fan[w].1, d);
    }
    s.col
}

/// The coloring of `𝒮(base)` in which both halves of each subdivided edge
/// inherit its color. Every class is a disjoint union of 2-paths.
pub fn induced_coloring_from_subdivided_proper(
    base: &Graph,
    proper: &EdgeColoring,
) -> Result<EdgeColoring, ConstructiveError> {
    if proper.colors.len() != base.edge_count() {
        return Err(ConstructiveError::ShapeMismatch(format!(
            "{} colors for {} base edges",
            proper.colors.len(),
            base.edge_count()
        )));
    }
    if !is_proper(base, &proper.colors) {
        return Err(ConstructiveError::ShapeMismatch("base coloring is not proper".into()));
    }
    let colors = proper.colors.iter().flat_map(|&c| [c, c]).collect();
    Ok(EdgeColoring::new(proper.k, colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fully_subdivide;
    use crate::irregularity::verify_coloring;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(proper_edge_color(&Graph::star(3)).colors_used(), 3);
        assert_eq!(proper_edge_color(&Graph::cycle(4)).colors_used(), 2);
        let pet = proper_edge_color(&Graph::petersen());
        assert!(is_proper(&Graph::petersen(), &pet.colors));
        assert_eq!(pet.colors_used(), 4);
        let k3 = proper_edge_color(&Graph::complete(3));
        assert_eq!(k3.colors_used(), 3);
    }

    #[test]
    fn multigraphs_are_colored_optimally() {
        // Three parallel edges and the "fat triangle" with doubled edges.
        let theta = Graph::multigraph_from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(proper_edge_color(&theta).colors_used(), 3);
        let fat = Graph::multigraph_from_edges(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        let c = proper_edge_color(&fat);
        assert!(is_proper(&fat, &c.colors));
        assert_eq!(c.colors_used(), 4);
    }

    #[test]
    fn induced_subdivided_colorings() {
        let c4 = Graph::cycle(4);
        let s = induced_coloring_from_subdivided_proper(&c4, &proper_edge_color(&c4)).unwrap();
        assert!(verify_coloring(&fully_subdivide(&c4), &s).unwrap().valid);
        let k4 = Graph::complete(4);
        let s = induced_coloring_from_subdivided_proper(&k4, &proper_edge_color(&k4)).unwrap();
        assert!(verify_coloring(&fully_subdivide(&k4), &s).unwrap().valid);
        assert_eq!(s.colors_used(), 3);
        let star = Graph::star(3);
        assert!(induced_coloring_from_subdivided_proper(&star, &EdgeColoring::new(1, vec![1, 1, 1])).is_err());
        assert!(induced_coloring_from_subdivided_proper(&star, &EdgeColoring::new(1, vec![1])).is_err());
    }

    proptest! {
        #[test]
        fn misra_gries_is_proper(n in 2usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let c = misra_gries(&g);
            prop_assert!(is_proper(&g, &c));
            prop_assert!(c.iter().all(|&x| x <= g.max_degree() + 1));
            let p = proper_edge_color(&g);
            prop_assert!(is_proper(&g, &p.colors));
            prop_assert!(p.k <= g.max_degree() + 1);
        }
    }
}
