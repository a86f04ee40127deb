//! Two-colorings of balanced forests and of fully subdivided graphs.

use std::collections::VecDeque;

use crate::decomposition::edge_subset_components;
use crate::graph::{fully_subdivide, EdgeId, Graph, Vertex};
use crate::irregularity::{verify_coloring, EdgeColoring};
use crate::search::{Outcome, Problem};

use super::parity::Bipartition;
use super::ConstructiveError;

/// At most two colors on a forest, with every even-side vertex seeing a
/// single color. Each even-side vertex's edges form one search unit, so the
/// monochromatic condition is built into the search space.
pub fn color_balanced_forest_2(f: &Graph, b: &Bipartition) -> Result<EdgeColoring, ConstructiveError> {
    if f.edge_count() + f.components().len() != f.n() {
        return Err(ConstructiveError::NotForest);
    }
    b.validate(f)?;
    if f.edge_count() == 0 {
        return Ok(EdgeColoring::new(0, Vec::new()));
    }
    let units: Vec<Vec<EdgeId>> = b
        .even_side
        .iter()
        .map(|&v| f.incident(v).iter().map(|&(_, e)| e).collect::<Vec<_>>())
        .filter(|u| !u.is_empty())
        .collect();
    for k in 1..=2 {
        if let Outcome::Found(unit_colors) = Problem::new(f, units.clone(), k).solve().0 {
            let mut colors = vec![0; f.edge_count()];
            for (unit, &c) in units.iter().zip(&unit_colors) {
                for &e in unit {
                    colors[e] = c;
                }
            }
            return Ok(EdgeColoring::new(k, colors));
        }
    }
    Err(ConstructiveError::NoColoring { k_max: 2 })
}

fn is_odd_cycle(g: &Graph, comp: &[EdgeId]) -> bool {
    if comp.len() % 2 == 0 {
        return false;
    }
    let mut deg = vec![0usize; g.n()];
    for &e in comp {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d == 0 || d == 2)
}

/// At most two colors on `𝒮(base)`, for a loopless multigraph base with no
/// odd-cycle component.
///
/// Tree components go to the balanced-forest colorer on `𝒮(T)`, whose
/// even side is the set of subdivision vertices. Otherwise a shortest cycle
/// `C` whose removal leaves no odd-cycle component is peeled off, the rest is
/// colored recursively, and `𝒮(C)` is filled in against the fixed colors,
/// flipping the two colors on touched components if needed.
pub fn color_fully_subdivided_2(base: &Graph) -> Result<EdgeColoring, ConstructiveError> {
    let all: Vec<EdgeId> = (0..base.edge_count()).collect();
    if edge_subset_components(base, &all).iter().any(|c| is_odd_cycle(base, c)) {
        return Err(ConstructiveError::OddCycleBase);
    }
    let s = fully_subdivide(base);
    let mut colors = vec![0usize; s.edge_count()];
    let ctx = Subdivided { base, s: &s };
    for comp in edge_subset_components(base, &all) {
        if !ctx.cover(&comp, &mut colors) {
            return Err(ConstructiveError::NoColoring { k_max: 2 });
        }
    }
    let coloring = EdgeColoring::from_colors(colors);
    debug_assert!(verify_coloring(&s, &coloring).map(|r| r.valid).unwrap_or(false));
    Ok(coloring)
}

struct Subdivided<'a> {
    base: &'a Graph,
    s: &'a Graph,
}

/// Edges of `𝒮` replacing the given base edges.
fn halves(edges: &[EdgeId]) -> Vec<EdgeId> {
    edges.iter().flat_map(|&e| [2 * e, 2 * e + 1]).collect()
}

impl Subdivided<'_> {
    fn store(&self, units: &[Vec<EdgeId>], found: &[usize], colors: &mut [usize]) {
        for (unit, &c) in units.iter().zip(found) {
            for &e in unit {
                colors[e] = c;
            }
        }
    }

    /// Minimal-color search over the given units, ignoring other edges.
    fn search(&self, units: Vec<Vec<EdgeId>>, colors: &mut [usize]) -> bool {
        for k in 1..=2 {
            if let Outcome::Found(cs) = Problem::new(self.s, units.clone(), k).solve().0 {
                self.store(&units, &cs, colors);
                return true;
            }
        }
        false
    }

    fn direct(&self, edges: &[EdgeId], colors: &mut [usize]) -> bool {
        self.search(halves(edges).into_iter().map(|e| vec![e]).collect(), colors)
    }

    /// Colors the subdivision of one connected base edge set.
    fn cover(&self, edges: &[EdgeId], colors: &mut [usize]) -> bool {
        if edges.is_empty() {
            return true;
        }
        let mut verts: Vec<Vertex> = edges
            .iter()
            .flat_map(|&e| {
                let (u, v) = self.base.endpoints(e);
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        if edges.len() + 1 == verts.len() {
            // Each subdivision vertex's two edges form one monochromatic bundle.
            let bundles = edges.iter().map(|&e| vec![2 * e, 2 * e + 1]).collect();
            return self.search(bundles, colors) || self.direct(edges, colors);
        }
        let Some(cycle) = self.peelable_cycle(edges) else {
            return self.direct(edges, colors);
        };
        let rest: Vec<EdgeId> = edges.iter().copied().filter(|e| !cycle.contains(e)).collect();
        let parts = edge_subset_components(self.base, &rest);
        for part in &parts {
            if !self.cover(part, colors) {
                return false;
            }
        }
        let on_cycle = |v: Vertex| {
            cycle.iter().any(|&e| {
                let (a, b) = self.base.endpoints(e);
                a == v || b == v
            })
        };
        let touched: Vec<&Vec<EdgeId>> = parts
            .iter()
            .filter(|p| {
                p.iter().any(|&e| {
                    let (a, b) = self.base.endpoints(e);
                    on_cycle(a) || on_cycle(b)
                })
            })
            .collect();
        // Exchanging the two colors on a whole component keeps it valid; try
        // every combination of exchanges on the components meeting the cycle.
        let flips = 1usize << touched.len().min(10);
        for mask in 0..flips {
            let mut trial = colors.to_vec();
            for (i, part) in touched.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for e in halves(part) {
                        trial[e] = 3 - trial[e];
                    }
                }
            }
            if self.extend(edges, &cycle, &mut trial) {
                colors.copy_from_slice(&trial);
                return true;
            }
        }
        self.direct(edges, colors)
    }

    /// Fill in `𝒮(cycle)` with the rest of `𝒮(edges)` fixed.
    fn extend(&self, edges: &[EdgeId], cycle: &[EdgeId], colors: &mut [usize]) -> bool {
        let units: Vec<Vec<EdgeId>> = halves(edges).into_iter().map(|e| vec![e]).collect();
        let mut p = Problem::new(self.s, units.clone(), 2);
        for (i, unit) in units.iter().enumerate() {
            if !cycle.contains(&(unit[0] / 2)) {
                p.fixed[i] = Some(colors[unit[0]]);
            }
        }
        match p.solve().0 {
            Outcome::Found(cs) => {
                self.store(&units, &cs, colors);
                true
            }
            _ => false,
        }
    }

    /// First shortest cycle (through edges in ascending id order) whose
    /// removal leaves no odd-cycle component.
    fn peelable_cycle(&self, edges: &[EdgeId]) -> Option<Vec<EdgeId>> {
        for &e in edges {
            let Some(cycle) = self.shortest_cycle_through(edges, e) else {
                continue;
            };
            let rest: Vec<EdgeId> = edges.iter().copied().filter(|x| !cycle.contains(x)).collect();
            if edge_subset_components(self.base, &rest)
                .iter()
                .all(|c| !is_odd_cycle(self.base, c))
            {
                return Some(cycle);
            }
        }
        None
    }

    fn shortest_cycle_through(&self, edges: &[EdgeId], e: EdgeId) -> Option<Vec<EdgeId>> {
        let g = self.base;
        let mut allowed = vec![false; g.edge_count()];
        for &x in edges {
            allowed[x] = true;
        }
        allowed[e] = false;
        let (u, v) = g.endpoints(e);
        let mut via = vec![usize::MAX; g.n()];
        let mut seen = vec![false; g.n()];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &(y, f) in g.incident(x) {
                if allowed[f] && !seen[y] {
                    seen[y] = true;
                    via[y] = f;
                    queue.push_back(y);
                }
            }
        }
        if !seen[v] {
            return None;
        }
        let mut cycle = vec![e];
        let mut x = v;
        while x != u {
            let f = via[x];
            cycle.push(f);
            x = g.other_end(f, x);
        }
        cycle.sort_unstable();
        Some(cycle)
    }
}
