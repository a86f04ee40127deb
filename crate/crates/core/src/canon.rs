//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell, and recurse. Every leaf is a discrete partition, i.e. a
//! vertex ordering, and its certificate is the permuted upper-triangle
//! multiplicity matrix. The canonical label is the largest certificate found.
//! When a leaf repeats an earlier certificate the two leaves differ by an
//! automorphism, so the search jumps back to the deepest common ancestor and
//! skips the rest of the current subtree there.
//!
//! Multiplicities are kept, so the label is also a complete invariant for
//! loopless multigraphs.

use std::collections::HashMap;

use crate::graph::{Graph, Vertex};

/// Byte string identifying an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLabel(pub Vec<u8>);

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    canonical_labeling(g).1
}

/// Canonical label together with a permutation `perm` such that
/// `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> (Vec<Vertex>, CanonicalLabel) {
    let n = g.n();
    let mut mult = vec![0u8; n * n];
    for &(u, v) in g.edges() {
        mult[u * n + v] = mult[u * n + v].saturating_add(1);
        mult[v * n + u] = mult[v * n + u].saturating_add(1);
    }
    let mut search = Search {
        g,
        n,
        mult,
        best: None,
        seen: HashMap::new(),
    };
    let mut path = Vec::new();
    let start = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    search.descend(start, &mut path);
    let (cert, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let mut label = Vec::with_capacity(cert.len() + 4);
    label.extend((n as u32).to_be_bytes());
    label.extend(cert);
    (perm, CanonicalLabel(label))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    mult: Vec<u8>,
    best: Option<(Vec<u8>, Vec<Vertex>)>,
    seen: HashMap<Vec<u8>, Vec<Vertex>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the caller should abandon everything below depth `d`.
    fn descend(&mut self, mut cells: Vec<Vec<Vertex>>, path: &mut Vec<Vertex>) -> Option<usize> {
        self.refine(&mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            let order: Vec<Vertex> = cells.into_iter().map(|c| c[0]).collect();
            let cert = self.certificate(&order);
            if let Some(earlier) = self.seen.get(&cert) {
                let common = earlier.iter().zip(path.iter()).take_while(|(a, b)| a == b).count();
                return Some(common);
            }
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert.clone(), order));
            }
            self.seen.insert(cert, path.clone());
            return None;
        };
        let cell = cells[t].clone();
        for &v in &cell {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(d) = jump {
                if path.len() > d {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Split cells by weighted neighbor counts into each splitter cell until
    /// the partition is equitable. Sub-cells are ordered by count, which keeps
    /// the result invariant under relabeling.
    fn refine(&self, cells: &mut Vec<Vec<Vertex>>) {
        let mut count = vec![0u32; self.n];
        let mut s = 0;
        while s < cells.len() {
            count.iter_mut().for_each(|c| *c = 0);
            for &w in &cells[s] {
                for &(x, _) in self.g.incident(w) {
                    count[x] += 1;
                }
            }
            let mut split_any = false;
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 || cell.iter().all(|&v| count[v] == count[cell[0]]) {
                    next.push(cell.clone());
                    continue;
                }
                split_any = true;
                let mut keys: Vec<u32> = cell.iter().map(|&v| count[v]).collect();
                keys.sort_unstable();
                keys.dedup();
                for k in keys {
                    next.push(cell.iter().copied().filter(|&v| count[v] == k).collect());
                }
            }
            if split_any {
                *cells = next;
                s = 0;
            } else {
                s += 1;
            }
        }
    }

    fn certificate(&self, order: &[Vertex]) -> Vec<u8> {
        let n = self.n;
        let mut cert = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                cert.push(self.mult[order[i] * n + order[j]]);
            }
        }
        cert
    }
}
