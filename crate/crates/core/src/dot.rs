//! Graphviz DOT export with an optional coloring or decomposition overlay.

use std::fmt::Write;

use crate::decomposition::{Decomposition, ElementKind};
use crate::graph::Graph;
use crate::irregularity::EdgeColoring;

const PALETTE: [&str; 8] = ["red", "blue", "green3", "orange", "purple", "cyan3", "brown", "magenta"];

#[derive(Debug, Clone, Copy)]
pub enum Overlay<'a> {
    Coloring(&'a EdgeColoring),
    Decomposition(&'a Decomposition),
}

fn paint(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

/// Undirected DOT text. Colorings set `color` and `label` to the color
/// number; decompositions set `color` per element and `label` to the element
/// index, with claw-type elements drawn bold.
pub fn export_dot(g: &Graph, overlay: Option<Overlay<'_>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").expect("writing to a String");
    }
    let owner = match overlay {
        Some(Overlay::Decomposition(d)) => Some(d.owner(g.edge_count())),
        _ => None,
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let attrs = match overlay {
            None => String::new(),
            Some(Overlay::Coloring(c)) => match c.colors.get(e) {
                Some(&k) if k > 0 => format!(" [color={}, label=\"{k}\"]", paint(k - 1)),
                _ => String::new(),
            },
            Some(Overlay::Decomposition(d)) => {
                let i = owner.as_ref().expect("set for decompositions")[e];
                match d.elements.get(i) {
                    Some(el) => {
                        let bold = if el.kind == ElementKind::TwoPath { "" } else { ", style=bold" };
                        format!(" [color={}, label=\"p{i}\"{bold}]", paint(i))
                    }
                    None => String::new(),
                }
            }
        };
        writeln!(out, "  {u} -- {v}{attrs};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
