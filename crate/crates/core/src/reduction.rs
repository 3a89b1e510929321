//! Edge-minimalization that preserves every vertex's color degree.
//!
//! An edge is removable when both endpoints keep its color after the
//! deletion. A graph with no removable edge is *edge-minimal*; in such a
//! graph every color class is a star forest, so there is no monochromatic
//! triangle and no monochromatic path on four vertices.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, Edge, EdgeColoredGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub is_minimal: bool,
    pub removable_edges: Vec<(Vertex, Vertex)>,
    pub mono_c3_found: Option<[Vertex; 3]>,
    /// Path `a-b-c-d` with all three edges of one color.
    pub mono_p4_found: Option<[Vertex; 4]>,
    pub star_forest_ok: BTreeMap<Color, bool>,
}

impl MinimalityReport {
    pub fn all_star_forests(&self) -> bool {
        self.star_forest_ok.values().all(|&ok| ok)
    }
}

fn removable_in(g: &EdgeColoredGraph, e: &Edge) -> bool {
    g.class_size(e.u, e.color) >= 2 && g.class_size(e.v, e.color) >= 2
}

/// Whether deleting `uv` leaves every vertex's color degree unchanged.
pub fn is_removable(g: &EdgeColoredGraph, u: Vertex, v: Vertex) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let color = g.edge_color(u, v).ok_or(Error::NotAnEdge(u, v))?;
    Ok(g.class_size(u, color) >= 2 && g.class_size(v, color) >= 2)
}

/// Deletes the lexicographically smallest removable edge until none is left.
///
/// Class sizes only shrink, so an edge that is not removable never becomes
/// removable again. One pass over the edges in `(u, v)` order therefore
/// deletes exactly the edges the repeated smallest-first rule would.
pub fn edge_minimalize(g: &EdgeColoredGraph) -> EdgeColoredGraph {
    let mut counts: Vec<HashMap<Color, usize>> = g
        .vertices()
        .map(|v| g.color_classes(v).iter().map(|(&c, &k)| (c, k)).collect())
        .collect();
    let mut kept = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let cu = counts[e.u][&e.color];
        let cv = counts[e.v][&e.color];
        if cu >= 2 && cv >= 2 {
            *counts[e.u].get_mut(&e.color).unwrap() -= 1;
            *counts[e.v].get_mut(&e.color).unwrap() -= 1;
        } else {
            kept.push(*e);
        }
    }
    EdgeColoredGraph::from_sorted_edges(g.vertex_count(), kept)
}

/// Edges of `g` that are absent from `reduced`, in canonical order.
pub fn removed_edges(g: &EdgeColoredGraph, reduced: &EdgeColoredGraph) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|e| !reduced.has_edge(e.u, e.v))
        .collect()
}

fn find_mono_triangle(g: &EdgeColoredGraph) -> Option<[Vertex; 3]> {
    for a in g.vertices() {
        let nbrs = g.neighbors(a);
        for (i, &(b, cb)) in nbrs.iter().enumerate() {
            if b < a {
                continue;
            }
            for &(c, cc) in &nbrs[i + 1..] {
                if cb == cc && g.edge_color(b, c) == Some(cb) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn find_mono_p4(g: &EdgeColoredGraph) -> Option<[Vertex; 4]> {
    let same_color = |x: Vertex, color: Color, skip: Vertex| {
        g.neighbors(x)
            .iter()
            .filter(move |&&(w, c)| c == color && w != skip)
            .map(|&(w, _)| w)
    };
    for e in g.edges() {
        for (b, c) in [(e.u, e.v), (e.v, e.u)] {
            for a in same_color(b, e.color, c) {
                if let Some(d) = same_color(c, e.color, b).find(|&d| d != a) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Per color: is the spanning subgraph of that color a disjoint union of stars?
fn star_forests(g: &EdgeColoredGraph) -> BTreeMap<Color, bool> {
    let mut by_color: BTreeMap<Color, Vec<&Edge>> = BTreeMap::new();
    for e in g.edges() {
        by_color.entry(e.color).or_default().push(e);
    }
    by_color
        .into_iter()
        .map(|(color, edges)| (color, is_star_forest(&edges)))
        .collect()
}

fn is_star_forest(edges: &[&Edge]) -> bool {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.u).or_default().push(e.v);
        adj.entry(e.v).or_default().push(e.u);
    }
    let mut seen: BTreeMap<Vertex, bool> = adj.keys().map(|&v| (v, false)).collect();
    for &start in adj.keys() {
        if seen[&start] {
            continue;
        }
        let mut component = vec![start];
        seen.insert(start, true);
        let mut i = 0;
        while i < component.len() {
            for &w in &adj[&component[i]] {
                if !seen[&w] {
                    seen.insert(w, true);
                    component.push(w);
                }
            }
            i += 1;
        }
        let k = component.len();
        let twice_edges: usize = component.iter().map(|v| adj[v].len()).sum();
        let has_center = component.iter().any(|v| adj[v].len() == k - 1);
        if twice_edges != 2 * (k - 1) || !has_center {
            return false;
        }
    }
    true
}

/// Inspects `g` for removable edges and for the monochromatic structures an
/// edge-minimal graph cannot contain.
pub fn check_minimal_structure(g: &EdgeColoredGraph) -> MinimalityReport {
    let removable_edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|e| removable_in(g, e))
        .map(Edge::endpoints)
        .collect();
    MinimalityReport {
        is_minimal: removable_edges.is_empty(),
        removable_edges,
        mono_c3_found: find_mono_triangle(g),
        mono_p4_found: find_mono_p4(g),
        star_forest_ok: star_forests(g),
    }
}

pub fn is_edge_minimal(g: &EdgeColoredGraph) -> bool {
    g.edges().iter().all(|e| !removable_in(g, e))
}
