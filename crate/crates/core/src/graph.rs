//! The edge-colored graph model and per-vertex color statistics.
//!
//! A graph is simple and undirected, each edge carries one color-id, and
//! color-ids are arbitrary `u64` values: nothing here assumes the palette
//! is contiguous, and all per-color bookkeeping is keyed on the raw id.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Color = u64;

/// One edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
}

impl Edge {
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Immutable simple graph with one color per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    /// Sorted by `(u, v)`.
    edges: Vec<Edge>,
    /// Sorted by neighbor id.
    adj: Vec<Vec<(Vertex, Color)>>,
    /// `classes[v][c]` = number of edges at `v` with color `c`.
    classes: Vec<BTreeMap<Color, usize>>,
}

/// Degree statistics of a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColorProfile {
    pub vertex: Vertex,
    pub degree: usize,
    pub color_degree: usize,
    pub mono_degree: usize,
    pub color_neighborhood: BTreeSet<Color>,
    pub class_sizes: BTreeMap<Color, usize>,
}

impl EdgeColoredGraph {
    /// Builds a graph from `(u, v, color)` triples. Endpoint order is free.
    ///
    /// Rejects self-loops, out-of-range endpoints and repeated pairs (even
    /// when the repeated pair carries the same color).
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let mut edges = Vec::new();
        for (a, b, color) in edge_list {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, color });
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0].endpoints() == w[1].endpoints()) {
            return Err(Error::DuplicateEdge(w[0].u, w[0].v));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// `edges` must already be validated, normalized and sorted.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut classes = vec![BTreeMap::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.color));
            adj[e.v].push((e.u, e.color));
            *classes[e.u].entry(e.color).or_insert(0) += 1;
            *classes[e.v].entry(e.color).or_insert(0) += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        EdgeColoredGraph { n, edges, adj, classes }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Neighbors of `v` with the color of the connecting edge, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, Color)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Number of distinct colors at `v`.
    pub fn color_degree(&self, v: Vertex) -> usize {
        self.classes[v].len()
    }

    /// Largest number of edges at `v` sharing a color; 0 for an isolated vertex.
    pub fn mono_degree(&self, v: Vertex) -> usize {
        self.classes[v].values().copied().max().unwrap_or(0)
    }

    /// Number of edges at `v` with color `c`.
    pub fn class_size(&self, v: Vertex, c: Color) -> usize {
        self.classes[v].get(&c).copied().unwrap_or(0)
    }

    pub fn color_classes(&self, v: Vertex) -> &BTreeMap<Color, usize> {
        &self.classes[v]
    }

    pub fn color_neighborhood(&self, v: Vertex) -> impl Iterator<Item = Color> + '_ {
        self.classes[v].keys().copied()
    }

    pub fn edge_color(&self, a: Vertex, b: Vertex) -> Option<Color> {
        let list = self.adj.get(a)?;
        list.binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_color(a, b).is_some()
    }

    pub fn vertex_profile(&self, v: Vertex) -> Result<VertexColorProfile> {
        self.check_vertex(v)?;
        Ok(VertexColorProfile {
            vertex: v,
            degree: self.degree(v),
            color_degree: self.color_degree(v),
            mono_degree: self.mono_degree(v),
            color_neighborhood: self.color_neighborhood(v).collect(),
            class_sizes: self.classes[v].clone(),
        })
    }

    /// Minimum color degree over all vertices (0 for the empty vertex set).
    pub fn min_color_degree(&self) -> usize {
        self.vertices().map(|v| self.color_degree(v)).min().unwrap_or(0)
    }

    /// Minimum of `d^c(x) + d^c(y)` over edges `xy`; `None` without edges.
    pub fn sigma2c(&self) -> Option<usize> {
        self.edges
            .iter()
            .map(|e| self.color_degree(e.u) + self.color_degree(e.v))
            .min()
    }

    pub fn max_mono_degree(&self) -> usize {
        self.vertices().map(|v| self.mono_degree(v)).max().unwrap_or(0)
    }

    /// Number of distinct colors used on the edge set.
    pub fn color_count(&self) -> usize {
        self.edges.iter().map(|e| e.color).collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.edges.iter().map(|e| e.color).max()
    }

    /// Vertices by monochromatic degree, largest first; ties by ascending id.
    pub fn mono_order(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = self.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.mono_degree(v)), v));
        order
    }

    /// True when every edge has a distinct color.
    pub fn is_rainbow(&self) -> bool {
        self.color_count() == self.edge_count()
    }

    /// True when no two incident edges share a color.
    pub fn is_properly_colored(&self) -> bool {
        self.vertices().all(|v| self.mono_degree(v) <= 1)
    }

    /// Copy of the graph keeping only the edges accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        let edges = self.edges.iter().copied().filter(|e| keep(e)).collect();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Triples `(u, v, color)` in canonical order.
    pub fn edge_triples(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v, e.color))
    }
}
