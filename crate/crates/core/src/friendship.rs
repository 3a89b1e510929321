//! Rainbow friendship subgraphs: `k` rainbow triangles that pairwise share
//! only their common center.
//!
//! Each edge `ab` of the rainbow link graph of `v` is a rainbow triangle
//! `vab`, so `k` such triangles meeting only at `v` are exactly a matching
//! of size `k` in that link graph.

use serde::{Deserialize, Serialize};

use crate::bounds::{turan_fk, BoundVerdict, Precondition, TheoremId};
use crate::census::is_rainbow;
use crate::error::Result;
use crate::graph::{EdgeColoredGraph, Vertex};
use crate::matching::{matching_number, max_matching, SimpleGraph};
use crate::rational::int;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendshipWitness {
    pub center: Vertex,
    pub triangles: Vec<(Vertex, Vertex)>,
}

impl FriendshipWitness {
    /// Rechecks edges, colors and disjointness against `g`.
    pub fn is_valid_in(&self, g: &EdgeColoredGraph) -> bool {
        let mut used = vec![self.center];
        for &(a, b) in &self.triangles {
            used.extend([a, b]);
            let colors = (g.edge_color(self.center, a), g.edge_color(self.center, b), g.edge_color(a, b));
            let (Some(x), Some(y), Some(z)) = colors else {
                return false;
            };
            if !is_rainbow(x, y, z) {
                return false;
            }
        }
        let len = used.len();
        used.sort_unstable();
        used.dedup();
        used.len() == len
    }
}

/// Link graph of a center: nodes are `N(center)` and local index `i` maps to
/// `nodes[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub center: Vertex,
    pub nodes: Vec<Vertex>,
    pub graph: SimpleGraph,
}

fn link_graph_by(g: &EdgeColoredGraph, v: Vertex, rainbow_only: bool) -> Result<LinkGraph> {
    g.check_vertex(v)?;
    let nbrs = g.neighbors(v);
    let mut edges = Vec::new();
    for (i, &(a, va)) in nbrs.iter().enumerate() {
        for (j, &(b, vb)) in nbrs.iter().enumerate().skip(i + 1) {
            if let Some(ab) = g.edge_color(a, b) {
                if !rainbow_only || is_rainbow(va, vb, ab) {
                    edges.push((i, j));
                }
            }
        }
    }
    Ok(LinkGraph {
        center: v,
        nodes: nbrs.iter().map(|&(a, _)| a).collect(),
        graph: SimpleGraph::new(nbrs.len(), edges)?,
    })
}

/// Graph on `N(v)` with `ab` present iff `vab` is a rainbow triangle.
pub fn rainbow_link_graph(g: &EdgeColoredGraph, v: Vertex) -> Result<LinkGraph> {
    link_graph_by(g, v, true)
}

/// The induced subgraph `G[N(v)]`, colors ignored.
pub fn plain_link_graph(g: &EdgeColoredGraph, v: Vertex) -> Result<LinkGraph> {
    link_graph_by(g, v, false)
}

fn witness_at(link: &LinkGraph, k: usize) -> Option<FriendshipWitness> {
    let m = max_matching(&link.graph);
    (m.len() >= k).then(|| FriendshipWitness {
        center: link.center,
        triangles: m[..k].iter().map(|&(i, j)| (link.nodes[i], link.nodes[j])).collect(),
    })
}

/// First center in monochromatic order whose rainbow link graph has a
/// matching of size `k`. `k = 0` yields an empty witness at the first
/// vertex.
pub fn find_friendship(g: &EdgeColoredGraph, k: usize) -> Option<FriendshipWitness> {
    g.mono_order()
        .into_iter()
        .filter(|&v| g.degree(v) >= 2 * k)
        .find_map(|v| witness_at(&rainbow_link_graph(g, v).expect("v is a vertex"), k))
}

/// Witness centered at `v`, if one exists.
pub fn find_friendship_at(g: &EdgeColoredGraph, v: Vertex, k: usize) -> Result<Option<FriendshipWitness>> {
    Ok(witness_at(&rainbow_link_graph(g, v)?, k))
}

/// Whether the underlying (uncolored) graph contains `F_k`.
pub fn contains_plain_friendship(g: &EdgeColoredGraph, k: usize) -> bool {
    g.vertices().any(|v| {
        g.degree(v) >= 2 * k && matching_number(&plain_link_graph(g, v).expect("v is a vertex").graph) >= k
    })
}

/// Outcome of the friendship-subgraph check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendshipVerdict {
    pub verdict: BoundVerdict,
    pub witness: Option<FriendshipWitness>,
    /// A witness exists whose center has maximum monochromatic degree.
    pub centered_at_max_mono: bool,
}

impl FriendshipVerdict {
    /// The center-pinned form holds or is inapplicable.
    pub fn strong_satisfied(&self) -> bool {
        !self.verdict.preconditions_met || self.centered_at_max_mono
    }
}

/// For `k >= 2`, `n >= 50 k^2` and `delta^c >= n/2 + k - 1`, a witness must
/// exist, and in fact one centered at a vertex of maximum monochromatic degree.
pub fn theorem9_verdict(g: &EdgeColoredGraph, k: usize) -> FriendshipVerdict {
    let n = g.vertex_count();
    let d = g.min_color_degree();
    let pre = vec![
        Precondition::new("k >= 2", k >= 2),
        Precondition::new(format!("n = {n} >= 50 k^2 = {}", 50 * k * k), n >= 50 * k * k),
        Precondition::new(
            format!("min color degree {d} >= n/2 + k - 1"),
            2 * d + 2 >= n + 2 * k,
        ),
    ];
    let witness = find_friendship(g, k);
    let top = g.max_mono_degree();
    let centered_at_max_mono = match &witness {
        Some(w) if g.mono_degree(w.center) == top => true,
        // find_friendship tries every max-mono center first
        _ => false,
    };
    let mut verdict = BoundVerdict::at_least(TheoremId::Friendship, pre, int(1), witness.is_some() as u64)
        .with_param("k", k);
    verdict = verdict.with_note(format!(
        "witness centered at a maximum monochromatic degree vertex: {}",
        if centered_at_max_mono { "yes" } else { "no" }
    ));
    FriendshipVerdict {
        verdict,
        witness,
        centered_at_max_mono,
    }
}

/// Graphs with more than `ex(n, F_k)` edges contain `F_k` (for `n >= 50 k^2`).
pub fn efgs95_verdict(g: &EdgeColoredGraph, k: usize) -> Result<BoundVerdict> {
    let n = g.vertex_count();
    let ex = turan_fk(n, k)?;
    let e = g.edge_count() as u64;
    let pre = vec![
        Precondition::new(format!("n = {n} >= 50 k^2"), ex.in_range),
        Precondition::new(format!("e(G) = {e} > ex(n, F_k) = {}", ex.value), e > ex.value),
    ];
    // the search is only needed when the claim applies
    let found = pre.iter().all(|p| p.met) && contains_plain_friendship(g, k);
    Ok(BoundVerdict::at_least(TheoremId::Efgs95, pre, int(1), found as u64)
        .with_param("k", k)
        .with_param("ex", ex.value))
}

/// Graphs with matching number at most `k` have at most
/// `erdos_gallai_bound(n, k)` edges.
pub fn eg59_verdict(g: &EdgeColoredGraph, k: usize) -> Result<BoundVerdict> {
    let n = g.vertex_count();
    let bound = crate::bounds::erdos_gallai_bound(n, k)?;
    let plain = SimpleGraph::new(n, g.edges().iter().map(|e| (e.u, e.v)))?;
    let nu = matching_number(&plain);
    Ok(BoundVerdict::new(
        TheoremId::Eg59,
        vec![Precondition::new(format!("matching number {nu} <= k"), nu <= k)],
        int(bound as i128),
        g.edge_count() as i128,
        crate::bounds::Relation::AtMost,
    )
    .with_param("k", k)
    .with_param("matching_number", nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Outcome;
    use crate::generators::{friendship_underlying, proper_complete_bipartite, rainbow_complete};

    #[test]
    fn link_graphs() {
        let k5 = rainbow_complete(5);
        let l = rainbow_link_graph(&k5, 0).unwrap();
        assert_eq!((l.graph.vertex_count(), l.graph.edge_count()), (4, 6));
        let bip = proper_complete_bipartite(4).unwrap();
        assert_eq!(rainbow_link_graph(&bip, 3).unwrap().graph.edge_count(), 0);
        let mono = EdgeColoredGraph::new(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        assert_eq!(rainbow_link_graph(&mono, 0).unwrap().graph.edge_count(), 0);
        assert_eq!(plain_link_graph(&mono, 0).unwrap().graph.edge_count(), 1);
    }

    #[test]
    fn witnesses() {
        let k5 = rainbow_complete(5);
        let w = find_friendship(&k5, 2).unwrap();
        assert!(w.is_valid_in(&k5));
        assert_eq!(w.triangles.len(), 2);
        assert!(find_friendship(&k5, 3).is_none());
        assert!(find_friendship(&proper_complete_bipartite(4).unwrap(), 1).is_none());
        let f3 = friendship_underlying(3).unwrap();
        let w = find_friendship(&f3, 3).unwrap();
        assert_eq!(w.center, 0);
        assert!(w.is_valid_in(&f3));
        let empty = find_friendship(&k5, 0).unwrap();
        assert!(empty.triangles.is_empty());
    }

    #[test]
    fn invalid_witness_detected() {
        let k5 = rainbow_complete(5);
        let w = FriendshipWitness { center: 0, triangles: vec![(1, 2), (2, 3)] };
        assert!(!w.is_valid_in(&k5));
        let w = FriendshipWitness { center: 0, triangles: vec![(1, 0)] };
        assert!(!w.is_valid_in(&k5));
    }

    #[test]
    fn theorem9_small_is_vacuous() {
        let fv = theorem9_verdict(&rainbow_complete(10), 2);
        assert_eq!(fv.verdict.outcome(), Outcome::Vacuous);
        assert!(fv.witness.is_some());
        let fv = theorem9_verdict(&proper_complete_bipartite(4).unwrap(), 2);
        assert!(!fv.verdict.preconditions_met);
        assert!(fv.witness.is_none());
    }

    #[test]
    fn eg59_and_efgs95() {
        let k5 = rainbow_complete(5);
        let v = eg59_verdict(&k5, 2).unwrap();
        assert_eq!((v.observed, v.outcome()), (10, Outcome::Checked));
        assert_eq!(eg59_verdict(&k5, 1).unwrap().outcome(), Outcome::Vacuous);
        let v = efgs95_verdict(&k5, 1).unwrap();
        assert_eq!(v.outcome(), Outcome::Vacuous);
    }
}
