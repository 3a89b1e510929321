//! Reference implementations used as test oracles. They work on raw edge
//! lists and share no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use rainbow_census::EdgeColoredGraph;

pub type RawEdge = (usize, usize, u64);

pub fn raw_edges(g: &EdgeColoredGraph) -> Vec<RawEdge> {
    g.edges().iter().map(|e| (e.u, e.v, e.color)).collect()
}

fn color_map(edges: &[RawEdge]) -> HashMap<(usize, usize), u64> {
    edges.iter().flat_map(|&(u, v, c)| [((u, v), c), ((v, u), c)]).collect()
}

/// `(total, per_vertex)` by checking every triple.
pub fn oracle_census(n: usize, edges: &[RawEdge]) -> (u64, Vec<u64>) {
    let col = color_map(edges);
    let mut per = vec![0u64; n];
    let mut total = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let (Some(x), Some(y), Some(z)) = (col.get(&(a, b)), col.get(&(b, c)), col.get(&(a, c))) {
                    if x != y && y != z && x != z {
                        total += 1;
                        per[a] += 1;
                        per[b] += 1;
                        per[c] += 1;
                    }
                }
            }
        }
    }
    (total, per)
}

pub fn oracle_color_degrees(n: usize, edges: &[RawEdge]) -> Vec<usize> {
    let mut sets = vec![BTreeSet::new(); n];
    for &(u, v, c) in edges {
        sets[u].insert(c);
        sets[v].insert(c);
    }
    sets.iter().map(BTreeSet::len).collect()
}

/// Deleting edge `i` keeps every color degree.
pub fn oracle_removable(n: usize, edges: &[RawEdge], i: usize) -> bool {
    let mut rest = edges.to_vec();
    rest.remove(i);
    oracle_color_degrees(n, edges) == oracle_color_degrees(n, &rest)
}

/// Each color class is a disjoint union of stars: in every component of
/// the class, some vertex touches all of the component's edges.
pub fn oracle_star_forests(n: usize, edges: &[RawEdge]) -> bool {
    let colors: BTreeSet<u64> = edges.iter().map(|e| e.2).collect();
    colors.into_iter().all(|c| {
        let class: Vec<(usize, usize)> = edges.iter().filter(|e| e.2 == c).map(|e| (e.0, e.1)).collect();
        // union-find over the class
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(u, v) in &class {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        let mut comps: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for &(u, v) in &class {
            let r = find(&mut parent, u);
            comps.entry(r).or_default().push((u, v));
        }
        comps.values().all(|es| {
            let verts: BTreeSet<usize> = es.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.iter().any(|&x| es.iter().all(|&(u, v)| u == x || v == x))
        })
    })
}

/// Maximum matching size by exhaustive recursion over the lowest free vertex.
pub fn oracle_matching_number(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn best(adj: &[u64], free: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if free == 0 {
            return 0;
        }
        if let Some(&m) = memo.get(&free) {
            return m;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut m = best(adj, rest, memo);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            m = m.max(1 + best(adj, rest & !(1 << w), memo));
        }
        memo.insert(free, m);
        m
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    best(&adj, all, &mut HashMap::new())
}

/// Rainbow triangles at `v` listed as neighbor pairs.
pub fn oracle_rainbow_pairs_at(n: usize, edges: &[RawEdge], v: usize) -> Vec<(usize, usize)> {
    let col = color_map(edges);
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if let (Some(x), Some(y), Some(z)) = (col.get(&(v, a)), col.get(&(v, b)), col.get(&(a, b))) {
                if x != y && y != z && x != z {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

/// Random simple edge-colored graph: `n` in `1..=max_n`, colors in `0..colors`.
pub fn arb_graph(max_n: usize, max_colors: u64) -> impl Strategy<Value = EdgeColoredGraph> {
    (1..=max_n, 1..=max_colors).prop_flat_map(|(n, colors)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::option::weighted(0.6, 0..colors), pairs).prop_map(move |slots| {
            let mut edges = Vec::new();
            let mut it = slots.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if let Some(c) = it.next().unwrap() {
                        edges.push((u, v, c));
                    }
                }
            }
            EdgeColoredGraph::new(n, edges).unwrap()
        })
    })
}

/// Dense graphs with palettes of size `n`, `2n` or `n^2`, so color-degree
/// hypotheses often hold while colors still repeat.
pub fn arb_dense_graph(max_n: usize) -> impl Strategy<Value = EdgeColoredGraph> {
    (3..=max_n, 0..3usize).prop_flat_map(|(n, palette)| {
        let pairs = n * (n - 1) / 2;
        let colors = [n, 2 * n, n * n][palette] as u64;
        proptest::collection::vec(proptest::option::weighted(0.85, 0..colors), pairs).prop_map(move |slots| {
            let mut edges = Vec::new();
            let mut it = slots.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if let Some(c) = it.next().unwrap() {
                        edges.push((u, v, c));
                    }
                }
            }
            EdgeColoredGraph::new(n, edges).unwrap()
        })
    })
}
