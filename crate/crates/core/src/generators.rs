//! Extremal constructions and seeded random models.
//!
//! All constructions are rainbow unless stated otherwise. Colors are
//! assigned `0, 1, 2, ...` in the order edges are emitted, so every
//! generator is fully deterministic. Random models use ChaCha8 seeded from
//! a `u64`; the same parameters and seed always give the same graph.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph, Vertex};

fn rainbow_from_pairs(n: usize, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> EdgeColoredGraph {
    let edges = pairs
        .into_iter()
        .enumerate()
        .map(|(c, (u, v))| (u, v, c as Color));
    EdgeColoredGraph::new(n, edges).expect("constructions emit simple graphs")
}

/// `K_n` with all edge colors distinct.
pub fn rainbow_complete(n: usize) -> EdgeColoredGraph {
    rainbow_from_pairs(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Complete balanced `k`-partite graph on `n` vertices, rainbow-colored.
/// Part `i` is the block `i*n/k .. (i+1)*n/k`.
pub fn rainbow_turan(n: usize, k: usize) -> Result<EdgeColoredGraph> {
    if k < 3 {
        return Err(Error::out_of_range("k", k, "k >= 3"));
    }
    if n % k != 0 {
        return Err(Error::out_of_range("n", n, format!("a multiple of k = {k}")));
    }
    let part = n / k;
    Ok(rainbow_from_pairs(
        n,
        (0..n).flat_map(|u| (u + 1..n).filter(move |v| u / part != v / part).map(move |v| (u, v))),
    ))
}

/// `K_{m,m}` with the cyclic proper coloring `color(i, j) = (i + j) mod m`.
/// Left side is `0..m`, right side `m..2m`.
pub fn proper_complete_bipartite(m: usize) -> Result<EdgeColoredGraph> {
    if m == 0 {
        return Err(Error::out_of_range("m", m, "m >= 1"));
    }
    let edges = (0..m).flat_map(|i| (0..m).map(move |j| (i, m + j, ((i + j) % m) as Color)));
    EdgeColoredGraph::new(2 * m, edges)
}

/// Two halves of size `n/2`, complete bipartite between them, plus a perfect
/// matching inside each half. Requires `4 | n`. Has exactly `n^2/4` rainbow
/// triangles.
pub fn example2(n: usize) -> Result<EdgeColoredGraph> {
    if n < 4 || n % 4 != 0 {
        return Err(Error::out_of_range("n", n, "n >= 4 and n = 0 (mod 4)"));
    }
    let half = n / 2;
    let matching = (0..n).step_by(2).map(|u| (u, u + 1));
    let cross = (0..half).flat_map(|u| (half..n).map(move |v| (u, v)));
    Ok(rainbow_from_pairs(n, matching.chain(cross)))
}

/// One side of size `(n+1)/2` carrying a perfect matching, the other of size
/// `(n-1)/2`, complete bipartite between them. The matching exists only for
/// `n = 3 (mod 4)`. Has exactly `(n^2-1)/8` rainbow triangles.
pub fn example3(n: usize) -> Result<EdgeColoredGraph> {
    if n < 3 || n % 4 != 3 {
        return Err(Error::out_of_range("n", n, "n >= 3 and n = 3 (mod 4)"));
    }
    let big = (n + 1) / 2;
    let matching = (0..big).step_by(2).map(|u| (u, u + 1));
    let cross = (0..big).flat_map(|u| (big..n).map(move |v| (u, v)));
    Ok(rainbow_from_pairs(n, matching.chain(cross)))
}

/// Note attached to reports about graphs from [`example3`].
pub const EXAMPLE3_MODULUS_NOTE: &str = "odd-order upper-bound construction: a perfect matching on (n+1)/2 \
     vertices needs n = 3 (mod 4); the modulus n = 1 (mod 4) admits no such matching, so the \
     generator accepts n = 3 (mod 4) only";

/// Note attached to reports about even orders that are not multiples of 4.
pub const EVEN_MODULUS_NOTE: &str = "even-order upper-bound construction needs n = 0 (mod 4); \
     no construction is available for n = 2 (mod 4)";

/// The friendship graph `F_k`: hub `0` and triangles `{0, 2i+1, 2i+2}`, rainbow.
pub fn friendship_underlying(k: usize) -> Result<EdgeColoredGraph> {
    if k == 0 {
        return Err(Error::out_of_range("k", k, "k >= 1"));
    }
    let pairs = (0..k).flat_map(|i| {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        [(0, a), (0, b), (a, b)]
    });
    Ok(rainbow_from_pairs(2 * k + 1, pairs))
}

/// `G(n, p)` with each edge colored uniformly from `0..colors`.
pub fn random_colored(n: usize, p: f64, colors: u64, seed: u64) -> Result<EdgeColoredGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange {
            name: "p",
            value: p as i64,
            expected: "0 <= p <= 1".into(),
        });
    }
    if colors == 0 {
        return Err(Error::out_of_range("colors", colors, "colors >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, rng.gen_range(0..colors)));
            }
        }
    }
    EdgeColoredGraph::new(n, edges)
}

/// Random graph with minimum color degree at least `target`.
///
/// Starts from `random_colored(n, 0.5, n^2, seed)`. While some vertex is
/// short of colors, the smallest such vertex gets a new edge to a random
/// non-neighbor, colored with a fresh color above every color in use. A
/// vertex adjacent to everything instead has one of its repeated-color edges
/// recolored fresh; recoloring never lowers any color degree.
pub fn random_high_color_degree(n: usize, target: usize, seed: u64) -> Result<EdgeColoredGraph> {
    if n == 0 || target > n - 1 {
        return Err(Error::out_of_range("target", target, format!("target <= n - 1 = {}", n.saturating_sub(1))));
    }
    let base = random_colored(n, 0.5, (n * n) as u64, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut colors: Vec<Option<Color>> = vec![None; n * n];
    for e in base.edges() {
        colors[e.u * n + e.v] = Some(e.color);
        colors[e.v * n + e.u] = Some(e.color);
    }
    let mut next_color = base.max_color().map_or(0, |c| c + 1);
    let color_degree = |colors: &[Option<Color>], v: Vertex| {
        colors[v * n..(v + 1) * n].iter().flatten().collect::<BTreeSet<_>>().len()
    };
    let mut v = 0;
    while v < n {
        if color_degree(&colors, v) >= target {
            v += 1;
            continue;
        }
        let non_neighbors: Vec<Vertex> = (0..n).filter(|&w| w != v && colors[v * n + w].is_none()).collect();
        let w = match non_neighbors.choose(&mut rng) {
            Some(&w) => w,
            None => {
                // first neighbor whose edge color repeats at v
                let row = &colors[v * n..(v + 1) * n];
                (0..n)
                    .find(|&w| {
                        row[w].is_some_and(|c| row.iter().filter(|&&x| x == Some(c)).count() >= 2)
                    })
                    .expect("a vertex adjacent to all others with d^c < n-1 repeats a color")
            }
        };
        colors[v * n + w] = Some(next_color);
        colors[w * n + v] = Some(next_color);
        next_color += 1;
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter_map(|(u, w)| colors[u * n + w].map(|c| (u, w, c)));
    EdgeColoredGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::count_rainbow_bruteforce;

    #[test]
    fn complete_and_turan() {
        assert_eq!(count_rainbow_bruteforce(&rainbow_complete(3)).total, 1);
        assert_eq!(count_rainbow_bruteforce(&rainbow_complete(5)).total, 10);
        assert_eq!(rainbow_complete(4).min_color_degree(), 3);
        let t = rainbow_turan(9, 3).unwrap();
        assert_eq!(t.min_color_degree(), 6);
        assert_eq!(count_rainbow_bruteforce(&t).total, 27);
        assert_eq!(count_rainbow_bruteforce(&rainbow_turan(12, 4).unwrap()).total, 108);
        assert!(rainbow_turan(8, 3).is_err());
        assert!(rainbow_turan(8, 2).is_err());
    }

    #[test]
    fn proper_bipartite() {
        let g = proper_complete_bipartite(4).unwrap();
        assert_eq!(g.min_color_degree(), 4);
        assert!(g.is_properly_colored());
        assert_eq!(proper_complete_bipartite(1).unwrap().edge_count(), 1);
        let g3 = proper_complete_bipartite(3).unwrap();
        for v in g3.vertices() {
            assert_eq!(g3.color_neighborhood(v).collect::<Vec<_>>(), vec![0, 1, 2]);
        }
    }

    #[test]
    fn two_part_constructions() {
        let g = example2(8).unwrap();
        assert_eq!(count_rainbow_bruteforce(&g).total, 16);
        assert_eq!(g.min_color_degree(), 5);
        assert!(example2(6).is_err());
        let h = example3(7).unwrap();
        assert_eq!(count_rainbow_bruteforce(&h).total, 6);
        assert_eq!(h.min_color_degree(), 4);
        assert!(example3(9).is_err());
    }

    #[test]
    fn friendship_graphs() {
        let f1 = friendship_underlying(1).unwrap();
        assert_eq!((f1.vertex_count(), f1.edge_count()), (3, 3));
        let f3 = friendship_underlying(3).unwrap();
        assert_eq!((f3.vertex_count(), f3.edge_count()), (7, 9));
        assert_eq!(count_rainbow_bruteforce(&f3).total, 3);
        assert_eq!(friendship_underlying(2).unwrap().degree(0), 4);
    }

    #[test]
    fn random_models() {
        assert_eq!(random_colored(10, 0.0, 5, 1).unwrap().edge_count(), 0);
        let k10 = random_colored(10, 1.0, 1, 1).unwrap();
        assert_eq!(k10.edge_count(), 45);
        assert_eq!(count_rainbow_bruteforce(&k10).total, 0);
        assert_eq!(random_colored(30, 0.5, 400, 42).unwrap(), random_colored(30, 0.5, 400, 42).unwrap());
        assert!(random_colored(5, 1.5, 3, 0).is_err());
        assert!(random_colored(5, 0.5, 0, 0).is_err());

        let g = random_high_color_degree(20, 11, 7).unwrap();
        assert!(g.min_color_degree() >= 11);
        let h = random_high_color_degree(9, 5, 3).unwrap();
        assert!(count_rainbow_bruteforce(&h).total >= 1);
        assert!(random_high_color_degree(20, 20, 0).is_err());
        assert!(random_high_color_degree(6, 5, 11).unwrap().min_color_degree() >= 5);
    }
}
