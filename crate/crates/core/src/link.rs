//! Per-vertex link structures and the per-vertex rainbow triangle bounds.
//!
//! For a center `v`, the link digraph lives on `N(v)` and has an arc `a -> b`
//! exactly when `ab` is an edge and `C(ab) != C(va)`, i.e. `v a b` is a
//! rainbow path. A 2-cycle `a <-> b` whose spokes `va`, `vb` differ in
//! color is the same thing as a rainbow triangle `vab`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bounds::{dirac_condition, minimality_condition, BoundVerdict, Precondition, TheoremId};
use crate::census::rt_at_vertex;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph, Vertex};
use crate::rational::{frac, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDigraph {
    pub center: Vertex,
    /// `N(center)`, ascending.
    pub nodes: Vec<Vertex>,
    /// Color of the spoke `center-node`, parallel to `nodes`.
    pub spoke_colors: Vec<Color>,
    /// Arcs as `(a, b)` vertex ids, sorted.
    pub arcs: BTreeSet<(Vertex, Vertex)>,
    /// Out- and in-degree per node, parallel to `nodes`.
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
}

impl LinkDigraph {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    fn index_of(&self, v: Vertex) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }

    pub fn out_degree_of(&self, v: Vertex) -> Option<usize> {
        self.index_of(v).map(|i| self.out_degree[i])
    }

    /// 2-cycles `{a, b}` whose spokes have different colors.
    pub fn rainbow_two_cycles(&self) -> Vec<(Vertex, Vertex)> {
        self.arcs
            .iter()
            .filter(|&&(a, b)| a < b && self.arcs.contains(&(b, a)))
            .filter(|&&(a, b)| {
                let (ia, ib) = (self.index_of(a).unwrap(), self.index_of(b).unwrap());
                self.spoke_colors[ia] != self.spoke_colors[ib]
            })
            .copied()
            .collect()
    }
}

pub fn link_digraph(g: &EdgeColoredGraph, v: Vertex) -> Result<LinkDigraph> {
    g.check_vertex(v)?;
    let nodes: Vec<Vertex> = g.neighbors(v).iter().map(|&(a, _)| a).collect();
    let spoke_colors: Vec<Color> = g.neighbors(v).iter().map(|&(_, c)| c).collect();
    let mut arcs = BTreeSet::new();
    let mut out_degree = vec![0; nodes.len()];
    let mut in_degree = vec![0; nodes.len()];
    for (i, &a) in nodes.iter().enumerate() {
        for (j, &b) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(ab) = g.edge_color(a, b) {
                if ab != spoke_colors[i] {
                    arcs.insert((a, b));
                    out_degree[i] += 1;
                    in_degree[j] += 1;
                }
            }
        }
    }
    Ok(LinkDigraph {
        center: v,
        nodes,
        spoke_colors,
        arcs,
        out_degree,
        in_degree,
    })
}

/// Per-vertex lower bound on `rt(G; v)`:
///
/// ```text
/// 1/2 [ sum_{a in N(v)} (d^c(v) + d^c(a) - n)
///     + (n - d(v) - 1)(d(v) - d^c(v))
///     + sum_{a in N(v)} (d_{C(va)}(v) - d_{C(va)}(a)) ]
/// ```
///
/// Class sizes `d_j(x)` are keyed on the raw color id `j`.
pub fn lemma1_rhs(g: &EdgeColoredGraph, v: Vertex) -> Result<Rational> {
    g.check_vertex(v)?;
    let n = g.vertex_count() as i128;
    let d = g.degree(v) as i128;
    let cv = g.color_degree(v) as i128;
    let mut total = (n - d - 1) * (d - cv);
    for &(a, c) in g.neighbors(v) {
        total += cv + g.color_degree(a) as i128 - n;
        total += g.class_size(v, c) as i128 - g.class_size(a, c) as i128;
    }
    Ok(frac(total, 2))
}

pub fn lemma1_verdict(g: &EdgeColoredGraph, v: Vertex) -> Result<BoundVerdict> {
    let bound = lemma1_rhs(g, v)?;
    Ok(BoundVerdict::at_least(
        TheoremId::Lemma1,
        vec![dirac_condition(g), minimality_condition(g)],
        bound,
        rt_at_vertex(g, v)?,
    )
    .with_param("v", v))
}

/// A maximum monochromatic neighbor class `x` at `center` and a set `y` of
/// neighbors with pairwise distinct spoke colors, none equal to `x`'s color.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XYSelection {
    pub center: Vertex,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    /// `min { d^c(u) + |y| + 1 : u in x ∪ y }`
    pub f_value: usize,
}

fn invalid(v: Vertex, reason: impl Into<String>) -> Error {
    Error::InvalidSelection {
        vertex: v,
        reason: reason.into(),
    }
}

impl XYSelection {
    /// Validates an arbitrary selection and computes its `f_value`.
    pub fn from_parts(g: &EdgeColoredGraph, center: Vertex, x: Vec<Vertex>, y: Vec<Vertex>) -> Result<Self> {
        g.check_vertex(center)?;
        let spoke = |a: Vertex| g.edge_color(center, a).ok_or_else(|| invalid(center, format!("{a} is not a neighbor")));
        let Some(&x0) = x.first() else {
            return Err(invalid(center, "empty X"));
        };
        let x_color = spoke(x0)?;
        for &a in &x {
            if spoke(a)? != x_color {
                return Err(invalid(center, "X is not monochromatic"));
            }
        }
        if x.iter().collect::<BTreeSet<_>>().len() != x.len() {
            return Err(invalid(center, "repeated vertex in X"));
        }
        if x.len() != g.mono_degree(center) {
            return Err(invalid(center, "X is not a maximum monochromatic class"));
        }
        let mut seen = BTreeSet::from([x_color]);
        for &a in &y {
            if !seen.insert(spoke(a)?) {
                return Err(invalid(center, "Y spoke colors repeat or meet X's color"));
            }
        }
        let f_value = x
            .iter()
            .chain(&y)
            .map(|&u| g.color_degree(u) + y.len() + 1)
            .min()
            .expect("X is nonempty");
        Ok(XYSelection { center, x, y, f_value })
    }
}

/// Canonical selection: `X` is the largest class (ties: smallest color);
/// `Y` takes the `y_size` smallest other colors and, for each, the neighbor
/// of smallest monochromatic degree (ties: smallest id).
pub fn select_xy(g: &EdgeColoredGraph, v: Vertex, y_size: usize) -> Result<XYSelection> {
    g.check_vertex(v)?;
    let cdeg = g.color_degree(v);
    if cdeg == 0 || y_size > cdeg - 1 {
        return Err(Error::out_of_range("y_size", y_size, format!("y_size <= d^c(v) - 1 = {}", cdeg as i64 - 1)));
    }
    let mut by_color: BTreeMap<Color, Vec<Vertex>> = BTreeMap::new();
    for &(a, c) in g.neighbors(v) {
        by_color.entry(c).or_default().push(a);
    }
    let (&x_color, _) = by_color
        .iter()
        .max_by_key(|(&c, members)| (members.len(), std::cmp::Reverse(c)))
        .expect("v has a neighbor");
    let x = by_color[&x_color].clone();
    let y = by_color
        .iter()
        .filter(|(&c, _)| c != x_color)
        .take(y_size)
        .map(|(_, members)| *members.iter().min_by_key(|&&a| (g.mono_degree(a), a)).unwrap())
        .collect();
    XYSelection::from_parts(g, v, x, y)
}

/// `1/2 [ (d^mon(v) + |Y|)(f - n) + (|Y| d^mon(v) - sum_{a in Y} d^mon(a)) ]`
pub fn lemma2_rhs(g: &EdgeColoredGraph, v: Vertex, sel: &XYSelection) -> Result<Rational> {
    g.check_vertex(v)?;
    if sel.center != v {
        return Err(invalid(v, format!("selection is centered at {}", sel.center)));
    }
    // revalidate: the selection may have been built against another graph
    let checked = XYSelection::from_parts(g, v, sel.x.clone(), sel.y.clone())?;
    let n = g.vertex_count() as i128;
    let mono = g.mono_degree(v) as i128;
    let ysz = checked.y.len() as i128;
    let y_mono: i128 = checked.y.iter().map(|&a| g.mono_degree(a) as i128).sum();
    Ok(frac((mono + ysz) * (checked.f_value as i128 - n) + (ysz * mono - y_mono), 2))
}

/// Arcs of `D_v` that enter `X` from outside without a reverse arc. The
/// bound above silently assumes there are none, which holds when
/// `d^mon(v) >= 2` in a minimal graph but not when `X = {x}` and `x` carries
/// further edges of the color `C(vx)`: each such edge `xa` gives `a -> x`.
pub fn lemma2_hidden_in_arcs(g: &EdgeColoredGraph, v: Vertex, sel: &XYSelection) -> Result<usize> {
    g.check_vertex(v)?;
    let Some(&x) = sel.x.first() else {
        return Err(invalid(v, "empty X"));
    };
    let c = g.edge_color(v, x).ok_or(Error::NotAnEdge(v, x))?;
    Ok(if g.mono_degree(v) == 1 { g.class_size(x, c) - 1 } else { 0 })
}

/// The stated bound, plus a precondition that no hidden in-arcs exist. When
/// they do, the note gives the repaired bound `rhs - hidden/2`.
pub fn lemma2_verdict(g: &EdgeColoredGraph, v: Vertex, sel: &XYSelection) -> Result<BoundVerdict> {
    let bound = lemma2_rhs(g, v, sel)?;
    let hidden = lemma2_hidden_in_arcs(g, v, sel)?;
    let pre = vec![
        minimality_condition(g),
        Precondition::new(
            format!("d^mon(v) >= 2 or the X vertex has no other edge of its spoke color ({hidden} found)"),
            hidden == 0,
        ),
    ];
    let mut verdict = BoundVerdict::at_least(TheoremId::Lemma2, pre, bound, rt_at_vertex(g, v)?)
        .with_param("v", v)
        .with_param("y_size", sel.y.len())
        .with_note(format!("min color degree {}", g.min_color_degree()));
    if hidden > 0 {
        let repaired = bound - frac(hidden as i128, 2);
        verdict = verdict.with_note(format!("repaired bound {}", crate::rational::to_text(&repaired)));
    }
    Ok(verdict)
}

/// Sides of the averaging inequality over the top-`k` vertices by
/// monochromatic degree, each with a canonical `Y` of size `delta^c - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Proposition2 {
    pub lhs: i64,
    pub rhs: i64,
}

impl Proposition2 {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs && self.rhs >= 0
    }
}

pub fn proposition2_check(g: &EdgeColoredGraph, k: usize) -> Result<Proposition2> {
    let delta = g.min_color_degree();
    if k == 0 || k >= delta {
        return Err(Error::out_of_range("k", k, format!("1 <= k <= {}", delta as i64 - 1)));
    }
    let order = g.mono_order();
    let mono = |v: Vertex| g.mono_degree(v) as i64;
    let mut lhs = 0;
    for &v in &order[..k] {
        let sel = select_xy(g, v, delta - 1)?;
        lhs += sel.y.len() as i64 * mono(v) - sel.y.iter().map(|&a| mono(a)).sum::<i64>();
    }
    let top_k: i64 = order[..k].iter().map(|&v| mono(v)).sum();
    let top_delta: i64 = order[..delta].iter().map(|&v| mono(v)).sum();
    Ok(Proposition2 {
        lhs,
        rhs: delta as i64 * top_k - k as i64 * top_delta,
    })
}

/// At the first vertex of the monochromatic order:
/// `rt(G; v) >= 1/2 (Delta^mon + d^c(v) - 1)(delta^c + d^c(v) - n)`.
pub fn lemma4_verdict(g: &EdgeColoredGraph) -> BoundVerdict {
    let n = g.vertex_count();
    let Some(&v) = g.mono_order().first() else {
        return BoundVerdict::at_least(
            TheoremId::Lemma4,
            vec![Precondition::new("at least one vertex", false)],
            frac(0, 1),
            0,
        );
    };
    let cv = g.color_degree(v) as i128;
    let bound = frac(
        (g.max_mono_degree() as i128 + cv - 1) * (g.min_color_degree() as i128 + cv - n as i128),
        2,
    );
    BoundVerdict::at_least(
        TheoremId::Lemma4,
        // edgeless graphs make both factors negative
        vec![minimality_condition(g), Precondition::new("G has at least one edge", cv > 0)],
        bound,
        rt_at_vertex(g, v).expect("v is a vertex"),
    )
    .with_param("v", v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{proper_complete_bipartite, rainbow_complete, rainbow_turan};
    use crate::rational::int;

    #[test]
    fn digraph_examples() {
        let d = link_digraph(&rainbow_complete(4), 0).unwrap();
        assert_eq!(d.arc_count(), 6);
        assert_eq!(d.rainbow_two_cycles().len(), 3);
        let mono = EdgeColoredGraph::new(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)]).unwrap();
        assert_eq!(link_digraph(&mono, 0).unwrap().arc_count(), 0);
        let g = EdgeColoredGraph::new(3, [(0, 1, 0), (0, 2, 0), (1, 2, 1)]).unwrap();
        let d = link_digraph(&g, 0).unwrap();
        assert_eq!(d.arcs, BTreeSet::from([(1, 2), (2, 1)]));
        // both spokes share color 0: not a rainbow triangle
        assert!(d.rainbow_two_cycles().is_empty());
        assert!(link_digraph(&g, 3).is_err());
    }

    #[test]
    fn lemma1_examples() {
        let k4 = rainbow_complete(4);
        assert!(k4.vertices().all(|v| lemma1_rhs(&k4, v).unwrap() == int(3)));
        let k5 = rainbow_complete(5);
        assert_eq!(lemma1_rhs(&k5, 2).unwrap(), int(6));
        let t = rainbow_turan(9, 3).unwrap();
        let v = lemma1_verdict(&t, 0).unwrap();
        assert_eq!((v.bound, v.observed), (int(9), 9));
        assert!(v.preconditions_met && v.satisfied);
    }

    #[test]
    fn xy_selection() {
        let k4 = rainbow_complete(4);
        let s = select_xy(&k4, 0, 2).unwrap();
        assert_eq!((s.x.len(), s.y.len(), s.f_value), (1, 2, 6));
        assert!(select_xy(&k4, 0, 3).is_err());

        // center 0: color 1 on three spokes, color 2 on one
        let star = EdgeColoredGraph::new(5, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 2)]).unwrap();
        let s = select_xy(&star, 0, 1).unwrap();
        assert_eq!((s.x, s.y), (vec![1, 2, 3], vec![4]));

        assert!(XYSelection::from_parts(&star, 0, vec![1, 2], vec![4]).is_err());
        assert!(XYSelection::from_parts(&star, 0, vec![1, 2, 3], vec![1]).is_err());
        assert!(XYSelection::from_parts(&star, 0, vec![4], vec![]).is_err());
    }

    #[test]
    fn lemma2_examples() {
        let k4 = rainbow_complete(4);
        let s = select_xy(&k4, 0, 2).unwrap();
        assert_eq!(lemma2_rhs(&k4, 0, &s).unwrap(), int(3));
        let k5 = rainbow_complete(5);
        let s = select_xy(&k5, 1, 3).unwrap();
        assert_eq!(lemma2_rhs(&k5, 1, &s).unwrap(), int(6));
        assert!(lemma2_rhs(&k5, 0, &s).is_err());
        let v = lemma2_verdict(&k5, 1, &s).unwrap();
        assert!(v.preconditions_met && v.satisfied);
    }

    fn single_x_counterexample() -> EdgeColoredGraph {
        EdgeColoredGraph::new(
            5,
            [(0, 1, 14), (0, 2, 14), (0, 3, 22), (0, 4, 23), (1, 2, 24), (1, 4, 21), (2, 3, 25), (3, 4, 13)],
        )
        .unwrap()
    }

    #[test]
    fn lemma2_single_x_with_hidden_arc() {
        let g = single_x_counterexample();
        assert!(crate::reduction::is_edge_minimal(&g));
        assert_eq!(g.min_color_degree(), 3);
        let s = XYSelection::from_parts(&g, 1, vec![0], vec![4, 2]).unwrap();
        assert_eq!(s.f_value, 6);
        // the unrepaired inequality really fails here
        assert_eq!(lemma2_rhs(&g, 1, &s).unwrap(), frac(3, 2));
        assert_eq!(rt_at_vertex(&g, 1).unwrap(), 1);
        assert_eq!(lemma2_hidden_in_arcs(&g, 1, &s).unwrap(), 1);
        let v = lemma2_verdict(&g, 1, &s).unwrap();
        assert_eq!(v.outcome(), crate::bounds::Outcome::Vacuous);
        assert!(v.notes.iter().any(|n| n == "repaired bound 1/1"));
    }

    #[test]
    fn proposition2_examples() {
        let p = proposition2_check(&rainbow_complete(5), 2).unwrap();
        assert_eq!(p.rhs, 0);
        assert!(p.holds());
        assert!(proposition2_check(&rainbow_complete(5), 4).is_err());
    }

    #[test]
    fn lemma4_examples() {
        let v = lemma4_verdict(&rainbow_complete(4));
        assert_eq!((v.bound, v.observed), (int(3), 3));
        let v = lemma4_verdict(&rainbow_complete(5));
        assert_eq!((v.bound, v.observed), (int(6), 6));
        let v = lemma4_verdict(&proper_complete_bipartite(4).unwrap());
        assert_eq!((v.bound, v.observed, v.satisfied), (int(0), 0, true));
        let v = lemma4_verdict(&EdgeColoredGraph::empty(4));
        assert_eq!((v.bound, v.preconditions_met), (int(2), false));
    }
}
