//! Exact evaluators for the rainbow-triangle lower bounds.
//!
//! Every evaluator returns a [`BoundVerdict`]: the instance's preconditions,
//! the bound as an exact rational, the observed count from the census and
//! whether the inequality holds. Inapplicable instances are reported as
//! vacuous, never as failures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::census::{count_rainbow_fast, TriangleCensus};
use crate::error::{Error, Result};
use crate::generators::{EVEN_MODULUS_NOTE, EXAMPLE3_MODULUS_NOTE};
use crate::graph::{Color, EdgeColoredGraph, Vertex};
use crate::rational::{frac, int, Rational};
use crate::reduction::is_edge_minimal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    /// `delta^c >= (n+1)/2` forces a rainbow triangle.
    T1,
    /// `delta^c >= n/2` forces one, unless properly colored `K_{n/2,n/2}`.
    T2,
    Main1,
    StrongMain1,
    Rt1,
    Rt2,
    CnUnion,
    Main2,
    Topk,
    Efgs95,
    Eg59,
    Prop1,
    Lemma1,
    Lemma2,
    Lemma4,
    Friendship,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::Main1,
        TheoremId::StrongMain1,
        TheoremId::Rt1,
        TheoremId::Rt2,
        TheoremId::CnUnion,
        TheoremId::Main2,
        TheoremId::Topk,
        TheoremId::Efgs95,
        TheoremId::Eg59,
        TheoremId::Prop1,
        TheoremId::Lemma1,
        TheoremId::Lemma2,
        TheoremId::Lemma4,
        TheoremId::Friendship,
    ];

    pub fn token(self) -> &'static str {
        match self {
            TheoremId::T1 => "t1",
            TheoremId::T2 => "t2",
            TheoremId::Main1 => "main1",
            TheoremId::StrongMain1 => "strong-main1",
            TheoremId::Rt1 => "rt1",
            TheoremId::Rt2 => "rt2",
            TheoremId::CnUnion => "cn-union",
            TheoremId::Main2 => "main2",
            TheoremId::Topk => "topk",
            TheoremId::Efgs95 => "efgs95",
            TheoremId::Eg59 => "eg59",
            TheoremId::Prop1 => "prop1",
            TheoremId::Lemma1 => "lemma1",
            TheoremId::Lemma2 => "lemma2",
            TheoremId::Lemma4 => "lemma4",
            TheoremId::Friendship => "friendship",
        }
    }

    /// Whether the statement assumes an edge-minimal graph.
    pub fn needs_minimality(self) -> bool {
        matches!(
            self,
            TheoremId::Main1
                | TheoremId::StrongMain1
                | TheoremId::Main2
                | TheoremId::Lemma1
                | TheoremId::Lemma2
                | TheoremId::Lemma4
        )
    }

    /// Parses a comma-separated list; `all` expands to every theorem.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok.eq_ignore_ascii_case("all") {
                out.extend(TheoremId::ALL);
            } else {
                out.push(tok.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.token() == norm)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Direction of the checked inequality `observed (rel) bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

impl Relation {
    pub fn holds(self, observed: Rational, bound: Rational) -> bool {
        match self {
            Relation::AtLeast => observed >= bound,
            Relation::AtMost => observed <= bound,
            Relation::Equal => observed == bound,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
            Relation::Equal => "==",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precondition {
    pub description: String,
    pub met: bool,
}

impl Precondition {
    pub fn new(description: impl Into<String>, met: bool) -> Self {
        Precondition {
            description: description.into(),
            met,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Preconditions hold and the inequality holds.
    Checked,
    /// Preconditions fail; nothing is claimed.
    Vacuous,
    /// Preconditions hold and the inequality fails.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub theorem: TheoremId,
    pub preconditions: Vec<Precondition>,
    pub preconditions_met: bool,
    #[serde(with = "crate::rational")]
    pub bound: Rational,
    pub observed: i128,
    pub relation: Relation,
    pub satisfied: bool,
    pub parameters: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundVerdict {
    pub fn new(
        theorem: TheoremId,
        preconditions: Vec<Precondition>,
        bound: Rational,
        observed: i128,
        relation: Relation,
    ) -> Self {
        let preconditions_met = preconditions.iter().all(|p| p.met);
        let satisfied = !preconditions_met || relation.holds(int(observed), bound);
        BoundVerdict {
            theorem,
            preconditions,
            preconditions_met,
            bound,
            observed,
            relation,
            satisfied,
            parameters: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn at_least(theorem: TheoremId, preconditions: Vec<Precondition>, bound: Rational, observed: u64) -> Self {
        Self::new(theorem, preconditions, bound, observed as i128, Relation::AtLeast)
    }

    pub fn with_param(mut self, name: &str, value: impl TryInto<i64>) -> Self {
        self.parameters
            .insert(name.to_string(), value.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn outcome(&self) -> Outcome {
        match (self.preconditions_met, self.satisfied) {
            (false, _) => Outcome::Vacuous,
            (true, true) => Outcome::Checked,
            (true, false) => Outcome::Violated,
        }
    }

    /// `observed - bound` (negated for upper bounds), so positive means room to spare.
    pub fn slack(&self) -> Rational {
        match self.relation {
            Relation::AtMost => self.bound - int(self.observed),
            _ => int(self.observed) - self.bound,
        }
    }

    pub fn unmet_preconditions(&self) -> impl Iterator<Item = &Precondition> {
        self.preconditions.iter().filter(|p| !p.met)
    }
}

/// `2 * delta^c >= n + 1`.
pub(crate) fn dirac_condition(g: &EdgeColoredGraph) -> Precondition {
    let n = g.vertex_count();
    let d = g.min_color_degree();
    Precondition::new(format!("min color degree {d} >= (n+1)/2 with n = {n}"), 2 * d > n)
}

pub(crate) fn minimality_condition(g: &EdgeColoredGraph) -> Precondition {
    Precondition::new("edge-minimal (no removable edge)", is_edge_minimal(g))
}

/// Values `1, floor(delta/2), delta - 1`, restricted to `1..=delta-1`.
pub fn default_k_values(min_color_degree: usize) -> Vec<usize> {
    let mut ks: Vec<usize> = [1, min_color_degree / 2, min_color_degree.saturating_sub(1)]
        .into_iter()
        .filter(|&k| k >= 1 && k < min_color_degree)
        .collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Graph plus its census, shared by all evaluators.
pub struct BoundContext<'g> {
    pub graph: &'g EdgeColoredGraph,
    pub census: TriangleCensus,
}

impl<'g> BoundContext<'g> {
    pub fn new(graph: &'g EdgeColoredGraph) -> Self {
        BoundContext {
            graph,
            census: count_rainbow_fast(graph),
        }
    }

    pub fn with_census(graph: &'g EdgeColoredGraph, census: TriangleCensus) -> Self {
        BoundContext { graph, census }
    }

    fn n(&self) -> i128 {
        self.graph.vertex_count() as i128
    }

    fn delta(&self) -> i128 {
        self.graph.min_color_degree() as i128
    }

    fn sigma(&self) -> i128 {
        self.graph.sigma2c().unwrap_or(0) as i128
    }

    /// `sum_v (n - d(v) - 1)(d(v) - d^c(v))`
    fn degree_excess_sum(&self) -> i128 {
        let g = self.graph;
        let n = self.n();
        g.vertices()
            .map(|v| {
                let d = g.degree(v) as i128;
                (n - d - 1) * (d - g.color_degree(v) as i128)
            })
            .sum()
    }

    pub fn t1(&self) -> BoundVerdict {
        let n = self.graph.vertex_count();
        BoundVerdict::at_least(
            TheoremId::T1,
            vec![Precondition::new("n >= 3", n >= 3), dirac_condition(self.graph)],
            int(1),
            self.census.total,
        )
    }

    pub fn t2(&self) -> BoundVerdict {
        let g = self.graph;
        let n = g.vertex_count();
        let d = g.min_color_degree();
        let exceptional = is_proper_balanced_complete_bipartite(g);
        let mut v = BoundVerdict::at_least(
            TheoremId::T2,
            vec![
                Precondition::new("n >= 5", n >= 5),
                Precondition::new(format!("min color degree {d} >= n/2 with n = {n}"), 2 * d >= n),
                Precondition::new("not a properly colored balanced complete bipartite graph", !exceptional),
            ],
            int(1),
            self.census.total,
        );
        if exceptional {
            v = v.with_note("exceptional graph: properly colored K_{n/2,n/2}");
        }
        v
    }

    pub fn main1(&self) -> BoundVerdict {
        let n = self.n();
        let e = self.graph.edge_count() as i128;
        let bound = frac(e * (self.sigma() - n), 3) + frac(self.degree_excess_sum(), 6);
        BoundVerdict::at_least(
            TheoremId::Main1,
            vec![dirac_condition(self.graph), minimality_condition(self.graph)],
            bound,
            self.census.total,
        )
    }

    pub fn strong_main1(&self) -> BoundVerdict {
        let g = self.graph;
        let n = self.n();
        let link: i128 = g
            .vertices()
            .map(|v| {
                let cv = g.color_degree(v) as i128;
                g.neighbors(v)
                    .iter()
                    .map(|&(a, _)| cv + g.color_degree(a) as i128 - n)
                    .sum::<i128>()
            })
            .sum();
        BoundVerdict::at_least(
            TheoremId::StrongMain1,
            vec![dirac_condition(g), minimality_condition(g)],
            frac(self.degree_excess_sum() + link, 6),
            self.census.total,
        )
    }

    pub fn rt1(&self) -> BoundVerdict {
        let (n, d) = (self.n(), self.delta());
        BoundVerdict::at_least(TheoremId::Rt1, vec![], frac(d * (2 * d - n) * n, 6), self.census.total)
    }

    pub fn rt2(&self) -> BoundVerdict {
        let g = self.graph;
        let n = g.vertex_count();
        let mut pre = vec![Precondition::new("n >= 3", n >= 3), dirac_condition(g)];
        let (bound, notes) = match f_n_bounds(n) {
            Ok(b) => (b.lower, b.note.map(str::to_string).into_iter().collect::<Vec<_>>()),
            Err(_) => {
                pre[0].met = false;
                (int(0), vec![])
            }
        };
        let mut v = BoundVerdict::at_least(TheoremId::Rt2, pre, bound, self.census.total);
        if let Ok(b) = f_n_bounds(n) {
            v = v.with_note(format!("f(n) interval: [{}, {}]", crate::rational::to_text(&b.lower), crate::rational::to_text(&b.upper)));
        }
        for note in notes {
            v = v.with_note(note);
        }
        v
    }

    pub fn color_union(&self) -> BoundVerdict {
        let g = self.graph;
        let n = g.vertex_count();
        let union_pre = match first_small_union(g) {
            None => Precondition::new(format!("|CN(u) ∪ CN(v)| >= {n} for every pair"), true),
            Some((u, v, size)) => Precondition::new(
                format!("|CN(u) ∪ CN(v)| >= {n} for every pair (fails at {{{u}, {v}}}: {size})"),
                false,
            ),
        };
        let ni = n as i128;
        BoundVerdict::at_least(
            TheoremId::CnUnion,
            vec![Precondition::new("n >= 4", n >= 4), union_pre],
            frac(ni * ni - 2 * ni, 24),
            self.census.total,
        )
    }

    fn check_k(&self, k: usize) -> Result<()> {
        let d = self.graph.min_color_degree();
        if k == 0 || k >= d {
            return Err(Error::out_of_range("k", k, format!("1 <= k <= {}", d as i64 - 1)));
        }
        Ok(())
    }

    /// Top-`k` vertices by monochromatic degree, their mono degrees and `sum_{i<=k} rt(v_i)`.
    fn top_k(&self, k: usize) -> (Vec<Vertex>, u64) {
        let order = self.graph.mono_order();
        let top: Vec<Vertex> = order[..k].to_vec();
        let observed = self.census.sum_over(&top);
        (order, observed)
    }

    pub fn main2(&self, k: usize) -> Result<BoundVerdict> {
        self.check_k(k)?;
        let g = self.graph;
        let (order, observed) = self.top_k(k);
        let d = g.min_color_degree();
        let mono = |i: usize| g.mono_degree(order[i]) as i128;
        let top_k_mono: i128 = (0..k).map(mono).sum();
        let top_d_mono: i128 = (0..d).map(mono).sum();
        let (n, delta, kk) = (self.n(), d as i128, k as i128);
        let delta_k = delta * top_k_mono - kk * top_d_mono;
        let bound = frac((top_k_mono + kk * (delta - 1)) * (self.sigma() - n), 2) + frac(delta_k, 2);
        Ok(BoundVerdict::at_least(TheoremId::Main2, vec![minimality_condition(g)], bound, observed)
            .with_param("k", k)
            .with_param("delta_k", delta_k as i64))
    }

    pub fn topk(&self, k: usize) -> Result<BoundVerdict> {
        self.check_k(k)?;
        let (_, observed) = self.top_k(k);
        let bound = frac(k as i128 * self.delta(), 2);
        Ok(BoundVerdict::at_least(TheoremId::Topk, vec![dirac_condition(self.graph)], bound, observed).with_param("k", k))
    }

    pub fn prop1(&self) -> BoundVerdict {
        BoundVerdict::new(
            TheoremId::Prop1,
            vec![],
            int(0),
            proposition1_sum(self.graph) as i128,
            Relation::Equal,
        )
    }
}

pub fn bound_t1(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).t1()
}

pub fn bound_t2(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).t2()
}

pub fn bound_main1(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).main1()
}

pub fn bound_strong_main1(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).strong_main1()
}

pub fn bound_rt1(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).rt1()
}

pub fn bound_rt2(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).rt2()
}

pub fn bound_color_union(g: &EdgeColoredGraph) -> BoundVerdict {
    BoundContext::new(g).color_union()
}

pub fn bound_main2(g: &EdgeColoredGraph, k: usize) -> Result<BoundVerdict> {
    BoundContext::new(g).main2(k)
}

pub fn bound_topk_simple(g: &EdgeColoredGraph, k: usize) -> Result<BoundVerdict> {
    BoundContext::new(g).topk(k)
}

/// Lower and upper ends of the interval known to contain `f(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnBounds {
    pub lower: Rational,
    pub upper: Rational,
    /// Whether a construction attaining `upper` exists for this `n`.
    pub upper_attained: bool,
    pub note: Option<&'static str>,
}

/// Even `n`: `[(n^2+2n)/6, n^2/4]`; odd `n`: `[(n^2+n)/12, (n^2-1)/8]`.
pub fn f_n_bounds(n: usize) -> Result<FnBounds> {
    if n < 3 {
        return Err(Error::out_of_range("n", n, "n >= 3"));
    }
    let m = n as i128;
    Ok(if n % 2 == 0 {
        FnBounds {
            lower: frac(m * m + 2 * m, 6),
            upper: frac(m * m, 4),
            upper_attained: n % 4 == 0,
            note: (n % 4 == 2).then_some(EVEN_MODULUS_NOTE),
        }
    } else {
        FnBounds {
            lower: frac(m * m + m, 12),
            upper: frac(m * m - 1, 8),
            upper_attained: n % 4 == 3,
            note: Some(EXAMPLE3_MODULUS_NOTE),
        }
    })
}

/// `sum_v sum_{a in N(v)} (d_{C(va)}(v) - d_{C(va)}(a))`; zero on every graph.
pub fn proposition1_sum(g: &EdgeColoredGraph) -> i64 {
    g.vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&(a, c)| g.class_size(v, c) as i64 - g.class_size(a, c) as i64)
                .sum::<i64>()
        })
        .sum()
}

/// First pair `{u, v}` (lexicographic) with `|CN(u) ∪ CN(v)| < n`, with the union size.
pub fn first_small_union(g: &EdgeColoredGraph) -> Option<(Vertex, Vertex, usize)> {
    let n = g.vertex_count();
    let cn: Vec<Vec<Color>> = g.vertices().map(|v| g.color_neighborhood(v).collect()).collect();
    for u in 0..n {
        for v in u + 1..n {
            let size = union_size(&cn[u], &cn[v]);
            if size < n {
                return Some((u, v, size));
            }
        }
    }
    None
}

fn union_size(a: &[Color], b: &[Color]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - common
}

/// Properly colored `K_{n/2,n/2}`: a bipartite graph on `n` vertices with
/// `n^2/4` edges is necessarily complete and balanced.
pub fn is_proper_balanced_complete_bipartite(g: &EdgeColoredGraph) -> bool {
    let n = g.vertex_count();
    n >= 2 && n % 2 == 0 && g.edge_count() == n * n / 4 && g.is_properly_colored() && is_bipartite(g)
}

fn is_bipartite(g: &EdgeColoredGraph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let sx = side[x].unwrap();
            for &(y, _) in g.neighbors(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        stack.push(y);
                    }
                    Some(sy) if sy == sx => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Largest edge count of an `F_k`-free graph on `n` vertices, and whether
/// `n >= 50 k^2` (the range where the formula is proved).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FriendshipTuran {
    pub value: u64,
    pub in_range: bool,
}

pub fn turan_fk(n: usize, k: usize) -> Result<FriendshipTuran> {
    if k == 0 {
        return Err(Error::out_of_range("k", k, "k >= 1"));
    }
    let (n, k) = (n as u64, k as u64);
    let base = n * n / 4 + k * k;
    let value = if k % 2 == 1 { base - k } else { base - 3 * k / 2 };
    Ok(FriendshipTuran {
        value,
        in_range: n >= 50 * k * k,
    })
}

/// `max{ C(2k+1, 2), C(n, 2) - C(n-k, 2) }`: most edges with matching number at most `k`.
pub fn erdos_gallai_bound(n: usize, k: usize) -> Result<u64> {
    if k > n / 2 {
        return Err(Error::out_of_range("k", k, format!("k <= n/2 = {}", n / 2)));
    }
    let (n, k) = (n as u64, k as u64);
    let dense = binomial(2 * k + 1, 2);
    let hub = binomial(n, 2) - binomial(n - k, 2);
    Ok(dense.max(hub))
}
