//! Machine-readable analysis reports.
//!
//! Reports serialize to JSON with fixed field order; rationals inside
//! verdicts are `"p/q"` strings. `format_version` starts at `"1"`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::{f_n_bounds, BoundVerdict, Outcome};
use crate::census::TriangleCensus;
use crate::friendship::FriendshipWitness;
use crate::graph::EdgeColoredGraph;
use crate::rational::to_text;
use crate::reduction::{check_minimal_structure, MinimalityReport};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub e: usize,
    pub min_color_degree: usize,
    /// `None` on edgeless graphs.
    pub sigma2c: Option<usize>,
    pub max_mono_degree: usize,
    pub colors: usize,
}

impl GraphSummary {
    pub fn of(g: &EdgeColoredGraph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            e: g.edge_count(),
            min_color_degree: g.min_color_degree(),
            sigma2c: g.sigma2c(),
            max_mono_degree: g.max_mono_degree(),
            colors: g.color_count(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub command: Vec<String>,
    pub seed: Option<u64>,
    pub format_version: String,
}

impl Provenance {
    pub fn new(command: Vec<String>, seed: Option<u64>) -> Self {
        Provenance {
            command,
            seed,
            format_version: FORMAT_VERSION.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub graph_summary: GraphSummary,
    pub census: TriangleCensus,
    pub verdicts: Vec<BoundVerdict>,
    pub minimality: MinimalityReport,
    pub witness: Option<FriendshipWitness>,
    pub provenance: Provenance,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl Report {
    /// Summary and minimality are computed from `g`; verdicts start empty.
    pub fn new(g: &EdgeColoredGraph, census: TriangleCensus, provenance: Provenance) -> Self {
        Report {
            graph_summary: GraphSummary::of(g),
            census,
            verdicts: Vec::new(),
            minimality: check_minimal_structure(g),
            witness: None,
            provenance,
            notes: Vec::new(),
        }
    }

    /// Adds the known interval for `f(n)` and any construction caveats for this order.
    pub fn with_order_notes(mut self) -> Self {
        if let Ok(b) = f_n_bounds(self.graph_summary.n) {
            self.notes.push(format!("f(n) interval: [{}, {}]", to_text(&b.lower), to_text(&b.upper)));
            if let Some(note) = b.note {
                self.notes.push(note.to_string());
            }
        }
        self
    }

    pub fn any_violation(&self) -> bool {
        self.verdicts.iter().any(|v| v.outcome() == Outcome::Violated)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let s = &self.graph_summary;
        let mut out = String::new();
        let sigma = s.sigma2c.map_or_else(|| "-".to_string(), |x| x.to_string());
        let _ = writeln!(
            out,
            "n = {}  e = {}  colors = {}  min color degree = {}  sigma2c = {}  max mono degree = {}",
            s.n, s.e, s.colors, s.min_color_degree, sigma, s.max_mono_degree
        );
        let _ = writeln!(out, "rainbow triangles: {}", self.census.total);
        let _ = writeln!(out, "per vertex: {:?}", self.census.per_vertex);
        let _ = writeln!(
            out,
            "edge-minimal: {} ({} removable edges)",
            self.minimality.is_minimal,
            self.minimality.removable_edges.len()
        );
        if !self.verdicts.is_empty() {
            out.push_str(&render_verdicts(&self.verdicts));
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "friendship witness at {}: {:?}", w.center, w.triangles);
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

/// One line per verdict: outcome, theorem, parameters, `observed rel bound`.
pub fn render_verdicts(verdicts: &[BoundVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let tag = match v.outcome() {
            Outcome::Checked => "ok",
            Outcome::Vacuous => "vacuous",
            Outcome::Violated => "VIOLATED",
        };
        let params: Vec<String> = v.parameters.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let _ = write!(
            out,
            "{tag:<9} {:<13} {:<18} {} {} {}",
            v.theorem.token(),
            params.join(" "),
            v.observed,
            v.relation.symbol(),
            to_text(&v.bound)
        );
        if v.outcome() == Outcome::Checked && v.slack() == 0.into() {
            out.push_str("  (equality)");
        }
        for p in v.unmet_preconditions() {
            let _ = write!(out, "  [unmet: {}]", p.description);
        }
        out.push('\n');
        for note in &v.notes {
            let _ = writeln!(out, "          note: {note}");
        }
    }
    out
}
