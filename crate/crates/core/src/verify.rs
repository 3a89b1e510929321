//! Runs a chosen set of bound checks on one graph.
//!
//! Statements that assume an edge-minimal graph are evaluated on the input
//! as given (and come out vacuous if it is not minimal) unless
//! `reduce_first` is set, in which case they are evaluated on
//! [`edge_minimalize`]'s output. Minimalization preserves every color
//! degree, so the hypotheses on `delta^c` carry over.

use crate::bounds::{default_k_values, BoundContext, BoundVerdict, Outcome, TheoremId};
use crate::error::Result;
use crate::friendship::{eg59_verdict, efgs95_verdict, theorem9_verdict, FriendshipWitness};
use crate::graph::EdgeColoredGraph;
use crate::link::{lemma1_verdict, lemma2_verdict, lemma4_verdict, select_xy};
use crate::matching::{matching_number, SimpleGraph};
use crate::reduction::edge_minimalize;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub theorems: Vec<TheoremId>,
    pub reduce_first: bool,
    /// Overrides the default `k` of MAIN2, TOPK, EFGS95, EG59 and FRIENDSHIP.
    pub k: Option<usize>,
}

impl VerifyOptions {
    pub fn new(theorems: Vec<TheoremId>) -> Self {
        VerifyOptions {
            theorems,
            ..Default::default()
        }
    }

    pub fn reduce_first(mut self, yes: bool) -> Self {
        self.reduce_first = yes;
        self
    }

    pub fn with_k(mut self, k: Option<usize>) -> Self {
        self.k = k;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    /// In theorem order, then by `k` or vertex.
    pub verdicts: Vec<BoundVerdict>,
    pub witness: Option<FriendshipWitness>,
    /// Set when `reduce_first` was requested.
    pub reduced: Option<EdgeColoredGraph>,
    pub notes: Vec<String>,
}

impl Verification {
    pub fn any_violation(&self) -> bool {
        self.verdicts.iter().any(|v| v.outcome() == Outcome::Violated)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.verdicts.iter().filter(|v| v.outcome() == outcome).count()
    }
}

fn k_sweep(k: Option<usize>, delta: usize, theorem: TheoremId, notes: &mut Vec<String>) -> Vec<usize> {
    match k {
        Some(k) if k >= 1 && k < delta => vec![k],
        Some(k) => {
            notes.push(format!("{theorem}: k = {k} is outside 1..={}, skipped", delta as i64 - 1));
            vec![]
        }
        None => {
            let ks = default_k_values(delta);
            if ks.is_empty() {
                notes.push(format!("{theorem}: min color degree {delta} leaves no admissible k"));
            }
            ks
        }
    }
}

pub fn verify(g: &EdgeColoredGraph, opts: &VerifyOptions) -> Result<Verification> {
    let original = BoundContext::new(g);
    let reduced_graph = opts.reduce_first.then(|| edge_minimalize(g));
    let reduced_ctx = reduced_graph.as_ref().map(BoundContext::new);
    let reduction_note = reduced_graph.as_ref().map(|r| {
        format!(
            "evaluated on the edge-minimal reduction: e {} -> {}, min color degree {} -> {}",
            g.edge_count(),
            r.edge_count(),
            g.min_color_degree(),
            r.min_color_degree()
        )
    });
    let delta = g.min_color_degree();

    let mut verdicts = Vec::new();
    let mut notes = Vec::new();
    let mut witness = None;

    let mut theorems = opts.theorems.clone();
    theorems.sort();
    theorems.dedup();

    for t in theorems {
        // minimality-dependent statements go to the reduced graph when asked
        let (ctx, note) = match (&reduced_ctx, t.needs_minimality()) {
            (Some(r), true) => (r, reduction_note.clone()),
            _ => (&original, None),
        };
        let eval = ctx.graph;
        let mut batch = Vec::new();
        match t {
            TheoremId::T1 => batch.push(ctx.t1()),
            TheoremId::T2 => batch.push(ctx.t2()),
            TheoremId::Main1 => batch.push(ctx.main1()),
            TheoremId::StrongMain1 => batch.push(ctx.strong_main1()),
            TheoremId::Rt1 => batch.push(ctx.rt1()),
            TheoremId::Rt2 => batch.push(ctx.rt2()),
            TheoremId::CnUnion => batch.push(ctx.color_union()),
            TheoremId::Prop1 => batch.push(ctx.prop1()),
            TheoremId::Main2 => {
                for k in k_sweep(opts.k, delta, t, &mut notes) {
                    batch.push(ctx.main2(k)?);
                }
            }
            TheoremId::Topk => {
                for k in k_sweep(opts.k, delta, t, &mut notes) {
                    batch.push(original.topk(k)?);
                    if let Some(r) = &reduced_ctx {
                        batch.push(r.topk(k)?.with_note(reduction_note.clone().unwrap_or_default()));
                    }
                }
            }
            TheoremId::Lemma1 => {
                for v in eval.vertices() {
                    batch.push(lemma1_verdict(eval, v)?);
                }
            }
            TheoremId::Lemma2 => {
                for v in eval.vertices().filter(|&v| eval.degree(v) > 0) {
                    let sel = select_xy(eval, v, eval.color_degree(v) - 1)?;
                    batch.push(lemma2_verdict(eval, v, &sel)?);
                }
            }
            TheoremId::Lemma4 => batch.push(lemma4_verdict(eval)),
            TheoremId::Efgs95 => {
                let k = opts.k.unwrap_or(2);
                if k == 0 {
                    notes.push("efgs95: k must be at least 1, skipped".into());
                } else {
                    batch.push(efgs95_verdict(g, k)?);
                }
            }
            TheoremId::Eg59 => {
                let nu = matching_number(&SimpleGraph::new(g.vertex_count(), g.edges().iter().map(|e| (e.u, e.v)))?);
                let k = opts.k.unwrap_or(nu);
                if 2 * k > g.vertex_count() {
                    notes.push(format!("eg59: k = {k} exceeds n/2, skipped"));
                } else {
                    batch.push(eg59_verdict(g, k)?);
                }
            }
            TheoremId::Friendship => {
                let fv = theorem9_verdict(g, opts.k.unwrap_or(2));
                witness = fv.witness;
                batch.push(fv.verdict);
            }
        }
        if let Some(note) = note {
            batch = batch.into_iter().map(|v| v.with_note(note.clone())).collect();
        }
        verdicts.extend(batch);
    }

    Ok(Verification {
        verdicts,
        witness,
        reduced: reduced_graph,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{proper_complete_bipartite, rainbow_complete, rainbow_turan};
    use crate::rational::int;

    #[test]
    fn rt1_on_turan_is_tight() {
        let g = rainbow_turan(9, 3).unwrap();
        let out = verify(&g, &VerifyOptions::new(vec![TheoremId::Rt1])).unwrap();
        assert_eq!(out.verdicts.len(), 1);
        assert_eq!((out.verdicts[0].bound, out.verdicts[0].observed), (int(27), 27));
        assert!(!out.any_violation());
    }

    #[test]
    fn sweeps_and_order() {
        let g = rainbow_complete(7);
        let all = TheoremId::parse_list("all").unwrap();
        let out = verify(&g, &VerifyOptions::new(all)).unwrap();
        assert!(!out.any_violation());
        // k in {1, 3, 5}
        let main2: Vec<_> = out.verdicts.iter().filter(|v| v.theorem == TheoremId::Main2).collect();
        assert_eq!(main2.iter().map(|v| v.parameters["k"]).collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(out.verdicts.iter().filter(|v| v.theorem == TheoremId::Lemma1).count(), 7);
        let order: Vec<TheoremId> = out.verdicts.iter().map(|v| v.theorem).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
        assert!(out.witness.is_some());
    }

    #[test]
    fn reduce_first_makes_minimality_checks_applicable() {
        // a doubled color at every vertex of a triangle with pendant edges
        let g = EdgeColoredGraph::new(4, [(0, 1, 0), (1, 2, 1), (0, 2, 2), (0, 3, 0), (1, 3, 0)]).unwrap();
        let opts = VerifyOptions::new(vec![TheoremId::Lemma4, TheoremId::Rt1]);
        let plain = verify(&g, &opts).unwrap();
        assert_eq!(plain.verdicts[1].theorem, TheoremId::Lemma4);
        assert!(!plain.verdicts[1].preconditions_met);
        let red = verify(&g, &opts.clone().reduce_first(true)).unwrap();
        assert!(red.verdicts[1].preconditions_met);
        assert!(red.verdicts[1].notes.iter().any(|n| n.contains("reduction")));
        // RT1 does not need minimality and stays on the input
        assert!(red.verdicts[0].notes.is_empty());
    }

    #[test]
    fn bad_k_is_skipped_with_note() {
        let g = proper_complete_bipartite(4).unwrap();
        let out = verify(&g, &VerifyOptions::new(vec![TheoremId::Main2]).with_k(Some(9))).unwrap();
        assert!(out.verdicts.is_empty());
        assert_eq!(out.notes.len(), 1);
    }
}
