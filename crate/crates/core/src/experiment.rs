//! Seeded batches of random instances pushed through [`verify`].
//!
//! Trial `i` uses seed `seed + i`, so results do not depend on how rayon
//! schedules the trials.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{Outcome, TheoremId};
use crate::error::{Error, Result};
use crate::generators::{random_colored, random_high_color_degree};
use crate::graph::EdgeColoredGraph;
use crate::verify::{verify, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "model")]
pub enum Model {
    Gnp { p: f64, colors: Option<u64> },
    /// `target = None` means `ceil((n+1)/2)`.
    HighCdeg { target: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model: Model,
    pub trials: usize,
    pub seed: u64,
    /// Order is drawn uniformly from `n_min..=n_max` per trial.
    pub n_min: usize,
    pub n_max: usize,
    pub theorems: Vec<TheoremId>,
    pub reduce_first: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub theorem: Option<TheoremId>,
    pub checked: usize,
    pub vacuous: usize,
    pub violated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub theorem: TheoremId,
    pub parameters: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub tallies: Vec<Tally>,
    pub failures: Vec<Failure>,
}

impl ExperimentSummary {
    pub fn any_violation(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<13} {:>9} {:>9} {:>9}", "theorem", "checked", "vacuous", "violated");
        for t in &self.tallies {
            let name = t.theorem.map_or("?", TheoremId::token);
            let _ = writeln!(out, "{name:<13} {:>9} {:>9} {:>9}", t.checked, t.vacuous, t.violated);
        }
        for f in &self.failures {
            let _ = writeln!(out, "violation: trial {} (seed {}, n = {}) {} {:?}", f.trial, f.seed, f.n, f.theorem, f.parameters);
        }
        out
    }
}

/// The instance for one trial seed.
pub fn trial_graph(cfg: &ExperimentConfig, seed: u64) -> Result<EdgeColoredGraph> {
    let n = ChaCha8Rng::seed_from_u64(seed).gen_range(cfg.n_min..=cfg.n_max);
    match cfg.model {
        Model::Gnp { p, colors } => random_colored(n, p, colors.unwrap_or(n.max(1) as u64), seed),
        Model::HighCdeg { target } => random_high_color_degree(n, target.unwrap_or((n + 2) / 2), seed),
    }
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    if cfg.n_min > cfg.n_max {
        return Err(Error::out_of_range("n_max", cfg.n_max, format!(">= n = {}", cfg.n_min)));
    }
    let opts = VerifyOptions::new(cfg.theorems.clone()).reduce_first(cfg.reduce_first);
    let per_trial: Vec<Result<(usize, u64, usize, Vec<_>)>> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let seed = cfg.seed.wrapping_add(i as u64);
            let g = trial_graph(cfg, seed)?;
            let out = verify(&g, &opts)?;
            Ok((i, seed, g.vertex_count(), out.verdicts))
        })
        .collect();

    let mut tallies: Vec<Tally> = Vec::new();
    let mut failures = Vec::new();
    let mut theorems = cfg.theorems.clone();
    theorems.sort();
    theorems.dedup();
    for t in &theorems {
        tallies.push(Tally {
            theorem: Some(*t),
            ..Default::default()
        });
    }
    for trial in per_trial {
        let (i, seed, n, verdicts) = trial?;
        for v in verdicts {
            let slot = tallies
                .iter_mut()
                .find(|t| t.theorem == Some(v.theorem))
                .expect("verdicts only for requested theorems");
            match v.outcome() {
                Outcome::Checked => slot.checked += 1,
                Outcome::Vacuous => slot.vacuous += 1,
                Outcome::Violated => {
                    slot.violated += 1;
                    failures.push(Failure {
                        trial: i,
                        seed,
                        n,
                        theorem: v.theorem,
                        parameters: v.parameters.into_iter().collect(),
                    });
                }
            }
        }
    }
    Ok(ExperimentSummary {
        config: cfg.clone(),
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(model: Model) -> ExperimentConfig {
        ExperimentConfig {
            model,
            trials: 12,
            seed: 5,
            n_min: 6,
            n_max: 14,
            theorems: TheoremId::parse_list("t1,rt1,main1,main2,topk,prop1").unwrap(),
            reduce_first: true,
        }
    }

    #[test]
    fn deterministic_and_clean() {
        let c = cfg(Model::HighCdeg { target: None });
        let a = run_experiment(&c).unwrap();
        let b = run_experiment(&c).unwrap();
        assert_eq!(a, b);
        assert!(!a.any_violation());
        let prop1 = a.tallies.iter().find(|t| t.theorem == Some(TheoremId::Prop1)).unwrap();
        assert_eq!(prop1.checked, 12);
        assert!(a.render_table().starts_with("theorem"));
    }

    #[test]
    fn gnp_trials_use_offset_seeds() {
        let c = cfg(Model::Gnp { p: 0.4, colors: Some(3) });
        assert_eq!(trial_graph(&c, 7).unwrap(), trial_graph(&c, 7).unwrap());
        let s = run_experiment(&c).unwrap();
        assert!(!s.any_violation());
    }
}
