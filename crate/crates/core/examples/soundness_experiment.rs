//! A seeded batch of random instances checked against every bound.

use rainbow_census::bounds::TheoremId;
use rainbow_census::experiment::{run_experiment, ExperimentConfig, Model};

fn main() -> rainbow_census::Result<()> {
    let cfg = ExperimentConfig {
        model: Model::HighCdeg { target: None },
        trials: 200,
        seed: 1,
        n_min: 10,
        n_max: 40,
        theorems: TheoremId::ALL.to_vec(),
        reduce_first: true,
    };
    let summary = run_experiment(&cfg)?;
    print!("{}", summary.render_table());
    Ok(())
}
