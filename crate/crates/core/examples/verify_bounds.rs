//! Evaluate every bound on a random graph with large color degree.

use rainbow_census::bounds::{Outcome, TheoremId};
use rainbow_census::generators::random_high_color_degree;
use rainbow_census::report::render_verdicts;
use rainbow_census::verify::{verify, VerifyOptions};

fn main() -> rainbow_census::Result<()> {
    let n = 16;
    let g = random_high_color_degree(n, (n + 2) / 2, 2024)?;
    let opts = VerifyOptions::new(TheoremId::ALL.to_vec()).reduce_first(true);
    let out = verify(&g, &opts)?;
    print!("{}", render_verdicts(&out.verdicts));
    for note in &out.notes {
        println!("note: {note}");
    }
    println!(
        "{} checked, {} vacuous, {} violated",
        out.count(Outcome::Checked),
        out.count(Outcome::Vacuous),
        out.count(Outcome::Violated)
    );
    Ok(())
}
