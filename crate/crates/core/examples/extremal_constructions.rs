//! The tight constructions and where they sit in the known interval for f(n).

use rainbow_census::bounds::{bound_rt1, f_n_bounds};
use rainbow_census::census::count_rainbow_fast;
use rainbow_census::generators::{example2, example3, proper_complete_bipartite, rainbow_turan};
use rainbow_census::rational::to_text;

fn main() -> rainbow_census::Result<()> {
    let t = rainbow_turan(9, 3)?;
    let v = bound_rt1(&t);
    println!("rainbow Turan T(9,3): rt = {}, lower bound {}", v.observed, to_text(&v.bound));

    for n in [8, 12, 16] {
        let g = example2(n)?;
        let b = f_n_bounds(n)?;
        println!(
            "even n = {n:>2}: rt = {:>3}, f(n) in [{}, {}]",
            count_rainbow_fast(&g).total,
            to_text(&b.lower),
            to_text(&b.upper)
        );
    }
    for n in [7, 11, 15] {
        let g = example3(n)?;
        let b = f_n_bounds(n)?;
        println!(
            "odd  n = {n:>2}: rt = {:>3}, f(n) in [{}, {}]",
            count_rainbow_fast(&g).total,
            to_text(&b.lower),
            to_text(&b.upper)
        );
    }
    if let Err(e) = example3(9) {
        println!("example3(9): {e}");
    }

    let bip = proper_complete_bipartite(4)?;
    println!(
        "proper K_4,4: min color degree {} = n/2 and rt = {}",
        bip.min_color_degree(),
        count_rainbow_fast(&bip).total
    );
    Ok(())
}
