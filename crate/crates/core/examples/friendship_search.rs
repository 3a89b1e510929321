//! Rainbow friendship subgraphs from maximum matchings in link graphs.

use rainbow_census::friendship::{eg59_verdict, find_friendship, theorem9_verdict};
use rainbow_census::generators::{random_high_color_degree, rainbow_complete};

fn main() -> rainbow_census::Result<()> {
    let k200 = rainbow_complete(200);
    let fv = theorem9_verdict(&k200, 2);
    println!(
        "K_200, k = 2: preconditions met {}, witness {:?}, centered at max mono degree {}",
        fv.verdict.preconditions_met, fv.witness, fv.centered_at_max_mono
    );

    let g = random_high_color_degree(40, 21, 8)?;
    for k in 1..=6 {
        match find_friendship(&g, k) {
            Some(w) => println!("k = {k}: center {} triangles {:?}", w.center, w.triangles),
            None => println!("k = {k}: none"),
        }
    }
    let eg = eg59_verdict(&g, 20)?;
    println!("edges {} <= Erdos-Gallai bound {} for matching number {}", eg.observed, eg.bound, eg.parameters["matching_number"]);
    Ok(())
}
