//! Strip redundant edges while keeping every color degree.

use rainbow_census::generators::random_colored;
use rainbow_census::reduction::{check_minimal_structure, edge_minimalize, removed_edges};

fn main() -> rainbow_census::Result<()> {
    let g = random_colored(14, 0.8, 4, 99)?;
    let r = edge_minimalize(&g);
    println!("edges {} -> {}", g.edge_count(), r.edge_count());
    for e in removed_edges(&g, &r).iter().take(5) {
        println!("  removed {}-{} (color {})", e.u, e.v, e.color);
    }
    assert!(g.vertices().all(|v| g.color_degree(v) == r.color_degree(v)));

    let before = check_minimal_structure(&g);
    let after = check_minimal_structure(&r);
    println!("input:   minimal {}, mono triangle {:?}, mono P4 {:?}", before.is_minimal, before.mono_c3_found, before.mono_p4_found);
    println!("reduced: minimal {}, star forests {}", after.is_minimal, after.all_star_forests());
    Ok(())
}
