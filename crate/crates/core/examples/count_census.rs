//! Count rainbow triangles in a hand-written edge list, with both counters.

use rainbow_census::census::{count_rainbow_bruteforce, count_rainbow_fast, rt_at_vertex};
use rainbow_census::io::parse_ecg;

const K4_TWO_COLORS: &str = "\
# K4 where the perfect matching 01/23 shares color 7
4 6
0 1 7
2 3 7
0 2 1
0 3 2
1 2 3
1 3 4
";

fn main() -> rainbow_census::Result<()> {
    let g = parse_ecg(K4_TWO_COLORS)?;
    let fast = count_rainbow_fast(&g);
    let brute = count_rainbow_bruteforce(&g);
    assert_eq!(fast.total, brute.total);
    assert_eq!(fast.per_vertex, brute.per_vertex);

    println!("rainbow triangles: {}", fast.total);
    for v in g.vertices() {
        println!(
            "  vertex {v}: rt = {}, color degree {}, mono degree {}",
            rt_at_vertex(&g, v)?,
            g.color_degree(v),
            g.mono_degree(v)
        );
    }
    println!("triangles examined by the forward counter: {}", fast.triangles_examined);
    Ok(())
}
