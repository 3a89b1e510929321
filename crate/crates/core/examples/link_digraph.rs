//! The link digraph at a vertex and the per-vertex counting bounds.

use rainbow_census::census::rt_at_vertex;
use rainbow_census::link::{lemma1_rhs, lemma2_verdict, link_digraph, select_xy, XYSelection};
use rainbow_census::rational::to_text;
use rainbow_census::EdgeColoredGraph;

fn main() -> rainbow_census::Result<()> {
    // edge-minimal, every vertex sees 3 colors
    let g = EdgeColoredGraph::new(
        5,
        [(0, 1, 14), (0, 2, 14), (0, 3, 22), (0, 4, 23), (1, 2, 24), (1, 4, 21), (2, 3, 25), (3, 4, 13)],
    )?;
    for v in g.vertices() {
        let d = link_digraph(&g, v)?;
        println!(
            "v = {v}: {} arcs, rainbow 2-cycles {:?}, rt = {}, lemma1 bound {}",
            d.arc_count(),
            d.rainbow_two_cycles(),
            rt_at_vertex(&g, v)?,
            to_text(&lemma1_rhs(&g, v)?)
        );
    }

    let canonical = select_xy(&g, 1, 2)?;
    println!("canonical selection at 1: X = {:?}, Y = {:?}", canonical.x, canonical.y);

    // X = {0} while 0 has a second edge of color 14
    let sel = XYSelection::from_parts(&g, 1, vec![0], vec![4, 2])?;
    let v = lemma2_verdict(&g, 1, &sel)?;
    println!("selection X = {:?}, Y = {:?}: observed {} vs bound {}", sel.x, sel.y, v.observed, to_text(&v.bound));
    for p in v.unmet_preconditions() {
        println!("  unmet: {}", p.description);
    }
    for note in &v.notes {
        println!("  note: {note}");
    }
    Ok(())
}
