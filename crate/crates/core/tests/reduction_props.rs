mod common;

use common::{arb_graph, oracle_color_degrees, oracle_removable, oracle_star_forests, raw_edges};
use proptest::prelude::*;
use rainbow_census::reduction::{check_minimal_structure, edge_minimalize, is_edge_minimal, is_removable, removed_edges};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn removability_matches_oracle(g in arb_graph(10, 3)) {
        let raw = raw_edges(&g);
        for (i, e) in g.edges().iter().enumerate() {
            prop_assert_eq!(is_removable(&g, e.u, e.v).unwrap(), oracle_removable(g.vertex_count(), &raw, i));
        }
    }

    #[test]
    fn reduction_contract(g in arb_graph(14, 4)) {
        let n = g.vertex_count();
        let r = edge_minimalize(&g);
        let raw = raw_edges(&r);
        prop_assert_eq!(oracle_color_degrees(n, &raw), oracle_color_degrees(n, &raw_edges(&g)));
        for i in 0..raw.len() {
            prop_assert!(!oracle_removable(n, &raw, i));
        }
        prop_assert!(oracle_star_forests(n, &raw));
        prop_assert!(r.edges().iter().all(|e| g.edge_color(e.u, e.v) == Some(e.color)));
        prop_assert_eq!(removed_edges(&g, &r).len() + r.edge_count(), g.edge_count());

        let m = check_minimal_structure(&r);
        prop_assert!(m.is_minimal && m.removable_edges.is_empty());
        prop_assert!(m.mono_c3_found.is_none() && m.mono_p4_found.is_none());
        prop_assert!(m.all_star_forests());
        prop_assert_eq!(edge_minimalize(&r), r);
    }

    #[test]
    fn structure_report_agrees_with_oracle(g in arb_graph(10, 3)) {
        let n = g.vertex_count();
        let raw = raw_edges(&g);
        let m = check_minimal_structure(&g);
        let any_removable = (0..raw.len()).any(|i| oracle_removable(n, &raw, i));
        prop_assert_eq!(m.is_minimal, !any_removable);
        prop_assert_eq!(is_edge_minimal(&g), !any_removable);
        prop_assert_eq!(m.all_star_forests(), oracle_star_forests(n, &raw));
        if let Some([a, b, c]) = m.mono_c3_found {
            let cs = [g.edge_color(a, b), g.edge_color(b, c), g.edge_color(a, c)];
            prop_assert!(cs[0].is_some() && cs[0] == cs[1] && cs[1] == cs[2]);
        }
        if let Some([a, b, c, d]) = m.mono_p4_found {
            let cs = [g.edge_color(a, b), g.edge_color(b, c), g.edge_color(c, d)];
            prop_assert!(cs[0].is_some() && cs[0] == cs[1] && cs[1] == cs[2]);
            prop_assert_eq!([a, b, c, d].iter().collect::<std::collections::BTreeSet<_>>().len(), 4);
        }
        // a minimal graph has no monochromatic triangle or P4
        if m.is_minimal {
            prop_assert!(m.mono_c3_found.is_none() && m.mono_p4_found.is_none());
        }
    }
}
