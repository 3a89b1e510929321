mod common;

use common::{oracle_census, raw_edges};
use rainbow_census::bounds::{bound_main1, bound_rt1, bound_t2, f_n_bounds, Outcome};
use rainbow_census::generators::{
    example2, example3, friendship_underlying, proper_complete_bipartite, rainbow_complete, rainbow_turan,
};
use rainbow_census::rational::{frac, int};
use rainbow_census::reduction::is_edge_minimal;

fn binom3(n: u64) -> u64 {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

#[test]
fn turan_graphs_meet_rt1_with_equality() {
    for k in 3..=6u64 {
        for parts in 1..=4u64 {
            let n = k * parts;
            let g = rainbow_turan(n as usize, k as usize).unwrap();
            let expected = binom3(k) * parts.pow(3);
            assert_eq!(oracle_census(g.vertex_count(), &raw_edges(&g)).0, expected);
            let v = bound_rt1(&g);
            // (k-1)(k-2) n^3 / (6 k^2)
            assert_eq!(v.bound, frac(((k - 1) * (k - 2) * n.pow(3)) as i128, (6 * k * k) as i128));
            assert_eq!((v.bound, v.observed), (int(expected as i128), expected as i128));
        }
    }
    assert!(rainbow_turan(10, 3).is_err());
    assert!(rainbow_turan(6, 2).is_err());
}

#[test]
fn even_construction_attains_upper_end() {
    for n in (4..=32).step_by(4) {
        let g = example2(n).unwrap();
        let (total, _) = oracle_census(n, &raw_edges(&g));
        assert_eq!(total as usize, n * n / 4);
        assert!(2 * g.min_color_degree() > n);
        let b = f_n_bounds(n).unwrap();
        assert_eq!(b.upper, int(total as i128));
        assert!(b.lower <= b.upper && b.upper_attained);
    }
    for n in [6, 10, 5] {
        assert!(example2(n).is_err());
    }
}

#[test]
fn odd_construction_attains_upper_end() {
    for n in (3..=31).step_by(4) {
        let g = example3(n).unwrap();
        let (total, _) = oracle_census(n, &raw_edges(&g));
        assert_eq!(total as usize, (n * n - 1) / 8);
        assert_eq!(g.min_color_degree(), (n + 1) / 2);
        assert_eq!(f_n_bounds(n).unwrap().upper, int(total as i128));
    }
    for n in [5, 9, 13, 8] {
        assert!(example3(n).is_err());
    }
    assert!(f_n_bounds(9).unwrap().note.is_some());
    assert!(!f_n_bounds(9).unwrap().upper_attained);
}

#[test]
fn rainbow_complete_is_tight_for_rt1_and_main1() {
    for n in 4..=12usize {
        let g = rainbow_complete(n);
        assert!(is_edge_minimal(&g));
        let c = binom3(n as u64) as i128;
        let rt1 = bound_rt1(&g);
        let main1 = bound_main1(&g);
        assert_eq!((rt1.bound, rt1.observed), (int(c), c));
        assert_eq!((main1.bound, main1.observed, main1.outcome()), (int(c), c, Outcome::Checked));
    }
}

#[test]
fn balanced_bipartite_is_the_exception() {
    for m in 2..=6 {
        let g = proper_complete_bipartite(m).unwrap();
        assert_eq!(g.min_color_degree(), m);
        assert_eq!(oracle_census(2 * m, &raw_edges(&g)).0, 0);
        let v = bound_t2(&g);
        assert!(!v.preconditions[2].met);
        assert_eq!(v.outcome(), Outcome::Vacuous);
    }
}

#[test]
fn friendship_graph_counts() {
    for k in 1..=6 {
        let g = friendship_underlying(k).unwrap();
        assert_eq!(oracle_census(2 * k + 1, &raw_edges(&g)).0 as usize, k);
    }
}
