//! graph6 and edge-list round trips.

mod common;

use proptest::prelude::*;
use symlab::corpus::{connected_graphs, CorpusSpec};
use symlab::graph::edgelist::{emit_edge_list, parse_edge_list};
use symlab::graph::graph6::{emit_graph6, parse_graph6};

#[test]
fn graph6_round_trips_over_corpora() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let text = emit_graph6(&g);
            assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
        }
    }
    let families: CorpusSpec = "family:friendship:12;hypercube:6;complete_bipartite:31,40;corona:(cycle:5),(star:3)"
        .parse()
        .unwrap();
    for item in families.items().unwrap() {
        let text = emit_graph6(&item.graph);
        assert_eq!(parse_graph6(&text).unwrap(), item.graph, "{}", item.label);
        assert_eq!(parse_edge_list(&emit_edge_list(&item.graph)).unwrap(), item.graph);
    }
}

#[test]
fn graph6_matches_known_strings() {
    let cases = [
        ("path:3", "Bg"),
        ("complete:4", "C~"),
        ("cycle:5", "Dhc"),
        ("complete:1", "@"),
        ("complete:2", "A_"),
    ];
    for (family, g6) in cases {
        let g = family.parse::<symlab::graph::FamilySpec>().unwrap().build().unwrap();
        assert_eq!(emit_graph6(&g), g6, "{family}");
    }
}

proptest! {
    #[test]
    fn random_graphs_round_trip(n in 1usize..80, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n);
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&format!(">>graph6<<{text}\n")).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn parsers_never_panic(text in "\\PC{0,40}") {
        let _ = parse_graph6(&text);
        let _ = parse_edge_list(&text);
    }
}
