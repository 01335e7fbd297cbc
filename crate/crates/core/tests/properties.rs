use proptest::prelude::*;

use rhs_core::characterize::{is_minimal_rdf_theorem, is_minimal_rhf_theorem, is_minimal_rhs_theorem};
use rhs_core::enumerate::collect_minimal_rhs;
use rhs_core::extend::ext_rhs;
use rhs_core::format::{
    format_assignment, format_pair, parse_assignment, parse_graph, parse_hypergraph, parse_pair, serialize_graph,
    serialize_hypergraph, GraphInstance, HypergraphInstance,
};
use rhs_core::generate::{gen_random, gen_random_with_tau, random_assignment, random_graph, random_pair};
use rhs_core::model::{is_rdf, is_rhf, is_rhs};
use rhs_core::optimize::{exact_min_rhs, greedy_rhs};
use rhs_core::oracle::{
    brute_enumerate_minimal_rhs, brute_ext_rhs, brute_min_rhs, brute_minimal_rdf, brute_minimal_rhf,
    brute_minimal_rhs,
};
use rhs_core::{Hypergraph, RhsPair};

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=6, 0usize..=6, 0.1f64..=1.0, any::<u64>())
        .prop_map(|(nv, ne, d, seed)| gen_random(nv, ne, d, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hypergraph_format_round_trips(nv in 1usize..=7, ne in 1usize..=7, d in 0.1f64..=1.0, seed: u64) {
        let (h, tau) = gen_random_with_tau(nv, ne, d, seed).unwrap();
        let mut inst = HypergraphInstance::with_correspondence(h.clone(), &tau);
        inst.assign = random_assignment(nv, 0.3, 0.3, seed);
        inst.preset = random_pair(&h, 0.4, seed ^ 1);
        let text = serialize_hypergraph(&inst);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(serialize_hypergraph(&back), text);
    }

    #[test]
    fn graph_format_round_trips(n in 0usize..=8, p in 0.0f64..=1.0, seed: u64) {
        let mut inst = GraphInstance::new(random_graph(n, p, seed));
        inst.assign = random_assignment(n, 0.3, 0.2, seed);
        let text = serialize_graph(&inst);
        prop_assert_eq!(parse_graph(&text).unwrap(), inst);
    }

    #[test]
    fn pair_and_assignment_text_round_trip(h in hypergraph(), seed: u64) {
        let r = random_pair(&h, 0.4, seed);
        prop_assert_eq!(parse_pair(&h, &format_pair(&h, &r)).unwrap(), r);
        let f = random_assignment(h.num_vertices(), 0.3, 0.3, seed);
        let text = format_assignment(h.vertex_names(), &f);
        prop_assert_eq!(parse_assignment(h.vertex_names(), |s| h.vertex_id(s), &text).unwrap(), f);
    }

    #[test]
    fn rhf_induces_rhs(nv in 1usize..=6, ne in 1usize..=5, seed: u64) {
        let (h, tau) = gen_random_with_tau(nv, ne, 0.4, seed).unwrap();
        let f = random_assignment(nv, 0.4, 0.3, seed);
        if is_rhf(&h, &tau, &f) {
            let pair = RhsPair::new(tau.image(&f.preimage(1), ne), f.preimage(2));
            prop_assert!(is_rhs(&h, &pair));
            prop_assert!(pair.weight() <= f.weight());
        }
    }

    #[test]
    fn rhs_theorem_matches_definition(h in hypergraph(), seed: u64, p in 0.1f64..0.9) {
        let r = random_pair(&h, p, seed);
        prop_assert_eq!(is_minimal_rhs_theorem(&h, &r), brute_minimal_rhs(&h, &r).unwrap());
    }

    #[test]
    fn rhf_theorem_matches_definition(nv in 1usize..=6, ne in 1usize..=5, seed: u64) {
        let (h, tau) = gen_random_with_tau(nv, ne, 0.4, seed).unwrap();
        let f = random_assignment(nv, 0.35, 0.3, seed);
        prop_assert_eq!(is_minimal_rhf_theorem(&h, &tau, &f), brute_minimal_rhf(&h, &tau, &f).unwrap());
    }

    #[test]
    fn rdf_theorem_matches_definition(n in 1usize..=7, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        let f = random_assignment(n, 0.3, 0.3, seed);
        let brute = brute_minimal_rdf(&g, &f).unwrap();
        prop_assert_eq!(is_minimal_rdf_theorem(&g, &f), brute);
        if brute {
            prop_assert!(is_rdf(&g, &f));
        }
    }

    #[test]
    fn extension_matches_brute_force(h in hypergraph(), seed: u64) {
        let u = random_pair(&h, 0.25, seed);
        let got = ext_rhs(&h, &u).unwrap();
        prop_assert_eq!(got.is_yes(), brute_ext_rhs(&h, &u).unwrap());
        if let Some(w) = got.witness() {
            prop_assert!(u.le(w));
            prop_assert!(is_minimal_rhs_theorem(&h, w));
        }
    }

    #[test]
    fn enumeration_is_exact(h in hypergraph()) {
        let (mut got, stats) = collect_minimal_rhs(&h, None);
        prop_assert_eq!(stats.emitted as usize, got.len());
        got.sort_by_key(|p| p.sort_key());
        prop_assert_eq!(got, brute_enumerate_minimal_rhs(&h, 1).unwrap());
    }

    #[test]
    fn optimizers_bracket_the_optimum(h in hypergraph()) {
        let opt = exact_min_rhs(&h);
        prop_assert!(is_rhs(&h, &opt.witness));
        prop_assert_eq!(opt.weight, brute_min_rhs(&h).unwrap());
        let (pair, w) = greedy_rhs(&h);
        prop_assert!(is_rhs(&h, &pair));
        prop_assert!(opt.weight <= w);
    }
}
