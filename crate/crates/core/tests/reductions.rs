use rhs_core::extend::{ext_ds_split, ext_rhs};
use rhs_core::generate::{gen_random, gen_random_with_tau, random_graph, random_pair, random_split_graph};
use rhs_core::model::{bitset, is_rdf, is_rhf, is_rhs, vertex_cover_hypergraph};
use rhs_core::optimize::{exact_min_rhf, exact_min_rhs};
use rhs_core::oracle::{
    brute_enumerate_minimal_ds, brute_enumerate_minimal_rdf, brute_enumerate_minimal_rhf, brute_min_rdf,
    brute_min_rhs, brute_min_vertex_cover,
};
use rhs_core::reduce::{
    ds_split_to_rhs, rd_to_rhf, rhf_to_rd_gadget, rhf_to_rhs, rhs_to_rhf, two_section, vc_to_rvc, Reduction,
};
use rhs_core::{Correspondence, Error, Hypergraph, RomanAssignment};

fn all_assignments(n: usize) -> impl Iterator<Item = RomanAssignment> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let mut v = vec![0u8; n];
        for slot in v.iter_mut() {
            *slot = (code % 3) as u8;
            code /= 3;
        }
        RomanAssignment::new(v).unwrap()
    })
}

#[test]
fn rd_to_rhf_preserves_minimal_solutions() {
    for seed in 0..60u64 {
        let g = random_graph(1 + (seed % 6) as usize, 0.4, seed);
        let red = rd_to_rhf(&g);
        let rdf = brute_enumerate_minimal_rdf(&g).unwrap();
        let rhf = brute_enumerate_minimal_rhf(&red.hypergraph, &red.tau, 1).unwrap();
        let mapped: Vec<_> = rdf.iter().map(|f| red.forward(f).unwrap()).collect();
        assert_eq!(mapped, rhf, "seed {seed}");
        assert_eq!(red.offset(), Some(0));
    }
    let empty = random_graph(0, 0.5, 0);
    assert_eq!(rd_to_rhf(&empty).hypergraph.num_edges(), 0);
}

#[test]
fn rhf_to_rhs_keeps_the_optimum() {
    for seed in 0..200u64 {
        let (h, tau) = gen_random_with_tau(1 + (seed % 6) as usize, 1 + (seed / 6 % 5) as usize, 0.35, seed).unwrap();
        let Ok(rhf) = exact_min_rhf(&h, &tau) else {
            continue;
        };
        let red = rhf_to_rhs(&h, &tau).unwrap();
        let rhs = exact_min_rhs(&red.target);
        assert_eq!(rhf.weight, rhs.weight, "seed {seed}");
        // forward of an optimum is an optimum
        let fwd = red.forward(&rhf.witness).unwrap();
        assert!(is_rhs(&red.target, &fwd));
        assert_eq!(fwd.weight(), rhs.weight);
        let back = red.backward(&rhs.witness).unwrap();
        assert!(is_rhf(&h, &tau, &back));
        assert_eq!(back.weight(), rhf.weight);
    }
}

#[test]
fn rhs_to_rhf_decision_equivalence() {
    for seed in 0..120u64 {
        let h = gen_random(1 + (seed % 5) as usize, 1 + (seed / 5 % 5) as usize, 0.4, seed).unwrap();
        let best = exact_min_rhs(&h);
        for k in 0..h.num_edges() {
            let red = rhs_to_rhf(&h, k).unwrap();
            let target = exact_min_rhf(&red.target, &red.tau).map(|o| o.weight).unwrap_or(usize::MAX);
            assert_eq!(best.weight <= k, target <= k, "seed {seed} k {k}");
            if best.weight <= k {
                let f = red.forward(&best.witness).unwrap();
                assert!(is_rhf(&red.target, &red.tau, &f));
                let back = red.backward(&f).unwrap();
                assert!(is_rhs(&h, &back));
                assert!(back.weight() <= f.weight());
            }
        }
        assert!(matches!(rhs_to_rhf(&h, h.num_edges()), Err(Error::TrivialYes(_))));
    }
}

#[test]
fn gadget_offset_is_two() {
    for seed in 0..80u64 {
        let nv = 1 + (seed % 4) as usize;
        let ne = 1 + (seed / 4 % 3) as usize;
        let (h, tau) = gen_random_with_tau(nv, ne, 0.4, seed).unwrap();
        let Ok(rhf) = exact_min_rhf(&h, &tau) else {
            continue;
        };
        let red = rhf_to_rd_gadget(&h, &tau).unwrap();
        let rd = brute_min_rdf(&red.graph).unwrap();
        assert_eq!(rd, rhf.weight + 2, "seed {seed}");
        let g = red.forward(&rhf.witness).unwrap();
        assert!(is_rdf(&red.graph, &g));
        assert_eq!(g.weight(), rd);
        let back = red.backward(&g).unwrap();
        assert!(is_rhf(&h, &tau, &back));
        assert_eq!(back.weight(), rhf.weight);
    }
}

#[test]
fn gadget_backward_handles_arbitrary_rdf() {
    let h = gen_random(3, 2, 0.5, 4).unwrap();
    let tau_map: Vec<usize> = (0..3).map(|x| h.incidence(x).ones().next().unwrap_or(0)).collect();
    let Ok(tau) = Correspondence::new(&h, tau_map) else {
        return;
    };
    let red = rhf_to_rd_gadget(&h, &tau).unwrap();
    for g in all_assignments(red.graph.num_vertices()) {
        if is_rdf(&red.graph, &g) {
            let f = red.backward(&g).unwrap();
            assert!(is_rhf(&h, &tau, &f));
            assert!(f.weight() + 2 <= g.weight());
        }
    }
}

#[test]
fn single_vertex_gadget() {
    let h = Hypergraph::from_edge_lists(1, &[vec![0]]).unwrap();
    let tau = Correspondence::new(&h, vec![0]).unwrap();
    let red = rhf_to_rd_gadget(&h, &tau).unwrap();
    assert_eq!(brute_min_rdf(&red.graph).unwrap(), 3);
}

#[test]
fn pendant_gadget_offset() {
    for seed in 0..80u64 {
        let n = (seed % 6) as usize;
        let g = random_graph(n, 0.5, seed);
        let red = vc_to_rvc(&g).unwrap();
        let vc = brute_min_vertex_cover(&g).unwrap();
        let rvc = brute_min_rhs(&red.hypergraph).unwrap();
        assert_eq!(rvc, vc + n, "seed {seed}");
        assert_eq!(red.offset(), Some(n as i64));
        let opt = exact_min_rhs(&red.hypergraph);
        let cover = red.backward(&opt.witness).unwrap();
        assert_eq!(cover.count_ones(..), vc);
        let fwd = red.forward(&cover).unwrap();
        assert_eq!(fwd.weight(), rvc);
        assert_eq!(red.hypergraph.num_edges(), vertex_cover_hypergraph(&red.graph).num_edges());
    }
}

#[test]
fn split_domination_matches_rhs_extension() {
    for seed in 0..150u64 {
        let k = 1 + (seed % 4) as usize;
        let l = 1 + (seed / 4 % 4) as usize;
        let (g, clique) = random_split_graph(k, l, 0.5, seed);
        let red = ds_split_to_rhs(&g, &clique).unwrap();
        let minimal = brute_enumerate_minimal_ds(&g).unwrap();
        for useed in 0..6 {
            let u = bitset(g.num_vertices(), (0..g.num_vertices()).filter(|&v| (seed + useed + v as u64) % 3 == 0));
            let expect = minimal.iter().any(|d| u.ones().all(|v| d.contains(&v)));
            let pre = red.pre_solution(&u).unwrap();
            let via_rhs = ext_rhs(&red.split.hypergraph, &pre).unwrap();
            assert_eq!(via_rhs.is_yes(), expect, "seed {seed}");
            let direct = ext_ds_split(&g, &clique, &u).unwrap();
            assert_eq!(direct.is_yes(), expect);
            if let Some(r) = via_rhs.witness() {
                let d = red.backward(r).unwrap();
                let dl: Vec<usize> = d.ones().collect();
                assert!(minimal.contains(&dl));
            }
        }
    }
}

#[test]
fn two_section_preserves_rdf_validity() {
    for seed in 0..60u64 {
        let h = gen_random(1 + (seed % 5) as usize, 1 + (seed % 4) as usize, 0.5, seed).unwrap();
        let Ok(red) = two_section(&h) else {
            assert!(!h.is_simple());
            continue;
        };
        for f in all_assignments(h.num_vertices()) {
            let hyper = rhs_core::model::is_hypergraph_rdf(&h, &f);
            assert_eq!(hyper, is_rdf(&red.graph, &f), "seed {seed}");
            assert_eq!(red.forward(&f).is_ok(), hyper);
        }
    }
}

#[test]
fn random_pairs_fit() {
    let h = gen_random(5, 4, 0.5, 1).unwrap();
    let p = random_pair(&h, 0.3, 2);
    assert!(p.fits(&h));
}
