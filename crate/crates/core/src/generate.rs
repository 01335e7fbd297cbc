//! Seeded instance generators.

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{bitset, Correspondence, Graph, Hypergraph, RhsPair, RomanAssignment, VertexId};

/// `n` disjoint edges `{x_{2i-1}, x_{2i}}`, which carry `3^n` minimal rhs.
pub fn gen_tight(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::invalid("tight instance needs n >= 1"));
    }
    let edges: Vec<Vec<VertexId>> = (0..n).map(|i| vec![2 * i, 2 * i + 1]).collect();
    Hypergraph::from_edge_lists(2 * n, &edges)
}

fn check_density(density: f64) -> Result<()> {
    if density > 0.0 && density <= 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!("density {density} outside (0, 1]")))
    }
}

fn random_edges(rng: &mut ChaCha8Rng, nv: usize, ne: usize, density: f64) -> Vec<Vec<VertexId>> {
    (0..ne)
        .map(|_| (0..nv).filter(|_| rng.gen_bool(density)).collect())
        .collect()
}

/// Each of the `nv * ne` incidences is present independently with probability `density`.
pub fn gen_random(nv: usize, ne: usize, density: f64, seed: u64) -> Result<Hypergraph> {
    check_density(density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Hypergraph::from_edge_lists(nv, &random_edges(&mut rng, nv, ne, density))
}

/// Like [`gen_random`], plus a correspondence: every vertex maps to a uniform
/// edge containing it, receiving a fresh incidence first if it has none.
pub fn gen_random_with_tau(nv: usize, ne: usize, density: f64, seed: u64) -> Result<(Hypergraph, Correspondence)> {
    check_density(density)?;
    if ne == 0 && nv > 0 {
        return Err(Error::invalid("a correspondence needs at least one edge"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_edges(&mut rng, nv, ne, density);
    let mut map = Vec::with_capacity(nv);
    for x in 0..nv {
        let holding: Vec<usize> = (0..ne).filter(|&i| edges[i].contains(&x)).collect();
        let i = match holding.choose(&mut rng) {
            Some(&i) => i,
            None => {
                let i = rng.gen_range(0..ne);
                let pos = edges[i].partition_point(|&y| y < x);
                edges[i].insert(pos, x);
                i
            }
        };
        map.push(i);
    }
    let h = Hypergraph::from_edge_lists(nv, &edges)?;
    let tau = Correspondence::new(&h, map)?;
    Ok((h, tau))
}

/// A pair whose `R₁` and `R₂` members are drawn independently with probability `p`.
pub fn random_pair(h: &Hypergraph, p: f64, seed: u64) -> RhsPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r1 = bitset(h.num_edges(), (0..h.num_edges()).filter(|_| rng.gen_bool(p)));
    let r2 = bitset(h.num_vertices(), (0..h.num_vertices()).filter(|_| rng.gen_bool(p)));
    RhsPair::new(r1, r2)
}

/// Values 0, 1, 2 with probabilities `1 - p1 - p2`, `p1`, `p2`.
pub fn random_assignment(n: usize, p1: f64, p2: f64, seed: u64) -> RomanAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n)
        .map(|_| {
            let r: f64 = rng.gen();
            if r < p2 {
                2
            } else if r < p1 + p2 {
                1
            } else {
                0
            }
        })
        .collect();
    RomanAssignment::new(values).expect("values are 0, 1 or 2")
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple by construction")
}

/// Split graph: vertices `0..clique` form a clique, the rest an independent
/// set, and each clique-independent pair is adjacent with probability `p`.
pub fn random_split_graph(clique: usize, independent: usize, p: f64, seed: u64) -> (Graph, FixedBitSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    for u in 0..clique {
        for v in clique..clique + independent {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(clique + independent, &edges).expect("simple by construction");
    (g, bitset(clique + independent, 0..clique))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_shape() {
        let h = gen_tight(1).unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (2, 1));
        let h = gen_tight(3).unwrap();
        assert_eq!((h.num_vertices(), h.num_edges()), (6, 3));
        assert!(h.edges().iter().all(|e| e.count_ones(..) == 2));
        assert_eq!(h.edge(2).ones().collect::<Vec<_>>(), vec![4, 5]);
        assert!(gen_tight(0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(6, 7, 0.4, 11).unwrap();
        let b = gen_random(6, 7, 0.4, 11).unwrap();
        assert_eq!(a.edges(), b.edges());
        let full = gen_random(4, 3, 1.0, 0).unwrap();
        assert!(full.edges().iter().all(|e| e.count_ones(..) == 4));
        assert!(gen_random(2, 2, 0.0, 0).is_err());
    }

    #[test]
    fn tau_is_valid() {
        for seed in 0..20 {
            let (h, tau) = gen_random_with_tau(6, 4, 0.2, seed).unwrap();
            for x in 0..6 {
                assert!(h.edge(tau.get(x)).contains(x));
            }
        }
        assert!(gen_random_with_tau(1, 0, 0.5, 0).is_err());
    }

    #[test]
    fn split_graph_is_split() {
        let (g, clique) = random_split_graph(3, 4, 0.5, 2);
        assert!(crate::extend::check_split(&g, &clique).is_ok());
    }
}
