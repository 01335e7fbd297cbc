//! Reductions between Roman domination, Roman hitting functions, Roman hitting
//! sets, vertex cover and split-graph domination, each with solution mappers.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::extend::SplitHitting;
use crate::model::{
    bitset, closed_neighborhood_hypergraph, is_hypergraph_rdf, is_rdf, is_rhf, is_rhs, vertex_cover_hypergraph,
    Correspondence, EdgeIndex, Graph, Hypergraph, RhsPair, RomanAssignment, VertexId,
};

/// A reduction with solution mappers in both directions.
pub trait Reduction {
    type Source;
    type Target;

    /// Maps a valid source solution to a valid target solution.
    fn forward(&self, s: &Self::Source) -> Result<Self::Target>;

    /// Maps a valid target solution back to a valid source solution.
    fn backward(&self, t: &Self::Target) -> Result<Self::Source>;

    /// Target optimum minus source optimum, when the reduction fixes it.
    fn offset(&self) -> Option<i64>;
}

fn check_len(len: usize, expect: usize, what: &str) -> Result<()> {
    if len == expect {
        Ok(())
    } else {
        Err(Error::invalid(format!("{what} has size {len}, expected {expect}")))
    }
}

/// Roman domination functions of a graph are exactly the Roman hitting
/// functions of its closed-neighbourhood hypergraph under `τ = id`.
pub struct RdToRhf {
    pub graph: Graph,
    pub hypergraph: Hypergraph,
    pub tau: Correspondence,
}

pub fn rd_to_rhf(g: &Graph) -> RdToRhf {
    let (hypergraph, tau) = closed_neighborhood_hypergraph(g);
    RdToRhf {
        graph: g.clone(),
        hypergraph,
        tau,
    }
}

impl Reduction for RdToRhf {
    type Source = RomanAssignment;
    type Target = RomanAssignment;

    fn forward(&self, f: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(f.len(), self.graph.num_vertices(), "assignment")?;
        Ok(f.clone())
    }

    fn backward(&self, f: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(f.len(), self.graph.num_vertices(), "assignment")?;
        Ok(f.clone())
    }

    fn offset(&self) -> Option<i64> {
        Some(0)
    }
}

/// Duplicates every edge whose `τ`-preimage is empty; the minimum Roman
/// hitting set of the result weighs as much as the minimum rhf of the source.
pub struct RhfToRhs {
    pub source: Hypergraph,
    pub tau: Correspondence,
    pub target: Hypergraph,
    /// `(original, duplicate)` index pairs.
    pub duplicates: Vec<(EdgeIndex, EdgeIndex)>,
}

pub fn rhf_to_rhs(h: &Hypergraph, tau: &Correspondence) -> Result<RhfToRhs> {
    let tau = Correspondence::new(h, tau.as_slice().to_vec())?;
    let uncovered: Vec<EdgeIndex> = tau.uncovered(h.num_edges()).ones().collect();
    let mut edges: Vec<(String, Vec<VertexId>)> = (0..h.num_edges())
        .map(|i| (h.edge_name(i).to_string(), h.edge(i).ones().collect()))
        .collect();
    let mut duplicates = Vec::new();
    for &i in &uncovered {
        duplicates.push((i, edges.len()));
        edges.push((format!("{}'", h.edge_name(i)), h.edge(i).ones().collect()));
    }
    let target = Hypergraph::new(h.vertex_names().to_vec(), edges)?;
    Ok(RhfToRhs {
        source: h.clone(),
        tau,
        target,
        duplicates,
    })
}

impl Reduction for RhfToRhs {
    type Source = RomanAssignment;
    type Target = RhsPair;

    /// `(τ(f⁻¹(1)), f⁻¹(2))`.
    fn forward(&self, f: &RomanAssignment) -> Result<RhsPair> {
        check_len(f.len(), self.source.num_vertices(), "assignment")?;
        if !is_rhf(&self.source, &self.tau, f) {
            return Err(Error::invalid("not a Roman hitting function"));
        }
        let r1 = self.tau.image(&f.preimage(1), self.target.num_edges());
        Ok(RhsPair::new(r1, f.preimage(2)))
    }

    /// Normalizes `R₁` away from edges without preimage, then picks the
    /// smallest preimage of every remaining `R₁` index.
    fn backward(&self, r: &RhsPair) -> Result<RomanAssignment> {
        r.check_fits(&self.target)?;
        if !is_rhs(&self.target, r) {
            return Err(Error::invalid("not a Roman hitting set of the target"));
        }
        let n = self.source.num_vertices();
        let mut r1 = r.r1.clone();
        let mut r2 = r.r2.clone();
        for &(i, dup) in &self.duplicates {
            if !r1.contains(i) && !r1.contains(dup) {
                continue;
            }
            r1.remove(i);
            r1.remove(dup);
            if self.source.edge(i).is_disjoint(&r2) {
                let x = self.source.edge(i).ones().next().ok_or_else(|| {
                    Error::Infeasible(format!(
                        "edge `{}` is empty and no vertex corresponds to it",
                        self.source.edge_name(i)
                    ))
                })?;
                r2.insert(x);
            }
        }
        let preimages = self.tau.preimages(self.source.num_edges());
        let mut f = RomanAssignment::from_sets(n, &FixedBitSet::with_capacity(n), &r2);
        for i in r1.ones() {
            let x = preimages[i].ones().next().expect("normalized R1 indices have preimages");
            if f.get(x) == 0 {
                f.set(x, 1);
            }
        }
        Ok(f)
    }

    fn offset(&self) -> Option<i64> {
        Some(0)
    }
}

/// Adds one vertex per index and a universal edge so that weight-`k` Roman
/// hitting sets correspond to weight-`k` Roman hitting functions for `k < |I|`.
pub struct RhsToRhf {
    pub source: Hypergraph,
    pub k: usize,
    pub target: Hypergraph,
    pub tau: Correspondence,
}

pub fn rhs_to_rhf(h: &Hypergraph, k: usize) -> Result<RhsToRhf> {
    let n = h.num_vertices();
    let m = h.num_edges();
    if k >= m {
        return Err(Error::TrivialYes(format!(
            "k = {k} >= {m} edges, so putting every index into R1 already succeeds"
        )));
    }
    let mut names = h.vertex_names().to_vec();
    names.extend((0..m).map(|i| format!("i_{}", h.edge_name(i))));
    let mut edges: Vec<(String, Vec<VertexId>)> = (0..m)
        .map(|i| {
            let mut members: Vec<VertexId> = h.edge(i).ones().collect();
            members.push(n + i);
            (h.edge_name(i).to_string(), members)
        })
        .collect();
    edges.push(("a".to_string(), (0..n).collect()));
    let target = Hypergraph::new(names, edges)?;
    let map = (0..n).map(|_| m).chain(0..m).collect();
    let tau = Correspondence::new(&target, map)?;
    Ok(RhsToRhf {
        source: h.clone(),
        k,
        target,
        tau,
    })
}

impl Reduction for RhsToRhf {
    type Source = RhsPair;
    type Target = RomanAssignment;

    /// `f⁻¹(1) = R₁` on the index vertices and `f⁻¹(2) = R₂`; needs weight at most `k`.
    fn forward(&self, r: &RhsPair) -> Result<RomanAssignment> {
        r.check_fits(&self.source)?;
        if !is_rhs(&self.source, r) {
            return Err(Error::invalid("not a Roman hitting set"));
        }
        if r.weight() > self.k {
            return Err(Error::invalid(format!("weight {} exceeds k = {}", r.weight(), self.k)));
        }
        let n = self.source.num_vertices();
        let total = self.target.num_vertices();
        let ones = bitset(total, r.r1.ones().map(|i| n + i));
        let twos = bitset(total, r.r2.ones());
        Ok(RomanAssignment::from_sets(total, &ones, &twos))
    }

    fn backward(&self, f: &RomanAssignment) -> Result<RhsPair> {
        check_len(f.len(), self.target.num_vertices(), "assignment")?;
        if !is_rhf(&self.target, &self.tau, f) {
            return Err(Error::invalid("not a Roman hitting function of the target"));
        }
        let n = self.source.num_vertices();
        let m = self.source.num_edges();
        let r1 = bitset(m, (0..m).filter(|&i| f.get(n + i) >= 1));
        let r2 = bitset(n, (0..n).filter(|&x| f.get(x) == 2));
        Ok(RhsPair::new(r1, r2))
    }

    fn offset(&self) -> Option<i64> {
        Some(0)
    }
}

/// The split-graph gadget whose minimum rdf weighs exactly two more than the
/// minimum rhf of the source.
pub struct RhfToRdGadget {
    pub source: Hypergraph,
    pub tau: Correspondence,
    pub graph: Graph,
    /// Graph vertex `v_x` of each source vertex.
    pub vertex_of: Vec<VertexId>,
    /// Graph vertex `w_i` of each index.
    pub w_of: Vec<VertexId>,
    /// Graph vertex `u_i` of each index without preimage.
    pub u_of: Vec<Option<VertexId>>,
    /// The clique `{a} ∪ {v_x}`.
    pub clique: FixedBitSet,
}

const GADGET_A: VertexId = 0;
const GADGET_B: VertexId = 1;
const GADGET_C: VertexId = 2;

pub fn rhf_to_rd_gadget(h: &Hypergraph, tau: &Correspondence) -> Result<RhfToRdGadget> {
    let tau = Correspondence::new(h, tau.as_slice().to_vec())?;
    let n = h.num_vertices();
    let m = h.num_edges();
    let uncovered = tau.uncovered(m);
    let mut names: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
    let vertex_of: Vec<VertexId> = (0..n).map(|x| 3 + x).collect();
    names.extend((0..n).map(|x| format!("v_{}", h.vertex_name(x))));
    let w_of: Vec<VertexId> = (0..m).map(|i| 3 + n + i).collect();
    names.extend((0..m).map(|i| format!("w_{}", h.edge_name(i))));
    let mut u_of = vec![None; m];
    for i in uncovered.ones() {
        u_of[i] = Some(names.len());
        names.push(format!("u_{}", h.edge_name(i)));
    }

    let mut edges = vec![(GADGET_A, GADGET_B), (GADGET_A, GADGET_C)];
    edges.extend(vertex_of.iter().map(|&v| (GADGET_A, v)));
    for i in 0..m {
        edges.extend(h.edge(i).ones().map(|x| (vertex_of[x], w_of[i])));
    }
    for i in 0..m {
        if let Some(u) = u_of[i] {
            edges.extend(h.edge(i).ones().map(|x| (vertex_of[x], u)));
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            edges.push((vertex_of[x], vertex_of[y]));
        }
    }
    let total = names.len();
    let graph = Graph::new(names, edges)?;
    let clique = bitset(total, std::iter::once(GADGET_A).chain(vertex_of.iter().copied()));
    Ok(RhfToRdGadget {
        source: h.clone(),
        tau,
        graph,
        vertex_of,
        w_of,
        u_of,
        clique,
    })
}

impl Reduction for RhfToRdGadget {
    type Source = RomanAssignment;
    type Target = RomanAssignment;

    /// `a` and `v_x` for `f(x) = 2` get 2; `w_i` gets 1 when some preimage of `i` has value 1.
    fn forward(&self, f: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(f.len(), self.source.num_vertices(), "assignment")?;
        if !is_rhf(&self.source, &self.tau, f) {
            return Err(Error::invalid("not a Roman hitting function"));
        }
        let mut g = RomanAssignment::zeros(self.graph.num_vertices());
        g.set(GADGET_A, 2);
        for x in f.preimage(2).ones() {
            g.set(self.vertex_of[x], 2);
        }
        for x in f.preimage(1).ones() {
            g.set(self.w_of[self.tau.get(x)], 1);
        }
        Ok(g)
    }

    /// Keeps `x` at 2 when `v_x` is at 2. Every index not yet hit is paid for
    /// by `w_i` (and `u_i`): a preimage gets 1, or a member of the edge gets 2.
    fn backward(&self, g: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(g.len(), self.graph.num_vertices(), "assignment")?;
        if !is_rdf(&self.graph, g) {
            return Err(Error::invalid("not a Roman domination function of the gadget"));
        }
        let h = &self.source;
        let mut f = RomanAssignment::zeros(h.num_vertices());
        for x in 0..h.num_vertices() {
            if g.get(self.vertex_of[x]) == 2 {
                f.set(x, 2);
            }
        }
        let preimages = self.tau.preimages(h.num_edges());
        for i in 0..h.num_edges() {
            if h.edge(i).ones().any(|x| g.get(self.vertex_of[x]) == 2) {
                continue;
            }
            if let Some(x) = preimages[i].ones().next() {
                if f.get(x) == 0 {
                    f.set(x, 1);
                }
            } else {
                let x = h.edge(i).ones().next().ok_or_else(|| {
                    Error::Infeasible(format!(
                        "edge `{}` is empty and no vertex corresponds to it",
                        h.edge_name(i)
                    ))
                })?;
                f.set(x, 2);
            }
        }
        Ok(f)
    }

    fn offset(&self) -> Option<i64> {
        Some(2)
    }
}

/// Attaches a pendant `v'` to every vertex; a vertex cover of size `k` exists
/// iff a Roman vertex cover of weight `k + |V|` exists in the result.
pub struct VcToRvc {
    pub source: Graph,
    pub graph: Graph,
    /// The Roman vertex cover hypergraph of `graph`: the source edges come
    /// first, then the pendant edge of each source vertex.
    pub hypergraph: Hypergraph,
}

pub fn vc_to_rvc(g: &Graph) -> Result<VcToRvc> {
    let n = g.num_vertices();
    let mut names = g.names().to_vec();
    names.extend(g.names().iter().map(|s| format!("{s}'")));
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n + v)));
    let graph = Graph::new(names, edges)?;
    let hypergraph = vertex_cover_hypergraph(&graph);
    Ok(VcToRvc {
        source: g.clone(),
        graph,
        hypergraph,
    })
}

impl Reduction for VcToRvc {
    type Source = FixedBitSet;
    type Target = RhsPair;

    /// The cover goes to `R₂`, the pendant edges of uncovered vertices to `R₁`.
    fn forward(&self, cover: &FixedBitSet) -> Result<RhsPair> {
        let n = self.source.num_vertices();
        check_len(cover.len(), n, "vertex set")?;
        if self.source.edges().iter().any(|&(u, v)| !cover.contains(u) && !cover.contains(v)) {
            return Err(Error::invalid("not a vertex cover"));
        }
        let m = self.source.num_edges();
        let r1 = bitset(m + n, (0..n).filter(|&v| !cover.contains(v)).map(|v| m + v));
        let r2 = bitset(2 * n, cover.ones());
        Ok(RhsPair::new(r1, r2))
    }

    /// `v` joins the cover when `v` or `v'` is in `R₂`, and `R₁` source edges
    /// contribute their first endpoint.
    fn backward(&self, r: &RhsPair) -> Result<FixedBitSet> {
        r.check_fits(&self.hypergraph)?;
        if !is_rhs(&self.hypergraph, r) {
            return Err(Error::invalid("not a Roman vertex cover of the gadget"));
        }
        let n = self.source.num_vertices();
        let mut cover = bitset(n, (0..n).filter(|&v| r.r2.contains(v) || r.r2.contains(n + v)));
        for (e, &(u, v)) in self.source.edges().iter().enumerate() {
            if r.r1.contains(e) && !cover.contains(u) && !cover.contains(v) {
                cover.insert(u.min(v));
            }
        }
        Ok(cover)
    }

    fn offset(&self) -> Option<i64> {
        Some(self.source.num_vertices() as i64)
    }
}

/// Minimal dominating sets of a split graph containing `U` correspond to
/// minimal Roman hitting sets above `(U ∩ I, U ∩ C)` via `D = R₁ ∪ R₂`.
pub struct DsSplitToRhs {
    pub graph: Graph,
    pub split: SplitHitting,
}

pub fn ds_split_to_rhs(g: &Graph, clique: &FixedBitSet) -> Result<DsSplitToRhs> {
    Ok(DsSplitToRhs {
        graph: g.clone(),
        split: SplitHitting::new(g, clique)?,
    })
}

impl DsSplitToRhs {
    pub fn pre_solution(&self, u: &FixedBitSet) -> Result<RhsPair> {
        check_len(u.len(), self.graph.num_vertices(), "vertex set")?;
        Ok(self.split.pre_solution(u))
    }
}

impl Reduction for DsSplitToRhs {
    type Source = FixedBitSet;
    type Target = RhsPair;

    fn forward(&self, d: &FixedBitSet) -> Result<RhsPair> {
        self.pre_solution(d)
    }

    fn backward(&self, r: &RhsPair) -> Result<FixedBitSet> {
        r.check_fits(&self.split.hypergraph)?;
        Ok(self.split.dominating_set(r, self.graph.num_vertices()))
    }

    /// Weights are not preserved: clique vertices cost 1 in the graph and 2 in the pair.
    fn offset(&self) -> Option<i64> {
        None
    }
}

/// Joins every two vertices that share an edge. Defined for simple hypergraphs.
pub struct TwoSection {
    pub source: Hypergraph,
    pub graph: Graph,
}

pub fn two_section(h: &Hypergraph) -> Result<TwoSection> {
    if !h.is_simple() {
        return Err(Error::invalid("the 2-section is built for simple hypergraphs only"));
    }
    let n = h.num_vertices();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for e in h.edges() {
        for x in e.ones() {
            adj[x].union_with(e);
        }
    }
    let mut edges = Vec::new();
    for (x, row) in adj.iter().enumerate() {
        edges.extend(row.ones().filter(|&y| y > x).map(|y| (x, y)));
    }
    Ok(TwoSection {
        source: h.clone(),
        graph: Graph::new(h.vertex_names().to_vec(), edges)?,
    })
}

impl Reduction for TwoSection {
    type Source = RomanAssignment;
    type Target = RomanAssignment;

    fn forward(&self, f: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(f.len(), self.source.num_vertices(), "assignment")?;
        if !is_hypergraph_rdf(&self.source, f) {
            return Err(Error::invalid("not a Roman domination function of the hypergraph"));
        }
        Ok(f.clone())
    }

    fn backward(&self, f: &RomanAssignment) -> Result<RomanAssignment> {
        check_len(f.len(), self.graph.num_vertices(), "assignment")?;
        if !is_rdf(&self.graph, f) {
            return Err(Error::invalid("not a Roman domination function of the graph"));
        }
        Ok(f.clone())
    }

    fn offset(&self) -> Option<i64> {
        Some(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::*;

    #[test]
    fn surjective_tau_adds_nothing() {
        let h = ex2();
        let tau = Correspondence::new(&h, vec![0, 2, 1, 3, 4]).unwrap();
        let red = rhf_to_rhs(&h, &tau).unwrap();
        assert_eq!(red.target.num_edges(), 5);
        assert!(red.duplicates.is_empty());
    }

    #[test]
    fn ex2_duplicates_the_fifth_edge() {
        let h = ex2();
        let red = rhf_to_rhs(&h, &ex2_tau(&h)).unwrap();
        assert_eq!(red.duplicates, vec![(4, 5)]);
        assert_eq!(red.target.edge_name(5), "5'");
        // ({5,5'}, {b}) normalizes to b and d at 2
        let back = red.backward(&RhsPair::from_lists(&red.target, &[4, 5], &[1])).unwrap();
        assert!(is_rhf(&h, &red.tau, &back));
        assert_eq!(back.weight(), 4);
    }

    #[test]
    fn rhs_to_rhf_shape_and_guard() {
        let h = ex2();
        let red = rhs_to_rhf(&h, 3).unwrap();
        assert_eq!(red.target.num_vertices(), 10);
        assert_eq!(red.target.num_edges(), 6);
        let f = red.forward(&RhsPair::from_lists(&h, &[4], &[1])).unwrap();
        assert!(is_rhf(&red.target, &red.tau, &f));
        assert_eq!(f.weight(), 3);
        assert_eq!(red.backward(&f).unwrap(), RhsPair::from_lists(&h, &[4], &[1]));
        assert!(matches!(rhs_to_rhf(&h, 5), Err(Error::TrivialYes(_))));
    }

    #[test]
    fn gadget_is_split_with_printed_size() {
        let h = ex2();
        let red = rhf_to_rd_gadget(&h, &ex2_tau(&h)).unwrap();
        // a, b, c, five v_x, five w_i, one u_i
        assert_eq!(red.graph.num_vertices(), 14);
        assert!(crate::extend::check_split(&red.graph, &red.clique).is_ok());
        let f = RomanAssignment::from_sets(5, &bitset(5, []), &bitset(5, [1, 4]));
        let g = red.forward(&f).unwrap();
        assert!(is_rdf(&red.graph, &g));
        assert_eq!(g.weight(), 6);
        assert_eq!(red.backward(&g).unwrap(), f);
    }

    #[test]
    fn pendant_gadget() {
        let k3 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let red = vc_to_rvc(&k3).unwrap();
        assert_eq!((red.graph.num_vertices(), red.graph.num_edges()), (6, 6));
        let cover = bitset(3, [0, 1]);
        let r = red.forward(&cover).unwrap();
        assert_eq!(r.weight(), 5);
        assert_eq!(red.backward(&r).unwrap(), cover);
    }

    #[test]
    fn two_section_examples() {
        let tri = named(&["a", "b", "c"], &[&["a", "b", "c"]]);
        assert_eq!(two_section(&tri).unwrap().graph.num_edges(), 3);
        let h = named(&["a", "b", "c", "d"], &[&["a", "b"], &["a"], &["b"], &["a", "c"], &["c", "d"]]);
        let g = two_section(&h).unwrap().graph;
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert!(two_section(&named(&["a"], &[&["a"], &["a"]])).is_err());
    }
}
