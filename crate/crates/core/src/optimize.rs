//! Minimum-weight solvers: greedy approximation, exact branch-and-reduce,
//! Roman vertex cover and Roman edge cover.

use crate::enumerate::{enumerate_minimal_rhs, EnumerationStats};
use crate::error::{Error, Result};
use crate::model::{
    bitset, edge_cover_hypergraph, is_rhf, is_rhs, vertex_cover_hypergraph, Correspondence, Graph, Hypergraph,
    RhsPair, RomanAssignment, VertexId,
};
use crate::reduce::{rhf_to_rhs, Reduction};
use crate::search::SearchState;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptResult<W> {
    pub weight: usize,
    pub witness: W,
    /// Search nodes visited; zero for closed-form solvers.
    pub nodes: u64,
}

/// Greedy hitting set over the nonempty edges: repeatedly take the vertex
/// hitting the most unhit edges, smallest id on ties.
fn greedy_cover(h: &Hypergraph) -> fixedbitset::FixedBitSet {
    let mut unhit = bitset(h.num_edges(), (0..h.num_edges()).filter(|&i| !h.edge(i).is_clear()));
    let mut cover = h.empty_vertex_set();
    while !unhit.is_clear() {
        let mut best: Option<(usize, VertexId)> = None;
        for x in 0..h.num_vertices() {
            let gain = h.incidence(x).intersection(&unhit).count();
            if gain > 0 && best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, x));
            }
        }
        let (_, x) = best.expect("a nonempty unhit edge has a member");
        cover.insert(x);
        unhit.difference_with(h.incidence(x));
    }
    cover
}

/// `(∅, C)` for the greedy hitting set `C`; empty edges, which no vertex can
/// hit, go to `R₁`.
pub fn greedy_rhs(h: &Hypergraph) -> (RhsPair, usize) {
    let r2 = greedy_cover(h);
    let r1 = bitset(h.num_edges(), (0..h.num_edges()).filter(|&i| h.edge(i).is_clear()));
    let pair = RhsPair::new(r1, r2);
    let w = pair.weight();
    (pair, w)
}

/// `f⁻¹(2) = C` for the greedy hitting set `C` and `f⁻¹(1) = ∅`.
pub fn greedy_rhf(h: &Hypergraph, tau: &Correspondence) -> Result<(RomanAssignment, usize)> {
    if let Some(i) = (0..h.num_edges()).find(|&i| h.edge(i).is_clear()) {
        return Err(Error::Infeasible(format!("edge `{}` is empty", h.edge_name(i))));
    }
    let n = h.num_vertices();
    let f = RomanAssignment::from_sets(n, &h.empty_vertex_set(), &greedy_cover(h));
    debug_assert!(is_rhf(h, tau, &f));
    let w = f.weight();
    Ok((f, w))
}

struct ExactSearch<'a> {
    state: SearchState<'a>,
    best: usize,
    witness: RhsPair,
    nodes: u64,
}

/// Minimum-weight Roman hitting set by branch and reduce with best-so-far pruning.
pub fn exact_min_rhs(h: &Hypergraph) -> OptResult<RhsPair> {
    let mut search = ExactSearch {
        state: SearchState::new(h),
        best: h.num_edges(),
        witness: RhsPair::new(h.all_edges(), h.empty_vertex_set()),
        nodes: 0,
    };
    search.node();
    OptResult {
        weight: search.best,
        witness: search.witness,
        nodes: search.nodes,
    }
}

impl ExactSearch<'_> {
    fn reduce(&mut self) {
        loop {
            let s = &self.state;
            if let Some(i) = s.empty_unhit_edge() {
                self.state.add_r1(i);
                continue;
            }
            let light = s.free_vertices().find(|&x| s.deg[x] <= 2);
            if let Some(x) = light {
                self.state.delete(x);
                continue;
            }
            let forced = s.free_vertices().find(|&x| {
                s.live_incidence(x).into_iter().filter(|&i| s.live[i] == 1).count() >= 3
            });
            match forced {
                Some(x) => self.state.add_r2(x),
                None => return,
            }
        }
    }

    fn node(&mut self) {
        self.nodes += 1;
        let mark = self.state.mark();
        self.reduce();
        if self.state.weight() + self.state.completion_bound() >= self.best {
            self.state.undo_to(mark);
            return;
        }
        if self.state.unhit.is_clear() {
            self.best = self.state.weight();
            self.witness = self.state.pair();
            self.state.undo_to(mark);
            return;
        }
        let s = &self.state;
        let before = s.measure();
        let x = s
            .free_vertices()
            .find(|&x| s.deg[x] == 3)
            .or_else(|| s.free_vertices().find(|&x| s.deg[x] >= 4))
            .expect("free vertices have at least three unhit indices");
        let deg = s.deg[x];
        let mut others: Vec<VertexId> = Vec::new();
        if deg == 3 {
            for i in s.live_incidence(x) {
                others.extend(s.live_members(i).into_iter().filter(|&y| y != x));
            }
            others.sort_unstable();
            others.dedup();
        }

        let take = |this: &mut Self, drop: usize| {
            let m = this.state.mark();
            this.state.add_r2(x);
            for &y in &others {
                this.state.delete(y);
            }
            assert!(before >= this.state.measure() + drop);
            this.node();
            this.state.undo_to(m);
        };
        let skip = |this: &mut Self| {
            let m = this.state.mark();
            this.state.delete(x);
            this.node();
            this.state.undo_to(m);
        };
        if deg == 3 {
            skip(self);
            take(self, 5);
        } else {
            take(self, 5);
            skip(self);
        }
        self.state.undo_to(mark);
    }
}

/// Minimum-weight Roman hitting function, solved as a Roman hitting set
/// instance with duplicated preimage-free edges.
pub fn exact_min_rhf(h: &Hypergraph, tau: &Correspondence) -> Result<OptResult<RomanAssignment>> {
    if let Some(i) = (0..h.num_edges()).find(|&i| h.edge(i).is_clear()) {
        return Err(Error::Infeasible(format!("edge `{}` is empty", h.edge_name(i))));
    }
    let red = rhf_to_rhs(h, tau)?;
    let opt = exact_min_rhs(&red.target);
    let f = red.backward(&opt.witness)?;
    assert!(is_rhf(h, &red.tau, &f));
    assert_eq!(f.weight(), opt.weight, "normalization keeps the weight");
    Ok(OptResult {
        weight: opt.weight,
        witness: f,
        nodes: opt.nodes,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RvcDecision {
    pub answer: bool,
    /// Recursive calls made, at most `3 · 2^k`.
    pub nodes: u64,
}

fn check_budget(k: i64) -> Result<usize> {
    usize::try_from(k).map_err(|_| Error::invalid(format!("negative budget k = {k}")))
}

/// Is there a Roman vertex cover of weight at most `k`? Branches on the
/// first remaining edge `{v, u}`: `v` into `R₂`, `u` into `R₂`, or the edge into `R₁`.
pub fn rvc_decide(g: &Graph, k: i64) -> Result<RvcDecision> {
    let k = check_budget(k)?;
    let mut nodes = 0;
    let answer = rvc_branch(g.edges(), k, &mut nodes);
    Ok(RvcDecision { answer, nodes })
}

fn rvc_branch(edges: &[(VertexId, VertexId)], k: usize, nodes: &mut u64) -> bool {
    *nodes += 1;
    if edges.is_empty() || (edges.len() == 1 && k == 1) {
        return true;
    }
    if k <= 1 {
        return false;
    }
    let (v, u) = edges[0];
    let without = |w: VertexId| -> Vec<(VertexId, VertexId)> {
        edges.iter().copied().filter(|&(a, b)| a != w && b != w).collect()
    };
    rvc_branch(&without(v), k - 2, nodes)
        || rvc_branch(&without(u), k - 2, nodes)
        || rvc_branch(&edges[1..], k - 1, nodes)
}

/// Every minimal Roman vertex cover of weight at most `k`, exactly once.
pub fn rvc_enumerate(g: &Graph, k: i64, sink: &mut dyn FnMut(&RhsPair)) -> Result<EnumerationStats> {
    let k = check_budget(k)?;
    Ok(enumerate_minimal_rhs(&vertex_cover_hypergraph(g), Some(k), sink))
}

/// Minimum Roman edge cover: `(V, ∅)` of weight `|V|` is always optimal.
pub fn rec_min(g: &Graph) -> OptResult<RhsPair> {
    let h = edge_cover_hypergraph(g);
    let witness = RhsPair::new(h.all_edges(), h.empty_vertex_set());
    debug_assert!(is_rhs(&h, &witness));
    OptResult {
        weight: g.num_vertices(),
        witness,
        nodes: 0,
    }
}
