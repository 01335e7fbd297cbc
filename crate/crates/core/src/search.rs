//! Mutable branching state shared by the enumerator and the exact optimizer.
//!
//! The state tracks the live vertices `X′`, the partial pair `(R₁, R₂)`, the
//! unhit indices `I′ = I ∖ (R₁ ∪ 𝐈(R₂))` and the counters needed to read off
//! the measure `μ = |X′∖R₂| + |I′|`. Every change is pushed on a trail and can
//! be reverted to an earlier mark.

use fixedbitset::FixedBitSet;

use crate::extend::rhs_extensible;
use crate::model::{EdgeIndex, Hypergraph, RhsPair, VertexId};

enum Op {
    Delete(VertexId),
    AddR2 {
        x: VertexId,
        newly_hit: Vec<EdgeIndex>,
    },
    AddR1(EdgeIndex),
}

pub(crate) struct SearchState<'a> {
    pub h: &'a Hypergraph,
    pub alive: FixedBitSet,
    pub r1: FixedBitSet,
    pub r2: FixedBitSet,
    pub unhit: FixedBitSet,
    /// `|s_i ∩ R₂|`.
    pub hits: Vec<u32>,
    /// `|s_i ∩ X′|`.
    pub live: Vec<u32>,
    /// `|𝐈(x) ∩ I′|`.
    pub deg: Vec<u32>,
    trail: Vec<Op>,
}

impl<'a> SearchState<'a> {
    pub fn new(h: &'a Hypergraph) -> Self {
        SearchState {
            h,
            alive: h.all_vertices(),
            r1: h.empty_edge_set(),
            r2: h.empty_vertex_set(),
            unhit: h.all_edges(),
            hits: vec![0; h.num_edges()],
            live: h.edges().iter().map(|e| e.count_ones(..) as u32).collect(),
            deg: (0..h.num_vertices())
                .map(|x| h.incidence(x).count_ones(..) as u32)
                .collect(),
            trail: Vec::new(),
        }
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn measure(&self) -> usize {
        self.alive.count_ones(..) - self.r2.count_ones(..) + self.unhit.count_ones(..)
    }

    pub fn weight(&self) -> usize {
        self.r1.count_ones(..) + 2 * self.r2.count_ones(..)
    }

    pub fn pair(&self) -> RhsPair {
        RhsPair::new(self.r1.clone(), self.r2.clone())
    }

    /// Whether some minimal rhs above `(R₁, R₂)` uses only live vertices.
    pub fn extensible(&self) -> bool {
        rhs_extensible(self.h, &self.r1, &self.r2, &self.hits)
    }

    /// Cheapest possible cost of hitting the remaining unhit indices: each
    /// costs 1 through `R₁`, or a vertex of cost 2 hits at most `d` of them.
    pub fn completion_bound(&self) -> usize {
        let u = self.unhit.count_ones(..);
        let d = self.free_vertices().map(|x| self.deg[x]).max().unwrap_or(0) as usize;
        if d <= 1 {
            u
        } else {
            (2 * u).div_ceil(d).min(u)
        }
    }

    /// Live vertices not in `R₂`.
    pub fn free_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.ones().filter(|&x| !self.r2.contains(x))
    }

    /// `s_i ∩ X′` in ascending order.
    pub fn live_members(&self, i: EdgeIndex) -> Vec<VertexId> {
        self.h.edge(i).intersection(&self.alive).collect()
    }

    /// `𝐈′(x)` in ascending order.
    pub fn live_incidence(&self, x: VertexId) -> Vec<EdgeIndex> {
        self.h.incidence(x).intersection(&self.unhit).collect()
    }

    fn unhit_leaves(&mut self, i: EdgeIndex) {
        self.unhit.remove(i);
        for x in self.h.edge(i).ones() {
            self.deg[x] -= 1;
        }
    }

    fn unhit_returns(&mut self, i: EdgeIndex) {
        self.unhit.insert(i);
        for x in self.h.edge(i).ones() {
            self.deg[x] += 1;
        }
    }

    pub fn delete(&mut self, x: VertexId) {
        debug_assert!(self.alive.contains(x) && !self.r2.contains(x));
        self.alive.remove(x);
        for i in self.h.incidence(x).ones() {
            self.live[i] -= 1;
        }
        self.trail.push(Op::Delete(x));
    }

    pub fn add_r2(&mut self, x: VertexId) {
        debug_assert!(self.alive.contains(x) && !self.r2.contains(x));
        self.r2.insert(x);
        let mut newly_hit = Vec::new();
        for i in self.h.incidence(x).ones() {
            self.hits[i] += 1;
            if self.unhit.contains(i) {
                newly_hit.push(i);
            }
        }
        for &i in &newly_hit {
            self.unhit_leaves(i);
        }
        self.trail.push(Op::AddR2 { x, newly_hit });
    }

    /// Puts an unhit index into `R₁` and deletes its live members.
    pub fn add_r1(&mut self, i: EdgeIndex) {
        debug_assert!(self.unhit.contains(i));
        self.r1.insert(i);
        self.unhit_leaves(i);
        self.trail.push(Op::AddR1(i));
        for x in self.live_members(i) {
            self.delete(x);
        }
    }

    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail longer than mark") {
                Op::Delete(x) => {
                    self.alive.insert(x);
                    for i in self.h.incidence(x).ones() {
                        self.live[i] += 1;
                    }
                }
                Op::AddR2 { x, newly_hit } => {
                    for &i in &newly_hit {
                        self.unhit_returns(i);
                    }
                    for i in self.h.incidence(x).ones() {
                        self.hits[i] -= 1;
                    }
                    self.r2.remove(x);
                }
                Op::AddR1(i) => {
                    self.r1.remove(i);
                    self.unhit_returns(i);
                }
            }
        }
    }

    /// Smallest free vertex with no unhit index.
    pub fn useless_vertex(&self) -> Option<VertexId> {
        self.free_vertices().find(|&x| self.deg[x] == 0)
    }

    /// Smallest unhit index whose live content is empty.
    pub fn empty_unhit_edge(&self) -> Option<EdgeIndex> {
        self.unhit.ones().find(|&i| self.live[i] == 0)
    }
}
