//! Extension solvers: given a pre-solution, decide whether some minimal
//! solution lies above it and produce one.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::characterize::{covered_union, is_minimal_rhf_theorem, ExtensionWitness};
use crate::error::{guard, Error, Result};
use crate::model::{
    closed_neighborhood_hypergraph, BoundedRdInstance, Correspondence, EdgeIndex, Graph,
    Hypergraph, RhsPair, RomanAssignment, VertexId,
};

/// Answer of an extension solver, carrying a minimal solution on `Yes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtAnswer<W> {
    Yes(W),
    No,
}

impl<W> ExtAnswer<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, ExtAnswer::Yes(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            ExtAnswer::Yes(w) => Some(w),
            ExtAnswer::No => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> ExtAnswer<V> {
        match self {
            ExtAnswer::Yes(w) => ExtAnswer::Yes(f(w)),
            ExtAnswer::No => ExtAnswer::No,
        }
    }
}

/// The two rejection tests of the pair extension check, given `hits[i] = |s_i ∩ R₂|`.
///
/// Only the incidences of `R₂` and the membership of `R₁` matter, so the test
/// gives the same answer on any restriction of the edges to a vertex set
/// containing `R₂`.
pub(crate) fn rhs_extensible(h: &Hypergraph, r1: &FixedBitSet, r2: &FixedBitSet, hits: &[u32]) -> bool {
    if r1.ones().any(|i| hits[i] > 0) {
        return false;
    }
    r2.ones()
        .all(|x| h.incidence(x).ones().any(|i| hits[i] == 1))
}

pub(crate) fn hit_counts(h: &Hypergraph, r2: &FixedBitSet) -> Vec<u32> {
    let mut hits = vec![0u32; h.num_edges()];
    for x in r2.ones() {
        for i in h.incidence(x).ones() {
            hits[i] += 1;
        }
    }
    hits
}

/// Is there a minimal rhs above `u`? The witness keeps `R₂ = U₂` and adds every unhit index to `R₁`.
pub fn ext_rhs(h: &Hypergraph, u: &RhsPair) -> Result<ExtAnswer<RhsPair>> {
    u.check_fits(h)?;
    let hits = hit_counts(h, &u.r2);
    if !rhs_extensible(h, &u.r1, &u.r2, &hits) {
        return Ok(ExtAnswer::No);
    }
    let mut m = u.clone();
    for i in 0..h.num_edges() {
        if hits[i] == 0 {
            m.r1.insert(i);
        }
    }
    Ok(ExtAnswer::Yes(m))
}

/// Raises `f` until τ is injective on the 1-vertices and no 1-vertex has a
/// 2-vertex inside its τ-edge. Extensibility is unchanged.
pub fn promote_closure(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> RomanAssignment {
    let mut f = f.clone();
    loop {
        let mut changed = false;
        let twos = f.preimage(2);
        for y in f.preimage(1).ones() {
            if !h.edge(tau.get(y)).is_disjoint(&twos) {
                f.set(y, 2);
                changed = true;
            }
        }
        let ones = f.preimage(1);
        for x in ones.ones() {
            if f.get(x) != 1 {
                continue;
            }
            if let Some(y) = ones
                .ones()
                .find(|&y| y != x && f.get(y) == 1 && tau.get(y) == tau.get(x))
            {
                f.set(x, 2);
                f.set(y, 2);
                changed = true;
            }
        }
        if !changed {
            return f;
        }
    }
}

/// Polynomial extension check for rhf when every index without τ-preimage
/// is already hit by a 2-vertex of `g`.
pub fn ext_rhf_surjective(
    h: &Hypergraph,
    tau: &Correspondence,
    g: &RomanAssignment,
) -> Result<ExtAnswer<RomanAssignment>> {
    let m = h.num_edges();
    let mut m2 = g.preimage(2);
    let mut m1 = g.preimage(1);
    let hit_by_twos = h.incidence_of(&m2);
    if !tau.uncovered(m).is_subset(&hit_by_twos) {
        return Err(Error::invalid(
            "an index without τ-preimage is not hit by a 2-vertex of the pre-solution",
        ));
    }

    let start: Vec<VertexId> = m1.ones().collect();
    for &x in &start {
        if !m1.contains(x) {
            continue;
        }
        if let Some(y) = m1.ones().find(|&y| y != x && tau.get(y) == tau.get(x)) {
            m1.remove(x);
            m1.remove(y);
            m2.insert(x);
            m2.insert(y);
        }
    }

    let mut work = m2.clone();
    while let Some(x) = work.minimum() {
        let inc = h.incidence(x);
        let promoted: Vec<VertexId> = m1.ones().filter(|&y| inc.contains(tau.get(y))).collect();
        for y in promoted {
            m1.remove(y);
            m2.insert(y);
            work.insert(y);
        }
        work.remove(x);
    }

    let hits = hit_counts(h, &m2);
    for x in m2.ones() {
        let private_elsewhere = h
            .incidence(x)
            .ones()
            .any(|i| hits[i] == 1 && i != tau.get(x));
        if !private_elsewhere {
            return Ok(ExtAnswer::No);
        }
    }

    let mut hit = h.incidence_of(&m2);
    hit.union_with(&tau.image(&m1, m));
    let preimages = tau.preimages(m);
    for i in 0..m {
        if hit.contains(i) {
            continue;
        }
        let x = preimages[i]
            .minimum()
            .expect("indices without preimage are hit by the pre-solution");
        m1.insert(x);
        hit.insert(i);
    }
    Ok(ExtAnswer::Yes(RomanAssignment::from_sets(
        h.num_vertices(),
        &m1,
        &m2,
    )))
}

/// How [`ext_rhf_general`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralStrategy {
    /// Every `g ≥ f` in lexicographic order, vertex 0 most significant.
    Sweep,
    /// Promotion closure, then a search over `(R₂, ρ)` pairs.
    WitnessSearch,
}

/// Bound on `|f⁻¹({0,1})|` for the exponential extension solver.
pub const GENERAL_LIMIT: usize = 20;

pub fn ext_rhf_general(
    h: &Hypergraph,
    tau: &Correspondence,
    f: &RomanAssignment,
    strategy: GeneralStrategy,
) -> Result<ExtAnswer<RomanAssignment>> {
    let free = f.values().iter().filter(|&&v| v < 2).count();
    guard(free <= GENERAL_LIMIT, || {
        format!("{free} vertices below 2 exceed the limit of {GENERAL_LIMIT}")
    })?;
    match strategy {
        GeneralStrategy::Sweep => Ok(sweep(h, tau, f)),
        GeneralStrategy::WitnessSearch => {
            let closed = promote_closure(h, tau, f);
            Ok(match find_extension_witness(h, tau, &closed) {
                Some(w) => ExtAnswer::Yes(witness_to_assignment(h, tau, &closed, &w)),
                None => ExtAnswer::No,
            })
        }
    }
}

fn sweep(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> ExtAnswer<RomanAssignment> {
    let free: Vec<VertexId> = (0..f.len()).filter(|&x| f.get(x) < 2).collect();
    let mut g = f.clone();
    loop {
        if is_minimal_rhf_theorem(h, tau, &g) {
            return ExtAnswer::Yes(g);
        }
        // next assignment in lexicographic order; the last free vertex is least significant
        let mut k = free.len();
        loop {
            if k == 0 {
                return ExtAnswer::No;
            }
            k -= 1;
            let x = free[k];
            if g.get(x) < 2 {
                g.set(x, g.get(x) + 1);
                break;
            }
            g.set(x, f.get(x));
        }
    }
}

/// Searches for `(R₂, ρ)` satisfying the four witness constraints.
/// `f` must already be closed under [`promote_closure`].
pub fn find_extension_witness(
    h: &Hypergraph,
    tau: &Correspondence,
    f: &RomanAssignment,
) -> Option<ExtensionWitness> {
    let ones = f.preimage(1);
    let twos = f.preimage(2);
    let ones_list: Vec<VertexId> = ones.ones().collect();
    let uncovered: Vec<EdgeIndex> = tau.uncovered(h.num_edges()).ones().collect();
    for sub in 0..1u64 << ones_list.len() {
        let mut r2 = twos.clone();
        for (k, &x) in ones_list.iter().enumerate() {
            if sub >> k & 1 == 1 {
                r2.insert(x);
            }
        }
        let mut outside = ones.clone();
        outside.difference_with(&r2);
        if outside.ones().any(|x| !h.edge(tau.get(x)).is_disjoint(&r2)) {
            continue;
        }
        let members: Vec<VertexId> = r2.ones().collect();
        let candidates: Vec<Vec<EdgeIndex>> = members
            .iter()
            .map(|&x| {
                h.incidence(x)
                    .ones()
                    .filter(|&i| i != tau.get(x) && h.edge(i).intersection(&r2).eq(std::iter::once(x)))
                    .collect()
            })
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        // τ-empty indices that R₂ misses; none may end up inside the covered union
        let watched: Vec<EdgeIndex> = uncovered
            .iter()
            .copied()
            .filter(|&i| h.edge(i).is_disjoint(&r2))
            .collect();
        let mut base = h.empty_vertex_set();
        for x in outside.ones() {
            base.union_with(h.edge(tau.get(x)));
        }
        let mut choice = vec![0usize; members.len()];
        if assign_rho(h, &watched, &candidates, &mut choice, 0, &base) {
            let mut rho = vec![None; h.num_vertices()];
            for (k, &x) in members.iter().enumerate() {
                rho[x] = Some(candidates[k][choice[k]]);
            }
            return Some(ExtensionWitness { r2, rho });
        }
    }
    None
}

fn assign_rho(
    h: &Hypergraph,
    watched: &[EdgeIndex],
    candidates: &[Vec<EdgeIndex>],
    choice: &mut [usize],
    k: usize,
    covered: &FixedBitSet,
) -> bool {
    if watched.iter().any(|&i| h.edge(i).is_subset(covered)) {
        return false;
    }
    if k == candidates.len() {
        return true;
    }
    for (c, &i) in candidates[k].iter().enumerate() {
        let mut next = covered.clone();
        next.union_with(h.edge(i));
        choice[k] = c;
        if assign_rho(h, watched, candidates, choice, k + 1, &next) {
            return true;
        }
    }
    false
}

/// Builds a minimal rhf above `f` from a valid witness.
pub fn witness_to_assignment(
    h: &Hypergraph,
    tau: &Correspondence,
    f: &RomanAssignment,
    w: &ExtensionWitness,
) -> RomanAssignment {
    let m = h.num_edges();
    let mut outside = f.preimage(1);
    outside.difference_with(&w.r2);
    let covered = covered_union(h, tau, &outside, &w.r2, &w.rho);
    let open: Vec<EdgeIndex> = tau
        .uncovered(m)
        .ones()
        .filter(|&i| h.edge(i).is_disjoint(&w.r2))
        .collect();
    let mut pool = h.empty_vertex_set();
    for &i in &open {
        pool.union_with(h.edge(i));
    }
    pool.difference_with(&covered);
    let family: Vec<FixedBitSet> = open
        .iter()
        .map(|&i| {
            let mut s = h.edge(i).clone();
            s.intersect_with(&pool);
            s
        })
        .collect();
    let mut d = pool.clone();
    for x in pool.ones() {
        d.remove(x);
        if family.iter().any(|s| s.is_disjoint(&d)) {
            d.insert(x);
        }
    }
    let mut twos = w.r2.clone();
    twos.union_with(&d);
    let hit = h.incidence_of(&twos);
    let preimages = tau.preimages(m);
    let mut ones = h.empty_vertex_set();
    for i in (0..m).filter(|&i| !hit.contains(i)) {
        let x = preimages[i]
            .intersection(&outside)
            .next()
            .or_else(|| preimages[i].minimum())
            .expect("every unhit index has a τ-preimage");
        ones.insert(x);
    }
    RomanAssignment::from_sets(h.num_vertices(), &ones, &twos)
}

/// Is there a minimal rdf `g` with `lower ≤ g ≤ upper`?
///
/// Branches over a dominator for each vertex capped at 0, then runs the
/// polynomial check on the closed-neighbourhood hypergraph.
pub fn bounded_ext_rd(inst: &BoundedRdInstance) -> Result<ExtAnswer<RomanAssignment>> {
    let g = &inst.graph;
    let n = g.num_vertices();
    if inst.lower.len() != n || inst.upper.len() != n {
        return Err(Error::invalid("bound assignments must cover every vertex"));
    }
    if !inst.lower.le(&inst.upper) {
        return Ok(ExtAnswer::No);
    }
    let (gnb, id) = closed_neighborhood_hypergraph(g);
    let mut base = inst.lower.clone();
    if !close_bounded(g, &inst.upper, &mut base) {
        return Ok(ExtAnswer::No);
    }
    let capped: Vec<VertexId> = (0..n).filter(|&v| inst.upper.get(v) == 0).collect();
    let mut seen = HashSet::new();
    Ok(branch_dominators(g, &gnb, &id, &inst.upper, &capped, 0, base, &mut seen))
}

/// Raises 1-vertices next to a 2-vertex to 2; fails if the cap forbids it.
fn close_bounded(g: &Graph, upper: &RomanAssignment, f: &mut RomanAssignment) -> bool {
    loop {
        let twos = f.preimage(2);
        let near = g.open_neighborhood_of(&twos);
        let raise: Vec<VertexId> = f.preimage(1).intersection(&near).collect();
        if raise.is_empty() {
            return true;
        }
        for v in raise {
            if upper.get(v) < 2 {
                return false;
            }
            f.set(v, 2);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn branch_dominators(
    g: &Graph,
    gnb: &Hypergraph,
    id: &Correspondence,
    upper: &RomanAssignment,
    capped: &[VertexId],
    k: usize,
    base: RomanAssignment,
    seen: &mut HashSet<RomanAssignment>,
) -> ExtAnswer<RomanAssignment> {
    if k == capped.len() {
        if !seen.insert(base.clone()) {
            return ExtAnswer::No;
        }
        let answer = ext_rhf_surjective(gnb, id, &base).expect("identity correspondence is surjective");
        if let ExtAnswer::Yes(w) = &answer {
            debug_assert!(w.le(upper));
        }
        return answer;
    }
    let v = capped[k];
    let twos = base.preimage(2);
    if !g.neighbors(v).is_disjoint(&twos) {
        return branch_dominators(g, gnb, id, upper, capped, k + 1, base, seen);
    }
    for u in g.neighbors(v).ones().filter(|&u| upper.get(u) == 2) {
        let mut next = base.clone();
        next.set(u, 2);
        if !close_bounded(g, upper, &mut next) {
            continue;
        }
        if let ExtAnswer::Yes(w) = branch_dominators(g, gnb, id, upper, capped, k + 1, next, seen) {
            return ExtAnswer::Yes(w);
        }
    }
    ExtAnswer::No
}

/// Checks that `clique` is a clique and its complement is independent.
pub fn check_split(g: &Graph, clique: &FixedBitSet) -> Result<()> {
    let n = g.num_vertices();
    if clique.len() != n {
        return Err(Error::invalid("split partition does not match the vertex set"));
    }
    for &(u, v) in g.edges() {
        if !clique.contains(u) && !clique.contains(v) {
            return Err(Error::invalid(format!(
                "`{}` and `{}` are adjacent but both on the independent side",
                g.name(u),
                g.name(v)
            )));
        }
    }
    let members: Vec<VertexId> = clique.ones().collect();
    for (a, &u) in members.iter().enumerate() {
        for &v in &members[a + 1..] {
            if !g.adjacent(u, v) {
                return Err(Error::invalid(format!(
                    "`{}` and `{}` are on the clique side but not adjacent",
                    g.name(u),
                    g.name(v)
                )));
            }
        }
    }
    Ok(())
}

/// A clique side for `g` if it is a split graph (degree-sequence test).
pub fn find_split(g: &Graph) -> Option<FixedBitSet> {
    let n = g.num_vertices();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).count_ones(..)), v));
    let deg = |v: VertexId| g.neighbors(v).count_ones(..);
    let m = (0..n)
        .take_while(|&i| deg(order[i]) >= i)
        .count();
    let head: usize = order[..m].iter().map(|&v| deg(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| deg(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = crate::model::bitset(n, order[..m].iter().copied());
    check_split(g, &clique).ok().map(|_| clique)
}

/// Hitting instance of a split graph: vertices are the clique vertices (after
/// moving any clique vertex without independent neighbour to the independent
/// side), one edge `N(i)` per independent vertex `i`.
pub struct SplitHitting {
    pub hypergraph: Hypergraph,
    /// Graph vertex of each hypergraph vertex.
    pub clique: Vec<VertexId>,
    /// Graph vertex of each edge index.
    pub independent: Vec<VertexId>,
}

impl SplitHitting {
    pub fn new(g: &Graph, clique: &FixedBitSet) -> Result<Self> {
        check_split(g, clique)?;
        let mut clique = clique.clone();
        loop {
            let lonely = clique.ones().find(|&c| {
                g.neighbors(c).ones().all(|u| clique.contains(u))
            });
            match lonely {
                Some(c) => {
                    clique.remove(c);
                }
                None => break,
            }
        }
        let cl: Vec<VertexId> = clique.ones().collect();
        let ind: Vec<VertexId> = (0..g.num_vertices()).filter(|&v| !clique.contains(v)).collect();
        let pos = |v: VertexId| cl.iter().position(|&c| c == v).expect("clique member");
        let edges = ind
            .iter()
            .map(|&i| {
                (
                    g.name(i).to_string(),
                    g.neighbors(i).ones().map(pos).collect(),
                )
            })
            .collect();
        let hypergraph = Hypergraph::new(cl.iter().map(|&c| g.name(c).to_string()).collect(), edges)?;
        Ok(SplitHitting {
            hypergraph,
            clique: cl,
            independent: ind,
        })
    }

    /// `(U ∩ I, U ∩ C)` in hypergraph coordinates.
    pub fn pre_solution(&self, u: &FixedBitSet) -> RhsPair {
        let h = &self.hypergraph;
        RhsPair {
            r1: crate::model::bitset(
                h.num_edges(),
                (0..self.independent.len()).filter(|&k| u.contains(self.independent[k])),
            ),
            r2: crate::model::bitset(
                h.num_vertices(),
                (0..self.clique.len()).filter(|&k| u.contains(self.clique[k])),
            ),
        }
    }

    /// `D = R₁ ∪ R₂` in graph coordinates.
    pub fn dominating_set(&self, r: &RhsPair, n: usize) -> FixedBitSet {
        crate::model::bitset(
            n,
            r.r1.ones()
                .map(|k| self.independent[k])
                .chain(r.r2.ones().map(|k| self.clique[k])),
        )
    }
}

/// Is there a minimal dominating set of the split graph containing `u`?
pub fn ext_ds_split(g: &Graph, clique: &FixedBitSet, u: &FixedBitSet) -> Result<ExtAnswer<FixedBitSet>> {
    if u.len() != g.num_vertices() {
        return Err(Error::invalid("pre-solution does not match the vertex set"));
    }
    let split = SplitHitting::new(g, clique)?;
    let answer = ext_rhs(&split.hypergraph, &split.pre_solution(u))?;
    Ok(answer.map(|r| split.dominating_set(&r, g.num_vertices())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characterize::{check_extension_witness, is_minimal_rhs_theorem};
    use crate::model::fixtures::*;
    use crate::model::bitset;

    #[test]
    fn ext_rhs_examples() {
        let h = ex1();
        assert_eq!(ext_rhs(&h, &RhsPair::from_lists(&h, &[0], &[0])).unwrap(), ExtAnswer::No);
        let u = RhsPair::from_lists(&h, &[0, 1, 2], &[2]);
        assert_eq!(ext_rhs(&h, &u).unwrap(), ExtAnswer::Yes(u.clone()));
        let empty = ext_rhs(&h, &RhsPair::empty(&h)).unwrap();
        assert_eq!(empty, ExtAnswer::Yes(RhsPair::all_self_hit(&h)));
        assert!(is_minimal_rhs_theorem(&h, empty.witness().unwrap()));
    }

    #[test]
    fn ext_rhf_surjective_examples() {
        let (gnb, id) = closed_neighborhood_hypergraph(&p3());
        let yes = ext_rhf_surjective(&gnb, &id, &assign(3, &[(1, 2)])).unwrap();
        assert_eq!(yes, ExtAnswer::Yes(assign(3, &[(1, 2)])));
        let no = ext_rhf_surjective(&gnb, &id, &assign(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!(no, ExtAnswer::No);
        let zero = ext_rhf_surjective(&gnb, &id, &RomanAssignment::zeros(3)).unwrap();
        let w = zero.witness().unwrap();
        assert!(w.values().iter().all(|&v| v < 2));
        assert!(is_minimal_rhf_theorem(&gnb, &id, w));
    }

    #[test]
    fn ext_rhf_surjective_checks_precondition() {
        let h = ex2();
        let tau = ex2_tau(&h);
        assert!(ext_rhf_surjective(&h, &tau, &RomanAssignment::zeros(5)).is_err());
        // index 5 is hit by e=2
        assert!(ext_rhf_surjective(&h, &tau, &assign(5, &[(4, 2)])).is_ok());
    }

    #[test]
    fn promotion_examples() {
        let h = ex2();
        let tau = ex2_tau(&h);
        // b=2 lies in s_τ(a) = s1
        let f = promote_closure(&h, &tau, &assign(5, &[(0, 1), (1, 2)]));
        assert_eq!(f.get(0), 2);
        let g = assign(5, &[(1, 2), (4, 2)]);
        assert_eq!(promote_closure(&h, &tau, &g), g);
        let both = promote_closure(&h, &tau, &assign(5, &[(0, 1), (1, 1)]));
        assert_eq!((both.get(0), both.get(1)), (2, 2));
    }

    #[test]
    fn general_strategies_agree_on_examples() {
        let h = ex2();
        let tau = ex2_tau(&h);
        for strategy in [GeneralStrategy::Sweep, GeneralStrategy::WitnessSearch] {
            let a = ext_rhf_general(&h, &tau, &RomanAssignment::zeros(5), strategy).unwrap();
            assert!(is_minimal_rhf_theorem(&h, &tau, a.witness().unwrap()));
        }
        let h1 = ex1();
        let tau1 = Correspondence::new(&h1, vec![0, 2, 3, 4]).unwrap();
        let all2 = RomanAssignment::constant(4, 2);
        let sweep = ext_rhf_general(&h1, &tau1, &all2, GeneralStrategy::Sweep).unwrap();
        let search = ext_rhf_general(&h1, &tau1, &all2, GeneralStrategy::WitnessSearch).unwrap();
        assert_eq!(sweep.is_yes(), search.is_yes());
        assert_eq!(sweep.is_yes(), is_minimal_rhf_theorem(&h1, &tau1, &all2));
    }

    #[test]
    fn found_witness_passes_checker() {
        let h = ex1();
        let tau = Correspondence::new(&h, vec![0, 2, 3, 4]).unwrap();
        let f = assign(4, &[(2, 2)]);
        let w = find_extension_witness(&h, &tau, &f).unwrap();
        assert_eq!(check_extension_witness(&h, &tau, &f, &w).unwrap(), Ok(()));
        let g = witness_to_assignment(&h, &tau, &f, &w);
        assert!(f.le(&g));
        assert!(is_minimal_rhf_theorem(&h, &tau, &g));
    }

    #[test]
    fn general_refuses_large() {
        let h = Hypergraph::from_edge_lists(21, &[(0..21).collect()]).unwrap();
        let tau = Correspondence::new(&h, vec![0; 21]).unwrap();
        let err = ext_rhf_general(&h, &tau, &RomanAssignment::zeros(21), GeneralStrategy::Sweep)
            .unwrap_err();
        assert!(err.is_refusal());
    }

    #[test]
    fn bounded_examples() {
        let g = p3();
        let inst = BoundedRdInstance::new(g.clone(), RomanAssignment::zeros(3), RomanAssignment::constant(3, 2)).unwrap();
        assert!(bounded_ext_rd(&inst).unwrap().is_yes());
        let mut upper = RomanAssignment::constant(3, 2);
        upper.set(1, 0);
        let inst = BoundedRdInstance::new(g, assign(3, &[(1, 2)]), upper).unwrap();
        assert_eq!(bounded_ext_rd(&inst).unwrap(), ExtAnswer::No);
        let k2 = graph(&["u", "v"], &[("u", "v")]);
        let inst = BoundedRdInstance::new(k2, assign(2, &[(0, 1)]), assign(2, &[(0, 2)])).unwrap();
        assert_eq!(bounded_ext_rd(&inst).unwrap(), ExtAnswer::Yes(assign(2, &[(0, 2)])));
    }

    #[test]
    fn split_examples() {
        let g = graph(&["c1", "c2", "i1"], &[("c1", "c2"), ("c1", "i1")]);
        let clique = bitset(3, [0, 1]);
        let yes = ext_ds_split(&g, &clique, &bitset(3, [1])).unwrap();
        let d = yes.witness().unwrap();
        assert!(d.contains(1));
        assert_eq!(d.ones().collect::<Vec<_>>(), vec![1, 2]);
        assert!(ext_ds_split(&g, &clique, &bitset(3, [])).unwrap().is_yes());
        assert!(!ext_ds_split(&g, &clique, &bitset(3, [0, 1, 2])).unwrap().is_yes());
        assert!(ext_ds_split(&g, &bitset(3, [1, 2]), &bitset(3, [])).is_err());
        assert_eq!(find_split(&g), Some(bitset(3, [0, 1])));
        let c4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]);
        assert_eq!(find_split(&c4), None);
    }
}
