//! Combinatorial minimality tests and the extensibility-witness checker.
//!
//! Each `check_*` function reports the first violated constraint; the
//! `is_*` wrappers collapse that to a boolean.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::model::{Correspondence, EdgeIndex, Graph, Hypergraph, RhsPair, RomanAssignment, VertexId};

/// The first constraint a candidate fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub constraint: u8,
    pub reason: String,
}

impl Violation {
    fn new(constraint: u8, reason: impl Into<String>) -> Self {
        Violation {
            constraint,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "constraint {}: {}", self.constraint, self.reason)
    }
}

pub type Verdict = std::result::Result<(), Violation>;

/// `R₂` together with a private-edge choice `ρ` for each of its members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionWitness {
    pub r2: FixedBitSet,
    /// Indexed by vertex; `Some` exactly on `r2`.
    pub rho: Vec<Option<EdgeIndex>>,
}

/// `D` hits every member of `family` and each `x ∈ D` has a member it alone hits.
pub fn is_minimal_hitting_set<'a>(
    family: impl IntoIterator<Item = &'a FixedBitSet>,
    d: &FixedBitSet,
) -> bool {
    let mut private = FixedBitSet::with_capacity(d.len());
    for e in family {
        let mut hits = e.intersection(d);
        match (hits.next(), hits.next()) {
            (None, _) => return false,
            (Some(x), None) => private.insert(x),
            _ => {}
        }
    }
    d.is_subset(&private)
}

/// `P_{G,D}(v) = N[v] ∖ N[D∖{v}]`.
pub fn private_neighborhood(g: &Graph, d: &FixedBitSet, v: VertexId) -> Result<FixedBitSet> {
    if !d.contains(v) {
        return Err(Error::invalid(format!("`{}` is not in the set", g.name(v))));
    }
    Ok(private_within(g, None, d, v))
}

/// Private neighbourhood inside the subgraph induced by `keep` (whole graph if `None`).
fn private_within(g: &Graph, keep: Option<&FixedBitSet>, d: &FixedBitSet, v: VertexId) -> FixedBitSet {
    let mut p = g.closed_neighborhood(v);
    for u in d.ones().filter(|&u| u != v) {
        p.difference_with(&g.closed_neighborhood(u));
    }
    if let Some(keep) = keep {
        p.intersect_with(keep);
    }
    p
}

pub fn check_minimal_rdf(g: &Graph, f: &RomanAssignment) -> Verdict {
    check_rdf_common(g, f, true)
}

pub fn check_po_minimal_rdf(g: &Graph, f: &RomanAssignment) -> Verdict {
    check_rdf_common(g, f, false)
}

fn check_rdf_common(g: &Graph, f: &RomanAssignment, privacy: bool) -> Verdict {
    let twos = f.preimage(2);
    let ones = f.preimage(1);
    if let Some(v) = g.closed_neighborhood_of(&twos).intersection(&ones).next() {
        return Err(Violation::new(
            1,
            format!("`{}` has value 1 next to a 2", g.name(v)),
        ));
    }
    let mut keep = ones.clone();
    keep.toggle_range(..);
    if privacy {
        for v in twos.ones() {
            let p = private_within(g, Some(&keep), &twos, v);
            if p.ones().all(|u| u == v) {
                return Err(Violation::new(
                    2,
                    format!("`{}` has no private neighbour other than itself", g.name(v)),
                ));
            }
        }
    }
    let last = if privacy { 3 } else { 2 };
    // f⁻¹(2) is a minimal dominating set of G[f⁻¹({0,2})]: a minimal hitting set of the
    // restricted closed neighbourhoods.
    let family: Vec<FixedBitSet> = keep
        .ones()
        .map(|v| {
            let mut n = g.closed_neighborhood(v);
            n.intersect_with(&keep);
            n
        })
        .collect();
    if !is_minimal_hitting_set(&family, &twos) {
        return Err(Violation::new(
            last,
            "the 2-vertices are not a minimal dominating set of the graph without the 1-vertices",
        ));
    }
    Ok(())
}

pub fn is_minimal_rdf_theorem(g: &Graph, f: &RomanAssignment) -> bool {
    check_minimal_rdf(g, f).is_ok()
}

pub fn is_po_minimal_rdf_theorem(g: &Graph, f: &RomanAssignment) -> bool {
    check_po_minimal_rdf(g, f).is_ok()
}

pub fn check_minimal_rhs(h: &Hypergraph, r: &RhsPair) -> Verdict {
    if let Some(i) = r.r1.ones().find(|&i| !h.edge(i).is_disjoint(&r.r2)) {
        return Err(Violation::new(
            1,
            format!("index `{}` is in R1 but its edge meets R2", h.edge_name(i)),
        ));
    }
    let family = (0..h.num_edges())
        .filter(|&i| !r.r1.contains(i))
        .map(|i| h.edge(i));
    if !is_minimal_hitting_set(family, &r.r2) {
        return Err(Violation::new(
            2,
            "R2 is not a minimal hitting set of the edges outside R1",
        ));
    }
    Ok(())
}

pub fn is_minimal_rhs_theorem(h: &Hypergraph, r: &RhsPair) -> bool {
    check_minimal_rhs(h, r).is_ok()
}

/// Constraints 0 to 3 of the rhf characterization.
pub fn check_minimal_rhf(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> Verdict {
    let ones = f.preimage(1);
    let twos = f.preimage(2);
    if !tau.is_injective_on(&ones) {
        return Err(Violation::new(0, "two 1-vertices share a τ-index"));
    }
    for x in ones.ones() {
        if !h.edge(tau.get(x)).is_disjoint(&twos) {
            return Err(Violation::new(
                1,
                format!("the τ-edge of `{}` contains a 2-vertex", h.vertex_name(x)),
            ));
        }
    }
    for x in twos.ones() {
        let has_private = h
            .incidence(x)
            .ones()
            .filter(|&i| i != tau.get(x))
            .any(|i| h.edge(i).intersection(&twos).all(|y| y == x));
        if !has_private {
            return Err(Violation::new(
                2,
                format!("`{}` has no private edge besides its τ-edge", h.vertex_name(x)),
            ));
        }
    }
    let served = tau.image(&ones, h.num_edges());
    let family = (0..h.num_edges())
        .filter(|&i| !served.contains(i))
        .map(|i| h.edge(i));
    if !is_minimal_hitting_set(family, &twos) {
        return Err(Violation::new(
            3,
            "the 2-vertices are not a minimal hitting set of the edges not served by a 1-vertex",
        ));
    }
    Ok(())
}

pub fn is_minimal_rhf_theorem(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> bool {
    check_minimal_rhf(h, tau, f).is_ok()
}

/// Union of the τ-edges of `f⁻¹(1)∖R₂` and the ρ-edges of `R₂`.
pub(crate) fn covered_union(
    h: &Hypergraph,
    tau: &Correspondence,
    ones_outside: &FixedBitSet,
    r2: &FixedBitSet,
    rho: &[Option<EdgeIndex>],
) -> FixedBitSet {
    let mut u = h.empty_vertex_set();
    for x in ones_outside.ones() {
        u.union_with(h.edge(tau.get(x)));
    }
    for x in r2.ones() {
        if let Some(i) = rho[x] {
            u.union_with(h.edge(i));
        }
    }
    u
}

/// Constraints 1 to 4 of the extensibility characterization.
///
/// Requires τ to be injective on `f⁻¹(1)` (run the promotion closure first)
/// and the witness to satisfy `f⁻¹(2) ⊆ R₂ ⊆ f⁻¹({1,2})` with `ρ` defined on `R₂`.
pub fn check_extension_witness(
    h: &Hypergraph,
    tau: &Correspondence,
    f: &RomanAssignment,
    w: &ExtensionWitness,
) -> Result<Verdict> {
    let ones = f.preimage(1);
    let twos = f.preimage(2);
    if !tau.is_injective_on(&ones) {
        return Err(Error::invalid(
            "τ is not injective on the 1-vertices; apply the promotion closure first",
        ));
    }
    let mut allowed = ones.clone();
    allowed.union_with(&twos);
    if w.r2.len() != h.num_vertices() || w.rho.len() != h.num_vertices() {
        return Err(Error::invalid("witness does not match the universe"));
    }
    if !twos.is_subset(&w.r2) || !w.r2.is_subset(&allowed) {
        return Err(Error::invalid("witness R2 must lie between f⁻¹(2) and f⁻¹({1,2})"));
    }
    for x in 0..h.num_vertices() {
        match w.rho[x] {
            Some(i) if i >= h.num_edges() => {
                return Err(Error::invalid("ρ points outside the index set"))
            }
            Some(_) if !w.r2.contains(x) => {
                return Err(Error::invalid("ρ is defined outside R2"))
            }
            None if w.r2.contains(x) => return Err(Error::invalid("ρ is not total on R2")),
            _ => {}
        }
    }
    for x in w.r2.ones() {
        let i = w.rho[x].expect("checked above");
        if i == tau.get(x) {
            return Ok(Err(Violation::new(
                1,
                format!("ρ and τ agree on `{}`", h.vertex_name(x)),
            )));
        }
        if h.edge(i).intersection(&w.r2).ne(std::iter::once(x)) {
            return Ok(Err(Violation::new(
                2,
                format!("the ρ-edge of `{}` does not meet R2 in exactly it", h.vertex_name(x)),
            )));
        }
    }
    let mut ones_outside = ones;
    ones_outside.difference_with(&w.r2);
    for x in ones_outside.ones() {
        if !h.edge(tau.get(x)).is_disjoint(&w.r2) {
            return Ok(Err(Violation::new(
                3,
                format!("the τ-edge of 1-vertex `{}` meets R2", h.vertex_name(x)),
            )));
        }
    }
    let covered = covered_union(h, tau, &ones_outside, &w.r2, &w.rho);
    for i in tau.uncovered(h.num_edges()).ones() {
        if h.edge(i).is_subset(&covered) && h.edge(i).is_disjoint(&w.r2) {
            return Ok(Err(Violation::new(
                4,
                format!("index `{}` has no τ-preimage and can no longer be hit", h.edge_name(i)),
            )));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::*;
    use crate::model::{bitset, closed_neighborhood_hypergraph};

    #[test]
    fn private_neighborhood_examples() {
        let g = p3();
        let b = bitset(3, [1]);
        assert_eq!(private_neighborhood(&g, &b, 1).unwrap().ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        let ac = bitset(3, [0, 2]);
        assert_eq!(private_neighborhood(&g, &ac, 0).unwrap().ones().collect::<Vec<_>>(), vec![0]);
        let k2 = graph(&["u", "v"], &[("u", "v")]);
        assert!(private_neighborhood(&k2, &bitset(2, [0, 1]), 0).unwrap().is_clear());
        assert!(private_neighborhood(&g, &b, 0).is_err());
    }

    #[test]
    fn rdf_theorem_examples() {
        let g = p3();
        assert!(is_minimal_rdf_theorem(&g, &assign(3, &[(1, 2)])));
        assert_eq!(
            check_minimal_rdf(&g, &assign(3, &[(0, 2), (1, 2)])).unwrap_err().constraint,
            2
        );
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert!(is_minimal_rdf_theorem(&k1, &assign(1, &[(0, 1)])));
        assert!(!is_minimal_rdf_theorem(&k1, &assign(1, &[(0, 2)])));
        assert!(is_po_minimal_rdf_theorem(&k1, &assign(1, &[(0, 2)])));
    }

    #[test]
    fn po_rdf_examples() {
        let g = p3();
        assert!(is_po_minimal_rdf_theorem(&g, &assign(3, &[(1, 2)])));
        let p4 = graph(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]);
        assert!(is_po_minimal_rdf_theorem(&p4, &assign(4, &[(1, 2), (2, 2)])));
        assert_eq!(
            check_po_minimal_rdf(&g, &assign(3, &[(0, 1), (1, 2)])).unwrap_err().constraint,
            1
        );
    }

    #[test]
    fn rhs_theorem_examples() {
        let h = ex1();
        assert!(is_minimal_rhs_theorem(&h, &RhsPair::from_lists(&h, &[0, 1, 2], &[2])));
        assert_eq!(
            check_minimal_rhs(&h, &RhsPair::from_lists(&h, &[0], &[0])).unwrap_err().constraint,
            1
        );
        assert!(is_minimal_rhs_theorem(&h, &RhsPair::all_self_hit(&h)));
        assert!(!is_minimal_rhs_theorem(&h, &RhsPair::empty(&h)));
    }

    #[test]
    fn rhf_theorem_examples() {
        let (gnb, id) = closed_neighborhood_hypergraph(&p3());
        assert!(is_minimal_rhf_theorem(&gnb, &id, &assign(3, &[(1, 2)])));
        let h = ex2();
        let tau = ex2_tau(&h);
        assert!(is_minimal_rhf_theorem(&h, &tau, &assign(5, &[(1, 2), (4, 2)])));
        // a and b share τ-index 1
        assert_eq!(
            check_minimal_rhf(&h, &tau, &assign(5, &[(0, 1), (1, 1), (4, 2), (2, 1), (3, 1)]))
                .unwrap_err()
                .constraint,
            0
        );
    }

    fn ex1_tau(h: &Hypergraph) -> Correspondence {
        // τ(a)=1, τ(b)=3, τ(c)=4, τ(d)=5
        Correspondence::new(h, vec![0, 2, 3, 4]).unwrap()
    }

    fn witness(n: usize, r2: &[usize], rho: &[(usize, usize)]) -> ExtensionWitness {
        let mut map = vec![None; n];
        for &(x, i) in rho {
            map[x] = Some(i);
        }
        ExtensionWitness {
            r2: bitset(n, r2.iter().copied()),
            rho: map,
        }
    }

    #[test]
    fn witness_examples() {
        let h = ex1();
        let tau = ex1_tau(&h);
        let f = assign(4, &[(2, 2)]);
        let ok = witness(4, &[2], &[(2, 4)]);
        assert_eq!(check_extension_witness(&h, &tau, &f, &ok).unwrap(), Ok(()));
        let same = witness(4, &[2], &[(2, 3)]);
        assert_eq!(
            check_extension_witness(&h, &tau, &f, &same).unwrap().unwrap_err().constraint,
            1
        );
    }

    #[test]
    fn witness_surjective_ignores_constraint_four() {
        let (gnb, id) = closed_neighborhood_hypergraph(&p3());
        let f = assign(3, &[(1, 2)]);
        let w = witness(3, &[1], &[(1, 0)]);
        assert_eq!(check_extension_witness(&gnb, &id, &f, &w).unwrap(), Ok(()));
    }

    #[test]
    fn witness_precondition_is_enforced() {
        let h = ex2();
        let tau = ex2_tau(&h);
        let f = assign(5, &[(0, 1), (1, 1)]);
        let w = witness(5, &[], &[]);
        assert!(check_extension_witness(&h, &tau, &f, &w).is_err());
    }

    #[test]
    fn minimal_hitting_sets() {
        let fam = [bitset(3, [0, 1]), bitset(3, [1, 2])];
        assert!(is_minimal_hitting_set(&fam, &bitset(3, [1])));
        assert!(is_minimal_hitting_set(&fam, &bitset(3, [0, 2])));
        assert!(!is_minimal_hitting_set(&fam, &bitset(3, [0, 1])));
        assert!(!is_minimal_hitting_set(&fam, &bitset(3, [0])));
        assert!(is_minimal_hitting_set(std::iter::empty(), &bitset(3, [])));
    }
}
