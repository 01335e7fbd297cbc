//! Hypergraphs, graphs, correspondences, Roman assignments and Roman pairs.
//!
//! Vertices and edge indices are dense `usize` ids assigned in declaration
//! order; the original tokens are kept only for printing. Every set is a
//! [`FixedBitSet`] sized to its universe.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeIndex = usize;

/// Bit set of the given capacity holding the listed members.
pub fn bitset(len: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    for m in members {
        s.insert(m);
    }
    s
}

pub(crate) fn full(len: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(len);
    s.insert_range(..);
    s
}

fn index_names(names: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return Err(Error::invalid(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(map)
}

/// A finite universe together with an indexed sequence of hyperedges.
///
/// Two indices may carry the same vertex set; edges may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<FixedBitSet>,
    incidence: Vec<FixedBitSet>,
    vertex_ids: HashMap<String, VertexId>,
    edge_ids: HashMap<String, EdgeIndex>,
}

impl Hypergraph {
    pub fn new(vertex_names: Vec<String>, edges: Vec<(String, Vec<VertexId>)>) -> Result<Self> {
        let n = vertex_names.len();
        let vertex_ids = index_names(&vertex_names, "vertex")?;
        let mut edge_names = Vec::with_capacity(edges.len());
        let mut sets = Vec::with_capacity(edges.len());
        for (name, members) in edges {
            if let Some(&bad) = members.iter().find(|&&x| x >= n) {
                return Err(Error::invalid(format!(
                    "edge `{name}` references vertex id {bad} outside the universe"
                )));
            }
            edge_names.push(name);
            sets.push(bitset(n, members));
        }
        let edge_ids = index_names(&edge_names, "edge")?;
        let m = sets.len();
        let mut incidence = vec![FixedBitSet::with_capacity(m); n];
        for (i, s) in sets.iter().enumerate() {
            for x in s.ones() {
                incidence[x].insert(i);
            }
        }
        Ok(Hypergraph {
            vertex_names,
            edge_names,
            edges: sets,
            incidence,
            vertex_ids,
            edge_ids,
        })
    }

    /// Hypergraph on vertices `x1..xn` with edges named `1..m`.
    pub fn from_edge_lists(n: usize, edges: &[Vec<VertexId>]) -> Result<Self> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        let edges = edges
            .iter()
            .enumerate()
            .map(|(i, e)| ((i + 1).to_string(), e.clone()))
            .collect();
        Hypergraph::new(names, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: EdgeIndex) -> &FixedBitSet {
        &self.edges[i]
    }

    pub fn edges(&self) -> &[FixedBitSet] {
        &self.edges
    }

    /// The indices of the edges containing `x`.
    pub fn incidence(&self, x: VertexId) -> &FixedBitSet {
        &self.incidence[x]
    }

    pub fn incidence_by_name(&self, name: &str) -> Result<&FixedBitSet> {
        let x = self.vertex_id(name)?;
        Ok(&self.incidence[x])
    }

    /// Union of the incidences of every member of `xs`.
    pub fn incidence_of(&self, xs: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.num_edges());
        for x in xs.ones() {
            out.union_with(&self.incidence[x]);
        }
        out
    }

    pub fn vertex_name(&self, x: VertexId) -> &str {
        &self.vertex_names[x]
    }

    pub fn edge_name(&self, i: EdgeIndex) -> &str {
        &self.edge_names[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.vertex_ids
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeIndex> {
        self.edge_ids
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn empty_vertex_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.num_vertices())
    }

    pub fn empty_edge_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.num_edges())
    }

    pub fn all_vertices(&self) -> FixedBitSet {
        full(self.num_vertices())
    }

    pub fn all_edges(&self) -> FixedBitSet {
        full(self.num_edges())
    }

    /// No two indices carry the same vertex set.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|e| seen.insert(e.clone()))
    }
}

/// A total map from vertices to edge indices with `x ∈ s_{τ(x)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence(Vec<EdgeIndex>);

impl Correspondence {
    pub fn new(h: &Hypergraph, map: Vec<EdgeIndex>) -> Result<Self> {
        if map.len() != h.num_vertices() {
            return Err(Error::invalid(format!(
                "correspondence covers {} of {} vertices",
                map.len(),
                h.num_vertices()
            )));
        }
        for (x, &i) in map.iter().enumerate() {
            if i >= h.num_edges() || !h.edge(i).contains(x) {
                return Err(Error::invalid(format!(
                    "correspondence maps `{}` to an edge that does not contain it",
                    h.vertex_name(x)
                )));
            }
        }
        Ok(Correspondence(map))
    }

    /// Identity correspondence; only valid when edge `v` contains vertex `v`.
    pub fn identity(n: usize) -> Self {
        Correspondence((0..n).collect())
    }

    pub fn get(&self, x: VertexId) -> EdgeIndex {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[EdgeIndex] {
        &self.0
    }

    /// `τ⁻¹(i)` for every index `i`.
    pub fn preimages(&self, num_edges: usize) -> Vec<FixedBitSet> {
        let mut pre = vec![FixedBitSet::with_capacity(self.0.len()); num_edges];
        for (x, &i) in self.0.iter().enumerate() {
            pre[i].insert(x);
        }
        pre
    }

    /// Indices with an empty preimage.
    pub fn uncovered(&self, num_edges: usize) -> FixedBitSet {
        let mut out = full(num_edges);
        for &i in &self.0 {
            out.remove(i);
        }
        out
    }

    pub fn is_surjective(&self, num_edges: usize) -> bool {
        self.uncovered(num_edges).is_clear()
    }

    /// Image of a vertex set.
    pub fn image(&self, xs: &FixedBitSet, num_edges: usize) -> FixedBitSet {
        bitset(num_edges, xs.ones().map(|x| self.0[x]))
    }

    /// Whether no two members of `xs` share a τ-value.
    pub fn is_injective_on(&self, xs: &FixedBitSet) -> bool {
        let mut seen = std::collections::HashSet::new();
        xs.ones().all(|x| seen.insert(self.0[x]))
    }
}

/// A map `f: X → {0,1,2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RomanAssignment(Vec<u8>);

impl RomanAssignment {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(v) = values.iter().find(|&&v| v > 2) {
            return Err(Error::invalid(format!("assignment value {v} is not in {{0,1,2}}")));
        }
        Ok(RomanAssignment(values))
    }

    pub fn zeros(n: usize) -> Self {
        RomanAssignment(vec![0; n])
    }

    pub fn constant(n: usize, v: u8) -> Self {
        assert!(v <= 2);
        RomanAssignment(vec![v; n])
    }

    /// Assignment with `f⁻¹(1) = ones` and `f⁻¹(2) = twos`; twos win on overlap.
    pub fn from_sets(n: usize, ones: &FixedBitSet, twos: &FixedBitSet) -> Self {
        let mut f = vec![0; n];
        for x in ones.ones() {
            f[x] = 1;
        }
        for x in twos.ones() {
            f[x] = 2;
        }
        RomanAssignment(f)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, x: VertexId) -> u8 {
        self.0[x]
    }

    pub fn set(&mut self, x: VertexId, v: u8) {
        assert!(v <= 2);
        self.0[x] = v;
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// `ω(f) = Σ f(x)`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&v| v as usize).sum()
    }

    /// `f⁻¹(v)`.
    pub fn preimage(&self, v: u8) -> FixedBitSet {
        bitset(
            self.0.len(),
            self.0.iter().enumerate().filter(|(_, &w)| w == v).map(|(x, _)| x),
        )
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &RomanAssignment) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ≤_PO other`: every value is either 0 or equal to the other's.
    pub fn le_po(&self, other: &RomanAssignment) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || a == b)
    }
}

/// A pair `(R₁ ⊆ I, R₂ ⊆ X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RhsPair {
    pub r1: FixedBitSet,
    pub r2: FixedBitSet,
}

impl RhsPair {
    pub fn empty(h: &Hypergraph) -> Self {
        RhsPair {
            r1: h.empty_edge_set(),
            r2: h.empty_vertex_set(),
        }
    }

    pub fn new(r1: FixedBitSet, r2: FixedBitSet) -> Self {
        RhsPair { r1, r2 }
    }

    /// `(I, ∅)`.
    pub fn all_self_hit(h: &Hypergraph) -> Self {
        RhsPair {
            r1: h.all_edges(),
            r2: h.empty_vertex_set(),
        }
    }

    pub fn from_lists(h: &Hypergraph, r1: &[EdgeIndex], r2: &[VertexId]) -> Self {
        RhsPair {
            r1: bitset(h.num_edges(), r1.iter().copied()),
            r2: bitset(h.num_vertices(), r2.iter().copied()),
        }
    }

    /// `|R₁| + 2|R₂|`.
    pub fn weight(&self) -> usize {
        self.r1.count_ones(..) + 2 * self.r2.count_ones(..)
    }

    pub fn fits(&self, h: &Hypergraph) -> bool {
        self.r1.len() == h.num_edges() && self.r2.len() == h.num_vertices()
    }

    pub fn check_fits(&self, h: &Hypergraph) -> Result<()> {
        if self.fits(h) {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "pair sized for {} indices / {} vertices, instance has {} / {}",
                self.r1.len(),
                self.r2.len(),
                h.num_edges(),
                h.num_vertices()
            )))
        }
    }

    /// Componentwise inclusion.
    pub fn le(&self, other: &RhsPair) -> bool {
        self.r1.is_subset(&other.r1) && self.r2.is_subset(&other.r2)
    }

    /// Sort key giving the canonical output order.
    pub fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.r1.ones().collect(), self.r2.ones().collect())
    }
}

/// A simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<FixedBitSet>,
    edges: Vec<(VertexId, VertexId)>,
    ids: HashMap<String, VertexId>,
}

impl Graph {
    pub fn new(names: Vec<String>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = names.len();
        let ids = index_names(&names, "vertex")?;
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::invalid("edge endpoint outside the vertex set"));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at `{}`", names[u])));
            }
            if adj[u].contains(v) {
                return Err(Error::invalid(format!(
                    "duplicate edge {{{}, {}}}",
                    names[u], names[v]
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            names,
            adj,
            edges,
            ids,
        })
    }

    /// Graph on vertices `v1..vn`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Graph::new((1..=n).map(|i| format!("v{i}")).collect(), edges.to_vec())
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in declaration order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId> {
        self.ids
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: VertexId) -> &FixedBitSet {
        &self.adj[v]
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: VertexId) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[U]`.
    pub fn closed_neighborhood_of(&self, us: &FixedBitSet) -> FixedBitSet {
        let mut s = us.clone();
        for u in us.ones() {
            s.union_with(&self.adj[u]);
        }
        s
    }

    /// `N(U)` as the union of open neighbourhoods.
    pub fn open_neighborhood_of(&self, us: &FixedBitSet) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.num_vertices());
        for u in us.ones() {
            s.union_with(&self.adj[u]);
        }
        s
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.num_vertices())
    }
}

/// A graph with lower and upper bound assignments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedRdInstance {
    pub graph: Graph,
    pub lower: RomanAssignment,
    pub upper: RomanAssignment,
}

impl BoundedRdInstance {
    pub fn new(graph: Graph, lower: RomanAssignment, upper: RomanAssignment) -> Result<Self> {
        let n = graph.num_vertices();
        if lower.len() != n || upper.len() != n {
            return Err(Error::invalid("bound assignments must cover every vertex"));
        }
        Ok(BoundedRdInstance {
            graph,
            lower,
            upper,
        })
    }
}

/// Every index is hit by `R₂` or belongs to `R₁`.
pub fn is_rhs(h: &Hypergraph, r: &RhsPair) -> bool {
    (0..h.num_edges()).all(|i| r.r1.contains(i) || !h.edge(i).is_disjoint(&r.r2))
}

/// Every index is hit by a 2-vertex inside its edge or by a 1-vertex mapped to it.
pub fn is_rhf(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> bool {
    let twos = f.preimage(2);
    let mut hit = h.incidence_of(&twos);
    for x in f.preimage(1).ones() {
        hit.insert(tau.get(x));
    }
    hit.is_full()
}

/// Every 0-vertex has a neighbour of value 2.
pub fn is_rdf(g: &Graph, f: &RomanAssignment) -> bool {
    let twos = f.preimage(2);
    (0..g.num_vertices()).all(|v| f.get(v) != 0 || !g.neighbors(v).is_disjoint(&twos))
}

/// Roman domination on a hypergraph: every 0-vertex shares an edge with a 2-vertex.
pub fn is_hypergraph_rdf(h: &Hypergraph, f: &RomanAssignment) -> bool {
    (0..h.num_vertices()).all(|v| {
        f.get(v) != 0
            || h.incidence(v).ones().any(|i| {
                h.edge(i)
                    .ones()
                    .any(|u| u != v && f.get(u) == 2)
            })
    })
}

/// `G_nb = (V, (N[v])_{v∈V})` with one edge per vertex, labelled by that vertex, and `τ = id`.
pub fn closed_neighborhood_hypergraph(g: &Graph) -> (Hypergraph, Correspondence) {
    let edges = (0..g.num_vertices())
        .map(|v| (g.name(v).to_string(), g.closed_neighborhood(v).ones().collect()))
        .collect();
    let h = Hypergraph::new(g.names().to_vec(), edges).expect("graph names are unique");
    (h, Correspondence::identity(g.num_vertices()))
}

/// The hypergraph `(V, (e)_{e∈E})` whose Roman hitting sets are Roman vertex covers.
/// Edge `{u,v}` is named `u-v`.
pub fn vertex_cover_hypergraph(g: &Graph) -> Hypergraph {
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| (format!("{}-{}", g.name(u), g.name(v)), vec![u, v]))
        .collect();
    Hypergraph::new(g.names().to_vec(), edges).expect("graph names and edges are unique")
}

/// The hypergraph `(E, (E(v))_{v∈V})` whose Roman hitting sets are Roman edge covers.
pub fn edge_cover_hypergraph(g: &Graph) -> Hypergraph {
    let edge_names: Vec<String> = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.name(u), g.name(v)))
        .collect();
    let edges = (0..g.num_vertices())
        .map(|v| {
            let members = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(e, _)| e)
                .collect();
            (g.name(v).to_string(), members)
        })
        .collect();
    Hypergraph::new(edge_names, edges).expect("graph names and edges are unique")
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// X={a,b,c,d}; s1={a,b}, s2={a}, s3={b}, s4={a,c}, s5={c,d}.
    pub fn ex1() -> Hypergraph {
        named(
            &["a", "b", "c", "d"],
            &[&["a", "b"], &["a"], &["b"], &["a", "c"], &["c", "d"]],
        )
    }

    /// X={a,..,e}; s1={a,b}, s2={b,c}, s3={b,e}, s4={b,c,d}, s5={d,e}.
    pub fn ex2() -> Hypergraph {
        named(
            &["a", "b", "c", "d", "e"],
            &[&["a", "b"], &["b", "c"], &["b", "e"], &["b", "c", "d"], &["d", "e"]],
        )
    }

    /// τ(a)=1, τ(b)=1, τ(c)=2, τ(d)=4, τ(e)=3 on EX2.
    pub fn ex2_tau(h: &Hypergraph) -> Correspondence {
        Correspondence::new(h, vec![0, 0, 1, 3, 2]).unwrap()
    }

    pub fn named(vs: &[&str], es: &[&[&str]]) -> Hypergraph {
        let names: Vec<String> = vs.iter().map(|s| s.to_string()).collect();
        let edges = es
            .iter()
            .enumerate()
            .map(|(i, e)| {
                (
                    (i + 1).to_string(),
                    e.iter()
                        .map(|t| vs.iter().position(|v| v == t).unwrap())
                        .collect(),
                )
            })
            .collect();
        Hypergraph::new(names, edges).unwrap()
    }

    pub fn graph(vs: &[&str], es: &[(&str, &str)]) -> Graph {
        let pos = |t: &str| vs.iter().position(|v| *v == t).unwrap();
        Graph::new(
            vs.iter().map(|s| s.to_string()).collect(),
            es.iter().map(|&(a, b)| (pos(a), pos(b))).collect(),
        )
        .unwrap()
    }

    pub fn p3() -> Graph {
        graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
    }

    pub fn assign(n: usize, vals: &[(usize, u8)]) -> RomanAssignment {
        let mut f = RomanAssignment::zeros(n);
        for &(x, v) in vals {
            f.set(x, v);
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn ones(s: &FixedBitSet) -> Vec<usize> {
        s.ones().collect()
    }

    #[test]
    fn incidence_examples() {
        let h = ex1();
        assert_eq!(ones(h.incidence_by_name("a").unwrap()), vec![0, 1, 3]);
        assert_eq!(ones(h.incidence_by_name("d").unwrap()), vec![4]);
        assert!(matches!(h.incidence_by_name("z"), Err(Error::UnknownVertex(_))));
        let lonely = Hypergraph::from_edge_lists(2, &[vec![0]]).unwrap();
        assert!(lonely.incidence(1).is_clear());
        let both = bitset(4, [0, 3]);
        assert_eq!(ones(&h.incidence_of(&both)), vec![0, 1, 3, 4]);
    }

    #[test]
    fn weights() {
        assert_eq!(RomanAssignment::zeros(5).weight(), 0);
        assert_eq!(assign(5, &[(1, 2)]).weight(), 2);
        assert_eq!(assign(5, &[(1, 2), (4, 2)]).weight(), 4);
        let h = ex1();
        assert_eq!(RhsPair::from_lists(&h, &[0, 1, 2], &[2]).weight(), 5);
        assert_eq!(RhsPair::empty(&h).weight(), 0);
        let h2 = ex2();
        assert_eq!(RhsPair::from_lists(&h2, &[4], &[1]).weight(), 3);
    }

    #[test]
    fn rhs_examples() {
        let h = ex1();
        assert!(is_rhs(&h, &RhsPair::from_lists(&h, &[0, 1, 2], &[2])));
        assert!(!is_rhs(&h, &RhsPair::empty(&h)));
        assert!(is_rhs(&h, &RhsPair::all_self_hit(&h)));
    }

    #[test]
    fn rhf_examples() {
        let h = ex2();
        let tau = ex2_tau(&h);
        assert!(is_rhf(&h, &tau, &assign(5, &[(1, 2), (4, 2)])));
        assert!(!is_rhf(&h, &tau, &assign(5, &[(1, 2)])));
        assert!(is_rhf(&h, &tau, &RomanAssignment::constant(5, 2)));
        assert!(!tau.is_surjective(5));
    }

    #[test]
    fn rdf_examples() {
        let g = p3();
        assert!(is_rdf(&g, &assign(3, &[(1, 2)])));
        assert!(!is_rdf(&g, &assign(3, &[(0, 1)])));
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert!(!is_rdf(&k1, &RomanAssignment::zeros(1)));
        assert!(is_rdf(&k1, &assign(1, &[(0, 1)])));
    }

    #[test]
    fn closed_neighborhoods() {
        let (h, tau) = closed_neighborhood_hypergraph(&p3());
        assert_eq!(ones(h.edge(0)), vec![0, 1]);
        assert_eq!(ones(h.edge(1)), vec![0, 1, 2]);
        assert_eq!(ones(h.edge(2)), vec![1, 2]);
        assert_eq!(tau.as_slice(), &[0, 1, 2]);
        let (k1, id) = closed_neighborhood_hypergraph(&Graph::from_edges(1, &[]).unwrap());
        assert_eq!(ones(k1.edge(0)), vec![0]);
        assert_eq!(id.get(0), 0);
    }

    #[test]
    fn correspondence_is_validated() {
        let h = ex1();
        assert!(Correspondence::new(&h, vec![0, 0, 3, 4]).is_ok());
        // d is not in s1
        assert!(Correspondence::new(&h, vec![0, 0, 3, 0]).is_err());
        assert!(Correspondence::new(&h, vec![0, 0, 3]).is_err());
    }

    #[test]
    fn graph_rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn empty_and_duplicate_edges_are_legal() {
        let h = Hypergraph::from_edge_lists(2, &[vec![], vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!h.is_simple());
        assert!(h.edge(0).is_clear());
        assert!(!is_rhs(&h, &RhsPair::from_lists(&h, &[], &[0, 1])));
    }
}
