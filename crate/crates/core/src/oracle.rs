//! Definition-level brute force: validity plus exhaustive scans of everything
//! below a candidate. Used to cross-check the combinatorial algorithms on
//! small instances.

use fixedbitset::FixedBitSet;

use crate::error::{guard, Result};
use crate::model::{bitset, Correspondence, Graph, Hypergraph, RhsPair, RomanAssignment};

/// Bound on `|X| + |I|` for single-candidate minimality checks.
pub const CHECK_LIMIT: usize = 24;
/// Bound on `|X| + |I|` for enumerating all minimal pairs.
pub const ENUM_RHS_LIMIT: usize = 20;
/// Bound on `|X|` for enumerating all minimal assignments.
pub const ENUM_ASSIGN_LIMIT: usize = 12;

fn mask(s: &FixedBitSet) -> u64 {
    s.ones().fold(0, |m, b| m | 1 << b)
}

fn low(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Bit masks of a hypergraph: `inc[x]` is the incidence of `x` over indices.
struct Masks {
    inc: Vec<u64>,
    all_edges: u64,
}

impl Masks {
    fn new(h: &Hypergraph) -> Self {
        Masks {
            inc: (0..h.num_vertices()).map(|x| mask(h.incidence(x))).collect(),
            all_edges: low(h.num_edges()),
        }
    }

    fn hit_by(&self, xs: u64) -> u64 {
        ones(xs).fold(0, |acc, x| acc | self.inc[x])
    }

    fn rhs_valid(&self, r1: u64, r2: u64) -> bool {
        (self.hit_by(r2) | r1) == self.all_edges
    }

    fn rhf_valid(&self, tau: &[usize], vals: &[u8]) -> bool {
        let mut hit = 0;
        for (x, &v) in vals.iter().enumerate() {
            match v {
                1 => hit |= 1 << tau[x],
                2 => hit |= self.inc[x],
                _ => {}
            }
        }
        hit == self.all_edges
    }
}

fn ones(m: u64) -> impl Iterator<Item = usize> {
    let mut m = m;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// All submasks of `m`, `m` itself first, ending with 0.
fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut s = Some(m);
    std::iter::from_fn(move || {
        let cur = s?;
        s = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

struct GraphMasks {
    adj: Vec<u64>,
}

impl GraphMasks {
    fn new(g: &Graph) -> Self {
        GraphMasks {
            adj: (0..g.num_vertices()).map(|v| mask(g.neighbors(v))).collect(),
        }
    }

    fn rdf_valid(&self, vals: &[u8]) -> bool {
        let twos = vals
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 2)
            .fold(0u64, |m, (x, _)| m | 1 << x);
        vals.iter()
            .enumerate()
            .all(|(v, &val)| val != 0 || self.adj[v] & twos != 0)
    }
}

/// Calls `visit` on every assignment pointwise below `f` except `f` itself;
/// stops early when `visit` returns true and reports whether it did.
fn any_strictly_below(f: &[u8], mut visit: impl FnMut(&[u8]) -> bool) -> bool {
    let support: Vec<usize> = (0..f.len()).filter(|&x| f[x] > 0).collect();
    let mut g = f.to_vec();
    loop {
        // decrement the mixed-radix counter over the support
        let mut k = 0;
        while k < support.len() && g[support[k]] == 0 {
            g[support[k]] = f[support[k]];
            k += 1;
        }
        if k == support.len() {
            return false;
        }
        g[support[k]] -= 1;
        if visit(&g) {
            return true;
        }
    }
}

pub fn brute_minimal_rhs(h: &Hypergraph, r: &RhsPair) -> Result<bool> {
    guard(h.num_vertices() + h.num_edges() <= CHECK_LIMIT, || {
        format!("brute-force check needs |X|+|I| <= {CHECK_LIMIT}")
    })?;
    r.check_fits(h)?;
    let m = Masks::new(h);
    let (r1, r2) = (mask(&r.r1), mask(&r.r2));
    if !m.rhs_valid(r1, r2) {
        return Ok(false);
    }
    for a in submasks(r1) {
        for b in submasks(r2) {
            if (a, b) != (r1, r2) && m.rhs_valid(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn brute_minimal_rhf(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> Result<bool> {
    guard(h.num_vertices() + h.num_edges() <= CHECK_LIMIT, || {
        format!("brute-force check needs |X|+|I| <= {CHECK_LIMIT}")
    })?;
    let m = Masks::new(h);
    let tau = tau.as_slice();
    if !m.rhf_valid(tau, f.values()) {
        return Ok(false);
    }
    Ok(!any_strictly_below(f.values(), |g| m.rhf_valid(tau, g)))
}

fn graph_guard(g: &Graph) -> Result<()> {
    guard(2 * g.num_vertices() <= CHECK_LIMIT, || {
        format!("brute-force check needs 2|V| <= {CHECK_LIMIT}")
    })
}

pub fn brute_minimal_rdf(g: &Graph, f: &RomanAssignment) -> Result<bool> {
    graph_guard(g)?;
    let gm = GraphMasks::new(g);
    if !gm.rdf_valid(f.values()) {
        return Ok(false);
    }
    Ok(!any_strictly_below(f.values(), |h| gm.rdf_valid(h)))
}

/// Minimality under the order that may only lower values to 0.
pub fn brute_po_minimal_rdf(g: &Graph, f: &RomanAssignment) -> Result<bool> {
    graph_guard(g)?;
    let gm = GraphMasks::new(g);
    if !gm.rdf_valid(f.values()) {
        return Ok(false);
    }
    let support = f
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > 0)
        .fold(0u64, |m, (x, _)| m | 1 << x);
    let mut vals = f.values().to_vec();
    for keep in submasks(support).skip(1) {
        for x in ones(support) {
            vals[x] = if keep >> x & 1 == 1 { f.get(x) } else { 0 };
        }
        if gm.rdf_valid(&vals) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Masks below `k` bits that are valid and have no valid proper submask.
fn minimal_masks(k: usize, jobs: usize, valid: impl Fn(u64) -> bool + Sync) -> Vec<u64> {
    let size = 1usize << k;
    let mut table = vec![false; size];
    let jobs = jobs.clamp(1, size);
    let chunk = size.div_ceil(jobs);
    std::thread::scope(|scope| {
        for (c, part) in table.chunks_mut(chunk).enumerate() {
            let valid = &valid;
            scope.spawn(move || {
                for (j, slot) in part.iter_mut().enumerate() {
                    *slot = valid((c * chunk + j) as u64);
                }
            });
        }
    });
    // below[m]: some submask of m (including m) is valid
    let mut below = table.clone();
    for b in 0..k {
        for m in 0..size {
            if m >> b & 1 == 1 && below[m ^ (1 << b)] {
                below[m] = true;
            }
        }
    }
    (0..size)
        .filter(|&m| table[m] && ones(m as u64).all(|b| !below[m ^ (1 << b)]))
        .map(|m| m as u64)
        .collect()
}

/// Every minimal rhs, sorted by (R₁, R₂) as ascending id lists.
pub fn brute_enumerate_minimal_rhs(h: &Hypergraph, jobs: usize) -> Result<Vec<RhsPair>> {
    let (n, m) = (h.num_vertices(), h.num_edges());
    guard(n + m <= ENUM_RHS_LIMIT, || {
        format!("brute-force enumeration needs |X|+|I| <= {ENUM_RHS_LIMIT}")
    })?;
    let masks = Masks::new(h);
    let found = minimal_masks(n + m, jobs, |c| masks.rhs_valid(c & low(m), c >> m));
    let mut out: Vec<RhsPair> = found
        .into_iter()
        .map(|c| RhsPair {
            r1: bitset(m, ones(c & low(m))),
            r2: bitset(n, ones(c >> m)),
        })
        .collect();
    out.sort_by_key(RhsPair::sort_key);
    Ok(out)
}

/// Assignments in `{0,1,2}^n` (base-3 codes, vertex 0 least significant) that are
/// valid with no valid assignment strictly below.
fn minimal_ternary(n: usize, jobs: usize, valid: impl Fn(&[u8]) -> bool + Sync) -> Vec<RomanAssignment> {
    let size = 3usize.pow(n as u32);
    let decode = |mut c: usize| {
        let mut v = vec![0u8; n];
        for slot in v.iter_mut() {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        v
    };
    let mut table = vec![false; size];
    let jobs = jobs.clamp(1, size);
    let chunk = size.div_ceil(jobs);
    std::thread::scope(|scope| {
        for (c, part) in table.chunks_mut(chunk).enumerate() {
            let (valid, decode) = (&valid, &decode);
            scope.spawn(move || {
                for (j, slot) in part.iter_mut().enumerate() {
                    *slot = valid(&decode(c * chunk + j));
                }
            });
        }
    });
    let pow: Vec<usize> = (0..n).map(|x| 3usize.pow(x as u32)).collect();
    // below[c]: some assignment pointwise below c (including c) is valid;
    // codes below c are numerically smaller, so one ascending pass suffices
    let mut below = table.clone();
    for c in 0..size {
        if below[c] {
            continue;
        }
        let v = decode(c);
        below[c] = (0..n).any(|x| v[x] > 0 && below[c - pow[x]]);
    }
    let mut out: Vec<RomanAssignment> = (0..size)
        .filter(|&c| {
            if !table[c] {
                return false;
            }
            let v = decode(c);
            (0..n).all(|x| v[x] == 0 || !below[c - pow[x]])
        })
        .map(|c| RomanAssignment::new(decode(c)).expect("values are 0..=2"))
        .collect();
    out.sort();
    out
}

pub fn brute_enumerate_minimal_rhf(
    h: &Hypergraph,
    tau: &Correspondence,
    jobs: usize,
) -> Result<Vec<RomanAssignment>> {
    guard(h.num_vertices() <= ENUM_ASSIGN_LIMIT, || {
        format!("brute-force enumeration needs |X| <= {ENUM_ASSIGN_LIMIT}")
    })?;
    let masks = Masks::new(h);
    let tau = tau.as_slice();
    Ok(minimal_ternary(h.num_vertices(), jobs, |v| masks.rhf_valid(tau, v)))
}

pub fn brute_enumerate_minimal_rdf(g: &Graph) -> Result<Vec<RomanAssignment>> {
    guard(g.num_vertices() <= ENUM_ASSIGN_LIMIT, || {
        format!("brute-force enumeration needs |V| <= {ENUM_ASSIGN_LIMIT}")
    })?;
    let gm = GraphMasks::new(g);
    Ok(minimal_ternary(g.num_vertices(), 1, |v| gm.rdf_valid(v)))
}

/// Minimum `|R₁| + 2|R₂|` over all rhs, scanning every pair.
pub fn brute_min_rhs(h: &Hypergraph) -> Result<usize> {
    let (n, m) = (h.num_vertices(), h.num_edges());
    guard(n + m <= CHECK_LIMIT, || {
        format!("brute-force optimum needs |X|+|I| <= {CHECK_LIMIT}")
    })?;
    let masks = Masks::new(h);
    let mut best = usize::MAX;
    for r2 in 0..1u64 << n {
        // the cheapest R₁ for this R₂ is exactly the unhit indices
        let unhit = masks.all_edges & !masks.hit_by(r2);
        best = best.min(unhit.count_ones() as usize + 2 * r2.count_ones() as usize);
    }
    Ok(best)
}

/// Minimum `ω(f)` over all rhf. Scans every `f⁻¹(2)`; each index left unhit
/// then costs exactly one preimage at value 1, and is infeasible without one.
pub fn brute_min_rhf(h: &Hypergraph, tau: &Correspondence) -> Result<usize> {
    let (n, m) = (h.num_vertices(), h.num_edges());
    guard(n + m <= CHECK_LIMIT, || {
        format!("brute-force optimum needs |X|+|I| <= {CHECK_LIMIT}")
    })?;
    let masks = Masks::new(h);
    let covered = tau.as_slice().iter().fold(0u64, |acc, &i| acc | 1 << i);
    let mut best = usize::MAX;
    for twos in 0..1u64 << n {
        let unhit = masks.all_edges & !masks.hit_by(twos);
        if unhit & !covered == 0 {
            best = best.min(unhit.count_ones() as usize + 2 * twos.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Minimum `ω(f)` over all rdf. Scans every `f⁻¹(2)`; each vertex it leaves
/// undominated must carry 1 itself.
pub fn brute_min_rdf(g: &Graph) -> Result<usize> {
    let n = g.num_vertices();
    guard(n <= CHECK_LIMIT, || {
        format!("brute-force optimum needs |V| <= {CHECK_LIMIT}")
    })?;
    let closed: Vec<u64> = (0..n).map(|v| mask(&g.closed_neighborhood(v))).collect();
    let mut best = usize::MAX;
    for twos in 0..1u64 << n {
        let dominated = ones(twos).fold(0u64, |acc, v| acc | closed[v]);
        let rest = (low(n) & !dominated).count_ones() as usize;
        best = best.min(rest + 2 * twos.count_ones() as usize);
    }
    Ok(best)
}

/// Every inclusion-minimal dominating set, as sorted vertex lists.
pub fn brute_enumerate_minimal_ds(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.num_vertices();
    guard(n <= ENUM_RHS_LIMIT, || {
        format!("brute-force enumeration needs |V| <= {ENUM_RHS_LIMIT}")
    })?;
    let closed: Vec<u64> = (0..n).map(|v| mask(&g.closed_neighborhood(v))).collect();
    let found = minimal_masks(n, 1, |d| closed.iter().all(|&c| c & d != 0));
    let mut out: Vec<Vec<usize>> = found.into_iter().map(|d| ones(d).collect()).collect();
    out.sort();
    Ok(out)
}

/// Size of a minimum vertex cover.
pub fn brute_min_vertex_cover(g: &Graph) -> Result<usize> {
    let n = g.num_vertices();
    guard(n <= ENUM_RHS_LIMIT, || {
        format!("brute-force optimum needs |V| <= {ENUM_RHS_LIMIT}")
    })?;
    Ok((0..1u64 << n)
        .filter(|&c| g.edges().iter().all(|&(u, v)| (c >> u | c >> v) & 1 == 1))
        .map(|c| c.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// Whether some minimal rhs dominates `u` componentwise.
pub fn brute_ext_rhs(h: &Hypergraph, u: &RhsPair) -> Result<bool> {
    Ok(brute_enumerate_minimal_rhs(h, 1)?.iter().any(|p| u.le(p)))
}

/// Whether some minimal rhf lies pointwise above `f`.
pub fn brute_ext_rhf(h: &Hypergraph, tau: &Correspondence, f: &RomanAssignment) -> Result<bool> {
    Ok(brute_enumerate_minimal_rhf(h, tau, 1)?.iter().any(|g| f.le(g)))
}

/// Whether some minimal rdf `g` satisfies `lower ≤ g ≤ upper`.
pub fn brute_bounded_ext_rd(g: &Graph, lower: &RomanAssignment, upper: &RomanAssignment) -> Result<bool> {
    Ok(brute_enumerate_minimal_rdf(g)?
        .iter()
        .any(|x| lower.le(x) && x.le(upper)))
}
