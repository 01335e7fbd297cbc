//! Branch-and-reduce enumeration of all minimal Roman hitting sets with
//! polynomial delay and polynomial space.

use std::fmt;

use crate::model::{EdgeIndex, Hypergraph, RhsPair, VertexId};
use crate::search::SearchState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Delete a vertex that hits no unhit index.
    DeleteUseless,
    /// Move an unhit index without live vertices into `R₁`.
    ForceR1,
    Br1,
    Br2,
    Br3,
    Br4,
    Br5,
    Br6,
    Br7,
    Br8,
}

impl Rule {
    pub const ALL: [Rule; 10] = [
        Rule::DeleteUseless,
        Rule::ForceR1,
        Rule::Br1,
        Rule::Br2,
        Rule::Br3,
        Rule::Br4,
        Rule::Br5,
        Rule::Br6,
        Rule::Br7,
        Rule::Br8,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Rule::DeleteUseless => "rr1",
            Rule::ForceR1 => "rr2",
            Rule::Br1 => "br1",
            Rule::Br2 => "br2",
            Rule::Br3 => "br3",
            Rule::Br4 => "br4",
            Rule::Br5 => "br5",
            Rule::Br6 => "br6",
            Rule::Br7 => "br7",
            Rule::Br8 => "br8",
        }
    }

    /// Guaranteed measure drop of each branch.
    pub fn branching_vector(self) -> &'static [usize] {
        match self {
            Rule::DeleteUseless | Rule::ForceR1 => &[],
            Rule::Br1 => &[2, 2],
            Rule::Br2 => &[4, 1],
            Rule::Br3 => &[3, 3, 3],
            Rule::Br4 => &[4, 1],
            Rule::Br5 => &[4, 4, 2],
            Rule::Br6 => &[3, 4, 3],
            Rule::Br7 => &[3, 4, 5, 4],
            Rule::Br8 => &[1, 4, 8],
        }
    }

    fn slot(self) -> usize {
        Rule::ALL.iter().position(|&r| r == self).unwrap()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub emitted: u64,
    /// Nodes that survived the extension check.
    pub nodes: u64,
    /// Nodes cut by the extension check or the weight cap.
    pub pruned: u64,
    /// Largest number of nodes visited between consecutive emissions,
    /// counting the stretches before the first and after the last.
    pub max_delay: u64,
    pub rule_counts: [u64; 10],
}

impl EnumerationStats {
    pub fn fired(&self, rule: Rule) -> u64 {
        self.rule_counts[rule.slot()]
    }
}

impl fmt::Display for EnumerationStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "emitted={}", self.emitted)?;
        writeln!(f, "nodes={}", self.nodes)?;
        writeln!(f, "pruned={}", self.pruned)?;
        write!(f, "max_delay={}", self.max_delay)?;
        for rule in Rule::ALL {
            write!(f, "\n{}={}", rule.label(), self.fired(rule))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
enum Act {
    R1(EdgeIndex),
    R2(VertexId),
    Del(VertexId),
}

struct Enumerator<'s, 'a> {
    state: SearchState<'a>,
    cap: Option<usize>,
    sink: &'s mut dyn FnMut(&RhsPair),
    stats: EnumerationStats,
    since_last: u64,
}

/// Emits every minimal rhs of `h` exactly once. With a cap, only those of
/// weight at most `cap` are emitted.
pub fn enumerate_minimal_rhs(
    h: &Hypergraph,
    weight_cap: Option<usize>,
    sink: &mut dyn FnMut(&RhsPair),
) -> EnumerationStats {
    let mut e = Enumerator {
        state: SearchState::new(h),
        cap: weight_cap,
        sink,
        stats: EnumerationStats::default(),
        since_last: 0,
    };
    e.node();
    e.stats.max_delay = e.stats.max_delay.max(e.since_last);
    e.stats
}

/// Collects the output of [`enumerate_minimal_rhs`].
pub fn collect_minimal_rhs(h: &Hypergraph, weight_cap: Option<usize>) -> (Vec<RhsPair>, EnumerationStats) {
    let mut out = Vec::new();
    let stats = enumerate_minimal_rhs(h, weight_cap, &mut |p| out.push(p.clone()));
    (out, stats)
}

impl Enumerator<'_, '_> {
    fn reduce(&mut self) {
        loop {
            if let Some(x) = self.state.useless_vertex() {
                self.state.delete(x);
                self.count(Rule::DeleteUseless);
            } else if let Some(i) = self.state.empty_unhit_edge() {
                self.state.add_r1(i);
                self.count(Rule::ForceR1);
            } else {
                return;
            }
        }
    }

    fn count(&mut self, rule: Rule) {
        self.stats.rule_counts[rule.slot()] += 1;
    }

    fn node(&mut self) {
        let mark = self.state.mark();
        self.reduce();
        let over_cap = |s: &SearchState| self.cap.is_some_and(|cap| s.weight() + s.completion_bound() > cap);
        if !self.state.extensible() || over_cap(&self.state) {
            self.stats.pruned += 1;
        } else {
            self.stats.nodes += 1;
            self.since_last += 1;
            if self.state.unhit.is_clear() {
                debug_assert!(self.state.free_vertices().next().is_none());
                let pair = self.state.pair();
                (self.sink)(&pair);
                self.stats.emitted += 1;
                self.stats.max_delay = self.stats.max_delay.max(self.since_last);
                self.since_last = 0;
            } else {
                let (rule, branches) = self.select();
                self.count(rule);
                let before = self.state.measure();
                for (branch, &drop) in branches.iter().zip(rule.branching_vector()) {
                    let m = self.state.mark();
                    self.apply(branch);
                    let after = self.state.measure();
                    assert!(
                        before >= after + drop,
                        "{} branch dropped the measure by {} < {}",
                        rule.label(),
                        before - after,
                        drop
                    );
                    self.node();
                    self.state.undo_to(m);
                }
            }
        }
        self.state.undo_to(mark);
    }

    fn apply(&mut self, acts: &[Act]) {
        for &act in acts {
            match act {
                Act::R1(i) => self.state.add_r1(i),
                Act::R2(x) => self.state.add_r2(x),
                Act::Del(x) => {
                    if self.state.alive.contains(x) {
                        self.state.delete(x);
                    }
                }
            }
        }
    }

    /// The lowest-numbered applicable branching rule on its smallest object.
    fn select(&self) -> (Rule, Vec<Vec<Act>>) {
        use Act::*;
        let s = &self.state;
        let free: Vec<VertexId> = s.free_vertices().collect();

        if let Some(i) = s.unhit.ones().find(|&i| s.live[i] == 1) {
            let x = s.live_members(i)[0];
            return (Rule::Br1, vec![vec![R1(i)], vec![R2(x)]]);
        }
        if let Some(&x) = free.iter().find(|&&x| s.deg[x] >= 3) {
            return (Rule::Br2, vec![vec![R2(x)], vec![Del(x)]]);
        }
        for &x in &free {
            if s.deg[x] != 1 {
                continue;
            }
            let i = s.live_incidence(x)[0];
            if s.live[i] == 2 {
                let y = s.live_members(i).into_iter().find(|&y| y != x).unwrap();
                return (
                    Rule::Br3,
                    vec![vec![R2(x), Del(y)], vec![R2(y), Del(x)], vec![R1(i)]],
                );
            }
        }
        for &x in &free {
            if s.deg[x] != 1 {
                continue;
            }
            let i = s.live_incidence(x)[0];
            let mut first: Vec<Act> = vec![R2(x)];
            first.extend(s.live_members(i).into_iter().filter(|&y| y != x).map(Del));
            return (Rule::Br4, vec![first, vec![Del(x)]]);
        }
        // Every free vertex now has exactly two unhit indices.
        for &x in &free {
            let ix = s.live_incidence(x);
            if let Some(&y) = free.iter().find(|&&y| y != x && s.live_incidence(y) == ix) {
                return (
                    Rule::Br5,
                    vec![vec![R2(x), Del(y)], vec![R2(y), Del(x)], vec![Del(x), Del(y)]],
                );
            }
        }
        for i in s.unhit.ones() {
            let m = s.live_members(i);
            match m.len() {
                2 => {
                    let (x, y) = (m[0], m[1]);
                    return (Rule::Br6, vec![vec![R2(x)], vec![R2(y), Del(x)], vec![R1(i)]]);
                }
                3 => {
                    let (x, y, z) = (m[0], m[1], m[2]);
                    return (
                        Rule::Br7,
                        vec![
                            vec![R2(x)],
                            vec![R2(y), Del(x)],
                            vec![R2(z), Del(x), Del(y)],
                            vec![R1(i)],
                        ],
                    );
                }
                _ => {}
            }
        }
        if let Some(&x) = free.first() {
            let ix = s.live_incidence(x);
            let i = ix[0];
            let y = s.live_members(i).into_iter().find(|&y| y != x).unwrap();
            let k = s
                .live_incidence(y)
                .into_iter()
                .find(|&k| k != i)
                .expect("twin-free vertices of degree two");
            let mut third: Vec<Act> = vec![R2(x), R2(y)];
            third.extend(s.live_members(k).into_iter().filter(|&z| z != y).map(Del));
            return (Rule::Br8, vec![vec![Del(x)], vec![R2(x), Del(y)], third]);
        }
        panic!("no branching rule applies to a non-leaf node");
    }
}
