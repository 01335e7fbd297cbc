//! Line-oriented instance files.
//!
//! Hypergraph files use `universe`, `edge`, `tau`, `assign`, `preset1` and
//! `preset2` lines; graph files use `vertex`, `gedge`, `assign` and `upper`.
//! `#` starts a comment. Serialization is canonical: parsing its output and
//! serializing again gives the same bytes.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::model::{
    BoundedRdInstance, Correspondence, EdgeIndex, Graph, Hypergraph, RhsPair, RomanAssignment,
    VertexId,
};

/// A hypergraph together with the optional data a file may carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphInstance {
    pub hypergraph: Hypergraph,
    /// Partial correspondence as declared; completed by [`Self::correspondence`].
    pub tau: Vec<Option<EdgeIndex>>,
    pub assign: RomanAssignment,
    pub preset: RhsPair,
}

impl HypergraphInstance {
    pub fn new(hypergraph: Hypergraph) -> Self {
        let n = hypergraph.num_vertices();
        HypergraphInstance {
            tau: vec![None; n],
            assign: RomanAssignment::zeros(n),
            preset: RhsPair::empty(&hypergraph),
            hypergraph,
        }
    }

    pub fn with_correspondence(hypergraph: Hypergraph, tau: &Correspondence) -> Self {
        let mut inst = HypergraphInstance::new(hypergraph);
        inst.tau = tau.as_slice().iter().map(|&i| Some(i)).collect();
        inst
    }

    /// The declared correspondence; every vertex must have a `tau` line.
    pub fn correspondence(&self) -> Result<Correspondence> {
        let h = &self.hypergraph;
        let mut map = Vec::with_capacity(self.tau.len());
        for (x, t) in self.tau.iter().enumerate() {
            match t {
                Some(i) => map.push(*i),
                None => {
                    return Err(Error::invalid(format!(
                        "vertex `{}` has no tau line",
                        h.vertex_name(x)
                    )))
                }
            }
        }
        Correspondence::new(h, map)
    }
}

/// A graph with an optional lower assignment and an upper bound (default 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInstance {
    pub graph: Graph,
    pub assign: RomanAssignment,
    pub upper: RomanAssignment,
}

impl GraphInstance {
    pub fn new(graph: Graph) -> Self {
        let n = graph.num_vertices();
        GraphInstance {
            graph,
            assign: RomanAssignment::zeros(n),
            upper: RomanAssignment::constant(n, 2),
        }
    }

    pub fn bounded(&self) -> BoundedRdInstance {
        BoundedRdInstance {
            graph: self.graph.clone(),
            lower: self.assign.clone(),
            upper: self.upper.clone(),
        }
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let key = toks.next()?;
        Some(Line {
            no: i + 1,
            key,
            args: toks.collect(),
        })
    })
}

fn value(no: usize, tok: &str) -> Result<u8> {
    match tok {
        "0" => Ok(0),
        "1" => Ok(1),
        "2" => Ok(2),
        _ => Err(Error::parse(no, format!("expected 0, 1 or 2, got `{tok}`"))),
    }
}

fn declare(names: &mut Vec<String>, seen: &mut std::collections::HashSet<String>, no: usize, tok: &str) -> Result<()> {
    if !seen.insert(tok.to_string()) {
        return Err(Error::parse(no, format!("`{tok}` declared twice")));
    }
    names.push(tok.to_string());
    Ok(())
}

fn lookup<T>(no: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::parse(no, e.to_string()))
}

pub fn parse_hypergraph(text: &str) -> Result<HypergraphInstance> {
    let mut names = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut edges: Vec<(String, Vec<String>, usize)> = Vec::new();
    let mut rest = Vec::new();
    for line in lines(text) {
        match line.key {
            "universe" => {
                for t in &line.args {
                    declare(&mut names, &mut seen, line.no, t)?;
                }
            }
            "edge" => {
                let Some((name, members)) = line.args.split_first() else {
                    return Err(Error::parse(line.no, "edge line needs an index token"));
                };
                edges.push((
                    name.to_string(),
                    members.iter().map(|s| s.to_string()).collect(),
                    line.no,
                ));
            }
            "tau" | "assign" | "preset1" | "preset2" => rest.push(line),
            other => return Err(Error::parse(line.no, format!("unknown directive `{other}`"))),
        }
    }
    let pos: std::collections::HashMap<&str, usize> =
        names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut edge_seen = std::collections::HashSet::new();
    let mut built = Vec::with_capacity(edges.len());
    for (name, members, no) in &edges {
        if !edge_seen.insert(name.clone()) {
            return Err(Error::parse(*no, format!("edge `{name}` declared twice")));
        }
        let mut ids = Vec::with_capacity(members.len());
        for m in members {
            let id = pos
                .get(m.as_str())
                .ok_or_else(|| Error::parse(*no, format!("unknown vertex `{m}`")))?;
            ids.push(*id);
        }
        built.push((name.clone(), ids));
    }
    let h = Hypergraph::new(names, built)?;
    let mut inst = HypergraphInstance::new(h);
    let mut assigned = vec![false; inst.hypergraph.num_vertices()];
    for line in rest {
        let h = &inst.hypergraph;
        match line.key {
            "tau" => {
                let [x, i] = line.args[..] else {
                    return Err(Error::parse(line.no, "tau line needs a vertex and an index"));
                };
                let x = lookup(line.no, h.vertex_id(x))?;
                let i = lookup(line.no, h.edge_id(i))?;
                if inst.tau[x].is_some() {
                    return Err(Error::parse(line.no, "tau given twice for one vertex"));
                }
                if !h.edge(i).contains(x) {
                    return Err(Error::parse(
                        line.no,
                        format!(
                            "tau maps `{}` to edge `{}` which does not contain it",
                            h.vertex_name(x),
                            h.edge_name(i)
                        ),
                    ));
                }
                inst.tau[x] = Some(i);
            }
            "assign" => {
                let [x, v] = line.args[..] else {
                    return Err(Error::parse(line.no, "assign line needs a vertex and a value"));
                };
                let x = lookup(line.no, h.vertex_id(x))?;
                if std::mem::replace(&mut assigned[x], true) {
                    return Err(Error::parse(line.no, "value assigned twice to one vertex"));
                }
                inst.assign.set(x, value(line.no, v)?);
            }
            "preset1" => {
                for t in &line.args {
                    let i = lookup(line.no, h.edge_id(t))?;
                    inst.preset.r1.insert(i);
                }
            }
            _ => {
                for t in &line.args {
                    let x = lookup(line.no, h.vertex_id(t))?;
                    inst.preset.r2.insert(x);
                }
            }
        }
    }
    Ok(inst)
}

fn join_vertices(h: &Hypergraph, s: &FixedBitSet) -> String {
    s.ones().map(|x| h.vertex_name(x)).collect::<Vec<_>>().join(" ")
}

pub fn serialize_hypergraph(inst: &HypergraphInstance) -> String {
    let h = &inst.hypergraph;
    let mut out = String::new();
    out.push_str("universe");
    for n in h.vertex_names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for i in 0..h.num_edges() {
        out.push_str("edge ");
        out.push_str(h.edge_name(i));
        for x in h.edge(i).ones() {
            out.push(' ');
            out.push_str(h.vertex_name(x));
        }
        out.push('\n');
    }
    for (x, t) in inst.tau.iter().enumerate() {
        if let Some(i) = t {
            let _ = writeln!(out, "tau {} {}", h.vertex_name(x), h.edge_name(*i));
        }
    }
    for x in 0..h.num_vertices() {
        let v = inst.assign.get(x);
        if v != 0 {
            let _ = writeln!(out, "assign {} {}", h.vertex_name(x), v);
        }
    }
    if !inst.preset.r1.is_clear() {
        let names: Vec<&str> = inst.preset.r1.ones().map(|i| h.edge_name(i)).collect();
        let _ = writeln!(out, "preset1 {}", names.join(" "));
    }
    if !inst.preset.r2.is_clear() {
        let _ = writeln!(out, "preset2 {}", join_vertices(h, &inst.preset.r2));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<GraphInstance> {
    let mut names = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut rest = Vec::new();
    for line in lines(text) {
        match line.key {
            "vertex" => {
                for t in &line.args {
                    declare(&mut names, &mut seen, line.no, t)?;
                }
            }
            "gedge" | "assign" | "upper" => rest.push(line),
            other => return Err(Error::parse(line.no, format!("unknown directive `{other}`"))),
        }
    }
    let pos: std::collections::HashMap<&str, VertexId> =
        names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let find = |no: usize, t: &str| {
        pos.get(t)
            .copied()
            .ok_or_else(|| Error::parse(no, format!("unknown vertex `{t}`")))
    };
    let n = names.len();
    let mut edges = Vec::new();
    let mut assign = RomanAssignment::zeros(n);
    let mut upper = RomanAssignment::constant(n, 2);
    let mut assigned = vec![false; n];
    let mut capped = vec![false; n];
    for line in &rest {
        match line.key {
            "gedge" => {
                let [u, v] = line.args[..] else {
                    return Err(Error::parse(line.no, "gedge line needs two vertices"));
                };
                let (u, v) = (find(line.no, u)?, find(line.no, v)?);
                if u == v {
                    return Err(Error::parse(line.no, "self-loop"));
                }
                if edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                    return Err(Error::parse(line.no, "duplicate edge"));
                }
                edges.push((u, v));
            }
            key => {
                let [x, val] = line.args[..] else {
                    return Err(Error::parse(line.no, format!("{key} line needs a vertex and a value")));
                };
                let x = find(line.no, x)?;
                let val = value(line.no, val)?;
                let (slot, target) = if key == "assign" {
                    (&mut assigned, &mut assign)
                } else {
                    (&mut capped, &mut upper)
                };
                if std::mem::replace(&mut slot[x], true) {
                    return Err(Error::parse(line.no, format!("{key} given twice for one vertex")));
                }
                target.set(x, val);
            }
        }
    }
    let graph = Graph::new(names, edges)?;
    Ok(GraphInstance {
        graph,
        assign,
        upper,
    })
}

pub fn serialize_graph(inst: &GraphInstance) -> String {
    let g = &inst.graph;
    let mut out = String::from("vertex");
    for n in g.names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "gedge {} {}", g.name(u), g.name(v));
    }
    for v in 0..g.num_vertices() {
        if inst.assign.get(v) != 0 {
            let _ = writeln!(out, "assign {} {}", g.name(v), inst.assign.get(v));
        }
    }
    for v in 0..g.num_vertices() {
        if inst.upper.get(v) != 2 {
            let _ = writeln!(out, "upper {} {}", g.name(v), inst.upper.get(v));
        }
    }
    out
}

/// `R1={..} R2={..} w=..` with names in ascending dense-id order.
pub fn format_pair(h: &Hypergraph, r: &RhsPair) -> String {
    let r1: Vec<&str> = r.r1.ones().map(|i| h.edge_name(i)).collect();
    let r2: Vec<&str> = r.r2.ones().map(|x| h.vertex_name(x)).collect();
    format!("R1={{{}}} R2={{{}}} w={}", r1.join(","), r2.join(","), r.weight())
}

/// `f: x=v ... w=..` listing nonzero values only.
pub fn format_assignment(names: &[String], f: &RomanAssignment) -> String {
    let mut out = String::from("f:");
    for (x, &v) in f.values().iter().enumerate() {
        if v != 0 {
            let _ = write!(out, " {}={}", names[x], v);
        }
    }
    let _ = write!(out, " w={}", f.weight());
    out
}

/// Parses a pair line in either `R1=1,2;R2=c` or `R1={1,2} R2={c} w=..` form.
pub fn parse_pair(h: &Hypergraph, text: &str) -> Result<RhsPair> {
    let mut r = RhsPair::empty(h);
    for part in text.split([';', ' ']).filter(|p| !p.trim().is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("malformed pair component `{part}`")))?;
        let val = val.trim().trim_start_matches('{').trim_end_matches('}');
        let items = val.split(',').map(str::trim).filter(|s| !s.is_empty());
        match key.trim() {
            "R1" => {
                for t in items {
                    r.r1.insert(h.edge_id(t)?);
                }
            }
            "R2" => {
                for t in items {
                    r.r2.insert(h.vertex_id(t)?);
                }
            }
            "w" => {}
            other => return Err(Error::invalid(format!("unknown pair component `{other}`"))),
        }
    }
    Ok(r)
}

/// Parses `x=2,y=1` (or space separated) into an assignment over `names`.
pub fn parse_assignment(
    names: &[String],
    lookup: impl Fn(&str) -> Result<VertexId>,
    text: &str,
) -> Result<RomanAssignment> {
    let mut f = RomanAssignment::zeros(names.len());
    for part in text
        .trim()
        .trim_start_matches("f:")
        .split([',', ' '])
        .filter(|p| !p.is_empty())
    {
        let (x, v) = part
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("malformed assignment entry `{part}`")))?;
        if x == "w" {
            continue;
        }
        let v = value(0, v).map_err(|_| Error::invalid(format!("bad value in `{part}`")))?;
        f.set(lookup(x)?, v);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::*;

    const EX2_FILE: &str = "\
# worked example
universe a b c
universe d e
edge 1 a b
edge 2 b c
edge 3 b e
edge 4 b c d
edge 5 d e
tau a 1
tau b 1
tau c 2
tau d 4
tau e 3
assign b 2
";

    #[test]
    fn parses_and_canonicalizes() {
        let inst = parse_hypergraph(EX2_FILE).unwrap();
        assert_eq!(inst.hypergraph, ex2());
        assert_eq!(inst.correspondence().unwrap(), ex2_tau(&ex2()));
        assert_eq!(inst.assign.get(1), 2);
        let text = serialize_hypergraph(&inst);
        assert!(text.starts_with("universe a b c d e\nedge 1 a b\n"));
        assert_eq!(serialize_hypergraph(&parse_hypergraph(&text).unwrap()), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_hypergraph("universe a\nedge 1 a z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_hypergraph("universe a\nedge 1 a\nassign a 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_hypergraph("universe a b\nedge 1 a\ntau b 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_hypergraph("bogus\n").is_err());
        assert!(parse_hypergraph("universe a a\n").is_err());
    }

    #[test]
    fn missing_tau_is_reported() {
        let inst = parse_hypergraph("universe a b\nedge 1 a b\ntau a 1\n").unwrap();
        assert!(inst.correspondence().is_err());
    }

    #[test]
    fn presets_round_trip() {
        let inst =
            parse_hypergraph("universe a b c d\nedge 1 a b\nedge 2 a\nedge 3 b\nedge 4 a c\nedge 5 c d\npreset1 3 1 2\npreset2 c\n")
                .unwrap();
        assert_eq!(inst.preset.r1.ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        let text = serialize_hypergraph(&inst);
        assert!(text.ends_with("preset1 1 2 3\npreset2 c\n"));
        assert_eq!(parse_hypergraph(&text).unwrap(), inst);
    }

    #[test]
    fn empty_instance() {
        let inst = parse_hypergraph("").unwrap();
        assert_eq!(inst.hypergraph.num_vertices(), 0);
        assert_eq!(serialize_hypergraph(&inst), "universe\n");
        assert_eq!(parse_hypergraph("universe\n").unwrap(), inst);
    }

    #[test]
    fn graph_round_trip() {
        let text = "vertex a b c\ngedge a b\ngedge b c\nassign b 2\nupper a 0\n";
        let inst = parse_graph(text).unwrap();
        assert_eq!(inst.graph, p3());
        assert_eq!(inst.upper.values(), &[0, 2, 2]);
        assert_eq!(serialize_graph(&inst), text);
        assert!(parse_graph("vertex a\ngedge a a\n").is_err());
        assert!(parse_graph("vertex a b\ngedge a b\ngedge b a\n").is_err());
    }

    #[test]
    fn pair_lines() {
        let h = ex1();
        let r = parse_pair(&h, "R1=1,2,3;R2=c").unwrap();
        assert_eq!(format_pair(&h, &r), "R1={1,2,3} R2={c} w=5");
        assert_eq!(parse_pair(&h, &format_pair(&h, &r)).unwrap(), r);
        assert_eq!(format_pair(&h, &RhsPair::empty(&h)), "R1={} R2={} w=0");
        assert!(parse_pair(&h, "R1=9").is_err());
    }

    #[test]
    fn assignment_lines() {
        let h = ex2();
        let f = parse_assignment(h.vertex_names(), |t| h.vertex_id(t), "b=2,e=2").unwrap();
        let line = format_assignment(h.vertex_names(), &f);
        assert_eq!(line, "f: b=2 e=2 w=4");
        assert_eq!(
            parse_assignment(h.vertex_names(), |t| h.vertex_id(t), &line).unwrap(),
            f
        );
    }
}
