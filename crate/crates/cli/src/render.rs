//! Text and JSON rendering of answers and solutions.

use std::io::{self, BufWriter, StdoutLock, Write};

use fixedbitset::FixedBitSet;
use rhs_core::characterize::Verdict;
use rhs_core::format::{format_assignment, format_pair};
use rhs_core::{Hypergraph, RhsPair, RomanAssignment};
use serde_json::{json, Map, Value};

pub struct Out {
    w: BufWriter<StdoutLock<'static>>,
    json: bool,
}

fn names_of<'a>(set: &FixedBitSet, name: impl Fn(usize) -> &'a str) -> Vec<&'a str> {
    set.ones().map(name).collect()
}

fn pair_json(h: &Hypergraph, r: &RhsPair) -> Value {
    json!({
        "R1": names_of(&r.r1, |i| h.edge_name(i)),
        "R2": names_of(&r.r2, |x| h.vertex_name(x)),
        "w": r.weight(),
    })
}

fn assignment_json(names: &[String], f: &RomanAssignment) -> Value {
    let mut values = Map::new();
    for (x, &v) in f.values().iter().enumerate() {
        if v != 0 {
            values.insert(names[x].clone(), json!(v));
        }
    }
    json!({ "f": values, "w": f.weight() })
}

impl Out {
    pub fn new(w: BufWriter<StdoutLock<'static>>, json: bool) -> Self {
        Out { w, json }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.w.flush()
    }

    fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.w, "{text}")
    }

    fn value(&mut self, v: Value) -> io::Result<()> {
        writeln!(self.w, "{v}")
    }

    pub fn raw(&mut self, text: &str) -> io::Result<()> {
        self.w.write_all(text.as_bytes())
    }

    pub fn answer(&mut self, yes: bool) -> io::Result<()> {
        if self.json {
            self.value(json!({ "answer": yes }))
        } else {
            self.line(if yes { "yes" } else { "no" })
        }
    }

    pub fn pair(&mut self, h: &Hypergraph, r: &RhsPair) -> io::Result<()> {
        if self.json {
            self.value(pair_json(h, r))
        } else {
            self.line(&format_pair(h, r))
        }
    }

    /// `w=.. R1={..} R2={..}`.
    pub fn optimum_pair(&mut self, h: &Hypergraph, r: &RhsPair) -> io::Result<()> {
        if self.json {
            return self.value(pair_json(h, r));
        }
        let text = format_pair(h, r);
        let body = text.rsplit_once(" w=").map_or(text.as_str(), |(b, _)| b);
        let line = format!("w={} {}", r.weight(), body);
        self.line(&line)
    }

    pub fn assignment(&mut self, names: &[String], f: &RomanAssignment) -> io::Result<()> {
        if self.json {
            self.value(assignment_json(names, f))
        } else {
            self.line(&format_assignment(names, f))
        }
    }

    /// `w=.. f: x=v ..`.
    pub fn optimum_assignment(&mut self, names: &[String], f: &RomanAssignment) -> io::Result<()> {
        if self.json {
            return self.value(assignment_json(names, f));
        }
        let text = format_assignment(names, f);
        let body = text.rsplit_once(" w=").map_or(text.as_str(), |(b, _)| b);
        let line = format!("w={} {}", f.weight(), body);
        self.line(&line)
    }

    pub fn vertex_set(&mut self, names: &[String], label: &str, set: &FixedBitSet) -> io::Result<()> {
        let members = names_of(set, |v| names[v].as_str());
        if self.json {
            let mut obj = Map::new();
            obj.insert(label.to_string(), json!(members));
            self.value(Value::Object(obj))
        } else {
            let line = format!("{label}={{{}}}", members.join(","));
            self.line(&line)
        }
    }

    pub fn verdict(&mut self, label: &str, verdict: &Verdict, brute: Option<bool>) -> io::Result<()> {
        if self.json {
            let mut obj = Map::new();
            obj.insert(label.to_string(), json!(verdict.is_ok()));
            let violated = verdict.as_ref().err().map(|v| v.to_string());
            obj.insert("violated".into(), json!(violated));
            if let Some(b) = brute {
                obj.insert("brute".into(), json!(b));
            }
            return self.value(Value::Object(obj));
        }
        let ok = match label {
            "witness" => if verdict.is_ok() { "valid" } else { "invalid" },
            _ => if verdict.is_ok() { "true" } else { "false" },
        };
        self.line(&format!("{label}: {ok}"))?;
        if let Err(v) = verdict {
            self.line(&format!("violated: {v}"))?;
        }
        if let Some(b) = brute {
            self.line(&format!("brute: {b}"))?;
        }
        Ok(())
    }

    pub fn offset(&mut self, offset: Option<i64>) -> io::Result<()> {
        let shown = offset.map_or("none".to_string(), |o| o.to_string());
        if self.json {
            self.value(json!({ "offset": offset }))
        } else {
            self.line(&format!("offset={shown}"))
        }
    }
}
