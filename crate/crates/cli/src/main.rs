use std::fs;
use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rhs_core::characterize::{
    check_extension_witness, check_minimal_rdf, check_minimal_rhf, check_minimal_rhs, check_po_minimal_rdf,
    ExtensionWitness, Verdict,
};
use rhs_core::enumerate::enumerate_minimal_rhs;
use rhs_core::extend::{
    bounded_ext_rd, ext_ds_split, ext_rhf_general, ext_rhf_surjective, ext_rhs, find_split, ExtAnswer,
    GeneralStrategy,
};
use rhs_core::format::{
    parse_assignment, parse_graph, parse_hypergraph, parse_pair, serialize_graph,
    serialize_hypergraph, GraphInstance, HypergraphInstance,
};
use rhs_core::generate::{gen_random, gen_random_with_tau, gen_tight};
use rhs_core::model::{bitset, edge_cover_hypergraph, vertex_cover_hypergraph};
use rhs_core::optimize::{exact_min_rhf, exact_min_rhs, greedy_rhf, greedy_rhs, rec_min, rvc_decide, rvc_enumerate};
use rhs_core::oracle::{
    brute_enumerate_minimal_rhf, brute_enumerate_minimal_rhs, brute_minimal_rdf, brute_minimal_rhf,
    brute_minimal_rhs, brute_po_minimal_rdf,
};
use rhs_core::reduce::{
    ds_split_to_rhs, rd_to_rhf, rhf_to_rd_gadget, rhf_to_rhs, rhs_to_rhf, two_section, vc_to_rvc, Reduction,
};
use rhs_core::{Correspondence, Error, Graph, Hypergraph, RomanAssignment};

mod render;

use render::Out;

#[derive(Parser)]
#[command(name = "rhs-tool", version, about = "Roman hitting sets, Roman hitting functions and Roman domination")]
struct Cli {
    /// Emit one JSON object per solution instead of text lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test minimality of a solution with the combinatorial characterizations.
    Check(CheckArgs),
    /// Is there a minimal rhs above the preset pair?
    ExtRhs {
        file: String,
        /// Pre-solution, e.g. `R1=1,2;R2=c`; defaults to the file's preset lines.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Is there a minimal rhf above the assignment?
    ExtRhf {
        file: String,
        #[arg(long)]
        assign: Option<String>,
        /// Use the exponential solver, which has no precondition.
        #[arg(long)]
        general: bool,
        #[arg(long, value_enum, default_value_t = Strategy::Witness)]
        strategy: Strategy,
    },
    /// Is there a minimal rdf between the file's `assign` and `upper` bounds?
    ExtRdBounded { file: String },
    /// Is there a minimal dominating set of a split graph containing a vertex set?
    ExtDsSplit {
        file: String,
        /// Clique side, comma separated; found automatically when omitted.
        #[arg(long)]
        clique: Option<String>,
        /// Required vertices, comma separated; defaults to vertices assigned a nonzero value.
        #[arg(long)]
        set: Option<String>,
    },
    /// Enumerate all minimal rhs with polynomial delay.
    EnumRhs {
        file: String,
        /// Emit only solutions of weight at most K.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Minimum-weight rhs.
    MinRhs {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Minimum-weight rhf.
    MinRhf {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Roman vertex cover.
    Rvc {
        #[command(subcommand)]
        mode: RvcMode,
    },
    /// Minimum Roman edge cover.
    Rec { file: String },
    /// Build a reduction target and write it to OUT.
    Reduce(ReduceArgs),
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Brute-force enumeration of all minimal solutions.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        file: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct CheckArgs {
    #[arg(value_enum)]
    kind: CheckKind,
    file: String,
    #[arg(long)]
    pair: Option<String>,
    #[arg(long)]
    assign: Option<String>,
    /// Witness for `check witness`, e.g. `R2=b,e;rho=b:1,e:3`.
    #[arg(long)]
    witness: Option<String>,
    /// Also run the exhaustive definition-based check.
    #[arg(long)]
    brute: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(value_enum)]
    name: ReductionName,
    input: String,
    output: String,
    /// Budget for `rhs-to-rhf`.
    #[arg(short, long)]
    k: Option<usize>,
    /// Clique side for `ds-split-to-rhs`, comma separated.
    #[arg(long)]
    clique: Option<String>,
    /// A source solution to map into the target (or a target solution with `--backward`).
    #[arg(long)]
    map_solution: Option<String>,
    #[arg(long, requires = "map_solution")]
    backward: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    MinRhs,
    MinRhf,
    MinRdf,
    PoMinRdf,
    Witness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Sweep,
    Witness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Greedy,
    Exact,
    Brute,
}

#[derive(Subcommand)]
enum RvcMode {
    Decide {
        file: String,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
    },
    Enum {
        file: String,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// `n` disjoint edges of size two.
    Tight { n: usize },
    /// Independent incidences with the given density.
    Random {
        nv: usize,
        ne: usize,
        density: f64,
        #[arg(long)]
        seed: u64,
        /// Also draw a correspondence.
        #[arg(long)]
        tau: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Rhs,
    Rhf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionName {
    RdToRhf,
    RhfToRhs,
    RhsToRhf,
    RhfToRd,
    VcToRvc,
    DsSplitToRhs,
    TwoSection,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Core(Error::Io(e))
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = Out::new(BufWriter::new(stdout.lock()), cli.json);
    let result = run(cli.command, &mut out);
    let flushed = out.finish();
    match result {
        Ok(()) => {
            if flushed.is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() { 2 } else { 1 })
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))
}

fn hypergraph_file(path: &str) -> Result<HypergraphInstance, Failure> {
    parse_hypergraph(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn graph_file(path: &str) -> Result<GraphInstance, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn hypergraph_assignment(inst: &HypergraphInstance, text: Option<&str>) -> Result<RomanAssignment, Failure> {
    let h = &inst.hypergraph;
    match text {
        Some(t) => Ok(parse_assignment(h.vertex_names(), |x| h.vertex_id(x), t)?),
        None => Ok(inst.assign.clone()),
    }
}

fn graph_assignment(inst: &GraphInstance, text: Option<&str>) -> Result<RomanAssignment, Failure> {
    let g = &inst.graph;
    match text {
        Some(t) => Ok(parse_assignment(g.names(), |x| g.vertex_id(x), t)?),
        None => Ok(inst.assign.clone()),
    }
}

fn vertex_list(g: &Graph, text: &str) -> Result<fixedbitset::FixedBitSet, Failure> {
    let mut ids = Vec::new();
    for t in text.trim().trim_start_matches('{').trim_end_matches('}').split(',') {
        let t = t.trim();
        if !t.is_empty() {
            ids.push(g.vertex_id(t)?);
        }
    }
    Ok(bitset(g.num_vertices(), ids))
}

fn write_file(path: &str, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write `{path}`: {e}")))
}

fn run(command: Command, out: &mut Out) -> CliResult {
    match command {
        Command::Check(args) => check(args, out),
        Command::ExtRhs { file, pair } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            let u = match pair {
                Some(p) => parse_pair(h, &p)?,
                None => inst.preset.clone(),
            };
            let answer = ext_rhs(h, &u)?;
            out.answer(answer.is_yes())?;
            if let Some(r) = answer.witness() {
                out.pair(h, r)?;
            }
            Ok(())
        }
        Command::ExtRhf {
            file,
            assign,
            general,
            strategy,
        } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            let tau = inst.correspondence()?;
            let f = hypergraph_assignment(&inst, assign.as_deref())?;
            let answer = if general {
                let strategy = match strategy {
                    Strategy::Sweep => GeneralStrategy::Sweep,
                    Strategy::Witness => GeneralStrategy::WitnessSearch,
                };
                ext_rhf_general(h, &tau, &f, strategy)?
            } else {
                ext_rhf_surjective(h, &tau, &f).map_err(|e| match e {
                    Error::Invalid(msg) => Failure::Usage(format!("{msg} (use --general)")),
                    other => Failure::Core(other),
                })?
            };
            assignment_answer(out, h.vertex_names(), &answer)
        }
        Command::ExtRdBounded { file } => {
            let inst = graph_file(&file)?;
            let answer = bounded_ext_rd(&inst.bounded())?;
            assignment_answer(out, inst.graph.names(), &answer)
        }
        Command::ExtDsSplit { file, clique, set } => {
            let inst = graph_file(&file)?;
            let g = &inst.graph;
            let clique = match clique {
                Some(c) => vertex_list(g, &c)?,
                None => find_split(g).ok_or_else(|| Failure::Usage("the graph is not a split graph".into()))?,
            };
            let u = match set {
                Some(s) => vertex_list(g, &s)?,
                None => bitset(g.num_vertices(), (0..g.num_vertices()).filter(|&v| inst.assign.get(v) > 0)),
            };
            let answer = ext_ds_split(g, &clique, &u)?;
            out.answer(answer.is_yes())?;
            if let Some(d) = answer.witness() {
                out.vertex_set(g.names(), "D", d)?;
            }
            Ok(())
        }
        Command::EnumRhs { file, cap } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            let mut failed = None;
            let stats = enumerate_minimal_rhs(h, cap, &mut |r| {
                if failed.is_none() {
                    failed = out.pair(h, r).err();
                }
            });
            if let Some(e) = failed {
                return Err(e.into());
            }
            eprintln!("{stats}");
            Ok(())
        }
        Command::MinRhs { file, method } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            let (pair, nodes) = match method {
                Method::Greedy => (greedy_rhs(h).0, None),
                Method::Exact => {
                    let opt = exact_min_rhs(h);
                    (opt.witness, Some(opt.nodes))
                }
                Method::Brute => {
                    let all = brute_enumerate_minimal_rhs(h, 1)?;
                    let best = all.into_iter().min_by_key(|p| p.weight()).expect("(I, ∅) lies above some minimal rhs");
                    (best, None)
                }
            };
            out.optimum_pair(h, &pair)?;
            if let Some(n) = nodes {
                eprintln!("nodes={n}");
            }
            Ok(())
        }
        Command::MinRhf { file, method } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            let tau = inst.correspondence()?;
            let f = match method {
                Method::Greedy => greedy_rhf(h, &tau)?.0,
                Method::Exact => {
                    let opt = exact_min_rhf(h, &tau)?;
                    eprintln!("nodes={}", opt.nodes);
                    opt.witness
                }
                Method::Brute => {
                    let all = brute_enumerate_minimal_rhf(h, &tau, 1)?;
                    all.into_iter()
                        .min_by_key(|f| f.weight())
                        .ok_or_else(|| Error::Infeasible("no Roman hitting function exists".into()))?
                }
            };
            Ok(out.optimum_assignment(h.vertex_names(), &f)?)
        }
        Command::Rvc { mode } => match mode {
            RvcMode::Decide { file, k } => {
                let inst = graph_file(&file)?;
                let d = rvc_decide(&inst.graph, k)?;
                out.answer(d.answer)?;
                eprintln!("nodes={}", d.nodes);
                Ok(())
            }
            RvcMode::Enum { file, k } => {
                let inst = graph_file(&file)?;
                let h = vertex_cover_hypergraph(&inst.graph);
                let mut failed = None;
                let stats = rvc_enumerate(&inst.graph, k, &mut |r| {
                    if failed.is_none() {
                        failed = out.pair(&h, r).err();
                    }
                })?;
                if let Some(e) = failed {
                    return Err(e.into());
                }
                eprintln!("{stats}");
                Ok(())
            }
        },
        Command::Rec { file } => {
            let inst = graph_file(&file)?;
            let opt = rec_min(&inst.graph);
            Ok(out.optimum_pair(&edge_cover_hypergraph(&inst.graph), &opt.witness)?)
        }
        Command::Reduce(args) => reduce(args, out),
        Command::Gen { kind } => {
            let text = match kind {
                GenKind::Tight { n } => serialize_hypergraph(&HypergraphInstance::new(gen_tight(n)?)),
                GenKind::Random {
                    nv,
                    ne,
                    density,
                    seed,
                    tau,
                } => {
                    if tau {
                        let (h, t) = gen_random_with_tau(nv, ne, density, seed)?;
                        serialize_hypergraph(&HypergraphInstance::with_correspondence(h, &t))
                    } else {
                        serialize_hypergraph(&HypergraphInstance::new(gen_random(nv, ne, density, seed)?))
                    }
                }
            };
            Ok(out.raw(&text)?)
        }
        Command::Oracle { kind, file, jobs } => {
            let inst = hypergraph_file(&file)?;
            let h = &inst.hypergraph;
            match kind {
                OracleKind::Rhs => {
                    for p in brute_enumerate_minimal_rhs(h, jobs)? {
                        out.pair(h, &p)?;
                    }
                }
                OracleKind::Rhf => {
                    let tau = inst.correspondence()?;
                    for f in brute_enumerate_minimal_rhf(h, &tau, jobs)? {
                        out.assignment(h.vertex_names(), &f)?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn assignment_answer(out: &mut Out, names: &[String], answer: &ExtAnswer<RomanAssignment>) -> CliResult {
    out.answer(answer.is_yes())?;
    if let Some(f) = answer.witness() {
        out.assignment(names, f)?;
    }
    Ok(())
}

fn check(args: CheckArgs, out: &mut Out) -> CliResult {
    match args.kind {
        CheckKind::MinRhs => {
            let inst = hypergraph_file(&args.file)?;
            let h = &inst.hypergraph;
            let r = match &args.pair {
                Some(p) => parse_pair(h, p)?,
                None => inst.preset.clone(),
            };
            r.check_fits(h)?;
            let brute = args.brute.then(|| brute_minimal_rhs(h, &r)).transpose()?;
            Ok(out.verdict("minimal", &check_minimal_rhs(h, &r), brute)?)
        }
        CheckKind::MinRhf => {
            let inst = hypergraph_file(&args.file)?;
            let h = &inst.hypergraph;
            let tau = inst.correspondence()?;
            let f = hypergraph_assignment(&inst, args.assign.as_deref())?;
            let brute = args.brute.then(|| brute_minimal_rhf(h, &tau, &f)).transpose()?;
            Ok(out.verdict("minimal", &check_minimal_rhf(h, &tau, &f), brute)?)
        }
        CheckKind::MinRdf | CheckKind::PoMinRdf => {
            let inst = graph_file(&args.file)?;
            let g = &inst.graph;
            let f = graph_assignment(&inst, args.assign.as_deref())?;
            if matches!(args.kind, CheckKind::MinRdf) {
                let brute = args.brute.then(|| brute_minimal_rdf(g, &f)).transpose()?;
                Ok(out.verdict("minimal", &check_minimal_rdf(g, &f), brute)?)
            } else {
                let brute = args.brute.then(|| brute_po_minimal_rdf(g, &f)).transpose()?;
                Ok(out.verdict("po-minimal", &check_po_minimal_rdf(g, &f), brute)?)
            }
        }
        CheckKind::Witness => {
            let inst = hypergraph_file(&args.file)?;
            let h = &inst.hypergraph;
            let tau = inst.correspondence()?;
            let f = hypergraph_assignment(&inst, args.assign.as_deref())?;
            let text = args
                .witness
                .ok_or_else(|| Failure::Usage("check witness needs --witness".into()))?;
            let w = parse_witness(h, &text)?;
            let verdict: Verdict = check_extension_witness(h, &tau, &f, &w)?;
            Ok(out.verdict("witness", &verdict, None)?)
        }
    }
}

/// `R2=b,e;rho=b:1,e:3`.
fn parse_witness(h: &Hypergraph, text: &str) -> Result<ExtensionWitness, Failure> {
    let n = h.num_vertices();
    let mut w = ExtensionWitness {
        r2: h.empty_vertex_set(),
        rho: vec![None; n],
    };
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("malformed witness component `{part}`")))?;
        let items = val.split(',').map(str::trim).filter(|s| !s.is_empty());
        match key.trim() {
            "R2" => {
                for t in items {
                    w.r2.insert(h.vertex_id(t)?);
                }
            }
            "rho" => {
                for t in items {
                    let (x, i) = t
                        .split_once(':')
                        .ok_or_else(|| Failure::Usage(format!("malformed rho entry `{t}`")))?;
                    w.rho[h.vertex_id(x)?] = Some(h.edge_id(i)?);
                }
            }
            other => return Err(Failure::Usage(format!("unknown witness component `{other}`"))),
        }
    }
    Ok(w)
}

fn need_tau(inst: &HypergraphInstance) -> Result<Correspondence, Failure> {
    Ok(inst.correspondence()?)
}

fn reduce(args: ReduceArgs, out: &mut Out) -> CliResult {
    let solution = args.map_solution.as_deref();
    let backward = args.backward;
    match args.name {
        ReductionName::RdToRhf => {
            let inst = graph_file(&args.input)?;
            let red = rd_to_rhf(&inst.graph);
            let target = HypergraphInstance::with_correspondence(red.hypergraph.clone(), &red.tau);
            write_file(&args.output, &serialize_hypergraph(&target))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                let names = red.graph.names();
                let f = parse_assignment(names, |x| red.graph.vertex_id(x), s)?;
                let mapped = if backward { red.backward(&f)? } else { red.forward(&f)? };
                out.assignment(names, &mapped)?;
            }
        }
        ReductionName::RhfToRhs => {
            let inst = hypergraph_file(&args.input)?;
            let h = &inst.hypergraph;
            let red = rhf_to_rhs(h, &need_tau(&inst)?)?;
            write_file(&args.output, &serialize_hypergraph(&HypergraphInstance::new(red.target.clone())))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                if backward {
                    let f = red.backward(&parse_pair(&red.target, s)?)?;
                    out.assignment(h.vertex_names(), &f)?;
                } else {
                    let f = parse_assignment(h.vertex_names(), |x| h.vertex_id(x), s)?;
                    out.pair(&red.target, &red.forward(&f)?)?;
                }
            }
        }
        ReductionName::RhsToRhf => {
            let inst = hypergraph_file(&args.input)?;
            let h = &inst.hypergraph;
            let k = args.k.ok_or_else(|| Failure::Usage("rhs-to-rhf needs -k".into()))?;
            let red = rhs_to_rhf(h, k)?;
            let target = HypergraphInstance::with_correspondence(red.target.clone(), &red.tau);
            write_file(&args.output, &serialize_hypergraph(&target))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                let t = &red.target;
                if backward {
                    let f = parse_assignment(t.vertex_names(), |x| t.vertex_id(x), s)?;
                    out.pair(h, &red.backward(&f)?)?;
                } else {
                    let f = red.forward(&parse_pair(h, s)?)?;
                    out.assignment(t.vertex_names(), &f)?;
                }
            }
        }
        ReductionName::RhfToRd => {
            let inst = hypergraph_file(&args.input)?;
            let h = &inst.hypergraph;
            let red = rhf_to_rd_gadget(h, &need_tau(&inst)?)?;
            write_file(&args.output, &serialize_graph(&GraphInstance::new(red.graph.clone())))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                let g = &red.graph;
                if backward {
                    let f = parse_assignment(g.names(), |x| g.vertex_id(x), s)?;
                    out.assignment(h.vertex_names(), &red.backward(&f)?)?;
                } else {
                    let f = parse_assignment(h.vertex_names(), |x| h.vertex_id(x), s)?;
                    out.assignment(g.names(), &red.forward(&f)?)?;
                }
            }
        }
        ReductionName::VcToRvc => {
            let inst = graph_file(&args.input)?;
            let red = vc_to_rvc(&inst.graph)?;
            write_file(&args.output, &serialize_graph(&GraphInstance::new(red.graph.clone())))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                if backward {
                    let cover = red.backward(&parse_pair(&red.hypergraph, s)?)?;
                    out.vertex_set(red.source.names(), "C", &cover)?;
                } else {
                    let cover = vertex_list(&red.source, s)?;
                    out.pair(&red.hypergraph, &red.forward(&cover)?)?;
                }
            }
        }
        ReductionName::DsSplitToRhs => {
            let inst = graph_file(&args.input)?;
            let g = &inst.graph;
            let clique = match &args.clique {
                Some(c) => vertex_list(g, c)?,
                None => find_split(g).ok_or_else(|| Failure::Usage("the graph is not a split graph".into()))?,
            };
            let red = ds_split_to_rhs(g, &clique)?;
            let mut target = HypergraphInstance::new(red.split.hypergraph.clone());
            let u = bitset(g.num_vertices(), (0..g.num_vertices()).filter(|&v| inst.assign.get(v) > 0));
            target.preset = red.pre_solution(&u)?;
            write_file(&args.output, &serialize_hypergraph(&target))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                if backward {
                    let d = red.backward(&parse_pair(&red.split.hypergraph, s)?)?;
                    out.vertex_set(g.names(), "D", &d)?;
                } else {
                    let d = vertex_list(g, s)?;
                    out.pair(&red.split.hypergraph, &red.forward(&d)?)?;
                }
            }
        }
        ReductionName::TwoSection => {
            let inst = hypergraph_file(&args.input)?;
            let h = &inst.hypergraph;
            let red = two_section(h)?;
            write_file(&args.output, &serialize_graph(&GraphInstance::new(red.graph.clone())))?;
            out.offset(red.offset())?;
            if let Some(s) = solution {
                let f = parse_assignment(h.vertex_names(), |x| h.vertex_id(x), s)?;
                let mapped = if backward { red.backward(&f)? } else { red.forward(&f)? };
                out.assignment(h.vertex_names(), &mapped)?;
            }
        }
    }
    Ok(())
}
