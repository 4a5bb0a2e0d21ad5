use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tarlab::census::{uniqueness_classes_with, CensusOptions, CensusRow, GraphSource, Universe};
use tarlab::export::{adjacency_export, to_dot};
use tarlab::feasibility::{extremal_feasible_sets, irrelevant_vertices, parameter_values};
use tarlab::generate::{generate_nonisomorphic, GraphFilter};
use tarlab::graph6::{parse_graph6, parse_graph6_stream, write_graph6};
use tarlab::hamilton::{hamilton_search, HamiltonMode, Verdict};
use tarlab::iso::{tar_isomorphic, IsoMethod};
use tarlab::tar::{build_tar, build_tj, connectivity_profile, cut_vertices, degree_stats, SetGraph, TarGraph};
use tarlab::verify::{claim_ids, verify_claims, Selection};
use tarlab::{Direction, FamilySpec, Graph, ParameterKind, VertexSet};

#[derive(Parser)]
#[command(name = "tarlab", version, about = "TAR reconfiguration graphs of vertex-set graph parameters")]
struct Cli {
    /// Worker threads for parallel work (census, verify).
    #[arg(long, global = true, env = "TARLAB_THREADS")]
    threads: Option<usize>,
    /// Write results to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
    /// graph6 of the reconfiguration graph, or an edge list when it is too large.
    Graph6,
}

#[derive(Args)]
struct Source {
    /// Family spec such as `complete_bipartite:4,5` or `k2q:4(complete:3)`.
    #[arg(long, group = "source")]
    family: Option<String>,
    /// A graph6 record.
    #[arg(long, group = "source")]
    graph6: Option<String>,
    /// File holding one graph6 record; `-` reads standard input.
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// File holding an edge list, one `u v` pair per line; `-` reads standard input.
    #[arg(long, group = "source")]
    edges: Option<PathBuf>,
}

#[derive(Args)]
struct OtherSource {
    #[arg(long, group = "other")]
    other_family: Option<String>,
    #[arg(long, group = "other")]
    other_graph6: Option<String>,
    #[arg(long, group = "other")]
    other_file: Option<PathBuf>,
    #[arg(long, group = "other")]
    other_edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Setsystem,
    Direct,
}

impl From<MethodArg> for IsoMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Setsystem => IsoMethod::SetSystem,
            MethodArg::Direct => IsoMethod::Direct,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    NoIsolated,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    NoIsolated,
    Connected,
}

#[derive(Subcommand)]
enum Command {
    /// Parameter values and extremal sets.
    Param {
        #[arg(long)]
        kind: ParameterKind,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the TAR graph and export it.
    Tar {
        #[arg(long)]
        kind: ParameterKind,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Slice connectivity and thresholds.
    Connect {
        #[arg(long)]
        kind: ParameterKind,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Token-jumping graph on feasible sets of size k.
    Tj {
        #[arg(long)]
        kind: ParameterKind,
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hamilton path or cycle search in the TAR graph.
    Hamilton {
        #[arg(long)]
        kind: ParameterKind,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = ModeArg::Path)]
        mode: ModeArg,
        #[arg(long, default_value_t = tarlab::hamilton::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether two base graphs have isomorphic TAR graphs.
    Iso {
        #[arg(long)]
        kind: ParameterKind,
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        other: OtherSource,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Uniqueness census over all graphs of one order.
    Census {
        #[arg(long)]
        kind: ParameterKind,
        #[arg(long)]
        order: usize,
        /// graph6 stream to draw the universe from; `-` reads standard input.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = UniverseArg::NoIsolated)]
        universe: UniverseArg,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite.
    Verify {
        /// Claim to run; repeat for several. Runs every claim when omitted.
        #[arg(long = "claim")]
        claims: Vec<String>,
        /// Print the claim ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit one graph6 record per isomorphism class of the given order.
    Gen {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn load_graph(
    family: &Option<String>,
    graph6: &Option<String>,
    file: &Option<PathBuf>,
    edges: &Option<PathBuf>,
    flag: &str,
) -> Result<Graph, Failure> {
    if let Some(f) = family {
        return Ok(f.parse::<FamilySpec>()?.build()?);
    }
    if let Some(s) = graph6 {
        return Ok(parse_graph6(s.trim())?);
    }
    if let Some(p) = file {
        let graphs = parse_graph6_stream(&read_text(p)?)?;
        return match graphs.as_slice() {
            [g] => Ok(*g),
            _ => Err(Failure(format!("{}: expected one graph6 record, found {}", p.display(), graphs.len()))),
        };
    }
    if let Some(p) = edges {
        return Ok(Graph::parse_edge_list(&read_text(p)?)?);
    }
    Err(Failure(format!("a graph source is required (--{flag}family, --{flag}graph6, --{flag}file or --{flag}edges)")))
}

impl Source {
    fn graph(&self) -> Result<Graph, Failure> {
        load_graph(&self.family, &self.graph6, &self.file, &self.edges, "")
    }
}

impl OtherSource {
    fn graph(&self) -> Result<Graph, Failure> {
        load_graph(&self.other_family, &self.other_graph6, &self.other_file, &self.other_edges, "other-")
    }
}

fn unsupported(format: Format, cmd: &str) -> Failure {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failure(format!("format {name} is not available for {cmd}"))
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| Value::String(s.to_string())).collect())
}

fn sets_text(sets: &[VertexSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

fn bound_names(kind: ParameterKind) -> (&'static str, &'static str, &'static str, &'static str) {
    match kind.direction() {
        Direction::X => ("upper", "minimal", "x0", "underline_x0"),
        Direction::Y => ("lower", "maximal", "y0", "overline_y0"),
    }
}

fn param(kind: ParameterKind, g: &Graph, format: Format) -> Outcome {
    let v = parameter_values(kind, g)?;
    let sets = extremal_feasible_sets(kind, g)?;
    let irr = irrelevant_vertices(kind, g)?;
    let (ext, which, _, _) = bound_names(kind);
    let out = match format {
        Format::Text => format!(
            "kind: {kind}\ngraph: {} (n={}, m={})\nvalue: {}\n{ext}: {}\n{which} sets: {}\nirrelevant: {irr}\n",
            write_graph6(g),
            g.order(),
            g.size(),
            v.value,
            v.extremal,
            sets_text(&sets)
        ),
        Format::Json => pretty(&json!({
            "kind": kind.name(),
            "graph6": write_graph6(g),
            "n": g.order(),
            "value": v.value,
            ext: v.extremal,
            (format!("{which}_sets")): sets_json(&sets),
            "irrelevant": irr.to_string(),
        })),
        Format::Csv => format!("kind,n,value,{ext},{which}_sets\n{kind},{},{},{},\"{}\"\n", g.order(), v.value, v.extremal, sets_text(&sets)),
        f => return Err(unsupported(f, "param")),
    };
    Ok((out, true))
}

fn set_graph_json(g: &SetGraph) -> Value {
    json!({
        "order": g.order(),
        "edge_count": g.edge_count(),
        "sets": sets_json(&g.labels),
        "edges": g.edges(),
    })
}

fn tar_cmd(tar: &TarGraph, format: Format) -> Outcome {
    let sg = tar.to_set_graph();
    let kind = tar.kind();
    let out = match format {
        Format::Text => {
            let d = degree_stats(tar);
            let mut s = format!(
                "kind: {kind}\nbase: {} (n={})\nvertices: {}\nedges: {}\nmax degree: {}\nmin degree: {}\ncut vertices: {}\n",
                write_graph6(tar.base()),
                tar.n(),
                tar.order(),
                tar.edge_count(),
                d.max_degree,
                d.min_degree,
                sets_text(&cut_vertices(tar))
            );
            for (i, l) in sg.labels.iter().enumerate() {
                let nb: Vec<String> = sg.adj[i].iter().map(|&j| sg.labels[j].to_string()).collect();
                let _ = writeln!(s, "{l}: {}", nb.join(" "));
            }
            s
        }
        Format::Json => {
            let d = degree_stats(tar);
            let mut v = set_graph_json(&sg);
            v["kind"] = json!(kind.name());
            v["base_graph6"] = json!(write_graph6(tar.base()));
            v["max_degree"] = json!(d.max_degree);
            v["min_degree"] = json!(d.min_degree);
            v["cut_vertices"] = sets_json(&cut_vertices(tar));
            pretty(&v)
        }
        Format::Dot => to_dot(&sg, &format!("{kind} TAR")),
        Format::Graph6 => adjacency_export(&sg),
        f => return Err(unsupported(f, "tar")),
    };
    Ok((out, true))
}

fn connect(tar: &TarGraph, format: Format) -> Outcome {
    let p = connectivity_profile(tar);
    let kind = tar.kind();
    let (_, _, thr, ext) = bound_names(kind);
    let out = match format {
        Format::Text => {
            let slices: Vec<String> =
                p.connected.iter().enumerate().map(|(k, c)| format!("{k}:{}", if *c { "yes" } else { "no" })).collect();
            format!("kind: {kind}\nslices connected: {}\n{ext}: {}\n{thr}: {}\n", slices.join(" "), p.extreme, p.threshold)
        }
        Format::Json => pretty(&json!({
            "kind": kind.name(),
            "direction": p.direction,
            "connected": p.connected,
            thr: p.threshold,
            ext: p.extreme,
        })),
        Format::Csv => format!("kind,n,{ext},{thr}\n{kind},{},{},{}\n", tar.n(), p.extreme, p.threshold),
        f => return Err(unsupported(f, "connect")),
    };
    Ok((out, true))
}

fn tj(kind: ParameterKind, g: &Graph, k: usize, format: Format) -> Outcome {
    let sg = build_tj(kind, g, k)?;
    let out = match format {
        Format::Text => {
            let mut s = format!("kind: {kind}\nk: {k}\nvertices: {}\nedges: {}\ncomponents: {}\n", sg.order(), sg.edge_count(), sg.components().1);
            for (i, l) in sg.labels.iter().enumerate() {
                let nb: Vec<String> = sg.adj[i].iter().map(|&j| sg.labels[j].to_string()).collect();
                let _ = writeln!(s, "{l}: {}", nb.join(" "));
            }
            s
        }
        Format::Json => {
            let mut v = set_graph_json(&sg);
            v["kind"] = json!(kind.name());
            v["k"] = json!(k);
            v["components"] = json!(sg.components().1);
            pretty(&v)
        }
        Format::Dot => to_dot(&sg, &format!("{kind} TJ k={k}")),
        Format::Graph6 => adjacency_export(&sg),
        f => return Err(unsupported(f, "tj")),
    };
    Ok((out, true))
}

fn hamilton(tar: &TarGraph, mode: ModeArg, budget: u64, format: Format) -> Outcome {
    let sg = tar.to_set_graph();
    let mode = match mode {
        ModeArg::Path => HamiltonMode::Path,
        ModeArg::Cycle => HamiltonMode::Cycle,
    };
    let r = hamilton_search(&sg.adj, mode, budget);
    let (verdict, witness) = match &r.verdict {
        Verdict::Yes(w) => ("yes", Some(w.iter().map(|&i| sg.labels[i]).collect::<Vec<_>>())),
        Verdict::No => ("no", None),
        Verdict::Unknown => ("unknown", None),
    };
    let mode_name = match mode {
        HamiltonMode::Path => "path",
        HamiltonMode::Cycle => "cycle",
    };
    let out = match format {
        Format::Text => {
            let mut s = format!("kind: {}\nmode: {mode_name}\nverdict: {verdict}\nnodes explored: {}\n", tar.kind(), r.nodes_explored);
            if let Some(w) = &witness {
                let _ = writeln!(s, "witness: {}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            }
            s
        }
        Format::Json => pretty(&json!({
            "kind": tar.kind().name(),
            "mode": mode_name,
            "verdict": verdict,
            "nodes_explored": r.nodes_explored,
            "witness": witness.as_deref().map(sets_json),
        })),
        f => return Err(unsupported(f, "hamilton")),
    };
    Ok((out, true))
}

fn iso(kind: ParameterKind, g: &Graph, h: &Graph, method: Option<MethodArg>, format: Format) -> Outcome {
    let r = tar_isomorphic(kind, g, h, method.map(IsoMethod::from))?;
    let method = match r.method {
        IsoMethod::SetSystem => "setsystem",
        IsoMethod::Direct => "direct",
    };
    let out = match format {
        Format::Text => {
            let mut s = format!("kind: {kind}\nmethod: {method}\nisomorphic: {}\n", r.isomorphic);
            if let Some(m) = &r.relabeling {
                let pairs: Vec<String> = m.iter().enumerate().map(|(v, w)| format!("{v}->{w}")).collect();
                let _ = writeln!(s, "relabeling: {}", pairs.join(" "));
            }
            s
        }
        Format::Json => pretty(&json!({
            "kind": kind.name(),
            "method": method,
            "isomorphic": r.isomorphic,
            "relabeling": r.relabeling,
        })),
        f => return Err(unsupported(f, "iso")),
    };
    Ok((out, true))
}

fn census(
    kind: ParameterKind,
    order: usize,
    input: &Option<PathBuf>,
    universe: UniverseArg,
    method: Option<MethodArg>,
    format: Format,
) -> Outcome {
    let source = match input {
        Some(p) => GraphSource::from_graph6_text(&read_text(p)?)?,
        None => GraphSource::Builtin,
    };
    let opts = CensusOptions {
        universe: match universe {
            UniverseArg::NoIsolated => Universe::NoIsolated,
            UniverseArg::All => Universe::All,
        },
        method: method.map(IsoMethod::from),
    };
    let classes = uniqueness_classes_with(kind, order, &source, opts)?;
    let row = classes.row();
    let out = match format {
        Format::Text => format!(
            "kind: {kind}\norder: {order}\nuniverse: {}\nunique: {}\nratio: {:.4}\nclasses: {}\n",
            row.universe,
            row.unique,
            row.ratio,
            classes.classes.len()
        ),
        Format::Csv => format!("{}\n{}\n", CensusRow::CSV_HEADER, row.to_csv()),
        Format::Json => pretty(&classes.to_json()),
        f => return Err(unsupported(f, "census")),
    };
    Ok((out, true))
}

fn verify(claims: &[String], list: bool, format: Format) -> Outcome {
    if list {
        return Ok((claim_ids().join("\n") + "\n", true));
    }
    let selection = if claims.is_empty() { Selection::All } else { Selection::Ids(claims.to_vec()) };
    let report = verify_claims(&selection);
    let out = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        f => return Err(unsupported(f, "verify")),
    };
    Ok((out, report.all_passed()))
}

fn gen(order: usize, filter: FilterArg) -> Outcome {
    let filter = match filter {
        FilterArg::All => GraphFilter::All,
        FilterArg::NoIsolated => GraphFilter::NoIsolated,
        FilterArg::Connected => GraphFilter::Connected,
    };
    let graphs = generate_nonisomorphic(order, filter)?;
    Ok((graphs.iter().map(|g| write_graph6(g) + "\n").collect(), true))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Param { kind, source, format } => param(*kind, &source.graph()?, *format),
        Command::Tar { kind, source, format } => tar_cmd(&build_tar(*kind, &source.graph()?)?, *format),
        Command::Connect { kind, source, format } => connect(&build_tar(*kind, &source.graph()?)?, *format),
        Command::Tj { kind, k, source, format } => tj(*kind, &source.graph()?, *k, *format),
        Command::Hamilton { kind, source, mode, budget, format } => {
            hamilton(&build_tar(*kind, &source.graph()?)?, *mode, *budget, *format)
        }
        Command::Iso { kind, source, other, method, format } => {
            iso(*kind, &source.graph()?, &other.graph()?, *method, *format)
        }
        Command::Census { kind, order, input, universe, method, format } => {
            census(*kind, *order, input, *universe, *method, *format)
        }
        Command::Verify { claims, list, format } => verify(claims, *list, *format),
        Command::Gen { order, filter } => gen(*order, *filter),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, ok)) => {
            let written = match &cli.output {
                Some(p) => std::fs::write(p, &out).map_err(|e| format!("{}: {e}", p.display())),
                None => std::io::stdout().write_all(out.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
