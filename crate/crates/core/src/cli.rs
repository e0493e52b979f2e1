//! The `rainbowdom` command-line tool.
//!
//! Every command prints its primary output to stdout or writes it with
//! `--out`. When an output file is written (or `--manifest` is given) a JSON
//! run manifest records the arguments, inputs, outputs and stdout, and
//! `replay` re-runs it and compares the results byte for byte.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::certify::{
    construct_m3rdf, construct_tree_matching, formula_gamma_star_r3, ConstructionKind,
    FormulaFamily,
};
use crate::domatic::{construct_family, domatic_bounds, domatic_exact_tiny, FamilyKind};
use crate::error::{Error, Result};
use crate::format::{
    parse_assignment, parse_graph, serialize_assignment, serialize_family, serialize_graph,
    serialize_solution,
};
use crate::generate::{generate, Family, FamilyParams};
use crate::graph::Graph;
use crate::laws::{
    characterize_weight_three, check_edge_perturbation, check_observation_lower,
    check_pendant_path_lemma, check_pendant_path_lemma_all, check_tree_bounds,
    check_vertex_deletion, EdgeMode, Law, LawReport,
};
use crate::middle::middle_graph;
use crate::rainbow::{verify_krdf, verify_mkrdf, Domain, RainbowAssignment};
use crate::solver::{brute_force_optimal, dp_middle, solve_krdf, DpKind, SolverConfig};

#[derive(Debug, Parser)]
#[command(name = "rainbowdom", version, about = "Exact k-rainbow domination on middle graphs")]
pub struct Cli {
    /// Write the run manifest to this path.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named graph as an edge list.
    Gen(GenArgs),
    /// Compute an exact (middle) rainbow domination number.
    Solve(SolveArgs),
    /// Build an explicit middle 3-rainbow dominating function.
    Construct(ConstructArgs),
    /// Check an assignment against a graph.
    Verify(VerifyArgs),
    /// Build a 3-rainbow domatic family and bound the domatic number.
    Domatic(DomaticArgs),
    /// Check one of the general inequalities on an instance.
    Check(CheckArgs),
    /// Tabulate closed form, dynamic program and search over a range of n.
    Sweep(SweepArgs),
    /// Re-run a manifest and compare its outputs.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// Family name: path, cycle, complete, star, double_star, spider, empty, random_tree.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl FamilyArgs {
    fn family(&self) -> Result<Option<Family>> {
        let Some(kind) = &self.kind else {
            return Ok(None);
        };
        let params = FamilyParams {
            n: self.n,
            t: self.t,
            r: self.r,
            p: self.p,
            q: self.q,
            seed: self.seed,
        };
        Family::from_name(kind, &params).map(Some)
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bnb,
    Dp,
    Brute,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Edge-list file; alternatively describe the graph with --kind.
    pub graph: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 3)]
    pub k: u8,
    /// Solve on the middle graph (γ*) rather than the graph itself.
    #[arg(long)]
    pub middle: bool,
    #[arg(long, value_enum, default_value_t = Method::Bnb)]
    pub method: Method,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// path, cycle, complete or tree.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Tree edge-list file for `--family tree`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub assignment: PathBuf,
    /// Require this number of colors.
    #[arg(long)]
    pub k: Option<u8>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DomaticArgs {
    /// path or cycle.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub n: usize,
    /// Also run the exact search on the middle graph when it is small enough.
    #[arg(long)]
    pub oracle: bool,
    /// Family file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// lower-k, weight-three, vertex-deletion, edge-perturbation, tree-bounds or pendant-path.
    #[arg(long)]
    pub law: String,
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 3)]
    pub k: u8,
    #[arg(long)]
    pub vertex: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub edge: Option<Vec<usize>>,
    /// add or delete.
    #[arg(long, default_value = "add")]
    pub mode: String,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Optimal middle assignment for the pendant-path law; without it every
    /// optimal function is checked.
    #[arg(long)]
    pub cert: Option<PathBuf>,
    /// Report file; witnesses go next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// path or cycle.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long, default_value_t = 3)]
    pub k: u8,
    /// Largest n handed to the search (default: everything within the solver cap).
    #[arg(long)]
    pub solver_max: Option<usize>,
    /// CSV file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Directory for the re-generated outputs (default: a fresh temp directory).
    #[arg(long)]
    pub into: Option<PathBuf>,
}

/// Everything needed to reproduce one run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub args: Vec<String>,
    pub params: BTreeMap<String, String>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub seed: Option<u64>,
    pub stdout: String,
}

impl RunManifest {
    fn new(args: &[String], ctx: &Ctx) -> Self {
        let command = args.first().cloned().unwrap_or_default();
        let mut params = BTreeMap::new();
        let mut positional = 0;
        let mut i = 1;
        while i < args.len() {
            let a = &args[i];
            if let Some(name) = a.strip_prefix("--") {
                let mut vals = Vec::new();
                while i + 1 < args.len() && !args[i + 1].starts_with("--") {
                    i += 1;
                    vals.push(args[i].clone());
                }
                let v = if vals.is_empty() { "true".into() } else { vals.join(" ") };
                params.insert(name.to_string(), v);
            } else {
                params.insert(format!("arg{positional}"), a.clone());
                positional += 1;
            }
            i += 1;
        }
        let seed = params.get("seed").and_then(|s| s.parse().ok());
        RunManifest {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command,
            args: args.to_vec(),
            params,
            inputs: ctx.inputs.clone(),
            outputs: ctx.outputs.clone(),
            seed,
            stdout: ctx.stdout.clone(),
        }
    }
}

/// Output collected while a command runs.
#[derive(Default)]
struct Ctx {
    stdout: String,
    inputs: Vec<String>,
    outputs: Vec<String>,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String> {
        self.inputs.push(path.display().to_string());
        std::fs::read_to_string(path).map_err(|e| io_err(path, e))
    }

    fn write(&mut self, path: &Path, contents: &str) -> Result<()> {
        std::fs::write(path, contents).map_err(|e| io_err(path, e))?;
        self.outputs.push(path.display().to_string());
        Ok(())
    }

    /// Writes to `--out` when given, else to stdout.
    fn emit(&mut self, out: Option<&Path>, contents: &str) -> Result<()> {
        match out {
            Some(p) => self.write(p, contents),
            None => {
                self.stdout.push_str(contents);
                Ok(())
            }
        }
    }

    fn say(&mut self, line: impl AsRef<str>) {
        self.stdout.push_str(line.as_ref());
        self.stdout.push('\n');
    }

    fn read_graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read(path)?;
        parse_graph(&text)
    }
}

fn io_err(path: &Path, e: io::Error) -> Error {
    Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// Runs the tool on `args` (without the program name), writing primary output
/// to `stdout` and diagnostics to `stderr`.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let argv = std::iter::once(OsString::from("rainbowdom")).chain(args.iter().map(OsString::from));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                write!(stdout, "{e}")?;
                return Ok(());
            }
            return Err(Error::Usage(e.to_string()));
        }
    };
    let mut ctx = Ctx::default();
    let is_replay = matches!(cli.command, Command::Replay(_));
    let result = execute(cli.command, &mut ctx, stderr);
    // partial output (a failing verify report, replay diffs) is still shown
    stdout.write_all(ctx.stdout.as_bytes())?;
    result?;
    if !is_replay {
        let path = cli.manifest.or_else(|| {
            ctx.outputs
                .first()
                .map(|o| PathBuf::from(format!("{o}.manifest.json")))
        });
        if let Some(path) = path {
            let manifest = RunManifest::new(&manifest_args(args), &ctx);
            let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
            std::fs::write(&path, text).map_err(|e| io_err(&path, e))?;
        }
    }
    Ok(())
}

/// Arguments with the global `--manifest` option removed.
fn manifest_args(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a.clone());
        }
    }
    out
}

/// Process entry point: runs on the real streams and maps errors to exit codes.
pub fn main_with_args(args: &[String]) -> i32 {
    let mut stderr = io::stderr();
    match run(args, &mut io::stdout().lock(), &mut stderr) {
        Ok(()) => 0,
        Err(Error::Usage(msg)) => {
            // clap messages carry their own prefix
            let msg = msg.trim_end();
            if msg.starts_with("error:") {
                let _ = writeln!(stderr, "{msg}");
            } else {
                let _ = writeln!(stderr, "error: {msg}");
            }
            3
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command, ctx: &mut Ctx, stderr: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Gen(a) => cmd_gen(a, ctx),
        Command::Solve(a) => cmd_solve(a, ctx, stderr),
        Command::Construct(a) => cmd_construct(a, ctx),
        Command::Verify(a) => cmd_verify(a, ctx),
        Command::Domatic(a) => cmd_domatic(a, ctx),
        Command::Check(a) => cmd_check(a, ctx),
        Command::Sweep(a) => cmd_sweep(a, ctx),
        Command::Replay(a) => cmd_replay(a, ctx, stderr),
    }
}

fn cmd_gen(a: GenArgs, ctx: &mut Ctx) -> Result<()> {
    let family = a
        .family
        .family()?
        .ok_or_else(|| Error::Usage("gen requires --kind".into()))?;
    let g = generate(family)?;
    ctx.emit(a.out.as_deref(), &serialize_graph(&g))
}

fn graph_input(path: Option<&Path>, family: &FamilyArgs, ctx: &mut Ctx) -> Result<Graph> {
    match (path, family.family()?) {
        (Some(p), None) => ctx.read_graph(p),
        (None, Some(f)) => generate(f),
        (Some(_), Some(_)) => Err(Error::Usage("give a graph file or --kind, not both".into())),
        (None, None) => Err(Error::Usage("a graph file or --kind is required".into())),
    }
}

fn cmd_solve(a: SolveArgs, ctx: &mut Ctx, stderr: &mut dyn Write) -> Result<()> {
    let cfg = SolverConfig::from_env()?;
    let (value, cert, graph) = match a.method {
        Method::Dp => {
            if a.graph.is_some() {
                return Err(Error::Usage("the dp method takes --kind path|cycle and --n".into()));
            }
            let kind = match a.family.kind.as_deref() {
                Some("path") => DpKind::Path,
                Some("cycle") => DpKind::Cycle,
                _ => return Err(Error::domain("the dp method needs --kind path or --kind cycle")),
            };
            let n = a.family.n.ok_or_else(|| Error::Usage("the dp method needs --n".into()))?;
            (dp_middle(kind, n, a.k)?, None, None)
        }
        Method::Bnb | Method::Brute => {
            let g = graph_input(a.graph.as_deref(), &a.family, ctx)?;
            let host = if a.middle { middle_graph(&g).host } else { g.clone() };
            let (value, plain) = if a.method == Method::Bnb {
                let res = solve_krdf(&host, a.k, &cfg)?;
                let _ = writeln!(
                    stderr,
                    "search: {} nodes, {:.1} ms",
                    res.stats.nodes,
                    res.stats.elapsed.as_secs_f64() * 1e3
                );
                (res.value, res.certificate)
            } else {
                let (value, all) = brute_force_optimal(&host, a.k)?;
                (value, all.into_iter().next().expect("some optimum exists"))
            };
            let cert = if a.middle { plain.to_middle() } else { plain };
            (value, Some(cert), Some(g))
        }
    };
    if a.json {
        let certificate = match (&cert, &graph) {
            (Some(f), Some(g)) => json!((0..f.len())
                .map(|i| json!({
                    "key": f.key_label(Some(g), i),
                    "colors": f.get(i).iter().collect::<Vec<u8>>(),
                }))
                .collect::<Vec<_>>()),
            _ => serde_json::Value::Null,
        };
        let doc = json!({
            "value": value,
            "k": a.k,
            "domain": if a.middle || a.method == Method::Dp { "middle" } else { "plain" },
            "certificate": certificate,
        });
        ctx.say(serde_json::to_string(&doc).expect("json"));
    } else {
        ctx.say(format!("value {value}"));
    }
    if let Some(out) = &a.out {
        let text = match (&cert, &graph) {
            (Some(f), Some(g)) => serialize_solution(value, f, g),
            _ => format!("value {value}\n"),
        };
        ctx.write(out, &text)?;
    }
    Ok(())
}

fn cmd_construct(a: ConstructArgs, ctx: &mut Ctx) -> Result<()> {
    let need_n = || a.n.ok_or_else(|| Error::Usage(format!("--family {} needs --n", a.family)));
    let (g, f) = match a.family.as_str() {
        "tree" => {
            let path = a
                .graph
                .as_deref()
                .ok_or_else(|| Error::Usage("--family tree needs --graph".into()))?;
            let t = ctx.read_graph(path)?;
            let f = construct_tree_matching(&t)?;
            (t, f)
        }
        name => {
            let kind = match name {
                "path" => ConstructionKind::Path,
                "cycle" => ConstructionKind::Cycle,
                "complete" => ConstructionKind::Complete,
                other => {
                    return Err(Error::domain(format!(
                        "unknown construction family '{other}' (path, cycle, complete, tree)"
                    )))
                }
            };
            let c = construct_m3rdf(kind, need_n()?)?;
            (c.graph, c.assignment)
        }
    };
    ctx.emit(a.out.as_deref(), &serialize_solution(f.weight(), &f, &g))
}

fn cmd_verify(a: VerifyArgs, ctx: &mut Ctx) -> Result<()> {
    let g = ctx.read_graph(&a.graph)?;
    let text = ctx.read(&a.assignment)?;
    let f = parse_assignment(&text, &g)?;
    if let Some(k) = a.k {
        if f.k() != k {
            return Err(Error::domain(format!("assignment uses k = {}, expected {k}", f.k())));
        }
    }
    let report = match f.domain() {
        Domain::Middle => verify_mkrdf(&g, &f)?,
        Domain::Plain => verify_krdf(&g, &f)?,
    };
    let mut s = String::new();
    let _ = writeln!(s, "valid: {}", report.valid());
    let _ = writeln!(s, "weight: {}", f.weight());
    for v in &report.violations {
        let _ = writeln!(s, "violation: {}", serde_json::to_string(v).expect("json"));
    }
    ctx.emit(a.out.as_deref(), &s)?;
    if !report.valid() {
        return Err(Error::domain(format!(
            "not a valid rainbow dominating function ({} violations)",
            report.violations.len()
        )));
    }
    Ok(())
}

fn cmd_domatic(a: DomaticArgs, ctx: &mut Ctx) -> Result<()> {
    let cfg = SolverConfig::from_env()?;
    let (kind, g) = match a.kind.as_str() {
        "path" => (FamilyKind::Path, generate(Family::Path { n: a.n })?),
        "cycle" => (FamilyKind::Cycle, generate(Family::Cycle { n: a.n })?),
        other => return Err(Error::domain(format!("domatic kind must be path or cycle, got '{other}'"))),
    };
    let family = match construct_family(kind, a.n) {
        Ok(f) => Some(f),
        // odd paths and short cycles have no construction; bounds still apply
        Err(Error::Domain(_)) => None,
        Err(e) => return Err(e),
    };
    if let (Some(out), Some(fam)) = (&a.out, &family) {
        ctx.write(out, &serialize_family(fam))?;
    }
    let b = domatic_bounds(&g, 3, family, &cfg)?;
    ctx.say(format!("gamma {}", b.gamma));
    ctx.say(format!(
        "lower {} ({})",
        b.lower,
        if b.witness.is_some() { "family" } else { "k" }
    ));
    ctx.say(format!("upper {} ({})", b.upper, b.upper_source));
    match b.exact {
        Some(d) => ctx.say(format!("exact {d}")),
        None => ctx.say("exact none"),
    }
    if a.oracle {
        let host = middle_graph(&g).host;
        ctx.say(format!("oracle {}", domatic_exact_tiny(&host, 3)?));
    }
    Ok(())
}

fn cmd_check(a: CheckArgs, ctx: &mut Ctx) -> Result<()> {
    let cfg = SolverConfig::from_env()?;
    let law = Law::from_name(&a.law)?;
    let report: LawReport = match law {
        Law::WeightThree => characterize_weight_three(a.max_n, &cfg)?,
        _ => {
            let g = graph_input(a.graph.as_deref(), &a.family, ctx)?;
            match law {
                Law::LowerK => check_observation_lower(&g, a.k, &cfg)?,
                Law::VertexDeletion => {
                    let v = a.vertex.ok_or_else(|| Error::Usage("--vertex is required".into()))?;
                    check_vertex_deletion(&g, v, a.k, &cfg)?
                }
                Law::EdgePerturbation => {
                    let e = a.edge.as_deref().ok_or_else(|| Error::Usage("--edge U V is required".into()))?;
                    check_edge_perturbation(&g, (e[0], e[1]), a.k, EdgeMode::from_name(&a.mode)?, &cfg)?
                }
                Law::TreeBounds => check_tree_bounds(&g, &cfg)?,
                Law::PendantPath => match &a.cert {
                    Some(path) => {
                        let text = ctx.read(path)?;
                        let f = parse_assignment(&text, &g)?;
                        check_pendant_path_lemma(&g, &f, &cfg)?
                    }
                    None => check_pendant_path_lemma_all(&g, &cfg)?,
                },
                Law::WeightThree => unreachable!(),
            }
        }
    };
    if let Some(out) = &a.out {
        let files: Vec<String> = (0..report.witnesses.len())
            .map(|i| format!("{}.witness{i}.txt", out.display()))
            .collect();
        ctx.write(out, &report.to_text(&files))?;
        for (w, path) in report.witnesses.iter().zip(&files) {
            ctx.write(Path::new(path), &witness_text(&w.graph, &w.assignment))?;
        }
    }
    ctx.say(report.summary());
    if !report.holds {
        return Err(Error::domain(format!("law {} fails on {}", report.law, report.instance)));
    }
    Ok(())
}

fn witness_text(g: &Graph, f: &RainbowAssignment) -> String {
    format!("{}---\n{}", serialize_graph(g), serialize_assignment(f, g))
}

fn cmd_sweep(a: SweepArgs, ctx: &mut Ctx) -> Result<()> {
    let cfg = SolverConfig::from_env()?;
    let dp_kind = match a.kind.as_str() {
        "path" => DpKind::Path,
        "cycle" => DpKind::Cycle,
        other => return Err(Error::domain(format!("sweep kind must be path or cycle, got '{other}'"))),
    };
    if a.from > a.to {
        return Err(Error::domain(format!("empty range {}..={}", a.from, a.to)));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "formula", "dp", "solver", "match"])
        .map_err(csv_err)?;
    for n in a.from..=a.to {
        let (family, formula) = match dp_kind {
            DpKind::Path => (Family::Path { n }, FormulaFamily::Path { n }),
            DpKind::Cycle => (Family::Cycle { n }, FormulaFamily::Cycle { n }),
        };
        let formula = if a.k == 3 { Some(formula_gamma_star_r3(formula)?) } else { None };
        let dp = dp_middle(dp_kind, n, a.k)?;
        let g = generate(family)?;
        let within = a.solver_max.is_none_or(|m| n <= m)
            && g.order() + g.size() <= cfg.cap.min(SolverConfig::MAX_CAP);
        let solver = if within {
            Some(solve_krdf(&middle_graph(&g).host, a.k, &cfg)?.value)
        } else {
            None
        };
        let agree = [formula, solver].iter().flatten().all(|&v| v == dp);
        let cell = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        w.write_record([
            n.to_string(),
            cell(formula),
            dp.to_string(),
            cell(solver),
            agree.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    ctx.emit(a.out.as_deref(), &String::from_utf8(bytes).expect("csv is utf-8"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(io::Error::other(e.to_string()))
}

fn cmd_replay(a: ReplayArgs, ctx: &mut Ctx, stderr: &mut dyn Write) -> Result<()> {
    let text = ctx.read(&a.manifest)?;
    let manifest: RunManifest =
        serde_json::from_str(&text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let into = match a.into {
        Some(d) => d,
        None => std::env::temp_dir().join(format!("rainbowdom-replay-{}", std::process::id())),
    };
    std::fs::create_dir_all(&into).map_err(|e| io_err(&into, e))?;
    // outputs are redirected into `into`, keeping their file names
    let redirected: Vec<(String, PathBuf)> = manifest
        .outputs
        .iter()
        .map(|o| {
            let name = Path::new(o).file_name().map(PathBuf::from).unwrap_or_else(|| o.into());
            (o.clone(), into.join(name))
        })
        .collect();
    let args: Vec<String> = manifest
        .args
        .iter()
        .map(|arg| {
            redirected
                .iter()
                .find(|(o, _)| o == arg)
                .map(|(_, r)| r.display().to_string())
                .unwrap_or_else(|| arg.clone())
        })
        .collect();
    let cli = Cli::try_parse_from(std::iter::once("rainbowdom".to_string()).chain(args))
        .map_err(|e| Error::Usage(e.to_string()))?;
    let mut inner = Ctx::default();
    execute(cli.command, &mut inner, stderr)?;
    let mut same = true;
    let stdout_same = inner.stdout == manifest.stdout;
    same &= stdout_same;
    ctx.say(format!("{} stdout", if stdout_same { "identical" } else { "differs" }));
    for (orig, new) in &redirected {
        let a = std::fs::read(orig).map_err(|e| io_err(Path::new(orig), e))?;
        let b = std::fs::read(new).map_err(|e| io_err(new, e))?;
        let eq = a == b;
        same &= eq;
        ctx.say(format!("{} {orig}", if eq { "identical" } else { "differs" }));
    }
    if !same {
        return Err(Error::domain("replay output differs from the recorded run"));
    }
    Ok(())
}
