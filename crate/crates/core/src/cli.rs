//! The `rainbow` command line.
//!
//! Exit codes: 0 when every verdict is checked or vacuous, 1 on usage or
//! I/O errors, 2 when a bound violation is detected.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{Outcome, TheoremId};
use crate::census::{count_rainbow_bruteforce, count_rainbow_fast};
use crate::error::Error;
use crate::experiment::{run_experiment, ExperimentConfig, Model};
use crate::friendship::theorem9_verdict;
use crate::generators;
use crate::graph::EdgeColoredGraph;
use crate::io::{parse_ecg_document, write_ecg_with_comments, EcgDocument};
use crate::reduction::{check_minimal_structure, edge_minimalize, removed_edges};
use crate::report::{render_verdicts, Provenance, Report};
use crate::verify::{verify, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow triangle census and color-degree bound checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Summary, triangle census and minimality of a graph file.
    Analyze(AnalyzeArgs),
    /// Evaluate bounds on a graph file.
    Verify(VerifyArgs),
    /// Write the edge-minimal reduction of a graph file.
    Reduce(ReduceArgs),
    /// Search for a rainbow friendship subgraph.
    Friendship(FriendshipArgs),
    /// Run seeded random trials and tabulate verdicts.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    RainbowComplete,
    RainbowTuran,
    ProperBipartite,
    Example2,
    Example3,
    Friendship,
    Gnp,
    HighCdeg,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum, value_name = "FAMILY")]
    family_pos: Option<Family>,
    #[arg(long, value_enum, conflicts_with = "family_pos")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    colors: Option<u64>,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "brute")]
    fast: bool,
    /// Use the O(n^3) reference counter.
    #[arg(long)]
    brute: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long)]
    theorems: String,
    #[arg(long)]
    reduce_first: bool,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    file: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct FriendshipArgs {
    file: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Gnp,
    HighCdeg,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Smallest order; also the largest unless --n-max is given.
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long)]
    colors: Option<u64>,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long)]
    reduce_first: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Lib(#[from] Error),
}

type CliResult = Result<i32, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let command_line: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, command_line) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, command_line: Vec<String>) -> CliResult {
    match command {
        Command::Gen(a) => gen(a),
        Command::Analyze(a) => analyze(a, command_line),
        Command::Verify(a) => verify_cmd(a, command_line),
        Command::Reduce(a) => reduce(a),
        Command::Friendship(a) => friendship(a),
        Command::Experiment(a) => experiment(a),
    }
}

fn read_doc(path: &Path) -> Result<EcgDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_ecg_document(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Seed recorded by `gen` in a `seed: S` comment.
fn seed_from_comments(comments: &[String]) -> Option<u64> {
    comments
        .iter()
        .find_map(|c| c.strip_prefix("seed:").and_then(|s| s.trim().parse().ok()))
}

fn need<T>(value: Option<T>, flag: &str, family: Family) -> Result<T, CliError> {
    value.ok_or_else(|| {
        let name = family.to_possible_value().expect("no skipped variants").get_name().to_string();
        CliError::Usage(format!("--{flag} is required for family {name}"))
    })
}

fn gen(a: GenArgs) -> CliResult {
    let family = a
        .family
        .or(a.family_pos)
        .ok_or_else(|| CliError::Usage("a family is required (positional or --family)".into()))?;
    let name = family.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut comments = vec![format!("family: {name}")];
    let mut params = Vec::new();
    let g: EdgeColoredGraph = match family {
        Family::RainbowComplete => {
            let n = need(a.n, "n", family)?;
            params.push(format!("n={n}"));
            generators::rainbow_complete(n)
        }
        Family::RainbowTuran => {
            let (n, k) = (need(a.n, "n", family)?, need(a.k, "k", family)?);
            params.push(format!("n={n} k={k}"));
            generators::rainbow_turan(n, k)?
        }
        Family::ProperBipartite => {
            let m = match (a.m, a.n) {
                (Some(m), _) => m,
                (None, Some(n)) if n % 2 == 0 => n / 2,
                _ => return Err(CliError::Usage("--m (or an even --n) is required for family proper-bipartite".into())),
            };
            params.push(format!("m={m}"));
            generators::proper_complete_bipartite(m)?
        }
        Family::Example2 => {
            let n = need(a.n, "n", family)?;
            params.push(format!("n={n}"));
            generators::example2(n)?
        }
        Family::Example3 => {
            let n = need(a.n, "n", family)?;
            params.push(format!("n={n}"));
            generators::example3(n)?
        }
        Family::Friendship => {
            let k = need(a.k, "k", family)?;
            params.push(format!("k={k}"));
            generators::friendship_underlying(k)?
        }
        Family::Gnp => {
            let n = need(a.n, "n", family)?;
            let p = a.p.unwrap_or(0.5);
            let colors = a.colors.unwrap_or(n.max(1) as u64);
            params.push(format!("n={n} p={p} colors={colors}"));
            comments.push(format!("seed: {}", a.seed));
            generators::random_colored(n, p, colors, a.seed)?
        }
        Family::HighCdeg => {
            let n = need(a.n, "n", family)?;
            let target = a.target.unwrap_or((n + 2) / 2);
            params.push(format!("n={n} target={target}"));
            comments.push(format!("seed: {}", a.seed));
            generators::random_high_color_degree(n, target, a.seed)?
        }
    };
    comments.insert(1, format!("params: {}", params.join(" ")));
    let text = write_ecg_with_comments(&g, &comments);
    match &a.out {
        Some(path) => {
            write_file(path, &text)?;
            println!("wrote {}: n = {}, e = {}", path.display(), g.vertex_count(), g.edge_count());
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn file_notes(doc: &EcgDocument) -> Vec<String> {
    doc.comments.iter().map(|c| format!("file: {c}")).collect()
}

fn analyze(a: AnalyzeArgs, command_line: Vec<String>) -> CliResult {
    let doc = read_doc(&a.file)?;
    let g = &doc.graph;
    let census = if a.brute { count_rainbow_bruteforce(g) } else { count_rainbow_fast(g) };
    let provenance = Provenance::new(command_line, seed_from_comments(&doc.comments));
    let mut report = Report::new(g, census, provenance).with_order_notes();
    report.notes.extend(file_notes(&doc));
    if a.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs, command_line: Vec<String>) -> CliResult {
    let theorems = TheoremId::parse_list(&a.theorems).map_err(|e| CliError::Usage(e.to_string()))?;
    if theorems.is_empty() {
        return Err(CliError::Usage("--theorems lists no theorem".into()));
    }
    let doc = read_doc(&a.file)?;
    let g = &doc.graph;
    let opts = VerifyOptions::new(theorems).reduce_first(a.reduce_first).with_k(a.k);
    let out = verify(g, &opts)?;
    let provenance = Provenance::new(command_line, seed_from_comments(&doc.comments));
    let mut report = Report::new(g, count_rainbow_fast(g), provenance).with_order_notes();
    report.verdicts = out.verdicts.clone();
    report.witness = out.witness.clone();
    report.notes.extend(out.notes.iter().cloned());
    report.notes.extend(file_notes(&doc));
    if a.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_verdicts(&report.verdicts));
        for note in &report.notes {
            println!("note: {note}");
        }
        println!(
            "{} checked, {} vacuous, {} violated",
            out.count(Outcome::Checked),
            out.count(Outcome::Vacuous),
            out.count(Outcome::Violated)
        );
    }
    Ok(if out.any_violation() { EXIT_VIOLATION } else { EXIT_OK })
}

fn reduce(a: ReduceArgs) -> CliResult {
    let doc = read_doc(&a.file)?;
    let g = &doc.graph;
    let r = edge_minimalize(g);
    let removed = removed_edges(g, &r);
    let mut comments = vec![format!("edge-minimal reduction of {}", a.file.display())];
    comments.extend(doc.comments.iter().cloned());
    write_file(&a.out, &write_ecg_with_comments(&r, &comments))?;

    let mut out = String::new();
    let _ = writeln!(out, "edges: {} -> {} ({} removed)", g.edge_count(), r.edge_count(), removed.len());
    for e in &removed {
        let _ = writeln!(out, "removed {} {} color {}", e.u, e.v, e.color);
    }
    let _ = writeln!(out, "vertex  color degree before  after");
    let mut preserved = true;
    for v in g.vertices() {
        let (before, after) = (g.color_degree(v), r.color_degree(v));
        preserved &= before == after;
        let _ = writeln!(out, "{v:>6}  {before:>19}  {after:>5}");
    }
    let _ = writeln!(out, "color degrees preserved: {}", if preserved { "yes" } else { "NO" });
    let m = check_minimal_structure(&r);
    let _ = writeln!(
        out,
        "edge-minimal: {}  monochromatic C3: {}  monochromatic P4: {}  star forests: {}",
        yes_no(m.is_minimal),
        m.mono_c3_found.map_or("none".into(), |t| format!("{t:?}")),
        m.mono_p4_found.map_or("none".into(), |t| format!("{t:?}")),
        if m.all_star_forests() { "all" } else { "NOT all" }
    );
    let _ = writeln!(out, "wrote {}", a.out.display());
    print!("{out}");
    Ok(if preserved && m.is_minimal { EXIT_OK } else { EXIT_VIOLATION })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn friendship(a: FriendshipArgs) -> CliResult {
    let doc = read_doc(&a.file)?;
    let fv = theorem9_verdict(&doc.graph, a.k);
    if a.json {
        println!("{}", serde_json::to_string_pretty(&fv).expect("verdict is serializable"));
    } else {
        match &fv.witness {
            Some(w) => {
                println!("witness for k = {} centered at {}", a.k, w.center);
                for (x, y) in &w.triangles {
                    println!("  triangle {} {} {}", w.center, x, y);
                }
            }
            None => println!("no rainbow friendship subgraph with k = {}", a.k),
        }
        println!("centered at a maximum monochromatic degree vertex: {}", yes_no(fv.centered_at_max_mono));
        print!("{}", render_verdicts(std::slice::from_ref(&fv.verdict)));
    }
    Ok(if fv.verdict.outcome() == Outcome::Violated { EXIT_VIOLATION } else { EXIT_OK })
}

fn experiment(a: ExperimentArgs) -> CliResult {
    let theorems = TheoremId::parse_list(&a.theorems).map_err(|e| CliError::Usage(e.to_string()))?;
    let model = match a.model {
        ModelKind::Gnp => Model::Gnp { p: a.p, colors: a.colors },
        ModelKind::HighCdeg => Model::HighCdeg { target: a.target },
    };
    let cfg = ExperimentConfig {
        model,
        trials: a.trials,
        seed: a.seed,
        n_min: a.n,
        n_max: a.n_max.unwrap_or(a.n),
        theorems,
        reduce_first: a.reduce_first,
    };
    let summary = run_experiment(&cfg)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary is serializable"));
    } else {
        print!("{}", summary.render_table());
    }
    Ok(if summary.any_violation() { EXIT_VIOLATION } else { EXIT_OK })
}
