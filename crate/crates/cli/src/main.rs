//! `ordpath`: bounds, constructions, certified path finding and exact
//! searches for ordered paths.
//!
//! Exit status: 0 found or success, 1 not found (best effort) or invalid
//! certificate, 2 usage or input error, 3 resource limit, 4 internal
//! invariant violation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ordered_paths::cnf::{decode_cnf_model, encode_cnf, model_to_coloring, parse_model};
use ordered_paths::io::{
    parse_certificate, parse_host, validate_against_host, write_certificate, write_coloring, write_graph_edges,
    write_graph_matrix, write_trace, HostFile,
};
use ordered_paths::ramsey::{find_mono, ramsey_upper_bound, Mode};
use ordered_paths::render::{render_matrix, Annotations};
use ordered_paths::search::{
    compute_ramsey_exact, search_ramsey_witness, search_turan_max, EdgeOrder, Optimality, RamseyOutcome, SearchConfig,
    DEFAULT_NODE_BUDGET,
};
use ordered_paths::turan::{
    bipartite_turan_number, extremal_band, extremal_bipartite, extremal_star, find_path_bipartite, find_path_in_dense,
    turan_log_bound, turan_number_ap,
};
use ordered_paths::{Color, Error, Found, OrderedColoring, OrderedGraph, PathFamily, PathSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "ordpath", version, about = "Ordered Ramsey and Turán tools for alternating paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a proven bound and the formula it comes from.
    Bound(BoundArgs),
    /// Find a path copy in a coloring or graph file and write its certificate.
    Find(FindArgs),
    /// Write an extremal construction.
    Construct(ConstructArgs),
    /// Exact small values by exhaustive search.
    Search(SearchArgs),
    /// Write the Ramsey instance as DIMACS CNF.
    Encode(EncodeArgs),
    /// Turn a solver model into a coloring file.
    Decode(DecodeArgs),
    /// Check a certificate against a host file.
    Verify(VerifyArgs),
    /// Draw a host file as an upper-triangular grid.
    Render(RenderArgs),
    /// Write a seeded random coloring or graph.
    Random(RandomArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Ramsey,
    Turan,
    Bipartite,
    Log,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum GraphFormat {
    #[default]
    Matrix,
    Edges,
}

#[derive(Args)]
struct PathArgs {
    #[arg(long, default_value = "ap", value_parser = parse_family)]
    family: PathFamily,
    #[arg(long = "n")]
    n: usize,
}

impl PathArgs {
    fn spec(&self) -> ordered_paths::Result<PathSpec> {
        PathSpec::new(self.family, self.n)
    }
}

fn parse_family(s: &str) -> Result<PathFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Args)]
struct BoundArgs {
    kind: BoundKind,
    #[command(flatten)]
    path: PathArgs,
    /// Host size, for the Turán-type bounds.
    #[arg(long = "N")]
    big_n: Option<usize>,
}

#[derive(Args)]
struct FindArgs {
    /// Coloring (R/B) or graph (0/1 matrix or edge list) file.
    #[arg(long)]
    host: PathBuf,
    #[command(flatten)]
    path: PathArgs,
    /// Run below the guaranteed size or density.
    #[arg(long)]
    best_effort: bool,
    /// Use the bipartite algorithm on a graph host.
    #[arg(long)]
    bipartite: bool,
    /// Certificate file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the deletion trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Print the trace grid on stderr.
    #[arg(long)]
    render: bool,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum ConstructKind {
    ExtremalStar,
    ExtremalBand,
    ExtremalBipartite,
}

#[derive(Args)]
struct ConstructArgs {
    kind: ConstructKind,
    #[arg(long = "N")]
    big_n: usize,
    #[command(flatten)]
    path: PathArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Ramsey,
    Turan,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum OrderArg {
    #[default]
    Lex,
    Diagonal,
    /// Pick the most constrained edge at every node (Ramsey search only).
    Constrained,
}

#[derive(Args)]
struct SearchArgs {
    kind: SearchKind,
    #[command(flatten)]
    path: PathArgs,
    /// Probe a single host size instead of locating the exact value.
    #[arg(long = "N")]
    big_n: Option<usize>,
    #[arg(long)]
    lo: Option<usize>,
    #[arg(long)]
    hi: Option<usize>,
    #[arg(long, env = "ORDPATH_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 8)]
    split_depth: usize,
    #[arg(long, value_enum, default_value_t)]
    order: OrderArg,
    /// Directory for witness files.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    path: PathArgs,
    #[arg(long = "N")]
    big_n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    #[command(flatten)]
    path: PathArgs,
    #[arg(long = "N")]
    big_n: usize,
    /// Solver output or a plain literal list.
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the check that the coloring has no monochromatic copy.
    #[arg(long)]
    raw: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    host: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Coloring,
    Graph,
}

#[derive(Args)]
struct RandomArgs {
    kind: RandomKind,
    #[arg(long = "N")]
    big_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability of red, or of an edge.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Exact edge count for graphs; overrides `--p`.
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: GraphFormat,
}

/// Outcome of a command that did not fail.
enum Status {
    Done,
    NotFound,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Done) => ExitCode::SUCCESS,
        Ok(Status::NotFound) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::ResourceLimit { .. }) => 3,
        Some(Error::InvariantViolation(_)) | Some(Error::EncodingBug(_)) => 4,
        Some(Error::InvalidCertificate(_)) => 1,
        _ => 2,
    }
}

fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Bound(a) => bound(a),
        Command::Find(a) => find(a),
        Command::Construct(a) => construct(a),
        Command::Search(a) => search(a),
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a),
        Command::Verify(a) => verify(a),
        Command::Render(a) => render(a),
        Command::Random(a) => random(a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_host(path: &Path) -> anyhow::Result<HostFile> {
    parse_host(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn graph_text(g: &OrderedGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Matrix => write_graph_matrix(g),
        GraphFormat::Edges => write_graph_edges(g),
    }
}

fn need_n(big_n: Option<usize>, what: &str) -> anyhow::Result<usize> {
    big_n.with_context(|| format!("{what} needs --N"))
}

fn bound(a: BoundArgs) -> anyhow::Result<Status> {
    let spec = a.path.spec()?;
    let n = spec.n();
    let (value, formula) = match a.kind {
        BoundKind::Ramsey => {
            let v = ramsey_upper_bound(&spec)?;
            let f = match spec.family() {
                PathFamily::Pll | PathFamily::Pgg => format!("3n-4 with n={n}"),
                _ => format!("2n-2+floor((sqrt(2(n-2)^2+(-1)^n)-1)/2) with n={n}"),
            };
            (v as u64, f)
        }
        BoundKind::Turan => {
            let big_n = need_n(a.big_n, "a Turán bound")?;
            match spec.family() {
                PathFamily::Ap | PathFamily::Pgl => (
                    turan_number_ap(big_n, n)?,
                    format!("C(n-1,2)+(n-2)(N-n+1) with N={big_n}, n={n} (exact)"),
                ),
                PathFamily::Pll | PathFamily::Pgg => (
                    turan_log_bound(big_n, n)?,
                    format!("2^(t-1) n^2 (t+1), t=1+floor(log2(N/n)) with N={big_n}, n={n} (upper bound)"),
                ),
                PathFamily::Mp => bail!("no Turán bound implemented for the monotone path"),
            }
        }
        BoundKind::Bipartite => {
            let big_n = need_n(a.big_n, "the bipartite bound")?;
            (
                bipartite_turan_number(big_n, n)?,
                format!("(n/2-1)(N-n/2+1) with N={big_n}, n={n}"),
            )
        }
        BoundKind::Log => {
            let big_n = need_n(a.big_n, "the logarithmic bound")?;
            (
                turan_log_bound(big_n, n)?,
                format!("2^(t-1) n^2 (t+1), t=1+floor(log2(N/n)) with N={big_n}, n={n}"),
            )
        }
    };
    println!("{value}");
    println!("{formula}");
    Ok(Status::Done)
}

fn find(a: FindArgs) -> anyhow::Result<Status> {
    let spec = a.path.spec()?;
    let host = load_host(&a.host)?;
    let mode = if a.best_effort { Mode::BestEffort } else { Mode::Strict };
    let found: Option<Found> = match &host {
        HostFile::Coloring(c) => find_mono(c, &spec, mode)?,
        HostFile::Graph(g) => {
            let bipartite = a.bipartite || matches!(spec.family(), PathFamily::Pll | PathFamily::Pgg);
            if bipartite {
                find_path_bipartite(g, &spec, mode)?
            } else {
                find_path_in_dense(g, &spec, mode)?
            }
        }
    };
    let Some(found) = found else {
        eprintln!("no copy of {spec} found: no edge survived the deletions");
        return Ok(Status::NotFound);
    };
    validate_against_host(&found.certificate, host.n_vertices(), &host)
        .map_err(|e| Error::InvariantViolation(format!("certificate failed re-validation: {e}")))?;
    if let Some(p) = &a.trace {
        emit(Some(p), &write_trace(&found.trace))?;
    }
    if a.render {
        eprint!("{}", render_matrix(Annotations::Trace(&found.trace)));
    }
    emit(a.out.as_deref(), &write_certificate(&found.certificate, host.n_vertices()))?;
    Ok(Status::Done)
}

fn construct(a: ConstructArgs) -> anyhow::Result<Status> {
    let (big_n, n) = (a.big_n, a.path.n);
    let g = match a.kind {
        ConstructKind::ExtremalStar => extremal_star(big_n, n)?,
        ConstructKind::ExtremalBand => extremal_band(big_n, n)?,
        ConstructKind::ExtremalBipartite => extremal_bipartite(big_n, n, a.path.family)?,
    };
    let text = graph_text(&g, a.format);
    match &a.out {
        Some(p) => {
            emit(Some(p), &text)?;
            println!("{} edges", g.edge_count());
        }
        None => {
            print!("{text}");
            eprintln!("{} edges", g.edge_count());
        }
    }
    Ok(Status::Done)
}

fn search_config(a: &SearchArgs) -> SearchConfig {
    SearchConfig {
        node_budget: a.budget,
        threads: a.threads.max(1),
        split_depth: a.split_depth,
        order: match a.order {
            OrderArg::Lex => EdgeOrder::Lexicographic,
            OrderArg::Diagonal => EdgeOrder::Diagonal,
            OrderArg::Constrained => EdgeOrder::Constrained,
        },
    }
}

fn write_witness(dir: Option<&Path>, name: &str, text: &str) -> anyhow::Result<()> {
    if let Some(dir) = dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        println!("witness written to {}", path.display());
    }
    Ok(())
}

fn search(a: SearchArgs) -> anyhow::Result<Status> {
    let spec = a.path.spec()?;
    let cfg = search_config(&a);
    let dir = a.out_dir.as_deref();
    match a.kind {
        SearchKind::Ramsey => match a.big_n {
            Some(big_n) => {
                let r = search_ramsey_witness(&spec, big_n, &cfg)?;
                match &r.outcome {
                    RamseyOutcome::WitnessFound(c) => {
                        println!("witness N={big_n} nodes={}", r.nodes_explored);
                        write_witness(dir, &format!("witness_{spec}_N{big_n}.txt"), &write_coloring(c))?;
                    }
                    RamseyOutcome::Exhausted => println!("exhausted N={big_n} nodes={}", r.nodes_explored),
                }
            }
            None => {
                let window = match (a.lo, a.hi) {
                    (Some(lo), Some(hi)) => Some((lo, hi)),
                    (None, None) => None,
                    _ => bail!("--lo and --hi go together"),
                };
                let exact = compute_ramsey_exact(&spec, window, &cfg)?;
                println!("{}", exact.value);
                println!(
                    "witness on N={}, exhausted at N={} after {} nodes",
                    exact.value - 1,
                    exact.value,
                    exact.exhaustion_nodes
                );
                write_witness(
                    dir,
                    &format!("witness_{spec}_N{}.txt", exact.value - 1),
                    &write_coloring(&exact.witness),
                )?;
            }
        },
        SearchKind::Turan => {
            let big_n = need_n(a.big_n, "a Turán search")?;
            let r = search_turan_max(&spec, big_n, &cfg)?;
            println!("{}", r.max_edges);
            let how = match r.proof_of_optimality {
                Optimality::Exhaustive => "exhaustive",
                Optimality::BranchAndBound => "branch-and-bound",
            };
            println!("{how}, {} nodes", r.nodes_explored);
            write_witness(dir, &format!("turan_{spec}_N{big_n}.txt"), &graph_text(&r.witness, a.format))?;
        }
    }
    Ok(Status::Done)
}

fn encode(a: EncodeArgs) -> anyhow::Result<Status> {
    let spec = a.path.spec()?;
    emit(a.out.as_deref(), &encode_cnf(&spec, a.big_n).to_dimacs())?;
    Ok(Status::Done)
}

fn decode(a: DecodeArgs) -> anyhow::Result<Status> {
    let spec = a.path.spec()?;
    let model = parse_model(&read(&a.model)?)?;
    let c: OrderedColoring = if a.raw {
        model_to_coloring(a.big_n, &model)?
    } else {
        decode_cnf_model(&spec, a.big_n, &model)?
    };
    emit(a.out.as_deref(), &write_coloring(&c))?;
    Ok(Status::Done)
}

fn verify(a: VerifyArgs) -> anyhow::Result<Status> {
    let host = load_host(&a.host)?;
    let text = read(&a.cert)?;
    let (cert, big_n) = parse_certificate(&text).with_context(|| format!("parsing {}", a.cert.display()))?;
    validate_against_host(&cert, big_n, &host)?;
    println!("valid {} copy", cert.spec);
    Ok(Status::Done)
}

fn render(a: RenderArgs) -> anyhow::Result<Status> {
    let text = match load_host(&a.host)? {
        HostFile::Coloring(c) => render_matrix(Annotations::Coloring(&c)),
        HostFile::Graph(g) => render_matrix(Annotations::Graph(&g)),
    };
    print!("{text}");
    Ok(Status::Done)
}

fn random(a: RandomArgs) -> anyhow::Result<Status> {
    if !(0.0..=1.0).contains(&a.p) {
        bail!("--p must lie in [0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let text = match a.kind {
        RandomKind::Coloring => write_coloring(&OrderedColoring::from_fn(a.big_n, |_, _| {
            if rng.random_bool(a.p) {
                Color::Red
            } else {
                Color::Blue
            }
        })),
        RandomKind::Graph => {
            let g = match a.edges {
                Some(m) => {
                    let mut pairs: Vec<(usize, usize)> =
                        (1..=a.big_n).flat_map(|i| (i + 1..=a.big_n).map(move |j| (i, j))).collect();
                    if m > pairs.len() {
                        bail!("{m} edges requested but K_{} has {}", a.big_n, pairs.len());
                    }
                    let (sample, _) = pairs.partial_shuffle(&mut rng, m);
                    OrderedGraph::from_edges(a.big_n, sample.iter().copied())?
                }
                None => OrderedGraph::from_fn(a.big_n, |_, _| rng.random_bool(a.p)),
            };
            graph_text(&g, a.format)
        }
    };
    emit(a.out.as_deref(), &text)?;
    Ok(Status::Done)
}
