use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rvc_core::oracle::{reproduce_theorem_2_1, TableRow, DEFAULT_NODE_BUDGET};
use rvc_core::verify::{Verifier, DEFAULT_PATH_BUDGET};
use rvc_core::{
    auto_method, block_decomposition, color_with, ear_decomposition, exact_rvc, is_2_connected, parse_graph,
    BlockDecomposition, Certificate, Coloring, ColoringRecord, EarDecomposition, Error, Graph, Method,
    OracleResult, RainbowMode, SearchBudget,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Parser, Debug)]
#[command(name = "rvc", version, about = "Rainbow vertex-connection colorings: construct, verify, search")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Worker threads for verification (default: available processors).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed echoed in reports; no command draws randomness otherwise.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ear decomposition or block decomposition of a graph.
    Decompose(DecomposeArgs),
    /// Construct a coloring within the proven bound and verify it.
    Color(ColorArgs),
    /// Check a coloring for rainbow (or revised rainbow) vertex-connectivity.
    Verify(VerifyArgs),
    /// Exact rainbow vertex-connection number of a small graph.
    Exact(ExactArgs),
    /// Closed form, construction and exact search for cycles, side by side.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Search node budget.
    #[arg(long, env = "RVC_NODE_BUDGET")]
    node_budget: Option<u64>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct DecomposeKind {
    #[arg(long)]
    ears: bool,
    #[arg(long)]
    blocks: bool,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    /// Edge-list file, or `-` for stdin.
    input: PathBuf,
    #[command(flatten)]
    kind: DecomposeKind,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Cycle,
    TwoConnected,
    Blocks,
}

#[derive(Args, Debug)]
struct ColorArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    graph: PathBuf,
    /// Coloring: a JSON coloring record, a JSON array, or whitespace-separated colors.
    coloring: PathBuf,
    #[arg(long)]
    revised: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct ExactArgs {
    input: PathBuf,
    #[arg(long)]
    revised: bool,
    /// Largest order the search accepts.
    #[arg(long, default_value_t = rvc_core::oracle::DEFAULT_MAX_VERTICES)]
    max_n: usize,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value_t = 11)]
    max_exact_n: usize,
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Exit codes of the command-line contract.
mod exit {
    pub const OK: u8 = 0;
    pub const COUNTEREXAMPLE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const INTERNAL: u8 = 4;
    pub const INCONCLUSIVE: u8 = 5;
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::SelfLoop(_) | Error::VertexOutOfRange { .. } | Error::DimensionMismatch { .. } => {
                exit::INPUT
            }
            Error::Disconnected
            | Error::NotTwoConnected
            | Error::Precondition(_)
            | Error::NoEar
            | Error::OverBudget { .. } => exit::PRECONDITION,
            Error::ConstructionFailed(..) => exit::INTERNAL,
            Error::BudgetExhausted { .. } => exit::INCONCLUSIVE,
        };
        let mut message = e.to_string();
        if let Error::OverBudget { max, .. } = e {
            let _ = write!(message, " (raise --max-n above {max} to search anyway; the search is exponential)");
        }
        Failure { code, message }
    }
}

impl Failure {
    fn input(message: String) -> Self {
        Failure { code: exit::INPUT, message }
    }
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunReport<T: Serialize> {
    command: Vec<String>,
    inputs: Vec<InputDigest>,
    seed: u64,
    node_budget: u64,
    output: T,
}

struct Input {
    text: String,
    digest: InputDigest,
}

fn read_input(path: &FsPath) -> Result<Input, Failure> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
    };
    let sha256 = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::input(format!("{}: not UTF-8", path.display())))?;
    Ok(Input { text, digest: InputDigest { path: path.display().to_string(), sha256 } })
}

fn read_graph(path: &FsPath) -> Result<(Graph, InputDigest), Failure> {
    let input = read_input(path)?;
    let g = parse_graph(&input.text).map_err(|e| Failure { message: format!("{}: {e}", path.display()), ..e.into() })?;
    Ok((g, input.digest))
}

/// Colors from a JSON coloring record, a JSON array, or plain text.
fn parse_colors(text: &str) -> Result<Vec<usize>, String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let record: ColoringRecord = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if record.n != record.colors.len() {
            return Err(format!("record says n = {} but lists {} colors", record.n, record.colors.len()));
        }
        return Ok(record.colors);
    }
    if trimmed.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| e.to_string());
    }
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .map(|tok| tok.parse::<usize>().map_err(|_| format!("not a color id: {tok:?}")))
        .collect()
}

struct Context {
    format: Format,
    seed: u64,
    command: Vec<String>,
}

impl Context {
    fn emit<T: Serialize>(&self, inputs: Vec<InputDigest>, node_budget: u64, output: T, human: String) {
        match self.format {
            Format::Human => print!("{human}"),
            Format::Structured => {
                let report = RunReport { command: self.command.clone(), inputs, seed: self.seed, node_budget, output };
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            }
        }
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum DecompositionOutput {
    Ears(EarDecomposition),
    Blocks(BlockDecomposition),
}

fn cmd_decompose(ctx: &Context, args: &DecomposeArgs) -> Result<u8, Failure> {
    let (g, digest) = read_graph(&args.input)?;
    if args.kind.ears {
        if !is_2_connected(&g) {
            return Err(Error::NotTwoConnected.into());
        }
        let d = ear_decomposition(&g)?;
        if let Err(why) = d.check(&g) {
            return Err(Failure { code: exit::INTERNAL, message: format!("decomposition failed its own check: {why}") });
        }
        let mut human = d.to_text();
        if d.heuristic {
            human.push_str("note: ear search hit its budget; ears are long but maybe not longest\n");
        }
        ctx.emit(vec![digest], 0, DecompositionOutput::Ears(d), human);
    } else {
        let bd = block_decomposition(&g)?;
        let mut human = format!("blocks {}\ncut_vertices {}\n", bd.blocks.len(), join(&bd.cut_vertices));
        for b in &bd.blocks {
            let _ = writeln!(human, "block {}", join(b));
        }
        let _ = writeln!(human, "t {}", bd.t());
        ctx.emit(vec![digest], 0, DecompositionOutput::Blocks(bd), human);
    }
    Ok(exit::OK)
}

fn certify(g: &Graph, c: &Coloring, mode: RainbowMode, budget: u64) -> Result<Certificate, Failure> {
    Ok(Verifier::new(g, c, mode)?.with_budget(budget).certify()?)
}

#[derive(Serialize)]
struct ColorOutput {
    coloring: ColoringRecord,
    certificate: Certificate,
}

fn cmd_color(ctx: &Context, args: &ColorArgs) -> Result<u8, Failure> {
    let (g, digest) = read_graph(&args.input)?;
    if g.n() == 0 {
        return Err(Error::Precondition("empty graph".into()).into());
    }
    if !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    let method = match args.method {
        MethodArg::Auto => auto_method(&g),
        MethodArg::Cycle => Method::Cycle,
        MethodArg::TwoConnected => Method::TwoConnected,
        MethodArg::Blocks => Method::Blocks,
    };
    let coloring = color_with(&g, method)?;
    let budget = args.budget.node_budget.unwrap_or(DEFAULT_PATH_BUDGET);
    let certificate = match certify(&g, &coloring, RainbowMode::rainbow(), budget) {
        Ok(cert) => cert,
        Err(f) if f.code == exit::INCONCLUSIVE => {
            return Err(Failure { message: format!("could not re-verify the coloring: {}", f.message), ..f })
        }
        Err(f) => return Err(f),
    };
    if let Some((u, v)) = certificate.failing_pair {
        return Err(Failure {
            code: exit::INTERNAL,
            message: format!("constructed coloring failed verification: no rainbow path between {u} and {v}"),
        });
    }
    let record = ColoringRecord::new(&coloring, method.name());
    let human = format!(
        "method {}\nreported_count {}\ncolors {}\nverified rainbow\n",
        method.name(),
        record.reported_count,
        join(&record.colors)
    );
    ctx.emit(vec![digest], budget, ColorOutput { coloring: record, certificate }, human);
    Ok(exit::OK)
}

fn mode_name(mode: RainbowMode) -> &'static str {
    if mode.is_revised() {
        "revised rainbow"
    } else {
        "rainbow"
    }
}

fn cmd_verify(ctx: &Context, args: &VerifyArgs) -> Result<u8, Failure> {
    let (g, graph_digest) = read_graph(&args.graph)?;
    let input = read_input(&args.coloring)?;
    let colors =
        parse_colors(&input.text).map_err(|e| Failure::input(format!("{}: {e}", args.coloring.display())))?;
    let coloring = Coloring::new(&g, colors)?;
    let mode = if args.revised { RainbowMode::revised() } else { RainbowMode::rainbow() };
    let budget = args.budget.node_budget.unwrap_or(DEFAULT_PATH_BUDGET);
    let certificate = certify(&g, &coloring, mode, budget)?;
    let (human, code) = match certificate.failing_pair {
        None => (format!("verified {}\nreported_count {}\n", mode_name(mode), coloring.reported_count()), exit::OK),
        Some((u, v)) => {
            (format!("counterexample: no {} path between {u} and {v}\n", mode_name(mode)), exit::COUNTEREXAMPLE)
        }
    };
    ctx.emit(vec![graph_digest, input.digest], budget, certificate, human);
    Ok(code)
}

#[derive(Serialize)]
struct ExactOutput {
    mode: RainbowMode,
    #[serde(flatten)]
    result: OracleResult,
}

fn cmd_exact(ctx: &Context, args: &ExactArgs) -> Result<u8, Failure> {
    let (g, digest) = read_graph(&args.input)?;
    let mode = if args.revised { RainbowMode::revised() } else { RainbowMode::rainbow() };
    let node_budget = args.budget.node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let budget = SearchBudget::default().with_max_vertices(args.max_n).with_node_budget(node_budget);
    let result = exact_rvc(&g, mode, budget)?;
    eprintln!("elapsed {:.3}s", result.elapsed.as_secs_f64());
    let label = if args.revised { "rvc*" } else { "rvc" };
    let human = format!(
        "{label} {}\nwitness {}\nnodes_expanded {}\n",
        result.value,
        join(result.witness.colors()),
        result.nodes_expanded
    );
    ctx.emit(vec![digest], node_budget, ExactOutput { mode, result }, human);
    Ok(exit::OK)
}

fn cmd_table(ctx: &Context, args: &TableArgs) -> Result<u8, Failure> {
    if args.max_n < 3 {
        return Err(Error::Precondition("--max-n must be at least 3".into()).into());
    }
    let node_budget = args.budget.node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let max_exact = args.max_exact_n.min(args.max_n);
    let budget = SearchBudget::default().with_max_vertices(max_exact.max(3)).with_node_budget(node_budget);
    let start = Instant::now();
    let rows = reproduce_theorem_2_1(max_exact, args.max_n, budget)?;
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    let mut human = String::from("n constructed exact closed_form agrees\n");
    for r in &rows {
        let exact = r.exact.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(human, "{} {} {} {} {}", r.n, r.constructed, exact, r.closed_form, if r.agrees() { "yes" } else { "NO" });
    }
    let bad: Option<&TableRow> = rows.iter().find(|r| !r.agrees());
    ctx.emit(vec![], node_budget, &rows, human);
    match bad {
        None => Ok(exit::OK),
        Some(r) => {
            eprintln!("error: row n = {} disagrees with the closed form {}", r.n, r.closed_form);
            Ok(exit::COUNTEREXAMPLE)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let ctx = Context { format: cli.format, seed: cli.seed, command: std::env::args().skip(1).collect() };
    let outcome = match &cli.command {
        Command::Decompose(a) => cmd_decompose(&ctx, a),
        Command::Color(a) => cmd_color(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
        Command::Exact(a) => cmd_exact(&ctx, a),
        Command::Table(a) => cmd_table(&ctx, a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
