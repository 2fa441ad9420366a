//! Command-line front end: analyze graphs, construct families, run the
//! spanning-subgraph extraction, and drive verification campaigns.
//!
//! Exit codes: 0 success; 1 verification fail or inconclusive; 2 bad
//! input (parse error, invalid parameters, unknown claim); 3 disconnected
//! input to `analyze`; 4 bipartite input to `extract`; 5 theorem
//! violation during extraction.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qdom::domination;
use qdom::extremal::{self, CStarParams, RootedTree};
use qdom::graph::Graph;
use qdom::report::Outcome;
use qdom::spanning::{self, ExtractError};
use qdom::spectral;
use qdom::verify::{self, VerifyOptions};

#[derive(Parser)]
#[command(name = "qdom", version, about = "Least Q-eigenvalues, domination numbers, and extremal graph checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an edge-list file: order, size, bipartiteness, odd girth,
    /// domination number, least Q-eigenpair.
    Analyze {
        /// Edge-list file (`p <n>` header, `<u> <v>` lines, `#` comments).
        path: PathBuf,
    },
    /// Construct a parametric family member and print it.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Extract a unicyclic spanning subgraph with the same odd girth and
    /// domination number.
    Extract {
        path: PathBuf,
        /// Print only the extracted subgraph's edge list.
        #[arg(long, value_enum, default_value_t = ExtractFormat::Json)]
        format: ExtractFormat,
    },
    /// Run a named verification campaign and print one JSON report per line.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    EdgeList,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtractFormat {
    /// JSON object with the subgraph and the full extraction trace.
    Json,
    /// The extracted subgraph's edge list only.
    EdgeList,
}

#[derive(Subcommand)]
enum Family {
    /// C*_{s,l}: odd cycle, path, pendant bundle.
    CStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::EdgeList)]
        format: OutputFormat,
    },
    /// Odd cycle with rooted trees attached at chosen positions.
    CycleTrees {
        /// Cycle length (odd, at least 3).
        #[arg(long)]
        k: usize,
        /// Attachment `POS:U-V,U-V,...` with tree vertices 0-based local
        /// ids rooted at 0; repeat for several trees.
        #[arg(long = "attach")]
        attachments: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::EdgeList)]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id (`qdom verify --claim list` prints them; `all` runs every
    /// campaign).
    #[arg(long)]
    claim: String,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sharded sweeps (requires the parallel build).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also dump enumerated (canonical, n, gamma, q_min, odd girth) rows.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct AnalysisRecord {
    input: String,
    n: usize,
    m: usize,
    bipartite: bool,
    odd_girth: Option<usize>,
    gamma: usize,
    q_min: f64,
    eigenvector: Vec<f64>,
    elapsed_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { path } => cmd_analyze(&path),
        Command::Construct { family } => cmd_construct(family),
        Command::Extract { path, format } => cmd_extract(&path, format),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn load_graph(path: &Path) -> Result<Graph, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    Graph::parse_edge_list(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn cmd_analyze(path: &Path) -> ExitCode {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if !g.is_connected() {
        eprintln!("error: graph is disconnected");
        return ExitCode::from(3);
    }
    let started = Instant::now();
    let odd_girth = g.odd_girth().map(|(len, _)| len);
    let gamma = match domination::gamma(&g) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let pair = match spectral::least_q_eigenpair(&g) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let bipartite = g.is_bipartite();
    // Cross-consistency of the record's own fields.
    assert_eq!(bipartite, pair.value <= 1e-9, "q_min disagrees with bipartiteness");
    assert_eq!(bipartite, odd_girth.is_none(), "odd girth disagrees with bipartiteness");
    let record = AnalysisRecord {
        input: path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        n: g.order(),
        m: g.size(),
        bipartite,
        odd_girth,
        gamma,
        q_min: pair.value,
        eigenvector: pair.vector.clone(),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", serde_json::to_string(&record).expect("plain data"));
    ExitCode::SUCCESS
}

fn print_graph(g: &Graph, format: OutputFormat) {
    match format {
        OutputFormat::EdgeList => print!("{}", g.to_edge_list()),
        OutputFormat::Dot => print!("{}", g.to_dot()),
    }
}

fn cmd_construct(family: Family) -> ExitCode {
    match family {
        Family::CStar { n, s, l, format } => match CStarParams::new(n, s, l) {
            Ok(p) => {
                print_graph(&extremal::construct_c_star(&p), format);
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Family::CycleTrees {
            k,
            attachments,
            format,
        } => {
            let mut parsed = Vec::new();
            for spec in &attachments {
                match parse_attachment(spec) {
                    Ok(pair) => parsed.push(pair),
                    Err(msg) => {
                        eprintln!("error: bad --attach `{spec}`: {msg}");
                        return ExitCode::from(2);
                    }
                }
            }
            match extremal::construct_cycle_trees(k, &parsed) {
                Ok(g) => {
                    print_graph(&g, format);
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}

fn parse_attachment(spec: &str) -> Result<(usize, RootedTree), String> {
    let (pos_text, edges_text) = spec
        .split_once(':')
        .ok_or_else(|| "expected `POS:U-V,...`".to_string())?;
    let pos: usize = pos_text.trim().parse().map_err(|_| "bad position".to_string())?;
    let mut edges = Vec::new();
    let mut max_id = 0usize;
    for part in edges_text.split(',') {
        let (u, v) = part
            .trim()
            .split_once('-')
            .ok_or_else(|| format!("bad edge `{part}`"))?;
        let u: usize = u.trim().parse().map_err(|_| "bad vertex id".to_string())?;
        let v: usize = v.trim().parse().map_err(|_| "bad vertex id".to_string())?;
        max_id = max_id.max(u).max(v);
        edges.push((u, v));
    }
    let g = Graph::build(max_id + 1, &edges).map_err(|e| e.to_string())?;
    let tree = RootedTree::new(g, 0).map_err(|e| e.to_string())?;
    Ok((pos, tree))
}

#[derive(Serialize)]
struct ExtractOutput<'a> {
    h: String,
    trace: &'a spanning::ExtractionTrace,
}

fn cmd_extract(path: &Path, format: ExtractFormat) -> ExitCode {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match spanning::extract_unicyclic(&g) {
        Ok((h, trace)) => {
            match format {
                ExtractFormat::Json => {
                    let out = ExtractOutput {
                        h: h.to_edge_list(),
                        trace: &trace,
                    };
                    println!("{}", serde_json::to_string(&out).expect("plain data"));
                }
                ExtractFormat::EdgeList => print!("{}", h.to_edge_list()),
            }
            ExitCode::SUCCESS
        }
        Err(ExtractError::Bipartite) => {
            eprintln!("error: input graph is bipartite");
            ExitCode::from(4)
        }
        Err(ExtractError::Disconnected) => {
            eprintln!("error: input graph is disconnected");
            ExitCode::from(3)
        }
        Err(e @ ExtractError::TheoremViolation { .. }) => {
            eprintln!("theorem violation: {e}");
            eprintln!(
                "{}",
                serde_json::json!({
                    "error": e.to_string(),
                    "input": g.to_edge_list(),
                })
            );
            ExitCode::from(5)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.claim == "list" {
        for id in verify::CLAIM_IDS {
            println!("{id}");
        }
        return ExitCode::SUCCESS;
    }
    if let Some(jobs) = args.jobs {
        configure_jobs(jobs);
    }
    let opts = VerifyOptions {
        max_n: args.max_n,
        n: args.n,
        gamma: args.gamma,
        s: args.s,
        k: args.k,
        trials: args.trials,
        seed: args.seed,
    };
    let claims: Vec<&str> = if args.claim == "all" {
        verify::CLAIM_IDS.to_vec()
    } else {
        vec![args.claim.as_str()]
    };

    let mut clean = true;
    for claim in claims {
        match verify::run_claim(claim, &opts) {
            Ok(reports) => {
                for r in &reports {
                    println!("{}", r.to_json());
                    if r.outcome != Outcome::Pass {
                        clean = false;
                    }
                }
            }
            Err(verify::VerifyError::UnknownClaim(id)) => {
                eprintln!("error: unknown claim `{id}`");
                return ExitCode::from(2);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }

    if let Some(csv_path) = &args.csv {
        if let Err(code) = write_csv(csv_path, &opts) {
            return code;
        }
    }

    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_csv(path: &Path, opts: &VerifyOptions) -> Result<(), ExitCode> {
    use qdom::enumerate::{classes_csv, enumerate_connected, ClassFilter};
    let n = opts.n.or(opts.max_n).unwrap_or(6);
    let filter = ClassFilter {
        nonbipartite: true,
        gamma: opts.gamma,
        ..ClassFilter::default()
    };
    let classes = enumerate_connected(n, &filter).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    let csv = classes_csv(&classes).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    std::fs::write(path, csv).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    Ok(())
}

fn configure_jobs(jobs: usize) {
    if let Err(msg) = qdom::parallel::configure_threads(jobs) {
        eprintln!("note: {msg}");
    }
}
