use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use walkgauge::graph::families::Family;
use walkgauge::graph::io::{encode_graph6, parse_graph, write_edge_list};
use walkgauge::graph::{enumerate_unicyclic_with_limit, EnumerationLimit, Graph};
use walkgauge::report::{InvariantReport, ReportOptions};
use walkgauge::theorems::{self, BoundPolynomials, VerificationReport};
use walkgauge::walk::simulate::{simulate_hitting_time_with_cap, WalkStats, DEFAULT_STEP_CAP};
use walkgauge::{Error, HittingTimeMatrix};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "walkgauge",
    version,
    about = "Exact random-walk and resistance invariants of graphs"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every invariant of one graph
    Invariants(InvariantsArgs),
    /// Run a theorem check or exhaustive sweep
    Verify(VerifyArgs),
    /// List unicyclic graphs of order n up to isomorphism
    Enumerate(EnumerateArgs),
    /// Estimate a hitting time by simulation and compare with the exact value
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list or graph6 file ("-" for standard input)
    path: Option<PathBuf>,
    /// Built-in family: C:n, S:n,l or P:n,l
    #[arg(long, conflicts_with = "path")]
    family: Option<Family>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    /// Compute every available path and fail on any exact mismatch
    #[arg(long)]
    verify: bool,
    /// Use the Laplacian path even for unicyclic graphs
    #[arg(long)]
    laplacian: bool,
    /// Reject graphs that are not unicyclic
    #[arg(long)]
    unicyclic_only: bool,
    /// Add decimal companions (15 significant digits)
    #[arg(long)]
    approx: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Identities,
    Trees,
    ExtremalCc,
    ExtremalRc,
    Bounds,
    FamilyBounds,
    CcLowerMin,
    F1Discrepancy,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Pretty-print each report
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    format: GraphFormat,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_STEP_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    step_cap: u64,
}

#[derive(Serialize)]
struct SimulationOutput {
    from: usize,
    to: usize,
    exact: String,
    exact_approx: String,
    z_score: f64,
    within_three_se: bool,
    #[serde(flatten)]
    stats: WalkStats,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeLimitExceeded { .. } | Error::StepCapExceeded { .. } => EXIT_LIMIT,
        Error::Internal(_)
        | Error::SingularMatrix
        | Error::DivisionByZero
        | Error::DimensionMismatch { .. } => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(family) = input.family {
        return Ok(family.build()?);
    }
    let text = match input.path.as_deref() {
        None => return Err(Failure::Usage("give an input path or --family".into())),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(p) => std::fs::read_to_string(p)?,
    };
    Ok(parse_graph(&text)?)
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T, pretty: bool) -> io::Result<()> {
    let s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    writeln!(out, "{}", s.expect("reports serialize"))
}

fn invariants(args: &InvariantsArgs) -> Result<bool, Failure> {
    let g = read_graph(&args.input)?;
    let opts = ReportOptions {
        force_laplacian: args.laplacian,
        verify: args.verify,
        unicyclic_only: args.unicyclic_only,
        approx: args.approx,
    };
    let report = InvariantReport::compute(&g, opts)?;
    let mut out = io::stdout().lock();
    match args.format {
        ReportFormat::Json => emit(&mut out, &report, true)?,
        ReportFormat::Csv => out.write_all(report.to_csv(args.approx).as_bytes())?,
    }
    for m in &report.mismatches {
        eprintln!("mismatch: {m}");
    }
    Ok(report.mismatches.is_empty())
}

fn verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let limit = EnumerationLimit::from_env();
    let reports: Vec<VerificationReport> = match args.check {
        Check::Identities => vec![theorems::verify_identities(
            args.n_max.or(args.n).unwrap_or(7),
            limit,
        )?],
        Check::Trees => vec![theorems::verify_trees(
            args.n_max.or(args.n).unwrap_or(8),
            limit,
        )?],
        Check::ExtremalCc => match (args.n, args.n_max) {
            (Some(n), _) => vec![theorems::verify_extremal_cc(n, limit)?],
            (None, Some(hi)) => (3..=hi)
                .map(|n| theorems::verify_extremal_cc(n, limit))
                .collect::<Result<_, _>>()?,
            (None, None) => return Err(Failure::Usage("extremal-cc needs --n or --n-max".into())),
        },
        Check::ExtremalRc => match (args.n, args.n_max) {
            (Some(n), _) => vec![theorems::verify_extremal_rc(n, limit)?],
            (None, Some(hi)) => (3..=hi)
                .map(|n| theorems::verify_extremal_rc(n, limit))
                .collect::<Result<_, _>>()?,
            (None, None) => return Err(Failure::Usage("extremal-rc needs --n or --n-max".into())),
        },
        Check::Bounds => match (args.n, args.l, args.n_max) {
            (Some(n), Some(l), _) => vec![theorems::verify_bounds_nl(n, l, limit)?],
            (Some(n), None, _) => {
                let polys = BoundPolynomials::default();
                let mut out = Vec::new();
                for l in 3..=n {
                    let parts = theorems::verify_bounds_nl_parts(n, l, limit, &polys)?;
                    out.extend(parts);
                }
                out
            }
            (None, _, Some(hi)) => vec![theorems::verify_bounds_sweep(hi, limit)?],
            (None, _, None) => return Err(Failure::Usage("bounds needs --n or --n-max".into())),
        },
        Check::FamilyBounds => vec![theorems::verify_family_bounds(
            args.n_max.or(args.n).unwrap_or(30),
        )?],
        Check::CcLowerMin => match args.n {
            Some(n) => vec![theorems::check_corollary_4_1(n)],
            None => vec![theorems::check_corollary_4_1_range(
                6,
                args.n_max.unwrap_or(100),
            )],
        },
        Check::F1Discrepancy => {
            let exhaustive = args.n_max.unwrap_or(8);
            vec![theorems::f1_discrepancy_report(
                exhaustive,
                args.n.unwrap_or(10),
                limit,
            )?]
        }
    };
    let mut out = io::stdout().lock();
    let mut ok = true;
    for r in &reports {
        emit(&mut out, r, args.pretty)?;
        ok &= r.status != theorems::Status::Fail;
    }
    Ok(ok)
}

fn enumerate(args: &EnumerateArgs) -> Result<bool, Failure> {
    let limit = EnumerationLimit::from_env();
    let stream = enumerate_unicyclic_with_limit(args.n, limit)?;
    let mut out = io::stdout().lock();
    let mut count = 0usize;
    for g in stream {
        count += 1;
        if args.count_only {
            continue;
        }
        match args.format {
            GraphFormat::Graph6 => writeln!(out, "{}", encode_graph6(&g))?,
            GraphFormat::Edgelist => writeln!(out, "{}", write_edge_list(&g))?,
        }
    }
    if args.count_only {
        writeln!(out, "{count}")?;
    } else {
        eprintln!("{count} graphs");
    }
    Ok(true)
}

fn simulate(args: &SimulateArgs) -> Result<bool, Failure> {
    let g = read_graph(&args.input)?;
    g.check_vertex(args.from)?;
    g.check_vertex(args.to)?;
    let stats = simulate_hitting_time_with_cap(
        &g,
        args.from,
        args.to,
        args.trials,
        args.seed,
        args.step_cap,
    )?;
    let exact = HittingTimeMatrix::compute(&g)?
        .get(args.from, args.to)
        .clone();
    let z = stats.z_score(exact.to_f64());
    let output = SimulationOutput {
        from: args.from,
        to: args.to,
        exact: exact.to_string(),
        exact_approx: exact.approx_string(),
        z_score: z,
        within_three_se: z.abs() <= 3.0,
        stats,
    };
    emit(&mut io::stdout().lock(), &output, true)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool");
    }
    let result = match &cli.command {
        Command::Invariants(a) => invariants(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Simulate(a) => simulate(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
