mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use symlab::budget::DEFAULT_BUDGET;
use symlab::corpus::CorpusSpec;
use symlab::invariants::compute_report;
use symlab::verifier::{self, Status, TheoremReport};
use symlab::{Budget, BudgetExceeded, InvariantReport, Selection};

use input::{emit_as, parse_as, read_source, Format, GraphInput};

const USAGE_ERROR: u8 = 2;
const BUDGET_ERROR: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "symlab", version, about = "Distinguishing number, cost and determining number of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of one graph.
    Compute(ComputeArgs),
    /// Check the registered claims over graph corpora.
    Verify(VerifyArgs),
    /// Convert between edge-list and graph6.
    Convert(ConvertArgs),
    /// List registered check ids.
    ListChecks,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Invariant {
    #[value(name = "D")]
    D,
    Rho,
    Det,
    All,
}

impl Invariant {
    fn selection(self) -> Selection {
        match self {
            Invariant::D => Selection::D_ONLY,
            Invariant::Rho => Selection { rho: true, det: false },
            Invariant::Det => Selection { rho: false, det: true },
            Invariant::All => Selection::ALL,
        }
    }
}

#[derive(Debug, clap::Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "all")]
    invariant: Invariant,
    /// Search-node budget per computation.
    #[arg(long, env = "SYMLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Emit the JSON report instead of a table.
    #[arg(long)]
    json: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Re-check the witnesses of a JSON report against the graph instead
    /// of computing.
    #[arg(long, value_name = "REPORT")]
    check_witness: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// `default` or a comma-separated list of check ids.
    #[arg(long, value_delimiter = ',', default_value = "default")]
    suite: Vec<String>,
    /// Corpus overriding each check's default.
    #[arg(long)]
    corpus: Option<String>,
    #[arg(long)]
    json: bool,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
    /// Search-node budget per computation.
    #[arg(long, env = "SYMLAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Format,
    #[arg(long, value_enum)]
    to: Format,
    /// Input file, `-` for stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn table(r: &InvariantReport) -> String {
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut rows = vec![
        ("graph6", r.graph6.clone()),
        ("n", r.n.to_string()),
        ("|Aut|", r.aut_order.to_string()),
        ("D", r.d.to_string()),
    ];
    if let Some(rho) = r.rho {
        rows.push(("rho", rho.to_string()));
    }
    if let Some(det) = r.det {
        rows.push(("det", det.to_string()));
    }
    let labels: Vec<usize> = r.witness_labeling.iter().map(|&l| l as usize).collect();
    rows.push(("labeling", join(&labels)));
    if let Some(sizes) = &r.class_sizes {
        rows.push(("classes", join(sizes)));
    }
    if let Some(set) = &r.witness_det_set {
        rows.push(("det set", join(set)));
    }
    rows.iter().map(|(k, v)| format!("{k:<10}{v}\n")).collect()
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let g = args.input.load()?;
    let budget = Budget::new(args.budget);
    if let Some(path) = &args.check_witness {
        let report: InvariantReport = serde_json::from_str(&read_source(path)?)
            .with_context(|| format!("parsing report {}", path.display()))?;
        let problems = report.check_witness(&g, &budget)?;
        if problems.is_empty() {
            write_output(args.output.as_ref(), "witness ok\n")?;
            return Ok(ExitCode::SUCCESS);
        }
        for p in &problems {
            eprintln!("witness problem: {p}");
        }
        return Ok(ExitCode::FAILURE);
    }
    let report = compute_report(&g, args.invariant.selection(), &budget)?;
    let text = if args.json {
        serde_json::to_string_pretty(&report)? + "\n"
    } else {
        table(&report)
    };
    write_output(args.output.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn describe(reports: &[TheoremReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.summary());
        out.push('\n');
        if let Some(cx) = &r.counterexample {
            out.push_str(&format!("    counterexample {} ({}): {}\n", cx.graph6, cx.label, cx.values));
            out.push_str(&format!("    replay: {}\n", cx.replay));
        }
        for note in &r.notes {
            out.push_str(&format!("    note: {note}\n"));
        }
    }
    out
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let corpus: Option<CorpusSpec> = args.corpus.as_deref().map(str::parse).transpose()?;
    let ids: Vec<&str> = args.suite.iter().map(|s| s.trim()).collect();
    // Unknown ids are usage errors; report them before any work starts.
    verifier::resolve(&ids)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool.build()?;
    let reports = pool.install(|| verifier::run_suite(&ids, corpus.as_ref(), args.budget))?;
    let text = if args.json {
        serde_json::to_string_pretty(&reports)? + "\n"
    } else {
        describe(&reports)
    };
    write_output(args.output.as_ref(), &text)?;
    let counted = || reports.iter().filter(|r| !r.informative);
    Ok(if counted().any(|r| r.status == Status::Counterexample) {
        ExitCode::FAILURE
    } else if counted().any(|r| r.status == Status::BudgetExceeded) {
        ExitCode::from(BUDGET_ERROR)
    } else {
        ExitCode::SUCCESS
    })
}

fn convert(args: ConvertArgs) -> Result<ExitCode> {
    let text = read_source(&args.input)?;
    let g = parse_as(args.from, &text)?;
    write_output(args.output.as_ref(), &emit_as(args.to, &g))?;
    Ok(ExitCode::SUCCESS)
}

fn list_checks() -> Result<ExitCode> {
    let mut out = String::new();
    for c in verifier::checks() {
        out.push_str(&format!("{:<17}{:<22}{}\n", c.id, c.default_corpus.split(':').next().unwrap_or(""), c.statement));
    }
    write_output(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Convert(args) => convert(args),
        Command::ListChecks => list_checks(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<BudgetExceeded>().is_some() {
                ExitCode::from(BUDGET_ERROR)
            } else {
                ExitCode::from(USAGE_ERROR)
            }
        }
    }
}
