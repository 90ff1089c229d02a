mod bounds;
mod campaigns;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlambda::constructions::FamilyParams;
use hyperlambda::report::write_csv;
use hyperlambda::schemes::{run_scheme, scheme_greedy};
use hyperlambda::{lambda_exact, Hypergraph, Optimum, RawHypergraph, SolveBudget};
use serde_json::json;

const EXIT_INPUT: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "hyperlambda", version, about = "L(h,k)-colouring of hypergraphs")]
struct Cli {
    /// Worker threads for the solver and subset enumeration.
    #[arg(long, global = true, env = "HYPERLAMBDA_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated hypergraph as canonical JSON.
    Gen(GenArgs),
    /// Validate a JSON hypergraph and print its structure summary.
    Validate(ValidateArgs),
    /// Compute or bound the L(h,k)-chromatic number.
    Lambda(LambdaArgs),
    /// Evaluate the spectral, expansion and upper-bound inequalities.
    Bounds(BoundsArgs),
    /// Run a named reproduction campaign.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Star,
    Hyperpath,
    Hypertree,
    Random,
    Path,
    Cycle,
    Petersen,
    Fano,
    Cube,
    Product,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    max_rank: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Left factor of a product, e.g. `star:3,1,2`.
    #[arg(long)]
    left: Option<FamilyParams>,
    /// Right factor of a product, e.g. `complete:3`.
    #[arg(long)]
    right: Option<FamilyParams>,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    input: PathBuf,
    /// Also write the canonical JSON form here.
    #[arg(long)]
    canonical: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Search nodes before giving up with a bracket.
    #[arg(long, default_value_t = 500_000_000)]
    node_limit: u64,
    /// Wall-clock seconds before giving up with a bracket.
    #[arg(long, default_value_t = 300)]
    time_limit: u64,
    /// Start the exact search at this span instead of the greedy one.
    #[arg(long)]
    max_span: Option<u32>,
}

impl BudgetArgs {
    fn budget(&self, jobs: usize) -> SolveBudget {
        let mut b = SolveBudget::default().with_node_limit(self.node_limit).with_jobs(jobs);
        b.time_limit = Duration::from_secs(self.time_limit);
        b.max_span = self.max_span;
        b
    }
}

#[derive(Clone, Debug)]
enum Method {
    Exact,
    Greedy,
    Scheme(String),
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Method::Exact),
            "greedy" => Ok(Method::Greedy),
            _ => match s.strip_prefix("scheme:") {
                Some(name) if !name.is_empty() => Ok(Method::Scheme(name.to_string())),
                _ => Err(format!("expected exact, greedy or scheme:<name>, got {s:?}")),
            },
        }
    }
}

#[derive(Args)]
struct LambdaArgs {
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    h: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// `exact`, `greedy` or `scheme:<name>`.
    #[arg(long, default_value = "exact")]
    method: Method,
    /// Write the colouring as JSON here.
    #[arg(long)]
    witness: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct BoundsArgs {
    input: PathBuf,
    /// Known λ(H); computed exactly when absent.
    #[arg(long)]
    lambda: Option<u32>,
    /// Add the strong-partition, stable-set, greedy, Gonçalves and
    /// line-colouring upper bounds.
    #[arg(long)]
    upper: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct ReproduceArgs {
    name: campaigns::Campaign,
    /// Corpus size for the seeded campaigns.
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

fn read_hypergraph(path: &Path) -> anyhow::Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Hypergraph::from_json(&text).with_context(|| format!("loading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn need<T: Copy>(value: Option<T>, family: &str, flag: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| anyhow!("{family} needs --{flag}"))
}

fn family_params(a: &GenArgs) -> anyhow::Result<FamilyParams> {
    Ok(match a.family {
        Family::Complete => FamilyParams::CompleteUniform { n: need(a.n, "complete", "n")?, r: a.r.unwrap_or(2) },
        Family::Star => FamilyParams::Star {
            r: need(a.r, "star", "r")?,
            c: need(a.c, "star", "c")?,
            m: need(a.m, "star", "m")?,
        },
        Family::Hyperpath => FamilyParams::Hyperpath { r: need(a.r, "hyperpath", "r")?, m: need(a.m, "hyperpath", "m")? },
        Family::Hypertree => FamilyParams::HypertreeRandom {
            r: need(a.r, "hypertree", "r")?,
            edges: need(a.edges, "hypertree", "edges")?,
            max_degree: need(a.max_degree, "hypertree", "max-degree")?,
            seed: a.seed,
        },
        Family::Random => FamilyParams::RandomSimple {
            n: need(a.n, "random", "n")?,
            edges: need(a.edges, "random", "edges")?,
            max_rank: a.max_rank.unwrap_or(3),
            seed: a.seed,
        },
        Family::Path => FamilyParams::GraphPath { n: need(a.n, "path", "n")? },
        Family::Cycle => FamilyParams::GraphCycle { n: need(a.n, "cycle", "n")? },
        Family::Petersen => FamilyParams::Petersen,
        Family::Fano => FamilyParams::Fano,
        Family::Cube => FamilyParams::Hypercube { d: need(a.d, "cube", "d")? },
        Family::Product => {
            let left = a.left.clone().ok_or_else(|| anyhow!("product needs --left"))?;
            let right = a.right.clone().ok_or_else(|| anyhow!("product needs --right"))?;
            FamilyParams::Product(Box::new(left), Box::new(right))
        }
    })
}

fn cmd_gen(a: GenArgs) -> anyhow::Result<u8> {
    let params = family_params(&a)?;
    let hg = params.build()?;
    emit(a.out.as_deref(), &(hg.to_json() + "\n"))?;
    eprintln!("{params}: {} vertices, {} edges", hg.vertex_count(), hg.edge_count());
    Ok(0)
}

fn cmd_validate(a: ValidateArgs) -> anyhow::Result<u8> {
    let text = fs::read_to_string(&a.input).with_context(|| format!("reading {}", a.input.display()))?;
    let raw: RawHypergraph = serde_json::from_str(&text).context("parsing hypergraph JSON")?;
    let hg = match Hypergraph::from_raw(&raw) {
        Ok(hg) => hg,
        Err(errors) => {
            for d in &errors.0 {
                eprintln!("invalid: {d}");
            }
            return Ok(EXIT_INPUT);
        }
    };
    if let Some(p) = &a.canonical {
        fs::write(p, hg.to_json() + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    let report = json!({
        "valid": true,
        "vertices": hg.vertex_count(),
        "edges": hg.edge_count(),
        "summary": hg.structure_summary(),
    });
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(0)
}

fn cmd_lambda(a: LambdaArgs, jobs: usize) -> anyhow::Result<u8> {
    let hg = read_hypergraph(&a.input)?;
    let (h, k) = (a.h, a.k);
    let (colouring, report, code) = match &a.method {
        Method::Exact => {
            let res = lambda_exact(&hg, h, k, &a.budget.budget(jobs))?;
            let (lower, upper, certified) = match res.optimum {
                Optimum::Exact { value } => (value, value, true),
                Optimum::Bracket { lower, upper } => (lower, upper, false),
            };
            eprintln!(
                "lambda_{{{h},{k}}} {} (exact search, {} nodes)",
                if certified { format!("= {upper}") } else { format!("in [{lower}, {upper}]") },
                res.nodes_explored
            );
            let report = json!({
                "method": "exact", "h": h, "k": k,
                "lambda": certified.then_some(upper),
                "lower": lower, "upper": upper, "certified": certified,
                "nodes": res.nodes_explored,
            });
            (res.witness, report, if certified { 0 } else { EXIT_BUDGET })
        }
        Method::Greedy | Method::Scheme(_) => {
            let (name, out) = match &a.method {
                Method::Scheme(name) => (format!("scheme:{name}"), run_scheme(name, &hg, h, k)?),
                _ => ("greedy".to_string(), scheme_greedy(&hg, h, k)?),
            };
            eprintln!("lambda_{{{h},{k}}} <= {} ({name}, validated)", out.claimed_span);
            let report = json!({
                "method": name, "h": h, "k": k,
                "upper": out.claimed_span, "certified": false,
                "validated": out.validated, "fallback_used": out.fallback_used,
            });
            (out.colouring, report, 0)
        }
    };
    let mut report = report;
    if let Some(p) = &a.witness {
        fs::write(p, serde_json::to_string_pretty(&colouring)? + "\n")
            .with_context(|| format!("writing {}", p.display()))?;
        report["witness"] = json!(p.display().to_string());
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(code)
}

fn cmd_bounds(a: BoundsArgs, jobs: usize) -> anyhow::Result<u8> {
    let hg = read_hypergraph(&a.input)?;
    let lambda = match a.lambda {
        Some(l) => l,
        None => lambda_exact(&hg, 2, 1, &a.budget.budget(jobs))?.value()?,
    };
    let rows = bounds::rows(&hg, lambda, a.upper)?;
    let text = match a.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            String::from_utf8(buf)?
        }
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
    };
    emit(a.out.as_deref(), &text)?;
    let failed = rows.iter().filter(|r| !r.ok()).count();
    eprintln!("{} rows, {failed} violated (lambda = {lambda})", rows.len());
    Ok(if failed > 0 { EXIT_VIOLATION } else { 0 })
}

fn cmd_reproduce(a: ReproduceArgs, jobs: usize) -> anyhow::Result<u8> {
    let report = campaigns::run(a.name, a.count, a.seed, jobs)?;
    for note in &report.notes {
        println!("  {note}");
    }
    match report.failures.first() {
        None => {
            println!("{}: PASS ({} cases)", a.name, report.cases);
            Ok(0)
        }
        Some(first) => {
            println!("{}: FAIL ({} of {} cases failed)", a.name, report.failures.len(), report.cases);
            println!("  first failing case: {first}");
            Ok(EXIT_VIOLATION)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<hyperlambda::Error>() {
        Some(hyperlambda::Error::BudgetExhausted) => EXIT_BUDGET,
        Some(hyperlambda::Error::SchemeFailed(_)) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let jobs = match cli.jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => {
            rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
            j
        }
        None => rayon::current_num_threads(),
    };
    match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Lambda(a) => cmd_lambda(a, jobs),
        Command::Bounds(a) => cmd_bounds(a, jobs),
        Command::Reproduce(a) => cmd_reproduce(a, jobs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_parsing() {
        assert!(matches!("exact".parse(), Ok(Method::Exact)));
        assert!(matches!("greedy".parse(), Ok(Method::Greedy)));
        assert!(matches!("scheme:star".parse(), Ok(Method::Scheme(n)) if n == "star"));
        assert!("scheme:".parse::<Method>().is_err());
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["hyperlambda", "reproduce", "star-product-97"]).unwrap();
        assert!(matches!(cli.command, Command::Reproduce(ReproduceArgs { name: campaigns::Campaign::StarProduct97, .. })));
    }
}
