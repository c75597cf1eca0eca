use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zagreb::enumerate::{brace_census, extremal_scan, EnumSpec, ExtremalReport};
use zagreb::families::{s_n_m, FamilyId};
use zagreb::indices::em1;
use zagreb::operations::{apply, OperationKind, RewriteSpec};
use zagreb::verify::{
    verify_lemma_on, verify_theorem, Claim, LemmaCorpus, LemmaOptions, TheoremOptions, Verdict,
};
use zagreb::{graph6, Graph, IndexId};

/// Zagreb indices, EM1 rewrites, extremal families and exhaustive checks.
#[derive(Parser)]
#[command(name = "zagreb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate indices for graph6 lines read from a file or stdin.
    Compute(ComputeArgs),
    /// Apply one rewrite operation and report the EM1 change.
    Transform(TransformArgs),
    /// Print members of a named family as graph6 lines.
    Families(FamiliesArgs),
    /// Exhaustive min/max scan over connected graphs of one class.
    Enumerate(EnumerateArgs),
    /// Check a theorem or lemma and print a JSON verdict.
    Verify(VerifyArgs),
    /// List the pendant-free graphs of a class, one canonical graph6 per line.
    BraceCensus(CensusArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file; stdin when absent or "-".
    input: Option<PathBuf>,
    /// Index to evaluate; repeat or comma-separate. Default: all four.
    #[arg(long, value_delimiter = ',')]
    index: Vec<IndexId>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Read one graph in "n m / u v" edge-list form instead of graph6.
    #[arg(long)]
    edge_list: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long)]
    op: OperationKind,
    /// The graph, as a graph6 string.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Operation II path, comma-separated.
    #[arg(long, value_delimiter = ',')]
    path: Vec<usize>,
    /// Operation III root.
    #[arg(long)]
    root: Option<usize>,
    /// Operation III subtree vertices, comma-separated.
    #[arg(long, value_delimiter = ',')]
    subtree: Vec<usize>,
    /// Operation III neighbour of the root on the kept side.
    #[arg(long)]
    y: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Star,
    Cycle,
    /// S_n^m; needs --m.
    #[value(name = "s-n-m")]
    SnM,
    #[value(name = "s-n-k4")]
    SnK4,
}

#[derive(Args)]
struct FamiliesArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Order or inclusive range such as 4..8.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Edge count for s-n-m: absolute ("9") or relative to n ("n+2").
    #[arg(long, value_parser = parse_size)]
    m: Option<Size>,
    /// Print "n,graph6,em1" rows instead of bare graph6 lines.
    #[arg(long)]
    em1: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Order or inclusive range such as 4..7.
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long)]
    cyclomatic: usize,
    #[arg(long, default_value = "em1")]
    index: IndexId,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    /// Lift the default order caps (at most a few hours at n = 9, c = 3).
    #[arg(long)]
    allow_large: bool,
    /// Keep every labeled witness instead of one per isomorphism class.
    #[arg(long)]
    labeled: bool,
    /// Emit CSV (header plus one row per order) instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// theorem-1..theorem-5 or lemma-1..lemma-4.
    claim: Claim,
    /// Orders for theorem claims.
    #[arg(long, value_parser = parse_range, default_value = "4..8")]
    n: RangeInclusive<usize>,
    /// Seed for the random part of the lemma corpus.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random graphs in the lemma corpus.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Every connected graph up to this order joins the lemma corpus.
    #[arg(long, default_value_t = 7)]
    exhaustive_n: usize,
    /// Lemma verdicts with fewer exercised sites are inconclusive.
    #[arg(long, default_value_t = 1)]
    min_sites: u64,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    cyclomatic: usize,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug)]
enum Size {
    Absolute(usize),
    Relative(isize),
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

fn parse_size(s: &str) -> Result<Size, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = t.strip_prefix('n') {
        if rest.is_empty() {
            return Ok(Size::Relative(0));
        }
        return rest
            .parse::<isize>()
            .map(Size::Relative)
            .map_err(|_| format!("expected n, n+k or n-k, got {s:?}"));
    }
    t.parse().map(Size::Absolute).map_err(|_| format!("bad edge count {s:?}"))
}

/// Command output plus whether a verification failed.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String> {
    match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn compute(args: ComputeArgs) -> Result<Outcome> {
    let text = read_input(&args.input)?;
    let graphs = if args.edge_list {
        vec![Graph::from_edge_list(&text)?]
    } else {
        graph6::decode_lines(&text)?
    };
    let indices = if args.index.is_empty() {
        IndexId::ALL.to_vec()
    } else {
        args.index
    };
    let rows: Vec<(String, IndexId, u128)> = graphs
        .iter()
        .flat_map(|g| {
            let line = graph6::encode(g);
            indices.iter().map(move |&i| (line.clone(), i, i.evaluate(g).value))
        })
        .collect();
    let text = match args.format {
        Format::Csv => {
            let mut s = String::from("graph6,index,value\n");
            for (line, i, v) in &rows {
                s.push_str(&format!("{line},{i},{v}\n"));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(line, i, v)| json!({"graph6": line, "index": i, "value": v}))
                .collect();
            serde_json::to_string_pretty(&rows)?
        }
    };
    emit(&args.out, &text)?;
    Ok(Outcome::ok(String::new()))
}

fn transform(args: TransformArgs) -> Result<Outcome> {
    let g = graph6::decode(&args.graph).map_err(|e| anyhow!("--graph: {e}"))?;
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| anyhow!("operation {} needs --{flag}", args.op));
    let spec = match args.op {
        OperationKind::I => RewriteSpec::I {
            u: need(args.u, "u")?,
            v: need(args.v, "v")?,
        },
        OperationKind::II => {
            if args.path.is_empty() {
                bail!("operation II needs --path");
            }
            RewriteSpec::II { path: args.path }
        }
        OperationKind::III => {
            if args.subtree.is_empty() {
                bail!("operation III needs --subtree");
            }
            RewriteSpec::III {
                root: need(args.root, "root")?,
                subtree: args.subtree,
                y: need(args.y, "y")?,
            }
        }
        OperationKind::IV => RewriteSpec::IV {
            u: need(args.u, "u")?,
            v: need(args.v, "v")?,
        },
    };
    let r = apply(&g, &spec)?;
    let report = json!({
        "schema": 1,
        "site": spec,
        "before": graph6::encode(&g),
        "after": graph6::encode(&r.graph),
        "em1_before": r.em1_before,
        "em1_after": r.em1_after,
        "delta": r.delta(),
        "relabeling": r.relabeling,
    });
    emit(&args.out, &serde_json::to_string_pretty(&report)?)?;
    Ok(Outcome::ok(String::new()))
}

fn families(args: FamiliesArgs) -> Result<Outcome> {
    let mut out = String::new();
    if args.em1 {
        out.push_str("n,graph6,em1\n");
    }
    for n in args.n.clone() {
        let g = match args.family {
            FamilyName::Path => FamilyId::Path.build(n)?,
            FamilyName::Star => FamilyId::Star.build(n)?,
            FamilyName::Cycle => FamilyId::Cycle.build(n)?,
            FamilyName::SnK4 => FamilyId::SnK4.build(n)?,
            FamilyName::SnM => match args.m.ok_or_else(|| anyhow!("s-n-m needs --m"))? {
                Size::Relative(k) => FamilyId::SnM(k).build(n)?,
                Size::Absolute(m) => s_n_m(n, m)?,
            },
        };
        let line = graph6::encode(&g);
        if args.em1 {
            out.push_str(&format!("{n},{line},{}\n", em1(&g)));
        } else {
            out.push_str(&line);
            out.push('\n');
        }
    }
    emit(&args.out, &out)?;
    Ok(Outcome::ok(String::new()))
}

fn enumerate(args: EnumerateArgs) -> Result<Outcome> {
    let specs: Vec<EnumSpec> = args
        .n
        .clone()
        .map(|n| {
            EnumSpec::new(n, args.cyclomatic)
                .workers(args.workers)
                .allow_large(args.allow_large)
                .dedup(!args.labeled)
        })
        .collect();
    for s in &specs {
        s.validate()?;
    }
    let reports = specs
        .iter()
        .map(|s| extremal_scan(s, args.index))
        .collect::<Result<Vec<ExtremalReport>, _>>()?;
    let text = if args.csv {
        let mut s = format!("{}\n", ExtremalReport::csv_header());
        for r in &reports {
            s.push_str(&r.csv_row());
            s.push('\n');
        }
        s
    } else if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])?
    } else {
        serde_json::to_string_pretty(&reports)?
    };
    emit(&args.out, &text)?;
    Ok(Outcome::ok(String::new()))
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    let report = if args.claim.is_theorem() {
        let options = TheoremOptions {
            workers: args.workers,
            allow_large: args.allow_large,
        };
        verify_theorem(args.claim, *args.n.start(), *args.n.end(), options)?
    } else {
        if args.trials == 0 {
            bail!("--trials must be at least 1");
        }
        let corpus = LemmaCorpus::build(args.exhaustive_n, args.trials, args.seed, args.workers)?;
        let options = LemmaOptions {
            min_sites: args.min_sites,
        };
        verify_lemma_on(args.claim, &corpus, options)?
    };
    emit(&args.out, &report.to_json())?;
    let summary = match report.verdict {
        Verdict::Pass => format!("{}: pass", report.claim),
        Verdict::Fail => format!(
            "{}: FAIL with {} counterexample(s)",
            report.claim, report.counterexample_count
        ),
        Verdict::Inconclusive => format!("{}: inconclusive", report.claim),
    };
    Ok(Outcome {
        text: summary,
        failed: report.verdict != Verdict::Pass,
    })
}

fn census(args: CensusArgs) -> Result<Outcome> {
    let spec = EnumSpec::new(args.n, args.cyclomatic)
        .workers(args.workers)
        .allow_large(args.allow_large);
    let forms = brace_census(&spec)?;
    let mut out = String::new();
    for f in &forms {
        out.push_str(f.as_str());
        out.push('\n');
    }
    emit(&args.out, &out)?;
    Ok(Outcome::ok(format!("{} pendant-free class(es)", forms.len())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Transform(a) => transform(a),
        Command::Families(a) => families(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
        Command::BraceCensus(a) => census(a),
    };
    match result {
        Ok(outcome) => {
            if !outcome.text.is_empty() {
                eprintln!("{}", outcome.text);
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok(4..=8));
        assert_eq!(parse_range("4..=8"), Ok(4..=8));
        assert_eq!(parse_range("6"), Ok(6..=6));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn sizes() {
        assert!(matches!(parse_size("n+2"), Ok(Size::Relative(2))));
        assert!(matches!(parse_size("n"), Ok(Size::Relative(0))));
        assert!(matches!(parse_size("n-1"), Ok(Size::Relative(-1))));
        assert!(matches!(parse_size("9"), Ok(Size::Absolute(9))));
        assert!(parse_size("m+1").is_err());
    }

    #[test]
    fn parser_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
