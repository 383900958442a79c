//! `corona-color`: build corona products, color them equitably with
//! route-tagged certificates, decide small instances exactly, and verify.
//!
//! Exit codes: 0 success / decision yes, 1 decision no or verification
//! mismatch, 2 usage or input errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use corona_color::colorers::{
    dispatch, Certificate, CertificateJson, Claim, HShape,
};
use corona_color::io::{
    read_coloring_file, read_dimacs_file, write_dimacs,
};
use corona_color::verifier::{
    bundled_suite, survey_table, verify_certificate, SurveyOutcome, SurveyRow,
};
use corona_color::{
    chromatic_number, corona_power, equitable_chromatic_number, is_equitably_k_colorable,
    Coloring, CoronaLayout, CoronaSpec, Graph, SearchLimits,
};

#[derive(Parser)]
#[command(name = "corona-color", version, about)]
struct Cli {
    /// Seed for randomized tie-breaking. All shipped constructions are
    /// deterministic; the flag is accepted for script compatibility and
    /// affects nothing.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a corona product and emit it as DIMACS.
    Gen(GenArgs),
    /// Produce an equitable coloring certificate for a corona product.
    Color(ColorArgs),
    /// Exact decisions on a graph: equitable k-colorability, the equitable
    /// chromatic number, or the chromatic number.
    Oracle(OracleArgs),
    /// Verify a certificate against the product it claims to color.
    Verify(VerifyArgs),
    /// Run a suite of instances through the dispatcher and cross-check the
    /// claims.
    Survey(SurveyArgs),
}

#[derive(Args)]
struct GraphSourceArgs {
    /// Base graph as a DIMACS file.
    #[arg(long = "g", value_name = "FILE")]
    g_file: Option<PathBuf>,
    /// Base graph family: path, cycle, complete or multipartite.
    #[arg(long, value_name = "KIND", conflicts_with = "g_file")]
    g_family: Option<String>,
    /// Vertex count for --g-family path/cycle/complete.
    #[arg(long, value_name = "N")]
    g_size: Option<usize>,
    /// Comma-separated part sizes for --g-family multipartite.
    #[arg(long, value_name = "SIZES")]
    g_parts: Option<String>,
}

impl GraphSourceArgs {
    fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.g_file {
            return read_dimacs_file(path)
                .with_context(|| format!("reading {}", path.display()));
        }
        let family = self
            .g_family
            .as_deref()
            .ok_or_else(|| anyhow!("either --g or --g-family is required"))?;
        build_family(family, self.g_size, self.g_parts.as_deref())
    }
}

#[derive(Args)]
struct ShapeArgs {
    /// Attachment kind: complete, cycle, path or multipartite.
    #[arg(long, value_name = "KIND")]
    h_kind: String,
    /// Order of the attachment for complete/cycle/path.
    #[arg(long, value_name = "N")]
    h_size: Option<usize>,
    /// Comma-separated part sizes for multipartite attachments.
    #[arg(long, value_name = "SIZES")]
    h_parts: Option<String>,
    /// Corona exponent.
    #[arg(long, default_value_t = 1)]
    l: usize,
}

impl ShapeArgs {
    fn shape(&self) -> Result<HShape> {
        match self.h_kind.as_str() {
            "complete" => Ok(HShape::Complete(self.require_size()?)),
            "cycle" => Ok(HShape::cycle(self.require_size()?)?),
            "path" => Ok(HShape::Path(self.require_size()?)),
            "multipartite" => {
                let parts = self
                    .h_parts
                    .as_deref()
                    .ok_or_else(|| anyhow!("--h-parts is required for multipartite"))?;
                Ok(HShape::Multipartite(parse_sizes(parts)?))
            }
            other => bail!("unknown --h-kind {other:?}"),
        }
    }

    fn require_size(&self) -> Result<usize> {
        self.h_size
            .ok_or_else(|| anyhow!("--h-size is required for --h-kind {}", self.h_kind))
    }
}

#[derive(Args)]
struct LimitArgs {
    /// Oracle vertex limit (env COLORER_LIMIT overrides the default).
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
    /// Oracle timeout in seconds.
    #[arg(long = "timeout-s", value_name = "S")]
    timeout_s: Option<u64>,
}

impl LimitArgs {
    fn limits(&self) -> SearchLimits {
        let mut limits = SearchLimits::default();
        if let Ok(value) = std::env::var("COLORER_LIMIT") {
            if let Ok(n) = value.parse() {
                limits.max_vertices = n;
            }
        }
        if let Some(n) = self.limit {
            limits.max_vertices = n;
        }
        if let Some(s) = self.timeout_s {
            limits.timeout = Duration::from_secs(s);
        }
        limits
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    graph: GraphSourceArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Refuse to build products larger than this.
    #[arg(long, default_value_t = corona_color::DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Write a JSON sidecar mapping dense indices to hierarchical labels.
    #[arg(long, value_name = "FILE")]
    labels: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(short, long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    graph: GraphSourceArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Coloring of the base graph as JSON; may repeat. The oracle fills in
    /// missing ones for small bases.
    #[arg(long = "g-coloring", value_name = "FILE")]
    g_colorings: Vec<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
    /// Output file (stdout when absent).
    #[arg(short, long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Graph to decide, in DIMACS format.
    graph: PathBuf,
    /// Decide equitable k-colorability for this k.
    #[arg(long, conflicts_with_all = ["chi_eq", "chi"])]
    k: Option<usize>,
    /// Compute the equitable chromatic number.
    #[arg(long = "chi-eq", conflicts_with = "chi")]
    chi_eq: bool,
    /// Compute the chromatic number.
    #[arg(long)]
    chi: bool,
    /// Cap for --chi (defaults to max degree + 1).
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    graph: GraphSourceArgs,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Certificate JSON produced by `color`.
    #[arg(long, value_name = "FILE")]
    certificate: PathBuf,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct SurveyArgs {
    /// Run the bundled desk-scale suite.
    #[arg(long, conflicts_with = "config")]
    suite: Option<String>,
    /// Instances as a JSON config file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write the outcomes as CSV.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
    /// Write the outcomes as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    #[command(flatten)]
    limits: LimitArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes a line to stdout, dying quietly in the conventional way when the
/// consumer has closed the pipe.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(141),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Color(args) => cmd_color(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Survey(args) => cmd_survey(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let shape = args.shape.shape()?;
    let h = shape.realize()?;
    let spec = CoronaSpec::new(g, h, args.shape.l)?;
    let product = corona_power(&spec, args.cap)?;
    match &args.out {
        Some(path) => {
            let file = File::create(path)?;
            write_dimacs(&product, BufWriter::new(file))?;
        }
        None => {
            let stdout = std::io::stdout();
            if let Err(e) = write_dimacs(&product, stdout.lock()) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    std::process::exit(141);
                }
                return Err(e.into());
            }
        }
    }
    if let Some(path) = &args.labels {
        let layout = CoronaLayout::new(&spec)?;
        let labels: Vec<serde_json::Value> = (0..layout.order())
            .map(|v| {
                let label = layout.label_of(v).expect("index in range");
                serde_json::json!({ "index": v, "label": label })
            })
            .collect();
        serde_json::to_writer_pretty(BufWriter::new(File::create(path)?), &labels)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(args: ColorArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let shape = args.shape.shape()?;
    let colorings: Vec<Coloring> = args
        .g_colorings
        .iter()
        .map(|p| read_coloring_file(p).with_context(|| format!("reading {}", p.display())))
        .collect::<Result<_>>()?;
    let limits = args.limits.limits();
    let cert = dispatch(&g, &colorings, &shape, args.shape.l, Some(&limits))?;
    let json = serde_json::to_string_pretty(&cert.to_json())?;
    match &args.out {
        Some(path) => {
            let mut file = File::create(path)?;
            writeln!(file, "{json}")?;
        }
        None => emit(&json)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let g = read_dimacs_file(&args.graph)
        .with_context(|| format!("reading {}", args.graph.display()))?;
    let limits = args.limits.limits();
    if let Some(k) = args.k {
        let witness = is_equitably_k_colorable(&g, k, &limits)?;
        let decision = witness.is_some();
        let json = serde_json::json!({
            "decision": decision,
            "k": k,
            "witness": witness,
        });
        emit(&serde_json::to_string_pretty(&json)?)?;
        return Ok(if decision {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    if args.chi_eq {
        let (value, witness) = equitable_chromatic_number(&g, &limits)?;
        let json = serde_json::json!({ "chi_eq": value, "witness": witness });
        emit(&serde_json::to_string_pretty(&json)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    if args.chi {
        let cap = args.cap.unwrap_or(g.max_degree() + 1);
        let value = chromatic_number(&g, cap, &limits)?;
        emit(&serde_json::json!({ "chi": value }).to_string())?;
        return Ok(ExitCode::SUCCESS);
    }
    bail!("one of --k, --chi-eq or --chi is required");
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let g = args.graph.load()?;
    let shape = args.shape.shape()?;
    let h = shape.realize()?;
    let file: CertificateJson = serde_json::from_reader(File::open(&args.certificate)?)
        .with_context(|| format!("reading {}", args.certificate.display()))?;
    if file.g_n != g.n() || file.h_n != h.n() || file.l != args.shape.l {
        bail!(
            "certificate was issued for g_n={} h_n={} l={}, flags specify {} {} {}",
            file.g_n,
            file.h_n,
            file.l,
            g.n(),
            h.n(),
            args.shape.l
        );
    }
    let spec = CoronaSpec::new(g, h, args.shape.l)?;
    let product = corona_power(&spec, corona_color::DEFAULT_ORDER_CAP)?;
    let cert = Certificate {
        spec,
        coloring: Coloring::new(file.k, file.coloring)?,
        theorem: file.theorem,
        claim: file.claim,
        claimed_k: file.k,
        sizes: file.sizes,
        permutation: file.permutation,
    };
    let limits = args.limits.limits();
    let report = verify_certificate(&product, &cert, &limits);
    emit(&serde_json::to_string_pretty(&report)?)?;
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_survey(args: SurveyArgs) -> Result<ExitCode> {
    let rows: Vec<SurveyRow> = match (&args.suite, &args.config) {
        (Some(name), None) if name == "bundled" => bundled_suite(),
        (Some(name), None) => bail!("unknown suite {name:?}; available: bundled"),
        (None, Some(path)) => load_config(path)?,
        _ => bail!("exactly one of --suite or --config is required"),
    };
    let limits = args.limits.limits();
    let outcomes = survey_table(&rows, &limits, args.jobs.max(1));
    let mismatches = outcomes.iter().filter(|o| !o.matched).count();

    for o in &outcomes {
        let theorem = o
            .theorem
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        let claim = o.claim.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        let k = o.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        let oracle = o
            .oracle_value
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into());
        emit(&format!(
            "{} route={theorem} claim={claim} k={k} oracle={oracle} match={} {}",
            o.id, o.matched, o.note
        ))?;
    }
    emit(&format!(
        "survey: {} rows, {} matched, {} mismatched",
        outcomes.len(),
        outcomes.len() - mismatches,
        mismatches
    ))?;

    if let Some(path) = &args.csv {
        write_csv(path, &outcomes)?;
    }
    if let Some(path) = &args.json {
        serde_json::to_writer_pretty(BufWriter::new(File::create(path)?), &outcomes)?;
    }
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn write_csv(path: &PathBuf, outcomes: &[SurveyOutcome]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "id,theorem,claim,k,oracle,matched,note")?;
    for o in outcomes {
        let theorem = o.theorem.map(|t| t.to_string()).unwrap_or_default();
        let claim = o.claim.map(|c| c.to_string()).unwrap_or_default();
        let k = o.k.map(|k| k.to_string()).unwrap_or_default();
        let oracle = o.oracle_value.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{theorem},{claim},{k},{oracle},{},{}",
            csv_field(&o.id),
            o.matched,
            csv_field(&o.note)
        )?;
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------------------
// Survey config file
// ---------------------------------------------------------------------------

#[derive(serde::Deserialize)]
struct ConfigRow {
    g: ConfigGraph,
    #[serde(default)]
    colorings: Vec<ConfigColoring>,
    h: ConfigShape,
    l: usize,
    #[serde(default)]
    expected: Option<ConfigExpected>,
    #[serde(default)]
    id: Option<String>,
}

#[derive(serde::Deserialize)]
struct ConfigGraph {
    #[serde(default)]
    family: Option<String>,
    #[serde(default)]
    size: Option<usize>,
    #[serde(default)]
    parts: Option<Vec<usize>>,
    #[serde(default)]
    dimacs: Option<String>,
}

#[derive(serde::Deserialize)]
struct ConfigColoring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(serde::Deserialize)]
struct ConfigShape {
    kind: String,
    #[serde(default)]
    size: Option<usize>,
    #[serde(default)]
    parts: Option<Vec<usize>>,
}

#[derive(serde::Deserialize)]
struct ConfigExpected {
    claim: String,
    k: usize,
}

fn load_config(path: &PathBuf) -> Result<Vec<SurveyRow>> {
    let rows: Vec<ConfigRow> = serde_json::from_reader(File::open(path)?)
        .with_context(|| format!("reading {}", path.display()))?;
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let g = match (&row.g.dimacs, &row.g.family) {
                (Some(file), None) => read_dimacs_file(file)
                    .with_context(|| format!("row {i}: reading {file}"))?,
                (None, Some(family)) => build_family(
                    family,
                    row.g.size,
                    row.g
                        .parts
                        .as_ref()
                        .map(|p| {
                            p.iter()
                                .map(|s| s.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        })
                        .as_deref(),
                )?,
                _ => bail!("row {i}: g needs exactly one of dimacs/family"),
            };
            let shape = match row.h.kind.as_str() {
                "complete" => HShape::Complete(
                    row.h.size.ok_or_else(|| anyhow!("row {i}: h.size required"))?,
                ),
                "cycle" => HShape::cycle(
                    row.h.size.ok_or_else(|| anyhow!("row {i}: h.size required"))?,
                )?,
                "path" => HShape::Path(
                    row.h.size.ok_or_else(|| anyhow!("row {i}: h.size required"))?,
                ),
                "multipartite" => HShape::Multipartite(
                    row.h
                        .parts
                        .clone()
                        .ok_or_else(|| anyhow!("row {i}: h.parts required"))?,
                ),
                other => bail!("row {i}: unknown h.kind {other:?}"),
            };
            let colorings = row
                .colorings
                .iter()
                .map(|c| Ok(Coloring::new(c.k, c.colors.clone())?))
                .collect::<Result<Vec<_>>>()?;
            let expected = row
                .expected
                .map(|e| -> Result<(Claim, usize)> {
                    let claim = match e.claim.as_str() {
                        "equality" => Claim::Equality,
                        "upper_bound" => Claim::UpperBound,
                        other => bail!("row {i}: unknown claim {other:?}"),
                    };
                    Ok((claim, e.k))
                })
                .transpose()?;
            Ok(SurveyRow {
                id: row.id.unwrap_or_else(|| format!("row-{i}")),
                g,
                colorings,
                shape,
                l: row.l,
                expected,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Shared parsing
// ---------------------------------------------------------------------------

fn build_family(family: &str, size: Option<usize>, parts: Option<&str>) -> Result<Graph> {
    match family {
        "path" => Ok(Graph::path(size.ok_or_else(|| anyhow!("--g-size required"))?)?),
        "cycle" => Ok(Graph::cycle(size.ok_or_else(|| anyhow!("--g-size required"))?)?),
        "complete" => Ok(Graph::complete(
            size.ok_or_else(|| anyhow!("--g-size required"))?,
        )?),
        "multipartite" => {
            let parts = parts.ok_or_else(|| anyhow!("--g-parts required for multipartite"))?;
            Ok(Graph::complete_multipartite(&parse_sizes(parts)?)?)
        }
        other => bail!("unknown family {other:?}"),
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("bad part size {s:?}"))
        })
        .collect()
}
