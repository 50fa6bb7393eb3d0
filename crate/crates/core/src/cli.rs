//! Command-line front end: `generate`, `analyze`, `verify`, `scaling`, `formulas`.
//!
//! Exit codes: 0 success, 1 unflagged verification failures, 2 usage, parse or
//! domain errors, 3 semantic precondition failures.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closeness::{closeness_from_distances, residual_closeness, residual_closeness_with, RemovalMode};
use crate::distance::{all_pairs_bfs, floyd_warshall};
use crate::edgelist::{read_edge_list, write_edge_list};
use crate::error::Error;
use crate::formulas::{list_formulas, FormulaId};
use crate::generate::{generate, FamilySpec};
use crate::graph::Graph;
use crate::transform::{line_graph, middle_graph};
use crate::verify::{
    bounds_suite, default_params, param_grid, verify_family_formula, verify_residual_structure,
    BoundAuditRecord, BoundId, BoundsReport, Corpus, StructureReport, VerificationReport,
    DEFAULT_TOLERANCE,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const THREADS_ENV: &str = "RESICLOSE_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "resiclose", version, about = "Closeness and residual closeness of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family graph as an edge list.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Destination file; the edge list goes to stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Closeness and residual closeness report for one graph.
    Analyze {
        /// Edge-list file; use `-` for stdin.
        #[arg(long, short, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Applied left to right.
        #[arg(long = "transform", value_enum)]
        transforms: Vec<Transform>,
        #[arg(long = "metrics", value_enum, default_values_t = [Metric::Closeness])]
        metrics: Vec<Metric>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check closed forms and general bounds against the oracle.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Formula ids (e.g. CM_Path) or bound ids (e.g. connected-upper).
        #[arg(long = "id", value_delimiter = ',')]
        ids: Vec<String>,
        /// Inclusive parameter range `a..b`, applied to each selected formula.
        #[arg(long)]
        range: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Runtime of all-pairs, closeness and residual sweeps on middle graphs.
    Scaling {
        #[arg(long, value_enum)]
        family: FamilyKind,
        /// `start..end:step`, inclusive.
        #[arg(long)]
        n: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the formula catalog.
    Formulas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    Wheel,
    CompleteBipartite,
    RandomTree,
    RandomRegular,
    ErdosRenyi,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Second part size for complete-bipartite.
    #[arg(long)]
    pub m: Option<usize>,
    /// Degree for random-regular.
    #[arg(long)]
    pub r: Option<usize>,
    /// Edge probability `num/den` for erdos-renyi.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Transform {
    Middle,
    Line,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Closeness,
    Residual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Formulas,
    Structure,
    Bounds,
    All,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        CliError::Lib(err) => match err {
            Error::Parse { .. }
            | Error::DuplicateEdge(..)
            | Error::SelfLoop(_)
            | Error::IndexOutOfRange { .. }
            | Error::InvalidFamilyParams { .. }
            | Error::OutOfValidityDomain { .. }
            | Error::Io(_) => EXIT_USAGE,
            _ => EXIT_PRECONDITION,
        },
    }
}

fn message(e: &CliError) -> String {
    match e {
        CliError::Usage(m) => m.clone(),
        CliError::Lib(err) => err.to_string(),
        CliError::Io(err) => err.to_string(),
    }
}

/// Worker count from `RESICLOSE_THREADS`; `None` means automatic.
pub fn configured_threads() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Parses `argv` and runs the command, writing reports to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", message(&e));
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Generate { family, output } => cmd_generate(&family, output, out),
        Command::Analyze {
            input,
            family,
            transforms,
            metrics,
            format,
        } => cmd_analyze(input, &family, &transforms, &metrics, format, out),
        Command::Verify {
            suite,
            ids,
            range,
            tolerance,
            format,
        } => cmd_verify(suite, &ids, range.as_deref(), tolerance, format, out),
        Command::Scaling { family, n, output } => cmd_scaling(family, &n, output, out, err),
        Command::Formulas => cmd_formulas(out),
    }
}

fn parse_probability(p: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("probability {p:?} must be written num/den"));
    let (num, den) = p.split_once('/').ok_or_else(bad)?;
    Ok((
        num.trim().parse().map_err(|_| bad())?,
        den.trim().parse().map_err(|_| bad())?,
    ))
}

impl FamilyArgs {
    pub fn is_set(&self) -> bool {
        self.family.is_some()
    }

    fn to_spec(&self) -> Result<FamilySpec, CliError> {
        let kind = self
            .family
            .ok_or_else(|| CliError::Usage("--family is required".into()))?;
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this family")))
        };
        let n = need(self.n, "n")?;
        let seed = self.seed;
        Ok(match kind {
            FamilyKind::Path => FamilySpec::Path { n },
            FamilyKind::Cycle => FamilySpec::Cycle { n },
            FamilyKind::Star => FamilySpec::Star { n },
            FamilyKind::Complete => FamilySpec::Complete { n },
            FamilyKind::Wheel => FamilySpec::Wheel { n },
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite {
                n,
                m: need(self.m, "m")?,
            },
            FamilyKind::RandomTree => FamilySpec::RandomTree { n, seed },
            FamilyKind::RandomRegular => FamilySpec::RandomRegular {
                n,
                r: need(self.r, "r")?,
                seed,
            },
            FamilyKind::ErdosRenyi => {
                let p = self
                    .p
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("--p is required for erdos-renyi".into()))?;
                let (num, den) = parse_probability(p)?;
                FamilySpec::ErdosRenyi { n, num, den, seed }
            }
        })
    }
}

fn cmd_generate(family: &FamilyArgs, output: Option<PathBuf>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = generate(&family.to_spec()?)?;
    match output {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(&path)?);
            write_edge_list(&g, &mut file)?;
            file.flush()?;
            writeln!(out, "n={} m={}", g.n(), g.m())?;
        }
        None => write_edge_list(&g, out)?,
    }
    Ok(EXIT_OK)
}

/// Rounds to 12 significant digits for stable textual output.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub radius: Option<u32>,
    pub per_vertex_closeness: Vec<f64>,
    pub total_closeness: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ck: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin: Option<Vec<usize>>,
}

fn load_graph(input: Option<PathBuf>, family: &FamilyArgs) -> Result<Graph, CliError> {
    match input {
        Some(path) if path.as_os_str() == "-" => Ok(read_edge_list(io::stdin().lock())?),
        Some(path) => Ok(read_edge_list(File::open(&path).map_err(|e| {
            CliError::Usage(format!("cannot open {}: {e}", path.display()))
        })?)?),
        None if family.is_set() => Ok(generate(&family.to_spec()?)?),
        None => Err(CliError::Usage("either --input or --family is required".into())),
    }
}

pub fn analyze_graph(g: &Graph, residual: bool) -> crate::error::Result<AnalyzeReport> {
    let connected = g.is_connected()?;
    let d = all_pairs_bfs(g);
    let profile = closeness_from_distances::<f64>(&d);
    let removal = if residual {
        Some(residual_closeness::<f64>(g)?)
    } else {
        None
    };
    Ok(AnalyzeReport {
        schema: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        connected,
        diameter: d.diameter(),
        radius: d.radius(),
        per_vertex_closeness: profile.per_vertex.iter().copied().map(round_sig12).collect(),
        total_closeness: round_sig12(profile.total),
        ck: removal
            .as_ref()
            .map(|r| r.ck.iter().copied().map(round_sig12).collect()),
        residual: removal.as_ref().map(|r| round_sig12(r.r_value)),
        argmin: removal.map(|r| r.argmin),
    })
}

fn cmd_analyze(
    input: Option<PathBuf>,
    family: &FamilyArgs,
    transforms: &[Transform],
    metrics: &[Metric],
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut g = load_graph(input, family)?;
    for t in transforms {
        g = match t {
            Transform::Middle => middle_graph(&g),
            Transform::Line => line_graph(&g),
        };
    }
    let report = analyze_graph(&g, metrics.contains(&Metric::Residual))?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["vertex", "kind", "closeness", "ck"])?;
            for v in 0..report.n {
                let kind = g.kind(v).map(|k| k.to_string()).unwrap_or_default();
                let ck = report
                    .ck
                    .as_ref()
                    .map(|c| c[v].to_string())
                    .unwrap_or_default();
                w.write_record([
                    v.to_string(),
                    kind,
                    report.per_vertex_closeness[v].to_string(),
                    ck,
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Usage(format!("range {s:?} must look like a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[derive(Debug, Serialize)]
struct Summary {
    cases: usize,
    passed: usize,
    failed: usize,
    flagged: usize,
}

#[derive(Debug, Serialize)]
struct VerifyOutput<'a> {
    schema: u32,
    tolerance: f64,
    formulas: &'a [VerificationReport],
    structure: &'a [StructureReport],
    bounds: &'a [BoundAuditRecord],
    flagged: Vec<&'a BoundAuditRecord>,
    summary: Summary,
}

fn cmd_verify(
    suite: Suite,
    ids: &[String],
    range: Option<&str>,
    tolerance: f64,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut formula_ids = Vec::new();
    let mut bound_ids = Vec::new();
    for id in ids {
        if let Ok(f) = id.parse::<FormulaId>() {
            formula_ids.push(f);
        } else if let Ok(b) = id.parse::<BoundId>() {
            bound_ids.push(b);
        } else {
            return Err(CliError::Usage(format!("unknown formula or bound id {id:?}")));
        }
    }
    let range = range.map(parse_range).transpose()?;
    let params_for = |id: FormulaId| match range {
        Some((a, b)) => param_grid(id, a, b),
        None => default_params(id),
    };
    let selected: Vec<FormulaId> = if formula_ids.is_empty() {
        FormulaId::ALL.to_vec()
    } else {
        formula_ids
    };

    let run_formulas = matches!(suite, Suite::Formulas | Suite::All);
    let run_structure = matches!(suite, Suite::Structure | Suite::All);
    let run_bounds = matches!(suite, Suite::Bounds | Suite::All);

    let formulas = if run_formulas {
        selected
            .iter()
            .map(|&id| verify_family_formula(id, &params_for(id), tolerance))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let structure = if run_structure {
        selected
            .iter()
            .filter(|id| id.name().starts_with("RM_"))
            .map(|&id| verify_residual_structure(id, &params_for(id)))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let bounds = if run_bounds {
        let mut report = bounds_suite(&Corpus::standard()?, tolerance)?;
        if !bound_ids.is_empty() {
            report.records.retain(|r| bound_ids.contains(&r.bound));
        }
        report
    } else {
        BoundsReport {
            tolerance,
            records: Vec::new(),
        }
    };

    let formula_cases: usize = formulas.iter().map(|r| r.cases.len()).sum();
    let formula_failed: usize = formulas.iter().map(|r| r.failed).sum();
    let structure_cases: usize = structure.iter().map(|r| r.cases.len()).sum();
    let structure_failed: usize = structure.iter().map(|r| r.failed).sum();
    let bound_failed = bounds.failures().count();
    let flagged: Vec<&BoundAuditRecord> = bounds.flagged().collect();
    let cases = formula_cases + structure_cases + bounds.records.len();
    let failed = formula_failed + structure_failed + bound_failed;
    let summary = Summary {
        cases,
        passed: cases - failed - flagged.len(),
        failed,
        flagged: flagged.len(),
    };

    match format {
        ReportFormat::Json => {
            let doc = VerifyOutput {
                schema: SCHEMA_VERSION,
                tolerance,
                formulas: &formulas,
                structure: &structure,
                bounds: &bounds.records,
                flagged,
                summary,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        ReportFormat::Text => {
            write_verify_text(out, &formulas, &structure, &bounds, &summary)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}

fn write_verify_text(
    out: &mut dyn Write,
    formulas: &[VerificationReport],
    structure: &[StructureReport],
    bounds: &BoundsReport,
    summary: &Summary,
) -> io::Result<()> {
    if !formulas.is_empty() {
        writeln!(out, "{:<10} {:>6} {:>6} {:>6} {:>12}", "formula", "cases", "pass", "fail", "max |diff|")?;
        for r in formulas {
            let max = r.cases.iter().map(|c| c.abs_diff).fold(0.0, f64::max);
            writeln!(out, "{:<10} {:>6} {:>6} {:>6} {:>12.3e}", r.id.name(), r.cases.len(), r.passed, r.failed, max)?;
        }
        writeln!(out)?;
    }
    if !structure.is_empty() {
        writeln!(out, "{:<10} {:>6} {:>6} {:>6}", "argmin", "cases", "pass", "fail")?;
        for r in structure {
            writeln!(out, "{:<10} {:>6} {:>6} {:>6}", r.id.name(), r.cases.len(), r.passed, r.failed)?;
        }
        writeln!(out)?;
    }
    if !bounds.records.is_empty() {
        writeln!(out, "{:<22} {:>7} {:>7} {:>7} {:>7}", "bound", "records", "holds", "fails", "flagged")?;
        for &b in BoundId::ALL {
            let recs: Vec<_> = bounds.records.iter().filter(|r| r.bound == b).collect();
            if recs.is_empty() {
                continue;
            }
            let holds = recs.iter().filter(|r| r.holds).count();
            let flagged = recs.iter().filter(|r| r.flagged()).count();
            writeln!(out, "{:<22} {:>7} {:>7} {:>7} {:>7}", b.name(), recs.len(), holds, recs.len() - holds - flagged, flagged)?;
        }
        writeln!(out)?;
        for r in bounds.flagged() {
            writeln!(out, "flagged {} on {}: lhs {} rhs {} slack {}", r.bound, r.graph, round_sig12(r.lhs), round_sig12(r.rhs), round_sig12(r.slack))?;
        }
        for r in bounds.failures() {
            writeln!(out, "FAILED {} on {}: lhs {} rhs {} slack {}", r.bound, r.graph, round_sig12(r.lhs), round_sig12(r.rhs), round_sig12(r.slack))?;
        }
    }
    writeln!(
        out,
        "cases {} passed {} failed {} flagged {}",
        summary.cases, summary.passed, summary.failed, summary.flagged
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub vertices_of_middle_graph: usize,
    pub t_allpairs_ms: f64,
    pub t_closeness_ms: f64,
    pub t_residual_ms: f64,
}

fn parse_stepped(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("--n {s:?} must look like start..end:step"));
    let (span, step) = match s.split_once(':') {
        Some((span, step)) => (span, step.parse::<usize>().map_err(|_| bad())?),
        None => (s, 1),
    };
    let (a, b) = parse_range(span)?;
    if step == 0 {
        return Err(bad());
    }
    Ok((a as usize..=b as usize).step_by(step).collect())
}

fn single_param_family(kind: FamilyKind, n: usize) -> Result<FamilySpec, CliError> {
    Ok(match kind {
        FamilyKind::Path => FamilySpec::Path { n },
        FamilyKind::Cycle => FamilySpec::Cycle { n },
        FamilyKind::Star => FamilySpec::Star { n },
        FamilyKind::Complete => FamilySpec::Complete { n },
        FamilyKind::Wheel => FamilySpec::Wheel { n },
        FamilyKind::RandomTree => FamilySpec::RandomTree { n, seed: 0 },
        other => {
            return Err(CliError::Usage(format!(
                "scaling supports single-parameter families, not {other:?}"
            )))
        }
    })
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Times the literal all-pairs procedure on `M(base(n))`: Floyd–Warshall,
/// closeness from its matrix, and the residual sweep that zeroes each row and
/// column before recomputing. Runs on a single thread.
pub fn scaling_rows(kind: FamilyKind, sizes: &[usize]) -> crate::error::Result<Vec<ScalingRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool");
    pool.install(|| {
        sizes
            .iter()
            .map(|&n| {
                let spec = single_param_family(kind, n).map_err(|e| Error::InvalidFamilyParams {
                    family: format!("{kind:?}"),
                    reason: message(&e),
                })?;
                let m = middle_graph(&generate(&spec)?);
                let t = Instant::now();
                let d = floyd_warshall(&m);
                let t_allpairs_ms = millis(t);
                let t = Instant::now();
                let _ = closeness_from_distances::<f64>(&d);
                let t_closeness_ms = millis(t);
                let t = Instant::now();
                residual_closeness_with::<f64>(&m, RemovalMode::Isolate)?;
                let t_residual_ms = millis(t);
                Ok(ScalingRow {
                    n,
                    vertices_of_middle_graph: m.n(),
                    t_allpairs_ms,
                    t_closeness_ms,
                    t_residual_ms,
                })
            })
            .collect()
    })
}

/// Residual-time ratio across the largest measured pair where `n` doubles.
pub fn doubling_ratio(rows: &[ScalingRow]) -> Option<(usize, usize, f64)> {
    rows.iter()
        .rev()
        .find_map(|big| {
            rows.iter()
                .find(|small| small.n * 2 == big.n)
                .map(|small| (small.n, big.n, big.t_residual_ms / small.t_residual_ms))
        })
}

fn cmd_scaling(
    kind: FamilyKind,
    n: &str,
    output: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let sizes = parse_stepped(n)?;
    if sizes.is_empty() {
        return Err(CliError::Usage("empty size range".into()));
    }
    // validate every size before timing anything
    for &n in &sizes {
        single_param_family(kind, n)?.validate()?;
    }
    let rows = scaling_rows(kind, &sizes)?;
    let sink: Box<dyn Write + '_> = match &output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(&mut *out),
    };
    let mut w = csv::Writer::from_writer(sink);
    for row in &rows {
        w.serialize(row)?;
    }
    w.flush()?;
    drop(w);
    if let Some((a, b, ratio)) = doubling_ratio(&rows) {
        writeln!(err, "t_residual({b}) / t_residual({a}) = {ratio:.2} (quartic growth predicts 16)")?;
    }
    Ok(EXIT_OK)
}

fn cmd_formulas(out: &mut dyn Write) -> Result<i32, CliError> {
    writeln!(out, "{:<10} {:<10} {:<42} formula", "id", "validity", "describes")?;
    for f in list_formulas() {
        writeln!(out, "{:<10} {:<10} {:<42} {}", f.id.name(), f.validity, f.citation, f.formula)?;
    }
    Ok(EXIT_OK)
}
