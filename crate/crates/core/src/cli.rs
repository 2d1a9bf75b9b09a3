//! The `usf-lab` command line.
//!
//! Exit codes: 0 success, 2 unreadable input or bad flags, 3 a well-formed
//! request that violates an invariant (non-graph in graph mode, too many
//! points, missing cap), 4 a simulation over the memory budget.

use crate::catalog::{builtin, is_builtin_name};
use crate::classify::{classify_ubiquitous, ClassifyError, DimensionVerdict, Mode};
use crate::format::{parse_auto, FormatError};
use crate::hypergraph::Hypergraph;
use crate::partition::SetPartition;
use crate::sim::{
    self, check_memory, count_witnesses, estimate_connection, estimate_r, memory_budget_mb,
    wilson_wired, EstimateConfig, LatticeBox, SimError,
};
use crate::ultrametric::{maximize_over_polytope, sample_audit, Objective, UltrametricError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

const BUILD_ID: &str = match option_env!("USF_LAB_BUILD_ID") {
    Some(id) => id,
    None => "dev",
};

#[derive(Parser, Debug)]
#[command(name = "usf-lab", version, about = "Ubiquity criteria and uniform spanning forest sampling")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Faithful ubiquity and ubiquity verdicts for one dimension or a range.
    Classify(ClassifyArgs),
    /// Verdicts over a dimension range with the critical dimensions.
    Profile(ClassifyArgs),
    /// Sample wired spanning forests and report statistics.
    Simulate(SimulateArgs),
    /// Maximise a sum of minimum distances over the ultrametric polytope.
    Ultrametric(UltrametricArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Hypergraph file (text or JSON) or builtin such as `path:3`.
    pub input: String,
    #[arg(long = "dim", visible_alias = "d", conflicts_with = "dims")]
    pub dim: Option<i64>,
    /// Inclusive range `A..B`.
    #[arg(long)]
    pub dims: Option<String>,
    #[arg(long, default_value = "graph")]
    pub mode: Mode,
    /// Component-graph radius; `--r 1` limits hyperedges to two components.
    #[arg(long)]
    pub r: Option<usize>,
    /// Largest edge degree a quotient may use in hypergraph mode.
    #[arg(long)]
    pub edge_degree_cap: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    ComponentCount,
    PairConnect,
    REstimate,
    WitnessCount,
    Forest,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long = "dim", visible_alias = "d")]
    pub dim: usize,
    #[arg(long)]
    pub side: usize,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, value_enum)]
    pub stat: Stat,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Separations for `pair-connect`: `auto` or a comma list.
    #[arg(long, default_value = "auto")]
    pub pairs: String,
    /// Number of components for `r-estimate`.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 4)]
    pub r_max: usize,
    /// Hypergraph for `witness-count`.
    #[arg(long)]
    pub input: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    /// Stop counting witnesses here.
    #[arg(long, default_value_t = 1_000_000)]
    pub limit: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct UltrametricArgs {
    /// Objective file: a `points:` line and `term <coef>: a,b c,d` lines.
    pub input: PathBuf,
    /// Random ultrametrics for the gap audit.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Invariant(String),
    Budget(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Invariant(m) | CliError::Budget(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::OverBudget { .. } => CliError::Budget(format!("{e}; raise USF_LAB_MEM_BUDGET_MB to allow it")),
            SimError::BadParameter(_) | SimError::PointOutside(_) => CliError::Usage(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<UltrametricError> for CliError {
    fn from(e: UltrametricError) -> Self {
        match e {
            UltrametricError::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Invariant(e.to_string()),
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => match &cli.out {
            Some(path) => match std::fs::write(path, report) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    1
                }
            },
            None => {
                let _ = stdout.write_all(report.as_bytes());
                0
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Builds the report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Classify(a) => cmd_classify(a, false),
        Command::Profile(a) => cmd_classify(a, true),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Ultrametric(a) => cmd_ultrametric(a),
    })
}

/// Resolves a builtin name or reads a hypergraph file.
pub fn load_hypergraph(input: &str) -> Result<Hypergraph, CliError> {
    if is_builtin_name(input) {
        return builtin(input).map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = std::fs::read_to_string(input).map_err(|e| CliError::Usage(format!("cannot read {input}: {e}")))?;
    parse_auto(&text).map_err(|e| match e {
        FormatError::Invalid(_) => CliError::Invariant(format!("{input}: {e}")),
        _ => CliError::Usage(format!("{input}: {e}")),
    })
}

/// Parses `A..B` (inclusive) within `5..=64`.
pub fn parse_dims(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("bad dimension range `{s}`; expected A..B within 5..64"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if !(5..=64).contains(&a) || !(a..=64).contains(&b) {
        return Err(bad());
    }
    Ok((a, b))
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn effective_cap(a: &ClassifyArgs, h: &Hypergraph) -> Option<usize> {
    match a.mode {
        Mode::Graph => None,
        Mode::Hypergraph => a
            .edge_degree_cap
            .or(if a.r == Some(1) { Some(2) } else { None })
            .or(Some(h.max_edge_degree())),
    }
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    input: &'a str,
    mode: Mode,
    edge_degree_cap: Option<usize>,
    verdicts: Vec<VerdictRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical: Option<Critical>,
}

#[derive(Serialize)]
struct VerdictRow {
    #[serde(flatten)]
    verdict: DimensionVerdict,
    witness_subhypergraph_text: String,
}

#[derive(Serialize, Clone, Copy)]
struct Critical {
    faithful: Option<i64>,
    ubiquitous: Option<i64>,
}

fn last_of_initial_run(rows: &[VerdictRow], f: impl Fn(&DimensionVerdict) -> bool) -> Option<i64> {
    rows.iter()
        .take_while(|r| f(&r.verdict))
        .last()
        .map(|r| r.verdict.dimension)
}

fn cmd_classify(a: &ClassifyArgs, profile: bool) -> Result<String, CliError> {
    let h = load_hypergraph(&a.input)?;
    let (lo, hi) = match (&a.dims, a.dim) {
        (Some(s), _) => parse_dims(s)?,
        (None, Some(d)) => {
            if !(5..=64).contains(&d) {
                return Err(CliError::Usage(format!("dimension {d} is outside 5..64")));
            }
            (d, d)
        }
        (None, None) if profile => (5, 20),
        (None, None) => return Err(CliError::Usage("give --dim D or --dims A..B".into())),
    };
    if a.r == Some(0) {
        return Err(CliError::Usage("--r must be at least 1".into()));
    }
    let cap = effective_cap(a, &h);
    let verdicts: Vec<DimensionVerdict> = {
        use rayon::prelude::*;
        (lo..=hi)
            .into_par_iter()
            .map(|d| classify_ubiquitous(&h, d, a.mode, cap))
            .collect::<Result<_, _>>()?
    };
    let rows: Vec<VerdictRow> = verdicts
        .into_iter()
        .map(|v| {
            let text = h
                .coarsen(&v.witness_coarsening)
                .map(|c| v.witness_subhypergraph.describe(&c))
                .unwrap_or_default();
            VerdictRow {
                verdict: v,
                witness_subhypergraph_text: text,
            }
        })
        .collect();
    let critical = profile.then(|| Critical {
        faithful: last_of_initial_run(&rows, |v| v.faithfully_ubiquitous),
        ubiquitous: last_of_initial_run(&rows, |v| v.ubiquitous == Some(true)),
    });
    let report = ClassifyReport {
        input: &a.input,
        mode: a.mode,
        edge_degree_cap: cap,
        verdicts: rows,
        critical,
    };
    Ok(match a.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report).expect("serialisable") + "\n",
        OutputFormat::Csv => classify_csv(&report),
        OutputFormat::Text if profile => profile_text(&report, lo, hi),
        OutputFormat::Text => classify_text(&report),
    })
}

fn classify_text(r: &ClassifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", r.input);
    let _ = writeln!(out, "mode: {}", r.mode);
    if let Some(c) = r.edge_degree_cap {
        let _ = writeln!(out, "edge-degree cap: {c}");
    }
    for row in &r.verdicts {
        let v = &row.verdict;
        let _ = writeln!(
            out,
            "d={}: faithfully ubiquitous: {}; ubiquitous: {}",
            v.dimension,
            yes_no(Some(v.faithfully_ubiquitous)),
            yes_no(v.ubiquitous)
        );
        let _ = writeln!(out, "  min-max value: {}", v.minmax_value);
        let _ = writeln!(out, "  optimal coarsening: {}", v.witness_coarsening_text);
        let _ = writeln!(out, "  heaviest subhypergraph: {}", row.witness_subhypergraph_text);
        if let Some(q) = &v.witness_quotient_text {
            let _ = writeln!(out, "  witness quotient: {q}");
        }
        let _ = writeln!(out, "  r requirement: {}", v.r_requirement);
    }
    out
}

fn profile_text(r: &ClassifyReport, lo: i64, hi: i64) -> String {
    let c = r.critical.expect("profile has critical dimensions");
    let mut out = String::new();
    let _ = writeln!(out, "# {} ({} mode), d = {lo}..{hi}", r.input, r.mode);
    let _ = writeln!(out, "{:>4}  {:<9} {:<11} {:>8}", "d", "faithful", "ubiquitous", "min-max");
    for row in &r.verdicts {
        let v = &row.verdict;
        let mut marks = Vec::new();
        if Some(v.dimension) == c.faithful {
            marks.push("last faithful");
        }
        if Some(v.dimension) == c.ubiquitous {
            marks.push("last ubiquitous");
        }
        let tail = if marks.is_empty() {
            String::new()
        } else {
            format!("  * {}", marks.join(", "))
        };
        let _ = writeln!(
            out,
            "{:>4}  {:<9} {:<11} {:>8}{}",
            v.dimension,
            yes_no(Some(v.faithfully_ubiquitous)),
            yes_no(v.ubiquitous),
            v.minmax_value.to_string(),
            tail
        );
    }
    let show = |x: Option<i64>| x.map_or_else(|| "none".to_string(), |d| format!("through d={d}"));
    let _ = writeln!(
        out,
        "critical: faithful {}, ubiquitous {}",
        show(c.faithful),
        show(c.ubiquitous)
    );
    out
}

fn classify_csv(r: &ClassifyReport) -> String {
    let mut out = String::from("d,mode,faithful,ubiquitous,minmax,coarsening,quotient\n");
    for row in &r.verdicts {
        let v = &row.verdict;
        let _ = writeln!(
            out,
            "{},{},{},{},{},\"{}\",\"{}\"",
            v.dimension,
            v.mode,
            v.faithfully_ubiquitous,
            v.ubiquitous.map_or("".into(), |b| b.to_string()),
            v.minmax_value,
            v.witness_coarsening_text,
            v.witness_quotient_text.clone().unwrap_or_default()
        );
    }
    out
}

struct SimRows {
    meta: Vec<(String, String)>,
    rows: Vec<(String, String)>,
}

fn separations(bx: &LatticeBox, spec: &str) -> Result<Vec<usize>, CliError> {
    if spec == "auto" {
        let mut out = Vec::new();
        let mut s = 1;
        while s <= bx.side() / 2 && sim::estimate::separated_pair(bx, s).is_ok() {
            out.push(s);
            s *= 2;
        }
        return Ok(out);
    }
    spec.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .ok()
                .filter(|&s| s >= 1)
                .ok_or_else(|| CliError::Usage(format!("bad separation `{x}`")))
        })
        .collect()
}

/// Boundary points for witness counts: spaced two apart along the first axis
/// through the centre.
fn boundary_points(bx: &LatticeBox, k: usize) -> Result<Vec<usize>, CliError> {
    let c = bx.center();
    (0..k)
        .map(|i| {
            let mut p = c.clone();
            p[0] += 2 * i as i64 - (k as i64 - 1);
            bx.index_or_err(&p).map_err(CliError::from)
        })
        .collect()
}

fn cmd_simulate(a: &SimulateArgs) -> Result<String, CliError> {
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let bx = LatticeBox::new(a.dim, a.side)?;
    check_memory(a.dim, a.side, rayon::current_num_threads(), memory_budget_mb())?;
    let cfg = EstimateConfig {
        samples: a.samples,
        seed: a.seed,
    };
    let stat_name = Stat::to_possible_value(&a.stat).expect("named").get_name().to_string();
    let mut meta = vec![
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("build".into(), BUILD_ID.to_string()),
        ("seed".into(), a.seed.to_string()),
        ("d".into(), a.dim.to_string()),
        ("L".into(), a.side.to_string()),
        ("samples".into(), a.samples.to_string()),
        ("stat".into(), stat_name.clone()),
    ];
    let mut rows = Vec::new();
    match a.stat {
        Stat::Forest => {
            let mut rng = sim::estimate::sample_rng(a.seed, 0);
            let f = wilson_wired(&bx, &[], &mut rng);
            let mut out = String::new();
            for (k, v) in &meta {
                let _ = writeln!(out, "# {k}={v}");
            }
            out.push_str(&f.edge_list());
            return Ok(out);
        }
        Stat::ComponentCount => {
            let counts = sim::estimate::sample_forests(&bx, cfg, |f| f.component_count());
            for c in counts {
                rows.push((stat_name.clone(), c.to_string()));
            }
        }
        Stat::PairConnect => {
            let seps = separations(&bx, &a.pairs)?;
            meta.push((
                "pairs".into(),
                seps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
            ));
            for s in seps {
                let k = sim::estimate::separated_pair(&bx, s)?;
                let e = estimate_connection(&bx, &k, cfg)?;
                rows.push((format!("pair-connect@{s}"), format!("{}", e.p)));
                rows.push((format!("pair-connect@{s}.ci_low"), format!("{:.6}", e.ci_low)));
                rows.push((format!("pair-connect@{s}.ci_high"), format!("{:.6}", e.ci_high)));
            }
        }
        Stat::REstimate => {
            meta.push(("m".into(), a.m.to_string()));
            meta.push(("r_max".into(), a.r_max.to_string()));
            match estimate_r(&bx, a.m, a.r_max, cfg) {
                Ok(res) => {
                    for (r, f) in &res.frequencies {
                        rows.push((format!("r-estimate.freq@{r}"), format!("{f}")));
                    }
                    rows.push(("r-estimate.threshold".into(), res.threshold.to_string()));
                }
                Err(SimError::InconclusiveAtCap { .. }) => {
                    for r in 1..=a.r_max {
                        rows.push((format!("r-estimate.freq@{r}"), "0".into()));
                    }
                    rows.push(("r-estimate.threshold".into(), "inconclusive".into()));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Stat::WitnessCount => {
            let input = a
                .input
                .as_deref()
                .ok_or_else(|| CliError::Usage("witness-count needs --input".into()))?;
            let h = load_hypergraph(input)?;
            let pts = boundary_points(&bx, h.boundary_count())?;
            meta.push(("input".into(), input.to_string()));
            meta.push(("r".into(), a.r.to_string()));
            let results = sim::estimate::sample_forests(&bx, cfg, |f| {
                let x: Vec<usize> = pts.iter().map(|&p| f.component_of(p)).collect();
                if x.iter().enumerate().any(|(i, c)| x[..i].contains(c)) {
                    return None;
                }
                Some(count_witnesses(f, &h, &x, a.r, a.limit).expect("distinct boundary components"))
            });
            for r in results {
                rows.push(match r {
                    None => (format!("{stat_name}.collision"), "1".into()),
                    Some((n, false)) => (stat_name.clone(), n.to_string()),
                    Some((n, true)) => (format!("{stat_name}.at-limit"), n.to_string()),
                });
            }
        }
    }
    Ok(render_sim(&SimRows { meta, rows }, a))
}

fn render_sim(s: &SimRows, a: &SimulateArgs) -> String {
    match a.format {
        OutputFormat::Json => {
            let meta: serde_json::Map<String, serde_json::Value> =
                s.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            let rows: Vec<serde_json::Value> = s
                .rows
                .iter()
                .map(|(stat, value)| json!({"seed": a.seed, "d": a.dim, "L": a.side, "statistic": stat, "value": value}))
                .collect();
            serde_json::to_string_pretty(&json!({"meta": meta, "rows": rows})).expect("serialisable") + "\n"
        }
        OutputFormat::Csv | OutputFormat::Text => {
            let mut out = String::new();
            for (k, v) in &s.meta {
                let _ = writeln!(out, "# {k}={v}");
            }
            out.push_str("seed,d,L,statistic,value\n");
            for (stat, value) in &s.rows {
                let _ = writeln!(out, "{},{},{},{stat},{value}", a.seed, a.dim, a.side);
            }
            out
        }
    }
}

fn describe_partition(p: &SetPartition, names: &[String]) -> String {
    p.blocks()
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_ultrametric(a: &UltrametricArgs) -> Result<String, CliError> {
    let text = std::fs::read_to_string(&a.input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.input.display())))?;
    let f = Objective::parse(&text)?;
    let m = maximize_over_polytope(&f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let audit = sample_audit(&f, &m, a.samples, &mut rng);
    let partition = describe_partition(&m.partition, &f.points);
    Ok(match a.format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(&json!({
                "points": f.points,
                "maximum": m.value.to_string(),
                "partition": partition,
                "audit": {
                    "samples": audit.samples,
                    "seed": a.seed,
                    "best_sample": audit.best_sample.to_string(),
                    "gap": audit.gap.to_string(),
                }
            }))
            .expect("serialisable")
                + "\n"
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "points: {}", f.points.join(" "));
            let _ = writeln!(out, "maximum: {}", m.value);
            let _ = writeln!(out, "partition: {partition}");
            let _ = writeln!(
                out,
                "audit: {} random ultrametrics (seed {}), best sample {}, gap {}",
                audit.samples, a.seed, audit.best_sample, audit.gap
            );
            out
        }
    })
}
