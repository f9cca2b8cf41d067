//! Argument handling and subcommand dispatch for the `szeged` binary.
//!
//! [`run`] writes artifacts to the given writer (or `--out`) and diagnostics,
//! including elapsed time, to the error writer; artifacts never contain
//! timing, so identical arguments give byte-identical output.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use szeged_core::verify::{self, ComponentKind, GroupRange, VerifyReport};
use szeged_core::{
    build_generalized_join, cyclic_decomposition, szeged_join_corrected, szeged_join_formula,
    GroupFamily, GroupSpec, JoinSpec, SimpleGraph,
};

/// Exit status when every check agrees.
pub const EXIT_OK: i32 = 0;
/// Exit status when a formula and direct counting disagree.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for invalid arguments or input files.
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "szeged",
    version,
    about = "Szeged and Wiener indices of power graphs of Z_n and D_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a power graph and export it.
    Graph(GraphArgs),
    /// Szeged index of a group power graph or a JSON graph.
    Szeged(IndexArgs),
    /// Wiener index of a group power graph or a JSON graph.
    Wiener(IndexArgs),
    /// Compare closed forms with direct counting.
    Verify(VerifyArgs),
    /// Per-n Wiener and Szeged values of both families as CSV.
    Table(TableArgs),
    /// Build a generalized join from a JSON spec and compare formulas.
    Join(JoinArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    Zn,
    Dn,
}

impl From<Group> for GroupFamily {
    fn from(g: Group) -> Self {
        match g {
            Group::Zn => GroupFamily::Cyclic,
            Group::Dn => GroupFamily::Dihedral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Cyclic closed form over a range (variant column: statement form).
    T3,
    /// Join closed form over seeded random specs.
    T1,
    /// Dihedral closed form over a range.
    Dg,
    /// Prime-power orders in a range.
    PrimePower,
    /// n = pq in a range.
    Pq,
    /// n = pq² in a range.
    Pq2,
    /// Dihedral n = pq in a range.
    Dpq,
    /// Exhaustive join search over small bases; reports, never fails.
    Explore,
}

/// `LO:HI`, inclusive, `3 ≤ LO ≤ HI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg(pub GroupRange);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeError(String);

impl fmt::Display for RangeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for RangeError {}

impl FromStr for RangeArg {
    type Err = RangeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| RangeError(format!("expected LO:HI, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| RangeError(format!("bad bound {t:?}: {e}")))
        };
        let range =
            GroupRange::new(parse(lo)?, parse(hi)?).map_err(|e| RangeError(e.to_string()))?;
        Ok(RangeArg(range))
    }
}

pub fn parse_range(s: &str) -> Result<GroupRange, RangeError> {
    s.parse::<RangeArg>().map(|r| r.0)
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the artifact here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long, value_enum)]
    pub group: Group,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: Format,
    /// Emit the divisor-class decomposition (zn only) as JSON instead.
    #[arg(long)]
    pub decomposition: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long, value_enum, requires = "n", conflicts_with = "spec")]
    pub group: Option<Group>,
    #[arg(long, requires = "group")]
    pub n: Option<u64>,
    /// Graph JSON file: {"order": N, "edges": [[u, v], ...]}.
    #[arg(long, required_unless_present = "group")]
    pub spec: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "brute")]
    pub method: Method,
    /// Text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    #[arg(long)]
    pub range: Option<RangeArg>,
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    /// Required for the randomized t1 suite.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "connected")]
    pub components: ComponentChoice,
    #[arg(long, default_value_t = 4)]
    pub max_base: usize,
    #[arg(long, default_value_t = 3)]
    pub max_component: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComponentChoice {
    Connected,
    Complete,
}

impl From<ComponentChoice> for ComponentKind {
    fn from(c: ComponentChoice) -> Self {
        match c {
            ComponentChoice::Connected => ComponentKind::Connected,
            ComponentChoice::Complete => ComponentKind::Complete,
        }
    }
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub range: RangeArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct JoinArgs {
    /// JoinSpec JSON file: {"base": <graph>, "components": [<graph>, ...]}.
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
    /// Text when omitted.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(szeged_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<szeged_core::Error> for CliError {
    fn from(e: szeged_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a subcommand produced: the artifact text and whether every check
/// agreed.
struct Outcome {
    artifact: String,
    agreed: bool,
}

impl Outcome {
    fn ok(artifact: String) -> Self {
        Outcome {
            artifact,
            agreed: true,
        }
    }
}

/// Parses `args` (including the program name) without running anything.
pub fn parse_args<I, T>(args: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args)
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_INVALID;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let started = Instant::now();
    let (out_path, result) = match &cli.command {
        Command::Graph(a) => (&a.output.out, graph(a)),
        Command::Szeged(a) => (&a.output.out, szeged(a)),
        Command::Wiener(a) => (&a.output.out, wiener(a)),
        Command::Verify(a) => (&a.output.out, verify_cmd(a, stderr)),
        Command::Table(a) => (&a.output.out, table(a)),
        Command::Join(a) => (&a.output.out, join(a)),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let written = match out_path {
        Some(path) => std::fs::write(path, &outcome.artifact),
        None => stdout.write_all(outcome.artifact.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INVALID;
    }
    let _ = writeln!(stderr, "elapsed: {:.3}s", started.elapsed().as_secs_f64());
    if outcome.agreed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn group_spec(group: Group, n: u64) -> CliResult<GroupSpec> {
    Ok(GroupSpec::new(group.into(), n)?)
}

fn graph(a: &GraphArgs) -> CliResult<Outcome> {
    let spec = group_spec(a.group, a.n)?;
    if a.decomposition {
        if a.group != Group::Zn {
            return Err(CliError::Usage(
                "--decomposition applies to --group zn only".into(),
            ));
        }
        return Ok(Outcome::ok(cyclic_decomposition(a.n)?.to_json() + "\n"));
    }
    let g = spec.power_graph();
    let artifact = match a.format {
        Format::Dot => g.to_dot(Some(&spec.labels()))?,
        Format::Json => g.to_json() + "\n",
        Format::Csv => {
            let mut out = String::from("u,v\n");
            for (u, v) in g.edges() {
                out.push_str(&format!("{u},{v}\n"));
            }
            out
        }
    };
    Ok(Outcome::ok(artifact))
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

enum Subject {
    Group(GroupSpec),
    Plain(SimpleGraph),
}

impl Subject {
    fn from_args(a: &IndexArgs) -> CliResult<Self> {
        match (a.group, a.n, &a.spec) {
            (Some(g), Some(n), None) => Ok(Subject::Group(group_spec(g, n)?)),
            (None, None, Some(path)) => {
                Ok(Subject::Plain(SimpleGraph::from_json(&read_file(path)?)?))
            }
            _ => Err(CliError::Usage(
                "give either --group and --n, or --spec".into(),
            )),
        }
    }

    fn graph(&self) -> SimpleGraph {
        match self {
            Subject::Group(spec) => spec.power_graph(),
            Subject::Plain(g) => g.clone(),
        }
    }
}

/// Renders `(name, value)` pairs plus an agreement verdict in the requested
/// format.
fn render_values(
    values: &[(&str, u64)],
    agree: Option<bool>,
    format: Option<Format>,
) -> CliResult<String> {
    Ok(match format {
        None => {
            let mut out = String::new();
            for (name, v) in values {
                out.push_str(&format!("{name}: {v}\n"));
            }
            if let Some(agree) = agree {
                out.push_str(if agree { "agree\n" } else { "disagree\n" });
            }
            out
        }
        Some(Format::Csv) => {
            let mut header: Vec<&str> = values.iter().map(|(k, _)| *k).collect();
            let mut row: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
            if let Some(agree) = agree {
                header.push("agree");
                row.push(agree.to_string());
            }
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Some(Format::Json) => {
            let mut map = serde_json::Map::new();
            for (name, v) in values {
                map.insert(name.to_string(), (*v).into());
            }
            if let Some(agree) = agree {
                map.insert("agree".into(), agree.into());
            }
            serde_json::Value::Object(map).to_string() + "\n"
        }
        Some(Format::Dot) => {
            return Err(CliError::Usage("dot format applies to graphs only".into()))
        }
    })
}

fn szeged(a: &IndexArgs) -> CliResult<Outcome> {
    let subject = Subject::from_args(a)?;
    let formula = match (&subject, a.method) {
        (_, Method::Brute) => None,
        (Subject::Group(spec), _) => Some(spec.szeged_formula()?),
        (Subject::Plain(_), _) => {
            return Err(CliError::Usage(
                "no closed form for a plain JSON graph; use --method brute".into(),
            ))
        }
    };
    let brute = match a.method {
        Method::Formula => None,
        _ => Some(subject.graph().szeged_index()?),
    };
    let mut values = Vec::new();
    values.extend(brute.map(|v| ("brute", v)));
    values.extend(formula.map(|v| ("formula", v)));
    let agree = brute.zip(formula).map(|(b, f)| b == f);
    Ok(Outcome {
        artifact: render_values(&values, agree, a.format)?,
        agreed: agree.unwrap_or(true),
    })
}

fn wiener(a: &IndexArgs) -> CliResult<Outcome> {
    if a.method != Method::Brute {
        return Err(CliError::Usage(
            "the Wiener index is computed by counting only".into(),
        ));
    }
    let w = Subject::from_args(a)?.graph().wiener_index()?;
    Ok(Outcome::ok(render_values(
        &[("wiener", w)],
        None,
        a.format,
    )?))
}

fn require_range(a: &VerifyArgs) -> CliResult<GroupRange> {
    a.range
        .map(|r| r.0)
        .ok_or_else(|| CliError::Usage("this check needs --range LO:HI".into()))
}

fn render_report(report: &VerifyReport, format: Format) -> CliResult<String> {
    match format {
        Format::Csv => Ok(report.render_csv()?),
        Format::Json => Ok(report.render_json()),
        Format::Dot => Err(CliError::Usage("reports are csv or json".into())),
    }
}

fn verify_cmd(a: &VerifyArgs, stderr: &mut dyn Write) -> CliResult<Outcome> {
    if a.check == Check::Explore {
        let e = verify::explore_join_formula(a.max_base, a.max_component)?;
        let artifact = match a.format {
            Format::Csv => e.render_csv(),
            Format::Json => e.render_json(),
            Format::Dot => return Err(CliError::Usage("reports are csv or json".into())),
        };
        return Ok(Outcome::ok(artifact));
    }
    let report = match a.check {
        Check::T1 => {
            let seed = a
                .seed
                .ok_or_else(|| CliError::Usage("t1 is randomized; --seed is required".into()))?;
            verify::verify_join_random(a.cases, seed, a.components.into())?
        }
        Check::T3 => verify::verify_cyclic(require_range(a)?)?,
        Check::Dg => verify::verify_dihedral(require_range(a)?)?,
        Check::PrimePower => verify::verify_prime_power(require_range(a)?)?,
        Check::Pq => verify::verify_pq(require_range(a)?)?,
        Check::Pq2 => verify::verify_pq2(require_range(a)?)?,
        Check::Dpq => verify::verify_dihedral_pq(require_range(a)?)?,
        Check::Explore => unreachable!("handled above"),
    };
    let s = &report.summary;
    let _ = writeln!(
        stderr,
        "{}: {}/{} match, {} mismatched",
        report.check, s.matched, s.total, s.mismatched
    );
    for finding in &report.findings {
        let _ = writeln!(stderr, "finding: {finding}");
    }
    Ok(Outcome {
        artifact: render_report(&report, a.format)?,
        agreed: report.all_match(),
    })
}

fn table(a: &TableArgs) -> CliResult<Outcome> {
    let rows = verify::index_table(a.range.0)?;
    Ok(Outcome::ok(verify::render_index_table(&rows)))
}

fn join(a: &JoinArgs) -> CliResult<Outcome> {
    let spec = JoinSpec::from_json(&read_file(&a.spec)?)?;
    let joined = build_generalized_join(&spec)?;
    let brute = match a.method {
        Method::Formula => None,
        _ => Some(joined.graph.szeged_index()?),
    };
    let (formula, corrected) = match a.method {
        Method::Brute => (None, None),
        _ => (
            Some(szeged_join_formula(&spec)?),
            Some(szeged_join_corrected(&spec)?),
        ),
    };
    let mut values = vec![
        ("order", joined.graph.order() as u64),
        ("size", joined.graph.size() as u64),
    ];
    values.extend(brute.map(|v| ("brute", v)));
    values.extend(formula.map(|v| ("formula", v)));
    values.extend(corrected.map(|v| ("corrected", v)));
    let agree = brute.zip(formula).map(|(b, f)| b == f);
    Ok(Outcome {
        artifact: render_values(&values, agree, a.format)?,
        agreed: agree.unwrap_or(true),
    })
}
