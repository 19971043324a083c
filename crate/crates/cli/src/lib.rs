//! `pcheb` command-line front end.
//!
//! Every command writes data to `out` and diagnostics to `err`, and returns
//! the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 1    | a verification or certification failure   |
//! | 2    | bad arguments or unreadable input         |
//! | 3    | disconnected graph                        |

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcheb_core::chebyshev::{self, Families, FamilyTag, Outcome};
use pcheb_core::graphs::{self, GraphError};
use pcheb_core::qec::{self, Certificate, Method, QecError};
use pcheb_core::roots::{self, Enclosure};
use pcheb_core::{DistMatrix, Graph, Poly, QecResult};
use serde_json::{json, Value};

pub mod format;

use format::{coeffs_json, float_cell, opt_float_cell};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;

/// Root orderings are checked up to this index; the exact identities run up
/// to the requested `--max-n`.
pub const ROOT_CHECK_CAP: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Known,
    Closed,
    Root,
    Numeric,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Known => Method::KnownSmall,
            MethodArg::Closed => Method::ClosedFormEven,
            MethodArg::Root => Method::RootBased,
            MethodArg::Numeric => Method::NumericOracle,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pcheb",
    version,
    about = "Partial Chebyshev polynomials and QEC of fan graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
    /// Target width of certified root brackets; eigensolver tolerance for
    /// the numeric method.
    #[arg(long, global = true, default_value_t = roots::DEFAULT_TOL)]
    pub tol: f64,
    /// Force a QEC method instead of choosing by `n`.
    #[arg(long, global = true, value_enum)]
    pub method: Option<MethodArg>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ascending integer coefficients of a family member.
    Poly {
        /// u, t, v, w, ue, uo, ucomp, uecomp, uocomp, s, phi
        family: String,
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Run the exact identity battery and the root ordering checks.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
    /// Quadratic embedding constant of a fan or of a graph file.
    Qec {
        #[command(subcommand)]
        target: Target,
    },
    /// QEC of `K_1+P_n` for a range of `n`.
    Table {
        #[command(subcommand)]
        range: TableRange,
    },
    /// Distance matrix of a fan or of a graph file.
    Dist {
        #[command(subcommand)]
        target: Target,
    },
}

#[derive(Debug, Subcommand)]
pub enum Target {
    /// The fan `K_1+P_n`.
    Fan { n: usize },
    /// An edge list: one `u v` pair per line, 0-indexed, `#` comments.
    Graph { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum TableRange {
    Fan { from: usize, to: usize },
}

/// A failure that maps to an exit code and a message on stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::failed(format!("write error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::failed(format!("csv error: {e}"))
    }
}

impl From<QecError> for Failure {
    fn from(e: QecError) -> Self {
        let code = match &e {
            QecError::Graph(GraphError::Disconnected) => EXIT_DISCONNECTED,
            QecError::Graph(_)
            | QecError::TooSmall
            | QecError::NotApplicable { .. }
            | QecError::IndexTooSmall { .. } => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        QecError::from(e).into()
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let g = cli.global;
    if !(g.tol.is_finite() && g.tol > 0.0) {
        return Err(Failure::usage(format!(
            "--tol must be positive, got {}",
            g.tol
        )));
    }
    match &cli.command {
        Command::Poly { family, n } => cmd_poly(family, *n, g.format, out),
        Command::Verify { max_n } => cmd_verify(*max_n, g.format, out),
        Command::Qec { target } => {
            cmd_qec(target, g.method.map(Method::from), g.tol, g.format, out)
        }
        Command::Table {
            range: TableRange::Fan { from, to },
        } => cmd_table(*from, *to, g.method.map(Method::from), g.tol, g.format, out),
        Command::Dist { target } => cmd_dist(target, g.format, out),
    }
}

pub fn cmd_poly(family: &str, n: i64, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let tag: FamilyTag = family
        .parse()
        .map_err(|e: chebyshev::ChebError| Failure::usage(e.to_string()))?;
    let p = chebyshev::family(tag, n).map_err(|e| Failure::usage(e.to_string()))?;
    write_poly(tag, n, &p, fmt, out)?;
    Ok(EXIT_OK)
}

fn write_poly(
    tag: FamilyTag,
    n: i64,
    p: &Poly,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match fmt {
        OutputFormat::Plain => writeln!(out, "{p}")?,
        OutputFormat::Json => {
            let v = json!({ "family": tag.name(), "n": n, "coeffs": coeffs_json(p) });
            writeln!(out, "{v}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["power", "coeff"])?;
            for (k, c) in p.coeffs().iter().enumerate() {
                w.write_record([k.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// One failed check in a verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyFailure {
    pub identity: String,
    pub n: usize,
    pub lhs: Option<Poly>,
    pub rhs: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub max_n: usize,
    pub identity_checks: usize,
    pub root_checks: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Identities over `fam` plus root orderings up to `min(max_n, ROOT_CHECK_CAP)`.
pub fn verify(fam: &Families) -> VerifyReport {
    let ids = chebyshev::identity_suite_on(fam);
    let mut failures: Vec<VerifyFailure> = ids
        .failures()
        .map(|c| {
            let (lhs, rhs) = match &c.outcome {
                Outcome::Fail { lhs, rhs } => (Some(lhs.clone()), Some(rhs.clone())),
                Outcome::Pass => (None, None),
            };
            VerifyFailure {
                identity: c.identity.to_string(),
                n: c.n,
                lhs,
                rhs,
            }
        })
        .collect();
    let structure = roots::root_structure(fam.max_n().min(ROOT_CHECK_CAP), roots::DEFAULT_TOL);
    failures.extend(
        structure
            .iter()
            .filter(|c| !c.passed)
            .map(|c| VerifyFailure {
                identity: c.check.to_string(),
                n: c.n,
                lhs: None,
                rhs: None,
            }),
    );
    VerifyReport {
        max_n: fam.max_n(),
        identity_checks: ids.checked.len(),
        root_checks: structure.len(),
        failures,
    }
}

pub fn cmd_verify(max_n: usize, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let report = verify(&Families::build(max_n));
    write_verify(&report, fmt, out)
}

/// Writes `report` and returns 0 if it passed, 1 otherwise.
pub fn write_verify(report: &VerifyReport, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let lists = |f: &VerifyFailure| {
        let l = f.lhs.as_ref().map_or(Value::Array(vec![]), coeffs_json);
        let r = f.rhs.as_ref().map_or(Value::Array(vec![]), coeffs_json);
        (l, r)
    };
    match fmt {
        OutputFormat::Json => {
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| {
                    let (l, r) = lists(f);
                    json!({ "identity": f.identity, "n": f.n, "lhs": l, "rhs": r })
                })
                .collect();
            writeln!(
                out,
                "{}",
                json!({ "max_n": report.max_n, "failures": failures })
            )?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["identity", "n", "lhs", "rhs"])?;
            for f in &report.failures {
                let (l, r) = lists(f);
                w.write_record([
                    f.identity.clone(),
                    f.n.to_string(),
                    l.to_string(),
                    r.to_string(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Plain => {
            writeln!(
                out,
                "max_n {}: {} identity checks, {} root checks, {} failures",
                report.max_n,
                report.identity_checks,
                report.root_checks,
                report.failures.len()
            )?;
            for f in &report.failures {
                write!(out, "FAIL {} n={}", f.identity, f.n)?;
                if let (Some(l), Some(r)) = (&f.lhs, &f.rhs) {
                    write!(out, " lhs={l} rhs={r}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    graphs::from_edge_list(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn cmd_qec(
    target: &Target,
    method: Option<Method>,
    tol: f64,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let (label, n, result) = match target {
        Target::Fan { n } => ("fan", Some(*n), qec::qec_fan(*n, method, tol)?),
        Target::Graph { file } => {
            if let Some(m) = method.filter(|m| *m != Method::NumericOracle) {
                return Err(Failure::usage(format!(
                    "graph files only support the numeric method, not {}",
                    m.name()
                )));
            }
            ("graph", None, qec::qec_numeric(&load_graph(file)?, tol)?)
        }
    };
    match fmt {
        OutputFormat::Plain => {
            writeln!(out, "{}", result.value)?;
            writeln!(out, "method: {}", result.method.name())?;
            writeln!(out, "certificate: {}", certificate_summary(&result))?;
        }
        OutputFormat::Json => {
            let v = json!({
                "target": label,
                "n": n,
                "value": result.value,
                "method": result.method.name(),
                "certificate": certificate_json(&result),
            });
            writeln!(out, "{v}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["value", "method", "certificate"])?;
            w.write_record([
                float_cell(result.value),
                result.method.name().into(),
                certificate_summary(&result),
            ])?;
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn certificate_summary(r: &QecResult) -> String {
    match &r.certificate {
        None => "known value".into(),
        Some(Certificate::Angle { num, den }) => format!("-4 sin^2({num} pi/{den})"),
        Some(Certificate::EigenResidual(res)) => format!("off-diagonal norm {res:e}"),
        Some(Certificate::Root(c)) => match &c.enclosure {
            Enclosure::Exact(x) => format!("exact zero {x}"),
            Enclosure::Bracket(b) => format!("zero in [{}, {}]", b.lo_f64(), b.hi_f64()),
        },
    }
}

fn certificate_json(r: &QecResult) -> Value {
    match &r.certificate {
        None => Value::Null,
        Some(Certificate::Angle { num, den }) => json!({ "kind": "angle", "num": num, "den": den }),
        Some(Certificate::EigenResidual(res)) => {
            json!({ "kind": "eigen-residual", "residual": res })
        }
        Some(Certificate::Root(c)) => match &c.enclosure {
            Enclosure::Exact(x) => {
                json!({ "kind": "root", "exact": x.to_string(), "simple": c.simple })
            }
            Enclosure::Bracket(b) => json!({
                "kind": "root",
                "lo": b.lo.to_string(),
                "hi": b.hi.to_string(),
                "width": b.width(),
                "simple": c.simple,
            }),
        },
    }
}

/// One row of `table fan`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub qec: f64,
    pub method: Method,
    pub bounds: Option<(f64, f64)>,
}

pub fn fan_table(
    from: usize,
    to: usize,
    method: Option<Method>,
    tol: f64,
) -> Result<Vec<TableRow>, Failure> {
    if from < 1 || from > to {
        return Err(Failure::usage(format!(
            "bad range {from}..{to}: need 1 <= from <= to"
        )));
    }
    (from..=to)
        .map(|n| {
            let r = qec::qec_fan(n, method, tol)?;
            Ok(TableRow {
                n,
                qec: r.value,
                method: r.method,
                bounds: qec::odd_bounds(n),
            })
        })
        .collect()
}

pub fn cmd_table(
    from: usize,
    to: usize,
    method: Option<Method>,
    tol: f64,
    fmt: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let rows = fan_table(from, to, method, tol)?;
    match fmt {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "qec", "method", "lower", "upper"])?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    float_cell(r.qec),
                    r.method.name().into(),
                    opt_float_cell(r.bounds.map(|b| b.0)),
                    opt_float_cell(r.bounds.map(|b| b.1)),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "qec": r.qec,
                        "method": r.method.name(),
                        "lower": r.bounds.map(|b| b.0),
                        "upper": r.bounds.map(|b| b.1),
                    })
                })
                .collect();
            writeln!(out, "{}", json!({ "rows": rows }))?;
        }
        OutputFormat::Plain => {
            writeln!(out, "n\tqec\tmethod\tlower\tupper")?;
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.n,
                    float_cell(r.qec),
                    r.method.name(),
                    opt_float_cell(r.bounds.map(|b| b.0)),
                    opt_float_cell(r.bounds.map(|b| b.1))
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_dist(target: &Target, fmt: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let g = match target {
        Target::Fan { n } => graphs::fan(*n)?,
        Target::Graph { file } => load_graph(file)?,
    };
    let d = graphs::distance_matrix(&g)?;
    write_dist(&d, fmt, out)?;
    Ok(EXIT_OK)
}

fn write_dist(d: &DistMatrix, fmt: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    match fmt {
        OutputFormat::Json => {
            let rows: Vec<&[u32]> = d.rows().collect();
            writeln!(out, "{}", json!({ "n": d.n(), "rows": rows }))?;
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            for row in d.rows() {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        OutputFormat::Plain => {
            for row in d.rows() {
                let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
    }
    Ok(())
}
