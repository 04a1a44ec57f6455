//! Command-line interface: argument parsing, dispatch and reporting.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use enumgeom::recipes::{
    self, builtin_ledgers, equivalence_on_projective_space, equivalence_zero_dim,
    multiple_cover_weight, CountReport, LedgerFile,
};
use enumgeom::verify::{run_suite, Suite};
use enumgeom::{BigInt, GrassCtx, Outcome};
use serde::Serialize;
use serde_json::{json, Number, Value as Json};

use crate::eval::{evaluate, grass_class};
use crate::syntax::{self, Context};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "enumgeom",
    version,
    about = "Exact enumerative geometry on Grassmannians and projective bundles"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression, e.g. "integrate(sigma[1]^6) in G(2,5)".
    Grass { query: String },
    /// Run a counting recipe.
    #[command(subcommand)]
    Count(CountCmd),
    /// Equivalences of distinguished varieties.
    #[command(subcommand)]
    Equivalence(EquivalenceCmd),
    /// Degeneration ledgers.
    #[command(subcommand)]
    Ledger(LedgerCmd),
    /// Run a verification suite: paper, properties or all.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CountCmd {
    /// Lines on a complete intersection in P^N.
    Lines {
        #[arg(long)]
        ambient: usize,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        degrees: Vec<u32>,
    },
    /// Conics on a hypersurface of the given degree in P^4.
    Conics {
        #[arg(long)]
        degree: u32,
        /// Must be 4 if given.
        #[arg(long)]
        ambient: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum EquivalenceCmd {
    /// e(Z) = integral of c_k over a k-dimensional family Z = P^k.
    Unobstructed {
        #[arg(long)]
        dim: usize,
        /// The integral of c_k(R^1 pi_* N) over Z.
        #[arg(long, allow_hyphen_values = true)]
        ck: String,
    },
    /// Degree of {c(B) s(Z)}_0 on Z, with both classes given as expressions.
    ZeroDim {
        /// The family Z, e.g. "G(1,3)".
        #[arg(long = "in")]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        chern: String,
        #[arg(long, allow_hyphen_values = true)]
        segre: String,
    },
    /// Weight 1/m^3 of an m-fold cover of a rigid curve.
    Cover {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
}

#[derive(Subcommand, Debug)]
pub enum LedgerCmd {
    /// Check that each ledger's components add up to its total. Without a
    /// file, checks the bundled ledgers.
    Check { file: Option<PathBuf> },
}

/// A failed invocation and its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: usage, syntax, semantic or recipe errors.
    Input(String),
    /// The command ran but a check failed; the report was already written.
    Verification,
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) | Failure::Verification => EXIT_FAILURE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<enumgeom::Error> for Failure {
    fn from(e: enumgeom::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct Report {
    query: String,
    context: Option<String>,
    result: ResultJson,
    timings_ms: f64,
}

#[derive(Serialize)]
struct ResultJson {
    kind: &'static str,
    value: Json,
}

fn number(n: &BigInt) -> Json {
    Number::from_str(&n.to_string()).map_or_else(|_| Json::String(n.to_string()), Json::Number)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, text: &str, report: Report) -> Result<(), Failure> {
        let io = |e: std::io::Error| Failure::Internal(e.to_string());
        match self.format {
            Format::Text => writeln!(self.w, "{text}").map_err(io),
            Format::Json => {
                let s = serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                writeln!(self.w, "{s}").map_err(io)
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_FAILURE
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{text}");
            return code;
        }
    };
    let mut o = Out {
        format: cli.format,
        w: out,
    };
    match dispatch(cli.command, &mut o) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            match &f {
                Failure::Input(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
                Failure::Internal(m) => {
                    let _ = writeln!(err, "internal error: {m}");
                }
                Failure::Verification => {}
            }
            f.code()
        }
    }
}

fn dispatch(cmd: Command, o: &mut Out<'_>) -> Result<(), Failure> {
    match cmd {
        Command::Grass { query } => grass(&query, o),
        Command::Count(c) => count(c, o),
        Command::Equivalence(e) => equivalence(e, o),
        Command::Ledger(LedgerCmd::Check { file }) => ledger(file, o),
        Command::Verify { suite } => verify(&suite, o),
    }
}

fn grass(input: &str, o: &mut Out<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let query = syntax::parse(input).map_err(|e| Failure::Input(e.to_string()))?;
    let value = evaluate(&query).map_err(|e| Failure::Input(e.to_string()))?;
    let json_value = match &value {
        crate::eval::Value::Integer(n) => number(n),
        crate::eval::Value::Cycle(s) => Json::String(s.clone()),
    };
    let report = Report {
        query: query.expr.to_string(),
        context: query.context.as_ref().map(Context::to_string),
        result: ResultJson {
            kind: value.kind(),
            value: json_value,
        },
        timings_ms: elapsed_ms(start),
    };
    o.emit(&value.to_string(), report)
}

fn count(cmd: CountCmd, o: &mut Out<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let (query, report) = match cmd {
        CountCmd::Lines { ambient, degrees } => {
            let list: Vec<String> = degrees.iter().map(u32::to_string).collect();
            let q = format!("lines --ambient {ambient} --degrees {}", list.join(","));
            (
                q,
                recipes::lines_on_complete_intersection(ambient, &degrees)?,
            )
        }
        CountCmd::Conics { degree, ambient } => {
            if let Some(n) = ambient.filter(|&n| n != 4) {
                return Err(Failure::Input(format!(
                    "conic counts are implemented for P^4 only, not P^{n}"
                )));
            }
            (
                format!("conics --degree {degree}"),
                recipes::conics_on_quintic_type(degree)?,
            )
        }
    };
    let text = report.to_string();
    o.emit(&text, count_report(query, &report, start))
}

fn count_report(query: String, r: &CountReport, start: Instant) -> Report {
    let result = match &r.outcome {
        Outcome::Count(c) => ResultJson {
            kind: "integer",
            value: number(c),
        },
        Outcome::FamilyDimension(d) => ResultJson {
            kind: "family_dimension",
            value: json!(d),
        },
    };
    Report {
        query,
        context: Some(r.moduli.clone()),
        result,
        timings_ms: elapsed_ms(start),
    }
}

fn equivalence(cmd: EquivalenceCmd, o: &mut Out<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    match cmd {
        EquivalenceCmd::Unobstructed { dim, ck } => {
            let ck: BigInt = ck
                .trim()
                .parse()
                .map_err(|_| Failure::Input(format!("--ck expects an integer, got '{ck}'")))?;
            let e = equivalence_on_projective_space(dim, &ck)?;
            let report = Report {
                query: format!("unobstructed --dim {dim} --ck {ck}"),
                context: Some(format!("P^{dim}")),
                result: ResultJson {
                    kind: "integer",
                    value: number(&e),
                },
                timings_ms: elapsed_ms(start),
            };
            o.emit(&e.to_string(), report)
        }
        EquivalenceCmd::ZeroDim {
            family,
            chern,
            segre,
        } => {
            let ctx =
                match syntax::parse_context(&family).map_err(|e| Failure::Input(e.to_string()))? {
                    Context::Grass { k, n } => GrassCtx::new(k, n)?,
                    other => {
                        return Err(Failure::Input(format!(
                            "zero-dim equivalence needs a Grassmannian family, got {other}"
                        )))
                    }
                };
            let class = |s: &str| -> Result<_, Failure> {
                let q = syntax::parse(s).map_err(|e| Failure::Input(e.to_string()))?;
                if q.context.is_some() {
                    return Err(Failure::Input(
                        "class expressions take their context from --in".into(),
                    ));
                }
                grass_class(&q.expr, ctx).map_err(|e| Failure::Input(e.to_string()))
            };
            let (c, s) = (class(&chern)?, class(&segre)?);
            let e = equivalence_zero_dim(&ctx, &[c], &[s]);
            let report = Report {
                query: format!("zero-dim --chern {chern} --segre {segre}"),
                context: Some(ctx.to_string()),
                result: ResultJson {
                    kind: "integer",
                    value: number(&e),
                },
                timings_ms: elapsed_ms(start),
            };
            o.emit(&e.to_string(), report)
        }
        EquivalenceCmd::Cover { degree } => {
            let w = multiple_cover_weight(degree)?;
            let report = Report {
                query: format!("cover --degree {degree}"),
                context: None,
                result: ResultJson {
                    kind: "rational",
                    value: Json::String(w.to_string()),
                },
                timings_ms: elapsed_ms(start),
            };
            o.emit(&w.to_string(), report)
        }
    }
}

fn ledger(file: Option<PathBuf>, o: &mut Out<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let (name, ledgers) = match &file {
        Some(path) => (path.display().to_string(), LedgerFile::load(path)?),
        None => ("builtin".to_string(), builtin_ledgers()),
    };
    let verdicts = ledgers.check_all();
    let text: Vec<String> = verdicts.iter().map(ToString::to_string).collect();
    let report = Report {
        query: format!("ledger check {name}"),
        context: None,
        result: ResultJson {
            kind: "ledger",
            value: serde_json::to_value(&verdicts).map_err(|e| Failure::Internal(e.to_string()))?,
        },
        timings_ms: elapsed_ms(start),
    };
    o.emit(&text.join("\n"), report)?;
    if verdicts.iter().all(|v| v.pass) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(suite: &str, o: &mut Out<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let parsed: Suite = suite.parse()?;
    let checks = run_suite(parsed);
    let passed = checks.iter().filter(|c| c.pass).count();
    let mut text: Vec<String> = checks.iter().map(ToString::to_string).collect();
    text.push(format!("{passed} of {} checks pass", checks.len()));
    let report = Report {
        query: format!("verify --suite {suite}"),
        context: None,
        result: ResultJson {
            kind: "verify",
            value: serde_json::to_value(&checks).map_err(|e| Failure::Internal(e.to_string()))?,
        },
        timings_ms: elapsed_ms(start),
    };
    o.emit(&text.join("\n"), report)?;
    if passed == checks.len() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
