//! The `sodkit` command line.
//!
//! Exit codes: 0 success (or "yes" for predicates), 1 a negative answer or
//! a failed theorem-level verdict, 2 invalid input or unparsable files, 3 an
//! engine error. Reports go to stdout (or `--output`); diagnostics go to
//! stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{classify_real, classify_real_oracle, AlgebraJson, ClassifierMethod, QAlgebra, RealSimpleFactor};
use crate::brauer::{first_failing_power, gbs_has_point, BrauerError, CsaDescriptor, Motive};
use crate::collection::{build_report_with, render_table, CollectionError, ReportOptions, VarietyClass};
use crate::exact::format_rational;
use crate::verify::{render_summary, theorem_level_ok, AxiomRegistry, Verifier};

pub const SEED_ENV: &str = "SODKIT_SEED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Split,
    Quaternion,
}

impl From<ClassArg> for VarietyClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Split => VarietyClass::Split,
            ClassArg::Quaternion => VarietyClass::Quaternion,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Center splitting and trace-form signatures.
    Signature,
    /// Primitive idempotent search and Hilbert symbols.
    Oracle,
}

#[derive(Debug, Parser)]
#[command(
    name = "sodkit",
    version,
    about = "Exceptional collections on S_n-equivariant categories of real Brauer–Severi varieties"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for randomized searches; SODKIT_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest accepted n.
    #[arg(long = "max-n", global = true, default_value_t = 3)]
    pub max_n: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for the cell sweep; results do not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VarietyArgs {
    #[arg(long)]
    pub degree: usize,
    #[arg(long, value_enum)]
    pub class: ClassArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weak exceptional collection of the equivariant category of X^n.
    Collection {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Wedderburn decomposition over ℝ of an algebra given as JSON.
    ClassifyAlgebra {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Signature)]
        method: MethodArg,
    },
    /// Noncommutative motives.
    Motive {
        #[command(subcommand)]
        action: MotiveCommand,
    },
    /// Claim-level verification sweep over degrees 2..=6.
    Verify {
        /// Replace one registry axiom by its negation (harness self-test).
        #[arg(long, hide = true)]
        corrupt_axiom: Option<String>,
    },
    /// Real point on the l-th symmetric power of X.
    RationalPoint {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long = "sym-power")]
        sym_power: usize,
    },
    /// Categorical representability dimension of the equivariant category.
    Rdim {
        #[command(flatten)]
        variety: VarietyArgs,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MotiveCommand {
    /// Exit 0 if the two motives are isomorphic, 1 if not.
    Compare { left: PathBuf, right: PathBuf },
}

/// Result of a subcommand before it is written out.
struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let seed = match seed_override(std::env::var_os(SEED_ENV), cli.common.seed) {
        Ok(s) => s,
        Err(msg) => {
            let _ = writeln!(err, "{msg}");
            return EXIT_INPUT;
        }
    };
    let outcome = match cli.common.jobs {
        Some(0) => Outcome::fail(EXIT_INPUT, "--jobs must be positive"),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, seed)),
            Err(e) => Outcome::fail(EXIT_ENGINE, format!("thread pool: {e}")),
        },
        None => dispatch(&cli, seed),
    };
    if !outcome.stderr.is_empty() {
        let _ = err.write_all(outcome.stderr.as_bytes());
        if !outcome.stderr.ends_with('\n') {
            let _ = err.write_all(b"\n");
        }
    }
    if !outcome.stdout.is_empty() {
        match &cli.common.output {
            Some(path) => {
                if let Err(e) = fs::write(path, &outcome.stdout) {
                    let _ = writeln!(err, "cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            }
            None => {
                let _ = out.write_all(outcome.stdout.as_bytes());
            }
        }
    }
    outcome.code
}

/// `SODKIT_SEED`, when set, replaces `--seed`.
fn seed_override(env: Option<OsString>, flag: u64) -> Result<u64, String> {
    match env {
        None => Ok(flag),
        Some(v) => v
            .to_str()
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| format!("{SEED_ENV} must be an unsigned integer, got {v:?}")),
    }
}

fn report_options(common: &Common, seed: u64) -> ReportOptions {
    ReportOptions {
        seed,
        max_n: common.max_n,
        ..Default::default()
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn engine_failure(e: CollectionError) -> Outcome {
    let code = if e.is_input_error() { EXIT_INPUT } else { EXIT_ENGINE };
    Outcome::fail(code, format!("error: {e}"))
}

fn dispatch(cli: &Cli, seed: u64) -> Outcome {
    let common = &cli.common;
    match &cli.command {
        Command::Collection { variety, n } => {
            let class = VarietyClass::from(variety.class);
            match build_report_with(variety.degree, class.brauer(), *n, &report_options(common, seed)) {
                Ok(rep) => Outcome::ok(match common.format {
                    Format::Table => render_table(&rep),
                    Format::Json => to_json(&rep),
                }),
                Err(e) => engine_failure(e),
            }
        }
        Command::Rdim { variety, n } => {
            let class = VarietyClass::from(variety.class);
            match build_report_with(variety.degree, class.brauer(), *n, &report_options(common, seed)) {
                Ok(rep) => Outcome::ok(match common.format {
                    Format::Table => format!("{}\n", rep.rdim),
                    Format::Json => to_json(&serde_json::json!({
                        "degree": variety.degree,
                        "class": class,
                        "n": n,
                        "rdim": rep.rdim,
                    })),
                }),
                Err(e) => engine_failure(e),
            }
        }
        Command::ClassifyAlgebra { input, method } => classify_algebra(input, *method, common.format, seed),
        Command::Motive {
            action: MotiveCommand::Compare { left, right },
        } => motive_compare(left, right),
        Command::Verify { corrupt_axiom } => {
            let registry = match corrupt_axiom {
                None => AxiomRegistry::standard(),
                Some(id) => match AxiomRegistry::corrupted(id) {
                    Some(r) => r,
                    None => return Outcome::fail(EXIT_INPUT, format!("unknown axiom {id}")),
                },
            };
            let mut verifier = Verifier::new(registry, report_options(common, seed));
            match verifier.sweep() {
                Ok(verdicts) => {
                    let code = if theorem_level_ok(&verdicts) { EXIT_OK } else { EXIT_NO };
                    let summary = render_summary(&verdicts);
                    match common.format {
                        Format::Table => Outcome {
                            code,
                            stdout: summary,
                            stderr: String::new(),
                        },
                        Format::Json => Outcome {
                            code,
                            stdout: to_json(&verdicts),
                            stderr: summary,
                        },
                    }
                }
                Err(e) => Outcome::fail(EXIT_ENGINE, format!("error: {e}")),
            }
        }
        Command::RationalPoint { variety, sym_power } => rational_point(variety, *sym_power, common.format),
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    dim: usize,
    seed: u64,
    method: ClassifierMethod,
    factors: Vec<RealSimpleFactor>,
    idempotents: Vec<Vec<String>>,
}

fn classify_algebra(path: &Path, method: MethodArg, format: Format, seed: u64) -> Outcome {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())),
    };
    let wire: AlgebraJson = match serde_json::from_str(&text) {
        Ok(w) => w,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())),
    };
    let algebra = match QAlgebra::try_from(&wire) {
        Ok(a) => a,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{}: {e}", path.display())),
    };
    let result = match method {
        MethodArg::Signature => classify_real(&algebra),
        MethodArg::Oracle => classify_real_oracle(&algebra, seed),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_ENGINE, format!("error: {e}")),
    };
    let view = ClassifyOutput {
        dim: algebra.dim(),
        seed,
        method: report.method,
        factors: report.factors.clone(),
        idempotents: report
            .idempotents
            .iter()
            .map(|e| e.iter().map(format_rational).collect())
            .collect(),
    };
    Outcome::ok(match format {
        Format::Json => to_json(&view),
        Format::Table => {
            let fs: Vec<String> = view.factors.iter().map(|f| f.to_string()).collect();
            format!("dim {}: {}\n", view.dim, fs.join(" × "))
        }
    })
}

fn read_motive(path: &Path) -> Result<Motive, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn motive_compare(left: &Path, right: &Path) -> Outcome {
    let (x, y) = match (read_motive(left), read_motive(right)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return Outcome::fail(EXIT_INPUT, e),
    };
    match first_failing_power(&x, &y) {
        None => Outcome {
            code: EXIT_OK,
            stdout: String::new(),
            stderr: format!(
                "isomorphic: class multisets agree for every power p=1..={}",
                x.modulus()
            ),
        },
        Some(0) => Outcome::fail(
            EXIT_NO,
            format!(
                "power p=0: sizes or moduli differ ({} classes mod {} vs {} classes mod {})",
                x.len(),
                x.modulus(),
                y.len(),
                y.modulus()
            ),
        ),
        Some(p) => Outcome::fail(EXIT_NO, format!("power p={p} multisets differ")),
    }
}

#[derive(Serialize)]
struct PointChain {
    degree: usize,
    class: VarietyClass,
    sym_power: usize,
    index: usize,
    divides: bool,
    has_point: bool,
}

fn rational_point(variety: &VarietyArgs, l: usize, format: Format) -> Outcome {
    let class = VarietyClass::from(variety.class);
    let chain = (|| -> Result<PointChain, BrauerError> {
        let a = CsaDescriptor::new(variety.degree, class.brauer())?;
        let has_point = gbs_has_point(&a, l)?;
        Ok(PointChain {
            degree: variety.degree,
            class,
            sym_power: l,
            index: a.index(),
            divides: l.is_multiple_of(a.index()),
            has_point,
        })
    })();
    let chain = match chain {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("error: {e}")),
    };
    let code = if chain.has_point { EXIT_OK } else { EXIT_NO };
    let stdout = match format {
        Format::Json => to_json(&chain),
        Format::Table => format!(
            "ind(A) = {}\n{} {} {}\nS^{}(X)(R) {}\n",
            chain.index,
            chain.index,
            if chain.divides { "divides" } else { "does not divide" },
            l,
            l,
            if chain.has_point { "is nonempty" } else { "is empty" }
        ),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}
