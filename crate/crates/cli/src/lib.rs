//! The `configcount` command line.
//!
//! Exit codes: 0 on success or when every verified problem passes, 1 when a
//! verification fails, 2 on usage, parse, budget or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use configcount_core::verify::Perturbation;
use configcount_core::{parse_spec, ProblemSpec, DEFAULT_BUDGET};

mod commands;
mod json;
pub mod svg;
mod text;

pub use commands::Highlight;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "configcount",
    version,
    about = "Count, enumerate and verify lattice-square and word-path problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file in the .ccspec format.
    spec_file: PathBuf,
    /// Only run this problem.
    #[arg(long)]
    problem: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Run independent problems on separate threads.
    #[arg(long)]
    parallel: bool,
    /// Maximum number of candidates a brute-force enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print totals and class breakdowns.
    Count {
        #[command(flatten)]
        common: Common,
    },
    /// List witnesses in canonical order.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: Option<u64>,
    },
    /// Audit closed forms against enumeration.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Lay out the four-step decomposition of a problem.
    Explain {
        #[command(flatten)]
        common: Common,
    },
    /// Draw a problem as SVG.
    Render {
        #[command(flatten)]
        common: Common,
        /// `k=N` for a size class, `witness=N` (or just `N`) for one witness.
        #[arg(long)]
        highlight: Option<String>,
        /// Pixels per lattice unit.
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        cell_size: u32,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Test-only knobs; the binary always runs with the defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct Hooks {
    pub perturbation: Option<Perturbation>,
}

pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, out, err, &Hooks::default())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, hooks: &Hooks) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out, hooks) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "configcount: {}", f.message);
            f.code
        }
    }
}

fn load(common: &Common) -> Result<Vec<ProblemSpec>, Failure> {
    let source = std::fs::read_to_string(&common.spec_file)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", common.spec_file.display())))?;
    let specs = parse_spec(&source)
        .map_err(|e| Failure::usage(format!("{}:{e}", common.spec_file.display())))?;
    match &common.problem {
        Some(name) => {
            let found: Vec<ProblemSpec> = specs.into_iter().filter(|s| &s.name == name).collect();
            if found.is_empty() {
                return Err(Failure::usage(format!("no such problem: {name}")));
            }
            Ok(found)
        }
        None => Ok(specs),
    }
}

fn single(common: &Common, specs: Vec<ProblemSpec>, command: &str) -> Result<ProblemSpec, Failure> {
    match specs.len() {
        1 => Ok(specs.into_iter().next().unwrap()),
        0 => Err(Failure::usage(format!(
            "{} holds no problems",
            common.spec_file.display()
        ))),
        _ => Err(Failure::usage(format!(
            "{command} needs --problem when the file holds several problems"
        ))),
    }
}

fn text_or_json(format: OutputFormat) -> Result<OutputFormat, Failure> {
    if format == OutputFormat::Svg {
        return Err(Failure::usage("svg output is only available for render"));
    }
    Ok(format)
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn execute(cli: Cli, out: &mut dyn Write, hooks: &Hooks) -> Result<i32, Failure> {
    match cli.command {
        Command::Count { common } => {
            let format = text_or_json(common.format)?;
            let specs = load(&common)?;
            let chunks = commands::map_problems(&specs, common.parallel, |s| {
                commands::count(s, format, common.budget)
            })?;
            write_out(out, &commands::join(&chunks, format))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { common, limit } => {
            let format = text_or_json(common.format)?;
            let spec = single(&common, load(&common)?, "enumerate")?;
            write_out(
                out,
                &commands::enumerate(&spec, format, common.budget, limit)?,
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { common } => {
            let format = text_or_json(common.format)?;
            let specs = load(&common)?;
            let results = commands::map_problems(&specs, common.parallel, |s| {
                commands::verify(s, format, common.budget, hooks.perturbation)
            })?;
            let all_pass = results.iter().all(|(pass, _)| *pass);
            let chunks: Vec<String> = results.into_iter().map(|(_, s)| s).collect();
            write_out(out, &commands::join(&chunks, format))?;
            Ok(if all_pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Explain { common } => {
            let format = text_or_json(common.format)?;
            let spec = single(&common, load(&common)?, "explain")?;
            write_out(out, &commands::explain(&spec, format, common.budget)?)?;
            Ok(EXIT_OK)
        }
        Command::Render {
            common,
            highlight,
            cell_size,
            output,
        } => {
            if common.format == OutputFormat::Json {
                return Err(Failure::usage("render only writes svg"));
            }
            let highlight = highlight.as_deref().map(Highlight::parse).transpose()?;
            let spec = single(&common, load(&common)?, "render")?;
            let svg = commands::render(&spec, common.budget, highlight, cell_size)?;
            match output {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
                None => write_out(out, &svg)?,
            }
            Ok(EXIT_OK)
        }
    }
}
