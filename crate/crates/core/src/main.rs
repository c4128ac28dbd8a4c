use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use semimod::harness::{self, builtin_catalog, Catalog, Config, TheoremId, DEFAULT_MAP_CAP};
use semimod::io::{self, Document, ReportOptions, Structure};
use semimod::second::{maximal_second_subsemimodules, second_subsemimodules, socle_subsemimodules};
use semimod::{Semimodule, Semiring, Subset};

#[derive(Parser)]
#[command(name = "semimod", version, about = "Finite semirings, semimodules and second subsemimodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every block of a structure file.
    Validate { file: PathBuf },

    /// List ideals, subsemimodules, seconds, maximal seconds or socle subsemimodules.
    #[command(group(ArgGroup::new("what").required(true)))]
    #[command(group(ArgGroup::new("source").required(true)))]
    Enumerate {
        #[arg(long, group = "what")]
        ideals: bool,
        #[arg(long, group = "what")]
        subsemimodules: bool,
        #[arg(long, group = "what")]
        seconds: bool,
        #[arg(long, group = "what")]
        maximal_seconds: bool,
        #[arg(long, group = "what")]
        socle: bool,
        /// Structure file.
        #[arg(group = "source")]
        file: Option<PathBuf>,
        /// Look the structure up in the built-in catalog instead.
        #[arg(long, group = "source")]
        catalog: bool,
        /// Semiring (for --ideals) or semimodule to enumerate.
        #[arg(long)]
        name: String,
    },

    /// Verify or refute statements by exhaustive search.
    #[command(group(ArgGroup::new("which").required(true)))]
    #[command(group(ArgGroup::new("source").required(true)))]
    Check {
        /// Statement id; repeatable.
        #[arg(long, group = "which")]
        theorem: Vec<String>,
        /// Every registered statement.
        #[arg(long, group = "which")]
        all: bool,
        /// Largest number of candidate maps |target|^|source| to enumerate.
        #[arg(long, default_value_t = DEFAULT_MAP_CAP)]
        size_cap: u64,
        /// Run on the built-in catalog.
        #[arg(long, group = "source")]
        catalog: bool,
        /// Run on the structures of a file.
        #[arg(group = "source")]
        file: Option<PathBuf>,
        /// Include per-verdict wall-clock time.
        #[arg(long)]
        timings: bool,
    },

    /// Show the built-in catalog.
    #[command(group(ArgGroup::new("mode").required(true)))]
    Catalog {
        /// Names and sizes.
        #[arg(long, group = "mode")]
        list: bool,
        /// Every catalog structure in the file format.
        #[arg(long, group = "mode")]
        dump: bool,
    },
}

/// A failure that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn catalog_document(c: &Catalog) -> Document {
    let mut blocks: Vec<Structure> =
        c.semirings.iter().map(|r| Structure::Semiring(Arc::clone(r))).collect();
    blocks.extend(c.modules.iter().map(|m| Structure::Semimodule(Arc::clone(m))));
    Document { blocks }
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn render_sets(sets: &[Subset], format: Format) -> String {
    match format {
        Format::Text => sets.iter().map(|s| format!("{s}\n")).collect(),
        Format::Json => json_line(&sets.iter().map(Subset::to_vec).collect::<Vec<_>>()),
    }
}

#[derive(Serialize)]
struct BlockInfo<'a> {
    kind: &'static str,
    name: &'a str,
    elements: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    over: Option<&'a str>,
}

fn block_info(b: &Structure) -> BlockInfo<'_> {
    match b {
        Structure::Semiring(r) => BlockInfo { kind: "semiring", name: r.name(), elements: r.size(), over: None },
        Structure::Semimodule(m) => BlockInfo {
            kind: "semimodule",
            name: m.name(),
            elements: m.size(),
            over: Some(m.base().name()),
        },
    }
}

fn render_blocks(doc: &Document, format: Format) -> String {
    let infos: Vec<BlockInfo<'_>> = doc.blocks.iter().map(block_info).collect();
    match format {
        Format::Text => infos
            .iter()
            .map(|i| match i.over {
                Some(base) => format!("{} {} over {}: {} elements\n", i.kind, i.name, base, i.elements),
                None => format!("{} {}: {} elements\n", i.kind, i.name, i.elements),
            })
            .collect(),
        Format::Json => json_line(&infos),
    }
}

fn semiring_named(doc: &Document, name: &str) -> Result<Arc<Semiring>, Failure> {
    match doc.get(name) {
        Some(Structure::Semiring(r)) => Ok(Arc::clone(r)),
        Some(Structure::Semimodule(_)) => Err(Failure(format!("`{name}` is a semimodule, not a semiring"))),
        None => Err(Failure(format!("no structure named `{name}`"))),
    }
}

fn semimodule_named(doc: &Document, name: &str) -> Result<Arc<Semimodule>, Failure> {
    match doc.get(name) {
        Some(Structure::Semimodule(m)) => Ok(Arc::clone(m)),
        Some(Structure::Semiring(_)) => Err(Failure(format!("`{name}` is a semiring, not a semimodule"))),
        None => Err(Failure(format!("no structure named `{name}`"))),
    }
}

/// The exit code and everything destined for standard output.
fn run(cli: Cli) -> Result<(ExitCode, String), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Validate { file } => {
            Ok((ExitCode::SUCCESS, render_blocks(&load(&file)?, format)))
        }
        Command::Enumerate { ideals, subsemimodules, seconds, maximal_seconds, socle, file, catalog, name } => {
            let doc = match file {
                Some(path) if !catalog => load(&path)?,
                _ => catalog_document(&builtin_catalog()),
            };
            let sets = if ideals {
                semiring_named(&doc, &name)?.ideals().to_vec()
            } else {
                let m = semimodule_named(&doc, &name)?;
                if subsemimodules {
                    m.subsemimodules().to_vec()
                } else if seconds {
                    second_subsemimodules(&m)
                } else if maximal_seconds {
                    maximal_second_subsemimodules(&m, &m.full())
                } else {
                    debug_assert!(socle);
                    socle_subsemimodules(&m)
                }
            };
            Ok((ExitCode::SUCCESS, render_sets(&sets, format)))
        }
        Command::Check { theorem, all, size_cap, catalog, file, timings } => {
            let ids: Vec<TheoremId> = if all {
                TheoremId::ALL.to_vec()
            } else {
                theorem.iter().map(|t| t.parse()).collect::<Result<_, _>>()?
            };
            let cat = match file {
                Some(path) if !catalog => load(&path)?.catalog(),
                _ => builtin_catalog(),
            };
            let verdicts = harness::run_catalog(&ids, &cat, &Config { map_cap: size_cap });
            let opts = ReportOptions { timings };
            let report = match format {
                Format::Text => io::render_text(&verdicts, opts),
                Format::Json => io::render_json(&verdicts, opts),
            };
            let failed = verdicts.iter().any(|v| v.status == harness::Status::Counterexample);
            Ok((if failed { ExitCode::from(1) } else { ExitCode::SUCCESS }, report))
        }
        Command::Catalog { list, dump } => {
            let doc = catalog_document(&builtin_catalog());
            let text = if dump {
                io::serialize(&doc)
            } else {
                debug_assert!(list);
                render_blocks(&doc, format)
            };
            Ok((ExitCode::SUCCESS, text))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((code, out)) => {
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            code
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
