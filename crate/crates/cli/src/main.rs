use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

mod commands;
mod error;
mod report;
mod selftest;

use error::{CliError, EXIT_PARSE};
use report::{Inputs, RunReport};

#[derive(Debug, Parser)]
#[command(name = "eqcoh", version, about = "Burnside rings, equivariant degrees and Fredholm cocycle indices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Largest group order accepted when closing generators.
    #[arg(long, global = true, default_value_t = eqcoh_core::group::DEFAULT_GROUP_CAP)]
    pub cap: usize,
    /// Jacobian determinants below this are treated as singular.
    #[arg(long, global = true)]
    pub tol_jacobian: Option<f64>,
    /// Residual accepted as a zero by Newton's method.
    #[arg(long, global = true)]
    pub tol_residual: Option<f64>,
    /// Newton seeds per axis.
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for the randomized suites of `selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Subgroup lattices of finite permutation groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Burnside ring arithmetic through the table of marks.
    #[command(subcommand)]
    Burnside(BurnsideCmd),
    /// Almost connected Lie groups and their maximal compact subgroups.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Brouwer and equivariant degrees of polynomial maps.
    #[command(subcommand)]
    Degree(DegreeCmd),
    /// Fredholm cocycles: index, algebra and picture conversion.
    #[command(subcommand)]
    Schwartz(SchwartzCmd),
    /// Runs the invariant suites and prints a pass/fail summary.
    #[command(hide = true)]
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Conjugacy classes of subgroups.
    Classes { group: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BurnsideCmd {
    /// Table of marks.
    Marks { group: PathBuf },
    /// Product of two elements of A(G).
    Mul { group: PathBuf, a: PathBuf, b: PathBuf },
    /// Whether a marks vector is the character of an element of A(G).
    Check { group: PathBuf, marks: PathBuf },
    /// Power of the augmentation ideal.
    Ideal {
        group: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Abelian invariants of A(G) modulo a power of the augmentation ideal.
    Quotient {
        group: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Restriction to the representative of a subgroup class.
    Res {
        group: PathBuf,
        element: PathBuf,
        #[arg(long)]
        class: usize,
    },
    /// Induction from the representative of a subgroup class.
    Ind {
        group: PathBuf,
        element: PathBuf,
        #[arg(long)]
        class: usize,
    },
    /// Primitive idempotents of A(G) ⊗ Q.
    Idempotents { group: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Maximal compact subgroup and Burnside ring of an almost connected group.
    Reduce { name: String },
    /// Names the catalog knows.
    List,
}

#[derive(Debug, Clone, Args)]
pub struct DomainArgs {
    /// Domain as JSON, e.g. '{"ball": {"center": ["0"], "radius": "2"}}', or a file holding it.
    #[arg(long)]
    pub domain: Option<String>,
    /// Radius of a ball about the origin, used when no domain is given.
    #[arg(long)]
    pub radius: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum DegreeCmd {
    /// Brouwer degree of a polynomial map on a ball, box or ellipsoid.
    Brouwer {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        domain: DomainArgs,
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Equivariant degree as an element of the Burnside ring.
    Equivariant {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[command(flatten)]
        domain: DomainArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchwartzCmd {
    /// Index through the least admissible Galerkin truncation.
    Index {
        cocycle: PathBuf,
        /// Truncation to use instead of the least admissible one.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Index at every truncation of a list such as `1..8` or `2,4,6`.
    Stabilize {
        cocycle: PathBuf,
        #[arg(long)]
        n_list: Option<String>,
    },
    /// Sum of two pointed cocycles.
    Sum { a: PathBuf, b: PathBuf },
    /// Cup product.
    Cup { a: PathBuf, b: PathBuf },
    /// Inverse, reversing orientation.
    Inverse { a: PathBuf },
    /// Suspension by one trivial coordinate.
    Suspend { a: PathBuf },
    /// Switches between the pointed and boundary pictures.
    Convert {
        a: PathBuf,
        #[arg(long)]
        to: String,
        /// Radius to certify; by default the radius is doubled until it certifies.
        #[arg(long)]
        radius: Option<String>,
    },
}

impl Command {
    fn path(&self) -> String {
        let sub = match self {
            Command::Group(GroupCmd::Classes { .. }) => "group classes",
            Command::Burnside(c) => match c {
                BurnsideCmd::Marks { .. } => "burnside marks",
                BurnsideCmd::Mul { .. } => "burnside mul",
                BurnsideCmd::Check { .. } => "burnside check",
                BurnsideCmd::Ideal { .. } => "burnside ideal",
                BurnsideCmd::Quotient { .. } => "burnside quotient",
                BurnsideCmd::Res { .. } => "burnside res",
                BurnsideCmd::Ind { .. } => "burnside ind",
                BurnsideCmd::Idempotents { .. } => "burnside idempotents",
            },
            Command::Catalog(CatalogCmd::Reduce { .. }) => "catalog reduce",
            Command::Catalog(CatalogCmd::List) => "catalog list",
            Command::Degree(DegreeCmd::Brouwer { .. }) => "degree brouwer",
            Command::Degree(DegreeCmd::Equivariant { .. }) => "degree equivariant",
            Command::Schwartz(c) => match c {
                SchwartzCmd::Index { .. } => "schwartz index",
                SchwartzCmd::Stabilize { .. } => "schwartz stabilize",
                SchwartzCmd::Sum { .. } => "schwartz sum",
                SchwartzCmd::Cup { .. } => "schwartz cup",
                SchwartzCmd::Inverse { .. } => "schwartz inverse",
                SchwartzCmd::Suspend { .. } => "schwartz suspend",
                SchwartzCmd::Convert { .. } => "schwartz convert",
            },
            Command::Selftest => "selftest",
        };
        sub.to_string()
    }
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let g = &cli.global;
    let cfg = commands::degree_config(g);
    let result = match &cli.command {
        Command::Group(c) => commands::group(c, g, &mut inputs)?,
        Command::Burnside(c) => commands::burnside(c, g, &mut inputs)?,
        Command::Catalog(c) => commands::catalog(c)?,
        Command::Degree(c) => commands::degree(c, g, &cfg, &mut inputs)?,
        Command::Schwartz(c) => commands::schwartz(c, g, &cfg, &mut inputs)?,
        Command::Selftest => selftest::run(g.seed, &cfg)?,
    };
    let mut config = serde_json::to_value(&cfg).expect("config serializes");
    config["cap"] = g.cap.into();
    config["seed"] = g.seed.into();
    config["format"] = format!("{:?}", g.format).to_lowercase().into();
    Ok(RunReport {
        command: cli.command.path(),
        version: env!("CARGO_PKG_VERSION"),
        config,
        inputs: inputs.digests,
        result,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = match cli.global.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Table => report::table(&report),
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
