use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use simplexbound::commands::{self, Options, Outcome, EXIT_USAGE};
use simplexbound::report::Format;
use simplexbound::{scx, verify, Result, SimplicialComplex};

#[derive(Parser)]
#[command(name = "simplexbound", version, about = "Cyclic polytopes, forbidden complexes and extremal bounds")]
struct Cli {
    /// Output format; plain text when omitted
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Seed for randomized commands
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Work budget for enumerations and searches
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Facets of the cyclic polytope C_d(n)
    Facets { d: usize, n: usize },
    /// f-vector of C_d(n), enumerated and closed form
    Fvector { d: usize, n: usize },
    /// Missing d-faces of C_{2d+1}(n)
    MissingFaces { d: usize, n: usize },
    /// The forbidden family F_d
    ForbiddenFamily { d: usize },
    /// Whether the d-faces of a complex avoid F_d
    CheckFree {
        host: PathBuf,
        #[arg(long)]
        family: usize,
    },
    /// Minor reduction of the cyclic skeleton plus one missing face
    MinorTrace {
        d: usize,
        n: usize,
        /// the missing face, 1-based labels
        #[arg(required = true)]
        m: Vec<usize>,
    },
    /// Exact ex(n, F) for the facet hypergraphs of the given files
    ExactEx {
        n: usize,
        #[arg(long = "family-file", required = true)]
        family_file: Vec<PathBuf>,
    },
    /// Deletion-method constructions avoiding F_d
    RandomConstruct {
        n: usize,
        d: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Polarity graph of PG(2, q)
    Polarity { q: u64 },
    /// Shiftedness tools
    Shifted {
        #[command(subcommand)]
        action: ShiftedAction,
    },
    /// Facets of Δ(d, n)
    DeltaDn { d: usize, n: usize },
    /// f_k bounds of a complex against C_{r+1}
    ProbeConjecture {
        file: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Table of maximal d-face counts for complexes in R^r
    Table1 {
        #[arg(required = true)]
        n: Vec<usize>,
    },
    /// Lower and upper bounds for ex(n, F_d)
    Bounds { d: usize, n: usize },
    /// Run every check
    VerifyAll,
}

#[derive(Subcommand)]
enum ShiftedAction {
    /// Check a complex for shiftedness
    Check { file: PathBuf },
}

fn read(path: &std::path::Path) -> Result<SimplicialComplex> {
    scx::read_file(path)
}

fn dispatch(command: &Command, opts: &Options) -> Result<Outcome> {
    match command {
        Command::Facets { d, n } => commands::facets(*d, *n, opts),
        Command::Fvector { d, n } => commands::fvector(*d, *n, opts),
        Command::MissingFaces { d, n } => commands::missing_faces(*d, *n, opts),
        Command::ForbiddenFamily { d } => commands::forbidden_family(*d, opts),
        Command::CheckFree { host, family } => commands::check_free(&read(host)?, *family, opts),
        Command::MinorTrace { d, n, m } => commands::minor_trace(*d, *n, m, opts),
        Command::ExactEx { n, family_file } => {
            let family = family_file.iter().map(|p| read(p)).collect::<Result<Vec<_>>>()?;
            commands::exact_ex(*n, &family, opts)
        }
        Command::RandomConstruct { n, d, trials } => commands::random_construct(*n, *d, *trials, opts),
        Command::Polarity { q } => commands::polarity(*q, opts),
        Command::Shifted { action: ShiftedAction::Check { file } } => commands::shifted_check(&read(file)?, opts),
        Command::DeltaDn { d, n } => commands::delta_dn_cmd(*d, *n, opts),
        Command::ProbeConjecture { file, r } => commands::probe_conjecture(&read(file)?, *r, opts),
        Command::Table1 { n } => commands::cmd_table1(n, opts),
        Command::Bounds { d, n } => commands::cmd_bounds(*d, *n, opts),
        Command::VerifyAll => verify::cmd_verify_all(opts, &verify::standard_gale),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        format: match cli.format {
            None | Some(FormatArg::Plain) => Format::Plain,
            Some(FormatArg::Csv) => Format::Csv,
            Some(FormatArg::Md) => Format::Md,
        },
        seed: cli.seed,
        budget: cli.budget,
    };
    let outcome = commands::run(|| dispatch(&cli.command, &opts));
    let mut code = outcome.code;
    if outcome.code != 0 && outcome.output.starts_with("error:") {
        eprint!("{}", outcome.output);
    } else if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.output) {
            eprintln!("error: cannot write {}: {e}", path.display());
            code = EXIT_USAGE;
        }
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(code as u8)
}
