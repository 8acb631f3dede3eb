use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use partgroup::cli_io::{
    catalog::DEFAULT_CATALOG, cmd_build, cmd_check, cmd_decompose, cmd_homs, cmd_quotient, cmd_theorem, CliError,
    TheoremArgs, EXIT_USAGE,
};
use partgroup::morphisms::HomBudget;
use partgroup::theorems::SweepConfig;
use partgroup::Freeness;

/// Partial groups over finite Cayley tables.
///
/// Groups are catalog names (Z6, S3, D4, Z2xZ4, Q8, A4, ...) or file:<path>
/// to a .cayley file. Partial groups are written GROUP:SUPPORT:DEFECT, e.g.
/// Z6:0,3:0,2.
#[derive(Parser)]
#[command(name = "partgroup", version)]
struct Cli {
    /// Accept defects that merely factorize uniquely with the support (experimental)
    #[arg(long, global = true)]
    weak_freeness: bool,
    /// Worker threads for sweeps
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every supplement pair (E, D~) of a group
    Decompose { group: String },
    /// Build a partial group and print its factorizations and law table
    Build {
        group: String,
        #[arg(long)]
        support: String,
        #[arg(long)]
        defect: String,
    },
    /// Run claims over enumerated partial groups
    Check(CheckArgs),
    /// List homomorphisms between two partial groups
    Homs {
        from: String,
        to: String,
        #[arg(long, default_value_t = 8)]
        max_carrier: usize,
    },
    /// Print the quotient by a normal partial subgroup
    Quotient {
        instance: String,
        #[arg(long)]
        normal: String,
    },
    /// Check an isomorphism theorem
    Theorem {
        #[command(subcommand)]
        which: TheoremCommand,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Claim ids, or "all"
    #[arg(required = true)]
    claims: Vec<String>,
    #[arg(long, default_value_t = 8)]
    max_order: usize,
    #[arg(long, default_value_t = 4)]
    max_defect: usize,
    /// Comma-separated catalog groups
    #[arg(long, value_delimiter = ',')]
    catalog: Option<Vec<String>>,
    /// Write the report document here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-report timings
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum TheoremCommand {
    /// First theorem on homs FROM -> TO (all of them unless --images is given)
    #[command(name = "1")]
    First {
        from: String,
        to: String,
        /// Image of each carrier element, in carrier order
        #[arg(long)]
        images: Option<String>,
    },
    /// Second theorem on (H, K), K normal (all pairs unless both are given)
    #[command(name = "2")]
    Second {
        instance: String,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        k: Option<String>,
    },
    /// Third theorem on N inside K, both normal (all chains unless both are given)
    #[command(name = "3")]
    Third {
        instance: String,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mode = if cli.weak_freeness {
        Freeness::Weak
    } else {
        Freeness::Strict
    };
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Decompose { group } => print!("{}", cmd_decompose(&group)?),
        Command::Build { group, support, defect } => print!("{}", cmd_build(&group, &support, &defect, mode)?),
        Command::Check(args) => {
            let config = SweepConfig {
                max_order: args.max_order,
                max_defect: args.max_defect,
                catalog: args
                    .catalog
                    .unwrap_or_else(|| DEFAULT_CATALOG.iter().map(|s| s.to_string()).collect()),
                freeness: mode,
                timings: args.timings,
                ..SweepConfig::default()
            };
            let doc = cmd_check(&args.claims, &config)?;
            let json = doc.to_json()?;
            match args.out {
                Some(path) => {
                    std::fs::write(&path, json).map_err(|source| CliError::Io { path, source })?;
                    print!("{}", doc.digest());
                }
                None => {
                    print!("{json}");
                    eprint!("{}", doc.digest());
                }
            }
            return Ok(doc.exit_code());
        }
        Command::Homs { from, to, max_carrier } => {
            print!("{}", cmd_homs(&from, &to, HomBudget { max_carrier }, mode)?)
        }
        Command::Quotient { instance, normal } => print!("{}", cmd_quotient(&instance, &normal, mode)?),
        Command::Theorem { which } => {
            let args = match which {
                TheoremCommand::First { from, to, images } => TheoremArgs::First { from, to, images },
                TheoremCommand::Second { instance, h, k } => TheoremArgs::Second { instance, h, k },
                TheoremCommand::Third { instance, k, n } => TheoremArgs::Third { instance, k, n },
            };
            let (out, code) = cmd_theorem(&args, HomBudget::default(), mode)?;
            print!("{out}");
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
