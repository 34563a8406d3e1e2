//! `min3gen`: coset enumeration, classification, dihedral algebra audits
//! and shape enumeration from the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use min3gen::dihedral_algebra::DEFAULT_SEED;
use min3gen::fpgroup::{Strategy, DEFAULT_MAX_COSETS};

#[derive(Parser, Debug)]
#[command(name = "min3gen", version, about = "Minimal 3-generated 6-transposition groups and their Majorana algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Coset limit for enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    /// Coset enumeration strategy: hlt or felsch.
    #[arg(long, global = true, default_value_t = Strategy::Hlt)]
    pub strategy: Strategy,
    /// Include the large classification rows (orders above 1000).
    #[arg(long, global = true)]
    pub extended: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order of a finitely presented group, e.g. "R(2,3,5)" or "a,b | a^2, b^3, (a*b)^5".
    Order {
        #[arg(long)]
        relators: String,
    },
    /// Minimal 3-generated quotients of a classification row or a presentation.
    Classify {
        /// Row id such as 333-4; see `--list`.
        #[arg(long, conflicts_with_all = ["relators", "all", "list"])]
        row: Option<String>,
        /// Presentation over a, b, c, e.g. "R(3,3,3) + (a*b^c)^4".
        #[arg(long, requires = "klm")]
        relators: Option<String>,
        /// Product orders k,l,m for a custom presentation.
        #[arg(long, value_parser = parse_klm)]
        klm: Option<(u32, u32, u32)>,
        /// Every row of the table (large rows need --extended).
        #[arg(long)]
        all: bool,
        /// Print the row ids and exit.
        #[arg(long)]
        list: bool,
        /// Take D to be all involutions of each quotient.
        #[arg(long)]
        all_involutions: bool,
    },
    /// Audit the dihedral algebras, or dump one structure-constant table.
    Dihedral {
        /// 1A, 2A, 2B, 3A, 3C, 4A, 4B, 5A, 6A or all.
        #[arg(long = "type", default_value = "all")]
        ty: String,
        /// Print the completed table as JSON instead of auditing.
        #[arg(long)]
        dump: bool,
    },
    /// Axis systems and shapes for a catalogue group.
    Shapes {
        /// Catalogue name (S4, 3^2:2, (5^2:3):2, ...) or all.
        #[arg(long)]
        group: String,
        /// Number of orbits of axes, 1 to 3; all three when omitted.
        #[arg(long)]
        orbits: Option<usize>,
        /// CSV summary, one line per system.
        #[arg(long)]
        summary: bool,
    },
    /// Re-check every group of the classification theorem.
    #[command(name = "audit-theorem1")]
    AuditTheorem1,
    /// K_p membership and odd-core structure over the catalogue.
    #[command(name = "kp-check")]
    KpCheck {
        /// A single catalogue group; all when omitted.
        #[arg(long)]
        group: Option<String>,
        /// Odd prime; 3 and 5 when omitted.
        #[arg(long)]
        p: Option<u32>,
    },
}

fn parse_klm(s: &str) -> Result<(u32, u32, u32), String> {
    let v: Vec<u32> = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v[..] {
        [k, l, m] => Ok((k, l, m)),
        _ => Err(format!("expected k,l,m, got {s:?}")),
    }
}

/// Exit status 1: a computation or audit failed. Status 2: bad input.
#[derive(Debug)]
pub enum CliError {
    Failure(String),
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = match &e {
                CliError::Failure(m) | CliError::Usage(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(e.code())
        }
    }
}
