//! `flagvar` — cohomology rings and tangent-bundle Chern classes of flag
//! varieties, from Dynkin data, in exact rational arithmetic.
//!
//! Flag varieties are named by spec strings like `A3`, `B2[crossed=1]`, or
//! `G2[crossed=1,2]`: a family letter, a rank, and an optional 1-based
//! list of crossed Dynkin nodes (all nodes crossed when omitted).
//!
//! Exit codes: 0 success, 1 usage or parse errors, 2 Weyl-cap overflow,
//! 3 internal consistency failures.

mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use flagvar::{full_report, parabolic_ring, CohomologyRing, Error, ParabolicSpec};

#[derive(Parser)]
#[command(
    name = "flagvar",
    version,
    about = "Cohomology rings and Chern classes of flag varieties from Dynkin data"
)]
struct Cli {
    /// Refuse to enumerate Weyl groups larger than this order.
    #[arg(long, global = true, default_value_t = flagvar::DEFAULT_WEYL_CAP)]
    weyl_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology ring: Betti numbers and canonical graded bases.
    Ring {
        /// Flag variety spec, e.g. A3 or B2[crossed=1].
        spec: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Emit a LaTeX fragment instead of text.
        #[arg(long, conflicts_with = "json")]
        latex: bool,
    },
    /// Chern classes of the tangent bundle, with the grading weight and
    /// relations.
    Chern {
        /// Flag variety spec, e.g. A3 or B2[crossed=1].
        spec: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Emit a LaTeX fragment instead of text.
        #[arg(long, conflicts_with = "json")]
        latex: bool,
        /// Largest weighted degree searched for relations
        /// (default: dimension + 1).
        #[arg(long)]
        max_degree: Option<u32>,
        /// Also report degrees where every monomial vanishes outright.
        #[arg(long)]
        include_trivial: bool,
    },
    /// Polynomial relations among the Chern classes.
    Relations {
        /// Flag variety spec, e.g. A3 or B2[crossed=1].
        spec: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Largest weighted degree searched for relations
        /// (default: dimension + 1).
        #[arg(long)]
        max_degree: Option<u32>,
        /// Also report degrees where every monomial vanishes outright.
        #[arg(long)]
        include_trivial: bool,
    },
    /// Pairing of the grading vector against every root: zero exactly on
    /// the Levi roots.
    #[command(name = "lemma-delta")]
    LemmaDelta {
        /// Flag variety spec, e.g. A3 or B2[crossed=1].
        spec: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Ranks of the grading filtration of the nilradical.
    Filtration {
        /// Flag variety spec, e.g. A3 or B2[crossed=1].
        spec: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Built-in tables.
    Table {
        /// The rank-2 cohomology table (required; the only table built in).
        #[arg(long)]
        rank2: bool,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Emit a LaTeX fragment instead of text.
        #[arg(long, conflicts_with = "json")]
        latex: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    print!("{}", e);
                    return ExitCode::SUCCESS;
                }
                _ => 1,
            };
            eprint!("{}", e);
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidRootSystem { .. } | Error::Parse { .. } => 1,
        Error::WeylCapExceeded { .. } => 2,
        Error::NonHomogeneous(_) | Error::Truncated { .. } | Error::Internal(_) => 3,
    }
}

fn build_ring(spec: &str, cap: u128) -> Result<CohomologyRing, Error> {
    let parabolic = ParabolicSpec::parse(spec)?;
    parabolic_ring(parabolic, cap)
}

fn run(cli: Cli) -> Result<(), Error> {
    let cap = cli.weyl_cap;
    match cli.command {
        Command::Ring { spec, json, latex } => {
            let ring = build_ring(&spec, cap)?;
            if json {
                print!("{}", render::json_line(&ring.to_json()));
            } else if latex {
                print!("{}", render::ring_latex(&ring));
            } else {
                print!("{}", render::ring_text(&ring));
            }
        }
        Command::Chern { spec, json, latex, max_degree, include_trivial } => {
            let ring = build_ring(&spec, cap)?;
            let report = full_report(&ring, max_degree, include_trivial)?;
            if json {
                print!("{}", render::json_line(&render::chern_report_json(&ring, &report)));
            } else if latex {
                print!("{}", render::chern_latex(&ring, &report));
            } else {
                print!("{}", render::chern_text(&ring, &report));
            }
        }
        Command::Relations { spec, json, max_degree, include_trivial } => {
            let ring = build_ring(&spec, cap)?;
            let report = full_report(&ring, max_degree, include_trivial)?;
            let effective = max_degree.unwrap_or(ring.dim() as u32 + 1);
            if json {
                print!("{}", render::json_line(&render::chern_report_json(&ring, &report)));
            } else {
                print!("{}", render::relations_text(&ring, &report, effective));
            }
        }
        Command::LemmaDelta { spec, json } => {
            let parabolic = ParabolicSpec::parse(&spec)?;
            if json {
                print!("{}", render::json_line(&render::delta_json(&parabolic)));
            } else {
                print!("{}", render::delta_text(&parabolic));
            }
        }
        Command::Filtration { spec, json } => {
            let parabolic = ParabolicSpec::parse(&spec)?;
            if json {
                print!("{}", render::json_line(&render::filtration_json(&parabolic)));
            } else {
                print!("{}", render::filtration_text(&parabolic));
            }
        }
        Command::Table { rank2, json, latex } => {
            if !rank2 {
                return Err(Error::Parse {
                    input: "table".to_string(),
                    message: "pass --rank2 (the only built-in table)".to_string(),
                });
            }
            let mut rings = Vec::new();
            for case in render::rank2_cases() {
                rings.push(build_ring(case, cap)?);
            }
            if json {
                let payload: Vec<flagvar::RingJson> =
                    rings.iter().map(CohomologyRing::to_json).collect();
                print!("{}", render::json_line(&payload));
            } else if latex {
                print!("{}", render::table_latex(&rings));
            } else {
                for ring in &rings {
                    print!("{}\n", render::ring_text(ring));
                }
            }
        }
    }
    Ok(())
}
