use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k3curves::moduli::fibre_breakdown;
use k3curves::parse::parse_int_list;
use k3curves::registry::{emit, run_claims, Format, Manifest};
use k3curves::series::series_ratio;
use k3curves::wps::WeightedCompleteIntersection;

const MAX_UPTO: u64 = 100_000;

#[derive(Parser)]
#[command(name = "k3curves", version, about = "Invariants of curves on K3 surfaces, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series coefficients of a weighted complete intersection.
    Hilbert {
        /// Ambient weights, comma separated.
        #[arg(long, value_parser = int_list)]
        weights: IntList,
        /// Degrees of the defining equations, comma separated.
        #[arg(long, value_parser = int_list, default_value = "")]
        degrees: IntList,
        /// Last degree to print.
        #[arg(long)]
        upto: u64,
    },
    /// Dimension of the general fibre of (S, C) -> C for C in |k L|.
    Fibre {
        #[arg(long)]
        g1: i64,
        #[arg(long)]
        k: i64,
        /// Print the labeled summands.
        #[arg(long)]
        explain: bool,
    },
    /// Recompute the built-in claims and report.
    Verify {
        /// Claim id prefixes, comma separated.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

// clap treats a bare `Vec` field as a repeated argument; wrap the parsed list instead.
#[derive(Clone)]
struct IntList(Vec<u64>);

fn int_list(s: &str) -> Result<IntList, String> {
    parse_int_list(s).map(IntList).map_err(|e| e.to_string())
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Hilbert { weights, degrees, upto } => {
            if upto > MAX_UPTO {
                return usage(format!("--upto is limited to {MAX_UPTO}"));
            }
            let x = match WeightedCompleteIntersection::new(weights.0, degrees.0) {
                Ok(x) => x,
                Err(e) => return usage(e),
            };
            let series = match series_ratio(x.degrees(), x.weights(), upto as usize) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let mut out = String::new();
            for (d, c) in series.coefficients().iter().enumerate() {
                out.push_str(&format!("{d}\t{c}\n"));
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        Command::Fibre { g1, k, explain } => match fibre_breakdown(g1, k) {
            Ok(parts) => {
                println!("{}", parts.total());
                if explain {
                    println!("{parts}");
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Verify { claims, format, out } => {
            let report = match run_claims(&Manifest::builtin(), claims.as_deref()) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let text = emit(&report, format);
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        return usage(format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            if report.summary.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
