//! Command-line front end for the Schubert combinatorics library.
//!
//! One subcommand per operation family; permutations are given in one-line
//! notation as digit strings for n <= 9 ("431562") or comma separated above
//! that ("10,3,2,1,4,5,6,7,8,9").  All mathematical output goes to stdout,
//! diagnostics to stderr.  Exit codes: 0 on success, 1 on a mathematical
//! domain error (or failed verification), 2 on a usage error.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use schubert_core::chute::build_chute_poset;
use schubert_core::grassmann::{
    inverse_grassmannian_to_flagged, it_to_reverse_ssyt, lambda_of, Tableau,
};
use schubert_core::pipedream::{enumerate_rp, PipeDream};
use schubert_core::poly::{
    schubert_dd, schubert_from_pipedreams, schubert_from_tableaux, schur_expand,
    stanley_truncated, Partition, SparsePolynomial,
};
use schubert_core::tableau::{enumerate_it, enumerate_uit, InversionsTableau};
use schubert_core::verify::{self, Suite};
use schubert_core::Permutation;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Schubert polynomials via inversions tableaux, pipe dreams and divided differences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Schubert polynomial of a permutation.
    Schubert {
        /// Permutation in one-line notation.
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        /// Which of the three equivalent constructions to run.
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the inversions tableaux, pipe dreams, or unbounded tableaux of w.
    Enumerate {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long, value_enum)]
        what: What,
        /// Entry cap for unbounded tableaux (only with --what uit).
        #[arg(long, required_if_eq("what", "uit"))]
        max_entry: Option<u32>,
    },
    /// Map a pipe dream to its inversions tableau or back (JSON on stdin).
    Bijection {
        #[arg(long, value_enum)]
        dir: Direction,
    },
    /// Truncated Stanley symmetric polynomial in a fixed number of variables.
    Stanley {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        /// Number of variables to keep.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        vars: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Grassmannian data: the partition and the matching (reverse or flagged)
    /// semistandard tableaux, depending on which side has the single descent.
    Grassmann {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tableaux skew Schubert polynomial of a nested Grassmannian pair.
    Skew {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(value_parser = parse_perm)]
        u: Permutation,
        /// The common descent position.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chute-move poset on the reduced pipe dreams of w.
    Poset {
        #[arg(value_parser = parse_perm)]
        w: Permutation,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
    },
    /// Run the property-check suites and report one line per check.
    Verify {
        /// Symmetric group size the checks sweep over.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dd,
    Tableaux,
    Pipedreams,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Tableaux,
    Pipedreams,
    Uit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    #[value(name = "pd2it")]
    Pd2It,
    #[value(name = "it2pd")]
    It2Pd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Grassmann,
    Chute,
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    Permutation::parse(text).map_err(|e| e.to_string())
}

/// Restore the default SIGPIPE disposition so pipelines like
/// `schubert grassmann ... | head` end quietly when the reader closes the
/// stream, instead of panicking on the broken pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Schubert { w, method, format } => {
            let poly = match method {
                Method::Dd => schubert_dd(&w),
                Method::Tableaux => schubert_from_tableaux(&w),
                Method::Pipedreams => schubert_from_pipedreams(&w),
            };
            print_poly(&poly, format)?;
        }
        Command::Enumerate { w, what, max_entry } => {
            if what != What::Uit && max_entry.is_some() {
                Cli::command()
                    .error(
                        clap::error::ErrorKind::ArgumentConflict,
                        "--max-entry only applies to --what uit",
                    )
                    .exit();
            }
            let json = match what {
                What::Tableaux => to_pretty(&enumerate_it(&w))?,
                What::Pipedreams => to_pretty(&enumerate_rp(&w))?,
                What::Uit => to_pretty(&enumerate_uit(&w, max_entry.unwrap()))?,
            };
            println!("{json}");
        }
        Command::Bijection { dir } => {
            let mut input = String::new();
            std::io::stdin()
                .read_to_string(&mut input)
                .map_err(display)?;
            match dir {
                Direction::Pd2It => {
                    let dream: PipeDream = parse_stdin(&input);
                    let tableau = dream.to_tableau().map_err(display)?;
                    println!("{}", to_pretty(&tableau)?);
                }
                Direction::It2Pd => {
                    let tableau: InversionsTableau = parse_stdin(&input);
                    let dream = PipeDream::from_tableau(&tableau).map_err(display)?;
                    println!("{}", to_pretty(&dream)?);
                }
            }
        }
        Command::Stanley { w, vars, format } => {
            let poly = stanley_truncated(&w, vars as usize);
            print_poly(&poly, format)?;
        }
        Command::Grassmann { w, format } => grassmann_report(&w, format)?,
        Command::Skew { w, u, k, format } => {
            let poly =
                schubert_core::grassmann::skew_schubert(&w, &u, k as usize).map_err(display)?;
            let expansion = schur_expand(&poly).map_err(display)?;
            match format {
                Format::Text => {
                    println!("{}", poly.render());
                    println!("schur: {}", render_expansion(&expansion)?);
                }
                Format::Json => {
                    let terms: Vec<serde_json::Value> = expansion
                        .iter()
                        .map(|(part, coef)| {
                            Ok(serde_json::json!({
                                "partition": part.parts(),
                                "coefficient": small(coef)?,
                            }))
                        })
                        .collect::<Result<_, String>>()?;
                    let value = serde_json::json!({
                        "polynomial": serde_json::to_value(&poly).map_err(display)?,
                        "schur_expansion": terms,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).map_err(display)?);
                }
            }
        }
        Command::Poset { w, format } => {
            let poset = build_chute_poset(&w);
            match format {
                PosetFormat::Dot => print!("{}", poset.to_dot()),
                PosetFormat::Json => println!("{}", to_pretty(&poset)?),
            }
        }
        Command::Verify { n, suite } => {
            let suite = match suite {
                SuiteArg::All => None,
                SuiteArg::Core => Some(Suite::Core),
                SuiteArg::Grassmann => Some(Suite::Grassmann),
                SuiteArg::Chute => Some(Suite::Chute),
            };
            let report = verify::run(n as usize, suite);
            let mut failed = 0usize;
            for (name, outcome) in &report {
                match outcome {
                    Ok(()) => println!("pass {name}"),
                    Err(message) => {
                        failed += 1;
                        println!("FAIL {name}: {message}");
                    }
                }
            }
            eprintln!(
                "{} checks, {} passed, {} failed",
                report.len(),
                report.len() - failed,
                failed
            );
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Everything the `grassmann` subcommand prints.  A permutation with its one
/// descent at k gets the partition and reverse tableaux; one whose inverse is
/// Grassmannian gets the flagged tableaux instead; the identity is vacuously
/// Grassmannian and reported with k = 1.
fn grassmann_report(w: &Permutation, format: Format) -> Result<(), String> {
    let direct = if w.length() == 0 {
        Some(1)
    } else {
        w.is_grassmannian()
    };
    if let Some(k) = direct {
        let lambda = if w.length() == 0 {
            Partition::empty()
        } else {
            lambda_of(w, k).map_err(display)?
        };
        let tableaux: Vec<Tableau> = enumerate_it(w)
            .iter()
            .map(it_to_reverse_ssyt)
            .collect::<schubert_core::Result<_>>()
            .map_err(display)?;
        return match format {
            Format::Text => {
                println!("Grassmannian: k = {k}");
                println!("lambda = {}", to_compact(lambda.parts())?);
                println!("tableaux ({}):", tableaux.len());
                for t in &tableaux {
                    println!("{}", to_compact(t.rows())?);
                }
                Ok(())
            }
            Format::Json => {
                let value = serde_json::json!({
                    "kind": "grassmannian",
                    "k": k,
                    "lambda": lambda.parts(),
                    "tableaux": tableaux,
                });
                println!("{}", serde_json::to_string_pretty(&value).map_err(display)?);
                Ok(())
            }
        };
    }
    let inverse = w.inverse();
    let Some(k) = inverse.is_grassmannian() else {
        return Err(format!(
            "{} is neither Grassmannian nor inverse Grassmannian (exactly one descent required)",
            w.display_string()
        ));
    };
    let tableaux: Vec<Tableau> = enumerate_it(w)
        .iter()
        .map(|t| inverse_grassmannian_to_flagged(t, &inverse, k))
        .collect::<schubert_core::Result<_>>()
        .map_err(display)?;
    let shape = tableaux[0].outer().clone();
    let flags: Vec<u32> = tableaux[0].flags().unwrap_or(&[]).to_vec();
    match format {
        Format::Text => {
            println!("inverse Grassmannian: k = {k}");
            println!("shape = {}", to_compact(shape.parts())?);
            println!("flags = {}", to_compact(&flags)?);
            println!("tableaux ({}):", tableaux.len());
            for t in &tableaux {
                println!("{}", to_compact(t.rows())?);
            }
        }
        Format::Json => {
            let value = serde_json::json!({
                "kind": "inverse-grassmannian",
                "k": k,
                "shape": shape.parts(),
                "flags": flags,
                "tableaux": tableaux,
            });
            println!("{}", serde_json::to_string_pretty(&value).map_err(display)?);
        }
    }
    Ok(())
}

fn print_poly(poly: &SparsePolynomial, format: Format) -> Result<(), String> {
    match format {
        Format::Text => println!("{}", poly.render()),
        Format::Json => println!("{}", to_pretty(poly)?),
    }
    Ok(())
}

/// `s[3,1] + 2*s[2,2]` in ascending partition order.
fn render_expansion(expansion: &BTreeMap<Partition, BigInt>) -> Result<String, String> {
    if expansion.is_empty() {
        return Ok("0".into());
    }
    let pieces: Vec<String> = expansion
        .iter()
        .map(|(part, coef)| {
            let parts: Vec<String> = part.parts().iter().map(|p| p.to_string()).collect();
            let symbol = format!("s[{}]", parts.join(","));
            if coef == &BigInt::from(1) {
                symbol
            } else {
                format!("{coef}*{symbol}")
            }
        })
        .collect();
    Ok(pieces.join(" + "))
}

/// Stdin payloads that do not deserialize are usage errors, matching the
/// treatment of malformed argv.
fn parse_stdin<T: serde::de::DeserializeOwned>(input: &str) -> T {
    match serde_json::from_str(input) {
        Ok(value) => value,
        Err(e) => Cli::command()
            .error(
                clap::error::ErrorKind::ValueValidation,
                format!("stdin JSON: {e}"),
            )
            .exit(),
    }
}

fn to_pretty<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(display)
}

fn to_compact<T: serde::Serialize + ?Sized>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(display)
}

fn small(coef: &BigInt) -> Result<i64, String> {
    coef.to_string()
        .parse::<i64>()
        .map_err(|_| "coefficient does not fit a 64-bit integer".to_string())
}

fn display<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}
