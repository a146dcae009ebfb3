//! Thin command-line front end over the library.
//!
//! Two subcommands: `verify` runs identity suites over a parameter grid and
//! prints a deterministic report; `emit` serializes one named operator on one
//! irreducible module as JSON. Exit codes: 0 when every check passes, 1 when
//! any check fails, 2 on configuration or usage errors.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use uqsl2::module::BasisKind;
use uqsl2::scalar::{IdentKind, QContext, Rat, ThetaMode};
use uqsl2::{emit_operator, run_suites, Error, Suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "uqsl2",
    version,
    about = "Exact verification of U_q(sl2) module identities over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a parameter grid.
    Verify {
        /// Largest diameter d to verify (modules have dimension d + 1).
        #[arg(long = "d-max", default_value_t = 8)]
        d_max: usize,
        /// Comma-separated rational values of q, each outside {0, 1, -1}.
        #[arg(long = "q", value_delimiter = ',', value_parser = parse_rat,
              default_values_t = [Rat::int(4), Rat::int(9)])]
        q: Vec<Rat>,
        /// Comma-separated square-root conventions: sq-q and/or sq-qinv.
        #[arg(long = "theta-mode", value_delimiter = ',', value_parser = parse_theta_mode,
              default_value = "sq-q,sq-qinv")]
        theta_mode: Vec<ThetaMode>,
        /// Twist exponents: an inclusive range `a..b` or a comma list.
        #[arg(long = "t", default_value = "-2..2", allow_hyphen_values = true)]
        t: String,
        /// Comma-separated identification kinds: primary and/or secondary.
        #[arg(long = "ident", value_delimiter = ',', value_parser = parse_ident,
              default_value = "primary,secondary")]
        ident: Vec<IdentKind>,
        /// Comma-separated suites (relations, casimir, identifications, qexp,
        /// rotators, lusztig, main-theorem, all).
        #[arg(long = "suite", value_delimiter = ',', value_parser = parse_suite,
              default_value = "all")]
        suite: Vec<Suite>,
        /// Seed for the deterministic random-word generator.
        #[arg(long = "seed", default_value_t = 42)]
        seed: u64,
        /// Report format.
        #[arg(long = "format", value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of to standard output.
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
    /// Serialize one named operator on one irreducible module as JSON.
    Emit {
        /// Operator name, e.g. e, k, nz, Lambda, G, Omega, tauy, T, TveeInv.
        #[arg(long = "what")]
        what: String,
        /// Diameter of the module.
        #[arg(long = "d")]
        d: usize,
        /// Sign epsilon of the module.
        #[arg(long = "eps", default_value_t = 1, allow_hyphen_values = true)]
        eps: i32,
        /// Basis to realize the module in.
        #[arg(long = "basis", value_parser = parse_basis, default_value = "equitable")]
        basis: BasisKind,
        /// Rational value of q, outside {0, 1, -1}.
        #[arg(long = "q", value_parser = parse_rat, default_value = "4", allow_hyphen_values = true)]
        q: Rat,
        /// Square root of q (or of 1/q), matching the chosen theta-mode.
        /// Derived from q when omitted.
        #[arg(long = "theta", value_parser = parse_rat, allow_hyphen_values = true)]
        theta: Option<Rat>,
        /// Square-root convention: sq-q or sq-qinv.
        #[arg(long = "theta-mode", value_parser = parse_theta_mode, default_value = "sq-q")]
        theta_mode: ThetaMode,
        /// Twist exponent of the identification.
        #[arg(long = "t", default_value_t = 0, allow_hyphen_values = true)]
        t: i64,
        /// Identification kind: primary or secondary.
        #[arg(long = "ident", value_parser = parse_ident, default_value = "primary")]
        ident: IdentKind,
        /// Output format (json only).
        #[arg(long = "format", value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the JSON here instead of to standard output.
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s).map_err(|e| e.to_string())
}

fn parse_theta_mode(s: &str) -> Result<ThetaMode, String> {
    ThetaMode::from_str(s).map_err(|e| e.to_string())
}

fn parse_ident(s: &str) -> Result<IdentKind, String> {
    IdentKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_str(s).map_err(|e| e.to_string())
}

fn parse_basis(s: &str) -> Result<BasisKind, String> {
    BasisKind::from_str(s).map_err(|e| e.to_string())
}

/// Parses the twist-exponent argument: either an inclusive range `a..b` or a
/// comma-separated list of integers.
fn parse_t_values(s: &str) -> Result<Vec<i64>, Error> {
    let bad = |detail: &str| Error::Config(format!("invalid --t value `{s}`: {detail}"));
    if let Some((a, b)) = s.split_once("..") {
        let lo: i64 = a.trim().parse().map_err(|_| bad("range start is not an integer"))?;
        let hi: i64 = b.trim().parse().map_err(|_| bad("range end is not an integer"))?;
        if lo > hi {
            return Err(bad("range start exceeds range end"));
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|part| part.trim().parse::<i64>().map_err(|_| bad("expected integers")))
        .collect()
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => Ok(std::fs::write(path, content)?),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Verify {
            d_max,
            q,
            theta_mode,
            t,
            ident,
            suite,
            seed,
            format,
            out,
        } => {
            let config = SuiteConfig {
                d_max,
                q_values: q,
                theta_modes: theta_mode,
                t_values: parse_t_values(&t)?,
                ident_kinds: ident,
                suites: suite,
                seed,
                direct_sum_profiles: uqsl2::harness::default_profiles(),
            };
            let report = run_suites(&config)?;
            let rendered = match format {
                Format::Text => report.render_text(),
                Format::Json => {
                    let mut s = report.to_json()?;
                    s.push('\n');
                    s
                }
            };
            write_output(out.as_ref(), &rendered)?;
            eprintln!(
                "verified {} checks in {} ms ({} failed)",
                report.summary.total, report.wall_ms, report.summary.failed
            );
            Ok(report.passed())
        }
        Command::Emit {
            what,
            d,
            eps,
            basis,
            q,
            theta,
            theta_mode,
            t,
            ident,
            format,
            out,
        } => {
            if format != Format::Json {
                return Err(Error::Config("emit supports --format json only".into()));
            }
            let ctx = match theta {
                Some(theta) => QContext::new(q, theta, theta_mode, t, ident)?,
                None => QContext::with_derived_theta(q, theta_mode, t, ident)?,
            };
            let value = emit_operator(&what, d, eps, basis, &ctx)?;
            let mut rendered = serde_json::to_string_pretty(&value).map_err(Error::from)?;
            rendered.push('\n');
            write_output(out.as_ref(), &rendered)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
