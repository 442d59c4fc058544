//! `gitstab`: GIT stability analysis of hypersurfaces from the command line.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gitstab_cli::commands::{cmd_classify, cmd_luna, cmd_nonstable, cmd_poset, cmd_strata, cmd_verify_paper, Output};
use gitstab_cli::config::{Format, RunConfig, PROFILE_VAR};

/// Torus-restricted Hilbert–Mumford analysis of degree-d hypersurfaces in
/// n variables (default: quintic threefolds).
#[derive(Parser, Debug)]
#[command(name = "gitstab", version, about)]
struct Cli {
    /// Number of variables (overrides GITSTAB_PROFILE).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Degree (overrides GITSTAB_PROFILE).
    #[arg(long, global = true)]
    d: Option<u32>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Check the computation against the published tables; without a
    /// subcommand, run the complete audit.
    #[arg(long, global = true)]
    verify_paper: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The dominance poset of all monomials.
    Poset {
        /// Restrict to the monomials below these tops (e.g. 3,0,0,2,0).
        #[arg(long)]
        downset: Vec<String>,
    },
    /// The maximal non-stable families.
    Nonstable {
        /// Append the destabilizing flags.
        #[arg(long)]
        flags: bool,
    },
    /// The Luna recursion inside a minimal-orbit family (MO-A … MO2-X).
    Luna {
        /// Family label.
        label: String,
    },
    /// The boundary stratification graph.
    Strata {
        /// Replay every edge certificate and check the graph structure.
        #[arg(long)]
        audit: bool,
        /// Check that the unique sink is x0*x1*x2*x3*x4.
        #[arg(long)]
        sink_check: bool,
    },
    /// Classify a polynomial support (monomial text or JSON exponent lists).
    Classify {
        /// E.g. "x0^5+x1^5" or "[[5,0],[0,5]]".
        expr: String,
    },
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    let env = std::env::var(PROFILE_VAR).ok();
    let config = RunConfig::resolve(cli.n, cli.d, env.as_deref(), cli.format)?;
    match cli.command {
        None if cli.verify_paper => cmd_verify_paper(&config),
        None => anyhow::bail!("no subcommand given (try --help)"),
        Some(Command::Poset { downset }) => cmd_poset(&config, &downset),
        Some(Command::Nonstable { flags }) => cmd_nonstable(&config, flags, cli.verify_paper),
        Some(Command::Luna { label }) => cmd_luna(&config, &label, cli.verify_paper),
        Some(Command::Strata { audit, sink_check }) => cmd_strata(&config, audit, sink_check, cli.verify_paper),
        Some(Command::Classify { expr }) => {
            if cli.verify_paper {
                anyhow::bail!("`classify` has no published table to verify against");
            }
            cmd_classify(&config, &expr)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
