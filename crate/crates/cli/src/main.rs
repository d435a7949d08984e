//! `lcdbch`: coset tables, BCH code parameters, the ternary dual-distance
//! table and the verification sweep.

mod commands;
mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lcdbch::codes::DEFAULT_BUDGET;
use lcdbch::verify::{Family, SweepConfig};

use commands::{CliError, CodeArgs, Outcome};
use config::{parse_u32_list, parse_u64_list, ConfigFile};
use output::Format;

#[derive(Parser)]
#[command(name = "lcdbch", version, about = "BCH codes of lengths (q^m+1)/(q+1) and q^m+1")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-cyclotomic cosets modulo n: leaders and sizes.
    Cosets {
        #[arg(short, long)]
        q: u64,
        #[arg(short, long)]
        n: Option<u64>,
        /// Use n = (q^m+1)/(q+1).
        #[arg(short, long)]
        m: Option<u32>,
        /// Only the K largest leaders.
        #[arg(long, value_name = "K")]
        top: Option<usize>,
    },
    /// Closed-form leader catalog for n = (q^m+1)/(q+1).
    Leaders {
        #[arg(short, long)]
        q: u64,
        #[arg(short, long)]
        m: u32,
        /// The K largest leaders instead of the catalog.
        #[arg(long, value_name = "K")]
        top: Option<usize>,
    },
    /// Parameters of the BCH code C(q, n, δ, b).
    Code {
        #[arg(short, long)]
        q: u64,
        #[arg(short, long)]
        n: Option<u64>,
        /// Use n = (q^m+1)/(q+1).
        #[arg(short, long)]
        m: Option<u32>,
        /// Designed distance.
        #[arg(short, long = "delta")]
        d: u64,
        /// Offset of the first consecutive root.
        #[arg(short, long, default_value_t = 1)]
        b: u64,
        /// Print the generator polynomial, coefficients low to high.
        #[arg(long)]
        gen: bool,
        /// Print both LCD verdicts.
        #[arg(long)]
        lcd: bool,
        /// Codewords or column subsets examined before falling back to bounds.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Lower bound on the dual distance of C(3, 3^m+1, δ, 1).
    DualBound {
        #[arg(short, long)]
        m: u32,
        /// A single designed distance (default: all).
        #[arg(short, long = "delta")]
        d: Option<u64>,
    },
    /// The dual-distance table for n = 3^m+1: bound vs actual.
    Table1 {
        #[arg(short, long, default_value_t = 3)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check every closed form against the brute-force oracle.
    Verify {
        /// Comma-separated families (see --list).
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// q values replacing each family's grid, e.g. 5..13 or 3,4,5.
        #[arg(short, long)]
        q: Option<String>,
        /// m values replacing each family's grid.
        #[arg(short, long)]
        m: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
        /// Samples per point in the sampled family.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Flat key = value settings; flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
        /// List the families and exit.
        #[arg(long)]
        list: bool,
    },
}

fn parse_families(names: &[String]) -> Result<Vec<Family>, CliError> {
    names
        .iter()
        .map(|s| {
            Family::from_name(s.trim()).ok_or_else(|| CliError::Usage(format!("unknown family {s:?}; see verify --list")))
        })
        .collect()
}

fn sweep_config(
    only: Option<Vec<String>>,
    q: Option<String>,
    m: Option<String>,
    budget: Option<u64>,
    samples: Option<usize>,
    seed: Option<u64>,
    file: &ConfigFile,
) -> Result<SweepConfig, CliError> {
    let usage = CliError::Usage;
    let num = |s: &str| s.parse::<u64>().map_err(|e| e.to_string());
    let defaults = SweepConfig::default();
    let only = match only {
        Some(v) => Some(v),
        None => file.get("only", |s| Ok(s.split(',').map(str::to_string).collect())).map_err(usage)?,
    };
    Ok(SweepConfig {
        families: match only {
            Some(names) => parse_families(&names)?,
            None => defaults.families,
        },
        q: match q {
            Some(s) => Some(parse_u64_list(&s).map_err(|e| usage(format!("-q: {e}")))?),
            None => file.get("q", parse_u64_list).map_err(usage)?,
        },
        m: match m {
            Some(s) => Some(parse_u32_list(&s).map_err(|e| usage(format!("-m: {e}")))?),
            None => file.get("m", parse_u32_list).map_err(usage)?,
        },
        budget: budget.or(file.get("budget", num).map_err(usage)?).unwrap_or(defaults.budget),
        samples: samples
            .or(file.get("samples", num).map_err(usage)?.map(|s| s as usize))
            .unwrap_or(defaults.samples),
        seed: seed.or(file.get("seed", num).map_err(usage)?).unwrap_or(defaults.seed),
    })
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let mut format = cli.format;
    let mut jobs = cli.jobs;
    let start_pool = |jobs: Option<usize>| -> Result<(), CliError> {
        if let Some(j) = jobs {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        Ok(())
    };
    match cli.command {
        Command::Verify {
            only,
            q,
            m,
            budget,
            samples,
            seed,
            config,
            list,
        } => {
            if list {
                let mut out = String::new();
                for f in Family::ALL {
                    out.push_str(&format!("{:<22}{}\n", f.name(), f.description()));
                }
                return Ok(Outcome { stdout: out, ok: true });
            }
            let file = match config {
                Some(path) => ConfigFile::load(&path).map_err(CliError::Usage)?,
                None => ConfigFile::default(),
            };
            format = format.or(file.get("format", |s| s.parse::<Format>()).map_err(CliError::Usage)?);
            jobs = jobs.or(file.get("jobs", |s| s.parse::<usize>().map_err(|e| e.to_string())).map_err(CliError::Usage)?);
            let cfg = sweep_config(only, q, m, budget, samples, seed, &file)?;
            start_pool(jobs)?;
            commands::verify_cmd(format.unwrap_or(Format::Text), &cfg)
        }
        command => {
            start_pool(jobs)?;
            let format = format.unwrap_or(Format::Text);
            match command {
                Command::Cosets { q, n, m, top } => commands::cosets(format, q, n, m, top),
                Command::Leaders { q, m, top } => commands::leaders(format, q, m, top),
                Command::Code { q, n, m, d, b, gen, lcd, budget } => commands::code(
                    format,
                    &CodeArgs {
                        q,
                        n,
                        m,
                        delta: d,
                        b,
                        gen,
                        lcd,
                        budget,
                    },
                ),
                Command::DualBound { m, d } => commands::dual_bound(format, m, d),
                Command::Table1 { m, budget } => commands::table1_cmd(format, m, budget),
                Command::Verify { .. } => unreachable!("handled above"),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
