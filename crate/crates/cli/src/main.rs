use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ring_core::RingDescriptor;
use twchev::{CliError, RepChoice, SuiteConfig, EXIT_BUDGET, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "twchev",
    version,
    about = "Twisted Chevalley groups over finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Twisted type such as 2A3, 3D4 or 2E6; a bare A3 means untwisted
    twisted_type: String,
    /// Ring short name (gf9, z36, dual-gf9, z2xz2, quad-z5-2) or a JSON descriptor
    #[arg(long, default_value = "gf9")]
    ring: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seeded instances per relation or class pair
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Element budget for enumerations
    #[arg(long, default_value_t = adjoint_group::DEFAULT_BUDGET)]
    budget: usize,
    /// Run every parameter instead of seeded samples where the suite supports it
    #[arg(long)]
    exhaustive: bool,
    /// Module the group acts on; defaults to natural for 2A_n and adjoint otherwise
    #[arg(long, value_enum)]
    rep: Option<RepChoice>,
    /// Write the JSON document here as well
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON instead of a summary
    #[arg(long)]
    json: bool,
}

impl Common {
    fn config(&self) -> Result<SuiteConfig, CliError> {
        Ok(SuiteConfig {
            twisted_type: self.twisted_type.parse()?,
            ring: RingDescriptor::parse(&self.ring)?,
            seed: self.seed,
            samples: self.samples,
            budget: self.budget,
            exhaustive: self.exhaustive,
            rep: self.rep,
            out: self.out.clone(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print roots, a twisted system, or structure constants as JSON
    Describe {
        /// roots <T> <n> | twist <type> | constants <T> <n>
        #[arg(num_args = 1..=3, required = true)]
        target: Vec<String>,
    },
    /// Run a verification suite; exit 0 iff every case passes
    Verify {
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate the elementary twisted group and print its order and hash
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
}

fn emit(doc: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    if let Some(p) = out {
        std::fs::write(p, doc)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Describe { target } => {
            let doc = serde_json::to_string_pretty(&twchev::describe(&target)?).expect("json");
            println!("{doc}");
            Ok(EXIT_PASS)
        }
        Command::Verify { suite, common } => {
            let cfg = common.config()?;
            let rep = twchev::run_suite(&suite, &cfg)?;
            let doc = rep.to_json();
            emit(&doc, cfg.out.as_ref())?;
            if common.json {
                println!("{doc}");
            } else {
                print!("{}", rep.to_text());
            }
            Ok(if rep.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Enumerate { common } => {
            let cfg = common.config()?;
            let e = twchev::enumerate(&cfg)?;
            let doc = serde_json::to_string_pretty(&e).expect("json");
            emit(&doc, cfg.out.as_ref())?;
            if common.json {
                println!("{doc}");
            } else {
                println!(
                    "{} over {} ({:?}): order {} hash {}",
                    e.twisted_type, e.ring, e.rep, e.order, e.digest
                );
            }
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_USAGE as u8
            } else {
                EXIT_PASS as u8
            });
        }
    };
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    debug_assert!([EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET].contains(&code));
    ExitCode::from(code as u8)
}
