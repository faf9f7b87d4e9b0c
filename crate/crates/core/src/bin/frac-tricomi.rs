use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use frac_tricomi::cli::{self, Command, Domain, MlConfig, Problem, RunConfig};

#[derive(Parser)]
#[command(name = "frac-tricomi", version, about = "Mixed subdiffusion/wave problems and order recovery")]
struct Args {
    #[command(subcommand)]
    command: Top,
}

#[derive(Subcommand)]
enum Top {
    /// Mittag-Leffler function
    Ml {
        #[command(subcommand)]
        command: MlCmd,
    },
    /// Forward problem
    Direct {
        #[command(subcommand)]
        command: DirectCmd,
    },
    /// Order recovery
    Inverse {
        #[command(subcommand)]
        command: InverseCmd,
    },
    /// Residual report of a bounded problem
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Subcommand)]
enum MlCmd {
    /// E_{rho,mu}(z)
    Eval {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
    },
}

#[derive(Subcommand)]
enum DirectCmd {
    Solve {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        domain: Option<DomainArg>,
    },
}

#[derive(Subcommand)]
enum InverseCmd {
    Recover {
        #[arg(long)]
        config: PathBuf,
    },
    Scan {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        grid: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DomainArg {
    Bounded,
    Line,
}

fn main() -> ExitCode {
    cli::configure_threads();
    let args = Args::parse();
    let status = match args.command {
        Top::Ml {
            command: MlCmd::Eval { rho, mu, z },
        } => {
            let config = RunConfig {
                command: Command::MlEval,
                domain: Domain::Bounded,
                output_path: None,
                output_format: None,
                seed: 0,
                problem: Problem::Ml(MlConfig { rho, mu, z }),
            };
            match config.validate() {
                Ok(()) => cli::execute(&config, std::path::Path::new("."), None),
                Err(e) => {
                    eprintln!("error: {e}");
                    print!("{}", e.to_json());
                    e.exit_code()
                }
            }
        }
        Top::Direct {
            command: DirectCmd::Solve { config, domain },
        } => {
            let domain = domain.map(|d| match d {
                DomainArg::Bounded => Domain::Bounded,
                DomainArg::Line => Domain::Line,
            });
            cli::execute_file(&config, Command::DirectSolve, domain, None)
        }
        Top::Inverse {
            command: InverseCmd::Recover { config },
        } => cli::execute_file(&config, Command::InverseRecover, None, None),
        Top::Inverse {
            command: InverseCmd::Scan { config, grid },
        } => cli::execute_file(&config, Command::InverseScan, None, Some(grid)),
        Top::Verify { config } => cli::execute_file(&config, Command::Verify, None, None),
    };
    ExitCode::from(status as u8)
}
