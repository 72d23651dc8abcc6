use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ga_cli::{
    emit_cayley, exit, parse_signature, parse_statement, run_file, run_repl, CliError, Environment, OutputFormat,
};
use ga_core::{Execution, Signature};

#[derive(Debug, Parser)]
#[command(name = "ga", version, about = "Geometric algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Evaluate one statement and print the result.
    Eval {
        expr: String,
        /// Algebra as p,q.
        #[arg(long, value_parser = parse_signature, default_value = "3,0")]
        sig: Signature,
        #[arg(long)]
        json: bool,
    },
    /// Interactive session.
    Repl {
        #[arg(long, value_parser = parse_signature, default_value = "3,0")]
        sig: Signature,
    },
    /// Print the multiplication table of the basis blades.
    Table {
        #[arg(long, value_parser = parse_signature)]
        sig: Signature,
        #[arg(long)]
        json: bool,
        /// Build on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
    /// Run a script; exits 1 if any assertion fails.
    Run {
        file: PathBuf,
        #[arg(long, value_parser = parse_signature, default_value = "3,0")]
        sig: Signature,
        /// Check assertions on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn environment(sig: Signature) -> Result<Environment, CliError> {
    Environment::from_env(sig).map_err(CliError::Command)
}

fn run(cmd: Cmd) -> Result<i32, CliError> {
    match cmd {
        Cmd::Eval { expr, sig, json } => {
            let stmt = parse_statement(&expr)?;
            let mut env = environment(sig)?;
            let outcome = env.execute(&stmt)?;
            let format = if json { OutputFormat::Json } else { OutputFormat::Text };
            println!("{}", ga_cli::format::render_outcome(&outcome, format));
            Ok(match outcome {
                ga_cli::Outcome::Assert(a) if !a.passed => exit::FAILURE,
                _ => exit::SUCCESS,
            })
        }
        Cmd::Repl { sig } => {
            let mut env = environment(sig)?;
            let stdin = io::stdin();
            let interactive = stdin.is_terminal();
            run_repl(
                &mut env,
                stdin.lock(),
                &mut io::stdout(),
                &mut io::stderr(),
                interactive,
            )
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            Ok(exit::SUCCESS)
        }
        Cmd::Table { sig, json, sequential } => {
            let format = if json { OutputFormat::Json } else { OutputFormat::Text };
            let text = emit_cayley(sig, format, execution(sequential))?;
            let mut out = io::stdout().lock();
            let _ = write!(out, "{text}");
            if json {
                let _ = writeln!(out);
            }
            Ok(exit::SUCCESS)
        }
        Cmd::Run { file, sig, sequential } => {
            let mut env = environment(sig)?;
            let report = run_file(&file, &mut env, execution(sequential))?;
            for line in &report.lines {
                println!("{line}");
            }
            Ok(report.exit_code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli.command).unwrap_or_else(|e| {
        eprintln!("{e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
