use std::io::{self, BufRead, Write};

use crate::error::CliError;
use crate::eval::Environment;
use crate::format::{render_outcome, OutputFormat};
use crate::session::{apply_command, parse_line, Command, Line};

pub const PROMPT: &str = "ga> ";

/// Reads statements line by line until end of input or `:quit`. Errors are
/// written to `err` and the loop carries on. The prompt is only shown when
/// `interactive` is set.
pub fn run_repl<R, W, E>(env: &mut Environment, input: R, out: &mut W, err: &mut E, interactive: bool) -> io::Result<()>
where
    R: BufRead,
    W: Write,
    E: Write,
{
    let mut lines = input.lines();
    loop {
        if interactive {
            write!(out, "{PROMPT}")?;
            out.flush()?;
        }
        let Some(line) = lines.next() else {
            break;
        };
        let line = line?;
        match parse_line(&line) {
            Ok(Line::Blank) => {}
            Ok(Line::Command(Command::Quit)) => break,
            Ok(Line::Command(cmd)) => {
                if let Some(msg) = apply_command(env, &cmd) {
                    if !msg.is_empty() {
                        writeln!(out, "{msg}")?;
                    }
                }
            }
            Ok(Line::Statement(stmt)) => match env.execute(&stmt) {
                Ok(outcome) => writeln!(out, "{}", render_outcome(&outcome, OutputFormat::Text))?,
                Err(e) => writeln!(err, "{}", CliError::from(e))?,
            },
            Err(e) => writeln!(err, "{e}")?,
        }
    }
    if interactive {
        writeln!(out)?;
    }
    Ok(())
}
