//! Line-level handling shared by the REPL and script runner.

use std::fmt::Write;

use ga_core::Signature;

use crate::ast::{Func, Statement};
use crate::error::CliError;
use crate::eval::{parse_signature, parse_tol, Environment};
use crate::parser::parse_statement;

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// `:sig p,q`, which also clears all bindings.
    Sig(Signature),
    /// `:tol x`
    Tol(f64),
    Vars,
    Help,
    Quit,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Line {
    Blank,
    Command(Command),
    Statement(Statement),
}

pub fn parse_line(line: &str) -> Result<Line, CliError> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(Line::Blank);
    }
    let Some(cmd) = trimmed.strip_prefix(':') else {
        return Ok(Line::Statement(parse_statement(line)?));
    };
    let cmd = cmd.split('#').next().unwrap_or_default();
    let (name, arg) = cmd.split_once(char::is_whitespace).unwrap_or((cmd, ""));
    let arg = arg.trim();
    let no_arg = |c: Command| {
        if arg.is_empty() {
            Ok(c)
        } else {
            Err(CliError::Command(format!(":{name} takes no argument")))
        }
    };
    let cmd = match name {
        "sig" => Command::Sig(parse_signature(arg).map_err(CliError::Command)?),
        "tol" => Command::Tol(parse_tol(arg).map_err(CliError::Command)?),
        "vars" => no_arg(Command::Vars)?,
        "help" => no_arg(Command::Help)?,
        "quit" | "q" => no_arg(Command::Quit)?,
        _ => return Err(CliError::Command(format!("unknown command ':{name}'"))),
    };
    Ok(Line::Command(cmd))
}

/// Applies a command and returns the text to show, if any.
pub fn apply_command(env: &mut Environment, cmd: &Command) -> Option<String> {
    match cmd {
        Command::Sig(sig) => {
            env.set_sig(*sig);
            Some(format!("signature {sig}"))
        }
        Command::Tol(t) => {
            env.set_tol(*t);
            Some(format!("tolerance {t:e}"))
        }
        Command::Vars => {
            let mut out = String::new();
            for (name, value) in env.bindings() {
                let _ = writeln!(out, "{name} = {value}");
            }
            Some(out.trim_end().to_string())
        }
        Command::Help => Some(help_text()),
        Command::Quit => None,
    }
}

pub fn help_text() -> String {
    let mut out = String::from(
        "operators: + - * (geometric) / (times inverse) ^ (outer) . (inner) ~ (reverse, postfix)\n\
         statements: let name = expr | assert expr ~ expr [tol] | expr\n\
         commands: :sig p,q  :tol x  :vars  :help  :quit\n\
         functions:\n",
    );
    for f in Func::ALL {
        let _ = writeln!(out, "  {}", f.help());
    }
    out.trim_end().to_string()
}
