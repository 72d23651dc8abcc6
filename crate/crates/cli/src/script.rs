//! Batch execution of `.ga` files.
//!
//! The whole file is parsed first; any parse error aborts before anything
//! runs. Runs of consecutive `assert` lines are independent of each other
//! and are checked through the given [`Execution`].

use std::path::Path;

use ga_core::Execution;

use crate::ast::Statement;
use crate::error::{exit, CliError};
use crate::eval::{AssertOutcome, Environment, EvalError};
use crate::format::{render_outcome, OutputFormat};
use crate::session::{apply_command, parse_line, Command, Line};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScriptReport {
    /// Printed values and diagnostics, in line order.
    pub lines: Vec<String>,
    pub asserts: usize,
    pub failed: usize,
    pub errors: usize,
    pub exit_code: i32,
}

pub fn run_file(path: &Path, env: &mut Environment, exec: Execution) -> Result<ScriptReport, CliError> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(run_source(&src, env, exec))
}

pub fn run_source(src: &str, env: &mut Environment, exec: Execution) -> ScriptReport {
    let mut report = ScriptReport::default();
    let mut parsed = Vec::new();
    for (i, text) in src.lines().enumerate() {
        match parse_line(text) {
            Ok(Line::Blank) => {}
            Ok(line) => parsed.push((i + 1, line)),
            Err(e) => report.lines.push(format!("line {}: {e}", i + 1)),
        }
    }
    if !report.lines.is_empty() {
        report.exit_code = exit::USAGE;
        return report;
    }

    let mut k = 0;
    while k < parsed.len() {
        let (lineno, line) = &parsed[k];
        match line {
            Line::Statement(Statement::Assert { .. }) => {
                let end = parsed[k..]
                    .iter()
                    .position(|(_, l)| !matches!(l, Line::Statement(Statement::Assert { .. })))
                    .map_or(parsed.len(), |n| k + n);
                let env_ref = &*env;
                let results = exec.map(&parsed[k..end], |(n, l)| match l {
                    Line::Statement(Statement::Assert { lhs, rhs, tol }) => (*n, env_ref.check(lhs, rhs, *tol)),
                    _ => unreachable!("batch holds asserts only"),
                });
                for (n, result) in results {
                    record_assert(&mut report, n, result);
                }
                k = end;
                continue;
            }
            Line::Statement(stmt) => match env.execute(stmt) {
                Ok(outcome) => {
                    if !matches!(stmt, Statement::Let(..)) {
                        report.lines.push(render_outcome(&outcome, OutputFormat::Text));
                    }
                }
                Err(e) => {
                    report.errors += 1;
                    report.lines.push(format!("line {lineno}: {}", CliError::from(e)));
                }
            },
            Line::Command(Command::Quit) => break,
            Line::Command(cmd @ (Command::Sig(_) | Command::Tol(_))) => {
                apply_command(env, cmd);
            }
            Line::Command(cmd) => {
                if let Some(msg) = apply_command(env, cmd) {
                    report.lines.push(msg);
                }
            }
            Line::Blank => {}
        }
        k += 1;
    }

    if report.asserts > 0 {
        report.lines.push(format!(
            "{} of {} assertions passed",
            report.asserts - report.failed,
            report.asserts
        ));
    }
    report.exit_code = if report.failed + report.errors > 0 {
        exit::FAILURE
    } else {
        exit::SUCCESS
    };
    report
}

fn record_assert(report: &mut ScriptReport, lineno: usize, result: Result<AssertOutcome, EvalError>) {
    report.asserts += 1;
    match result {
        Ok(a) if a.passed => {}
        Ok(a) => {
            report.failed += 1;
            report.lines.push(format!(
                "line {lineno}: {}",
                render_outcome(&crate::eval::Outcome::Assert(a), OutputFormat::Text)
            ));
        }
        Err(e) => {
            report.failed += 1;
            report.lines.push(format!("line {lineno}: {}", CliError::from(e)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ga_core::Signature;

    fn run(src: &str) -> ScriptReport {
        run_source(src, &mut Environment::new(Signature::G3), Execution::default())
    }

    #[test]
    fn passing_script() {
        let r = run("# squares\nlet a = e1 + 2*e2\nassert a*a ~ 5\nassert a.a ~ 5 1e-15\na^e3\n");
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.lines, vec!["e13 + 2*e23", "2 of 2 assertions passed"]);
    }

    #[test]
    fn failures_carry_line_numbers() {
        let r = run("assert e1 ~ e2\n\nassert x ~ 1\nassert 1 ~ 1\n");
        assert_eq!(r.exit_code, 1);
        assert_eq!(r.failed, 2);
        assert!(r.lines[0].starts_with("line 1: assertion failed"));
        assert_eq!(r.lines[1], "line 3: error: unbound variable 'x'");
        assert_eq!(r.lines[2], "1 of 3 assertions passed");
    }

    #[test]
    fn parse_errors_abort() {
        let r = run("let a = 1\nassert a ~\nlet b = (\n");
        assert_eq!(r.exit_code, 2);
        assert_eq!(r.lines.len(), 2);
        assert!(r.lines[0].starts_with("line 2: parse error"));
        assert!(r.lines[1].starts_with("line 3: parse error"));
    }

    #[test]
    fn signature_commands() {
        let r = run(":sig 1,1\nassert e2*e2 ~ -1\n:sig 3,0\nassert e2*e2 ~ 1\n");
        assert_eq!(r.exit_code, 0, "{:?}", r.lines);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let src = (1..200)
            .map(|k| format!("assert exp({k}*0.01*e12)*exp(-{k}*0.01*e12) ~ 1\n"))
            .collect::<String>()
            + "assert e1 ~ 2*e1\n";
        let mut e1 = Environment::new(Signature::G3);
        let mut e2 = e1.clone();
        let seq = run_source(&src, &mut e1, Execution::Sequential);
        let par = run_source(&src, &mut e2, Execution::Parallel);
        assert_eq!(seq, par);
        assert_eq!(seq.failed, 1);
    }
}
