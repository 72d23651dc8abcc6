//! Expression language, REPL and script runner for the `ga` command.

pub mod ast;
pub mod error;
pub mod eval;
pub mod format;
pub mod lexer;
pub mod parser;
pub mod repl;
pub mod script;
pub mod session;
pub mod table;

pub use ast::{BinOp, Expr, Func, Statement};
pub use error::{exit, CliError};
pub use eval::{parse_signature, Environment, EvalError, Outcome};
pub use format::{to_json, OutputFormat};
pub use lexer::{tokenize, LexError, Span, Token, TokenKind};
pub use parser::{parse_expr, parse_statement, ParseError};
pub use repl::run_repl;
pub use script::{run_file, run_source, ScriptReport};
pub use table::emit_cayley;
