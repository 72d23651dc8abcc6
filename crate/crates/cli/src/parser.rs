//! Recursive-descent parser.
//!
//! Binding strength, tightest first:
//!
//! | level | operators |
//! |-------|-----------|
//! | postfix | `~` (reverse), function calls |
//! | prefix | unary `-` |
//! | wedge/inner | `^`, `.` |
//! | product | `*`, `/` |
//! | sum | `+`, `-` |
//!
//! Binary operators are left-associative. A `~` directly followed by a token
//! that can start an operand is the `assert` separator, not a reverse.

use thiserror::Error;

use crate::ast::{BinOp, Expr, Func, Statement};
use crate::lexer::{tokenize, LexError, Span, Token, TokenKind};

/// Nesting bound so hostile input cannot exhaust the stack.
pub const MAX_DEPTH: usize = 256;

const KEYWORDS: [&str; 2] = ["let", "assert"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("unexpected {found} at {span}, expected {expected}")]
    Unexpected {
        found: String,
        expected: &'static str,
        span: Span,
    },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("unknown function '{name}' at {span}")]
    UnknownFunction { name: String, span: Span },
    #[error("{name} takes {expected} argument(s), got {found} at {span}")]
    Arity {
        name: &'static str,
        expected: usize,
        found: usize,
        span: Span,
    },
    #[error("'{name}' is a keyword at {span}")]
    Keyword { name: String, span: Span },
    #[error("expression nested deeper than {MAX_DEPTH} at {span}")]
    TooDeep { span: Span },
}

/// Parses one statement: `let name = expr`, `assert expr ~ expr [tol]`, or a
/// bare expression.
pub fn parse_statement(input: &str) -> Result<Statement, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens);
    let stmt = p.statement()?;
    p.finish()?;
    Ok(stmt)
}

/// Parses a single expression.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser::new(&tokens);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
    depth: usize,
    in_assert_lhs: bool,
}

impl<'t> Parser<'t> {
    fn new(tokens: &'t [Token]) -> Self {
        Parser {
            tokens,
            pos: 0,
            depth: 0,
            in_assert_lhs: false,
        }
    }

    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&'t TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn peek_op(&self) -> Option<char> {
        match self.peek_kind() {
            Some(TokenKind::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn bump(&mut self) -> Option<&'t Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::Unexpected {
                found: t.kind.to_string(),
                expected,
                span: t.span,
            },
            None => ParseError::UnexpectedEnd { expected },
        }
    }

    fn expect(&mut self, kind: &TokenKind, expected: &'static str) -> Result<&'t Token, ParseError> {
        match self.peek() {
            Some(t) if &t.kind == kind => {
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        match self.peek_kind() {
            Some(TokenKind::Ident(kw)) if kw == "let" => {
                self.pos += 1;
                let name = match self.bump() {
                    Some(Token {
                        kind: TokenKind::Ident(name),
                        span,
                        ..
                    }) => {
                        if KEYWORDS.contains(&name.as_str()) {
                            return Err(ParseError::Keyword {
                                name: name.clone(),
                                span: *span,
                            });
                        }
                        name.clone()
                    }
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected("a variable name"));
                    }
                };
                self.expect(&TokenKind::Assign, "'='")?;
                Ok(Statement::Let(name, self.expr()?))
            }
            Some(TokenKind::Ident(kw)) if kw == "assert" => {
                self.pos += 1;
                self.in_assert_lhs = true;
                let lhs = self.expr()?;
                self.in_assert_lhs = false;
                self.expect(&TokenKind::Op('~'), "'~' between the two sides of assert")?;
                let rhs = self.expr()?;
                let tol = match self.peek_kind() {
                    Some(TokenKind::Number(t)) => {
                        self.pos += 1;
                        Some(*t)
                    }
                    _ => None,
                };
                Ok(Statement::Assert { lhs, rhs, tol })
            }
            _ => Ok(Statement::Expr(self.expr()?)),
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let span = self.peek().map_or(Span::new(0, 0), |t| t.span);
            return Err(ParseError::TooDeep { span });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.descend()?;
        let mut lhs = self.product()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.product()?;
            let op = if op == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::binary(op, lhs, rhs);
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.wedge()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.wedge()?;
            let op = if op == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn wedge(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(op @ ('^' | '.')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            let op = if op == '^' { BinOp::Wedge } else { BinOp::Inner };
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            self.descend()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.primary()?;
        while self.peek_op() == Some('~') && self.tilde_is_postfix() {
            self.pos += 1;
            e = Expr::Reverse(Box::new(e));
        }
        Ok(e)
    }

    fn tilde_is_postfix(&self) -> bool {
        match self.tokens.get(self.pos + 1).map(|t| &t.kind) {
            Some(TokenKind::Number(_) | TokenKind::Ident(_) | TokenKind::Blade(_) | TokenKind::LParen) => false,
            // inside an assert, `a ~ -b` reads as a comparison
            Some(TokenKind::Op('-')) => !self.in_assert_lhs,
            _ => true,
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.unexpected("an operand"));
        };
        match &tok.kind {
            TokenKind::Number(x) => {
                self.pos += 1;
                Ok(Expr::Number(*x))
            }
            TokenKind::Blade(b) => {
                self.pos += 1;
                Ok(Expr::Blade(*b))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let saved = self.in_assert_lhs;
                self.in_assert_lhs = false;
                let e = self.expr()?;
                self.in_assert_lhs = saved;
                self.expect(&TokenKind::RParen, "')'")?;
                Ok(e)
            }
            TokenKind::Ident(name) => {
                self.pos += 1;
                if KEYWORDS.contains(&name.as_str()) {
                    return Err(ParseError::Keyword {
                        name: name.clone(),
                        span: tok.span,
                    });
                }
                if self.peek_kind() == Some(&TokenKind::LParen) {
                    self.call(name, tok.span)
                } else {
                    Ok(Expr::Var(name.clone()))
                }
            }
            _ => Err(self.unexpected("an operand")),
        }
    }

    fn call(&mut self, name: &str, name_span: Span) -> Result<Expr, ParseError> {
        let func = Func::lookup(name).ok_or_else(|| ParseError::UnknownFunction {
            name: name.to_string(),
            span: name_span,
        })?;
        self.pos += 1; // '('
        let saved = self.in_assert_lhs;
        self.in_assert_lhs = false;
        let mut args = Vec::new();
        if self.peek_kind() != Some(&TokenKind::RParen) {
            loop {
                args.push(self.expr()?);
                if self.peek_kind() == Some(&TokenKind::Comma) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        let close = self.expect(&TokenKind::RParen, "',' or ')'")?;
        self.in_assert_lhs = saved;
        if args.len() != func.arity() {
            return Err(ParseError::Arity {
                name: func.name(),
                expected: func.arity(),
                found: args.len(),
                span: Span::new(name_span.start, close.span.end),
            });
        }
        Ok(Expr::Call(func, args))
    }
}
