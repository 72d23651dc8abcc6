use std::fmt;

use ga_core::{BladeIndex, BladeNameError};
use thiserror::Error;

/// Byte range in the source line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Number(f64),
    Ident(String),
    Blade(BladeIndex),
    /// One of `+ - * / ^ . ~`.
    Op(char),
    LParen,
    RParen,
    Comma,
    Assign,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Number(x) => write!(f, "number {x}"),
            TokenKind::Ident(s) => write!(f, "identifier '{s}'"),
            TokenKind::Blade(b) => write!(f, "blade {b}"),
            TokenKind::Op(c) => write!(f, "'{c}'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::Assign => f.write_str("'='"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LexError {
    #[error("unexpected character {ch:?} at {span}")]
    UnknownChar { ch: char, span: Span },
    #[error("malformed number '{text}' at {span}")]
    MalformedNumber { text: String, span: Span },
    #[error("non-canonical blade '{text}' at {span}: indices must be strictly ascending and nonzero")]
    NonCanonicalBlade { text: String, span: Span },
}

impl LexError {
    pub fn span(&self) -> Span {
        match self {
            LexError::UnknownChar { span, .. }
            | LexError::MalformedNumber { span, .. }
            | LexError::NonCanonicalBlade { span, .. } => *span,
        }
    }
}

/// Splits one line into tokens. `#` starts a comment running to the end of
/// the line.
///
/// Numbers follow float-literal syntax, so `2e3` is a number; write `2*e3`
/// for a scaled blade. Identifiers of the form `e<ascending digits>` or
/// `e_<i>_<j>...` are basis blades.
pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = |kind: TokenKind| Token {
            kind,
            lexeme: (c as char).to_string(),
            span: Span::new(start, start + 1),
        };
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'#' => break,
            b'+' | b'-' | b'*' | b'/' | b'^' | b'.' | b'~' => {
                tokens.push(single(TokenKind::Op(c as char)));
                i += 1;
            }
            b'(' => {
                tokens.push(single(TokenKind::LParen));
                i += 1;
            }
            b')' => {
                tokens.push(single(TokenKind::RParen));
                i += 1;
            }
            b',' => {
                tokens.push(single(TokenKind::Comma));
                i += 1;
            }
            b'=' => {
                tokens.push(single(TokenKind::Assign));
                i += 1;
            }
            b'0'..=b'9' => {
                i = scan_number(bytes, i);
                let text = &input[start..i];
                let span = Span::new(start, i);
                let glued = i < bytes.len() && is_word(bytes[i]);
                match text.parse::<f64>() {
                    Ok(x) if x.is_finite() && !glued => tokens.push(Token {
                        kind: TokenKind::Number(x),
                        lexeme: text.to_string(),
                        span,
                    }),
                    _ => {
                        let end = end_of_word(bytes, i);
                        return Err(LexError::MalformedNumber {
                            text: input[start..end].to_string(),
                            span: Span::new(start, end),
                        });
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                i = end_of_word(bytes, i);
                let text = &input[start..i];
                let span = Span::new(start, i);
                let kind = match BladeIndex::from_name(text) {
                    Ok(b) => TokenKind::Blade(b),
                    Err(BladeNameError::NonCanonical) => {
                        return Err(LexError::NonCanonicalBlade {
                            text: text.to_string(),
                            span,
                        })
                    }
                    Err(BladeNameError::NotBlade) => TokenKind::Ident(text.to_string()),
                };
                tokens.push(Token {
                    kind,
                    lexeme: text.to_string(),
                    span,
                });
            }
            _ => {
                let ch = input[i..].chars().next().expect("in bounds");
                return Err(LexError::UnknownChar {
                    ch,
                    span: Span::new(i, i + ch.len_utf8()),
                });
            }
        }
    }
    Ok(tokens)
}

fn is_word(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

fn end_of_word(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && is_word(bytes[i]) {
        i += 1;
    }
    i
}

/// `digits ('.' digits)? ([eE] [+-]? digits)?`
fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    let digits = |mut i: usize| {
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        i
    };
    i = digits(i);
    if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
        i = digits(i + 1);
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            return digits(j);
        }
        // `2e`, `2e+`: consumed so the caller reports the malformed literal
        return j;
    }
    i
}
