//! Shared tokenizer for the two line-oriented formats: `#` starts a comment,
//! `[name]` opens a section, anything else is whitespace-separated tokens.

use std::fmt;

/// A 1-based position in the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub at: Location,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(at: Location, message: impl Into<String>) -> Self {
        ParseError {
            at,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.at.line, self.at.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub at: Location,
}

pub(crate) enum Line<'a> {
    Header { name: &'a str, at: Location },
    Data(Vec<Token<'a>>),
}

fn col_of(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Non-blank, non-comment lines with their positions.
pub(crate) fn lines(text: &str) -> Result<Vec<Line<'_>>, ParseError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let body = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let start = body.len() - body.trim_start().len();
        let at = Location {
            line: line_no,
            col: col_of(raw, start),
        };
        if trimmed.starts_with('[') {
            let Some(name) = trimmed.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
                return Err(ParseError::new(at, "unterminated section header"));
            };
            out.push(Line::Header {
                name: name.trim(),
                at,
            });
            continue;
        }
        let mut tokens = Vec::new();
        let mut rest = body;
        let mut offset = 0;
        while let Some(p) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[p..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            tokens.push(Token {
                text: &tail[..len],
                at: Location {
                    line: line_no,
                    col: col_of(raw, offset + p),
                },
            });
            offset += p + len;
            rest = &tail[len..];
        }
        out.push(Line::Data(tokens));
    }
    Ok(out)
}

pub(crate) fn is_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn id<'a>(t: &Token<'a>) -> Result<&'a str, ParseError> {
    if is_id(t.text) {
        Ok(t.text)
    } else {
        Err(ParseError::new(
            t.at,
            format!("invalid id `{}`; ids match [A-Za-z0-9_]+", t.text),
        ))
    }
}

pub(crate) fn int(t: &Token<'_>) -> Result<usize, ParseError> {
    t.text
        .parse()
        .map_err(|_| ParseError::new(t.at, format!("expected a nonnegative integer, found `{}`", t.text)))
}

/// Largest accepted block size or multiplicity; embeddings store one slot
/// per diagonal position, so sizes bound memory.
pub const MAX_SIZE: usize = 1 << 16;

pub(crate) fn bounded(t: &Token<'_>) -> Result<usize, ParseError> {
    let n = int(t)?;
    if n > MAX_SIZE {
        Err(ParseError::new(t.at, format!("{n} exceeds the limit {MAX_SIZE}")))
    } else {
        Ok(n)
    }
}

pub(crate) fn positive(t: &Token<'_>) -> Result<usize, ParseError> {
    match bounded(t)? {
        0 => Err(ParseError::new(t.at, "expected an integer >= 1, found 0")),
        n => Ok(n),
    }
}

/// Location just past the last token, for "missing field" errors.
pub(crate) fn after(tokens: &[Token<'_>]) -> Location {
    let last = tokens.last().expect("data lines are nonempty");
    Location {
        line: last.at.line,
        col: last.at.col + last.text.chars().count(),
    }
}

pub(crate) fn arity(tokens: &[Token<'_>], expected: usize, shape: &str) -> Result<(), ParseError> {
    if tokens.len() < expected {
        Err(ParseError::new(after(tokens), format!("expected `{shape}`")))
    } else if tokens.len() > expected {
        Err(ParseError::new(
            tokens[expected].at,
            format!("unexpected token `{}`; expected `{shape}`", tokens[expected].text),
        ))
    } else {
        Ok(())
    }
}
