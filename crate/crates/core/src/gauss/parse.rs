//! Gauss-code text format.
//!
//! ```text
//! token   := passage id sign
//! passage := 'O' | 'U'
//! id      := decimal >= 1
//! sign    := '+' | '-'
//! ```
//!
//! Tokens are separated by ASCII whitespace. Both tokens of a chord carry the
//! same sign. In files, each line holds one diagram and lines starting with
//! `#` are comments. Blank lines carry no diagram; the diagram with no
//! chords is written as a lone `-`. Pattern files additionally allow the sign `*`, meaning
//! "any sign".

use std::collections::HashMap;

use thiserror::Error;

use super::{Endpoint, GaussDiagram, Passage, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("column {column}: bad token {token:?}: {message}")]
    Syntax {
        column: usize,
        token: String,
        message: &'static str,
    },
    #[error("column {column}: chord {id} appears {count} time(s), expected 2")]
    ChordCount { column: usize, id: u64, count: usize },
    #[error("column {column}: chord {id} has two {passage:?} endpoints")]
    DuplicatePassage {
        column: usize,
        id: u64,
        passage: Passage,
    },
    #[error("column {column}: chord {id} has different signs on its two endpoints")]
    SignMismatch { column: usize, id: u64 },
}

impl ParseError {
    /// 1-based column of the offending token.
    pub fn column(&self) -> usize {
        match self {
            ParseError::Syntax { column, .. }
            | ParseError::ChordCount { column, .. }
            | ParseError::DuplicatePassage { column, .. }
            | ParseError::SignMismatch { column, .. } => *column,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawToken {
    pub column: usize,
    pub id: u64,
    pub passage: Passage,
    /// `None` only for the pattern wildcard `*`.
    pub sign: Option<Sign>,
}

/// Split a line into tokens without checking chord structure.
pub fn lex(text: &str, allow_wildcard: bool) -> Result<Vec<RawToken>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let raw = &text[start..i];
        let column = text[..start].chars().count() + 1;
        let syntax = |message| ParseError::Syntax {
            column,
            token: raw.to_string(),
            message,
        };
        if !raw.is_ascii() || raw.len() < 3 {
            return Err(syntax("expected <O|U><id><+|->"));
        }
        let passage = match raw.as_bytes()[0] {
            b'O' => Passage::Over,
            b'U' => Passage::Under,
            _ => return Err(syntax("passage must be 'O' or 'U'")),
        };
        let sign = match raw.as_bytes()[raw.len() - 1] {
            b'+' => Some(Sign::Plus),
            b'-' => Some(Sign::Minus),
            b'*' if allow_wildcard => None,
            _ => return Err(syntax("sign must be '+' or '-'")),
        };
        let digits = &raw[1..raw.len() - 1];
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax("chord id must be a decimal number"));
        }
        let id: u64 = digits
            .parse()
            .map_err(|_| syntax("chord id out of range"))?;
        if id == 0 {
            return Err(syntax("chord id must be at least 1"));
        }
        tokens.push(RawToken {
            column,
            id,
            passage,
            sign,
        });
    }
    Ok(tokens)
}

/// Check chord structure and map ids to indices by first appearance.
/// Returns the word and, per chord, the sign of its tokens.
pub(crate) fn assemble(
    tokens: &[RawToken],
) -> Result<(Vec<Endpoint>, Vec<Option<Sign>>), ParseError> {
    struct Seen {
        index: usize,
        first: RawToken,
        count: usize,
    }
    let mut seen: HashMap<u64, Seen> = HashMap::new();
    let mut signs = Vec::new();
    let mut word = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let entry = seen.entry(tok.id).or_insert_with(|| {
            signs.push(tok.sign);
            Seen {
                index: signs.len() - 1,
                first: *tok,
                count: 0,
            }
        });
        entry.count += 1;
        if entry.count == 2 {
            if entry.first.passage == tok.passage {
                return Err(ParseError::DuplicatePassage {
                    column: tok.column,
                    id: tok.id,
                    passage: tok.passage,
                });
            }
            if entry.first.sign != tok.sign {
                return Err(ParseError::SignMismatch {
                    column: tok.column,
                    id: tok.id,
                });
            }
        } else if entry.count > 2 {
            return Err(ParseError::ChordCount {
                column: tok.column,
                id: tok.id,
                count: entry.count,
            });
        }
        word.push(Endpoint {
            chord: entry.index,
            passage: tok.passage,
        });
    }
    if let Some(lonely) = seen
        .values()
        .filter(|s| s.count == 1)
        .min_by_key(|s| s.first.column)
    {
        return Err(ParseError::ChordCount {
            column: lonely.first.column,
            id: lonely.first.id,
            count: 1,
        });
    }
    Ok((word, signs))
}

/// How the diagram without chords is written on a line of its own.
pub const EMPTY_DIAGRAM_LINE: &str = "-";

/// Parse one diagram.
pub fn parse_diagram(text: &str) -> Result<GaussDiagram, ParseError> {
    if text.trim() == EMPTY_DIAGRAM_LINE {
        return Ok(GaussDiagram::empty());
    }
    let tokens = lex(text, false)?;
    let (word, signs) = assemble(&tokens)?;
    let signs: Vec<Sign> = signs.into_iter().map(|s| s.expect("lexed without wildcard")).collect();
    Ok(GaussDiagram::from_parts(word, &signs))
}

/// Parse a multi-line file: one diagram per non-blank line, `#` comments
/// skipped. Yields 1-based line numbers.
pub fn parse_lines(text: &str) -> Vec<(usize, Result<GaussDiagram, ParseError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| (i + 1, parse_diagram(l)))
        .collect()
}
