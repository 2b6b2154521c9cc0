//! Line-oriented graph format.
//!
//! ```text
//! # comment
//! vertex <id>
//! edge <bundle_id> : <src> -> <dst> * <mult>
//! ```
//!
//! `<mult>` is a positive integer, `omega` or `uncountable`. Vertices named
//! only in edges are declared implicitly.

use std::collections::BTreeMap;

use crate::cardinality::Cardinality;
use crate::error::{GraphError, ParseError};
use crate::graph::{Graph, VertexId};

/// Largest finite multiplicity accepted by the parser.
pub const MAX_FINITE_MULTIPLICITY: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Declaration {
    Vertex {
        id: String,
        at: Position,
    },
    Edge {
        bundle_id: String,
        source: String,
        target: String,
        multiplicity: Cardinality,
        at: Position,
    },
}

/// Parsed statements in source order, with positions for diagnostics.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphDocument {
    pub declarations: Vec<Declaration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Colon,
    Arrow,
    Star,
}

struct Token<'a> {
    tok: Tok<'a>,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn is_word_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

fn lex(line_no: usize, line: &str) -> Result<(Vec<Token<'_>>, usize), ParseError> {
    let code = line.split('#').next().unwrap_or("");
    let bytes = code.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    // 1-based character column
    let column = |i: usize| code[..i].chars().count() + 1;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match b {
            b':' => {
                i += 1;
                Tok::Colon
            }
            b'*' => {
                i += 1;
                Tok::Star
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            b'-' if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                i += 1;
                while i < bytes.len() && is_word_byte(bytes[i]) {
                    i += 1;
                }
                Tok::Word(&code[start..i])
            }
            _ if is_word_byte(b) => {
                while i < bytes.len() && is_word_byte(bytes[i]) {
                    i += 1;
                }
                Tok::Word(&code[start..i])
            }
            _ => {
                let ch = code[i..].chars().next().unwrap();
                return Err(syntax(line_no, column(i), format!("unexpected character `{ch}`")));
            }
        };
        tokens.push(Token {
            tok,
            column: column(start),
        });
    }
    Ok((tokens, column(code.trim_end().len())))
}

fn describe(tok: &Tok<'_>) -> String {
    match tok {
        Tok::Word(w) => format!("`{w}`"),
        Tok::Colon => "`:`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Star => "`*`".into(),
    }
}

struct Cursor<'a, 'b> {
    tokens: &'b [Token<'a>],
    next: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Cursor<'a, '_> {
    fn column(&self) -> usize {
        self.tokens
            .get(self.next)
            .map_or(self.end_column, |t| t.column)
    }

    fn word(&mut self, what: &str) -> Result<(&'a str, Position), ParseError> {
        match self.tokens.get(self.next) {
            Some(Token {
                tok: Tok::Word(w),
                column,
            }) if !w.starts_with('-') => {
                self.next += 1;
                Ok((
                    w,
                    Position {
                        line: self.line,
                        column: *column,
                    },
                ))
            }
            Some(t) => Err(syntax(
                self.line,
                t.column,
                format!("expected {what}, found {}", describe(&t.tok)),
            )),
            None => Err(syntax(self.line, self.end_column, format!("expected {what}"))),
        }
    }

    fn punct(&mut self, want: Tok<'static>) -> Result<(), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) if t.tok == want => {
                self.next += 1;
                Ok(())
            }
            Some(t) => Err(syntax(
                self.line,
                t.column,
                format!("expected {}, found {}", describe(&want), describe(&t.tok)),
            )),
            None => Err(syntax(
                self.line,
                self.end_column,
                format!("expected {}", describe(&want)),
            )),
        }
    }

    fn multiplicity(&mut self) -> Result<Cardinality, ParseError> {
        let column = self.column();
        let w = match self.tokens.get(self.next) {
            Some(Token {
                tok: Tok::Word(w), ..
            }) => *w,
            Some(t) => {
                return Err(syntax(
                    self.line,
                    t.column,
                    format!("expected a multiplicity, found {}", describe(&t.tok)),
                ))
            }
            None => return Err(syntax(self.line, column, "expected a multiplicity")),
        };
        self.next += 1;
        let bad = || ParseError::BadMultiplicity {
            line: self.line,
            column,
            text: w.to_string(),
        };
        match w {
            "omega" => Ok(Cardinality::CountablyInfinite),
            "uncountable" => Ok(Cardinality::Uncountable),
            _ if w.bytes().all(|b| b.is_ascii_digit()) => w
                .parse::<u64>()
                .ok()
                .filter(|n| *n <= MAX_FINITE_MULTIPLICITY)
                .and_then(Cardinality::finite)
                .ok_or_else(bad),
            _ if w.starts_with('-') && w[1..].bytes().all(|b| b.is_ascii_digit()) => Err(bad()),
            _ => Err(syntax(
                self.line,
                column,
                format!("expected a multiplicity (integer, omega or uncountable), found `{w}`"),
            )),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => Err(syntax(
                self.line,
                t.column,
                format!("unexpected {} after declaration", describe(&t.tok)),
            )),
            None => Ok(()),
        }
    }
}

pub fn parse_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut declarations = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (tokens, end_column) = lex(line_no, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut c = Cursor {
            tokens: &tokens,
            next: 0,
            line: line_no,
            end_column,
        };
        let (keyword, at) = c.word("`vertex` or `edge`")?;
        let decl = match keyword {
            "vertex" => {
                let (id, at) = c.word("a vertex identifier")?;
                Declaration::Vertex { id: id.into(), at }
            }
            "edge" => {
                let (bundle_id, at) = c.word("a bundle identifier")?;
                c.punct(Tok::Colon)?;
                let (source, _) = c.word("a source vertex")?;
                c.punct(Tok::Arrow)?;
                let (target, _) = c.word("a target vertex")?;
                c.punct(Tok::Star)?;
                let multiplicity = c.multiplicity()?;
                Declaration::Edge {
                    bundle_id: bundle_id.into(),
                    source: source.into(),
                    target: target.into(),
                    multiplicity,
                    at,
                }
            }
            other => {
                return Err(syntax(
                    line_no,
                    at.column,
                    format!("expected `vertex` or `edge`, found `{other}`"),
                ))
            }
        };
        c.finish()?;
        declarations.push(decl);
    }
    Ok(GraphDocument { declarations })
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<Graph, ParseError> {
        let mut g = Graph::new();
        let mut explicit: BTreeMap<&str, Position> = BTreeMap::new();
        let vid = |s: &str| VertexId::new(s).expect("lexer only yields identifiers");
        for d in &self.declarations {
            match d {
                Declaration::Vertex { id, at } => {
                    if explicit.insert(id, *at).is_some() {
                        return Err(ParseError::DuplicateVertex {
                            line: at.line,
                            column: at.column,
                            vertex: id.clone(),
                        });
                    }
                    g.ensure_vertex(vid(id));
                }
                Declaration::Edge {
                    bundle_id,
                    source,
                    target,
                    multiplicity,
                    at,
                } => match g.add_bundle(bundle_id.clone(), vid(source), vid(target), *multiplicity) {
                    Ok(()) => {}
                    Err(GraphError::DuplicateBundle(bundle)) => {
                        return Err(ParseError::DuplicateBundle {
                            line: at.line,
                            column: at.column,
                            bundle,
                        })
                    }
                    Err(e) => unreachable!("identifiers validated by the lexer: {e}"),
                },
            }
        }
        Ok(g)
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_document(text)?.to_graph()
}
