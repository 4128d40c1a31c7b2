//! The `.ccspec` problem-description language.
//!
//! ```text
//! # Axis-aligned squares on a 5x5 point grid.
//! problem s1 {
//!   kind: squares
//!   cols: 5
//!   rows: 5
//!   variant: axis
//! }
//! ```
//!
//! A file is a sequence of `problem <ident> { <key>: <value> ... }` blocks.
//! Values are bare identifiers, decimal integers, quoted strings (escapes
//! `\"` and `\\`) or bracketed, comma-separated lists of strings. `#` starts
//! a comment that runs to the end of the line.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::squares::SquareVariant;
use crate::wordgrid::{AdjacencyRule, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub name: String,
    pub kind: ProblemKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Squares {
        cols: u32,
        rows: u32,
        variant: SquareVariant,
    },
    WordPaths {
        word: Word,
        layout: Layout,
        adjacency: AdjacencyRule,
        distinct_cells: bool,
    },
}

impl ProblemKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemKind::Squares { .. } => "squares",
            ProblemKind::WordPaths { .. } => "word-paths",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Layout {
    ManhattanRings,
    /// Rows as they read on the page, top first.
    Explicit(Vec<String>),
}

impl Layout {
    pub fn as_str(&self) -> &'static str {
        match self {
            Layout::ManhattanRings => "manhattan-rings",
            Layout::Explicit(_) => "explicit",
        }
    }
}

/// A positioned syntax or validation error. Line and column are 1-based and
/// count Unicode scalar values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if let Some(expected) = &self.expected {
            write!(f, " (expected {expected})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
            expected: None,
        }
    }

    fn expected(self, message: impl Into<String>, expected: impl Into<String>) -> ParseError {
        ParseError {
            expected: Some(expected.into()),
            ..self.error(message)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Str(_) => "string".to_owned(),
            Tok::LBrace => "`{`".to_owned(),
            Tok::RBrace => "`}`".to_owned(),
            Tok::LBracket => "`[`".to_owned(),
            Tok::RBracket => "`]`".to_owned(),
            Tok::Colon => "`:`".to_owned(),
            Tok::Comma => "`,`".to_owned(),
            Tok::Eof => "end of input".to_owned(),
        }
    }
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-'
}

fn tokenize(source: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = source.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                chars.next();
                advance(c, &mut pos);
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    advance(c, &mut pos);
                }
            }
            '{' | '}' | '[' | ']' | ':' | ',' => {
                chars.next();
                advance(c, &mut pos);
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ':' => Tok::Colon,
                    _ => Tok::Comma,
                };
                out.push((tok, start));
            }
            '"' => {
                chars.next();
                advance(c, &mut pos);
                let mut value = String::new();
                loop {
                    let here = pos;
                    match chars.next() {
                        None => return Err(start.error("unterminated string")),
                        Some('"') => {
                            advance('"', &mut pos);
                            break;
                        }
                        Some('\\') => {
                            advance('\\', &mut pos);
                            match chars.next() {
                                Some(e @ ('"' | '\\')) => {
                                    advance(e, &mut pos);
                                    value.push(e);
                                }
                                None => return Err(start.error("unterminated string")),
                                Some(_) => {
                                    return Err(here.expected("invalid escape", "`\\\"` or `\\\\`"))
                                }
                            }
                        }
                        Some(ch) if ch.is_control() => {
                            return Err(here.error("control character in string"));
                        }
                        Some(ch) => {
                            advance(ch, &mut pos);
                            value.push(ch);
                        }
                    }
                }
                out.push((Tok::Str(value), start));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        advance(d, &mut pos);
                    } else if is_ident_continue(d) {
                        return Err(pos.error(format!("unexpected character {d:?} in integer")));
                    } else {
                        break;
                    }
                }
                out.push((Tok::Int(digits), start));
            }
            c if c.is_alphabetic() => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if is_ident_continue(d) {
                        ident.push(d);
                        chars.next();
                        advance(d, &mut pos);
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(ident), start));
            }
            other => return Err(start.error(format!("unexpected character {other:?}"))),
        }
    }
    out.push((Tok::Eof, pos));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Kind,
    Cols,
    Rows,
    Variant,
    Word,
    Layout,
    RowsData,
    Adjacency,
    DistinctCells,
}

const KEYS: [(&str, Key); 9] = [
    ("kind", Key::Kind),
    ("cols", Key::Cols),
    ("rows", Key::Rows),
    ("variant", Key::Variant),
    ("word", Key::Word),
    ("layout", Key::Layout),
    ("rows-data", Key::RowsData),
    ("adjacency", Key::Adjacency),
    ("distinct-cells", Key::DistinctCells),
];

impl Key {
    fn name(self) -> &'static str {
        KEYS.iter()
            .find(|(_, k)| *k == self)
            .map(|(n, _)| *n)
            .unwrap()
    }
}

#[derive(Debug, Clone)]
enum Value {
    Ident(String),
    Int(String),
    Str(String),
    List(Vec<String>),
}

struct Field {
    key: Key,
    key_pos: Pos,
    value: Value,
    value_pos: Pos,
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ParseError> {
        let (tok, pos) = self.bump();
        if tok == want {
            Ok(pos)
        } else {
            Err(pos.expected(format!("unexpected {}", tok.describe()), want.describe()))
        }
    }

    fn block(&mut self) -> Result<(String, Pos, Vec<Field>), ParseError> {
        let (tok, pos) = self.bump();
        if tok != Tok::Ident("problem".to_owned()) {
            return Err(pos.expected(format!("unexpected {}", tok.describe()), "`problem`"));
        }
        let (name, name_pos) = match self.bump() {
            (Tok::Ident(name), p) => (name, p),
            (tok, p) => {
                return Err(p.expected(format!("unexpected {}", tok.describe()), "problem name"))
            }
        };
        self.expect(Tok::LBrace)?;
        let mut fields = Vec::new();
        loop {
            match self.bump() {
                (Tok::RBrace, _) => break,
                (Tok::Ident(key), key_pos) => {
                    let Some(&(_, key)) = KEYS.iter().find(|(n, _)| *n == key) else {
                        let names: Vec<&str> = KEYS.iter().map(|(n, _)| *n).collect();
                        return Err(
                            key_pos.expected(format!("unknown field `{key}`"), names.join(", "))
                        );
                    };
                    self.expect(Tok::Colon)?;
                    let (value, value_pos) = self.value()?;
                    fields.push(Field {
                        key,
                        key_pos,
                        value,
                        value_pos,
                    });
                }
                (tok, p) => {
                    return Err(p.expected(
                        format!("unexpected {}", tok.describe()),
                        "field name or `}`",
                    ))
                }
            }
        }
        Ok((name, name_pos, fields))
    }

    fn value(&mut self) -> Result<(Value, Pos), ParseError> {
        let (tok, pos) = self.bump();
        let value = match tok {
            Tok::Ident(s) => Value::Ident(s),
            Tok::Int(s) => Value::Int(s),
            Tok::Str(s) => Value::Str(s),
            Tok::LBracket => {
                let mut items = Vec::new();
                if self.peek().0 == Tok::RBracket {
                    self.bump();
                } else {
                    loop {
                        match self.bump() {
                            (Tok::Str(s), _) => items.push(s),
                            (tok, p) => {
                                return Err(
                                    p.expected(format!("unexpected {}", tok.describe()), "string")
                                )
                            }
                        }
                        match self.bump() {
                            (Tok::Comma, _) => {}
                            (Tok::RBracket, _) => break,
                            (tok, p) => {
                                return Err(p.expected(
                                    format!("unexpected {}", tok.describe()),
                                    "`,` or `]`",
                                ))
                            }
                        }
                    }
                }
                Value::List(items)
            }
            tok => return Err(pos.expected(format!("unexpected {}", tok.describe()), "value")),
        };
        Ok((value, pos))
    }
}

fn ident_value<T: Copy>(field: &Field, options: &[(&str, T)]) -> Result<T, ParseError> {
    let names = || {
        options
            .iter()
            .map(|(n, _)| *n)
            .collect::<Vec<_>>()
            .join(", ")
    };
    match &field.value {
        Value::Ident(s) => options
            .iter()
            .find(|(n, _)| n == s)
            .map(|(_, v)| *v)
            .ok_or_else(|| {
                field
                    .value_pos
                    .expected(format!("invalid {}: `{s}`", field.key.name()), names())
            }),
        _ => Err(field
            .value_pos
            .expected(format!("invalid {}", field.key.name()), names())),
    }
}

fn positive_value(field: &Field) -> Result<u32, ParseError> {
    let name = field.key.name();
    match &field.value {
        Value::Int(digits) => match digits.parse::<u32>() {
            Ok(0) => Err(field.value_pos.error(format!("{name} must be positive"))),
            Ok(v) => Ok(v),
            Err(_) => Err(field.value_pos.error(format!("{name} is out of range"))),
        },
        _ => Err(field
            .value_pos
            .expected(format!("invalid {name}"), "positive integer")),
    }
}

fn symbols_value(field: &Field, s: &str) -> Result<(), ParseError> {
    if s.chars().any(char::is_control) {
        return Err(field
            .value_pos
            .error(format!("{} contains a control character", field.key.name())));
    }
    Ok(())
}

fn build(name: String, name_pos: Pos, fields: Vec<Field>) -> Result<ProblemSpec, ParseError> {
    let mut seen = BTreeSet::new();
    for f in &fields {
        if !seen.insert(f.key) {
            return Err(f
                .key_pos
                .error(format!("duplicate field: {}", f.key.name())));
        }
    }
    let get = |key: Key| fields.iter().find(|f| f.key == key);
    let require =
        |key: Key| get(key).ok_or_else(|| name_pos.error(format!("missing field: {}", key.name())));

    let kind_field = require(Key::Kind)?;
    let is_squares = ident_value(kind_field, &[("squares", true), ("word-paths", false)])?;
    let allowed: &[Key] = if is_squares {
        &[Key::Kind, Key::Cols, Key::Rows, Key::Variant]
    } else {
        &[
            Key::Kind,
            Key::Word,
            Key::Layout,
            Key::RowsData,
            Key::Adjacency,
            Key::DistinctCells,
        ]
    };
    if let Some(f) = fields.iter().find(|f| !allowed.contains(&f.key)) {
        let kind = if is_squares { "squares" } else { "word-paths" };
        return Err(f.key_pos.error(format!(
            "field {} not allowed for kind {kind}",
            f.key.name()
        )));
    }

    let kind = if is_squares {
        let cols = positive_value(require(Key::Cols)?)?;
        let rows = positive_value(require(Key::Rows)?)?;
        let variant = ident_value(
            require(Key::Variant)?,
            &[("axis", SquareVariant::Axis), ("all", SquareVariant::All)],
        )?;
        ProblemKind::Squares {
            cols,
            rows,
            variant,
        }
    } else {
        let word_field = require(Key::Word)?;
        let word = match &word_field.value {
            Value::Str(s) if !s.is_empty() => {
                symbols_value(word_field, s)?;
                Word::from(s.as_str())
            }
            Value::Str(_) => return Err(word_field.value_pos.error("word must not be empty")),
            _ => {
                return Err(word_field
                    .value_pos
                    .expected("invalid word", "quoted string"))
            }
        };
        let layout_field = require(Key::Layout)?;
        let explicit = ident_value(
            layout_field,
            &[("manhattan-rings", false), ("explicit", true)],
        )?;
        let layout = if explicit {
            let rows_field = require(Key::RowsData)?;
            let Value::List(rows) = &rows_field.value else {
                return Err(rows_field
                    .value_pos
                    .expected("invalid rows-data", "list of strings"));
            };
            if rows.is_empty() {
                return Err(rows_field.value_pos.error("rows-data must not be empty"));
            }
            let width = rows[0].chars().count();
            for row in rows {
                symbols_value(rows_field, row)?;
                let len = row.chars().count();
                if len == 0 {
                    return Err(rows_field
                        .value_pos
                        .error("rows-data rows must not be empty"));
                }
                if len != width {
                    return Err(rows_field
                        .value_pos
                        .error("rows-data rows must have equal length"));
                }
            }
            Layout::Explicit(rows.clone())
        } else {
            if let Some(f) = get(Key::RowsData) {
                return Err(f
                    .key_pos
                    .error("field rows-data not allowed for layout manhattan-rings"));
            }
            if word.len() % 2 == 0 {
                return Err(word_field
                    .value_pos
                    .error("invalid word: manhattan-rings layout requires odd word length"));
            }
            Layout::ManhattanRings
        };
        let adjacency = ident_value(
            require(Key::Adjacency)?,
            &[
                ("side", AdjacencyRule::Side),
                ("king", AdjacencyRule::King),
                ("none", AdjacencyRule::Unconstrained),
            ],
        )?;
        let distinct_cells = match get(Key::DistinctCells) {
            Some(f) => ident_value(f, &[("true", true), ("false", false)])?,
            None => false,
        };
        ProblemKind::WordPaths {
            word,
            layout,
            adjacency,
            distinct_cells,
        }
    };
    Ok(ProblemSpec { name, kind })
}

/// Parses and validates every problem block in `source`.
pub fn parse_spec(source: &str) -> Result<Vec<ProblemSpec>, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(source)?,
        at: 0,
    };
    let mut specs: Vec<ProblemSpec> = Vec::new();
    while parser.peek().0 != Tok::Eof {
        let (name, name_pos, fields) = parser.block()?;
        if specs.iter().any(|s| s.name == name) {
            return Err(name_pos.error(format!("duplicate problem name `{name}`")));
        }
        specs.push(build(name, name_pos, fields)?);
    }
    Ok(specs)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Canonical text: fields in fixed order, two-space indentation, defaults
/// spelled out, a blank line between blocks.
pub fn print_spec(specs: &[ProblemSpec]) -> String {
    let mut out = String::new();
    for (i, spec) in specs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        writeln!(out, "problem {} {{", spec.name).unwrap();
        writeln!(out, "  kind: {}", spec.kind.as_str()).unwrap();
        match &spec.kind {
            ProblemKind::Squares {
                cols,
                rows,
                variant,
            } => {
                writeln!(out, "  cols: {cols}").unwrap();
                writeln!(out, "  rows: {rows}").unwrap();
                writeln!(out, "  variant: {}", variant.as_str()).unwrap();
            }
            ProblemKind::WordPaths {
                word,
                layout,
                adjacency,
                distinct_cells,
            } => {
                writeln!(out, "  word: {}", quote(&word.to_string())).unwrap();
                writeln!(out, "  layout: {}", layout.as_str()).unwrap();
                if let Layout::Explicit(rows) = layout {
                    let rows: Vec<String> = rows.iter().map(|r| quote(r)).collect();
                    writeln!(out, "  rows-data: [{}]", rows.join(", ")).unwrap();
                }
                writeln!(out, "  adjacency: {}", adjacency.as_str()).unwrap();
                writeln!(out, "  distinct-cells: {distinct_cells}").unwrap();
            }
        }
        out.push_str("}\n");
    }
    out
}
