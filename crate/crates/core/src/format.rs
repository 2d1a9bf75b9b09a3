//! Text and JSON encodings of hypergraphs with boundary.
//!
//! ```text
//! # a path of length two
//! boundary: a b
//! interior: u
//! edge e1: a u
//! edge e2: u b
//! ```
//!
//! The JSON mirror is `{"boundary": [..], "interior": [..], "edges": {"e1": [..]}}`.

use crate::hypergraph::{Hypergraph, HypergraphError, HypergraphSpec};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
}

impl FormatError {
    /// Syntax problems, as opposed to well-formed input violating an invariant.
    pub fn is_syntax(&self) -> bool {
        !matches!(self, FormatError::Invalid(_))
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn is_valid_id(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '+'))
}

fn check_id(line: usize, s: &str) -> Result<String, FormatError> {
    if is_valid_id(s) {
        Ok(s.to_string())
    } else {
        Err(syntax(line, format!("invalid id `{s}`")))
    }
}

/// Parses the line-oriented text format without validating invariants.
pub fn parse_spec(text: &str) -> Result<HypergraphSpec, FormatError> {
    let mut boundary: Option<Vec<String>> = None;
    let mut interior: Option<Vec<String>> = None;
    let mut edges = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `<keyword>: ...`"))?;
        let ids = rest
            .split_whitespace()
            .map(|t| check_id(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        let mut words = head.split_whitespace();
        match (words.next(), words.next(), words.next()) {
            (Some("boundary"), None, _) => {
                if boundary.replace(ids).is_some() {
                    return Err(syntax(line, "duplicate `boundary` line"));
                }
            }
            (Some("interior"), None, _) => {
                if interior.replace(ids).is_some() {
                    return Err(syntax(line, "duplicate `interior` line"));
                }
            }
            (Some("edge"), Some(id), None) => {
                let id = check_id(line, id)?;
                if edges.insert(id.clone(), ids).is_some() {
                    return Err(syntax(line, format!("edge `{id}` defined twice")));
                }
            }
            _ => return Err(syntax(line, format!("unknown directive `{head}`"))),
        }
    }
    Ok(HypergraphSpec {
        boundary: boundary.ok_or_else(|| syntax(0, "missing `boundary` line"))?,
        interior: interior.unwrap_or_default(),
        edges,
    })
}

/// Parses and validates the text format.
pub fn parse_text(text: &str) -> Result<Hypergraph, FormatError> {
    Ok(parse_spec(text)?.build()?)
}

pub fn parse_json(text: &str) -> Result<Hypergraph, FormatError> {
    let spec: HypergraphSpec =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    Ok(spec.build()?)
}

/// Picks JSON when the first non-blank character is `{`.
pub fn parse_auto(text: &str) -> Result<Hypergraph, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn to_text(h: &Hypergraph) -> String {
    h.to_string()
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string_pretty(&h.to_spec()).expect("spec serializes")
}
