//! The line-oriented lattice text format.
//!
//! ```text
//! # comment
//! elements: 0 a b 1
//! cover: 0 a
//! delta: a b
//! nabla: a 0
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;
use wdl_core::{Dicomplementation, LatticeSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate {what}")]
    DuplicateDeclaration { line: usize, what: String },
    #[error("line {line}: cover mentions undeclared element `{name}`")]
    UnknownElementInCover { line: usize, name: String },
    #[error("line {line}: table row mentions undeclared element `{name}`")]
    UnknownElementInTable { line: usize, name: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Elements must be declared before covers and table rows refer to them.
pub fn parse(text: &str) -> Result<LatticeSpec, ParseError> {
    let mut elements: Option<Vec<String>> = None;
    let mut covers = Vec::new();
    let mut seen_covers = HashSet::new();
    let mut tables: [Option<Vec<(String, String)>>; 2] = [None, None];
    let mut seen_rows: [HashSet<String>; 2] = Default::default();
    let mut last = 0;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(':').ok_or_else(|| syntax(line, "expected `key: values`"))?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "elements" => {
                if elements.is_some() {
                    return Err(ParseError::DuplicateDeclaration { line, what: "elements declaration".into() });
                }
                if tokens.is_empty() {
                    return Err(syntax(line, "no elements"));
                }
                let mut names = HashSet::new();
                for t in &tokens {
                    if !names.insert(*t) {
                        return Err(ParseError::DuplicateDeclaration { line, what: format!("element `{t}`") });
                    }
                }
                elements = Some(tokens.iter().map(|t| t.to_string()).collect());
            }
            key @ ("cover" | "delta" | "nabla") => {
                let [a, b] = tokens[..] else {
                    return Err(syntax(line, format!("`{key}` takes exactly two elements")));
                };
                let declared = elements.as_ref().ok_or_else(|| syntax(line, "`elements` must come first"))?;
                for name in [a, b] {
                    if !declared.iter().any(|e| e == name) {
                        return Err(if key == "cover" {
                            ParseError::UnknownElementInCover { line, name: name.into() }
                        } else {
                            ParseError::UnknownElementInTable { line, name: name.into() }
                        });
                    }
                }
                if key == "cover" {
                    if !seen_covers.insert((a, b)) {
                        return Err(ParseError::DuplicateDeclaration { line, what: format!("cover {a} {b}") });
                    }
                    covers.push((a.to_string(), b.to_string()));
                } else {
                    let slot = usize::from(key == "nabla");
                    if !seen_rows[slot].insert(a.to_string()) {
                        return Err(ParseError::DuplicateDeclaration { line, what: format!("{key} row for `{a}`") });
                    }
                    tables[slot].get_or_insert_with(Vec::new).push((a.to_string(), b.to_string()));
                }
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }
    let elements = elements.ok_or_else(|| syntax(last + 1, "no elements declared"))?;
    let [delta, nabla] = tables;
    Ok(LatticeSpec { elements, covers, delta, nabla })
}

/// Declarations are written in the order they are stored, so
/// `parse(serialize(s)) == s`.
pub fn serialize(spec: &LatticeSpec) -> String {
    let mut out = String::new();
    writeln!(out, "elements: {}", spec.elements.join(" ")).unwrap();
    for (a, b) in &spec.covers {
        writeln!(out, "cover: {a} {b}").unwrap();
    }
    for (key, table) in [("delta", &spec.delta), ("nabla", &spec.nabla)] {
        for (a, b) in table.iter().flatten() {
            writeln!(out, "{key}: {a} {b}").unwrap();
        }
    }
    out
}

/// The spec of a validated instance, covers in lattice order.
pub fn spec_of(d: &Dicomplementation) -> LatticeSpec {
    let l = d.lattice();
    let rows = |t: &[usize]| l.elements().map(|x| (l.name(x).to_string(), l.name(t[x]).to_string())).collect();
    LatticeSpec { delta: d.delta_table().ok().map(rows), nabla: d.nabla_table().ok().map(rows), ..l.to_spec() }
}
