//! Line-based text formats for relations and matroids.
//!
//! ```text
//! # comments run to end of line; blank lines are ignored
//! universe: 1 2 3
//! relation:
//! 1 1
//! 1 3
//! ```
//!
//! A matroid file has a `circuits:` section instead, one circuit per line as
//! whitespace-separated elements. The token `{}` spells the empty set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matroid::{check_circuit_axioms, CircuitViolation, Matroid};
use crate::relation::BinaryRelation;
use crate::sets::{ElemSet, SetFamily, Universe};

const EMPTY_SET_TOKEN: &str = "{}";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Relation,
    Matroid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentBody {
    Relation(BinaryRelation),
    /// Circuits as written, not yet checked against the axioms.
    Circuits(SetFamily),
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub universe: Universe,
    pub body: DocumentBody,
    circuit_lines: BTreeMap<u16, usize>,
}

impl InputDocument {
    pub fn kind(&self) -> DocumentKind {
        match self.body {
            DocumentBody::Relation(_) => DocumentKind::Relation,
            DocumentBody::Circuits(_) => DocumentKind::Matroid,
        }
    }

    pub fn into_relation(self) -> Result<BinaryRelation> {
        match self.body {
            DocumentBody::Relation(r) => Ok(r),
            DocumentBody::Circuits(_) => Err(Error::MissingHeader("relation:")),
        }
    }

    /// Validates the circuit section, reporting the offending lines.
    pub fn into_matroid(self) -> Result<Matroid> {
        let circuits = match self.body {
            DocumentBody::Circuits(c) => c,
            DocumentBody::Relation(_) => return Err(Error::MissingHeader("circuits:")),
        };
        if let Err(violation) = check_circuit_axioms(&circuits) {
            let culprits: Vec<u16> = match &violation {
                CircuitViolation::EmptyCircuit => vec![0],
                CircuitViolation::Nested { smaller, larger } => {
                    vec![smaller.mask(), larger.mask()]
                }
                CircuitViolation::Elimination { first, second, .. } => {
                    vec![first.mask(), second.mask()]
                }
            };
            let mut lines: Vec<usize> = culprits
                .iter()
                .filter_map(|m| self.circuit_lines.get(m).copied())
                .collect();
            lines.sort_unstable();
            return Err(Error::CircuitAxioms { violation, lines });
        }
        Matroid::from_circuits(circuits)
    }
}

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header<'a>(line: &'a str, name: &str) -> Option<&'a str> {
    line.strip_prefix(name)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
}

fn lookup(universe: &Universe, token: &str, line: usize) -> Result<usize> {
    universe
        .index_of(token)
        .ok_or_else(|| Error::UnknownElement {
            token: token.to_string(),
            line: Some(line),
        })
}

pub fn parse_document(text: &str) -> Result<InputDocument> {
    let mut lines = content_lines(text);
    let universe = match lines.next() {
        Some((_, line)) => match header(line, "universe") {
            Some(rest) => Universe::new(rest.split_whitespace())?,
            None => return Err(Error::MissingHeader("universe:")),
        },
        None => return Err(Error::MissingHeader("universe:")),
    };
    let (section_line, section) = lines
        .next()
        .ok_or(Error::MissingHeader("relation:` or `circuits:"))?;
    let kind = if let Some(rest) = header(section, "relation") {
        (DocumentKind::Relation, rest)
    } else if let Some(rest) = header(section, "circuits") {
        (DocumentKind::Matroid, rest)
    } else {
        return Err(Error::MissingHeader("relation:` or `circuits:"));
    };
    if !kind.1.trim().is_empty() {
        return Err(Error::MalformedLine {
            line: section_line,
            reason: "unexpected tokens after section header".into(),
        });
    }
    match kind.0 {
        DocumentKind::Relation => {
            let mut pairs = Vec::new();
            for (no, line) in lines {
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let [x, y] = tokens[..] else {
                    return Err(Error::MalformedLine {
                        line: no,
                        reason: format!("expected a pair `x y`, found {} tokens", tokens.len()),
                    });
                };
                pairs.push((lookup(&universe, x, no)?, lookup(&universe, y, no)?));
            }
            let relation = BinaryRelation::from_pairs(&universe, pairs)?;
            Ok(InputDocument {
                universe,
                body: DocumentBody::Relation(relation),
                circuit_lines: BTreeMap::new(),
            })
        }
        DocumentKind::Matroid => {
            let mut circuit_lines = BTreeMap::new();
            for (no, line) in lines {
                let mut bits = 0u16;
                for token in line.split_whitespace() {
                    if token != EMPTY_SET_TOKEN {
                        bits |= 1 << lookup(&universe, token, no)?;
                    }
                }
                circuit_lines.entry(bits).or_insert(no);
            }
            let circuits = SetFamily::from_masks(&universe, circuit_lines.keys().copied())?;
            Ok(InputDocument {
                universe,
                body: DocumentBody::Circuits(circuits),
                circuit_lines,
            })
        }
    }
}

pub fn parse_relation(text: &str) -> Result<BinaryRelation> {
    parse_document(text)?.into_relation()
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse_document(text)?.into_matroid()
}

/// Parses an inline subset such as `"1 3"`; `""` and `"{}"` are the empty set.
pub fn parse_set(universe: &Universe, text: &str) -> Result<ElemSet> {
    let tokens = text
        .split('#')
        .next()
        .unwrap_or("")
        .split_whitespace()
        .filter(|t| *t != EMPTY_SET_TOKEN);
    universe.set_from_labels(tokens)
}

/// One set per line in canonical order; `(empty)` for an empty family.
pub fn format_set_family(family: &SetFamily) -> String {
    family.to_string()
}

fn universe_line(universe: &Universe) -> String {
    let mut line = String::from("universe:");
    for l in universe.labels() {
        line.push(' ');
        line.push_str(l);
    }
    line
}

/// A full relation document that [`parse_relation`] reads back.
pub fn format_relation_document(r: &BinaryRelation) -> String {
    let mut out = universe_line(r.universe());
    out.push_str("\nrelation:\n");
    let pairs = r.to_string();
    if !pairs.is_empty() {
        out.push_str(&pairs);
        out.push('\n');
    }
    out
}

/// A full matroid document that [`parse_matroid`] reads back.
pub fn format_matroid_document(m: &Matroid) -> String {
    let mut out = universe_line(m.universe());
    out.push_str("\ncircuits:\n");
    for c in m.circuits().iter() {
        out.push_str(&c.labels().join(" "));
        out.push('\n');
    }
    out
}
