//! Text input formats.
//!
//! Complexes: one facet per line as whitespace-separated variable names;
//! `#` starts a comment. Graphs: one edge per line as two variable names.
//! Line order is the default generator order.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::bitset::{VertexSet, CAPACITY};
use crate::complex::{DropReason, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graphs::Graph;

#[derive(Debug, Clone)]
pub struct ParsedComplex {
    pub complex: SimplicialComplex,
    /// 1-based source line of each kept facet.
    pub lines: Vec<usize>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Orders `x2` before `x10`: non-digit prefix, then the numeric suffix.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn split(s: &str) -> (&str, &str) {
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, digits) = s.split_at(cut);
        (head, digits.trim_start_matches('0'))
    }
    let (ha, da) = split(a);
    let (hb, db) = split(b);
    ha.cmp(hb)
        .then(da.len().cmp(&db.len()))
        .then(da.cmp(db))
        .then(a.cmp(b))
}

fn valid_token(t: &str) -> bool {
    t.chars()
        .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\'' | '[' | ']'))
}

/// Non-empty lines with comments stripped, as `(line number, tokens)`.
fn records(text: &str) -> Result<Vec<(usize, Vec<&str>)>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if let Some(bad) = tokens.iter().find(|t| !valid_token(t)) {
            return Err(Error::Parse {
                line: k + 1,
                message: format!("invalid variable name {bad:?}"),
            });
        }
        out.push((k + 1, tokens));
    }
    if out.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(out)
}

pub fn parse_complex(text: &str) -> Result<ParsedComplex> {
    let recs = records(text)?;
    let mut warnings = Vec::new();
    for (line, tokens) in &recs {
        let mut seen: Vec<&str> = Vec::new();
        for t in tokens {
            if seen.contains(t) {
                warnings.push(format!("line {line}: variable {t} repeated"));
            }
            seen.push(t);
        }
    }
    let distinct: BTreeSet<&str> = recs.iter().flat_map(|(_, t)| t.iter().copied()).collect();
    if distinct.len() > CAPACITY {
        return Err(Error::TooManyVertices(distinct.len()));
    }
    let mut names: Vec<&str> = distinct.into_iter().collect();
    names.sort_by(|a, b| natural_cmp(a, b));
    let raw: Vec<VertexSet> = recs
        .iter()
        .map(|(_, tokens)| {
            tokens
                .iter()
                .map(|t| names.binary_search_by(|n| natural_cmp(n, t)).unwrap())
                .collect()
        })
        .collect();
    let names: Vec<String> = names.into_iter().map(String::from).collect();
    let normalized = SimplicialComplex::from_facet_sets(names.into(), &raw)?;
    for d in &normalized.dropped {
        let line = recs[d.input_index].0;
        let why = match d.reason {
            DropReason::Duplicate { of } => format!("repeats line {}", recs[of].0),
            DropReason::Contained { within } => format!("is contained in line {}", recs[within].0),
        };
        warnings.push(format!("line {line}: facet dropped, it {why}"));
    }
    let lines = (0..recs.len())
        .filter(|i| normalized.dropped.iter().all(|d| d.input_index != *i))
        .map(|i| recs[i].0)
        .collect();
    Ok(ParsedComplex {
        complex: normalized.complex,
        lines,
        warnings,
    })
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let recs = records(text)?;
    let mut edges = Vec::with_capacity(recs.len());
    for (line, tokens) in &recs {
        match tokens.as_slice() {
            [a, b] if a != b => edges.push((*a, *b)),
            [a, _] => {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("loop at {a}"),
                })
            }
            _ => {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("expected two vertices, found {}", tokens.len()),
                })
            }
        }
    }
    let build = Graph::from_edges(&edges)?;
    let warnings = build
        .duplicates
        .iter()
        .map(|&(k, first)| format!("line {}: edge dropped, it repeats line {}", recs[k].0, recs[first].0))
        .collect();
    Ok(ParsedGraph {
        graph: build.graph,
        warnings,
    })
}
