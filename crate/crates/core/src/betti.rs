//! Betti tables and diagrams.
//!
//! A [`BettiTable`] records multigraded Betti numbers `b_{i,m}` at squarefree
//! multidegrees `m`. Two indexing conventions are supported and related by
//! `b_{i,m}(S/I) = b_{i-1,m}(I)` for `i >= 1`. The degree zero entry
//! `b_{0,1}(S/I) = 1` is never stored; the diagram adds it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Indices for `S/I`.
    Quotient,
    /// Indices for `I`.
    Ideal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    convention: Convention,
    entries: BTreeMap<VertexSet, BTreeMap<usize, u64>>,
}

/// One serialized table entry. `rank` is omitted when it is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub degree: Vec<String>,
    pub i: usize,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub rank: u64,
}

fn one() -> u64 {
    1
}

fn is_one(v: &u64) -> bool {
    *v == 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub convention: Convention,
    pub entries: Vec<EntryJson>,
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Adds `rank` at `(i, m)`; zero ranks are ignored.
    pub fn insert(&mut self, m: VertexSet, i: usize, rank: u64) {
        if rank > 0 {
            *self.entries.entry(m).or_default().entry(i).or_insert(0) += rank;
        }
    }

    pub fn get(&self, m: VertexSet, i: usize) -> u64 {
        self.entries
            .get(&m)
            .and_then(|row| row.get(&i))
            .copied()
            .unwrap_or(0)
    }

    pub fn num_multidegrees(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(m, i, rank)` with multidegrees in degree-then-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, usize, u64)> + '_ {
        let mut degrees: Vec<VertexSet> = self.entries.keys().copied().collect();
        degrees.sort_by(|a, b| a.cmp_graded(*b));
        degrees.into_iter().flat_map(move |m| {
            self.entries[&m]
                .iter()
                .map(move |(&i, &rank)| (m, i, rank))
        })
    }

    /// Homological indices carrying a nonzero number at `m`.
    pub fn indices_at(&self, m: VertexSet) -> Vec<usize> {
        self.entries
            .get(&m)
            .map(|row| row.keys().copied().collect())
            .unwrap_or_default()
    }

    pub fn to_convention(&self, target: Convention) -> BettiTable {
        let shift = |i: usize| match (self.convention, target) {
            (Convention::Quotient, Convention::Ideal) => i - 1,
            (Convention::Ideal, Convention::Quotient) => i + 1,
            _ => i,
        };
        BettiTable {
            convention: target,
            entries: self
                .entries
                .iter()
                .map(|(&m, row)| (m, row.iter().map(|(&i, &r)| (shift(i), r)).collect()))
                .collect(),
        }
    }

    /// `(pd, reg)` of `S/I`, counting the implicit `b_{0,0} = 1`.
    pub fn pd_reg(&self) -> (usize, usize) {
        let q = self.to_convention(Convention::Quotient);
        q.iter().fold((0, 0), |(pd, reg), (m, i, _)| {
            (pd.max(i), reg.max(m.len().saturating_sub(i)))
        })
    }

    pub fn to_json(&self, cx: &SimplicialComplex) -> TableJson {
        TableJson {
            convention: self.convention,
            entries: self
                .iter()
                .map(|(m, i, rank)| EntryJson {
                    degree: cx.vertex_names(m),
                    i,
                    rank,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TableJson, cx: &SimplicialComplex) -> Result<BettiTable> {
        let mut table = BettiTable::new(json.convention);
        for e in &json.entries {
            let m = cx.vertex_set(&e.degree)?;
            if json.convention == Convention::Quotient && e.i == 0 {
                return Err(Error::Parse {
                    line: 0,
                    message: "quotient tables do not store index 0".into(),
                });
            }
            table.insert(m, e.i, e.rank);
        }
        Ok(table)
    }
}

/// Graded Betti numbers `b_{i,j}(S/I)` arranged with column `i` and row
/// `j - i`, plus a totals row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiDiagram {
    /// `grid[row][col]`.
    grid: Vec<Vec<u64>>,
}

impl BettiDiagram {
    pub fn from_table(table: &BettiTable) -> Self {
        let q = table.to_convention(Convention::Quotient);
        let (pd, reg) = q.pd_reg();
        let mut grid = vec![vec![0u64; pd + 1]; reg + 1];
        grid[0][0] = 1;
        for (m, i, rank) in q.iter() {
            grid[m.len() - i][i] += rank;
        }
        BettiDiagram { grid }
    }

    /// `b_{i,j}(S/I)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        j.checked_sub(i)
            .and_then(|row| self.grid.get(row))
            .and_then(|r| r.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..self.columns())
            .map(|i| self.grid.iter().map(|r| r[i]).sum())
            .collect()
    }

    pub fn columns(&self) -> usize {
        self.grid[0].len()
    }

    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn pd(&self) -> usize {
        self.columns() - 1
    }

    pub fn reg(&self) -> usize {
        self.rows() - 1
    }

    /// Fixed-width rendering: header row of homological indices, a `Total`
    /// row, then one row per `j`, with `--` for zeros.
    pub fn render(&self) -> String {
        let totals = self.totals();
        let label_width = "Total".len().max(self.reg().to_string().len());
        let cell_width = totals
            .iter()
            .map(|t| t.to_string().len())
            .chain((0..self.columns()).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(2);
        let line = |label: &str, cells: Vec<String>| {
            let mut s = format!("{label:>label_width$} |");
            for c in cells {
                let _ = write!(s, " {c:>cell_width$}");
            }
            s.push('\n');
            s
        };
        let cell = |v: u64| if v == 0 { "--".to_string() } else { v.to_string() };
        let header = line("", (0..self.columns()).map(|i| i.to_string()).collect());
        let rule = format!("{}\n", "-".repeat(header.trim_end().chars().count()));
        let mut out = header;
        out.push_str(&rule);
        out.push_str(&line("Total", totals.iter().map(|&t| cell(t)).collect()));
        out.push_str(&rule);
        for (j, row) in self.grid.iter().enumerate() {
            out.push_str(&line(&j.to_string(), row.iter().map(|&v| cell(v)).collect()));
        }
        out
    }
}
