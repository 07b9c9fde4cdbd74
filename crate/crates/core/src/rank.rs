//! Exact rank of integer matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * other`, panicking on dimension mismatch.
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

type SparseRow = BTreeMap<usize, BigInt>;

/// Divides a row by the gcd of its entries and makes the leading entry
/// positive.
fn normalize(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let flip = row.values().next().is_some_and(|v| v.is_negative());
    if !g.is_zero() && (!g.is_one() || flip) {
        let g = if flip { -g } else { g };
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// Rank over the rationals by fraction-free elimination. Each eliminated
/// row is replaced by `p·row - a·pivot` (integer combination, no division)
/// and then divided by its content, so entries stay small and exact. Rows
/// not touching the pivot column are left alone.
pub fn exact_rank(m: &ExactMatrix) -> usize {
    let mut rows: Vec<SparseRow> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, BigInt::from(v)))
                .collect()
        })
        .filter(|r: &SparseRow| !r.is_empty())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        // Pivot: smallest magnitude, then sparsest, among rows whose first
        // nonzero column is `col`.
        let pivot = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.keys().next() == Some(&col))
            .min_by(|(_, a), (_, b)| {
                a[&col]
                    .abs()
                    .cmp(&b[&col].abs())
                    .then(a.len().cmp(&b.len()))
            })
            .map(|(i, _)| i);
        let Some(p) = pivot else { continue };
        let pivot_row = rows.swap_remove(p);
        let pv = pivot_row[&col].clone();
        rank += 1;
        for row in rows.iter_mut() {
            let Some(a) = row.get(&col).cloned() else {
                continue;
            };
            for v in row.values_mut() {
                *v *= &pv;
            }
            for (&c, pvc) in &pivot_row {
                let e = row.entry(c).or_insert_with(BigInt::zero);
                *e -= &a * pvc;
            }
            row.retain(|_, v| !v.is_zero());
            normalize(row);
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}
