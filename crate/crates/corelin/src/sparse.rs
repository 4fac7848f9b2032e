//! Sparse exact elimination.
//!
//! Chain complexes of path algebras produce matrices with thousands of columns
//! but only a handful of ±1 entries per row. [`SparseMatrix::rank`] eliminates
//! row by row against a table of normalised pivot rows keyed by leading column,
//! which keeps fill-in low for such matrices while staying exact over ℚ.

use std::collections::{BTreeMap, HashMap};

use crate::{LinAlgError, Matrix, Rational};

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

/// A sparse matrix stored as a list of rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    /// An empty matrix with `cols` columns and no rows.
    pub fn new(cols: usize) -> Self {
        SparseMatrix {
            cols,
            rows: Vec::new(),
        }
    }

    /// Appends a row given as unsorted `(column, value)` pairs; repeated
    /// columns are summed and zeros dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) -> Result<(), LinAlgError> {
        let mut row: SparseRow = entries.into_iter().collect();
        if let Some(&(c, _)) = row.iter().find(|(c, _)| *c >= self.cols) {
            return Err(LinAlgError::IndexOutOfRange {
                index: c,
                bound: self.cols,
            });
        }
        row.sort_by_key(|(c, _)| *c);
        let mut merged: SparseRow = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        self.rows.push(merged);
        Ok(())
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The stored rows.
    pub fn row_data(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Dense copy.
    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }

    /// Sparse copy of a dense matrix.
    pub fn from_dense(m: &Matrix) -> Self {
        let rows = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            cols: m.cols(),
            rows,
        }
    }

    /// Rank over ℚ by exact sparse elimination.
    pub fn rank(&self) -> usize {
        let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
        // Shorter rows first: they are cheap to reduce and make sparse pivots.
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| (self.rows[r].len(), r));
        for r in order {
            let mut row = self.rows[r].clone();
            while let Some((lead, coef)) = row.first().cloned() {
                match pivots.get(&lead) {
                    Some(p) => row = axpy(&row, &coef, p),
                    None => {
                        let inv = coef.recip().expect("stored entries are nonzero");
                        for (_, v) in row.iter_mut() {
                            *v *= &inv;
                        }
                        pivots.insert(lead, row);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

/// `row − coef · pivot`, assuming both are sorted and `pivot` has leading
/// entry 1 at the same column as `row`'s leading entry.
fn axpy(row: &SparseRow, coef: &Rational, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, -(coef * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(coef * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// An incrementally grown echelon basis of a subspace of `ℚ^cols`.
///
/// Rows are stored normalised (leading coefficient 1) and keyed by their
/// leading column. [`SparseEchelon::reduce`] eliminates *every* pivot column,
/// so the reduced form of a vector is its unique representative supported on
/// non-pivot columns; two vectors are congruent modulo the span exactly when
/// their reduced forms agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseEchelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    /// The zero subspace of `ℚ^cols`.
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    /// Ambient dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Whether column `c` is a pivot (leading) column.
    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// The non-pivot columns in increasing order; they index a basis of the
    /// quotient `ℚ^cols / span`.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// The representative of `row` modulo the span supported on non-pivot
    /// columns. Entries may be unsorted and repeated.
    pub fn reduce(&self, row: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols, "column {c} out of range");
            *acc.entry(c).or_insert_with(Rational::zero) += v;
        }
        acc.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        loop {
            let next = acc.range(cursor..).map(|(c, _)| *c).find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { break };
            let coef = acc.remove(&c).expect("present");
            for (cc, v) in &self.pivots[&c][1..] {
                let slot = acc.entry(*cc).or_insert_with(Rational::zero);
                *slot -= &(&coef * v);
                if slot.is_zero() {
                    acc.remove(cc);
                }
            }
            cursor = c + 1;
        }
        acc.into_iter().collect()
    }

    /// Adds `row` to the span; returns `true` iff it was independent.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let mut reduced = self.reduce(row);
        let Some((lead, coef)) = reduced.first().cloned() else {
            return false;
        };
        let inv = coef.recip().expect("reduced entries are nonzero");
        for (_, v) in reduced.iter_mut() {
            *v *= &inv;
        }
        self.pivots.insert(lead, reduced);
        true
    }

    /// Whether `row` lies in the span.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        self.reduce(row).is_empty()
    }
}
