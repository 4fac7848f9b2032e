//! Dense exact matrices over ℚ.
//!
//! Storage is row-major. All elimination routines pivot deterministically
//! (first nonzero entry in the leftmost available column), so echelon forms and
//! kernel bases are reproducible across runs.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{LinAlgError, Rational};

/// A dense `rows × cols` matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// The reduced matrix (same shape as the input).
    pub reduced: Matrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from a row-major entry list.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<Rational>,
    ) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::EntryCount {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    ///
    /// `cols` is explicit so that matrices with zero rows keep their width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinAlgError::RaggedRow {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from integer rows.
    ///
    /// # Panics
    /// Panics on ragged input; intended for literals in code and tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        Matrix::from_rows(cols, data).expect("ragged integer literal")
    }

    /// Builds a matrix entrywise from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entry `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    /// Overwrites entry `(r, c)`.
    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    /// Row `r` as a slice.
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Rows as nested vectors.
    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// True iff every entry vanishes (vacuously true for empty matrices).
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// True iff the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The transpose.
    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Exact product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "product",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        self.zip_with(rhs, "sum", |a, b| a + b)
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        self.zip_with(rhs, "difference", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Matrix, LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Multiplies every entry by `k`.
    pub fn scale(&self, k: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    /// The negated matrix.
    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// `self^e` for a square matrix (`self^0` is the identity).
    pub fn pow(&self, e: usize) -> Result<Matrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "hstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation of `self` over `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// The submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                op: "apply",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Reduced row echelon form by exact Gauss–Jordan elimination.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(found, pivot_row);
            let inv = m.get(pivot_row, c).recip().expect("nonzero pivot");
            for cc in c..m.cols {
                let v = m.get(pivot_row, cc) * &inv;
                m.set(pivot_row, cc, v);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for cc in c..m.cols {
                    let p = m.get(pivot_row, cc);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, cc) - &(&factor * p);
                    m.set(r, cc, v);
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side; rank is transpose-invariant.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        self.rref().pivots.len()
    }

    /// A basis of the right kernel `{x : self·x = 0}`, returned as the columns
    /// of a `cols × (cols − rank)` matrix. The basis vector attached to a free
    /// column `f` has a 1 in position `f` and zeros in the other free positions.
    pub fn kernel_basis(&self) -> Matrix {
        let Echelon { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, Rational::one());
            for (row, &p) in pivots.iter().enumerate() {
                let v = reduced.get(row, f);
                if !v.is_zero() {
                    out.set(p, k, -v);
                }
            }
        }
        out
    }

    /// Nullity, i.e. `cols − rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Exact matrix product `a · b`; errors on a shape mismatch.
pub fn compose(a: &Matrix, b: &Matrix) -> Result<Matrix, LinAlgError> {
    a.mul(b)
}

/// Rank of `m` over ℚ.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Right-kernel basis of `m` as matrix columns.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    /// Serialises as a list of rows of rational strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    /// Deserialises from a list of rows. An empty list is a `0 × 0` matrix;
    /// callers that need `0 × c` or `r × 0` shapes fix them up with
    /// [`Matrix::reshape_empty`].
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<Rational>> = Vec::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(cols, rows).map_err(serde::de::Error::custom)
    }
}

impl Matrix {
    /// Reinterprets an empty matrix (no entries) with a new empty shape.
    ///
    /// JSON row lists cannot distinguish `0 × 3` from `0 × 0`; this restores the
    /// intended shape. Fails if the matrix has entries and the shape differs.
    pub fn reshape_empty(self, rows: usize, cols: usize) -> Result<Matrix, LinAlgError> {
        if self.rows == rows && self.cols == cols {
            return Ok(self);
        }
        if self.entries.is_empty() && rows * cols == 0 {
            return Ok(Matrix::zeros(rows, cols));
        }
        Err(LinAlgError::DimensionMismatch {
            op: "reshape",
            left: (self.rows, self.cols),
            right: (rows, cols),
        })
    }
}
