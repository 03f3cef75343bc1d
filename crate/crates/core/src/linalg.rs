//! Dense matrices over a field given by its arithmetic.
//!
//! Entries are ambient-field elements. A matrix whose entries lie in a
//! subfield keeps them there under elimination, and rank does not change
//! under field extension, so one implementation serves every base field.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Builds a matrix with `cols` columns from a row list that may be empty.
    pub fn from_rows_with_cols(rows: Vec<Vec<Elem>>, cols: usize) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zeros(0, cols));
        }
        let m = Self::from_rows(rows)?;
        if m.cols != cols {
            return Err(Error::LengthMismatch { expected: cols, got: m.cols });
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem], f: &Field) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(r, c)));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of {x : A x = 0}, as column vectors.
    pub fn nullspace(&self, f: &Field) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![Elem::ZERO; self.cols];
                x[fc] = Elem::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(r.get(i, fc));
                }
                x
            })
            .collect()
    }

    /// Basis of {y : y A = 0}.
    pub fn left_nullspace(&self, f: &Field) -> Vec<Vec<Elem>> {
        self.transpose().nullspace(f)
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Elem::ONE);
        }
        let (red, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::LinearlyDependent);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }

    /// One row per line, entries in element notation, comma separated.
    pub fn to_text(&self, f: &Field) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|&e| f.fmt_elem(e)).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}
