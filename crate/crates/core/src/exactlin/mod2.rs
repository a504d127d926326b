//! Linear algebra over Z/2.

use num_integer::Integer;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mod2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl Mod2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mod2Matrix { rows, cols, data: vec![false; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Row-major construction from 0/1 values; any odd value counts as 1.
    pub fn from_u8(rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Mod2Matrix { rows, cols, data: entries.iter().map(|&x| x % 2 == 1).collect() }
    }

    pub fn reduce(a: &IntMatrix) -> Self {
        Mod2Matrix {
            rows: a.rows(),
            cols: a.cols(),
            data: a.entries().iter().map(|x| x.is_odd()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vec<bool> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Mod2Matrix) -> Result<Mod2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{} over Z2",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let v = (0..self.cols).fold(false, |acc, k| acc ^ (self.get(i, k) & rhs.get(k, j)));
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[bool]) -> Result<Vec<bool>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(false, |acc, k| acc ^ (self.get(i, k) & x[k])))
            .collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Vec<bool> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    /// Inverse over Z/2, `None` when singular.
    pub fn inverse(&self) -> Option<Mod2Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mod2Matrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| a.get(i, col))?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            for i in 0..n {
                if i != col && a.get(i, col) {
                    a.xor_row(i, col);
                    inv.xor_row(i, col);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] ^= row[src]`
    fn xor_row(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self.get(src, j);
            self.data[dst * self.cols + j] ^= v;
        }
    }
}

/// Some `x` with `A x = b` over Z/2, or `None` when the system is inconsistent.
///
/// For the row form `xᵀ A = bᵀ`, pass `A.transpose()`.
pub fn solve_mod2(a: &Mod2Matrix, b: &[bool]) -> Result<Option<Vec<bool>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            a.rows()
        )));
    }
    let (m, n) = (a.rows(), a.cols());
    let mut aug = Mod2Matrix::zeros(m, n + 1);
    for (i, &bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n, bi);
    }

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| aug.get(i, col)) else { continue };
        aug.swap_rows(row, p);
        for i in 0..m {
            if i != row && aug.get(i, col) {
                aug.xor_row(i, row);
            }
        }
        pivots.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    if (row..m).any(|i| aug.get(i, n)) {
        return Ok(None);
    }
    let mut x = vec![false; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, n);
    }
    Ok(Some(x))
}
