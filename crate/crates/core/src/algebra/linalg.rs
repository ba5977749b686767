use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    /// A particular solution plus a nullspace basis.
    WithNullspace {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
    NoSolution,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols).map(|r| r.to_vec()).collect()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &factor * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Nullspace basis of `a`, itself in reduced row echelon form.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Rational>> {
    let mut m = a.row_vecs();
    let pivots = rref(&mut m, a.cols);
    free_basis(&m, &pivots, a.cols)
}

fn free_basis(m: &[Vec<Rational>], pivots: &[usize], n: usize) -> Vec<Vec<Rational>> {
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<Rational>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); n];
            v[fc] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect();
    rref(&mut basis, n);
    basis
}

/// Solves `a * v = b` exactly.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<LinearSolution> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            a.rows
        )));
    }
    let mut m: Vec<Vec<Rational>> = a
        .row_vecs()
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, a.cols + 1);
    if pivots.last() == Some(&a.cols) {
        return Ok(LinearSolution::NoSolution);
    }
    let mut particular = vec![Rational::zero(); a.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = m[row][a.cols].clone();
    }
    let nullspace = free_basis(&m, &pivots, a.cols);
    if nullspace.is_empty() {
        Ok(LinearSolution::Unique(particular))
    } else {
        Ok(LinearSolution::WithNullspace {
            particular,
            nullspace,
        })
    }
}
