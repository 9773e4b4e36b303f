//! Dense exact linear algebra over the rationals: just enough for kernel,
//! rank and row-space computations on the small matrices produced by the
//! cohomology and minimal-model routines.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// A dense matrix over `Q`, row major.
#[derive(Debug, Clone)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        QMatrix { rows: r, cols: c, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|r| !self.get(*r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.data
                        .swap(pivot_row * self.cols + c, row * self.cols + c);
                }
            }
            let inv = Rational::one() / self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &(self.get(row, c) * &factor);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the kernel of the map `x -> A x`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (prow, pcol) in pivots.iter().enumerate() {
                v[*pcol] = -m.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// An incrementally built row space: supports rank queries, membership and
/// reduction of new vectors against the rows seen so far.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    // (pivot column, row with leading 1 at pivot)
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Insert a vector; returns `true` if it enlarged the space.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / v[pivot].clone();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep earlier rows reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (r, n) in row.iter_mut().zip(&v) {
                    *r -= &factor * n;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}
