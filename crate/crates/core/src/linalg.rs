//! Exact linear algebra over the rationals.
//!
//! Everything is reduced to row echelon form with Gaussian elimination.
//! Pivots are chosen deterministically: the leftmost column with a non-zero
//! entry, and within it the first such row.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// A matrix in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    /// Reduces `rows` (each of length `ncols`).
    pub fn new(mut rows: Vec<Vec<Q>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = rows[top][col].recip();
            if !inv.is_one() {
                for x in rows[top][col..].iter_mut() {
                    *x *= &inv;
                }
            }
            let pivot_row = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == top || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        Echelon { ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the rows; the result is zero iff `v` lies in the
    /// row space.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Basis of `{x : A x = 0}` for the reduced matrix `A`, one vector per
    /// free column in increasing order.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![Q::zero(); self.ncols];
                x[free] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[free].clone();
                }
                x
            })
            .collect()
    }
}

pub fn rank(rows: Vec<Vec<Q>>, ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

/// Right kernel of an `m x n` matrix given by rows.
pub fn kernel(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    Echelon::new(rows, ncols).kernel()
}

pub fn transpose(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

/// Left kernel `{y : y^T A = 0}` of an `m x n` matrix given by rows.
pub fn left_kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let m = rows.len();
    kernel(transpose(rows, ncols), m)
}

/// A linear subspace of `Q^n`, stored as reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn from_spanning(rows: Vec<Vec<Q>>, ambient: usize) -> Self {
        Subspace { echelon: Echelon::new(rows, ambient) }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::from_spanning(Vec::new(), ambient)
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![Q::zero(); ambient];
                r[i] = Q::one();
                r
            })
            .collect();
        Self::from_spanning(rows, ambient)
    }

    /// Span of the given coordinate vectors.
    pub fn coordinate(indices: impl IntoIterator<Item = usize>, ambient: usize) -> Self {
        let rows = indices
            .into_iter()
            .map(|i| {
                let mut r = vec![Q::zero(); ambient];
                r[i] = Q::one();
                r
            })
            .collect();
        Self::from_spanning(rows, ambient)
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        self.echelon.rows()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.echelon.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }
}
