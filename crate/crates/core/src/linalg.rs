//! Dense exact linear algebra over a [`Scalar`].
//!
//! Matrices act on column vectors: `(M v)_i = sum_j M[i][j] v_j`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors of length `n`.
    pub fn from_columns(n: usize, cols: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref(&mut rows).len()
    }

    /// Basis of the null space `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let mut rows = self.to_rows();
        let pivots = rref(&mut rows);
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![S::zero(); self.cols];
            x[f] = S::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            basis.push(x);
        }
        basis
    }

    pub fn block_diag(blocks: &[&Matrix<S>]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(oi + i, oj + j)] = b[(i, j)].clone();
                }
            }
            oi += b.rows;
            oj += b.cols;
        }
        m
    }

    pub fn map<U>(&self, f: impl Fn(&S) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Matrix<S> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Brings `rows` into reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(pr) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(top, pr);
        let inv = S::one() / rows[top][col].clone();
        if !inv.is_one() {
            for x in rows[top].iter_mut().skip(col) {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

/// A linear subspace of `S^n`, stored by its reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<S> {
    n: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| unit(n, i)))
    }

    pub fn span<I>(n: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<S>>,
    {
        let mut rows: Vec<Vec<S>> =
            vectors.into_iter().inspect(|v| assert_eq!(v.len(), n, "vector outside the ambient space")).collect();
        if n == 0 {
            return Self::zero(0);
        }
        let pivots = rref(&mut rows);
        Subspace { n, basis: rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; the unit vectors there span a complement.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut free = vec![true; self.n];
        for &p in &self.pivots {
            free[p] = false;
        }
        (0..self.n).filter(|&i| free[i]).collect()
    }

    /// Representative of `v` modulo the subspace, zero on all pivot coordinates.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - c.clone() * b.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::span(self.n, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(self.n);
        }
        let a = self.dim();
        let cols: Vec<Vec<S>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|w| w.iter().map(|x| -x.clone()).collect()))
            .collect();
        let m = Matrix::from_columns(self.n, &cols);
        let vectors = m.kernel().into_iter().map(|k| {
            let mut v = vec![S::zero(); self.n];
            for (c, u) in k[..a].iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(u) {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
            v
        });
        Self::span(self.n, vectors)
    }

    /// Image under a linear map `S^n -> S^m`.
    pub fn image(&self, m: &Matrix<S>) -> Self {
        assert_eq!(m.cols(), self.n);
        Self::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }
}

impl<S: fmt::Debug> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace").field("n", &self.n).field("basis", &self.basis).finish()
    }
}

pub fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}
