use std::ops::{Index, IndexMut};

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    nrows: usize,
    ncols: usize,
    data: Vec<S>,
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.ncols + c]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.ncols + c]
    }
}

/// Basis of a subspace given as the columns of `basis`, normalized so that the
/// rows listed in `pivot_rows` form an identity block. Coordinates of a vector
/// in the subspace are then read off at those rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    pub basis: DenseMatrix<S>,
    pub pivot_rows: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Matrix of `a` restricted to the subspace, or `None` if the subspace is
    /// not invariant under `a`.
    pub fn restrict(&self, a: &DenseMatrix<S>) -> Option<DenseMatrix<S>> {
        let image = a.mul(&self.basis);
        let r = image.select_rows(&self.pivot_rows);
        if self.basis.mul(&r).same_as(&image) {
            Some(r)
        } else {
            None
        }
    }
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, data: vec![S::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self { nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..nrows * ncols).map(|k| f(k / ncols.max(1), k % ncols.max(1))).collect();
        Self { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.nrows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    /// Entrywise equality up to the backend's zero test.
    pub fn same_as(&self, o: &Self) -> bool {
        self.nrows == o.nrows && self.ncols == o.ncols && self.sub(o).is_zero()
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols, o.nrows, "product shape mismatch");
        let mut out = Self::zeros(self.nrows, o.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.ncols {
                    let b = &o[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    fn zip(&self, o: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert!(self.nrows == o.nrows && self.ncols == o.ncols, "shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect();
        Self { nrows: self.nrows, ncols: self.ncols, data }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.sub(b))
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.mul(s))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |r, c| self[(c, r)].clone())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |r, c| self[(c, r)].conj())
    }

    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.nrows * o.nrows, self.ncols * o.ncols, |r, c| {
            self[(r / o.nrows, c / o.ncols)].mul(&o[(r % o.nrows, c % o.ncols)])
        })
    }

    pub fn trace(&self) -> S {
        (0..self.nrows.min(self.ncols)).fold(S::zero(), |acc, i| acc.add(&self[(i, i)]))
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.nrows, o.nrows);
        Self::from_fn(self.nrows, self.ncols + o.ncols, |r, c| {
            if c < self.ncols {
                self[(r, c)].clone()
            } else {
                o[(r, c - self.ncols)].clone()
            }
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.ncols, |r, c| self[(rows[r], c)].clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.nrows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    /// Reduced row echelon form by Gauss–Jordan elimination; returns the
    /// reduced matrix and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(p) = (r..m.nrows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for k in c..m.ncols {
                m[(r, k)] = m[(r, k)].mul(&inv);
            }
            for i in 0..m.nrows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for k in c..m.ncols {
                    if !m[(r, k)].is_zero() {
                        m[(i, k)] = m[(i, k)].sub(&f.mul(&m[(r, k)]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.ncols {
            self.data.swap(a * self.ncols + c, b * self.ncols + c);
        }
    }

    /// Fraction-free (Bareiss) forward elimination with row pivoting.
    /// Returns the rank and the final pivot, which for a full-rank square
    /// matrix is the determinant up to the sign of the row permutation.
    fn bareiss(&self) -> (usize, S, bool) {
        let mut m = self.clone();
        let mut prev = S::one();
        let mut rank = 0;
        let mut odd_swaps = false;
        for c in 0..m.ncols {
            if rank == m.nrows {
                break;
            }
            let Some(p) = (rank..m.nrows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != rank {
                m.swap_rows(rank, p);
                odd_swaps = !odd_swaps;
            }
            let piv = m[(rank, c)].clone();
            let prev_inv = prev.inv().expect("previous pivot is nonzero");
            for i in rank + 1..m.nrows {
                let f = m[(i, c)].clone();
                for k in c + 1..m.ncols {
                    let v = piv.mul(&m[(i, k)]).sub(&f.mul(&m[(rank, k)]));
                    m[(i, k)] = v.mul(&prev_inv);
                }
                m[(i, c)] = S::zero();
            }
            prev = piv;
            rank += 1;
        }
        (rank, prev, odd_swaps)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.nrows == 0 {
            return S::one();
        }
        let (rank, last, odd) = self.bareiss();
        if rank < self.nrows {
            S::zero()
        } else if odd {
            last.neg()
        } else {
            last
        }
    }

    /// Leading principal minors via Bareiss elimination without pivoting.
    /// Stops after the first vanishing minor (later minors are not defined by
    /// this recursion), so a shorter vector signals a singular leading block.
    pub fn leading_principal_minors(&self) -> Vec<S> {
        assert!(self.is_square());
        let n = self.nrows;
        let mut m = self.clone();
        let mut prev = S::one();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let piv = m[(k, k)].clone();
            out.push(piv.clone());
            if piv.is_zero() {
                break;
            }
            let prev_inv = prev.inv().expect("nonzero minor");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = piv.mul(&m[(i, j)]).sub(&m[(i, k)].mul(&m[(k, j)]));
                    m[(i, j)] = v.mul(&prev_inv);
                }
            }
            prev = piv;
        }
        out
    }

    /// Null space basis in normalized form (identity on the free columns).
    pub fn kernel(&self) -> Subspace<S> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(self.ncols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = S::one();
            for (i, &p) in pivots.iter().enumerate() {
                basis[(p, k)] = r[(i, f)].neg();
            }
        }
        Subspace { basis, pivot_rows: free }
    }

    /// Normalized basis of the column space.
    pub fn column_space(&self) -> Subspace<S> {
        let (r, pivots) = self.transpose().rref();
        let k = pivots.len();
        let basis = Self::from_fn(self.nrows, k, |i, j| r[(j, i)].clone());
        Subspace { basis, pivot_rows: pivots }
    }
}
