use std::collections::BTreeMap;

use crate::par;
use crate::scalar::Scalar;

use super::DenseMatrix;

/// Row-major sparse matrix; each row holds `(column, value)` pairs sorted by
/// column with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, S)>>,
}

fn merge_rows<S: Scalar>(a: &[(usize, S)], b: &[(usize, S)], sign: bool) -> Vec<(usize, S)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let other = |v: &S| if sign { v.clone() } else { v.neg() };
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, other(&b[j].1)));
            j += 1;
        } else {
            let v = if sign { a[i].1.add(&b[j].1) } else { a[i].1.sub(&b[j].1) };
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &S::one())
    }

    pub fn scalar(n: usize, s: &S) -> Self {
        let rows = (0..n).map(|i| if s.is_zero() { Vec::new() } else { vec![(i, s.clone())] }).collect();
        Self { nrows: n, ncols: n, rows }
    }

    /// Builds from unordered triplets; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "triplet ({r},{c}) outside {nrows}x{ncols}");
            let slot = acc[r].entry(c).or_insert_with(S::zero);
            *slot = slot.add(&v);
        }
        let rows = acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
        Self { nrows, ncols, rows }
    }

    pub fn from_dense(d: &DenseMatrix<S>) -> Self {
        let rows = (0..d.nrows())
            .map(|r| (0..d.ncols()).filter(|&c| !d[(r, c)].is_zero()).map(|c| (c, d[(r, c)].clone())).collect())
            .collect();
        Self { nrows: d.nrows(), ncols: d.ncols(), rows }
    }

    pub fn to_dense(&self) -> DenseMatrix<S> {
        let mut d = DenseMatrix::zeros(self.nrows, self.ncols);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                d[(r, *c)] = v.clone();
            }
        }
        d
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &[(usize, S)] {
        &self.rows[r]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn assert_same_shape(&self, o: &Self) {
        assert!(
            self.nrows == o.nrows && self.ncols == o.ncols,
            "shape mismatch {}x{} vs {}x{}",
            self.nrows,
            self.ncols,
            o.nrows,
            o.ncols
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.assert_same_shape(o);
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| merge_rows(a, b, true)).collect();
        Self { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.assert_same_shape(o);
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| merge_rows(a, b, false)).collect();
        Self { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v.mul(s))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn neg(&self) -> Self {
        let rows = self.rows.iter().map(|row| row.iter().map(|(c, v)| (*c, v.neg())).collect()).collect();
        Self { nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// `self + s·I`.
    pub fn add_scalar(&self, s: &S) -> Self {
        assert_eq!(self.nrows, self.ncols, "add_scalar needs a square matrix");
        self.add(&Self::scalar(self.nrows, s))
    }

    /// Matrix product; rows of the result are computed independently.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols, o.nrows, "product shape mismatch");
        let rows = par::map_slice(&self.rows, |row| {
            let mut acc: BTreeMap<usize, S> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &o.rows[*k] {
                    let p = a.mul(b);
                    match acc.get_mut(c) {
                        Some(slot) => *slot = slot.add(&p),
                        None => {
                            acc.insert(*c, p);
                        }
                    }
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        });
        Self { nrows: self.nrows, ncols: o.ncols, rows }
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let entries =
            self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (*c, r, v.clone())));
        Self::from_triplets(self.ncols, self.nrows, entries)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let entries = self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (*c, r, v.conj())));
        Self::from_triplets(self.ncols, self.nrows, entries)
    }

    /// Kronecker product `self ⊗ o`; index `(i, a)` maps to `i * o.nrows + a`.
    pub fn kron(&self, o: &Self) -> Self {
        let (p, q) = (o.nrows, o.ncols);
        let mut rows = Vec::with_capacity(self.nrows * p);
        for row in &self.rows {
            for a in 0..p {
                let mut out = Vec::new();
                for (c, v) in row {
                    for (b, w) in &o.rows[a] {
                        out.push((c * q + b, v.mul(w)));
                    }
                }
                rows.push(out);
            }
        }
        Self { nrows: self.nrows * p, ncols: self.ncols * q, rows }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ncols);
        self.rows.iter().map(|row| row.iter().fold(S::zero(), |acc, (c, a)| acc.add(&a.mul(&v[*c])))).collect()
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize, S, S)> {
        self.assert_same_shape(o);
        let d = self.sub(o);
        d.rows.iter().enumerate().find_map(|(r, row)| row.first().map(|(c, _)| (r, *c, self.get(r, *c), o.get(r, *c))))
    }

    /// Submatrix of the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let out = rows
            .iter()
            .map(|&r| {
                let mut v: Vec<(usize, S)> = self.rows[r]
                    .iter()
                    .filter(|(c, _)| pos[*c] != usize::MAX)
                    .map(|(c, x)| (pos[*c], x.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Self { nrows: rows.len(), ncols: cols.len(), rows: out }
    }

    /// Applies `f` to every stored entry, dropping results that vanish.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c.to_owned(), v)))
    }
}
