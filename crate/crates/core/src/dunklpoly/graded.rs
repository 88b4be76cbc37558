use std::fmt;
use std::sync::Arc;

use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::par;
use crate::scalar::Scalar;

/// Operator on a truncated graded space ⊕_{d ≤ K} V_d with a fixed degree
/// shift. `blocks[d]` maps V_d to V_{d+shift}; it is `None` when the result
/// would need degrees above K (clipped), and a 0-row matrix when the target
/// degree is negative.
#[derive(Clone, Debug)]
pub struct GradedOperator<S: Scalar> {
    shift: i32,
    dims: Arc<Vec<usize>>,
    blocks: Vec<Option<SparseMatrix<S>>>,
}

/// First place where two graded operators disagree.
#[derive(Clone, Debug, PartialEq)]
pub enum Discrepancy {
    ShiftMismatch { lhs: i32, rhs: i32 },
    Clipped { degree: usize },
    Entry { degree: usize, row: usize, col: usize, lhs: String, rhs: String },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ShiftMismatch { lhs, rhs } => write!(f, "degree shifts differ ({lhs} vs {rhs})"),
            Self::Clipped { degree } => write!(f, "degree {degree} is beyond the truncation"),
            Self::Entry { degree, row, col, lhs, rhs } => {
                write!(f, "degree {degree}, entry ({row},{col}): {lhs} vs {rhs}")
            }
        }
    }
}

impl<S: Scalar> GradedOperator<S> {
    /// Builds blocks from `f(d)` for every source degree whose target is in
    /// range; shapes are checked.
    pub fn from_fn(shift: i32, dims: Arc<Vec<usize>>, f: impl Fn(usize) -> SparseMatrix<S> + Sync + Send) -> Self {
        let k = dims.len() as i32 - 1;
        let blocks = par::map_range(dims.len(), |d| {
            let t = d as i32 + shift;
            if t > k {
                None
            } else if t < 0 {
                Some(SparseMatrix::zeros(0, dims[d]))
            } else {
                let m = f(d);
                assert!(
                    m.nrows() == dims[t as usize] && m.ncols() == dims[d],
                    "block at degree {d} has shape {}x{}, expected {}x{}",
                    m.nrows(),
                    m.ncols(),
                    dims[t as usize],
                    dims[d]
                );
                Some(m)
            }
        });
        Self { shift, dims, blocks }
    }

    pub fn zero(shift: i32, dims: Arc<Vec<usize>>) -> Self {
        let d2 = dims.clone();
        Self::from_fn(shift, dims, move |d| SparseMatrix::zeros(d2[(d as i32 + shift) as usize], d2[d]))
    }

    pub fn scalar(dims: Arc<Vec<usize>>, s: &S) -> Self {
        let d2 = dims.clone();
        Self::from_fn(0, dims, move |d| SparseMatrix::scalar(d2[d], s))
    }

    pub fn identity(dims: Arc<Vec<usize>>) -> Self {
        Self::scalar(dims, &S::one())
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn dims(&self) -> &Arc<Vec<usize>> {
        &self.dims
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn block(&self, d: usize) -> Option<&SparseMatrix<S>> {
        self.blocks.get(d).and_then(Option::as_ref)
    }

    pub fn dense_block(&self, d: usize) -> Option<DenseMatrix<S>> {
        self.block(d).map(SparseMatrix::to_dense)
    }

    /// Highest source degree with a computed block.
    pub fn exact_through(&self) -> Option<usize> {
        (0..self.blocks.len()).take_while(|&d| self.blocks[d].is_some()).last()
    }

    fn same_space(&self, o: &Self) {
        assert!(Arc::ptr_eq(&self.dims, &o.dims) || self.dims == o.dims, "operators on different spaces");
    }

    fn zip(&self, o: &Self, f: impl Fn(&SparseMatrix<S>, &SparseMatrix<S>) -> SparseMatrix<S> + Sync + Send) -> Self {
        self.same_space(o);
        assert_eq!(self.shift, o.shift, "adding operators of different degree shift");
        let blocks = par::map_range(self.blocks.len(), |d| match (&self.blocks[d], &o.blocks[d]) {
            (Some(a), Some(b)) => Some(f(a, b)),
            _ => None,
        });
        Self { shift: self.shift, dims: self.dims.clone(), blocks }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, SparseMatrix::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, SparseMatrix::sub)
    }

    pub fn map_blocks(&self, f: impl Fn(&SparseMatrix<S>) -> SparseMatrix<S> + Sync + Send) -> Self {
        let blocks = par::map_range(self.blocks.len(), |d| self.blocks[d].as_ref().map(&f));
        Self { shift: self.shift, dims: self.dims.clone(), blocks }
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map_blocks(|b| b.scale(s))
    }

    pub fn neg(&self) -> Self {
        self.map_blocks(SparseMatrix::neg)
    }

    /// `self + s·I`; only for degree-preserving operators.
    pub fn add_scalar(&self, s: &S) -> Self {
        assert_eq!(self.shift, 0, "add_scalar on a degree-changing operator");
        self.map_blocks(|b| b.add_scalar(s))
    }

    /// Composition `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        self.same_space(o);
        let k = self.max_degree() as i32;
        let shift = self.shift + o.shift;
        let blocks = par::map_range(self.blocks.len(), |d| {
            let tgt = d as i32 + shift;
            if tgt > k {
                return None;
            }
            let b = o.blocks[d].as_ref()?;
            let mid = d as i32 + o.shift;
            if mid < 0 {
                let rows = if tgt < 0 { 0 } else { self.dims[tgt as usize] };
                return Some(SparseMatrix::zeros(rows, self.dims[d]));
            }
            let a = self.blocks[mid as usize].as_ref()?;
            Some(a.mul(b))
        });
        Self { shift, dims: self.dims.clone(), blocks }
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.compose(o).sub(&o.compose(self))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        self.compose(o).add(&o.compose(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.dims.clone()), |acc, _| acc.compose(self))
    }

    /// Drops blocks with source degree above `max`.
    pub fn truncate(&self, max: usize) -> Self {
        let blocks = self.blocks.iter().enumerate().map(|(d, b)| if d > max { None } else { b.clone() }).collect();
        Self { shift: self.shift, dims: self.dims.clone(), blocks }
    }

    /// `self ⊗ m` on the spaces V_d ⊗ ℂ^k.
    pub fn kron(&self, m: &SparseMatrix<S>, tensored_dims: &Arc<Vec<usize>>) -> Self {
        assert_eq!(m.nrows(), m.ncols());
        let blocks = par::map_range(self.blocks.len(), |d| self.blocks[d].as_ref().map(|b| b.kron(m)));
        Self { shift: self.shift, dims: tensored_dims.clone(), blocks }
    }

    /// Compares blocks on source degrees `0..=max`.
    pub fn compare(&self, o: &Self, max: usize) -> Result<(), Discrepancy> {
        if self.shift != o.shift {
            return Err(Discrepancy::ShiftMismatch { lhs: self.shift, rhs: o.shift });
        }
        for d in 0..=max.min(self.max_degree()) {
            let (a, b) = match (self.block(d), o.block(d)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Discrepancy::Clipped { degree: d }),
            };
            if let Some((row, col, x, y)) = a.first_difference(b) {
                return Err(Discrepancy::Entry { degree: d, row, col, lhs: x.to_string(), rhs: y.to_string() });
            }
        }
        Ok(())
    }

    pub fn check_zero(&self, max: usize) -> Result<(), Discrepancy> {
        self.compare(&Self::zero(self.shift, self.dims.clone()), max)
    }
}
