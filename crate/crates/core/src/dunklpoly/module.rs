use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, SparseMatrix, Subspace};
use crate::par;
use crate::report::Report;
use crate::rootsys::{ParamFunction, ReflectionGroup, RootSystem};
use crate::scalar::Scalar;

use super::graded::GradedOperator;
use super::poly::{MonomialBasis, Polynomial};
use super::tau::Tau;

/// Sparse column: (row index, value).
type Column<S> = Vec<(usize, S)>;

/// The standard module M_c(τ) = ℂ[x₁..xₙ] ⊗ τ truncated to degrees ≤ K,
/// with the group action and the data needed to assemble Dunkl operators.
#[derive(Clone, Debug)]
pub struct DunklModule<S: Scalar> {
    rs: RootSystem<S>,
    group: ReflectionGroup<S>,
    c: ParamFunction,
    tau: Tau<S>,
    bases: Vec<MonomialBasis>,
    dims: Arc<Vec<usize>>,
    /// `actions[w][d][a]`: image of the a-th monomial of degree d under w.
    actions: Vec<Vec<Vec<Column<S>>>>,
    /// `quotients[d][k][a]`: (x^a − s_k x^a)/α_k in degree d − 1.
    quotients: Vec<Vec<Vec<Column<S>>>>,
}

fn to_column<S: Scalar>(p: &Polynomial<S>, basis: &MonomialBasis) -> Column<S> {
    let mut col: Column<S> =
        p.terms().map(|(e, s)| (basis.index_of(e).expect("homogeneous of the basis degree"), s.clone())).collect();
    col.sort_by_key(|e| e.0);
    col
}

fn from_column<S: Scalar>(n: usize, col: &Column<S>, basis: &MonomialBasis) -> Polynomial<S> {
    let mut p = Polynomial::zero(n);
    for (k, s) in col {
        p.accumulate(basis.get(*k).clone(), s.clone());
    }
    p
}

impl<S: Scalar> DunklModule<S> {
    pub fn new(
        rs: RootSystem<S>,
        group: ReflectionGroup<S>,
        c: ParamFunction,
        tau: Tau<S>,
        max_degree: usize,
    ) -> Result<Self> {
        if c.values().len() != rs.num_orbits() {
            return Err(Error::Parameter("parameter function does not match the root system".into()));
        }
        let n = rs.dim();
        let bases: Vec<MonomialBasis> = (0..=max_degree).map(|d| MonomialBasis::new(n, d as u32)).collect();
        let dims = Arc::new(bases.iter().map(|b| b.len() * tau.dim()).collect::<Vec<_>>());
        let actions: Vec<Vec<Vec<Column<S>>>> = par::map_range(group.order(), |w| {
            let m = group.element(w);
            let linear: Vec<Polynomial<S>> = (0..n).map(|i| Polynomial::linear(&m.column(i))).collect();
            let mut per_degree: Vec<Vec<Polynomial<S>>> = vec![vec![Polynomial::constant(n, S::one())]];
            for d in 1..=max_degree {
                let prev = &per_degree[d - 1];
                let imgs = bases[d]
                    .iter()
                    .map(|e| {
                        let j = e.iter().position(|&k| k > 0).expect("positive degree");
                        let mut f = e.clone();
                        f[j] -= 1;
                        prev[bases[d - 1].index_of(&f).expect("basis")].mul(&linear[j])
                    })
                    .collect();
                per_degree.push(imgs);
            }
            per_degree.iter().zip(&bases).map(|(ps, b)| ps.iter().map(|p| to_column(p, b)).collect()).collect()
        });
        let quotients = par::map_range(max_degree + 1, |d| {
            if d == 0 {
                return Ok(Vec::new());
            }
            (0..rs.num_roots())
                .map(|k| {
                    let s = group.reflection_index(k);
                    (0..bases[d].len())
                        .map(|a| {
                            let f = Polynomial::monomial(bases[d].get(a).clone(), S::one());
                            let sf = from_column(n, &actions[s][d][a], &bases[d]);
                            let q = f.sub(&sf).divide_by_linear(rs.root(k))?;
                            Ok(to_column(&q, &bases[d - 1]))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        Ok(Self { rs, group, c, tau, bases, dims, actions, quotients })
    }

    pub fn root_system(&self) -> &RootSystem<S> {
        &self.rs
    }

    pub fn group(&self) -> &ReflectionGroup<S> {
        &self.group
    }

    pub fn param(&self) -> &ParamFunction {
        &self.c
    }

    pub fn tau(&self) -> &Tau<S> {
        &self.tau
    }

    pub fn n(&self) -> usize {
        self.rs.dim()
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn dims(&self) -> &Arc<Vec<usize>> {
        &self.dims
    }

    pub fn dim(&self, d: usize) -> usize {
        self.dims[d]
    }

    pub fn basis(&self, d: usize) -> &MonomialBasis {
        &self.bases[d]
    }

    /// Index of x^a ⊗ e_t in degree |a|.
    pub fn index(&self, mono: usize, t: usize) -> usize {
        mono * self.tau.dim() + t
    }

    /// Human-readable label of a basis vector.
    pub fn label(&self, d: usize, idx: usize) -> String {
        let td = self.tau.dim();
        let p = Polynomial::<S>::monomial(self.bases[d].get(idx / td).clone(), S::one());
        if td == 1 {
            p.to_string()
        } else {
            format!("{p} ⊗ e{}", idx % td + 1)
        }
    }

    /// Multiplication by x_i (0-based).
    pub fn x(&self, i: usize) -> GradedOperator<S> {
        let td = self.tau.dim();
        GradedOperator::from_fn(1, self.dims.clone(), |d| {
            let (src, dst) = (&self.bases[d], &self.bases[d + 1]);
            let entries = (0..src.len()).flat_map(|a| {
                let mut e = src.get(a).clone();
                e[i] += 1;
                let b = dst.index_of(&e).expect("basis");
                (0..td).map(move |t| (b * td + t, a * td + t, S::one()))
            });
            SparseMatrix::from_triplets(self.dims[d + 1], self.dims[d], entries)
        })
    }

    pub fn root_coefficients(&self) -> Vec<S> {
        (0..self.rs.num_roots()).map(|k| S::from_rational(self.c.root_value(&self.rs, k))).collect()
    }

    /// Dunkl operator D_{y_i} (0-based).
    pub fn y(&self, i: usize) -> GradedOperator<S> {
        self.dunkl_with(&self.root_coefficients(), i)
    }

    /// Dunkl operator with an explicit coefficient per positive root:
    /// D(f⊗v) = ∂_i f ⊗ v + Σ_k coeff_k ⟨α_k, y_i⟩ (f − s_k f)/α_k ⊗ τ(s_k) v.
    pub fn dunkl_with(&self, coeff: &[S], i: usize) -> GradedOperator<S> {
        assert_eq!(coeff.len(), self.rs.num_roots());
        let td = self.tau.dim();
        GradedOperator::from_fn(-1, self.dims.clone(), |d| {
            let (src, dst) = (&self.bases[d], &self.bases[d - 1]);
            let mut entries = Vec::new();
            for a in 0..src.len() {
                let e = src.get(a);
                if e[i] > 0 {
                    let mut f = e.clone();
                    f[i] -= 1;
                    let b = dst.index_of(&f).expect("basis");
                    let k = S::from_i64(e[i] as i64);
                    entries.extend((0..td).map(|t| (b * td + t, a * td + t, k.clone())));
                }
                for (k, ck) in coeff.iter().enumerate() {
                    let w = ck.mul(&self.rs.root(k)[i]);
                    if w.is_zero() {
                        continue;
                    }
                    let tm = self.tau.matrix(self.group.reflection_index(k));
                    for (b, q) in &self.quotients[d][k][a] {
                        let wq = w.mul(q);
                        for t in 0..td {
                            for t2 in 0..td {
                                let v = &tm[(t2, t)];
                                if !v.is_zero() {
                                    entries.push((b * td + t2, a * td + t, wq.mul(v)));
                                }
                            }
                        }
                    }
                }
            }
            SparseMatrix::from_triplets(self.dims[d - 1], self.dims[d], entries)
        })
    }

    /// D_y for y = Σ v_i y_i.
    pub fn y_vector(&self, v: &[S]) -> GradedOperator<S> {
        let mut out = GradedOperator::zero(-1, self.dims.clone());
        for (i, s) in v.iter().enumerate() {
            if !s.is_zero() {
                out = out.add(&self.y(i).scale(s));
            }
        }
        out
    }

    /// Matrix of the polynomial part of the action of w in degree d.
    pub fn polynomial_action(&self, w: usize, d: usize) -> SparseMatrix<S> {
        let entries =
            self.actions[w][d].iter().enumerate().flat_map(|(a, col)| col.iter().map(move |(b, s)| (*b, a, s.clone())));
        SparseMatrix::from_triplets(self.bases[d].len(), self.bases[d].len(), entries)
    }

    /// The group element w acting by (w·f) ⊗ τ(w)v.
    pub fn group_element(&self, w: usize) -> GradedOperator<S> {
        let tm = SparseMatrix::from_dense(self.tau.matrix(w));
        GradedOperator::from_fn(0, self.dims.clone(), |d| self.polynomial_action(w, d).kron(&tm))
    }

    /// Σ λ_w w for an element of the group algebra given by its terms.
    pub fn group_algebra<'a>(&self, terms: impl IntoIterator<Item = (usize, &'a S)>) -> GradedOperator<S> {
        let terms: Vec<(usize, S)> = terms.into_iter().map(|(w, s)| (w, s.clone())).collect();
        GradedOperator::from_fn(0, self.dims.clone(), |d| {
            let mut acc = SparseMatrix::zeros(self.dims[d], self.dims[d]);
            for (w, s) in &terms {
                let tm = SparseMatrix::from_dense(self.tau.matrix(*w));
                acc = acc.add(&self.polynomial_action(*w, d).kron(&tm).scale(s));
            }
            acc
        })
    }

    /// Vector of the element f ⊗ v in degree d (f homogeneous of degree d).
    pub fn vector_of(&self, f: &Polynomial<S>, v: &[S]) -> Result<Vec<S>> {
        let d = f.degree().unwrap_or(0) as usize;
        if !f.is_homogeneous() || d > self.max_degree() || v.len() != self.tau.dim() {
            return Err(Error::Dimension("element outside the truncated module".into()));
        }
        let mut out = vec![S::zero(); self.dims[d]];
        for (e, s) in f.terms() {
            let a = self.bases[d].index_of(e).expect("basis");
            for (t, vt) in v.iter().enumerate() {
                out[self.index(a, t)] = s.mul(vt);
            }
        }
        Ok(out)
    }

    /// Scalar polynomial with coefficients read from a degree-d vector
    /// (requires τ one-dimensional).
    pub fn polynomial_of(&self, d: usize, v: &[S]) -> Polynomial<S> {
        assert_eq!(self.tau.dim(), 1);
        let mut p = Polynomial::zero(self.n());
        for (a, s) in v.iter().enumerate() {
            p.accumulate(self.bases[d].get(a).clone(), s.clone());
        }
        p
    }
}

/// D_y f for a scalar polynomial f with the trivial τ, computed directly
/// from the difference-quotient formula.
pub fn dunkl_apply<S: Scalar>(
    rs: &RootSystem<S>,
    c: &ParamFunction,
    y: &[S],
    f: &Polynomial<S>,
) -> Result<Polynomial<S>> {
    let n = rs.dim();
    let mut out = Polynomial::zero(n);
    for (i, yi) in y.iter().enumerate() {
        out = out.add(&f.derivative(i).scale(yi));
    }
    for k in 0..rs.num_roots() {
        let ck = S::from_rational(c.root_value(rs, k));
        let pair = crate::rootsys::dot(rs.root(k), y);
        if ck.is_zero() || pair.is_zero() {
            continue;
        }
        let sf = f.act(&rs.reflection(k));
        let q = f.sub(&sf).divide_by_linear(rs.root(k))?;
        out = out.add(&q.scale(&ck.mul(&pair)));
    }
    Ok(out)
}

/// S_ij = δ_ij + Σ c_α ⟨α, y_j⟩⟨x_i, α∨⟩ s_α as group-algebra terms (0-based).
pub fn s_terms<S: Scalar>(m: &DunklModule<S>, i: usize, j: usize) -> Vec<(usize, S)> {
    let rs = m.root_system();
    let mut terms = Vec::new();
    if i == j {
        terms.push((0, S::one()));
    }
    for k in 0..rs.num_roots() {
        let v = S::from_rational(m.param().root_value(rs, k)).mul(&rs.root(k)[j]).mul(&rs.coroot(k)[i]);
        if !v.is_zero() {
            terms.push((m.group().reflection_index(k), v));
        }
    }
    terms
}

/// Z = Σ c_α s_α as group-algebra terms.
pub fn z_terms<S: Scalar>(m: &DunklModule<S>) -> Vec<(usize, S)> {
    let rs = m.root_system();
    (0..rs.num_roots())
        .map(|k| (m.group().reflection_index(k), S::from_rational(m.param().root_value(rs, k))))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// Checks the defining relations of the rational Cherednik algebra on
/// degrees `0..=max` with the given Dunkl operators.
pub fn rca_check_with<S: Scalar>(m: &DunklModule<S>, ys: &[GradedOperator<S>], max: usize) -> Report {
    let n = m.n();
    let xs: Vec<_> = (0..n).map(|i| m.x(i)).collect();
    let mut rep = Report::new();
    let mut xx = None;
    let mut yy = None;
    let mut yx = None;
    for i in 0..n {
        for j in 0..n {
            if i < j && xx.is_none() {
                if let Err(e) = xs[i].commutator(&xs[j]).check_zero(max) {
                    xx = Some(format!("[x{}, x{}]: {e}", i + 1, j + 1));
                }
            }
            if i < j && yy.is_none() {
                if let Err(e) = ys[i].commutator(&ys[j]).check_zero(max) {
                    yy = Some(format!("[y{}, y{}]: {e}", i + 1, j + 1));
                }
            }
            if yx.is_none() {
                let sji = s_terms(m, j, i);
                let rhs = m.group_algebra(sji.iter().map(|(w, s)| (*w, s)));
                if let Err(e) = ys[i].commutator(&xs[j]).compare(&rhs, max) {
                    yx = Some(format!("[y{}, x{}] vs S_{}{}: {e}", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
    }
    rep.expect("rca.x_commute", xx, format!("degrees 0..={max}"));
    rep.expect("rca.y_commute", yy, format!("degrees 0..={max}"));
    rep.expect("rca.y_x_relation", yx, format!("degrees 0..={max}"));
    let mut sum = GradedOperator::zero(0, m.dims().clone());
    for i in 0..n {
        let t = s_terms(m, i, i);
        sum = sum.add(&m.group_algebra(t.iter().map(|(w, s)| (*w, s))));
    }
    let z = z_terms(m);
    let rhs = m.group_algebra(z.iter().map(|(w, s)| (*w, s))).scale(&S::from_i64(2)).add_scalar(&S::from_i64(n as i64));
    rep.expect(
        "rca.trace_s",
        sum.compare(&rhs, max).err().map(|e| format!("Σ S_ii vs n + 2Z: {e}")),
        format!("degrees 0..={max}"),
    );
    rep
}

/// RCA relations for the module's own Dunkl operators on degrees 0..N−1.
pub fn rca_relation_check<S: Scalar>(m: &DunklModule<S>, n_trunc: usize) -> Report {
    let ys: Vec<_> = (0..m.n()).map(|i| m.y(i)).collect();
    rca_check_with(m, &ys, n_trunc.saturating_sub(1))
}

/// Dunkl Laplacian Δ_c = Σ y_i².
pub fn laplacian<S: Scalar>(m: &DunklModule<S>) -> GradedOperator<S> {
    let mut out = GradedOperator::zero(-2, m.dims().clone());
    for i in 0..m.n() {
        let y = m.y(i);
        out = out.add(&y.compose(&y));
    }
    out
}

/// Exact basis of X_c(τ)_m = ker Δ_c in degree m.
pub fn harmonic_subspace<S: Scalar>(m: &DunklModule<S>, lap: &GradedOperator<S>, deg: usize) -> Result<Subspace<S>> {
    let block = lap.dense_block(deg).ok_or_else(|| Error::Dimension(format!("degree {deg} beyond the truncation")))?;
    debug_assert_eq!(block.ncols(), m.dim(deg));
    Ok(block.kernel())
}

/// Gram matrix of the contravariant form on degree m, from the recursion
/// G_d(x_i p, q) = G_{d−1}(p, y_i q) starting from the form on τ.
pub fn contravariant_form<S: Scalar>(
    m: &DunklModule<S>,
    ys: &[GradedOperator<S>],
    deg: usize,
) -> Result<DenseMatrix<S>> {
    let td = m.tau().dim();
    let mut g = m.tau().form().clone();
    for d in 1..=deg {
        let yb: Vec<DenseMatrix<S>> = ys
            .iter()
            .map(|y| y.dense_block(d).ok_or_else(|| Error::Dimension(format!("degree {d} beyond the truncation"))))
            .collect::<Result<_>>()?;
        let (basis, prev) = (m.basis(d), m.basis(d - 1));
        let rows: Vec<Vec<S>> = (0..m.dim(d))
            .map(|r| {
                let (a, t) = (r / td, r % td);
                let e = basis.get(a);
                let i = e.iter().position(|&k| k > 0).expect("positive degree");
                let mut f = e.clone();
                f[i] -= 1;
                let pr = prev.index_of(&f).expect("basis") * td + t;
                let row = DenseMatrix::from_rows(vec![g.row(pr).to_vec()]).mul(&yb[i]);
                row.row(0).to_vec()
            })
            .collect();
        g = DenseMatrix::from_rows(rows);
    }
    if !g.adjoint().same_as(&g) {
        return Err(Error::Internal(format!("contravariant form in degree {deg} is not Hermitian")));
    }
    Ok(g)
}

/// Positive definiteness through the signs of the leading principal minors.
pub fn positivity_check<S: Scalar>(g: &DenseMatrix<S>) -> bool {
    let minors = g.leading_principal_minors();
    minors.len() == g.nrows() && minors.iter().all(|m| m.real_sign() == Some(1))
}

/// Writes a matrix as CSV of scalar strings.
pub fn matrix_csv<S: Scalar>(m: &DenseMatrix<S>) -> String {
    let mut out = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = m.row(r).iter().map(|s| format!("\"{s}\"")).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
