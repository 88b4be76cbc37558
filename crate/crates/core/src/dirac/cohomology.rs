use nalgebra::Complex;

use crate::dunklpoly::{contravariant_form, harmonic_subspace, laplacian, positivity_check, scalar_of, GradedOperator};
use crate::error::{Error, Result};
use crate::linalg::float::{
    cholesky, eigenvalues, hermitian_eigenvalues, null_space, singular_values, to_nalgebra, CMatrix,
};
use crate::linalg::{DenseMatrix, Subspace};
use crate::pincover::{centre_basis, HatElement, Part};
use crate::report::Report;
use crate::scalar::{Rational, Scalar};

use super::{DiracContext, DiracOperator};

/// Largest |W| for which the kernel is split into isotypic pieces.
const ISOTYPIC_GROUP_BOUND: usize = 48;
const FLOAT_TOL: f64 = 1e-9;
const RANK_TOL: f64 = 1e-8;

/// X_c(τ)_m as a subspace of M_c(τ)_m, and X ⊗ S inside M_c(τ)_m ⊗ S.
#[derive(Clone, Debug)]
pub struct HarmonicSlice<S: Scalar> {
    pub m: usize,
    pub harmonic: Subspace<S>,
    pub tensor: Subspace<S>,
}

impl<S: Scalar> HarmonicSlice<S> {
    pub fn dim_x(&self) -> usize {
        self.harmonic.dim()
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    /// Matrix of a degree-preserving operator on M ⊗ S restricted to X ⊗ S.
    pub fn restrict(&self, op: &GradedOperator<S>) -> Result<DenseMatrix<S>> {
        let block = op
            .dense_block(self.m)
            .ok_or_else(|| Error::Dimension(format!("degree {} beyond the truncation", self.m)))?;
        self.tensor
            .restrict(&block)
            .ok_or_else(|| Error::Internal(format!("X ⊗ S in degree {} is not invariant", self.m)))
    }

    /// Matrix of a degree-preserving operator on M restricted to X.
    pub fn restrict_module(&self, op: &GradedOperator<S>) -> Result<DenseMatrix<S>> {
        let block = op
            .dense_block(self.m)
            .ok_or_else(|| Error::Dimension(format!("degree {} beyond the truncation", self.m)))?;
        self.harmonic
            .restrict(&block)
            .ok_or_else(|| Error::Internal(format!("X in degree {} is not invariant", self.m)))
    }
}

pub fn harmonic_slice<S: Scalar>(ctx: &DiracContext<S>, m: usize) -> Result<HarmonicSlice<S>> {
    if m > ctx.truncation() {
        return Err(Error::Dimension(format!("degree {m} above the truncation {}", ctx.truncation())));
    }
    let module = ctx.module();
    let harmonic = harmonic_subspace(module, &laplacian(module), m)?;
    let sd = ctx.spin().dim();
    let id = DenseMatrix::identity(sd);
    let basis = harmonic.basis.kron(&id);
    let pivot_rows = harmonic.pivot_rows.iter().flat_map(|p| (0..sd).map(move |s| p * sd + s)).collect();
    Ok(HarmonicSlice { m, harmonic, tensor: Subspace { basis, pivot_rows } })
}

/// Dirac cohomology of 𝔇_C on X_c(τ)_m ⊗ S.
#[derive(Clone, Debug)]
pub struct CohomologyResult<S: Scalar> {
    pub degree: usize,
    pub dim_x: usize,
    pub dim_ker: usize,
    pub dim_ker_cap_im: usize,
    pub dim_h: usize,
    /// Kernel basis in coordinates of X ⊗ S.
    pub kernel: Subspace<S>,
    /// Scalar by which Ω acts on the kernel, when it does.
    pub omega_scalar: Option<S>,
}

pub fn dirac_cohomology<S: Scalar>(
    ctx: &DiracContext<S>,
    dop: &DiracOperator<S>,
    m: usize,
) -> Result<CohomologyResult<S>> {
    let slice = harmonic_slice(ctx, m)?;
    cohomology_on(ctx, dop, &slice)
}

fn cohomology_on<S: Scalar>(
    ctx: &DiracContext<S>,
    dop: &DiracOperator<S>,
    slice: &HarmonicSlice<S>,
) -> Result<CohomologyResult<S>> {
    let a = slice.restrict(&dop.op)?;
    let kernel = a.kernel();
    let dim_ker = kernel.dim();
    // dim(ker ∩ im) = dim ker + rank A − rank [K | A]
    let rank_a = a.rank();
    let joint = kernel.basis.hstack(&a).rank();
    let dim_ker_cap_im = dim_ker + rank_a - joint;
    let omega = slice.restrict(&ctx.lift(ctx.ama().omega()))?;
    let omega_scalar = kernel.restrict(&omega).and_then(|r| scalar_of(&r));
    Ok(CohomologyResult {
        degree: slice.m,
        dim_x: slice.dim_x(),
        dim_ker,
        dim_ker_cap_im,
        dim_h: dim_ker - dim_ker_cap_im,
        kernel,
        omega_scalar,
    })
}

fn identity_minus<S: Scalar>(a: &DenseMatrix<S>) -> DenseMatrix<S> {
    a.sub(&DenseMatrix::identity(a.nrows()))
}

fn cluster(values: &[f64], tol: f64) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::new();
    for x in v {
        if out.last().is_none_or(|l| (x - l).abs() > tol) {
            out.push(x);
        }
    }
    out
}

/// Ω − (ρ(C)² − 1) vanishes on ker 𝔇_C; for small groups the kernel is
/// split into Ŵ-isotypic pieces and the central character of each piece is
/// compared with the Ω-scalar of the slice.
pub fn central_character_check<S: Scalar>(ctx: &DiracContext<S>, dop: &DiracOperator<S>, m: usize) -> Report {
    let mut rep = Report::new();
    if let Err(e) = central_character_inner(ctx, dop, m, &mut rep) {
        rep.fail("dirac.central_character_restriction", e.to_string());
    }
    rep
}

fn central_character_inner<S: Scalar>(
    ctx: &DiracContext<S>,
    dop: &DiracOperator<S>,
    m: usize,
    rep: &mut Report,
) -> Result<()> {
    let slice = harmonic_slice(ctx, m)?;
    let coh = cohomology_on(ctx, dop, &slice)?;
    let ker = &coh.kernel;
    let rc = slice.restrict(&dop.rho_c)?;
    let gamma = identity_minus(&rc.mul(&rc));
    let omega = slice.restrict(&ctx.lift(ctx.ama().omega()))?;
    let diff = omega.sub(&gamma).mul(&ker.basis);
    rep.expect(
        "dirac.central_character_restriction",
        (!diff.is_zero()).then(|| format!("(Ω − (ρ(C)² − 1)) is nonzero on ker 𝔇_C (dim {})", coh.dim_ker)),
        format!("m = {m}, dim ker = {}", coh.dim_ker),
    );

    let group = ctx.module().group();
    if let Some(w) = group.minus_identity() {
        let eps = slice.restrict(&ctx.lift(&ctx.module().group_element(w)))?;
        let on_ker = ker.restrict(&eps).and_then(|r| scalar_of(&r));
        let tau = ctx.module().tau().minus_identity_scalar(group);
        let module_scalar = tau.map(|t| if m.is_multiple_of(2) { t } else { t.neg() });
        let fail = match (coh.dim_ker, on_ker, &module_scalar) {
            (0, _, _) => None,
            (_, Some(a), Some(b)) if a == *b => None,
            (_, a, b) => Some(format!("(−1)_𝔥 on ker: {a:?}, on the module: {b:?}")),
        };
        let shown = module_scalar.map(|s| s.to_string()).unwrap_or_else(|| "none".into());
        rep.expect("dirac.minus_identity_scalar", fail, format!("(−1)_𝔥 acts by {shown}"));
    }

    if group.order() > ISOTYPIC_GROUP_BOUND {
        rep.skip(
            "dirac.central_character_isotypic",
            format!("not computed: |W| = {} > {ISOTYPIC_GROUP_BOUND}", group.order()),
        );
        return Ok(());
    }
    if coh.dim_ker == 0 {
        rep.pass("dirac.central_character_isotypic", "kernel is zero");
        return Ok(());
    }
    let omega_x = slice.restrict_module(ctx.ama().omega())?;
    let chi = scalar_of(&omega_x).ok_or_else(|| Error::Representation("Ω is not scalar on the slice".into()))?;
    let pin = ctx.pin();
    let mut central: Vec<DenseMatrix<S>> = Vec::new();
    for z in centre_basis(pin, Part::Minus) {
        let r = slice.restrict(&ctx.rho(&pin.hat(z)))?;
        central.push(ker.restrict(&r).ok_or_else(|| Error::Internal("kernel not invariant under the centre".into()))?);
    }
    if let Some(w) = group.minus_identity() {
        let e = slice.restrict(&ctx.lift(&ctx.module().group_element(w)))?;
        central.push(ker.restrict(&e).ok_or_else(|| Error::Internal("kernel not invariant under (−1)_𝔥".into()))?);
    }
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut combo = DenseMatrix::zeros(coh.dim_ker, coh.dim_ker);
    for r in &central {
        state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        let k = (state >> 33) % 7 + 1;
        combo = combo.add(&r.scale(&S::from_i64(k as i64)));
    }
    let cf = to_nalgebra(&combo);
    let ev: Vec<f64> = eigenvalues(&cf).iter().map(|z| z.re).collect();
    let g_ker =
        to_nalgebra(&ker.restrict(&gamma).ok_or_else(|| Error::Internal("kernel not invariant under ρ(C)".into()))?);
    let chi_f = chi.to_float().re;
    let mut pieces = Vec::new();
    let mut total = 0;
    let mut fail = None;
    for mu in cluster(&ev, 1e-6) {
        let shifted = &cf - CMatrix::identity(coh.dim_ker, coh.dim_ker) * Complex::new(mu, 0.0);
        let v = null_space(&shifted, 1e-6);
        let k = v.ncols();
        total += k;
        let t = v.adjoint() * &g_ker * &v;
        let piece_chi = t.trace().re / k as f64;
        if (piece_chi - chi_f).abs() > RANK_TOL {
            fail.get_or_insert(format!("piece of dim {k}: χ_τ̂(Ω) = {piece_chi:.10}, module Ω = {chi}"));
        }
        pieces.push(format!("{k}:{piece_chi:.6}"));
    }
    if total != coh.dim_ker {
        fail.get_or_insert(format!("isotypic pieces span {total} of {} dimensions", coh.dim_ker));
    }
    rep.expect(
        "dirac.central_character_isotypic",
        fail,
        format!("pieces (dim:χ) [{}], module Ω = {chi}", pieces.join(", ")),
    );
    Ok(())
}

/// Spectral data of 𝔇_C on a harmonic slice.
#[derive(Clone, Debug)]
pub struct SpectrumInfo<S: Scalar> {
    pub m: usize,
    pub dim_x: usize,
    pub unitary: bool,
    pub omega_scalar: Option<S>,
    pub lambda: S,
    pub chi: S,
    /// Eigenvalues of D_C (float, ascending); empty when not unitary.
    pub eigenvalues: Vec<f64>,
    pub square_min: Option<f64>,
}

/// λ(c, τ, m) = m + n/2 + N_c(τ).
pub fn lambda<S: Scalar>(ctx: &DiracContext<S>, m: usize) -> Result<S> {
    let module = ctx.module();
    let nc = module.tau().z_scalar(module.root_system(), module.group(), module.param())?;
    let half_n = S::from_rational(&Rational::new(ctx.n() as i64, 2).expect("nonzero"));
    Ok(S::from_i64(m as i64).add(&half_n).add(&nc))
}

pub fn unitarity_and_spectrum<S: Scalar>(
    ctx: &DiracContext<S>,
    dop: &DiracOperator<S>,
    m: usize,
) -> Result<(Report, SpectrumInfo<S>)> {
    let mut rep = Report::new();
    let slice = harmonic_slice(ctx, m)?;
    let lam = lambda(ctx, m)?;
    let chi = lam.mul(&lam.sub(&S::from_i64(2)));
    let mut info = SpectrumInfo {
        m,
        dim_x: slice.dim_x(),
        unitary: false,
        omega_scalar: None,
        lambda: lam.clone(),
        chi: chi.clone(),
        eigenvalues: Vec::new(),
        square_min: None,
    };
    if slice.dim_x() == 0 {
        rep.skip("dirac.omega_scalar", format!("X in degree {m} is zero"));
        return Ok((rep, info));
    }
    let omega_x = slice.restrict_module(ctx.ama().omega())?;
    let om = scalar_of(&omega_x)
        .ok_or_else(|| Error::Representation(format!("Ω does not act by a scalar on X in degree {m}")))?;
    info.omega_scalar = Some(om.clone());
    rep.expect(
        "dirac.omega_scalar",
        (om != chi).then(|| format!("Ω acts by {om}, λ(λ−2) = {chi} with λ = {lam}")),
        format!("Ω = {chi}, λ = {lam}"),
    );
    let g = contravariant_form(ctx.module(), ctx.ama().ys(), m)?;
    let b = &slice.harmonic.basis;
    let gx = b.adjoint().mul(&g).mul(b);
    info.unitary = positivity_check(&gx);
    if !info.unitary {
        for id in ["dirac.chi_bound", "dirac.self_adjoint", "dirac.square_nonnegative"] {
            rep.skip(id, "non-unitary, skipped");
        }
        return Ok((rep, info));
    }
    let chi1 = chi.add(&S::one());
    rep.expect(
        "dirac.chi_bound",
        (chi1.real_sign() != Some(1) && !chi1.is_zero()).then(|| format!("χ = {chi} < −1 on a unitary slice")),
        format!("χ = {chi} ≥ −1"),
    );
    let gxs = gx.kron(&DenseMatrix::identity(ctx.spin().dim()));
    let d = slice.restrict(&dop.op)?;
    rep.expect(
        "dirac.self_adjoint",
        (!gxs.mul(&d).same_as(&d.adjoint().mul(&gxs))).then(|| "G D_C ≠ D_Cᴴ G".to_string()),
        "G D_C = D_Cᴴ G",
    );
    let l = cholesky(&to_nalgebra(&gxs)).ok_or_else(|| Error::Internal("Cholesky failed on a positive form".into()))?;
    let l_inv = l.clone().try_inverse().ok_or_else(|| Error::Internal("singular Cholesky factor".into()))?;
    let conj = |x: &CMatrix| {
        let h = l.adjoint() * x * l_inv.adjoint();
        (&h + h.adjoint()) * Complex::new(0.5, 0.0)
    };
    let df = to_nalgebra(&d);
    info.eigenvalues = hermitian_eigenvalues(&conj(&df));
    let sq = hermitian_eigenvalues(&conj(&(&df * &df)));
    let sq_min = sq.first().copied().unwrap_or(0.0);
    info.square_min = Some(sq_min);
    rep.expect(
        "dirac.square_nonnegative",
        (sq_min < -FLOAT_TOL).then(|| format!("smallest eigenvalue of D_C² is {sq_min:e}")),
        format!("min eigenvalue of D_C² = {sq_min:.3e}"),
    );
    if dop.c.is_zero() {
        let target = chi1.to_float().re;
        let dev = sq.iter().map(|x| (x - target).abs()).fold(0.0, f64::max);
        rep.expect(
            "dirac.zero_square_spectrum",
            (dev > FLOAT_TOL).then(|| format!("max |eig(𝔇₀²) − (χ+1)| = {dev:e}")),
            format!("max deviation {dev:.3e}"),
        );
    }
    Ok((rep, info))
}

/// Result of the rescaling construction that produces nonzero cohomology.
#[derive(Clone, Debug)]
pub struct SearchOutcome<S: Scalar> {
    /// Eigenvalue u(C₀) of ρ(C₀) used for the rescaling.
    pub eigenvalue: f64,
    pub scale: f64,
    pub scale_exact: Option<S>,
    pub sign: i32,
    /// Whether the kernel was computed in exact arithmetic.
    pub exact: bool,
    pub dim_ker: usize,
    pub dim_h: usize,
    pub cohomology: Option<CohomologyResult<S>>,
}

fn exact_eigenvalue<S: Scalar>(r: &DenseMatrix<S>, u: f64) -> Option<S> {
    let sqrt2 = std::f64::consts::SQRT_2;
    let candidates = [
        Rational::approximate(u, 10_000).map(|q| S::from_rational(&q)),
        Rational::approximate(u / sqrt2, 10_000).map(|q| S::from_rational(&q).mul(&S::sqrt2())),
    ];
    candidates.into_iter().flatten().find(|cand| {
        let shifted = r.sub(&DenseMatrix::identity(r.nrows()).scale(cand));
        shifted.rank() < r.nrows()
    })
}

/// Rescales C₀ by ±√(χ+1)/u(C₀) on a joint eigenspace so that
/// Ω = ρ(C)² − 1 there, and returns the first choice with nonzero kernel.
pub fn nonzero_cohomology_search<S: Scalar>(
    ctx: &DiracContext<S>,
    m: usize,
    c0: &HatElement<S>,
) -> Result<SearchOutcome<S>> {
    let slice = harmonic_slice(ctx, m)?;
    if slice.dim_x() == 0 {
        return Err(Error::Parameter(format!("empty slice: X in degree {m} is zero")));
    }
    ctx.dirac_c(c0)?;
    let omega_x = slice.restrict_module(ctx.ama().omega())?;
    let chi = scalar_of(&omega_x)
        .ok_or_else(|| Error::Representation(format!("Ω does not act by a scalar on X in degree {m}")))?;
    let chi1 = chi.add(&S::one());
    if chi1.real_sign() == Some(-1) {
        return Err(Error::Parameter(format!("Ω acts by {chi} < −1")));
    }
    let r = slice.restrict(&ctx.rho(c0))?;
    let rf = to_nalgebra(&r);
    let nonzero: Vec<f64> = cluster(&eigenvalues(&rf).iter().map(|z| z.re).collect::<Vec<_>>(), 1e-7)
        .into_iter()
        .filter(|u| u.abs() > 1e-7)
        .collect();
    if nonzero.is_empty() {
        return Err(Error::Parameter("C₀ acts by zero; choose another admissible element".into()));
    }
    let zero = ctx.pin().hat_one(c0.part()).scale(&S::zero());
    let d0 = slice.restrict(&ctx.dirac_c_unchecked(&zero).op)?;
    let d0f = to_nalgebra(&d0);
    let sqrt_exact = chi1.sqrt_real();
    let sqrt_f = chi1.to_float().re.max(0.0).sqrt();
    for &u in &nonzero {
        let scale = sqrt_f / u;
        if let (Some(ue), Some(sq)) = (exact_eigenvalue(&r, u), sqrt_exact.clone()) {
            let s = sq.div(&ue)?;
            for sign in [1, -1] {
                let signed = if sign == 1 { s.clone() } else { s.neg() };
                let dop = ctx.dirac_c(&c0.scale(&signed))?;
                let coh = cohomology_on(ctx, &dop, &slice)?;
                if coh.dim_h > 0 {
                    return Ok(SearchOutcome {
                        eigenvalue: u,
                        scale,
                        scale_exact: Some(s),
                        sign,
                        exact: S::EXACT,
                        dim_ker: coh.dim_ker,
                        dim_h: coh.dim_h,
                        cohomology: Some(coh),
                    });
                }
            }
        } else {
            for sign in [1, -1] {
                let df = &d0f + &rf * Complex::new(sign as f64 * scale, 0.0);
                let nullity = singular_values(&df).iter().filter(|s| **s < RANK_TOL).count();
                if nullity > 0 {
                    return Ok(SearchOutcome {
                        eigenvalue: u,
                        scale,
                        scale_exact: None,
                        sign,
                        exact: false,
                        dim_ker: nullity,
                        dim_h: nullity,
                        cohomology: None,
                    });
                }
            }
        }
    }
    Err(Error::Internal("no rescaling of C₀ produced a nonzero kernel".into()))
}
