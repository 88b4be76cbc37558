//! Dirac elements of the angular momentum algebra acting on X ⊗ S, their
//! squares, the Vogan-type homomorphism and Dirac cohomology on harmonic
//! slices.

mod cohomology;
mod vogan;

use std::sync::Arc;

pub use cohomology::{
    central_character_check, dirac_cohomology, harmonic_slice, nonzero_cohomology_search, unitarity_and_spectrum,
    CohomologyResult, HarmonicSlice, SearchOutcome, SpectrumInfo,
};
pub use vogan::{vogan_witness_check, zeta_c, CentralPolynomial};

use crate::ama::AmaContext;
use crate::clifford::{CliffordElement, SpinorRep};
use crate::dunklpoly::{DunklModule, GradedOperator};
use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::pincover::{build_t, build_t_bullet, build_z3, GroupClifford, HatElement, PinCover};
use crate::report::Report;
use crate::scalar::{Rational, Scalar};

/// Angular momentum context together with the pin cover and a spinor module,
/// with operators on M_c(τ) ⊗ S.
#[derive(Clone, Debug)]
pub struct DiracContext<S: Scalar> {
    ama: AmaContext<S>,
    pin: PinCover<S>,
    spin: SpinorRep<S>,
    dims: Arc<Vec<usize>>,
    /// x_k y_l on M_c(τ)
    xy: Vec<Vec<GradedOperator<S>>>,
    dirac: GradedOperator<S>,
    phi: GradedOperator<S>,
}

/// 𝔇_C = 𝒟 − φ + ρ(C) for an admissible C.
#[derive(Clone, Debug)]
pub struct DiracOperator<S: Scalar> {
    pub c: HatElement<S>,
    pub rho_c: GradedOperator<S>,
    pub op: GradedOperator<S>,
}

fn half<S: Scalar>() -> S {
    S::from_rational(&Rational::new(1, 2).expect("nonzero"))
}

impl<S: Scalar> DiracContext<S> {
    pub fn build(ama: AmaContext<S>) -> Result<Self> {
        let module = ama.module();
        let n = module.n();
        let pin = PinCover::new(module.root_system(), module.group().clone())?;
        let spin = SpinorRep::new(n)?;
        let dims = Arc::new(module.dims().iter().map(|d| d * spin.dim()).collect::<Vec<_>>());
        let xy: Vec<Vec<_>> = (0..n).map(|k| (0..n).map(|l| ama.x(k).compose(ama.y(l))).collect()).collect();
        let mut ctx = Self {
            ama,
            pin,
            spin,
            dims,
            xy,
            dirac: GradedOperator::zero(0, Arc::new(Vec::new())),
            phi: GradedOperator::zero(0, Arc::new(Vec::new())),
        };
        let mut dirac = ctx.zero();
        for i in 0..n {
            for j in i + 1..n {
                dirac = dirac.add(&ctx.tensor(ctx.ama.m(i, j), &ctx.cc(i, j)));
            }
        }
        ctx.dirac = dirac;
        let z_shift = S::from_rational(&Rational::new(n as i64 - 2, 2).expect("nonzero"));
        ctx.phi = ctx.lift(&ctx.ama.z().add_scalar(&z_shift));
        Ok(ctx)
    }

    pub fn ama(&self) -> &AmaContext<S> {
        &self.ama
    }

    pub fn module(&self) -> &DunklModule<S> {
        self.ama.module()
    }

    pub fn pin(&self) -> &PinCover<S> {
        &self.pin
    }

    pub fn spin(&self) -> &SpinorRep<S> {
        &self.spin
    }

    pub fn n(&self) -> usize {
        self.ama.n()
    }

    pub fn truncation(&self) -> usize {
        self.ama.truncation()
    }

    /// Dimensions of M_c(τ)_d ⊗ S.
    pub fn dims(&self) -> &Arc<Vec<usize>> {
        &self.dims
    }

    /// 𝒟 = Σ_{i<j} M_ij ⊗ c_i c_j
    pub fn dirac(&self) -> &GradedOperator<S> {
        &self.dirac
    }

    /// φ = Z + (n−2)/2, acting on M_c(τ) ⊗ S.
    pub fn phi(&self) -> &GradedOperator<S> {
        &self.phi
    }

    pub fn zero(&self) -> GradedOperator<S> {
        GradedOperator::zero(0, self.dims.clone())
    }

    /// c_i c_j (0-based).
    fn cc(&self, i: usize, j: usize) -> CliffordElement<S> {
        let n = self.n();
        CliffordElement::generator(n, i + 1).mul(&CliffordElement::generator(n, j + 1)).expect("same n")
    }

    pub fn sigma(&self, eta: &CliffordElement<S>) -> SparseMatrix<S> {
        SparseMatrix::from_dense(&self.spin.apply(eta).expect("same n"))
    }

    /// A ⊗ σ(η)
    pub fn tensor(&self, a: &GradedOperator<S>, eta: &CliffordElement<S>) -> GradedOperator<S> {
        a.kron(&self.sigma(eta), &self.dims)
    }

    /// A ⊗ 1
    pub fn lift(&self, a: &GradedOperator<S>) -> GradedOperator<S> {
        a.kron(&SparseMatrix::identity(self.spin.dim()), &self.dims)
    }

    /// Σ_w π(w) ⊗ σ(η_w)
    pub fn rho_matrix(&self, x: &GroupClifford<S>) -> GradedOperator<S> {
        x.terms().fold(self.zero(), |acc, (w, eta)| acc.add(&self.tensor(&self.module().group_element(w), eta)))
    }

    pub fn rho(&self, c: &HatElement<S>) -> GradedOperator<S> {
        self.rho_matrix(&self.pin.rho(c))
    }

    /// ρ(s̃_α) = s_α ⊗ s̃_α for the k-th positive root.
    pub fn rho_root_lift(&self, k: usize) -> GradedOperator<S> {
        let w = self.module().group().reflection_index(k);
        self.tensor(&self.module().group_element(w), self.pin.root_lift(k))
    }

    /// Builds 𝔇_C, rejecting inadmissible C.
    pub fn dirac_c(&self, c: &HatElement<S>) -> Result<DiracOperator<S>> {
        let adm = self.pin.is_admissible(c);
        if !adm.admissible {
            return Err(Error::NotAdmissible(adm.violations.join("; ")));
        }
        Ok(self.dirac_c_unchecked(c))
    }

    /// 𝔇_C without the admissibility check (the Vogan identities do not need it).
    pub fn dirac_c_unchecked(&self, c: &HatElement<S>) -> DiracOperator<S> {
        let rho_c = self.rho(c);
        let op = self.dirac.sub(&self.phi).add(&rho_c);
        DiracOperator { c: c.clone(), rho_c, op }
    }

    /// ½ Σ_{i,j} M'_ij ⊗ c'_i c'_j for the basis y'_i = Σ_k Q_ik y_k.
    pub fn dirac_in_basis(&self, q: &DenseMatrix<S>) -> GradedOperator<S> {
        let n = self.n();
        let mut out = self.zero();
        for k in 0..n {
            for l in 0..n {
                // Σ_{i,j} (Q_ik Q_jl − Q_jk Q_il) c'_i c'_j with c'_i = Σ_a Q_ia c_a
                let mut eta = CliffordElement::zero(n);
                for i in 0..n {
                    for j in 0..n {
                        let coef = q[(i, k)].mul(&q[(j, l)]).sub(&q[(j, k)].mul(&q[(i, l)]));
                        if coef.is_zero() {
                            continue;
                        }
                        let ci = CliffordElement::vector_embed(q.row(i));
                        let cj = CliffordElement::vector_embed(q.row(j));
                        eta = eta.add(&ci.mul(&cj).expect("same n").scale(&coef)).expect("same n");
                    }
                }
                if !eta.is_zero() {
                    out = out.add(&self.tensor(&self.xy[k][l], &eta.scale(&half())));
                }
            }
        }
        out
    }
}

/// The Σ-decomposition of 𝒟², 𝒟² itself, and 𝔇₀² = Ω + 1.
pub fn dirac_square_check<S: Scalar>(ctx: &DiracContext<S>) -> Report {
    let n = ctx.n();
    let max = ctx.truncation();
    let ama = ctx.ama();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut sigma = [ctx.zero(), ctx.zero(), ctx.zero()];
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let q = [k, l].iter().filter(|x| **x == i || **x == j).count();
            let eta = ctx.cc(i, j).mul(&ctx.cc(k, l)).expect("same n");
            let term = ctx.tensor(&ama.m(i, j).compose(ama.m(k, l)), &eta);
            sigma[q] = sigma[q].add(&term);
        }
    }
    let d = ctx.dirac();
    let z = ctx.lift(ama.z());
    let nm2 = S::from_i64(n as i64 - 2);
    let msq = ctx.lift(ama.msq());
    let sigma1 = d.scale(&nm2).add(&d.anticommutator(&z));
    let mut rep = Report::new();
    let degrees = format!("degrees 0..={max}");
    rep.expect("dirac.sigma0", sigma[0].check_zero(max).err().map(|e| format!("Σ₀ ≠ 0: {e}")), degrees.clone());
    rep.expect(
        "dirac.sigma1",
        sigma[1].compare(&sigma1, max).err().map(|e| format!("Σ₁ vs (n−2)𝒟 + {{𝒟,Z}}: {e}")),
        degrees.clone(),
    );
    rep.expect(
        "dirac.sigma2",
        sigma[2].compare(&msq.neg(), max).err().map(|e| format!("Σ₂ vs −𝐌²: {e}")),
        degrees.clone(),
    );
    let square = d.compose(d);
    rep.expect(
        "dirac.square",
        square.compare(&msq.neg().add(&sigma1), max).err().map(|e| format!("𝒟² vs −𝐌² + (n−2)𝒟 + {{𝒟,Z}}: {e}")),
        degrees.clone(),
    );
    let d0 = d.sub(ctx.phi());
    let omega1 = ctx.lift(ama.omega()).add_scalar(&S::one());
    rep.expect(
        "dirac.d0_square",
        d0.compose(&d0).compare(&omega1, max).err().map(|e| format!("𝔇₀² vs Ω + 1: {e}")),
        degrees,
    );
    rep
}

fn embed_block<S: Scalar>(n: usize, block: &[[S; 2]; 2]) -> DenseMatrix<S> {
    let mut q = DenseMatrix::identity(n);
    for r in 0..2 {
        for c in 0..2 {
            q[(r, c)] = block[r][c].clone();
        }
    }
    q
}

/// Orthonormal changes of basis used by the basis-independence check.
pub fn builtin_bases<S: Scalar>(n: usize) -> Vec<(String, DenseMatrix<S>)> {
    let (o, z, m) = (S::one(), S::zero(), S::one().neg());
    let mut out = vec![("identity".to_string(), DenseMatrix::identity(n))];
    if n >= 2 {
        out.push(("swap(1,2)".into(), embed_block(n, &[[z.clone(), o.clone()], [o.clone(), z.clone()]])));
        out.push(("signed swap(1,2)".into(), embed_block(n, &[[z.clone(), m.clone()], [o.clone(), z.clone()]])));
        let h = S::sqrt2().mul(&half());
        out.push(("rotation 45° in (1,2)".into(), embed_block(n, &[[h.clone(), h.neg()], [h.clone(), h]])));
    }
    let mut flip = DenseMatrix::identity(n);
    flip[(n - 1, n - 1)] = m;
    out.push((format!("sign flip of coordinate {n}"), flip));
    out
}

/// Rebuilding 𝒟 in other orthonormal bases gives the same operator; a shear
/// does not; and 𝒟 commutes with ρ of every simple root lift.
pub fn basis_independence_check<S: Scalar>(ctx: &DiracContext<S>) -> Report {
    let n = ctx.n();
    let max = ctx.truncation();
    let d = ctx.dirac();
    let mut rep = Report::new();
    let bases = builtin_bases::<S>(n);
    let fail =
        bases.iter().find_map(|(name, q)| ctx.dirac_in_basis(q).compare(d, max).err().map(|e| format!("{name}: {e}")));
    let names: Vec<&str> = bases.iter().map(|(s, _)| s.as_str()).collect();
    rep.expect("dirac.basis_independence", fail, names.join(", "));
    if n >= 3 {
        let mut shear = DenseMatrix::identity(n);
        shear[(0, 1)] = S::one();
        let same = ctx.dirac_in_basis(&shear).compare(d, max).is_ok();
        rep.expect(
            "dirac.shear_detected",
            same.then(|| "𝒟 unchanged under a non-orthogonal shear".to_string()),
            "shear y'_1 = y_1 + y_2 changes 𝒟",
        );
    } else {
        rep.skip("dirac.shear_detected", "in rank 2 a determinant-one shear leaves Σ M'_ij c'_i c'_j unchanged");
    }
    let simple = ctx.pin().simple_root_indices().to_vec();
    let fail = simple.iter().find_map(|&k| {
        let r = ctx.rho_root_lift(k);
        // ρ(s̃)² = 1, so invariance is commutation.
        r.commutator(d).check_zero(max).err().map(|e| format!("simple root {}: {e}", k + 1))
    });
    rep.expect("dirac.rho_invariance", fail, format!("{} simple root lifts", simple.len()));
    rep
}

/// −2𝒟 = [D̲, x̲] − (n + 2Z), 𝒟 + 𝒮 = ½ + φ and D̲² = 2Y.
pub fn scasimir_check<S: Scalar>(ctx: &DiracContext<S>) -> Report {
    let n = ctx.n();
    let max = ctx.truncation();
    let ama = ctx.ama();
    let mut dd = GradedOperator::zero(-1, ctx.dims.clone());
    let mut xx = GradedOperator::zero(1, ctx.dims.clone());
    for i in 0..n {
        let c = CliffordElement::generator(n, i + 1);
        dd = dd.add(&ctx.tensor(ama.y(i), &c));
        xx = xx.add(&ctx.tensor(ama.x(i), &c));
    }
    let comm = dd.commutator(&xx);
    let two = S::from_i64(2);
    let nz = ctx.lift(&ama.z().scale(&two).add_scalar(&S::from_i64(n as i64)));
    let mut rep = Report::new();
    let degrees = format!("degrees 0..={max}");
    rep.expect(
        "scasimir.dirac_bracket",
        ctx.dirac().scale(&two.neg()).compare(&comm.sub(&nz), max).err().map(|e| format!("−2𝒟 vs [D̲,x̲] − (n+2Z): {e}")),
        degrees.clone(),
    );
    let s = comm.add_scalar(&S::one().neg()).scale(&half());
    let rhs = ctx.phi().add_scalar(&half());
    rep.expect(
        "scasimir.sum",
        ctx.dirac().add(&s).compare(&rhs, max).err().map(|e| format!("𝒟 + 𝒮 vs ½ + φ: {e}")),
        degrees.clone(),
    );
    rep.expect(
        "scasimir.dunkl_dirac_square",
        dd.compose(&dd).compare(&ctx.lift(ama.sl2_y()).scale(&two), max).err().map(|e| format!("D̲² vs 2Y: {e}")),
        degrees,
    );
    rep
}

/// 𝔇_{C₂} = Σ_{i<j} (M_ij + T_i T_j• − T_j T_i•) ⊗ c_i c_j + Z₃ − φ.
pub fn c2_expansion_check<S: Scalar>(ctx: &DiracContext<S>, c2: &HatElement<S>) -> Report {
    let mut rep = Report::new();
    let run = || -> Result<Option<String>> {
        let module = ctx.module();
        let (rs, pin, c) = (module.root_system(), ctx.pin(), module.param());
        let n = ctx.n();
        let ga = |x: &crate::pincover::TwistedElement<S>| module.group_algebra(x.terms());
        let ts = (0..n).map(|i| build_t(rs, pin, c, i)).collect::<Result<Vec<_>>>()?;
        let tbs = (0..n).map(|i| build_t_bullet(rs, pin, c, i)).collect::<Result<Vec<_>>>()?;
        let mut rhs = ctx.lift(&ga(&build_z3(rs, pin, c)?)).sub(ctx.phi());
        for i in 0..n {
            for j in i + 1..n {
                let t = pin.mul(&ts[i], &tbs[j])?.sub(&pin.mul(&ts[j], &tbs[i])?)?;
                let m_tilde = ctx.ama().m(i, j).add(&ga(&t));
                rhs = rhs.add(&ctx.tensor(&m_tilde, &ctx.cc(i, j)));
            }
        }
        let lhs = ctx.dirac_c(c2)?.op;
        Ok(lhs.compare(&rhs, ctx.truncation()).err().map(|e| format!("𝔇_C₂ vs M̃ expansion: {e}")))
    };
    match run() {
        Ok(f) => rep.expect("dirac.c2_expansion", f, format!("degrees 0..={}", ctx.truncation())),
        Err(e) => rep.fail("dirac.c2_expansion", e.to_string()),
    }
    rep
}

/// 𝔇_C commutes with ρ of the simple root lifts and of (−1)_𝔥, and
/// 𝔇_C² = Ω − (ρ(C)² − 1) + 2ρ(C)𝔇_C.
pub fn dirac_c_identities<S: Scalar>(ctx: &DiracContext<S>, dop: &DiracOperator<S>) -> Report {
    let max = ctx.truncation();
    let mut rep = Report::new();
    let mut gens: Vec<(String, GradedOperator<S>)> = ctx
        .pin()
        .simple_root_indices()
        .iter()
        .map(|&k| (format!("simple root {}", k + 1), ctx.rho_root_lift(k)))
        .collect();
    if let Some(w) = ctx.module().group().minus_identity() {
        gens.push(("(−1)_𝔥".into(), ctx.lift(&ctx.module().group_element(w))));
    }
    let fail =
        gens.iter().find_map(|(name, g)| g.commutator(&dop.op).check_zero(max).err().map(|e| format!("{name}: {e}")));
    rep.expect("dirac.c_invariance", fail, format!("{} generators", gens.len()));
    let rc = &dop.rho_c;
    let rhs = ctx
        .lift(ctx.ama().omega())
        .sub(&rc.compose(rc).add_scalar(&S::one().neg()))
        .add(&rc.compose(&dop.op).scale(&S::from_i64(2)));
    rep.expect(
        "dirac.c_square",
        dop.op.compose(&dop.op).compare(&rhs, max).err().map(|e| format!("𝔇_C² vs Ω − (ρ(C)²−1) + 2ρ(C)𝔇_C: {e}")),
        format!("degrees 0..={max}"),
    );
    rep
}
