//! The angular momentum subalgebra: M_ij, S_ij, Z, the sl(2) triple,
//! the Casimir Ω and 𝐌², with checks of their identities.

use crate::dunklpoly::{s_terms, z_terms, DunklModule, GradedOperator, Tau};
use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;
use crate::rootsys::{ParamFunction, ReflectionGroup, RootSystem};
use crate::scalar::{Rational, Scalar};

/// Matrices of the angular momentum generators on M_c(τ), exact on
/// degrees 0..=N (the module carries two extra degrees of headroom).
#[derive(Clone, Debug)]
pub struct AmaContext<S: Scalar> {
    module: DunklModule<S>,
    n_trunc: usize,
    x: Vec<GradedOperator<S>>,
    y: Vec<GradedOperator<S>>,
    m: Vec<Vec<GradedOperator<S>>>,
    s: Vec<Vec<GradedOperator<S>>>,
    z: GradedOperator<S>,
    h: GradedOperator<S>,
    x_sl2: GradedOperator<S>,
    y_sl2: GradedOperator<S>,
    omega: GradedOperator<S>,
    msq: GradedOperator<S>,
    /// x·y, x², y²
    xy: GradedOperator<S>,
    x2: GradedOperator<S>,
    y2: GradedOperator<S>,
}

fn sum<S: Scalar>(
    ops: impl IntoIterator<Item = GradedOperator<S>>,
    shift: i32,
    m: &DunklModule<S>,
) -> GradedOperator<S> {
    ops.into_iter().fold(GradedOperator::zero(shift, m.dims().clone()), |a, b| a.add(&b))
}

impl<S: Scalar> AmaContext<S> {
    pub fn build(
        rs: RootSystem<S>,
        group: ReflectionGroup<S>,
        c: ParamFunction,
        tau: Tau<S>,
        n_trunc: usize,
    ) -> Result<Self> {
        if n_trunc < 2 {
            return Err(Error::Parameter("truncation degree must be at least 2".into()));
        }
        let module = DunklModule::new(rs, group, c, tau, n_trunc + 2)?;
        Self::from_module(module, n_trunc)
    }

    pub fn from_module(module: DunklModule<S>, n_trunc: usize) -> Result<Self> {
        if n_trunc + 2 > module.max_degree() {
            return Err(Error::Parameter("module needs two degrees of headroom above N".into()));
        }
        let n = module.n();
        let x: Vec<_> = (0..n).map(|i| module.x(i)).collect();
        let y: Vec<_> = (0..n).map(|i| module.y(i)).collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        let ms = par::map_slice(&pairs, |&(i, j)| {
            if i == j {
                GradedOperator::zero(0, module.dims().clone())
            } else {
                x[i].compose(&y[j]).sub(&x[j].compose(&y[i]))
            }
        });
        let ss = par::map_slice(&pairs, |&(i, j)| {
            let t = s_terms(&module, i, j);
            module.group_algebra(t.iter().map(|(w, s)| (*w, s)))
        });
        let m: Vec<Vec<_>> = ms.chunks(n).map(<[_]>::to_vec).collect();
        let s: Vec<Vec<_>> = ss.chunks(n).map(<[_]>::to_vec).collect();
        let zt = z_terms(&module);
        let z = module.group_algebra(zt.iter().map(|(w, s)| (*w, s)));
        let xy = sum((0..n).map(|i| x[i].compose(&y[i])), 0, &module);
        let yx = sum((0..n).map(|i| y[i].compose(&x[i])), 0, &module);
        let x2 = sum((0..n).map(|i| x[i].compose(&x[i])), 2, &module);
        let y2 = sum((0..n).map(|i| y[i].compose(&y[i])), -2, &module);
        let half = S::from_rational(&Rational::new(1, 2).expect("nonzero"));
        // x·y + n/2 + Z stays exact at the top degree, unlike the symmetric form.
        let h = xy.add_scalar(&S::from_rational(&Rational::new(n as i64, 2).expect("nonzero"))).add(&z);
        if let Err(e) = xy.add(&yx).scale(&half).compare(&h, n_trunc) {
            return Err(Error::Internal(format!("H ≠ x·y + n/2 + Z: {e}")));
        }
        let x_sl2 = x2.scale(&half.neg());
        let y_sl2 = y2.scale(&half);
        let omega = h.compose(&h).add(&x_sl2.anticommutator(&y_sl2).scale(&S::from_i64(2)));
        let msq = sum(
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| m[i][j].compose(&m[i][j])),
            0,
            &module,
        );
        Ok(Self { module, n_trunc, x, y, m, s, z, h, x_sl2, y_sl2, omega, msq, xy, x2, y2 })
    }

    pub fn module(&self) -> &DunklModule<S> {
        &self.module
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    /// Highest degree on which every cached operator is exact.
    pub fn truncation(&self) -> usize {
        self.n_trunc
    }

    pub fn x(&self, i: usize) -> &GradedOperator<S> {
        &self.x[i]
    }

    pub fn y(&self, i: usize) -> &GradedOperator<S> {
        &self.y[i]
    }

    pub fn ys(&self) -> &[GradedOperator<S>] {
        &self.y
    }

    /// M_ij = x_i y_j − x_j y_i (0-based).
    pub fn m(&self, i: usize, j: usize) -> &GradedOperator<S> {
        &self.m[i][j]
    }

    /// S_ij = [y_i, x_j] as a group-algebra matrix (0-based).
    pub fn s(&self, i: usize, j: usize) -> &GradedOperator<S> {
        &self.s[i][j]
    }

    pub fn z(&self) -> &GradedOperator<S> {
        &self.z
    }

    pub fn h(&self) -> &GradedOperator<S> {
        &self.h
    }

    /// X = −x²/2
    pub fn sl2_x(&self) -> &GradedOperator<S> {
        &self.x_sl2
    }

    /// Y = y²/2
    pub fn sl2_y(&self) -> &GradedOperator<S> {
        &self.y_sl2
    }

    /// Ω = H² + 2(XY + YX)
    pub fn omega(&self) -> &GradedOperator<S> {
        &self.omega
    }

    /// 𝐌² = Σ_{i<j} M_ij²
    pub fn msq(&self) -> &GradedOperator<S> {
        &self.msq
    }

    /// H_Ω = (Ω − n(n−4)/4)/2, the angular Calogero–Moser Hamiltonian.
    pub fn h_omega(&self) -> GradedOperator<S> {
        let n = self.n() as i64;
        let shift = S::from_rational(&Rational::new(n * (n - 4), 4).expect("nonzero"));
        self.omega.add_scalar(&shift.neg()).scale(&S::from_rational(&Rational::new(1, 2).expect("nonzero")))
    }

    pub fn group_element(&self, w: usize) -> GradedOperator<S> {
        self.module.group_element(w)
    }

    /// Replaces M_ij (and M_ji by its negative); used to inject faults.
    pub fn replace_m(&mut self, i: usize, j: usize, op: GradedOperator<S>) {
        self.m[j][i] = op.neg();
        self.m[i][j] = op;
    }

    /// Replaces S_ij; used to inject faults.
    pub fn replace_s(&mut self, i: usize, j: usize, op: GradedOperator<S>) {
        self.s[i][j] = op;
    }

    /// Generators of W together with −I when it lies in W.
    fn group_generators(&self) -> Vec<usize> {
        let g = self.module.group();
        let mut out = g.simple_reflection_indices().to_vec();
        out.extend(g.minus_identity());
        out
    }

    fn index_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
    }
}

/// First failure of `check` over `items`, scanning in parallel.
fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Option<String> + Sync + Send) -> Option<String> {
    par::map_slice(items, check).into_iter().flatten().next()
}

/// The commutation relations [M_ij, M_kl] = M_il S_jk + M_jk S_il − M_ik S_jl − M_jl S_ik,
/// the crossing relations, and S_ij = S_ji.
pub fn ama_relations_check<S: Scalar>(ctx: &AmaContext<S>) -> Report {
    let n = ctx.n();
    let max = ctx.n_trunc;
    let quads: Vec<[usize; 4]> =
        (0..n * n * n * n).map(|t| [t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n]).collect();
    let (m, s) = (&ctx.m, &ctx.s);
    let comm = first_failure(&quads, |&[i, j, k, l]| {
        let lhs = m[i][j].commutator(&m[k][l]);
        let rhs = m[i][l]
            .compose(&s[j][k])
            .add(&m[j][k].compose(&s[i][l]))
            .sub(&m[i][k].compose(&s[j][l]))
            .sub(&m[j][l].compose(&s[i][k]));
        lhs.compare(&rhs, max).err().map(|e| format!("(i,j,k,l)=({},{},{},{}): {e}", i + 1, j + 1, k + 1, l + 1))
    });
    let cross = first_failure(&quads, |&[i, j, k, l]| {
        let lhs = m[i][j].compose(&m[k][l]).add(&m[j][k].compose(&m[i][l])).add(&m[k][i].compose(&m[j][l]));
        let rhs = m[i][j].compose(&s[k][l]).add(&m[j][k].compose(&s[i][l])).add(&m[k][i].compose(&s[j][l]));
        lhs.compare(&rhs, max).err().map(|e| format!("(i,j,k,l)=({},{},{},{}): {e}", i + 1, j + 1, k + 1, l + 1))
    });
    let pairs = ctx.index_pairs();
    let sym = first_failure(&pairs, |&(i, j)| {
        s[i][j].compare(&s[j][i], max).err().map(|e| format!("S_{}{} vs S_{}{}: {e}", i + 1, j + 1, j + 1, i + 1))
    });
    let witness = format!("all index tuples, degrees 0..={max}");
    let mut rep = Report::new();
    rep.expect("ama.commutation_relation", comm, witness.clone());
    rep.expect("ama.crossing_relation", cross, witness.clone());
    rep.expect("ama.s_symmetric", sym, witness);
    rep
}

/// M_ij and the group commute with H, X and Y.
pub fn centralizer_check<S: Scalar>(ctx: &AmaContext<S>) -> Report {
    let max = ctx.n_trunc;
    let triple = [("H", &ctx.h), ("X", &ctx.x_sl2), ("Y", &ctx.y_sl2)];
    let pairs = ctx.index_pairs();
    let m_fail = first_failure(&pairs, |&(i, j)| {
        triple.iter().find_map(|(name, t)| {
            ctx.m[i][j].commutator(t).check_zero(max).err().map(|e| format!("[M_{}{}, {name}]: {e}", i + 1, j + 1))
        })
    });
    let gens = ctx.group_generators();
    let w_fail = first_failure(&gens, |&w| {
        let op = ctx.group_element(w);
        triple
            .iter()
            .find_map(|(name, t)| op.commutator(t).check_zero(max).err().map(|e| format!("[w{w}, {name}]: {e}")))
    });
    let mut rep = Report::new();
    rep.expect("ama.centralizer_m", m_fail, format!("all i<j, degrees 0..={max}"));
    rep.expect("ama.centralizer_w", w_fail, format!("{} generators of W, degrees 0..={max}", gens.len()));
    rep
}

/// 𝐌² and Casimir identities, the sl(2) relations and centrality statements.
pub fn msquared_identities_check<S: Scalar>(ctx: &AmaContext<S>) -> Report {
    let max = ctx.n_trunc;
    let n = ctx.n() as i64;
    let q = |a: i64, b: i64| S::from_rational(&Rational::new(a, b).expect("nonzero"));
    let mut rep = Report::new();

    let rhs = ctx
        .x2
        .compose(&ctx.y2)
        .sub(&ctx.xy.compose(&ctx.xy))
        .sub(&ctx.xy.compose(&ctx.z.scale(&q(2, 1)).add_scalar(&q(n - 2, 1))));
    rep.expect(
        "ama.msq_identity",
        ctx.msq.compare(&rhs, max).err().map(|e| format!("𝐌² vs x²y² − (x·y)² − (x·y)(2Z+n−2): {e}")),
        format!("degrees 0..={max}"),
    );

    let zs = ctx.z.add_scalar(&q(n - 2, 2));
    let rhs = ctx.msq.neg().add(&zs.compose(&zs)).add_scalar(&q(-1, 1));
    rep.expect(
        "ama.casimir_msq",
        ctx.omega.compare(&rhs, max).err().map(|e| format!("Ω vs −𝐌² + (Z+(n−2)/2)² − 1: {e}")),
        format!("degrees 0..={max}"),
    );

    let hx = ctx.h.commutator(&ctx.x_sl2).compare(&ctx.x_sl2.scale(&q(2, 1)), max);
    let hy = ctx.h.commutator(&ctx.y_sl2).compare(&ctx.y_sl2.scale(&q(-2, 1)), max);
    let xy = ctx.x_sl2.commutator(&ctx.y_sl2).compare(&ctx.h, max);
    let sl2 = hx
        .err()
        .map(|e| format!("[H,X] vs 2X: {e}"))
        .or(hy.err().map(|e| format!("[H,Y] vs −2Y: {e}")))
        .or(xy.err().map(|e| format!("[X,Y] vs H: {e}")));
    rep.expect("ama.sl2_relations", sl2, "[H,X]=2X, [H,Y]=−2Y, [X,Y]=H");

    let pairs = ctx.index_pairs();
    let gens = ctx.group_generators();
    let om_m = first_failure(&pairs, |&(i, j)| {
        ctx.omega.commutator(&ctx.m[i][j]).check_zero(max).err().map(|e| format!("[Ω, M_{}{}]: {e}", i + 1, j + 1))
    });
    let om_w = first_failure(&gens, |&w| {
        ctx.omega.commutator(&ctx.group_element(w)).check_zero(max).err().map(|e| format!("[Ω, w{w}]: {e}"))
    });
    rep.expect("ama.omega_central", om_m.or(om_w), format!("all M_ij and generators, degrees 0..={max}"));

    let all: Vec<usize> = (0..ctx.module.group().order()).collect();
    let z_fail = first_failure(&all, |&w| {
        ctx.z.commutator(&ctx.group_element(w)).check_zero(max).err().map(|e| format!("[Z, w{w}]: {e}"))
    });
    rep.expect("ama.z_central", z_fail, format!("all {} group elements", all.len()));

    let sum_s = (0..ctx.n()).fold(GradedOperator::zero(0, ctx.module.dims().clone()), |a, i| a.add(&ctx.s[i][i]));
    let rhs = ctx.z.scale(&q(2, 1)).add_scalar(&q(n, 1));
    rep.expect(
        "ama.trace_s",
        sum_s.compare(&rhs, max).err().map(|e| format!("Σ S_ii vs n + 2Z: {e}")),
        format!("degrees 0..={max}"),
    );

    match ctx.module.group().minus_identity() {
        Some(w) => {
            let op = ctx.group_element(w);
            let fail = first_failure(&pairs, |&(i, j)| {
                op.commutator(&ctx.m[i][j]).check_zero(max).err().map(|e| format!("[−I, M_{}{}]: {e}", i + 1, j + 1))
            });
            rep.expect("ama.minus_identity_central", fail, "−I commutes with all M_ij");
        }
        None => rep.skip("ama.minus_identity_central", "−I is not in W"),
    }
    rep
}
