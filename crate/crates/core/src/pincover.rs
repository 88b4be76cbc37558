//! The Pin double cover W̃ of a reflection group realized through Clifford
//! lifts, the twisted group algebras ℂW̃±, the map ρ, and the concrete
//! admissible elements.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;
use crate::rootsys::{ParamFunction, ReflectionGroup, RootSystem};
use crate::scalar::{Rational, Scalar};

/// Which summand of ℂW̃ = ℂW̃₊ ⊕ ℂW̃₋ an element lives in (θ ↦ +1 or −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Plus,
    Minus,
}

/// Element Σ λ_w w of ℂW̃₊ (ordinary group algebra) or Σ λ_w τ_w of ℂW̃₋,
/// where τ_w is the image of the canonical lift of w.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistedElement<S: Scalar> {
    part: Part,
    coeffs: BTreeMap<usize, S>,
}

impl<S: Scalar> TwistedElement<S> {
    pub fn zero(part: Part) -> Self {
        Self { part, coeffs: BTreeMap::new() }
    }

    pub fn basis(part: Part, w: usize) -> Self {
        Self::term(part, w, S::one())
    }

    pub fn one(part: Part) -> Self {
        Self::basis(part, 0)
    }

    pub fn term(part: Part, w: usize, s: S) -> Self {
        let mut e = Self::zero(part);
        e.accumulate(w, s);
        e
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn coeff(&self, w: usize) -> S {
        self.coeffs.get(&w).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coeffs.iter().map(|(w, s)| (*w, s))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn accumulate(&mut self, w: usize, s: S) {
        let v = match self.coeffs.remove(&w) {
            Some(old) => old.add(&s),
            None => s,
        };
        if !v.is_zero() {
            self.coeffs.insert(w, v);
        }
    }

    fn same_part(&self, o: &Self) -> Result<()> {
        if self.part != o.part {
            return Err(Error::Dimension("cannot combine elements of ℂW̃₊ and ℂW̃₋".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_part(o)?;
        let mut out = self.clone();
        for (w, s) in &o.coeffs {
            out.accumulate(*w, s.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&S::one().neg()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let coeffs = self.coeffs.iter().map(|(w, v)| (*w, v.mul(s))).filter(|(_, v)| !v.is_zero()).collect();
        Self { part: self.part, coeffs }
    }
}

/// Element of ℂŴ. When −I ∈ W the extra central C₂ generator ε is handled by
/// splitting along the idempotents (1 ± ε)/2: `branches[0]` is the component
/// where ε = +1 and `branches[1]` where ε = −1. Otherwise there is one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct HatElement<S: Scalar> {
    branches: Vec<TwistedElement<S>>,
}

impl<S: Scalar> HatElement<S> {
    pub fn branches(&self) -> &[TwistedElement<S>] {
        &self.branches
    }

    pub fn has_extra_factor(&self) -> bool {
        self.branches.len() == 2
    }

    pub fn part(&self) -> Part {
        self.branches[0].part
    }

    pub fn is_zero(&self) -> bool {
        self.branches.iter().all(TwistedElement::is_zero)
    }

    fn zip(
        &self,
        o: &Self,
        f: impl Fn(&TwistedElement<S>, &TwistedElement<S>) -> Result<TwistedElement<S>>,
    ) -> Result<Self> {
        if self.branches.len() != o.branches.len() {
            return Err(Error::Dimension("elements of different group algebras".into()));
        }
        let branches = self.branches.iter().zip(&o.branches).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(Self { branches })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.sub(b))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { branches: self.branches.iter().map(|b| b.scale(s)).collect() }
    }
}

/// Element Σ_w w ⊗ η_w of ℂW ⊗ 𝒞, the target of the abstract map ρ.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupClifford<S: Scalar> {
    n: usize,
    terms: BTreeMap<usize, CliffordElement<S>>,
}

impl<S: Scalar> GroupClifford<S> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn pure(w: usize, eta: CliffordElement<S>) -> Self {
        let mut out = Self::zero(eta.n());
        out.accumulate(w, eta);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CliffordElement<S>)> {
        self.terms.iter().map(|(w, e)| (*w, e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, w: usize, eta: CliffordElement<S>) {
        let v = match self.terms.remove(&w) {
            Some(old) => old.add(&eta).expect("same Clifford algebra"),
            None => eta,
        };
        if !v.is_zero() {
            self.terms.insert(w, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, e) in &o.terms {
            out.accumulate(*w, e.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, e) in &o.terms {
            out.accumulate(*w, e.neg());
        }
        out
    }

    pub fn mul(&self, o: &Self, group: &ReflectionGroup<S>) -> Self {
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                out.accumulate(group.mul(*u, *v), a.mul(b).expect("same Clifford algebra"));
            }
        }
        out
    }

    /// X ⊗ η for X in the ordinary group algebra.
    pub fn tensor(x: &TwistedElement<S>, eta: &CliffordElement<S>) -> Self {
        let mut out = Self::zero(eta.n());
        for (w, s) in x.terms() {
            out.accumulate(w, eta.scale(s));
        }
        out
    }
}

/// Canonical lifts, cocycle and star signs for a reflection group.
#[derive(Debug, Clone)]
pub struct PinCover<S: Scalar> {
    n: usize,
    group: ReflectionGroup<S>,
    simple_roots: Vec<usize>,
    lifts: Vec<CliffordElement<S>>,
    factorization: Vec<Vec<usize>>,
    cocycle: Vec<bool>,
    star_sign: Vec<bool>,
    root_lifts: Vec<CliffordElement<S>>,
}

fn lift_sign<S: Scalar>(prod: &CliffordElement<S>, target: &CliffordElement<S>) -> Option<bool> {
    if prod.sub(target).ok()?.is_zero() {
        Some(true)
    } else if prod.add(target).ok()?.is_zero() {
        Some(false)
    } else {
        None
    }
}

impl<S: Scalar> PinCover<S> {
    pub fn new(rs: &RootSystem<S>, group: ReflectionGroup<S>) -> Result<Self> {
        let n = rs.dim();
        let order = group.order();
        let root_lifts = (0..rs.num_roots())
            .map(|k| {
                let cv = rs.coroot(k);
                let len = crate::rootsys::dot(cv, cv)
                    .sqrt_real()
                    .ok_or_else(|| Error::ExactUnsupported("coroot length outside the coefficient field".into()))?;
                let inv = len.inv()?;
                Ok(CliffordElement::vector_embed(cv).scale(&inv))
            })
            .collect::<Result<Vec<_>>>()?;
        // Layered search over products of reflections; within a layer elements
        // appear in lexicographic order of their factorizations.
        let mut factorization: Vec<Option<Vec<usize>>> = vec![None; order];
        factorization[0] = Some(Vec::new());
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &u in &layer {
                for b in 0..rs.num_roots() {
                    let v = group.mul(u, group.reflection_index(b));
                    if factorization[v].is_none() {
                        let mut f = factorization[u].clone().expect("visited");
                        f.push(b);
                        factorization[v] = Some(f);
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        let factorization: Vec<Vec<usize>> = factorization
            .into_iter()
            .map(|f| f.ok_or_else(|| Error::Internal("element not a product of reflections".into())))
            .collect::<Result<_>>()?;
        let lifts: Vec<CliffordElement<S>> = factorization
            .iter()
            .map(|f| f.iter().fold(CliffordElement::one(n), |acc, &b| acc.mul(&root_lifts[b]).expect("same algebra")))
            .collect();
        let rows: Vec<Result<Vec<bool>>> = par::map_range(order, |u| {
            (0..order)
                .map(|v| {
                    let prod = lifts[u].mul(&lifts[v]).expect("same algebra");
                    lift_sign(&prod, &lifts[group.mul(u, v)])
                        .ok_or_else(|| Error::Internal(format!("lift({u})·lift({v}) is not ±lift of the product")))
                })
                .collect()
        });
        let mut cocycle = Vec::with_capacity(order * order);
        for r in rows {
            cocycle.extend(r?);
        }
        let star_sign = (0..order)
            .map(|w| {
                lift_sign(&lifts[w].star(), &lifts[group.inverse(w)])
                    .ok_or_else(|| Error::Internal(format!("star of lift({w}) is not ±lift of the inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            group,
            simple_roots: rs.simple_roots().to_vec(),
            lifts,
            factorization,
            cocycle,
            star_sign,
            root_lifts,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &ReflectionGroup<S> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Canonical lift of w: the Clifford product of s̃_β over the
    /// lexicographically first shortest factorization of w into reflections.
    pub fn canonical_lift(&self, w: usize) -> Result<&CliffordElement<S>> {
        self.lifts.get(w).ok_or_else(|| Error::Dimension(format!("group has no element {w}")))
    }

    /// Positive-root indices of the chosen reflection factorization.
    pub fn factorization(&self, w: usize) -> &[usize] {
        &self.factorization[w]
    }

    /// s̃_α = ι(α∨)/|α∨| for the k-th positive root.
    pub fn root_lift(&self, k: usize) -> &CliffordElement<S> {
        &self.root_lifts[k]
    }

    /// μ(u, v) with lift(u) lift(v) = μ(u, v) lift(uv); `true` is +1.
    pub fn cocycle(&self, u: usize, v: usize) -> bool {
        self.cocycle[u * self.order() + v]
    }

    pub fn cocycle_value(&self, u: usize, v: usize) -> i32 {
        if self.cocycle(u, v) {
            1
        } else {
            -1
        }
    }

    /// Lifts the minus-part generator for the k-th positive root.
    pub fn tau_root(&self, k: usize) -> TwistedElement<S> {
        TwistedElement::basis(Part::Minus, self.group.reflection_index(k))
    }

    pub fn mul(&self, x: &TwistedElement<S>, y: &TwistedElement<S>) -> Result<TwistedElement<S>> {
        x.same_part(y)?;
        let mut out = TwistedElement::zero(x.part);
        for (u, a) in &x.coeffs {
            for (v, b) in &y.coeffs {
                let p = a.mul(b);
                let p = if x.part == Part::Minus && !self.cocycle(*u, *v) { p.neg() } else { p };
                out.accumulate(self.group.mul(*u, *v), p);
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, x: &TwistedElement<S>, y: &TwistedElement<S>) -> Result<TwistedElement<S>> {
        self.mul(x, y)?.sub(&self.mul(y, x)?)
    }

    pub fn pow(&self, x: &TwistedElement<S>, e: u32) -> Result<TwistedElement<S>> {
        let mut acc = TwistedElement::one(x.part);
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Anti-linear anti-involution: w ↦ w⁻¹ on ℂW̃₊; on ℂW̃₋ the sign comes
    /// from the Clifford star of the canonical lift.
    pub fn star(&self, x: &TwistedElement<S>) -> TwistedElement<S> {
        let mut out = TwistedElement::zero(x.part);
        for (w, s) in &x.coeffs {
            let c = s.conj();
            let c = if x.part == Part::Minus && !self.star_sign[*w] { c.neg() } else { c };
            out.accumulate(self.group.inverse(*w), c);
        }
        out
    }

    // ----- ℂŴ -----

    fn num_branches(&self) -> usize {
        if self.group.longest_element_is_minus_id() {
            2
        } else {
            1
        }
    }

    /// Embeds an element of ℂW̃ into ℂŴ.
    pub fn hat(&self, x: TwistedElement<S>) -> HatElement<S> {
        HatElement { branches: vec![x; self.num_branches()] }
    }

    /// Builds Σ_χ x_χ e_χ from per-character components (ε = +1 first).
    pub fn hat_from_branches(&self, branches: Vec<TwistedElement<S>>) -> Result<HatElement<S>> {
        if branches.len() != self.num_branches() {
            return Err(Error::Dimension(format!(
                "expected {} components, got {}",
                self.num_branches(),
                branches.len()
            )));
        }
        if branches.iter().any(|b| b.part != branches[0].part) {
            return Err(Error::Dimension("components from different summands".into()));
        }
        Ok(HatElement { branches })
    }

    /// The generator ε = (−1)_𝔥 of the extra C₂ factor.
    pub fn epsilon(&self, part: Part) -> Result<HatElement<S>> {
        if !self.group.longest_element_is_minus_id() {
            return Err(Error::Unsupported("(−1)_𝔥 factor requires −I ∈ W".into()));
        }
        let one = TwistedElement::one(part);
        Ok(HatElement { branches: vec![one.clone(), one.scale(&S::one().neg())] })
    }

    pub fn hat_one(&self, part: Part) -> HatElement<S> {
        self.hat(TwistedElement::one(part))
    }

    pub fn hat_mul(&self, x: &HatElement<S>, y: &HatElement<S>) -> Result<HatElement<S>> {
        x.zip(y, |a, b| self.mul(a, b))
    }

    pub fn hat_star(&self, x: &HatElement<S>) -> HatElement<S> {
        HatElement { branches: x.branches.iter().map(|b| self.star(b)).collect() }
    }

    pub fn hat_pow(&self, x: &HatElement<S>, e: u32) -> Result<HatElement<S>> {
        let mut acc = self.hat_one(x.part());
        for _ in 0..e {
            acc = self.hat_mul(&acc, x)?;
        }
        Ok(acc)
    }

    // ----- ρ -----

    /// ρ of an element of ℂW̃ into ℂW ⊗ 𝒞: τ_w ↦ w ⊗ lift(w); θ ↦ −1, so
    /// the plus summand maps to zero.
    pub fn rho_twisted(&self, x: &TwistedElement<S>) -> GroupClifford<S> {
        let mut out = GroupClifford::zero(self.n);
        if x.part == Part::Plus {
            return out;
        }
        for (w, s) in &x.coeffs {
            out.accumulate(*w, self.lifts[*w].scale(s));
        }
        out
    }

    /// ρ on ℂŴ; ε acts as (−1)_𝔥 ⊗ 1.
    pub fn rho(&self, x: &HatElement<S>) -> GroupClifford<S> {
        if x.branches.len() == 1 {
            return self.rho_twisted(&x.branches[0]);
        }
        let minus = self.group.minus_identity().expect("two branches only when −I ∈ W");
        let half = S::from_rational(&Rational::new(1, 2).expect("nonzero"));
        let mut out = GroupClifford::zero(self.n);
        for (k, b) in x.branches.iter().enumerate() {
            let r = self.rho_twisted(b);
            let chi = if k == 0 { S::one() } else { S::one().neg() };
            let one = CliffordElement::scalar(self.n, half.clone());
            let proj = GroupClifford::pure(0, one.clone()).add(&GroupClifford::pure(minus, one.scale(&chi)));
            out = out.add(&r.mul(&proj, &self.group));
        }
        out
    }

    // ----- admissibility -----

    /// Central and star-fixed. Centrality is tested against the canonical
    /// lifts of the simple reflections (they generate together with θ); the
    /// extra ε factor is central by construction of the branch split.
    pub fn is_admissible(&self, x: &HatElement<S>) -> Admissibility {
        let mut violations = Vec::new();
        for (k, b) in x.branches.iter().enumerate() {
            for (j, &s) in self.group.simple_reflection_indices().iter().enumerate() {
                let g = TwistedElement::basis(b.part, s);
                let c = self.commutator(b, &g).expect("same part");
                if !c.is_zero() {
                    violations.push(format!("branch {k}: does not commute with simple reflection {}", j + 1));
                }
            }
            if self.star(b) != *b {
                violations.push(format!("branch {k}: not fixed by the star operation"));
            }
        }
        Admissibility { admissible: violations.is_empty(), violations }
    }

    pub fn is_central(&self, x: &TwistedElement<S>) -> bool {
        self.group
            .simple_reflection_indices()
            .iter()
            .all(|&s| self.commutator(x, &TwistedElement::basis(x.part, s)).map(|c| c.is_zero()).unwrap_or(false))
    }

    pub fn simple_root_indices(&self) -> &[usize] {
        &self.simple_roots
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Admissibility {
    pub admissible: bool,
    pub violations: Vec<String>,
}

fn half<S: Scalar>() -> S {
    S::from_rational(&Rational::new(1, 2).expect("nonzero"))
}

fn c_value<S: Scalar>(rs: &RootSystem<S>, c: &ParamFunction, k: usize) -> S {
    S::from_rational(c.root_value(rs, k))
}

fn length<S: Scalar>(v: &[S]) -> Result<S> {
    crate::rootsys::dot(v, v)
        .sqrt_real()
        .ok_or_else(|| Error::ExactUnsupported("root length outside the coefficient field".into()))
}

/// Z̃ = ½ Σ c_α s̃_α in the given summand.
pub fn z_tilde<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>, c: &ParamFunction, part: Part) -> TwistedElement<S> {
    let mut z = TwistedElement::zero(part);
    for k in 0..rs.num_roots() {
        z.accumulate(pin.group().reflection_index(k), c_value(rs, c, k).mul(&half()));
    }
    z
}

/// C₂ = Z̃², both summands.
pub fn c2_parts<S: Scalar>(
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
) -> Result<(TwistedElement<S>, TwistedElement<S>)> {
    let zp = z_tilde(rs, pin, c, Part::Plus);
    let zm = z_tilde(rs, pin, c, Part::Minus);
    Ok((pin.mul(&zp, &zp)?, pin.mul(&zm, &zm)?))
}

/// C₂ as an element of ℂŴ (the summand seen by ρ), verified admissible.
pub fn build_c2<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>, c: &ParamFunction) -> Result<HatElement<S>> {
    let (_, minus) = c2_parts(rs, pin, c)?;
    let h = pin.hat(minus);
    let adm = pin.is_admissible(&h);
    if !adm.admissible {
        return Err(Error::Internal(format!("C2 failed admissibility: {}", adm.violations.join("; "))));
    }
    Ok(h)
}

/// T_i = ½ Σ c_α ⟨x_i, α∨⟩/|α∨| s_α in ℂW (0-based i).
pub fn build_t<S: Scalar>(
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
    i: usize,
) -> Result<TwistedElement<S>> {
    let mut t = TwistedElement::zero(Part::Plus);
    for k in 0..rs.num_roots() {
        let cv = rs.coroot(k);
        let f = cv[i].mul(&length(cv)?.inv()?);
        t.accumulate(pin.group().reflection_index(k), c_value(rs, c, k).mul(&f).mul(&half()));
    }
    Ok(t)
}

/// T_i• = ½ Σ c_α ⟨α, y_i⟩/|α| s_α in ℂW (0-based i).
pub fn build_t_bullet<S: Scalar>(
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
    i: usize,
) -> Result<TwistedElement<S>> {
    let mut t = TwistedElement::zero(Part::Plus);
    for k in 0..rs.num_roots() {
        let a = rs.root(k);
        let f = a[i].mul(&length(a)?.inv()?);
        t.accumulate(pin.group().reflection_index(k), c_value(rs, c, k).mul(&f).mul(&half()));
    }
    Ok(t)
}

/// Z₃ = ¼ Σ_{α,β} c_α |α∨|⁻¹ c_β |β|⁻¹ ⟨β, α∨⟩ s_α s_β, verified central in ℂW.
pub fn build_z3<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>, c: &ParamFunction) -> Result<TwistedElement<S>> {
    let quarter = S::from_rational(&Rational::new(1, 4).expect("nonzero"));
    let g = pin.group();
    let mut z = TwistedElement::zero(Part::Plus);
    for a in 0..rs.num_roots() {
        let ca = c_value(rs, c, a).mul(&length(rs.coroot(a))?.inv()?);
        for b in 0..rs.num_roots() {
            let cb = c_value(rs, c, b).mul(&length(rs.root(b))?.inv()?);
            let pair = crate::rootsys::dot(rs.root(b), rs.coroot(a));
            let w = g.mul(g.reflection_index(a), g.reflection_index(b));
            z.accumulate(w, quarter.mul(&ca).mul(&cb).mul(&pair));
        }
    }
    if !pin.is_central(&z) {
        return Err(Error::Internal("Z3 is not central in CW".into()));
    }
    Ok(z)
}

/// Odd Jucys–Murphy elements of the twisted group algebra of Sₙ.
#[derive(Debug, Clone)]
pub struct JucysMurphy<S: Scalar> {
    /// m_1..m_n with m_k = Σ_{i<k} τ_{(i,k)}.
    pub elements: Vec<TwistedElement<S>>,
    pub squares: Vec<TwistedElement<S>>,
    /// Elementary symmetric polynomials e_1..e_n in the squares.
    pub elementary: Vec<TwistedElement<S>>,
    /// Whether each individual square is central.
    pub square_is_central: Vec<bool>,
}

/// Builds the Jucys–Murphy elements for the Sₙ realization on ℝⁿ, using the
/// all-positive sum over minus lifts of transpositions. Each square is
/// checked to be star-fixed and the elementary symmetric polynomials in the
/// squares to be central; the result errors otherwise.
pub fn jm_elements<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>) -> Result<JucysMurphy<S>> {
    let n = rs.dim();
    if rs.num_roots() != n * (n - 1) / 2 {
        return Err(Error::Unsupported("Jucys–Murphy elements need the Sₙ realization on ℝⁿ".into()));
    }
    let mut elements = Vec::with_capacity(n);
    for k in 0..n {
        let mut m = TwistedElement::zero(Part::Minus);
        for i in 0..k {
            let mut v = vec![S::zero(); n];
            v[i] = S::one();
            v[k] = S::one().neg();
            let (r, _) = rs
                .locate(&v)
                .ok_or_else(|| Error::Unsupported("Jucys–Murphy elements need the Sₙ realization on ℝⁿ".into()))?;
            m = m.add(&pin.tau_root(r))?;
        }
        elements.push(m);
    }
    let squares = elements.iter().map(|m| pin.mul(m, m)).collect::<Result<Vec<_>>>()?;
    for (k, s) in squares.iter().enumerate() {
        if pin.star(s) != *s {
            return Err(Error::Internal(format!(
                "m_{}^2 is not star-fixed under the all-positive transposition convention",
                k + 1
            )));
        }
    }
    let mut e = vec![TwistedElement::one(Part::Minus)];
    for s in &squares {
        let mut next = e.clone();
        next.push(TwistedElement::zero(Part::Minus));
        for j in 1..next.len() {
            next[j] = next[j].add(&pin.mul(&e[j - 1], s)?)?;
        }
        e = next;
    }
    let elementary: Vec<_> = e.into_iter().skip(1).collect();
    for (j, x) in elementary.iter().enumerate() {
        if !pin.is_central(x) {
            return Err(Error::Internal(format!(
                "e_{} of the Jucys–Murphy squares is not central under the all-positive transposition convention",
                j + 1
            )));
        }
    }
    let square_is_central = squares.iter().map(|s| pin.is_central(s)).collect();
    Ok(JucysMurphy { elements, squares, elementary, square_is_central })
}

/// Resolves "zero", "C2", "jm:e<k>", "scale:<q>:<name>" to an element of ℂŴ.
pub fn named_admissible<S: Scalar>(
    name: &str,
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
) -> Result<HatElement<S>> {
    let name = name.trim();
    if let Some(rest) = name.strip_prefix("scale:") {
        let (q, inner) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected scale:<number>:<name>, got {name:?}")))?;
        let s = S::parse_real(q).map_err(|e| Error::Parse(format!("scale factor {q:?}: {e}")))?;
        return Ok(named_admissible(inner, rs, pin, c)?.scale(&s));
    }
    match name {
        "zero" | "0" => Ok(pin.hat(TwistedElement::zero(Part::Minus))),
        "C2" => build_c2(rs, pin, c),
        _ => {
            let k: usize = name
                .strip_prefix("jm:e")
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| Error::Parse(format!("unknown admissible element {name:?}")))?;
            let jm = jm_elements(rs, pin)?;
            let e =
                jm.elementary.get(k.wrapping_sub(1)).cloned().ok_or_else(|| {
                    Error::Parse(format!("no elementary symmetric polynomial e{k} for n = {}", rs.dim()))
                })?;
            Ok(pin.hat(e))
        }
    }
}

/// Cocycle identity, presentation and braid-relation checks.
pub fn pin_checks<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>) -> Report {
    let mut rep = Report::new();
    let g = pin.group();
    let order = g.order();

    let triples: Vec<(usize, usize, usize)> = if order <= 48 {
        (0..order).flat_map(|u| (0..order).flat_map(move |v| (0..order).map(move |w| (u, v, w)))).collect()
    } else {
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % order
        };
        (0..20_000).map(|_| (next(), next(), next())).collect()
    };
    let bad = triples.iter().find(|&&(u, v, w)| {
        pin.cocycle_value(u, v) * pin.cocycle_value(g.mul(u, v), w)
            != pin.cocycle_value(v, w) * pin.cocycle_value(u, g.mul(v, w))
    });
    let scope = if order <= 48 { "full scan" } else { "sampled" };
    rep.expect(
        "pincover.cocycle_identity",
        bad.map(|t| format!("fails at {t:?}")),
        format!("{} triples ({scope})", triples.len()),
    );

    let mut fail = None;
    'outer: for a in 0..rs.num_roots() {
        for b in 0..rs.num_roots() {
            let sa = pin.root_lift(a);
            let prod = sa.mul(pin.root_lift(b)).and_then(|p| p.mul(sa)).expect("same algebra");
            let img = rs.reflect_vector(a, rs.root(b));
            let Some((gk, _)) = rs.locate(&img) else {
                fail = Some(format!("s_{a}({b}) is not a root"));
                break 'outer;
            };
            if lift_sign(&prod, pin.root_lift(gk)).is_none() {
                fail = Some(format!("lift(s_{a}) lift(s_{b}) lift(s_{a}) ≠ ±lift(s_{gk})"));
                break 'outer;
            }
        }
    }
    rep.expect("pincover.presentation", fail, format!("{} root pairs", rs.num_roots().pow(2)));

    let mut fail = None;
    let simple = pin.simple_root_indices();
    for &a in simple {
        for &b in simple {
            if a == b {
                continue;
            }
            let m = g.element_order(g.mul(g.reflection_index(a), g.reflection_index(b)));
            let pair = pin.root_lift(a).mul(pin.root_lift(b)).expect("same algebra");
            let mut acc = CliffordElement::one(pin.n());
            for _ in 0..m {
                acc = acc.mul(&pair).expect("same algebra");
            }
            let expect = if (m - 1).is_multiple_of(2) { S::one() } else { S::one().neg() };
            if acc.as_scalar().map(|s| s.sub(&expect).is_zero()) != Some(true) {
                fail = Some(format!("(s̃_{a} s̃_{b})^{m} ≠ (−1)^{}", m - 1));
            }
        }
    }
    rep.expect("pincover.braid", fail, format!("{} simple roots", simple.len()));

    let norms_ok = (0..rs.num_roots()).all(|k| {
        let nrm = pin.root_lift(k).spinor_norm();
        nrm.mul(&nrm).ok().and_then(|x| x.as_scalar()).map(|s| s.is_one()) == Some(true)
    });
    rep.expect("pincover.pin_membership", (!norms_ok).then(|| "N(s̃_α)² ≠ 1".to_string()), "N(s̃_α)² = 1");
    rep
}

/// Checks on C₂, T_i, Z₃ and (for Sₙ) Jucys–Murphy elements.
pub fn admissible_checks<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>, c: &ParamFunction) -> Report {
    let mut rep = Report::new();
    let zero = pin.hat(TwistedElement::zero(Part::Minus));
    let z = pin.is_admissible(&zero);
    rep.expect("pincover.zero_admissible", (!z.admissible).then(|| z.violations.join("; ")), "C = 0");

    match build_c2(rs, pin, c) {
        Ok(c2) => {
            rep.pass("pincover.c2_admissible", "central and star-fixed");
            rep.extend(c2_decomposition_check(rs, pin, c, &c2));
        }
        Err(e) => rep.fail("pincover.c2_admissible", e.to_string()),
    }

    let n = rs.dim();
    let mut bad = None;
    for i in 0..n {
        match (build_t(rs, pin, c, i), build_t_bullet(rs, pin, c, i)) {
            (Ok(t), Ok(tb)) if t == tb => {}
            (Ok(_), Ok(_)) => bad = Some(format!("T_{} ≠ T_{}•", i + 1, i + 1)),
            (Err(e), _) | (_, Err(e)) => bad = Some(e.to_string()),
        }
    }
    rep.expect("pincover.t_equals_t_bullet", bad, format!("i = 1..{n}"));

    if let Some(tau) = (0..rs.num_roots()).next() {
        let single = pin.hat(pin.tau_root(tau));
        let a = pin.is_admissible(&single);
        rep.expect(
            "pincover.single_tau_not_admissible",
            a.admissible.then(|| "τ_α passed the admissibility test".to_string()),
            a.violations.first().cloned().unwrap_or_default(),
        );
    }
    rep
}

/// ρ(Z̃) = Σ T_i ⊗ c_i and ρ(C₂) = Σ_{i<j} (T_i T_j• − T_j T_i•) ⊗ c_i c_j + Z₃.
pub fn c2_decomposition_check<S: Scalar>(
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
    c2: &HatElement<S>,
) -> Report {
    let mut rep = Report::new();
    let n = rs.dim();
    let run = || -> Result<(Option<String>, Option<String>)> {
        let ts = (0..n).map(|i| build_t(rs, pin, c, i)).collect::<Result<Vec<_>>>()?;
        let tbs = (0..n).map(|i| build_t_bullet(rs, pin, c, i)).collect::<Result<Vec<_>>>()?;
        let mut rz = GroupClifford::zero(n);
        for (i, t) in ts.iter().enumerate() {
            rz = rz.add(&GroupClifford::tensor(t, &CliffordElement::generator(n, i + 1)));
        }
        let zt = z_tilde(rs, pin, c, Part::Minus);
        let z_fail = (pin.rho_twisted(&zt) != rz).then(|| "ρ(Z̃) ≠ Σ T_i ⊗ c_i".to_string());
        let mut rhs = GroupClifford::tensor(&build_z3(rs, pin, c)?, &CliffordElement::one(n));
        for i in 0..n {
            for j in i + 1..n {
                let x = pin.mul(&ts[i], &tbs[j])?.sub(&pin.mul(&ts[j], &tbs[i])?)?;
                let cij = CliffordElement::generator(n, i + 1).mul(&CliffordElement::generator(n, j + 1))?;
                rhs = rhs.add(&GroupClifford::tensor(&x, &cij));
            }
        }
        let lhs = pin.rho(c2);
        let c_fail = (lhs != rhs).then(|| "ρ(C₂) differs from the T_i/Z₃ expansion".to_string());
        Ok((z_fail, c_fail))
    };
    match run() {
        Ok((zf, cf)) => {
            rep.expect("pincover.rho_z_tilde", zf, "exact in CW⊗C");
            rep.expect("pincover.rho_c2_expansion", cf, "exact in CW⊗C");
        }
        Err(e) => rep.fail("pincover.rho_c2_expansion", e.to_string()),
    }
    rep
}

/// Per-index centrality of the Jucys–Murphy squares and star-fixedness.
pub fn jm_checks<S: Scalar>(rs: &RootSystem<S>, pin: &PinCover<S>) -> Report {
    let mut rep = Report::new();
    match jm_elements(rs, pin) {
        Ok(jm) => {
            rep.pass("pincover.jm_squares_star_fixed", format!("m_1^2..m_{}^2", jm.squares.len()));
            let offenders: Vec<String> = jm
                .square_is_central
                .iter()
                .enumerate()
                .filter(|(_, ok)| !**ok)
                .map(|(k, _)| format!("m_{}^2", k + 1))
                .collect();
            rep.expect(
                "pincover.jm_squares_central",
                (!offenders.is_empty()).then(|| format!("not central: {}", offenders.join(", "))),
                "every m_k^2 commutes with all simple lifts",
            );
            rep.pass("pincover.jm_elementary_central", format!("e_1..e_{}", jm.elementary.len()));
        }
        Err(e) => rep.fail("pincover.jm_elements", e.to_string()),
    }
    rep
}

/// Exact basis of the centre of ℂW̃₋ (or ℂW for the plus part), from the
/// null space of commutation with the simple generators.
pub fn centre_basis<S: Scalar>(pin: &PinCover<S>, part: Part) -> Vec<TwistedElement<S>> {
    let order = pin.order();
    let simple = pin.group().simple_reflection_indices();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for &s in simple {
        let g = TwistedElement::basis(part, s);
        let mut block = vec![vec![S::zero(); order]; order];
        for w in 0..order {
            let b = TwistedElement::basis(part, w);
            let comm = pin.commutator(&b, &g).expect("same part");
            for (u, v) in comm.terms() {
                block[u][w] = v.clone();
            }
        }
        rows.extend(block);
    }
    let m = crate::linalg::DenseMatrix::from_rows(rows);
    let k = m.kernel();
    (0..k.dim())
        .map(|j| {
            let mut e = TwistedElement::zero(part);
            for w in 0..order {
                e.accumulate(w, k.basis[(w, j)].clone());
            }
            e
        })
        .collect()
}

/// Distinct group elements appearing in the support of an element.
pub fn support<S: Scalar>(x: &HatElement<S>) -> HashSet<usize> {
    x.branches.iter().flat_map(|b| b.coeffs.keys().copied()).collect()
}
