//! Clifford algebra on c₁..cₙ with c_i c_j + c_j c_i = 2δ_ij, its involutions,
//! and a spinor representation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::Scalar;

/// Monomial c_S encoded as a bitmask; bit k stands for c_{k+1}.
pub type Mask = u32;

/// Sign of c_A c_B after sorting to increasing index order.
pub fn monomial_sign(a: Mask, b: Mask) -> bool {
    // Each generator of b must move left past the generators of a with larger index.
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    swaps.is_multiple_of(2)
}

fn reverse_sign(k: u32) -> bool {
    // (−1)^{k(k−1)/2}
    (k * k.saturating_sub(1) / 2).is_multiple_of(2)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CliffordElement<S: Scalar> {
    n: usize,
    terms: BTreeMap<Mask, S>,
}

impl<S: Scalar> CliffordElement<S> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 30, "at most 30 Clifford generators");
        Self { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, s: S) -> Self {
        Self::monomial(n, 0, s)
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn monomial(n: usize, mask: Mask, s: S) -> Self {
        let mut e = Self::zero(n);
        assert!(mask >> n == 0, "monomial outside the generator range");
        if !s.is_zero() {
            e.terms.insert(mask, s);
        }
        e
    }

    /// The generator c_i (1-based).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        Self::monomial(n, 1 << (i - 1), S::one())
    }

    /// ι(v) = Σ v_i c_i.
    pub fn vector_embed(v: &[S]) -> Self {
        let n = v.len();
        let mut e = Self::zero(n);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                e.terms.insert(1 << i, x.clone());
            }
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &S)> {
        self.terms.iter().map(|(m, s)| (*m, s))
    }

    pub fn coefficient(&self, mask: Mask) -> S {
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::Dimension(format!("Clifford algebras on {} and {} generators", self.n, o.n)));
        }
        Ok(())
    }

    fn accumulate(&mut self, mask: Mask, s: S) {
        let v = match self.terms.remove(&mask) {
            Some(old) => old.add(&s),
            None => s,
        };
        if !v.is_zero() {
            self.terms.insert(mask, v);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (m, s) in &o.terms {
            out.accumulate(*m, s.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|_, s| s.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map_terms(|_, v| v.mul(s))
    }

    fn map_terms(&self, f: impl Fn(Mask, &S) -> S) -> Self {
        let terms = self.terms.iter().map(|(m, s)| (*m, f(*m, s))).filter(|(_, s)| !s.is_zero()).collect();
        Self { n: self.n, terms }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let p = x.mul(y);
                out.accumulate(a ^ b, if monomial_sign(*a, *b) { p } else { p.neg() });
            }
        }
        Ok(out)
    }

    /// Grading automorphism ε: negates odd monomials.
    pub fn epsilon(&self) -> Self {
        self.map_terms(|m, s| if m.count_ones() % 2 == 0 { s.clone() } else { s.neg() })
    }

    /// Transpose: reverses each monomial, sign (−1)^{k(k−1)/2} in degree k.
    pub fn transpose(&self) -> Self {
        self.map_terms(|m, s| if reverse_sign(m.count_ones()) { s.clone() } else { s.neg() })
    }

    /// η* = ε(η^t), extended anti-linearly.
    pub fn star(&self) -> Self {
        self.map_terms(|m, s| {
            let k = m.count_ones();
            let keep = reverse_sign(k) == (k % 2 == 0);
            if keep {
                s.conj()
            } else {
                s.conj().neg()
            }
        })
    }

    /// Spinorial norm N(η) = η* η.
    pub fn spinor_norm(&self) -> Self {
        self.star().mul(self).expect("same algebra")
    }

    /// If the element is a scalar multiple of 1, that scalar.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Parses "1/2 c1 c3 - c2 + 3"; coefficients must be real.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("Clifford element {text:?}: {why}"));
        let mut out = Self::zero(n);
        let mut t = text.trim().to_string();
        if t.is_empty() || t == "0" {
            return Ok(out);
        }
        if !t.starts_with(['+', '-']) {
            t.insert(0, '+');
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in t.chars() {
            if (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim().ends_with(['*', '/']) {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let term = term.trim();
            let (neg, body) = match term.split_at(1) {
                ("-", b) => (true, b.trim()),
                (_, b) => (false, b.trim()),
            };
            let mut coef = S::one();
            let mut mask: Mask = 0;
            let mut sign = true;
            for tok in body.split_whitespace() {
                if let Some(idx) = tok.strip_prefix('c') {
                    let i: usize = idx.parse().map_err(|_| bad("bad generator"))?;
                    if !(1..=n).contains(&i) {
                        return Err(bad("generator index out of range"));
                    }
                    let bit = 1 << (i - 1);
                    sign ^= !monomial_sign(mask, bit);
                    mask ^= bit;
                } else if mask == 0 {
                    coef = coef.mul(&S::parse_real(tok).map_err(|_| bad("bad coefficient"))?);
                } else {
                    return Err(bad("coefficient after generators"));
                }
            }
            if neg != !sign {
                coef = coef.neg();
            }
            out.accumulate(mask, coef);
        }
        Ok(out)
    }
}

impl<S: Scalar> fmt::Display for CliffordElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, s)) in self.terms.iter().enumerate() {
            let mut coef = s.to_string();
            let negative = coef.starts_with('-') && !coef[1..].contains([' ', '+']);
            if negative {
                coef.remove(0);
            }
            if coef.contains(' ') {
                coef = format!("({coef})");
            }
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let gens: Vec<String> = (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| format!("c{}", i + 1)).collect();
            if gens.is_empty() {
                write!(f, "{coef}")?;
            } else if coef == "1" {
                write!(f, "{}", gens.join(" "))?;
            } else {
                write!(f, "{coef} {}", gens.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Irreducible spinor module of dimension 2^⌊n/2⌋ (Jordan–Wigner form).
/// For odd n the class with σ(c_n) = i^k σ(c₁)⋯σ(c_{2k}) is used.
#[derive(Clone, Debug)]
pub struct SpinorRep<S: Scalar> {
    n: usize,
    dim: usize,
    monomials: Vec<DenseMatrix<S>>,
}

impl<S: Scalar> SpinorRep<S> {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 12 {
            return Err(Error::Dimension(format!("spinor module for n = {n} not supported")));
        }
        let k = n / 2;
        let dim = 1usize << k;
        let one = S::one();
        let i = S::imag_unit();
        let x = DenseMatrix::from_rows(vec![vec![S::zero(), one.clone()], vec![one.clone(), S::zero()]]);
        let y = DenseMatrix::from_rows(vec![vec![S::zero(), i.neg()], vec![i.clone(), S::zero()]]);
        let z = DenseMatrix::from_rows(vec![vec![one.clone(), S::zero()], vec![S::zero(), one.neg()]]);
        let id2 = DenseMatrix::<S>::identity(2);
        let mode = |j: usize, p: &DenseMatrix<S>| {
            (0..k).fold(DenseMatrix::identity(1), |acc, m| {
                let f = match m.cmp(&j) {
                    std::cmp::Ordering::Less => &z,
                    std::cmp::Ordering::Equal => p,
                    std::cmp::Ordering::Greater => &id2,
                };
                acc.kron(f)
            })
        };
        let mut gens = Vec::with_capacity(n);
        for j in 0..k {
            gens.push(mode(j, &x));
            gens.push(mode(j, &y));
        }
        if n % 2 == 1 {
            let ik = S::imag_unit().pow(k as u32);
            let prod = gens.iter().fold(DenseMatrix::identity(dim), |acc, g| acc.mul(g));
            gens.push(prod.scale(&ik));
        }
        let mut monomials = Vec::with_capacity(1 << n);
        monomials.push(DenseMatrix::identity(dim));
        for mask in 1u32..(1 << n) {
            let low = mask.trailing_zeros() as usize;
            // c_S = c_low · c_{S∖low} since low is the smallest index.
            let rest = &monomials[(mask & (mask - 1)) as usize];
            monomials.push(gens[low].mul(rest));
        }
        Ok(Self { n, dim, monomials })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// σ(c_i), 1-based.
    pub fn generator(&self, i: usize) -> &DenseMatrix<S> {
        &self.monomials[1 << (i - 1)]
    }

    pub fn monomial(&self, mask: Mask) -> &DenseMatrix<S> {
        &self.monomials[mask as usize]
    }

    pub fn apply(&self, e: &CliffordElement<S>) -> Result<DenseMatrix<S>> {
        if e.n() != self.n {
            return Err(Error::Dimension(format!("element on {} generators, module for {}", e.n(), self.n)));
        }
        let mut out = DenseMatrix::zeros(self.dim, self.dim);
        for (m, s) in e.terms() {
            out = out.add(&self.monomials[m as usize].scale(s));
        }
        Ok(out)
    }
}

/// Checks the defining relations of the generators and their Hermiticity.
pub fn clifford_relations_check<S: Scalar>(spin: &SpinorRep<S>) -> Option<String> {
    let n = spin.n();
    let id = DenseMatrix::identity(spin.dim());
    for i in 1..=n {
        let g = spin.generator(i);
        if g.adjoint() != *g {
            return Some(format!("σ(c{i}) is not Hermitian"));
        }
        for j in 1..=n {
            let h = spin.generator(j);
            let ac = g.mul(h).add(&h.mul(g));
            let expect = if i == j { id.scale(&S::from_i64(2)) } else { DenseMatrix::zeros(spin.dim(), spin.dim()) };
            if ac != expect {
                return Some(format!("{{σ(c{i}), σ(c{j})}} ≠ 2δ"));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactScalar;
    use proptest::prelude::*;

    type E = ExactScalar;
    type C = CliffordElement<E>;

    fn m(n: usize, s: &str) -> C {
        C::parse(n, s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(m(2, "c1 c2").mul(&m(2, "c1 c2")).unwrap(), m(2, "-1"));
        assert_eq!(m(1, "c1").mul(&m(1, "c1")).unwrap(), m(1, "1"));
        assert_eq!(m(3, "c1 c3").mul(&m(3, "c2 c3")).unwrap(), m(3, "-c1 c2"));
        assert!(m(2, "c1").mul(&m(3, "c1")).is_err());
    }

    #[test]
    fn involutions() {
        assert_eq!(m(2, "c1 c2").star(), m(2, "-c1 c2"));
        assert_eq!(m(2, "c1").star(), m(2, "-c1"));
        let l = C::scalar(2, E::new(1.into(), 0.into(), 2.into(), 0.into()));
        assert_eq!(l.star(), C::scalar(2, E::new(1.into(), 0.into(), (-2).into(), 0.into())));
        assert_eq!(m(3, "c1 c2 c3").transpose(), m(3, "-c1 c2 c3"));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let e = m(3, "1/2 c1 c3 - c2 + 3");
        assert_eq!(e.to_string(), "3 - c2 + 1/2 c1 c3");
        assert_eq!(m(3, &e.to_string()), e);
        assert_eq!(m(3, "c3 c1"), m(3, "-c1 c3"));
    }

    #[test]
    fn vector_embedding_squares() {
        let h = E::sqrt2().inv().unwrap();
        let v = C::vector_embed(&[h.clone(), h.neg()]);
        assert_eq!(v.mul(&v).unwrap(), C::one(2));
        let u = C::vector_embed(&[E::one(), E::one()]);
        assert_eq!(u.mul(&u).unwrap(), C::scalar(2, E::integer(2)));
        assert_eq!(C::vector_embed(&[E::one(), E::zero()]), C::generator(2, 1));
        assert_eq!(v.spinor_norm().mul(&v.spinor_norm()).unwrap(), C::one(2));
    }

    #[test]
    fn spinor_modules() {
        let s2 = SpinorRep::<E>::new(2).unwrap();
        let x = DenseMatrix::from_rows(vec![vec![E::zero(), E::one()], vec![E::one(), E::zero()]]);
        let y = DenseMatrix::from_rows(vec![vec![E::zero(), E::i().neg()], vec![E::i(), E::zero()]]);
        assert_eq!(s2.generator(1), &x);
        assert_eq!(s2.generator(2), &y);
        assert_eq!(SpinorRep::<E>::new(3).unwrap().dim(), 2);
        let s4 = SpinorRep::<E>::new(4).unwrap();
        assert_eq!(s4.dim(), 4);
        let top = s4.monomial(0b1111);
        assert_eq!(top.mul(top), DenseMatrix::identity(4));
        for n in 1..=6 {
            assert_eq!(clifford_relations_check(&SpinorRep::<E>::new(n).unwrap()), None, "n = {n}");
        }
    }

    fn element(n: usize) -> impl Strategy<Value = C> {
        proptest::collection::vec((0u32..(1 << n), -3i64..4, -3i64..4), 0..6).prop_map(move |ts| {
            let mut e = C::zero(n);
            for (mask, re, im) in ts {
                let s = E::new(re.into(), 0.into(), im.into(), 0.into());
                e = e.add(&C::monomial(n, mask, s)).unwrap();
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn spinor_map_is_multiplicative(x in element(4), y in element(4)) {
            let s = SpinorRep::<E>::new(4).unwrap();
            prop_assert_eq!(s.apply(&x.mul(&y).unwrap()).unwrap(), s.apply(&x).unwrap().mul(&s.apply(&y).unwrap()));
        }

        #[test]
        fn odd_spinor_map_is_multiplicative(x in element(3), y in element(3)) {
            let s = SpinorRep::<E>::new(3).unwrap();
            prop_assert_eq!(s.apply(&x.mul(&y).unwrap()).unwrap(), s.apply(&x).unwrap().mul(&s.apply(&y).unwrap()));
        }

        #[test]
        fn star_is_anti_involution(x in element(4), y in element(4)) {
            prop_assert_eq!(x.mul(&y).unwrap().star(), y.star().mul(&x.star()).unwrap());
            prop_assert_eq!(x.star().star(), x.clone());
            prop_assert_eq!(x.epsilon().epsilon(), x.clone());
            prop_assert_eq!(x.transpose().transpose(), x.clone());
            prop_assert_eq!(x.mul(&y).unwrap().transpose(), y.transpose().mul(&x.transpose()).unwrap());
        }

        #[test]
        fn adjoint_matches_star_on_even(x in element(4)) {
            let mut even = C::zero(4);
            for (mask, s) in x.terms().filter(|(m, _)| m.count_ones() % 2 == 0) {
                even = even.add(&C::monomial(4, mask, s.clone())).unwrap();
            }
            let s = SpinorRep::<E>::new(4).unwrap();
            prop_assert_eq!(s.apply(&even).unwrap().adjoint(), s.apply(&even.star()).unwrap());
        }
    }
}
