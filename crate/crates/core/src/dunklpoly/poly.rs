use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::Scalar;

pub type Exponent = Vec<u32>;

/// Polynomial in x₁..xₙ with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S: Scalar> {
    n: usize,
    terms: BTreeMap<Exponent, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, s: S) -> Self {
        Self::monomial(vec![0; n], s)
    }

    pub fn monomial(exp: Exponent, s: S) -> Self {
        let mut p = Self::zero(exp.len());
        p.accumulate(exp, s);
        p
    }

    /// The coordinate function x_i (0-based).
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, S::one())
    }

    /// Linear form Σ v_i x_i.
    pub fn linear(v: &[S]) -> Self {
        let mut p = Self::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            let mut e = vec![0; v.len()];
            e[i] = 1;
            p.accumulate(e, c.clone());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> S {
        self.terms.get(e).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn accumulate(&mut self, e: Exponent, s: S) {
        debug_assert_eq!(e.len(), self.n);
        let v = match self.terms.remove(&e) {
            Some(old) => old.add(&s),
            None => s,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, s) in &o.terms {
            out.accumulate(e.clone(), s.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, s) in &o.terms {
            out.accumulate(e.clone(), s.neg());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.mul(s))).filter(|(_, v)| !v.is_zero()).collect();
        Self { n: self.n, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.accumulate(e, x.mul(y));
            }
        }
        out
    }

    /// ∂/∂x_i.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, s) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.accumulate(f, s.mul(&S::from_i64(e[i] as i64)));
            }
        }
        out
    }

    /// Action of a linear map on the coordinates: x_i ↦ Σ_j m_{ji} x_j.
    pub fn act(&self, m: &DenseMatrix<S>) -> Self {
        let images: Vec<Self> = (0..self.n).map(|i| Self::linear(&m.column(i))).collect();
        let mut out = Self::zero(self.n);
        for (e, s) in &self.terms {
            let mut p = Self::constant(self.n, s.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    p = p.mul(&images[i]);
                }
            }
            out = out.add(&p);
        }
        out
    }

    /// Exact quotient by the linear form Σ a_i x_i, by synthetic division
    /// along a coordinate where the form has a nonzero coefficient.
    pub fn divide_by_linear(&self, a: &[S]) -> Result<Self> {
        let k = a
            .iter()
            .rposition(|x| !x.is_zero())
            .ok_or_else(|| Error::Internal("division by the zero linear form".into()))?;
        let lead_inv = a[k].inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        loop {
            let Some((e, s)) =
                rem.terms.iter().max_by_key(|(e, _)| (e[k], (*e).clone())).map(|(e, s)| (e.clone(), s.clone()))
            else {
                break;
            };
            if e[k] == 0 {
                return Err(Error::Internal(format!("nonzero remainder dividing by a linear form: {rem}")));
            }
            let mut qe = e.clone();
            qe[k] -= 1;
            let qc = s.mul(&lead_inv);
            for (j, aj) in a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let mut te = qe.clone();
                te[j] += 1;
                rem.accumulate(te, qc.mul(aj).neg());
            }
            quot.accumulate(qe, qc);
        }
        Ok(quot)
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first, then lexicographically larger exponents first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.iter().sum::<u32>().cmp(&a.iter().sum::<u32>()).then(b.cmp(a)));
        for (k, (e, s)) in terms.into_iter().enumerate() {
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
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            match (vars.is_empty(), coef == "1") {
                (true, _) => write!(f, "{coef}")?,
                (false, true) => write!(f, "{}", vars.join(" "))?,
                (false, false) => write!(f, "{coef} {}", vars.join(" "))?,
            }
        }
        Ok(())
    }
}

/// Monomials of a fixed degree in a fixed order with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: u32,
    monomials: Vec<Exponent>,
    index: std::collections::HashMap<Exponent, usize>,
}

impl MonomialBasis {
    /// Monomials of degree `d` in `n` variables, x₁^d first.
    pub fn new(n: usize, d: u32) -> Self {
        fn rec(n: usize, d: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for k in (0..=d).rev() {
                prefix.push(k);
                rec(n, d - k, prefix, out);
                prefix.pop();
            }
        }
        let mut monomials = Vec::new();
        rec(n, d, &mut Vec::with_capacity(n), &mut monomials);
        let index = monomials.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
        Self { degree: d, monomials, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn get(&self, k: usize) -> &Exponent {
        &self.monomials[k]
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.monomials.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactScalar, Rational};

    type E = ExactScalar;
    type P = Polynomial<E>;

    fn x(n: usize, i: usize) -> P {
        P::variable(n, i)
    }

    #[test]
    fn display_grammar() {
        let p = x(3, 0)
            .mul(&x(3, 0))
            .mul(&x(3, 2))
            .scale(&E::rational(Rational::new(3, 2).unwrap()))
            .sub(&x(3, 1).scale(&E::rational(Rational::new(1, 2).unwrap())));
        assert_eq!(p.to_string(), "3/2 x1^2 x3 - 1/2 x2");
        assert_eq!(P::zero(2).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = [E::one(), E::integer(-1)];
        let f = x(2, 0).mul(&x(2, 0)).mul(&x(2, 1));
        let swap = DenseMatrix::from_rows(vec![vec![E::zero(), E::one()], vec![E::one(), E::zero()]]);
        let g = f.sub(&f.act(&swap));
        let q = g.divide_by_linear(&a).unwrap();
        assert_eq!(q.mul(&P::linear(&a)), g);
        assert!(x(2, 0).divide_by_linear(&a).is_err());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(MonomialBasis::new(3, 2).len(), 6);
        assert_eq!(MonomialBasis::new(4, 3).len(), 20);
        assert_eq!(MonomialBasis::new(1, 5).len(), 1);
        let b = MonomialBasis::new(2, 2);
        assert_eq!(b.get(0), &vec![2, 0]);
        assert_eq!(b.index_of(&[0, 2]), Some(2));
    }
}
