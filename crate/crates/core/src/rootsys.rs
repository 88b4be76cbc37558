//! Root systems, their reflection groups, and parameter functions.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::report::Report;
use crate::scalar::{Rational, Scalar};

/// Default cap on the order of an enumerated reflection group.
pub const DEFAULT_GROUP_BOUND: usize = 384;

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc.add(&x.mul(y)))
}

fn axpy<S: Scalar>(a: &S, x: &[S], y: &[S]) -> Vec<S> {
    x.iter().zip(y).map(|(xi, yi)| yi.add(&a.mul(xi))).collect()
}

fn key_of<S: Scalar>(v: &[S]) -> Vec<S::Key> {
    v.iter().map(S::key).collect()
}

/// Positive roots, coroots `α∨ = 2α/|α|²`, and conjugacy-class (orbit) labels.
#[derive(Clone, Debug)]
pub struct RootSystem<S: Scalar> {
    name: String,
    dim: usize,
    roots: Vec<Vec<S>>,
    coroots: Vec<Vec<S>>,
    norm_sq: Vec<S>,
    orbit: Vec<usize>,
    orbit_labels: Vec<String>,
    simple: Vec<usize>,
    lookup: HashMap<Vec<S::Key>, usize>,
    positive_functional: Option<Vec<S>>,
}

impl<S: Scalar> RootSystem<S> {
    /// Built-in types: `S<n>` (A_{n-1} on ℝⁿ), `A<k>` (on ℝ^{k+1}), `B<n>`,
    /// `D<n>`, `I2(m)`; `G2`, `H3` and `I2(m)` with m ≠ 4 need the float backend.
    pub fn named(name: &str) -> Result<Self> {
        let t = name.trim();
        let bad = || Error::RootSystem(format!("unknown root system {name:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let roots = if let Some(m) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = num(m)?;
            if m < 3 {
                return Err(bad());
            }
            if m == 4 {
                type_b(2)
            } else {
                float_roots::<S>(name, dihedral(m))?
            }
        } else if t == "G2" {
            float_roots::<S>(name, g2())?
        } else if t == "H3" {
            float_roots::<S>(name, h3())?
        } else if let Some(n) = t.strip_prefix('S') {
            let n = num(n)?;
            if n < 2 {
                return Err(bad());
            }
            type_a(n)
        } else if let Some(k) = t.strip_prefix('A') {
            let k = num(k)?;
            if k < 1 {
                return Err(bad());
            }
            type_a(k + 1)
        } else if let Some(n) = t.strip_prefix('B') {
            let n = num(n)?;
            if n < 1 {
                return Err(bad());
            }
            type_b(n)
        } else if let Some(n) = t.strip_prefix('D') {
            let n = num(n)?;
            if n < 2 {
                return Err(bad());
            }
            type_d(n)
        } else {
            return Err(bad());
        };
        Self::from_roots(t, roots, None)
    }

    /// Builds a root system from a list of roots (either sign accepted).
    /// A root is positive iff its first nonzero coordinate is positive, or,
    /// when `positive_functional` is given, iff its pairing with it is positive.
    pub fn from_roots(name: &str, roots: Vec<Vec<S>>, positive_functional: Option<Vec<S>>) -> Result<Self> {
        let dim = roots.first().map(Vec::len).ok_or_else(|| Error::RootSystem("no roots given".into()))?;
        if dim == 0 {
            return Err(Error::RootSystem("roots must have at least one coordinate".into()));
        }
        let mut rs = RootSystem {
            name: name.to_string(),
            dim,
            roots: Vec::new(),
            coroots: Vec::new(),
            norm_sq: Vec::new(),
            orbit: Vec::new(),
            orbit_labels: Vec::new(),
            simple: Vec::new(),
            lookup: HashMap::new(),
            positive_functional,
        };
        if let Some(f) = &rs.positive_functional {
            if f.len() != dim {
                return Err(Error::RootSystem("positive functional has the wrong length".into()));
            }
        }
        for r in roots {
            if r.len() != dim {
                return Err(Error::RootSystem(format!("root of length {} in dimension {dim}", r.len())));
            }
            if r.iter().any(|x| x.real_sign().is_none()) {
                return Err(Error::RootSystem("root coordinates must be real".into()));
            }
            if r.iter().all(S::is_zero) {
                return Err(Error::RootSystem("zero vector is not a root".into()));
            }
            let (p, _) = rs.make_positive(r)?;
            let k = key_of(&p);
            if !rs.lookup.contains_key(&k) {
                rs.lookup.insert(k, rs.roots.len());
                rs.roots.push(p);
            }
        }
        for a in &rs.roots {
            let n2 = dot(a, a);
            let f = S::from_i64(2).div(&n2)?;
            rs.coroots.push(a.iter().map(|x| x.mul(&f)).collect());
            rs.norm_sq.push(n2);
        }
        rs.close_and_classify()?;
        Ok(rs)
    }

    fn is_positive(&self, v: &[S]) -> Result<bool> {
        let s = match &self.positive_functional {
            Some(f) => dot(f, v).real_sign().unwrap_or(0),
            None => v.iter().find(|x| !x.is_zero()).and_then(S::real_sign).unwrap_or(0),
        };
        if s == 0 {
            return Err(Error::RootSystem("positive functional vanishes on a root".into()));
        }
        Ok(s > 0)
    }

    fn make_positive(&self, v: Vec<S>) -> Result<(Vec<S>, bool)> {
        if self.is_positive(&v)? {
            Ok((v, true))
        } else {
            Ok((v.iter().map(S::neg).collect(), false))
        }
    }

    /// Index of `±v` among the positive roots together with the sign.
    pub fn locate(&self, v: &[S]) -> Option<(usize, bool)> {
        let (p, pos) = self.make_positive(v.to_vec()).ok()?;
        self.lookup.get(&key_of(&p)).map(|&k| (k, pos))
    }

    fn close_and_classify(&mut self) -> Result<()> {
        let r = self.roots.len();
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut negated = vec![0usize; r];
        for a in 0..r {
            for b in 0..r {
                let img = self.reflect_vector(a, &self.roots[b]);
                let (k, pos) = self.locate(&img).ok_or_else(|| {
                    Error::RootSystem(format!("reflection in root {a} maps root {b} outside the system"))
                })?;
                if !pos && a != b {
                    negated[a] += 1;
                }
                let (x, y) = (find(&mut parent, b), find(&mut parent, k));
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut ids: HashMap<usize, usize> = HashMap::new();
        for k in 0..r {
            let root = find(&mut parent, k);
            let next = ids.len();
            let id = *ids.entry(root).or_insert(next);
            self.orbit.push(id);
        }
        self.orbit_labels = (0..ids.len()).map(|k| format!("o{k}")).collect();
        self.simple = (0..r).filter(|&a| negated[a] == 0).collect();
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, k: usize) -> &[S] {
        &self.roots[k]
    }

    pub fn roots(&self) -> &[Vec<S>] {
        &self.roots
    }

    pub fn coroot(&self, k: usize) -> &[S] {
        &self.coroots[k]
    }

    pub fn coroots(&self) -> &[Vec<S>] {
        &self.coroots
    }

    /// |α|² for the k-th positive root.
    pub fn norm_sq(&self, k: usize) -> &S {
        &self.norm_sq[k]
    }

    pub fn orbit_of(&self, k: usize) -> usize {
        self.orbit[k]
    }

    pub fn num_orbits(&self) -> usize {
        self.orbit_labels.len()
    }

    pub fn orbit_labels(&self) -> &[String] {
        &self.orbit_labels
    }

    /// Alternative names accepted for orbits: "all" for a single orbit,
    /// "short"/"long" when there are two orbits of different root length.
    pub fn orbit_aliases(&self) -> Vec<(String, usize)> {
        let mut out = Vec::new();
        if self.num_orbits() == 1 {
            out.push(("all".to_string(), 0));
        }
        if self.num_orbits() == 2 {
            let rep = |o: usize| (0..self.roots.len()).find(|&k| self.orbit[k] == o).expect("orbit is nonempty");
            let (a, b) = (self.norm_sq[rep(0)].to_float().re, self.norm_sq[rep(1)].to_float().re);
            if (a - b).abs() > 1e-9 {
                let (short, long) = if a < b { (0, 1) } else { (1, 0) };
                out.push(("short".to_string(), short));
                out.push(("long".to_string(), long));
            }
        }
        out
    }

    pub fn orbit_by_label(&self, label: &str) -> Option<usize> {
        self.orbit_labels
            .iter()
            .position(|l| l == label)
            .or_else(|| self.orbit_aliases().into_iter().find(|(a, _)| a == label).map(|(_, o)| o))
    }

    /// Indices of the simple roots among the positive roots.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    /// s_α(v) = v − ⟨α, v⟩ α∨.
    pub fn reflect_vector(&self, k: usize, v: &[S]) -> Vec<S> {
        let p = dot(&self.roots[k], v).neg();
        axpy(&p, &self.coroots[k], v)
    }

    /// Matrix of s_α: entries δ_ij − α∨_i α_j.
    pub fn reflection(&self, k: usize) -> DenseMatrix<S> {
        let (a, c) = (&self.roots[k], &self.coroots[k]);
        DenseMatrix::from_fn(self.dim, self.dim, |i, j| {
            let d = if i == j { S::one() } else { S::zero() };
            d.sub(&c[i].mul(&a[j]))
        })
    }
}

/// Checks ⟨x_i, α∨⟩ = (|α∨|²/2)⟨α, y_i⟩ for every coordinate and root.
pub fn pairing_check<S: Scalar>(roots: &[Vec<S>], coroots: &[Vec<S>]) -> Report {
    let mut bad = Vec::new();
    for (k, (a, c)) in roots.iter().zip(coroots).enumerate() {
        let half = dot(c, c).mul(&S::from_rational(&Rational::new(1, 2).expect("nonzero denominator")));
        for i in 0..a.len() {
            if !c[i].sub(&half.mul(&a[i])).is_zero() {
                bad.push(format!("(i={}, root {k})", i + 1));
            }
        }
    }
    let mut rep = Report::new();
    rep.expect(
        "rootsys.pairing",
        (!bad.is_empty()).then(|| format!("mismatch at {}", bad.join(", "))),
        format!("{} roots", roots.len()),
    );
    rep
}

/// Finite reflection group with multiplication table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct ReflectionGroup<S: Scalar> {
    elements: Vec<DenseMatrix<S>>,
    lookup: HashMap<Vec<S::Key>, usize>,
    words: Vec<Vec<usize>>,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    root_reflection: Vec<usize>,
    simple_reflection: Vec<usize>,
    minus_identity: Option<usize>,
}

fn matrix_key<S: Scalar>(m: &DenseMatrix<S>) -> Vec<S::Key> {
    (0..m.nrows()).flat_map(|r| m.row(r).iter().map(S::key).collect::<Vec<_>>()).collect()
}

impl<S: Scalar> ReflectionGroup<S> {
    /// Breadth-first closure under right multiplication by simple reflections.
    pub fn enumerate(rs: &RootSystem<S>, bound: usize) -> Result<Self> {
        let n = rs.dim();
        let gens: Vec<DenseMatrix<S>> = rs.simple_roots().iter().map(|&k| rs.reflection(k)).collect();
        let mut elements = vec![DenseMatrix::identity(n)];
        let mut lookup = HashMap::new();
        lookup.insert(matrix_key(&elements[0]), 0);
        let mut words = vec![Vec::new()];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (s, g) in gens.iter().enumerate() {
                let m = elements[w].mul(g);
                let key = matrix_key(&m);
                let idx = match lookup.get(&key) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len();
                        if i >= bound {
                            return Err(Error::GroupTooLarge { bound });
                        }
                        let mut word = words[w].clone();
                        word.push(s);
                        elements.push(m);
                        words.push(word);
                        lookup.insert(key, i);
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx);
            }
            if right.len() <= w {
                right.resize(w + 1, Vec::new());
            }
            right[w] = row;
        }
        let order = elements.len();
        let mut mult = vec![0usize; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = words[b].iter().fold(a, |acc, &s| right[acc][s]);
            }
        }
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| mult[a * order + b] == 0).expect("group element has an inverse"))
            .collect();
        let find = |m: &DenseMatrix<S>| lookup.get(&matrix_key(m)).copied();
        let root_reflection = (0..rs.num_roots())
            .map(|k| find(&rs.reflection(k)).ok_or_else(|| Error::Internal("reflection missing from group".into())))
            .collect::<Result<Vec<_>>>()?;
        let simple_reflection = rs.simple_roots().iter().map(|&k| root_reflection[k]).collect();
        let minus = DenseMatrix::identity(n).scale(&S::one().neg());
        let minus_identity = find(&minus);
        Ok(Self { elements, lookup, words, mult, inverse, root_reflection, simple_reflection, minus_identity })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, w: usize) -> &DenseMatrix<S> {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[DenseMatrix<S>] {
        &self.elements
    }

    pub fn index_of(&self, m: &DenseMatrix<S>) -> Option<usize> {
        self.lookup.get(&matrix_key(m)).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Word in the simple reflections (indices into the simple-root list).
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    /// Group index of s_α for the k-th positive root.
    pub fn reflection_index(&self, k: usize) -> usize {
        self.root_reflection[k]
    }

    pub fn simple_reflection_indices(&self) -> &[usize] {
        &self.simple_reflection
    }

    pub fn minus_identity(&self) -> Option<usize> {
        self.minus_identity
    }

    /// Whether −I lies in W (equivalently w₀ = −I).
    pub fn longest_element_is_minus_id(&self) -> bool {
        self.minus_identity.is_some()
    }

    pub fn element_order(&self, w: usize) -> usize {
        let mut acc = w;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, w);
            k += 1;
        }
        k
    }

    /// Elements acting trivially on ∧²𝔥, found by testing the induced action
    /// on the basis e_i ∧ e_j.
    pub fn wedge2_trivial_elements(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| {
                let m = &self.elements[w];
                let n = m.nrows();
                (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        (0..n).all(|k| {
                            (k + 1..n).all(|l| {
                                let v = m[(k, i)].mul(&m[(l, j)]).sub(&m[(l, i)].mul(&m[(k, j)]));
                                let expect = if (k, l) == (i, j) { S::one() } else { S::zero() };
                                v.sub(&expect).is_zero()
                            })
                        })
                    })
                })
            })
            .collect()
    }
}

/// Real parameter function, constant on orbits of roots.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamFunction {
    values: Vec<Rational>,
}

impl ParamFunction {
    pub fn uniform<S: Scalar>(rs: &RootSystem<S>, c: Rational) -> Self {
        Self { values: vec![c; rs.num_orbits()] }
    }

    pub fn zero<S: Scalar>(rs: &RootSystem<S>) -> Self {
        Self::uniform(rs, Rational::ZERO)
    }

    /// Per-orbit values keyed by orbit label or alias; every orbit must be set.
    pub fn from_labels<S: Scalar>(rs: &RootSystem<S>, entries: &[(String, Rational)]) -> Result<Self> {
        let mut values: Vec<Option<Rational>> = vec![None; rs.num_orbits()];
        for (label, v) in entries {
            let o = rs.orbit_by_label(label).ok_or_else(|| {
                let mut known: Vec<String> = rs.orbit_labels().to_vec();
                known.extend(rs.orbit_aliases().into_iter().map(|(a, _)| a));
                Error::Parameter(format!("unknown orbit {label:?}; known: {}", known.join(", ")))
            })?;
            values[o] = Some(v.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(o, v)| v.ok_or_else(|| Error::Parameter(format!("no value for orbit {}", rs.orbit_labels()[o]))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { values })
    }

    pub fn orbit_value(&self, o: usize) -> &Rational {
        &self.values[o]
    }

    pub fn root_value<S: Scalar>(&self, rs: &RootSystem<S>, k: usize) -> &Rational {
        &self.values[rs.orbit_of(k)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Rational::is_zero)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// "c" for a single orbit, otherwise "label=c;label=c".
    pub fn describe<S: Scalar>(&self, rs: &RootSystem<S>) -> String {
        if self.values.len() == 1 {
            return self.values[0].to_string();
        }
        let aliases = rs.orbit_aliases();
        (0..self.values.len())
            .map(|o| {
                let name = aliases
                    .iter()
                    .find(|(_, k)| *k == o)
                    .map(|(a, _)| a.clone())
                    .unwrap_or_else(|| rs.orbit_labels()[o].clone());
                format!("{name}={}", self.values[o])
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    (0..n).map(|k| if k == i { S::one() } else { S::zero() }).collect()
}

fn combo<S: Scalar>(n: usize, i: usize, j: usize, sign: i64) -> Vec<S> {
    let mut v = unit::<S>(n, i);
    v[j] = S::from_i64(sign);
    v
}

fn type_a<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| combo(n, i, j, -1))).collect()
}

fn type_d<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| [combo(n, i, j, -1), combo(n, i, j, 1)])).collect()
}

fn type_b<S: Scalar>(n: usize) -> Vec<Vec<S>> {
    let mut r = type_d(n);
    r.extend((0..n).map(|i| unit(n, i)));
    r
}

fn float_roots<S: Scalar>(name: &str, roots: Vec<Vec<f64>>) -> Result<Vec<Vec<S>>> {
    roots
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| S::from_f64(x).ok_or_else(|| Error::ExactUnsupported(format!("root system {name}"))))
                .collect()
        })
        .collect()
}

fn dihedral(m: usize) -> Vec<Vec<f64>> {
    let pi = std::f64::consts::PI;
    (0..m)
        .map(|k| {
            let t = pi / 2.0 + k as f64 * pi / m as f64;
            vec![t.cos(), t.sin()]
        })
        .collect()
}

fn g2() -> Vec<Vec<f64>> {
    let pi = std::f64::consts::PI;
    let s3 = 3f64.sqrt();
    (0..6)
        .map(|k| {
            let t = k as f64 * pi / 6.0;
            let len = if k % 2 == 0 { 1.0 } else { s3 };
            vec![len * t.cos(), len * t.sin()]
        })
        .collect()
}

fn h3() -> Vec<Vec<f64>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut out = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]];
    for s1 in [1.0, -1.0] {
        for s2 in [1.0, -1.0] {
            let base = [phi / 2.0, s1 * 0.5, s2 / (2.0 * phi)];
            for shift in 0..3 {
                out.push((0..3).map(|i| base[(i + 3 - shift) % 3]).collect());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactScalar, FloatScalar};

    type E = ExactScalar;

    fn group(name: &str) -> (RootSystem<E>, ReflectionGroup<E>) {
        let rs = RootSystem::named(name).unwrap();
        let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
        (rs, g)
    }

    #[test]
    fn reflection_examples() {
        let rs = RootSystem::<E>::named("S2").unwrap();
        let s = rs.reflection(0);
        let swap = DenseMatrix::from_rows(vec![vec![E::zero(), E::one()], vec![E::one(), E::zero()]]);
        assert_eq!(s, swap);
        let b2 = RootSystem::<E>::named("B2").unwrap();
        let k = b2.locate(&[E::one(), E::zero()]).unwrap().0;
        let m = b2.reflection(k);
        assert_eq!(m, DenseMatrix::from_rows(vec![vec![E::integer(-1), E::zero()], vec![E::zero(), E::one()]]));
        assert_eq!(m.mul(&m), DenseMatrix::identity(2));
        assert_eq!(m.determinant(), E::integer(-1));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group("S3").1.order(), 6);
        assert_eq!(group("B2").1.order(), 8);
        assert_eq!(group("S4").1.order(), 24);
        assert_eq!(group("B3").1.order(), 48);
        assert_eq!(group("D4").1.order(), 192);
        assert_eq!(group("I2(4)").1.order(), 8);
    }

    #[test]
    fn bound_is_reported() {
        let rs = RootSystem::<E>::named("S4").unwrap();
        let err = ReflectionGroup::enumerate(&rs, 10).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { bound: 10 });
        assert!(err.to_string().contains("10"));
    }

    #[test]
    fn longest_element() {
        assert!(group("B2").1.longest_element_is_minus_id());
        assert!(!group("S3").1.longest_element_is_minus_id());
        assert!(group("B1").1.longest_element_is_minus_id());
        let a1 = RootSystem::<E>::from_roots("A1", vec![vec![E::one()]], None).unwrap();
        assert!(ReflectionGroup::enumerate(&a1, 10).unwrap().longest_element_is_minus_id());
    }

    #[test]
    fn wedge2_trivial() {
        // For n = 2 the action on the line ∧²𝔥 is the determinant, so all
        // rotations act trivially; from n = 3 on only ±I do.
        let (_, g) = group("B2");
        let t = g.wedge2_trivial_elements();
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|&w| g.element(w).determinant() == E::one()));
        assert!(t.contains(&g.minus_identity().unwrap()));
        let (_, g) = group("B3");
        let mut t = g.wedge2_trivial_elements();
        t.sort();
        assert_eq!(t, vec![0, g.minus_identity().unwrap()]);
        assert_eq!(group("S3").1.wedge2_trivial_elements(), vec![0]);
        assert_eq!(group("S4").1.wedge2_trivial_elements(), vec![0]);
    }

    #[test]
    fn pairing() {
        for name in ["S3", "B2"] {
            let rs = RootSystem::<E>::named(name).unwrap();
            assert!(pairing_check(rs.roots(), rs.coroots()).all_passed());
            let mut bad = rs.coroots().to_vec();
            bad[0] = bad[0].iter().map(|x| x.mul(&E::integer(2))).collect();
            assert!(!pairing_check(rs.roots(), &bad).all_passed());
        }
    }

    #[test]
    fn orbits_and_simple_roots() {
        let rs = RootSystem::<E>::named("B2").unwrap();
        assert_eq!(rs.num_orbits(), 2);
        assert_eq!(rs.simple_roots().len(), 2);
        let short = rs.orbit_by_label("short").unwrap();
        let k = rs.locate(&[E::one(), E::zero()]).unwrap().0;
        assert_eq!(rs.orbit_of(k), short);
        let s4 = RootSystem::<E>::named("S4").unwrap();
        assert_eq!(s4.num_orbits(), 1);
        assert_eq!(s4.simple_roots().len(), 3);
        assert_eq!(s4.orbit_by_label("all"), Some(0));
    }

    #[test]
    fn orthogonality_and_orbit_invariance() {
        for name in ["S3", "S4", "B2", "B3"] {
            let (rs, g) = group(name);
            for w in g.elements() {
                assert_eq!(w.transpose().mul(w), DenseMatrix::identity(rs.dim()));
                for k in 0..rs.num_roots() {
                    let img: Vec<E> = (0..rs.dim()).map(|i| dot(w.row(i), rs.root(k))).collect();
                    let (j, _) = rs.locate(&img).unwrap();
                    assert_eq!(rs.orbit_of(j), rs.orbit_of(k));
                }
            }
        }
    }

    #[test]
    fn float_only_types() {
        assert!(matches!(RootSystem::<E>::named("H3"), Err(Error::ExactUnsupported(_))));
        let h3 = RootSystem::<FloatScalar>::named("H3").unwrap();
        assert_eq!(h3.num_roots(), 15);
        assert_eq!(ReflectionGroup::enumerate(&h3, DEFAULT_GROUP_BOUND).unwrap().order(), 120);
        let g2 = RootSystem::<FloatScalar>::named("G2").unwrap();
        assert_eq!(ReflectionGroup::enumerate(&g2, DEFAULT_GROUP_BOUND).unwrap().order(), 12);
        assert_eq!(g2.orbit_aliases().len(), 2);
        let i5 = RootSystem::<FloatScalar>::named("I2(5)").unwrap();
        assert_eq!(ReflectionGroup::enumerate(&i5, DEFAULT_GROUP_BOUND).unwrap().order(), 10);
    }

    #[test]
    fn parameter_function_labels() {
        let rs = RootSystem::<E>::named("B2").unwrap();
        let c = ParamFunction::from_labels(
            &rs,
            &[("short".into(), Rational::new(1, 3).unwrap()), ("long".into(), Rational::new(1, 5).unwrap())],
        )
        .unwrap();
        let k = rs.locate(&[E::one(), E::zero()]).unwrap().0;
        assert_eq!(c.root_value(&rs, k), &Rational::new(1, 3).unwrap());
        assert!(ParamFunction::from_labels(&rs, &[("short".into(), Rational::ONE)]).is_err());
        assert!(ParamFunction::from_labels(&rs, &[("medium".into(), Rational::ONE)]).is_err());
    }
}
