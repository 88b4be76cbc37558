use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rootsys::{ParamFunction, ReflectionGroup, RootSystem};
use crate::scalar::Scalar;

/// Finite-dimensional representation of W with an invariant Hermitian form.
#[derive(Clone, Debug)]
pub struct Tau<S: Scalar> {
    name: String,
    dim: usize,
    matrices: Vec<DenseMatrix<S>>,
    form: DenseMatrix<S>,
}

impl<S: Scalar> Tau<S> {
    /// "trivial", "sign" or "reflection".
    pub fn named(name: &str, group: &ReflectionGroup<S>) -> Result<Self> {
        match name {
            "trivial" => Ok(Self::trivial(group)),
            "sign" => Ok(Self::sign(group)),
            "reflection" => Ok(Self::reflection(group)),
            _ => Err(Error::Representation(format!("unknown representation {name:?}"))),
        }
    }

    pub fn trivial(group: &ReflectionGroup<S>) -> Self {
        Self {
            name: "trivial".into(),
            dim: 1,
            matrices: vec![DenseMatrix::identity(1); group.order()],
            form: DenseMatrix::identity(1),
        }
    }

    pub fn sign(group: &ReflectionGroup<S>) -> Self {
        let matrices = group.elements().iter().map(|w| DenseMatrix::from_rows(vec![vec![w.determinant()]])).collect();
        Self { name: "sign".into(), dim: 1, matrices, form: DenseMatrix::identity(1) }
    }

    /// The defining representation on the ambient space.
    pub fn reflection(group: &ReflectionGroup<S>) -> Self {
        let n = group.element(0).nrows();
        Self { name: "reflection".into(), dim: n, matrices: group.elements().to_vec(), form: DenseMatrix::identity(n) }
    }

    /// Representation given by matrices for the simple reflections (in the
    /// order of the root system's simple roots) and an invariant form.
    pub fn from_generators(
        name: &str,
        group: &ReflectionGroup<S>,
        generators: Vec<DenseMatrix<S>>,
        form: DenseMatrix<S>,
    ) -> Result<Self> {
        let simple = group.simple_reflection_indices();
        if generators.len() != simple.len() {
            return Err(Error::Representation(format!(
                "expected {} generator matrices, got {}",
                simple.len(),
                generators.len()
            )));
        }
        let dim = form.nrows();
        if !form.is_square() || generators.iter().any(|g| g.nrows() != dim || g.ncols() != dim) {
            return Err(Error::Representation("matrix sizes disagree".into()));
        }
        let matrices: Vec<DenseMatrix<S>> = (0..group.order())
            .map(|w| group.word(w).iter().fold(DenseMatrix::identity(dim), |acc, &s| acc.mul(&generators[s])))
            .collect();
        for w in 0..group.order() {
            for (k, &s) in simple.iter().enumerate() {
                if !matrices[w].mul(&generators[k]).same_as(&matrices[group.mul(w, s)]) {
                    return Err(Error::Representation("generator matrices do not satisfy the group relations".into()));
                }
            }
        }
        if !form.adjoint().same_as(&form) {
            return Err(Error::Representation("form is not Hermitian".into()));
        }
        if generators.iter().any(|g| !g.adjoint().mul(&form).mul(g).same_as(&form)) {
            return Err(Error::Representation("form is not invariant".into()));
        }
        let minors = form.leading_principal_minors();
        if minors.len() < dim || minors.iter().any(|m| m.real_sign() != Some(1)) {
            return Err(Error::Representation("form is not positive definite".into()));
        }
        Ok(Self { name: name.to_string(), dim, matrices, form })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, w: usize) -> &DenseMatrix<S> {
        &self.matrices[w]
    }

    pub fn form(&self) -> &DenseMatrix<S> {
        &self.form
    }

    /// N_c(τ): the scalar by which Z = Σ c_α s_α acts, if it is a scalar.
    pub fn z_scalar(&self, rs: &RootSystem<S>, group: &ReflectionGroup<S>, c: &ParamFunction) -> Result<S> {
        let mut z = DenseMatrix::zeros(self.dim, self.dim);
        for k in 0..rs.num_roots() {
            let cv = S::from_rational(c.root_value(rs, k));
            z = z.add(&self.matrices[group.reflection_index(k)].scale(&cv));
        }
        scalar_of(&z).ok_or_else(|| {
            Error::Representation(format!("Z does not act by a scalar on the {} representation", self.name))
        })
    }

    /// Scalar by which −I acts, when −I ∈ W and it acts by a scalar.
    pub fn minus_identity_scalar(&self, group: &ReflectionGroup<S>) -> Option<S> {
        group.minus_identity().and_then(|m| scalar_of(&self.matrices[m]))
    }
}

/// If `m` is a multiple of the identity, that multiple.
pub fn scalar_of<S: Scalar>(m: &DenseMatrix<S>) -> Option<S> {
    if !m.is_square() {
        return None;
    }
    if m.nrows() == 0 {
        return Some(S::zero());
    }
    let s = m[(0, 0)].clone();
    m.same_as(&DenseMatrix::identity(m.nrows()).scale(&s)).then_some(s)
}
