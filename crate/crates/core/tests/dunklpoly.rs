use amadirac::dunklpoly::{
    contravariant_form, dunkl_apply, harmonic_subspace, laplacian, operator_matrix, positivity_check, rca_check_with,
    rca_relation_check, s_terms, DunklModule, GradedOperator, Polynomial, Tau,
};
use amadirac::linalg::DenseMatrix;
use amadirac::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use amadirac::scalar::{ExactScalar as E, Rational, Scalar};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn module(name: &str, c: Rational, tau: &str, k: usize) -> DunklModule<E> {
    let rs = RootSystem::<E>::named(name).unwrap();
    let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
    let pc = ParamFunction::uniform(&rs, c);
    let t = Tau::named(tau, &g).unwrap();
    DunklModule::new(rs, g, pc, t, k).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Value of a group-algebra element on the constant 1 with τ trivial.
fn on_constant(terms: &[(usize, E)]) -> E {
    terms.iter().fold(E::zero(), |acc, (_, s)| acc.add(s))
}

#[test]
fn derivative_at_zero_parameter() {
    let rs = RootSystem::<E>::named("S2").unwrap();
    let c = ParamFunction::uniform(&rs, Rational::ZERO);
    let f = Polynomial::monomial(vec![2, 0], E::one());
    let d = dunkl_apply(&rs, &c, &[E::one(), E::zero()], &f).unwrap();
    assert_eq!(d, Polynomial::monomial(vec![1, 0], E::integer(2)));
}

#[test]
fn s2_first_dunkl_values_match_commutator() {
    let c = q(1, 3);
    let m = module("S2", c.clone(), "trivial", 3);
    let rs = m.root_system();
    let y1 = [E::one(), E::zero()];
    for j in 0..2 {
        let xj = Polynomial::variable(2, j);
        let d = dunkl_apply(rs, m.param(), &y1, &xj).unwrap();
        // [y1, xj]·1 = S_j1·1 since y1·1 = 0.
        let expected = on_constant(&s_terms(&m, j, 0));
        assert_eq!(d, Polynomial::constant(2, expected.clone()));
    }
    assert_eq!(on_constant(&s_terms(&m, 0, 0)), E::one().add(&E::from_rational(&c)));
    assert_eq!(on_constant(&s_terms(&m, 1, 0)), E::from_rational(&c).neg());
}

#[test]
fn matrices_agree_with_direct_dunkl() {
    let m = module("S3", q(2, 5), "trivial", 4);
    for i in 0..3 {
        let y = m.y(i);
        let mut v = vec![E::zero(); 3];
        v[i] = E::one();
        for d in 1..=4 {
            let block = y.block(d).unwrap();
            for a in 0..m.basis(d).len() {
                let f = Polynomial::monomial(m.basis(d).get(a).clone(), E::one());
                let direct = dunkl_apply(m.root_system(), m.param(), &v, &f).unwrap();
                let mut col = vec![E::zero(); m.dim(d)];
                col[a] = E::one();
                let got = m.polynomial_of(d - 1, &block.mul_vec(&col));
                assert_eq!(got, direct);
            }
        }
    }
}

#[test]
fn euler_operator_in_rank_one() {
    let m = module("B1", Rational::ZERO, "trivial", 4);
    let op = operator_matrix(&m, "x1 y1").unwrap();
    assert_eq!(op.dense_block(3).unwrap(), DenseMatrix::identity(1).scale(&E::integer(3)));
}

#[test]
fn reflection_letter_is_polynomial_action_tensor_tau() {
    let m = module("B2", q(1, 2), "reflection", 3);
    let op = operator_matrix(&m, "s1").unwrap();
    let w = m.group().reflection_index(0);
    let tm = m.tau().matrix(w).clone();
    for d in 0..=3 {
        let expected = m.polynomial_action(w, d).to_dense().kron(&tm);
        assert_eq!(op.dense_block(d).unwrap(), expected);
    }
}

#[test]
fn commutator_on_constants() {
    let c = q(1, 4);
    let m = module("S2", c.clone(), "trivial", 3);
    let op = operator_matrix(&m, "[y1, x1]").unwrap();
    let expected = E::one().add(&E::from_rational(&c));
    assert_eq!(op.dense_block(0).unwrap(), DenseMatrix::identity(1).scale(&expected));
}

#[test]
fn expression_errors() {
    let m = module("S2", q(1, 4), "trivial", 3);
    for bad in ["x3", "x1 +", "x1 + y1", "[x1 y1]", "q1", "s9"] {
        assert!(operator_matrix(&m, bad).is_err(), "{bad}");
    }
    let a = operator_matrix(&m, "2 x1 - x1*1/2 + (x2)^1").unwrap();
    let b = m.x(0).scale(&E::rational(q(3, 2))).add(&m.x(1));
    assert!(a.compare(&b, 2).is_ok());
}

#[test]
fn rca_relations_hold() {
    assert!(rca_relation_check(&module("S3", q(1, 2), "trivial", 6), 4).all_passed());
    assert!(rca_relation_check(&module("B2", Rational::ZERO, "reflection", 5), 3).all_passed());
    assert!(rca_relation_check(&module("B2", q(-2, 3), "sign", 5), 3).all_passed());
}

#[test]
fn perturbed_dunkl_operator_fails() {
    let m = module("S3", q(1, 2), "trivial", 6);
    let mut coeff = m.root_coefficients();
    coeff[0] = E::zero();
    let ys: Vec<_> = (0..3).map(|i| m.dunkl_with(&coeff, i)).collect();
    let rep = rca_check_with(&m, &ys, 3);
    assert!(!rep.all_passed());
    let f = rep.failures().next().unwrap();
    assert!(f.witness.contains("degree"), "{}", f.witness);
}

#[test]
fn harmonic_dimensions() {
    let m = module("S3", Rational::ZERO, "trivial", 5);
    let lap = laplacian(&m);
    assert_eq!(harmonic_subspace(&m, &lap, 0).unwrap().dim(), 1);
    assert_eq!(harmonic_subspace(&m, &lap, 1).unwrap().dim(), 3);
    assert_eq!(harmonic_subspace(&m, &lap, 2).unwrap().dim(), 5);
    for d in 2..=5 {
        let classical = binom(d + 2, 2) - binom(d, 2);
        assert_eq!(harmonic_subspace(&m, &lap, d).unwrap().dim(), classical);
    }
    let r = module("B2", q(1, 3), "reflection", 3);
    assert_eq!(harmonic_subspace(&r, &laplacian(&r), 0).unwrap().dim(), 2);
}

#[test]
fn contravariant_form_examples() {
    let m = module("S2", Rational::ZERO, "trivial", 3);
    let ys: Vec<_> = (0..2).map(|i| m.y(i)).collect();
    assert_eq!(contravariant_form(&m, &ys, 1).unwrap(), DenseMatrix::identity(2));
    assert_eq!(contravariant_form(&m, &ys, 0).unwrap(), DenseMatrix::identity(1));

    let c = q(1, 4);
    let m = module("S2", c.clone(), "trivial", 3);
    let ys: Vec<_> = (0..2).map(|i| m.y(i)).collect();
    let g = contravariant_form(&m, &ys, 1).unwrap();
    let cc = E::from_rational(&c);
    let a = E::one().add(&cc);
    let expected = DenseMatrix::from_rows(vec![vec![a.clone(), cc.neg()], vec![cc.neg(), a]]);
    assert_eq!(g, expected);
    assert!(positivity_check(&g));
    assert_eq!(g.leading_principal_minors(), vec![E::rational(q(5, 4)), E::rational(q(3, 2))]);
}

#[test]
fn positivity_examples() {
    assert!(positivity_check(&DenseMatrix::<E>::identity(3)));
    let bad = DenseMatrix::from_rows(vec![vec![E::integer(1), E::integer(2)], vec![E::integer(2), E::integer(1)]]);
    assert!(!positivity_check(&bad));
}

#[test]
fn form_adjointness() {
    let m = module("B2", q(1, 5), "reflection", 5);
    let ys: Vec<_> = (0..2).map(|i| m.y(i)).collect();
    let forms: Vec<_> = (0..=3).map(|d| contravariant_form(&m, &ys, d).unwrap()).collect();
    for i in 0..2 {
        let x = m.x(i);
        for d in 0..3 {
            let xb = x.dense_block(d).unwrap();
            let yb = ys[i].dense_block(d + 1).unwrap();
            assert_eq!(xb.adjoint().mul(&forms[d + 1]), forms[d].mul(&yb));
        }
    }
}

#[test]
fn dunkl_equivariance() {
    let m = module("B2", q(1, 3), "reflection", 4);
    let g = m.group();
    for &w in g.simple_reflection_indices() {
        let mat = g.element(w);
        let wop = m.group_element(w);
        let winv = m.group_element(g.inverse(w));
        for i in 0..2 {
            let lhs = wop.compose(&m.y(i)).compose(&winv);
            let rhs = m.y_vector(&mat.column(i));
            assert!(lhs.compare(&rhs, 4).is_ok());
        }
    }
}

fn small_c() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dunkl_operators_commute(c in small_c()) {
        let m = module("S3", c, "trivial", 4);
        let ys: Vec<GradedOperator<E>> = (0..3).map(|i| m.y(i)).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                prop_assert!(ys[i].commutator(&ys[j]).check_zero(4).is_ok());
            }
        }
    }

    #[test]
    fn contravariant_form_is_adjoint_pairing(c in small_c()) {
        let m = module("S3", c, "trivial", 4);
        let ys: Vec<_> = (0..3).map(|i| m.y(i)).collect();
        let g1 = contravariant_form(&m, &ys, 1).unwrap();
        let g2 = contravariant_form(&m, &ys, 2).unwrap();
        for i in 0..3 {
            let xb = m.x(i).dense_block(1).unwrap();
            prop_assert_eq!(xb.adjoint().mul(&g2), g1.mul(&ys[i].dense_block(2).unwrap()));
        }
    }
}
