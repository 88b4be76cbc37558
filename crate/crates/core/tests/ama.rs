use amadirac::ama::{ama_relations_check, centralizer_check, msquared_identities_check, AmaContext};
use amadirac::dunklpoly::{harmonic_subspace, laplacian, Tau};
use amadirac::linalg::DenseMatrix;
use amadirac::report::Status;
use amadirac::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use amadirac::scalar::{ExactScalar as E, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn ctx(name: &str, c: Rational, tau: &str, n: usize) -> AmaContext<E> {
    let rs = RootSystem::<E>::named(name).unwrap();
    let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
    let pc = ParamFunction::uniform(&rs, c);
    let t = Tau::named(tau, &g).unwrap();
    AmaContext::build(rs, g, pc, t, n).unwrap()
}

fn assert_scalar_block(m: &DenseMatrix<E>, s: &E) {
    assert_eq!(m, &DenseMatrix::identity(m.nrows()).scale(s));
}

#[test]
fn euler_in_rank_two() {
    let a = ctx("S2", Rational::ZERO, "trivial", 4);
    for m in 0..=4 {
        assert_scalar_block(&a.h().dense_block(m).unwrap(), &E::integer(m as i64 + 1));
    }
    assert!(a.z().check_zero(4).is_ok());
}

#[test]
fn z_on_constants() {
    let c = q(2, 7);
    let a = ctx("S3", c.clone(), "trivial", 2);
    assert_scalar_block(&a.z().dense_block(0).unwrap(), &E::rational(c).scale(&Rational::integer(3)));
}

#[test]
fn relations_hold() {
    assert!(ama_relations_check(&ctx("S3", q(1, 2), "trivial", 5)).all_passed());
    assert!(ama_relations_check(&ctx("B2", Rational::ZERO, "reflection", 3)).all_passed());
    assert!(ama_relations_check(&ctx("B2", q(1, 3), "sign", 3)).all_passed());
}

#[test]
fn flipped_s_fails() {
    let mut a = ctx("S3", q(1, 2), "trivial", 3);
    let flipped = a.s(0, 1).neg();
    a.replace_s(0, 1, flipped);
    let rep = ama_relations_check(&a);
    assert!(!rep.all_passed());
    assert_eq!(rep.find("ama.s_symmetric").unwrap().status, Status::Fail);
}

#[test]
fn centralizer() {
    assert!(centralizer_check(&ctx("S3", q(1, 3), "trivial", 4)).all_passed());
    assert!(centralizer_check(&ctx("S2", Rational::ZERO, "trivial", 4)).all_passed());
    let mut a = ctx("S3", q(1, 3), "trivial", 4);
    let broken = a.x(0).compose(a.y(1));
    a.replace_m(0, 1, broken);
    assert_eq!(centralizer_check(&a).find("ama.centralizer_m").unwrap().status, Status::Fail);
}

#[test]
fn msquared_identities() {
    let rep = msquared_identities_check(&ctx("S3", q(1, 2), "trivial", 5));
    assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    let rep = msquared_identities_check(&ctx("B2", q(-1, 4), "reflection", 3));
    assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    assert_eq!(rep.find("ama.minus_identity_central").unwrap().status, Status::Pass);
}

#[test]
fn casimir_on_classical_harmonics() {
    let a = ctx("S3", Rational::ZERO, "trivial", 4);
    let lap = laplacian(a.module());
    for m in 0..=4i64 {
        let h = harmonic_subspace(a.module(), &lap, m as usize).unwrap();
        let om = h.restrict(&a.omega().dense_block(m as usize).unwrap()).unwrap();
        // λ = m + 3/2, χ = λ(λ − 2) = (2m + 3)(2m − 1)/4
        let chi = E::rational(q((2 * m + 3) * (2 * m - 1), 4));
        assert_scalar_block(&om, &chi);
    }
}

#[test]
fn angular_hamiltonian_in_rank_four() {
    let a = ctx("S4", q(1, 2), "trivial", 2);
    let diff = a.omega().sub(&a.h_omega().scale(&E::integer(2)));
    assert!(diff.check_zero(2).is_ok());
}
