use amadirac::ama::AmaContext;
use amadirac::dirac::{
    basis_independence_check, c2_expansion_check, central_character_check, dirac_c_identities, dirac_cohomology,
    dirac_square_check, harmonic_slice, nonzero_cohomology_search, scasimir_check, unitarity_and_spectrum,
    vogan_witness_check, DiracContext,
};
use amadirac::dunklpoly::Tau;
use amadirac::pincover::named_admissible;
use amadirac::report::Report;
use amadirac::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use amadirac::scalar::{ExactScalar as E, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn build(name: &str, pc: impl Fn(&RootSystem<E>) -> ParamFunction, tau: &str, n: usize) -> DiracContext<E> {
    let rs = RootSystem::<E>::named(name).unwrap();
    let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
    let c = pc(&rs);
    let t = Tau::named(tau, &g).unwrap();
    DiracContext::build(AmaContext::build(rs, g, c, t, n).unwrap()).unwrap()
}

fn ctx(name: &str, c: Rational, tau: &str, n: usize) -> DiracContext<E> {
    build(name, |rs| ParamFunction::uniform(rs, c.clone()), tau, n)
}

fn admissible(d: &DiracContext<E>, name: &str) -> amadirac::pincover::HatElement<E> {
    let m = d.module();
    named_admissible(name, m.root_system(), d.pin(), m.param()).unwrap()
}

#[track_caller]
fn assert_passed(rep: &Report) {
    let bad: Vec<_> = rep.failures().map(|r| format!("{}: {}", r.check_id, r.witness)).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn square_chain_rank_two() {
    assert_passed(&dirac_square_check(&ctx("S2", Rational::ZERO, "trivial", 4)));
}

#[test]
fn square_chain_s3() {
    assert_passed(&dirac_square_check(&ctx("S3", q(1, 2), "trivial", 4)));
    assert_passed(&dirac_square_check(&ctx("S3", q(-1, 3), "sign", 3)));
}

#[test]
fn square_chain_b2_unequal_parameters() {
    let d = build(
        "B2",
        |rs| ParamFunction::from_labels(rs, &[("short".into(), q(1, 3)), ("long".into(), q(1, 5))]).unwrap(),
        "reflection",
        4,
    );
    assert_passed(&dirac_square_check(&d));
    assert_passed(&scasimir_check(&d));
}

#[test]
fn basis_independence() {
    assert_passed(&basis_independence_check(&ctx("S3", q(1, 2), "trivial", 3)));
    assert_passed(&basis_independence_check(&ctx("B2", q(1, 3), "reflection", 3)));
}

#[test]
fn scasimir_identities() {
    assert_passed(&scasimir_check(&ctx("S3", q(1, 2), "trivial", 4)));
    assert_passed(&scasimir_check(&ctx("S2", q(-1, 3), "trivial", 4)));
}

#[test]
fn family_identities_and_vogan() {
    let d = ctx("S3", q(1, 2), "trivial", 3);
    for name in ["zero", "C2", "jm:e1"] {
        let c = admissible(&d, name);
        let dop = d.dirac_c(&c).unwrap();
        assert_passed(&dirac_c_identities(&d, &dop));
        assert_passed(&vogan_witness_check(&d, &dop, 2));
    }
    assert_passed(&c2_expansion_check(&d, &admissible(&d, "C2")));
}

#[test]
fn zero_family_eigenvalues_in_the_plane() {
    // Classical harmonics in two variables: 𝔇₀² = (λ−1)² with λ = m + 1.
    let d = ctx("S2", Rational::ZERO, "trivial", 4);
    let dop = d.dirac_c(&admissible(&d, "zero")).unwrap();
    for m in 1..=3 {
        let (rep, info) = unitarity_and_spectrum(&d, &dop, m).unwrap();
        assert_passed(&rep);
        assert!(info.unitary);
        assert_eq!(info.eigenvalues.len(), 4);
        for e in &info.eigenvalues {
            assert!((e.abs() - m as f64).abs() < 1e-9, "{e} at m = {m}");
        }
    }
}

#[test]
fn slice_scalar_at_one_sixth() {
    let d = ctx("S3", q(1, 6), "trivial", 3);
    let dop = d.dirac_c(&admissible(&d, "C2")).unwrap();
    let (rep, info) = unitarity_and_spectrum(&d, &dop, 1).unwrap();
    assert_passed(&rep);
    assert!(info.unitary);
    // Z acts on the trivial type by c·|R⁺| = 1/2, so λ = 1 + 3/2 + 1/2.
    assert_eq!(info.lambda, E::integer(3));
    assert_eq!(info.chi, E::integer(3));
}

#[test]
fn cohomology_on_unitary_slices() {
    let d = ctx("S3", q(1, 6), "trivial", 3);
    for name in ["zero", "C2"] {
        let dop = d.dirac_c(&admissible(&d, name)).unwrap();
        for m in 0..=2 {
            let coh = dirac_cohomology(&d, &dop, m).unwrap();
            assert_eq!(coh.dim_ker_cap_im, 0, "{name} m = {m}");
            assert_passed(&central_character_check(&d, &dop, m));
        }
    }
}

#[test]
fn slice_of_tensor_has_spinor_multiplicity() {
    let d = ctx("S3", Rational::ZERO, "trivial", 3);
    let s = harmonic_slice(&d, 2).unwrap();
    assert_eq!(s.dim(), s.dim_x() * d.spin().dim());
}

#[test]
fn search_finds_cohomology() {
    let d = ctx("S3", q(1, 6), "trivial", 3);
    let c2 = admissible(&d, "C2");
    for m in [1, 2] {
        let out = nonzero_cohomology_search(&d, m, &c2).unwrap();
        assert!(out.dim_h > 0, "m = {m}");
        if let Some(coh) = &out.cohomology {
            assert_eq!(coh.dim_h, out.dim_h);
        }
    }
}

#[test]
fn search_rejects_zero_element() {
    let d = ctx("S3", q(1, 6), "trivial", 3);
    assert!(nonzero_cohomology_search(&d, 1, &admissible(&d, "zero")).is_err());
}
