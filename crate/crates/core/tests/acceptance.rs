//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::process::ExitCode;
use std::time::Instant;

use amadirac::ama::{ama_relations_check, centralizer_check, msquared_identities_check, AmaContext};
use amadirac::clifford::{clifford_relations_check, SpinorRep};
use amadirac::dirac::{
    basis_independence_check, central_character_check, dirac_cohomology, dirac_square_check, nonzero_cohomology_search,
    scasimir_check, unitarity_and_spectrum, vogan_witness_check, DiracContext,
};
use amadirac::dunklpoly::{harmonic_subspace, laplacian, rca_relation_check, Tau};
use amadirac::pincover::{admissible_checks, jm_checks, named_admissible, pin_checks, PinCover};
use amadirac::report::{Report, Status};
use amadirac::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use amadirac::scalar::{ExactScalar as E, Rational};
use amadirac::suite::{run_verify, Config};

/// Smallest eigenvalue of D_C² that still counts as nonnegative.
const SQUARE_TOL: f64 = 1e-9;

const GROUPS: [(&str, usize); 4] = [("S2", 6), ("S3", 5), ("B2", 5), ("S4", 3)];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn c_grid() -> [Rational; 3] {
    [Rational::ZERO, q(1, 2), q(-1, 3)]
}

fn ama(name: &str, c: &Rational, tau: &str, n: usize) -> AmaContext<E> {
    let rs = RootSystem::<E>::named(name).unwrap();
    let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
    let pc = ParamFunction::uniform(&rs, c.clone());
    let t = Tau::named(tau, &g).unwrap();
    AmaContext::build(rs, g, pc, t, n).unwrap()
}

fn dirac(name: &str, c: &Rational, tau: &str, n: usize) -> DiracContext<E> {
    DiracContext::build(ama(name, c, tau, n)).unwrap()
}

type Criterion = (&'static str, fn() -> Outcome);

#[derive(Default)]
struct Outcome {
    problems: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn report(&mut self, tag: &str, rep: &Report, ids: &[&str]) {
        for r in &rep.records {
            if !ids.is_empty() && !ids.iter().any(|id| r.check_id == *id) {
                continue;
            }
            if r.status == Status::Fail {
                self.problems.push(format!("{tag}: {} ({})", r.check_id, r.witness));
            }
        }
        for id in ids {
            if rep.find(id).is_none() {
                self.problems.push(format!("{tag}: {id} not recorded"));
            }
        }
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(msg());
        }
    }
}

fn rca_relations() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            for tau in ["trivial", "sign"] {
                let a = ama(g, &c, tau, n);
                o.report(&format!("{g} c={c} {tau}"), &rca_relation_check(a.module(), n), &[]);
            }
        }
    }
    o
}

fn ama_relations() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            let a = ama(g, &c, "trivial", n);
            let tag = format!("{g} c={c}");
            o.report(
                &tag,
                &ama_relations_check(&a),
                &["ama.commutation_relation", "ama.crossing_relation", "ama.s_symmetric"],
            );
            o.report(&tag, &msquared_identities_check(&a), &["ama.trace_s"]);
        }
    }
    o
}

fn msquared() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            let rep = msquared_identities_check(&ama(g, &c, "trivial", n));
            o.report(&format!("{g} c={c}"), &rep, &["ama.msq_identity", "ama.casimir_msq"]);
        }
    }
    o
}

fn centralizer() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            o.report(&format!("{g} c={c}"), &centralizer_check(&ama(g, &c, "trivial", n)), &["ama.centralizer_m"]);
        }
    }
    o
}

fn clifford_pin() -> Outcome {
    let mut o = Outcome::default();
    for n in 1..=4 {
        let spin = SpinorRep::<E>::new(n).unwrap();
        if let Some(w) = clifford_relations_check(&spin) {
            o.problems.push(format!("n={n}: {w}"));
        }
    }
    for (g, _) in GROUPS {
        let rs = RootSystem::<E>::named(g).unwrap();
        let group = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
        let order = group.order();
        let pin = PinCover::new(&rs, group).unwrap();
        let rep = pin_checks(&rs, &pin);
        o.report(g, &rep, &[]);
        o.notes.push(format!("{g}: |W| = {order}"));
    }
    o
}

fn dirac_square() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            let rep = dirac_square_check(&dirac(g, &c, "trivial", n));
            o.report(
                &format!("{g} c={c}"),
                &rep,
                &["dirac.sigma0", "dirac.sigma1", "dirac.sigma2", "dirac.square", "dirac.d0_square"],
            );
        }
    }
    o
}

fn basis_independence() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        let rep = basis_independence_check(&dirac(g, &q(1, 2), "trivial", n.min(3)));
        o.report(g, &rep, &["dirac.basis_independence"]);
    }
    o
}

fn scasimir() -> Outcome {
    let mut o = Outcome::default();
    for (g, n) in GROUPS {
        for c in c_grid() {
            let rep = scasimir_check(&dirac(g, &c, "trivial", n));
            o.report(&format!("{g} c={c}"), &rep, &["scasimir.dirac_bracket", "scasimir.sum"]);
        }
    }
    o
}

fn vogan() -> Outcome {
    let mut o = Outcome::default();
    for c in [q(1, 2), q(1, 6)] {
        let d = dirac("S3", &c, "trivial", 3);
        for name in ["zero", "C2", "jm:e1"] {
            let m = d.module();
            let elem = named_admissible(name, m.root_system(), d.pin(), m.param()).unwrap();
            let dop = d.dirac_c(&elem).unwrap();
            o.report(
                &format!("S3 c={c} C={name}"),
                &vogan_witness_check(&d, &dop, 2),
                &["vogan.witness", "vogan.a1_commutes"],
            );
        }
    }
    o
}

fn admissibility() -> Outcome {
    let mut o = Outcome::default();
    for (g, _) in GROUPS {
        for c in [q(1, 2), q(-1, 3)] {
            let rs = RootSystem::<E>::named(g).unwrap();
            let group = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
            let pin = PinCover::new(&rs, group).unwrap();
            let pc = ParamFunction::uniform(&rs, c.clone());
            let rep = admissible_checks(&rs, &pin, &pc);
            o.report(&format!("{g} c={c}"), &rep, &["pincover.c2_admissible", "pincover.rho_c2_expansion"]);
        }
    }
    for g in ["S3", "S4"] {
        let rs = RootSystem::<E>::named(g).unwrap();
        let group = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
        let pin = PinCover::new(&rs, group).unwrap();
        o.report(g, &jm_checks(&rs, &pin), &["pincover.jm_squares_central", "pincover.jm_squares_star_fixed"]);
    }
    o
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn harmonic_unitary() -> Outcome {
    let mut o = Outcome::default();
    for (g, n_trunc) in GROUPS {
        let a = ama(g, &Rational::ZERO, "trivial", n_trunc);
        let n = a.n() as i64;
        let lap = laplacian(a.module());
        for m in 0..=n_trunc {
            let got = harmonic_subspace(a.module(), &lap, m).unwrap().dim() as i64;
            let want = binomial(m as i64 + n - 1, n - 1) - binomial(m as i64 + n - 3, n - 1);
            o.require(got == want, || format!("{g}: dim X_0(triv)_{m} = {got}, classical {want}"));
        }
    }
    let cases: [(&str, Rational, &str, usize); 6] = [
        ("S3", Rational::ZERO, "trivial", 3),
        ("S3", q(1, 6), "trivial", 3),
        ("S3", q(1, 6), "sign", 3),
        ("S2", q(1, 2), "trivial", 3),
        ("B2", q(1, 3), "reflection", 3),
        ("S4", q(1, 6), "trivial", 2),
    ];
    for (g, c, tau, n_trunc) in cases {
        let d = dirac(g, &c, tau, n_trunc);
        let m_ = d.module();
        for name in ["zero", "C2"] {
            let elem = named_admissible(name, m_.root_system(), d.pin(), m_.param()).unwrap();
            let dop = d.dirac_c(&elem).unwrap();
            for m in 0..=n_trunc {
                let tag = format!("{g} c={c} {tau} C={name} m={m}");
                match unitarity_and_spectrum(&d, &dop, m) {
                    Ok((rep, info)) => {
                        o.report(&tag, &rep, &["dirac.omega_scalar"]);
                        if g == "S3" && tau == "trivial" {
                            o.require(info.unitary, || format!("{tag}: Gram form not positive"));
                        }
                        if info.unitary {
                            o.report(&tag, &rep, &["dirac.self_adjoint"]);
                            let min = info.square_min.unwrap_or(0.0);
                            o.require(min >= -SQUARE_TOL, || format!("{tag}: min eig D_C² = {min:e}"));
                        }
                    }
                    Err(e) => o.problems.push(format!("{tag}: {e}")),
                }
            }
        }
    }
    o
}

fn cohomology() -> Outcome {
    let mut o = Outcome::default();
    for (g, c, n_trunc) in [("S3", q(1, 6), 3), ("S3", Rational::ZERO, 3), ("B2", q(1, 3), 3)] {
        let d = dirac(g, &c, "trivial", n_trunc);
        let m_ = d.module();
        for name in ["zero", "C2"] {
            let elem = named_admissible(name, m_.root_system(), d.pin(), m_.param()).unwrap();
            let dop = d.dirac_c(&elem).unwrap();
            for m in 0..=n_trunc {
                let tag = format!("{g} c={c} C={name} m={m}");
                let unitary = unitarity_and_spectrum(&d, &dop, m).map(|(_, i)| i.unitary).unwrap_or(false);
                let coh = dirac_cohomology(&d, &dop, m).unwrap();
                if unitary {
                    o.require(coh.dim_ker_cap_im == 0, || format!("{tag}: dim(ker ∩ im) = {}", coh.dim_ker_cap_im));
                }
                o.report(&tag, &central_character_check(&d, &dop, m), &["dirac.central_character_restriction"]);
            }
        }
    }
    let d = dirac("S3", &q(1, 6), "trivial", 3);
    let m_ = d.module();
    let c2 = named_admissible("C2", m_.root_system(), d.pin(), m_.param()).unwrap();
    for m in [1, 2] {
        match nonzero_cohomology_search(&d, m, &c2) {
            Ok(out) => {
                o.require(out.dim_h > 0, || format!("S3 m={m}: search returned dim H = 0"));
                let how = if out.exact { "exact kernel" } else { "float kernel" };
                o.notes.push(format!("m={m}: dim H = {}, scale {:.6}, {how}", out.dim_h, out.scale));
            }
            Err(e) => o.problems.push(format!("S3 m={m}: search failed: {e}")),
        }
    }
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::default();
    let cfg = Config::from_json(r#"{"group": "S3", "c": "1/2", "max_degree": 3}"#).unwrap();
    let a = run_verify(&cfg).unwrap().to_json();
    let b = run_verify(&cfg).unwrap().to_json();
    o.require(a == b, || "two verify runs produced different reports".into());
    o.notes.push(format!("{} bytes", a.len()));
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("RCA relations", rca_relations),
        ("AMA relations and trace of S", ama_relations),
        ("M² identity and Casimir", msquared),
        ("centralizer of the sl(2) triple", centralizer),
        ("Clifford relations and Pin cover", clifford_pin),
        ("Dirac square chain", dirac_square),
        ("basis independence", basis_independence),
        ("SCasimir identities", scasimir),
        ("Vogan witness", vogan),
        ("admissible elements", admissibility),
        ("harmonic slices and unitarity", harmonic_unitary),
        ("Dirac cohomology", cohomology),
        ("report determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        let notes = if out.notes.is_empty() { String::new() } else { format!(" [{}]", out.notes.join("; ")) };
        if out.problems.is_empty() {
            println!("PASS {:>2} {title} ({secs:.1}s){notes}", k + 1);
        } else {
            failed += 1;
            println!("FAIL {:>2} {title} ({secs:.1}s){notes}", k + 1);
            for p in &out.problems {
                println!("       {p}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
