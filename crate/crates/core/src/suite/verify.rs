use serde::Serialize;

use crate::ama::{ama_relations_check, centralizer_check, msquared_identities_check, AmaContext};
use crate::clifford::{clifford_relations_check, SpinorRep};
use crate::dirac::{
    basis_independence_check, c2_expansion_check, central_character_check, dirac_c_identities, dirac_cohomology,
    dirac_square_check, scasimir_check, unitarity_and_spectrum, vogan_witness_check, DiracContext, DiracOperator,
};
use crate::dunklpoly::rca_relation_check;
use crate::error::Result;
use crate::pincover::{admissible_checks, jm_checks, pin_checks, PinCover};
use crate::report::{CheckRecord, Report, Status};
use crate::rootsys::pairing_check;
use crate::scalar::{ExactScalar, FloatScalar, Scalar};

use super::config::{
    build_admissible, build_group, build_param, build_root_system, build_tau, default_admissible, Backend, Config,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub c: String,
    pub tau: String,
    pub max_degree: usize,
    pub backend: String,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| &s.records)
    }

    fn push(&mut self, suite: &str, rep: Report) {
        for r in &rep.records {
            self.summary.total += 1;
            match r.status {
                Status::Pass => self.summary.pass += 1,
                Status::Fail => self.summary.fail += 1,
                Status::Skipped => self.summary.skipped += 1,
            }
        }
        match self.suites.iter_mut().find(|s| s.suite == suite) {
            Some(s) => s.records.extend(rep.records),
            None => self.suites.push(SuiteReport { suite: suite.to_string(), records: rep.records }),
        }
    }
}

/// Prefixes every witness with a tag such as the admissible element name.
fn tagged(mut rep: Report, tag: &str) -> Report {
    for r in &mut rep.records {
        r.witness = format!("[{tag}] {}", r.witness);
    }
    rep
}

fn failed(check_id: &str, e: impl ToString) -> Report {
    let mut rep = Report::new();
    rep.fail(check_id, e.to_string());
    rep
}

/// Runs the requested suites. Construction errors (bad group, parameters,
/// representation) are returned as `Err`; failing checks end up in the report.
pub fn run_verify(cfg: &Config) -> Result<VerifyReport> {
    match cfg.backend {
        Backend::Exact => run_verify_with::<ExactScalar>(cfg),
        Backend::Float64 => run_verify_with::<FloatScalar>(cfg),
    }
}

pub fn run_verify_with<S: Scalar>(cfg: &Config) -> Result<VerifyReport> {
    let rs = build_root_system::<S>(&cfg.group)?;
    let group = build_group(&rs)?;
    let c = build_param(&rs, &cfg.c)?;
    let tau = build_tau(&cfg.tau, &group)?;
    let suites = cfg.selected_suites();
    let wants = |s: &str| suites.contains(&s);
    let n_trunc = cfg.max_degree;

    let mut out = VerifyReport {
        group: rs.name().to_string(),
        c: c.describe(&rs),
        tau: tau.name().to_string(),
        max_degree: n_trunc,
        backend: if S::EXACT { "exact" } else { "float64" }.into(),
        suites: Vec::new(),
        summary: Summary::default(),
    };
    let specs = cfg.admissible.clone().unwrap_or_else(|| default_admissible(&rs));

    let ama = AmaContext::build(rs.clone(), group.clone(), c.clone(), tau, n_trunc)?;
    if wants("rca") {
        out.push("rca", pairing_check(rs.roots(), rs.coroots()));
        out.push("rca", rca_relation_check(ama.module(), n_trunc));
    }
    if wants("ama") {
        out.push("ama", ama_relations_check(&ama));
        out.push("ama", centralizer_check(&ama));
        out.push("ama", msquared_identities_check(&ama));
    }
    if wants("clifford") {
        let mut rep = Report::new();
        match SpinorRep::<S>::new(rs.dim()) {
            Ok(spin) => rep.expect(
                "clifford.relations",
                clifford_relations_check(&spin),
                format!("n = {}, dim S = {}", rs.dim(), spin.dim()),
            ),
            Err(e) => rep.fail("clifford.relations", e.to_string()),
        }
        out.push("clifford", rep);
    }
    if wants("pincover") {
        let pin = PinCover::new(&rs, group.clone())?;
        let mut rep = Report::new();
        match group.minus_identity() {
            Some(_) => rep.pass("pincover.hat_cover", "−1 ∈ W: Ŵ = W̃ × C₂, two branches"),
            None => rep.pass("pincover.hat_cover", "−1 ∉ W: Ŵ = W̃"),
        }
        rep.extend(pin_checks(&rs, &pin));
        rep.extend(admissible_checks(&rs, &pin, &c));
        if rs.name().starts_with('S') {
            rep.extend(jm_checks(&rs, &pin));
        }
        out.push("pincover", rep);
    }

    let needs_dirac = ["dirac", "scasimir", "vogan", "cohomology"].iter().any(|s| wants(s));
    if !needs_dirac {
        return Ok(out);
    }
    let ctx = DiracContext::build(ama)?;
    let mut ops: Vec<(String, std::result::Result<DiracOperator<S>, String>)> = Vec::new();
    for spec in &specs {
        let op = build_admissible(spec, &rs, ctx.pin(), &c).and_then(|x| ctx.dirac_c(&x)).map_err(|e| e.to_string());
        ops.push((spec.label().to_string(), op));
    }

    if wants("dirac") {
        out.push("dirac", dirac_square_check(&ctx));
        out.push("dirac", basis_independence_check(&ctx));
        match build_admissible(&super::config::AdmissibleSpec::Named("C2".into()), &rs, ctx.pin(), &c) {
            Ok(c2) => out.push("dirac", c2_expansion_check(&ctx, &c2)),
            Err(e) => out.push("dirac", failed("dirac.c2_expansion", e)),
        }
        for (name, op) in &ops {
            let rep = match op {
                Ok(dop) => dirac_c_identities(&ctx, dop),
                Err(e) => failed("dirac.admissible", e),
            };
            out.push("dirac", tagged(rep, name));
        }
    }
    if wants("scasimir") {
        out.push("scasimir", scasimir_check(&ctx));
    }
    if wants("vogan") {
        for (name, op) in &ops {
            let rep = match op {
                Ok(dop) => vogan_witness_check(&ctx, dop, 2),
                Err(e) => failed("vogan.witness", e),
            };
            out.push("vogan", tagged(rep, name));
        }
    }
    if wants("cohomology") {
        for (name, op) in &ops {
            let Ok(dop) = op else {
                out.push("cohomology", tagged(failed("cohomology.admissible", op.as_ref().err().unwrap()), name));
                continue;
            };
            for m in 0..=n_trunc {
                out.push("cohomology", tagged(cohomology_slice(&ctx, dop, m), &format!("{name}, m={m}")));
            }
        }
    }
    Ok(out)
}

fn cohomology_slice<S: Scalar>(ctx: &DiracContext<S>, dop: &DiracOperator<S>, m: usize) -> Report {
    let mut rep = Report::new();
    let unitary = match unitarity_and_spectrum(ctx, dop, m) {
        Ok((r, info)) => {
            rep.extend(r);
            info.unitary
        }
        Err(e) => {
            rep.fail("dirac.omega_scalar", e.to_string());
            false
        }
    };
    match dirac_cohomology(ctx, dop, m) {
        Ok(coh) if unitary => rep.expect(
            "cohomology.ker_cap_im_zero",
            (coh.dim_ker_cap_im != 0).then(|| format!("dim(ker ∩ im) = {} on a unitary slice", coh.dim_ker_cap_im)),
            format!("dim ker = {}, dim H = {}", coh.dim_ker, coh.dim_h),
        ),
        Ok(coh) => rep.skip("cohomology.ker_cap_im_zero", format!("non-unitary slice; dim H = {}", coh.dim_h)),
        Err(e) => rep.fail("cohomology.ker_cap_im_zero", e.to_string()),
    }
    rep.extend(central_character_check(ctx, dop, m));
    rep
}
