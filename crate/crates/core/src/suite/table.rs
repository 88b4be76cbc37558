use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::ama::AmaContext;
use crate::dirac::{dirac_cohomology, unitarity_and_spectrum, DiracContext};
use crate::error::{Error, Result};
use crate::report::{CheckRecord, Status};
use crate::scalar::{ExactScalar, FloatScalar, Scalar};

use super::config::{
    build_admissible, build_group, build_param, build_root_system, build_tau, AdmissibleSpec, Backend, Config,
    ParamSpec,
};

fn one() -> String {
    "1".into()
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepPoint {
    pub c: ParamSpec,
    pub m: usize,
    #[serde(rename = "C")]
    pub admissible: String,
    #[serde(default = "one")]
    pub scale: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Grid {
    c: Vec<ParamSpec>,
    m: Vec<usize>,
    #[serde(rename = "C")]
    admissible: Vec<String>,
    #[serde(default)]
    scale: Option<Vec<String>>,
}

/// Either an explicit list of points or a grid expanded as c × m × C × scale.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum SweepFile {
    Points { points: Vec<SweepPoint> },
    Grid { grid: Grid },
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub points: Vec<SweepPoint>,
}

impl Sweep {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SweepFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("sweep: {e}")))?;
        let points = match file {
            SweepFile::Points { points } => points,
            SweepFile::Grid { grid } => {
                let scales = grid.scale.unwrap_or_else(|| vec![one()]);
                let mut pts = Vec::new();
                for c in &grid.c {
                    for &m in &grid.m {
                        for a in &grid.admissible {
                            for s in &scales {
                                pts.push(SweepPoint { c: c.clone(), m, admissible: a.clone(), scale: s.clone() });
                            }
                        }
                    }
                }
                pts
            }
        };
        Ok(Self { points })
    }
}

/// One CSV row; empty cells mean the value could not be computed.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TableRow {
    pub group: String,
    pub c: String,
    pub tau: String,
    pub m: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: Option<usize>,
    #[serde(rename = "C_name")]
    pub c_name: String,
    pub scale: String,
    pub dim_ker: Option<usize>,
    #[serde(rename = "dim_H")]
    pub dim_h: Option<usize>,
    pub omega_scalar: Option<String>,
    pub lambda: Option<String>,
    pub chi: Option<String>,
    pub unitary_flag: Option<bool>,
    pub status: String,
}

pub fn write_csv<W: Write>(rows: &[TableRow], w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for r in rows {
        wr.serialize(r).map_err(|e| Error::Internal(format!("csv: {e}")))?;
    }
    wr.flush().map_err(|e| Error::Internal(format!("csv: {e}")))
}

pub fn run_table(cfg: &Config, sweep: &Sweep) -> Result<Vec<TableRow>> {
    match cfg.backend {
        Backend::Exact => run_table_with::<ExactScalar>(cfg, sweep),
        Backend::Float64 => run_table_with::<FloatScalar>(cfg, sweep),
    }
}

fn context_for<S: Scalar>(cfg: &Config, c: &ParamSpec, n_trunc: usize) -> Result<DiracContext<S>> {
    let rs = build_root_system::<S>(&cfg.group)?;
    let group = build_group(&rs)?;
    let pc = build_param(&rs, c)?;
    let tau = build_tau(&cfg.tau, &group)?;
    DiracContext::build(AmaContext::build(rs, group, pc, tau, n_trunc)?)
}

fn key_of(c: &ParamSpec) -> String {
    match c {
        ParamSpec::Uniform(s) => s.trim().to_string(),
        ParamSpec::PerOrbit(m) => m.iter().map(|(k, v)| format!("{k}={}", v.trim())).collect::<Vec<_>>().join(";"),
    }
}

pub fn run_table_with<S: Scalar>(cfg: &Config, sweep: &Sweep) -> Result<Vec<TableRow>> {
    let rs = build_root_system::<S>(&cfg.group)?;
    let mut max_m: BTreeMap<String, usize> = BTreeMap::new();
    for p in &sweep.points {
        let e = max_m.entry(key_of(&p.c)).or_insert(cfg.max_degree);
        *e = (*e).max(p.m);
    }
    let mut contexts: BTreeMap<String, std::result::Result<DiracContext<S>, String>> = BTreeMap::new();
    let mut rows = Vec::with_capacity(sweep.points.len());
    for p in &sweep.points {
        let key = key_of(&p.c);
        let ctx = contexts
            .entry(key.clone())
            .or_insert_with(|| context_for(cfg, &p.c, max_m[&key]).map_err(|e| e.to_string()));
        let mut row = TableRow {
            group: rs.name().to_string(),
            c: key,
            tau: cfg.tau_name(),
            m: p.m,
            c_name: p.admissible.clone(),
            scale: p.scale.clone(),
            ..TableRow::default()
        };
        match ctx {
            Ok(ctx) => {
                row.c = ctx.module().param().describe(ctx.module().root_system());
                if let Err(e) = fill_row(ctx, p, &mut row) {
                    row.status = format!("error: {e}");
                }
            }
            Err(e) => row.status = format!("error: {e}"),
        }
        rows.push(row);
    }
    Ok(rows)
}

fn fill_row<S: Scalar>(ctx: &DiracContext<S>, p: &SweepPoint, row: &mut TableRow) -> Result<()> {
    let module = ctx.module();
    let base = build_admissible(
        &AdmissibleSpec::Named(p.admissible.clone()),
        module.root_system(),
        ctx.pin(),
        module.param(),
    )?;
    let s = S::parse_real(&p.scale)?;
    let dop = ctx.dirac_c(&base.scale(&s))?;
    let (rep, info) = unitarity_and_spectrum(ctx, &dop, p.m)?;
    row.dim_x = Some(info.dim_x);
    row.omega_scalar = info.omega_scalar.as_ref().map(ToString::to_string);
    row.lambda = Some(info.lambda.to_string());
    row.chi = Some(info.chi.to_string());
    row.unitary_flag = Some(info.unitary);
    let coh = dirac_cohomology(ctx, &dop, p.m)?;
    row.dim_ker = Some(coh.dim_ker);
    row.dim_h = Some(coh.dim_h);
    let bad: Vec<&str> = rep.failures().map(|r| r.check_id.as_str()).collect();
    row.status = if bad.is_empty() { "ok".into() } else { format!("fail: {}", bad.join(" ")) };
    Ok(())
}

/// Spectrum of D_C on one harmonic slice, with the checks run on it.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub group: String,
    pub c: String,
    pub tau: String,
    pub m: usize,
    #[serde(rename = "C")]
    pub admissible: String,
    pub dim_x: usize,
    pub unitary: bool,
    pub omega_scalar: Option<String>,
    pub lambda: String,
    pub chi: String,
    pub dim_ker: usize,
    pub dim_h: usize,
    pub eigenvalues: Vec<f64>,
    pub square_min: Option<f64>,
    pub checks: Vec<CheckRecord>,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|r| r.status != Status::Fail)
    }
}

pub fn run_spectrum(cfg: &Config, m: usize, admissible: &str) -> Result<SpectrumReport> {
    match cfg.backend {
        Backend::Exact => run_spectrum_with::<ExactScalar>(cfg, m, admissible),
        Backend::Float64 => run_spectrum_with::<FloatScalar>(cfg, m, admissible),
    }
}

fn run_spectrum_with<S: Scalar>(cfg: &Config, m: usize, admissible: &str) -> Result<SpectrumReport> {
    let ctx = context_for::<S>(cfg, &cfg.c, cfg.max_degree.max(m))?;
    let module = ctx.module();
    let c =
        build_admissible(&AdmissibleSpec::Named(admissible.into()), module.root_system(), ctx.pin(), module.param())?;
    let dop = ctx.dirac_c(&c)?;
    let (rep, info) = unitarity_and_spectrum(&ctx, &dop, m)?;
    let coh = dirac_cohomology(&ctx, &dop, m)?;
    Ok(SpectrumReport {
        group: module.root_system().name().to_string(),
        c: module.param().describe(module.root_system()),
        tau: module.tau().name().to_string(),
        m,
        admissible: admissible.to_string(),
        dim_x: info.dim_x,
        unitary: info.unitary,
        omega_scalar: info.omega_scalar.map(|s| s.to_string()),
        lambda: info.lambda.to_string(),
        chi: info.chi.to_string(),
        dim_ker: coh.dim_ker,
        dim_h: coh.dim_h,
        eigenvalues: info.eigenvalues,
        square_min: info.square_min,
        checks: rep.records,
    })
}
