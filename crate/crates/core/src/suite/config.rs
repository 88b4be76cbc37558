use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::dunklpoly::Tau;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::pincover::{named_admissible, HatElement, Part, PinCover, TwistedElement};
use crate::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use crate::scalar::{Rational, Scalar};

/// Suites in the order they are run.
pub const SUITES: [&str; 8] = ["rca", "ama", "clifford", "pincover", "dirac", "scasimir", "vogan", "cohomology"];

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named(String),
    Roots {
        roots: Vec<Vec<String>>,
        #[serde(default)]
        positive: Option<Vec<String>>,
        #[serde(default)]
        name: Option<String>,
    },
}

/// A single value for every orbit, or values keyed by orbit label.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ParamSpec {
    Uniform(String),
    PerOrbit(BTreeMap<String, String>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum TauSpec {
    Named(String),
    /// Matrices of the simple reflections plus an invariant positive form.
    Matrices {
        generators: Vec<Vec<Vec<String>>>,
        form: Vec<Vec<String>>,
        #[serde(default)]
        name: Option<String>,
    },
}

impl Default for TauSpec {
    fn default() -> Self {
        TauSpec::Named("trivial".into())
    }
}

/// A named element (`zero`, `C2`, `jm:e<k>`, `scale:<q>:<name>`) or explicit
/// coefficients on the group elements of ℂW̃₋.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AdmissibleSpec {
    Named(String),
    Coefficients { name: String, coefficients: Vec<(usize, String)> },
}

impl AdmissibleSpec {
    pub fn label(&self) -> &str {
        match self {
            AdmissibleSpec::Named(n) => n,
            AdmissibleSpec::Coefficients { name, .. } => name,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Exact,
    Float64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub group: GroupSpec,
    pub c: ParamSpec,
    pub max_degree: usize,
    #[serde(default)]
    pub tau: TauSpec,
    #[serde(default)]
    pub backend: Backend,
    #[serde(default)]
    pub suites: Option<Vec<String>>,
    #[serde(default)]
    pub admissible: Option<Vec<AdmissibleSpec>>,
    #[serde(default)]
    pub report: Option<String>,
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Config = serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.max_degree < 2 {
            return Err(Error::Parse(format!("max_degree must be at least 2, got {}", self.max_degree)));
        }
        // c values are checked here so that a malformed rational is a config error
        match &self.c {
            ParamSpec::Uniform(s) => parse_rational(s).map(drop)?,
            ParamSpec::PerOrbit(m) => m.values().try_for_each(|s| parse_rational(s).map(drop))?,
        }
        for s in self.suites.iter().flatten() {
            if !SUITES.contains(&s.as_str()) {
                return Err(Error::Parse(format!("unknown suite {s:?}; known: {}", SUITES.join(", "))));
            }
        }
        Ok(())
    }

    /// Requested suites in run order.
    pub fn selected_suites(&self) -> Vec<&'static str> {
        match &self.suites {
            None => SUITES.to_vec(),
            Some(list) => SUITES.iter().copied().filter(|s| list.iter().any(|x| x == s)).collect(),
        }
    }

    pub fn with_suites(mut self, suites: Vec<String>) -> Result<Self> {
        self.suites = Some(suites);
        self.validate()?;
        Ok(self)
    }

    pub fn tau_name(&self) -> String {
        match &self.tau {
            TauSpec::Named(n) => n.clone(),
            TauSpec::Matrices { name, .. } => name.clone().unwrap_or_else(|| "custom".into()),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
}

fn parse_entries<S: Scalar>(rows: &[Vec<String>]) -> Result<DenseMatrix<S>> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|x| S::parse_real(x).map_err(|e| Error::Parse(format!("entry {x:?}: {e}")))).collect())
        .collect::<Result<Vec<Vec<S>>>>()?;
    Ok(DenseMatrix::from_rows(rows))
}

pub fn build_root_system<S: Scalar>(spec: &GroupSpec) -> Result<RootSystem<S>> {
    match spec {
        GroupSpec::Named(n) => RootSystem::named(n),
        GroupSpec::Roots { roots, positive, name } => {
            let parse = |v: &Vec<String>| {
                v.iter().map(|x| S::parse_real(x).map_err(|e| Error::Parse(format!("root entry {x:?}: {e}")))).collect()
            };
            let roots = roots.iter().map(parse).collect::<Result<Vec<Vec<S>>>>()?;
            let positive = positive.as_ref().map(parse).transpose()?;
            RootSystem::from_roots(name.as_deref().unwrap_or("custom"), roots, positive)
        }
    }
}

pub fn build_param<S: Scalar>(rs: &RootSystem<S>, spec: &ParamSpec) -> Result<ParamFunction> {
    match spec {
        ParamSpec::Uniform(s) => Ok(ParamFunction::uniform(rs, parse_rational(s)?)),
        ParamSpec::PerOrbit(m) => {
            let entries = m.iter().map(|(k, v)| Ok((k.clone(), parse_rational(v)?))).collect::<Result<Vec<_>>>()?;
            ParamFunction::from_labels(rs, &entries)
        }
    }
}

pub fn build_tau<S: Scalar>(spec: &TauSpec, group: &ReflectionGroup<S>) -> Result<Tau<S>> {
    match spec {
        TauSpec::Named(n) => Tau::named(n, group),
        TauSpec::Matrices { generators, form, name } => {
            let gens = generators.iter().map(|g| parse_entries(g)).collect::<Result<Vec<_>>>()?;
            Tau::from_generators(name.as_deref().unwrap_or("custom"), group, gens, parse_entries(form)?)
        }
    }
}

pub fn build_group<S: Scalar>(rs: &RootSystem<S>) -> Result<ReflectionGroup<S>> {
    ReflectionGroup::enumerate(rs, DEFAULT_GROUP_BOUND)
}

pub fn build_admissible<S: Scalar>(
    spec: &AdmissibleSpec,
    rs: &RootSystem<S>,
    pin: &PinCover<S>,
    c: &ParamFunction,
) -> Result<HatElement<S>> {
    match spec {
        AdmissibleSpec::Named(n) => named_admissible(n, rs, pin, c),
        AdmissibleSpec::Coefficients { coefficients, .. } => {
            let mut x = TwistedElement::zero(Part::Minus);
            for (w, v) in coefficients {
                if *w >= pin.group().order() {
                    return Err(Error::Parse(format!(
                        "group element {w} out of range (|W| = {})",
                        pin.group().order()
                    )));
                }
                let s = S::parse_real(v).map_err(|e| Error::Parse(format!("coefficient {v:?}: {e}")))?;
                x = x.add(&TwistedElement::basis(Part::Minus, *w).scale(&s))?;
            }
            Ok(pin.hat(x))
        }
    }
}

/// Admissible elements used when the config lists none: 0, C₂, and e₁ of the
/// Jucys–Murphy squares for symmetric groups.
pub fn default_admissible<S: Scalar>(rs: &RootSystem<S>) -> Vec<AdmissibleSpec> {
    let mut out = vec![AdmissibleSpec::Named("zero".into()), AdmissibleSpec::Named("C2".into())];
    if rs.name().starts_with('S') {
        out.push(AdmissibleSpec::Named("jm:e1".into()));
    }
    out
}
