//! Config-driven orchestration of the verification suites and parameter sweeps.

mod config;
mod table;
mod verify;

pub use config::{
    build_admissible, build_group, build_param, build_root_system, build_tau, default_admissible, parse_rational,
    AdmissibleSpec, Backend, Config, GroupSpec, ParamSpec, TauSpec, SUITES,
};
pub use table::{run_spectrum, run_table, run_table_with, write_csv, SpectrumReport, Sweep, SweepPoint, TableRow};
pub use verify::{run_verify, run_verify_with, SuiteReport, Summary, VerifyReport};
