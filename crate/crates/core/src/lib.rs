pub mod error;
pub mod linalg;
pub mod par;
pub mod scalar;

pub use error::{Error, Result};
pub mod ama;
pub mod clifford;
pub mod dirac;
pub mod dunklpoly;
pub mod pincover;
pub mod report;
pub mod rootsys;
pub mod suite;
