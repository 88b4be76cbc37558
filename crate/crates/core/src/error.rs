use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("group generated by the roots has more than {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("invalid root system: {0}")]
    RootSystem(String),
    #[error("{0} is only available with the float64 backend")]
    ExactUnsupported(String),
    #[error("invalid parameter function: {0}")]
    Parameter(String),
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("element is not admissible: {0}")]
    NotAdmissible(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
