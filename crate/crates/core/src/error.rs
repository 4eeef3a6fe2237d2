use crate::structures::AlgebraKind;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("expected a {expected} structure, got {found}")]
    KindMismatch { expected: String, found: AlgebraKind },

    #[error("{what}: expected length {expected}, got {found}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{0} constants are not skew-symmetric at input {1:?}")]
    NotSkew(AlgebraKind, Vec<usize>),

    #[error("invalid {0}: {1}")]
    InvalidStructure(&'static str, String),

    #[error("degree {degree} is outside the {kind} complex")]
    DegreeOutOfRange { kind: AlgebraKind, degree: usize },

    #[error("coboundary squares to a nonzero map between degrees {0} and {1}")]
    NonzeroSquare(usize, usize),

    #[error("Maurer-Cartan and direct verdicts disagree ({0})")]
    RouteDisagreement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
