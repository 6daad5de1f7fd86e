use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the given superspace")]
    NotASubspace,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("rewrite rule for `{0}` does not decrease the rewrite metric")]
    NonTerminatingRewrite(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("generator `{0}` carries no lambda image")]
    MissingLambda(String),
    #[error("generator `{0}` has no differential pairing")]
    UnpairedGenerator(String),
    #[error("algebra is not polynomial (generator `{0}` has a square rewrite)")]
    NotPolynomial(String),
    #[error("{map} does not annihilate relation {relation} in degree {degree}")]
    RelationNotAnnihilated {
        map: &'static str,
        relation: String,
        degree: u32,
    },
    #[error("{0}")]
    Invalid(String),
    #[error("unsupported functor `{0}` for this computation")]
    UnsupportedFunctor(String),
    #[error("incomplete window: {0}")]
    IncompleteWindow(String),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
