//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the exact kernel, the classifier and the normalizer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root; widen the interval")]
    EndpointIsRoot(String),
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("map has no cubic part")]
    NotCubic,
    #[error("change of variables is singular")]
    SingularChange,
    #[error("the zero quartic has no projective roots")]
    ZeroQuartic,
    #[error("expected classification {expected}, found {found}")]
    WrongClass {
        expected: &'static str,
        found: String,
    },
    #[error("the two roots coincide")]
    EqualRoots,
    #[error("requested residual not reached within the iteration budget")]
    ResidualBudget,
    #[error("need at least two distinct projective roots")]
    TooFewRoots,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
