use thiserror::Error;

use crate::quotient::{Polygon, Relation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A function was evaluated outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("parameter ({a}, {b}) lies outside the square [-1, 1]^2")]
    OutsideSquare { a: f64, b: f64 },

    #[error("vector ({x}, {y}, {z}) is not a unit vector")]
    NotUnit { x: f64, y: f64, z: f64 },

    #[error("the zero vector does not span a line")]
    ZeroVector,

    #[error("expected a point of polygon {expected:?}, got {found:?}")]
    PolygonMismatch { expected: Polygon, found: Polygon },

    #[error("relation {relation:?} is not defined on {carrier}")]
    CarrierMismatch {
        relation: Relation,
        carrier: &'static str,
    },

    #[error("invalid torus geometry R = {major}, r = {minor}: need R > r > 0")]
    InvalidGeometry { major: f64, minor: f64 },

    #[error("not on surface: {0}")]
    NotOnSurface(String),

    #[error("branch {branch} does not apply: {reason}")]
    BranchNotApplicable {
        branch: &'static str,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
