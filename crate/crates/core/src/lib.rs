//! Explicit homeomorphisms between fundamental-polygon quotient spaces and
//! their Euclidean embeddings.
//!
//! Three surfaces are covered, each presented as the square `[-1,1]²` with
//! its edges glued by an equivalence relation:
//!
//! - the Möbius band, embedded in R³ ([`mobius`]);
//! - the 2-torus, embedded in R³ ([`torus`]);
//! - the real projective plane, embedded in R⁴ through the hemisphere model
//!   `S²/±` ([`projective`]).
//!
//! Every forward map comes with its inverse, the implicit equations of its
//! image, and seam diagnostics. The [`verify`] module turns the algebraic
//! identities relating all of these into numeric checks over grids and
//! sphere samples, and [`mesh`] exports welded meshes and point clouds.

pub mod angles;
pub mod error;
pub mod fmt;
pub mod mesh;
pub mod mobius;
pub mod point;
pub mod projective;
pub mod quotient;
pub mod sampling;
pub mod tolerance;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use point::{Point3, Point4};
pub use quotient::{ParamPoint, Polygon, QuotientClass, Relation, SpherePoint};
pub use tolerance::Tolerances;
pub use torus::TorusGeometry;
