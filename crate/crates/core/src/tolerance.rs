//! Numeric tolerances shared by the inverse maps and the verification suites.

/// Coordinatewise equality of canonical representatives and embedded points.
pub const TOL_EQ: f64 = 1e-9;
/// Round trip `embed(inverse(q)) = q`.
pub const TOL_RT: f64 = 1e-9;
/// Residual of an implicit equation evaluated on the surface.
pub const TOL_RES: f64 = 1e-12;
/// Residual accepted by the membership tests of the inverse maps.
pub const TOL_MEMBER: f64 = 1e-8;

/// Inputs whose magnitude is below this are treated as exact zeros by the
/// branch logic of the inverse maps.
pub const FLUSH_ZERO: f64 = 1e-300;

/// Tolerances in effect for a computation. Defaults are the module constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub eq: f64,
    pub rt: f64,
    pub res: f64,
    pub member: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eq: TOL_EQ,
            rt: TOL_RT,
            res: TOL_RES,
            member: TOL_MEMBER,
        }
    }
}
