//! The Möbius band `M ⊂ R³` as the image of `C_M`.
//!
//! The embedding is
//!
//! ```text
//! m(t, v) = ((1 + t/2·cos(vπ/2))·cos(vπ),
//!            (1 + t/2·cos(vπ/2))·sin(vπ),
//!             t/2·sin(vπ/2))
//! ```
//!
//! with `t` across the band and `v` along it. Its image satisfies
//! `y(x² + y² + z² - 1) - 2z(x² + y² + x) = 0`.

use std::f64::consts::PI;

use crate::angles::atan2;
use crate::error::{Error, Result};
use crate::point::Point3;
use crate::quotient::{canonicalize_with, ParamPoint, Polygon, QuotientClass, Relation};
use crate::tolerance::{Tolerances, FLUSH_ZERO};

/// Evaluates `m` at `p`. The polygon tag of `p` is not checked.
pub fn embed(p: &ParamPoint) -> Point3 {
    let (t, v) = (p.a(), p.b());
    let radius = 1.0 + 0.5 * t * (v * PI / 2.0).cos();
    Point3::new(
        radius * (v * PI).cos(),
        radius * (v * PI).sin(),
        0.5 * t * (v * PI / 2.0).sin(),
    )
}

/// Left-hand side of the cartesian equation of `M`.
pub fn implicit(q: &Point3) -> f64 {
    let Point3 { x, y, z } = *q;
    let rho2 = x * x + y * y;
    y * (rho2 + z * z - 1.0) - 2.0 * z * (rho2 + x)
}

/// The two solutions in `z` of the cartesian equation, as `(plus, minus)`:
/// `((x² + y² + x) ± (x + 1)√(x² + y²)) / y`.
///
/// For a point of `M` one of them is its `z`; which one depends on the sheet,
/// so callers pick the root closest to a known value. The discriminant
/// `(x² + y²)(x + 1)²` is a square, so every `x` is admissible; the band
/// itself reaches `x < -1` near `v = ±1` when `t > 0`.
pub fn z_roots(x: f64, y: f64) -> Result<(f64, f64)> {
    if y == 0.0 {
        return Err(Error::Domain("z is not determined by (x, y) when y = 0"));
    }
    let rho2 = x * x + y * y;
    let head = rho2 + x;
    let tail = (x + 1.0) * rho2.sqrt();
    Ok(((head + tail) / y, (head - tail) / y))
}

/// The inverse `g_m` at `q`, without any membership test.
///
/// `v' = atan2(y, x)/π`, and `t' = 2(x - 1)` when the angle is `0`, otherwise
/// `2z / sin(atan2(y, x)/2)`.
pub fn inverse_raw(q: &Point3) -> Result<(f64, f64)> {
    let y = if q.y.abs() < FLUSH_ZERO { 0.0 } else { q.y };
    let theta = atan2(y, q.x)?;
    let t = if theta.radians() == 0.0 {
        2.0 * (q.x - 1.0)
    } else {
        2.0 * q.z / (theta.radians() / 2.0).sin()
    };
    Ok((t, theta.half_turns()))
}

/// `g_m(q)` for a point of the band, with default tolerances.
pub fn inverse(q: &Point3) -> Result<ParamPoint> {
    inverse_with(q, &Tolerances::default())
}

/// `g_m(q)` after checking that `q` lies on `M`.
///
/// `q` is accepted when the cartesian residual is at most `tol.member`, the
/// recovered parameters lie in the square (overshoot up to `tol.eq` is
/// clamped) and re-embedding them reproduces `q` within `tol.rt`.
pub fn inverse_with(q: &Point3, tol: &Tolerances) -> Result<ParamPoint> {
    if !q.is_finite() {
        return Err(Error::NotOnSurface(format!("{q} is not finite")));
    }
    let residual = implicit(q);
    if residual.abs() > tol.member {
        return Err(Error::NotOnSurface(format!(
            "{q}: cartesian residual {residual:e} exceeds {:e}",
            tol.member
        )));
    }
    let (t, v) = inverse_raw(q).map_err(|e| Error::NotOnSurface(format!("{q}: {e}")))?;
    let p = ParamPoint::clamped(Polygon::Mobius, t, v, tol.eq)
        .map_err(|_| Error::NotOnSurface(format!("{q}: recovered (t, v) = ({t}, {v}) leaves the band")))?;
    let back = embed(&p);
    let err = back.dist_inf(q);
    if err > tol.rt {
        return Err(Error::NotOnSurface(format!(
            "{q}: re-embedding misses by {err:e}"
        )));
    }
    Ok(p)
}

/// Class of `g_m(q)` in `C_M`.
pub fn inverse_class(q: &Point3, tol: &Tolerances) -> Result<QuotientClass<ParamPoint>> {
    canonicalize_with(inverse_with(q, tol)?, Relation::Cm, tol.eq)
}

/// Distance between the two branches of the first component of `g_m` near
/// the seam `y = 0, x > 0`: `|2z / sin(atan2(y, x)/2) - 2(x - 1)|`.
pub fn seam_gap(x: f64, y: f64, z: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain("seam gap needs x > 0"));
    }
    if y == 0.0 {
        return Err(Error::Domain("seam gap needs y != 0"));
    }
    let theta = atan2(y, x)?;
    Ok((2.0 * z / (theta.radians() / 2.0).sin() - 2.0 * (x - 1.0)).abs())
}
