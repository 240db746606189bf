//! The 2-torus `T ⊂ R³` as the image of `C_T`.

use std::f64::consts::PI;

use crate::angles::atan2;
use crate::error::{Error, Result};
use crate::point::Point3;
use crate::quotient::{canonicalize_with, ParamPoint, Polygon, QuotientClass, Relation};
use crate::tolerance::{Tolerances, FLUSH_ZERO};

/// Major radius `R` (centre of the tube to the axis) and minor radius `r`
/// (radius of the tube), with `R > r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusGeometry {
    major: f64,
    minor: f64,
}

impl TorusGeometry {
    pub fn new(major: f64, minor: f64) -> Result<Self> {
        if !(major > minor && minor > 0.0 && major.is_finite()) {
            return Err(Error::InvalidGeometry { major, minor });
        }
        Ok(Self { major, minor })
    }

    pub fn major(&self) -> f64 {
        self.major
    }

    pub fn minor(&self) -> f64 {
        self.minor
    }

    /// Residual scale `max(1, R²)` used by the tolerance checks.
    pub fn residual_scale(&self) -> f64 {
        self.major.powi(2).max(1.0)
    }
}

impl Default for TorusGeometry {
    /// `R = 3r` with `r = 1`.
    fn default() -> Self {
        Self {
            major: 3.0,
            minor: 1.0,
        }
    }
}

pub fn embed(p: &ParamPoint, geom: &TorusGeometry) -> Point3 {
    let (u, v) = (p.a(), p.b());
    let ring = geom.major + geom.minor * (v * PI).cos();
    Point3::new(
        ring * (u * PI).cos(),
        ring * (u * PI).sin(),
        geom.minor * (v * PI).sin(),
    )
}

/// `(√(x² + y²) - R)² + z² - r²`.
pub fn implicit(q: &Point3, geom: &TorusGeometry) -> f64 {
    let d = q.x.hypot(q.y) - geom.major;
    d * d + q.z * q.z - geom.minor * geom.minor
}

/// The inverse `g_t` at `q`, without any membership test.
pub fn inverse_raw(q: &Point3, geom: &TorusGeometry) -> Result<(f64, f64)> {
    let y = if q.y.abs() < FLUSH_ZERO { 0.0 } else { q.y };
    let theta = atan2(y, q.x)?;
    let radial = if theta.radians() == 0.0 {
        q.x - geom.major
    } else if theta.radians() == PI {
        -q.x - geom.major
    } else {
        y / theta.radians().sin() - geom.major
    };
    let phi = atan2(q.z, radial)?;
    Ok((theta.half_turns(), phi.half_turns()))
}

pub fn inverse(q: &Point3, geom: &TorusGeometry) -> Result<ParamPoint> {
    inverse_with(q, geom, &Tolerances::default())
}

/// `g_t(q)` after checking that `q` lies on `T`.
///
/// The residual bound is `tol.member · max(1, R²)`; the re-embedding check
/// is the same as for the Möbius band.
pub fn inverse_with(q: &Point3, geom: &TorusGeometry, tol: &Tolerances) -> Result<ParamPoint> {
    if !q.is_finite() {
        return Err(Error::NotOnSurface(format!("{q} is not finite")));
    }
    let residual = implicit(q, geom);
    if residual.abs() > tol.member * geom.residual_scale() {
        return Err(Error::NotOnSurface(format!(
            "{q}: cartesian residual {residual:e} is too large"
        )));
    }
    let (u, v) = inverse_raw(q, geom).map_err(|e| Error::NotOnSurface(format!("{q}: {e}")))?;
    let p = ParamPoint::clamped(Polygon::Torus, u, v, tol.eq)
        .map_err(|_| Error::NotOnSurface(format!("{q}: recovered ({u}, {v}) leaves the square")))?;
    let err = embed(&p, geom).dist_inf(q);
    if err > tol.rt {
        return Err(Error::NotOnSurface(format!(
            "{q}: re-embedding misses by {err:e}"
        )));
    }
    Ok(p)
}

pub fn inverse_class(
    q: &Point3,
    geom: &TorusGeometry,
    tol: &Tolerances,
) -> Result<QuotientClass<ParamPoint>> {
    canonicalize_with(inverse_with(q, geom, tol)?, Relation::Ct, tol.eq)
}

/// `| y / sin(atan2(y, x)) - |x| |`: how far the generic branch of the second
/// component of `g_t` is from the `y = 0` branches near the seam.
pub fn seam_gap(q: &Point3) -> Result<f64> {
    if q.y == 0.0 {
        return Err(Error::Domain("seam gap needs y != 0"));
    }
    if q.x == 0.0 {
        return Err(Error::Domain("seam gap needs x != 0"));
    }
    let theta = atan2(q.y, q.x)?;
    Ok((q.y / theta.radians().sin() - q.x.abs()).abs())
}
