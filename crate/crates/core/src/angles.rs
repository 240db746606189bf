//! Two-argument arctangent and sign helpers.
//!
//! [`atan2`] is built from the single-argument `atan` and explicit branch
//! logic rather than the platform `f64::atan2`, so that its range is exactly
//! `(-π, π]`: the negative x-axis maps to `+π` regardless of the sign of a
//! zero `y`. The inverse maps of the Möbius band and the torus test for the
//! values `0` and `π` by exact equality, which depends on this convention.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// An angle in radians. Values produced by [`atan2`] lie in `(-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const PI: Angle = Angle(PI);

    pub const fn from_radians(radians: f64) -> Self {
        Self(radians)
    }

    pub const fn radians(self) -> f64 {
        self.0
    }

    /// The angle as a fraction of a half turn, `θ/π`.
    pub fn half_turns(self) -> f64 {
        self.0 / PI
    }
}

/// Polar angle of `(x, y)`.
///
/// `y = 0, x > 0` gives `0`; `y = 0, x < 0` gives `π`; `x = 0` gives `±π/2`
/// with the sign of `y`; otherwise `atan(y/x)`, shifted by `±π` (sign of `y`)
/// when `x < 0`. Signed zeros compare equal to zero.
pub fn atan2(y: f64, x: f64) -> Result<Angle> {
    if y.is_nan() || x.is_nan() {
        return Err(Error::Domain("atan2 of NaN"));
    }
    let theta = if y == 0.0 {
        if x > 0.0 {
            0.0
        } else if x < 0.0 {
            PI
        } else {
            return Err(Error::Domain("atan2(0, 0) is undefined"));
        }
    } else {
        let eps = sign_strict(y)?;
        if x > 0.0 {
            (y / x).atan()
        } else if x == 0.0 {
            eps * FRAC_PI_2
        } else {
            (y / x).atan() + eps * PI
        }
    };
    Ok(Angle(theta))
}

/// `sin(atan(x)) = x / √(1 + x²)`.
pub fn sin_arctan(x: f64) -> f64 {
    x / (1.0 + x * x).sqrt()
}

/// Sign of a nonzero number: `-1` or `+1`.
pub fn sign_strict(x: f64) -> Result<f64> {
    if x == 0.0 || x.is_nan() {
        return Err(Error::Domain("sign of zero is undefined"));
    }
    Ok(if x < 0.0 { -1.0 } else { 1.0 })
}

/// Sign with the convention `sign_pos(0) = +1`.
pub fn sign_pos(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}
