//! Curve families approaching the loci where coordinates of `P` vanish.

use crate::error::Result;
use crate::projective;
use crate::quotient::{sym_distance, SpherePoint};
use crate::tolerance::Tolerances;

/// The curve `h ↦ normalize(base + h·direction)` on the sphere, probed as
/// `h → 0⁺`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeFamily {
    pub name: &'static str,
    pub base: [f64; 3],
    pub direction: [f64; 3],
}

impl ProbeFamily {
    pub fn point(&self, h: f64) -> Result<SpherePoint> {
        let [x, y, z] = self.base;
        let [dx, dy, dz] = self.direction;
        SpherePoint::normalize(x + h * dx, y + h * dy, z + h * dz)
    }
}

const GENERIC: [f64; 3] = [0.31, -0.47, 0.83];
const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// The sixteen approach families: four straight approaches to `(1, 0, 0)`,
/// whose image is the origin, and for each coordinate `c` of `(u, v, w, t)`
/// three base points where `c = 0` but another coordinate is not, approached
/// along a fixed generic direction.
pub fn families() -> Vec<ProbeFamily> {
    let s32 = 0.32f64.sqrt();
    let fam = |name, base, direction| ProbeFamily {
        name,
        base,
        direction,
    };
    vec![
        fam("origin/y", [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]),
        fam("origin/z", [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]),
        fam("origin/y+z", [1.0, 0.0, 0.0], [0.0, 1.0, 1.0]),
        fam("origin/y-z", [1.0, 0.0, 0.0], [0.0, 1.0, -1.0]),
        fam("t=0/u,w", [0.6, 0.8, 0.0], GENERIC),
        fam("t=0/v,w", [0.6, 0.0, 0.8], GENERIC),
        fam("t=0/w", [0.0, 1.0, 0.0], GENERIC),
        fam("w=0/u,v,t", [0.6, s32, s32], GENERIC),
        fam("w=0/u,v,-t", [0.6, s32, -s32], GENERIC),
        fam("w=0/t", [0.0, R2, R2], GENERIC),
        fam("v=0/u,w", [0.8, 0.6, 0.0], GENERIC),
        fam("v=0/w,t", [0.0, 0.6, 0.8], GENERIC),
        fam("v=0/-t", [0.0, R2, -R2], GENERIC),
        fam("u=0/v,w", [0.8, 0.0, 0.6], GENERIC),
        fam("u=0/w,-t", [0.0, 0.8, -0.6], GENERIC),
        fam("u=0/-t", [0.0, -R2, R2], GENERIC),
    ]
}

/// Drifts of the class of `g_p(p(s(h)))` between `h = 10⁻ᵏ` and
/// `h = 10⁻ᵏ⁻¹`, divided by `10⁻ᵏ`, for each `k` in `ks`.
pub fn scaled_drifts(family: &ProbeFamily, ks: &[i32], tol: &Tolerances) -> Result<Vec<f64>> {
    let class_at = |k: i32| -> Result<SpherePoint> {
        let s = family.point(10f64.powi(-k))?;
        Ok(projective::inverse_with(&projective::embed(&s), tol)?.representative())
    };
    ks.iter()
        .map(|&k| {
            let (a, b) = (class_at(k)?, class_at(k + 1)?);
            Ok(sym_distance(&a, &b) * 10f64.powi(k))
        })
        .collect()
}
