//! The real projective plane in its three models and the embedding in R⁴.
//!
//! - `C_P`, the square with antipodal boundary points identified;
//! - `S = S²/±`, the sphere modulo the antipodal map;
//! - `RP² = (R³ \ {0})/collinearity`.
//!
//! `S` embeds in R⁴ through `p(x, y, z) = (xy, xz, y² - z², 2yz)`. Its image
//! `P` is inverted piecewise: wherever a coordinate of `(u, v, w, t)` is
//! nonzero, the squares `(x², y², z²)` can be read off from it, and the signs
//! follow from the signs of `u`, `v`, `t`. The five partial inverses are
//! glued into [`inverse`] by dispatching on the first nonzero coordinate.

use crate::angles::sign_pos;
use crate::error::{Error, Result};
use crate::point::Point4;
pub use crate::quotient::ProjectivePoint;
use crate::quotient::{
    canonicalize_sphere_with, canonicalize_with, sym_class, ParamPoint, Polygon, QuotientClass,
    Relation, SpherePoint,
};
use crate::tolerance::{Tolerances, FLUSH_ZERO, TOL_EQ, TOL_RES};

/// Domain of a partial inverse: the origin, or the part of `P` where the
/// named coordinate is nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Zero,
    U,
    V,
    W,
    T,
}

impl Branch {
    pub const ALL: [Branch; 5] = [Branch::Zero, Branch::U, Branch::V, Branch::W, Branch::T];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Zero => "0",
            Branch::U => "u",
            Branch::V => "v",
            Branch::W => "w",
            Branch::T => "t",
        }
    }

    /// Whether `q` lies in the domain of this branch.
    pub fn applies(self, q: &Point4) -> bool {
        match self {
            Branch::Zero => *q == Point4::ORIGIN,
            Branch::U => q.u != 0.0,
            Branch::V => q.v != 0.0,
            Branch::W => q.w != 0.0,
            Branch::T => q.t != 0.0,
        }
    }

    /// The branch used by [`inverse`]: the origin, else the first nonzero
    /// coordinate in the order `u, v, w, t`.
    pub fn dispatch(q: &Point4) -> Branch {
        [Branch::U, Branch::V, Branch::W, Branch::T]
            .into_iter()
            .find(|b| b.applies(q))
            .unwrap_or(Branch::Zero)
    }
}

/// `f`: square to hemisphere.
///
/// `(0, 0) ↦ [0, 0, 1]`, otherwise `(a, b)` is scaled by `‖·‖∞/‖·‖₂` and
/// lifted to height `√(1 - ‖·‖∞²)`.
pub fn square_to_hemisphere(p: &ParamPoint) -> Result<QuotientClass<SpherePoint>> {
    if p.polygon() != Polygon::Projective {
        return Err(Error::PolygonMismatch {
            expected: Polygon::Projective,
            found: p.polygon(),
        });
    }
    let (a, b) = (p.a(), p.b());
    if a.abs() < FLUSH_ZERO && b.abs() < FLUSH_ZERO {
        return Ok(sym_class(SpherePoint::new(0.0, 0.0, 1.0)?));
    }
    let sup = a.abs().max(b.abs());
    let scale = sup / a.hypot(b);
    let height = (1.0 - sup * sup).max(0.0).sqrt();
    Ok(sym_class(SpherePoint::new(scale * a, scale * b, height)?))
}

/// `g`: hemisphere to square.
///
/// `(0, 0, ±1) ↦ [0, 0]`, otherwise `(x, y)` is scaled by
/// `sign_pos(z)·‖·‖₂/‖·‖∞`.
pub fn hemisphere_to_square(s: &SpherePoint) -> Result<QuotientClass<ParamPoint>> {
    hemisphere_to_square_with(s, TOL_EQ)
}

pub fn hemisphere_to_square_with(s: &SpherePoint, tol: f64) -> Result<QuotientClass<ParamPoint>> {
    let (x, y) = (s.x(), s.y());
    let p = if x.abs() < FLUSH_ZERO && y.abs() < FLUSH_ZERO {
        ParamPoint::projective(0.0, 0.0)?
    } else {
        let scale = sign_pos(s.z()) * x.hypot(y) / x.abs().max(y.abs());
        ParamPoint::clamped(Polygon::Projective, scale * x, scale * y, tol)?
    };
    canonicalize_with(p, Relation::Cp, tol)
}

/// `p(x, y, z) = (xy, xz, y² - z², 2yz)`.
pub fn embed(s: &SpherePoint) -> Point4 {
    let (x, y, z) = (s.x(), s.y(), s.z());
    Point4::new(x * y, x * z, y * y - z * z, 2.0 * y * z)
}

/// Both equations satisfied on `P`:
/// `2uvw - (u² - v²)t` and `(vt + 2uw)(1 - w) - u(t² + 2u²)`.
pub fn implicit(q: &Point4) -> (f64, f64) {
    let Point4 { u, v, w, t } = *q;
    (
        2.0 * u * v * w - (u * u - v * v) * t,
        (v * t + 2.0 * u * w) * (1.0 - w) - u * (t * t + 2.0 * u * u),
    )
}

/// `(x², y², z²)` of any preimage of `q`, read off the given branch.
///
/// Components within `TOL_RES` below zero are clamped to zero; anything more
/// negative means `q` is not on `P`.
pub fn squares(q: &Point4, branch: Branch) -> Result<[f64; 3]> {
    squares_with(q, branch, TOL_RES)
}

pub fn squares_with(q: &Point4, branch: Branch, tol_res: f64) -> Result<[f64; 3]> {
    if !branch.applies(q) {
        return Err(Error::BranchNotApplicable {
            branch: branch.name(),
            reason: "the branch coordinate is zero",
        });
    }
    let Point4 { u, v, w, t } = *q;
    let raw = match branch {
        Branch::Zero => [1.0, 0.0, 0.0],
        Branch::U => {
            let h = v * t / (2.0 * u);
            [1.0 - w - v * t / u, h + w, h]
        }
        Branch::V => {
            let h = u * t / (2.0 * v);
            [1.0 + w - u * t / v, h, h - w]
        }
        Branch::W => {
            let x2 = (u * u - v * v) / w;
            [x2, 0.5 * (1.0 + w - x2), 0.5 * (1.0 - w - x2)]
        }
        Branch::T => {
            let x2 = 2.0 * u * v / t;
            [x2, 0.5 * (1.0 + w - x2), 0.5 * (1.0 - w - x2)]
        }
    };
    let mut out = [0.0; 3];
    for (o, r) in out.iter_mut().zip(raw) {
        if !r.is_finite() || r < -tol_res {
            return Err(Error::NotOnSurface(format!(
                "branch {} gives squares {raw:?} for {q}",
                branch.name()
            )));
        }
        *o = r.max(0.0);
    }
    Ok(out)
}

/// Recomputes the two coordinates with the smaller squares from the one with
/// the largest, whose square is at least 1/3, through `u = xy`, `v = xz` and
/// `t = 2yz`. Rounding noise `ε` in a square near zero is an error `√ε` in
/// its square root but stays `ε` after division.
fn refine_small(q: &Point4, squares: [f64; 3], [x, y, z]: [f64; 3]) -> (f64, f64, f64) {
    let largest = (0..3)
        .max_by(|&i, &j| squares[i].total_cmp(&squares[j]))
        .expect("three squares");
    match largest {
        0 => (x, q.u / x, q.v / x),
        1 => (q.u / y, y, 0.5 * q.t / y),
        _ => (q.v / z, 0.5 * q.t / z, z),
    }
}

/// The partial inverse `g_branch(q)`.
///
/// - `g_0` sends the origin to `(1, 0, 0)`;
/// - `g_u`, `g_v`, `g_w` return `(|x|, sign(u)|y|, sign(v)|z|)`;
/// - `g_t` returns `(sign(v)|x|, sign(t)|y|, |z|)`;
///
/// with `sign(0) = +1`. On the part of the `w` branch where `x = 0`
/// (equivalently `u = v = 0`) the signs of `u` and `v` carry no information
/// about `y` and `z`, so the sign of `y` is taken from `t` there, as in `g_t`.
///
/// Only the largest coordinate is taken from its square; the other two are
/// divided out of `q`, which agrees with the square roots on `P`.
pub fn partial_inverse(q: &Point4, branch: Branch) -> Result<SpherePoint> {
    partial_inverse_with(q, branch, TOL_RES)
}

pub fn partial_inverse_with(q: &Point4, branch: Branch, tol_res: f64) -> Result<SpherePoint> {
    let [x2, y2, z2] = squares_with(q, branch, tol_res)?;
    let (ax, ay, az) = (x2.sqrt(), y2.sqrt(), z2.sqrt());
    let (su, sv, st) = (sign_pos(q.u), sign_pos(q.v), sign_pos(q.t));
    let (x, y, z) = match branch {
        Branch::Zero => (1.0, 0.0, 0.0),
        Branch::U | Branch::V => (ax, su * ay, sv * az),
        Branch::W if q.u == 0.0 && q.v == 0.0 => (ax, st * ay, az),
        Branch::W => (ax, su * ay, sv * az),
        Branch::T => (sv * ax, st * ay, az),
    };
    let s = SpherePoint::new(x, y, z).map_err(|_| {
        Error::NotOnSurface(format!(
            "branch {} preimage ({x}, {y}, {z}) of {q} is not a unit vector",
            branch.name()
        ))
    })?;
    let (x, y, z) = refine_small(q, [x2, y2, z2], s.coords());
    SpherePoint::normalize(x, y, z)
}

/// `g_p(q)` with default tolerances.
pub fn inverse(q: &Point4) -> Result<QuotientClass<SpherePoint>> {
    inverse_with(q, &Tolerances::default())
}

/// `g_p(q)`: the class in `S` of the dispatched partial inverse.
///
/// `q` must satisfy both implicit equations within `tol.member`, the
/// dispatched branch must produce squares in `[0, 1]` (up to `tol.res`), and
/// the result must re-embed onto `q` within `tol.rt`.
pub fn inverse_with(q: &Point4, tol: &Tolerances) -> Result<QuotientClass<SpherePoint>> {
    if !q.is_finite() {
        return Err(Error::NotOnSurface(format!("{q} is not finite")));
    }
    let (r1, r2) = implicit(q);
    if r1.abs().max(r2.abs()) > tol.member {
        return Err(Error::NotOnSurface(format!(
            "{q}: implicit residuals ({r1:e}, {r2:e}) are too large"
        )));
    }
    let branch = Branch::dispatch(q);
    let sq = squares_with(q, branch, tol.res)?;
    if sq.iter().any(|&c| c > 1.0 + tol.res) {
        return Err(Error::NotOnSurface(format!(
            "{q}: branch {} squares {sq:?} exceed 1",
            branch.name()
        )));
    }
    let s = partial_inverse_with(q, branch, tol.res)?;
    let err = embed(&s).dist_inf(q);
    if err > tol.rt {
        return Err(Error::NotOnSurface(format!(
            "{q}: re-embedding misses by {err:e}"
        )));
    }
    canonicalize_sphere_with(s, Relation::Sym, tol.eq)
}

/// `(x : y : z) ↦ [(x, y, z)/‖(x, y, z)‖]`.
pub fn rp2_normalize(p: &ProjectivePoint) -> Result<QuotientClass<SpherePoint>> {
    let [x, y, z] = p.coords();
    Ok(sym_class(SpherePoint::normalize(x, y, z)?))
}

/// `(x, y, z) ↦ (x : y : z)`.
pub fn sphere_to_rp2(s: &SpherePoint) -> ProjectivePoint {
    ProjectivePoint::new(s.x(), s.y(), s.z()).expect("unit vectors are nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn s(x: f64, y: f64, z: f64) -> SpherePoint {
        SpherePoint::new(x, y, z).unwrap()
    }

    fn close4(a: &Point4, b: &Point4, tol: f64) -> bool {
        a.dist_inf(b) <= tol
    }

    #[test]
    fn hemisphere_examples() {
        let c = square_to_hemisphere(&ParamPoint::projective(0.0, 0.0).unwrap()).unwrap();
        assert_eq!(c.representative().coords(), [0.0, 0.0, 1.0]);
        // Oracle: sup-norm 1, 2-norm √2, third coordinate √(1 - 1) = 0.
        let c = square_to_hemisphere(&ParamPoint::projective(1.0, 1.0).unwrap()).unwrap();
        assert!(c.representative().dist_inf(&s(R2, R2, 0.0)) < 1e-15);
        for &y in &[-0.8, -0.2, 0.0, 0.45, 1.0] {
            let a = square_to_hemisphere(&ParamPoint::projective(-1.0, y).unwrap()).unwrap();
            let b = square_to_hemisphere(&ParamPoint::projective(1.0, -y).unwrap()).unwrap();
            assert!(a.approx_eq(&b, 1e-15), "y = {y}");
        }
    }

    #[test]
    fn hemisphere_inverse_examples() {
        let c = hemisphere_to_square(&s(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(c.representative().coords(), [0.0, 0.0]);
        let c = hemisphere_to_square(&s(0.0, 0.0, -1.0)).unwrap();
        assert_eq!(c.representative().coords(), [0.0, 0.0]);
        let c = hemisphere_to_square(&s(R2, R2, 0.0)).unwrap();
        assert!(c.representative().dist_inf(&ParamPoint::projective(1.0, 1.0).unwrap()) < 1e-15);
        let q = SpherePoint::normalize(0.3, -0.5, 0.7).unwrap();
        let a = hemisphere_to_square(&q).unwrap();
        let b = hemisphere_to_square(&q.antipode()).unwrap();
        assert!(a.approx_eq(&b, 1e-15));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&s(1.0, 0.0, 0.0)), Point4::ORIGIN);
        assert_eq!(embed(&s(0.0, 1.0, 0.0)), Point4::new(0.0, 0.0, 1.0, 0.0));
        assert!(close4(&embed(&s(0.0, R2, R2)), &Point4::new(0.0, 0.0, 0.0, 1.0), 1e-15));
    }

    #[test]
    fn squares_examples() {
        assert_eq!(squares(&Point4::new(0.0, 0.0, 1.0, 0.0), Branch::W).unwrap(), [0.0, 1.0, 0.0]);
        let q = embed(&s(0.6, 0.8, 0.0));
        assert!(close4(&q, &Point4::new(0.48, 0.0, 0.64, 0.0), 1e-15));
        let sq = squares(&q, Branch::U).unwrap();
        for (got, want) in sq.iter().zip([0.36, 0.64, 0.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        assert!(matches!(
            squares(&q, Branch::V),
            Err(Error::BranchNotApplicable { .. })
        ));
    }

    #[test]
    fn partial_inverse_examples() {
        assert_eq!(partial_inverse(&Point4::ORIGIN, Branch::Zero).unwrap().coords(), [1.0, 0.0, 0.0]);
        assert_eq!(
            partial_inverse(&Point4::new(0.0, 0.0, 1.0, 0.0), Branch::W).unwrap().coords(),
            [0.0, 1.0, 0.0]
        );
        let g = partial_inverse(&Point4::new(0.0, 0.0, 0.0, 1.0), Branch::T).unwrap();
        assert!(g.dist_inf(&s(0.0, R2, R2)) < 1e-15);
        assert!(partial_inverse(&Point4::new(0.0, 0.0, 0.0, 1.0), Branch::Zero).is_err());
    }

    #[test]
    fn w_branch_sign_on_the_x_zero_circle() {
        // x = 0 and yz < 0: the signs of u = v = 0 say nothing about y, z.
        let q = embed(&s(0.0, 0.8, -0.6));
        assert_eq!((q.u, q.v), (0.0, 0.0));
        assert!(q.w != 0.0 && q.t < 0.0);
        let g = partial_inverse(&q, Branch::W).unwrap();
        assert!(close4(&embed(&g), &q, 1e-15));
    }

    #[test]
    fn inverse_examples() {
        let c = inverse(&Point4::ORIGIN).unwrap();
        assert_eq!(c.representative().coords(), [1.0, 0.0, 0.0]);
        let c = inverse(&Point4::new(0.48, 0.0, 0.64, 0.0)).unwrap();
        assert!(c.representative().dist_inf(&s(0.6, 0.8, 0.0)) < 1e-15);
        let c = inverse(&Point4::new(0.0, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!(c.representative().coords(), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn inverse_rejects_off_surface() {
        assert!(matches!(inverse(&Point4::new(1.0, 0.0, 0.0, 0.0)), Err(Error::NotOnSurface(_))));
        assert!(inverse(&Point4::new(0.0, 0.0, 2.0, 0.0)).is_err());
        assert!(inverse(&Point4::new(f64::NAN, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn implicit_examples() {
        assert_eq!(implicit(&Point4::ORIGIN), (0.0, 0.0));
        assert_eq!(implicit(&Point4::new(1.0, 0.0, 0.0, 0.0)), (0.0, -2.0));
    }

    #[test]
    fn rp2_examples() {
        let c = rp2_normalize(&ProjectivePoint::new(2.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(c.representative().coords(), [1.0, 0.0, 0.0]);
        let c = rp2_normalize(&ProjectivePoint::new(0.0, 0.0, -5.0).unwrap()).unwrap();
        assert_eq!(c.representative().coords(), [0.0, 0.0, 1.0]);
        let base = ProjectivePoint::new(0.3, -1.2, 0.4).unwrap();
        let c0 = rp2_normalize(&base).unwrap();
        for lambda in [-3.0, 0.01, 1e6] {
            let c = rp2_normalize(&base.scaled(lambda).unwrap()).unwrap();
            assert!(c.approx_eq(&c0, 1e-15), "lambda {lambda}");
        }
        assert_eq!(sphere_to_rp2(&s(1.0, 0.0, 0.0)).coords(), [1.0, 0.0, 0.0]);
        assert_eq!(sphere_to_rp2(&s(0.0, 0.0, 1.0)).coords(), [0.0, 0.0, 1.0]);
    }

    #[test]
    fn dispatch_order() {
        assert_eq!(Branch::dispatch(&Point4::ORIGIN), Branch::Zero);
        assert_eq!(Branch::dispatch(&Point4::new(0.1, 0.2, 0.3, 0.4)), Branch::U);
        assert_eq!(Branch::dispatch(&Point4::new(0.0, 0.2, 0.3, 0.4)), Branch::V);
        assert_eq!(Branch::dispatch(&Point4::new(0.0, 0.0, 0.3, 0.4)), Branch::W);
        assert_eq!(Branch::dispatch(&Point4::new(0.0, 0.0, 0.0, 0.4)), Branch::T);
    }
}
