//! Equivalence relations of the quotient spaces and canonical representatives.
//!
//! Five relations are modelled:
//!
//! | relation | carrier      | identification                                   |
//! |----------|--------------|--------------------------------------------------|
//! | `Cm`     | `[-1,1]²`    | `(t, ±1) ~ (-t, ∓1)`                             |
//! | `Ct`     | `[-1,1]²`    | `(u, ±1) ~ (u, ∓1)`, `(±1, v) ~ (∓1, v)`         |
//! | `Cp`     | `[-1,1]²`    | `p ~ -p` for `p` on the boundary of the square   |
//! | `Sym`    | `S²`         | `s ~ -s`                                         |
//! | `Col`    | `R³ \ {0}`   | `p ~ λp`, `λ ≠ 0`                                |
//!
//! Classes have at most four members, so they are enumerated explicitly. The
//! `Ct` enumeration takes the product of the two edge identifications, which
//! relates all four corners of the square to each other.
//!
//! Boundary membership is decided with a tolerance: a coordinate within `tol`
//! of `±1` counts as being on that edge, and [`canonicalize`] snaps it to
//! exactly `±1`. Choosing between `p` and `-p` compares coordinates in a fixed
//! order, skipping coordinates within `tol` of zero, so the choice is stable
//! under round-off and [`canonicalize`] is exactly idempotent.

use crate::error::{Error, Result};
use crate::tolerance::TOL_EQ;

/// Which fundamental polygon a square parameter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polygon {
    /// `C_M`, the Möbius band.
    Mobius,
    /// `C_T`, the torus.
    Torus,
    /// `C_P`, the real projective plane.
    Projective,
}

impl Polygon {
    pub fn relation(self) -> Relation {
        match self {
            Polygon::Mobius => Relation::Cm,
            Polygon::Torus => Relation::Ct,
            Polygon::Projective => Relation::Cp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Cm,
    Ct,
    Cp,
    Sym,
    Col,
}

impl Relation {
    fn polygon(self) -> Option<Polygon> {
        match self {
            Relation::Cm => Some(Polygon::Mobius),
            Relation::Ct => Some(Polygon::Torus),
            Relation::Cp => Some(Polygon::Projective),
            Relation::Sym | Relation::Col => None,
        }
    }
}

/// A point `(a, b)` of the square `[-1,1]²`, tagged with its polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    a: f64,
    b: f64,
    polygon: Polygon,
}

impl ParamPoint {
    pub fn new(polygon: Polygon, a: f64, b: f64) -> Result<Self> {
        if !(a.abs() <= 1.0 && b.abs() <= 1.0) {
            return Err(Error::OutsideSquare { a, b });
        }
        Ok(Self { a, b, polygon })
    }

    pub fn mobius(t: f64, v: f64) -> Result<Self> {
        Self::new(Polygon::Mobius, t, v)
    }

    pub fn torus(u: f64, v: f64) -> Result<Self> {
        Self::new(Polygon::Torus, u, v)
    }

    pub fn projective(x: f64, y: f64) -> Result<Self> {
        Self::new(Polygon::Projective, x, y)
    }

    /// Builds a point, pulling coordinates that overshoot `[-1,1]` by at most
    /// `tol` back onto the boundary.
    pub(crate) fn clamped(polygon: Polygon, a: f64, b: f64, tol: f64) -> Result<Self> {
        let clamp = |c: f64| {
            if c.abs() > 1.0 && c.abs() <= 1.0 + tol {
                c.signum()
            } else {
                c
            }
        };
        Self::new(polygon, clamp(a), clamp(b))
    }

    const fn raw(polygon: Polygon, a: f64, b: f64) -> Self {
        Self { a, b, polygon }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn polygon(&self) -> Polygon {
        self.polygon
    }

    pub fn coords(&self) -> [f64; 2] {
        [self.a, self.b]
    }

    fn neg(self) -> Self {
        Self::raw(self.polygon, -self.a, -self.b)
    }

    fn dist(&self, other: &Self) -> f64 {
        (self.a - other.a).hypot(self.b - other.b)
    }

    /// Largest coordinate difference.
    pub fn dist_inf(&self, other: &Self) -> f64 {
        (self.a - other.a).abs().max((self.b - other.b).abs())
    }

    fn on_boundary(&self, tol: f64) -> bool {
        near_unit(self.a, tol) || near_unit(self.b, tol)
    }
}

impl std::fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::fmt::real;
        write!(f, "({}, {})", real(self.a), real(self.b))
    }
}

/// A unit vector of R³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    x: f64,
    y: f64,
    z: f64,
}

/// Allowed deviation of `‖s‖` from 1.
pub const UNIT_TOL: f64 = 1e-12;

impl SpherePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm.is_nan() || (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { x, y, z });
        }
        Ok(Self { x, y, z })
    }

    /// Scales a nonzero vector onto the sphere.
    pub fn normalize(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            // Very large inputs overflow the sum of squares; rescale first.
            let m = x.abs().max(y.abs()).max(z.abs());
            if m == 0.0 || !m.is_finite() {
                return Err(Error::ZeroVector);
            }
            return Self::normalize(x / m, y / m, z / m);
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn antipode(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    pub fn dist(&self, other: &Self) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn dist_inf(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

impl std::fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::fmt::real;
        write!(f, "({}, {}, {})", real(self.x), real(self.y), real(self.z))
    }
}

/// A nonzero vector of R³ standing for the line it spans.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectivePoint {
    x: f64,
    y: f64,
    z: f64,
}

impl ProjectivePoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite homogeneous coordinates ({x}, {y}, {z})"
            )));
        }
        if x == 0.0 && y == 0.0 && z == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { x, y, z })
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(lambda * self.x, lambda * self.y, lambda * self.z)
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use crate::fmt::real;
        write!(f, "({}:{}:{})", real(self.x), real(self.y), real(self.z))
    }
}

/// The canonical representative of an equivalence class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientClass<P> {
    representative: P,
    relation: Relation,
}

impl<P: Copy> QuotientClass<P> {
    pub fn representative(&self) -> P {
        self.representative
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }
}

impl QuotientClass<ParamPoint> {
    /// Coordinatewise distance between the two canonical representatives.
    pub fn rep_distance(&self, other: &Self) -> f64 {
        if self.relation != other.relation {
            return f64::INFINITY;
        }
        self.representative.dist_inf(&other.representative)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rep_distance(other) <= tol
    }
}

impl QuotientClass<SpherePoint> {
    pub fn rep_distance(&self, other: &Self) -> f64 {
        if self.relation != other.relation {
            return f64::INFINITY;
        }
        self.representative.dist_inf(&other.representative)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rep_distance(other) <= tol
    }
}

impl<P: std::fmt::Display> std::fmt::Display for QuotientClass<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.representative)
    }
}

fn near_unit(c: f64, tol: f64) -> bool {
    c.abs() >= 1.0 - tol
}

/// `+0.0` for either zero, `c` otherwise.
fn unsign_zero(c: f64) -> f64 {
    c + 0.0
}

/// Sign that makes the first coordinate of magnitude above `tol` positive.
fn orientation(coords: &[f64], tol: f64) -> f64 {
    coords
        .iter()
        .find(|c| c.abs() > tol)
        .map_or(1.0, |c| c.signum())
}

fn expect_relation(p: &ParamPoint, relation: Relation) -> Result<()> {
    match relation.polygon() {
        None => Err(Error::CarrierMismatch {
            relation,
            carrier: "the square",
        }),
        Some(expected) if expected != p.polygon => Err(Error::PolygonMismatch {
            expected,
            found: p.polygon,
        }),
        Some(_) => Ok(()),
    }
}

/// All members of the class of `p` under its polygon's relation.
pub fn class_members(p: &ParamPoint, tol: f64) -> Vec<ParamPoint> {
    let mut out = vec![*p];
    match p.polygon {
        Polygon::Mobius => {
            if near_unit(p.b, tol) {
                out.push(p.neg());
            }
        }
        Polygon::Projective => {
            if p.on_boundary(tol) {
                out.push(p.neg());
            }
        }
        Polygon::Torus => {
            let flips = |c: f64| {
                if near_unit(c, tol) {
                    vec![c, -c]
                } else {
                    vec![c]
                }
            };
            out.clear();
            for a in flips(p.a) {
                for b in flips(p.b) {
                    out.push(ParamPoint::raw(p.polygon, a, b));
                }
            }
        }
    }
    out
}

/// Minimum Euclidean distance from `p` to a member of the class of `q`.
pub fn class_distance(p: &ParamPoint, q: &ParamPoint, relation: Relation) -> Result<f64> {
    class_distance_with(p, q, relation, TOL_EQ)
}

pub fn class_distance_with(
    p: &ParamPoint,
    q: &ParamPoint,
    relation: Relation,
    tol: f64,
) -> Result<f64> {
    expect_relation(p, relation)?;
    expect_relation(q, relation)?;
    Ok(class_members(q, tol)
        .iter()
        .map(|m| p.dist(m))
        .fold(f64::INFINITY, f64::min))
}

fn related_as(p: &ParamPoint, q: &ParamPoint, relation: Relation, tol: f64) -> Result<bool> {
    Ok(class_distance_with(p, q, relation, tol)? <= tol)
}

/// `p ~CM q`: equal, or both on the `v = ±1` edges with `q = -p`.
pub fn related_cm(p: &ParamPoint, q: &ParamPoint) -> Result<bool> {
    related_as(p, q, Relation::Cm, TOL_EQ)
}

/// `p ~CT q`: equal after gluing opposite edges with the same orientation.
pub fn related_ct(p: &ParamPoint, q: &ParamPoint) -> Result<bool> {
    related_as(p, q, Relation::Ct, TOL_EQ)
}

/// `p ~CP q`: equal, or `p` on the boundary and `q = -p`.
pub fn related_cp(p: &ParamPoint, q: &ParamPoint) -> Result<bool> {
    related_as(p, q, Relation::Cp, TOL_EQ)
}

/// Relation of the polygon both points belong to.
pub fn related(p: &ParamPoint, q: &ParamPoint, tol: f64) -> Result<bool> {
    related_as(p, q, p.polygon.relation(), tol)
}

/// `s ~sym s'`: `s' = ±s`.
pub fn related_sym(p: &SpherePoint, q: &SpherePoint) -> bool {
    related_sym_with(p, q, TOL_EQ)
}

pub fn related_sym_with(p: &SpherePoint, q: &SpherePoint, tol: f64) -> bool {
    p.dist_inf(q) <= tol || p.dist_inf(&q.antipode()) <= tol
}

/// Distance between antipodal classes: `min(‖p - q‖, ‖p + q‖)`.
pub fn sym_distance(p: &SpherePoint, q: &SpherePoint) -> f64 {
    p.dist(q).min(p.dist(&q.antipode()))
}

/// `p ~col q`: the vectors span the same line. Compared through the cross
/// product of the normalized vectors.
pub fn related_col(p: &ProjectivePoint, q: &ProjectivePoint) -> bool {
    related_col_with(p, q, TOL_EQ)
}

pub fn related_col_with(p: &ProjectivePoint, q: &ProjectivePoint, tol: f64) -> bool {
    let (Ok(a), Ok(b)) = (
        SpherePoint::normalize(p.x, p.y, p.z),
        SpherePoint::normalize(q.x, q.y, q.z),
    ) else {
        return false;
    };
    let cross = [
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    ];
    cross.iter().map(|c| c * c).sum::<f64>().sqrt() <= tol
}

/// Canonical representative of the class of `p`.
///
/// - `Cm`: a point on `v = -1` is replaced by its partner `(-t, 1)`.
/// - `Ct`: every coordinate at `-1` becomes `+1`.
/// - `Cp`: a boundary point is replaced by whichever of `p`, `-p` is larger
///   in the order `(b, a)`.
pub fn canonicalize(p: ParamPoint, relation: Relation) -> Result<QuotientClass<ParamPoint>> {
    canonicalize_with(p, relation, TOL_EQ)
}

pub fn canonicalize_with(
    p: ParamPoint,
    relation: Relation,
    tol: f64,
) -> Result<QuotientClass<ParamPoint>> {
    expect_relation(&p, relation)?;
    let snap = |c: f64| {
        if near_unit(c, tol) {
            c.signum()
        } else {
            c
        }
    };
    let (a, b) = match relation {
        Relation::Cm => {
            if near_unit(p.b, tol) {
                let s = p.b.signum();
                (s * p.a, 1.0)
            } else {
                (p.a, p.b)
            }
        }
        Relation::Ct => {
            let lift = |c: f64| if near_unit(c, tol) { 1.0 } else { c };
            (lift(p.a), lift(p.b))
        }
        Relation::Cp => {
            if p.on_boundary(tol) {
                let (a, b) = (snap(p.a), snap(p.b));
                let s = orientation(&[b, a], tol);
                (s * a, s * b)
            } else {
                (p.a, p.b)
            }
        }
        Relation::Sym | Relation::Col => unreachable!("rejected by expect_relation"),
    };
    Ok(QuotientClass {
        representative: ParamPoint::raw(p.polygon, unsign_zero(a), unsign_zero(b)),
        relation,
    })
}

/// Canonical representative of an antipodal class: whichever of `s`, `-s`
/// is larger in the order `(z, y, x)`. `Col` restricted to the sphere is the
/// same relation and is accepted as an alias.
pub fn canonicalize_sphere(
    s: SpherePoint,
    relation: Relation,
) -> Result<QuotientClass<SpherePoint>> {
    canonicalize_sphere_with(s, relation, TOL_EQ)
}

pub fn canonicalize_sphere_with(
    s: SpherePoint,
    relation: Relation,
    tol: f64,
) -> Result<QuotientClass<SpherePoint>> {
    if !matches!(relation, Relation::Sym | Relation::Col) {
        return Err(Error::CarrierMismatch {
            relation,
            carrier: "the sphere",
        });
    }
    let sign = orientation(&[s.z, s.y, s.x], tol);
    Ok(QuotientClass {
        representative: SpherePoint {
            x: unsign_zero(sign * s.x),
            y: unsign_zero(sign * s.y),
            z: unsign_zero(sign * s.z),
        },
        relation: Relation::Sym,
    })
}

/// Builds a class from a representative the caller knows is canonical.
pub(crate) fn sym_class(s: SpherePoint) -> QuotientClass<SpherePoint> {
    canonicalize_sphere_with(s, Relation::Sym, TOL_EQ).expect("Sym is a sphere relation")
}
