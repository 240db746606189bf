//! Numeric certification of the identities relating the forward maps, their
//! inverses, the implicit equations and the quotient relations.
//!
//! [`run_suite`] evaluates every check of one surface over a square grid or
//! a sphere sample and reports the largest error seen per check. Reports are
//! deterministic in their inputs, including the sample seed.

mod probe;
mod report;
mod seam;

use std::fmt;
use std::str::FromStr;

pub use probe::{families as probe_families, scaled_drifts, ProbeFamily};
pub use report::{Check, VerifyReport};
pub use seam::{
    ratios_in_band, rows_to_csv, seam_rows, SeamRow, SeamSurface, QUADRATIC_RATIO, RATIO_BAND,
};

use report::Acc;

use crate::error::{Error, Result};
use crate::point::Point3;
use crate::projective::{self, Branch, ProjectivePoint};
use crate::quotient::{
    canonicalize_sphere_with, canonicalize_with, class_distance_with, class_members, related,
    related_col_with, related_sym_with, sym_distance, ParamPoint, Polygon, Relation, SpherePoint,
};
use crate::sampling::{fibonacci_sphere, random_sphere, special_sphere_points, GridSpec};
use crate::tolerance::Tolerances;
use crate::torus::TorusGeometry;
use crate::{mobius, torus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    Mobius,
    Torus,
    Projective,
    Hemisphere,
    Rp2,
}

impl SurfaceKind {
    pub const ALL: [SurfaceKind; 5] = [
        SurfaceKind::Mobius,
        SurfaceKind::Torus,
        SurfaceKind::Projective,
        SurfaceKind::Hemisphere,
        SurfaceKind::Rp2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Mobius => "mobius",
            SurfaceKind::Torus => "torus",
            SurfaceKind::Projective => "projective",
            SurfaceKind::Hemisphere => "hemisphere",
            SurfaceKind::Rp2 => "rp2",
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurfaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SurfaceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown surface {s:?}")))
    }
}

/// Inputs of [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Square grid of the Möbius, torus and hemisphere suites.
    pub grid: GridSpec,
    /// Fibonacci lattice size of the sphere suites.
    pub samples: usize,
    /// Extra uniformly random sphere points drawn from `seed`.
    pub random_samples: usize,
    pub seed: u64,
    pub geom: TorusGeometry,
    pub tol: Tolerances,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid: GridSpec::default(),
            samples: 500,
            random_samples: 100,
            seed: 0,
            geom: TorusGeometry::default(),
            tol: Tolerances::default(),
        }
    }
}

/// Every check of every suite with the property it certifies. Each property
/// appears exactly once.
pub const CATALOG: &[(SurfaceKind, &str, &str)] = &[
    (SurfaceKind::Mobius, "cm.reflexive_symmetric", "~CM is reflexive and symmetric"),
    (SurfaceKind::Mobius, "cm.idempotent", "canonicalize CM is idempotent"),
    (SurfaceKind::Mobius, "cm.canonical_equivalence", "~CM iff equal CM representatives"),
    (SurfaceKind::Mobius, "cm.distance_zero", "CM class distance zero iff ~CM"),
    (SurfaceKind::Mobius, "mobius.compatibility", "~CM iff equal images under m"),
    (SurfaceKind::Mobius, "mobius.injectivity", "unrelated CM nodes have separated images"),
    (SurfaceKind::Mobius, "mobius.right_inverse", "m after g_m is the identity on M"),
    (SurfaceKind::Mobius, "mobius.class_round_trip", "g_m after m is the CM projection"),
    (SurfaceKind::Mobius, "mobius.implicit_residual", "m lands on the cartesian equation of M"),
    (SurfaceKind::Mobius, "mobius.z_roots", "z is one of the two roots in (x, y)"),
    (SurfaceKind::Mobius, "mobius.seam_decay", "the Möbius seam gap decays quadratically"),
    (SurfaceKind::Mobius, "mobius.inverse_range", "g_m lands in the square"),
    (SurfaceKind::Torus, "ct.reflexive_symmetric", "~CT is reflexive and symmetric"),
    (SurfaceKind::Torus, "ct.transitive", "~CT is transitive at the corners"),
    (SurfaceKind::Torus, "ct.idempotent", "canonicalize CT is idempotent"),
    (SurfaceKind::Torus, "ct.canonical_equivalence", "~CT iff equal CT representatives"),
    (SurfaceKind::Torus, "ct.distance_zero", "CT class distance zero iff ~CT"),
    (SurfaceKind::Torus, "torus.compatibility", "~CT iff equal images under t"),
    (SurfaceKind::Torus, "torus.injectivity", "unrelated CT nodes have separated images"),
    (SurfaceKind::Torus, "torus.right_inverse", "t after g_t is the identity on T"),
    (SurfaceKind::Torus, "torus.class_round_trip", "g_t after t is the CT projection"),
    (SurfaceKind::Torus, "torus.implicit_residual", "t lands on the cartesian equation of T"),
    (SurfaceKind::Torus, "torus.interior_identity", "g_t after t is the identity inside the square"),
    (SurfaceKind::Torus, "torus.seam_decay", "the torus seam gap decays quadratically"),
    (SurfaceKind::Torus, "torus.inverse_range", "g_t lands in the square"),
    (SurfaceKind::Projective, "projective.antipodal_exact", "p(-s) = p(s) bit for bit"),
    (SurfaceKind::Projective, "projective.compatibility", "~sym iff equal images under p"),
    (SurfaceKind::Projective, "projective.overlap", "applicable partial inverses agree on classes"),
    (SurfaceKind::Projective, "projective.round_trip", "p after g_p is the identity on P"),
    (SurfaceKind::Projective, "projective.class_round_trip", "g_p after p is the sym projection"),
    (SurfaceKind::Projective, "projective.implicit_residual", "p lands on both equations of P"),
    (SurfaceKind::Projective, "projective.squares_agreement", "applicable branches agree on the squares"),
    (SurfaceKind::Projective, "projective.squares_sum", "the squares sum to 1"),
    (SurfaceKind::Projective, "projective.continuity_probe", "g_p is Cauchy along the 16 approach families"),
    (SurfaceKind::Hemisphere, "cp.reflexive_symmetric", "~CP is reflexive and symmetric"),
    (SurfaceKind::Hemisphere, "cp.idempotent", "canonicalize CP is idempotent"),
    (SurfaceKind::Hemisphere, "cp.canonical_equivalence", "~CP iff equal CP representatives"),
    (SurfaceKind::Hemisphere, "cp.distance_zero", "CP class distance zero iff ~CP"),
    (SurfaceKind::Hemisphere, "sym.reflexive_symmetric", "~sym is reflexive and symmetric"),
    (SurfaceKind::Hemisphere, "sym.idempotent", "canonicalize sym is idempotent"),
    (SurfaceKind::Hemisphere, "sym.canonical_equivalence", "~sym iff equal sym representatives"),
    (SurfaceKind::Hemisphere, "hemisphere.square_round_trip", "g after f is the identity on C_P"),
    (SurfaceKind::Hemisphere, "hemisphere.sphere_round_trip", "f after g is the identity on S"),
    (SurfaceKind::Hemisphere, "hemisphere.unit_output", "f lands on the unit sphere"),
    (SurfaceKind::Rp2, "col.reflexive_symmetric", "~col is reflexive and symmetric"),
    (SurfaceKind::Rp2, "col.canonical_equivalence", "~col iff equal normalized classes"),
    (SurfaceKind::Rp2, "rp2.sphere_round_trip", "normalize after inclusion is the identity on S"),
    (SurfaceKind::Rp2, "rp2.line_round_trip", "inclusion after normalize is the identity on RP2"),
    (SurfaceKind::Rp2, "rp2.scale_invariance", "normalize is invariant under nonzero scaling"),
];

/// Scales accepted by the RP² scale-invariance check.
pub const RP2_SCALES: [f64; 3] = [-3.0, 0.01, 1e6];

/// Probe parameters `10⁻ᵏ` of the continuity probe: drift is measured from
/// `k` to `k + 1` for each listed `k`.
pub const PROBE_DECADES: [i32; 4] = [2, 3, 4, 5];

/// Möbius seam probes run at these `t`.
pub const MOBIUS_SEAM_T: [f64; 4] = [-1.0, -0.5, 0.5, 1.0];

/// Seam decades of the suites.
pub const SEAM_DECADES: [i32; 3] = [2, 3, 4];

/// Runs every check of `surface`. Failed evaluations count as failed cases;
/// nothing here returns an error.
pub fn run_suite(surface: SurfaceKind, config: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::new(surface.name(), config.tol);
    match surface {
        SurfaceKind::Mobius => mobius_suite(config, &mut report),
        SurfaceKind::Torus => torus_suite(config, &mut report),
        SurfaceKind::Projective => projective_suite(config, &mut report),
        SurfaceKind::Hemisphere => hemisphere_suite(config, &mut report),
        SurfaceKind::Rp2 => rp2_suite(config, &mut report),
    }
    report
}

fn grid_points(grid: &GridSpec, polygon: Polygon) -> Vec<ParamPoint> {
    grid.nodes()
        .into_iter()
        .map(|(a, b)| ParamPoint::new(polygon, a, b).expect("grid nodes lie in the square"))
        .collect()
}

fn sphere_samples(config: &VerifyConfig) -> Vec<SpherePoint> {
    let mut out = fibonacci_sphere(config.samples);
    out.extend(special_sphere_points());
    out.extend(random_sphere(config.random_samples, config.seed));
    out
}

struct QuotientNames {
    reflexive_symmetric: &'static str,
    idempotent: &'static str,
    canonical_equivalence: &'static str,
    distance_zero: &'static str,
    transitive: Option<&'static str>,
}

struct ImageNames {
    compatibility: &'static str,
    injectivity: &'static str,
}

/// Relative image separation required of unrelated nodes.
const SEPARATION: f64 = 1e-3;

/// All pairwise checks over grid nodes: the relation's own axioms and, when
/// `images` is given, compatibility and injectivity of the embedding.
fn pair_checks(
    nodes: &[ParamPoint],
    relation: Relation,
    tol: &Tolerances,
    names: &QuotientNames,
    images: Option<(&[Point3], &ImageNames)>,
    report: &mut VerifyReport,
) {
    let eq = tol.eq;
    let reps: Vec<_> = nodes
        .iter()
        .map(|p| canonicalize_with(*p, relation, eq).map(|c| c.representative()))
        .collect();

    let mut idem = Acc::default();
    for rep in &reps {
        idem.push_bad(match rep {
            Ok(r) => canonicalize_with(*r, relation, eq).map(|c| c.representative()) != Ok(*r),
            Err(_) => true,
        });
    }

    let (mut refl_sym, mut canon, mut dist0) = (Acc::default(), Acc::default(), Acc::default());
    let (mut compat, mut inj) = (Acc::default(), Acc::default());
    for i in 0..nodes.len() {
        let p = &nodes[i];
        refl_sym.push_bad(related(p, p, eq) != Ok(true));
        for j in i + 1..nodes.len() {
            let q = &nodes[j];
            let (pq, qp) = (related(p, q, eq), related(q, p, eq));
            let cd = class_distance_with(p, q, relation, eq);
            let (Ok(pq), Ok(qp), Ok(cd)) = (pq, qp, cd) else {
                refl_sym.push_bad(true);
                continue;
            };
            refl_sym.push_bad(pq != qp);
            let same_rep = match (&reps[i], &reps[j]) {
                (Ok(a), Ok(b)) => a.dist_inf(b) <= eq,
                _ => !pq,
            };
            canon.push_bad(pq != same_rep);
            dist0.push_bad((cd <= eq) != pq);
            if let Some((img, _)) = images {
                compat.push_bad(pq != (img[i].dist_inf(&img[j]) <= eq));
                if !pq {
                    inj.push_bad(img[i].dist(&img[j]) <= SEPARATION * cd);
                }
            }
        }
    }
    report.checks.push(refl_sym.finish(names.reflexive_symmetric, 0.0));

    if let Some(name) = names.transitive {
        let mut trans = Acc::default();
        for p in nodes {
            for q in class_members(p, eq) {
                for r in class_members(&q, eq) {
                    trans.push_bad(related(p, &r, eq) != Ok(true));
                }
            }
        }
        report.checks.push(trans.finish(name, 0.0));
    }
    report.checks.push(idem.finish(names.idempotent, 0.0));
    report.checks.push(canon.finish(names.canonical_equivalence, 0.0));
    report.checks.push(dist0.finish(names.distance_zero, 0.0));
    if let Some((_, n)) = images {
        report.checks.push(compat.finish(n.compatibility, 0.0));
        report.checks.push(inj.finish(n.injectivity, 0.0));
    }
}

fn seam_check(name: &'static str, surfaces: &[SeamSurface], report: &mut VerifyReport) {
    let mut acc = Acc::default();
    for s in surfaces {
        match seam_rows(*s, &SEAM_DECADES) {
            Ok(rows) => rows.iter().filter_map(SeamRow::band_error).for_each(|e| acc.push(e)),
            Err(_) => acc.push(f64::INFINITY),
        }
    }
    report.checks.push(acc.finish(name, 1.0));
}

/// How far `(a, b)` leaves `[-1, 1]²`.
fn range_excess(a: f64, b: f64) -> f64 {
    (a.abs() - 1.0).max(b.abs() - 1.0).max(0.0)
}

fn mobius_suite(config: &VerifyConfig, report: &mut VerifyReport) {
    let tol = &config.tol;
    let nodes = grid_points(&config.grid, Polygon::Mobius);
    let images: Vec<Point3> = nodes.iter().map(mobius::embed).collect();
    pair_checks(
        &nodes,
        Relation::Cm,
        tol,
        &QuotientNames {
            reflexive_symmetric: "cm.reflexive_symmetric",
            idempotent: "cm.idempotent",
            canonical_equivalence: "cm.canonical_equivalence",
            distance_zero: "cm.distance_zero",
            transitive: None,
        },
        Some((
            &images,
            &ImageNames {
                compatibility: "mobius.compatibility",
                injectivity: "mobius.injectivity",
            },
        )),
        report,
    );

    let (mut rt, mut class_rt, mut res, mut roots, mut range) =
        (Acc::default(), Acc::default(), Acc::default(), Acc::default(), Acc::default());
    for (p, q) in nodes.iter().zip(&images) {
        rt.push_result(mobius::inverse_with(q, tol).map(|g| mobius::embed(&g).dist_inf(q)));
        let expected = canonicalize_with(*p, Relation::Cm, tol.eq);
        class_rt.push_result(
            mobius::inverse_class(q, tol).and_then(|c| Ok(c.rep_distance(&expected?))),
        );
        res.push(mobius::implicit(q).abs());
        if q.y.abs() > 1e-6 {
            roots.push_result(
                mobius::z_roots(q.x, q.y).map(|(a, b)| (a - q.z).abs().min((b - q.z).abs())),
            );
        }
        range.push_result(mobius::inverse_raw(q).map(|(t, v)| range_excess(t, v)));
    }
    report.checks.push(rt.finish("mobius.right_inverse", tol.rt));
    report.checks.push(class_rt.finish("mobius.class_round_trip", tol.eq));
    report.checks.push(res.finish("mobius.implicit_residual", tol.res));
    report.checks.push(roots.finish("mobius.z_roots", tol.eq));
    let probes: Vec<SeamSurface> = MOBIUS_SEAM_T
        .iter()
        .map(|&t| SeamSurface::Mobius { t })
        .collect();
    seam_check("mobius.seam_decay", &probes, report);
    report.checks.push(range.finish("mobius.inverse_range", tol.eq));
}

fn torus_suite(config: &VerifyConfig, report: &mut VerifyReport) {
    let (tol, geom) = (&config.tol, &config.geom);
    let nodes = grid_points(&config.grid, Polygon::Torus);
    let images: Vec<Point3> = nodes.iter().map(|p| torus::embed(p, geom)).collect();
    pair_checks(
        &nodes,
        Relation::Ct,
        tol,
        &QuotientNames {
            reflexive_symmetric: "ct.reflexive_symmetric",
            idempotent: "ct.idempotent",
            canonical_equivalence: "ct.canonical_equivalence",
            distance_zero: "ct.distance_zero",
            transitive: Some("ct.transitive"),
        },
        Some((
            &images,
            &ImageNames {
                compatibility: "torus.compatibility",
                injectivity: "torus.injectivity",
            },
        )),
        report,
    );

    let (mut rt, mut class_rt, mut res, mut interior, mut range) =
        (Acc::default(), Acc::default(), Acc::default(), Acc::default(), Acc::default());
    for (p, q) in nodes.iter().zip(&images) {
        rt.push_result(torus::inverse_with(q, geom, tol).map(|g| torus::embed(&g, geom).dist_inf(q)));
        let expected = canonicalize_with(*p, Relation::Ct, tol.eq);
        class_rt.push_result(
            torus::inverse_class(q, geom, tol).and_then(|c| Ok(c.rep_distance(&expected?))),
        );
        res.push(torus::implicit(q, geom).abs());
        let [u, v] = p.coords();
        let on_edge = u.abs() == 1.0 || v.abs() == 1.0;
        if !on_edge && ![0.0, 0.5, -0.5].contains(&u) {
            interior.push_result(torus::inverse_with(q, geom, tol).map(|g| g.dist_inf(p)));
        }
        range.push_result(torus::inverse_raw(q, geom).map(|(u, v)| range_excess(u, v)));
    }
    report.checks.push(rt.finish("torus.right_inverse", tol.rt));
    report.checks.push(class_rt.finish("torus.class_round_trip", tol.eq));
    report
        .checks
        .push(res.finish("torus.implicit_residual", tol.res * geom.residual_scale()));
    report.checks.push(interior.finish("torus.interior_identity", tol.eq));
    seam_check(
        "torus.seam_decay",
        &[SeamSurface::Torus {
            geom: *geom,
            v: 0.0,
        }],
        report,
    );
    report.checks.push(range.finish("torus.inverse_range", tol.eq));
}

fn projective_suite(config: &VerifyConfig, report: &mut VerifyReport) {
    let tol = &config.tol;
    let samples = sphere_samples(config);
    let images: Vec<_> = samples.iter().map(projective::embed).collect();

    let mut antipodal = Acc::default();
    for (s, q) in samples.iter().zip(&images) {
        let bits = |p: crate::point::Point4| p.to_array().map(f64::to_bits);
        antipodal.push_bad(bits(projective::embed(&s.antipode())) != bits(*q));
    }
    report.checks.push(antipodal.finish("projective.antipodal_exact", 0.0));

    let mut compat = Acc::default();
    for i in 0..samples.len() {
        for j in i..samples.len() {
            let same_image = images[i].dist_inf(&images[j]) <= tol.eq;
            compat.push_bad(same_image != related_sym_with(&samples[i], &samples[j], tol.eq));
        }
    }
    report.checks.push(compat.finish("projective.compatibility", 0.0));

    let (mut overlap, mut rt, mut class_rt, mut res, mut sq_agree, mut sq_sum) =
        (Acc::default(), Acc::default(), Acc::default(), Acc::default(), Acc::default(), Acc::default());
    for (s, q) in samples.iter().zip(&images) {
        let branches: Vec<Branch> = Branch::ALL.into_iter().filter(|b| b.applies(q)).collect();
        let classes: Vec<_> = branches
            .iter()
            .map(|&b| {
                projective::partial_inverse_with(q, b, tol.res)
                    .and_then(|s| canonicalize_sphere_with(s, Relation::Sym, tol.eq))
            })
            .collect();
        let squares: Vec<_> = branches
            .iter()
            .map(|&b| projective::squares_with(q, b, tol.res))
            .collect();
        for i in 0..branches.len() {
            for j in i + 1..branches.len() {
                overlap.push(match (&classes[i], &classes[j]) {
                    (Ok(a), Ok(b)) => a.rep_distance(b),
                    _ => f64::INFINITY,
                });
                sq_agree.push(match (&squares[i], &squares[j]) {
                    (Ok(a), Ok(b)) => (0..3).map(|k| (a[k] - b[k]).abs()).fold(0.0, f64::max),
                    _ => f64::INFINITY,
                });
            }
        }
        for sq in &squares {
            sq_sum.push_result(sq.as_ref().map(|c| (c.iter().sum::<f64>() - 1.0).abs()));
        }

        let inv = projective::inverse_with(q, tol);
        rt.push_result(
            inv.as_ref()
                .map(|c| projective::embed(&c.representative()).dist_inf(q)),
        );
        let expected = canonicalize_sphere_with(*s, Relation::Sym, tol.eq);
        class_rt.push_result(inv.and_then(|c| Ok(c.rep_distance(&expected?))));
        let (r1, r2) = projective::implicit(q);
        res.push(r1.abs().max(r2.abs()));
    }
    report.checks.push(overlap.finish("projective.overlap", tol.eq));
    report.checks.push(rt.finish("projective.round_trip", tol.rt));
    report.checks.push(class_rt.finish("projective.class_round_trip", tol.eq));
    report.checks.push(res.finish("projective.implicit_residual", tol.res));
    report.checks.push(sq_agree.finish("projective.squares_agreement", tol.eq));
    report.checks.push(sq_sum.finish("projective.squares_sum", tol.res));

    let mut probe = Acc::default();
    for family in probe_families() {
        match scaled_drifts(&family, &PROBE_DECADES, tol) {
            Ok(d) => d.into_iter().for_each(|x| probe.push(x)),
            Err(_) => probe.push(f64::INFINITY),
        }
    }
    report.checks.push(probe.finish("projective.continuity_probe", 10.0));
}

fn hemisphere_suite(config: &VerifyConfig, report: &mut VerifyReport) {
    let tol = &config.tol;
    let nodes = grid_points(&config.grid, Polygon::Projective);
    pair_checks(
        &nodes,
        Relation::Cp,
        tol,
        &QuotientNames {
            reflexive_symmetric: "cp.reflexive_symmetric",
            idempotent: "cp.idempotent",
            canonical_equivalence: "cp.canonical_equivalence",
            distance_zero: "cp.distance_zero",
            transitive: None,
        },
        None,
        report,
    );

    let samples = sphere_samples(config);
    let canon = |s: &SpherePoint| canonicalize_sphere_with(*s, Relation::Sym, tol.eq);
    let (mut refl_sym, mut idem, mut equiv) = (Acc::default(), Acc::default(), Acc::default());
    for (i, s) in samples.iter().enumerate() {
        refl_sym.push_bad(!related_sym_with(s, s, tol.eq));
        let rep = canon(s).map(|c| c.representative());
        idem.push_bad(rep.and_then(|r| canon(&r).map(|c| c.representative() != r)) != Ok(false));
        for t in &samples[i + 1..] {
            let rel = related_sym_with(s, t, tol.eq);
            refl_sym.push_bad(rel != related_sym_with(t, s, tol.eq));
            let same = match (canon(s), canon(t)) {
                (Ok(a), Ok(b)) => a.approx_eq(&b, tol.eq),
                _ => !rel,
            };
            equiv.push_bad(rel != same);
        }
    }
    report.checks.push(refl_sym.finish("sym.reflexive_symmetric", 0.0));
    report.checks.push(idem.finish("sym.idempotent", 0.0));
    report.checks.push(equiv.finish("sym.canonical_equivalence", 0.0));

    let (mut square_rt, mut unit) = (Acc::default(), Acc::default());
    for p in &nodes {
        let f = projective::square_to_hemisphere(p);
        unit.push_result(f.as_ref().map(|c| {
            let [x, y, z] = c.representative().coords();
            ((x * x + y * y + z * z).sqrt() - 1.0).abs()
        }));
        let back = f.and_then(|c| projective::hemisphere_to_square_with(&c.representative(), tol.eq));
        let expected = canonicalize_with(*p, Relation::Cp, tol.eq);
        square_rt.push_result(back.and_then(|c| Ok(c.rep_distance(&expected?))));
    }
    let mut sphere_rt = Acc::default();
    for s in &samples {
        let g = projective::hemisphere_to_square_with(s, tol.eq);
        let back = g.and_then(|c| projective::square_to_hemisphere(&c.representative()));
        sphere_rt.push_result(back.and_then(|c| Ok(c.rep_distance(&canon(s)?))));
    }
    report.checks.push(square_rt.finish("hemisphere.square_round_trip", tol.eq));
    report.checks.push(sphere_rt.finish("hemisphere.sphere_round_trip", tol.eq));
    report.checks.push(unit.finish("hemisphere.unit_output", tol.res));
}

fn rp2_suite(config: &VerifyConfig, report: &mut VerifyReport) {
    let tol = &config.tol;
    let samples = sphere_samples(config);
    // Off-sphere representatives: each sample scaled by a varying factor.
    let lines: Vec<ProjectivePoint> = samples
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let lambda = if i % 2 == 0 { 0.5 + i as f64 } else { -2.0 - 0.1 * i as f64 };
            projective::sphere_to_rp2(s).scaled(lambda).expect("nonzero scale")
        })
        .collect();

    let classes: Vec<_> = lines.iter().map(projective::rp2_normalize).collect();
    let (mut refl_sym, mut equiv) = (Acc::default(), Acc::default());
    for i in 0..lines.len() {
        refl_sym.push_bad(!related_col_with(&lines[i], &lines[i], tol.eq));
        for j in i + 1..lines.len() {
            let rel = related_col_with(&lines[i], &lines[j], tol.eq);
            refl_sym.push_bad(rel != related_col_with(&lines[j], &lines[i], tol.eq));
            let same = match (&classes[i], &classes[j]) {
                (Ok(a), Ok(b)) => sym_distance(&a.representative(), &b.representative()) <= tol.eq,
                _ => !rel,
            };
            equiv.push_bad(rel != same);
        }
    }
    report.checks.push(refl_sym.finish("col.reflexive_symmetric", 0.0));
    report.checks.push(equiv.finish("col.canonical_equivalence", 0.0));

    let mut sphere_rt = Acc::default();
    for s in &samples {
        let expected = canonicalize_sphere_with(*s, Relation::Sym, tol.eq);
        sphere_rt.push_result(
            projective::rp2_normalize(&projective::sphere_to_rp2(s))
                .and_then(|c| Ok(c.rep_distance(&expected?))),
        );
    }
    report.checks.push(sphere_rt.finish("rp2.sphere_round_trip", tol.eq));

    let (mut line_rt, mut scale) = (Acc::default(), Acc::default());
    for (p, class) in lines.iter().zip(&classes) {
        line_rt.push_bad(match class {
            Ok(c) => !related_col_with(&projective::sphere_to_rp2(&c.representative()), p, tol.eq),
            Err(_) => true,
        });
        for lambda in RP2_SCALES {
            let scaled = p.scaled(lambda).and_then(|sp| projective::rp2_normalize(&sp));
            scale.push(match (scaled, class) {
                (Ok(a), Ok(b)) => a.rep_distance(b),
                _ => f64::INFINITY,
            });
        }
    }
    report.checks.push(line_rt.finish("rp2.line_round_trip", 0.0));
    report.checks.push(scale.finish("rp2.scale_invariance", tol.eq));
}
