use std::f64::consts::PI;

use fundpoly::angles::{atan2, sign_pos, sign_strict, sin_arctan};
use fundpoly::fmt::real;
use fundpoly::projective::{self, Branch, ProjectivePoint};
use fundpoly::quotient::{
    canonicalize, canonicalize_sphere, class_distance, class_members, related, related_col,
    related_sym, sym_distance,
};
use fundpoly::{mobius, torus, ParamPoint, Polygon, Relation, SpherePoint, TorusGeometry};
use proptest::prelude::*;

const EQ: f64 = 1e-9;

/// Square coordinates with extra weight on the values where branches and
/// identifications change.
fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![
        3 => -1.0..=1.0f64,
        1 => prop::sample::select(vec![-1.0, -0.5, 0.0, 0.5, 1.0]),
    ]
}

fn param(polygon: Polygon) -> impl Strategy<Value = ParamPoint> {
    (coord(), coord()).prop_map(move |(a, b)| ParamPoint::new(polygon, a, b).unwrap())
}

fn any_param() -> impl Strategy<Value = ParamPoint> {
    prop_oneof![
        param(Polygon::Mobius),
        param(Polygon::Torus),
        param(Polygon::Projective)
    ]
}

fn unit() -> impl Strategy<Value = SpherePoint> {
    let c = prop_oneof![3 => -1.0..=1.0f64, 1 => prop::sample::select(vec![-1.0, 0.0, 1.0])];
    (c.clone(), c.clone(), c)
        .prop_filter("nonzero", |&(x, y, z): &(f64, f64, f64)| x * x + y * y + z * z > 1e-6)
        .prop_map(|(x, y, z)| SpherePoint::normalize(x, y, z).unwrap())
}

fn geometry() -> impl Strategy<Value = TorusGeometry> {
    (0.1..10.0f64, 1.05..4.0f64).prop_map(|(r, k)| TorusGeometry::new(k * r, r).unwrap())
}

proptest! {
    #[test]
    fn atan2_matches_direction(x in -1e3..1e3f64, y in -1e3..1e3f64) {
        prop_assume!(x != 0.0 || y != 0.0);
        let th = atan2(y, x).unwrap().radians();
        let n = x.hypot(y);
        prop_assert!((th.cos() - x / n).abs() < 1e-12);
        prop_assert!((th.sin() - y / n).abs() < 1e-12);
        prop_assert!(th > -PI && th <= PI);
        // Oracle: the standard library away from the branch cut.
        if y != 0.0 || x > 0.0 {
            prop_assert!((th - y.atan2(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn sin_arctan_identity(x in -1e6..1e6f64) {
        let expected = atan2(x, 1.0).unwrap().radians().sin();
        prop_assert!((sin_arctan(x) - expected).abs() < 1e-15);
    }

    #[test]
    fn signs_agree_off_zero(x in prop::num::f64::NORMAL) {
        prop_assert_eq!(sign_strict(x).unwrap(), sign_pos(x));
    }

    #[test]
    fn real_round_trips(x in prop::num::f64::ANY) {
        prop_assume!(x.is_finite());
        let text = real(x);
        let back: f64 = text.parse().unwrap();
        prop_assert!(back == x);
        let digits = text
            .split(['e', 'E'])
            .next()
            .unwrap()
            .chars()
            .filter(char::is_ascii_digit)
            .collect::<String>();
        prop_assert!(digits.trim_start_matches('0').len() <= 17, "{}", text);
    }

    #[test]
    fn canonicalize_is_idempotent(p in any_param()) {
        let rel = p.polygon().relation();
        let c = canonicalize(p, rel).unwrap().representative();
        prop_assert_eq!(canonicalize(c, rel).unwrap().representative(), c);
    }

    #[test]
    fn class_members_share_the_canonical_rep(p in any_param()) {
        let rel = p.polygon().relation();
        let c = canonicalize(p, rel).unwrap();
        for m in class_members(&p, EQ) {
            prop_assert!(related(&p, &m, EQ).unwrap());
            prop_assert!(related(&m, &p, EQ).unwrap());
            prop_assert!(canonicalize(m, rel).unwrap().approx_eq(&c, EQ));
        }
    }

    #[test]
    fn related_iff_same_rep(p in any_param(), b in coord(), a in coord()) {
        let q = ParamPoint::new(p.polygon(), a, b).unwrap();
        let rel = p.polygon().relation();
        let r = related(&p, &q, EQ).unwrap();
        prop_assert_eq!(r, related(&q, &p, EQ).unwrap());
        let same = canonicalize(p, rel).unwrap().approx_eq(&canonicalize(q, rel).unwrap(), EQ);
        prop_assert_eq!(r, same);
        prop_assert_eq!(class_distance(&p, &q, rel).unwrap() <= EQ, r);
    }

    #[test]
    fn mobius_round_trip(p in param(Polygon::Mobius)) {
        let q = mobius::embed(&p);
        prop_assert!(mobius::implicit(&q).abs() <= 1e-12);
        let g = mobius::inverse(&q).unwrap();
        prop_assert!(mobius::embed(&g).dist_inf(&q) <= 1e-9);
        let c = canonicalize(g, Relation::Cm).unwrap();
        prop_assert!(c.approx_eq(&canonicalize(p, Relation::Cm).unwrap(), 1e-9));
    }

    #[test]
    fn mobius_z_root_recovers_z(p in param(Polygon::Mobius)) {
        let q = mobius::embed(&p);
        prop_assume!(q.y.abs() > 1e-6);
        let (a, b) = mobius::z_roots(q.x, q.y).unwrap();
        prop_assert!((a - q.z).abs().min((b - q.z).abs()) <= 1e-9);
    }

    #[test]
    fn torus_round_trip(p in param(Polygon::Torus), geom in geometry()) {
        let q = torus::embed(&p, &geom);
        prop_assert!(torus::implicit(&q, &geom).abs() <= 1e-12 * geom.residual_scale());
        let g = torus::inverse(&q, &geom).unwrap();
        prop_assert!(torus::embed(&g, &geom).dist_inf(&q) <= 1e-9 * geom.major().max(1.0));
        let c = canonicalize(g, Relation::Ct).unwrap();
        prop_assert!(c.approx_eq(&canonicalize(p, Relation::Ct).unwrap(), 1e-9));
    }

    #[test]
    fn torus_compatibility(p in param(Polygon::Torus), q in param(Polygon::Torus)) {
        let g = TorusGeometry::default();
        let close = torus::embed(&p, &g).dist_inf(&torus::embed(&q, &g)) <= EQ;
        prop_assert_eq!(close, related(&p, &q, EQ).unwrap());
    }

    #[test]
    fn mobius_compatibility(p in param(Polygon::Mobius), q in param(Polygon::Mobius)) {
        let close = mobius::embed(&p).dist_inf(&mobius::embed(&q)) <= EQ;
        prop_assert_eq!(close, related(&p, &q, EQ).unwrap());
    }

    #[test]
    fn projective_antipodal_exactness(s in unit()) {
        let a = projective::embed(&s).to_array().map(f64::to_bits);
        let b = projective::embed(&s.antipode()).to_array().map(f64::to_bits);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn projective_round_trip(s in unit()) {
        let q = projective::embed(&s);
        let (r1, r2) = projective::implicit(&q);
        prop_assert!(r1.abs().max(r2.abs()) <= 1e-12);
        let c = projective::inverse(&q).unwrap();
        prop_assert!(projective::embed(&c.representative()).dist_inf(&q) <= 1e-9);
        prop_assert!(sym_distance(&c.representative(), &s) <= 1e-9);
    }

    #[test]
    fn projective_branches_overlap(s in unit()) {
        let q = projective::embed(&s);
        for b in Branch::ALL.into_iter().filter(|b| b.applies(&q)) {
            let sq = projective::squares(&q, b).unwrap();
            prop_assert!((sq.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            let expected = [s.x() * s.x(), s.y() * s.y(), s.z() * s.z()];
            for k in 0..3 {
                prop_assert!((sq[k] - expected[k]).abs() <= 1e-9, "{:?} {:?}", b, sq);
            }
            let g = projective::partial_inverse(&q, b).unwrap();
            prop_assert!(sym_distance(&g, &s) <= 1e-9, "{:?} {}", b, g);
        }
    }

    #[test]
    fn projective_compatibility(s in unit(), t in unit()) {
        let close = projective::embed(&s).dist_inf(&projective::embed(&t)) <= EQ;
        prop_assert_eq!(close, related_sym(&s, &t));
    }

    #[test]
    fn hemisphere_composites(p in param(Polygon::Projective), s in unit()) {
        let f = projective::square_to_hemisphere(&p).unwrap();
        let back = projective::hemisphere_to_square(&f.representative()).unwrap();
        prop_assert!(back.approx_eq(&canonicalize(p, Relation::Cp).unwrap(), 1e-9));

        let g = projective::hemisphere_to_square(&s).unwrap();
        let back = projective::square_to_hemisphere(&g.representative()).unwrap();
        prop_assert!(back.approx_eq(&canonicalize_sphere(s, Relation::Sym).unwrap(), 1e-9));
    }

    #[test]
    fn rp2_scale_invariance(s in unit(), lambda in prop_oneof![-1e6..-1e-3f64, 1e-3..1e6f64]) {
        let p = projective::sphere_to_rp2(&s);
        let scaled = p.scaled(lambda).unwrap();
        prop_assert!(related_col(&p, &scaled));
        let a = projective::rp2_normalize(&p).unwrap();
        let b = projective::rp2_normalize(&scaled).unwrap();
        prop_assert!(a.approx_eq(&b, 1e-9));
        prop_assert!(a.approx_eq(&canonicalize_sphere(s, Relation::Sym).unwrap(), 1e-9));
    }
}

#[test]
fn rp2_rejects_zero() {
    assert!(ProjectivePoint::new(0.0, 0.0, 0.0).is_err());
}
