use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use tritile_core::analysis::{classify_vertices, census_identity_check, deduce_ratios, two_relation_ratio, Relation, Witness};
use tritile_core::exact::{zh_sign, AngleClass, EdgeLabel, SymLen, TileSpec};
use tritile_core::generators::{gen_kite, gen_parallelogram, gen_quadratic};
use tritile_core::geometry::{Point, RigidMotion};
use tritile_core::invariant::{zh_kite_parallelogram_check, zh_tiling};

fn class() -> impl Strategy<Value = AngleClass> {
    (0i64..6, -40i64..40).prop_map(|(j, k)| AngleClass::new(j, k))
}

fn rational_spec() -> impl Strategy<Value = TileSpec> {
    (1i64..60, 1i64..12, 1i64..60, 1i64..12).prop_map(|(p, q, r, s)| {
        TileSpec::from_rational_sides(BigRational::new(p.into(), q.into()), BigRational::new(r.into(), s.into())).unwrap()
    })
}

fn symlen() -> impl Strategy<Value = SymLen> {
    (-50i64..50, -50i64..50, -50i64..50).prop_map(|(a, b, c)| SymLen::from_ints(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zh_sign_is_multiplicative(x in class(), y in class()) {
        prop_assert_eq!(zh_sign(x + y), zh_sign(x) * zh_sign(y));
    }

    #[test]
    fn symlen_forms_a_module(x in symlen(), y in symlen(), z in symlen(), k in -9i64..9) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!((&x + &y).scale(k), &x.scale(k) + &y.scale(k));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn zh_identity_survives_rigid_motions(n in 1usize..5, rot in class(), tx in -50.0f64..50.0, ty in -50.0f64..50.0, frame in class()) {
        let spec = TileSpec::from_integer_sides(3, 5).unwrap();
        let t = gen_quadratic(&spec, n, frame).unwrap();
        let moved = t.transformed(&RigidMotion { rotation: rot, translation: Point::new(tx, ty) }).unwrap();
        let r = zh_tiling(&moved, None).unwrap();
        prop_assert_eq!(r.symbolic_equal, Some(true));
        prop_assert_eq!(Some(r.zh_tiling), r.zh_boundary);
    }

    #[test]
    fn kites_and_parallelograms_are_null(spec in rational_spec(), frame in class(), shared in 0usize..3) {
        let label = EdgeLabel::ALL[shared];
        for t in [gen_kite(&spec, label, AngleClass::ZERO).unwrap(), gen_parallelogram(&spec, label, AngleClass::ZERO).unwrap()] {
            if label == EdgeLabel::C {
                prop_assert!(zh_kite_parallelogram_check(&t.tiles[0], &t.tiles[1], frame).unwrap().is_zero());
            }
            prop_assert!(zh_tiling(&t, Some(frame)).unwrap().zh_tiling.is_zero());
        }
    }

    #[test]
    fn census_balances_on_quadratic_tilings(n in 1usize..7, frame in class()) {
        let spec = TileSpec::from_integer_sides(3, 5).unwrap();
        let t = gen_quadratic(&spec, n, frame).unwrap();
        let cen = classify_vertices(&t).unwrap();
        prop_assert_eq!(census_identity_check(&cen, cen.corner_contrib), 0);
        prop_assert_eq!((cen.n_alpha, cen.n_beta, cen.n_gamma), (n * n, n * n, n * n));
    }

    #[test]
    fn closed_form_ratio_matches_kernel(j in 1i64..30, p in 1i64..30, q in 1i64..30, jj in 1i64..30, pp in 1i64..30, qq in 1i64..30) {
        let rels = [Relation::new(EdgeLabel::A, j, p, q, Witness::Derived), Relation::new(EdgeLabel::B, jj, pp, qq, Witness::Derived)];
        let closed = two_relation_ratio((j, p, q), (jj, pp, qq)).unwrap();
        let int = |x: i64| BigRational::from_integer(BigInt::from(x));
        // With b = 1 the a-relation gives c.
        let c = (int(j) * &closed - int(p)) / int(q);
        match deduce_ratios(&rels) {
            Ok(r) => {
                prop_assert_eq!(r.a_over_b, Some(closed));
                prop_assert_eq!(r.c_over_b, Some(c.clone()));
                prop_assert!(c > int(0));
            }
            Err(_) => prop_assert!(c <= int(0)),
        }
    }
}
