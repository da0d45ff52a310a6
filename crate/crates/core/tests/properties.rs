use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use trinorm_core::{
    reduce_cusp_to_infinity, Arc, CuspClass, EisensteinInt, ExtendedRational, FordCircle, QuadraticPoint,
    Radicand, UnimodularMatrix,
};

fn word(letters: &[u8]) -> UnimodularMatrix {
    letters.iter().fold(UnimodularMatrix::identity(), |acc, &l| {
        let g = match l % 4 {
            0 => UnimodularMatrix::new(1, 2, 0, 1),
            1 => UnimodularMatrix::new(1, -2, 0, 1),
            2 => UnimodularMatrix::new(1, 0, 2, 1),
            _ => UnimodularMatrix::new(1, 0, -2, 1),
        };
        acc.compose(&g.unwrap())
    })
}

/// Random PSL(2,Z) element as a word in T, T⁻¹ and S.
fn modular_word(letters: &[u8]) -> UnimodularMatrix {
    letters.iter().fold(UnimodularMatrix::identity(), |acc, &l| {
        let g = match l % 3 {
            0 => UnimodularMatrix::translation(1),
            1 => UnimodularMatrix::translation(-1),
            _ => UnimodularMatrix::inversion(),
        };
        acc.compose(&g)
    })
}

fn cusp() -> impl Strategy<Value = ExtendedRational> {
    prop_oneof![
        1 => Just(ExtendedRational::infinity()),
        9 => (-500i64..500, 1i64..500).prop_map(|(n, d)| ExtendedRational::new(n, d).unwrap()),
    ]
}

fn rational(q: (i64, i64)) -> BigRational {
    BigRational::new(q.0.into(), q.1.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scaling_does_not_change_a_cusp(n in -1000i64..1000, d in 1i64..1000, s in 1i64..50) {
        let a = ExtendedRational::new(n, d).unwrap();
        let b = ExtendedRational::new(n * s, d * s).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.num().gcd(a.den()) == BigInt::from(1));
    }

    #[test]
    fn cusp_class_is_constant_on_gamma2_orbits(r in cusp(), letters in prop::collection::vec(0u8..4, 0..12)) {
        let g = word(&letters);
        prop_assert!(g.in_gamma2());
        prop_assert_eq!(g.apply_to_cusp(&r).cusp_class(), r.cusp_class());
    }

    #[test]
    fn lambda_length_is_invariant(x in cusp(), y in cusp(), letters in prop::collection::vec(0u8..3, 0..16)) {
        prop_assume!(x != y);
        let g = modular_word(&letters);
        let arc = Arc::new(x, y).unwrap();
        prop_assert_eq!(arc.image(&g).lambda_length(), arc.lambda_length());
    }

    #[test]
    fn action_is_a_group_action(
        r in cusp(),
        u in prop::collection::vec(0u8..3, 0..10),
        v in prop::collection::vec(0u8..3, 0..10),
    ) {
        let (g, h) = (modular_word(&u), modular_word(&v));
        prop_assert_eq!(g.compose(&h).apply_to_cusp(&r), g.apply_to_cusp(&h.apply_to_cusp(&r)));
        prop_assert_eq!(g.inverse().apply_to_cusp(&g.apply_to_cusp(&r)), r);
    }

    #[test]
    fn reduction_sends_the_cusp_to_infinity(n in -1000i64..1000, d in 1i64..1000) {
        let r = ExtendedRational::new(n, d).unwrap();
        match reduce_cusp_to_infinity(&r) {
            Ok(g) => {
                prop_assert_eq!(r.cusp_class(), CuspClass::Infinity);
                prop_assert!(g.in_gamma2());
                prop_assert!(g.apply_to_cusp(&r).is_infinity());
            }
            Err(_) => prop_assert_ne!(r.cusp_class(), CuspClass::Infinity),
        }
    }

    #[test]
    fn imaginary_part_transforms_by_the_cocycle(
        x in (-50i64..50, 1i64..20),
        y in (1i64..50, 1i64..20),
        three in any::<bool>(),
        letters in prop::collection::vec(0u8..3, 0..10),
    ) {
        let radicand = if three { Radicand::Three } else { Radicand::One };
        let z = QuadraticPoint::new(rational(x), rational(y), radicand).unwrap();
        let g = modular_word(&letters);
        let image = g.apply_to_point(&z);
        // Im(gz) = Im z / |cz + d|²
        let [_, _, c, d] = g.entries().map(|e| BigRational::from(e.clone()));
        let re = &c * z.x() + &d;
        let im = &c * z.y();
        let scale = &re * &re + &im * &im * BigRational::from(BigInt::from(radicand.value()));
        prop_assert_eq!(image.y(), &(z.y() / scale));
        prop_assert_eq!(image.radicand(), radicand);
    }

    #[test]
    fn eisenstein_norm_symmetries(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let z = EisensteinInt::new(a, b);
        prop_assert_eq!(EisensteinInt::new(b, a).norm(), z.norm());
        prop_assert_eq!(EisensteinInt::new(-a, -b).norm(), z.norm());
        prop_assert_eq!(EisensteinInt::new(a - b, -b).norm(), z.norm());
        for w in z.associates() {
            prop_assert_eq!(w.norm(), z.norm());
        }
        prop_assert_eq!(z.canonical().norm(), z.norm());
    }

    #[test]
    fn farey_neighbours_have_tangent_ford_circles(n in -200i64..200, d in 1i64..200, k in -5i64..5) {
        prop_assume!(n.gcd(&d) == 1);
        // b/e with n·e − b·d = 1 is a Farey neighbour of n/d
        let bez = n.extended_gcd(&d);
        let (b, e) = (-bez.y + k * n, bez.x + k * d);
        prop_assume!(e != 0);
        let here = FordCircle::at(&ExtendedRational::new(n, d).unwrap());
        let there = FordCircle::at(&ExtendedRational::new(b, e).unwrap());
        prop_assert!(here.is_tangent_to(&there));
        let far = FordCircle::at(&ExtendedRational::new(2 * b + n, 2 * e + d).unwrap());
        prop_assert!(!here.is_tangent_to(&far));
    }
}

#[test]
fn ford_circle_at_infinity_is_the_horoball() {
    let inf = FordCircle::at(&ExtendedRational::infinity());
    assert!(inf.is_horoball_at_infinity());
    for n in -3..4 {
        assert!(inf.is_tangent_to(&FordCircle::at(&ExtendedRational::integer(n))));
    }
    assert!(!inf.is_tangent_to(&FordCircle::at(&ExtendedRational::new(1, 2).unwrap())));
}
