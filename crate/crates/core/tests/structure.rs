use num_bigint::BigInt;
use proptest::prelude::*;

use modcodes::agcodes::{evaluation_code, weight_distribution};
use modcodes::curves::{frobenius_count, trace_of_frobenius, CurvePoint, WeierstrassModel};
use modcodes::qseries::{find_modular_relation, modular_poly_check, BivariatePoly};
use modcodes::riemannroch::{one_point_basis, OnePointKind};
use modcodes::PrimeField;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Points of `y^2 = x^3 - x + 1` over GF(9) = GF(3)[i], i^2 = -1, by brute force.
fn gf9_count() -> u64 {
    let mul = |(a, b): (u64, u64), (c, d): (u64, u64)| ((a * c + 6 - b * d % 3) % 3, (a * d + b * c) % 3);
    let elems: Vec<(u64, u64)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
    let mut n = 1;
    for &x in &elems {
        let x3 = mul(mul(x, x), x);
        let rhs = ((x3.0 + 3 - x.0 + 1) % 3, (x3.1 + 3 - x.1) % 3);
        n += elems.iter().filter(|&&y| mul(y, y) == rhs).count() as u64;
    }
    n
}

#[test]
fn frobenius_over_gf9() {
    let e = WeierstrassModel::new(0, 0, 0, -1, 1).unwrap().over(gf(3)).unwrap();
    let a = trace_of_frobenius(&e);
    assert_eq!(a, -3);
    assert_eq!(frobenius_count(a, 3, 2).unwrap(), BigInt::from(gf9_count()));
}

#[test]
fn level2_modular_polynomial() {
    let found = find_modular_relation(2, 3, 12).unwrap().expect("a relation exists");
    assert!(found.is_symmetric());
    assert_eq!((found.degree_x(), found.degree_y()), (3, 3));
    assert!(modular_poly_check(&found, 2, 20).unwrap().holds());

    let classical = BivariatePoly::from_terms([
        ((3, 0), BigInt::from(1)),
        ((0, 3), BigInt::from(1)),
        ((2, 2), BigInt::from(-1)),
        ((2, 1), BigInt::from(1488)),
        ((1, 2), BigInt::from(1488)),
        ((2, 0), BigInt::from(-162000)),
        ((0, 2), BigInt::from(-162000)),
        ((1, 1), BigInt::from(40773375)),
        ((1, 0), BigInt::from(8748000000i64)),
        ((0, 1), BigInt::from(8748000000i64)),
        ((0, 0), BigInt::from(-157464000000000i64)),
    ]);
    let sign = found.coeff(3, 0);
    let scaled = BivariatePoly::from_terms(classical.terms().map(|(&k, c)| (k, c * &sign)));
    assert_eq!(found, scaled);
}

fn level19_code(a: u32) -> modcodes::agcodes::LinearCode {
    let e = WeierstrassModel::new(0, 1, 1, 1, 0).unwrap().over(gf(13)).unwrap();
    let pts: Vec<CurvePoint> = e.enumerate_points().into_iter().filter(|p| p.affine().is_some()).collect();
    evaluation_code(&one_point_basis(OnePointKind::Elliptic, a), &pts, gf(13), "level 19").unwrap()
}

#[test]
fn dimension_equals_degree() {
    for a in 2..=10 {
        assert_eq!(level19_code(a).k(), a as usize);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn goppa_distance_bound(a in 2u32..=5) {
        let w = weight_distribution(&level19_code(a), 1).unwrap();
        prop_assert!(w.min_distance().unwrap() >= 17 - a as usize);
    }
}
