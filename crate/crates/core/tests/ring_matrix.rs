use std::sync::Arc;

use crystbraid_core::matrix::{MonomialDecomposition, PolyMatrix};
use crystbraid_core::ring::{poly_arith, LaurentPoly, PolyOp, VarSet};
use proptest::prelude::*;

fn vars() -> Arc<VarSet> {
    VarSet::new(["q", "t"]).unwrap()
}

fn basis(d: usize) -> Arc<Vec<String>> {
    Arc::new((1..=d).map(|i| format!("e({i})")).collect())
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -3i32..=3, -3i32..=3), 0..5).prop_map(|terms| {
        let v = vars();
        terms.into_iter().fold(LaurentPoly::zero(&v), |acc, (c, a, b)| &acc + &LaurentPoly::monomial(&v, c, vec![a, b]))
    })
}

fn unit() -> impl Strategy<Value = LaurentPoly> {
    (prop_oneof![Just(-1i64), Just(1i64)], -2i32..=2, -2i32..=2).prop_map(|(c, a, b)| LaurentPoly::monomial(&vars(), c, vec![a, b]))
}

fn matrix(d: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop::collection::vec(poly(), d), d)
        .prop_map(move |rows| PolyMatrix::from_rows(&vars(), &basis(d), rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        let add = |x: &LaurentPoly, y: &LaurentPoly| poly_arith(PolyOp::Add, x, y).unwrap();
        let mul = |x: &LaurentPoly, y: &LaurentPoly| poly_arith(PolyOp::Mul, x, y).unwrap();
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert!(poly_arith(PolyOp::Sub, &a, &a).unwrap().is_zero());
        prop_assert_eq!(add(&a, &poly_arith(PolyOp::Neg, &b, &b).unwrap()), poly_arith(PolyOp::Sub, &a, &b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(a in poly()) {
        let back = LaurentPoly::parse(&vars(), &a.to_string()).unwrap();
        prop_assert_eq!(back.terms().collect::<Vec<_>>(), a.terms().collect::<Vec<_>>());
    }

    #[test]
    fn units_invert(u in unit()) {
        let inv = u.inverse_unit().unwrap();
        prop_assert!((&u * &inv).is_one());
    }

    #[test]
    fn matrix_pow_is_additive(m in matrix(2), a in 0u64..4, b in 0u64..4) {
        prop_assert_eq!(m.pow(a + b), m.pow(a).mul(&m.pow(b)).unwrap());
    }

    #[test]
    fn matrix_product_is_associative(x in matrix(2), y in matrix(2), z in matrix(2)) {
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn decompose_then_rebuild(perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), scalars in prop::collection::vec(unit(), 4)) {
        let d = MonomialDecomposition { perm, scalars };
        let m = PolyMatrix::from_decomposition(&vars(), &basis(4), &d).unwrap();
        prop_assert_eq!(m.monomial_decompose().unwrap(), d.clone());
        let inv = m.inverse_unit_pivot().unwrap();
        prop_assert!(m.mul(&inv).unwrap().is_identity());
    }
}
