use proptest::prelude::*;
use qlie_core::{FieldElement, LinearOperator, Space};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinearOperator> {
    prop::collection::vec((-2i64..=2, 0i64..=1), rows * cols).prop_map(move |cells| {
        LinearOperator::from_fn(Space::named("A", rows), Space::named("B", cols), |i, j| {
            let (c, e) = cells[i * cols + j];
            FieldElement::from_int(c) * FieldElement::v_pow(e)
        })
    })
}

fn square(n: usize) -> impl Strategy<Value = LinearOperator> {
    matrix(n, n).prop_map(move |m| m.relabel(Space::named("S", n), Space::named("S", n)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mixed_product(a in square(2), b in square(3), c in square(2), d in square(3)) {
        let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative(a in square(3), b in square(3), c in square(3)) {
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn transpose_reverses_composition(a in square(3), b in square(3)) {
        prop_assert_eq!(a.compose(&b).unwrap().transpose(), b.transpose().compose(&a.transpose()).unwrap());
    }

    #[test]
    fn rank_is_invariant_under_invertible_maps(a in square(3), g in square(3)) {
        if let Ok(gi) = g.inverse() {
            prop_assert!(g.compose(&gi).unwrap() == LinearOperator::identity(Space::named("S", 3)));
            prop_assert_eq!(g.compose(&a).unwrap().compose(&gi).unwrap().rank(), a.rank());
        }
    }

    #[test]
    fn json_round_trip(a in matrix(2, 3)) {
        let j = a.to_json();
        let b = LinearOperator::from_json(&j, a.codomain().clone(), a.domain().clone()).unwrap();
        prop_assert_eq!(b, a);
    }
}

#[test]
fn kron_is_big_endian() {
    let x = LinearOperator::from_fn(Space::v1_pow(1), Space::v1_pow(1), |i, j| FieldElement::from_int((2 * i + j) as i64));
    let id = LinearOperator::identity(Space::v1_pow(1));
    let k = x.kron(&id);
    // leftmost factor is the most significant index
    assert_eq!(k.get(2, 0), FieldElement::from_int(2));
    assert_eq!(k.get(0, 2), FieldElement::from_int(1));
    assert_eq!(format!("{}", k.domain()), "V1⊗2");
}

#[test]
fn shape_mismatch_is_an_error() {
    let a = LinearOperator::identity(Space::named("A", 2));
    let b = LinearOperator::identity(Space::named("B", 2));
    assert!(a.compose(&b).is_err());
    assert!(a.add(&b).is_err());
}

#[test]
fn strand_placement() {
    let s = LinearOperator::swap(&Space::v1_pow(1), &Space::v1_pow(1));
    let s12 = s.strand_place(1, 3).unwrap();
    let s23 = s.strand_place(2, 3).unwrap();
    let l = LinearOperator::chain(&[&s12, &s23, &s12]).unwrap();
    let r = LinearOperator::chain(&[&s23, &s12, &s23]).unwrap();
    assert_eq!(l, r);
}
