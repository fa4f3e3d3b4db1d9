use proptest::prelude::*;
use qlie_core::{qint, FieldElement, Var};

fn monomial() -> impl Strategy<Value = FieldElement> {
    (-3i64..=3, -2i64..=3, 0i64..=2, 0i64..=1).prop_map(|(c, v, l, m)| {
        FieldElement::from_int(c)
            * FieldElement::v_pow(v)
            * FieldElement::lam().pow(l).unwrap()
            * FieldElement::mu().pow(m).unwrap()
    })
}

fn poly() -> impl Strategy<Value = FieldElement> {
    prop::collection::vec(monomial(), 1..4).prop_map(|ms| ms.into_iter().fold(FieldElement::zero(), |a, b| a + b))
}

fn element() -> impl Strategy<Value = FieldElement> {
    (poly(), poly()).prop_map(|(n, d)| if d.is_zero() { n } else { n.checked_div(&d).unwrap() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in element()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_string_round_trips(a in element()) {
        let s = a.to_string();
        prop_assert_eq!(FieldElement::parse(&s).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), x in -3i64..=3) {
        let x = FieldElement::from_int(x);
        let s = |f: &FieldElement| f.substitute(Var::Lam, &x).unwrap();
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
    }
}

#[test]
fn quantum_integers() {
    assert_eq!(qint(1), FieldElement::one());
    assert_eq!(qint(2), FieldElement::q() + FieldElement::q_pow(-1));
    assert_eq!(qint(3).to_string(), "(v^8+v^4+1)/(v^4)");
    for n in 1..6 {
        assert_eq!(qint(n).at_q_one().unwrap(), FieldElement::from_int(n as i64));
    }
}

#[test]
fn pole_on_substitution() {
    let f = FieldElement::one().checked_div(&(qint(2) * FieldElement::lam() - FieldElement::one())).unwrap();
    let bad = qint(2).inv().unwrap();
    assert!(f.substitute(Var::Lam, &bad).is_err());
}
