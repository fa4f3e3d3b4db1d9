use qlie_core::diagrams::{enumerate_tl, jones_wenzl, Crossing, CrossingDiagram, DiagramSum, PlanarDiagram, Regime};
use qlie_core::uqsl2::{braid_operator, equivariance_defect_strands, defect_is_zero};
use qlie_core::{qint, FieldElement, LinearOperator};

const REGIMES: [Regime; 2] = [Regime::Quantum, Regime::Classical];

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[test]
fn loop_values() {
    assert_eq!(Regime::Quantum.loop_value(), -qint(2));
    assert_eq!(Regime::Classical.loop_value(), FieldElement::from_int(-2));
}

#[test]
fn diagram_counts_are_catalan() {
    for n in 0..=5 {
        assert_eq!(enumerate_tl(n, n).unwrap().len(), catalan(n), "TL_{n}");
    }
    assert_eq!(enumerate_tl(3, 1).unwrap().len(), 2);
    assert!(enumerate_tl(2, 1).is_err());
}

#[test]
fn temperley_lieb_relations() {
    for r in REGIMES {
        let n = 4;
        let e = |i| DiagramSum::e(n, i, r).unwrap();
        for i in 1..n {
            assert_eq!(e(i).compose(&e(i)).unwrap(), e(i).scale(&r.loop_value()), "e_{i}^2");
        }
        for i in 1..n - 1 {
            assert_eq!(e(i).compose(&e(i + 1)).unwrap().compose(&e(i)).unwrap(), e(i));
            assert_eq!(e(i + 1).compose(&e(i)).unwrap().compose(&e(i + 1)).unwrap(), e(i + 1));
        }
        assert_eq!(e(1).compose(&e(3)).unwrap(), e(3).compose(&e(1)).unwrap());
    }
}

#[test]
fn evaluation_is_a_functor() {
    for r in REGIMES {
        let ds = enumerate_tl(3, 3).unwrap();
        for a in &ds {
            for b in &ds {
                let (c, loops) = a.compose(b).unwrap();
                let lhs = c.evaluate(r).scale(&r.loop_value().pow(loops as i64).unwrap());
                let rhs = a.evaluate(r).compose(&b.evaluate(r)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let x = PlanarDiagram::e(2, 1).unwrap();
        let y = PlanarDiagram::identity(1);
        assert_eq!(x.tensor(&y).evaluate(r), x.evaluate(r).kron(&y.evaluate(r)));
    }
}

#[test]
fn jones_wenzl_idempotents() {
    for r in REGIMES {
        for n in 1..=4 {
            let p = jones_wenzl(n, r).unwrap();
            assert_eq!(p.compose(&p).unwrap(), p, "p_{n} idempotent");
            for i in 1..n {
                let e = DiagramSum::e(n, i, r).unwrap();
                assert!(e.compose(&p).unwrap().terms().is_empty(), "e_{i} p_{n}");
                assert!(p.compose(&e).unwrap().terms().is_empty(), "p_{n} e_{i}");
            }
            assert_eq!(p.evaluate().rank(), n + 1, "rank p_{n}");
        }
    }
}

#[test]
fn jones_wenzl_2_coefficient() {
    let p = jones_wenzl(2, Regime::Quantum).unwrap();
    let e = PlanarDiagram::e(2, 1).unwrap();
    assert_eq!(p.coeff(&e), qint(2).inv().unwrap());
    assert_eq!(p.coeff(&PlanarDiagram::identity(2)), FieldElement::one());
}

#[test]
fn braid_relation_and_inverse() {
    let s = |pos, positive| CrossingDiagram::new(3, vec![Crossing { pos, positive }]).unwrap();
    let b = |cs: Vec<(usize, bool)>| {
        braid_operator(&CrossingDiagram::new(3, cs.into_iter().map(|(pos, positive)| Crossing { pos, positive }).collect()).unwrap())
            .unwrap()
    };
    assert_eq!(b(vec![(1, true), (2, true), (1, true)]), b(vec![(2, true), (1, true), (2, true)]));
    let one = braid_operator(&s(1, true)).unwrap().compose(&braid_operator(&s(1, false)).unwrap()).unwrap();
    assert_eq!(one, LinearOperator::identity(one.domain().clone()));
}

#[test]
fn crossings_are_equivariant() {
    let c = braid_operator(&CrossingDiagram::cable(1, 1, true)).unwrap();
    assert!(defect_is_zero(&equivariance_defect_strands(&c, 2, 2).unwrap()));
}

#[test]
fn bad_crossing_position() {
    assert!(CrossingDiagram::new(2, vec![Crossing { pos: 2, positive: true }]).is_err());
    assert!(PlanarDiagram::e(2, 2).is_err());
}
