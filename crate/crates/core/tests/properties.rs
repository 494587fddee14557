//! Randomized invariants of the arithmetic and combinatorial layers.

use proptest::prelude::*;
use wreath_macdonald::algebra::json::{qt_from_json, qt_to_json};
use wreath_macdonald::algebra::{solve_sylvester, CycloScalar, Mono, QTPoly, QTRational, RatMatrix, Rational};
use wreath_macdonald::combinat::{all_epartitions, families, EPartition, MShape, Symbol, SymbolType};

fn poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..=3), 0..4).prop_map(|terms| {
        QTPoly::from_terms(terms.into_iter().map(|(dq, dt, c)| (Mono::new(dq, dt), CycloScalar::from_int(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = QTPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = QTRational> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| QTRational::new(n, d).unwrap())
}

fn cyclo(e: u32) -> impl Strategy<Value = CycloScalar> {
    prop::collection::vec(-4i64..=4, e as usize).prop_map(move |c| {
        CycloScalar::from_coords(e, c.into_iter().map(|x| Rational::from_integer(x.into())).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn common_factors_cancel(a in poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let x = QTRational::new(&a * &c, &b * &c).unwrap();
        let y = QTRational::new(a, b).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn json_round_trip(a in rational()) {
        prop_assert_eq!(qt_from_json(&qt_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn cyclotomic_inverse_and_conjugation(x in cyclo(5), y in cyclo(5)) {
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
    }

    #[test]
    fn inverse_and_determinant(entries in prop::collection::vec(rational(), 8)) {
        let a = RatMatrix::from_rows(vec![entries[..2].to_vec(), entries[2..4].to_vec()]);
        let b = RatMatrix::from_rows(vec![entries[4..6].to_vec(), entries[6..].to_vec()]);
        prop_assert_eq!(a.mm(&b).det().unwrap(), &a.det().unwrap() * &b.det().unwrap());
        if !a.det().unwrap().is_zero() {
            prop_assert!(a.mm(&a.inverse().unwrap()).is_identity());
        }
    }

    #[test]
    fn sylvester_solution_satisfies_equation(c in prop::collection::vec(rational(), 4), k in 1i64..4) {
        // spectra {q, t} and {q+k, 2t} are disjoint
        let (q, t) = (QTRational::q(), QTRational::t());
        let a = RatMatrix::from_rows(vec![vec![q.clone(), QTRational::one()], vec![QTRational::zero(), t.clone()]]);
        let b = RatMatrix::from_rows(vec![
            vec![&q + &QTRational::from_int(k), QTRational::zero()],
            vec![t.clone(), &t * &QTRational::from_int(2)],
        ]);
        let c = RatMatrix::from_rows(vec![c[..2].to_vec(), c[2..].to_vec()]);
        let x = solve_sylvester(&a, &b, &c).unwrap();
        prop_assert_eq!(a.mm(&x).sub(&x.mm(&b)).unwrap(), c);
    }

    #[test]
    fn labels_round_trip(n in 0u32..6, e in 1usize..4, pick in any::<prop::sample::Index>()) {
        let all = all_epartitions(n, e);
        let a = &all[pick.index(all.len())];
        prop_assert_eq!(&EPartition::parse(&a.to_text()).unwrap(), a);
        let shape = MShape::default_for(n, e);
        let s = Symbol::from_epartition(a, &shape, SymbolType::UNIPOTENT).unwrap();
        prop_assert_eq!(&s.to_epartition(), a);
        prop_assert_eq!(&s.shift().to_epartition(), a);
    }
}

/// Shifting every row by one box keeps the family partition.
#[test]
fn families_survive_shift() {
    for (n, m) in [(2u32, vec![2usize, 1]), (3, vec![3, 2]), (2, vec![2, 2, 2])] {
        let shape = MShape::new(m).unwrap();
        let key = |s: &MShape| -> Vec<Vec<EPartition>> {
            let mut fams: Vec<Vec<EPartition>> = families(n, s, SymbolType::UNIPOTENT)
                .unwrap()
                .iter()
                .map(|f| {
                    let mut l: Vec<EPartition> = f.members().iter().map(|x| x.to_epartition()).collect();
                    l.sort();
                    l
                })
                .collect();
            fams.sort();
            fams
        };
        let shifted = shape.shift();
        let fewer = key(&shape);
        let more = key(&shifted);
        for f in &fewer {
            assert_inside(&more, f);
        }
    }
}

fn assert_inside(fams: &[Vec<EPartition>], f: &[EPartition]) {
    assert!(fams.iter().any(|g| f.iter().all(|a| g.contains(a))), "{f:?} split by the shift");
}
