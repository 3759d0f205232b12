use eqcoh_core::burnside::*;
use eqcoh_core::group::library;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_marks(m: &TableOfMarks, rng: &mut ChaCha8Rng) -> MarksVector {
    let k = m.len();
    let a = BurnsideElement { coefficients: (0..k).map(|_| rng.gen_range(-4..=4)).collect() };
    let mut v = char(m, &a).unwrap();
    if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..k);
        v.values[i] += rng.gen_range(1..=3);
    }
    v
}

#[test]
fn congruences_agree_with_integrality() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, g) in library::corpus() {
        let m = TableOfMarks::new(&g);
        for _ in 0..300 {
            let v = random_marks(&m, &mut rng);
            let r = membership_check(&m, &v).unwrap();
            assert_eq!(r.integral, r.congruences_hold, "{name}: {:?}", v.values);
        }
    }
}

#[test]
fn diagonal_is_weyl_order_and_first_row_is_index() {
    for (name, g) in library::corpus() {
        let m = TableOfMarks::new(&g);
        let t = m.classes();
        for i in 0..m.len() {
            assert_eq!(m.marks()[i][i], t.class(i).weyl_order as i64, "{name}");
            assert_eq!(m.marks()[0][i] as usize, g.order() / t.class(i).order(), "{name}");
            for j in 0..i {
                assert_eq!(m.marks()[i][j], 0, "{name}");
            }
        }
    }
}

#[test]
fn restriction_is_a_ring_map_and_frobenius_holds() {
    for (name, g) in library::corpus().into_iter().filter(|(_, g)| g.order() <= 24) {
        let m = TableOfMarks::new(&g);
        for h in 0..m.len() {
            let sub = m.subgroup_ring(m.classes().representative(h)).unwrap();
            for i in 0..m.len() {
                for j in 0..m.len() {
                    let (a, b) = (m.basis(i), m.basis(j));
                    let lhs = restriction(&m, &sub, &mul(&m, &a, &b).unwrap()).unwrap();
                    let ra = restriction(&m, &sub, &a).unwrap();
                    let rb = restriction(&m, &sub, &b).unwrap();
                    assert_eq!(lhs, mul(&sub.marks, &ra, &rb).unwrap(), "{name}");
                }
                let a = m.basis(i);
                for k in 0..sub.marks.len() {
                    let b = sub.marks.basis(k);
                    let lhs = mul(&m, &a, &induction(&m, &sub, &b).unwrap()).unwrap();
                    let rhs = induction(&m, &sub, &mul(&sub.marks, &restriction(&m, &sub, &a).unwrap(), &b).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{name}");
                }
            }
        }
    }
}

#[test]
fn idempotents_are_orthogonal_and_indicate_classes() {
    use num_traits::{One, Zero};
    for (name, g) in library::corpus() {
        let m = TableOfMarks::new(&g);
        let e = rational_idempotents(&m);
        for i in 0..m.len() {
            let c = char_rational(&m, &e[i]);
            for j in 0..m.len() {
                assert_eq!(c[j].is_one(), i == j, "{name}");
                assert!(i == j || c[j].is_zero(), "{name}");
                let p = mul_rational(&m, &e[i], &e[j]);
                if i == j {
                    assert_eq!(p, e[i], "{name}");
                } else {
                    assert!(p.iter().all(Zero::is_zero), "{name}");
                }
            }
        }
    }
}

#[test]
fn augmentation_filtration_decreases() {
    for name in ["C2", "C3", "V4", "S3", "C4"] {
        let g = library::by_name(name).unwrap();
        let m = TableOfMarks::new(&g);
        let i = augmentation_ideal(&m);
        let mut prev = i.clone();
        for n in 2..=4 {
            let next = ideal_power(&m, &i, n).unwrap();
            assert!(next.is_contained_in(&prev), "{name} power {n}");
            prev = next;
        }
    }
}

fn s3() -> TableOfMarks {
    TableOfMarks::new(&library::symmetric(3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_is_an_injective_ring_map(a in prop::collection::vec(-5i64..=5, 4), b in prop::collection::vec(-5i64..=5, 4)) {
        let m = s3();
        let (a, b) = (BurnsideElement { coefficients: a }, BurnsideElement { coefficients: b });
        let (ca, cb) = (char(&m, &a).unwrap(), char(&m, &b).unwrap());
        let sum = char(&m, &a.add(&b)).unwrap();
        prop_assert_eq!(sum.values, ca.values.iter().zip(&cb.values).map(|(x, y)| x + y).collect::<Vec<_>>());
        let prod = char(&m, &mul(&m, &a, &b).unwrap()).unwrap();
        prop_assert_eq!(prod.values, ca.values.iter().zip(&cb.values).map(|(x, y)| x * y).collect::<Vec<_>>());
        if ca.values.iter().all(|&x| x == 0) {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in prop::collection::vec(-3i64..=3, 4),
        b in prop::collection::vec(-3i64..=3, 4),
        c in prop::collection::vec(-3i64..=3, 4),
    ) {
        let m = s3();
        let (a, b, c) = (
            BurnsideElement { coefficients: a },
            BurnsideElement { coefficients: b },
            BurnsideElement { coefficients: c },
        );
        prop_assert_eq!(mul(&m, &a, &b).unwrap(), mul(&m, &b, &a).unwrap());
        let left = mul(&m, &mul(&m, &a, &b).unwrap(), &c).unwrap();
        let right = mul(&m, &a, &mul(&m, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
