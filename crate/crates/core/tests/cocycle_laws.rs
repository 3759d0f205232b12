use eqcoh_core::degree::DegreeConfig;
use eqcoh_core::matrix::RationalMatrix;
use eqcoh_core::rational::{q, q_frac, sign};
use eqcoh_core::schwartz::fixtures::{i_minus_2p, power_cocycle};
use eqcoh_core::schwartz::*;
use proptest::prelude::*;

fn matrix(k: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-6i64..=6, 1i64..=3), k * k).prop_map(move |e| {
        let rows = e.chunks(k).map(|r| r.iter().map(|&(a, b)| q_frac(a, b)).collect()).collect();
        RationalMatrix::from_rows(rows).unwrap()
    })
}

/// `1 − K` invertible.
fn admissible_k(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max)
        .prop_flat_map(matrix)
        .prop_filter("eigenvalue one", |k| !RationalMatrix::identity(k.rows()).sub(k).determinant().eq(&q(0)))
}

fn cocycle() -> impl Strategy<Value = Cocycle> {
    prop_oneof![
        3 => admissible_k(2).prop_map(|k| Cocycle::linear(&k, q(1)).unwrap()),
        1 => (1u32..=2).prop_map(power_cocycle),
        1 => Just(Cocycle::zero()),
        1 => Just(i_minus_2p()),
    ]
}

fn index(c: &Cocycle) -> i64 {
    schwartz_index(c, &DegreeConfig::default()).unwrap().value.unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn linear_index_is_the_oracle(k in admissible_k(4)) {
        let c = Cocycle::linear(&k, q(1)).unwrap();
        prop_assert_eq!(index(&c), linear_ls_oracle(&CompactPerturbation::linear(&k)).unwrap());
    }

    #[test]
    fn index_with_a_block_is_the_sign_of_a_determinant(b in admissible_k(3), k in matrix(2), tail in prop_oneof![Just(1i64), Just(2), Just(-1)]) {
        let w = b.rows();
        let op = FredholmOperator::with_block(RationalMatrix::identity(w).sub(&b), q(tail)).unwrap();
        let c = Cocycle::new(op.clone(), CompactPerturbation::linear(&k), Picture::Pointed, q(1), None).unwrap();
        let n = minimal_truncation(&c);
        let m = op.section(n, n).add(&CompactPerturbation::linear(&k).padded(n).linear_part());
        prop_assume!(sign(&m.determinant()) != 0);
        // the reference map 1 ⊕ tail fixes the orientation of each truncation
        let reference = if tail < 0 { (-1i64).pow((n - w) as u32) } else { 1 };
        prop_assert_eq!(index(&c), sign(&m.determinant()) as i64 * reference);
        let ns: Vec<usize> = (n..n + 4).collect();
        prop_assert!(stabilization_check(&c, &ns, &DegreeConfig::default()).unwrap().consistent);
    }

    #[test]
    fn sum_adds(a in cocycle(), b in cocycle()) {
        prop_assert_eq!(index(&sum(&a, &b).unwrap()), index(&a) + index(&b));
    }

    #[test]
    fn inverse_negates_and_is_an_involution(a in cocycle()) {
        let i = inverse(&a);
        prop_assert_eq!(index(&i), -index(&a));
        prop_assert_eq!(inverse(&i), a);
    }

    #[test]
    fn sum_with_the_inverse_vanishes(a in cocycle()) {
        prop_assert_eq!(index(&sum(&a, &inverse(&a)).unwrap()), 0);
    }

    #[test]
    fn cup_multiplies(a in cocycle(), b in cocycle()) {
        prop_assert_eq!(index(&cup_product(&a, &b).unwrap()), index(&a) * index(&b));
    }

    #[test]
    fn suspension_preserves_the_index(a in cocycle()) {
        let s = suspension(&a);
        prop_assert_eq!(index(&s), index(&a));
        prop_assert_eq!(s.degree_label, a.degree_label + 1);
    }

    #[test]
    fn pictures_preserve_the_index(a in cocycle()) {
        let cfg = DegreeConfig::default();
        let b = picture_convert(&a, Picture::Boundary, &ConvertOptions::default(), &cfg).unwrap();
        let p = picture_convert(&b, Picture::Pointed, &ConvertOptions::default(), &cfg).unwrap();
        prop_assert_eq!(index(&b), index(&a));
        prop_assert_eq!(index(&p), index(&a));
    }

    #[test]
    fn json_round_trip(a in cocycle()) {
        let j = serde_json::to_string(&a.to_json()).unwrap();
        let back = Cocycle::from_json(&serde_json::from_str(&j).unwrap(), 64).unwrap();
        prop_assert_eq!(back, a);
    }
}
