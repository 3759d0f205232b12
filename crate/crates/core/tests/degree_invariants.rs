use eqcoh_core::burnside::TableOfMarks;
use eqcoh_core::degree::{brouwer_degree, equivariant_degree, DegreeConfig, Domain, Method};
use eqcoh_core::group::library;
use eqcoh_core::matrix::RationalMatrix;
use eqcoh_core::poly::{Polynomial, PolynomialMap};
use eqcoh_core::rational::{q, q_frac, Q};
use eqcoh_core::rep::OrthogonalRep;
use proptest::prelude::*;

/// A diagonal linear map with entries of size at least one, plus a
/// perturbation whose sup on the unit ball stays below one.
#[derive(Debug, Clone)]
struct Dominated {
    diag: Vec<i64>,
    /// `(component, exponents, numerator)`; numerators are over `den`.
    terms: Vec<(usize, Vec<u32>, i64)>,
    den: i64,
}

impl Dominated {
    fn dim(&self) -> usize {
        self.diag.len()
    }

    fn expected(&self) -> i64 {
        self.diag.iter().map(|d| d.signum()).product()
    }

    fn map(&self, t: &Q) -> PolynomialMap {
        let n = self.dim();
        let a = RationalMatrix::diagonal(&self.diag.iter().map(|&d| q(d)).collect::<Vec<_>>());
        let mut comps: Vec<Polynomial> = PolynomialMap::linear(&a).components().to_vec();
        for (j, e, c) in &self.terms {
            comps[*j].add_term(e.clone(), q_frac(*c, self.den) * t);
        }
        PolynomialMap::new(n, comps).unwrap()
    }
}

fn dominated(max_dim: usize, odd: bool) -> impl Strategy<Value = Dominated> {
    (1..=max_dim).prop_flat_map(move |n| {
        let diag = prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], n);
        let term = (0..n, prop::collection::vec(0u32..=2, n), -2i64..=2)
            .prop_map(move |(j, mut e, c)| {
                if odd && e.iter().sum::<u32>() % 2 == 0 {
                    e[j] += 1;
                }
                (j, e, c)
            });
        (diag, prop::collection::vec(term, 0..=4)).prop_map(|(diag, terms)| {
            // each monomial is at most 1 on the unit ball, so |p| ≤ Σ|c|/den < 1
            let den = 2 * terms.iter().map(|t| t.2.abs()).sum::<i64>().max(1);
            Dominated { diag, terms, den }
        })
    })
}

fn degree(f: &PolynomialMap) -> i64 {
    brouwer_degree(f, &Domain::unit_ball(f.nvars()), Method::Auto, &DegreeConfig::default()).unwrap().value
}

fn signed_permutation(perm: &[usize], signs: &[bool]) -> RationalMatrix {
    let n = perm.len();
    let mut p = RationalMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = q(if signs[i] { -1 } else { 1 });
    }
    p
}

fn perm_and_signs(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<bool>)> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn admissible_homotopies_preserve_degree(d in dominated(3, false), t in 0i64..=3) {
        let f = d.map(&q_frac(t, 3));
        prop_assert_eq!(degree(&f), d.expected());
    }

    #[test]
    fn degree_of_a_product_multiplies(a in dominated(2, false), b in dominated(2, false)) {
        let (f, g) = (a.map(&q(1)), b.map(&q(1)));
        prop_assert_eq!(degree(&f.direct_sum(&g)), degree(&f) * degree(&g));
    }

    #[test]
    fn conjugation_by_a_signed_permutation(
        (d, (perm, signs)) in dominated(3, false).prop_flat_map(|d| { let n = d.dim(); (Just(d), perm_and_signs(n)) })
    ) {
        let p = signed_permutation(&perm, &signs);
        let f = d.map(&q(1));
        let g = f.compose_linear(&p.transpose()).left_multiply(&p);
        prop_assert_eq!(degree(&g), degree(&f));
    }

    #[test]
    fn zero_count_agrees_with_winding_on_dominated_maps(d in dominated(2, false).prop_filter("plane", |d| d.dim() == 2)) {
        let f = d.map(&q(1));
        let cfg = DegreeConfig::default();
        let disk = Domain::unit_ball(2);
        let w = brouwer_degree(&f, &disk, Method::Winding, &cfg).unwrap().value;
        let z = brouwer_degree(&f, &disk, Method::ZeroCount, &cfg).unwrap().value;
        prop_assert_eq!(w, z);
        prop_assert_eq!(w, d.expected());
    }

    #[test]
    fn equivariant_degree_is_conjugation_invariant(
        (d, (perm, signs)) in dominated(2, true).prop_flat_map(|d| { let n = d.dim(); (Just(d), perm_and_signs(n)) })
    ) {
        let g = library::cyclic(2);
        let m = TableOfMarks::new(&g);
        let n = d.dim();
        let rho = OrthogonalRep::sign(g, n);
        let cfg = DegreeConfig::default();
        let ball = Domain::unit_ball(n);
        let f = d.map(&q(1));
        let p = signed_permutation(&perm, &signs);
        let h = f.compose_linear(&p.transpose()).left_multiply(&p);
        let a = equivariant_degree(&f, &rho, &ball, &m, &cfg).unwrap();
        let b = equivariant_degree(&h, &rho, &ball, &m, &cfg).unwrap();
        prop_assert_eq!(&a.element, &b.element);
        // degree e on V and 1 on V^{C2} = 0 give e = 2a + b with b = 1
        prop_assert_eq!(a.element.coefficients, vec![(d.expected() - 1) / 2, 1]);
    }
}

#[test]
fn negated_identity_alternates() {
    for n in 1..=5 {
        assert_eq!(degree(&PolynomialMap::identity(n).neg()), if n % 2 == 0 { 1 } else { -1 });
    }
}
