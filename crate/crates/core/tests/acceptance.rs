//! One line per acceptance criterion; exits non-zero if any fails.

use eqcoh_core::burnside::*;
use eqcoh_core::catalog::{almost_connected_reduce, MaximalCompact};
use eqcoh_core::degree::{brouwer_degree, equivariant_degree, DegreeConfig, Domain, Method};
use eqcoh_core::group::library;
use eqcoh_core::matrix::RationalMatrix;
use eqcoh_core::poly::{Polynomial, PolynomialMap};
use eqcoh_core::rational::{q, q_frac, Q};
use eqcoh_core::rep::OrthogonalRep;
use eqcoh_core::schwartz::fixtures::*;
use eqcoh_core::schwartz::*;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

const SEED: u64 = 20_240_917;

const LIMIT_S3: Duration = Duration::from_secs(1);
const LIMIT_CONGRUENCE: Duration = Duration::from_secs(120);
const LIMIT_SIGN_CUBIC: Duration = Duration::from_secs(1);
const LIMIT_LS: Duration = Duration::from_secs(30);
const LIMIT_LAWS: Duration = Duration::from_secs(120);

const MIN_CORPUS: usize = 10;
const VECTORS_PER_GROUP: usize = 1000;
const MIN_LS_CASES: usize = 20;
const STABILIZATION_SPAN: usize = 8;
const MIN_LAW_CASES: usize = 50;
const MIN_PLANE_MAPS: usize = 30;
const MAX_POWER: u32 = 6;

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(t: Instant, limit: Duration) -> Result<String, String> {
    let e = t.elapsed();
    check(e < limit, || format!("took {e:.2?}, limit {limit:?}"))?;
    Ok(format!("{e:.2?}"))
}

fn s3_marks_and_product() -> Outcome {
    let t = Instant::now();
    let m = TableOfMarks::new(&library::symmetric(3));
    let want = vec![vec![6, 3, 2, 1], vec![0, 1, 0, 1], vec![0, 0, 2, 1], vec![0, 0, 0, 1]];
    check(m.marks() == want.as_slice(), || format!("marks {:?}", m.marks()))?;
    let c2 = m.basis(1);
    let sq = mul(&m, &c2, &c2).map_err(|e| e.to_string())?;
    let rhs = m.basis(0).add(&m.basis(1));
    check(sq == rhs, || format!("[S3/C2]^2 = {:?}", sq.coefficients))?;
    within(t, LIMIT_S3)
}

fn random_marks(m: &TableOfMarks, rng: &mut ChaCha8Rng) -> MarksVector {
    let k = m.len();
    let a = BurnsideElement { coefficients: (0..k).map(|_| rng.gen_range(-5..=5)).collect() };
    let mut v = char(m, &a).expect("sized");
    if rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=2) {
            let i = rng.gen_range(0..k);
            v.values[i] += rng.gen_range(-3..=3);
        }
    }
    v
}

fn congruence_integrality() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let corpus = library::corpus();
    check(corpus.len() >= MIN_CORPUS, || format!("corpus has {} groups", corpus.len()))?;
    let (mut agree, mut integral) = (0, 0);
    for (name, g) in &corpus {
        let m = TableOfMarks::new(g);
        for _ in 0..VECTORS_PER_GROUP {
            let v = random_marks(&m, &mut rng);
            let r = membership_check(&m, &v).map_err(|e| e.to_string())?;
            check(r.integral == r.congruences_hold, || format!("{name}: verdicts differ on {:?}", v.values))?;
            agree += 1;
            integral += r.integral as usize;
        }
    }
    Ok(format!("{} groups, {agree} vectors ({integral} integral), {}", corpus.len(), within(t, LIMIT_CONGRUENCE)?))
}

fn sign_cubic_and_identity() -> Outcome {
    let cfg = DegreeConfig::default();
    let t = Instant::now();
    let g = library::cyclic(2);
    let m = TableOfMarks::new(&g);
    let cubic = PolynomialMap::new(1, vec![Polynomial::from_terms(1, [(vec![3], q(1)), (vec![1], q(-1))])]).unwrap();
    let e = equivariant_degree(&cubic, &OrthogonalRep::sign(g, 1), &Domain::origin_ball(1, q(2)), &m, &cfg)
        .map_err(|e| e.to_string())?;
    check(e.element == m.basis(1), || format!("x^3 - x gives {:?}", e.element.coefficients))?;
    let elapsed = within(t, LIMIT_SIGN_CUBIC)?;
    let corpus = library::corpus();
    for (name, g) in &corpus {
        let m = TableOfMarks::new(g);
        let rho = OrthogonalRep::permutation(g.clone());
        let n = rho.dimension();
        let e = equivariant_degree(&PolynomialMap::identity(n), &rho, &Domain::origin_ball(n, q(1)), &m, &cfg)
            .map_err(|e| format!("{name}: {e}"))?;
        check(e.element == m.basis(m.len() - 1), || format!("{name}: identity gives {:?}", e.element.coefficients))?;
    }
    Ok(format!("sign cubic in {elapsed}, identity on {} groups", corpus.len()))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Q {
    q_frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

fn random_matrix(k: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    RationalMatrix::from_rows((0..k).map(|_| (0..k).map(|_| small_rational(rng)).collect()).collect()).unwrap()
}

fn ls_oracle() -> Outcome {
    let cfg = DegreeConfig::default();
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut cases = vec![RationalMatrix::from_i64(&[&[2]])];
    while cases.len() < MIN_LS_CASES + 4 {
        let k = random_matrix(rng.gen_range(1..=4), &mut rng);
        if !RationalMatrix::identity(k.rows()).sub(&k).determinant().is_zero() {
            cases.push(k);
        }
    }
    let mut negative = 0;
    for k in &cases {
        let c = Cocycle::linear(k, q(1)).map_err(|e| e.to_string())?;
        let oracle = linear_ls_oracle(&CompactPerturbation::linear(k)).map_err(|e| e.to_string())?;
        let got = schwartz_index(&c, &cfg).map_err(|e| e.to_string())?.value;
        check(got == Some(oracle), || format!("K = {:?}: index {got:?}, oracle {oracle}", k.to_strings()))?;
        negative += (oracle < 0) as usize;
        let n0 = minimal_truncation(&c);
        let ns: Vec<usize> = (n0..=n0 + STABILIZATION_SPAN).collect();
        let r = stabilization_check(&c, &ns, &cfg).map_err(|e| e.to_string())?;
        check(r.consistent, || format!("K = {:?}: unstable over {ns:?}", k.to_strings()))?;
    }
    check(schwartz_index(&i_minus_2p(), &cfg).map_err(|e| e.to_string())?.value == Some(-1), || "I - 2P".into())?;
    Ok(format!("{} cases ({negative} of index -1), {}", cases.len(), within(t, LIMIT_LS)?))
}

fn random_base(rng: &mut ChaCha8Rng) -> Cocycle {
    match rng.gen_range(0..6) {
        0 => Cocycle::identity(),
        1 => Cocycle::zero(),
        2 => i_minus_2p(),
        3 => opposite_pair(),
        4 => power_cocycle(rng.gen_range(1..=2)),
        _ => loop {
            let k = random_matrix(rng.gen_range(1..=2), rng);
            if !RationalMatrix::identity(k.rows()).sub(&k).determinant().is_zero() {
                break Cocycle::linear(&k, q(1)).unwrap();
            }
        },
    }
}

fn cocycle_laws() -> Outcome {
    let cfg = DegreeConfig::default();
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let idx = |c: &Cocycle| -> Result<i64, String> {
        schwartz_index(c, &cfg).map_err(|e| e.to_string())?.value.ok_or_else(|| "no integer value".into())
    };
    let mut cases = 0;
    while cases < MIN_LAW_CASES {
        let (a, b) = (random_base(&mut rng), random_base(&mut rng));
        let (ia, ib) = (idx(&a)?, idx(&b)?);
        let law = cases % 5;
        let (name, got, want) = match law {
            0 => ("sum", idx(&sum(&a, &b).map_err(|e| e.to_string())?)?, ia + ib),
            1 => ("inverse", idx(&inverse(&a))?, -ia),
            2 => ("cup", idx(&cup_product(&a, &b).map_err(|e| e.to_string())?)?, ia * ib),
            3 => ("suspension", idx(&suspension(&a))?, ia),
            _ => {
                let c = picture_convert(&a, Picture::Boundary, &ConvertOptions::default(), &cfg).map_err(|e| e.to_string())?;
                ("picture", idx(&c)?, ia)
            }
        };
        check(got == want, || format!("{name}: {got} != {want} for {:?}", a.to_json()))?;
        cases += 1;
    }
    let s = sign_cubic();
    let e = |c: &Cocycle| schwartz_index(c, &cfg).map(|r| r.element.coefficients).map_err(|e| e.to_string());
    check(e(&sum(&s, &s).map_err(|e| e.to_string())?)? == vec![0, 2], || "equivariant sum".into())?;
    check(e(&cup_product(&s, &s).map_err(|e| e.to_string())?)? == vec![0, 1], || "equivariant cup".into())?;
    check(e(&inverse(&s))? == vec![0, -1], || "equivariant inverse".into())?;
    Ok(format!("{cases} random cases plus the sign cubic, {}", within(t, LIMIT_LAWS)?))
}

/// `z^a · conj(z)^b − ε` as a real map of the plane; degree `a − b` for `a ≠ b`.
fn monomial_map(a: u32, b: u32, eps: Q) -> PolynomialMap {
    let z = [Polynomial::var(2, 0), Polynomial::var(2, 1)];
    let mut re = Polynomial::constant(2, q(1));
    let mut im = Polynomial::zero(2);
    for k in 0..a + b {
        let s = if k < a { q(1) } else { q(-1) };
        let nre = re.mul(&z[0]).sub(&im.mul(&z[1]).scale(&s));
        let nim = im.mul(&z[0]).add(&re.mul(&z[1]).scale(&s));
        (re, im) = (nre, nim);
    }
    PolynomialMap::new(2, vec![re.sub(&Polynomial::constant(2, eps)), im]).unwrap()
}

fn random_plane_map(rng: &mut ChaCha8Rng) -> PolynomialMap {
    let comps = (0..2)
        .map(|_| {
            let shift = q_frac(rng.gen_range(1..=9), 10) * q(if rng.gen_bool(0.5) { 1 } else { -1 });
            let terms: Vec<_> = (0..rng.gen_range(2..=5))
                .map(|_| {
                    let (i, j) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
                    (vec![i, j], small_rational(rng))
                })
                .collect();
            Polynomial::from_terms(2, terms).add(&Polynomial::constant(2, shift))
        })
        .collect();
    PolynomialMap::new(2, comps).unwrap()
}

fn degree_cross_validation() -> Outcome {
    let cfg = DegreeConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let disk = Domain::origin_ball(2, q(1));
    let mut suite: Vec<(PolynomialMap, Option<i64>)> = (1..=5).map(|k| (power_map(k), Some(k as i64))).collect();
    for (a, b) in [(0, 1), (0, 2), (1, 2), (0, 3), (3, 1), (1, 3), (2, 0), (4, 1)] {
        suite.push((monomial_map(a, b, q_frac(1, 10)), Some(a as i64 - b as i64)));
    }
    let mut skipped = 0;
    while suite.len() < MIN_PLANE_MAPS + 5 {
        let f = random_plane_map(&mut rng);
        match brouwer_degree(&f, &disk, Method::Winding, &cfg) {
            Ok(_) => suite.push((f, None)),
            Err(e) if e.is_certification_failure() => skipped += 1,
            Err(e) => return Err(e.to_string()),
        }
    }
    let mut agreements = 0;
    for (f, want) in &suite {
        let zc = brouwer_degree(f, &disk, Method::ZeroCount, &cfg);
        let w = brouwer_degree(f, &disk, Method::Winding, &cfg).map_err(|e| e.to_string())?.value;
        match zc {
            Ok(z) => check(z.value == w, || format!("zero count {} vs winding {w} for {:?}", z.value, f.to_json()))?,
            // a singular zero is reported, never miscounted
            Err(e) if e.is_certification_failure() => continue,
            Err(e) => return Err(e.to_string()),
        }
        if let Some(k) = want {
            check(w == *k, || format!("expected degree {k}, winding gave {w}"))?;
        }
        agreements += 1;
    }
    check(agreements >= MIN_PLANE_MAPS, || format!("only {agreements} maps agreed"))?;
    for n in 1..=5 {
        let d = brouwer_degree(&PolynomialMap::identity(n).neg(), &Domain::unit_ball(n), Method::Auto, &cfg)
            .map_err(|e| e.to_string())?;
        check(d.value == if n % 2 == 0 { 1 } else { -1 }, || format!("-id on R^{n} gave {}", d.value))?;
    }
    let circle = PolynomialMap::new(2, vec![monomial_map(1, 1, q(1)).component(0).clone(), Polynomial::var(2, 1)]).unwrap();
    let loud = brouwer_degree(&circle, &disk, Method::Auto, &cfg);
    check(matches!(&loud, Err(e) if e.is_certification_failure()), || format!("boundary zero gave {loud:?}"))?;
    Ok(format!("{agreements} plane maps agree ({skipped} random draws not admissible), -id up to R^5, boundary zero rejected"))
}

fn completion_arithmetic() -> Outcome {
    let m = TableOfMarks::new(&library::cyclic(2));
    let i = augmentation_ideal(&m);
    for n in 1..=MAX_POWER {
        let p = ideal_power(&m, &i, n).map_err(|e| e.to_string())?;
        let scaled = IdealBasis { generators: i.generators.iter().map(|g| g.scale(1 << (n - 1))).collect(), power: n };
        check(p.same_lattice(&scaled), || format!("I^{n} = {:?}", p.generators))?;
        let inv = quotient_invariants(&m, &p);
        let torsion: Vec<i64> = if n == 1 { vec![] } else { vec![1 << (n - 1)] };
        check(inv.free_rank == 1 && inv.torsion == torsion, || format!("A/I^{n} = {}", inv.describe()))?;
    }
    Ok(format!("n = 1..{MAX_POWER}"))
}

fn catalog_sl2r() -> Outcome {
    let e = almost_connected_reduce("SL2R").map_err(|e| e.to_string())?;
    check(e.maximal_compact == MaximalCompact::Torus { rank: 1 }, || format!("maximal compact {:?}", e.maximal_compact))?;
    check(e.burnside == "Z", || format!("burnside {}", e.burnside))?;
    Ok(format!("{} with A = {}", e.maximal_compact.token(), e.burnside))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("S3 table of marks and [S3/C2]^2", s3_marks_and_product),
        ("congruences agree with integrality", congruence_integrality),
        ("sign cubic and identity degrees", sign_cubic_and_identity),
        ("index matches the linear oracle and stabilizes", ls_oracle),
        ("cocycle algebra laws", cocycle_laws),
        ("zero count agrees with winding", degree_cross_validation),
        ("powers of the augmentation ideal of C2", completion_arithmetic),
        ("catalog reduction of SL2R", catalog_sl2r),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
