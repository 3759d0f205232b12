//! Seeded invariant suites, small enough to finish in seconds.

use crate::error::CliError;
use eqcoh_core::burnside::{self, BurnsideElement, TableOfMarks};
use eqcoh_core::degree::{brouwer_degree, equivariant_degree, DegreeConfig, Domain, Method};
use eqcoh_core::group::library;
use eqcoh_core::matrix::RationalMatrix;
use eqcoh_core::poly::PolynomialMap;
use eqcoh_core::rational::{q, q_frac};
use eqcoh_core::rep::OrthogonalRep;
use eqcoh_core::schwartz::{self as sz, fixtures, Cocycle, CompactPerturbation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Check = Result<String, String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn marks_congruences(rng: &mut ChaCha8Rng) -> Check {
    let mut n = 0;
    for (name, g) in library::corpus() {
        let m = TableOfMarks::new(&g);
        for _ in 0..100 {
            let a = BurnsideElement { coefficients: (0..m.len()).map(|_| rng.gen_range(-4..=4)).collect() };
            let mut v = burnside::char(&m, &a).map_err(|e| e.to_string())?;
            if rng.gen_bool(0.5) {
                let i = rng.gen_range(0..m.len());
                v.values[i] += rng.gen_range(1..=3);
            }
            let r = burnside::membership_check(&m, &v).map_err(|e| e.to_string())?;
            ensure(r.integral == r.congruences_hold, || format!("{name}: {:?}", v.values))?;
            n += 1;
        }
    }
    Ok(format!("{n} marks vectors"))
}

fn ring_laws(rng: &mut ChaCha8Rng) -> Check {
    let mut n = 0;
    for (name, g) in library::corpus().into_iter().filter(|(_, g)| g.order() <= 12) {
        let m = TableOfMarks::new(&g);
        let pick = |rng: &mut ChaCha8Rng| BurnsideElement { coefficients: (0..m.len()).map(|_| rng.gen_range(-3..=3)).collect() };
        for _ in 0..10 {
            let (a, b, c) = (pick(rng), pick(rng), pick(rng));
            let mul = |x: &BurnsideElement, y: &BurnsideElement| burnside::mul(&m, x, y).map_err(|e| e.to_string());
            ensure(mul(&a, &b)? == mul(&b, &a)?, || format!("{name}: not commutative"))?;
            ensure(mul(&mul(&a, &b)?, &c)? == mul(&a, &mul(&b, &c)?)?, || format!("{name}: not associative"))?;
            ensure(mul(&a, &m.one())? == a, || format!("{name}: [G/G] is not the unit"))?;
            n += 1;
        }
    }
    Ok(format!("{n} triples"))
}

fn degree_suite(cfg: &DegreeConfig) -> Check {
    let disk = Domain::unit_ball(2);
    for k in 1..=5 {
        let f = fixtures::power_map(k);
        let w = brouwer_degree(&f, &disk, Method::Winding, cfg).map_err(|e| e.to_string())?.value;
        let z = brouwer_degree(&f, &disk, Method::ZeroCount, cfg).map_err(|e| e.to_string())?.value;
        ensure(w == k as i64 && z == w, || format!("z^{k}: winding {w}, zero count {z}"))?;
    }
    for n in 1..=5 {
        let d = brouwer_degree(&PolynomialMap::identity(n).neg(), &Domain::unit_ball(n), Method::Auto, cfg)
            .map_err(|e| e.to_string())?;
        ensure(d.value == if n % 2 == 0 { 1 } else { -1 }, || format!("-id on R^{n}"))?;
    }
    let g = library::cyclic(2);
    let m = TableOfMarks::new(&g);
    let cubic = fixtures::sign_cubic().perturbation.padded(1).add(&PolynomialMap::identity(1));
    let e = equivariant_degree(&cubic, &OrthogonalRep::sign(g, 1), &Domain::origin_ball(1, q(2)), &m, cfg)
        .map_err(|e| e.to_string())?;
    ensure(e.element == m.basis(1), || format!("sign cubic gave {:?}", e.element.coefficients))?;
    Ok("powers, -id, sign cubic".into())
}

fn random_k(rng: &mut ChaCha8Rng, k: usize) -> RationalMatrix {
    loop {
        let rows = (0..k).map(|_| (0..k).map(|_| q_frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()).collect();
        let m = RationalMatrix::from_rows(rows).expect("square");
        if RationalMatrix::identity(k).sub(&m).determinant() != q(0) {
            return m;
        }
    }
}

fn index_suite(rng: &mut ChaCha8Rng, cfg: &DegreeConfig) -> Check {
    let idx = |c: &Cocycle| -> Result<i64, String> {
        sz::schwartz_index(c, cfg).map_err(|e| e.to_string())?.value.ok_or_else(|| "no value".to_string())
    };
    for _ in 0..20 {
        let dim = rng.gen_range(1..=4);
        let k = random_k(rng, dim);
        let c = Cocycle::linear(&k, q(1)).map_err(|e| e.to_string())?;
        let oracle = sz::linear_ls_oracle(&CompactPerturbation::linear(&k)).map_err(|e| e.to_string())?;
        ensure(idx(&c)? == oracle, || format!("{:?}", k.to_strings()))?;
    }
    for _ in 0..10 {
        let dim = rng.gen_range(1..=2);
        let a = Cocycle::linear(&random_k(rng, dim), q(1)).map_err(|e| e.to_string())?;
        let b = fixtures::power_cocycle(rng.gen_range(1..=2));
        let (ia, ib) = (idx(&a)?, idx(&b)?);
        ensure(idx(&sz::sum(&a, &b).map_err(|e| e.to_string())?)? == ia + ib, || "sum".into())?;
        ensure(idx(&sz::cup_product(&a, &b).map_err(|e| e.to_string())?)? == ia * ib, || "cup".into())?;
        ensure(idx(&sz::inverse(&a))? == -ia, || "inverse".into())?;
        ensure(idx(&sz::suspension(&b))? == ib, || "suspension".into())?;
    }
    Ok("20 oracle cases, 10 law cases".into())
}

fn completion() -> Check {
    let m = TableOfMarks::new(&library::cyclic(2));
    let i = burnside::augmentation_ideal(&m);
    for n in 1..=6u32 {
        let p = burnside::ideal_power(&m, &i, n).map_err(|e| e.to_string())?;
        let inv = burnside::quotient_invariants(&m, &p);
        let torsion: Vec<i64> = if n == 1 { vec![] } else { vec![1 << (n - 1)] };
        ensure(inv.free_rank == 1 && inv.torsion == torsion, || format!("A/I^{n} = {}", inv.describe()))?;
    }
    Ok("C2, n up to 6".into())
}

pub fn run(seed: u64, cfg: &DegreeConfig) -> Result<Value, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suites: Vec<(&str, Check)> = vec![
        ("congruences", marks_congruences(&mut rng)),
        ("ring laws", ring_laws(&mut rng)),
        ("degree", degree_suite(cfg)),
        ("index", index_suite(&mut rng, cfg)),
        ("completion", completion()),
    ];
    let mut failed = Vec::new();
    let rows: Vec<Value> = suites
        .into_iter()
        .map(|(name, r)| {
            let (pass, detail) = match r {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            eprintln!("{} {name}: {detail}", if pass { "PASS" } else { "FAIL" });
            if !pass {
                failed.push(name);
            }
            json!({ "suite": name, "pass": pass, "detail": detail })
        })
        .collect();
    if !failed.is_empty() {
        return Err(CliError::Selftest(format!("failed suites: {}", failed.join(", "))));
    }
    Ok(json!({ "seed": seed, "suites": rows }))
}
