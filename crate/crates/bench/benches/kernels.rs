use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eqcoh_bench::{cup_of_powers, dense_linear_cocycle, groups, permutation_setting};
use eqcoh_core::burnside::{augmentation_ideal, char, ideal_power, membership_check, TableOfMarks};
use eqcoh_core::degree::{brouwer_degree, equivariant_degree, DegreeConfig, Domain, Method};
use eqcoh_core::group::library;
use eqcoh_core::schwartz::{fixtures, schwartz_index};
use eqcoh_core::PolynomialMap;
use std::hint::black_box;

fn burnside(c: &mut Criterion) {
    let mut g = c.benchmark_group("burnside");
    for (name, grp) in groups() {
        g.bench_with_input(BenchmarkId::new("table_of_marks", name), &grp, |b, grp| b.iter(|| TableOfMarks::new(grp)));
        let m = TableOfMarks::new(&grp);
        let v = char(&m, &m.one()).unwrap();
        g.bench_with_input(BenchmarkId::new("membership_check", name), &m, |b, m| {
            b.iter(|| membership_check(m, black_box(&v)).unwrap())
        });
    }
    let c2 = TableOfMarks::new(&library::cyclic(2));
    let i = augmentation_ideal(&c2);
    g.bench_function("ideal_power_c2_6", |b| b.iter(|| ideal_power(&c2, &i, 6).unwrap()));
    g.finish();
}

fn degree(c: &mut Criterion) {
    let cfg = DegreeConfig::default();
    let mut g = c.benchmark_group("degree");
    let disk = Domain::unit_ball(2);
    for k in [2, 5] {
        let f = fixtures::power_map(k);
        g.bench_with_input(BenchmarkId::new("winding", k), &f, |b, f| {
            b.iter(|| brouwer_degree(f, &disk, Method::Winding, &cfg).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("zero_count", k), &f, |b, f| {
            b.iter(|| brouwer_degree(f, &disk, Method::ZeroCount, &cfg).unwrap())
        });
    }
    for (name, grp) in groups() {
        let m = TableOfMarks::new(&grp);
        let (rho, d) = permutation_setting(&grp);
        let f = PolynomialMap::identity(rho.dimension());
        g.bench_function(BenchmarkId::new("equivariant_identity", name), |b| {
            b.iter(|| equivariant_degree(&f, &rho, &d, &m, &cfg).unwrap())
        });
    }
    g.finish();
}

fn schwartz(c: &mut Criterion) {
    let cfg = DegreeConfig::default();
    let mut g = c.benchmark_group("schwartz");
    g.sample_size(20);
    for k in [2, 4, 8] {
        let a = dense_linear_cocycle(k);
        g.bench_with_input(BenchmarkId::new("linear_index", k), &a, |b, a| b.iter(|| schwartz_index(a, &cfg).unwrap()));
    }
    let cup = cup_of_powers();
    g.bench_function("cup_of_powers", |b| b.iter(|| schwartz_index(&cup, &cfg).unwrap()));
    g.finish();
}

criterion_group!(benches, burnside, degree, schwartz);
criterion_main!(benches);
