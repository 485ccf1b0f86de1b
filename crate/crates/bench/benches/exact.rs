use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dualskew_core::exactmath::rat;
use dualskew_core::nclattice::{build_group, characteristic_poly, nc_interval};
use dualskew_core::orthopoly::{verify_jacobi_identity, verify_recurrence, verify_rodrigues};
use dualskew_core::roots::{
    bruns_bound_check, irreducibility_certificate, smallest_root, sturm_chain, unit_roots, DEFAULT_MAX_PRECISION,
};
use dualskew_core::skewgrowth::{skew_growth, CoxeterType, Series};

fn polynomials(c: &mut Criterion) {
    let b100 = CoxeterType::b(100).unwrap();
    c.bench_function("skew_growth B100", |b| b.iter(|| skew_growth(black_box(b100))));
    c.bench_function("rodrigues D100", |b| b.iter(|| verify_rodrigues(Series::D, black_box(100)).unwrap()));
    c.bench_function("jacobi B100", |b| b.iter(|| verify_jacobi_identity(black_box(b100), None).unwrap()));
    c.bench_function("recurrence D100", |b| b.iter(|| verify_recurrence(Series::D, black_box(100)).unwrap()));
}

fn roots(c: &mut Criterion) {
    let a50 = skew_growth(CoxeterType::a(50).unwrap()).poly;
    c.bench_function("sturm_chain A50", |b| b.iter(|| sturm_chain(black_box(&a50)).unwrap()));
    c.bench_function("unit_roots A50", |b| b.iter(|| unit_roots(black_box(&a50)).unwrap()));
    let eps = rat(1, 1_000_000_000_000);
    let d40 = CoxeterType::d(40).unwrap();
    c.bench_function("smallest_root D40", |b| b.iter(|| smallest_root(black_box(d40), &eps).unwrap()));
    c.bench_function("bruns l=20", |b| b.iter(|| bruns_bound_check(black_box(20), DEFAULT_MAX_PRECISION).unwrap()));
    let e8 = CoxeterType::e(8).unwrap();
    c.bench_function("irreducibility E8", |b| b.iter(|| irreducibility_certificate(black_box(e8), None).unwrap()));
}

fn lattices(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice");
    g.sample_size(10);
    for t in ["B3", "D4", "A5"] {
        let group = build_group(t.parse().unwrap()).unwrap();
        g.bench_function(format!("nc_interval {t}"), |b| {
            b.iter(|| characteristic_poly(&nc_interval(black_box(&group)).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, polynomials, roots, lattices);
criterion_main!(benches);
