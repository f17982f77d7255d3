use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sigmastar_cli::{run_sweep, Mode, SweepConfig};
use sigmastar_core::{
    catalog_group, check_anticommutative, enumerate_involutions, enumerate_orientations,
    is_compatible, parse_ring_token, symmetric_generators, GroupInvolution, GroupRingElement,
};

fn bench_multiply(c: &mut Criterion) {
    let g = catalog_group("D8").unwrap();
    let r = Arc::new(parse_ring_token("z8").unwrap());
    let a = GroupRingElement::from_coeffs(
        Arc::clone(&g),
        Arc::clone(&r),
        (0..g.order()).map(|i| (3 * i + 1) % r.size()).collect(),
    )
    .unwrap();
    let b = GroupRingElement::from_coeffs(
        Arc::clone(&g),
        Arc::clone(&r),
        (0..g.order()).map(|i| (5 * i + 2) % r.size()).collect(),
    )
    .unwrap();
    c.bench_function("multiply_d8_z8_dense", |bench| {
        bench.iter(|| black_box(&a).multiply(black_box(&b)).unwrap())
    });
    c.bench_function("jordan_d8_z8_dense", |bench| {
        bench.iter(|| black_box(&a).jordan(black_box(&b)).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let g = catalog_group("C2xQ8").unwrap();
    c.bench_function("enumerate_involutions_c2xq8", |bench| {
        bench.iter(|| enumerate_involutions(black_box(&g)))
    });
    let r = Arc::new(parse_ring_token("dual-z4").unwrap());
    c.bench_function("enumerate_orientations_c2xq8_dual_z4", |bench| {
        bench.iter(|| enumerate_orientations(black_box(&g), black_box(&r)))
    });
}

fn bench_instance_check(c: &mut Criterion) {
    let g = catalog_group("C2xD4").unwrap();
    let r = Arc::new(parse_ring_token("z4").unwrap());
    let tau = GroupInvolution::inversion(Arc::clone(&g));
    let sigma = enumerate_orientations(&g, &r)
        .into_iter()
        .find(|s| is_compatible(&tau, s))
        .unwrap();
    c.bench_function("generators_and_verdict_c2xd4_z4", |bench| {
        bench.iter(|| {
            let gens = symmetric_generators(black_box(&tau), black_box(&sigma));
            check_anticommutative(&gens)
        })
    });
}

fn bench_sweep(c: &mut Criterion) {
    let config = SweepConfig::verify(8, &["z4"])
        .with_mode(Mode::Verify)
        .with_jobs(1);
    c.bench_function("verify_sweep_order8_z4_serial", |bench| {
        bench.iter(|| run_sweep(black_box(&config)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_multiply,
    bench_enumeration,
    bench_instance_check,
    bench_sweep
);
criterion_main!(benches);
