use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ghzsplit::{derive_corrections, rng::trial_rng, Branch, Encoding, Protocol, VariantId};
use ghzsplit_bench::fixture_secret;

fn forced_runs(c: &mut Criterion) {
    for id in VariantId::ALL {
        let proto = Protocol::new(id, Encoding::Canonical).unwrap();
        let secret = fixture_secret(id);
        c.bench_function(&format!("run_forced/{id}"), |b| {
            b.iter(|| {
                proto
                    .run(black_box(&secret), Branch::Forced { outcome: 1, bit: 1 })
                    .unwrap()
            })
        });
    }
}

fn sampled_runs(c: &mut Criterion) {
    let proto = Protocol::new(VariantId::ThreeA, Encoding::Canonical).unwrap();
    let secret = fixture_secret(VariantId::ThreeA);
    let mut rng = trial_rng(1, 0);
    c.bench_function("run_sampled/three-a", |b| {
        b.iter(|| {
            proto
                .run(black_box(&secret), Branch::Sampled(&mut rng))
                .unwrap()
        })
    });
}

fn distribution(c: &mut Criterion) {
    let proto = Protocol::new(VariantId::ThreeB, Encoding::Canonical).unwrap();
    let secret = fixture_secret(VariantId::ThreeB);
    c.bench_function("outcome_distribution/three-b", |b| {
        b.iter(|| proto.outcome_distribution(black_box(&secret)).unwrap())
    });
}

fn oracle_rows(c: &mut Criterion) {
    c.bench_function("derive_corrections/three-a", |b| {
        b.iter(|| {
            derive_corrections(VariantId::ThreeA, Encoding::Canonical, black_box(5), 1).unwrap()
        })
    });
    c.bench_function("derive_corrections/four", |b| {
        b.iter(|| {
            derive_corrections(VariantId::Four, Encoding::Canonical, black_box(3), 1).unwrap()
        })
    });
}

criterion_group!(
    benches,
    forced_runs,
    sampled_runs,
    distribution,
    oracle_rows
);
criterion_main!(benches);
