use std::hint::black_box;

use clambda_bench::{fixtures, params};
use clambda_core::pssqm::{build_charge, verify_pssqm, PssqmConfig};
use clambda_core::{classify_subclass, compute_spectrum, fock, verify_relations};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn spectrum(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectrum");
    for p in fixtures() {
        g.bench_with_input(BenchmarkId::new("levels_200", p.lambda()), &p, |b, p| {
            b.iter(|| compute_spectrum(black_box(p), 200).unwrap())
        });
    }
    g.finish();
    let p = params(3, &["1/3", "8"]);
    c.bench_function("classify_subclass", |b| b.iter(|| classify_subclass(black_box(&p), 8).unwrap()));
}

fn fock_relations(c: &mut Criterion) {
    let p = params(3, &["1/3", "8"]);
    let mut g = c.benchmark_group("fock");
    for dim in [16usize, 48, 96] {
        g.bench_with_input(BenchmarkId::new("build", dim), &dim, |b, &d| b.iter(|| fock::build(&p, d).unwrap()));
        let rep = fock::build(&p, dim).unwrap();
        g.bench_with_input(BenchmarkId::new("verify", dim), &rep, |b, r| b.iter(|| verify_relations(r, 1e-10)));
    }
    g.finish();
}

fn pssqm(c: &mut Criterion) {
    let p = params(3, &["0", "1"]);
    let mut g = c.benchmark_group("pssqm");
    for dim in [16usize, 48] {
        let cfg = PssqmConfig::canonical(p.clone(), 0, 0.0, dim);
        g.bench_with_input(BenchmarkId::new("build", dim), &cfg, |b, cfg| b.iter(|| build_charge(cfg).unwrap()));
        let s = build_charge(&cfg).unwrap();
        g.bench_with_input(BenchmarkId::new("verify", dim), &s, |b, s| b.iter(|| verify_pssqm(s, 1e-10)));
    }
    g.finish();
}

criterion_group!(benches, spectrum, fock_relations, pssqm);
criterion_main!(benches);
