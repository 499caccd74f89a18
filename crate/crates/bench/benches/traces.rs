use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use framix::braid::FramedBraidWord;
use framix::esystem::all_solutions;
use framix::invariants::{
    classical_invariant, e_constant, skein_resolve_theta, y_trace, InvariantKind, InvariantSpec,
    Lambda,
};
use framix::quotients::{ftl_annihilation_check, ftl_z};
use framix_bench::{alternating_word, catalog_word};

fn ties_traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta_general");
    let spec = InvariantSpec::new(InvariantKind::ThetaGeneral, 1);
    for name in ["L6a4{1,1}", "L11n358{0,1}", "L11a467{0,1}"] {
        let b = catalog_word(name);
        group.bench_with_input(BenchmarkId::from_parameter(name), &b, |bench, b| {
            bench.iter(|| classical_invariant(&spec, b).unwrap())
        });
    }
    group.finish();
}

fn yokonuma_traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("yokonuma_trace");
    for d in 1..=3u32 {
        let b = FramedBraidWord::new(alternating_word(4, 2), vec![0; 4], d).unwrap();
        let all: Vec<u32> = (0..d).collect();
        group.bench_with_input(BenchmarkId::new("alternating_4x2", d), &b, |bench, b| {
            bench.iter(|| y_trace(b, d, &all).unwrap())
        });
    }
    group.finish();
}

fn resolution(c: &mut Criterion) {
    let b = catalog_word("L6n1{0,0}");
    c.bench_function("skein_resolution/L6n1", |bench| {
        bench.iter(|| skein_resolve_theta(&b, &e_constant(2), Lambda::Generic, 200_000).unwrap())
    });
}

fn esystem_and_ftl(c: &mut Criterion) {
    c.bench_function("esystem/all_solutions_d8", |bench| {
        bench.iter(|| all_solutions(8))
    });
    c.bench_function("ftl/annihilation_d2", |bench| {
        bench.iter(|| ftl_annihilation_check(2, &[0, 1], &ftl_z(2)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = ties_traces, yokonuma_traces, resolution, esystem_and_ftl
}
criterion_main!(benches);
