use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hmodpi::grassmann::grassmann;
use hmodpi::{
    codimension, dual, group_algebra, kemer_witness_search, tensor, verify_hopf, GroupTable,
    HModuleAlgebra, KemerShape, DEFAULT_BUDGET,
};
use hmodpi_bench::{m2, ut2};

fn codim(c: &mut Criterion) {
    let mut group = c.benchmark_group("codimension");
    let m2 = m2();
    for n in 1..=3 {
        group.bench_with_input(BenchmarkId::new("M2", n), &n, |b, &n| {
            b.iter(|| codimension(black_box(&m2), n, DEFAULT_BUDGET).unwrap())
        });
    }
    let e4 = HModuleAlgebra::plain(grassmann(4).algebra);
    group.bench_function("E4/4", |b| b.iter(|| codimension(black_box(&e4), 4, DEFAULT_BUDGET).unwrap()));
    group.finish();
}

fn kemer(c: &mut Criterion) {
    let (a, w) = ut2();
    let shape = KemerShape { alpha: 2, s: 1, mu: 1 };
    c.bench_function("kemer/UT2 witness (2,1,1)", |b| {
        b.iter(|| kemer_witness_search(black_box(&a), &w, shape, 5, DEFAULT_BUDGET).unwrap())
    });
}

fn hopf(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_hopf");
    for name in ["C8", "D4", "Q8"] {
        let g = group_algebra(&GroupTable::builtin(name).unwrap());
        group.bench_function(name, |b| b.iter(|| verify_hopf(black_box(&g))));
    }
    let t = tensor(&group_algebra(&GroupTable::cyclic(2)), &dual(&group_algebra(&GroupTable::symmetric(3))));
    group.bench_function("FC2 x FS3*", |b| b.iter(|| verify_hopf(black_box(&t))));
    group.finish();
}

criterion_group!(benches, codim, kemer, hopf);
criterion_main!(benches);
