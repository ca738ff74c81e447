use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sta_core::generate::{self as gen, check_rng};
use sta_core::matrix::GammaRep;
use sta_core::scalar::int;
use sta_core::spinor::{bosonize, dh_residual};
use sta_core::suite::{run_suite, Counts, Suite};

fn products(c: &mut Criterion) {
    let mut rng = check_rng(1, "bench.products");
    let a = gen::multivector(&mut rng);
    let b = gen::multivector(&mut rng);
    c.bench_function("geometric_product", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("hodge", |bch| bch.iter(|| black_box(&a).hodge()));
}

fn calculus(c: &mut Criterion) {
    let mut rng = check_rng(1, "bench.calculus");
    let f = gen::field(&mut rng);
    c.bench_function("dirac_operator", |bch| bch.iter(|| black_box(&f).dirac()));
    c.bench_function("diamond", |bch| bch.iter(|| black_box(&f).diamond()));
}

fn spinors(c: &mut Criterion) {
    let mut rng = check_rng(1, "bench.spinors");
    let m = int(2);
    let psi = gen::massive_solution(&mut rng, &m);
    let wave = gen::massless_solution(&mut rng);
    c.bench_function("dh_residual", |bch| bch.iter(|| dh_residual(black_box(&psi), &m)));
    c.bench_function("bosonize", |bch| bch.iter(|| bosonize(black_box(&wave))));
}

fn matrices(c: &mut Criterion) {
    let rep = GammaRep::standard();
    let mut rng = check_rng(1, "bench.matrix");
    let a = gen::multivector(&mut rng).complexify();
    c.bench_function("matrix_rep", |bch| bch.iter(|| rep.rep(black_box(&a))));
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    group.bench_function("algebra_small", |bch| bch.iter(|| run_suite(Suite::Algebra, 1, Counts::uniform(20))));
    group.bench_function("all_small", |bch| bch.iter(|| run_suite(Suite::All, 1, Counts::uniform(5))));
    group.finish();
}

criterion_group!(benches, products, calculus, spinors, matrices, suites);
criterion_main!(benches);
