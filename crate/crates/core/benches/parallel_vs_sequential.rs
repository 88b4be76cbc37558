use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use amadirac::ama::AmaContext;
use amadirac::dirac::{dirac_square_check, DiracContext};
use amadirac::dunklpoly::Tau;
use amadirac::par;
use amadirac::rootsys::{ParamFunction, ReflectionGroup, RootSystem, DEFAULT_GROUP_BOUND};
use amadirac::scalar::{ExactScalar, Rational};

fn build(name: &str, n: usize) -> DiracContext<ExactScalar> {
    let rs = RootSystem::<ExactScalar>::named(name).unwrap();
    let g = ReflectionGroup::enumerate(&rs, DEFAULT_GROUP_BOUND).unwrap();
    let c = ParamFunction::uniform(&rs, Rational::new(1, 2).unwrap());
    let t = Tau::trivial(&g);
    DiracContext::build(AmaContext::build(rs, g, c, t, n).unwrap()).unwrap()
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("dirac_build_and_square");
    group.sample_size(10);
    for (name, n) in [("S3", 4), ("S4", 3)] {
        for (label, on) in [("parallel", true), ("sequential", false)] {
            group.bench_with_input(BenchmarkId::new(label, format!("{name}/N={n}")), &(name, n), |b, &(name, n)| {
                par::set_parallel(on);
                b.iter(|| dirac_square_check(&build(name, n)));
            });
        }
    }
    par::set_parallel(true);
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
