use std::hint::black_box;

use braidcalc::crossprod::{braided_line, smash_bialgebra};
use braidcalc::diffcalc::{build_exterior_calculus, universal_first_order};
use braidcalc::exactla::{factorize, Scalar};
use braidcalc::gradedcalc::{antisymmetrizer, exterior_hopf, BraidedObject};
use braidcalc::hopf::{builtin, check_hopf, FiniteHopfAlgebra};
use braidcalc::yd::{example_modules, yd_braiding};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("hopf_axioms");
    for name in ["cyclic:3", "symmetric:3", "sweedler", "taft:3"] {
        let h = builtin(name).unwrap();
        // the report is computed on construction, so rebuild each time
        g.bench_with_input(BenchmarkId::from_parameter(name), &h, |b, h| {
            b.iter(|| {
                let s = h.s().ok().cloned();
                let (m, eta, delta, eps) = (h.m().clone(), h.eta().clone(), h.delta().clone(), h.eps().clone());
                let rebuilt = FiniteHopfAlgebra::new(name, h.field().clone(), h.dim(), m, eta, delta, eps, s).unwrap();
                check_hopf(black_box(&rebuilt)).passed()
            })
        });
    }
    g.finish();
}

fn braiding(c: &mut Criterion) {
    let h = builtin("sweedler").unwrap();
    let mods = example_modules(&h);
    let (_, x) = mods.iter().max_by_key(|(_, m)| m.dim).unwrap();
    c.bench_function("yd_braiding/sweedler", |b| b.iter(|| yd_braiding(&h, black_box(x), black_box(x)).unwrap()));
}

fn antisymmetrizers(c: &mut Criterion) {
    let mut g = c.benchmark_group("antisymmetrizer");
    let q = BraidedObject::quantum_plane(&Scalar::from_int(2)).unwrap();
    for j in [3, 5] {
        g.bench_with_input(BenchmarkId::new("qplane", j), &j, |b, &j| b.iter(|| antisymmetrizer(&q, j).unwrap()));
    }
    let flip = BraidedObject::flip(3);
    g.bench_function("flip3/rank4", |b| b.iter(|| factorize(&antisymmetrizer(&flip, 4).unwrap()).rank));
    g.finish();
}

fn exterior(c: &mut Criterion) {
    let q = BraidedObject::quantum_plane(&Scalar::from_int(2)).unwrap();
    c.bench_function("exterior_hopf/qplane/4", |b| b.iter(|| exterior_hopf(black_box(&q), 4).unwrap()));
}

fn smash(c: &mut Criterion) {
    let (h, x) = braided_line();
    c.bench_function("smash_bialgebra/braided_line", |b| b.iter(|| smash_bialgebra(&h, black_box(&x)).unwrap()));
}

fn calculus(c: &mut Criterion) {
    let mut g = c.benchmark_group("exterior_calculus");
    g.sample_size(10);
    for n in [2, 3] {
        let h = builtin(&format!("cyclic:{n}")).unwrap();
        let fo = universal_first_order(&h).unwrap();
        g.bench_with_input(BenchmarkId::new("cyclic", n), &fo, |b, fo| b.iter(|| build_exterior_calculus(fo, 4).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, axioms, braiding, antisymmetrizers, exterior, smash, calculus);
criterion_main!(benches);
