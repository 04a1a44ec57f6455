use criterion::{black_box, criterion_group, criterion_main, Criterion};
use enumgeom::schubert::Strategy;
use enumgeom_bench::{all_products, plucker_degree, quintic_conics, quintic_lines};

fn counts(c: &mut Criterion) {
    c.bench_function("lines on the quintic", |b| b.iter(quintic_lines));
    let mut g = c.benchmark_group("conics");
    g.sample_size(20);
    g.bench_function("conics on the quintic", |b| b.iter(quintic_conics));
    g.finish();
}

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiply");
    for (k, n) in [(2, 6), (3, 6), (3, 7)] {
        g.bench_function(format!("giambelli G({k},{n})"), |b| {
            b.iter(|| all_products(black_box(k), n, Strategy::Giambelli))
        });
        g.bench_function(format!("littlewood-richardson G({k},{n})"), |b| {
            b.iter(|| all_products(black_box(k), n, Strategy::LittlewoodRichardson))
        });
    }
    g.bench_function("sigma_1^12 on G(3,7)", |b| {
        b.iter(|| plucker_degree(black_box(3), 7))
    });
    g.finish();
}

criterion_group!(benches, counts, multiply);
criterion_main!(benches);
