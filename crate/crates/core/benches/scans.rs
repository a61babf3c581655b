use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use eqlr::coeffs::{d_table, grassmannian_table, shifted_o_table, EqMethod, ShiftedMethod};
use eqlr::horn::classical_horn_scan;
use eqlr::par::Exec;
use eqlr::shapes::Rectangle;

const EXECS: [(&str, Exec); 2] = [("parallel", Exec::Parallel), ("sequential", Exec::Sequential)];

fn scans(c: &mut Criterion) {
    let mut g = c.benchmark_group("triple scans");
    g.sample_size(10);
    for (name, exec) in EXECS {
        g.bench_with_input(BenchmarkId::new("d_table rho_3", name), &exec, |b, &e| {
            b.iter(|| d_table(3, e).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("eballot 2x2", name), &exec, |b, &e| {
            b.iter(|| grassmannian_table(Rectangle::new(2, 2), EqMethod::Eballot, e).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("shifted o rho_3", name), &exec, |b, &e| {
            b.iter(|| shifted_o_table(3, ShiftedMethod::Ballot, e).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("classical Horn r=3", name), &exec, |b, &e| {
            b.iter(|| classical_horn_scan(3, 2, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
