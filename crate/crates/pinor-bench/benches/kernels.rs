use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pinor_core::clifford::{quaternion_matrix, GammaRep, Quaternion};
use pinor_core::cover::{cover_group_classify, solve_cover, LorentzMatrix, ParityChoice};
use pinor_core::klein::{g_ren, KleinConfig, PinKind};
use pinor_core::qft::{spin_sum, FourMomentum, SpinorKind};
use pinor_core::scalar::GaussScalar;

fn bench_klein_shells(c: &mut Criterion) {
    let mut group = c.benchmark_group("klein_g_ren");
    for n in [16u32, 64, 128] {
        let cfg = KleinConfig {
            pin_kind: PinKind::Pin13,
            a: 1.0,
            b: 1.0,
            n_max: n,
            tolerance: 1e-8,
            x: [0.0, 0.0, 0.0, 0.3],
            x_prime: [0.0, 0.0, 0.0, 0.3],
        };
        group.bench_with_input(BenchmarkId::from_parameter(n), &cfg, |b, cfg| {
            b.iter(|| g_ren(cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_quaternion_homomorphism(c: &mut Criterion) {
    let basis = Quaternion::basis();
    c.bench_function("quaternion_homomorphism_256", |b| {
        b.iter(|| {
            for a1 in &basis {
                for b1 in &basis {
                    for a2 in &basis {
                        for b2 in &basis {
                            let lhs = quaternion_matrix(&a1.mul(a2), &b1.mul(b2));
                            let rhs = &quaternion_matrix(a1, b1) * &quaternion_matrix(a2, b2);
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        })
    });
}

fn bench_solve_cover(c: &mut Criterion) {
    let rep = GammaRep::dirac13();
    let parity = LorentzMatrix::diag(&[1, -1, -1, -1], &rep.metric);
    c.bench_function("solve_cover_parity", |b| {
        b.iter(|| solve_cover(&rep, &parity))
    });
    c.bench_function("cover_group_classify", |b| {
        b.iter(|| cover_group_classify(&rep, ParityChoice::P3).unwrap())
    });
}

fn bench_spin_sum(c: &mut Criterion) {
    let rep = GammaRep::dirac13();
    let gs = GaussScalar::from_int;
    let p = FourMomentum::on_shell(&rep.metric, vec![gs(13), gs(5), gs(0), gs(0)], gs(12)).unwrap();
    c.bench_function("spin_sum_exact", |b| {
        b.iter(|| spin_sum(&rep, &p, SpinorKind::U).unwrap())
    });
}

criterion_group!(
    benches,
    bench_klein_shells,
    bench_quaternion_homomorphism,
    bench_solve_cover,
    bench_spin_sum
);
criterion_main!(benches);
