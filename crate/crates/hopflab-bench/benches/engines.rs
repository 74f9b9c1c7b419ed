//! Criterion benchmarks for the exact engines: radical arithmetic, root
//! isolation, the frame module, the polynomial block oracle, and the
//! classification solvers.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use hopflab_core::blocks::{symbolic_t, verify_block_powers, ProductQuadric};
use hopflab_core::catalog::{Family, ModelSpec, Param, SpaceForm};
use hopflab_core::classify::{b_cubic_identity_symbolic, b_two_type_solve, theorem_report, TheoremId};
use hopflab_core::embed::{embed_line, sample_integer_line};
use hopflab_core::frame::{build_frame_module, chen_type_evidence};
use hopflab_core::scalar::{isolate_real_roots, Domain, QPoly, Scalar};
use rand::SeedableRng;

fn bench_radical_arithmetic(c: &mut Criterion) {
    c.bench_function("radical_inverse_three_primes", |b| {
        let x = &(&Scalar::sqrt_int(2) + &Scalar::sqrt_int(3)) + &Scalar::sqrt_int(7);
        b.iter(|| {
            let inv = x.try_inv().unwrap();
            assert_eq!(&inv * &x, Scalar::one());
        });
    });
    c.bench_function("nested_radical_square", |b| {
        let inner = &Scalar::sqrt_int(6) + &Scalar::sqrt_int(7);
        let x = inner.sqrt().unwrap();
        b.iter(|| {
            let sq = &x * &x;
            assert!(!sq.is_zero());
        });
    });
}

fn bench_root_isolation(c: &mut Criterion) {
    c.bench_function("isolate_degree_six", |b| {
        // the class-B condition polynomial at m = 4 composed with a shift
        let p = QPoly::from_ints(&[4 * 6 * 8 * 10, -2 * 91, -12, 1]);
        let q = p.mul(&QPoly::from_ints(&[-3, 1])).mul(&QPoly::from_ints(&[1, 1]));
        b.iter(|| {
            let roots = isolate_real_roots(&q, &Domain::all());
            assert!(!roots.is_empty());
        });
    });
}

fn bench_frame_module(c: &mut Criterion) {
    c.bench_function("frame_module_symbolic_b", |b| {
        let spec = ModelSpec::new(Family::B, SpaceForm::projective(3), None, Param::Symbolic);
        b.iter(|| {
            let module = build_frame_module(&spec).unwrap();
            assert!(!module.gram_det().is_zero());
        });
    });
    c.bench_function("type_evidence_radical_radius", |b| {
        let k2 = &(&Scalar::int(2) * &Scalar::sqrt_int(7)) - &Scalar::int(2);
        let spec = ModelSpec::b(SpaceForm::projective(2), k2);
        b.iter(|| {
            let report = chen_type_evidence(&spec).unwrap();
            assert_eq!(report.eigenvalues.len(), 2);
        });
    });
    c.bench_function("b_cubic_identity_symbolic_m4", |b| {
        b.iter(|| b_cubic_identity_symbolic(SpaceForm::projective(4)).unwrap());
    });
}

fn bench_block_oracle(c: &mut Criterion) {
    c.bench_function("block_powers_k1_l1_symbolic", |b| {
        b.iter(|| {
            let pq = ProductQuadric::new(1, 1, 1, &symbolic_t()).unwrap();
            verify_block_powers(&pq, 3).unwrap();
        });
    });
}

fn bench_classifier(c: &mut Criterion) {
    c.bench_function("b_two_type_solve_m3", |b| {
        b.iter(|| {
            let entries = b_two_type_solve(SpaceForm::projective(3)).unwrap();
            assert_eq!(entries.len(), 2);
        });
    });
    c.bench_function("theorem_one_m3", |b| {
        b.iter(|| {
            let rep = theorem_report(TheoremId::T1, 3).unwrap();
            assert!(rep.entries.len() >= 5);
        });
    });
}

fn bench_embedding(c: &mut Criterion) {
    c.bench_function("embed_exact_sample_cp4", |b| {
        let sf = SpaceForm::projective(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        b.iter_batched(
            || sample_integer_line(&mut rng, sf),
            |z| {
                let p = embed_line(&z, sf).unwrap();
                assert_eq!(p.mul(&p), p);
            },
            BatchSize::SmallInput,
        );
    });
}

criterion_group!(
    benches,
    bench_radical_arithmetic,
    bench_root_isolation,
    bench_frame_module,
    bench_block_oracle,
    bench_classifier,
    bench_embedding
);
criterion_main!(benches);
