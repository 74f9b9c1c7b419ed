//! Randomized exact properties: field axioms on every scalar kind, sign
//! decisions against floating evaluation, root isolation, and the curvature
//! coupling relations.

use hopflab_core::catalog::{mu_star, spectrum, ModelSpec, Param, SpaceForm};
use hopflab_core::scalar::{isolate_real_roots, Domain, QPoly, Scalar, SymVar};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn radical_scalar() -> impl Strategy<Value = Scalar> {
    (
        small_rational(),
        small_rational(),
        small_rational(),
        prop::sample::select(vec![2u64, 3, 5, 7, 11]),
        prop::sample::select(vec![2u64, 3, 5, 7, 11]),
    )
        .prop_map(|(a, b, c, d1, d2)| {
            &a + &(&(&b * &Scalar::sqrt_int(d1)) + &(&c * &Scalar::sqrt_int(d2)))
        })
}

fn symbolic_scalar() -> impl Strategy<Value = Scalar> {
    (small_rational(), small_rational(), -3i32..=3).prop_map(|(a, b, e)| {
        let t = Scalar::sym_var(SymVar::T);
        let mu = Scalar::sym_root(SymVar::T);
        let mut v = &a + &(&b * &mu);
        if e >= 0 {
            v = &v * &t.pow_u(e as u32);
        } else {
            v = &v * &t.try_inv().unwrap().pow_u((-e) as u32);
        }
        v
    })
}

fn assoc_distrib(a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(&(a + b) * c, &(a * c) + &(b * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    if !a.is_zero() {
        let inv = a.try_inv().unwrap();
        assert_eq!(&inv * a, Scalar::one());
    }
    assert_eq!(a - a, Scalar::zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_rational(a in small_rational(), b in small_rational(), c in small_rational()) {
        assoc_distrib(&a, &b, &c);
    }

    #[test]
    fn field_axioms_radical(a in radical_scalar(), b in radical_scalar(), c in radical_scalar()) {
        assoc_distrib(&a, &b, &c);
    }

    #[test]
    fn field_axioms_symbolic(a in symbolic_scalar(), b in symbolic_scalar(), c in symbolic_scalar()) {
        assoc_distrib(&a, &b, &c);
    }

    #[test]
    fn sign_matches_float_away_from_zero(a in radical_scalar()) {
        let f = a.to_f64();
        if f.abs() > 1e-6 {
            let s = a.sign().unwrap();
            prop_assert_eq!(s, if f > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn sqrt_squares_back(a in radical_scalar()) {
        // square first to get a nonnegative value inside the tower
        let sq = &a * &a;
        if let Ok(r) = sq.sqrt() {
            prop_assert_eq!(&r * &r, sq);
            prop_assert!(r.sign().unwrap() >= 0);
        }
    }

    #[test]
    fn root_isolation_recovers_rational_roots(
        roots in prop::collection::btree_set(-8i64..=8, 1..4),
        mults in prop::collection::vec(1usize..=3, 4),
    ) {
        let mut p = QPoly::one();
        let roots: Vec<i64> = roots.into_iter().collect();
        for (i, r) in roots.iter().enumerate() {
            let lin = QPoly::from_ints(&[-r, 1]);
            p = p.mul(&lin.pow(mults[i % mults.len()] as u32));
        }
        let found = isolate_real_roots(&p, &Domain::all());
        prop_assert_eq!(found.len(), roots.len());
        for (f, r) in found.iter().zip(roots.iter()) {
            prop_assert_eq!(f.rational.clone().unwrap(), hopflab_core::scalar::poly::rat_i(*r));
            prop_assert_eq!(f.multiplicity, mults[roots.iter().position(|x| x == r).unwrap() % mults.len()]);
        }
    }

    #[test]
    fn mu_star_is_an_involution(
        mu_n in -9i64..=9, mu_d in 1i64..=5,
        k_n in -9i64..=9, k_d in 1i64..=5,
        c in prop::sample::select(vec![1i32, -1]),
    ) {
        let mu = Scalar::ratio(mu_n, mu_d);
        let kappa = Scalar::ratio(k_n, k_d);
        let denom = &(&Scalar::int(2) * &mu) - &kappa;
        if !denom.is_zero() {
            if let Ok(star) = mu_star(&mu, &kappa, c) {
                // the coupling relation and the involution
                let lhs = &(&(&Scalar::int(2) * &mu) - &kappa)
                    * &(&(&Scalar::int(2) * &star) - &kappa);
                let rhs = &(&kappa * &kappa) + &Scalar::int(4 * c as i64);
                prop_assert_eq!(lhs, rhs);
                let denom2 = &(&Scalar::int(2) * &star) - &kappa;
                if !denom2.is_zero() {
                    prop_assert_eq!(mu_star(&star, &kappa, c).unwrap(), mu);
                }
            }
        }
    }

    #[test]
    fn hopf_coupling_on_sphere_spectra(
        t_n in 1i64..=30, t_d in 1i64..=10,
        c in prop::sample::select(vec![1i32, -1]),
        m in 2usize..=4,
    ) {
        let t = Scalar::ratio(t_n, t_d);
        if c == -1 && (&t - &Scalar::one()).sign().unwrap() <= 0 {
            return Ok(());
        }
        let sf = SpaceForm { c, m };
        let spec = ModelSpec::a1(sf, t);
        let sp = spectrum(&spec).unwrap();
        // 2 mu mu* = 2c + kappa (mu + mu*) with mu* = mu on the sphere
        for b in sp.explicit_blocks().unwrap() {
            let mu = b.value.clone();
            let star = mu_star(&mu, &sp.kappa, c).unwrap();
            prop_assert_eq!(&mu, &star);
            let lhs = &(&Scalar::int(2) * &mu) * &star;
            let rhs = &Scalar::int(2 * c as i64) + &(&sp.kappa * &(&mu + &star));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hopf_coupling_on_curvature_pairs(
        k_n in 1i64..=12, k_d in 1i64..=4,
        c in prop::sample::select(vec![1i32, -1]),
        m in 2usize..=4,
    ) {
        let k2 = Scalar::ratio(k_n, k_d);
        if c == -1 && (&Scalar::int(4) - &k2).sign().unwrap() <= 0 {
            return Ok(());
        }
        let sf = SpaceForm { c, m };
        let spec = ModelSpec::b(sf, k2);
        let sp = spectrum(&spec).unwrap();
        let blocks = sp.explicit_blocks().unwrap();
        let (mu2, mu4) = (&blocks[0].value, &blocks[1].value);
        // the pair product and sum
        prop_assert_eq!(&(mu2 * mu4), &Scalar::int(-c as i64));
        let sum = &(mu2 + mu4) * &sp.kappa;
        prop_assert_eq!(&sum, &Scalar::int(-4 * c as i64));
        // the star swaps the pair, and the coupling holds
        prop_assert_eq!(&mu_star(mu2, &sp.kappa, c).unwrap(), mu4);
        let lhs = &(&Scalar::int(2) * mu2) * mu4;
        let rhs = &Scalar::int(2 * c as i64) + &(&sp.kappa * &(mu2 + mu4));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frame_gram_is_nonsingular(
        c in prop::sample::select(vec![1i32, -1]),
        m in 2usize..=6,
    ) {
        let spec = ModelSpec::new(
            hopflab_core::catalog::Family::B,
            SpaceForm { c, m },
            None,
            Param::Symbolic,
        );
        let module = hopflab_core::frame::build_frame_module(&spec).unwrap();
        prop_assert!(!module.gram_det().is_zero());
    }
}
