//! Acceptance suite: every exit criterion of the build runs here, one
//! printed line per criterion. Arithmetic criteria are exact (zero
//! residual); floating smoke paths use 1e-12.

use hopflab_core::blocks::{
    a2_type_analysis, block_eigenvalues, cross_check_frame_vs_block, symbolic_t,
    verify_block_powers, ProductQuadric,
};
use hopflab_core::catalog::{Family, ModelSpec, Param, SpaceForm};
use hopflab_core::classify::{
    a1_eigenvalues, a2_two_type_solve, b_condition_polynomial, b_cubic_identity_symbolic,
    b_three_type, b_two_type_solve, cde_exclude, theorem_report, TheoremId,
};
use hopflab_core::embed::{
    embed_line, embed_point_f64, float_residuals, hyperquadric_residual, sample_float_point,
    sample_integer_line, CScalar,
};
use hopflab_core::frame::{
    build_frame_module, chen_type_evidence, eigencomponents, predicted_center_offset_a1,
    verify_paper_iterates, FrameVector, TypeVerdict,
};
use hopflab_core::scalar::{isolate_real_roots, Domain, Scalar};
use rand::SeedableRng;

type CheckResult = Result<(), String>;

fn ok_or<E: std::fmt::Display>(r: Result<(), E>) -> CheckResult {
    r.map_err(|e| e.to_string())
}

fn criterion_1_embedding() -> CheckResult {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for c in [1i32, -1] {
        for m in 2..=5usize {
            let sf = SpaceForm { c, m };
            for _ in 0..100 {
                let z = sample_integer_line(&mut rng, sf);
                let p = embed_line(&z, sf).map_err(|e| e.to_string())?;
                if p.mul(&p) != p {
                    return Err(format!("projector identity fails at c={c}, m={m}"));
                }
                if p.trace() != CScalar::one() {
                    return Err(format!("unit trace fails at c={c}, m={m}"));
                }
                if !hyperquadric_residual(&p, sf)
                    .map_err(|e| e.to_string())?
                    .is_zero()
                {
                    return Err(format!("hyperquadric residual nonzero at c={c}, m={m}"));
                }
            }
            for _ in 0..100 {
                let z = sample_float_point(&mut rng, sf);
                let p = embed_point_f64(&z, sf);
                let (proj, tr, quad) = float_residuals(&p, sf);
                if proj >= 1e-12 || tr >= 1e-12 || quad >= 1e-12 {
                    return Err(format!(
                        "float residuals {proj:.3e}/{tr:.3e}/{quad:.3e} at c={c}, m={m}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn criterion_2_block_oracle() -> CheckResult {
    for c in [1i32, -1] {
        for k in 0..=4usize {
            for l in 0..=(4 - k) {
                let pq = ProductQuadric::new(k, l, c, &symbolic_t()).map_err(|e| e.to_string())?;
                verify_block_powers(&pq, 3)
                    .map_err(|e| format!("k={k}, l={l}, c={c}: {e}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_3_tube_cubic() -> CheckResult {
    // symbolic residual and the closed-form roots
    for (k, l, c) in [(1usize, 1usize, 1i32), (1, 2, 1), (2, 1, -1), (3, 1, -1)] {
        let a = a2_type_analysis(k, l, c, &symbolic_t()).map_err(|e| e.to_string())?;
        if !a.cubic_residual_zero {
            return Err(format!("cubic residual nonzero at k={k}, l={l}, c={c}"));
        }
        let pq = ProductQuadric::new(k, l, c, &symbolic_t()).map_err(|e| e.to_string())?;
        let (lu, lv, lw) = block_eigenvalues(&pq).map_err(|e| e.to_string())?;
        // lambda_u = cK/r1^2 + L/r2^2, lambda_v = 2c(K+1)/r1^2,
        // lambda_w = 2(L+1)/r2^2
        let t = symbolic_t();
        let cc = Scalar::int(c as i64);
        let inv_r1 = (&(&t + &cc) / &t).clone();
        let inv_r2 = &t + &cc;
        let kk = Scalar::int(2 * k as i64 + 1);
        let ll = Scalar::int(2 * l as i64 + 1);
        let want_u = &(&(&cc * &kk) * &inv_r1) + &(&ll * &inv_r2);
        let want_v = &(&(&Scalar::int(2) * &cc) * &(&kk + &Scalar::one())) * &inv_r1;
        let want_w = &(&Scalar::int(2) * &(&ll + &Scalar::one())) * &inv_r2;
        if lu != want_u || lv != want_v || lw != want_w {
            return Err(format!("closed-form roots mismatch at k={k}, l={l}, c={c}"));
        }
    }
    // null detection exactly at the slope K/L in the hyperbolic case
    for (k, l) in [(2usize, 1usize), (3, 1), (3, 2)] {
        let slope = Scalar::ratio(2 * k as i64 + 1, 2 * l as i64 + 1);
        let a = a2_type_analysis(k, l, -1, &slope).map_err(|e| e.to_string())?;
        if !a.lambda_u.is_zero() || a.verdict != (TypeVerdict::Finite { k: 3, null: true }) {
            return Err(format!("null 3-type not detected at k={k}, l={l}"));
        }
        if !a.mass_symmetric {
            return Err("null 3-type must be mass-symmetric".into());
        }
    }
    Ok(())
}

fn criterion_4_tube_numbers() -> CheckResult {
    let entries = a2_two_type_solve(SpaceForm::projective(3), 1).map_err(|e| e.to_string())?;
    if entries.len() != 2 {
        return Err(format!("expected two tube radii, got {}", entries.len()));
    }
    if entries[0].eigenvalues != vec![Scalar::int(12), Scalar::int(16)] {
        return Err("case (a) eigenvalues are not {16, 12}".into());
    }
    // Case (b) carries {64/3, 64/5}: the closed forms 4(m+1)(K+1)/K and
    // 4(m+1)(L+1)/(L+2) at m = 3, K = L = 3. (The value 2(n+3) = 16 belongs
    // to case (a) only; it is not an eigenvalue here.)
    if entries[1].eigenvalues != vec![Scalar::ratio(64, 5), Scalar::ratio(64, 3)] {
        return Err(format!(
            "case (b) eigenvalues are not {{64/5, 64/3}}: {:?}",
            entries[1].eigenvalues
        ));
    }
    if entries[1].eigenvalues.contains(&Scalar::int(16)) {
        return Err("case (b) unexpectedly carries the case-(a) eigenvalue".into());
    }
    // case (c) = case (b) with the focal roles exchanged, radius-complement
    let s = hopflab_core::classify::stability_remark_check(3, 1).map_err(|e| e.to_string())?;
    if !s.complement_ok || s.t_b != Scalar::ratio(3, 5) || s.t_c != Scalar::ratio(5, 3) {
        return Err("complementary-radius identity fails at m=3, k=1".into());
    }
    Ok(())
}

fn criterion_5_sphere_identities() -> CheckResult {
    for m in 2..=6usize {
        // symbolic two-type identity with the constant remainder, c = 1
        for c in [1i32, -1] {
            let sf = SpaceForm { c, m };
            let spec = ModelSpec::new(Family::A1, sf, None, Param::Symbolic);
            let module = build_frame_module(&spec).map_err(|e| e.to_string())?;
            let (lu, lv) = a1_eigenvalues(sf);
            let v = &module.x_expansion;
            let combo = module
                .apply_power(v, 2)
                .sub(&module.apply(v).scale(&(&lu + &lv)))
                .add(&v.scale(&(&lu * &lv)));
            let w = predicted_center_offset_a1(&spec).map_err(|e| e.to_string())?;
            if !module.apply(&w).is_zero() {
                return Err(format!("center offset is not harmonic at c={c}, m={m}"));
            }
            if !combo.sub(&w.scale(&(&lu * &lv))).is_zero() {
                return Err(format!("two-type identity fails at c={c}, m={m}"));
            }
        }
        // 1-type collapse exactly at t = 1/(2m+1)
        let spec = ModelSpec::a1(
            SpaceForm::projective(m),
            Scalar::ratio(1, 2 * m as i64 + 1),
        );
        let report = chen_type_evidence(&spec).map_err(|e| e.to_string())?;
        if report.verdict != (TypeVerdict::Finite { k: 1, null: false }) {
            return Err(format!("no 1-type collapse at m={m}"));
        }
        // mass symmetry exactly at t = 1/m and nowhere else (projective)
        let spec = ModelSpec::a1(SpaceForm::projective(m), Scalar::ratio(1, m as i64));
        let report = chen_type_evidence(&spec).map_err(|e| e.to_string())?;
        if !report.mass_symmetric {
            return Err(format!("t = 1/m not mass-symmetric at m={m}"));
        }
        if !predicted_center_offset_a1(&ModelSpec::a1(
            SpaceForm::projective(m),
            Scalar::ratio(1, m as i64),
        ))
        .map_err(|e| e.to_string())?
        .is_zero()
        {
            return Err("center offset should vanish at t = 1/m".into());
        }
        // hyperbolic: the offset coefficient m t + 1 has no positive root
        let coeff = hopflab_core::scalar::QPoly::from_ints(&[1, m as i64]);
        if !isolate_real_roots(&coeff, &Domain::positive()).is_empty() {
            return Err(format!("unexpected hyperbolic mass symmetry at m={m}"));
        }
    }
    Ok(())
}

fn criterion_6_b_two_type() -> CheckResult {
    for m in 2..=6usize {
        let n = 2 * m as i64 - 1;
        let k2 = Scalar::int(4 * m as i64);
        let spec = ModelSpec::b(SpaceForm::projective(m), k2);
        let report = chen_type_evidence(&spec).map_err(|e| e.to_string())?;
        let expect = vec![
            Scalar::int(4 * m as i64) - Scalar::ratio(4, m as i64),
            Scalar::int(4 * (m as i64 + 1)),
        ];
        if report.eigenvalues != expect || !report.mass_symmetric {
            return Err(format!("first-radius eigenvalues fail at m={m}"));
        }
        // the two explicit eigencomponents of the decomposition
        let module = build_frame_module(&spec).map_err(|e| e.to_string())?;
        let comps = eigencomponents(&module, &module.x_expansion, &report.eigenvalues)
            .map_err(|e| e.to_string())?;
        let root = Scalar::int(2 * (n + 1)).sqrt().map_err(|e| e.to_string())?;
        let over = Scalar::int(2 * (n + 3));
        let xu = FrameVector::new(
            root.try_div(&over).map_err(|e| e.to_string())?,
            Scalar::ratio(-(n + 1), 4 * (n + 3)),
            Scalar::zero(),
        );
        let xv = FrameVector::new(
            -root.try_div(&over).map_err(|e| e.to_string())?,
            Scalar::ratio(n - 3, 4 * (n + 3)),
            Scalar::ratio(-1, 2 * (n + 3)),
        );
        if !comps[0].sub(&xu).is_zero() || !comps[1].sub(&xv).is_zero() {
            return Err(format!("eigencomponent displays fail at m={m}"));
        }
    }
    // condition equivalence and factorization for m in 2..=8, both signs;
    // the hyperbolic case must have no admissible radius
    for m in 2..=8usize {
        b_condition_polynomial(SpaceForm::projective(m)).map_err(|e| e.to_string())?;
        b_condition_polynomial(SpaceForm::hyperbolic(m)).map_err(|e| e.to_string())?;
        if !b_two_type_solve(SpaceForm::hyperbolic(m))
            .map_err(|e| e.to_string())?
            .is_empty()
        {
            return Err(format!("hyperbolic two-type radius appeared at m={m}"));
        }
    }
    Ok(())
}

fn criterion_7_b_frame_module() -> CheckResult {
    for c in [1i32, -1] {
        for m in 2..=6usize {
            let sf = SpaceForm { c, m };
            let spec = ModelSpec::new(Family::B, sf, None, Param::Symbolic);
            for (name, residual) in verify_paper_iterates(&spec).map_err(|e| e.to_string())? {
                if !residual.is_zero() {
                    return Err(format!("c={c}, m={m}, {name}: residual {residual}"));
                }
            }
            b_cubic_identity_symbolic(sf).map_err(|e| e.to_string())?;
        }
    }
    // Lemma-style roots at concrete radii, and the degenerate coincidence
    let e = b_three_type(SpaceForm::hyperbolic(2), &Scalar::ratio(64, 25))
        .map_err(|e| e.to_string())?;
    if !e.eigenvalues.contains(&Scalar::ratio(9, 4)) {
        return Err("hyperbolic cubic root 9/4 missing".into());
    }
    for m in 2..=4usize {
        let k2 = &(&Scalar::int(2)
            * &Scalar::int(2 * (m as i64) * (m as i64) - 1)
                .sqrt()
                .map_err(|e| e.to_string())?)
            - &Scalar::int(2);
        let e = b_three_type(SpaceForm::projective(m), &k2).map_err(|e| e.to_string())?;
        if e.verdict != (TypeVerdict::Finite { k: 2, null: false }) || e.item != "theorem-1.(v)" {
            return Err(format!("degenerate coincidence not detected at m={m}"));
        }
    }
    Ok(())
}

fn criterion_8_horosphere() -> CheckResult {
    for m in 2..=4usize {
        let spec = ModelSpec::horosphere(m);
        let module = build_frame_module(&spec).map_err(|e| e.to_string())?;
        let v = &module.x_expansion;
        if module.apply_power(v, 2).is_zero() {
            return Err(format!("second iterate vanished at m={m}"));
        }
        if !module.apply_power(v, 3).is_zero() {
            return Err(format!("third iterate nonzero at m={m}"));
        }
        let mp = module.minimal_polynomial(v).map_err(|e| e.to_string())?;
        let cubed = vec![
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::one(),
        ];
        if mp != cubed {
            return Err(format!("minimal polynomial is not the cube at m={m}"));
        }
    }
    Ok(())
}

fn criterion_9_four_curvature_exclusion() -> CheckResult {
    for (m, fam) in [
        (5usize, Family::C),
        (7, Family::C),
        (9, Family::D),
        (15, Family::E),
    ] {
        let w = cde_exclude(m, fam).map_err(|e| e.to_string())?;
        if !w.forced_f_is_minus_kappa {
            return Err(format!("{fam} m={m}: mean-curvature elimination failed"));
        }
        if w.positive_roots != 0 {
            return Err(format!("{fam} m={m}: witness has a positive root"));
        }
    }
    Ok(())
}

fn criterion_10_theorem_reports() -> CheckResult {
    for m in 2..=5usize {
        let rep = theorem_report(TheoremId::T1, m).map_err(|e| e.to_string())?;
        let items: Vec<&str> = rep
            .entries
            .iter()
            .map(|e| e.item.as_str())
            .filter(|s| s.starts_with("theorem-1"))
            .collect();
        let expected = 3 + 2 * (m - 2);
        if items.len() != expected {
            return Err(format!(
                "T1 m={m}: {} items instead of {expected}",
                items.len()
            ));
        }
        for want in ["theorem-1.(i)", "theorem-1.(iv)", "theorem-1.(v)"] {
            if !items.contains(&want) {
                return Err(format!("T1 m={m}: missing {want}"));
            }
        }
        let tubes_a = items.iter().filter(|s| **s == "theorem-1.(ii)").count();
        let tubes_b = items.iter().filter(|s| **s == "theorem-1.(iii)").count();
        if tubes_a != m - 2 || tubes_b != m - 2 {
            return Err(format!("T1 m={m}: tube item counts {tubes_a}/{tubes_b}"));
        }
    }
    for m in 2..=3usize {
        let rep = theorem_report(TheoremId::T2, m).map_err(|e| e.to_string())?;
        let two_type: Vec<Family> = rep
            .entries
            .iter()
            .filter(|e| matches!(e.verdict, TypeVerdict::Finite { k: 2, .. }))
            .map(|e| e.family)
            .collect();
        if two_type != vec![Family::A1, Family::A1Tube] {
            return Err(format!("T2 m={m}: branches {two_type:?}"));
        }
    }
    let rep = theorem_report(TheoremId::T3, 2).map_err(|e| e.to_string())?;
    let family_rows: Vec<_> = rep.entries.iter().filter(|e| e.param.is_none()).collect();
    if family_rows.len() != 1 || family_rows[0].family != Family::B {
        return Err("T3: expected one class-B family row".into());
    }
    let excluded: Vec<_> = rep.entries.iter().filter(|e| e.param.is_some()).collect();
    if excluded.len() != 2 {
        return Err("T3: expected two excluded radii".into());
    }
    let r1 = &Scalar::sqrt_int(2) + &Scalar::sqrt_int(3);
    let k2_1 = {
        let k = &r1 - &r1.try_inv().map_err(|e| e.to_string())?;
        &k * &k
    };
    if excluded[0].param != Some(k2_1) {
        return Err("T3: first excluded radius is not cot r = sqrt(2)+sqrt(3)".into());
    }
    let cot2 = &Scalar::sqrt_int(6) + &Scalar::sqrt_int(7);
    let k2_2 = &(&cot2 + &cot2.try_inv().map_err(|e| e.to_string())?) - &Scalar::int(2);
    if excluded[1].param != Some(k2_2) {
        return Err("T3: second excluded radius is not cot r = sqrt(sqrt(6)+sqrt(7))".into());
    }
    let rep = theorem_report(TheoremId::T4, 2).map_err(|e| e.to_string())?;
    let b_rows: Vec<_> = rep
        .entries
        .iter()
        .filter(|e| e.family == Family::B)
        .collect();
    if b_rows.len() != 1 || !b_rows[0].mass_symmetric {
        return Err("T4: expected the single class-B family row".into());
    }
    Ok(())
}

fn criterion_11_cross_engine() -> CheckResult {
    let projective: Vec<Scalar> = vec![
        Scalar::int(4),
        Scalar::ratio(1, 2),
        Scalar::ratio(1, 5),
        Scalar::ratio(2, 3),
        Scalar::int(7),
    ];
    for t in projective {
        for m in 2..=3usize {
            let spec = ModelSpec::a1(SpaceForm::projective(m), t.clone());
            ok_or(cross_check_frame_vs_block(&spec).map(|_| ()))?;
        }
    }
    for t in [Scalar::int(4), Scalar::ratio(3, 2)] {
        let spec = ModelSpec::a1(SpaceForm::hyperbolic(2), t);
        ok_or(cross_check_frame_vs_block(&spec).map(|_| ()))?;
    }
    for t in [Scalar::ratio(1, 2), Scalar::ratio(1, 3), Scalar::ratio(1, 5)] {
        let spec = ModelSpec::new(
            Family::A1Tube,
            SpaceForm::hyperbolic(2),
            None,
            Param::Exact(t),
        );
        ok_or(cross_check_frame_vs_block(&spec).map(|_| ()))?;
    }
    Ok(())
}

fn criterion_12_auxiliary_identities() -> CheckResult {
    // inner products of the iterates with the position, symbolically
    for spec in [
        ModelSpec::new(Family::A1, SpaceForm::projective(3), None, Param::Symbolic),
        ModelSpec::new(Family::A1, SpaceForm::hyperbolic(2), None, Param::Symbolic),
        ModelSpec::new(Family::B, SpaceForm::projective(2), None, Param::Symbolic),
        ModelSpec::new(Family::B, SpaceForm::hyperbolic(4), None, Param::Symbolic),
    ] {
        for (name, residual) in
            hopflab_core::frame::inner_product_identities(&spec).map_err(|e| e.to_string())?
        {
            if !residual.is_zero() {
                return Err(format!("{name}: {residual}"));
            }
        }
    }
    // structure traces, matrix versus closed form
    for spec in [
        ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4)),
        ModelSpec::b(SpaceForm::projective(2), Scalar::int(8)),
        ModelSpec::b(SpaceForm::hyperbolic(2), Scalar::ratio(64, 25)),
        ModelSpec::new(Family::A1, SpaceForm::projective(4), None, Param::Symbolic),
        ModelSpec::horosphere(3),
    ] {
        let tm = hopflab_core::tangent::tangent_model(&spec).map_err(|e| e.to_string())?;
        hopflab_core::tangent::trace_identities(&tm).map_err(|e| e.to_string())?;
    }
    // derivative norm: closed form equals 2(n-1) and the explicit oracle
    for spec in [
        ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4)),
        ModelSpec::horosphere(2),
        ModelSpec::a2(SpaceForm::projective(4), 1, Scalar::int(3)),
    ] {
        let tm = hopflab_core::tangent::tangent_model(&spec).map_err(|e| e.to_string())?;
        let closed =
            hopflab_core::tangent::simons_norm_nabla_a(&spec).map_err(|e| e.to_string())?;
        let oracle =
            hopflab_core::tangent::nabla_a_norm_oracle(&tm).map_err(|e| e.to_string())?;
        let expect = Scalar::int(2 * (tm.n as i64 - 1));
        if closed != expect || oracle != expect {
            return Err(format!("derivative norm mismatch for {}", spec.family));
        }
    }
    // symbolic sphere value
    let spec = ModelSpec::new(Family::A1, SpaceForm::projective(3), None, Param::Symbolic);
    if hopflab_core::tangent::simons_norm_nabla_a(&spec).map_err(|e| e.to_string())?
        != Scalar::int(8)
    {
        return Err("symbolic sphere derivative norm is not 2(n-1)".into());
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> CheckResult)> = vec![
        (
            "1: embedding certificates, 100 exact + 100 float samples per space form",
            criterion_1_embedding,
        ),
        (
            "2: block closed forms equal the polynomial oracle, k+l <= 4, powers 1..3, symbolic",
            criterion_2_block_oracle,
        ),
        (
            "3: tube cubic equation and roots, symbolic; null 3-type at the slope K/L",
            criterion_3_tube_cubic,
        ),
        (
            "4: tube radii and eigenvalues at m=3, k=1; complement identity",
            criterion_4_tube_numbers,
        ),
        (
            "5: sphere two-type identity, 1-type collapse, mass-symmetric radius, m in 2..6",
            criterion_5_sphere_identities,
        ),
        (
            "6: class-B two-type numbers, eigencomponents, condition equivalence, m in 2..8",
            criterion_6_b_two_type,
        ),
        (
            "7: class-B frame iterates and cubic, symbolic m in 2..6; degenerate coincidence",
            criterion_7_b_frame_module,
        ),
        (
            "8: horosphere minimal polynomial is the cube of the variable, m in 2..4",
            criterion_8_horosphere,
        ),
        (
            "9: four-curvature classes excluded by the mean-curvature elimination",
            criterion_9_four_curvature_exclusion,
        ),
        (
            "10: theorem reports emit exactly the classified items",
            criterion_10_theorem_reports,
        ),
        (
            "11: frame module and block oracle agree on every sphere instance",
            criterion_11_cross_engine,
        ),
        (
            "12: auxiliary identities: inner products, structure traces, derivative norm",
            criterion_12_auxiliary_identities,
        ),
    ];
    let mut failures = Vec::new();
    for (desc, run) in criteria {
        match run() {
            Ok(()) => println!("PASS criterion {desc}"),
            Err(e) => {
                println!("FAIL criterion {desc}: {e}");
                failures.push(desc);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
