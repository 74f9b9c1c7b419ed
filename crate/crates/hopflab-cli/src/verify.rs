//! The verification suites behind `hopflab verify`. Every item is pure and
//! exact; items run independently and can fan out over threads, capped by
//! the HOPFLAB_THREADS environment variable, with output order fixed.

use hopflab_core::catalog::{Family, ModelSpec, Param, SpaceForm};
use hopflab_core::error::{HopfError, Result};
use hopflab_core::scalar::Scalar;
use rand::SeedableRng;

pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_kl: usize,
    pub family: Option<Family>,
    pub max_m: usize,
}

type Item = (String, Box<dyn Fn() -> Result<()> + Send + Sync>);

pub fn run_suite(suite: &str, config: &SuiteConfig) -> Result<Vec<(String, Result<()>)>> {
    let mut items: Vec<Item> = Vec::new();
    match suite {
        "embedding" => embedding_items(config, &mut items),
        "iterates" => iterate_items(config, &mut items),
        "block" => block_items(config, &mut items),
        "type-equations" => type_equation_items(config, &mut items),
        "traces" => trace_items(config, &mut items),
        "all" => {
            embedding_items(config, &mut items);
            iterate_items(config, &mut items);
            block_items(config, &mut items);
            type_equation_items(config, &mut items);
            trace_items(config, &mut items);
        }
        other => {
            return Err(HopfError::Parse(format!(
                "unknown suite {other}; expected embedding, iterates, block, type-equations, traces, all"
            )))
        }
    }
    Ok(execute(items))
}

fn thread_cap() -> usize {
    std::env::var("HOPFLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn execute(items: Vec<Item>) -> Vec<(String, Result<()>)> {
    let cap = thread_cap().min(items.len().max(1));
    if cap <= 1 {
        return items.into_iter().map(|(n, f)| (n, f())).collect();
    }
    let n = items.len();
    let mut results: Vec<Option<Result<()>>> = (0..n).map(|_| None).collect();
    let names: Vec<String> = items.iter().map(|(n, _)| n.clone()).collect();
    let jobs: Vec<(usize, &Item)> = items.iter().enumerate().collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results_mutex = std::sync::Mutex::new(&mut results);
    std::thread::scope(|scope| {
        for _ in 0..cap {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= jobs.len() {
                    break;
                }
                let out = (jobs[i].1 .1)();
                results_mutex.lock().unwrap()[i] = Some(out);
            });
        }
    });
    names
        .into_iter()
        .zip(results.into_iter().map(|r| r.unwrap()))
        .collect()
}

fn embedding_items(config: &SuiteConfig, items: &mut Vec<Item>) {
    let samples = config.samples;
    let seed = config.seed;
    for c in [1i32, -1] {
        for m in 2..=5usize {
            let name = format!(
                "embedding: {} m={m}, {samples} exact + {samples} float samples",
                if c == 1 { "cp" } else { "ch" }
            );
            items.push((
                name,
                Box::new(move || {
                    let sf = SpaceForm { c, m };
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
                        seed ^ ((c as u64) << 32) ^ m as u64,
                    );
                    for _ in 0..samples {
                        let z = hopflab_core::embed::sample_integer_line(&mut rng, sf);
                        let p = hopflab_core::embed::embed_line(&z, sf)?;
                        if p.mul(&p) != p {
                            return Err(HopfError::EngineMismatch(
                                "projector identity failed".into(),
                            ));
                        }
                        if p.trace() != hopflab_core::embed::CScalar::one() {
                            return Err(HopfError::EngineMismatch("unit trace failed".into()));
                        }
                        if !hopflab_core::embed::hyperquadric_residual(&p, sf)?.is_zero() {
                            return Err(HopfError::EngineMismatch(
                                "hyperquadric residual nonzero".into(),
                            ));
                        }
                    }
                    for _ in 0..samples {
                        let z = hopflab_core::embed::sample_float_point(&mut rng, sf);
                        let p = hopflab_core::embed::embed_point_f64(&z, sf);
                        let (proj, tr, quad) = hopflab_core::embed::float_residuals(&p, sf);
                        if proj >= 1e-12 || tr >= 1e-12 || quad >= 1e-12 {
                            return Err(HopfError::EngineMismatch(format!(
                                "float residuals {proj:.2e} {tr:.2e} {quad:.2e}"
                            )));
                        }
                    }
                    Ok(())
                }),
            ));
        }
    }
}

fn iterate_items(config: &SuiteConfig, items: &mut Vec<Item>) {
    let mut fams = vec![
        (Family::A1, 1),
        (Family::A1, -1),
        (Family::A1Tube, -1),
        (Family::B, 1),
        (Family::B, -1),
    ];
    if let Some(f) = config.family {
        fams.retain(|(fam, _)| *fam == f);
    }
    for (family, c) in fams {
        for m in 2..=config.max_m {
            let name = format!(
                "iterates: {family} {} m={m} symbolic",
                if c == 1 { "cp" } else { "ch" }
            );
            items.push((
                name,
                Box::new(move || {
                    let spec =
                        ModelSpec::new(family, SpaceForm { c, m }, None, Param::Symbolic);
                    for (label, residual) in hopflab_core::frame::verify_paper_iterates(&spec)? {
                        if !residual.is_zero() {
                            return Err(HopfError::EngineMismatch(format!(
                                "{label}: residual {residual}"
                            )));
                        }
                    }
                    Ok(())
                }),
            ));
        }
    }
    // horosphere nilpotency
    for m in 2..=config.max_m.min(4) {
        items.push((
            format!("iterates: horosphere m={m} nilpotent"),
            Box::new(move || {
                let spec = ModelSpec::horosphere(m);
                let module = hopflab_core::frame::build_frame_module(&spec)?;
                let v = &module.x_expansion;
                if module.apply_power(v, 2).is_zero() || !module.apply_power(v, 3).is_zero() {
                    return Err(HopfError::EngineMismatch(
                        "horosphere iterate pattern broken".into(),
                    ));
                }
                Ok(())
            }),
        ));
    }
}

fn block_items(config: &SuiteConfig, items: &mut Vec<Item>) {
    for c in [1i32, -1] {
        for k in 0..=config.max_kl {
            for l in 0..=(config.max_kl - k) {
                let name = format!(
                    "block: k={k} l={l} {} symbolic, powers 1..3",
                    if c == 1 { "cp" } else { "ch" }
                );
                items.push((
                    name,
                    Box::new(move || {
                        let t = hopflab_core::blocks::symbolic_t();
                        let pq = hopflab_core::blocks::ProductQuadric::new(k, l, c, &t)?;
                        hopflab_core::blocks::verify_block_powers(&pq, 3)
                    }),
                ));
            }
        }
    }
}

fn type_equation_items(config: &SuiteConfig, items: &mut Vec<Item>) {
    for c in [1i32, -1] {
        for m in 2..=config.max_m {
            items.push((
                format!(
                    "type-equations: class B cubic, {} m={m} symbolic",
                    if c == 1 { "cp" } else { "ch" }
                ),
                Box::new(move || {
                    hopflab_core::classify::b_cubic_identity_symbolic(SpaceForm { c, m })
                }),
            ));
        }
    }
    for c in [1i32, -1] {
        items.push((
            format!(
                "type-equations: two-type condition matches both derivations, {}",
                if c == 1 { "cp" } else { "ch" }
            ),
            Box::new(move || {
                for m in 2..=4usize {
                    hopflab_core::classify::b_condition_polynomial(SpaceForm { c, m })?;
                    for k in 1..=m.saturating_sub(2) {
                        hopflab_core::classify::a2_condition_polynomial(SpaceForm { c, m }, k)?;
                    }
                }
                Ok(())
            }),
        ));
    }
    items.push((
        "type-equations: tube cubic symbolic".into(),
        Box::new(|| {
            for (k, l, c) in [(1usize, 1usize, 1i32), (1, 2, 1), (2, 1, -1)] {
                let a = hopflab_core::blocks::a2_type_analysis(
                    k,
                    l,
                    c,
                    &hopflab_core::blocks::symbolic_t(),
                )?;
                if !a.cubic_residual_zero {
                    return Err(HopfError::EngineMismatch(format!(
                        "tube cubic residual nonzero at k={k}, l={l}, c={c}"
                    )));
                }
            }
            Ok(())
        }),
    ));
    items.push((
        "type-equations: sphere two-type identity with constant remainder".into(),
        Box::new(|| {
            for (c, m) in [(1i32, 2usize), (1, 4), (-1, 3)] {
                let sf = SpaceForm { c, m };
                let spec = ModelSpec::new(Family::A1, sf, None, Param::Symbolic);
                let module = hopflab_core::frame::build_frame_module(&spec)?;
                let (lu, lv) = hopflab_core::classify::a1_eigenvalues(sf);
                let v = &module.x_expansion;
                let w = module
                    .apply_power(v, 2)
                    .sub(&module.apply(v).scale(&(&lu + &lv)))
                    .add(&v.scale(&(&lu * &lv)));
                let (predicted, killed) = {
                    let p = hopflab_core::frame::predicted_center_offset_a1(&spec)?;
                    let killed = module.apply(&p).is_zero();
                    (p, killed)
                };
                let scaled = predicted.scale(&(&lu * &lv));
                if !killed || !w.sub(&scaled).is_zero() {
                    return Err(HopfError::EngineMismatch(format!(
                        "sphere remainder mismatch at c={c}, m={m}"
                    )));
                }
            }
            Ok(())
        }),
    ));
}

fn trace_items(config: &SuiteConfig, items: &mut Vec<Item>) {
    let specs: Vec<(String, ModelSpec)> = vec![
        (
            "traces: sphere cp2 t=4".into(),
            ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4)),
        ),
        (
            "traces: sphere ch3 t=9/4".into(),
            ModelSpec::a1(SpaceForm::hyperbolic(3), Scalar::ratio(9, 4)),
        ),
        (
            "traces: tube cp4 k=2 t=1".into(),
            ModelSpec::a2(SpaceForm::projective(4), 2, Scalar::one()),
        ),
        (
            "traces: class B cp2 kappa^2=4".into(),
            ModelSpec::b(SpaceForm::projective(2), Scalar::int(4)),
        ),
        (
            "traces: class B ch2 kappa^2=64/25".into(),
            ModelSpec::b(SpaceForm::hyperbolic(2), Scalar::ratio(64, 25)),
        ),
        (
            "traces: horosphere ch3".into(),
            ModelSpec::horosphere(3),
        ),
    ];
    for (name, spec) in specs {
        items.push((
            name,
            Box::new(move || {
                let tm = hopflab_core::tangent::tangent_model(&spec)?;
                hopflab_core::tangent::trace_identities(&tm)?;
                Ok(())
            }),
        ));
    }
    for m in 2..=config.max_m {
        items.push((
            format!("traces: symbolic sphere cp{m}"),
            Box::new(move || {
                let spec = ModelSpec::new(
                    Family::A1,
                    SpaceForm::projective(m),
                    None,
                    Param::Symbolic,
                );
                let tm = hopflab_core::tangent::tangent_model(&spec)?;
                hopflab_core::tangent::trace_identities(&tm)?;
                Ok(())
            }),
        ));
    }
    items.push((
        "traces: inner products of iterates with the position".into(),
        Box::new(|| {
            for spec in [
                ModelSpec::new(Family::A1, SpaceForm::projective(3), None, Param::Symbolic),
                ModelSpec::new(Family::B, SpaceForm::projective(2), None, Param::Symbolic),
                ModelSpec::new(Family::B, SpaceForm::hyperbolic(4), None, Param::Symbolic),
            ] {
                for (name, residual) in hopflab_core::frame::inner_product_identities(&spec)? {
                    if !residual.is_zero() {
                        return Err(HopfError::EngineMismatch(format!("{name}: {residual}")));
                    }
                }
            }
            Ok(())
        }),
    ));
    items.push((
        "traces: derivative norm matches its closed form on class A".into(),
        Box::new(|| {
            for spec in [
                ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4)),
                ModelSpec::horosphere(3),
                ModelSpec::a2(SpaceForm::projective(3), 1, Scalar::int(2)),
            ] {
                let tm = hopflab_core::tangent::tangent_model(&spec)?;
                let closed = hopflab_core::tangent::simons_norm_nabla_a(&spec)?;
                let oracle = hopflab_core::tangent::nabla_a_norm_oracle(&tm)?;
                let expect = Scalar::int(2 * (tm.n as i64 - 1));
                if closed != expect || oracle != expect {
                    return Err(HopfError::EngineMismatch(format!(
                        "derivative norm mismatch for {}",
                        spec.family
                    )));
                }
            }
            Ok(())
        }),
    ));
}
