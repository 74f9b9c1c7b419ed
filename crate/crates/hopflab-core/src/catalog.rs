//! The standard-example catalog: families A0, A1 (with the hyperbolic tube
//! branch), A2, B, C, D, E with exact principal-curvature spectra as
//! functions of the radius parameter, the mu* involution, power traces, and
//! parameter conversions.
//!
//! Radii are never stored as angles. The A-family parameter is t = mu^2
//! where mu is the principal curvature on the holomorphic distribution
//! (cot_c r for spheres and A2 tubes, tanh r for the tube over a complex
//! hyperbolic hyperplane); the B/C/D/E parameter is kappa^2.

use crate::error::{HopfError, Result};
use crate::scalar::{Scalar, SymVar};
use std::fmt;

/// The ambient space form: c = +1 for the projective model, -1 for the
/// hyperbolic one; m is the complex dimension, n = 2m - 1 the hypersurface
/// dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpaceForm {
    pub c: i32,
    pub m: usize,
}

impl SpaceForm {
    pub fn projective(m: usize) -> Self {
        SpaceForm { c: 1, m }
    }

    pub fn hyperbolic(m: usize) -> Self {
        SpaceForm { c: -1, m }
    }

    pub fn new(c: i32, m: usize) -> Result<Self> {
        if c != 1 && c != -1 {
            return Err(HopfError::ParamOutOfRange(format!("c must be +/-1, got {c}")));
        }
        if m < 2 {
            return Err(HopfError::ParamOutOfRange(format!("m must be >= 2, got {m}")));
        }
        Ok(SpaceForm { c, m })
    }

    pub fn n(&self) -> usize {
        2 * self.m - 1
    }

    pub fn c_scalar(&self) -> Scalar {
        Scalar::int(self.c as i64)
    }

    /// Real dimension of the ambient space of Hermitian matrices.
    pub fn matrix_space_dim(&self) -> usize {
        (self.m + 1) * (self.m + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    A0,
    A1,
    A1Tube,
    A2,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::A0 => "A0",
            Family::A1 => "A1",
            Family::A1Tube => "A1''",
            Family::A2 => "A2",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
        }
    }

    pub fn is_class_a(&self) -> bool {
        matches!(self, Family::A0 | Family::A1 | Family::A1Tube | Family::A2)
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A0" => Ok(Family::A0),
            "A1" | "A1'" => Ok(Family::A1),
            "A1''" | "A1T" | "A1TUBE" => Ok(Family::A1Tube),
            "A2" => Ok(Family::A2),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            other => Err(HopfError::Parse(format!("unknown family {other}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    /// No parameter (the horosphere).
    None,
    /// Exact concrete value of t or kappa^2.
    Exact(Scalar),
    /// The parameter is the symbolic family variable.
    Symbolic,
}

#[derive(Clone, Debug)]
pub struct ModelSpec {
    pub family: Family,
    pub sf: SpaceForm,
    /// Complex dimension of the focal submanifold for A2.
    pub k: Option<usize>,
    pub param: Param,
}

impl ModelSpec {
    pub fn new(family: Family, sf: SpaceForm, k: Option<usize>, param: Param) -> Self {
        ModelSpec {
            family,
            sf,
            k,
            param,
        }
    }

    pub fn a1(sf: SpaceForm, t: Scalar) -> Self {
        Self::new(Family::A1, sf, None, Param::Exact(t))
    }

    pub fn a2(sf: SpaceForm, k: usize, t: Scalar) -> Self {
        Self::new(Family::A2, sf, Some(k), Param::Exact(t))
    }

    pub fn b(sf: SpaceForm, kappa2: Scalar) -> Self {
        Self::new(Family::B, sf, None, Param::Exact(kappa2))
    }

    pub fn horosphere(m: usize) -> Self {
        Self::new(Family::A0, SpaceForm::hyperbolic(m), None, Param::None)
    }

    pub fn is_symbolic(&self) -> bool {
        self.param == Param::Symbolic
    }

    /// The family parameter as a scalar: the symbolic variable for symbolic
    /// specs, the exact value otherwise.
    pub fn param_scalar(&self) -> Result<Scalar> {
        match (&self.param, self.family.is_class_a()) {
            (Param::Exact(v), _) => Ok(v.clone()),
            (Param::Symbolic, true) => Ok(Scalar::sym_var(SymVar::T)),
            (Param::Symbolic, false) => Ok(Scalar::sym_var(SymVar::Kappa2)),
            (Param::None, _) => Err(HopfError::ParamOutOfRange(
                "family carries no parameter".into(),
            )),
        }
    }

    /// Square root of the parameter: mu for the A families, kappa for the
    /// rest. Symbolic specs yield the symbolic root.
    pub fn param_root(&self) -> Result<Scalar> {
        match (&self.param, self.family.is_class_a()) {
            (Param::Symbolic, true) => Ok(Scalar::sym_root(SymVar::T)),
            (Param::Symbolic, false) => Ok(Scalar::sym_root(SymVar::Kappa2)),
            (Param::Exact(v), _) => v.sqrt(),
            (Param::None, _) => Err(HopfError::ParamOutOfRange(
                "family carries no parameter".into(),
            )),
        }
    }
}

/// How the complex structure acts on a curvature block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JAction {
    Invariant,
    SwappedWith(usize),
}

/// One explicit principal-curvature block.
#[derive(Clone, Debug)]
pub struct PrincipalBlock {
    pub value: Scalar,
    pub multiplicity: usize,
    pub j_action: JAction,
}

/// A block entry of the spectrum. Symbolic B/C/D/E spectra keep coupled
/// pairs implicit through their quadratic x^2 = beta x + gamma, since the
/// individual roots live outside the symbolic tower.
#[derive(Clone, Debug)]
pub enum SpectrumBlock {
    Explicit(PrincipalBlock),
    Coupled {
        beta: Scalar,
        gamma: Scalar,
        mult_each: usize,
        j_swapped: bool,
    },
}

impl SpectrumBlock {
    pub fn total_multiplicity(&self) -> usize {
        match self {
            SpectrumBlock::Explicit(b) => b.multiplicity,
            SpectrumBlock::Coupled { mult_each, .. } => 2 * mult_each,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrincipalSpectrum {
    pub sf: SpaceForm,
    /// Principal curvature of the structure vector U (multiplicity 1).
    pub kappa: Scalar,
    pub blocks: Vec<SpectrumBlock>,
}

impl PrincipalSpectrum {
    /// tr A^k, exactly; coupled pairs contribute through Newton's recurrence.
    pub fn power_trace(&self, k: u32) -> Scalar {
        let mut acc = self.kappa.pow_u(k);
        for b in &self.blocks {
            match b {
                SpectrumBlock::Explicit(pb) => {
                    acc = &acc + &(&Scalar::int(pb.multiplicity as i64) * &pb.value.pow_u(k));
                }
                SpectrumBlock::Coupled {
                    beta,
                    gamma,
                    mult_each,
                    ..
                } => {
                    acc = &acc
                        + &(&Scalar::int(*mult_each as i64) * &pair_power_sum(beta, gamma, k));
                }
            }
        }
        acc
    }

    pub fn f(&self) -> Scalar {
        self.power_trace(1)
    }

    pub fn f2(&self) -> Scalar {
        self.power_trace(2)
    }

    /// Hypersurface dimension from multiplicities: 1 + sum of block sizes.
    pub fn dimension(&self) -> usize {
        1 + self
            .blocks
            .iter()
            .map(|b| b.total_multiplicity())
            .sum::<usize>()
    }

    /// All explicit eigenvalue blocks on the holomorphic distribution;
    /// errors when a symbolic coupled pair cannot be expanded.
    pub fn explicit_blocks(&self) -> Result<Vec<PrincipalBlock>> {
        let mut out = Vec::new();
        for b in &self.blocks {
            match b {
                SpectrumBlock::Explicit(pb) => out.push(pb.clone()),
                SpectrumBlock::Coupled { .. } => {
                    return Err(HopfError::ScalarKind(
                        "coupled symbolic block has no explicit values".into(),
                    ))
                }
            }
        }
        Ok(out)
    }
}

/// Power sums of the two roots of x^2 = beta x + gamma:
/// p_0 = 2, p_1 = beta, p_k = beta p_{k-1} + gamma p_{k-2}.
fn pair_power_sum(beta: &Scalar, gamma: &Scalar, k: u32) -> Scalar {
    if k == 0 {
        return Scalar::int(2);
    }
    let mut pm2 = Scalar::int(2);
    let mut pm1 = beta.clone();
    for _ in 1..k {
        let next = &(beta * &pm1) + &(gamma * &pm2);
        pm2 = pm1;
        pm1 = next;
    }
    pm1
}

/// mu* from the Hopf coupling (2 mu - kappa)(2 mu* - kappa) = kappa^2 + 4c.
pub fn mu_star(mu: &Scalar, kappa: &Scalar, c: i32) -> Result<Scalar> {
    let denom = &(&Scalar::int(2) * mu) - kappa;
    if denom.is_zero() {
        return Err(HopfError::MuStarUndefined);
    }
    let num = &(kappa * mu) + &Scalar::int(2 * c as i64);
    num.try_div(&denom)
}

/// kappa = mu - c/mu, the class-A relation between the Hopf curvature and
/// the distribution curvature.
pub fn kappa_from_mu(mu: &Scalar, c: i32) -> Result<Scalar> {
    mu.try_sub(&Scalar::int(c as i64).try_div(mu)?)
}

pub fn spectrum(spec: &ModelSpec) -> Result<PrincipalSpectrum> {
    let sf = spec.sf;
    let c = sf.c;
    let m = sf.m;
    let report = family_constraints(spec);
    if !report.valid {
        return Err(HopfError::ParamOutOfRange(report.messages.join("; ")));
    }
    match spec.family {
        Family::A0 => Ok(PrincipalSpectrum {
            sf,
            kappa: Scalar::int(2),
            blocks: vec![SpectrumBlock::Explicit(PrincipalBlock {
                value: Scalar::one(),
                multiplicity: 2 * m - 2,
                j_action: JAction::Invariant,
            })],
        }),
        Family::A1 | Family::A1Tube => {
            let mu = spec.param_root()?;
            let kappa = kappa_from_mu(&mu, c)?;
            Ok(PrincipalSpectrum {
                sf,
                kappa,
                blocks: vec![SpectrumBlock::Explicit(PrincipalBlock {
                    value: mu,
                    multiplicity: 2 * (m - 1),
                    j_action: JAction::Invariant,
                })],
            })
        }
        Family::A2 => {
            let k = spec.k.unwrap();
            let l = m - 1 - k;
            let mu1 = spec.param_root()?;
            let mu3 = (-Scalar::int(c as i64)).try_div(&mu1)?;
            let kappa = &mu1 + &mu3;
            Ok(PrincipalSpectrum {
                sf,
                kappa,
                blocks: vec![
                    SpectrumBlock::Explicit(PrincipalBlock {
                        value: mu1,
                        multiplicity: 2 * l,
                        j_action: JAction::Invariant,
                    }),
                    SpectrumBlock::Explicit(PrincipalBlock {
                        value: mu3,
                        multiplicity: 2 * k,
                        j_action: JAction::Invariant,
                    }),
                ],
            })
        }
        Family::B => {
            let kappa = spec.param_root()?;
            // mu2, mu4 are the roots of x^2 + (4c/kappa) x - c = 0.
            let beta = Scalar::int(-4 * c as i64).try_div(&kappa)?;
            let gamma = Scalar::int(c as i64);
            let mut blocks = Vec::new();
            push_pair(&mut blocks, beta, gamma, m - 1, true, spec.is_symbolic())?;
            Ok(PrincipalSpectrum { sf, kappa, blocks })
        }
        Family::C | Family::D | Family::E => {
            let kappa = spec.param_root()?;
            let (m13, m24) = match spec.family {
                Family::C => (m - 3, 2),
                Family::D => (4, 4),
                _ => (8, 6),
            };
            let mut blocks = Vec::new();
            // mu1, mu3 solve x^2 - kappa x - c = 0 (J-invariant pair);
            // mu2, mu4 solve x^2 + (4c/kappa) x - c = 0 (J-swapped pair).
            push_pair(
                &mut blocks,
                kappa.clone(),
                Scalar::int(c as i64),
                m13,
                false,
                spec.is_symbolic(),
            )?;
            let beta24 = Scalar::int(-4 * c as i64).try_div(&kappa)?;
            push_pair(
                &mut blocks,
                beta24,
                Scalar::int(c as i64),
                m24,
                true,
                spec.is_symbolic(),
            )?;
            Ok(PrincipalSpectrum { sf, kappa, blocks })
        }
    }
}

/// Append a root pair of x^2 = beta x + gamma either as two explicit blocks
/// (concrete parameters) or as one coupled block. Symbolic parameters, and
/// concrete ones whose roots would exceed the radical tower depth, stay
/// coupled; the pair's symmetric functions remain available either way.
fn push_pair(
    blocks: &mut Vec<SpectrumBlock>,
    beta: Scalar,
    gamma: Scalar,
    mult_each: usize,
    j_swapped: bool,
    symbolic: bool,
) -> Result<()> {
    let has_nested = |s: &Scalar| matches!(s, Scalar::Rad(r) if r.tower.nested.is_some());
    if symbolic || has_nested(&beta) || has_nested(&gamma) {
        blocks.push(SpectrumBlock::Coupled {
            beta,
            gamma,
            mult_each,
            j_swapped,
        });
        return Ok(());
    }
    let disc = &(&beta * &beta) + &(&Scalar::int(4) * &gamma);
    let root = match disc.sqrt() {
        Ok(r) => r,
        Err(HopfError::TowerDepth(_)) => {
            blocks.push(SpectrumBlock::Coupled {
                beta,
                gamma,
                mult_each,
                j_swapped,
            });
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let half = Scalar::ratio(1, 2);
    let hi = &(&beta + &root) * &half;
    let lo = &(&beta - &root) * &half;
    let base = blocks.len();
    let (j_hi, j_lo) = if j_swapped {
        (JAction::SwappedWith(base + 1), JAction::SwappedWith(base))
    } else {
        (JAction::Invariant, JAction::Invariant)
    };
    blocks.push(SpectrumBlock::Explicit(PrincipalBlock {
        value: hi,
        multiplicity: mult_each,
        j_action: j_hi,
    }));
    blocks.push(SpectrumBlock::Explicit(PrincipalBlock {
        value: lo,
        multiplicity: mult_each,
        j_action: j_lo,
    }));
    Ok(())
}

/// Conversions between the A-family parameter and the submersion picture:
/// squared factor radii with r1^2 + c r2^2 = 1, and the Hopf curvature.
#[derive(Clone, Debug)]
pub struct ParamConversions {
    pub r1_sq: Scalar,
    pub r2_sq: Scalar,
    pub kappa: Scalar,
    /// cot_c^2 r, the slope of the submersion picture.
    pub t: Scalar,
}

pub fn param_conversions(spec: &ModelSpec) -> Result<ParamConversions> {
    if !spec.family.is_class_a() || spec.family == Family::A0 {
        return Err(HopfError::FamilyMismatch(format!(
            "parameter conversions require a sphere-product family, got {}",
            spec.family
        )));
    }
    let c = spec.sf.c;
    let t_param = spec.param_scalar()?;
    // The tube over a complex hyperbolic hyperplane is parametrized by
    // tanh^2 r; the submersion slope is coth^2 r = 1/t.
    let t = if spec.family == Family::A1Tube {
        t_param.try_inv()?
    } else {
        t_param
    };
    let denom = &t + &Scalar::int(c as i64);
    if denom.is_zero() {
        return Err(HopfError::ParamOutOfRange("t + c = 0".into()));
    }
    let r1_sq = t.try_div(&denom)?;
    let r2_sq = Scalar::one().try_div(&denom)?;
    let mu1 = t.sqrt()?;
    let kappa = kappa_from_mu(&mu1, c)?;
    Ok(ParamConversions {
        r1_sq,
        r2_sq,
        kappa,
        t,
    })
}

#[derive(Clone, Debug)]
pub struct ValidityReport {
    pub valid: bool,
    pub param_range: String,
    pub messages: Vec<String>,
    pub coincidences: Vec<String>,
}

pub fn family_constraints(spec: &ModelSpec) -> ValidityReport {
    let mut messages = Vec::new();
    let mut coincidences = Vec::new();
    let c = spec.sf.c;
    let m = spec.sf.m;
    let param_range;

    fn positive_check(v: &Scalar, messages: &mut Vec<String>) {
        if !v.is_symbolic() && v.sign().map(|s| s <= 0).unwrap_or(true) {
            messages.push(format!("parameter must be positive, got {v}"));
        }
    }

    match spec.family {
        Family::A0 => {
            param_range = "no parameter (horosphere)".to_string();
            if c != -1 {
                messages.push("horospheres exist only in the hyperbolic space".into());
            }
            if spec.param != Param::None {
                messages.push("horosphere carries no radius parameter".into());
            }
        }
        Family::A1 => {
            if c == 1 {
                param_range = "t = cot^2 r in (0, inf)".to_string();
                if let Param::Exact(v) = &spec.param {
                    positive_check(v, &mut messages);
                }
            } else {
                param_range = "t = coth^2 r in (1, inf)".to_string();
                if let Param::Exact(v) = &spec.param {
                    positive_check(v, &mut messages);
                    if messages.is_empty() && (v - &Scalar::one()).sign().unwrap_or(0) <= 0 {
                        messages.push(format!("coth^2 r must exceed 1, got {v}"));
                    }
                }
            }
            if spec.param == Param::None {
                messages.push("missing radius parameter".into());
            }
        }
        Family::A1Tube => {
            param_range = "t = tanh^2 r in (0, 1)".to_string();
            if c != -1 {
                messages
                    .push("the tube over a complex hyperbolic hyperplane is hyperbolic-only".into());
            }
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
                if messages.is_empty() && (&Scalar::one() - v).sign().unwrap_or(0) <= 0 {
                    messages.push(format!("tanh^2 r must be below 1, got {v}"));
                }
            }
        }
        Family::A2 => {
            param_range = if c == 1 {
                "t = cot^2 r in (0, inf), k in 1..=m-2".to_string()
            } else {
                "t = coth^2 r in (1, inf), k in 1..=m-2".to_string()
            };
            match spec.k {
                None => messages.push("A2 requires the focal dimension k".into()),
                Some(k) => {
                    if k == 0 {
                        coincidences.push("k = 0 degenerates to A1".into());
                        messages.push("k must satisfy 1 <= k <= m-2".into());
                    } else if k + 1 >= m {
                        if k + 1 == m {
                            coincidences.push("l = 0 degenerates to A1".into());
                        }
                        messages.push(format!("k = {k} exceeds m-2 = {}", m.saturating_sub(2)));
                    }
                }
            }
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
                if c == -1 && messages.is_empty() && (v - &Scalar::one()).sign().unwrap_or(0) <= 0
                {
                    messages.push(format!("coth^2 r must exceed 1, got {v}"));
                }
            }
        }
        Family::B => {
            param_range = if c == 1 {
                "kappa^2 in (0, inf)".to_string()
            } else {
                "kappa^2 in (0, 4)".to_string()
            };
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
                if c == -1 && messages.is_empty() {
                    if (&Scalar::int(4) - v).sign().unwrap_or(0) <= 0 {
                        messages.push(format!("kappa^2 = {v} is not below the bound 4"));
                    }
                    if (v - &Scalar::int(3)).is_zero() {
                        coincidences.push(
                            "kappa^2 = 3: mu = kappa and only two distinct curvatures remain"
                                .into(),
                        );
                    }
                }
            }
        }
        Family::C => {
            param_range = "kappa^2 in (0, inf); m = 2k+1 odd, m >= 5".to_string();
            if c != 1 {
                messages.push("class C exists only in the projective space".into());
            }
            if m < 5 || m % 2 == 0 {
                messages.push(format!("m = 2k+1 required with m >= 5, got m = {m}"));
            }
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
            }
        }
        Family::D => {
            param_range = "kappa^2 in (0, inf); m = 9".to_string();
            if c != 1 {
                messages.push("class D exists only in the projective space".into());
            }
            if m != 9 {
                messages.push(format!("class D requires m = 9, got m = {m}"));
            }
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
            }
        }
        Family::E => {
            param_range = "kappa^2 in (0, inf); m = 15".to_string();
            if c != 1 {
                messages.push("class E exists only in the projective space".into());
            }
            if m != 15 {
                messages.push(format!("class E requires m = 15, got m = {m}"));
            }
            if let Param::Exact(v) = &spec.param {
                positive_check(v, &mut messages);
            }
        }
    }

    ValidityReport {
        valid: messages.is_empty(),
        param_range,
        messages,
        coincidences,
    }
}

/// Families present in the catalog for a given space form, in report order.
pub fn families_for(sf: SpaceForm) -> Vec<(Family, Option<usize>)> {
    let mut out = Vec::new();
    if sf.c == 1 {
        out.push((Family::A1, None));
        for k in 1..=sf.m.saturating_sub(2) {
            out.push((Family::A2, Some(k)));
        }
        out.push((Family::B, None));
        if sf.m >= 5 && sf.m % 2 == 1 {
            out.push((Family::C, None));
        }
        if sf.m == 9 {
            out.push((Family::D, None));
        }
        if sf.m == 15 {
            out.push((Family::E, None));
        }
    } else {
        out.push((Family::A0, None));
        out.push((Family::A1, None));
        out.push((Family::A1Tube, None));
        for k in 1..=sf.m.saturating_sub(2) {
            out.push((Family::A2, Some(k)));
        }
        out.push((Family::B, None));
    }
    out
}

/// Human-readable symbolic spectrum for catalog listings.
pub fn spectrum_strings(family: Family, sf: SpaceForm, k: Option<usize>) -> Vec<String> {
    let m = sf.m;
    let (cs, mcs) = if sf.c == 1 { ("1", "-1") } else { ("-1", "1") };
    match family {
        Family::A0 => vec![
            "kappa = 2 (mult 1)".into(),
            format!("nu = 1 (mult {})", 2 * m - 2),
        ],
        Family::A1 => vec![
            format!("kappa = (t - ({cs}))/sqrt(t) (mult 1)"),
            format!("mu = sqrt(t) (mult {})", 2 * (m - 1)),
        ],
        Family::A1Tube => vec![
            "kappa = (t + 1)/sqrt(t) (mult 1)".into(),
            format!("nu = sqrt(t) = tanh r (mult {})", 2 * (m - 1)),
        ],
        Family::A2 => {
            let k = k.unwrap_or(1);
            let l = m - 1 - k;
            vec![
                format!("kappa = (t - ({cs}))/sqrt(t) (mult 1)"),
                format!("mu1 = sqrt(t) (mult {})", 2 * l),
                format!("mu3 = ({mcs})/sqrt(t) (mult {})", 2 * k),
            ]
        }
        Family::B => vec![
            "kappa (mult 1)".into(),
            format!(
                "mu2, mu4 = roots of x^2 + (4*({cs})/kappa) x - ({cs}) (mult {} each, J-swapped)",
                m - 1
            ),
        ],
        Family::C | Family::D | Family::E => {
            let (m13, m24) = match family {
                Family::C => (m - 3, 2),
                Family::D => (4, 4),
                _ => (8, 6),
            };
            vec![
                "kappa (mult 1)".into(),
                format!("mu1, mu3 = roots of x^2 - kappa x - 1 (mult {m13} each, J-invariant)"),
                format!("mu2, mu4 = roots of x^2 + (4/kappa) x - 1 (mult {m24} each, J-swapped)"),
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_projective_spectrum() {
        // t = 4: kappa = 3/2, mu = 2 with multiplicity 2
        let spec = ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4));
        let sp = spectrum(&spec).unwrap();
        assert_eq!(sp.kappa, Scalar::ratio(3, 2));
        let blocks = sp.explicit_blocks().unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].value, Scalar::int(2));
        assert_eq!(blocks[0].multiplicity, 2);
        assert_eq!(sp.dimension(), 3);
    }

    #[test]
    fn a0_spectrum_and_traces() {
        let spec = ModelSpec::horosphere(2);
        let sp = spectrum(&spec).unwrap();
        assert_eq!(sp.kappa, Scalar::int(2));
        assert_eq!(sp.f(), Scalar::int(4));
        assert_eq!(sp.f2(), Scalar::int(6));
        assert_eq!(sp.dimension(), 3);
    }

    #[test]
    fn b_projective_m2_kappa2() {
        // kappa = 2 (r = pi/8): mu2 = sqrt(2)-1, mu4 = -(sqrt(2)+1)
        let spec = ModelSpec::b(SpaceForm::projective(2), Scalar::int(4));
        let sp = spectrum(&spec).unwrap();
        assert_eq!(sp.kappa, Scalar::int(2));
        let blocks = sp.explicit_blocks().unwrap();
        assert_eq!(blocks.len(), 2);
        let mu2 = &Scalar::sqrt_int(2) - &Scalar::one();
        let mu4 = -(&Scalar::sqrt_int(2) + &Scalar::one());
        assert_eq!(blocks[0].value, mu2);
        assert_eq!(blocks[1].value, mu4);
        assert_eq!(blocks[0].multiplicity, 1);
        // mu2 mu4 = -c
        assert_eq!(&blocks[0].value * &blocks[1].value, Scalar::int(-1));
        assert_eq!(blocks[0].j_action, JAction::SwappedWith(1));
    }

    #[test]
    fn mu_star_rules() {
        // A1 data: mu* = mu
        let mu = Scalar::int(2);
        let kappa = Scalar::ratio(3, 2);
        assert_eq!(mu_star(&mu, &kappa, 1).unwrap(), mu);
        // involution on random rationals
        let mu = Scalar::ratio(7, 3);
        let kappa = Scalar::ratio(-2, 5);
        for c in [1, -1] {
            let star = mu_star(&mu, &kappa, c).unwrap();
            assert_eq!(mu_star(&star, &kappa, c).unwrap(), mu);
        }
    }

    #[test]
    fn b_mu_star_swaps() {
        let spec = ModelSpec::b(SpaceForm::projective(2), Scalar::int(4));
        let sp = spectrum(&spec).unwrap();
        let blocks = sp.explicit_blocks().unwrap();
        let star = mu_star(&blocks[0].value, &sp.kappa, 1).unwrap();
        assert_eq!(star, blocks[1].value);
    }

    #[test]
    fn symbolic_b_power_traces() {
        // f = kappa - 4c(m-1)/kappa and f2 = kappa^2 + 16(m-1)/kappa^2 + 2c(m-1)
        for (c, m) in [(1i32, 2usize), (1, 4), (-1, 3)] {
            let sf = SpaceForm { c, m };
            let spec = ModelSpec::new(Family::B, sf, None, Param::Symbolic);
            let sp = spectrum(&spec).unwrap();
            let kappa = Scalar::sym_root(SymVar::Kappa2);
            let mm1 = Scalar::int((m - 1) as i64);
            let f_expect = &kappa
                - &(&(&Scalar::int(4 * c as i64) * &mm1) * &kappa.try_inv().unwrap());
            assert_eq!(sp.f(), f_expect);
            let k2 = Scalar::sym_var(SymVar::Kappa2);
            let f2_expect = &(&k2 + &(&(&Scalar::int(16) * &mm1) * &k2.try_inv().unwrap()))
                + &(&Scalar::int(2 * c as i64) * &mm1);
            assert_eq!(sp.f2(), f2_expect);
        }
    }

    #[test]
    fn constraint_reports() {
        // C with m = 4 is invalid
        let spec = ModelSpec::new(
            Family::C,
            SpaceForm::projective(4),
            None,
            Param::Exact(Scalar::int(1)),
        );
        let r = family_constraints(&spec);
        assert!(!r.valid);
        assert!(r.messages.iter().any(|s| s.contains("2k+1")));
        // A2 with k = 0 degenerates
        let spec = ModelSpec::a2(SpaceForm::projective(3), 0, Scalar::int(1));
        let r = family_constraints(&spec);
        assert!(!r.valid);
        assert!(r.coincidences.iter().any(|s| s.contains("A1")));
        // B hyperbolic range is kappa^2 < 4
        let spec = ModelSpec::b(SpaceForm::hyperbolic(2), Scalar::int(5));
        assert!(!family_constraints(&spec).valid);
        let spec = ModelSpec::b(SpaceForm::hyperbolic(2), Scalar::int(3));
        let r = family_constraints(&spec);
        assert!(r.valid);
        assert!(!r.coincidences.is_empty());
    }

    #[test]
    fn conversions() {
        // c = 1, t = 1: r1^2 = r2^2 = 1/2
        let spec = ModelSpec::a1(SpaceForm::projective(2), Scalar::one());
        let cv = param_conversions(&spec).unwrap();
        assert_eq!(cv.r1_sq, Scalar::ratio(1, 2));
        assert_eq!(cv.r2_sq, Scalar::ratio(1, 2));
        // c = -1, coth^2 r = 4 (tanh r = 1/2): r1^2 = 4/3, r2^2 = 1/3
        let spec = ModelSpec::a1(SpaceForm::hyperbolic(2), Scalar::int(4));
        let cv = param_conversions(&spec).unwrap();
        assert_eq!(cv.r1_sq, Scalar::ratio(4, 3));
        assert_eq!(cv.r2_sq, Scalar::ratio(1, 3));
        // the tube branch uses tanh^2 r and flips to coth^2 r
        let spec = ModelSpec::new(
            Family::A1Tube,
            SpaceForm::hyperbolic(2),
            None,
            Param::Exact(Scalar::ratio(1, 4)),
        );
        let cv = param_conversions(&spec).unwrap();
        assert_eq!(cv.t, Scalar::int(4));
    }

    #[test]
    fn dimension_sums() {
        for m in [5usize, 9, 15] {
            let fam = match m {
                5 => Family::C,
                9 => Family::D,
                _ => Family::E,
            };
            let spec = ModelSpec::new(
                fam,
                SpaceForm::projective(m),
                None,
                Param::Exact(Scalar::int(1)),
            );
            let sp = spectrum(&spec).unwrap();
            assert_eq!(sp.dimension(), 2 * m - 1);
        }
    }
}
