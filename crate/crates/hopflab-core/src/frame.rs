//! The frame module: a three-dimensional abstract vector space spanned by
//! the unit normal, its self-second-fundamental value, and the block sum of
//! second-fundamental values over the holomorphic distribution, on which the
//! Laplacian of the composite immersion acts as an exact matrix.
//!
//! Supported families are those whose holomorphic distribution collapses to
//! a single block sum under the Laplacian: the horosphere, both geodesic
//! sphere branches, and class B. Tubes over lower-dimensional complex
//! space forms go through the block engine instead.

use crate::catalog::{spectrum, Family, ModelSpec, Param, SpectrumBlock};
use crate::error::{HopfError, Result};
use crate::linalg::{cyclic_minimal_polynomial, mat_vec, Mat, ScalarField};
use crate::scalar::Scalar;
use std::fmt;

/// Order of the frame basis: [normal, sigma(normal, normal), block sum].
pub const XI: usize = 0;
pub const SXX: usize = 1;
pub const SB: usize = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct FrameVector {
    pub coeffs: [Scalar; 3],
}

impl FrameVector {
    pub fn zero() -> Self {
        FrameVector {
            coeffs: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
        }
    }

    pub fn new(xi: Scalar, sxx: Scalar, sb: Scalar) -> Self {
        FrameVector {
            coeffs: [xi, sxx, sb],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        FrameVector::new(
            &self.coeffs[0] + &o.coeffs[0],
            &self.coeffs[1] + &o.coeffs[1],
            &self.coeffs[2] + &o.coeffs[2],
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        FrameVector::new(
            &self.coeffs[0] - &o.coeffs[0],
            &self.coeffs[1] - &o.coeffs[1],
            &self.coeffs[2] - &o.coeffs[2],
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        FrameVector::new(c * &self.coeffs[0], c * &self.coeffs[1], c * &self.coeffs[2])
    }

    fn from_vec(v: Vec<Scalar>) -> Self {
        let mut it = v.into_iter();
        FrameVector::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        )
    }

    fn to_vec(&self) -> Vec<Scalar> {
        self.coeffs.to_vec()
    }
}

impl fmt::Display for FrameVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) xi + ({}) s(xi,xi) + ({}) sum_D s(e,e)",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

#[derive(Clone, Debug)]
pub struct DeltaModule {
    pub spec: ModelSpec,
    /// Action of the Laplacian on the frame basis (columns are images).
    pub l: Mat<Scalar>,
    /// Frame part of the immersion minus the hyperquadric center.
    pub x_expansion: FrameVector,
    /// Total multiplicity of the holomorphic distribution (n - 1).
    pub d_mult: usize,
}

/// Data shared by the three column constructions: the per-block-sum
/// coefficients of sigma(e, Ae) and sigma(Ae, Ae) over the distribution.
struct FrameData {
    c: i64,
    n: i64,
    kappa: Scalar,
    f1: Scalar,
    f2: Scalar,
    /// sum sigma(e, Ae) = q1 * block sum
    q1: Scalar,
    /// sum sigma(Ae, Ae) = q2 * block sum
    q2: Scalar,
}

fn frame_data(spec: &ModelSpec) -> Result<FrameData> {
    let sp = spectrum(spec)?;
    let c = spec.sf.c as i64;
    let n = spec.sf.n() as i64;
    let (q1, q2) = match spec.family {
        Family::A0 | Family::A1 | Family::A1Tube => {
            let b = &sp.blocks[0];
            match b {
                SpectrumBlock::Explicit(pb) => {
                    (pb.value.clone(), &pb.value * &pb.value)
                }
                _ => unreachable!("class A1 spectra are always explicit"),
            }
        }
        Family::B => {
            // Only the symmetric functions of the coupled pair enter the
            // module: with mu2 + mu4 = beta and mu2 mu4 = -gamma the block
            // sum carries beta/2 and (beta^2 + 2 gamma)/2 per unit.
            let kappa = sp.kappa.clone();
            let beta = Scalar::int(-4 * c).try_div(&kappa)?;
            let gamma = Scalar::int(c);
            let half = Scalar::ratio(1, 2);
            let q1 = &beta * &half;
            let q2 = &(&(&beta * &beta) + &(&Scalar::int(2) * &gamma)) * &half;
            (q1, q2)
        }
        other => {
            return Err(HopfError::FrameModuleUnavailable(other.name().into()));
        }
    };
    Ok(FrameData {
        c,
        n,
        kappa: sp.kappa.clone(),
        f1: sp.f(),
        f2: sp.f2(),
        q1,
        q2,
    })
}

/// The Laplacian action on the frame, column by column. The normal column
/// and the self-value column come from the first-derivative formulas; the
/// block-sum column is their difference against the full-trace formula.
pub fn build_frame_module(spec: &ModelSpec) -> Result<DeltaModule> {
    let d = frame_data(spec)?;
    let (c, n) = (d.c, d.n);
    let i = Scalar::int;
    let kappa = &d.kappa;
    let f1 = &d.f1;
    let f2 = &d.f2;

    // Laplacian of the unit normal.
    let col_xi = FrameVector::new(
        f2 + &i(c * (n - 1)),
        &(&i(2) * kappa) - f1,
        &i(2) * &d.q1,
    );
    // Laplacian of sigma(xi, xi).
    let col_sxx = FrameVector::new(
        &i(4 * c) * kappa,
        &(&(&i(2) * &(&i(c) + f2)) + &i(2 * c)) - &(&i(2) * &(kappa * kappa)),
        &i(2 * c) - &(&i(2) * &d.q2),
    );
    // Laplacian of the block sum, as full-trace formula minus the self-value
    // column.
    let col_sb = FrameVector::new(
        &(&i(2 * c * (n + 3)) * f1) - &(&i(8 * c) * kappa),
        &(&i(2 * c * (n + 1)) + &(&i(4) * &(kappa * kappa)))
            - &(&i(4 * c) + &(&i(4) * f2)),
        &i(2 * c * (n + 1)) + &(&i(4) * &d.q2),
    );

    let l = Mat::from_rows(vec![
        vec![
            col_xi.coeffs[0].clone(),
            col_sxx.coeffs[0].clone(),
            col_sb.coeffs[0].clone(),
        ],
        vec![
            col_xi.coeffs[1].clone(),
            col_sxx.coeffs[1].clone(),
            col_sb.coeffs[1].clone(),
        ],
        vec![
            col_xi.coeffs[2].clone(),
            col_sxx.coeffs[2].clone(),
            col_sb.coeffs[2].clone(),
        ],
    ]);

    Ok(DeltaModule {
        spec: spec.clone(),
        l,
        x_expansion: frame_expand_x(spec)?,
        d_mult: (n - 1) as usize,
    })
}

/// Frame part of the immersion relative to the hyperquadric center:
/// -c/(2(m+1)) sigma(xi,xi) - c/(4(m+1)) sum_D sigma(e,e).
pub fn frame_expand_x(spec: &ModelSpec) -> Result<FrameVector> {
    let c = spec.sf.c as i64;
    let m = spec.sf.m as i64;
    Ok(FrameVector::new(
        Scalar::zero(),
        Scalar::Rat(crate::scalar::poly::rat(-c, 2 * (m + 1))),
        Scalar::Rat(crate::scalar::poly::rat(-c, 4 * (m + 1))),
    ))
}

impl DeltaModule {
    pub fn apply(&self, v: &FrameVector) -> FrameVector {
        FrameVector::from_vec(mat_vec(&ScalarField, &self.l, &v.to_vec()))
    }

    pub fn apply_power(&self, v: &FrameVector, s: u32) -> FrameVector {
        let mut out = v.clone();
        for _ in 0..s {
            out = self.apply(&out);
        }
        out
    }

    /// Pairing of two frame vectors through the second-fundamental-form
    /// products: <xi, xi> = 1, <sxx, sxx> = 4c, <sxx, sb> = 2cW,
    /// <sb, sb> = 2cW(W+2) with W the distribution multiplicity.
    pub fn gram_pair(&self, a: &FrameVector, b: &FrameVector) -> Scalar {
        let c = Scalar::int(self.spec.sf.c as i64);
        let w = Scalar::int(self.d_mult as i64);
        let g01 = Scalar::zero();
        let g11 = &Scalar::int(4) * &c;
        let g12 = &(&Scalar::int(2) * &c) * &w;
        let g22 = &(&(&Scalar::int(2) * &c) * &w) * &(&w + &Scalar::int(2));
        let mut acc = &a.coeffs[0] * &b.coeffs[0];
        acc = &acc + &(&(&a.coeffs[1] * &b.coeffs[1]) * &g11);
        acc = &acc + &(&(&a.coeffs[1] * &b.coeffs[2]) * &g12);
        acc = &acc + &(&(&a.coeffs[2] * &b.coeffs[1]) * &g12);
        acc = &acc + &(&(&a.coeffs[2] * &b.coeffs[2]) * &g22);
        let _ = g01;
        acc
    }

    /// Pairing of a frame vector with the position: the normal pairs to
    /// zero and each second-fundamental value to minus the trace of its
    /// arguments.
    pub fn pair_with_position(&self, a: &FrameVector) -> Scalar {
        let w = Scalar::int(self.d_mult as i64);
        &(-a.coeffs[1].clone()) - &(&a.coeffs[2] * &w)
    }

    /// Gram matrix of the frame basis; it must be nonsingular for the
    /// coefficient comparisons to transfer to field identities.
    pub fn gram_det(&self) -> Scalar {
        let e = |i: usize| {
            let mut f = FrameVector::zero();
            f.coeffs[i] = Scalar::one();
            f
        };
        let g: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| self.gram_pair(&e(i), &e(j))).collect())
            .collect();
        // 3x3 determinant
        let det = |g: &Vec<Vec<Scalar>>| -> Scalar {
            let m = |i: usize, j: usize| g[i][j].clone();
            &(&(&m(0, 0) * &(&(&m(1, 1) * &m(2, 2)) - &(&m(1, 2) * &m(2, 1))))
                - &(&m(0, 1) * &(&(&m(1, 0) * &m(2, 2)) - &(&m(1, 2) * &m(2, 0)))))
                + &(&m(0, 2) * &(&(&m(1, 0) * &m(2, 1)) - &(&m(1, 1) * &m(2, 0))))
        };
        det(&g)
    }

    pub fn minimal_polynomial(&self, v: &FrameVector) -> Result<Vec<Scalar>> {
        cyclic_minimal_polynomial(&ScalarField, &self.l, &v.to_vec())
    }
}

/// Known closed-form iterate expansions, used to pin the module against the
/// published displays. `s` is the iteration order (1..=3).
pub fn expected_iterate(spec: &ModelSpec, s: u32) -> Result<FrameVector> {
    let d = frame_data(spec)?;
    let (c, n) = (d.c, d.n);
    let i = Scalar::int;
    match spec.family {
        Family::B => {
            let kappa = &d.kappa;
            let k2 = &(kappa * kappa);
            let kinv = kappa.try_inv()?;
            match s {
                1 => Ok(FrameVector::new(
                    &(&i(2 * c * (n - 1)) * &kinv) - kappa,
                    i(-1),
                    i(-1),
                )),
                2 => {
                    let k3inv = kinv.pow_u(3);
                    let xi = &(&(&(&i(16 * c * (n - 1) * (n - 1)) * &k3inv)
                        + &(&i(8 * n * (n - 1)) * &kinv))
                        - &(&i(2 * c * (n + 1)) * kappa))
                        - &(k2 * kappa);
                    let sxx = &(&(&i(4 * (n - 1) * (n + 3)) * &kinv.pow_u(2)) - &i(4 * c)) - k2;
                    let sb = &i(-2 * (n + 1))
                        * &(&(&i(4) * &kinv.pow_u(2)) + &i(c));
                    Ok(FrameVector::new(xi, sxx, sb))
                }
                3 => {
                    let k1 = &kinv;
                    let k3 = kinv.pow_u(3);
                    let k5 = kinv.pow_u(5);
                    let xi = &(&(&(&(&(&i(128 * c * (n - 1).pow(3)) * &k5)
                        + &(&i(128 * (n - 1) * (n * n + 1)) * &k3))
                        + &(&i(8 * c * (n - 1) * (3 * n * n + 2 * n + 3)) * k1))
                        - &(&i(16 * n) * kappa))
                        - &(&i(4 * c * (n + 1)) * &(k2 * kappa)))
                        - &(&k2.pow_u(2) * kappa);
                    let k2i = kinv.pow_u(2);
                    let k4i = kinv.pow_u(4);
                    let sxx = &(&(&(&(&i(32 * (n - 1) * (n + 3) * (3 * n + 1)) * &k4i)
                        + &(&i(8 * c * (n - 1) * (3 * n * n + 14 * n + 3)) * &k2i))
                        + &i(8 * (n * n - 4 * n + 1)))
                        - &(&i(2 * c * (3 * n + 1)) * k2))
                        - &k2.pow_u(2);
                    let sb = -(&(&(&(&(&i(128 * (n + 1) * (n + 1)) * &k4i)
                        + &(&i(48 * c * (n + 1) * (n + 1)) * &k2i))
                        + &i(4 * (n - 1) * (n + 3)))
                        - &(&i(4 * c) * k2)));
                    Ok(FrameVector::new(xi, sxx, sb))
                }
                _ => Err(HopfError::ParamOutOfRange(format!("iterate order {s}"))),
            }
        }
        Family::A1 | Family::A1Tube | Family::A0 => {
            // Written in mu (the distribution curvature); for the horosphere
            // mu = 1.
            let mu = match spec.family {
                Family::A0 => Scalar::one(),
                _ => spec.param_root()?,
            };
            let minv = mu.try_inv()?;
            let mu2 = &mu * &mu;
            match s {
                1 => Ok(FrameVector::new(
                    -(&(&i(n) * &mu) - &(&i(c) * &minv)),
                    i(-1),
                    i(-1),
                )),
                2 => {
                    let xi = -(&(&(&(&i(n * n) * &(&mu2 * &mu))
                        + &(&i(c * (3 * n * n + 2 * n - 4)) * &mu))
                        - &(&i(2 * n - 1) * &minv))
                        - &(&i(c) * &minv.pow_u(3)));
                    let sxx = &(&(&i(n * n - 2) * &mu2) - &i(2 * c * n)) - &minv.pow_u(2);
                    let sb = &i(-2 * (n + 1)) * &(&mu2 + &i(c));
                    Ok(FrameVector::new(xi, sxx, sb))
                }
                _ => Err(HopfError::ParamOutOfRange(format!(
                    "iterate order {s} has no published display for this family"
                ))),
            }
        }
        other => Err(HopfError::FrameModuleUnavailable(other.name().into())),
    }
}

/// Direct closed forms of the three Laplacian columns for class B.
pub fn expected_b_columns(spec: &ModelSpec) -> Result<[FrameVector; 3]> {
    if spec.family != Family::B {
        return Err(HopfError::FamilyMismatch("class B only".into()));
    }
    let d = frame_data(spec)?;
    let (c, n) = (d.c, d.n);
    let i = Scalar::int;
    let kappa = &d.kappa;
    let kinv = kappa.try_inv()?;
    let k2inv = kinv.pow_u(2);
    let f1 = &d.f1;
    let f2 = &d.f2;
    let col_xi = FrameVector::new(
        f2 + &i(c * (n - 1)),
        &(&i(2) * kappa) - f1,
        &i(-4 * c) * &kinv,
    );
    let col_sxx = FrameVector::new(
        &i(4 * c) * kappa,
        &i(2) * &(&(&i(8 * (n - 1)) * &k2inv) + &i(c * (n + 1))),
        &i(-16) * &k2inv,
    );
    let col_sb = FrameVector::new(
        &i(2 * c)
            * &(&(&i(n - 1) * kappa) - &(&i(2 * c * (n - 1) * (n + 3)) * &kinv)),
        &i(-2) * &(&(&i(16 * (n - 1)) * &k2inv) + &i(c * (n - 1))),
        &i(2) * &(&(&i(16) * &k2inv) + &i(c * (n + 3))),
    );
    Ok([col_xi, col_sxx, col_sb])
}

/// Residual report of the module iterates against the published expansions.
pub fn verify_paper_iterates(spec: &ModelSpec) -> Result<Vec<(String, FrameVector)>> {
    let module = build_frame_module(spec)?;
    let v = &module.x_expansion;
    let mut out = Vec::new();
    let max_s = if spec.family == Family::B { 3 } else { 2 };
    for s in 1..=max_s {
        let got = module.apply_power(v, s);
        let expect = expected_iterate(spec, s)?;
        out.push((format!("iterate {s}"), got.sub(&expect)));
    }
    if spec.family == Family::B {
        let cols = expected_b_columns(spec)?;
        for (idx, name) in ["normal", "self-value", "block-sum"].iter().enumerate() {
            let got = FrameVector::new(
                module.l.data[0][idx].clone(),
                module.l.data[1][idx].clone(),
                module.l.data[2][idx].clone(),
            );
            out.push((format!("column {name}"), got.sub(&cols[idx])));
        }
    }
    Ok(out)
}

/// The predicted constant part for the A1 branches, relative to the
/// hyperquadric center: (m mu^2 - c)/(m (mu^2+c)^2) [mu xi + 1/2 sxx
/// + (mu^2+c) (x - center)].
pub fn predicted_center_offset_a1(spec: &ModelSpec) -> Result<FrameVector> {
    if !matches!(spec.family, Family::A1 | Family::A1Tube) {
        return Err(HopfError::FamilyMismatch(
            "center-of-mass prediction is for the A1 branches".into(),
        ));
    }
    let c = spec.sf.c as i64;
    let m = spec.sf.m as i64;
    let mu = spec.param_root()?;
    let mu2 = &mu * &mu;
    let mpc = &mu2 + &Scalar::int(c);
    let coeff = (&(&Scalar::int(m) * &mu2) - &Scalar::int(c))
        .try_div(&(&Scalar::int(m) * &(&mpc * &mpc)))?;
    let v = frame_expand_x(spec)?;
    let bracket = FrameVector::new(mu, Scalar::ratio(1, 2), Scalar::zero()).add(&v.scale(&mpc));
    Ok(bracket.scale(&coeff))
}

/// Verify that the predicted center offset is killed by the module and
/// equals the kernel part of the expansion; returns the offset.
pub fn center_of_mass_a1(spec: &ModelSpec) -> Result<(FrameVector, bool)> {
    let module = build_frame_module(spec)?;
    let w = predicted_center_offset_a1(spec)?;
    let lw = module.apply(&w);
    let matches = lw.is_zero();
    Ok((w, matches))
}

/// Inner products of the first two iterates with the position, against
/// their closed forms n and f^2 + 2c(n^2 + 2n - 1).
pub fn inner_product_identities(spec: &ModelSpec) -> Result<Vec<(String, Scalar)>> {
    let module = build_frame_module(spec)?;
    let d = frame_data(spec)?;
    let v = &module.x_expansion;
    let lv = module.apply(v);
    let l2v = module.apply(&lv);
    let n = Scalar::int(d.n);
    let first = &module.pair_with_position(&lv) - &n;
    let expect2 = &(&d.f1 * &d.f1)
        + &Scalar::int(2 * d.c * (d.n * d.n + 2 * d.n - 1));
    let second = &module.pair_with_position(&l2v) - &expect2;
    Ok(vec![
        ("first iterate vs position".into(), first),
        ("second iterate vs position".into(), second),
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub enum TypeVerdict {
    Finite { k: usize, null: bool },
    NotFiniteWithinModule,
}

impl fmt::Display for TypeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeVerdict::Finite { k, null } => {
                if *null {
                    write!(f, "null {k}-type")
                } else {
                    write!(f, "{k}-type")
                }
            }
            TypeVerdict::NotFiniteWithinModule => write!(f, "not finite type within module"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TypeReport {
    pub family: Family,
    pub c: i32,
    pub m: usize,
    pub param: Option<Scalar>,
    /// Monic minimal polynomial, ascending coefficients.
    pub min_poly: Vec<Scalar>,
    /// Distinct nonzero eigenvalues carrying nonzero components.
    pub eigenvalues: Vec<Scalar>,
    pub verdict: TypeVerdict,
    pub mass_symmetric: bool,
    pub kernel_residual: FrameVector,
    pub notes: Vec<String>,
}

/// Full spectral analysis of the module expansion for a concrete model:
/// minimal polynomial, certified-real simple roots, eigencomponents, kernel
/// residual, and the type verdict.
pub fn chen_type_evidence(spec: &ModelSpec) -> Result<TypeReport> {
    if spec.is_symbolic() {
        return Err(HopfError::ScalarKind(
            "type evidence requires a concrete parameter".into(),
        ));
    }
    let module = build_frame_module(spec)?;
    let v = module.x_expansion.clone();
    let mp = module.minimal_polynomial(&v)?;
    let param = match &spec.param {
        Param::Exact(p) => Some(p.clone()),
        _ => None,
    };
    let mut notes = Vec::new();

    // Zero-root multiplicity: index of the first nonzero coefficient.
    let z = mp.iter().take_while(|c| c.is_zero()).count();
    if z >= 2 {
        notes.push(format!(
            "nilpotent action: zero root of multiplicity {z} in the minimal polynomial"
        ));
        return Ok(TypeReport {
            family: spec.family,
            c: spec.sf.c,
            m: spec.sf.m,
            param,
            min_poly: mp,
            eigenvalues: Vec::new(),
            verdict: TypeVerdict::NotFiniteWithinModule,
            mass_symmetric: false,
            kernel_residual: v,
            notes,
        });
    }
    let nonzero_factor: Vec<Scalar> = mp[z..].to_vec();
    let roots = match solve_factor(spec, &nonzero_factor)? {
        Some(r) => r,
        None => {
            notes.push("nonzero factor has non-real or repeated roots".into());
            return Ok(TypeReport {
                family: spec.family,
                c: spec.sf.c,
                m: spec.sf.m,
                param,
                min_poly: mp,
                eigenvalues: Vec::new(),
                verdict: TypeVerdict::NotFiniteWithinModule,
                mass_symmetric: false,
                kernel_residual: v,
                notes,
            });
        }
    };

    // Lagrange projectors over all roots of the minimal polynomial.
    let mut all_roots = Vec::new();
    if z == 1 {
        all_roots.push(Scalar::zero());
    }
    all_roots.extend(roots.iter().cloned());
    let mut components: Vec<(Scalar, FrameVector)> = Vec::new();
    for (idx, root) in all_roots.iter().enumerate() {
        let mut comp = v.clone();
        for (jdx, other) in all_roots.iter().enumerate() {
            if idx == jdx {
                continue;
            }
            let shifted = module.apply(&comp).sub(&comp.scale(other));
            let denom = root - other;
            comp = shifted.scale(&denom.try_inv()?);
        }
        // Certify the projector identity exactly.
        let check = module.apply(&comp).sub(&comp.scale(root));
        if !check.is_zero() {
            return Err(HopfError::EngineMismatch(format!(
                "component of eigenvalue {root} fails the eigen equation: {check}"
            )));
        }
        components.push((root.clone(), comp));
    }
    // Partition check: components must sum back to the expansion.
    let mut total = FrameVector::zero();
    for (_, comp) in &components {
        total = total.add(comp);
    }
    if total != v {
        return Err(HopfError::EngineMismatch(
            "eigencomponents do not sum to the expansion".into(),
        ));
    }

    let mut eigenvalues = Vec::new();
    let mut null = false;
    let mut kernel_residual = FrameVector::zero();
    for (root, comp) in &components {
        if comp.is_zero() {
            continue;
        }
        if root.is_zero() {
            kernel_residual = comp.clone();
        } else {
            eigenvalues.push(root.clone());
        }
    }
    let mut k = eigenvalues.len();
    let mut mass_symmetric = kernel_residual.is_zero();
    if !kernel_residual.is_zero() {
        // A nonzero kernel component counts only when it is not the known
        // ambient constant; constancy is certified by the block engine for
        // the A1 branches.
        let constant = match spec.family {
            Family::A1 | Family::A1Tube => {
                let predicted = predicted_center_offset_a1(spec)?;
                kernel_residual == predicted
            }
            Family::A0 => false,
            Family::B => false,
            _ => false,
        };
        if !constant {
            k += 1;
            null = true;
            // By convention a null-type constant part can be re-centered.
            mass_symmetric = true;
            notes.push("zero eigenvalue carries a component beyond the predicted constant".into());
        }
    }
    // Order eigenvalues increasingly when comparable.
    sort_concrete(&mut eigenvalues);
    Ok(TypeReport {
        family: spec.family,
        c: spec.sf.c,
        m: spec.sf.m,
        param,
        min_poly: mp,
        eigenvalues,
        verdict: TypeVerdict::Finite { k, null },
        mass_symmetric,
        kernel_residual,
        notes,
    })
}

pub fn sort_concrete(vals: &mut [Scalar]) {
    vals.sort_by(|a, b| {
        let d = a - b;
        match d.sign() {
            Ok(s) if s < 0 => std::cmp::Ordering::Less,
            Ok(s) if s > 0 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        }
    });
}

/// Roots of the nonzero factor of the minimal polynomial (degree <= 3),
/// with exact real-and-simple certificates. Returns None when the roots are
/// not real and simple.
fn solve_factor(spec: &ModelSpec, factor: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    match factor.len() {
        1 => Ok(Some(Vec::new())),
        2 => Ok(Some(vec![-factor[0].clone()])),
        3 => {
            let b = &factor[1];
            let c0 = &factor[0];
            let disc = &(b * b) - &(&Scalar::int(4) * c0);
            match disc.sign()? {
                s if s > 0 => {
                    let r = disc.sqrt()?;
                    let half = Scalar::ratio(1, 2);
                    let hi = &(&(-b.clone()) + &r) * &half;
                    let lo = &(&(-b.clone()) - &r) * &half;
                    Ok(Some(vec![lo, hi]))
                }
                _ => Ok(None),
            }
        }
        4 => {
            // One candidate root is supplied by the family closed form; the
            // rest come from the deflated quadratic.
            let candidate = cubic_candidate_root(spec)?;
            let field = ScalarField;
            let value = crate::linalg::poly_eval(&field, factor, &candidate);
            if !value.is_zero() {
                return Err(HopfError::EngineMismatch(format!(
                    "closed-form eigenvalue {candidate} is not a root of the minimal polynomial"
                )));
            }
            let quad = crate::linalg::poly_deflate(&field, factor, &candidate)?;
            let mut rest = match solve_factor(spec, &quad)? {
                Some(r) => r,
                None => return Ok(None),
            };
            // Simplicity: the candidate must not coincide with either root.
            if rest.iter().any(|r| *r == candidate) {
                return Ok(None);
            }
            rest.push(candidate);
            Ok(Some(rest))
        }
        _ => Err(HopfError::EngineMismatch(
            "minimal polynomial degree exceeds the module dimension".into(),
        )),
    }
}

/// The closed-form cubic eigenvalue for class B: 2c(n-1)(kappa^2 + 4c)/kappa^2.
fn cubic_candidate_root(spec: &ModelSpec) -> Result<Scalar> {
    match spec.family {
        Family::B => {
            let c = spec.sf.c as i64;
            let n = spec.sf.n() as i64;
            let k2 = spec.param_scalar()?;
            (&Scalar::int(2 * c * (n - 1)) * &(&k2 + &Scalar::int(4 * c))).try_div(&k2)
        }
        other => Err(HopfError::EngineMismatch(format!(
            "no closed-form cubic root available for family {other}"
        ))),
    }
}

/// Lagrange eigencomponents for explicitly supplied distinct eigenvalues.
pub fn eigencomponents(
    module: &DeltaModule,
    v: &FrameVector,
    eigenvalues: &[Scalar],
) -> Result<Vec<FrameVector>> {
    for (i, a) in eigenvalues.iter().enumerate() {
        for b in eigenvalues.iter().skip(i + 1) {
            if a == b {
                return Err(HopfError::ParamOutOfRange(
                    "repeated eigenvalues have no Lagrange projectors".into(),
                ));
            }
        }
    }
    let mut out = Vec::new();
    for (i, root) in eigenvalues.iter().enumerate() {
        let mut comp = v.clone();
        for (j, other) in eigenvalues.iter().enumerate() {
            if i == j {
                continue;
            }
            let shifted = module.apply(&comp).sub(&comp.scale(other));
            comp = shifted.scale(&(root - other).try_inv()?);
        }
        out.push(comp);
    }
    Ok(out)
}
