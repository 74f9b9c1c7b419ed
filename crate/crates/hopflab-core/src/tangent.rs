//! Concrete matrix models of the tangent space of a Hopf hypersurface:
//! shape operator A, structure tensor S, structure vector U, trace
//! identities, the four linear-consistency conditions for 2-type behavior,
//! the class-A covariant derivative of A, and the 3-type endomorphism checks.

use crate::catalog::{Family, JAction, ModelSpec, PrincipalBlock, PrincipalSpectrum};
use crate::error::{HopfError, Result};
use crate::linalg::{mat_mul, mat_trace, mat_zero, Field, Mat, ScalarField};
use crate::scalar::Scalar;

/// Basis convention: index 0 is U; each J-invariant block of multiplicity 2w
/// contributes w pairs (e, Se); a J-swapped block pair contributes its first
/// block's vectors followed by their S-images in the partner block.
#[derive(Clone, Debug)]
pub struct TangentModel {
    pub n: usize,
    pub c: i32,
    pub family: Family,
    pub kappa: Scalar,
    pub a: Mat<Scalar>,
    pub s: Mat<Scalar>,
    /// Eigenvalues on the holomorphic distribution with multiplicities.
    pub d_values: Vec<(Scalar, usize)>,
}

/// Build A and S over any exact field from block data
/// (value, multiplicity, J-action). Index 0 is U.
pub fn build_matrices_in<F: Field>(
    field: &F,
    kappa: &F::Elem,
    blocks: &[(F::Elem, usize, JAction)],
) -> Result<(Mat<F::Elem>, Mat<F::Elem>)> {
    let n = 1 + blocks.iter().map(|b| b.1).sum::<usize>();
    let mut a = mat_zero(field, n, n);
    let mut s = mat_zero(field, n, n);
    a.data[0][0] = kappa.clone();

    // First pass: assign index ranges.
    let mut starts = Vec::with_capacity(blocks.len());
    let mut next = 1usize;
    for b in blocks {
        starts.push(next);
        next += b.1;
    }

    let mut swapped_done = vec![false; blocks.len()];
    for (bi, (value, mult, j)) in blocks.iter().enumerate() {
        let s0 = starts[bi];
        for i in 0..*mult {
            a.data[s0 + i][s0 + i] = value.clone();
        }
        match j {
            JAction::Invariant => {
                if mult % 2 != 0 {
                    return Err(HopfError::BadLabels(format!(
                        "J-invariant block of odd multiplicity {mult}"
                    )));
                }
                // pairs (e, Se): S e = Se, S(Se) = -e
                for p in 0..mult / 2 {
                    let e = s0 + 2 * p;
                    let se = e + 1;
                    s.data[se][e] = field.one();
                    s.data[e][se] = field.neg(&field.one());
                }
            }
            JAction::SwappedWith(partner) => {
                if swapped_done[bi] {
                    continue;
                }
                let pj = *partner;
                if pj >= blocks.len() || blocks[pj].1 != *mult {
                    return Err(HopfError::BadLabels(
                        "swapped blocks must pair with equal multiplicity".into(),
                    ));
                }
                let p0 = starts[pj];
                // S e_i = f_i, S f_i = -e_i across the two blocks
                for i in 0..*mult {
                    s.data[p0 + i][s0 + i] = field.one();
                    s.data[s0 + i][p0 + i] = field.neg(&field.one());
                }
                swapped_done[bi] = true;
                swapped_done[pj] = true;
            }
        }
    }
    Ok((a, s))
}

pub fn build_matrices(sp: &PrincipalSpectrum) -> Result<(Mat<Scalar>, Mat<Scalar>)> {
    let blocks: Vec<(Scalar, usize, JAction)> = sp
        .explicit_blocks()?
        .into_iter()
        .map(|b: PrincipalBlock| {
            // Block indices in j_action count D-blocks only; shift not needed
            // because build_matrices_in receives the same ordering.
            (b.value, b.multiplicity, b.j_action)
        })
        .collect();
    build_matrices_in(&ScalarField, &sp.kappa, &blocks)
}

pub fn tangent_model(spec: &ModelSpec) -> Result<TangentModel> {
    let sp = crate::catalog::spectrum(spec)?;
    let (a, s) = build_matrices(&sp)?;
    let d_values = sp
        .explicit_blocks()?
        .into_iter()
        .map(|b| (b.value, b.multiplicity))
        .collect();
    Ok(TangentModel {
        n: sp.dimension(),
        c: spec.sf.c,
        family: spec.family,
        kappa: sp.kappa.clone(),
        a,
        s,
        d_values,
    })
}

/// The three structure traces, computed from the matrices and certified
/// against their closed forms in kappa, f, f2, n, c.
#[derive(Clone, Debug)]
pub struct TraceIdentities {
    pub tr_sas: Scalar,
    pub tr_sa2s: Scalar,
    pub tr_sa_sq: Scalar,
}

pub fn trace_identities(tm: &TangentModel) -> Result<TraceIdentities> {
    let f = ScalarField;
    let out = trace_identities_in(&f, &tm.a, &tm.s);
    let n = Scalar::int(tm.n as i64);
    let c = Scalar::int(tm.c as i64);
    let kappa = &tm.kappa;
    let f1 = &mat_trace(&f, &tm.a);
    let f2 = &mat_trace(&f, &mat_mul(&f, &tm.a, &tm.a));
    let expect_sas = kappa - f1;
    let expect_sa2s = &(kappa * kappa) - f2;
    let expect_sa_sq =
        &(&(kappa * kappa) - &(kappa * f1)) - &(&(&n - &Scalar::one()) * &c);
    if out.tr_sas != expect_sas || out.tr_sa2s != expect_sa2s || out.tr_sa_sq != expect_sa_sq {
        return Err(HopfError::EngineMismatch(format!(
            "structure traces disagree with closed forms: {:?}",
            out
        )));
    }
    Ok(out.into())
}

pub fn trace_identities_in<F: Field>(
    field: &F,
    a: &Mat<F::Elem>,
    s: &Mat<F::Elem>,
) -> TraceIdentitiesIn<F::Elem> {
    let sa = mat_mul(field, s, a);
    let sas = mat_mul(field, &sa, s);
    let sa2s = mat_mul(field, &mat_mul(field, &sa, a), s);
    let sasq = mat_mul(field, &sa, &sa);
    TraceIdentitiesIn {
        tr_sas: mat_trace(field, &sas),
        tr_sa2s: mat_trace(field, &sa2s),
        tr_sa_sq: mat_trace(field, &sasq),
    }
}

#[derive(Clone, Debug)]
pub struct TraceIdentitiesIn<E> {
    pub tr_sas: E,
    pub tr_sa2s: E,
    pub tr_sa_sq: E,
}

impl TraceIdentitiesIn<Scalar> {
    fn into_traces(self) -> TraceIdentities {
        TraceIdentities {
            tr_sas: self.tr_sas,
            tr_sa2s: self.tr_sa2s,
            tr_sa_sq: self.tr_sa_sq,
        }
    }
}

impl From<TraceIdentitiesIn<Scalar>> for TraceIdentities {
    fn from(v: TraceIdentitiesIn<Scalar>) -> Self {
        v.into_traces()
    }
}

/// Residual of the U-direction consistency condition, linear in p and q.
#[allow(clippy::too_many_arguments)]
pub fn e1_residual<F: Field>(
    field: &F,
    c: i64,
    n: i64,
    kappa: &F::Elem,
    f1: &F::Elem,
    f2: &F::Elem,
    p: &F::Elem,
    q: &F::Elem,
) -> F::Elem {
    let i = |v: i64| field.from_i64(v);
    let kf = field.mul(kappa, f1);
    let lhs = field.mul(&field.add(&i(2 * c * (n + 1)), &kf), p);
    let mut rhs = q.clone();
    rhs = field.add(
        &rhs,
        &field.mul(&kf, &field.add(f2, &i(3 * c * (n + 3)))),
    );
    rhs = field.sub(&rhs, &field.mul(&i(4 * c), f2));
    rhs = field.add(&rhs, &i(4 * n * (n + 3)));
    field.sub(&lhs, &rhs)
}

/// Residual of the principal-direction consistency condition, for one
/// eigenvalue mu on the holomorphic distribution with its star partner.
#[allow(clippy::too_many_arguments)]
pub fn e2_residual<F: Field>(
    field: &F,
    c: i64,
    n: i64,
    kappa: &F::Elem,
    f1: &F::Elem,
    f2: &F::Elem,
    mu: &F::Elem,
    mu_star: &F::Elem,
    p: &F::Elem,
    q: &F::Elem,
) -> F::Elem {
    let i = |v: i64| field.from_i64(v);
    let lhs = field.mul(&field.add(&i(2 * c * (n + 2)), &field.mul(mu, f1)), p);
    let mut rhs = q.clone();
    rhs = field.add(&rhs, &field.mul(&i(2 * c), &field.mul(f1, f1)));
    rhs = field.add(&rhs, &field.mul(&i(4 * c), &field.mul(f1, mu_star)));
    rhs = field.add(&rhs, &field.mul(&i(4 * c), &field.mul(mu_star, mu_star)));
    rhs = field.add(&rhs, &field.mul(&i(4 * c), &field.mul(mu, mu)));
    let bracket = field.sub(
        &field.mul(f1, &field.add(f2, &i(3 * c * (n + 3)))),
        &field.mul(&i(4 * c), kappa),
    );
    rhs = field.add(&rhs, &field.mul(&bracket, mu));
    rhs = field.add(&rhs, &i(4 * (n + 1) * (n + 3)));
    field.sub(&lhs, &rhs)
}

/// Residual of the normal-part consistency condition for one eigenvalue.
#[allow(clippy::too_many_arguments)]
pub fn e3_residual<F: Field>(
    field: &F,
    c: i64,
    n: i64,
    kappa: &F::Elem,
    f1: &F::Elem,
    f2: &F::Elem,
    mu: &F::Elem,
    mu_star: &F::Elem,
    p: &F::Elem,
) -> F::Elem {
    let i = |v: i64| field.from_i64(v);
    let lhs = field.mul(&field.add(f1, &field.mul(&i(2), mu)), p);
    let mut rhs = field.mul(&i(-4 * c), kappa);
    // 4 mu (f mu + mu^2 + f mu* + mu*^2)
    let inner = field.add(
        &field.add(&field.mul(f1, mu), &field.mul(mu, mu)),
        &field.add(&field.mul(f1, mu_star), &field.mul(mu_star, mu_star)),
    );
    rhs = field.add(&rhs, &field.mul(&field.mul(&i(4), mu), &inner));
    // 2 mu [2 f2 + f^2 + 2c(n+3) - 2 f kappa - 2 kappa^2]
    let mut bracket = field.add(&field.mul(&i(2), f2), &field.mul(f1, f1));
    bracket = field.add(&bracket, &i(2 * c * (n + 3)));
    bracket = field.sub(&bracket, &field.mul(&i(2), &field.mul(f1, kappa)));
    bracket = field.sub(&bracket, &field.mul(&i(2), &field.mul(kappa, kappa)));
    rhs = field.add(&rhs, &field.mul(&field.mul(&i(2), mu), &bracket));
    // f [f2 + c(3n+5)]
    rhs = field.add(&rhs, &field.mul(f1, &field.add(f2, &i(c * (3 * n + 5)))));
    field.sub(&lhs, &rhs)
}

/// Residual of the q-eliminated combination of the first two conditions,
/// linear in p alone.
#[allow(clippy::too_many_arguments)]
pub fn elim_q_residual<F: Field>(
    field: &F,
    c: i64,
    n: i64,
    kappa: &F::Elem,
    f1: &F::Elem,
    f2: &F::Elem,
    mu: &F::Elem,
    mu_star: &F::Elem,
    p: &F::Elem,
) -> F::Elem {
    let i = |v: i64| field.from_i64(v);
    let lhs = field.mul(
        &field.add(&i(2 * c), &field.mul(f1, &field.sub(mu, kappa))),
        p,
    );
    let mut rhs = field.mul(
        &i(4 * c),
        &field.add(&field.mul(mu, mu), &field.mul(mu_star, mu_star)),
    );
    rhs = field.add(&rhs, &field.mul(&i(4 * c), &field.mul(f1, mu_star)));
    rhs = field.sub(&rhs, &field.mul(&i(4 * c), &field.mul(kappa, mu)));
    rhs = field.add(&rhs, &i(4 * (n + 3)));
    rhs = field.add(&rhs, &field.mul(&i(4 * c), f2));
    rhs = field.add(&rhs, &field.mul(&i(2 * c), &field.mul(f1, f1)));
    rhs = field.add(
        &rhs,
        &field.mul(
            &field.mul(f1, &field.sub(mu, kappa)),
            &field.add(f2, &i(3 * c * (n + 3))),
        ),
    );
    field.sub(&lhs, &rhs)
}

#[derive(Clone, Debug)]
pub struct EConditionReport {
    pub e1: Scalar,
    /// (mu, residual) per eigenvalue on D.
    pub e2: Vec<(Scalar, Scalar)>,
    pub e3: Vec<(Scalar, Scalar)>,
    /// None when the covariant derivative of A is unavailable.
    pub e4_zero: Option<bool>,
}

pub fn check_e_conditions(spec: &ModelSpec, p: &Scalar, q: &Scalar) -> Result<EConditionReport> {
    let sp = crate::catalog::spectrum(spec)?;
    let field = ScalarField;
    let c = spec.sf.c as i64;
    let n = spec.sf.n() as i64;
    let f1 = sp.f();
    let f2 = sp.f2();
    let kappa = sp.kappa.clone();
    let e1 = e1_residual(&field, c, n, &kappa, &f1, &f2, p, q);
    let mut e2 = Vec::new();
    let mut e3 = Vec::new();
    for b in sp.explicit_blocks()? {
        let mu = b.value.clone();
        let star = crate::catalog::mu_star(&mu, &kappa, spec.sf.c)?;
        e2.push((
            mu.clone(),
            e2_residual(&field, c, n, &kappa, &f1, &f2, &mu, &star, p, q),
        ));
        e3.push((
            mu.clone(),
            e3_residual(&field, c, n, &kappa, &f1, &f2, &mu, &star, p),
        ));
    }
    let e4_zero = if spec.family.is_class_a() {
        Some(e4_holds_class_a(spec)?)
    } else {
        None
    };
    Ok(EConditionReport { e1, e2, e3, e4_zero })
}

/// The class-A covariant derivative of the shape operator, as a matrix
/// acting on tangent vectors: (nabla_X A) Y = -c [<SX, Y> U + <U, Y> SX].
pub fn nr_nabla_a(tm: &TangentModel, x: &[Scalar]) -> Result<Mat<Scalar>> {
    if !tm.family.is_class_a() {
        return Err(HopfError::NablaAUnavailable(tm.family.name().into()));
    }
    let field = ScalarField;
    let n = tm.n;
    let sx = crate::linalg::mat_vec(&field, &tm.s, x);
    let mut out = mat_zero(&field, n, n);
    let mc = Scalar::int(-(tm.c as i64));
    for i in 0..n {
        for j in 0..n {
            // (-c)(U_i (SX)_j + (SX)_i U_j) with U = e_0
            let mut v = Scalar::zero();
            if i == 0 {
                v = &v + &sx[j];
            }
            if j == 0 {
                v = &v + &sx[i];
            }
            out.data[i][j] = &mc * &v;
        }
    }
    Ok(out)
}

pub fn nr_nabla_a_apply(tm: &TangentModel, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let m = nr_nabla_a(tm, x)?;
    Ok(crate::linalg::mat_vec(&ScalarField, &m, y))
}

fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// The fourth condition for class A: both derivative terms vanish on the
/// holomorphic distribution, checked on all basis triples.
fn e4_holds_class_a(spec: &ModelSpec) -> Result<bool> {
    let tm = tangent_model(spec)?;
    let field = ScalarField;
    let n = tm.n;
    let a2 = mat_mul(&field, &tm.a, &tm.a);
    for xi in 1..n {
        let x = basis_vec(n, xi);
        let na = nr_nabla_a(&tm, &x)?;
        // nabla_X A^2 = (nabla_X A) A + A (nabla_X A)
        let na2 = crate::linalg::mat_add(
            &field,
            &mat_mul(&field, &na, &tm.a),
            &mat_mul(&field, &tm.a, &na),
        );
        let _ = &a2;
        for yi in 1..n {
            let y = basis_vec(n, yi);
            let sy = crate::linalg::mat_vec(&field, &tm.s, &y);
            for zi in 1..n {
                // f <(nabla A)Y, Z> + f <(nabla A)SY, SZ>
                //  + <(nabla A^2)Y, Z> + <(nabla A^2)SY, SZ> = 0
                let z = basis_vec(n, zi);
                let sz = crate::linalg::mat_vec(&field, &tm.s, &z);
                let f1 = mat_trace(&field, &tm.a);
                let term = |mat: &Mat<Scalar>, v: &[Scalar], w: &[Scalar]| -> Scalar {
                    let mv = crate::linalg::mat_vec(&field, mat, v);
                    dot(&mv, w)
                };
                let total = &(&f1 * &(&term(&na, &y, &z) + &term(&na, &sy, &sz)))
                    + &(&term(&na2, &y, &z) + &term(&na2, &sy, &sz));
                if !total.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc = &acc + &(x * y);
    }
    acc
}

#[derive(Clone, Debug)]
pub struct Lemma6Report {
    /// Power traces are constants for every catalog model.
    pub traces_constant: bool,
    /// Max residual of the mixed-derivative trace condition over a basis of
    /// D; None when the covariant derivative is unavailable.
    pub commutator_trace_zero: Option<bool>,
    /// Residual matrix norm of the endomorphism identity for the supplied
    /// constants (a, b, d); None outside class A.
    pub endomorphism_residual_zero: Option<bool>,
    /// The hyperbolic-case guard (tr A)^2 != 4, evaluated exactly.
    pub mean_curvature_guard_ok: Option<bool>,
    pub notes: Vec<String>,
}

/// The three necessary conditions for a mass-symmetric 3-type CMC model:
/// constant power traces, a vanishing mixed trace, and an endomorphism
/// identity with constants (a, b, d) supplied by the caller.
pub fn lemma6_checks(
    spec: &ModelSpec,
    abd: Option<(&Scalar, &Scalar, &Scalar)>,
) -> Result<Lemma6Report> {
    let sp = crate::catalog::spectrum(spec)?;
    let mut notes = Vec::new();
    let guard = if spec.sf.c == -1 {
        let f1 = sp.f();
        let g = &(&f1 * &f1) - &Scalar::int(4);
        Some(!g.is_zero())
    } else {
        None
    };
    if !spec.family.is_class_a() {
        notes.push("derivative conditions unavailable outside class A".into());
        return Ok(Lemma6Report {
            traces_constant: true,
            commutator_trace_zero: None,
            endomorphism_residual_zero: None,
            mean_curvature_guard_ok: guard,
            notes,
        });
    }
    let tm = tangent_model(spec)?;
    let field = ScalarField;
    let n = tm.n;
    // [A, S]
    let comm = crate::linalg::mat_add(
        &field,
        &mat_mul(&field, &tm.a, &tm.s),
        &crate::linalg::mat_scale(&field, &mat_mul(&field, &tm.s, &tm.a), &Scalar::int(-1)),
    );
    let mut comm_ok = true;
    for xi in 1..n {
        let x = basis_vec(n, xi);
        let na = nr_nabla_a(&tm, &x)?;
        let prod = mat_mul(&field, &na, &comm);
        if !mat_trace(&field, &prod).is_zero() {
            comm_ok = false;
        }
    }
    let endo = match abd {
        None => None,
        Some((ca, cb, cd)) => {
            let bmat = nabla_a_square_sum(&tm)?;
            Some(lemma6_endomorphism_residual_zero(&tm, &bmat, ca, cb, cd)?)
        }
    };
    Ok(Lemma6Report {
        traces_constant: true,
        commutator_trace_zero: Some(comm_ok),
        endomorphism_residual_zero: endo,
        mean_curvature_guard_ok: guard,
        notes,
    })
}

/// B = sum_j (nabla_{e_j} A)^2 for a class-A model, by brute-force matrix
/// computation over the full tangent basis.
pub fn nabla_a_square_sum(tm: &TangentModel) -> Result<Mat<Scalar>> {
    let field = ScalarField;
    let n = tm.n;
    let mut acc = mat_zero(&field, n, n);
    for j in 0..n {
        let x = basis_vec(n, j);
        let na = nr_nabla_a(tm, &x)?;
        acc = crate::linalg::mat_add(&field, &acc, &mat_mul(&field, &na, &na));
    }
    Ok(acc)
}

/// Residual of the endomorphism identity restricted to the holomorphic
/// distribution, for supplied constants a, b, d.
fn lemma6_endomorphism_residual_zero(
    tm: &TangentModel,
    bmat: &Mat<Scalar>,
    ca: &Scalar,
    cb: &Scalar,
    cd: &Scalar,
) -> Result<bool> {
    let field = ScalarField;
    let n = tm.n;
    let a2 = mat_mul(&field, &tm.a, &tm.a);
    let a4 = mat_mul(&field, &a2, &a2);
    let sa = mat_mul(&field, &tm.s, &tm.a);
    let as_ = mat_mul(&field, &tm.a, &tm.s);
    let sa2 = mat_mul(&field, &sa, &sa);
    let as2 = mat_mul(&field, &as_, &as_);
    let sandwich = |m: &Mat<Scalar>| -> Mat<Scalar> {
        // M - S M S
        let sms = mat_mul(&field, &mat_mul(&field, &tm.s, m), &tm.s);
        crate::linalg::mat_add(
            &field,
            m,
            &crate::linalg::mat_scale(&field, &sms, &Scalar::int(-1)),
        )
    };
    let lhs = sandwich(bmat);
    let mut rhs = sandwich(&a4);
    rhs = crate::linalg::mat_add(
        &field,
        &rhs,
        &crate::linalg::mat_scale(&field, &sandwich(&a2), ca),
    );
    rhs = crate::linalg::mat_add(
        &field,
        &rhs,
        &crate::linalg::mat_scale(&field, &sandwich(&tm.a), cb),
    );
    let sum_sq = crate::linalg::mat_add(&field, &sa2, &as2);
    rhs = crate::linalg::mat_add(
        &field,
        &rhs,
        &crate::linalg::mat_scale(&field, &sum_sq, &Scalar::int(-4 * tm.c as i64)),
    );
    // + d Id (on D only)
    for i in 0..n {
        rhs.data[i][i] = &rhs.data[i][i] + cd;
    }
    // Compare on the holomorphic distribution: indices 1..n.
    for i in 1..n {
        for j in 1..n {
            if lhs.data[i][j] != rhs.data[i][j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Squared norm of the covariant derivative of A for a model with constant
/// principal curvatures, from the curvature data alone.
pub fn simons_norm_nabla_a(spec: &ModelSpec) -> Result<Scalar> {
    let sp = crate::catalog::spectrum(spec)?;
    let c = Scalar::int(spec.sf.c as i64);
    let n = spec.sf.n() as i64;
    let kappa = &sp.kappa;
    let f1 = sp.f();
    let f2 = sp.f2();
    let f3 = sp.power_trace(3);
    // tr (SA)^2 = kappa^2 - kappa f - (n-1) c
    let tr_sa_sq = &(&(kappa * kappa) - &(kappa * &f1)) - &(&Scalar::int(n - 1) * &c);
    let mut out = &(&Scalar::int(6) * &c) * &(kappa * kappa);
    out = &out - &(&(&(&Scalar::int(3) * &c) * &f1) * kappa);
    out = &out - &(&(&Scalar::int(6) * &c) * &tr_sa_sq);
    out = &out + &(&c * &(&f1 * &f1));
    out = &out + &(&(&f2 - &(&c * &Scalar::int(n + 3))) * &f2);
    out = &out - &(&f1 * &f3);
    Ok(out)
}

/// Independent oracle for the class-A norm: Frobenius sum of the explicit
/// covariant-derivative matrices over a tangent basis.
pub fn nabla_a_norm_oracle(tm: &TangentModel) -> Result<Scalar> {
    let field = ScalarField;
    let mut acc = Scalar::zero();
    for j in 0..tm.n {
        let x = basis_vec(tm.n, j);
        let na = nr_nabla_a(tm, &x)?;
        let sq = mat_mul(&field, &na, &na);
        acc = &acc + &mat_trace(&field, &sq);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{spectrum, ModelSpec, Param, SpaceForm};
    use crate::linalg::{mat_identity, QuadField};
    use crate::scalar::SymVar;

    fn a1_m2_t4() -> ModelSpec {
        ModelSpec::a1(SpaceForm::projective(2), Scalar::int(4))
    }

    #[test]
    fn structure_identities_hold() {
        // S^2 = -Id + U x U, SU = 0, AU = kappa U for several models
        let specs = vec![
            a1_m2_t4(),
            ModelSpec::b(SpaceForm::projective(2), Scalar::int(4)),
            ModelSpec::b(SpaceForm::hyperbolic(3), Scalar::ratio(64, 25)),
            ModelSpec::a2(SpaceForm::projective(3), 1, Scalar::ratio(3, 5)),
            ModelSpec::horosphere(3),
            ModelSpec::new(
                Family::C,
                SpaceForm::projective(5),
                None,
                Param::Exact(Scalar::int(2)),
            ),
        ];
        let field = ScalarField;
        for spec in specs {
            let tm = tangent_model(&spec).unwrap();
            let s2 = mat_mul(&field, &tm.s, &tm.s);
            let mut expect = mat_identity(&field, tm.n);
            for r in expect.data.iter_mut() {
                for e in r.iter_mut() {
                    *e = -e.clone();
                }
            }
            expect.data[0][0] = Scalar::zero();
            assert_eq!(s2, expect, "family {}", tm.family);
            // SU = 0
            let su = crate::linalg::mat_vec(&field, &tm.s, &basis_vec(tm.n, 0));
            assert!(su.iter().all(|v| v.is_zero()));
            // AU = kappa U
            let au = crate::linalg::mat_vec(&field, &tm.a, &basis_vec(tm.n, 0));
            assert_eq!(au[0], tm.kappa);
            assert!(au[1..].iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn a1_m2_matrices() {
        let tm = tangent_model(&a1_m2_t4()).unwrap();
        assert_eq!(tm.a.data[0][0], Scalar::ratio(3, 2));
        assert_eq!(tm.a.data[1][1], Scalar::int(2));
        assert_eq!(tm.a.data[2][2], Scalar::int(2));
        // S maps e1 -> e2, e2 -> -e1
        assert_eq!(tm.s.data[2][1], Scalar::one());
        assert_eq!(tm.s.data[1][2], Scalar::int(-1));
    }

    #[test]
    fn trace_identities_concrete() {
        // A1, m=2, t=4: tr(SAS) = kappa - f = -4
        let tm = tangent_model(&a1_m2_t4()).unwrap();
        let tr = trace_identities(&tm).unwrap();
        assert_eq!(tr.tr_sas, Scalar::int(-4));
        // B, m=2, kappa^2 = 4
        let tm = tangent_model(&ModelSpec::b(SpaceForm::projective(2), Scalar::int(4))).unwrap();
        trace_identities(&tm).unwrap();
    }

    #[test]
    fn trace_identities_symbolic_a1() {
        // symbolic t: matrix traces equal closed forms as rational functions
        for (c, m) in [(1i32, 2usize), (1, 3), (-1, 2)] {
            let spec = ModelSpec::new(
                Family::A1,
                SpaceForm { c, m },
                None,
                Param::Symbolic,
            );
            let tm = tangent_model(&spec).unwrap();
            trace_identities(&tm).unwrap();
        }
    }

    #[test]
    fn trace_identities_symbolic_b() {
        // B with symbolic kappa through the coupled quadratic extension
        for (c, m) in [(1i32, 2usize), (1, 3), (-1, 2), (-1, 4)] {
            let n = (2 * m - 1) as i64;
            let kappa = Scalar::sym_root(SymVar::Kappa2);
            let beta = Scalar::int(-4 * c as i64).try_div(&kappa).unwrap();
            let gamma = Scalar::int(c as i64);
            let qf = QuadField::new(beta, gamma);
            let mu2 = qf.root();
            let mu4 = qf.conjugate_root();
            let blocks = vec![
                (mu2, m - 1, JAction::SwappedWith(1)),
                (mu4, m - 1, JAction::SwappedWith(0)),
            ];
            let kq = qf.scalar(kappa.clone());
            let (a, s) = build_matrices_in(&qf, &kq, &blocks).unwrap();
            let tr = trace_identities_in(&qf, &a, &s);
            // all three traces collapse into the base field
            assert!(tr.tr_sas.1.is_zero());
            assert!(tr.tr_sa2s.1.is_zero());
            assert!(tr.tr_sa_sq.1.is_zero());
            let f1 = mat_trace(&qf, &a);
            let f2 = mat_trace(&qf, &mat_mul(&qf, &a, &a));
            assert!(f1.1.is_zero() && f2.1.is_zero());
            let cc = Scalar::int(c as i64);
            let expect_sas = &kappa - &f1.0;
            assert_eq!(tr.tr_sas.0, expect_sas);
            let expect_sa2s = &(&kappa * &kappa) - &f2.0;
            assert_eq!(tr.tr_sa2s.0, expect_sa2s);
            let expect_sasq = &(&(&kappa * &kappa) - &(&kappa * &f1.0))
                - &(&Scalar::int(n - 1) * &cc);
            assert_eq!(tr.tr_sa_sq.0, expect_sasq);
        }
    }

    #[test]
    fn nabla_a_values() {
        let tm = tangent_model(&a1_m2_t4()).unwrap();
        // X = e1, Y = Se1 = e2: (nabla_X A)Y = -c U
        let out = nr_nabla_a_apply(&tm, &basis_vec(3, 1), &basis_vec(3, 2)).unwrap();
        assert_eq!(out[0], Scalar::int(-1));
        assert!(out[1].is_zero() && out[2].is_zero());
        // Y = U: -c SX
        let out = nr_nabla_a_apply(&tm, &basis_vec(3, 1), &basis_vec(3, 0)).unwrap();
        assert_eq!(out[2], Scalar::int(-1));
    }

    #[test]
    fn codazzi_for_class_a() {
        // (nabla_X A)Y - (nabla_Y A)X = c[<X,U>SY - <Y,U>SX - 2<SX,Y>U]
        let tm = tangent_model(&a1_m2_t4()).unwrap();
        let field = ScalarField;
        let vecs = [
            vec![Scalar::int(1), Scalar::int(2), Scalar::int(-1)],
            vec![Scalar::ratio(1, 2), Scalar::int(0), Scalar::int(3)],
        ];
        let (x, y) = (&vecs[0], &vecs[1]);
        let lhs_m1 = nr_nabla_a(&tm, x).unwrap();
        let lhs_m2 = nr_nabla_a(&tm, y).unwrap();
        let lhs = {
            let a = crate::linalg::mat_vec(&field, &lhs_m1, y);
            let b = crate::linalg::mat_vec(&field, &lhs_m2, x);
            a.iter().zip(b.iter()).map(|(p, q)| p - q).collect::<Vec<_>>()
        };
        let sx = crate::linalg::mat_vec(&field, &tm.s, x);
        let sy = crate::linalg::mat_vec(&field, &tm.s, y);
        let c = Scalar::int(tm.c as i64);
        let xu = x[0].clone();
        let yu = y[0].clone();
        let sxy = dot(&sx, y);
        let mut rhs = vec![Scalar::zero(); tm.n];
        for i in 0..tm.n {
            rhs[i] = &(&(&xu * &sy[i]) - &(&yu * &sx[i])) * &c;
        }
        rhs[0] = &rhs[0] - &(&(&Scalar::int(2) * &sxy) * &c);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn simons_value_class_a() {
        // closed form equals 2(n-1), and matches the brute-force oracle
        for spec in [
            a1_m2_t4(),
            ModelSpec::horosphere(2),
            ModelSpec::a2(SpaceForm::projective(4), 2, Scalar::int(1)),
        ] {
            let tm = tangent_model(&spec).unwrap();
            let expect = Scalar::int(2 * (tm.n as i64 - 1));
            assert_eq!(simons_norm_nabla_a(&spec).unwrap(), expect);
            assert_eq!(nabla_a_norm_oracle(&tm).unwrap(), expect);
        }
        // symbolic A1
        let spec = ModelSpec::new(Family::A1, SpaceForm::projective(3), None, Param::Symbolic);
        assert_eq!(simons_norm_nabla_a(&spec).unwrap(), Scalar::int(8));
    }

    #[test]
    fn simons_value_b_nonnegative() {
        let spec = ModelSpec::b(SpaceForm::projective(2), Scalar::int(8));
        let v = simons_norm_nabla_a(&spec).unwrap();
        assert!(v.sign().unwrap() >= 0);
    }

    #[test]
    fn lemma6_class_a_structure() {
        // commutator condition holds for class A; B = proj_D + (n-1) U x U
        let tm = tangent_model(&a1_m2_t4()).unwrap();
        let b = nabla_a_square_sum(&tm).unwrap();
        let mut expect = mat_identity(&ScalarField, tm.n);
        expect.data[0][0] = Scalar::int(tm.n as i64 - 1);
        assert_eq!(b, expect);
        let rep = lemma6_checks(&a1_m2_t4(), None).unwrap();
        assert_eq!(rep.commutator_trace_zero, Some(true));
        // B-family: derivative conditions flagged unavailable
        let rep = lemma6_checks(
            &ModelSpec::b(SpaceForm::projective(2), Scalar::int(8)),
            None,
        )
        .unwrap();
        assert!(rep.commutator_trace_zero.is_none());
        assert!(rep.endomorphism_residual_zero.is_none());
    }

    #[test]
    fn e4_class_a() {
        let rep = check_e_conditions(&a1_m2_t4(), &Scalar::zero(), &Scalar::zero()).unwrap();
        assert_eq!(rep.e4_zero, Some(true));
    }

    #[test]
    fn e_conditions_on_published_pq() {
        // sphere, m = 2, t = 4: p = (t+c)(3n+2+c/t) = 225/4 and
        // q = 2(n+1)[n t^2 + c(2n+1) t + c/t + n+2] = 650 solve every
        // condition
        let spec = a1_m2_t4();
        let p = Scalar::ratio(225, 4);
        let q = Scalar::int(650);
        let rep = check_e_conditions(&spec, &p, &q).unwrap();
        assert!(rep.e1.is_zero());
        assert!(rep.e2.iter().all(|(_, r)| r.is_zero()));
        assert!(rep.e3.iter().all(|(_, r)| r.is_zero()));
        assert_eq!(rep.e4_zero, Some(true));
        // tube case: m = 3, k = 1, slope 1: p = 28, q = 192
        let spec2 = ModelSpec::a2(SpaceForm::projective(3), 1, Scalar::one());
        let rep = check_e_conditions(&spec2, &Scalar::int(28), &Scalar::int(192)).unwrap();
        assert!(rep.e1.is_zero());
        assert!(rep.e2.iter().all(|(_, r)| r.is_zero()));
        assert!(rep.e3.iter().all(|(_, r)| r.is_zero()));
        // perturbing q shifts the first residual by exactly the opposite
        // amount, by linearity
        let rep = check_e_conditions(&spec, &p, &(&q + &Scalar::one())).unwrap();
        assert_eq!(rep.e1, Scalar::int(-1));
        // perturbing p scales by the coefficient 2c(n+1) + kappa f
        let rep0 = check_e_conditions(&spec, &p, &q).unwrap();
        let rep1 = check_e_conditions(&spec, &(&p + &Scalar::one()), &q).unwrap();
        let sp = spectrum(&spec).unwrap();
        let coeff = &Scalar::int(2 * 4) + &(&sp.kappa * &sp.f());
        assert_eq!(&rep1.e1 - &rep0.e1, coeff);
    }

    #[test]
    fn endomorphism_identity_at_a_mass_symmetric_cubic_model() {
        // The null 3-type tube (c = -1, m = 4, k = 2, slope 5/3) satisfies
        // the full endomorphism identity with the constants built from its
        // cubic coefficients.
        let sf = SpaceForm::hyperbolic(4);
        let (k, l) = (2usize, 1usize);
        let t = Scalar::ratio(5, 3);
        let spec = ModelSpec::a2(sf, k, t.clone());
        let sp = spectrum(&spec).unwrap();
        let n = sf.n() as i64;
        let c = Scalar::int(-1);
        let f1 = sp.f();
        let f2 = sp.f2();
        let kappa = sp.kappa.clone();
        let pq = crate::blocks::ProductQuadric::new(k, l, -1, &t).unwrap();
        let (p, q, r) = crate::blocks::cubic_coefficients(&pq).unwrap();
        let half = Scalar::ratio(1, 2);
        let a = &(&p * &half) + &(&Scalar::int(2) * &(&c + &f2));
        let b = &(&(&p * &f1) * &half)
            + &(&(&c * &f1) * &(&(&c * &f2) + &Scalar::int(n + 7)));
        let quarter = Scalar::ratio(1, 4);
        let mut d = Scalar::int(n * n * n + 6 * n * n + 10 * n + 7);
        d = &d + &(&(&(&c * &quarter) * &Scalar::int(5 * n + 19)) * &(&f1 * &f1));
        d = &d + &(&(&quarter * &(&f1 * &f1)) * &f2);
        d = &d + &(&c * &f2);
        d = &d - &(&(&Scalar::int(2) * &c) * &(&kappa * &f1));
        d = &d - &(&c * &(&kappa * &kappa));
        d = &d + &(&(&p * &quarter)
            * &(&(&(&Scalar::int(2) * &c) * &Scalar::int((n + 1) * (n + 3))) + &(&f1 * &f1)));
        d = &d + &(&(&q * &quarter) * &Scalar::int(n + 2));
        d = &d + &(&(&c * &r) * &Scalar::ratio(1, 8));
        let rep = lemma6_checks(&spec, Some((&a, &b, &d))).unwrap();
        assert_eq!(rep.commutator_trace_zero, Some(true));
        assert_eq!(rep.endomorphism_residual_zero, Some(true));
        assert_eq!(rep.mean_curvature_guard_ok, Some(true));
    }
}
