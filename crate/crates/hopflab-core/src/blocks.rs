//! First-principles oracle for the sphere-product families: matrix entries
//! of the embedded tube as quadratic polynomials on a product of
//! (pseudo-)spheres, an exact polynomial Laplace-Beltrami operator, the
//! closed-form power blocks, and the full tube type analysis.
//!
//! Complex coordinates and their conjugates are independent formal
//! variables; circle-invariance of a monomial is balance of its holomorphic
//! and antiholomorphic degrees. Polynomials are kept reduced modulo the
//! quadric relation of each factor, eliminating the highest-index pair, so
//! constancy on the product is a syntactic check.

use crate::error::{HopfError, Result};
use crate::frame::TypeVerdict;
use crate::scalar::{Scalar, SymVar};
use std::collections::BTreeMap;
use std::fmt;

/// Variable identifier: factor (0 = first quadric, 1 = round sphere),
/// complex index within the factor, and conjugation flag.
pub fn var_id(factor: usize, index: usize, bar: bool) -> u16 {
    (factor as u16) * 512 + (index as u16) * 2 + bar as u16
}

fn decode(v: u16) -> (usize, usize, bool) {
    ((v / 512) as usize, ((v % 512) / 2) as usize, v % 2 == 1)
}

pub type Monomial = Vec<(u16, u16)>;

/// Sparse polynomial over the exact scalars in the formal coordinate
/// variables of the two factors.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly {
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn var(v: u16) -> Self {
        let mut p = MPoly::zero();
        p.terms.insert(vec![(v, 1)], Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            // re-borrow immutably to remove
            let key: Vec<(u16, u16)> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }

    /// Formal partial derivative with respect to one variable.
    pub fn derivative(&self, var: u16) -> Self {
        let mut out = MPoly::zero();
        for (mono, coef) in &self.terms {
            let Some(&(_, e)) = mono.iter().find(|(v, _)| *v == var) else {
                continue;
            };
            let mut m2: Monomial = Vec::new();
            for (v, ex) in mono {
                let dec = if *v == var { ex - 1 } else { *ex };
                if dec > 0 {
                    m2.push((*v, dec));
                }
            }
            out.add_term(m2, &Scalar::int(e as i64) * coef);
        }
        out
    }

    pub fn eval(&self, values: &dyn Fn(u16) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (mono, coef) in &self.terms {
            let mut term = coef.clone();
            for (v, e) in mono {
                term = &term * &values(*v).pow_u(*e as u32);
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Total degree in the variables of one factor.
    fn factor_degree(mono: &Monomial, factor: usize) -> u32 {
        mono.iter()
            .filter(|(v, _)| decode(*v).0 == factor)
            .map(|(_, e)| *e as u32)
            .sum()
    }

    /// Holomorphic minus antiholomorphic degree across both factors.
    fn phase_weight(mono: &Monomial) -> i64 {
        mono.iter()
            .map(|(v, e)| {
                let (_, _, bar) = decode(*v);
                if bar {
                    -(*e as i64)
                } else {
                    *e as i64
                }
            })
            .sum()
    }
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut map: BTreeMap<u16, u16> = BTreeMap::new();
    for (v, e) in a.iter().chain(b.iter()) {
        *map.entry(*v).or_insert(0) += e;
    }
    map.into_iter().collect()
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut s = format!("({c})");
            for (v, e) in m {
                let (factor, idx, bar) = decode(*v);
                let name = if factor == 0 { "z" } else { "w" };
                let barred = if bar { "~" } else { "" };
                s.push_str(&format!("*{name}{barred}{idx}"));
                if *e > 1 {
                    s.push_str(&format!("^{e}"));
                }
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The geometric data of the two factors: complex sizes, the form weight of
/// the distinguished coordinate, and signed squared radii (the value of the
/// weighted coordinate norm on the factor).
#[derive(Clone, Debug)]
pub struct ProductQuadric {
    pub k: usize,
    pub l: usize,
    pub c: i32,
    /// c * r1^2 for the first factor (timelike in the hyperbolic case).
    pub signed_r1_sq: Scalar,
    /// r2^2 for the round factor.
    pub r2_sq: Scalar,
}

impl ProductQuadric {
    /// From the slope parameter t = cot_c^2 r: r1^2 = t/(t+c), r2^2 = 1/(t+c).
    pub fn new(k: usize, l: usize, c: i32, t: &Scalar) -> Result<Self> {
        let denom = t + &Scalar::int(c as i64);
        if denom.is_zero() {
            return Err(HopfError::ParamOutOfRange("t + c = 0".into()));
        }
        let r1_sq = t.try_div(&denom)?;
        let r2_sq = Scalar::one().try_div(&denom)?;
        Ok(ProductQuadric {
            k,
            l,
            c,
            signed_r1_sq: &Scalar::int(c as i64) * &r1_sq,
            r2_sq,
        })
    }

    pub fn m(&self) -> usize {
        self.k + self.l + 1
    }

    fn factor_vars(&self, factor: usize) -> usize {
        if factor == 0 {
            self.k + 1
        } else {
            self.l + 1
        }
    }

    /// Sphere dimension of a factor.
    fn factor_dim(&self, factor: usize) -> i64 {
        2 * self.factor_vars(factor) as i64 - 1
    }

    /// Form weight of a coordinate: c on the distinguished first-factor
    /// coordinate in the hyperbolic case, 1 otherwise.
    fn eps(&self, factor: usize, index: usize) -> i64 {
        if factor == 0 && index == 0 {
            self.c as i64
        } else {
            1
        }
    }

    fn signed_radius_sq(&self, factor: usize) -> Scalar {
        if factor == 0 {
            self.signed_r1_sq.clone()
        } else {
            self.r2_sq.clone()
        }
    }

    /// Reduce modulo both quadric relations, eliminating the top-index
    /// diagonal pair of each factor.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let mut cur = p.clone();
        loop {
            let mut changed = false;
            for factor in 0..2usize {
                let top = self.factor_vars(factor) - 1;
                let vz = var_id(factor, top, false);
                let vzb = var_id(factor, top, true);
                let target = cur.terms.iter().find_map(|(m, c)| {
                    let has_z = m.iter().any(|(v, _)| *v == vz);
                    let has_zb = m.iter().any(|(v, _)| *v == vzb);
                    if has_z && has_zb {
                        Some((m.clone(), c.clone()))
                    } else {
                        None
                    }
                });
                if let Some((mono, coef)) = target {
                    cur.terms.remove(&mono);
                    // divide the monomial by z_top zbar_top
                    let mut rest: Monomial = Vec::new();
                    for (v, e) in &mono {
                        let dec = if *v == vz || *v == vzb { e - 1 } else { *e };
                        if dec > 0 {
                            rest.push((*v, dec));
                        }
                    }
                    // z zbar = eps_top (signed_r^2 - sum_{a<top} eps_a z_a zbar_a)
                    let eps_top = Scalar::int(self.eps(factor, top));
                    let mut subst =
                        MPoly::constant(&self.signed_radius_sq(factor) * &eps_top);
                    for a in 0..top {
                        let m = vec![(var_id(factor, a, false), 1), (var_id(factor, a, true), 1)];
                        let co = -(&Scalar::int(self.eps(factor, a)) * &eps_top);
                        let mut term = MPoly::zero();
                        term.add_term(m, co);
                        subst = subst.add(&term);
                    }
                    let mut restp = MPoly::zero();
                    restp.add_term(rest, coef);
                    cur = cur.add(&restp.mul(&subst));
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    /// Exact Laplace-Beltrami of a polynomial restricted to one factor
    /// quadric, decomposed by homogeneous degree:
    /// -flat_laplacian + d(d + N - 1)/(signed r^2) per degree-d part.
    pub fn factor_laplacian(&self, p: &MPoly, factor: usize) -> Result<MPoly> {
        let nf = self.factor_dim(factor);
        let inv_r = self.signed_radius_sq(factor).try_inv()?;
        let mut out = MPoly::zero();
        for (mono, coef) in &p.terms {
            let d = MPoly::factor_degree(mono, factor) as i64;
            // degree shift
            let shift = &Scalar::int(d * (d + nf - 1)) * &inv_r;
            out.add_term(mono.clone(), &shift * coef);
            // minus the flat weighted second-order part: -4 sum eps_a d_a dbar_a
            for a in 0..self.factor_vars(factor) {
                let vz = var_id(factor, a, false);
                let vzb = var_id(factor, a, true);
                let ez = mono.iter().find(|(v, _)| *v == vz).map(|(_, e)| *e).unwrap_or(0);
                let ezb = mono.iter().find(|(v, _)| *v == vzb).map(|(_, e)| *e).unwrap_or(0);
                if ez == 0 || ezb == 0 {
                    continue;
                }
                let mut m2: Monomial = Vec::new();
                for (v, e) in mono {
                    let dec = if *v == vz || *v == vzb { e - 1 } else { *e };
                    if dec > 0 {
                        m2.push((*v, dec));
                    }
                }
                let co = Scalar::int(-4 * self.eps(factor, a) * ez as i64 * ezb as i64);
                out.add_term(m2, &co * coef);
            }
        }
        Ok(self.reduce(&out))
    }

    /// Laplacian of a circle-invariant polynomial on the product: the sum of
    /// the factor operators, which descends to the base of the submersion.
    pub fn product_laplacian(&self, p: &MPoly) -> Result<MPoly> {
        for mono in p.terms.keys() {
            if MPoly::phase_weight(mono) != 0 {
                return Err(HopfError::NotBasic(format!("{mono:?}")));
            }
        }
        let l0 = self.factor_laplacian(p, 0)?;
        let l1 = self.factor_laplacian(p, 1)?;
        Ok(self.reduce(&l0.add(&l1)))
    }

    /// The embedded-point matrix entry (i, j) as a reduced polynomial.
    pub fn entry(&self, i: usize, j: usize) -> MPoly {
        let coord = |i: usize| -> (usize, usize) {
            if i <= self.k {
                (0, i)
            } else {
                (1, i - self.k - 1)
            }
        };
        let (fi, ii) = coord(i);
        let (fj, jj) = coord(j);
        let col_weight = if j == 0 { 1 } else { self.c as i64 };
        let mut p = MPoly::zero();
        p.add_term(
            mono_mul(
                &vec![(var_id(fi, ii, false), 1)],
                &vec![(var_id(fj, jj, true), 1)],
            ),
            Scalar::int(col_weight),
        );
        self.reduce(&p)
    }

    /// The full matrix of entries.
    pub fn position_matrix(&self) -> Vec<Vec<MPoly>> {
        let n = self.m() + 1;
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn matrix_laplacian(&self, m: &[Vec<MPoly>]) -> Result<Vec<Vec<MPoly>>> {
        m.iter()
            .map(|row| row.iter().map(|e| self.product_laplacian(e)).collect())
            .collect()
    }
}

/// Closed-form affine coefficients of the s-th Laplacian power on the five
/// block slots.
#[derive(Clone, Debug)]
pub struct BlockRep {
    pub a_coeff: Scalar,
    pub a_const: Scalar,
    pub b_coeff: Scalar,
    pub d_coeff: Scalar,
    pub d_const: Scalar,
}

/// The published closed form of the s-th iterated Laplacian on the block
/// slots (s >= 1).
pub fn delta_power_blocks(pq: &ProductQuadric, s: u32) -> Result<BlockRep> {
    assert!(s >= 1);
    let c = Scalar::int(pq.c as i64);
    let kk = Scalar::int(pq.k as i64 * 2 + 1); // K = 2k+1
    let ll = Scalar::int(pq.l as i64 * 2 + 1); // L = 2l+1
    let one = Scalar::one();
    let inv_r1 = (&c * &pq.signed_r1_sq.try_inv()?).clone(); // 1/r1^2
    let inv_r2 = pq.r2_sq.try_inv()?;
    let kp1 = &kk + &one;
    let lp1 = &ll + &one;
    // eigen-coefficients
    let lam_v = &(&Scalar::int(2) * &(&c * &kp1)) * &inv_r1;
    let lam_w = &(&Scalar::int(2) * &lp1) * &inv_r2;
    let lam_u = &(&(&c * &kk) * &inv_r1) + &(&ll * &inv_r2);
    let a_coeff = lam_v.pow_u(s);
    let b_coeff = lam_u.pow_u(s);
    let d_coeff = lam_w.pow_u(s);
    // constants ride along one step behind
    let a_const = -(&(&lam_v.pow_u(s - 1) * &Scalar::int(4)) * &c);
    let d_const = -(&(&lam_w.pow_u(s - 1) * &Scalar::int(4)) * &c);
    Ok(BlockRep {
        a_coeff,
        a_const,
        b_coeff,
        d_coeff,
        d_const,
    })
}

/// The three eigenvalues of the tube: the off-diagonal, first-diagonal, and
/// second-diagonal block coefficients.
pub fn block_eigenvalues(pq: &ProductQuadric) -> Result<(Scalar, Scalar, Scalar)> {
    let r = delta_power_blocks(pq, 1)?;
    Ok((r.b_coeff, r.a_coeff, r.d_coeff))
}

/// Closed-form coefficients of the degree-three annihilating equation.
pub fn cubic_coefficients(pq: &ProductQuadric) -> Result<(Scalar, Scalar, Scalar)> {
    let (lu, lv, lw) = block_eigenvalues(pq)?;
    let p = -(&(&lu + &lv) + &lw);
    let q = &(&(&lu * &lv) + &(&lu * &lw)) + &(&lv * &lw);
    let r = -(&(&lu * &lv) * &lw);
    Ok((p, q, r))
}

/// The constant part of the decomposition: the block-diagonal matrix with
/// entries 2 r1^2/(K+1) and 2c r2^2/(L+1).
pub fn center_matrix(pq: &ProductQuadric) -> Result<Vec<Vec<MPoly>>> {
    let n = pq.m() + 1;
    let c = Scalar::int(pq.c as i64);
    let r1_sq = &c * &pq.signed_r1_sq; // plain r1^2
    let a_diag = (&Scalar::int(2) * &r1_sq).try_div(&Scalar::int(2 * pq.k as i64 + 2))?;
    let d_diag =
        (&(&Scalar::int(2) * &c) * &pq.r2_sq).try_div(&Scalar::int(2 * pq.l as i64 + 2))?;
    let mut out = vec![vec![MPoly::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        let v = if i <= pq.k { &a_diag } else { &d_diag };
        row[i] = MPoly::constant(v.clone());
    }
    Ok(out)
}

/// Apply the oracle Laplacian s times to every entry and compare with the
/// closed-form block action; the difference must reduce to zero entry-wise.
pub fn verify_block_powers(pq: &ProductQuadric, s_max: u32) -> Result<()> {
    let x = pq.position_matrix();
    let n = x.len();
    let mut iter = x.clone();
    for s in 1..=s_max {
        iter = pq.matrix_laplacian(&iter)?;
        let rep = delta_power_blocks(pq, s)?;
        for i in 0..n {
            for j in 0..n {
                let expected = if i <= pq.k && j <= pq.k {
                    let mut e = x[i][j].scale(&rep.a_coeff);
                    if i == j {
                        e = e.add(&MPoly::constant(rep.a_const.clone()));
                    }
                    e
                } else if i > pq.k && j > pq.k {
                    let mut e = x[i][j].scale(&rep.d_coeff);
                    if i == j {
                        e = e.add(&MPoly::constant(rep.d_const.clone()));
                    }
                    e
                } else {
                    x[i][j].scale(&rep.b_coeff)
                };
                let diff = pq.reduce(&iter[i][j].sub(&expected));
                if !diff.is_zero() {
                    return Err(HopfError::EngineMismatch(format!(
                        "power {s} entry ({i},{j}): oracle differs from closed form by {diff}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct BlockAnalysis {
    pub lambda_u: Scalar,
    pub lambda_v: Scalar,
    pub lambda_w: Scalar,
    pub comp_u_nonzero: bool,
    pub comp_v_nonzero: bool,
    pub comp_w_nonzero: bool,
    /// Distinct eigenvalues carried by nonzero components (zero excluded).
    pub eigenvalues: Vec<Scalar>,
    pub verdict: TypeVerdict,
    pub mass_symmetric: bool,
    pub x0_is_center: bool,
    pub cubic_residual_zero: bool,
    pub notes: Vec<String>,
}

/// Full type analysis of a tube over a lower-dimensional complex space
/// form, through the polynomial engine. Works for concrete slopes and, for
/// the identity checks, symbolically.
pub fn a2_type_analysis(k: usize, l: usize, c: i32, t: &Scalar) -> Result<BlockAnalysis> {
    let pq = ProductQuadric::new(k, l, c, t)?;
    let (lu, lv, lw) = block_eigenvalues(&pq)?;
    let x = pq.position_matrix();
    let x0 = center_matrix(&pq)?;
    let n = x.len();

    // Eigencomponents: off-diagonal blocks, and diagonal blocks minus their
    // center slots; certified against the oracle.
    let mut comp_u = vec![vec![MPoly::zero(); n]; n];
    let mut comp_v = vec![vec![MPoly::zero(); n]; n];
    let mut comp_w = vec![vec![MPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let e = x[i][j].sub(&x0[i][j]);
            if i <= pq.k && j <= pq.k {
                comp_v[i][j] = pq.reduce(&e);
            } else if i > pq.k && j > pq.k {
                comp_w[i][j] = pq.reduce(&e);
            } else {
                comp_u[i][j] = pq.reduce(&e);
            }
        }
    }
    let nonzero = |m: &Vec<Vec<MPoly>>| m.iter().any(|r| r.iter().any(|e| !e.is_zero()));
    let certify = |m: &Vec<Vec<MPoly>>, lam: &Scalar| -> Result<()> {
        let lm = pq.matrix_laplacian(m)?;
        for i in 0..n {
            for j in 0..n {
                let diff = pq.reduce(&lm[i][j].sub(&m[i][j].scale(lam)));
                if !diff.is_zero() {
                    return Err(HopfError::EngineMismatch(format!(
                        "component entry ({i},{j}) fails its eigen equation"
                    )));
                }
            }
        }
        Ok(())
    };
    certify(&comp_u, &lu)?;
    certify(&comp_v, &lv)?;
    certify(&comp_w, &lw)?;

    // Cubic annihilating identity with the closed-form coefficients.
    let (p, q, r) = cubic_coefficients(&pq)?;
    let d1 = pq.matrix_laplacian(&x)?;
    let d2 = pq.matrix_laplacian(&d1)?;
    let d3 = pq.matrix_laplacian(&d2)?;
    let mut cubic_ok = true;
    for i in 0..n {
        for j in 0..n {
            let mut acc = d3[i][j].clone();
            acc = acc.add(&d2[i][j].scale(&p));
            acc = acc.add(&d1[i][j].scale(&q));
            acc = acc.add(&x[i][j].sub(&x0[i][j]).scale(&r));
            if !pq.reduce(&acc).is_zero() {
                cubic_ok = false;
            }
        }
    }

    let comp_u_nonzero = nonzero(&comp_u);
    let comp_v_nonzero = nonzero(&comp_v);
    let comp_w_nonzero = nonzero(&comp_w);

    let mut notes = Vec::new();
    // The constant part against the hyperquadric center.
    let center_scalar = Scalar::ratio(1, pq.m() as i64 + 1);
    let x0_is_center = {
        let mut ok = true;
        for i in 0..n {
            let want = MPoly::constant(center_scalar.clone());
            if pq.reduce(&x0[i][i].sub(&want)).is_zero() {
                continue;
            }
            ok = false;
        }
        ok
    };

    // Collect distinct eigenvalues over nonzero components; merge equal ones.
    let mut pairs: Vec<(Scalar, bool)> = vec![
        (lu.clone(), comp_u_nonzero),
        (lv.clone(), comp_v_nonzero),
        (lw.clone(), comp_w_nonzero),
    ];
    pairs.retain(|(_, nz)| *nz);
    let mut eigenvalues: Vec<Scalar> = Vec::new();
    let mut has_zero_eigen = false;
    for (lam, _) in &pairs {
        if lam.is_zero() {
            has_zero_eigen = true;
            continue;
        }
        if !eigenvalues.iter().any(|e| e == lam) {
            eigenvalues.push(lam.clone());
        }
    }
    if !t.is_symbolic() {
        crate::frame::sort_concrete(&mut eigenvalues);
    }
    let ktype = eigenvalues.len() + has_zero_eigen as usize;
    if has_zero_eigen {
        notes.push("a nonconstant component sits in the kernel (null type)".into());
    }
    let mass_symmetric = x0_is_center || has_zero_eigen;
    Ok(BlockAnalysis {
        lambda_u: lu,
        lambda_v: lv,
        lambda_w: lw,
        comp_u_nonzero,
        comp_v_nonzero,
        comp_w_nonzero,
        eigenvalues,
        verdict: TypeVerdict::Finite {
            k: ktype,
            null: has_zero_eigen,
        },
        mass_symmetric,
        x0_is_center,
        cubic_residual_zero: cubic_ok,
        notes,
    })
}

/// The symbolic slope for identity checks.
pub fn symbolic_t() -> Scalar {
    Scalar::sym_var(SymVar::T)
}

/// Map a sphere-family model onto its product picture: (k, l, block slope).
pub fn block_parameters(spec: &crate::catalog::ModelSpec) -> Result<(usize, usize, Scalar)> {
    use crate::catalog::Family;
    let m = spec.sf.m;
    let t = spec.param_scalar()?;
    match spec.family {
        Family::A1 => Ok((0, m - 1, t)),
        Family::A1Tube => Ok((m - 1, 0, t.try_inv()?)),
        Family::A2 => {
            let k = spec.k.ok_or_else(|| {
                HopfError::ParamOutOfRange("tube family requires the focal dimension".into())
            })?;
            Ok((k, m - 1 - k, t))
        }
        other => Err(HopfError::FamilyMismatch(format!(
            "no sphere-product picture for family {other}"
        ))),
    }
}

/// Eigenvalues and verdicts must agree between the frame module and the
/// polynomial engine for both geodesic-sphere branches.
pub fn cross_check_frame_vs_block(spec: &crate::catalog::ModelSpec) -> Result<BlockAnalysis> {
    use crate::catalog::Family;
    if !matches!(spec.family, Family::A1 | Family::A1Tube) {
        return Err(HopfError::FamilyMismatch(
            "cross-check runs on the geodesic-sphere branches".into(),
        ));
    }
    let (k, l, t) = block_parameters(spec)?;
    let analysis = a2_type_analysis(k, l, spec.sf.c, &t)?;
    let report = crate::frame::chen_type_evidence(spec)?;
    if report.verdict != analysis.verdict {
        return Err(HopfError::EngineMismatch(format!(
            "verdicts differ: module {} vs blocks {}",
            report.verdict, analysis.verdict
        )));
    }
    let mut frame_eigen = report.eigenvalues.clone();
    let mut block_eigen = analysis.eigenvalues.clone();
    crate::frame::sort_concrete(&mut frame_eigen);
    crate::frame::sort_concrete(&mut block_eigen);
    if frame_eigen != block_eigen {
        return Err(HopfError::EngineMismatch(format!(
            "eigenvalues differ: module {:?} vs blocks {:?}",
            frame_eigen, block_eigen
        )));
    }
    Ok(analysis)
}
