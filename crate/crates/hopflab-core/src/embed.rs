//! The ambient model: points of the complex space form as projection
//! matrices, the trace metric, the hyperquadric, and the second-fundamental
//! pairing tables of the embedding — plus exact and floating sampling
//! validation.
//!
//! The Hermitian form weights the 0-th coordinate by c and the rest by 1;
//! all adjoints and traces route through it, giving one code path for both
//! curvature signs.

use crate::catalog::SpaceForm;
use crate::error::{HopfError, Result};
use crate::linalg::{Mat, ScalarField};
use crate::scalar::Scalar;
use rand::Rng;

/// A complex number with exact scalar parts.
#[derive(Clone, Debug, PartialEq)]
pub struct CScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl CScalar {
    pub fn zero() -> Self {
        CScalar {
            re: Scalar::zero(),
            im: Scalar::zero(),
        }
    }

    pub fn one() -> Self {
        CScalar {
            re: Scalar::one(),
            im: Scalar::zero(),
        }
    }

    pub fn real(r: Scalar) -> Self {
        CScalar {
            re: r,
            im: Scalar::zero(),
        }
    }

    pub fn new(re: Scalar, im: Scalar) -> Self {
        CScalar { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        CScalar::new(Scalar::int(re), Scalar::int(im))
    }

    pub fn conj(&self) -> Self {
        CScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        CScalar {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CScalar {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CScalar {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CScalar {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sq(&self) -> Scalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }
}

/// Square complex matrix with exact entries.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    pub n: usize,
    pub data: Vec<Vec<CScalar>>,
}

impl CMat {
    pub fn zero(n: usize) -> Self {
        CMat {
            n,
            data: vec![vec![CScalar::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zero(n);
        for i in 0..n {
            m.data[i][i] = CScalar::one();
        }
        m
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i][j] = self.data[i][j].add(&o.data[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i][j] = self.data[i][j].sub(&o.data[i][j]);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = self.clone();
        for row in &mut out.data {
            for e in row {
                *e = e.scale(s);
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = CMat::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    out.data[i][j] =
                        out.data[i][j].add(&self.data[i][k].mul(&o.data[k][j]));
                }
            }
        }
        out
    }

    pub fn trace(&self) -> CScalar {
        let mut acc = CScalar::zero();
        for i in 0..self.n {
            acc = acc.add(&self.data[i][i]);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }
}

/// The Hermitian form: weight of coordinate j (c on the distinguished
/// 0-th coordinate in the hyperbolic case, 1 otherwise).
fn form_weight(sf: SpaceForm, j: usize) -> Scalar {
    if j == 0 {
        Scalar::int(sf.c as i64)
    } else {
        Scalar::one()
    }
}

/// The Hermitian form on exact complex vectors.
pub fn form_value(sf: SpaceForm, z: &[CScalar], w: &[CScalar]) -> CScalar {
    let mut acc = CScalar::zero();
    for j in 0..z.len() {
        acc = acc.add(&z[j].conj().mul(&w[j]).scale(&form_weight(sf, j)));
    }
    acc
}

/// Projection matrix of the line through an (unnormalized) vector whose
/// form value has the sign of c: entries z_i conj(z_j) w_j / rho.
pub fn embed_line(z: &[CScalar], sf: SpaceForm) -> Result<CMat> {
    if z.len() != sf.m + 1 {
        return Err(HopfError::ShapeMismatch(format!(
            "vector length {} for complex dimension {}",
            z.len(),
            sf.m
        )));
    }
    let rho = form_value(sf, z, z);
    if !rho.im.is_zero() {
        return Err(HopfError::NotOnQuadric("form value is not real".into()));
    }
    let sign_ok = rho.re.sign()? == sf.c.signum();
    if !sign_ok {
        return Err(HopfError::NotOnQuadric(format!(
            "form value {} has the wrong causal character",
            rho.re
        )));
    }
    let rho_inv = rho.re.try_inv()?;
    let mut p = CMat::zero(sf.m + 1);
    for i in 0..=sf.m {
        for j in 0..=sf.m {
            let w = &form_weight(sf, j) * &rho_inv;
            p.data[i][j] = z[i].mul(&z[j].conj()).scale(&w);
        }
    }
    Ok(p)
}

/// Projection matrix of a unit point: the form value must equal c exactly.
pub fn embed_point(z: &[CScalar], sf: SpaceForm) -> Result<CMat> {
    let rho = form_value(sf, z, z);
    if !rho.im.is_zero() || rho.re != Scalar::int(sf.c as i64) {
        return Err(HopfError::NotOnQuadric(format!(
            "form value {} + {} i, expected {}",
            rho.re, rho.im, sf.c
        )));
    }
    embed_line(z, sf)
}

/// The trace metric (c/2) tr(AB); the product trace of two form-Hermitian
/// matrices is real.
pub fn trace_metric(a: &CMat, b: &CMat, c: i32) -> Result<Scalar> {
    if a.n != b.n {
        return Err(HopfError::ShapeMismatch(format!("{} vs {}", a.n, b.n)));
    }
    let t = a.mul(b).trace();
    if !t.im.is_zero() {
        return Err(HopfError::ShapeMismatch(
            "trace of the product is not real".into(),
        ));
    }
    Ok(&Scalar::ratio(c as i64, 2) * &t.re)
}

/// Distance-squared defect from the hyperquadric centered at the scaled
/// identity: must vanish for every embedded point.
pub fn hyperquadric_residual(p: &CMat, sf: SpaceForm) -> Result<Scalar> {
    let m = sf.m as i64;
    let center = CMat::identity(sf.m + 1).scale(&Scalar::ratio(1, m + 1));
    let d = p.sub(&center);
    let val = trace_metric(&d, &d, sf.c)?;
    Ok(&val - &Scalar::Rat(crate::scalar::poly::rat(sf.c as i64 * m, 2 * (m + 1))))
}

// ---------------------------------------------------------------------------
// Second-order jets along geodesics: the exact oracle for the second
// fundamental form of the embedding.
// ---------------------------------------------------------------------------

/// Truncated series a + b s + c s^2 with complex coefficients.
#[derive(Clone, Debug)]
pub struct Jet {
    pub c0: CScalar,
    pub c1: CScalar,
    pub c2: CScalar,
}

impl Jet {
    pub fn constant(v: CScalar) -> Self {
        Jet {
            c0: v,
            c1: CScalar::zero(),
            c2: CScalar::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Jet {
            c0: self.c0.add(&o.c0),
            c1: self.c1.add(&o.c1),
            c2: self.c2.add(&o.c2),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Jet {
            c0: self.c0.mul(&o.c0),
            c1: self.c0.mul(&o.c1).add(&self.c1.mul(&o.c0)),
            c2: self
                .c0
                .mul(&o.c2)
                .add(&self.c1.mul(&o.c1))
                .add(&self.c2.mul(&o.c0)),
        }
    }

    pub fn conj(&self) -> Self {
        Jet {
            c0: self.c0.conj(),
            c1: self.c1.conj(),
            c2: self.c2.conj(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Jet {
            c0: self.c0.scale(s),
            c1: self.c1.scale(s),
            c2: self.c2.scale(s),
        }
    }
}

/// A horizontal tangent direction at a unit point: a vector with vanishing
/// form product against the base point. The geodesic through the point with
/// this velocity has the 2-jet z0 + s W - (s^2/2) c Psi(W,W) z0.
pub struct GeodesicJet {
    pub entries: Vec<Jet>,
}

pub fn geodesic_jet(z0: &[CScalar], w: &[CScalar], sf: SpaceForm) -> Result<GeodesicJet> {
    let pairing = form_value(sf, z0, w);
    if !pairing.is_zero() {
        return Err(HopfError::BadLabels(
            "direction is not horizontal at the base point".into(),
        ));
    }
    let wn = form_value(sf, w, w);
    if !wn.im.is_zero() {
        return Err(HopfError::BadLabels("direction norm is not real".into()));
    }
    let factor = &Scalar::ratio(-(sf.c as i64), 2) * &wn.re;
    let entries = z0
        .iter()
        .zip(w.iter())
        .map(|(z, wv)| Jet {
            c0: z.clone(),
            c1: wv.clone(),
            c2: z.scale(&factor),
        })
        .collect();
    Ok(GeodesicJet { entries })
}

/// Projection-matrix jet along a geodesic; the form value stays constant
/// through second order, so no division is needed beyond the constant c.
pub fn embed_jet(g: &GeodesicJet, sf: SpaceForm) -> Vec<Vec<Jet>> {
    let n = g.entries.len();
    let c = Scalar::int(sf.c as i64);
    let mut out = vec![vec![Jet::constant(CScalar::zero()); n]; n];
    for i in 0..n {
        for j in 0..n {
            let w = &form_weight(sf, j) * &c;
            out[i][j] = g.entries[i].mul(&g.entries[j].conj()).scale(&w);
        }
    }
    out
}

/// Tangent vector of the embedded space form at the base point, as the
/// first-order matrix coefficient along the geodesic with velocity w.
pub fn tangent_matrix(z0: &[CScalar], w: &[CScalar], sf: SpaceForm) -> Result<CMat> {
    let jet = embed_jet(&geodesic_jet(z0, w, sf)?, sf);
    let n = z0.len();
    let mut out = CMat::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.data[i][j] = jet[i][j].c1.clone();
        }
    }
    Ok(out)
}

/// Second fundamental form value sigma(X_w, X_w) of the embedding at the
/// base point: the full second derivative along the geodesic (its tangential
/// part vanishes because the curve is a geodesic of the base).
pub fn sigma_ambient_diag(z0: &[CScalar], w: &[CScalar], sf: SpaceForm) -> Result<CMat> {
    let jet = embed_jet(&geodesic_jet(z0, w, sf)?, sf);
    let n = z0.len();
    let mut out = CMat::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.data[i][j] = jet[i][j].c2.scale(&Scalar::int(2));
        }
    }
    Ok(out)
}

/// Polarized second fundamental form sigma(X_u, X_v).
pub fn sigma_ambient(
    z0: &[CScalar],
    u: &[CScalar],
    v: &[CScalar],
    sf: SpaceForm,
) -> Result<CMat> {
    let sum: Vec<CScalar> = u.iter().zip(v.iter()).map(|(a, b)| a.add(b)).collect();
    let s_sum = sigma_ambient_diag(z0, &sum, sf)?;
    let s_u = sigma_ambient_diag(z0, u, sf)?;
    let s_v = sigma_ambient_diag(z0, v, sf)?;
    Ok(s_sum.sub(&s_u).sub(&s_v).scale(&Scalar::ratio(1, 2)))
}

// ---------------------------------------------------------------------------
// Abstract frame pairing tables from the shape-operator product formula.
// ---------------------------------------------------------------------------

/// An orthonormal tangent frame of the space form at a point, together with
/// the complex structure as a matrix in that frame. Index 0 is the
/// hypersurface normal, index 1 the structure vector.
#[derive(Clone, Debug)]
pub struct TangentFrame {
    pub c: i32,
    pub dim: usize,
    pub j: Mat<Scalar>,
}

impl TangentFrame {
    /// The standard frame: J xi = -U, J U = xi, and J-pairs (e, Je) on the
    /// holomorphic distribution.
    pub fn standard(sf: SpaceForm) -> Self {
        let dim = 2 * sf.m;
        let f = ScalarField;
        let mut j = crate::linalg::mat_zero(&f, dim, dim);
        // J xi = -U, J U = xi
        j.data[1][0] = Scalar::int(-1);
        j.data[0][1] = Scalar::one();
        let mut idx = 2;
        while idx + 1 < dim {
            j.data[idx + 1][idx] = Scalar::one();
            j.data[idx][idx + 1] = Scalar::int(-1);
            idx += 2;
        }
        TangentFrame { c: sf.c, dim, j }
    }

    /// Validate the declared complex structure: skew and squaring to -1.
    pub fn validate(&self) -> Result<()> {
        let f = ScalarField;
        let j2 = crate::linalg::mat_mul(&f, &self.j, &self.j);
        let mut neg_id = crate::linalg::mat_identity(&f, self.dim);
        for i in 0..self.dim {
            neg_id.data[i][i] = Scalar::int(-1);
        }
        if j2 != neg_id {
            return Err(HopfError::BadLabels(
                "declared complex structure does not square to -1".into(),
            ));
        }
        for i in 0..self.dim {
            for k in 0..self.dim {
                if self.j.data[i][k] != -self.j.data[k][i].clone() {
                    return Err(HopfError::BadLabels(
                        "declared complex structure is not skew".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn apply_j(&self, x: &[Scalar]) -> Vec<Scalar> {
        crate::linalg::mat_vec(&ScalarField, &self.j, x)
    }

    /// The product formula for values of the second fundamental form:
    /// c [2<X,Y><V,W> + <X,V><Y,W> + <X,W><Y,V> + <JX,V><JY,W> + <JX,W><JY,V>].
    pub fn ros_product(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Scalar {
        let d = crate::tangent::dot;
        let jx = self.apply_j(x);
        let jy = self.apply_j(y);
        let mut acc = &Scalar::int(2) * &(&d(x, y) * &d(v, w));
        acc = &acc + &(&d(x, v) * &d(y, w));
        acc = &acc + &(&d(x, w) * &d(y, v));
        acc = &acc + &(&d(&jx, v) * &d(&jy, w));
        acc = &acc + &(&d(&jx, w) * &d(&jy, v));
        &acc * &Scalar::int(self.c as i64)
    }

    /// The shape operator of the embedding in the direction sigma(X, Y),
    /// applied to V.
    pub fn shape_apply(&self, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d = crate::tangent::dot;
        let jx = self.apply_j(x);
        let jy = self.apply_j(y);
        let mut out = vec![Scalar::zero(); self.dim];
        let terms: [(Scalar, &[Scalar]); 5] = [
            (&Scalar::int(2) * &d(x, y), v),
            (d(x, v), y),
            (d(y, v), x),
            (d(&jx, v), &jy),
            (d(&jy, v), &jx),
        ];
        for (coef, vec) in terms {
            for i in 0..self.dim {
                out[i] = &out[i] + &(&coef * &vec[i]);
            }
        }
        let c = Scalar::int(self.c as i64);
        for e in &mut out {
            *e = &*e * &c;
        }
        out
    }

    /// <sigma(X, Y), position> = -<X, Y>.
    pub fn pair_with_position(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        -crate::tangent::dot(x, y)
    }
}

/// Pairing table over diagonal frame labels sigma(u_i, u_i), for the labels
/// [xi, U, e_2, Je_2, ...]. Entry (i, j) pairs the i-th and j-th diagonal
/// values.
#[derive(Clone, Debug)]
pub struct SigmaGram {
    pub labels: Vec<String>,
    pub table: Vec<Vec<Scalar>>,
}

pub fn sigma_gram(frame: &TangentFrame) -> Result<SigmaGram> {
    frame.validate()?;
    let dim = frame.dim;
    let basis = |i: usize| {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        v
    };
    let mut table = vec![vec![Scalar::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let ei = basis(i);
            let ej = basis(j);
            table[i][j] = frame.ros_product(&ei, &ei, &ej, &ej);
        }
    }
    let mut labels = vec!["xi".to_string(), "U".to_string()];
    for p in 0..(dim - 2) / 2 {
        labels.push(format!("e{}", p + 2));
        labels.push(format!("Je{}", p + 2));
    }
    Ok(SigmaGram { labels, table })
}

// ---------------------------------------------------------------------------
// Floating-point smoke path.
// ---------------------------------------------------------------------------

pub type C64 = (f64, f64);

fn c_mul(a: C64, b: C64) -> C64 {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn c_conj(a: C64) -> C64 {
    (a.0, -a.1)
}

pub fn embed_point_f64(z: &[C64], sf: SpaceForm) -> Vec<Vec<C64>> {
    let n = z.len();
    let c = sf.c as f64;
    let mut rho = 0.0;
    for (j, zj) in z.iter().enumerate() {
        let w = if j == 0 { c } else { 1.0 };
        rho += w * (zj.0 * zj.0 + zj.1 * zj.1);
    }
    let mut out = vec![vec![(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let w = if j == 0 { c } else { 1.0 };
            let v = c_mul(z[i], c_conj(z[j]));
            out[i][j] = (v.0 * w / rho, v.1 * w / rho);
        }
    }
    out
}

/// Max deviation of P^2 - P, |tr P - 1|, and the hyperquadric defect for a
/// floating sample.
pub fn float_residuals(p: &[Vec<C64>], sf: SpaceForm) -> (f64, f64, f64) {
    let n = p.len();
    let mut proj = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = (0.0, 0.0);
            for k in 0..n {
                let t = c_mul(p[i][k], p[k][j]);
                acc = (acc.0 + t.0, acc.1 + t.1);
            }
            let d = (acc.0 - p[i][j].0, acc.1 - p[i][j].1);
            proj = proj.max(d.0.abs()).max(d.1.abs());
        }
    }
    let mut tr = (0.0, 0.0);
    for i in 0..n {
        tr = (tr.0 + p[i][i].0, tr.1 + p[i][i].1);
    }
    let tr_res = ((tr.0 - 1.0).powi(2) + tr.1.powi(2)).sqrt();
    // <P - I/(m+1), P - I/(m+1)> - cm/(2(m+1)) via (c/2) tr(D^2)
    let c = sf.c as f64;
    let m = sf.m as f64;
    let mut tr_d2 = (0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            let di = (
                p[i][k].0 - if i == k { 1.0 / (m + 1.0) } else { 0.0 },
                p[i][k].1,
            );
            let dk = (
                p[k][i].0 - if i == k { 1.0 / (m + 1.0) } else { 0.0 },
                p[k][i].1,
            );
            let t = c_mul(di, dk);
            tr_d2 = (tr_d2.0 + t.0, tr_d2.1 + t.1);
        }
    }
    let quad_res = (c / 2.0 * tr_d2.0 - c * m / (2.0 * (m + 1.0))).abs().max(tr_d2.1.abs());
    (proj, tr_res, quad_res)
}

/// Draw a random exact Gaussian-integer line with the causal character of c.
pub fn sample_integer_line<R: Rng>(rng: &mut R, sf: SpaceForm) -> Vec<CScalar> {
    loop {
        let mut z: Vec<CScalar> = (0..=sf.m)
            .map(|_| CScalar::from_ints(rng.gen_range(-5..=5), rng.gen_range(-5..=5)))
            .collect();
        if sf.c == -1 {
            // Weight the distinguished coordinate to land timelike.
            z[0] = CScalar::from_ints(rng.gen_range(6..=12), rng.gen_range(6..=12));
        }
        let rho = form_value(sf, &z, &z);
        if rho.im.is_zero() {
            if let Ok(s) = rho.re.sign() {
                if s == sf.c.signum() {
                    return z;
                }
            }
        }
    }
}

/// Random float point on the unit quadric, kept well conditioned: in the
/// hyperbolic case the spacelike part stays small against the distinguished
/// coordinate so projector entries remain of unit size.
pub fn sample_float_point<R: Rng>(rng: &mut R, sf: SpaceForm) -> Vec<C64> {
    loop {
        let spread = if sf.c == -1 { 0.3 } else { 1.0 };
        let mut z: Vec<C64> = (0..=sf.m)
            .map(|_| {
                (
                    rng.gen_range(-spread..spread),
                    rng.gen_range(-spread..spread),
                )
            })
            .collect();
        if sf.c == -1 {
            z[0] = (z[0].0 + 1.0, z[0].1);
        }
        let c = sf.c as f64;
        let mut rho = 0.0;
        for (j, zj) in z.iter().enumerate() {
            let w = if j == 0 { c } else { 1.0 };
            rho += w * (zj.0 * zj.0 + zj.1 * zj.1);
        }
        if rho * c > 1e-1 {
            let scale = 1.0 / (rho * c).sqrt();
            for e in &mut z {
                *e = (e.0 * scale, e.1 * scale);
            }
            return z;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    fn e_k(m: usize, k: usize) -> Vec<CScalar> {
        let mut v = vec![CScalar::zero(); m + 1];
        v[k] = CScalar::one();
        v
    }

    #[test]
    fn embed_coordinate_line() {
        let sf = SpaceForm::projective(2);
        let p = embed_point(&e_k(2, 0), sf).unwrap();
        assert_eq!(p.data[0][0], CScalar::one());
        for i in 0..3 {
            for j in 0..3 {
                if (i, j) != (0, 0) {
                    assert!(p.data[i][j].is_zero());
                }
            }
        }
    }

    #[test]
    fn embed_diagonal_line() {
        // (1,1,0)/sqrt(2): all four corner entries are 1/2
        let sf = SpaceForm::projective(2);
        let mut z = e_k(2, 0);
        z[1] = CScalar::one();
        let p = embed_line(&z, sf).unwrap();
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(p.data[i][j], CScalar::real(Scalar::ratio(1, 2)));
        }
        assert!(p.data[2][2].is_zero());
    }

    #[test]
    fn embed_timelike_with_radical_entries() {
        // z = (sqrt(2), 1, 0) has form value -1 in the hyperbolic space
        let sf = SpaceForm::hyperbolic(2);
        let z = vec![
            CScalar::real(Scalar::sqrt_int(2)),
            CScalar::one(),
            CScalar::zero(),
        ];
        let p = embed_point(&z, sf).unwrap();
        let p2 = p.mul(&p);
        assert_eq!(p2, p);
        assert_eq!(p.trace(), CScalar::one());
        assert!(hyperquadric_residual(&p, sf).unwrap().is_zero());
    }

    #[test]
    fn metric_normalization() {
        let sf = SpaceForm::projective(2);
        let id = CMat::identity(3);
        assert_eq!(trace_metric(&id, &id, sf.c).unwrap(), Scalar::ratio(3, 2));
        let p = embed_point(&e_k(2, 0), sf).unwrap();
        assert_eq!(trace_metric(&p, &p, sf.c).unwrap(), Scalar::ratio(1, 2));
        assert!(hyperquadric_residual(&p, sf).unwrap().is_zero());
    }

    #[test]
    fn projective_invariance_under_phases() {
        let sf = SpaceForm::projective(3);
        let z: Vec<CScalar> = vec![
            CScalar::from_ints(1, 2),
            CScalar::from_ints(-3, 1),
            CScalar::from_ints(0, 2),
            CScalar::from_ints(2, -1),
        ];
        let p = embed_line(&z, sf).unwrap();
        // rational rotation by the unit phase (3 + 4i)/5
        let phase = CScalar::new(Scalar::ratio(3, 5), Scalar::ratio(4, 5));
        let zr: Vec<CScalar> = z.iter().map(|e| e.mul(&phase)).collect();
        assert_eq!(embed_line(&zr, sf).unwrap(), p);
        // any nonzero complex rescaling fixes the projector
        let lam = CScalar::from_ints(2, -7);
        let zs: Vec<CScalar> = z.iter().map(|e| e.mul(&lam)).collect();
        assert_eq!(embed_line(&zs, sf).unwrap(), p);
    }

    #[test]
    fn tangent_vectors_are_isometric() {
        // <X_u, X_v> via the trace metric equals Re Psi(u, v)
        for sf in [SpaceForm::projective(2), SpaceForm::hyperbolic(2)] {
            let z0 = e_k(2, 0);
            let u = e_k(2, 1);
            let iv: Vec<CScalar> = e_k(2, 2)
                .iter()
                .map(|e| e.mul(&CScalar::from_ints(0, 1)))
                .collect();
            let xu = tangent_matrix(&z0, &u, sf).unwrap();
            let xv = tangent_matrix(&z0, &iv, sf).unwrap();
            assert_eq!(trace_metric(&xu, &xu, sf.c).unwrap(), Scalar::one());
            assert_eq!(trace_metric(&xv, &xv, sf.c).unwrap(), Scalar::one());
            assert!(trace_metric(&xu, &xv, sf.c).unwrap().is_zero());
        }
    }

    #[test]
    fn sigma_matches_product_formula() {
        // Ambient second-derivative values reproduce the product formula on
        // an orthonormal configuration, for both curvature signs.
        for sf in [SpaceForm::projective(3), SpaceForm::hyperbolic(3)] {
            let z0 = e_k(3, 0);
            let dirs: Vec<Vec<CScalar>> = vec![
                e_k(3, 1),
                e_k(3, 1).iter().map(|e| e.mul(&CScalar::from_ints(0, -1))).collect(),
                e_k(3, 2),
                e_k(3, 2).iter().map(|e| e.mul(&CScalar::from_ints(0, 1))).collect(),
            ];
            // labels: xi = X_{w0}, U = -J xi = X_{-i w0}, e = X_{w2}, Je
            let frame = TangentFrame::standard(SpaceForm { c: sf.c, m: 2 });
            let basis = |i: usize| {
                let mut v = vec![Scalar::zero(); 4];
                v[i] = Scalar::one();
                v
            };
            for a in 0..4usize {
                for b in 0..4usize {
                    let sig_ab = sigma_ambient(&z0, &dirs[a], &dirs[b], sf).unwrap();
                    for v in 0..4usize {
                        for w in 0..4usize {
                            let sig_vw = sigma_ambient(&z0, &dirs[v], &dirs[w], sf).unwrap();
                            let ambient = trace_metric(&sig_ab, &sig_vw, sf.c).unwrap();
                            let formula = frame.ros_product(
                                &basis(a),
                                &basis(b),
                                &basis(v),
                                &basis(w),
                            );
                            assert_eq!(ambient, formula, "c={} a{a} b{b} v{v} w{w}", sf.c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_pairs_with_position_and_identity() {
        let sf = SpaceForm::projective(2);
        let z0 = e_k(2, 0);
        let u = e_k(2, 1);
        let p = embed_point(&z0, sf).unwrap();
        let sig = sigma_ambient_diag(&z0, &u, sf).unwrap();
        // <sigma(X,X), position> = -<X,X> = -1
        assert_eq!(trace_metric(&sig, &p, sf.c).unwrap(), Scalar::int(-1));
        // <sigma(X,X), I> = 0
        let id = CMat::identity(3);
        assert!(trace_metric(&sig, &id, sf.c).unwrap().is_zero());
        // J-invariance: sigma(JX, JY) = sigma(X, Y)
        let ju: Vec<CScalar> = u.iter().map(|e| e.mul(&CScalar::from_ints(0, 1))).collect();
        let sig_j = sigma_ambient_diag(&z0, &ju, sf).unwrap();
        assert_eq!(sig, sig_j);
    }

    #[test]
    fn shape_operator_consistency() {
        // <Abar_{sigma(X,Y)} V, W> computed from the explicit shape formula
        // agrees with the product-formula pairing.
        let frame = TangentFrame::standard(SpaceForm::projective(3));
        let dim = frame.dim;
        let vecs: Vec<Vec<Scalar>> = vec![
            (0..dim).map(|i| s((i as i64 * 7 + 1) % 5 - 2)).collect(),
            (0..dim).map(|i| s((i as i64 * 3 + 2) % 7 - 3)).collect(),
            (0..dim).map(|i| s((i as i64 * 5 + 1) % 3 - 1)).collect(),
            (0..dim).map(|i| s((i as i64 * 2 + 3) % 5 - 2)).collect(),
        ];
        let (x, y, v, w) = (&vecs[0], &vecs[1], &vecs[2], &vecs[3]);
        let av = frame.shape_apply(x, y, v);
        let lhs = crate::tangent::dot(&av, w);
        let rhs = frame.ros_product(x, y, v, w);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gram_reference_values() {
        // <s(xi,xi), s(xi,xi)> = 4c, <s(e,e), s(e,e)> = 4c,
        // <s(xi,xi), s(e,e)> = 2c, <s(e,e), s(Je,Je)> = 4c
        for c in [1i32, -1] {
            let frame = TangentFrame::standard(SpaceForm { c, m: 3 });
            let gram = sigma_gram(&frame).unwrap();
            let cs = s(c as i64);
            assert_eq!(gram.table[0][0], &s(4) * &cs);
            assert_eq!(gram.table[2][2], &s(4) * &cs);
            assert_eq!(gram.table[0][2], &s(2) * &cs);
            assert_eq!(gram.table[2][3], &s(4) * &cs);
            assert_eq!(gram.table[2][4], &s(2) * &cs);
            // sigma(U,U) pairs like sigma(xi,xi)
            assert_eq!(gram.table[1][1], &s(4) * &cs);
            assert_eq!(gram.table[0][1], &s(4) * &cs);
        }
    }

    #[test]
    fn exact_sampling_certificates() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for c in [1, -1] {
            for m in 2..=4usize {
                let sf = SpaceForm { c, m };
                for _ in 0..10 {
                    let z = sample_integer_line(&mut rng, sf);
                    let p = embed_line(&z, sf).unwrap();
                    assert_eq!(p.mul(&p), p);
                    assert_eq!(p.trace(), CScalar::one());
                    assert!(hyperquadric_residual(&p, sf).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn float_smoke() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for c in [1, -1] {
            let sf = SpaceForm { c, m: 4 };
            for _ in 0..20 {
                let z = sample_float_point(&mut rng, sf);
                let p = embed_point_f64(&z, sf);
                let (proj, tr, quad) = float_residuals(&p, sf);
                assert!(proj < 1e-12 && tr < 1e-12 && quad < 1e-12);
            }
        }
    }
}
