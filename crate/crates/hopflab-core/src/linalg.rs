//! Exact linear algebra over context-passed fields.
//!
//! Matrices are dense `Vec<Vec<Elem>>`. The field is threaded as a context
//! object so the same routines serve plain scalars and quadratic extensions
//! (eigenvalue pairs coupled by one algebraic relation).

use crate::error::{HopfError, Result};
use crate::scalar::Scalar;

pub trait Field {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let one = self.one();
        for _ in 0..n.unsigned_abs() {
            acc = self.add(&acc, &one);
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }
}

/// The scalar tower as a field.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScalarField;

impl Field for ScalarField {
    type Elem = Scalar;
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn inv(&self, a: &Scalar) -> Result<Scalar> {
        a.try_inv()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Scalar {
        Scalar::int(n)
    }
}

/// Quadratic extension F[x]/(x^2 - beta x - gamma) of the scalar field.
/// Elements are pairs (a, b) standing for a + b x. Used for spectra whose
/// two coupled principal curvatures are the roots of one quadratic.
#[derive(Clone, Debug)]
pub struct QuadField {
    pub beta: Scalar,
    pub gamma: Scalar,
}

pub type QuadElem = (Scalar, Scalar);

impl QuadField {
    pub fn new(beta: Scalar, gamma: Scalar) -> Self {
        QuadField { beta, gamma }
    }

    /// The adjoined root itself.
    pub fn root(&self) -> QuadElem {
        (Scalar::zero(), Scalar::one())
    }

    /// The conjugate root beta - x.
    pub fn conjugate_root(&self) -> QuadElem {
        (self.beta.clone(), -Scalar::one())
    }

    pub fn scalar(&self, s: Scalar) -> QuadElem {
        (s, Scalar::zero())
    }

    /// Galois conjugation x -> beta - x.
    pub fn conj(&self, a: &QuadElem) -> QuadElem {
        (&a.0 + &(&a.1 * &self.beta), -a.1.clone())
    }
}

impl Field for QuadField {
    type Elem = QuadElem;
    fn zero(&self) -> QuadElem {
        (Scalar::zero(), Scalar::zero())
    }
    fn one(&self) -> QuadElem {
        (Scalar::one(), Scalar::zero())
    }
    fn add(&self, a: &QuadElem, b: &QuadElem) -> QuadElem {
        (&a.0 + &b.0, &a.1 + &b.1)
    }
    fn neg(&self, a: &QuadElem) -> QuadElem {
        (-a.0.clone(), -a.1.clone())
    }
    fn mul(&self, a: &QuadElem, b: &QuadElem) -> QuadElem {
        // (a0 + a1 x)(b0 + b1 x) with x^2 = beta x + gamma
        let cross = &a.1 * &b.1;
        (
            &(&a.0 * &b.0) + &(&cross * &self.gamma),
            &(&(&a.0 * &b.1) + &(&a.1 * &b.0)) + &(&cross * &self.beta),
        )
    }
    fn inv(&self, a: &QuadElem) -> Result<QuadElem> {
        // norm = a * conj(a) = a0^2 + a0 a1 beta - a1^2 gamma
        let c = self.conj(a);
        let norm = self.mul(a, &c);
        debug_assert!(norm.1.is_zero());
        let ninv = norm.0.try_inv()?;
        Ok((&c.0 * &ninv, &c.1 * &ninv))
    }
    fn is_zero(&self, a: &QuadElem) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Mat<E> {
    pub fn from_rows(data: Vec<Vec<E>>) -> Self {
        let rows = data.len();
        let cols = if rows == 0 { 0 } else { data[0].len() };
        assert!(data.iter().all(|r| r.len() == cols));
        Mat { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &E {
        &self.data[i][j]
    }
}

pub fn mat_zero<F: Field>(f: &F, n: usize, m: usize) -> Mat<F::Elem> {
    Mat::from_rows(vec![vec![f.zero(); m]; n])
}

pub fn mat_identity<F: Field>(f: &F, n: usize) -> Mat<F::Elem> {
    let mut m = mat_zero(f, n, n);
    for i in 0..n {
        m.data[i][i] = f.one();
    }
    m
}

pub fn mat_add<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    let mut out = a.clone();
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.data[i][j] = f.add(&a.data[i][j], &b.data[i][j]);
        }
    }
    out
}

pub fn mat_scale<F: Field>(f: &F, a: &Mat<F::Elem>, c: &F::Elem) -> Mat<F::Elem> {
    let mut out = a.clone();
    for row in &mut out.data {
        for e in row {
            *e = f.mul(e, c);
        }
    }
    out
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = mat_zero(f, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            if f.is_zero(&a.data[i][k]) {
                continue;
            }
            for j in 0..b.cols {
                let t = f.mul(&a.data[i][k], &b.data[k][j]);
                out.data[i][j] = f.add(&out.data[i][j], &t);
            }
        }
    }
    out
}

pub fn mat_vec<F: Field>(f: &F, a: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            let mut acc = f.zero();
            for j in 0..a.cols {
                acc = f.add(&acc, &f.mul(&a.data[i][j], &v[j]));
            }
            acc
        })
        .collect()
}

pub fn mat_trace<F: Field>(f: &F, a: &Mat<F::Elem>) -> F::Elem {
    assert_eq!(a.rows, a.cols);
    let mut acc = f.zero();
    for i in 0..a.rows {
        acc = f.add(&acc, &a.data[i][i]);
    }
    acc
}

pub fn mat_is_zero<F: Field>(f: &F, a: &Mat<F::Elem>) -> bool {
    a.data.iter().all(|r| r.iter().all(|e| f.is_zero(e)))
}

/// Solve the linear system `cols * x = rhs` where `cols` is given as a list
/// of column vectors. Returns None when the system is inconsistent, and the
/// unique solution when the columns are independent.
pub fn solve_columns<F: Field>(
    f: &F,
    cols: &[Vec<F::Elem>],
    rhs: &[F::Elem],
) -> Result<Option<Vec<F::Elem>>> {
    let n = rhs.len();
    let k = cols.len();
    // Augmented matrix [cols | rhs]
    let mut aug: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            let mut row: Vec<F::Elem> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut r = 0usize;
    for c in 0..k {
        let mut piv = None;
        for i in r..n {
            if !f.is_zero(&aug[i][c]) {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        aug.swap(r, p);
        let inv = f.inv(&aug[r][c])?;
        for j in c..=k {
            aug[r][j] = f.mul(&aug[r][j], &inv);
        }
        for i in 0..n {
            if i != r && !f.is_zero(&aug[i][c]) {
                let factor = aug[i][c].clone();
                for j in c..=k {
                    let t = f.mul(&factor, &aug[r][j]);
                    aug[i][j] = f.sub(&aug[i][j], &t);
                }
            }
        }
        pivot_rows.push((r, c));
        r += 1;
    }
    // Inconsistent if any zero row has nonzero rhs.
    for i in r..n {
        if !f.is_zero(&aug[i][k]) {
            return Ok(None);
        }
    }
    let mut x = vec![f.zero(); k];
    for (row, col) in pivot_rows {
        x[col] = aug[row][k].clone();
    }
    Ok(Some(x))
}

/// Monic minimal polynomial of `op` on the cyclic subspace generated by `v`:
/// the first linear dependence among v, op v, op^2 v, ... The coefficients
/// are returned in ascending degree order, ending with 1.
pub fn cyclic_minimal_polynomial<F: Field>(
    f: &F,
    op: &Mat<F::Elem>,
    v: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    if v.iter().all(|e| f.is_zero(e)) {
        return Ok(vec![f.one()]);
    }
    let mut krylov: Vec<Vec<F::Elem>> = vec![v.to_vec()];
    loop {
        let next = mat_vec(f, op, krylov.last().unwrap());
        if let Some(coeffs) = solve_columns(f, &krylov, &next)? {
            // next = sum coeffs[i] * krylov[i]; min poly = x^d - sum coeffs[i] x^i
            let mut poly: Vec<F::Elem> = coeffs.iter().map(|c| f.neg(c)).collect();
            poly.push(f.one());
            return Ok(poly);
        }
        assert!(
            krylov.len() <= v.len(),
            "Krylov chain exceeded the space dimension"
        );
        krylov.push(next);
    }
}

/// Evaluate a polynomial (ascending coefficients) at a field element.
pub fn poly_eval<F: Field>(f: &F, poly: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in poly.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

/// Deflate a monic polynomial by a known root: poly / (x - root).
pub fn poly_deflate<F: Field>(f: &F, poly: &[F::Elem], root: &F::Elem) -> Result<Vec<F::Elem>> {
    let check = poly_eval(f, poly, root);
    if !f.is_zero(&check) {
        return Err(HopfError::EngineMismatch(format!(
            "deflation by a non-root: residual {check:?}"
        )));
    }
    let n = poly.len();
    let mut out = vec![f.zero(); n - 1];
    let mut carry = f.zero();
    for i in (0..n - 1).rev() {
        carry = f.add(&poly[i + 1], &f.mul(&carry, root));
        out[i] = carry.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        // diag(2, 2, 5) on v = (1, 0, 1): min poly (x-2)(x-5) = x^2 - 7x + 10
        let f = ScalarField;
        let op = Mat::from_rows(vec![
            vec![s(2), s(0), s(0)],
            vec![s(0), s(2), s(0)],
            vec![s(0), s(0), s(5)],
        ]);
        let v = vec![s(1), s(0), s(1)];
        let mp = cyclic_minimal_polynomial(&f, &op, &v).unwrap();
        assert_eq!(mp, vec![s(10), s(-7), s(1)]);
        // on v = e0 the restriction is scalar: x - 2
        let mp2 = cyclic_minimal_polynomial(&f, &op, &[s(1), s(0), s(0)]).unwrap();
        assert_eq!(mp2, vec![s(-2), s(1)]);
    }

    #[test]
    fn deflation() {
        let f = ScalarField;
        let poly = vec![s(10), s(-7), s(1)];
        let q = poly_deflate(&f, &poly, &s(2)).unwrap();
        assert_eq!(q, vec![s(-5), s(1)]);
    }

    #[test]
    fn quad_field_roots_satisfy_relation() {
        // x^2 = 3x + 4 has roots 4 and -1
        let qf = QuadField::new(Scalar::int(3), Scalar::int(4));
        let x = qf.root();
        let x2 = qf.mul(&x, &x);
        let rhs = qf.add(&qf.mul(&qf.scalar(s(3)), &x), &qf.scalar(s(4)));
        assert_eq!(x2, rhs);
        let y = qf.conjugate_root();
        let y2 = qf.mul(&y, &y);
        let rhs2 = qf.add(&qf.mul(&qf.scalar(s(3)), &y), &qf.scalar(s(4)));
        assert_eq!(y2, rhs2);
        // product of roots = -gamma, sum = beta
        let prod = qf.mul(&x, &y);
        assert_eq!(prod, qf.scalar(s(-4)));
    }
}
