//! Univariate rational functions over Q and the quadratic extension
//! Q(x)[sqrt(x)] used for symbolic family parameters.
//!
//! Only two symbolic variables ever occur: `t` (the squared A-family slope
//! cot_c^2 r, with sqrt(t) the principal curvature on the holomorphic
//! distribution) and `k2` (the squared Hopf curvature kappa^2 of the
//! B-family, with sqrt(k2) = kappa).

use super::poly::{QPoly, Rat};
use crate::error::{HopfError, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymVar {
    /// t = cot_c^2(r); sqrt(t) is the A-family principal curvature mu.
    T,
    /// k2 = kappa^2; sqrt(k2) is the B-family Hopf principal curvature.
    Kappa2,
}

impl SymVar {
    pub fn base_name(self) -> &'static str {
        match self {
            SymVar::T => "t",
            SymVar::Kappa2 => "kappa^2",
        }
    }

    pub fn root_name(self) -> &'static str {
        match self {
            SymVar::T => "sqrt(t)",
            SymVar::Kappa2 => "kappa",
        }
    }
}

/// num/den with den monic and gcd(num, den) = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    pub num: QPoly,
    pub den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(HopfError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = d.leading();
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn var() -> Self {
        Self::from_poly(QPoly::var())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        Self::new(num, den).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.num);
        let den = self.den.mul(&o.den);
        Self::new(num, den).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(HopfError::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }
}

/// e(x) + o(x) * sqrt(x): the quadratic extension of Q(x) by the square
/// root of the variable itself. Closed under field operations since
/// sqrt(x)^2 = x.
#[derive(Clone, Debug, PartialEq)]
pub struct SymRat {
    pub var: SymVar,
    pub even: RatFunc,
    pub odd: RatFunc,
}

impl SymRat {
    pub fn from_even(var: SymVar, even: RatFunc) -> Self {
        SymRat {
            var,
            even,
            odd: RatFunc::zero(),
        }
    }

    pub fn constant(var: SymVar, c: Rat) -> Self {
        Self::from_even(var, RatFunc::constant(c))
    }

    /// The variable itself (t or kappa^2).
    pub fn var_value(var: SymVar) -> Self {
        Self::from_even(var, RatFunc::var())
    }

    /// sqrt of the variable (mu or kappa).
    pub fn root(var: SymVar) -> Self {
        SymRat {
            var,
            even: RatFunc::zero(),
            odd: RatFunc::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_rational_constant(&self) -> Option<Rat> {
        if self.odd.is_zero() {
            self.even.as_constant()
        } else {
            None
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.var != o.var {
            return Err(HopfError::ScalarKind(format!(
                "mixed symbolic variables {} and {}",
                self.var.base_name(),
                o.var.base_name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(SymRat {
            var: self.var,
            even: self.even.add(&o.even),
            odd: self.odd.add(&o.odd),
        })
    }

    pub fn neg(&self) -> Self {
        SymRat {
            var: self.var,
            even: self.even.neg(),
            odd: self.odd.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let x = RatFunc::var();
        // (a + b s)(c + d s) = ac + bd x + (ad + bc) s
        Ok(SymRat {
            var: self.var,
            even: self.even.mul(&o.even).add(&self.odd.mul(&o.odd).mul(&x)),
            odd: self.even.mul(&o.odd).add(&self.odd.mul(&o.even)),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(HopfError::ZeroDenominator);
        }
        let x = RatFunc::var();
        // (a + b s)^-1 = (a - b s)/(a^2 - b^2 x); the norm is nonzero because
        // x is not a square in Q(x).
        let norm = self.even.mul(&self.even).sub(&self.odd.mul(&self.odd).mul(&x));
        let ninv = norm.inv()?;
        Ok(SymRat {
            var: self.var,
            even: self.even.mul(&ninv),
            odd: self.odd.neg().mul(&ninv),
        })
    }

    /// Evaluate at a concrete nonnegative parameter value; the root maps to
    /// sqrt of that value.
    pub fn eval_rat(&self, x: &Rat) -> Result<(Rat, Rat)> {
        Ok((self.even.eval(x)?, self.odd.eval(x)?))
    }

    /// Square root within Q(x)[sqrt(x)], when it exists there: the even part
    /// must be a rational square times an even or odd power of x.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(SymRat::from_even(self.var, RatFunc::zero()));
        }
        if !self.odd.is_zero() {
            return Err(HopfError::ScalarKind(
                "square root of a mixed symbolic expression".into(),
            ));
        }
        // num/den = num*den / den^2, so only a polynomial root is needed.
        let p = self.even.num.mul(&self.even.den);
        let q = poly_sqrt(&p, self.var)?;
        let den = RatFunc::from_poly(self.even.den.clone());
        Ok(SymRat {
            var: self.var,
            even: q.even.div(&den)?,
            odd: q.odd.div(&den)?,
        })
    }
}

/// sqrt of a polynomial inside Q(x)[sqrt(x)]: p = c * x^v * h(x)^2 with c a
/// positive rational square.
fn poly_sqrt(p: &QPoly, var: SymVar) -> Result<SymRat> {
    // Strip the power of x.
    let mut v = 0usize;
    while p.coeff(v).is_zero() {
        v += 1;
    }
    let reduced = QPoly::from_vec(p.coeffs()[v..].to_vec());
    let mut h = QPoly::one();
    for (g, mult) in reduced.squarefree_decomposition() {
        if mult % 2 != 0 {
            return Err(HopfError::ScalarKind(format!(
                "{} has no square root in the symbolic tower",
                p
            )));
        }
        h = h.mul(&g.pow((mult / 2) as u32));
    }
    let c = reduced
        .div_rem(&h.mul(&h))
        .0
        .coeff(0);
    if c.is_negative() {
        return Err(HopfError::NegativeRadicand(p.to_string()));
    }
    let cs = c.numer().sqrt();
    let cd = c.denom().sqrt();
    if &(&cs * &cs) != c.numer() || &(&cd * &cd) != c.denom() {
        return Err(HopfError::ScalarKind(format!(
            "leading coefficient of {p} is not a rational square"
        )));
    }
    let root_c = Rat::new(cs, cd);
    let h = h.scale(&root_c);
    let xpow = QPoly::monomial(Rat::one(), v / 2);
    let even_part = h.mul(&xpow);
    if v % 2 == 0 {
        Ok(SymRat::from_even(var, RatFunc::from_poly(even_part)))
    } else {
        Ok(SymRat {
            var,
            even: RatFunc::zero(),
            odd: RatFunc::from_poly(even_part),
        })
    }
}

impl fmt::Display for SymRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.even.is_zero() {
            parts.push(format_ratfunc(&self.even, self.var.base_name()));
        }
        if !self.odd.is_zero() {
            let o = format_ratfunc(&self.odd, self.var.base_name());
            if o == "1" {
                parts.push(self.var.root_name().to_string());
            } else if o == "-1" {
                parts.push(format!("-{}", self.var.root_name()));
            } else {
                parts.push(format!("({})*{}", o, self.var.root_name()));
            }
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

pub fn format_ratfunc(r: &RatFunc, var: &str) -> String {
    let n = super::format_poly(&r.num, var);
    if r.den.is_constant() && r.den.coeff(0).is_one() {
        n
    } else {
        let d = super::format_poly(&r.den, var);
        let np = if r.num.is_constant() || r.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
        {
            n
        } else {
            format!("({n})")
        };
        format!("{np}/({d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::rat_i;

    #[test]
    fn gcd_cancellation() {
        // (t^2 - 1)/(t - 1) = t + 1
        let r = RatFunc::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(r.num, QPoly::from_ints(&[1, 1]));
        assert!(r.den.is_constant());
    }

    #[test]
    fn quadratic_extension_inverse() {
        // mu = sqrt(t); (mu + 1)^-1 * (mu + 1) = 1
        let mu = SymRat::root(SymVar::T);
        let one = SymRat::constant(SymVar::T, rat_i(1));
        let x = mu.add(&one).unwrap();
        let prod = x.inv().unwrap().mul(&x).unwrap();
        assert_eq!(prod.is_rational_constant(), Some(rat_i(1)));
    }
}
