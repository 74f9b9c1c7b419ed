//! The exact number tower: rationals, quadratic-radical extensions,
//! symbolic rational functions in one family parameter, and certified
//! intervals for sign decisions.

pub mod interval;
pub mod poly;
pub mod radical;
pub mod ratfunc;
pub mod roots;

pub use interval::Interval;
pub use poly::{QPoly, Rat};
pub use radical::Radical;
pub use ratfunc::{RatFunc, SymRat, SymVar};
pub use roots::{isolate_real_roots, refine_root, Domain, IsolatedRoot};

use crate::error::{HopfError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact scalar. All arithmetic is total within a kind; rationals promote
/// into either extension, while radical and symbolic values never mix.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rat),
    Rad(Radical),
    Sym(SymRat),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rat(r)
    }

    /// sqrt(n) for small nonnegative integers, normalized square-free.
    pub fn sqrt_int(n: u64) -> Self {
        Self::normalized(Scalar::Rad(Radical::sqrt_int(n)))
    }

    /// The symbolic variable itself.
    pub fn sym_var(var: SymVar) -> Self {
        Scalar::Sym(SymRat::var_value(var))
    }

    /// The square root of the symbolic variable (mu for t, kappa for k2).
    pub fn sym_root(var: SymVar) -> Self {
        Scalar::Sym(SymRat::root(var))
    }

    fn normalized(s: Scalar) -> Scalar {
        match s {
            Scalar::Rad(r) => match r.as_rational() {
                Some(q) => Scalar::Rat(q),
                None => Scalar::Rad(r.compress()),
            },
            Scalar::Sym(s) => match s.is_rational_constant() {
                Some(q) => Scalar::Rat(q),
                None => Scalar::Sym(s),
            },
            other => other,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Rad(r) => r.is_zero(),
            Scalar::Sym(s) => s.is_zero(),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Sym(_))
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Rad(r) => r.as_rational(),
            Scalar::Sym(s) => s.is_rational_constant(),
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        frat: impl Fn(&Rat, &Rat) -> Rat,
        frad: impl Fn(&Radical, &Radical) -> Result<Radical>,
        fsym: impl Fn(&SymRat, &SymRat) -> Result<SymRat>,
    ) -> Result<Scalar> {
        let out = match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(frat(a, b)),
            (Scalar::Rad(a), Scalar::Rad(b)) => Scalar::Rad(frad(a, b)?),
            (Scalar::Rat(a), Scalar::Rad(b)) => {
                Scalar::Rad(frad(&Radical::from_rat(a.clone()), b)?)
            }
            (Scalar::Rad(a), Scalar::Rat(b)) => {
                Scalar::Rad(frad(a, &Radical::from_rat(b.clone()))?)
            }
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(fsym(a, b)?),
            (Scalar::Rat(a), Scalar::Sym(b)) => {
                Scalar::Sym(fsym(&SymRat::constant(b.var, a.clone()), b)?)
            }
            (Scalar::Sym(a), Scalar::Rat(b)) => {
                Scalar::Sym(fsym(a, &SymRat::constant(a.var, b.clone()))?)
            }
            _ => {
                return Err(HopfError::ScalarKind(
                    "cannot mix radical and symbolic scalars".into(),
                ))
            }
        };
        Ok(Self::normalized(out))
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, |a, b| a + b, Radical::add, SymRat::add)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, |a, b| a * b, Radical::mul, SymRat::mul)
    }

    pub fn neg_val(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Rad(r) => Scalar::Rad(r.neg()),
            Scalar::Sym(s) => Scalar::Sym(s.neg()),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_val())
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        let out = match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    return Err(HopfError::ZeroDenominator);
                }
                Scalar::Rat(Rat::one() / r)
            }
            Scalar::Rad(r) => Scalar::Rad(r.inv()?),
            Scalar::Sym(s) => Scalar::Sym(s.inv()?),
        };
        Ok(Self::normalized(out))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.try_inv()?)
    }

    pub fn pow_u(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root; errors on negative or depth-exceeding input, and
    /// on symbolic input whose root does not live in Q(x)[sqrt(x)].
    pub fn sqrt(&self) -> Result<Scalar> {
        let out = match self {
            Scalar::Rat(r) => {
                if r.is_negative() {
                    return Err(HopfError::NegativeRadicand(r.to_string()));
                }
                Scalar::Rad(Radical::sqrt_rat(r)?)
            }
            Scalar::Rad(r) => Scalar::Rad(r.sqrt()?),
            Scalar::Sym(s) => Scalar::Sym(s.sqrt()?),
        };
        Ok(Self::normalized(out))
    }

    /// Exact sign for concrete scalars; errors for symbolic ones.
    pub fn sign(&self) -> Result<i32> {
        match self {
            Scalar::Rat(r) => Ok(if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }),
            Scalar::Rad(r) => Ok(r.sign()),
            Scalar::Sym(s) => {
                if s.is_zero() {
                    Ok(0)
                } else {
                    Err(HopfError::ScalarKind("sign of a symbolic scalar".into()))
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign().map(|s| s > 0).unwrap_or(false)
    }

    pub fn enclosure(&self, bits: u32) -> Result<Interval> {
        match self {
            Scalar::Rat(r) => Ok(Interval::point(r.clone())),
            Scalar::Rad(r) => Ok(r.enclosure(bits)),
            Scalar::Sym(_) => Err(HopfError::ScalarKind(
                "interval of a symbolic scalar".into(),
            )),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Rad(r) => r.to_f64(),
            Scalar::Sym(_) => f64::NAN,
        }
    }

    /// Substitute a concrete nonnegative value for the symbolic variable.
    /// Concrete scalars pass through unchanged.
    pub fn eval_at(&self, x: &Scalar) -> Result<Scalar> {
        match self {
            Scalar::Sym(s) => {
                let root = x.sqrt()?;
                let even = eval_ratfunc_at(&s.even, x)?;
                let odd = eval_ratfunc_at(&s.odd, x)?;
                Ok(&even + &(&odd * &root))
            }
            other => Ok(other.clone()),
        }
    }

    /// 15-significant-digit decimal string of a concrete scalar.
    pub fn approx_string(&self) -> String {
        match self {
            Scalar::Sym(_) => "symbolic".into(),
            _ => format!("{:.15e}", self.to_f64()),
        }
    }
}

pub fn eval_ratfunc_at(r: &RatFunc, x: &Scalar) -> Result<Scalar> {
    let eval_poly = |p: &QPoly| -> Scalar {
        let mut acc = Scalar::zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * x) + &Scalar::Rat(c.clone());
        }
        acc
    };
    let den = eval_poly(&r.den);
    if den.is_zero() {
        return Err(HopfError::ZeroDenominator);
    }
    eval_poly(&r.num).try_div(&den)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match self.try_sub(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs).expect("scalar arithmetic")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs).expect("scalar arithmetic")
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$imp(rhs).expect("scalar arithmetic")
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_val()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_val()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Rad(r) => write!(f, "{r}"),
            Scalar::Sym(s) => write!(f, "{s}"),
        }
    }
}

pub(crate) fn format_poly(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let s = if mono.is_empty() {
            format!("{c}")
        } else if c.is_one() {
            mono
        } else if (-c).is_one() {
            format!("-{mono}")
        } else {
            format!("{c}*{mono}")
        };
        parts.push(s);
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        if let Some(stripped) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

/// Parse the exact parameter syntax: rationals `a/b`, radicals
/// `sqrt(2)+sqrt(3)`, nested `sqrt(sqrt(6)+sqrt(7))`, parentheses and `* /`.
pub fn parse_exact(input: &str) -> Result<Scalar> {
    let mut p = Parser {
        s: input.as_bytes(),
        i: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(HopfError::Parse(format!(
            "trailing input at byte {}: {input}",
            p.i
        )));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    acc = acc.try_div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(HopfError::Parse("expected ')'".into()));
                }
                self.i += 1;
                Ok(v)
            }
            Some(b's') => {
                let rest = &self.s[self.i..];
                if rest.starts_with(b"sqrt") {
                    self.i += 4;
                    if self.peek() != Some(b'(') {
                        return Err(HopfError::Parse("expected '(' after sqrt".into()));
                    }
                    self.i += 1;
                    let v = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(HopfError::Parse("expected ')'".into()));
                    }
                    self.i += 1;
                    v.sqrt()
                } else {
                    Err(HopfError::Parse("unknown identifier".into()))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                let n: BigInt = text
                    .parse()
                    .map_err(|_| HopfError::Parse(format!("bad integer {text}")))?;
                Ok(Scalar::Rat(Rat::from_integer(n)))
            }
            other => Err(HopfError::Parse(format!(
                "unexpected token {:?}",
                other.map(|c| c as char)
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_examples() {
        assert_eq!(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
        // sqrt(8) -> 2 sqrt(2)
        assert_eq!(
            Scalar::int(8).sqrt().unwrap(),
            &Scalar::int(2) * &Scalar::sqrt_int(2)
        );
    }

    #[test]
    fn parse_radii() {
        let x = parse_exact("sqrt(2)+sqrt(3)").unwrap();
        let y = &Scalar::sqrt_int(2) + &Scalar::sqrt_int(3);
        assert_eq!(x, y);
        let nested = parse_exact("sqrt(sqrt(6)+sqrt(7))").unwrap();
        assert_eq!(&nested * &nested, &Scalar::sqrt_int(6) + &Scalar::sqrt_int(7));
        assert_eq!(parse_exact("3/4").unwrap(), Scalar::ratio(3, 4));
        assert_eq!(parse_exact("-2/3 + 1").unwrap(), Scalar::ratio(1, 3));
        assert!(parse_exact("sqrt(2").is_err());
    }

    #[test]
    fn symbolic_eval() {
        // mu^2 + 1 at t = 4 is 5; mu at t = 4 is 2
        let mu = Scalar::sym_root(SymVar::T);
        let expr = &(&mu * &mu) + &Scalar::one();
        assert_eq!(expr.eval_at(&Scalar::int(4)).unwrap(), Scalar::int(5));
        assert_eq!(mu.eval_at(&Scalar::int(4)).unwrap(), Scalar::int(2));
        // at t = 2, mu evaluates to sqrt(2)
        assert_eq!(mu.eval_at(&Scalar::int(2)).unwrap(), Scalar::sqrt_int(2));
    }
}
