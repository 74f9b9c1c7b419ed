//! Certified interval arithmetic with dyadic-refinable square roots.
//!
//! Endpoints are exact rationals; `sqrt` produces enclosures whose width is
//! controlled by a precision parameter in bits, so any radical expression can
//! be narrowed until its sign is decided.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Rat = BigRational;

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if decided: Some(1), Some(-1), or None when 0 is interior.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn neg(&self) -> Self {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Enclosure of the square root, valid for nonnegative inputs; the lower
    /// endpoint is clamped at zero. `bits` controls the dyadic grid.
    pub fn sqrt(&self, bits: u32) -> Self {
        let lo = if self.lo.is_negative() {
            Rat::zero()
        } else {
            sqrt_lower(&self.lo, bits)
        };
        let hi = sqrt_upper(&self.hi.clone().max(Rat::zero()), bits);
        Interval::new(lo, hi)
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Dyadic lower bound for sqrt(q), q >= 0: floor(sqrt(q * 4^bits)) / 2^bits.
fn sqrt_lower(q: &Rat, bits: u32) -> Rat {
    if q.is_zero() {
        return Rat::zero();
    }
    let scale = BigInt::one() << (2 * bits as usize);
    // sqrt(a/b) = sqrt(a*b)/b; work with the integer a*b*4^bits.
    let a = q.numer();
    let b = q.denom();
    let s = (a * b * &scale).sqrt();
    Rat::new(s, b * (BigInt::one() << bits as usize))
}

fn sqrt_upper(q: &Rat, bits: u32) -> Rat {
    if q.is_zero() {
        return Rat::zero();
    }
    let scale = BigInt::one() << (2 * bits as usize);
    let a = q.numer();
    let b = q.denom();
    let s = (a * b * &scale).sqrt() + BigInt::one();
    Rat::new(s, b * (BigInt::one() << bits as usize))
}
