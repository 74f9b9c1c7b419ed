//! Real quadratic-radical towers.
//!
//! An element lives in Q(sqrt(p_1), ..., sqrt(p_j))(sqrt(beta)) where the
//! p_i are distinct primes and beta is an optional positive element of the
//! prime level that is not a square there. Coordinates are rationals over
//! the basis of square-root products, so the representation is canonical:
//! an element is zero exactly when every coordinate is zero.

use super::interval::Interval;
use super::poly::Rat;
use crate::error::{HopfError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    /// Strictly increasing primes whose square roots generate the base level.
    pub primes: Vec<u64>,
    /// Optional nested generator sqrt(beta); `beta` is stored as coordinates
    /// over the prime-level basis (length 2^primes.len()).
    pub nested: Option<Vec<Rat>>,
}

impl Tower {
    pub fn rational() -> Self {
        Tower {
            primes: Vec::new(),
            nested: None,
        }
    }

    pub fn base_dim(&self) -> usize {
        1usize << self.primes.len()
    }

    pub fn dim(&self) -> usize {
        self.base_dim() * if self.nested.is_some() { 2 } else { 1 }
    }
}

#[derive(Clone, Debug)]
pub struct Radical {
    pub tower: Tower,
    /// Length = tower.dim(). Index i over the prime level encodes the subset
    /// of primes whose roots are multiplied; with a nested generator the
    /// upper half holds the sqrt(beta) block.
    pub coords: Vec<Rat>,
}

impl Radical {
    pub fn from_rat(x: Rat) -> Self {
        Radical {
            tower: Tower::rational(),
            coords: vec![x],
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Shrink the tower to the generators actually carried by the element:
    /// drop a vanishing nested block and unused primes.
    pub fn compress(&self) -> Radical {
        let base = self.tower.base_dim();
        let mut cur = self.clone();
        if cur.tower.nested.is_some() && cur.coords[base..].iter().all(|c| c.is_zero()) {
            cur = Radical {
                tower: Tower {
                    primes: cur.tower.primes.clone(),
                    nested: None,
                },
                coords: cur.coords[..base].to_vec(),
            };
        }
        if cur.tower.nested.is_some() {
            // nested radicand pins every prime; leave as is
            return cur;
        }
        let used: Vec<usize> = (0..cur.tower.primes.len())
            .filter(|k| {
                cur.coords
                    .iter()
                    .enumerate()
                    .any(|(i, c)| !c.is_zero() && i & (1 << k) != 0)
            })
            .collect();
        if used.len() == cur.tower.primes.len() {
            return cur;
        }
        let primes: Vec<u64> = used.iter().map(|&k| cur.tower.primes[k]).collect();
        let mut coords = vec![Rat::zero(); 1 << primes.len()];
        for (i, c) in cur.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mask = 0usize;
            for (new_k, &old_k) in used.iter().enumerate() {
                if i & (1 << old_k) != 0 {
                    mask |= 1 << new_k;
                }
            }
            coords[mask] = c.clone();
        }
        Radical {
            tower: Tower {
                primes,
                nested: None,
            },
            coords,
        }
    }

    /// sqrt(n) for a nonnegative integer, with square extraction.
    pub fn sqrt_int(n: u64) -> Self {
        let (outside, primes) = split_square(n);
        let mut tower = Tower {
            primes: primes.clone(),
            nested: None,
        };
        tower.primes.sort_unstable();
        let dim = tower.base_dim();
        let mut coords = vec![Rat::zero(); dim];
        coords[dim - 1] = Rat::from_integer(BigInt::from(outside));
        Radical { tower, coords }
    }

    /// sqrt of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b.
    pub fn sqrt_rat(q: &Rat) -> Result<Self> {
        if q.is_negative() {
            return Err(HopfError::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let a = q.numer().clone();
        let b = q.denom().clone();
        let ab = &a * &b;
        let n: u64 = (&ab)
            .try_into()
            .map_err(|_| HopfError::TowerDepth(format!("radicand too large: {ab}")))?;
        let mut r = Self::sqrt_int(n);
        let inv_b = Rat::new(BigInt::one(), b);
        for c in &mut r.coords {
            *c = &*c * &inv_b;
        }
        Ok(r)
    }

    fn embed(&self, target: &Tower) -> Vec<Rat> {
        // Re-express coordinates over a tower whose primes are a superset.
        let mut out = vec![Rat::zero(); target.dim()];
        let map_mask = |mask: usize| -> usize {
            let mut tm = 0usize;
            for (i, p) in self.tower.primes.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let j = target.primes.iter().position(|q| q == p).unwrap();
                    tm |= 1 << j;
                }
            }
            tm
        };
        let src_base = self.tower.base_dim();
        let tgt_base = target.base_dim();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (block, mask) = (i / src_base, i % src_base);
            out[block * tgt_base + map_mask(mask)] = c.clone();
        }
        out
    }

    fn common_tower(a: &Radical, b: &Radical) -> Result<Tower> {
        let mut primes: Vec<u64> = a.tower.primes.clone();
        for p in &b.tower.primes {
            if !primes.contains(p) {
                primes.push(*p);
            }
        }
        primes.sort_unstable();
        let base = Tower {
            primes,
            nested: None,
        };
        let nested = match (&a.tower.nested, &b.tower.nested) {
            (None, None) => None,
            (Some(x), None) => Some(
                Radical {
                    tower: Tower {
                        primes: a.tower.primes.clone(),
                        nested: None,
                    },
                    coords: x.clone(),
                }
                .embed(&base),
            ),
            (None, Some(y)) => Some(
                Radical {
                    tower: Tower {
                        primes: b.tower.primes.clone(),
                        nested: None,
                    },
                    coords: y.clone(),
                }
                .embed(&base),
            ),
            (Some(x), Some(y)) => {
                let ex = Radical {
                    tower: Tower {
                        primes: a.tower.primes.clone(),
                        nested: None,
                    },
                    coords: x.clone(),
                }
                .embed(&base);
                let ey = Radical {
                    tower: Tower {
                        primes: b.tower.primes.clone(),
                        nested: None,
                    },
                    coords: y.clone(),
                }
                .embed(&base);
                if ex != ey {
                    return Err(HopfError::TowerDepth(
                        "incompatible nested radicals".into(),
                    ));
                }
                Some(ex)
            }
        };
        Ok(Tower {
            primes: base.primes,
            nested,
        })
    }

    fn lift(&self, target: &Tower) -> Vec<Rat> {
        let base_only = Tower {
            primes: target.primes.clone(),
            nested: None,
        };
        let inner = if self.tower.nested.is_some() {
            self.embed(target)
        } else {
            let low = self.embed(&base_only);
            let mut out = vec![Rat::zero(); target.dim()];
            out[..low.len()].clone_from_slice(&low);
            out
        };
        inner
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let tower = Self::common_tower(self, other)?;
        let mut a = self.lift(&tower);
        let b = other.lift(&tower);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        Ok(Radical { tower, coords: a })
    }

    pub fn neg(&self) -> Self {
        Radical {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let tower = Self::common_tower(self, other)?;
        let a = self.lift(&tower);
        let b = other.lift(&tower);
        let base = tower.base_dim();
        let mut out = vec![Rat::zero(); tower.dim()];
        // Base-level product of two coordinate vectors.
        let mul_base = |x: &[Rat], y: &[Rat], acc: &mut [Rat]| {
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter().enumerate() {
                    if yj.is_zero() {
                        continue;
                    }
                    let mask = i ^ j;
                    let mut carried = xi * yj;
                    let common = i & j;
                    for (k, p) in tower.primes.iter().enumerate() {
                        if common & (1 << k) != 0 {
                            carried *= Rat::from_integer(BigInt::from(*p));
                        }
                    }
                    acc[mask] += carried;
                }
            }
        };
        match &tower.nested {
            None => mul_base(&a, &b, &mut out),
            Some(beta) => {
                let (a0, a1) = a.split_at(base);
                let (b0, b1) = b.split_at(base);
                // (a0 + a1 s)(b0 + b1 s) = a0 b0 + a1 b1 beta + (a0 b1 + a1 b0) s
                let mut lo = vec![Rat::zero(); base];
                mul_base(a0, b0, &mut lo);
                let mut cross = vec![Rat::zero(); base];
                mul_base(a1, b1, &mut cross);
                let mut crossb = vec![Rat::zero(); base];
                mul_base(&cross, beta, &mut crossb);
                for i in 0..base {
                    out[i] = &lo[i] + &crossb[i];
                }
                let mut hi1 = vec![Rat::zero(); base];
                mul_base(a0, b1, &mut hi1);
                let mut hi2 = vec![Rat::zero(); base];
                mul_base(a1, b0, &mut hi2);
                for i in 0..base {
                    out[base + i] = &hi1[i] + &hi2[i];
                }
            }
        }
        Ok(Radical { tower, coords: out })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(HopfError::ZeroDenominator);
        }
        let base = self.tower.base_dim();
        match &self.tower.nested {
            None => {
                let inv = inv_base(&self.coords, &self.tower.primes)?;
                Ok(Radical {
                    tower: self.tower.clone(),
                    coords: inv,
                })
            }
            Some(beta) => {
                // (a + b s)^-1 = (a - b s) / (a^2 - b^2 beta)
                let prime_tower = Tower {
                    primes: self.tower.primes.clone(),
                    nested: None,
                };
                let a = Radical {
                    tower: prime_tower.clone(),
                    coords: self.coords[..base].to_vec(),
                };
                let b = Radical {
                    tower: prime_tower.clone(),
                    coords: self.coords[base..].to_vec(),
                };
                let beta_r = Radical {
                    tower: prime_tower.clone(),
                    coords: beta.clone(),
                };
                let denom = a.mul(&a)?.add(&b.mul(&b)?.mul(&beta_r)?.neg())?;
                let dinv = denom.inv()?;
                let na = a.mul(&dinv)?;
                let nb = b.mul(&dinv)?.neg();
                let mut coords = na.lift(&Tower {
                    primes: self.tower.primes.clone(),
                    nested: None,
                });
                coords.extend(nb.lift(&Tower {
                    primes: self.tower.primes.clone(),
                    nested: None,
                }));
                Ok(Radical {
                    tower: self.tower.clone(),
                    coords,
                })
            }
        }
    }

    /// Square root within the tower, adjoining a nested generator when the
    /// value is irrational and does not denest.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.sign() < 0 {
            return Err(HopfError::NegativeRadicand(self.to_string()));
        }
        if let Some(q) = self.as_rational() {
            return Self::sqrt_rat(&q);
        }
        if self.tower.nested.is_some() {
            return Err(HopfError::TowerDepth(
                "sqrt of a depth-two radical".into(),
            ));
        }
        if let Some(d) = self.denest() {
            return Ok(d);
        }
        let tower = Tower {
            primes: self.tower.primes.clone(),
            nested: Some(self.coords.clone()),
        };
        let base = tower.base_dim();
        let mut coords = vec![Rat::zero(); 2 * base];
        coords[base] = Rat::one();
        Ok(Radical { tower, coords })
    }

    /// Attempt to write a + b sqrt(d) (single active prime) as (u + v sqrt(d))^2.
    fn denest(&self) -> Option<Self> {
        let active: Vec<usize> = (0..self.tower.primes.len())
            .filter(|k| {
                self.coords
                    .iter()
                    .enumerate()
                    .any(|(i, c)| !c.is_zero() && i & (1 << k) != 0)
            })
            .collect();
        if active.len() != 1 {
            return None;
        }
        let k = active[0];
        let d = Rat::from_integer(BigInt::from(self.tower.primes[k]));
        let a = self.coords[0].clone();
        let b = self.coords[1 << k].clone();
        // (u + v sqrt(d))^2 = u^2 + v^2 d + 2uv sqrt(d)
        // so u^2 solves U^2 - a U + b^2 d / 4 = 0.
        let disc = &a * &a - &b * &b * &d;
        let sq = rational_sqrt(&disc)?;
        for sgn in [1i64, -1] {
            let u2 = (&a + Rat::from_integer(BigInt::from(sgn)) * &sq)
                / Rat::from_integer(BigInt::from(2));
            if u2.is_negative() {
                continue;
            }
            if let Some(u) = rational_sqrt(&u2) {
                if u.is_zero() {
                    continue;
                }
                let v = &b / (Rat::from_integer(BigInt::from(2)) * &u);
                let mut cand = Radical {
                    tower: self.tower.clone(),
                    coords: vec![Rat::zero(); self.tower.dim()],
                };
                cand.coords[0] = u;
                cand.coords[1 << k] = v;
                if cand.sign() > 0 {
                    return Some(cand);
                }
                return Some(cand.neg());
            }
        }
        None
    }

    /// Interval enclosure at the requested precision.
    pub fn enclosure(&self, bits: u32) -> Interval {
        let base = self.tower.base_dim();
        let eval_base = |coords: &[Rat]| -> Interval {
            let mut acc = Interval::point(Rat::zero());
            for (i, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut term = Interval::point(Rat::one());
                for (k, p) in self.tower.primes.iter().enumerate() {
                    if i & (1 << k) != 0 {
                        let sp = Interval::point(Rat::from_integer(BigInt::from(*p))).sqrt(bits);
                        term = term.mul(&sp);
                    }
                }
                acc = acc.add(&term.scale(c));
            }
            acc
        };
        match &self.tower.nested {
            None => eval_base(&self.coords),
            Some(beta) => {
                let lo = eval_base(&self.coords[..base]);
                let hi = eval_base(&self.coords[base..]);
                let s = eval_base(beta).sqrt(bits);
                lo.add(&hi.mul(&s))
            }
        }
    }

    /// Exact sign: -1, 0, +1. Zero is syntactic (all coordinates zero, which
    /// is faithful because generators are independent by construction);
    /// otherwise the enclosure is refined until it excludes zero.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut bits = 24u32;
        loop {
            if let Some(s) = self.enclosure(bits).sign() {
                if s != 0 {
                    return s;
                }
            }
            bits *= 2;
            assert!(bits <= 1 << 14, "sign refinement did not converge: {self}");
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).to_f64()
    }
}

fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rat::zero());
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Factor n = s^2 * f with f square-free; returns (s, prime factors of f).
fn split_square(mut n: u64) -> (u64, Vec<u64>) {
    let mut outside = 1u64;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            outside *= p.pow(e / 2);
            if e % 2 == 1 {
                primes.push(p);
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    (outside, primes)
}

/// Inverse at the prime level by peeling off one generator at a time.
fn inv_base(coords: &[Rat], primes: &[u64]) -> Result<Vec<Rat>> {
    if primes.is_empty() {
        if coords[0].is_zero() {
            return Err(HopfError::ZeroDenominator);
        }
        return Ok(vec![Rat::one() / &coords[0]]);
    }
    let half = coords.len() / 2;
    let p = *primes.last().unwrap();
    let lower = &primes[..primes.len() - 1];
    let a = &coords[..half];
    let b = &coords[half..];
    // x = a + b sqrt(p); x^-1 = (a - b sqrt(p)) / (a^2 - p b^2)
    let a2 = mul_vec(a, a, lower);
    let b2 = mul_vec(b, b, lower);
    let mut denom = vec![Rat::zero(); half];
    let pr = Rat::from_integer(BigInt::from(p));
    for i in 0..half {
        denom[i] = &a2[i] - &pr * &b2[i];
    }
    if denom.iter().all(|c| c.is_zero()) {
        return Err(HopfError::ZeroDenominator);
    }
    let dinv = inv_base(&denom, lower)?;
    let na = mul_vec(a, &dinv, lower);
    let nb = mul_vec(b, &dinv, lower);
    let mut out = Vec::with_capacity(coords.len());
    out.extend(na);
    out.extend(nb.into_iter().map(|c| -c));
    Ok(out)
}

fn mul_vec(x: &[Rat], y: &[Rat], primes: &[u64]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); x.len()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let mut c = xi * yj;
            for (k, p) in primes.iter().enumerate() {
                if i & j & (1 << k) != 0 {
                    c *= Rat::from_integer(BigInt::from(*p));
                }
            }
            out[i ^ j] += c;
        }
    }
    out
}

impl PartialEq for Radical {
    fn eq(&self, other: &Self) -> bool {
        match self.add(&other.neg()) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.tower.base_dim();
        let mut parts: Vec<String> = Vec::new();
        let term = |c: &Rat, rad: String| -> String {
            if rad.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                rad
            } else if (-c).is_one() {
                format!("-{rad}")
            } else {
                format!("{c}*{rad}")
            }
        };
        let base_rad = |mask: usize| -> String {
            let mut inside = 1u64;
            for (k, p) in self.tower.primes.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    inside *= p;
                }
            }
            if inside == 1 {
                String::new()
            } else {
                format!("sqrt({inside})")
            }
        };
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (block, mask) = (i / base, i % base);
            let mut rad = base_rad(mask);
            if block == 1 {
                let beta = Radical {
                    tower: Tower {
                        primes: self.tower.primes.clone(),
                        nested: None,
                    },
                    coords: self.tower.nested.clone().unwrap(),
                };
                let nested = format!("sqrt({beta})");
                rad = if rad.is_empty() {
                    nested
                } else {
                    format!("{rad}*{nested}")
                };
            }
            parts.push(term(c, rad));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::{rat, rat_i};

    fn r(n: i64) -> Rat {
        rat_i(n)
    }

    #[test]
    fn sqrt8_is_2sqrt2() {
        let x = Radical::sqrt_int(8);
        let two_sqrt2 = Radical::sqrt_int(2)
            .mul(&Radical::from_rat(r(2)))
            .unwrap();
        assert_eq!(x, two_sqrt2);
    }

    #[test]
    fn sqrt6_lives_on_two_primes() {
        let s2 = Radical::sqrt_int(2);
        let s3 = Radical::sqrt_int(3);
        let s6 = Radical::sqrt_int(6);
        assert_eq!(s2.mul(&s3).unwrap(), s6);
        assert!(s2.mul(&s3).unwrap().add(&s6.neg()).unwrap().is_zero());
    }

    #[test]
    fn field_inverse() {
        // (sqrt(2)+sqrt(3))^-1 = sqrt(3)-sqrt(2)
        let x = Radical::sqrt_int(2).add(&Radical::sqrt_int(3)).unwrap();
        let inv = x.inv().unwrap();
        let expect = Radical::sqrt_int(3).add(&Radical::sqrt_int(2).neg()).unwrap();
        assert_eq!(inv, expect);
        let one = x.mul(&inv).unwrap();
        assert_eq!(one.as_rational(), Some(r(1)));
    }

    #[test]
    fn signs() {
        // sqrt(2)+sqrt(3)-3 > 0
        let x = Radical::sqrt_int(2)
            .add(&Radical::sqrt_int(3))
            .unwrap()
            .add(&Radical::from_rat(r(-3)))
            .unwrap();
        assert_eq!(x.sign(), 1);
        // 1 - sqrt(2) < 0
        let y = Radical::from_rat(r(1)).add(&Radical::sqrt_int(2).neg()).unwrap();
        assert_eq!(y.sign(), -1);
        // sqrt(2)*sqrt(3) - sqrt(6) = 0
        let z = Radical::sqrt_int(2)
            .mul(&Radical::sqrt_int(3))
            .unwrap()
            .add(&Radical::sqrt_int(6).neg())
            .unwrap();
        assert_eq!(z.sign(), 0);
    }

    #[test]
    fn nested_sqrt_and_inverse() {
        // x = sqrt(sqrt(6)+sqrt(7)); x^2 recovers the radicand, x*x^-1 = 1.
        let inner = Radical::sqrt_int(6).add(&Radical::sqrt_int(7)).unwrap();
        let x = inner.sqrt().unwrap();
        assert_eq!(x.mul(&x).unwrap(), inner);
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(&xi).unwrap().as_rational(), Some(r(1)));
        assert!(x.sign() > 0);
    }

    #[test]
    fn denesting_when_possible() {
        // sqrt(3 + 2 sqrt(2)) = 1 + sqrt(2)
        let inner = Radical::from_rat(r(3))
            .add(&Radical::sqrt_int(2).mul(&Radical::from_rat(r(2))).unwrap())
            .unwrap();
        let x = inner.sqrt().unwrap();
        assert!(x.tower.nested.is_none());
        let expect = Radical::from_rat(r(1)).add(&Radical::sqrt_int(2)).unwrap();
        assert_eq!(x, expect);
    }

    #[test]
    fn sqrt_of_rational() {
        let x = Radical::sqrt_rat(&rat(9, 4)).unwrap();
        assert_eq!(x.as_rational(), Some(rat(3, 2)));
        let y = Radical::sqrt_rat(&rat(1, 2)).unwrap();
        // sqrt(1/2) = sqrt(2)/2
        let expect = Radical::sqrt_int(2).mul(&Radical::from_rat(rat(1, 2))).unwrap();
        assert_eq!(y, expect);
    }
}
