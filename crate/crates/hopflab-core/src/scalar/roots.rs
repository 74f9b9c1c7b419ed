//! Real root isolation by Sturm chains, with multiplicities from the
//! square-free decomposition.

use super::interval::Interval;
use super::poly::{QPoly, Rat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Half-open search domain; `None` means unbounded on that side.
#[derive(Clone, Debug, Default)]
pub struct Domain {
    pub lo: Option<Rat>,
    pub hi: Option<Rat>,
}

impl Domain {
    pub fn all() -> Self {
        Domain { lo: None, hi: None }
    }

    pub fn positive() -> Self {
        Domain {
            lo: Some(Rat::zero()),
            hi: None,
        }
    }

    pub fn open(lo: Rat, hi: Rat) -> Self {
        Domain {
            lo: Some(lo),
            hi: Some(hi),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    /// Isolating interval (lo, hi]; for a rational root lo == hi.
    pub interval: Interval,
    pub multiplicity: usize,
    /// Exact value when the root is rational.
    pub rational: Option<Rat>,
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_variations_at(chain: &[QPoly], x: &Rat) -> usize {
    let mut vars = 0;
    let mut last = 0i32;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                vars += 1;
            }
            last = s;
        }
    }
    vars
}

fn sign_variations_at_inf(chain: &[QPoly], positive: bool) -> usize {
    let mut vars = 0;
    let mut last = 0i32;
    for p in chain {
        let s = p.sign_at_inf(positive);
        if s != 0 {
            if last != 0 && s != last {
                vars += 1;
            }
            last = s;
        }
    }
    vars
}

/// A bound beyond which a polynomial has no roots (Cauchy bound).
fn root_bound(p: &QPoly) -> Rat {
    let lead = p.leading();
    let mut m = Rat::zero();
    for c in p.coeffs() {
        let a = (c / &lead).abs();
        if a > m {
            m = a;
        }
    }
    m + Rat::one()
}

/// Isolate the real roots of `p` inside `domain`, returned in increasing
/// order with exact multiplicities. Rational roots are reported exactly.
pub fn isolate_real_roots(p: &QPoly, domain: &Domain) -> Vec<IsolatedRoot> {
    let mut out = Vec::new();
    if p.is_zero() || p.is_constant() {
        return out;
    }
    if let (Some(lo), Some(hi)) = (&domain.lo, &domain.hi) {
        if lo >= hi {
            return out;
        }
    }
    for (factor, mult) in p.squarefree_decomposition() {
        for root in isolate_squarefree(&factor, domain) {
            out.push(IsolatedRoot {
                interval: root.0,
                multiplicity: mult,
                rational: root.1,
            });
        }
    }
    out.sort_by(|a, b| a.interval.lo.cmp(&b.interval.lo));
    out
}

fn isolate_squarefree(p: &QPoly, domain: &Domain) -> Vec<(Interval, Option<Rat>)> {
    let mut out = Vec::new();
    // Peel off rational roots first so bisection only separates the rest.
    let mut q = p.clone();
    let mut rational_roots = Vec::new();
    for r in p.rational_roots() {
        if in_domain(&r, domain) {
            rational_roots.push(r.clone());
        }
        let lin = QPoly::from_vec(vec![-r.clone(), Rat::one()]);
        let (quot, rem) = q.div_rem(&lin);
        debug_assert!(rem.is_zero());
        q = quot;
    }
    for r in rational_roots {
        out.push((Interval::point(r.clone()), Some(r)));
    }
    if !q.is_constant() {
        let chain = sturm_chain(&q);
        let bound = root_bound(&q);
        let lo = domain.lo.clone().unwrap_or_else(|| -bound.clone());
        let hi = domain.hi.clone().unwrap_or_else(|| bound.clone());
        if lo < hi {
            let vl = sign_variations_bounded(&chain, &lo, domain.lo.is_none());
            let vh = sign_variations_bounded(&chain, &hi, domain.hi.is_none());
            bisect(&chain, &q, lo, hi, vl, vh, &mut out);
        }
    }
    out.sort_by(|a, b| a.0.lo.cmp(&b.0.lo));
    out
}

fn sign_variations_bounded(chain: &[QPoly], x: &Rat, unbounded: bool) -> usize {
    if unbounded {
        if x.is_negative() {
            sign_variations_at_inf(chain, false)
        } else {
            sign_variations_at_inf(chain, true)
        }
    } else {
        sign_variations_at(chain, x)
    }
}

fn in_domain(x: &Rat, domain: &Domain) -> bool {
    if let Some(lo) = &domain.lo {
        if x <= lo {
            return false;
        }
    }
    if let Some(hi) = &domain.hi {
        if x > hi {
            return false;
        }
    }
    true
}

fn bisect(
    chain: &[QPoly],
    p: &QPoly,
    lo: Rat,
    hi: Rat,
    vl: usize,
    vh: usize,
    out: &mut Vec<(Interval, Option<Rat>)>,
) {
    if vl <= vh {
        return;
    }
    let count = vl - vh;
    if count == 1 {
        out.push((Interval::new(lo, hi), None));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    // Nudge off a root of the chain head if we landed on one.
    let mid = if p.eval(&mid).is_zero() {
        (&lo + &mid) / BigRational::from_integer(BigInt::from(2))
    } else {
        mid
    };
    let vm = sign_variations_at(chain, &mid);
    bisect(chain, p, lo, mid.clone(), vl, vm, out);
    bisect(chain, p, mid, hi, vm, vh, out);
}

/// Narrow an isolating interval of `p` below `width` by bisection.
pub fn refine_root(p: &QPoly, iv: &Interval, width: &Rat) -> Interval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return iv.clone();
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mut slo = p.eval(&lo);
    if slo.is_zero() {
        return Interval::point(lo);
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let sm = p.eval(&mid);
        if sm.is_zero() {
            return Interval::point(mid);
        }
        if (slo.is_positive() && sm.is_positive()) || (slo.is_negative() && sm.is_negative()) {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    Interval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::{rat, rat_i};

    #[test]
    fn multiplicities_and_positions() {
        // (2t - 3)(t - 1)^2 on (0, inf): roots 3/2 (mult 1) and 1 (mult 2)
        let p = QPoly::from_ints(&[-3, 2]).mul(&QPoly::from_ints(&[-1, 1]).pow(2));
        let roots = isolate_real_roots(&p, &Domain::positive());
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].rational, Some(rat_i(1)));
        assert_eq!(roots[0].multiplicity, 2);
        assert_eq!(roots[1].rational, Some(rat(3, 2)));
        assert_eq!(roots[1].multiplicity, 1);
    }

    #[test]
    fn empty_domain_gives_no_roots() {
        let p = QPoly::from_ints(&[-1, 1]);
        let roots = isolate_real_roots(&p, &Domain::open(rat_i(5), rat_i(3)));
        assert!(roots.is_empty());
    }

    #[test]
    fn irrational_roots_isolated() {
        // t^2 - 2: two irrational roots, one positive
        let p = QPoly::from_ints(&[-2, 0, 1]);
        let all = isolate_real_roots(&p, &Domain::all());
        assert_eq!(all.len(), 2);
        let pos = isolate_real_roots(&p, &Domain::positive());
        assert_eq!(pos.len(), 1);
        let refined = refine_root(&p, &pos[0].interval, &rat(1, 1 << 20));
        assert!(refined.lo.clone() * refined.lo.clone() <= rat_i(2));
        assert!(refined.hi.clone() * refined.hi.clone() >= rat_i(2));
    }

    #[test]
    fn curvature_condition_roots() {
        // the class-B two-type condition at m = 2 in x = kappa^2:
        // x^3 - 4x^2 - 56x + 192, positive roots x = 8 and x = 2(sqrt(7)-1)
        let p = QPoly::from_ints(&[192, -56, -4, 1]);
        let roots = isolate_real_roots(&p, &Domain::positive());
        assert_eq!(roots.len(), 2);
        let radical = roots
            .iter()
            .find(|r| r.rational.is_none())
            .expect("one irrational root");
        // refine and compare against 2 sqrt(7) - 2 by interval containment
        let refined = refine_root(&p, &radical.interval, &rat(1, 1 << 30));
        let target = crate::scalar::Scalar::sqrt_int(7);
        let target = &(&crate::scalar::Scalar::int(2) * &target) - &crate::scalar::Scalar::int(2);
        let enc = target.enclosure(64).unwrap();
        assert!(refined.lo <= enc.hi && enc.lo <= refined.hi);
        assert!(roots.iter().any(|r| r.rational == Some(rat_i(8))));
        // the tube condition quadratic factor at K = L = 3:
        // 15t^2 - 34t + 15 with roots 3/5 and 5/3
        let q = QPoly::from_ints(&[15, -34, 15]);
        let roots = isolate_real_roots(&q, &Domain::positive());
        let vals: Vec<_> = roots.iter().map(|r| r.rational.clone().unwrap()).collect();
        assert_eq!(vals, vec![rat(3, 5), rat(5, 3)]);
    }

    #[test]
    fn sign_change_on_odd_multiplicity() {
        let p = QPoly::from_ints(&[-6, 11, -6, 1]); // (t-1)(t-2)(t-3)
        let roots = isolate_real_roots(&p, &Domain::all());
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert_eq!(r.multiplicity % 2, 1);
        }
    }
}
