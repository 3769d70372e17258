//! Certified real-root isolation via Sturm sequences.
//!
//! Isolation is exact: endpoints are rational, sign counts come from the
//! Sturm chain, and every returned interval contains exactly one real root
//! of the (squarefree) input.

use super::{IntPoly, RatPoly};
use crate::rational::{rat_int, RatInterval, Rational};
use num_traits::{Signed, Zero};

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut prev: Option<bool> = None;
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(ps) = prev {
                if ps != s {
                    count += 1;
                }
            }
            prev = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in the open interval (a, b).
    pub fn count_roots_open(&self, a: &Rational, b: &Rational) -> usize {
        let in_half_open = self.count_roots(a, b);
        let b_is_root = self.chain[0].eval(b).is_zero();
        in_half_open - usize::from(b_is_root)
    }
}

/// Isolates all real roots of a squarefree polynomial. Returns open
/// intervals (lo, hi) in ascending order, each containing exactly one
/// root, with p nonzero at both endpoints.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<RatInterval> {
    assert!(!p.is_zero(), "zero polynomial");
    if p.degree() == 0 {
        return vec![];
    }
    let pr = p.to_rat();
    let chain = SturmChain::new(&pr);
    let bound = p.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    // Nudge endpoints off roots (the Cauchy bound is strict, but stay safe).
    while pr.eval(&lo).is_zero() {
        lo -= Rational::from_integer(1.into());
    }
    while pr.eval(&hi).is_zero() {
        hi += Rational::from_integer(1.into());
    }
    let mut out = Vec::new();
    subdivide(&pr, &chain, lo, hi, &mut out);
    out
}

fn subdivide(
    p: &RatPoly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    out: &mut Vec<RatInterval>,
) {
    let count = chain.count_roots(&lo, &hi);
    if count == 0 {
        return;
    }
    if count == 1 && !p.eval(&hi).is_zero() {
        out.push(RatInterval::new(lo, hi));
        return;
    }
    let mut mid = (&lo + &hi) / rat_int(2);
    // Land the split point off a root so the two halves stay open-ended.
    while p.eval(&mid).is_zero() {
        mid = (&lo + &mid) / rat_int(2);
    }
    subdivide(p, chain, lo, mid.clone(), out);
    subdivide(p, chain, mid, hi, out);
}

/// Shrinks an isolating interval of `p` below the requested width by
/// bisection, preserving the isolated root. `p` must be squarefree and
/// nonzero at the interval endpoints.
pub fn refine_interval(p: &IntPoly, iv: &RatInterval, target_width: &Rational) -> RatInterval {
    let pr = p.to_rat();
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = pr.eval(&lo).is_positive();
    debug_assert!(!pr.eval(&lo).is_zero() && !pr.eval(&hi).is_zero());
    while &(&hi - &lo) > target_width {
        let mid = (&lo + &hi) / rat_int(2);
        let v = pr.eval(&mid);
        if v.is_zero() {
            // Exact rational root: clamp a tiny interval around it.
            let eps = std::cmp::min(target_width.clone(), (&hi - &lo) / rat_int(4));
            let nl = std::cmp::max(lo.clone(), &mid - &eps);
            let nh = std::cmp::min(hi.clone(), &mid + &eps);
            // Endpoints may themselves be roots only if they hit mid again;
            // perturb inward until clean.
            let mut nl = nl;
            let mut nh = nh;
            while pr.eval(&nl).is_zero() {
                nl = (&nl + &mid) / rat_int(2) - (&mid - &nl) / rat_int(4);
                if nl <= lo {
                    nl = lo.clone();
                    break;
                }
            }
            while pr.eval(&nh).is_zero() {
                nh = (&nh + &mid) / rat_int(2) + (&nh - &mid) / rat_int(4);
                if nh >= hi {
                    nh = hi.clone();
                    break;
                }
            }
            return RatInterval::new(nl, nh);
        }
        if v.is_positive() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn golden_ratio_roots() {
        let p = IntPoly::from_i64(&[-1, -1, 1]); // X^2 - X - 1
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        // Open intervals: a shared endpoint is allowed (it is never a root).
        assert!(roots[0].hi <= roots[1].lo);
        let phi = refine_interval(&p, &roots[1], &rat(1, 1_000_000));
        let mid = phi.to_f64();
        assert!((mid - 1.618_033_988_749_895).abs() < 1e-5);
    }

    #[test]
    fn no_real_roots() {
        let p = IntPoly::from_i64(&[1, 0, 1]); // X^2 + 1
        assert!(isolate_real_roots(&p).is_empty());
    }

    #[test]
    fn cubic_single_root() {
        let p = IntPoly::from_i64(&[-1, 1, -2, 1]); // X^3 - 2X^2 + X - 1
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 1);
        let r = refine_interval(&p, &roots[0], &rat(1, 100_000_000));
        assert!((r.to_f64() - 1.754_877_666).abs() < 1e-6);
    }

    #[test]
    fn rational_root_exact_hit() {
        // (X - 1/2)(X^2 - 2) cleared: (2X - 1)(X^2 - 2)
        let p = IntPoly::from_i64(&[-1, 2]).mul(&IntPoly::from_i64(&[-2, 0, 1]));
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        for iv in &roots {
            let refined = refine_interval(&p, &iv.clone(), &rat(1, 1 << 20));
            assert!(refined.width() <= rat(1, 1 << 20));
        }
    }
}
