//! Real algebraic numbers as (squarefree integer polynomial, isolating
//! interval) pairs.
//!
//! The defining polynomial is primitive with positive leading
//! coefficient and squarefree; the open interval contains exactly one of
//! its real roots. Refinement never changes the denoted value. Field
//! arithmetic on these values happens inside a `NumberFieldContext`; this
//! type is the exchange format for inputs and outputs.

use crate::poly::roots::{isolate_real_roots, refine_interval, SturmChain};
use crate::poly::IntPoly;
use crate::rational::{rat_is_integer, RatInterval, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    defining_poly: IntPoly,
    interval: RatInterval,
}

impl RealAlgebraic {
    /// Builds a value from a defining polynomial and isolating interval.
    /// The polynomial must be squarefree with exactly one root in the
    /// open interval.
    pub fn new(poly: IntPoly, interval: RatInterval) -> Result<Self> {
        if poly.is_zero() || poly.degree() == 0 {
            return Err(Error::InvalidAlgebraic(
                "defining polynomial must be nonconstant".into(),
            ));
        }
        let poly = poly.primitive();
        if !poly.is_squarefree() {
            return Err(Error::InvalidAlgebraic(
                "defining polynomial is not squarefree".into(),
            ));
        }
        let pr = poly.to_rat();
        let mut iv = interval;
        // Nudge endpoints off roots so Sturm counts are unambiguous.
        if pr.eval(&iv.lo).is_zero() || pr.eval(&iv.hi).is_zero() {
            iv = widen_off_roots(&pr, iv);
        }
        let chain = SturmChain::new(&pr);
        match chain.count_roots_open(&iv.lo, &iv.hi) {
            1 => Ok(RealAlgebraic {
                defining_poly: poly,
                interval: iv,
            }),
            0 => Err(Error::InvalidAlgebraic(
                "isolating interval contains no root".into(),
            )),
            _ => Err(Error::InvalidAlgebraic(
                "isolating interval contains more than one root".into(),
            )),
        }
    }

    pub fn from_rational(x: Rational) -> Self {
        let poly = IntPoly::new(vec![-x.numer().clone(), x.denom().clone()]);
        let lo = &x - BigRational::new(BigInt::from(1), BigInt::from(2));
        let hi = &x + BigRational::new(BigInt::from(1), BigInt::from(2));
        RealAlgebraic {
            defining_poly: poly,
            interval: RatInterval::new(lo, hi),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The golden ratio (1 + sqrt 5)/2.
    pub fn phi() -> Self {
        RealAlgebraic {
            defining_poly: IntPoly::from_i64(&[-1, -1, 1]),
            interval: RatInterval::new(
                BigRational::new(3.into(), 2.into()),
                BigRational::new(2.into(), 1.into()),
            ),
        }
    }

    /// Positive square root of a non-negative rational.
    pub fn sqrt_rational(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::domain("square root of a negative value"));
        }
        if x.is_zero() {
            return Ok(Self::from_rational(Rational::zero()));
        }
        // Exact square detection: both numerator and denominator squares.
        let ns = x.numer().sqrt();
        let ds = x.denom().sqrt();
        if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
            return Ok(Self::from_rational(BigRational::new(ns, ds)));
        }
        let poly = IntPoly::new(vec![-x.numer().clone(), BigInt::zero(), x.denom().clone()]);
        let ub = if x >= &Rational::from_integer(1.into()) {
            x.clone()
        } else {
            Rational::from_integer(1.into())
        };
        Self::new(poly.primitive(), RatInterval::new(Rational::zero(), ub))
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.defining_poly
    }

    pub fn interval(&self) -> &RatInterval {
        &self.interval
    }

    /// Rational value when the defining polynomial is linear.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.defining_poly.degree() == 1 {
            Some(BigRational::new(
                -self.defining_poly.coeff(0),
                self.defining_poly.coeff(1),
            ))
        } else {
            None
        }
    }

    /// A refined copy whose interval width is at most `width`.
    pub fn refined(&self, width: &Rational) -> Self {
        if let Some(r) = self.as_rational() {
            let half = width / BigRational::from_integer(2.into());
            return RealAlgebraic {
                defining_poly: self.defining_poly.clone(),
                interval: RatInterval::new(&r - &half, &r + &half),
            };
        }
        RealAlgebraic {
            defining_poly: self.defining_poly.clone(),
            interval: refine_interval(&self.defining_poly, &self.interval, width),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let refined = self.refined(&BigRational::new(1.into(), BigInt::from(1u64 << 60)));
        refined.interval.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero_value(&self) -> bool {
        self.as_rational().map(|r| r.is_zero()).unwrap_or(false)
    }

    /// True when the value is an integer; used by alphabet construction.
    pub fn integer_value(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        rat_is_integer(&r).then(|| r.to_integer())
    }

    pub fn degree(&self) -> usize {
        self.defining_poly.degree()
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        if self.defining_poly != other.defining_poly {
            // Different squarefree defining polynomials can still denote
            // the same real only via a common factor; compare through the
            // canonical route instead: same value iff intervals overlap
            // and the gcd has a root there.
            let g = self
                .defining_poly
                .to_rat()
                .gcd(&other.defining_poly.to_rat());
            if g.degree() == 0 {
                return false;
            }
            let Some(iv) = self.interval.intersect(&other.interval) else {
                return false;
            };
            let gi = g.clear_denominators();
            let chain = SturmChain::new(&gi.to_rat());
            // Equal values would be a common root (a root of the gcd)
            // lying in both isolating intervals, hence in the
            // intersection; conversely a gcd root in the intersection is
            // the unique root each interval isolates.
            return chain.count_roots_open(&iv.lo, &iv.hi) >= 1;
        }
        let Some(iv) = self.interval.intersect(&other.interval) else {
            return false;
        };
        let chain = SturmChain::new(&self.defining_poly.to_rat());
        chain.count_roots_open(&iv.lo, &iv.hi) == 1
    }
}

impl Eq for RealAlgebraic {}

fn widen_off_roots(pr: &crate::poly::RatPoly, iv: RatInterval) -> RatInterval {
    let mut lo = iv.lo;
    let mut hi = iv.hi;
    let step = (&hi - &lo) / BigRational::from_integer(BigInt::from(1024));
    let step = if step.is_zero() {
        BigRational::new(1.into(), 1024.into())
    } else {
        step
    };
    while pr.eval(&lo).is_zero() {
        lo -= &step;
    }
    while pr.eval(&hi).is_zero() {
        hi += &step;
    }
    RatInterval::new(lo, hi)
}

/// All real roots of a nonzero rational polynomial, ascending, as exact
/// real algebraic numbers over the squarefree part.
pub fn real_roots(p: &crate::poly::RatPoly) -> Result<Vec<RealAlgebraic>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.clear_denominators().squarefree_part();
    if sf.degree() == 0 {
        return Ok(vec![]);
    }
    let intervals = isolate_real_roots(&sf);
    let mut out = Vec::with_capacity(intervals.len());
    for iv in intervals {
        out.push(RealAlgebraic::new(sf.clone(), iv)?);
    }
    Ok(out)
}

impl std::fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{r}")
        } else {
            write!(
                f,
                "root of {} in ({}, {})",
                self.defining_poly.display(),
                self.interval.lo,
                self.interval.hi
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn sqrt_of_square_is_rational() {
        let v = RealAlgebraic::sqrt_rational(&rat(4, 9)).unwrap();
        assert_eq!(v.as_rational(), Some(rat(2, 3)));
    }

    #[test]
    fn sqrt3_value() {
        let v = RealAlgebraic::sqrt_rational(&rat_int(3)).unwrap();
        assert!((v.to_f64() - 1.732_050_807_568_877).abs() < 1e-12);
        assert_eq!(v.degree(), 2);
    }

    #[test]
    fn real_roots_of_quadratics() {
        let p = IntPoly::from_i64(&[-1, -1, 1]).to_rat();
        let roots = real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].to_f64() < roots[1].to_f64());
        let none = real_roots(&IntPoly::from_i64(&[1, 0, 1]).to_rat()).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn equality_same_root_different_intervals() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let a = RealAlgebraic::new(p.clone(), RatInterval::new(rat_int(1), rat_int(2))).unwrap();
        let b =
            RealAlgebraic::new(p.clone(), RatInterval::new(rat(14, 10), rat(3, 2))).unwrap();
        assert_eq!(a, b);
        let c = RealAlgebraic::new(p, RatInterval::new(rat_int(-2), rat_int(-1))).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn phi_satisfies_its_polynomial() {
        let phi = RealAlgebraic::phi();
        let x = phi.to_f64();
        assert!((x * x - x - 1.0).abs() < 1e-12);
    }
}
