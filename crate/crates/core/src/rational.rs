//! Rational scalars and certified rational intervals.
//!
//! `Rational` is an arbitrary-precision signed fraction kept in lowest
//! terms with positive denominator (both guaranteed by `num_rational`).
//! `RatInterval` is a closed interval with rational endpoints; it is the
//! only approximation device used anywhere in the crate, so every numeric
//! claim can be traced back to an exact enclosure.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact floor of a rational number.
pub fn rat_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// True when `x` denotes an integer.
pub fn rat_is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Parses "p/q" or "p" into a rational. Used by digit-word and CLI plumbing.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Lower bound for sqrt(x) with error below 2^-bits. Requires x >= 0.
pub fn sqrt_lower(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits so the integer sqrt keeps
    // `bits` fractional bits.
    let scale = BigInt::one() << (2 * bits);
    let nd = x.numer() * x.denom() * scale;
    let root = nd.sqrt(); // floor of the true square root
    BigRational::new(root, x.denom() * (BigInt::one() << bits))
}

/// Upper bound for sqrt(x) with error below 2^-bits.
pub fn sqrt_upper(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::one() << (2 * bits);
    let nd = x.numer() * x.denom() * scale;
    let root = nd.sqrt() + BigInt::one();
    BigRational::new(root, x.denom() * (BigInt::one() << bits))
}

/// Rounds to the nearest dyadic with `bits` fractional bits. Keeps
/// iterative numerics (e.g. the complex root finder) from exploding in
/// denominator size while staying inside exact rational arithmetic.
pub fn round_dyadic(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    BigRational::new(rounded, scale)
}

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Sign of every point in the interval: Some(+1/-1) when uniform,
    /// None when the interval straddles zero.
    pub fn uniform_sign(&self) -> Option<i8> {
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

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            RatInterval::new(&self.hi * c, &self.lo * c)
        } else {
            RatInterval::new(&self.lo * c, &self.hi * c)
        }
    }

    pub fn shift(&self, c: &Rational) -> Self {
        RatInterval::new(&self.lo + c, &self.hi + c)
    }

    /// Reciprocal; requires an interval excluding zero.
    pub fn recip(&self) -> Self {
        assert!(!self.contains_zero(), "reciprocal of interval containing 0");
        RatInterval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    /// Interval square root; requires lo >= 0.
    pub fn sqrt(&self, bits: u32) -> Self {
        RatInterval::new(sqrt_lower(&self.lo, bits), sqrt_upper(&self.hi, bits))
    }

    /// Interval absolute value.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = std::cmp::max(-self.lo.clone(), self.hi.clone());
            RatInterval::new(Rational::zero(), hi)
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = std::cmp::max(&self.lo, &other.lo).clone();
        let hi = std::cmp::min(&self.hi, &other.hi).clone();
        if lo <= hi {
            Some(RatInterval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Decimal rendering of a rational with `digits` fractional digits
/// (round towards zero). Exact values print without padding zeros.
pub fn decimal_string(x: &Rational, digits: u32) -> String {
    let neg = x.is_negative();
    let ax = x.abs();
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (ax.numer() * &scale).div_floor(ax.denom());
    let (ip, fp) = scaled.div_rem(&scale);
    let mut frac = format!("{:0width$}", fp, width = digits as usize);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if neg && (!ip.is_zero() || !frac.is_empty()) {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{frac}")
    }
}

/// Sign extraction helper for BigInt.
pub fn bigint_sign(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_bounds_bracket() {
        let two = rat_int(2);
        let lo = sqrt_lower(&two, 64);
        let hi = sqrt_upper(&two, 64);
        assert!(lo < hi);
        assert!(&lo * &lo < two);
        assert!(&hi * &hi > two);
        assert!((&hi - &lo) < rat(1, 1 << 30));
    }

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat_int(-2), rat_int(3));
        let b = RatInterval::new(rat_int(-1), rat_int(4));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat_int(-8));
        assert_eq!(p.hi, rat_int(12));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 6), "0.5");
        assert_eq!(decimal_string(&rat(-1, 3), 6), "-0.333333");
        assert_eq!(decimal_string(&rat_int(42), 6), "42");
    }
}
