//! Integer and rational univariate polynomials.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros; the zero polynomial has an empty coefficient vector.

pub mod complex;
pub mod factor;
pub mod roots;

use crate::rational::{RatInterval, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

/// Polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    pub coeffs: Vec<Rational>,
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn trim_rat(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPoly {
            coeffs: trim_int(coeffs),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    /// The monomial X.
    pub fn x() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// GCD of all coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to
    /// be positive. The zero polynomial is returned unchanged.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval extension of the polynomial (Horner with interval ops).
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .shift(&BigRational::from_integer(c.clone()));
        }
        acc
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division; panics if the division is not exact.
    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.to_rat().divrem(&other.to_rat());
        assert!(r.is_zero(), "inexact integer polynomial division");
        q.clear_denominators_exact()
    }

    /// Whether `other` divides `self` exactly over Z.
    pub fn divisible_by(&self, other: &Self) -> bool {
        if other.is_zero() {
            return self.is_zero();
        }
        let (_, r) = self.to_rat().divrem(&other.to_rat());
        r.is_zero()
    }

    /// Squarefree part: self / gcd(self, self'). Primitive, positive lc.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() <= 1 {
            return self.primitive();
        }
        let g = self.to_rat().gcd(&self.derivative().to_rat());
        if g.degree() == 0 {
            return self.primitive();
        }
        let (q, _) = self.to_rat().divrem(&g);
        q.clear_denominators()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() <= 1 {
            return true;
        }
        self.to_rat().gcd(&self.derivative().to_rat()).degree() == 0
    }

    /// Cauchy root bound: all complex roots satisfy |z| < bound.
    pub fn root_bound(&self) -> Rational {
        assert!(!self.is_zero());
        let lc = self.leading().abs();
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        Rational::one() + BigRational::new(m, lc)
    }

    /// Composition with the linear map X -> a*X + b.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> RatPoly {
        let mut acc = RatPoly::zero();
        let lin = RatPoly::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&RatPoly::constant(
                BigRational::from_integer(c.clone()),
            ));
        }
        acc
    }

    /// Display as a human-readable polynomial in X.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let term = match i {
                0 => format!("{abs}"),
                1 if abs.is_one() => "X".to_string(),
                1 => format!("{abs}*X"),
                _ if abs.is_one() => format!("X^{i}"),
                _ => format!("{abs}*X^{i}"),
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{term}"));
                } else {
                    parts.push(term);
                }
            } else if c.is_negative() {
                parts.push(format!(" - {term}"));
            } else {
                parts.push(format!(" + {term}"));
            }
        }
        parts.concat()
    }
}

impl RatPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        RatPoly {
            coeffs: trim_rat(coeffs),
        }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::new(vec![Rational::one()])
    }

    pub fn x() -> Self {
        RatPoly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn neg(&self) -> Self {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.degree() < divisor.degree() || self.is_zero() {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let dlead = divisor.leading();
        let qlen = rem.len() - dlen + 1;
        let mut q = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dlen - 1] / &dlead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= t;
            }
            q[k] = c;
        }
        (RatPoly::new(q), RatPoly::new(rem))
    }

    /// Monic GCD via the Euclidean algorithm. gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lc = a.leading();
            a.scale(&lc.recip())
        }
    }

    /// Resultant of `self` and `other` via the Euclidean recursion.
    pub fn resultant(&self, other: &Self) -> Rational {
        fn go(p: &RatPoly, q: &RatPoly) -> Rational {
            if q.is_zero() {
                return if p.degree() == 0 && !p.is_zero() {
                    Rational::one()
                } else {
                    Rational::zero()
                };
            }
            if q.degree() == 0 {
                return pow_rat(&q.leading(), p.degree());
            }
            let (_, r) = p.divrem(q);
            let sign = if (p.degree() * q.degree()) % 2 == 1 {
                -Rational::one()
            } else {
                Rational::one()
            };
            if r.is_zero() {
                return Rational::zero();
            }
            let factor = pow_rat(&q.leading(), p.degree() - r.degree());
            sign * factor * go(q, &r)
        }
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        go(self, other)
    }

    /// Clears denominators and makes the result primitive with positive lc.
    pub fn clear_denominators(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let v: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        IntPoly::new(v).primitive()
    }

    /// Clears denominators without the primitive normalization; panics if
    /// any coefficient denominator is not 1 after scaling by the lcm.
    fn clear_denominators_exact(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        assert!(l.is_one(), "polynomial is not integral");
        IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    /// Composition with the linear map X -> a*X + b.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> RatPoly {
        let mut acc = RatPoly::zero();
        let lin = RatPoly::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&RatPoly::constant(c.clone()));
        }
        acc
    }
}

fn pow_rat(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Resultant with respect to y of m(y) and g(x - y), evaluated by
/// interpolation: the result is the integer polynomial in x whose roots
/// are sums (root of m) + (root of g). Used for field composita.
pub fn resultant_of_shifted(m: &IntPoly, g: &IntPoly) -> IntPoly {
    let deg = m.degree() * g.degree();
    let mut xs = Vec::with_capacity(deg + 1);
    let mut ys = Vec::with_capacity(deg + 1);
    let mr = m.to_rat();
    let mut k: i64 = 0;
    while xs.len() <= deg {
        let x0 = rat_from_i64(k);
        // g(x0 - y) as a polynomial in y
        let gy = g.compose_linear(&-Rational::one(), &x0);
        let r = mr.resultant(&gy);
        xs.push(x0);
        ys.push(r);
        k = if k >= 0 { -(k + 1) } else { -k };
    }
    lagrange_interpolate(&xs, &ys).clear_denominators()
}

fn rat_from_i64(k: i64) -> Rational {
    BigRational::from_integer(BigInt::from(k))
}

/// Lagrange interpolation through the given rational points.
pub fn lagrange_interpolate(xs: &[Rational], ys: &[Rational]) -> RatPoly {
    let n = xs.len();
    let mut acc = RatPoly::zero();
    for i in 0..n {
        let mut num = RatPoly::one();
        let mut den = Rational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            num = num.mul(&RatPoly::new(vec![-xs[j].clone(), Rational::one()]));
            den *= &xs[i] - &xs[j];
        }
        acc = acc.add(&num.scale(&(&ys[i] / den)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn divrem_roundtrip() {
        let p = IntPoly::from_i64(&[-1, -1, 0, 1]).to_rat(); // X^3 - X - 1
        let d = IntPoly::from_i64(&[1, 1]).to_rat(); // X + 1
        let (q, r) = p.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), p);
    }

    #[test]
    fn gcd_of_common_factor() {
        // (X-1)(X^2-X-1) and (X-1)(X+2)
        let a = IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[-1, -1, 1]));
        let b = IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[2, 1]));
        let g = a.to_rat().gcd(&b.to_rat());
        assert_eq!(g.degree(), 1);
        assert_eq!(g.eval(&rat_int(1)), rat_int(0));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f = IntPoly::from_i64(&[-1, 1]); // X - 1
        let f2 = f.mul(&f).mul(&IntPoly::from_i64(&[-2, 0, 1]));
        let sf = f2.squarefree_part();
        assert_eq!(sf.degree(), 3);
        assert!(sf.is_squarefree());
    }

    #[test]
    fn resultant_of_sum_of_sqrt2_sqrt3() {
        // roots of x^2-2 plus roots of x^2-3: minimal poly of sqrt2+sqrt3
        // is x^4 - 10x^2 + 1.
        let m = IntPoly::from_i64(&[-2, 0, 1]);
        let g = IntPoly::from_i64(&[-3, 0, 1]);
        let r = resultant_of_shifted(&m, &g);
        assert_eq!(r, IntPoly::from_i64(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn interval_eval_contains_value() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let iv = RatInterval::new(rat(14, 10), rat(15, 10));
        let out = p.eval_interval(&iv);
        assert!(out.contains_zero());
    }
}
