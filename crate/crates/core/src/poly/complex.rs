//! Simultaneous complex root approximation with certified error radii.
//!
//! The iteration is Durand-Kerner (Weierstrass) over dyadic rationals.
//! Certification is done after the fact, exactly: for pairwise distinct
//! points z_1..z_n and a monic degree-n polynomial p, each disk centered
//! at z_i with radius n*|W_i|, W_i = p(z_i)/prod_{j!=i}(z_i - z_j),
//! contains a root of p, and a union of k mutually intersecting disks
//! contains exactly k roots. Coefficient uncertainty (for polynomials
//! whose coefficients are themselves approximated field elements) is
//! folded into the numerator bound.

use super::RatPoly;
use crate::rational::{round_dyadic, sqrt_lower, sqrt_upper, RatInterval, Rational};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complex number with exact rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Cx {
    pub re: Rational,
    pub im: Rational,
}

impl Cx {
    pub fn new(re: Rational, im: Rational) -> Self {
        Cx { re, im }
    }

    pub fn zero() -> Self {
        Cx::new(Rational::zero(), Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        Cx::new(re, Rational::zero())
    }

    pub fn from_f64(re: f64, im: f64) -> Option<Self> {
        Some(Cx::new(
            BigRational::from_float(re)?,
            BigRational::from_float(im)?,
        ))
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> Cx {
        Cx::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.abs2();
        assert!(!d.is_zero(), "complex division by zero");
        Cx::new(
            (&self.re * &o.re + &self.im * &o.im) / &d,
            (&self.im * &o.re - &self.re * &o.im) / &d,
        )
    }

    /// |z|^2, exact.
    pub fn abs2(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs_upper(&self, bits: u32) -> Rational {
        sqrt_upper(&self.abs2(), bits)
    }

    pub fn abs_lower(&self, bits: u32) -> Rational {
        sqrt_lower(&self.abs2(), bits)
    }

    pub fn round(&self, bits: u32) -> Cx {
        Cx::new(round_dyadic(&self.re, bits), round_dyadic(&self.im, bits))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_f64();
        re.hypot(im)
    }
}

/// One approximated root: an exact dyadic center plus a certified radius.
#[derive(Debug, Clone)]
pub struct ComplexRoot {
    pub value: Cx,
    pub radius: Rational,
}

impl ComplexRoot {
    /// Certified enclosure of the root's modulus.
    pub fn modulus_interval(&self, bits: u32) -> RatInterval {
        let mid_lo = self.value.abs_lower(bits);
        let mid_hi = self.value.abs_upper(bits);
        let lo = &mid_lo - &self.radius;
        let lo = if lo.is_negative() { Rational::zero() } else { lo };
        RatInterval::new(lo, mid_hi + &self.radius)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        self.value.to_f64()
    }
}

fn horner(coeffs: &[Cx], z: &Cx) -> Cx {
    let mut acc = Cx::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

fn horner_rounded(coeffs: &[Cx], z: &Cx, bits: u32) -> Cx {
    let mut acc = Cx::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).round(bits).add(c);
    }
    acc
}

/// All complex roots of a nonzero squarefree rational polynomial, with
/// radii certified below 10^-precision.
pub fn complex_roots(p: &RatPoly, precision: u32) -> Result<Vec<ComplexRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lc = p.leading();
    let monic: Vec<Rational> = p.coeffs.iter().map(|c| c / &lc).collect();
    let errs = vec![Rational::zero(); monic.len()];
    roots_of_monic(&monic, &errs, precision)
}

/// Roots of a monic polynomial whose non-leading coefficients are known
/// only up to the supplied absolute errors (leading term exact, error 0).
pub fn complex_roots_with_errors(
    monic_coeffs: &[Rational],
    errs: &[Rational],
    precision: u32,
) -> Result<Vec<ComplexRoot>> {
    roots_of_monic(monic_coeffs, errs, precision)
}

fn roots_of_monic(coeffs: &[Rational], errs: &[Rational], precision: u32) -> Result<Vec<ComplexRoot>> {
    assert_eq!(coeffs.len(), errs.len());
    let n = coeffs.len() - 1;
    assert!(
        coeffs.last().map(|c| c.is_one()).unwrap_or(false),
        "polynomial must be monic"
    );
    assert!(
        errs.last().map(|e| e.is_zero()).unwrap_or(false),
        "leading coefficient must be exact"
    );
    if n == 0 {
        return Ok(vec![]);
    }
    let target = pow10_neg(precision);
    let mut bits: u32 = (precision as f64 * 3.322).ceil() as u32 + 64;

    // Cauchy bound padded by the coefficient errors.
    let mut maxc = Rational::zero();
    for (c, e) in coeffs.iter().zip(errs).take(n) {
        let a = c.abs() + e;
        if a > maxc {
            maxc = a;
        }
    }
    let bound = Rational::one() + maxc;

    let cx_coeffs: Vec<Cx> = coeffs.iter().map(|c| Cx::real(c.clone())).collect();

    for _escalation in 0..5 {
        let mut zs = initial_points(n, &bound, bits);
        let mut converged = false;
        for _it in 0..600 {
            let mut maxw = Rational::zero();
            for i in 0..n {
                let mut denom = Cx::real(Rational::one());
                for j in 0..n {
                    if i != j {
                        denom = denom.mul(&zs[i].sub(&zs[j])).round(bits);
                    }
                }
                if denom.abs2().is_zero() {
                    // Collision: nudge and continue.
                    zs[i] = zs[i].add(&Cx::new(
                        BigRational::new(1.into(), (num_bigint::BigInt::one()) << bits),
                        Rational::zero(),
                    ));
                    continue;
                }
                let w = horner_rounded(&cx_coeffs, &zs[i], bits).div(&denom).round(bits);
                let wa = w.abs2();
                if wa > maxw {
                    maxw = wa;
                }
                zs[i] = zs[i].sub(&w);
            }
            // maxw holds |W|^2; stop once the step is far below target.
            if maxw < &(&target * &target) / BigRational::from_integer(256.into()) {
                converged = true;
                break;
            }
        }
        if converged {
            if let Some(roots) = certify(&cx_coeffs, errs, &zs, &target, bits) {
                return Ok(roots);
            }
        }
        bits *= 2;
    }
    Err(Error::domain(
        "complex root iteration failed to certify the requested precision",
    ))
}

fn initial_points(n: usize, bound: &Rational, bits: u32) -> Vec<Cx> {
    let r = bound.to_f64().unwrap_or(2.0).max(0.5);
    (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.41;
            Cx::from_f64(r * angle.cos(), r * angle.sin())
                .unwrap()
                .round(bits)
        })
        .collect()
}

/// Exact a posteriori certification at the final iterates.
fn certify(
    coeffs: &[Cx],
    errs: &[Rational],
    zs: &[Cx],
    target: &Rational,
    bits: u32,
) -> Option<Vec<ComplexRoot>> {
    let n = zs.len();
    let nq = BigRational::from_integer(num_bigint::BigInt::from(n));
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let pv = horner(coeffs, &zs[i]);
        let mut pv_abs = pv.abs_upper(bits);
        // Coefficient uncertainty: sum err_j * |z|^j.
        let zabs = zs[i].abs_upper(bits);
        let mut zpow = Rational::one();
        for e in errs {
            if !e.is_zero() {
                pv_abs += e * &zpow;
            }
            zpow *= &zabs;
        }
        let mut denom_lo = Rational::one();
        for j in 0..n {
            if i != j {
                let d = zs[i].sub(&zs[j]).abs_lower(bits);
                if d.is_zero() || d.is_negative() {
                    return None;
                }
                denom_lo *= d;
            }
        }
        let radius = &nq * pv_abs / denom_lo;
        if &radius > target {
            return None;
        }
        out.push(ComplexRoot {
            value: zs[i].clone(),
            radius,
        });
    }
    Some(out)
}

fn pow10_neg(digits: u32) -> Rational {
    BigRational::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    #[test]
    fn golden_quadratic() {
        let p = IntPoly::from_i64(&[-1, -1, 1]).to_rat();
        let roots = complex_roots(&p, 20).unwrap();
        assert_eq!(roots.len(), 2);
        let mut vals: Vec<f64> = roots.iter().map(|r| r.to_f64().0).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + 0.618_033_988_749_895).abs() < 1e-12);
        assert!((vals[1] - 1.618_033_988_749_895).abs() < 1e-12);
        for r in &roots {
            assert!(r.to_f64().1.abs() < 1e-12);
        }
    }

    #[test]
    fn plastic_number_cubic() {
        // X^3 - X - 1: one real root ~1.3247, conjugate pair of modulus
        // ~0.8689; |product of all roots| = 1.
        let p = IntPoly::from_i64(&[-1, -1, 0, 1]).to_rat();
        let roots = complex_roots(&p, 15).unwrap();
        assert_eq!(roots.len(), 3);
        let mut reals = 0;
        let mut prod = 1.0;
        for r in &roots {
            let (re, im) = r.to_f64();
            prod *= re.hypot(im);
            if im.abs() < 1e-10 {
                reals += 1;
                assert!((re - 1.324_717_957_244_746).abs() < 1e-10);
            } else {
                assert!((re.hypot(im) - 0.868_836_961_832_709).abs() < 1e-9);
            }
        }
        assert_eq!(reals, 1);
        assert!((prod - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sum_of_roots_matches_trace() {
        let p = IntPoly::from_i64(&[3, -7, 2, 5]).to_rat();
        let roots = complex_roots(&p, 25).unwrap();
        let (sre, sim) = roots.iter().fold((0.0, 0.0), |(a, b), r| {
            let (re, im) = r.to_f64();
            (a + re, b + im)
        });
        assert!((sre - (-2.0 / 5.0)).abs() < 1e-20_f64.max(1e-12));
        assert!(sim.abs() < 1e-12);
    }

    #[test]
    fn certified_radii_are_small() {
        let p = IntPoly::from_i64(&[-2, 0, 1]).to_rat();
        let roots = complex_roots(&p, 30).unwrap();
        let tol = BigRational::new(1.into(), num_bigint::BigInt::from(10u32).pow(30));
        for r in &roots {
            assert!(r.radius <= tol);
        }
    }
}
