//! Number-field contexts and exact field elements.
//!
//! A `NumberFieldContext` is a field Q(theta) given by the irreducible
//! minimal polynomial of a real generator theta together with an
//! isolating interval. All values of one problem instance live in a
//! single context, built by iterated primitive-element composition
//! (resultants), so equality, signs and floors are decidable.
//!
//! A `FieldElement` is a rational coordinate vector in the power basis
//! of the generator. Because the generator polynomial is irreducible,
//! coordinate vectors are canonical: equal vectors iff equal reals.

use crate::linalg::{solve_linear_combination, RowSpace};
use crate::poly::factor::irreducible_factor_with_root;
use crate::poly::roots::SturmChain;
use crate::poly::{resultant_of_shifted, IntPoly, RatPoly};
use crate::rational::{rat_floor, rat_is_integer, RatInterval, Rational};
use crate::realalg::RealAlgebraic;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::{Arc, RwLock};

/// Tunables for context construction and sign decisions.
#[derive(Debug, Clone)]
pub struct FieldConfig {
    /// Maximum degree of the common field.
    pub degree_cap: usize,
    /// Bisection budget per sign decision before giving up (a guard
    /// against bugs; termination is guaranteed for exact inputs).
    pub refine_budget: usize,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            degree_cap: 64,
            refine_budget: 4096,
        }
    }
}

struct Inner {
    min_poly: IntPoly,
    min_poly_monic: RatPoly,
    degree: usize,
    /// Refinement cache: always isolates the same root of `min_poly`.
    interval: RwLock<RatInterval>,
    config: FieldConfig,
    registered: Vec<Vec<Rational>>,
}

/// A common number field Q(theta) for one problem instance.
#[derive(Clone)]
pub struct NumberFieldContext {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for NumberFieldContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NumberFieldContext")
            .field("min_poly", &self.inner.min_poly.display())
            .field("degree", &self.inner.degree)
            .finish()
    }
}

/// An element of a number field: rational coordinates in the power basis.
#[derive(Clone)]
pub struct FieldElement {
    ctx: NumberFieldContext,
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldElement{:?}", self.coeffs)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for c in &self.coeffs {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

/// Arithmetic selector for the operation-style entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Builds a common field containing every input value and registers each
/// input's coordinate vector, using the default configuration.
pub fn make_context(values: &[RealAlgebraic]) -> Result<NumberFieldContext> {
    make_context_with(values, FieldConfig::default())
}

/// As `make_context` with explicit degree cap / refinement budget.
pub fn make_context_with(
    values: &[RealAlgebraic],
    config: FieldConfig,
) -> Result<NumberFieldContext> {
    if values.is_empty() {
        return Err(Error::InvalidAlgebraic("no input values".into()));
    }
    let canon: Vec<RealAlgebraic> = values
        .iter()
        .map(canonicalize)
        .collect::<Result<Vec<_>>>()?;

    // Start from the first value as generator.
    let first = &canon[0];
    let mut min_poly;
    let mut interval = first.interval().clone();
    let mut registered: Vec<Vec<Rational>> = Vec::with_capacity(canon.len());
    if let Some(r) = first.as_rational() {
        min_poly = rational_min_poly(&r);
        registered.push(vec![r]);
    } else {
        min_poly = first.defining_poly().clone();
        let d = min_poly.degree();
        registered.push(generator_vector(d));
    }

    for value in &canon[1..] {
        let (np, ni, reg, vcoords) = adjoin(&min_poly, &interval, &registered, value, &config)?;
        min_poly = np;
        interval = ni;
        registered = reg;
        registered.push(vcoords);
    }

    Ok(NumberFieldContext {
        inner: Arc::new(Inner {
            degree: min_poly.degree(),
            min_poly_monic: monic_rat(&min_poly),
            min_poly,
            interval: RwLock::new(interval),
            config,
            registered,
        }),
    })
}

/// Replaces the defining polynomial by its irreducible factor at the root.
fn canonicalize(v: &RealAlgebraic) -> Result<RealAlgebraic> {
    if v.degree() == 1 {
        return Ok(v.clone());
    }
    let irr = irreducible_factor_with_root(v.defining_poly(), v.interval());
    if irr.degree() == v.degree() {
        return Ok(v.clone());
    }
    RealAlgebraic::new(irr, v.interval().clone())
}

fn rational_min_poly(r: &Rational) -> IntPoly {
    IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

fn generator_vector(d: usize) -> Vec<Rational> {
    debug_assert!(d >= 2);
    let mut v = vec![Rational::zero(); d];
    v[1] = Rational::one();
    v
}

fn monic_rat(p: &IntPoly) -> RatPoly {
    let r = p.to_rat();
    let lc = r.leading();
    r.scale(&lc.recip())
}

type AdjoinOutcome = (IntPoly, RatInterval, Vec<Vec<Rational>>, Vec<Rational>);

/// Extends Q(theta) by a new value b, producing the new generator
/// psi = theta + t*b, rewritten registrations and b's coordinates.
fn adjoin(
    min_poly: &IntPoly,
    interval: &RatInterval,
    registered: &[Vec<Rational>],
    value: &RealAlgebraic,
    config: &FieldConfig,
) -> Result<AdjoinOutcome> {
    let d = min_poly.degree();

    // Rational newcomer: same field.
    if let Some(r) = value.as_rational() {
        let mut v = vec![Rational::zero(); d];
        v[0] = r;
        return Ok((min_poly.clone(), interval.clone(), registered.to_vec(), v));
    }

    // Rational base field: the newcomer becomes the generator.
    if d == 1 {
        let g = value.defining_poly().clone();
        let nd = g.degree();
        if nd > config.degree_cap {
            return Err(Error::FieldTooLarge {
                degree: nd,
                cap: config.degree_cap,
            });
        }
        let mut reg = Vec::with_capacity(registered.len());
        for old in registered {
            let mut v = vec![Rational::zero(); nd];
            v[0] = old[0].clone();
            reg.push(v);
        }
        return Ok((g, value.interval().clone(), reg, generator_vector(nd)));
    }

    let g = value.defining_poly();
    let e = g.degree();

    for t in 1i64..=64 {
        // Polynomial whose roots are t * (roots of g).
        let gt = IntPoly::new(
            g.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * BigInt::from(t).pow((e - j) as u32))
                .collect(),
        );
        let resultant = resultant_of_shifted(min_poly, &gt);
        let r_sf = resultant.primitive();
        if !r_sf.is_squarefree() {
            continue;
        }

        // Isolate psi = theta + t*b among the roots of the resultant.
        let chain = SturmChain::new(&r_sf.to_rat());
        let tq = BigRational::from_integer(BigInt::from(t));
        let mut iv_theta = interval.clone();
        let mut iv_b = value.interval().clone();
        let iv_psi = loop {
            let k = iv_theta.add(&iv_b.scale(&tq));
            if chain.count_roots_open(&k.lo, &k.hi) == 1 {
                break k;
            }
            let wt = iv_theta.width() / BigRational::from_integer(4.into());
            let wb = iv_b.width() / BigRational::from_integer(4.into());
            iv_theta = crate::poly::roots::refine_interval(min_poly, &iv_theta, &wt);
            iv_b = crate::poly::roots::refine_interval(g, &iv_b, &wb);
        };

        let new_poly = irreducible_factor_with_root(&r_sf, &iv_psi);
        let nd = new_poly.degree();
        if nd > config.degree_cap {
            return Err(Error::FieldTooLarge {
                degree: nd,
                cap: config.degree_cap,
            });
        }
        let psi = RealAlgebraic::new(new_poly.clone(), iv_psi.clone())?;

        // Provisional context on psi for the gcd computation below.
        let provisional = NumberFieldContext {
            inner: Arc::new(Inner {
                degree: nd,
                min_poly_monic: monic_rat(&new_poly),
                min_poly: new_poly.clone(),
                interval: RwLock::new(psi.interval().clone()),
                config: config.clone(),
                registered: vec![],
            }),
        };

        // b is the unique common root of g(x) and M(psi - t*x): the gcd
        // over Q(psi)[x] is linear exactly when the resultant was
        // squarefree, and its root expresses b in the power basis.
        let gen_elem = provisional.generator_element();
        let tq_elem = provisional.from_rational(tq.clone());
        let gx: Vec<FieldElement> = g
            .coeffs
            .iter()
            .map(|c| provisional.from_rational(BigRational::from_integer(c.clone())))
            .collect();
        // M(psi - t*x) as a polynomial in x with Q(psi) coefficients.
        let lin = vec![gen_elem.clone(), tq_elem.neg()];
        let mut mx: Vec<FieldElement> = vec![];
        for c in min_poly.coeffs.iter().rev() {
            mx = fp_mul(&mx, &lin, &provisional);
            mx = fp_add(
                &mx,
                &[provisional.from_rational(BigRational::from_integer(c.clone()))],
            );
        }
        let gcd = fp_gcd(&gx, &mx, &provisional)?;
        if gcd.len() != 2 {
            // Unexpected for a squarefree resultant; try the next shift.
            continue;
        }
        let b_elem = gcd[0].neg(); // monic linear: x - b
        let theta_elem = gen_elem.sub(&b_elem.mul(&tq_elem));

        // Rewrite previous registrations theta-polynomially.
        let mut reg = Vec::with_capacity(registered.len());
        for old in registered {
            let elem = eval_poly_at(old, &theta_elem, &provisional);
            reg.push(elem.coeffs);
        }
        return Ok((new_poly, iv_psi, reg, b_elem.coeffs));
    }
    Err(Error::InvalidAlgebraic(
        "no squarefree resultant found while composing fields".into(),
    ))
}

fn eval_poly_at(coeffs: &[Rational], x: &FieldElement, ctx: &NumberFieldContext) -> FieldElement {
    let mut acc = ctx.zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&ctx.from_rational(c.clone()));
    }
    acc
}

impl NumberFieldContext {
    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.inner.min_poly
    }

    pub fn config(&self) -> &FieldConfig {
        &self.inner.config
    }

    /// Structural identity: same field with the same denoted generator.
    pub fn same_as(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        if self.inner.min_poly != other.inner.min_poly {
            return false;
        }
        let a = self.inner.interval.read().unwrap().clone();
        let b = other.inner.interval.read().unwrap().clone();
        match a.intersect(&b) {
            None => false,
            Some(iv) => {
                let chain = SturmChain::new(&self.inner.min_poly.to_rat());
                chain.count_roots_open(&iv.lo, &iv.hi) == 1
            }
        }
    }

    /// The generator as an element (theta itself).
    pub fn generator_element(&self) -> FieldElement {
        if self.inner.degree == 1 {
            let m = &self.inner.min_poly;
            let r = BigRational::new(-m.coeff(0), m.coeff(1));
            return self.from_rational(r);
        }
        FieldElement {
            ctx: self.clone(),
            coeffs: generator_vector(self.inner.degree),
        }
    }

    /// The generator as an exchange value.
    pub fn generator(&self) -> RealAlgebraic {
        RealAlgebraic::new(
            self.inner.min_poly.clone(),
            self.inner.interval.read().unwrap().clone(),
        )
        .expect("context generator is always valid")
    }

    /// Coordinate vector of the i-th value passed to `make_context`.
    pub fn registered(&self, i: usize) -> FieldElement {
        FieldElement {
            ctx: self.clone(),
            coeffs: self.inner.registered[i].clone(),
        }
    }

    pub fn registered_count(&self) -> usize {
        self.inner.registered.len()
    }

    /// Looks up the coordinates of a registered input by value.
    pub fn coordinates_of(&self, v: &RealAlgebraic) -> Option<FieldElement> {
        (0..self.inner.registered.len())
            .map(|i| self.registered(i))
            .find(|e| &e.to_real_algebraic() == v)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            ctx: self.clone(),
            coeffs: vec![Rational::zero(); self.inner.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coeffs = vec![Rational::zero(); self.inner.degree];
        coeffs[0] = r;
        FieldElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.clone()))
    }

    /// Element from explicit power-basis coordinates.
    pub fn element_from_coeffs(&self, mut coeffs: Vec<Rational>) -> FieldElement {
        coeffs.resize(self.inner.degree, Rational::zero());
        FieldElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    /// Current cached isolating interval of the generator.
    pub fn generator_interval(&self) -> RatInterval {
        self.inner.interval.read().unwrap().clone()
    }

    /// Narrows the cached generator interval below `width` and returns it.
    fn refined_generator_interval(&self, width: &Rational) -> RatInterval {
        {
            let iv = self.inner.interval.read().unwrap();
            if &iv.width() <= width {
                return iv.clone();
            }
        }
        let refined = {
            let iv = self.inner.interval.read().unwrap().clone();
            crate::poly::roots::refine_interval(&self.inner.min_poly, &iv, width)
        };
        let mut guard = self.inner.interval.write().unwrap();
        if guard.width() > refined.width() {
            *guard = refined.clone();
            refined
        } else {
            guard.clone()
        }
    }

    fn reduce(&self, p: RatPoly) -> FieldElement {
        let d = self.inner.degree;
        let r = if p.is_zero() || p.degree() < d {
            p
        } else {
            let (_, r) = p.divrem(&self.inner.min_poly_monic);
            r
        };
        let mut coeffs = r.coeffs;
        coeffs.resize(d, Rational::zero());
        FieldElement {
            ctx: self.clone(),
            coeffs,
        }
    }
}

// ---- element arithmetic ----

impl FieldElement {
    pub fn context(&self) -> &NumberFieldContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> FieldElement {
        debug_assert!(self.ctx.same_as(&other.ctx));
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> FieldElement {
        debug_assert!(self.ctx.same_as(&other.ctx));
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> FieldElement {
        debug_assert!(self.ctx.same_as(&other.ctx));
        let prod = RatPoly::new(self.coeffs.clone()).mul(&RatPoly::new(other.coeffs.clone()));
        self.ctx.reduce(prod)
    }

    pub fn scale(&self, c: &Rational) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Result<FieldElement> {
        self.check_ctx(other)?;
        Ok(self.mul(&other.inverse()?))
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.ctx.inner.degree == 1 {
            return Ok(self.ctx.from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid: s*v + t*m = 1 in Q[X].
        let v = RatPoly::new(self.coeffs.clone());
        let m = self.ctx.inner.min_poly_monic.clone();
        let (g, s, _) = ext_gcd(&v, &m);
        debug_assert_eq!(g.degree(), 0, "generator polynomial must be irreducible");
        let ginv = g.leading().recip();
        Ok(self.ctx.reduce(s.scale(&ginv)))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut acc = self.ctx.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Exact sign: -1, 0 or +1. Zero is decided symbolically (canonical
    /// coordinates), nonzero by refining the generator's interval.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        let poly = RatPoly::new(self.coeffs.clone());
        let mut iv = self.ctx.generator_interval();
        let budget = self.ctx.inner.config.refine_budget;
        for step in 0.. {
            let out = eval_interval_rat(&poly, &iv);
            if let Some(s) = out.uniform_sign() {
                if s != 0 {
                    return s;
                }
            }
            assert!(
                step < budget,
                "sign refinement budget exceeded; irreducibility invariant broken?"
            );
            let w = iv.width() / BigRational::from_integer(4.into());
            iv = self.ctx.refined_generator_interval(&w);
        }
        unreachable!()
    }

    /// The unique integer k with k <= a < k+1.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return rat_floor(&r);
        }
        let iv = self.approx_interval(&BigRational::new(1.into(), 4.into()));
        let mut k = rat_floor(&iv.lo);
        loop {
            let above = self.sub(&self.ctx.from_bigint(&k)).sign() >= 0;
            let below_next = self.sub(&self.ctx.from_bigint(&(&k + BigInt::one()))).sign() < 0;
            match (above, below_next) {
                (true, true) => return k,
                (true, false) => k += BigInt::one(),
                (false, _) => k -= BigInt::one(),
            }
        }
    }

    /// The rational this element denotes, when its coordinates are
    /// constant (canonical representation makes this exact).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        rat_is_integer(&r).then(|| r.to_integer())
    }

    /// Certified enclosure with width at most `target`.
    pub fn approx_interval(&self, target: &Rational) -> RatInterval {
        if let Some(r) = self.as_rational() {
            return RatInterval::point(r);
        }
        let poly = RatPoly::new(self.coeffs.clone());
        let mut iv = self.ctx.generator_interval();
        loop {
            let out = eval_interval_rat(&poly, &iv);
            if &out.width() <= target {
                return out;
            }
            let w = iv.width() / BigRational::from_integer(4.into());
            iv = self.ctx.refined_generator_interval(&w);
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.approx_interval(&BigRational::new(1.into(), BigInt::from(1u128 << 70)))
            .midpoint()
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Monic-up-to-content irreducible integer polynomial vanishing at
    /// this element, from the first linear dependency among its powers.
    pub fn minimal_polynomial(&self) -> IntPoly {
        let d = self.ctx.inner.degree;
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(d + 1);
        let mut space = RowSpace::new(d);
        let mut p = self.ctx.one();
        loop {
            if !space.insert(&p.coeffs) {
                // p = self^k is dependent on lower powers.
                let combo = solve_linear_combination(&powers, &p.coeffs)
                    .expect("dependency detected but system inconsistent");
                let mut coeffs: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
                coeffs.push(Rational::one());
                return RatPoly::new(coeffs).clear_denominators();
            }
            powers.push(p.coeffs.clone());
            p = p.mul(self);
        }
    }

    /// Converts to the exchange representation (irreducible defining
    /// polynomial plus isolating interval).
    pub fn to_real_algebraic(&self) -> RealAlgebraic {
        if let Some(r) = self.as_rational() {
            return RealAlgebraic::from_rational(r);
        }
        let m = self.minimal_polynomial();
        let chain = SturmChain::new(&m.to_rat());
        let mut target = BigRational::new(1.into(), 16.into());
        loop {
            let iv = self.approx_interval(&target);
            if chain.count_roots_open(&iv.lo, &iv.hi) == 1 {
                if let Ok(ra) = RealAlgebraic::new(m.clone(), iv) {
                    return ra;
                }
            }
            target /= BigRational::from_integer(16.into());
        }
    }
}

/// Operation-style entry point mirroring the library surface.
pub fn field_arith(op: ArithOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    a.check_ctx(b)?;
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

/// Exact sign of a field element.
pub fn sign_of(a: &FieldElement) -> i8 {
    a.sign()
}

/// Exact floor of a field element.
pub fn floor_of(a: &FieldElement) -> BigInt {
    a.floor()
}

/// Minimal polynomial over Q of a field element.
pub fn minimal_polynomial(a: &FieldElement) -> IntPoly {
    a.minimal_polynomial()
}

fn eval_interval_rat(p: &RatPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(Rational::zero());
    for c in p.coeffs.iter().rev() {
        acc = acc.mul(x).shift(c);
    }
    acc
}

/// Extended Euclid over Q[X]: returns (g, s, t) with s*a + t*b = g.
fn ext_gcd(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

// ---- polynomials with field-element coefficients (for composita and
// relative minimal polynomials) ----

pub(crate) fn fp_trim(mut v: Vec<FieldElement>) -> Vec<FieldElement> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn fp_add(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => out.push(x.add(y)),
            (Some(x), None) => out.push(x.clone()),
            (None, Some(y)) => out.push(y.clone()),
            (None, None) => unreachable!(),
        }
    }
    fp_trim(out)
}

pub(crate) fn fp_mul(
    a: &[FieldElement],
    b: &[FieldElement],
    ctx: &NumberFieldContext,
) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    fp_trim(out)
}

pub(crate) fn fp_divrem(
    num: &[FieldElement],
    den: &[FieldElement],
    ctx: &NumberFieldContext,
) -> Result<(Vec<FieldElement>, Vec<FieldElement>)> {
    if den.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let mut rem: Vec<FieldElement> = num.to_vec();
    let dlen = den.len();
    if rem.len() < dlen {
        return Ok((vec![], fp_trim(rem)));
    }
    let lead_inv = den[dlen - 1].inverse()?;
    let qlen = rem.len() - dlen + 1;
    let mut q = vec![ctx.zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dlen - 1].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] = rem[k + j].sub(&c.mul(d));
        }
        q[k] = c;
    }
    Ok((fp_trim(q), fp_trim(rem)))
}

/// Monic gcd of polynomials with field-element coefficients.
pub(crate) fn fp_gcd(
    a: &[FieldElement],
    b: &[FieldElement],
    ctx: &NumberFieldContext,
) -> Result<Vec<FieldElement>> {
    let mut x = fp_trim(a.to_vec());
    let mut y = fp_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = fp_divrem(&x, &y, ctx)?;
        x = y;
        y = r;
    }
    if x.is_empty() {
        return Ok(x);
    }
    let inv = x.last().unwrap().inverse()?;
    Ok(x.iter().map(|c| c.mul(&inv)).collect())
}

pub(crate) fn fp_eval(
    p: &[FieldElement],
    x: &FieldElement,
    ctx: &NumberFieldContext,
) -> FieldElement {
    let mut acc = ctx.zero();
    for c in p.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

// ---- arithmetic on exchange values (used by expression evaluation) ----

/// Applies a field operation to two standalone real algebraic values by
/// building a temporary common field.
pub fn binop_real(op: ArithOp, a: &RealAlgebraic, b: &RealAlgebraic) -> Result<RealAlgebraic> {
    let ctx = make_context(&[a.clone(), b.clone()])?;
    let ea = ctx.registered(0);
    let eb = ctx.registered(1);
    Ok(field_arith(op, &ea, &eb)?.to_real_algebraic())
}

/// Square root of a non-negative real algebraic value.
pub fn sqrt_real(a: &RealAlgebraic) -> Result<RealAlgebraic> {
    if let Some(r) = a.as_rational() {
        return RealAlgebraic::sqrt_rational(&r);
    }
    let ctx = make_context(&[a.clone()])?;
    let elem = ctx.registered(0);
    match elem.sign() {
        -1 => return Err(Error::domain("square root of a negative value")),
        0 => return Ok(RealAlgebraic::from_rational(Rational::zero())),
        _ => {}
    }
    let m = elem.minimal_polynomial();
    // m(x^2) vanishes at sqrt(a); it is squarefree because m is
    // irreducible with nonzero constant term.
    let mut coeffs = vec![BigInt::zero(); 2 * m.degree() + 1];
    for (i, c) in m.coeffs.iter().enumerate() {
        coeffs[2 * i] = c.clone();
    }
    let m2 = IntPoly::new(coeffs);
    let mut target = BigRational::new(1.into(), 16.into());
    loop {
        let iv = elem.approx_interval(&target);
        let lo = if iv.lo.is_negative() {
            Rational::zero()
        } else {
            iv.lo.clone()
        };
        let sq = RatInterval::new(lo, iv.hi.clone()).sqrt(96);
        if let Ok(ra) = RealAlgebraic::new(m2.clone(), sq) {
            return Ok(ra);
        }
        target /= BigRational::from_integer(16.into());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn sqrt_of(n: i64) -> RealAlgebraic {
        RealAlgebraic::sqrt_rational(&rat_int(n)).unwrap()
    }

    fn alpha_3_sqrt21_over_6() -> RealAlgebraic {
        // (3 + sqrt 21)/6, the positive root of 3X^2 - 3X - 1.
        RealAlgebraic::new(
            IntPoly::from_i64(&[-1, -3, 3]),
            RatInterval::new(rat_int(1), rat_int(2)),
        )
        .unwrap()
    }

    #[test]
    fn single_generator_sqrt3() {
        let ctx = make_context(&[sqrt_of(3)]).unwrap();
        assert_eq!(ctx.degree(), 2);
        let s = ctx.registered(0);
        assert_eq!(s.mul(&s), ctx.from_integer(3));
    }

    #[test]
    fn rational_context_degree_one() {
        let ctx = make_context(&[RealAlgebraic::from_rational(rat(2, 3))]).unwrap();
        assert_eq!(ctx.degree(), 1);
        let x = ctx.registered(0);
        assert_eq!(x.as_rational(), Some(rat(2, 3)));
    }

    #[test]
    fn compositum_of_alpha_and_sqrt3() {
        let a = alpha_3_sqrt21_over_6();
        let b = sqrt_of(3);
        let ctx = make_context(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(ctx.degree(), 4);
        let ea = ctx.registered(0);
        let eb = ctx.registered(1);
        // Evaluate back: vectors must denote the original values within
        // 1e-30 interval width.
        let tol = BigRational::new(1.into(), num_bigint::BigInt::from(10u32).pow(30));
        let ia = ea.approx_interval(&tol);
        assert!(ia.intersect(a.interval()).is_some());
        assert!(ia.width() <= tol);
        let ib = eb.approx_interval(&tol);
        assert!(ib.intersect(b.interval()).is_some());
        // Defining relations hold exactly.
        assert_eq!(eb.mul(&eb), ctx.from_integer(3));
        let one = ctx.one();
        assert_eq!(
            ea.mul(&ea).scale(&rat_int(3)),
            ea.scale(&rat_int(3)).add(&one),
            "3a^2 = 3a + 1"
        );
    }

    #[test]
    fn phi_arithmetic() {
        let ctx = make_context(&[RealAlgebraic::phi()]).unwrap();
        let phi = ctx.registered(0);
        // phi^2 = phi + 1
        assert_eq!(phi.mul(&phi), phi.add(&ctx.one()));
        assert!(phi.sub(&phi).is_zero());
        assert_eq!(phi.sub(&ctx.one()).sign(), 1);
        assert_eq!(phi.floor(), BigInt::from(1));
        assert_eq!(phi.neg().floor(), BigInt::from(-2));
        assert_eq!(phi.minimal_polynomial(), IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn sign_comparison_alpha_vs_sqrt3() {
        let ctx = make_context(&[alpha_3_sqrt21_over_6(), sqrt_of(3)]).unwrap();
        let a = ctx.registered(0);
        let b = ctx.registered(1);
        assert_eq!(a.sub(&b).sign(), -1, "(3+sqrt21)/6 < sqrt3");
        let prod = a.mul(&b);
        assert_eq!(prod.floor(), BigInt::from(2), "floor of ~2.189");
    }

    #[test]
    fn minimal_polynomial_of_alpha() {
        let ctx = make_context(&[alpha_3_sqrt21_over_6(), sqrt_of(3)]).unwrap();
        let a = ctx.registered(0);
        assert_eq!(a.minimal_polynomial(), IntPoly::from_i64(&[-1, -3, 3]));
        assert_eq!(
            ctx.registered(1).minimal_polynomial(),
            IntPoly::from_i64(&[-3, 0, 1])
        );
        // minimal polynomial evaluated at the element is exactly zero
        let m = a.minimal_polynomial();
        let mut acc = ctx.zero();
        for c in m.coeffs.iter().rev() {
            acc = acc.mul(&a).add(&ctx.from_bigint(c));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn division_and_inverse() {
        let ctx = make_context(&[RealAlgebraic::phi()]).unwrap();
        let phi = ctx.registered(0);
        let inv = phi.inverse().unwrap();
        assert_eq!(phi.mul(&inv), ctx.one());
        // 1/phi = phi - 1
        assert_eq!(inv, phi.sub(&ctx.one()));
        assert!(ctx.zero().inverse().is_err());
    }

    #[test]
    fn rational_arith_matches_bigrational() {
        let ctx = make_context(&[RealAlgebraic::from_rational(rat(3, 7))]).unwrap();
        let a = ctx.from_rational(rat(3, 7));
        let b = ctx.from_rational(rat(-5, 2));
        assert_eq!(a.add(&b).as_rational(), Some(rat(3, 7) + rat(-5, 2)));
        assert_eq!(a.mul(&b).as_rational(), Some(rat(3, 7) * rat(-5, 2)));
        assert_eq!(a.div(&b).unwrap().as_rational(), Some(rat(3, 7) / rat(-5, 2)));
    }

    #[test]
    fn sqrt_of_field_value() {
        // sqrt(2 + sqrt(2)): degree 4.
        let s2 = sqrt_of(2);
        let two = RealAlgebraic::from_rational(rat_int(2));
        let inner = binop_real(ArithOp::Add, &two, &s2).unwrap();
        let outer = sqrt_real(&inner).unwrap();
        assert_eq!(outer.degree(), 4);
        let x = outer.to_f64();
        assert!((x * x - (2.0 + std::f64::consts::SQRT_2)).abs() < 1e-10);
    }

    #[test]
    fn degree_cap_enforced() {
        let cfg = FieldConfig {
            degree_cap: 3,
            refine_budget: 4096,
        };
        let err = make_context_with(&[sqrt_of(2), sqrt_of(3)], cfg);
        assert!(matches!(err, Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn trivial_adjunction_collapses() {
        // sqrt(8) = 2*sqrt(2): the compositum stays degree 2.
        let ctx = make_context(&[sqrt_of(2), sqrt_of(8)]).unwrap();
        assert_eq!(ctx.degree(), 2);
        let a = ctx.registered(0);
        let b = ctx.registered(1);
        assert_eq!(b, a.scale(&rat_int(2)));
    }
}
