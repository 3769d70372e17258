//! Factorization of integer polynomials (Zassenhaus).
//!
//! Pipeline: squarefree decomposition (Yun), Cantor-Zassenhaus modulo a
//! small prime, quadratic Hensel lifting past the Mignotte bound, then
//! subset recombination with exact trial division. Degrees here stay well
//! under the crate's field-degree cap, so the classic algorithm is plenty.

use super::IntPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
];

/// Full factorization over Z of a nonzero polynomial: returns the
/// irreducible primitive factors (positive leading coefficients) with
/// multiplicities. The content and sign are dropped.
pub fn factor(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let f = f.primitive();
    if f.degree() == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for (part, mult) in yun_squarefree(&f) {
        for irr in factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out
}

/// Yun's squarefree decomposition of a primitive polynomial: returns
/// pairs (squarefree part, multiplicity) whose weighted product is f.
pub fn yun_squarefree(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    if f.degree() <= 1 {
        return vec![(f.clone(), 1)];
    }
    let fr = f.to_rat();
    let df = fr.derivative();
    let g = fr.gcd(&df);
    if g.degree() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let (mut c, _) = fr.divrem(&g);
    let (dq, _) = df.divrem(&g);
    let mut d = dq.sub(&c.derivative());
    let mut i = 1usize;
    loop {
        let h = c.gcd(&d);
        if h.degree() > 0 {
            out.push((h.clear_denominators(), i));
        }
        let (cn, _) = c.divrem(&h);
        c = cn;
        if c.degree() == 0 {
            break;
        }
        let (dn, _) = d.divrem(&h);
        d = dn.sub(&c.derivative());
        i += 1;
    }
    out
}

/// Factors a primitive squarefree polynomial into irreducibles over Z.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive();
    if f.degree() <= 1 {
        return vec![f];
    }
    // Split off an X factor so the constant term is nonzero.
    if f.coeff(0).is_zero() {
        let rest = IntPoly::new(f.coeffs[1..].to_vec());
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest));
        out.sort_by_key(|p| (p.degree(), p.coeffs.clone()));
        return out;
    }

    // Monicize: F(x) = lc^(n-1) * f(x/lc) is monic with integer coefficients.
    let lc = f.leading();
    let monic = monicize(&f);

    // Pick a prime where F stays squarefree; keep the factorization with
    // the fewest modular factors among a handful of candidates.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES {
        let fp = reduce_mod(&monic, p);
        if fp.len() != monic.coeffs.len() {
            continue; // should not happen (monic), defensive
        }
        let dfp = zp_derivative(&fp, p);
        if zp_gcd(fp.clone(), dfp, p).len() > 1 {
            continue; // not squarefree mod p
        }
        let factors = cz_factor(&fp, p);
        if factors.len() == 1 {
            return vec![f];
        }
        let better = match &best {
            None => true,
            Some((_, b)) => factors.len() < b.len(),
        };
        if better {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, mod_factors) = best.expect("no usable prime found for factorization");

    // Hensel-lift past twice the Mignotte bound.
    let n = monic.degree();
    let height = monic
        .coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::one);
    let bound: BigInt = ((BigInt::from(n) + BigInt::one()).sqrt() + 1) * (BigInt::one() << n) * height;
    let target = bound * 2 + 1;
    let mut modulus = BigInt::from(p);
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_tree(&monic, &mod_factors, p, &modulus);

    // Subset recombination with exact trial division.
    let mut remaining = monic;
    let mut pool: Vec<IntPoly> = lifted;
    let mut monic_factors: Vec<IntPoly> = Vec::new();
    'outer: loop {
        let k = pool.len();
        if k == 0 {
            break;
        }
        if k == 1 {
            monic_factors.push(remaining.clone());
            pool.clear();
            break;
        }
        for size in 1..=k / 2 {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let cand = symmetric_product(&pool, &idx, &modulus);
                if trial_ok(&remaining, &cand) {
                    remaining = remaining.div_exact(&cand);
                    monic_factors.push(cand);
                    let mut keep = Vec::new();
                    for (i, m) in pool.iter().enumerate() {
                        if !idx.contains(&i) {
                            keep.push(m.clone());
                        }
                    }
                    pool = keep;
                    continue 'outer;
                }
                if !next_combination(&mut idx, k) {
                    break;
                }
            }
        }
        // Nothing of size <= k/2 divides: the remainder is irreducible.
        monic_factors.push(remaining.clone());
        pool.clear();
    }

    // Undo the monicization: q(x) -> primitive part of q(lc * x).
    let mut out: Vec<IntPoly> = monic_factors
        .into_iter()
        .map(|q| {
            q.compose_linear(
                &num_rational::BigRational::from_integer(lc.clone()),
                &num_rational::BigRational::zero(),
            )
            .clear_denominators()
        })
        .collect();
    out.sort_by_key(|p| (p.degree(), p.coeffs.clone()));
    debug_assert_eq!(
        out.iter()
            .fold(IntPoly::one(), |acc, p| acc.mul(p))
            .primitive(),
        f
    );
    out
}

fn monicize(f: &IntPoly) -> IntPoly {
    let n = f.degree();
    let lc = f.leading();
    let mut coeffs = Vec::with_capacity(n + 1);
    // F_i = f_i * lc^(n-1-i) for i < n, F_n = 1
    for (i, c) in f.coeffs.iter().enumerate() {
        if i == n {
            coeffs.push(BigInt::one());
        } else {
            coeffs.push(c * pow_bigint(&lc, n - 1 - i));
        }
    }
    IntPoly::new(coeffs)
}

fn pow_bigint(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn trial_ok(f: &IntPoly, cand: &IntPoly) -> bool {
    if cand.degree() == 0 || cand.degree() > f.degree() {
        return false;
    }
    // Quick constant-term filter before the full division.
    let c0 = cand.coeff(0);
    if c0.is_zero() || !f.coeff(0).is_multiple_of(&c0) {
        return false;
    }
    f.divisible_by(cand)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn symmetric_product(pool: &[IntPoly], idx: &[usize], modulus: &BigInt) -> IntPoly {
    let mut acc = IntPoly::one();
    for &i in idx {
        acc = mul_mod(&acc, &pool[i], modulus);
    }
    symmetric_rep(&acc, modulus)
}

fn symmetric_rep(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs
            .iter()
            .map(|c| {
                let mut r = c.mod_floor(m);
                if r > half {
                    r -= m;
                }
                r
            })
            .collect(),
    )
}

fn reduce_coeffs(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs.iter().map(|c| c.mod_floor(m)).collect())
}

fn add_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_coeffs(&a.add(b), m)
}

fn sub_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_coeffs(&a.sub(b), m)
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_coeffs(&a.mul(b), m)
}

/// Division with remainder modulo m; the divisor must be monic.
fn divrem_mod(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(d.leading().is_one());
    let mut rem = reduce_coeffs(a, m).coeffs;
    let dlen = d.coeffs.len();
    if rem.len() < dlen {
        return (IntPoly::zero(), IntPoly::new(rem));
    }
    let qlen = rem.len() - dlen + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dlen - 1].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.coeffs.iter().enumerate() {
            let t = (&c * dc).mod_floor(m);
            rem[k + j] = (&rem[k + j] - t).mod_floor(m);
        }
        q[k] = c;
    }
    (IntPoly::new(q), reduce_coeffs(&IntPoly::new(rem), m))
}

/// Binary-tree quadratic Hensel lifting of a monic factorization from
/// mod p up to the given modulus (a power of p at least as large).
fn hensel_tree(f: &IntPoly, factors: &[Vec<u64>], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![reduce_coeffs(f, modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = zp_to_intpoly(&zp_product(left, p));
    let h0 = zp_to_intpoly(&zp_product(right, p));
    let (s0, t0) = bezout_mod_p(&g0, &h0, p);

    let mut g = g0;
    let mut h = h0;
    let mut s = s0;
    let mut t = t0;
    let mut m = BigInt::from(p);
    while &m < modulus {
        let m2 = &m * &m;
        // Lift the factorization f = g*h from mod m to mod m^2.
        let e = sub_mod(&reduce_coeffs(f, &m2), &mul_mod(&g, &h, &m2), &m2);
        let (q, r) = divrem_mod(&mul_mod(&s, &e, &m2), &h, &m2);
        let g_new = add_mod(&add_mod(&g, &mul_mod(&t, &e, &m2), &m2), &mul_mod(&q, &g, &m2), &m2);
        let h_new = add_mod(&h, &r, &m2);
        // Lift the Bezout identity s*g + t*h = 1 alongside.
        let b = sub_mod(
            &add_mod(&mul_mod(&s, &g_new, &m2), &mul_mod(&t, &h_new, &m2), &m2),
            &IntPoly::one(),
            &m2,
        );
        let (c, d) = divrem_mod(&mul_mod(&s, &b, &m2), &h_new, &m2);
        let s_new = sub_mod(&s, &d, &m2);
        let t_new = sub_mod(&sub_mod(&t, &mul_mod(&t, &b, &m2), &m2), &mul_mod(&c, &g_new, &m2), &m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    let mut out = hensel_tree(&reduce_coeffs(&g, &m), left, p, &m);
    out.extend(hensel_tree(&reduce_coeffs(&h, &m), right, p, &m));
    // Reduce to the requested modulus (m may overshoot it).
    out.into_iter().map(|f| reduce_coeffs(&f, modulus)).collect()
}

/// Extended Euclid for coprime monic g, h over F_p: s*g + t*h = 1.
fn bezout_mod_p(g: &IntPoly, h: &IntPoly, p: u64) -> (IntPoly, IntPoly) {
    let gp = reduce_mod(g, p);
    let hp = reduce_mod(h, p);
    let (d, s, t) = zp_ext_gcd(&gp, &hp, p);
    assert_eq!(d.len(), 1, "modular factors are not coprime");
    let inv = zp_inv(d[0], p);
    let s = zp_scale(&s, inv, p);
    let t = zp_scale(&t, inv, p);
    (zp_to_intpoly(&s), zp_to_intpoly(&t))
}

// ---- arithmetic in F_p[x]; coefficients as u64 < p, ascending ----

fn zp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn reduce_mod(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    zp_trim(
        f.coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn zp_to_intpoly(f: &[u64]) -> IntPoly {
    IntPoly::new(f.iter().map(|&c| BigInt::from(c)).collect())
}

fn zp_deg(f: &[u64]) -> isize {
    f.len() as isize - 1
}

fn zp_add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for (i, item) in v.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *item = (x + y) % p;
    }
    zp_trim(v)
}

fn zp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut v = vec![0u64; n];
    for (i, item) in v.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *item = (x + p - y) % p;
    }
    zp_trim(v)
}

fn zp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + x * y) % p;
        }
    }
    zp_trim(v)
}

fn zp_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    zp_trim(a.iter().map(|&x| x * c % p).collect())
}

fn zp_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0.
    zp_pow_scalar(a, p - 2, p)
}

fn zp_pow_scalar(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn zp_divrem(a: &[u64], d: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!d.is_empty());
    if zp_deg(a) < zp_deg(d) {
        return (vec![], a.to_vec());
    }
    let mut rem = a.to_vec();
    let dlen = d.len();
    let inv_lead = zp_inv(d[dlen - 1], p);
    let qlen = rem.len() - dlen + 1;
    let mut q = vec![0u64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dlen - 1] * inv_lead % p;
        if c == 0 {
            continue;
        }
        for (j, &dc) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * dc % p) % p;
        }
        q[k] = c;
    }
    (zp_trim(q), zp_trim(rem))
}

fn zp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let (_, r) = zp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = zp_inv(lc, p);
        a = zp_scale(&a, inv, p);
    }
    a
}

fn zp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        let s = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        let t = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

fn zp_derivative(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    zp_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % p) % p)
            .collect(),
    )
}

fn zp_product(fs: &[Vec<u64>], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    for f in fs {
        acc = zp_mul(&acc, f, p);
    }
    acc
}

fn zp_powmod(base: &[u64], e: &BigUint, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = zp_divrem(base, f, p).1;
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = zp_divrem(&zp_mul(&acc, &b, p), f, p).1;
        }
        b = zp_divrem(&zp_mul(&b, &b, p), f, p).1;
    }
    acc
}

/// Cantor-Zassenhaus factorization of a monic squarefree polynomial
/// over F_p (p odd). Returns monic irreducible factors, sorted.
fn cz_factor(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    // Distinct-degree stage.
    let mut rest = f.to_vec();
    let mut w = vec![0u64, 1]; // x
    let mut d = 0usize;
    let mut stages: Vec<(Vec<u64>, usize)> = Vec::new();
    while zp_deg(&rest) > 0 {
        d += 1;
        if 2 * d > zp_deg(&rest) as usize {
            stages.push((rest.clone(), zp_deg(&rest) as usize));
            break;
        }
        w = zp_powmod(&w, &BigUint::from(p), &rest, p);
        let wx = zp_sub(&w, &[0, 1], p);
        let g = zp_gcd(rest.clone(), wx, p);
        if zp_deg(&g) > 0 {
            stages.push((g.clone(), d));
            let (q, r) = zp_divrem(&rest, &g, p);
            debug_assert!(r.is_empty());
            rest = q;
            w = zp_divrem(&w, &rest, p).1;
        }
    }
    // Equal-degree stage.
    let mut rng = 0x9e3779b97f4a7c15u64 ^ (p << 32) ^ f.len() as u64;
    for (g, d) in stages {
        edf(&g, d, p, &mut rng, &mut out);
    }
    for f in out.iter_mut() {
        let inv = zp_inv(*f.last().unwrap(), p);
        *f = zp_scale(f, inv, p);
    }
    out.sort();
    out
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

fn edf(g: &[u64], d: usize, p: u64, rng: &mut u64, out: &mut Vec<Vec<u64>>) {
    let deg = zp_deg(g) as usize;
    if deg == d {
        out.push(g.to_vec());
        return;
    }
    // exponent (p^d - 1) / 2
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let r: Vec<u64> = zp_trim((0..deg).map(|_| xorshift(rng) % p).collect());
        if zp_deg(&r) < 1 {
            continue;
        }
        let s = zp_powmod(&r, &e, g, p);
        let s1 = zp_sub(&s, &[1], p);
        let h = zp_gcd(g.to_vec(), s1, p);
        let hd = zp_deg(&h);
        if hd > 0 && hd < zp_deg(g) {
            let (q, _) = zp_divrem(g, &h, p);
            edf(&h, d, p, rng, out);
            edf(&q, d, p, rng, out);
            return;
        }
    }
}

/// Convenience: the irreducible factor of a squarefree polynomial that
/// has its unique root inside the given open interval.
pub fn irreducible_factor_with_root(
    f: &IntPoly,
    interval: &crate::rational::RatInterval,
) -> IntPoly {
    let factors = factor_squarefree(&f.primitive());
    if factors.len() == 1 {
        return factors.into_iter().next().unwrap();
    }
    for fac in &factors {
        let chain = super::roots::SturmChain::new(&fac.to_rat());
        if chain.count_roots_open(&interval.lo, &interval.hi) == 1 {
            return fac.clone();
        }
    }
    panic!("no irreducible factor has a root in the isolating interval");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_product_of_quadratics() {
        // (X^2 - 2)(X^2 - 3)
        let f = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-3, 0, 1]));
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&IntPoly::from_i64(&[-2, 0, 1])));
        assert!(fs.contains(&IntPoly::from_i64(&[-3, 0, 1])));
    }

    #[test]
    fn detects_irreducible() {
        let f = IntPoly::from_i64(&[-1, -1, 1]); // X^2 - X - 1
        assert_eq!(factor_squarefree(&f), vec![f]);
        let g = IntPoly::from_i64(&[1, 0, -10, 0, 1]); // minpoly of sqrt2+sqrt3
        assert_eq!(factor_squarefree(&g), vec![g]);
    }

    #[test]
    fn factors_eq1_cubic() {
        // X^3 - 2X^2 + 1 = (X - 1)(X^2 - X - 1)
        let f = IntPoly::from_i64(&[1, 0, -2, 1]);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&IntPoly::from_i64(&[-1, 1])));
        assert!(fs.contains(&IntPoly::from_i64(&[-1, -1, 1])));
    }

    #[test]
    fn factors_non_monic() {
        // (2X - 1)(3X + 2)(X^2 + 1)
        let f = IntPoly::from_i64(&[-1, 2])
            .mul(&IntPoly::from_i64(&[2, 3]))
            .mul(&IntPoly::from_i64(&[1, 0, 1]));
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&IntPoly::from_i64(&[-1, 2])));
        assert!(fs.contains(&IntPoly::from_i64(&[2, 3])));
        assert!(fs.contains(&IntPoly::from_i64(&[1, 0, 1])));
    }

    #[test]
    fn multiplicities_via_yun() {
        // (X-1)^2 (X+3)
        let f = IntPoly::from_i64(&[-1, 1])
            .mul(&IntPoly::from_i64(&[-1, 1]))
            .mul(&IntPoly::from_i64(&[3, 1]));
        let fs = factor(&f);
        assert!(fs.contains(&(IntPoly::from_i64(&[-1, 1]), 2)));
        assert!(fs.contains(&(IntPoly::from_i64(&[3, 1]), 1)));
    }

    #[test]
    fn degree_ten_with_large_coefficients() {
        // Shape of the sharpness polynomials: Y^10 - 67*(64 Y^9 + ... + 63).
        let ms = [64i64, 63, 1, 63, 1, 63, 1, 63, 1, 63];
        let mut coeffs = vec![0i64; 11];
        coeffs[10] = 1;
        for (j, &m) in ms.iter().enumerate() {
            coeffs[9 - j] = -67 * m;
        }
        let f = IntPoly::from_i64(&coeffs);
        let fs = factor_squarefree(&f);
        assert_eq!(fs.len(), 1, "Eisenstein at 67 makes this irreducible");
    }
}
