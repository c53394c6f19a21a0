//! Finite chain rings `Z/p^k` and Galois rings `GR(p^k, m)`.
//!
//! Elements are stored in the power basis of a monic modulus polynomial whose
//! reduction mod p is irreducible. The modulus is the minimal polynomial of a
//! Teichmüller lift, so the class of `x` is itself a root of unity of order
//! prime to p. All values are small (`p^k < 2^31`), so products fit in `u64`.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::arith::{factorize, is_prime, mul_order};
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 8;
const MAX_MODULUS: u64 = 1 << 31;

/// Coordinates of an element in the power basis; only the first `m` are used.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem([u32; MAX_DEGREE]);

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).unwrap_or(0);
        if last == 0 {
            write!(f, "{}", self.0[0])
        } else {
            f.debug_list().entries(&self.0[..=last]).finish()
        }
    }
}

struct RingData {
    p: u64,
    k: u32,
    m: usize,
    /// p^k
    q: u64,
    /// Monic modulus `x^m + f_{m-1} x^{m-1} + ... + f_0`, stored as `[f_0, ..., f_{m-1}, 1]`.
    modulus: Option<Vec<u64>>,
    /// `-f_i mod p^k`, used to fold `x^m` back into the basis.
    tail: Vec<u64>,
    /// Powers p^0, ..., p^k.
    p_pows: Vec<u64>,
    /// Generator of the cyclic group of (p^m - 1)-th roots of unity.
    generator: RingElem,
}

/// A finite chain ring `GR(p^k, m)`; `m = 1` is plain `Z/p^k`.
///
/// Cloning is cheap; the ring data is shared.
#[derive(Clone)]
pub struct CoeffRing(Arc<RingData>);

impl PartialEq for CoeffRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.k == other.0.k
                && self.0.m == other.0.m
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for CoeffRing {}

impl fmt::Debug for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "Z/{}^{}", self.0.p, self.0.k),
            Some(poly) => write!(f, "GR({}^{}, {}) mod {:?}", self.0.p, self.0.k, self.0.m, poly),
        }
    }
}

/// Smallest unramified finite-precision ring containing the `e`-th roots of unity.
pub fn make_coeff_ring(p: u64, k: u32, e: u64) -> Result<CoeffRing> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidPrecision);
    }
    if e == 0 || e % p == 0 {
        return Err(Error::BadRootOrder { e, p });
    }
    let m = mul_order(p % e, e).expect("p is prime to e") as usize;
    if m > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(m));
    }
    if p.checked_pow(k).map_or(true, |q| q >= MAX_MODULUS) {
        return Err(Error::PrecisionTooLarge(p.saturating_pow(k)));
    }
    if m == 1 {
        return Ok(CoeffRing::assemble(p, k, 1, None));
    }
    let residue_poly = smallest_irreducible(p, m);
    let provisional = CoeffRing::bare(p, k, m, Some(residue_poly));
    let lifted = provisional.teichmuller_minimal_polynomial();
    Ok(CoeffRing::assemble(p, k, m, Some(lifted)))
}

/// `Z/p^k` for any prime `p`, including 2. Character and symbol layers
/// need an odd `p`; linear algebra does not.
pub fn integers_mod(p: u64, k: u32) -> Result<CoeffRing> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidPrecision);
    }
    if p.checked_pow(k).map_or(true, |q| q >= MAX_MODULUS) {
        return Err(Error::PrecisionTooLarge(p.saturating_pow(k)));
    }
    Ok(CoeffRing::assemble(p, k, 1, None))
}

/// Lexicographically smallest monic irreducible polynomial of degree `m >= 2`
/// over the prime field, ordered by `f_{m-1}, ..., f_0` read as base-p digits.
fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let count = p.pow(m as u32);
    for code in 0..count {
        let mut poly = digits(code, p, m);
        poly.push(1);
        if poly[0] != 0 && is_irreducible_mod_p(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = code % p;
        code /= p;
    }
    out
}

/// Trial division by every monic polynomial of degree at most `deg / 2`.
fn is_irreducible_mod_p(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if poly_rem_mod_p(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_mod_p(num: &[u64], monic: &[u64], p: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    let dd = monic.len() - 1;
    while rem.len() > dd {
        let lead = rem.pop().unwrap();
        if lead != 0 {
            let off = rem.len() - dd;
            for (i, &c) in monic[..dd].iter().enumerate() {
                rem[off + i] = (rem[off + i] + p - lead * c % p) % p;
            }
        }
    }
    rem
}

impl CoeffRing {
    fn assemble(p: u64, k: u32, m: usize, modulus: Option<Vec<u64>>) -> CoeffRing {
        let bare = CoeffRing::bare(p, k, m, modulus);
        let generator = bare.find_root_generator();
        bare.with_generator(generator)
    }

    /// Ring data with a placeholder root generator.
    fn bare(p: u64, k: u32, m: usize, modulus: Option<Vec<u64>>) -> CoeffRing {
        let q = p.pow(k);
        let modulus: Option<Vec<u64>> = modulus.map(|poly| poly.iter().map(|&c| c % q).collect());
        let tail = match &modulus {
            Some(poly) => poly[..m].iter().map(|&f| (q - f) % q).collect(),
            None => vec![0],
        };
        CoeffRing(Arc::new(RingData {
            p,
            k,
            m,
            q,
            modulus,
            tail,
            p_pows: (0..=k).map(|i| p.pow(i)).collect(),
            generator: RingElem::default(),
        }))
    }

    fn with_generator(&self, generator: RingElem) -> CoeffRing {
        let d = &self.0;
        CoeffRing(Arc::new(RingData {
            p: d.p,
            k: d.k,
            m: d.m,
            q: d.q,
            modulus: d.modulus.clone(),
            tail: d.tail.clone(),
            p_pows: d.p_pows.clone(),
            generator,
        }))
    }

    /// Minimal polynomial of the Teichmüller lift of `x`, with coefficients in `Z/p^k`.
    fn teichmuller_minimal_polynomial(&self) -> Vec<u64> {
        let m = self.m();
        let mut x = RingElem::default();
        x.0[1] = 1;
        let t = self.teichmuller_lift(x);
        // prod_{i<m} (X - t^{p^i})
        let mut poly = vec![self.one()];
        let mut conj = t;
        for _ in 0..m {
            let mut next = vec![self.zero(); poly.len() + 1];
            for (j, &c) in poly.iter().enumerate() {
                next[j + 1] = self.add(next[j + 1], c);
                next[j] = self.sub(next[j], self.mul(conj, c));
            }
            poly = next;
            conj = self.pow(conj, self.p());
        }
        poly.iter()
            .map(|c| {
                debug_assert!(c.0[1..].iter().all(|&x| x == 0));
                c.0[0] as u64
            })
            .collect()
    }

    /// `y^{q^{k-1}}` with `q = p^m`: the root of unity congruent to `y` mod p.
    fn teichmuller_lift(&self, y: RingElem) -> RingElem {
        let mut t = y;
        for _ in 0..(self.m() as u32 * (self.k() - 1)) {
            t = self.pow(t, self.p());
        }
        t
    }

    fn find_root_generator(&self) -> RingElem {
        let order = self.residue_units_order();
        let primes: Vec<u64> = factorize(order).into_iter().map(|(r, _)| r).collect();
        let residue = CoeffRing::bare(self.p(), 1, self.m(), self.0.modulus.clone());
        let count = self.p().pow(self.m() as u32);
        for code in 1..count {
            let y = residue.from_coeffs(&digits(code, self.p(), self.m()));
            if primes
                .iter()
                .all(|&r| residue.pow(y, order / r) != residue.one())
            {
                return self.teichmuller_lift(self.from_coeffs(&digits(code, self.p(), self.m())));
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Same modulus at a lower precision `k`.
    pub fn with_precision(&self, k: u32) -> CoeffRing {
        assert!(k >= 1 && k <= self.k(), "precision can only be lowered");
        let bare = CoeffRing::bare(self.p(), k, self.m(), self.0.modulus.clone());
        // Teichmüller lifts reduce to Teichmüller lifts.
        let generator = bare.reduce_from(self, self.0.generator);
        bare.with_generator(generator)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// `p^k`, the characteristic.
    pub fn characteristic(&self) -> u64 {
        self.0.q
    }

    pub fn modulus_poly(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    /// `p^m - 1`, the order of the group of prime-to-p roots of unity.
    pub fn residue_units_order(&self) -> u64 {
        self.p().pow(self.m() as u32) - 1
    }

    pub fn p_pow(&self, v: u32) -> u64 {
        self.0.p_pows[v as usize]
    }

    pub fn zero(&self) -> RingElem {
        RingElem::default()
    }

    pub fn one(&self) -> RingElem {
        self.int(1)
    }

    pub fn int(&self, a: i64) -> RingElem {
        let mut e = RingElem::default();
        e.0[0] = a.rem_euclid(self.0.q as i64) as u32;
        e
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> RingElem {
        let mut e = RingElem::default();
        for (slot, &c) in e.0.iter_mut().zip(coeffs.iter().take(self.m())) {
            *slot = (c % self.0.q) as u32;
        }
        e
    }

    pub fn coeffs<'a>(&self, x: &'a RingElem) -> &'a [u32] {
        &x.0[..self.m()]
    }

    pub fn is_zero(&self, x: RingElem) -> bool {
        x.0[..self.m()].iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        let q = self.0.q as u32;
        let mut out = RingElem::default();
        for i in 0..self.m() {
            let s = a.0[i] + b.0[i];
            out.0[i] = if s >= q { s - q } else { s };
        }
        out
    }

    pub fn neg(&self, a: RingElem) -> RingElem {
        let q = self.0.q as u32;
        let mut out = RingElem::default();
        for i in 0..self.m() {
            out.0[i] = if a.0[i] == 0 { 0 } else { q - a.0[i] };
        }
        out
    }

    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        let q = self.0.q;
        let m = self.m();
        if m == 1 {
            let mut out = RingElem::default();
            out.0[0] = (a.0[0] as u64 * b.0[0] as u64 % q) as u32;
            return out;
        }
        let mut prod = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..m {
            let ai = a.0[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + ai * b.0[j] as u64) % q;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &t) in self.0.tail.iter().enumerate() {
                prod[d - m + i] = (prod[d - m + i] + c * t) % q;
            }
        }
        let mut out = RingElem::default();
        for i in 0..m {
            out.0[i] = prod[i] as u32;
        }
        out
    }

    /// Multiplication by an integer.
    pub fn mul_int(&self, a: RingElem, n: i64) -> RingElem {
        self.mul(a, self.int(n))
    }

    pub fn pow(&self, a: RingElem, mut e: u64) -> RingElem {
        let mut result = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Largest `v` with `x` divisible by `p^v`; `k` for zero.
    pub fn valuation(&self, x: RingElem) -> u32 {
        let mut best = self.k();
        for &c in &x.0[..self.m()] {
            if c != 0 {
                best = best.min(crate::arith::valuation(c as u64, self.p()));
            }
        }
        best
    }

    pub fn is_unit(&self, x: RingElem) -> bool {
        self.valuation(x) == 0
    }

    /// Inverse of a unit: residue-field inverse refined by Newton iteration.
    pub fn inv(&self, x: RingElem) -> Option<RingElem> {
        if !self.is_unit(x) {
            return None;
        }
        // x^{p^m - 2} inverts x modulo p
        let mut y = self.pow(x, self.residue_units_order() - 1);
        let two = self.int(2);
        let mut precision = 1;
        while precision < self.k() {
            y = self.mul(y, self.sub(two, self.mul(x, y)));
            precision *= 2;
        }
        debug_assert_eq!(self.mul(x, y), self.one());
        Some(y)
    }

    /// `x / p^v` for `x` divisible by `p^v` (coordinates divided exactly).
    pub fn div_p_pow(&self, x: RingElem, v: u32) -> RingElem {
        let d = self.p_pow(v) as u32;
        let mut out = RingElem::default();
        for i in 0..self.m() {
            debug_assert_eq!(x.0[i] % d, 0);
            out.0[i] = x.0[i] / d;
        }
        out
    }

    /// Split `x = quotient * p^v + remainder` with remainder coordinates in `[0, p^v)`.
    pub fn divmod_p_pow(&self, x: RingElem, v: u32) -> (RingElem, RingElem) {
        let d = self.p_pow(v) as u32;
        let mut quo = RingElem::default();
        let mut rem = RingElem::default();
        for i in 0..self.m() {
            quo.0[i] = x.0[i] / d;
            rem.0[i] = x.0[i] % d;
        }
        (quo, rem)
    }

    /// Image of an element of `other` (same p and modulus, precision at least ours).
    pub fn reduce_from(&self, other: &CoeffRing, x: RingElem) -> RingElem {
        debug_assert!(other.k() >= self.k() && other.p() == self.p() && other.m() == self.m());
        let q = self.0.q as u32;
        let mut out = RingElem::default();
        for i in 0..self.m() {
            out.0[i] = x.0[i] % q;
        }
        out
    }

    /// Deterministic primitive `n`-th root of unity.
    pub fn root_of_unity(&self, n: u64) -> Result<RingElem> {
        let order = self.residue_units_order();
        if n == 0 || order % n != 0 {
            return Err(Error::NoRootOfUnity { n, order });
        }
        Ok(self.pow(self.0.generator, order / n))
    }

    /// The root of unity of order dividing `p - 1` congruent to `a` mod p.
    pub fn teichmuller(&self, a: i64) -> Result<RingElem> {
        if a.rem_euclid(self.p() as i64) == 0 {
            return Err(Error::ZeroResidue(a));
        }
        let mut t = self.int(a);
        for _ in 1..self.k() {
            t = self.pow(t, self.p());
        }
        Ok(t)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> RingElem {
        let mut e = RingElem::default();
        for i in 0..self.m() {
            e.0[i] = rng.gen_range(0..self.0.q) as u32;
        }
        e
    }

    /// Human-readable form: an integer for `m = 1`, a coordinate tuple otherwise.
    pub fn format(&self, x: RingElem) -> String {
        if self.m() == 1 {
            x.0[0].to_string()
        } else {
            let parts: Vec<String> = x.0[..self.m()].iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn integers_mod_two_power() {
        let r = integers_mod(2, 3).unwrap();
        assert_eq!(r.characteristic(), 8);
        assert_eq!(r.inv(r.int(3)), Some(r.int(3)));
        assert_eq!(r.inv(r.int(6)), None);
        assert_eq!(r.valuation(r.int(4)), 2);
        assert!(integers_mod(4, 1).is_err());
    }

    #[test]
    fn degree_is_order_of_p() {
        assert_eq!(make_coeff_ring(5, 1, 4).unwrap().m(), 1);
        assert_eq!(make_coeff_ring(7, 1, 20).unwrap().m(), 4);
        let r = make_coeff_ring(3, 2, 2).unwrap();
        assert_eq!((r.m(), r.characteristic()), (1, 9));
        assert!(r.modulus_poly().is_none());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_coeff_ring(4, 1, 3).unwrap_err(), Error::InvalidPrime(4));
        assert_eq!(make_coeff_ring(2, 1, 3).unwrap_err(), Error::InvalidPrime(2));
        assert!(matches!(make_coeff_ring(5, 1, 10), Err(Error::BadRootOrder { .. })));
        assert_eq!(make_coeff_ring(5, 0, 4).unwrap_err(), Error::InvalidPrecision);
    }

    #[test]
    fn roots_of_unity_examples() {
        let r = make_coeff_ring(5, 2, 4).unwrap();
        assert_eq!(r.root_of_unity(1).unwrap(), r.one());
        assert_eq!(r.root_of_unity(2).unwrap(), r.int(-1));
        assert_eq!(r.root_of_unity(4).unwrap(), r.int(7));
        assert!(r.root_of_unity(3).is_err());
    }

    #[test]
    fn teichmuller_examples() {
        let r = make_coeff_ring(5, 2, 4).unwrap();
        assert_eq!(r.teichmuller(1).unwrap(), r.one());
        assert_eq!(r.teichmuller(4).unwrap(), r.int(-1));
        assert_eq!(r.teichmuller(2).unwrap(), r.int(7));
        assert_eq!(r.teichmuller(5), Err(Error::ZeroResidue(5)));
        let r7 = make_coeff_ring(7, 1, 6).unwrap();
        assert_eq!(r7.teichmuller(2).unwrap(), r7.int(2));
    }

    #[test]
    fn galois_ring_modulus_is_teichmuller() {
        for (p, k, e) in [(7, 2, 24), (3, 3, 4), (5, 2, 8), (7, 2, 20)] {
            let r = make_coeff_ring(p, k, e).unwrap();
            let mut x = r.zero();
            x.0[1] = 1;
            let order = r.residue_units_order();
            assert_eq!(r.pow(x, order), r.one(), "x should be a root of unity in {r:?}");
        }
    }

    #[test]
    fn residue_field_of_galois_ring_is_a_field() {
        let r = make_coeff_ring(3, 1, 8).unwrap();
        assert_eq!(r.m(), 2);
        for code in 1..9u64 {
            let x = r.from_coeffs(&[code % 3, code / 3]);
            let y = r.inv(x).unwrap();
            assert_eq!(r.mul(x, y), r.one());
        }
    }

    #[test]
    fn inverse_in_galois_ring() {
        let r = make_coeff_ring(7, 3, 24).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let x = r.random(&mut rng);
            match r.inv(x) {
                Some(y) => assert_eq!(r.mul(x, y), r.one()),
                None => assert!(r.valuation(x) > 0),
            }
        }
    }
}
