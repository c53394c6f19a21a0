//! Small integer helpers shared by the ring, character and symbol layers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Least non-negative residue of `a` modulo `n`.
pub fn modulo(a: i64, n: u64) -> u64 {
    a.rem_euclid(n as i64) as u64
}

pub fn mod_pow(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = (result as u128 * b as u128 % n as u128) as u64;
        }
        b = (b as u128 * b as u128 % n as u128) as u64;
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inv(a: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if n == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Multiplicative order of `a` modulo `n`; `None` when `a` is not a unit.
pub fn mul_order(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(a % n, n) != 1 {
        return None;
    }
    let phi = euler_phi(n);
    let mut order = phi;
    for (q, _) in factorize(phi) {
        while order % q == 0 && mod_pow(a, order / q, n) == 1 {
            order /= q;
        }
    }
    Some(order)
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Solution `x mod (m1 m2)` of `x = a1 mod m1`, `x = a2 mod m2` for coprime moduli.
pub fn crt(a1: u64, m1: u64, a2: u64, m2: u64) -> u64 {
    let inv = mod_inv(m1 % m2, m2).expect("crt moduli must be coprime");
    let t = ((a2 as i128 - a1 as i128).rem_euclid(m2 as i128) * inv as i128) % m2 as i128;
    (a1 as i128 + m1 as i128 * t) as u64 % (m1 * m2)
}

pub fn legendre(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if mod_pow(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}
