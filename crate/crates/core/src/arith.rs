//! Integer helpers and polynomial arithmetic over the prime field Z_p.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Integers `(mu, nu)` with `mu * a + nu * b = gcd(a, b)`, and the gcd.
pub fn bezout(a: u64, b: u64) -> (i128, i128, u64) {
    let g = (a as i128).extended_gcd(&(b as i128));
    (g.x, g.y, g.gcd as u64)
}

// Polynomials over Z_p: coefficient vectors, constant term first, no trailing zeros.

pub(crate) fn zp_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn zp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    zp_trim(&mut out);
    out
}

/// Remainder of `a` modulo `b` (b nonzero).
pub(crate) fn zp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    zp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p).expect("nonzero leading coefficient");
    while r.len() > db {
        let dr = r.len() - 1;
        let c = mod_mul(r[dr], lead_inv, p);
        for i in 0..=db {
            let t = mod_mul(c, b[i], p);
            r[dr - db + i] = (r[dr - db + i] + p - t) % p;
        }
        zp_trim(&mut r);
    }
    r
}

pub(crate) fn zp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mod_mul(x, y, p)) % p;
        }
    }
    zp_rem(&prod, m, p)
}

fn zp_powmod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = zp_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            result = zp_mulmod(&result, &b, m, p);
        }
        b = zp_mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    result
}

fn zp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    zp_trim(&mut x);
    zp_trim(&mut y);
    while !y.is_empty() {
        let r = zp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Ben-Or irreducibility test for a polynomial of degree >= 1 over Z_p.
pub fn zp_is_irreducible(f: &[u64], p: u64) -> bool {
    let mut f = f.to_vec();
    zp_trim(&mut f);
    let deg = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    if deg == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..deg / 2 {
        xp = zp_powmod(&xp, p, &f, p);
        let g = zp_gcd(&f, &zp_sub(&xp, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
