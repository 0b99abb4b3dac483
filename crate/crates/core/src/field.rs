//! Exact arithmetic in GF(p^h) for odd primes p.
//!
//! A [`Field`] fixes a monic irreducible modulus over Z_p and a primitive
//! element. Elements are stored by their polynomial-basis coordinates packed
//! into one integer whose ordering is the lexicographic order of the
//! coefficient list (constant term first). "Smallest" anywhere in this crate
//! refers to that order, so every deterministic choice is reproducible.
//!
//! When the field is small enough (see [`FieldOptions::dlog_limit`]) a
//! discrete-log table is built once at construction and used for
//! multiplication, inversion and root extraction.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{self, mod_inv, mod_mul, zp_is_irreducible, zp_mulmod, zp_trim};
use crate::error::{Error, Result};

/// Default bound on the field order for building the discrete-log table.
pub const DEFAULT_DLOG_LIMIT: u64 = 1 << 20;
const MAX_FIELD_ORDER: u64 = 1 << 40;

static NEXT_FIELD_ID: AtomicU32 = AtomicU32::new(1);

/// An element of some [`Field`]. Arithmetic goes through the owning field;
/// using an element with the wrong field panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    ctx: u32,
    val: u64,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    /// Position of the element in the canonical (lexicographic) order.
    pub fn index(&self) -> u64 {
        self.val
    }

    pub fn ctx_id(&self) -> u32 {
        self.ctx
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}#{}", self.ctx, self.val)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FieldOptions {
    /// Build a discrete-log table when `p^h` is at most this value.
    pub dlog_limit: u64,
}

impl Default for FieldOptions {
    fn default() -> Self {
        FieldOptions { dlog_limit: DEFAULT_DLOG_LIMIT }
    }
}

/// Serialized field description: `{"p": int, "h": int, "modulus": [int,...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u64,
    pub h: u32,
    pub modulus: Vec<u64>,
}

struct LogTables {
    log: Vec<u64>,
    exp: Vec<u64>,
}

/// The finite field GF(p^h) with a fixed modulus and primitive element.
pub struct Field {
    id: u32,
    p: u64,
    h: u32,
    q: u64,
    modulus: Vec<u64>,
    generator: u64,
    order_factors: Vec<u64>,
    tables: Option<LogTables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("h", &self.h)
            .field("modulus", &self.modulus)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl Field {
    /// Builds GF(p^h). Without a modulus the lexicographically smallest monic
    /// irreducible polynomial of degree `h` is used.
    pub fn new(p: u64, h: u32, modulus: Option<&[u64]>) -> Result<Arc<Field>> {
        Self::with_options(p, h, modulus, FieldOptions::default())
    }

    pub fn with_options(
        p: u64,
        h: u32,
        modulus: Option<&[u64]>,
        opts: FieldOptions,
    ) -> Result<Arc<Field>> {
        if p < 3 || !arith::is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if h == 0 {
            return Err(Error::DegreeMismatch("extension degree must be at least 1".into()));
        }
        let q = match p.checked_pow(h) {
            Some(q) if q <= MAX_FIELD_ORDER => q,
            _ => return Err(Error::FieldTooLarge(p, h)),
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != h as usize + 1 {
                    return Err(Error::DegreeMismatch(format!(
                        "modulus has {} coefficients, degree {} needs {}",
                        m.len(),
                        h,
                        h + 1
                    )));
                }
                if m[h as usize] != 1 {
                    return Err(Error::DegreeMismatch("modulus must be monic".into()));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::DegreeMismatch(format!(
                        "modulus coefficients must lie in [0, {p})"
                    )));
                }
                if !zp_is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                m.to_vec()
            }
            None => smallest_irreducible(p, h),
        };

        let mut field = Field {
            id: NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed),
            p,
            h,
            q,
            modulus,
            generator: 0,
            order_factors: arith::prime_factors(q - 1),
            tables: None,
        };
        field.generator = (1..q)
            .find(|&v| field.has_full_order_slow(v))
            .expect("a finite field has a primitive element");
        if q <= opts.dlog_limit {
            field.build_tables();
        }
        Ok(Arc::new(field))
    }

    pub fn from_descriptor(d: &FieldDescriptor, opts: FieldOptions) -> Result<Arc<Field>> {
        Self::with_options(d.p, d.h, Some(&d.modulus), opts)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p, h: self.h, modulus: self.modulus.clone() }
    }

    pub fn id(&self) -> u32 {
        self.id
    }
    pub fn characteristic(&self) -> u64 {
        self.p
    }
    pub fn degree(&self) -> u32 {
        self.h
    }
    pub fn order(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    pub fn has_dlog_table(&self) -> bool {
        self.tables.is_some()
    }

    /// `p^j` as an integer (`j <= h`).
    pub fn p_pow(&self, j: u32) -> u64 {
        self.p.pow(j)
    }

    fn mk(&self, val: u64) -> FieldElement {
        FieldElement { ctx: self.id, val }
    }

    #[inline]
    fn own(&self, x: FieldElement) -> u64 {
        assert_eq!(x.ctx, self.id, "element used with a foreign field");
        x.val
    }

    /// `Ok` iff `x` belongs to this field.
    pub fn check(&self, x: FieldElement) -> Result<()> {
        if x.ctx == self.id {
            Ok(())
        } else {
            Err(Error::ForeignElement)
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.mk(0)
    }

    pub fn one(&self) -> FieldElement {
        self.mk(self.p.pow(self.h - 1))
    }

    /// The primitive element fixed at construction.
    pub fn generator(&self) -> FieldElement {
        self.mk(self.generator)
    }

    /// Image of an integer under Z -> Z_p -> GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.mk(r * self.p.pow(self.h - 1))
    }

    /// Element from polynomial-basis coordinates, constant term first.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.h as usize {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.h,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(format!("coordinate {c} not in [0, {})", self.p)));
        }
        Ok(self.mk(self.pack(coeffs)))
    }

    /// The element at position `i` of the canonical order (`i < q`).
    pub fn from_index(&self, i: u64) -> FieldElement {
        assert!(i < self.q, "index {i} out of range for a field of order {}", self.q);
        self.mk(i)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        self.unpack(self.own(x))
    }

    /// All field elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |v| self.mk(v))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.q).map(move |v| self.mk(v))
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().fold(0, |acc, &c| acc * self.p + c)
    }

    fn unpack(&self, mut v: u64) -> Vec<u64> {
        let h = self.h as usize;
        let mut c = vec![0; h];
        for i in (0..h).rev() {
            c[i] = v % self.p;
            v /= self.p;
        }
        c
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let (mut a, mut b) = (self.own(x), self.own(y));
        if self.h == 1 {
            return self.mk((a + b) % self.p);
        }
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.h {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        self.mk(out)
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let mut a = self.own(x);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.h {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        self.mk(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let (a, b) = (self.own(x), self.own(y));
        if a == 0 || b == 0 {
            return self.mk(0);
        }
        match &self.tables {
            Some(t) => {
                let m = self.q - 1;
                let s = t.log[a as usize] + t.log[b as usize];
                self.mk(t.exp[(if s >= m { s - m } else { s }) as usize])
            }
            None => self.mk(self.mul_slow(a, b)),
        }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let mut x = self.unpack(a);
        let mut y = self.unpack(b);
        zp_trim(&mut x);
        zp_trim(&mut y);
        let mut r = zp_mulmod(&x, &y, &self.modulus, self.p);
        r.resize(self.h as usize, 0);
        self.pack(&r)
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut result = self.p.pow(self.h - 1);
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_slow(result, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        result
    }

    fn has_full_order_slow(&self, v: u64) -> bool {
        let one = self.p.pow(self.h - 1);
        let m = self.q - 1;
        self.order_factors.iter().all(|&f| self.pow_slow(v, m / f) != one)
    }

    fn build_tables(&mut self) {
        let m = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(m);
        let mut log = vec![0u64; self.q as usize];
        let mut cur = self.p.pow(self.h - 1);
        for i in 0..m {
            exp.push(cur);
            log[cur as usize] = i as u64;
            cur = self.mul_slow(cur, self.generator);
        }
        self.tables = Some(LogTables { log, exp });
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        let a = self.own(x);
        if e == 0 {
            return self.one();
        }
        if a == 0 {
            return self.zero();
        }
        match &self.tables {
            Some(t) => {
                let m = self.q - 1;
                self.mk(t.exp[mod_mul(t.log[a as usize], e % m, m) as usize])
            }
            None => self.mk(self.pow_slow(a, e % (self.q - 1))),
        }
    }

    /// `x^n` for a signed exponent; `x` must be nonzero when `n < 0`.
    pub fn pow_signed(&self, x: FieldElement, n: i128) -> FieldElement {
        if n >= 0 {
            self.pow(x, n as u64)
        } else {
            self.pow(self.inv(x), n.unsigned_abs() as u64)
        }
    }

    pub fn checked_inv(&self, x: FieldElement) -> Option<FieldElement> {
        let a = self.own(x);
        if a == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let m = self.q - 1;
                let l = t.log[a as usize];
                self.mk(t.exp[((m - l) % m) as usize])
            }
            None => self.mk(self.pow_slow(a, self.q - 2)),
        })
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        self.checked_inv(x).expect("inverse of zero")
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    pub fn sum<I: IntoIterator<Item = FieldElement>>(&self, it: I) -> FieldElement {
        it.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = FieldElement>>(&self, it: I) -> FieldElement {
        it.into_iter().fold(self.one(), |acc, x| self.mul(acc, x))
    }

    /// Discrete log base the generator, when the table exists.
    pub fn dlog(&self, x: FieldElement) -> Option<u64> {
        let a = self.own(x);
        match (&self.tables, a) {
            (_, 0) => None,
            (Some(t), _) => Some(t.log[a as usize]),
            (None, _) => None,
        }
    }

    /// `x^(p^e)`, with `e` reduced modulo `h`.
    pub fn frobenius(&self, x: FieldElement, e: u32) -> FieldElement {
        let e = e % self.h;
        if e == 0 {
            return x;
        }
        self.pow(x, self.p.pow(e))
    }

    fn require_divides(&self, e: u32) -> Result<()> {
        if e == 0 || !self.h.is_multiple_of(e) {
            return Err(Error::EDoesNotDivideH { e, h: self.h });
        }
        Ok(())
    }

    /// Is `x` in the subfield GF(p^e)? (`e | h`)
    pub fn in_subfield(&self, x: FieldElement, e: u32) -> Result<bool> {
        self.require_divides(e)?;
        Ok(self.frobenius(x, e) == x)
    }

    /// The subfield GF(p^e), sorted in canonical order.
    pub fn subfield_elements(&self, e: u32) -> Result<Vec<FieldElement>> {
        self.require_divides(e)?;
        let sub = self.p.pow(e) - 1;
        let step = (self.q - 1) / sub;
        let g = self.generator();
        let mut out: Vec<FieldElement> = std::iter::once(self.zero())
            .chain((0..sub).map(|j| self.pow(g, j * step)))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Trace from GF(q) down to GF(p^e): `x + x^(p^e) + ... + x^(p^(h-e))`.
    pub fn trace_to(&self, x: FieldElement, e: u32) -> Result<FieldElement> {
        self.require_divides(e)?;
        let mut acc = self.zero();
        let mut term = x;
        for _ in 0..self.h / e {
            acc = self.add(acc, term);
            term = self.frobenius(term, e);
        }
        Ok(acc)
    }

    fn norm_exponent_gcd(&self, e: u32) -> (u64, u64) {
        let w = self.p.pow(e % self.h) + 1;
        (w, w.gcd(&(self.q - 1)))
    }

    /// Membership in `E = { x^(p^e+1) : x != 0 }`.
    pub fn in_image_e(&self, c: FieldElement, e: u32) -> Result<bool> {
        self.check(c)?;
        if c.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (_, d) = self.norm_exponent_gcd(e);
        Ok(self.pow(c, (self.q - 1) / d) == self.one())
    }

    /// A solution `v` of `v^(p^e+1) = c`. With a discrete-log table the root
    /// with the smallest discrete log is returned.
    pub fn solve_norm_equation(&self, c: FieldElement, e: u32) -> Result<FieldElement> {
        if !self.in_image_e(c, e)? {
            return Err(Error::NotInE);
        }
        let m = self.q - 1;
        let (w, d) = self.norm_exponent_gcd(e);
        let root = if let Some(l) = self.dlog(c) {
            // s * w = l (mod m); the smallest s lies in [0, m/d)
            let md = m / d;
            let inv = mod_inv((w / d) % md, md).expect("w/d is a unit mod m/d");
            let s = mod_mul((l / d) % md, inv, md);
            self.pow(self.generator(), s)
        } else if d == 1 {
            self.pow(c, mod_inv(w % m, m).expect("unit"))
        } else if d == 2 {
            let r = self.sqrt(c).ok_or(Error::NotInE)?;
            let (w2, m2) = (w / 2, m / 2);
            if w2 % 2 == 1 {
                self.pow(r, mod_inv(w2 % m, m).expect("odd half-exponent is a unit"))
            } else {
                // m/2 odd: exactly one of +-r is a square
                let r = if self.is_square(r) { r } else { self.neg(r) };
                self.pow(r, mod_inv(w2 % m2, m2).expect("unit mod m/2"))
            }
        } else {
            return Err(Error::NoDlogTable(d));
        };
        debug_assert_eq!(self.pow(root, w), c);
        Ok(root)
    }

    pub fn is_square(&self, c: FieldElement) -> bool {
        c.is_zero() || self.pow(c, (self.q - 1) / 2) == self.one()
    }

    /// A square root of `c` if one exists. With a discrete-log table the
    /// root with the smaller discrete log is returned; otherwise the root
    /// smaller in canonical order.
    pub fn sqrt(&self, c: FieldElement) -> Option<FieldElement> {
        self.own(c);
        if c.is_zero() {
            return Some(c);
        }
        if !self.is_square(c) {
            return None;
        }
        if let Some(l) = self.dlog(c) {
            return Some(self.pow(self.generator(), l / 2));
        }
        let r = self.tonelli_shanks(c);
        let other = self.neg(r);
        Some(if other < r { other } else { r })
    }

    fn tonelli_shanks(&self, c: FieldElement) -> FieldElement {
        let m = self.q - 1;
        let s = m.trailing_zeros();
        let odd = m >> s;
        let z = self
            .nonzero_elements()
            .find(|&z| !self.is_square(z))
            .expect("odd-order fields have non-squares");
        let mut mm = s;
        let mut cc = self.pow(z, odd);
        let mut t = self.pow(c, odd);
        let mut r = self.pow(c, odd.div_ceil(2));
        let one = self.one();
        while t != one {
            let mut i = 0;
            let mut t2 = t;
            while t2 != one {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(cc, 1u64 << (mm - i - 1));
            mm = i;
            cc = self.mul(b, b);
            t = self.mul(t, cc);
            r = self.mul(r, b);
        }
        r
    }

    /// Exact multiplicative order of a nonzero element.
    pub fn element_order(&self, c: FieldElement) -> Result<u64> {
        self.check(c)?;
        if c.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut ord = self.q - 1;
        for &f in &self.order_factors {
            while ord.is_multiple_of(f) && self.pow(c, ord / f) == self.one() {
                ord /= f;
            }
        }
        Ok(ord)
    }

    /// The element of order exactly `t` with the smallest discrete log,
    /// restricted to GF(p^e)* when `subfield = Some(e)`.
    pub fn find_element_of_order(&self, t: u64, subfield: Option<u32>) -> Result<FieldElement> {
        let group = match subfield {
            Some(e) => {
                self.require_divides(e)?;
                self.p.pow(e) - 1
            }
            None => self.q - 1,
        };
        if t == 0 || group % t != 0 {
            return Err(Error::NoSuchOrder(t));
        }
        Ok(self.pow(self.generator(), (self.q - 1) / t))
    }

    /// Coefficient tuple, followed by `=g^k` when the table exists.
    pub fn display(&self, x: FieldElement) -> String {
        let c = self.coeffs(x);
        let body = c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        match self.dlog(x) {
            Some(k) => format!("({body})=g^{k}"),
            None => format!("({body})"),
        }
    }
}

fn smallest_irreducible(p: u64, h: u32) -> Vec<u64> {
    // lower coefficients (c_0, ..., c_{h-1}) enumerated in lexicographic order
    let count = p.pow(h);
    for idx in 0..count {
        let mut low = vec![0u64; h as usize];
        let mut v = idx;
        for i in (0..h as usize).rev() {
            low[i] = v % p;
            v /= p;
        }
        let mut f = low;
        f.push(1);
        if zp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Arc<Field> {
        Field::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn gf3_defaults() {
        let f = Field::new(3, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.coeffs(f.generator()), vec![2]);
    }

    #[test]
    fn gf9_default_modulus_is_x2_plus_1() {
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // x has order 4 and 2x too; 1 + x is the first primitive element
        assert_eq!(f.coeffs(f.generator()), vec![1, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(3, 2, Some(&[0, 0, 1])).unwrap_err(), Error::ReducibleModulus(3));
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NonPrimeP(4));
        assert_eq!(Field::new(2, 3, None).unwrap_err(), Error::NonPrimeP(2));
        assert!(matches!(Field::new(3, 2, Some(&[1, 1])), Err(Error::DegreeMismatch(_))));
        assert!(matches!(Field::new(3, 2, Some(&[1, 0, 2])), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn frobenius_examples() {
        let f = gf9();
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(f.coeffs(f.frobenius(x, 1)), vec![0, 2]);
        assert_eq!(f.frobenius(f.frobenius(x, 1), 1), x);
        assert_eq!(f.frobenius(f.one(), 1), f.one());
    }

    #[test]
    fn trace_examples() {
        let f = gf9();
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(f.trace_to(x, 1).unwrap(), f.zero());
        assert_eq!(f.trace_to(f.one(), 1).unwrap(), f.from_int(2));
        assert_eq!(f.trace_to(x, 2).unwrap(), x);
        let f27 = Field::new(3, 3, None).unwrap();
        assert_eq!(
            f27.trace_to(f27.one(), 2).unwrap_err(),
            Error::EDoesNotDivideH { e: 2, h: 3 }
        );
    }

    #[test]
    fn image_of_norm_map() {
        let f = gf9();
        let x = f.element(&[0, 1]).unwrap();
        assert!(f.in_image_e(f.from_int(2), 1).unwrap());
        assert!(f.in_image_e(f.one(), 1).unwrap());
        assert!(!f.in_image_e(x, 1).unwrap());
        assert_eq!(f.in_image_e(f.zero(), 1).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn norm_equation_examples() {
        let f = gf9();
        assert_eq!(f.solve_norm_equation(f.one(), 1).unwrap(), f.one());
        let two = f.from_int(2);
        let v = f.solve_norm_equation(two, 1).unwrap();
        assert_eq!(f.pow(v, 4), two);
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(f.solve_norm_equation(x, 1).unwrap_err(), Error::NotInE);
    }

    #[test]
    fn norm_equation_without_table() {
        // GF(27), e = 1: gcd(4, 26) = 2, and (p^e+1)/2 = 2 is even
        let f = Field::with_options(3, 3, None, FieldOptions { dlog_limit: 0 }).unwrap();
        assert!(!f.has_dlog_table());
        for c in f.nonzero_elements() {
            if f.in_image_e(c, 1).unwrap() {
                let v = f.solve_norm_equation(c, 1).unwrap();
                assert_eq!(f.pow(v, 4), c);
            }
        }
        // GF(125), e = 1: gcd(6, 124) = 2 and 6/2 = 3 is odd
        let f = Field::with_options(5, 3, None, FieldOptions { dlog_limit: 0 }).unwrap();
        for c in f.nonzero_elements() {
            if f.in_image_e(c, 1).unwrap() {
                assert_eq!(f.pow(f.solve_norm_equation(c, 1).unwrap(), 6), c);
            }
        }
        // GF(81), e = 1: gcd(4, 80) = 4 needs the table
        let f = Field::with_options(3, 4, None, FieldOptions { dlog_limit: 0 }).unwrap();
        assert_eq!(f.solve_norm_equation(f.from_int(2), 1).unwrap_err(), Error::NoDlogTable(4));
    }

    #[test]
    fn sqrt_examples() {
        let f = gf9();
        assert_eq!(f.sqrt(f.zero()), Some(f.zero()));
        assert_eq!(f.sqrt(f.one()), Some(f.one()));
        let two = f.from_int(2);
        let r = f.sqrt(two).unwrap();
        assert_eq!(f.mul(r, r), two);
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(f3.sqrt(f3.from_int(2)), None);
    }

    #[test]
    fn sqrt_without_table_matches_squares() {
        let f = Field::with_options(5, 2, None, FieldOptions { dlog_limit: 0 }).unwrap();
        for c in f.elements() {
            match f.sqrt(c) {
                Some(r) => assert_eq!(f.mul(r, r), c),
                None => assert!(!f.is_square(c)),
            }
        }
    }

    #[test]
    fn element_orders() {
        let f = gf9();
        assert_eq!(f.find_element_of_order(1, Some(1)).unwrap(), f.one());
        assert_eq!(f.find_element_of_order(2, Some(1)).unwrap(), f.from_int(2));
        assert_eq!(f.find_element_of_order(4, Some(1)).unwrap_err(), Error::NoSuchOrder(4));
        assert_eq!(f.element_order(f.generator()).unwrap(), 8);
        let x = f.element(&[0, 1]).unwrap();
        assert_eq!(f.element_order(x).unwrap(), 4);
        assert_eq!(f.element_order(f.zero()).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn tables_and_slow_path_agree() {
        let fast = Field::new(5, 2, None).unwrap();
        let slow = Field::with_options(5, 2, None, FieldOptions { dlog_limit: 0 }).unwrap();
        assert_eq!(fast.modulus(), slow.modulus());
        for a in 0..25 {
            for b in 0..25 {
                let x = fast.mul(fast.from_index(a), fast.from_index(b));
                let y = slow.mul(slow.from_index(a), slow.from_index(b));
                assert_eq!(x.index(), y.index());
            }
        }
    }

    #[test]
    #[should_panic(expected = "foreign field")]
    fn mixing_fields_panics() {
        let a = gf9();
        let b = gf9();
        a.add(a.one(), b.one());
    }

    #[test]
    fn foreign_element_is_an_error_at_checks() {
        let a = gf9();
        let b = gf9();
        assert_eq!(a.check(b.one()), Err(Error::ForeignElement));
        assert_eq!(a.in_image_e(b.one(), 1), Err(Error::ForeignElement));
    }
}
