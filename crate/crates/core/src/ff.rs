//! The constant field GF(3^m).
//!
//! Elements are stored bit-sliced: one bit plane marks the coordinates equal
//! to 1, the other those equal to 2. Addition is a handful of word operations
//! and multiplication is shift-and-add with reduction by the modulus.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 64;

/// A handle to an interned field context. Equal moduli share one context, so
/// pointer equality decides whether two elements live in the same field.
pub type Field = &'static FieldCtx;

/// GF(3^m) presented as GF(3)[t] modulo a monic irreducible of degree m.
pub struct FieldCtx {
    m: usize,
    modulus: Vec<u8>,
    mask: u64,
    // t^m expressed in lower powers
    fold: Fe,
    order: u128,
}

/// An element of GF(3^m), as its coordinates in the power basis of t.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct Fe {
    one: u64,
    two: u64,
}

/// The external name of an element.
pub type FieldElement = Fe;

impl Fe {
    pub const ZERO: Fe = Fe { one: 0, two: 0 };
    pub const ONE: Fe = Fe { one: 1, two: 0 };

    #[inline]
    pub fn is_zero(self) -> bool {
        self.one | self.two == 0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.one == 1 && self.two == 0
    }

    /// Coordinate of t^k.
    #[inline]
    pub fn digit(self, k: usize) -> u8 {
        ((self.one >> k) & 1) as u8 | ((((self.two >> k) & 1) as u8) << 1)
    }

    /// True when the element lies in the prime field.
    #[inline]
    pub fn is_prime_field(self) -> bool {
        (self.one | self.two) >> 1 == 0
    }

    #[inline]
    fn add(self, b: Fe) -> Fe {
        let t = (self.one | b.two) ^ (self.two | b.one);
        Fe {
            one: (self.two | b.two) ^ t,
            two: (self.one | b.one) ^ t,
        }
    }

    #[inline]
    fn neg(self) -> Fe {
        Fe { one: self.two, two: self.one }
    }

    /// Packed key usable for ordering and hashing.
    pub fn key(self) -> (u64, u64) {
        (self.two, self.one)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut top = 0;
        for k in 0..64 {
            if self.digit(k) != 0 {
                top = k;
            }
        }
        write!(f, "(")?;
        for k in 0..=top {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.digit(k))?;
        }
        write!(f, ")")
    }
}

fn registry() -> &'static Mutex<HashMap<Vec<u8>, Field>> {
    static REG: OnceLock<Mutex<HashMap<Vec<u8>, Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FieldCtx {
    /// Builds (or fetches) the field with the given modulus, digits constant
    /// term first. The modulus must be monic and irreducible over GF(3).
    pub fn new(modulus: &[u8]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::Parse("modulus must have degree at least 1".into()));
        }
        let m = modulus.len() - 1;
        if m > MAX_DEGREE {
            return Err(Error::Parse(format!("extension degree {m} exceeds {MAX_DEGREE}")));
        }
        if modulus.iter().any(|&d| d > 2) {
            return Err(Error::Parse("modulus digits must lie in {0,1,2}".into()));
        }
        if modulus[m] != 1 {
            return Err(Error::Parse("modulus must be monic".into()));
        }
        let mut reg = registry().lock().unwrap();
        if let Some(k) = reg.get(modulus) {
            return Ok(k);
        }
        if !gf3_irreducible(modulus) {
            return Err(Error::Domain("modulus is not irreducible over GF(3)".into()));
        }
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut fold = Fe::ZERO;
        for (k, &d) in modulus[..m].iter().enumerate() {
            // t^m = -(c_{m-1} t^{m-1} + ... + c_0)
            match (3 - d) % 3 {
                1 => fold.one |= 1 << k,
                2 => fold.two |= 1 << k,
                _ => {}
            }
        }
        let ctx: Field = Box::leak(Box::new(FieldCtx {
            m,
            modulus: modulus.to_vec(),
            mask,
            fold,
            order: 3u128.pow(m as u32),
        }));
        reg.insert(modulus.to_vec(), ctx);
        Ok(ctx)
    }

    /// GF(3), presented with modulus t.
    pub fn prime() -> Field {
        FieldCtx::new(&[0, 1]).expect("t is irreducible")
    }

    /// A field of order 3^m using a fixed irreducible modulus (the first in
    /// lexicographic order of the low digits).
    pub fn of_degree(m: usize) -> Result<Field> {
        if m == 1 {
            return Ok(FieldCtx::prime());
        }
        if m == 0 || m > 12 {
            return Err(Error::Domain(format!("no built-in modulus search for degree {m}")));
        }
        let count = 3usize.pow(m as u32);
        for code in 0..count {
            let mut digits = Vec::with_capacity(m + 1);
            let mut c = code;
            for _ in 0..m {
                digits.push((c % 3) as u8);
                c /= 3;
            }
            digits.push(1);
            if digits[0] != 0 && gf3_irreducible(&digits) {
                return FieldCtx::new(&digits);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Number of elements.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The generator t (written alpha elsewhere).
    pub fn gen(&self) -> Fe {
        if self.m == 1 {
            // t = -c_0
            return self.from_int(-(self.modulus[0] as i64));
        }
        Fe { one: 2, two: 0 }
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fe {
        match n.rem_euclid(3) {
            0 => Fe::ZERO,
            1 => Fe::ONE,
            _ => Fe { one: 0, two: 1 },
        }
    }

    /// Element from coordinates, lowest power first. Missing trailing digits
    /// are zero.
    pub fn from_digits(&self, digits: &[u8]) -> Result<Fe> {
        if digits.len() > self.m {
            let extra = &digits[self.m..];
            if extra.iter().any(|&d| d != 0) {
                return Err(Error::Parse(format!(
                    "coefficient has {} coordinates, field degree is {}",
                    digits.len(),
                    self.m
                )));
            }
        }
        let mut e = Fe::ZERO;
        for (k, &d) in digits.iter().take(self.m).enumerate() {
            match d {
                0 => {}
                1 => e.one |= 1 << k,
                2 => e.two |= 1 << k,
                _ => return Err(Error::Parse(format!("digit {d} is not in {{0,1,2}}"))),
            }
        }
        Ok(e)
    }

    /// Coordinates of `a`, exactly m of them.
    pub fn digits(&self, a: Fe) -> Vec<u8> {
        (0..self.m).map(|k| a.digit(k)).collect()
    }

    /// The element whose base-3 coordinates spell `n`; a bijection between
    /// `0..q` and the field.
    pub fn from_index(&self, mut n: u128) -> Fe {
        let mut e = Fe::ZERO;
        for k in 0..self.m {
            match n % 3 {
                1 => e.one |= 1 << k,
                2 => e.two |= 1 << k,
                _ => {}
            }
            n /= 3;
        }
        e
    }

    pub fn index_of(&self, a: Fe) -> u128 {
        let mut n = 0u128;
        for k in (0..self.m).rev() {
            n = n * 3 + a.digit(k) as u128;
        }
        n
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        let mut e = Fe::ZERO;
        for k in 0..self.m {
            match rng.gen_range(0..3u8) {
                1 => e.one |= 1 << k,
                2 => e.two |= 1 << k,
                _ => {}
            }
        }
        e
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fe {
        loop {
            let e = self.random(rng);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// Every element, in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(move |n| self.from_index(n))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a.add(b)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        a.add(b.neg())
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        a.neg()
    }

    #[inline]
    fn times_t(&self, a: Fe) -> Fe {
        let top = self.m - 1;
        let hi1 = (a.one >> top) & 1;
        let hi2 = (a.two >> top) & 1;
        let s = Fe {
            one: (a.one << 1) & self.mask,
            two: (a.two << 1) & self.mask,
        };
        if hi1 == 1 {
            s.add(self.fold)
        } else if hi2 == 1 {
            s.add(self.fold.neg())
        } else {
            s
        }
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if self.m == 1 {
            // prime field: 1*1 = 1, 1*2 = 2, 2*2 = 1
            return Fe {
                one: (a.one & b.one) | (a.two & b.two),
                two: (a.one & b.two) | (a.two & b.one),
            };
        }
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let bn = b.neg();
        let mut acc = Fe::ZERO;
        let top = 64 - (a.one | a.two).leading_zeros() as usize;
        for k in (0..top).rev() {
            acc = self.times_t(acc);
            if (a.one >> k) & 1 == 1 {
                acc = acc.add(b);
            } else if (a.two >> k) & 1 == 1 {
                acc = acc.add(bn);
            }
        }
        acc
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// Frobenius a -> a^3.
    pub fn cube(&self, a: Fe) -> Fe {
        self.mul(self.mul(a, a), a)
    }

    pub fn pow(&self, a: Fe, mut e: u128) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique cube root, c^(3^(m-1)).
    pub fn cube_root(&self, c: Fe) -> Fe {
        let mut r = c;
        for _ in 1..self.m {
            r = self.cube(r);
        }
        r
    }

    pub fn is_square(&self, a: Fe) -> bool {
        a.is_zero() || self.pow(a, (self.order - 1) / 2).is_one()
    }

    /// A square root when one exists (Tonelli-Shanks).
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return Some(Fe::ZERO);
        }
        if !self.is_square(a) {
            return None;
        }
        let q = self.order;
        let mut t = q - 1;
        let mut s = 0u32;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = self
            .elements()
            .find(|&z| !z.is_zero() && !self.is_square(z))
            .expect("nonsquares exist in odd characteristic");
        let mut mm = s;
        let mut c = self.pow(z, t);
        let mut tt = self.pow(a, t);
        let mut r = self.pow(a, (t + 1) / 2);
        while !tt.is_one() {
            let mut i = 0;
            let mut probe = tt;
            while !probe.is_one() {
                probe = self.square(probe);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(mm - i - 1) {
                b = self.square(b);
            }
            mm = i;
            c = self.square(b);
            tt = self.mul(tt, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(3^{}) mod {:?}", self.m, self.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
    }
}

impl Eq for FieldCtx {}

impl std::hash::Hash for FieldCtx {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.modulus.hash(state);
    }
}

// Minimal GF(3)[t] arithmetic used only to vet moduli.
fn trim3(mut a: Vec<u8>) -> Vec<u8> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem3(a: &[u8], m: &[u8]) -> Vec<u8> {
    let mut r = trim3(a.to_vec());
    let dm = m.len() - 1;
    let inv = if m[dm] == 1 { 1 } else { 2 };
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = (r[r.len() - 1] * inv) % 3;
        for (i, &mi) in m.iter().enumerate() {
            r[k + i] = (r[k + i] + 3 * 3 - c * mi) % 3;
        }
        r = trim3(r);
    }
    r
}

fn mulmod3(a: &[u8], b: &[u8], m: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut p = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            p[i + j] = (p[i + j] + x * y) % 3;
        }
    }
    rem3(&p, m)
}

fn gcd3(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut a = trim3(a.to_vec());
    let mut b = trim3(b.to_vec());
    while !b.is_empty() {
        let r = rem3(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Rabin-style test: t^(3^m) = t mod f and gcd(t^(3^k) - t, f) = 1 for k <= m/2.
fn gf3_irreducible(f: &[u8]) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let t = rem3(&[0, 1], f);
    let mut h = t.clone();
    for k in 1..=m {
        h = mulmod3(&mulmod3(&h, &h, f), &h, f);
        if k <= m / 2 {
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + 2) % 3;
            let g = gcd3(&trim3(diff), f);
            if g.len() > 1 {
                return false;
            }
        }
    }
    trim3(h) == t
}
