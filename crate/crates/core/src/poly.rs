//! Dense univariate polynomials over GF(3^m).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invariant, Error, Result};
use crate::ff::{Fe, Field};

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0003;

/// Degree with a sentinel for the zero polynomial that orders below every
/// finite degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Deg {
    NegInf,
    Fin(usize),
}

impl Deg {
    /// Sum of degrees, as for a product.
    pub fn plus(self, other: Deg) -> Deg {
        match (self, other) {
            (Deg::Fin(a), Deg::Fin(b)) => Deg::Fin(a + b),
            _ => Deg::NegInf,
        }
    }

    pub fn times(self, k: usize) -> Deg {
        match self {
            Deg::Fin(a) => Deg::Fin(a * k),
            Deg::NegInf => Deg::NegInf,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Deg::Fin(a) => Some(a),
            Deg::NegInf => None,
        }
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deg::Fin(a) => write!(f, "{a}"),
            Deg::NegInf => write!(f, "-inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    k: Field,
    c: Vec<Fe>,
}

impl Poly {
    pub fn new(k: Field, mut c: Vec<Fe>) -> Poly {
        while c.last().is_some_and(|e| e.is_zero()) {
            c.pop();
        }
        Poly { k, c }
    }

    pub fn zero(k: Field) -> Poly {
        Poly { k, c: Vec::new() }
    }

    pub fn one(k: Field) -> Poly {
        Poly { k, c: vec![Fe::ONE] }
    }

    pub fn x(k: Field) -> Poly {
        Poly { k, c: vec![Fe::ZERO, Fe::ONE] }
    }

    pub fn constant(k: Field, a: Fe) -> Poly {
        Poly::new(k, vec![a])
    }

    /// a*x^n
    pub fn monomial(k: Field, a: Fe, n: usize) -> Poly {
        if a.is_zero() {
            return Poly::zero(k);
        }
        let mut c = vec![Fe::ZERO; n + 1];
        c[n] = a;
        Poly { k, c }
    }

    /// Polynomial with prime-field coefficients given as small integers,
    /// constant term first.
    pub fn from_ints(k: Field, cs: &[i64]) -> Poly {
        Poly::new(k, cs.iter().map(|&n| k.from_int(n)).collect())
    }

    pub fn field(&self) -> Field {
        self.k
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.c.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Deg {
        if self.c.is_empty() {
            Deg::NegInf
        } else {
            Deg::Fin(self.c.len() - 1)
        }
    }

    /// Degree, with the zero polynomial reported as 0. Only for callers that
    /// have excluded zero or do not care.
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Fe {
        self.c.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.k.inv(self.lc()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, a: Fe) -> Poly {
        if a.is_zero() {
            return Poly::zero(self.k);
        }
        Poly {
            k: self.k,
            c: self.c.iter().map(|&e| self.k.mul(e, a)).collect(),
        }
    }

    /// Multiplication by x^n.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Fe::ZERO; n];
        c.extend_from_slice(&self.c);
        Poly { k: self.k, c }
    }

    fn same_field(&self, other: &Poly) {
        assert!(
            std::ptr::eq(self.k, other.k),
            "polynomials over different fields: {:?} vs {:?}",
            self.k,
            other.k
        );
    }

    fn add_ref(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.k.add(self.coeff(i), other.coeff(i)));
        }
        Poly::new(self.k, c)
    }

    fn sub_ref(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.k.sub(self.coeff(i), other.coeff(i)));
        }
        Poly::new(self.k, c)
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.k);
        }
        let k = self.k;
        let mut c = vec![Fe::ZERO; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                c[i + j] = k.add(c[i + j], k.mul(a, b));
            }
        }
        Poly::new(k, c)
    }

    pub fn square(&self) -> Poly {
        self.mul_ref(self)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.k);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(g);
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = self.k;
        if self.c.len() < g.c.len() {
            return Ok((Poly::zero(k), self.clone()));
        }
        let dg = g.c.len() - 1;
        let inv = k.inv(g.lc())?;
        let mut r = self.c.clone();
        let mut q = vec![Fe::ZERO; self.c.len() - dg];
        for i in (0..q.len()).rev() {
            let top = r[i + dg];
            if top.is_zero() {
                continue;
            }
            let t = k.mul(top, inv);
            q[i] = t;
            for (j, &gj) in g.c.iter().enumerate() {
                r[i + j] = k.sub(r[i + j], k.mul(t, gj));
            }
        }
        r.truncate(dg);
        Ok((Poly::new(k, q), Poly::new(k, r)))
    }

    /// Remainder modulo a nonzero polynomial. Panics on a zero modulus.
    pub fn rem(&self, g: &Poly) -> Poly {
        if self.c.len() < g.c.len() {
            self.same_field(g);
            return self.clone();
        }
        self.divrem(g).expect("nonzero modulus").1
    }

    /// Quotient by a nonzero polynomial, discarding the remainder.
    pub fn quo(&self, g: &Poly) -> Poly {
        self.divrem(g).expect("nonzero divisor").0
    }

    /// Exact quotient; an inexact division is an invariant violation.
    pub fn exact_div(&self, g: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(g)?;
        if !r.is_zero() {
            return invariant(format!("{g:?} does not divide {self:?}"));
        }
        Ok(q)
    }

    /// Exact quotient for divisions known to be exact.
    pub fn div_exact(&self, g: &Poly) -> Poly {
        self.exact_div(g).expect("exact division")
    }

    /// True when `self` divides `f`. Zero divides only zero.
    pub fn divides(&self, f: &Poly) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.rem(self).is_zero()
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: (d, s, t) with d monic and s*self + t*other = d.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.same_field(other);
        let k = self.k;
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd of two zero polynomials".into()));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(k), Poly::zero(k));
        let (mut t0, mut t1) = (Poly::zero(k), Poly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let inv = k.inv(r0.lc())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Inverse modulo m; a domain error when gcd(self, m) != 1.
    pub fn inv_mod(&self, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if m.is_constant() {
            return Ok(Poly::zero(self.k));
        }
        let (d, s, _) = self.rem(m).xgcd(m)?;
        if !d.is_one() {
            return Err(Error::Domain(format!("{self:?} is not invertible modulo {m:?}")));
        }
        Ok(s.rem(m))
    }

    /// (self * other) mod m.
    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Poly {
        (self * other).rem(m)
    }

    /// self^e mod m by square and multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.k).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        Ok(acc)
    }

    /// self^(3^n) mod m, by n successive cubings.
    pub fn frobenius_mod(&self, n: usize, m: &Poly) -> Poly {
        let mut r = self.rem(m);
        for _ in 0..n {
            r = r.mul_mod(&r, m).mul_mod(&r, m);
        }
        r
    }

    /// Formal derivative; k*c_k with k reduced mod 3.
    pub fn derivative(&self) -> Poly {
        let k = self.k;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| match i % 3 {
                0 => Fe::ZERO,
                1 => a,
                _ => k.neg(a),
            })
            .collect();
        Poly::new(k, c)
    }

    pub fn eval(&self, a: Fe) -> Fe {
        let k = self.k;
        self.c.iter().rev().fold(Fe::ZERO, |acc, &c| k.add(k.mul(acc, a), c))
    }

    /// Largest n with p^n dividing self. Self must be nonzero and p
    /// nonconstant.
    pub fn valuation(&self, p: &Poly) -> usize {
        assert!(!self.is_zero() && !p.is_constant());
        let mut n = 0;
        let mut f = self.clone();
        loop {
            let (q, r) = f.divrem(p).expect("nonzero");
            if !r.is_zero() {
                return n;
            }
            n += 1;
            f = q;
        }
    }

    /// For f with f' = 0, the g with f(x) = g(x)^3: exponents divided by
    /// three and coefficients cube-rooted.
    pub fn cube_root_of_cube(&self) -> Option<Poly> {
        if !self.derivative().is_zero() {
            return None;
        }
        let k = self.k;
        let c = self.c.iter().step_by(3).map(|&a| k.cube_root(a)).collect();
        Some(Poly::new(k, c))
    }

    pub fn random<R: Rng + ?Sized>(k: Field, deg_below: usize, rng: &mut R) -> Poly {
        Poly::new(k, (0..deg_below).map(|_| k.random(rng)).collect())
    }

    /// A random monic polynomial of exact degree n.
    pub fn random_monic<R: Rng + ?Sized>(k: Field, n: usize, rng: &mut R) -> Poly {
        let mut c: Vec<Fe> = (0..n).map(|_| k.random(rng)).collect();
        c.push(Fe::ONE);
        Poly { k, c }
    }

    /// All monic polynomials of degree exactly n, in index order.
    pub fn monics(k: Field, n: usize) -> impl Iterator<Item = Poly> {
        let q = k.order();
        let count = q.pow(n as u32);
        (0..count).map(move |mut idx| {
            let mut c = Vec::with_capacity(n + 1);
            for _ in 0..n {
                c.push(k.from_index(idx % q));
                idx /= q;
            }
            c.push(Fe::ONE);
            Poly { k, c }
        })
    }

    /// All polynomials of degree below n (including zero), in index order.
    pub fn all_below(k: Field, n: usize) -> impl Iterator<Item = Poly> {
        let q = k.order();
        let count = q.pow(n as u32);
        (0..count).map(move |mut idx| {
            let mut c = Vec::with_capacity(n);
            for _ in 0..n {
                c.push(k.from_index(idx % q));
                idx /= q;
            }
            Poly::new(k, c)
        })
    }

    /// Chinese remaindering: the unique r with deg r < deg(prod m_i) and
    /// r = r_i mod m_i. Moduli must be pairwise coprime.
    pub fn crt(k: Field, parts: &[(Poly, Poly)]) -> Result<Poly> {
        let mut acc = Poly::zero(k);
        let mut modulus = Poly::one(k);
        for (r, m) in parts {
            if m.is_zero() {
                return Err(Error::DivisionByZero);
            }
            if m.is_constant() {
                continue;
            }
            let (g, s, _) = modulus.xgcd(m)?;
            if !g.is_one() {
                return Err(Error::Domain("CRT moduli are not coprime".into()));
            }
            // acc + modulus * s * (r - acc) solves both congruences
            let diff = (r - &acc).rem(m);
            let t = (&s * &diff).rem(m);
            let new_mod = &modulus * m;
            acc = (&acc + &(&modulus * &t)).rem(&new_mod);
            modulus = new_mod;
        }
        Ok(acc)
    }

    /// Rabin irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        if self.is_constant() {
            return false;
        }
        let n = self.deg();
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let m = self.k.degree();
        let x = Poly::x(self.k);
        let mut h = x.clone();
        for d in 1..=n {
            h = h.frobenius_mod(m, &f);
            if d <= n / 2 && !(&h - &x).gcd(&f).is_one() {
                return false;
            }
        }
        h == x.rem(&f)
    }

    /// Square-free decomposition of a monic polynomial: pairs (g, e) with
    /// g square-free, pairwise coprime, and f = prod g^e.
    pub fn squarefree(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        squarefree_into(&f, 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Monic irreducible factors with multiplicities, sorted; the product
    /// times lc(self) is self. Uses the default seed.
    pub fn factor(&self) -> Result<Vec<(Poly, usize)>> {
        self.factor_seeded(DEFAULT_SEED)
    }

    pub fn factor_seeded(&self, seed: u64) -> Result<Vec<(Poly, usize)>> {
        if self.is_constant() {
            return Err(Error::Domain("cannot factor a constant".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, e) in self.squarefree() {
            for h in factor_squarefree(&g, &mut rng) {
                out.push((h, e));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Distinct monic irreducible divisors.
    pub fn prime_divisors(&self) -> Vec<Poly> {
        if self.is_constant() {
            return Vec::new();
        }
        self.factor().expect("nonconstant").into_iter().map(|(p, _)| p).collect()
    }

    /// Roots in the coefficient field, sorted by index.
    pub fn roots(&self) -> Vec<Fe> {
        if self.is_zero() {
            return Vec::new();
        }
        if self.is_constant() {
            return Vec::new();
        }
        let k = self.k;
        let f = self.monic();
        let x = Poly::x(k);
        let xq = x.frobenius_mod(k.degree(), &f);
        let g = (&xq - &x.rem(&f)).gcd(&f);
        if g.is_constant() {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let mut roots: Vec<Fe> = equal_degree(&g, 1, &mut rng)
            .into_iter()
            .map(|l| k.neg(l.coeff(0)))
            .collect();
        roots.sort_by_key(|&r| k.index_of(r));
        roots
    }

    /// A square root in F_q[x], when one exists.
    pub fn sqrt(&self) -> Result<Option<Poly>> {
        if self.is_zero() {
            return Err(Error::Domain("square root of zero".into()));
        }
        let k = self.k;
        let Some(r) = k.sqrt(self.lc()) else {
            return Ok(None);
        };
        let mut g = Poly::constant(k, r);
        if self.is_constant() {
            return Ok(Some(g));
        }
        for (p, e) in self.factor()? {
            if e % 2 == 1 {
                return Ok(None);
            }
            g = &g * &p.pow((e / 2) as u64);
        }
        Ok(Some(g))
    }

    /// The unique f with f^3 = c mod P for P irreducible: c^(3^(mk-1)).
    pub fn cube_root_mod(c: &Poly, p: &Poly) -> Result<Poly> {
        if !p.is_irreducible() {
            return Err(Error::Domain(format!("{p:?} is not irreducible")));
        }
        Ok(cube_root_mod_unchecked(c, p))
    }
}

/// Cube root modulo an irreducible the caller already vetted.
pub(crate) fn cube_root_mod_unchecked(c: &Poly, p: &Poly) -> Poly {
    let n = p.field().degree() * p.deg();
    c.frobenius_mod(n - 1, p)
}

fn squarefree_into(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>) {
    if f.is_constant() {
        return;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.quo(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.quo(&y);
        if !z.is_constant() {
            out.push((z.monic(), i * mult));
        }
        i += 1;
        w = y;
        c = c.quo(&w);
    }
    if !c.is_constant() {
        let g = c.cube_root_of_cube().expect("remaining part is a cube");
        squarefree_into(&g.monic(), 3 * mult, out);
    }
}

fn factor_squarefree(f: &Poly, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let k = f.field();
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    if f.deg() <= 3 {
        // Roots decide everything for degree at most three.
        let roots = f.roots();
        if roots.is_empty() {
            return vec![f.monic()];
        }
        let mut out = Vec::new();
        let mut rest = f.monic();
        for r in roots {
            let lin = Poly::new(k, vec![k.neg(r), Fe::ONE]);
            rest = rest.quo(&lin);
            out.push(lin);
        }
        if !rest.is_constant() {
            out.push(rest);
        }
        return out;
    }
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, rng));
    }
    out
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let k = f.field();
    let m = k.degree();
    let x = Poly::x(k);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.frobenius_mod(m, &rest);
        let g = (&h - &x).gcd(&rest);
        if !g.is_constant() {
            rest = rest.quo(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if !rest.is_constant() {
        let dd = rest.deg();
        out.push((rest, dd));
    }
    out
}

/// Splits a product of distinct irreducibles of common degree d.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let k = f.field();
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let md = k.degree() * d;
    loop {
        let a = Poly::random(k, n, rng);
        if a.is_constant() {
            continue;
        }
        // a^((q^d - 1)/2) = prod_{j < md} a^(3^j)
        let mut pw = a.rem(f);
        let mut b = pw.clone();
        for _ in 1..md {
            pw = pw.mul_mod(&pw, f).mul_mod(&pw, f);
            b = b.mul_mod(&pw, f);
        }
        let g = (&b - &Poly::one(k)).gcd(f);
        if !g.is_constant() && g.deg() < n {
            let h = f.quo(&g);
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.len().cmp(&other.c.len()).then_with(|| {
            for i in (0..self.c.len()).rev() {
                let o = self.k.index_of(self.c[i]).cmp(&self.k.index_of(other.c[i]));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if a.is_prime_field() {
                format!("{}", a.digit(0))
            } else {
                format!("{a:?}")
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{coef}*x")?,
                _ if a.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$inner(rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$inner(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$inner(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$inner(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            k: self.k,
            c: self.c.iter().map(|&a| self.k.neg(a)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
