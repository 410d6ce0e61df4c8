//! Inversion, division and multiplication of ideals, one prime type at a
//! time, recombined over coprime supports.

use super::types::{from_exponents, local_exponents, places_of, type_factor, TYPES};
use super::{crt2, ideal_contains, Ideal};
use crate::error::{invariant, Error, Result};
use crate::order::{element_mul, Element, OrderData};
use crate::places::{FinitePlace, PrimeType};
use crate::poly::Poly;

fn lcm(a: &Poly, b: &Poly) -> Poly {
    (a * b).div_exact(&a.gcd(b))
}

fn gcd3(a: &Poly, b: &Poly, c: &Poly) -> Poly {
    a.gcd(b).gcd(c)
}

fn need_primitive(j: &Ideal, what: &str) -> Result<()> {
    if j.is_primitive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} needs a primitive ideal")))
    }
}

/// Exact quotient, or an invariant error naming the quantity.
fn exact(a: &Poly, b: &Poly, what: &str) -> Result<Poly> {
    a.exact_div(b)
        .map_err(|_| Error::Invariant(format!("{what}: {b:?} does not divide {a:?}")))
}

/// N(U + rho) = U^3 - AU - FI^2.
fn norm_u(u: &Poly, od: &OrderData) -> Poly {
    &(&u.pow(3) - &(od.a() * u)) - &od.fi2
}

/// Newton lift of U + rho to a root of the norm modulo `target`, where U
/// is already right modulo the radical of `target`.
fn lift_u(u: Poly, target: &Poly, od: &OrderData) -> Result<Poly> {
    let mut u = u.rem(target);
    if target.is_constant() {
        return Ok(u);
    }
    let a_inv = od.a().inv_mod(target)?;
    for _ in 0..64 {
        let n = norm_u(&u, od).rem(target);
        if n.is_zero() {
            return Ok(u);
        }
        u = (&u + &n.mul_mod(&a_inv, target)).rem(target);
    }
    invariant("Newton lift of u did not converge")
}

/// CRT of two primitive ideals with coprime s.
pub fn ideal_mul_coprime(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    need_primitive(a, "ideal_mul_coprime")?;
    need_primitive(b, "ideal_mul_coprime")?;
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    if !a.s.gcd(&b.s).is_one() {
        return Err(Error::Domain("ideal_mul_coprime: s1 and s2 share a factor".into()));
    }
    let u = crt2(&a.u, &a.s.div_exact(&a.sp), &b.u, &b.s.div_exact(&b.sp))?;
    let w = crt2(&a.w, &a.sp, &b.w, &b.sp)?;
    let va = &a.v + &(&a.u * &(&w - &a.w));
    let vb = &b.v + &(&b.u * &(&w - &b.w));
    let v = crt2(&va, &a.s.div_exact(&a.spp), &vb, &b.s.div_exact(&b.spp))?;
    Ideal::new(&a.s * &b.s, &a.sp * &b.sp, &a.spp * &b.spp, u, v, w)
}

/// Runs `f` on the matching type components of `a` and `b` and multiplies
/// the results back together; contents of the partial results multiply.
fn by_type<F>(a: &Ideal, b: &Ideal, od: &OrderData, f: F) -> Result<Ideal>
where
    F: Fn(PrimeType, &Ideal, &Ideal) -> Result<Ideal>,
{
    let k = a.field();
    let (ta, tb) = (type_factor(a, od)?, type_factor(b, od)?);
    let mut content = Poly::one(k);
    let mut acc = Ideal::unit(k);
    for t in TYPES {
        let (x, y) = (ta.part(t), tb.part(t));
        if x.is_unit() && y.is_unit() {
            continue;
        }
        let r = f(t, x, y)?;
        content = &content * &r.d;
        acc = ideal_mul_coprime(&acc, &r.primitive_part())?;
    }
    acc.d = content;
    Ok(acc)
}

/// Applies `f` to the exponent vectors of `a` and `b` at every place
/// dividing s1 s2 and rebuilds the ideal; `f` also gets v_P(s1).
fn by_exponents<F>(a: &Ideal, b: &Ideal, od: &OrderData, f: F) -> Result<Ideal>
where
    F: Fn(&FinitePlace, &[usize], &[usize], usize) -> Result<Vec<usize>>,
{
    let k = a.field();
    let mut data = Vec::new();
    for (pl, _) in places_of(&(&a.s * &b.s), od)? {
        let ea = local_exponents(a, &pl, od)?;
        let eb = local_exponents(b, &pl, od)?;
        let e = f(&pl, &ea, &eb, a.s.valuation(&pl.p))?;
        data.push((pl, e));
    }
    from_exponents(k, &data, od)
}

fn sub_exps(x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
    x.iter()
        .zip(y)
        .map(|(a, b)| {
            a.checked_sub(*b)
                .ok_or_else(|| Error::Domain("quotient is not integral".into()))
        })
        .collect()
}

// ---------------------------------------------------------------- inversion

fn invert_12(j: &Ideal, od: &OrderData) -> Result<Ideal> {
    let i = &od.index;
    let sq = j.s.div_exact(&j.sp);
    let u = (-&(i * &j.w)).rem(&j.sp);
    let w = (-&j.u).mul_mod(&i.inv_mod(&sq)?, &sq);
    let v = &(&(&od.e - &j.v) - &(&(&w * i) * &j.w)).rem(&j.s);
    Ideal::new(j.s.clone(), sq, Poly::one(j.field()), u, v.clone(), w)
}

fn invert_3(j: &Ideal) -> Result<Ideal> {
    let k = j.field();
    Ideal::new(j.s.clone(), Poly::one(k), j.s.div_exact(&j.spp), Poly::zero(k), Poly::zero(k), Poly::zero(k))
}

fn invert_4(j: &Ideal, od: &OrderData) -> Result<Ideal> {
    let unit = Ideal::unit(j.field());
    by_exponents(j, &unit, od, |pl, e, _, k| {
        pl.ramification().iter().zip(e).map(|(r, x)| {
            (k * r)
                .checked_sub(*x)
                .ok_or_else(|| Error::Invariant("exponent exceeds the content of s".into()))
        }).collect()
    })
}

/// The primitive ideal <s> J^-1 for primitive J.
pub fn ideal_invert(j: &Ideal, od: &OrderData) -> Result<Ideal> {
    need_primitive(j, "ideal_invert")?;
    if j.is_unit() {
        return Ok(j.clone());
    }
    let unit = Ideal::unit(j.field());
    by_type(j, &unit, od, |t, x, _| match t {
        PrimeType::I | PrimeType::II => invert_12(x, od),
        PrimeType::III => invert_3(x),
        PrimeType::IV => invert_4(x, od),
    })
}

// ---------------------------------------------------- primitive products

/// Element v + w rho + omega of the product from an xgcd over the omega
/// coordinates of the cross products, taken in a fixed order.
fn third_row(pairs: &[(Element, Element)], od: &OrderData) -> Result<Element> {
    let k = od.field();
    let mut g = Poly::zero(k);
    let mut coefs: Vec<Poly> = Vec::new();
    let mut prods = Vec::new();
    for (x, y) in pairs {
        let p = element_mul(x, y, od);
        if p.c.is_zero() {
            continue;
        }
        let (g2, a, b) = g.xgcd(&p.c)?;
        for c in coefs.iter_mut() {
            *c = &*c * &a;
        }
        coefs.push(b);
        prods.push(p);
        g = g2;
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() {
        return invariant("product is not primitive");
    }
    let mut acc = Element::zero(k);
    for (c, p) in coefs.iter().zip(&prods) {
        acc = acc.add(&p.scale(c));
    }
    Ok(acc)
}

fn mul_prim_1(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let (q1, q2) = (a.s.div_exact(&a.sp), b.s.div_exact(&b.sp));
    let d = q1.gcd(&q2);
    let d1 = d.gcd(&(&a.u - &b.u));
    let s = exact(&(&(&a.s * &b.s) * &d1), &d, "S")?;
    let sp = exact(&(&(&a.sp * &b.sp) * &d), &d1, "S'")?;
    let m1 = exact(&(&q1 * &d1), &d, "u modulus")?;
    let m2 = exact(&(&q2 * &d1), &d, "u modulus")?;
    let u3 = crt2(&a.u, &m1, &b.u, &m2)?;
    let l = exact(&(&m1 * &m2), &d1, "lcm")?;
    let u = if d1.is_one() {
        u3
    } else {
        let n = exact(&norm_u(&u3, od), &l, "N(u3)")?;
        let kk = n.mul_mod(&od.a().inv_mod(&d1)?, &d1);
        &u3 + &(&kk * &l)
    };
    let [g1, g2, g3] = a.basis();
    let [h1, h2, h3] = b.basis();
    let row = third_row(
        &[(g1, h3.clone()), (g3.clone(), h1), (g2.clone(), h2.clone()), (g2, h3.clone()), (g3.clone(), h2), (g3, h3)],
        od,
    )?;
    Ideal::new(s, sp, Poly::one(a.field()), u, row.a, row.b)
}

/// f with f^3 = FI^2 modulo the radical of s1 s2, read off the data of two
/// Type II ideals: u = f mod s/s' and w = -f/I mod s'.
fn wild_root(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<(Poly, Poly)> {
    let i = &od.index;
    let mut f = Poly::zero(a.field());
    let mut m = Poly::one(a.field());
    for j in [a, b] {
        let q = j.s.div_exact(&j.sp);
        f = crt2(&f, &m, &j.u, &q)?;
        m = lcm(&m, &q);
        let fw = (-&(i * &j.w)).rem(&j.sp);
        f = crt2(&f, &m, &fw, &j.sp)?;
        m = lcm(&m, &j.sp);
    }
    Ok((f, m))
}

fn wild_ideal(s: Poly, sp: Poly, f: &Poly, od: &OrderData) -> Result<Ideal> {
    let i_inv = od.index.inv_mod(&s)?;
    let v = f.square().mul_mod(&i_inv, &s);
    let w = (-f).mul_mod(&i_inv, &s);
    Ideal::new(s, sp, Poly::one(f.field()), f.clone(), v, w)
}

fn mul_prim_2(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let (q1, q2) = (a.s.div_exact(&a.sp), b.s.div_exact(&b.sp));
    let d = q1.gcd(&q2);
    let s = (&a.s * &b.s).div_exact(&d);
    let sp = &(&d * &a.sp) * &b.sp;
    let (f, _) = wild_root(a, b, od)?;
    wild_ideal(s, sp, &f, od)
}

fn mul_prim_3(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let k = a.field();
    let d = a.s.div_exact(&a.spp).gcd(&b.s.div_exact(&b.spp));
    let s = (&a.s * &b.s).div_exact(&d);
    let spp = &(&a.spp * &b.spp) * &d;
    Ideal::new(s, Poly::one(k), spp, Poly::zero(k), Poly::zero(k), Poly::zero(k))
}

fn mul_prim_4(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let r = by_exponents(a, b, od, |_, x, y, _| Ok(x.iter().zip(y).map(|(p, q)| p + q).collect()))?;
    if !r.is_primitive() {
        return invariant("product is not primitive");
    }
    Ok(r)
}

fn mul_prim_t(t: PrimeType, a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    match t {
        PrimeType::I => mul_prim_1(a, b, od),
        PrimeType::II => mul_prim_2(a, b, od),
        PrimeType::III => mul_prim_3(a, b),
        PrimeType::IV => mul_prim_4(a, b, od),
    }
}

/// Product of primitive ideals whose product is known to be primitive.
pub fn ideal_mul_primitive(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    need_primitive(a, "ideal_mul_primitive")?;
    need_primitive(b, "ideal_mul_primitive")?;
    let r = by_type(a, b, od, |t, x, y| mul_prim_t(t, x, y, od))?;
    if !r.is_primitive() {
        return invariant("product is not primitive");
    }
    Ok(r)
}

// ------------------------------------------------------- general products

fn mul_1(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let i = &od.index;
    let (q1, q2) = (a.s.div_exact(&a.sp), b.s.div_exact(&b.sp));
    let d1 = gcd3(&b.sp, &q1, &(&a.u + &(i * &b.w)));
    let d2 = gcd3(&a.sp, &q2, &(&b.u + &(i * &a.w)));
    let g = a.sp.div_exact(&d2).gcd(&b.sp.div_exact(&d1));
    let d3 = g.div_exact(&g.gcd(&(&a.w - &b.w)));
    let d123 = &(&d1 * &d2) * &d3;
    let one = Poly::one(a.field());
    let a1 = Ideal::new(a.s.div_exact(&d123), a.sp.div_exact(&(&d2 * &d3)), one.clone(), a.u.clone(), a.v.clone(), a.w.clone())?;
    let b1 = Ideal::new(b.s.div_exact(&d123), b.sp.div_exact(&(&d1 * &d3)), one.clone(), b.u.clone(), b.v.clone(), b.w.clone())?;
    let mut r = mul_prim_1(&a1, &b1, od)?;
    if !d3.is_one() {
        let a3 = Ideal::new(d3.clone(), d3.clone(), one.clone(), a.u.clone(), a.v.clone(), a.w.clone())?;
        let b3 = Ideal::new(d3.clone(), d3.clone(), one.clone(), b.u.clone(), b.v.clone(), b.w.clone())?;
        let conj = mul_prim_1(&invert_12(&a3, od)?, &invert_12(&b3, od)?, od)?;
        let j = invert_12(&conj, od)?;
        r = mul_prim_1(&r, &j, od)?;
    }
    r.d = d123;
    Ok(r)
}

fn mul_2(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let (q1, q2) = (a.s.div_exact(&a.sp), b.s.div_exact(&b.sp));
    let d1 = q1.gcd(&b.sp);
    let d2 = q2.gcd(&a.sp);
    let d3 = a.sp.gcd(&b.sp);
    let d123 = &(&d1 * &d2) * &d3;
    let one = Poly::one(a.field());
    let a1 = Ideal::new(a.s.div_exact(&d123), a.sp.div_exact(&(&d2 * &d3)), one.clone(), a.u.clone(), a.v.clone(), a.w.clone())?;
    let b1 = Ideal::new(b.s.div_exact(&d123), b.sp.div_exact(&(&d1 * &d3)), one.clone(), b.u.clone(), b.v.clone(), b.w.clone())?;
    let mut r = if a1.is_unit() || b1.is_unit() {
        if a1.is_unit() { b1 } else { a1 }
    } else {
        mul_prim_2(&a1, &b1, od)?
    };
    if !d3.is_one() {
        let (f, _) = wild_root(a, b, od)?;
        let f = f.rem(&d3);
        let i_inv = od.index.inv_mod(&d3)?;
        let j = Ideal::new(d3.clone(), one.clone(), one, f.clone(), (-&f.square()).mul_mod(&i_inv, &d3), Poly::zero(a.field()))?;
        r = ideal_mul_coprime(&r, &j)?;
    }
    r.d = d123;
    Ok(r)
}

fn mul_3(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let (q1, q2) = (a.s.div_exact(&a.spp), b.s.div_exact(&b.spp));
    let d1 = q1.gcd(&b.spp);
    let d2 = q2.gcd(&a.spp);
    let d3 = a.spp.gcd(&b.spp);
    let d123 = &(&d1 * &d2) * &d3;
    let k = a.field();
    let z = || Poly::zero(k);
    let one = Poly::one(k);
    let a1 = Ideal::new(a.s.div_exact(&d123), one.clone(), a.spp.div_exact(&(&d2 * &d3)), z(), z(), z())?;
    let b1 = Ideal::new(b.s.div_exact(&d123), one.clone(), b.spp.div_exact(&(&d1 * &d3)), z(), z(), z())?;
    let j = Ideal::new(d3, one.clone(), one, z(), z(), z())?;
    let mut r = mul_prim_3(&mul_prim_3(&a1, &b1)?, &j)?;
    r.d = d123;
    Ok(r)
}

fn mul_4(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    by_exponents(a, b, od, |_, x, y, _| Ok(x.iter().zip(y).map(|(p, q)| p + q).collect()))
}

fn mul_t(t: PrimeType, a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    match t {
        PrimeType::I => mul_1(a, b, od),
        PrimeType::II => mul_2(a, b, od),
        PrimeType::III => mul_3(a, b),
        PrimeType::IV => mul_4(a, b, od),
    }
}

/// Product of two ideals as content D and primitive part; contents of
/// the inputs are carried into D.
pub fn ideal_mul(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<(Poly, Ideal)> {
    let (pa, pb) = (a.primitive_part(), b.primitive_part());
    let r = by_type(&pa, &pb, od, |t, x, y| mul_t(t, x, y, od))?;
    let d = &(&a.d * &b.d) * &r.d;
    Ok((d, r.primitive_part()))
}

/// J^n with the content folded in.
pub fn ideal_pow(j: &Ideal, n: u64, od: &OrderData) -> Result<Ideal> {
    let mut acc = Ideal::unit(j.field());
    let mut base = j.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            let (d, r) = ideal_mul(&acc, &base, od)?;
            acc = Ideal { d, ..r };
        }
        e >>= 1;
        if e > 0 {
            let (d, r) = ideal_mul(&base, &base, od)?;
            base = Ideal { d, ..r };
        }
    }
    Ok(acc)
}

// --------------------------------------------------------------- division

fn divide_12(i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    let i = &od.index;
    let (q1, q2) = (i1.s.div_exact(&i1.sp), i2.s.div_exact(&i2.sp));
    let d = gcd3(&q2, &q1, &(&i1.u - &i2.u));
    let s = exact(&i2.s, &(&i1.sp * &d), "S")?;
    let sp = exact(&(&i2.sp * &d), &i1.s, "S'")?;
    let m1 = exact(&q1, &d, "u modulus")?;
    let m2 = exact(&q2, &d, "u modulus")?;
    let u0 = crt2(&(&(i * &i2.w) - &i1.u), &m1, &i2.u, &m2)?;
    let target = s.div_exact(&sp);
    let u = if lcm(&m1, &m2) == target { u0 } else { lift_u(u0, &target, od)? };
    Ideal::new(s, sp, Poly::one(i1.field()), u, i2.v.clone(), i2.w.clone())
}

fn divide_3(i2: &Ideal, i1: &Ideal) -> Result<Ideal> {
    let k = i1.field();
    let d = i1.s.div_exact(&i1.spp).gcd(&i2.s.div_exact(&i2.spp));
    let s = exact(&i2.s, &(&i1.spp * &d), "S")?;
    let spp = exact(&(&i2.spp * &d), &i1.s, "S''")?;
    Ideal::new(s, Poly::one(k), spp, Poly::zero(k), Poly::zero(k), Poly::zero(k))
}

fn divide_4(i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    let r = by_exponents(i2, i1, od, |_, x, y, _| sub_exps(x, y))?;
    if !r.is_primitive() {
        return invariant("quotient of primitive ideals has content");
    }
    Ok(r)
}

fn divide_t(t: PrimeType, i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    if i1.is_unit() {
        return Ok(i2.clone());
    }
    match t {
        PrimeType::I | PrimeType::II => divide_12(i2, i1, od),
        PrimeType::III => divide_3(i2, i1),
        PrimeType::IV => divide_4(i2, i1, od),
    }
}

/// The exact quotient I2 I1^-1 of primitive ideals with I2 inside I1.
pub fn ideal_divide(i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    need_primitive(i1, "ideal_divide")?;
    need_primitive(i2, "ideal_divide")?;
    if !ideal_contains(i2, i1) {
        return Err(Error::Domain("ideal_divide: dividend is not contained in divisor".into()));
    }
    by_type(i2, i1, od, |t, x, y| divide_t(t, x, y, od))
}

/// I2 I1^-1 for I2 = [s, s rho, v2 + w2 rho + omega] inside
/// I1 = [s, u1 + rho, v1 + omega] (Types I and II), or
/// I2 = [s, rho, s omega] inside I1 = [s, rho, omega] (Type III).
pub fn ideal_split_conjugate(i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    need_primitive(i1, "ideal_split_conjugate")?;
    need_primitive(i2, "ideal_split_conjugate")?;
    let k = i1.field();
    let s = &i1.s;
    if &i2.s != s || !ideal_contains(i2, i1) {
        return Err(Error::Domain("ideal_split_conjugate: shapes do not match".into()));
    }
    if s.is_one() {
        return Ok(Ideal::unit(k));
    }
    if &i2.sp == s && i1.sp.is_one() && i1.spp.is_one() && i2.spp.is_one() {
        let iw2 = &od.index * &i2.w;
        let u = (&iw2 - &i1.u).rem(s);
        let v = &(&i2.v - &(&iw2 * &i2.w)) + &(&i1.u * &i2.w);
        return Ideal::new(s.clone(), Poly::one(k), Poly::one(k), u, v.rem(s), Poly::zero(k));
    }
    if &i2.spp == s && i1.sp.is_one() && i1.spp.is_one() && i2.sp.is_one() {
        return Ideal::new(s.clone(), Poly::one(k), Poly::one(k), Poly::zero(k), Poly::zero(k), Poly::zero(k));
    }
    Err(Error::Domain("ideal_split_conjugate: shapes do not match".into()))
}

fn ndivide_12(t: PrimeType, d: &Poly, i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    let one = Poly::one(d.field());
    let e1 = i1.sp.gcd(d);
    let e2 = i1.s.div_exact(&i1.sp).gcd(&d.div_exact(&e1));
    let e3 = d.div_exact(&(&e1 * &e2));
    let e12 = &e1 * &e2;
    let rest = Ideal::new(i1.s.div_exact(&e12), i1.sp.div_exact(&e1), one.clone(), i1.u.clone(), i1.v.clone(), i1.w.clone())?;
    let part = Ideal::new(e12, e1, one, i1.u.clone(), i1.v.clone(), i1.w.clone())?;
    let id = if rest.is_unit() { i2.clone() } else { divide_12(i2, &rest, od)? };
    let im = invert_12(&part, od)?;
    let mut r = mul_t(t, &id, &im, od)?;
    r.d = &r.d * &e3;
    Ok(r)
}

fn ndivide_3(d: &Poly, i2: &Ideal, i1: &Ideal) -> Result<Ideal> {
    let k = d.field();
    let one = Poly::one(k);
    let z = || Poly::zero(k);
    let e1 = i1.spp.gcd(d);
    let e2 = i1.s.div_exact(&i1.spp).gcd(&d.div_exact(&e1));
    let e3 = d.div_exact(&(&e1 * &e2));
    let e12 = &e1 * &e2;
    let rest = Ideal::new(i1.s.div_exact(&e12), one.clone(), i1.spp.div_exact(&e1), z(), z(), z())?;
    let part = Ideal::new(e12, one.clone(), e1, z(), z(), z())?;
    let id = if rest.is_unit() { i2.clone() } else { divide_3(i2, &rest)? };
    let im = invert_3(&part)?;
    let mut r = mul_3(&id, &im)?;
    r.d = &r.d * &e3;
    Ok(r)
}

fn ndivide_4(d: &Poly, i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<Ideal> {
    let r = by_exponents(i2, i1, od, |pl, x, y, _| {
        let k = d.valuation(&pl.p);
        let dx: Vec<usize> = pl.ramification().iter().zip(x).map(|(r, e)| k * r + e).collect();
        sub_exps(&dx, y)
    })?;
    let mut rest = d.clone();
    for (pl, _) in places_of(&(&i1.s * &i2.s), od)? {
        rest = rest.div_exact(&pl.p.pow(d.valuation(&pl.p) as u64));
    }
    Ok(Ideal { d: &r.d * &rest, ..r })
}

/// <d> I2 I1^-1 as content D and primitive part, for primitive I1 and I2
/// with <d> I2 inside I1.
pub fn ideal_divide_nonprimitive(d: &Poly, i2: &Ideal, i1: &Ideal, od: &OrderData) -> Result<(Poly, Ideal)> {
    need_primitive(i1, "ideal_divide_nonprimitive")?;
    need_primitive(i2, "ideal_divide_nonprimitive")?;
    let d = d.monic();
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let scaled = Ideal { d: d.clone(), ..i2.clone() };
    if !ideal_contains(&scaled, i1) {
        return Err(Error::Domain("ideal_divide_nonprimitive: <d> I2 is not contained in I1".into()));
    }
    // Split d into the parts supported on each type of place of s1; the
    // remainder is pure content.
    let k = d.field();
    let mut d_t = [Poly::one(k), Poly::one(k), Poly::one(k), Poly::one(k)];
    let mut rest = d.clone();
    for (pl, _) in places_of(&i1.s, od)? {
        let pe = pl.p.pow(d.valuation(&pl.p) as u64);
        rest = rest.div_exact(&pe);
        let t = pl.prime_type as usize;
        d_t[t] = &d_t[t] * &pe;
    }
    let r = by_type(i2, i1, od, |t, x, y| {
        let dt = &d_t[t as usize];
        if y.is_unit() {
            return Ok(Ideal { d: dt.clone(), ..x.clone() });
        }
        match t {
            PrimeType::I | PrimeType::II => ndivide_12(t, dt, x, y, od),
            PrimeType::III => ndivide_3(dt, x, y),
            PrimeType::IV => ndivide_4(dt, x, y, od),
        }
    })?;
    Ok((&r.d * &rest, r.primitive_part()))
}
