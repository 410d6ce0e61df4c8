//! Splitting of finite places and of the place at infinity, and
//! triangular bases for the primes above a finite place and their
//! products.

use crate::curve::{Criterion, Curve};
use crate::error::{invariant, Error, Result};
use crate::ideal::Ideal;
use crate::order::OrderData;
use crate::poly::{cube_root_mod_unchecked, Poly};
use crate::residue::cubic_residue_factor_unchecked;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Splitting {
    /// p^3
    TotallyRamified,
    /// q p^2
    PartiallyRamified,
    /// p
    Inert,
    /// p q
    PartiallySplit,
    /// p q r
    CompletelySplit,
}

impl Splitting {
    pub fn name(self) -> &'static str {
        match self {
            Splitting::TotallyRamified => "totally_ramified",
            Splitting::PartiallyRamified => "partially_ramified",
            Splitting::Inert => "inert",
            Splitting::PartiallySplit => "partially_split",
            Splitting::CompletelySplit => "completely_split",
        }
    }

    /// (e, f) for each prime above, in selector order.
    pub fn signature(self) -> &'static [(usize, usize)] {
        match self {
            Splitting::TotallyRamified => &[(3, 1)],
            Splitting::PartiallyRamified => &[(1, 1), (2, 1)],
            Splitting::Inert => &[(1, 3)],
            Splitting::PartiallySplit => &[(1, 1), (1, 2)],
            Splitting::CompletelySplit => &[(1, 1), (1, 1), (1, 1)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeType {
    I,
    II,
    III,
    IV,
}

/// A prime above a finite place, named by its residue data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeSel {
    /// Degree-one unramified prime with rho = alpha mod the prime.
    Root(Poly),
    /// The inertia-two prime over a partially split place.
    Quadratic,
    /// The place itself, inert.
    Inert,
    /// The ramified prime: the only one for Types II and III, the q of
    /// Type IV.
    Ramified,
    /// The unramified p of Type IV.
    Unramified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePlace {
    pub p: Poly,
    pub splitting: Splitting,
    pub prime_type: PrimeType,
    /// Roots of T^3 - AT + FI^2 mod P, the residues of rho; sorted.
    pub roots: Vec<Poly>,
    /// (M, W) with rho^2 - M rho + W the quadratic cofactor mod P.
    pub quadratic: Option<(Poly, Poly)>,
    /// f with f^3 = F I^2 mod P, Type II only.
    pub wild_root: Option<Poly>,
}

impl FinitePlace {
    /// Primes above P, in the order used by exponent vectors.
    pub fn primes(&self) -> Vec<PrimeSel> {
        match self.splitting {
            Splitting::CompletelySplit => self.roots.iter().cloned().map(PrimeSel::Root).collect(),
            Splitting::PartiallySplit => {
                vec![PrimeSel::Root(self.roots[0].clone()), PrimeSel::Quadratic]
            }
            Splitting::Inert => vec![PrimeSel::Inert],
            Splitting::TotallyRamified => vec![PrimeSel::Ramified],
            Splitting::PartiallyRamified => vec![PrimeSel::Unramified, PrimeSel::Ramified],
        }
    }

    /// Ramification index of each prime, in selector order.
    pub fn ramification(&self) -> Vec<usize> {
        self.splitting.signature().iter().map(|&(e, _)| e).collect()
    }

    /// Inertia degree of each prime, in selector order.
    pub fn inertia(&self) -> Vec<usize> {
        self.splitting.signature().iter().map(|&(_, f)| f).collect()
    }
}

/// Decomposition of the place P.
pub fn split_finite(p: &Poly, od: &OrderData) -> Result<FinitePlace> {
    if p.is_constant() || !p.is_irreducible() {
        return Err(Error::Domain(format!("{p:?} is not irreducible")));
    }
    let p = p.monic();
    let k = p.field();
    let v = od.delta.valuation(&p);
    let mut place = FinitePlace {
        p: p.clone(),
        splitting: Splitting::Inert,
        prime_type: PrimeType::I,
        roots: Vec::new(),
        quadratic: None,
        wild_root: None,
    };
    match v {
        0 => {
            let r = cubic_residue_factor_unchecked(od.a(), od.b(), &p);
            place.splitting = match r.gcd_degree {
                0 => Splitting::Inert,
                1 => Splitting::PartiallySplit,
                3 => Splitting::CompletelySplit,
                d => return invariant(format!("residue gcd of degree {d}")),
            };
            // roots of the y-cubic shifted to roots for rho = y - i
            let mut roots: Vec<Poly> = r.roots.iter().map(|b| (b - &od.i).rem(&p)).collect();
            roots.sort();
            if let [a] = roots.as_slice() {
                let w = (&a.square() - od.a()).rem(&p);
                place.quadratic = Some(((-a).rem(&p), w));
            }
            place.roots = roots;
        }
        1 => {
            place.splitting = Splitting::PartiallyRamified;
            place.prime_type = PrimeType::IV;
            place.roots = vec![Poly::zero(k)];
        }
        2 => return invariant("v_P(discriminant) = 2"),
        _ => {
            place.splitting = Splitting::TotallyRamified;
            if p.divides(&od.index) {
                place.prime_type = PrimeType::III;
            } else {
                place.prime_type = PrimeType::II;
                place.wild_root = Some(cube_root_mod_unchecked(&od.fi2.rem(&p), &p));
            }
        }
    }
    Ok(place)
}

/// Decomposition of the infinite place of a standard-form curve.
pub fn split_infinite(c: &Curve) -> Result<Splitting> {
    let crit = c
        .criterion()
        .ok_or_else(|| Error::Domain("curve is not in standard form".into()))?;
    if crit == Criterion::Wild {
        return Ok(Splitting::TotallyRamified);
    }
    let da = c.a.deg();
    if da % 2 == 1 {
        return Ok(Splitting::PartiallyRamified);
    }
    let n = da / 2;
    let k = c.field();
    let cubic = Poly::new(
        k,
        vec![c.b.coeff(3 * n), k.neg(c.a.lc()), crate::ff::Fe::ZERO, crate::ff::Fe::ONE],
    );
    Ok(match cubic.roots().len() {
        0 => Splitting::Inert,
        1 => Splitting::PartiallySplit,
        3 => Splitting::CompletelySplit,
        r => return invariant(format!("{r} roots of a separable cubic")),
    })
}

fn check_sel(place: &FinitePlace, sel: &PrimeSel) -> Result<()> {
    if place.primes().contains(sel) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{sel:?} is not a prime above {:?} ({})",
            place.p,
            place.splitting.name()
        )))
    }
}

fn inv_mod(a: &Poly, m: &Poly, what: &str) -> Result<Poly> {
    a.inv_mod(m)
        .map_err(|_| Error::Invariant(format!("{what} is not invertible mod {m:?}")))
}

/// Basis of a single prime above P.
pub fn prime_basis(place: &FinitePlace, sel: &PrimeSel, od: &OrderData) -> Result<Ideal> {
    check_sel(place, sel)?;
    let p = &place.p;
    let k = p.field();
    let one = || Poly::one(k);
    let zero = || Poly::zero(k);
    match sel {
        PrimeSel::Root(alpha) => {
            let iinv = inv_mod(&od.index, p, "I")?;
            let z = (&iinv * &(&alpha.square() - od.a())).rem(p);
            Ideal::new(p.clone(), one(), one(), -alpha, -&z, zero())
        }
        PrimeSel::Quadratic => {
            let (m, w) = place.quadratic.clone().expect("partially split");
            let iinv = inv_mod(&od.index, p, "I")?;
            let v = &iinv * &(&w + od.a());
            let ww = -&(&iinv * &m);
            Ideal::new(p.clone(), p.clone(), one(), zero(), v, ww)
        }
        PrimeSel::Inert => Ok(Ideal::principal_poly(p)),
        PrimeSel::Ramified => match place.prime_type {
            PrimeType::II => {
                let f = place.wild_root.clone().expect("type II");
                let iinv = inv_mod(&od.index, p, "I")?;
                Ideal::new(p.clone(), one(), one(), f.clone(), -&(&iinv * &f.square()), zero())
            }
            _ => Ideal::new(p.clone(), one(), one(), zero(), zero(), zero()),
        },
        PrimeSel::Unramified => Ideal::new(p.clone(), one(), one(), zero(), od.e.clone(), zero()),
    }
}

/// X_i and Z_i with rho = X_i and omega = Z_i modulo p^i, for a prime p of
/// degree and ramification one.
fn lift_degree_one(place: &FinitePlace, sel: &PrimeSel, i: usize, od: &OrderData) -> Result<(Poly, Poly)> {
    let p = &place.p;
    let (x1, z1) = match sel {
        PrimeSel::Root(alpha) => {
            let iinv = inv_mod(&od.index, p, "I")?;
            (alpha.clone(), (&iinv * &(&alpha.square() - od.a())).rem(p))
        }
        PrimeSel::Unramified => (Poly::zero(p.field()), (-&od.e).rem(p)),
        _ => return invariant("lift needs a degree-one unramified prime"),
    };
    let ez1 = (&od.e * &z1).rem(p);
    if !ez1.is_zero() {
        // lift omega through its minimal polynomial Z^3 + E Z^2 - F^2 I
        let mut z = z1;
        let mut pk = p.clone();
        for _ in 1..i {
            let pk1 = &pk * p;
            let zz = z.rem(&pk1);
            let g = &(&(&zz.square() * &(&zz + &od.e)) - &od.f2i).rem(&pk1);
            let q = g.exact_div(&pk)?;
            let den = inv_mod(&(&od.e * &zz), p, "E Z")?;
            let step = q.mul_mod(&den, p);
            z = (&zz + &(&step * &pk)).rem(&pk1);
            pk = pk1;
        }
        let zinv = inv_mod(&z, &pk, "Z")?;
        let x = (-&(&od.fi * &zinv)).rem(&pk);
        return Ok((x, z));
    }
    // Z_1 = 0: lift rho through T^3 - AT + FI^2 instead; its derivative is -A
    let mut x = x1;
    let mut pk = p.clone();
    let ainv = inv_mod(od.a(), p, "A")?;
    for _ in 1..i {
        let pk1 = &pk * p;
        let h = (&(&x.pow(3) - &(&x * od.a())) + &od.fi2).rem(&pk1);
        let q = h.exact_div(&pk)?;
        x = (&x + &(&q.mul_mod(&ainv, p) * &pk)).rem(&pk1);
        pk = pk1;
    }
    let iinv = inv_mod(&od.index, &pk, "I")?;
    let z = (&iinv * &(&x.square() - od.a())).rem(&pk);
    Ok((x, z))
}

/// (N, M) with N - M rho + omega generating, with P^i and P^i rho, the
/// i-th power of an ideal [P, P rho, N_1 - M_1 rho + omega].
fn power_nm(n1: &Poly, m1: &Poly, p: &Poly, i: usize, od: &OrderData) -> Result<(Poly, Poly)> {
    let (mut n, mut m) = (n1.rem(p), m1.rem(p));
    let mut pk = p.clone();
    for _ in 1..i {
        pk = &pk * p;
        let c = &(&(&n + n1) + &(&(&m * m1) * &od.index)) - &od.e;
        let l = inv_mod(&c, &pk, "omega coefficient")?;
        let a = &(&(&n * n1) + &(&(&m * m1) * od.a())) + &(&od.fi * &(&m + m1));
        let b = &(&od.f + &(&n * m1)) + &(&m * n1);
        n = a.mul_mod(&l, &pk);
        m = b.mul_mod(&l, &pk);
    }
    Ok((n, m))
}

/// The product of the primes above P raised to the given exponents (in
/// the order of `FinitePlace::primes`), content included.
pub fn prime_power_basis(place: &FinitePlace, exps: &[usize], od: &OrderData) -> Result<Ideal> {
    let primes = place.primes();
    if exps.len() != primes.len() {
        return Err(Error::Domain(format!(
            "{} exponents for {} primes",
            exps.len(),
            primes.len()
        )));
    }
    let p = &place.p;
    let ram = place.ramification();
    let content = exps.iter().zip(&ram).map(|(e, r)| e / r).min().unwrap_or(0);
    let e: Vec<usize> = exps.iter().zip(&ram).map(|(e, r)| e - content * r).collect();
    let local = local_primitive(place, &primes, &e, od)?;
    Ok(Ideal {
        d: &local.d * &p.pow(content as u64),
        ..local
    })
}

fn local_primitive(place: &FinitePlace, primes: &[PrimeSel], e: &[usize], od: &OrderData) -> Result<Ideal> {
    let p = &place.p;
    let k = p.field();
    let one = || Poly::one(k);
    let zero = || Poly::zero(k);
    let pw = |n: usize| p.pow(n as u64);
    let nonzero: Vec<usize> = (0..e.len()).filter(|&j| e[j] > 0).collect();
    if nonzero.is_empty() {
        return Ok(Ideal::unit(k));
    }
    match place.splitting {
        Splitting::Inert => invariant("inert place with a primitive part"),
        Splitting::TotallyRamified => {
            let f = place.wild_root.clone();
            let iinv = || inv_mod(&od.index, p, "I");
            match (place.prime_type, e[0]) {
                (_, 1) => prime_basis(place, &primes[0], od),
                (PrimeType::II, 2) => {
                    let f = f.expect("type II");
                    let iinv = iinv()?;
                    let v = &iinv * &f.square();
                    let w = -&(&iinv * &f);
                    Ideal::new(p.clone(), p.clone(), one(), zero(), v, w)
                }
                (_, 2) => Ideal::new(p.clone(), one(), p.clone(), zero(), zero(), zero()),
                _ => invariant("ramified exponent above two after content"),
            }
        }
        Splitting::CompletelySplit | Splitting::PartiallySplit => {
            if nonzero.len() == 1 {
                let j = nonzero[0];
                let i = e[j];
                return match &primes[j] {
                    PrimeSel::Root(_) => {
                        let (x, z) = lift_degree_one(place, &primes[j], i, od)?;
                        Ideal::new(pw(i), one(), one(), -&x, -&z, zero())
                    }
                    PrimeSel::Quadratic => {
                        let (m, w) = place.quadratic.clone().expect("partially split");
                        let iinv = inv_mod(&od.index, p, "I")?;
                        let n1 = &iinv * &(&w + od.a());
                        let m1 = &iinv * &m;
                        let (n, m) = power_nm(&n1, &m1, p, i, od)?;
                        Ideal::new(pw(i), pw(i), one(), zero(), n, -&m)
                    }
                    _ => invariant("unexpected prime"),
                };
            }
            if nonzero.len() != 2 || place.splitting != Splitting::CompletelySplit {
                return invariant("non-primitive exponents after content");
            }
            let (a, b) = (nonzero[0], nonzero[1]);
            let (a, b) = if e[a] <= e[b] { (a, b) } else { (b, a) };
            let (i, j) = (e[a], e[b] - e[a]);
            let (PrimeSel::Root(alpha1), PrimeSel::Root(alpha2)) = (&primes[a], &primes[b]) else {
                return invariant("unexpected prime");
            };
            if j == 0 {
                let iinv = inv_mod(&od.index, p, "I")?;
                let n1 = &iinv * &(od.a() + &(alpha1 * alpha2));
                let m1 = &iinv * &(alpha1 + alpha2);
                let (n, m) = power_nm(&n1, &m1, p, i, od)?;
                return Ideal::new(pw(i), pw(i), one(), zero(), n, -&m);
            }
            mixed_power(place, &primes[a], &primes[b], i, j, od)
        }
        Splitting::PartiallyRamified => {
            let (a, b) = (e[0], e[1]);
            if a == 0 {
                // q^b from (q^2)^ceil(b/2)
                let kk = b.div_ceil(2);
                let einv = inv_mod(&od.e, p, "E")?;
                let m1 = -&(&einv * &od.f);
                let (n, m) = power_nm(&zero(), &m1, p, kk, od)?;
                let sp = pw(b / 2);
                return Ideal::new(pw(kk), sp, one(), zero(), n, -&m);
            }
            let (x, z) = lift_degree_one(place, &PrimeSel::Unramified, a, od)?;
            match b {
                0 => Ideal::new(pw(a), one(), one(), -&x, -&z, zero()),
                1 => Ideal::new(pw(a), one(), p.clone(), -&x, -&z, zero()),
                _ => invariant("non-primitive exponents after content"),
            }
        }
    }
}

/// p^i q^(i+j) for distinct degree-one primes over a completely split P.
fn mixed_power(
    place: &FinitePlace,
    sp: &PrimeSel,
    sq: &PrimeSel,
    i: usize,
    j: usize,
    od: &OrderData,
) -> Result<Ideal> {
    let p = &place.p;
    let k = p.field();
    let one = Poly::one(k);
    let big = p.pow((i + j) as u64);
    let small = p.pow(i as u64);
    let (xp, _) = lift_degree_one(place, sp, i, od)?;
    let (xq, zq) = lift_degree_one(place, sq, i + j, od)?;
    let (h, g) = match xp.inv_mod(&big) {
        Ok(n) => {
            // (-X_p + rho)(-Z_q + omega) scaled by -X_p^{-1}
            let h = &n * &(&od.fi - &(&xp * &zq));
            let g = &n * &zq;
            (h, g)
        }
        Err(_) => {
            // X_p not a unit: use (-X_p + rho)(-X_q + rho) scaled by I^{-1}
            let iinv = inv_mod(&od.index, &big, "I")?;
            let h = &iinv * &(&(&xp * &xq) + od.a());
            let g = -&(&iinv * &(&xp + &xq));
            (h, g)
        }
    };
    let h = h.rem(&big);
    let g = g.rem(&big);
    Ideal::new(big, small, one, -&xq, h, g)
}

#[cfg(test)]
mod tests;
