//! The maximal order with integral basis {1, rho, omega}, where
//! rho = y - i and omega = (y^2 + iy + i^2 - A)/I.

use crate::curve::{detect_singularity, Criterion, Curve};
use crate::error::{invariant, Error, Result};
use crate::ff::Field;
use crate::places::{split_infinite, Splitting};
use crate::poly::{cube_root_mod_unchecked, Deg, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderData {
    pub curve: Curve,
    pub criterion: Criterion,
    /// Shift with rho = y - i, reduced mod I.
    pub i: Poly,
    /// Index of y; monic and square-free.
    pub index: Poly,
    /// A / I
    pub e: Poly,
    /// (i^3 - iA + B) / I^2
    pub f: Poly,
    /// A^3 / I^2
    pub delta: Poly,
    pub genus: usize,
    pub infinite: Splitting,
    /// Wild criterion and 3 does not divide deg F I^2.
    pub distinguished_ok: bool,
    /// F I^2, cached.
    pub fi2: Poly,
    /// F I, cached.
    pub fi: Poly,
    /// F^2 I, cached.
    pub f2i: Poly,
}

impl OrderData {
    pub fn field(&self) -> Field {
        self.curve.field()
    }

    pub fn a(&self) -> &Poly {
        &self.curve.a
    }

    pub fn b(&self) -> &Poly {
        &self.curve.b
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field())
    }

    pub fn one(&self) -> Element {
        Element::from_poly(Poly::one(self.field()))
    }

    pub fn rho(&self) -> Element {
        let k = self.field();
        Element::new(Poly::zero(k), Poly::one(k), Poly::zero(k))
    }

    pub fn omega(&self) -> Element {
        let k = self.field();
        Element::new(Poly::zero(k), Poly::zero(k), Poly::one(k))
    }
}

/// Index data of a standard-form curve.
pub fn compute_order_data(c: &Curve) -> Result<OrderData> {
    let Some(criterion) = c.criterion() else {
        return Err(Error::Domain("curve is not in standard form".into()));
    };
    let k = c.field();
    let (d, _) = detect_singularity(c);
    let mut parts = Vec::new();
    let mut index = Poly::one(k);
    for p in d.prime_divisors() {
        let i0 = cube_root_mod_unchecked(&(-&c.b).rem(&p), &p);
        let val = c.shifted_b(&i0);
        let p2 = p.square();
        if !p.divides(&c.a) || !p2.divides(&val) {
            continue;
        }
        if p2.divides(&c.a) && (&p2 * &p).divides(&val) {
            return Err(Error::Domain("curve is not in standard form".into()));
        }
        index = &index * &p;
        parts.push((i0, p));
    }
    let i = Poly::crt(k, &parts)?;
    let fi2_full = c.shifted_b(&i);
    let i2 = index.square();
    let (e, r) = c.a.divrem(&index)?;
    if !r.is_zero() {
        return invariant("I does not divide A");
    }
    let (f, r) = fi2_full.divrem(&i2)?;
    if !r.is_zero() {
        return invariant("I^2 does not divide i^3 - iA + B");
    }
    let delta = c.a.pow(3).exact_div(&i2)?;
    let genus = genus_of(c, &index, criterion)?;
    let fi = &f * &index;
    let fi2 = &fi * &index;
    let f2i = &fi * &f;
    let distinguished_ok = criterion == Criterion::Wild && fi2.deg() % 3 != 0;
    Ok(OrderData {
        curve: c.clone(),
        criterion,
        infinite: split_infinite(c)?,
        i,
        index,
        e,
        f,
        delta,
        genus,
        distinguished_ok,
        fi2,
        fi,
        f2i,
    })
}

fn genus_of(c: &Curve, index: &Poly, crit: Criterion) -> Result<usize> {
    let (da, db, di) = (c.a.deg() as i64, c.b.deg() as i64, index.deg() as i64);
    let g = match crit {
        Criterion::Wild => db - di - 1,
        Criterion::Tame => {
            let num = 3 * da - 2 * di + (da % 2) - 4;
            if num % 2 != 0 {
                return invariant("genus formula gave a non-integer");
            }
            num / 2
        }
    };
    if g < 0 {
        return invariant(format!("negative genus {g}"));
    }
    Ok(g as usize)
}

/// The genus recorded in the order data.
pub fn genus(od: &OrderData) -> usize {
    od.genus
}

/// a + b rho + c omega.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
}

impl Element {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Element {
        Element { a, b, c }
    }

    pub fn zero(k: Field) -> Element {
        Element::new(Poly::zero(k), Poly::zero(k), Poly::zero(k))
    }

    pub fn from_poly(a: Poly) -> Element {
        let k = a.field();
        Element::new(a, Poly::zero(k), Poly::zero(k))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn add(&self, o: &Element) -> Element {
        Element::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c)
    }

    pub fn sub(&self, o: &Element) -> Element {
        Element::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c)
    }

    pub fn scale(&self, p: &Poly) -> Element {
        Element::new(&self.a * p, &self.b * p, &self.c * p)
    }

    pub fn coords(&self) -> [&Poly; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// Product in the maximal order via rho^2 = I omega + A,
/// omega^2 = -E omega - F rho, rho omega = -F I.
pub fn element_mul(u: &Element, v: &Element, od: &OrderData) -> Element {
    let bb = &u.b * &v.b;
    let cc = &u.c * &v.c;
    let bc = &(&u.b * &v.c) + &(&u.c * &v.b);
    let a = &(&(&u.a * &v.a) + &(&bb * od.a())) - &(&bc * &od.fi);
    let b = &(&(&u.a * &v.b) + &(&u.b * &v.a)) - &(&cc * &od.f);
    let c = &(&(&(&u.a * &v.c) + &(&u.c * &v.a)) + &(&bb * &od.index)) - &(&cc * &od.e);
    Element::new(a, b, c)
}

/// Rows of multiplication by u in the basis (1, rho, omega): the
/// coordinates of u, u rho and u omega.
pub fn mul_matrix(u: &Element, od: &OrderData) -> [[Poly; 3]; 3] {
    let (a, b, c) = (&u.a, &u.b, &u.c);
    [
        [a.clone(), b.clone(), c.clone()],
        [&(b * od.a()) - &(c * &od.fi), a.clone(), b * &od.index],
        [-(b * &od.fi), -(c * &od.f), a - &(c * &od.e)],
    ]
}

/// Norm of u, as the determinant of multiplication by u.
pub fn element_norm(u: &Element, od: &OrderData) -> Poly {
    let m = mul_matrix(u, od);
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let t0 = &m[0][0] * &minor(1, 2, 1, 2);
    let t1 = &m[0][1] * &minor(1, 2, 0, 2);
    let t2 = &m[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// (3 deg a, 3 deg b + deg F I^2, 3 deg c + deg F^2 I).
pub fn norm_degree_parts(u: &Element, od: &OrderData) -> Result<[Deg; 3]> {
    if !od.distinguished_ok {
        return Err(Error::Applicability(
            "norm degrees need the wild criterion and 3 not dividing deg F I^2".into(),
        ));
    }
    Ok(degree_parts(u, od))
}

pub(crate) fn degree_parts(u: &Element, od: &OrderData) -> [Deg; 3] {
    [
        u.a.degree().times(3),
        u.b.degree().times(3).plus(od.fi2.degree()),
        u.c.degree().times(3).plus(od.f2i.degree()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldCtx;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(FieldCtx::prime(), cs)
    }

    fn example_62() -> OrderData {
        let a = &p(&[2, 1, 1]) * &p(&[1, 0, 1]);
        let b = p(&[1, 0, 1, 0, 1, 1, 1, 0, 2]);
        compute_order_data(&Curve::new(a, b).unwrap()).unwrap()
    }

    #[test]
    fn pathological_example_invariants() {
        let od = example_62();
        assert_eq!(od.index, (&p(&[2, 1, 1]) * &p(&[1, 0, 1])).monic());
        assert_eq!(od.i, p(&[0, 0, 2, 2]));
        assert_eq!(od.fi2.deg(), 9);
        assert!(!od.distinguished_ok);
        assert_eq!(od.genus, 3);
        assert_eq!(&od.delta * &od.index.square(), od.a().pow(3));
    }

    #[test]
    fn basis_products() {
        let od = example_62();
        let rho = od.rho();
        let omega = od.omega();
        let k = od.field();
        assert_eq!(element_mul(&rho, &omega, &od), Element::from_poly(-&od.fi));
        assert_eq!(
            element_mul(&rho, &rho, &od),
            Element::new(od.a().clone(), Poly::zero(k), od.index.clone())
        );
        let u = od.one().add(&rho);
        let v = od.one().add(&omega);
        assert_eq!(
            element_mul(&u, &v, &od),
            Element::new(&Poly::one(k) - &od.fi, Poly::one(k), Poly::one(k))
        );
    }

    #[test]
    fn norms_of_basis() {
        let od = example_62();
        assert_eq!(element_norm(&od.rho(), &od), -&od.fi2);
        assert_eq!(element_norm(&od.omega(), &od), od.f2i.clone());
        assert_eq!(element_norm(&od.one(), &od), Poly::one(od.field()));
    }

    #[test]
    fn nonsingular_curve_has_trivial_index() {
        let od = compute_order_data(&Curve::new(p(&[1]), p(&[0, 1])).unwrap()).unwrap();
        assert!(od.index.is_one());
        assert!(od.i.is_zero());
        assert_eq!(od.genus, 0);
        assert_eq!(od.delta, p(&[1]));
    }
}
