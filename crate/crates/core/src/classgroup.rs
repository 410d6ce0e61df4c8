//! Minimal-norm elements, bases of principal ideals and composition with
//! reduction to the distinguished representative of a class.

use crate::error::{invariant, Error, Result};
use crate::ideal::{ideal_divide_nonprimitive, ideal_invert, ideal_mul, Ideal};
use crate::order::{element_mul, Element, OrderData};
use crate::poly::Poly;

const NEG_INF: i64 = i64::MIN / 4;

/// A basis row with its column weights 3 deg b1, 3 deg b2 + deg FI^2 and
/// 3 deg b3 + deg F^2 I.
#[derive(Clone, Debug)]
pub struct WeightedRow {
    pub b: [Poly; 3],
    pub w: [i64; 3],
    pub a: usize,
    pub wmax: i64,
    index: usize,
}

impl WeightedRow {
    fn new(b: [Poly; 3], index: usize, od: &OrderData) -> WeightedRow {
        let mut r = WeightedRow {
            b,
            w: [0; 3],
            a: 0,
            wmax: 0,
            index,
        };
        r.reweigh(od);
        r
    }

    fn reweigh(&mut self, od: &OrderData) {
        let offs = [0, od.fi2.deg() as i64, od.f2i.deg() as i64];
        for j in 0..3 {
            self.w[j] = if self.b[j].is_zero() {
                NEG_INF
            } else {
                3 * self.b[j].deg() as i64 + offs[j]
            };
        }
        self.a = (0..3).max_by_key(|&j| self.w[j]).expect("three columns");
        self.wmax = self.w[self.a];
    }

    fn element(&self) -> Element {
        Element::new(self.b[0].clone(), self.b[1].clone(), self.b[2].clone())
    }
}

fn need_distinguished(od: &OrderData) -> Result<()> {
    if od.distinguished_ok {
        Ok(())
    } else {
        Err(Error::Applicability(
            "reduction needs the wild criterion with 3 not dividing deg FI^2".into(),
        ))
    }
}

/// rows[i] -= c rows[j] with c the quotient of the entries at column a.
fn cancel(rows: &mut [WeightedRow], i: usize, j: usize, a: usize, od: &OrderData) {
    let c = rows[i].b[a].quo(&rows[j].b[a]);
    let src = rows[j].b.clone();
    for (x, y) in rows[i].b.iter_mut().zip(&src) {
        *x = &*x - &(&c * y);
    }
    rows[i].reweigh(od);
}

/// A nonzero element of J whose norm has least degree, scaled so that the
/// leading coefficient of its dominating coordinate is one.
pub fn min_element(j: &Ideal, od: &OrderData) -> Result<Element> {
    need_distinguished(od)?;
    if !j.is_primitive() {
        return Err(Error::Domain("min_element needs a primitive ideal".into()));
    }
    let mut rows: Vec<WeightedRow> = j
        .basis()
        .into_iter()
        .enumerate()
        .map(|(i, e)| WeightedRow::new([e.a, e.b, e.c], i, od))
        .collect();
    let order = |rows: &mut Vec<WeightedRow>| rows.sort_by_key(|r| (r.wmax, r.index));
    order(&mut rows);
    let mut guard = 0usize;
    loop {
        let (a1, a2, a3) = (rows[0].a, rows[1].a, rows[2].a);
        if a1 == a2 {
            cancel(&mut rows, 1, 0, a1, od);
        } else if a1 == a3 {
            cancel(&mut rows, 2, 0, a1, od);
        } else if a2 == a3 {
            cancel(&mut rows, 2, 1, a2, od);
        } else {
            break;
        }
        order(&mut rows);
        guard += 1;
        if guard > 100_000 {
            return invariant("minimal element loop did not terminate");
        }
    }
    let best = &rows[0];
    let lead = best.b[best.a].lc();
    let inv = od.field().inv(lead)?;
    Ok(best.element().scale(&Poly::constant(od.field(), inv)))
}

/// Replaces rows x and y by a unimodular combination with a zero at
/// column `col` in row y.
fn eliminate(x: &mut [Poly; 3], y: &mut [Poly; 3], col: usize) -> Result<()> {
    if y[col].is_zero() {
        return Ok(());
    }
    if x[col].is_zero() {
        std::mem::swap(x, y);
        return Ok(());
    }
    let (g, s, t) = x[col].xgcd(&y[col])?;
    let (p, q) = (x[col].div_exact(&g), y[col].div_exact(&g));
    let nx = [0, 1, 2].map(|k| &(&s * &x[k]) + &(&t * &y[k]));
    let ny = [0, 1, 2].map(|k| &(&p * &y[k]) - &(&q * &x[k]));
    *x = nx;
    *y = ny;
    Ok(())
}

/// The principal ideal generated by alpha, with its content.
pub fn can_basis(alpha: &Element, od: &OrderData) -> Result<Ideal> {
    if alpha.is_zero() {
        return Err(Error::Domain("the zero element generates no ideal".into()));
    }
    let (a, b, c) = (&alpha.a, &alpha.b, &alpha.c);
    let (ai, fi, f, e, i) = (od.a(), &od.fi, &od.f, &od.e, &od.index);
    let mut r1 = [a.clone(), b.clone(), c.clone()];
    let mut r2 = [&(b * ai) - &(c * fi), a.clone(), b * i];
    let mut r3 = [-&(b * fi), -&(c * f), a - &(c * e)];
    debug_assert_eq!(
        Element::new(r2[0].clone(), r2[1].clone(), r2[2].clone()),
        element_mul(alpha, &od.rho(), od)
    );
    // Lower triangular: r1 keeps column 2, then r2 keeps column 1.
    eliminate(&mut r1, &mut r2, 2)?;
    eliminate(&mut r1, &mut r3, 2)?;
    eliminate(&mut r2, &mut r3, 1)?;
    let (c3, c2, b2, c1, b1, a1) = (&r3[0], &r2[0], &r2[1], &r1[0], &r1[1], &r1[2]);
    if c3.is_zero() || b2.is_zero() || a1.is_zero() {
        return invariant("principal ideal basis is singular");
    }
    let d = a1.gcd(b2);
    let div = |p: &Poly| {
        p.exact_div(&d)
            .map_err(|_| Error::Invariant("content does not divide the basis".into()))
    };
    let (s, sp, spp) = (div(c3)?.monic(), div(b2)?, div(a1)?);
    let (c2, b1, c1) = (div(c2)?, div(b1)?, div(c1)?);
    // Normalize the rows to monic diagonal entries.
    let k = od.field();
    let n2 = Poly::constant(k, k.inv(sp.lc())?);
    let n1 = Poly::constant(k, k.inv(spp.lc())?);
    let (sp, c2) = (&sp * &n2, &c2 * &n2);
    let (spp, b1, c1) = (&spp * &n1, &b1 * &n1, &c1 * &n1);
    let u = c2
        .exact_div(&sp)
        .map_err(|_| Error::Invariant("s' does not divide the second row".into()))?;
    let (w, t) = if sp.is_one() {
        (Poly::zero(k), b1.clone())
    } else {
        let w = b1.mul_mod(&spp.inv_mod(&sp)?, &sp);
        (w.clone(), (&b1 - &(&spp * &w)).div_exact(&sp))
    };
    let v = (&c1 - &(&t * &c2))
        .exact_div(&spp)
        .map_err(|_| Error::Invariant("s'' does not divide the third row".into()))?;
    Ideal::with_content(d.monic(), s, sp, spp, u, v, w)
}

/// deg N(J) at most the genus.
pub fn is_reduced(j: &Ideal, od: &OrderData) -> bool {
    j.norm().deg() <= od.genus
}

/// The distinguished ideal in the class of I1 I2.
pub fn comp_red(i1: &Ideal, i2: &Ideal, od: &OrderData) -> Result<Ideal> {
    need_distinguished(od)?;
    let (_, i3) = ideal_mul(&i1.primitive_part(), &i2.primitive_part(), od)?;
    if i3.is_unit() {
        return Ok(i3);
    }
    let bar = ideal_invert(&i3, od)?;
    let alpha = min_element(&bar, od)?;
    let principal = can_basis(&alpha, od)?;
    let (content, j) = ideal_divide_nonprimitive(&principal.d, &principal.primitive_part(), &bar, od)?;
    if !content.is_one() || !is_reduced(&j, od) {
        return invariant(format!("reduction produced <{content:?}> {j:?}"));
    }
    Ok(j)
}
