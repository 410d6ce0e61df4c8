//! Brute-force reference computations: Hermite reduction of module
//! generators, ideal products from all cross products, exhaustive
//! minimal-norm search and splitting by enumerating the residue field.
//!
//! Nothing here calls the ideal arithmetic of `ideal` or the bases of
//! `places`; results are assembled directly in canonical form.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::{element_mul, element_norm, Element, OrderData};
use crate::places::Splitting;
use crate::poly::Poly;

/// Hard cap on enumerated combinations.
pub const BUDGET: u128 = 10_000_000;

type Row = [Poly; 3];

fn row_sub_mul(r: &Row, q: &Poly, piv: &Row) -> Row {
    [&r[0] - &(q * &piv[0]), &r[1] - &(q * &piv[1]), &r[2] - &(q * &piv[2])]
}

/// Removes one row whose entry in `col` generates the column; the other
/// rows end with zero there.
fn extract_pivot(rows: &mut Vec<Row>, col: usize) -> Option<Row> {
    loop {
        let live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
        if live.is_empty() {
            return None;
        }
        let best = *live
            .iter()
            .min_by_key(|&&i| rows[i][col].deg())
            .expect("nonempty");
        if live.len() == 1 {
            let mut piv = rows.swap_remove(best);
            let k = piv[col].field();
            let inv = k.inv(piv[col].lc()).expect("nonzero");
            for e in piv.iter_mut() {
                *e = e.scale(inv);
            }
            return Some(piv);
        }
        let piv = rows[best].clone();
        for &i in &live {
            if i != best {
                let q = rows[i][col].quo(&piv[col]);
                rows[i] = row_sub_mul(&rows[i], &q, &piv);
            }
        }
    }
}

/// Canonical ideal spanned over F_q[x] by the given coordinate rows.
pub fn module_triangularize(gens: &[Element]) -> Result<Ideal> {
    let mut rows: Vec<Row> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| [g.a.clone(), g.b.clone(), g.c.clone()])
        .collect();
    let rank = || Error::Domain("generators do not span a rank-3 module".into());
    let r1 = extract_pivot(&mut rows, 2).ok_or_else(rank)?;
    let r2 = extract_pivot(&mut rows, 1).ok_or_else(rank)?;
    let r3 = extract_pivot(&mut rows, 0).ok_or_else(rank)?;
    debug_assert!(rows.iter().all(|r| r.iter().all(|e| e.is_zero())));

    let mut r2 = r2;
    r2[0] = r2[0].rem(&r3[0]);
    let mut r1 = r1;
    let q = r1[1].quo(&r2[1]);
    r1 = row_sub_mul(&r1, &q, &r2);
    r1[0] = r1[0].rem(&r3[0]);

    let mut d = r3[0].clone();
    for e in [&r2[0], &r2[1], &r1[0], &r1[1], &r1[2]] {
        d = d.gcd(e);
    }
    let div = |p: &Poly| p.div_exact(&d);
    let (s, c2, sp, c1, b1, spp) = (div(&r3[0]), div(&r2[0]), div(&r2[1]), div(&r1[0]), div(&r1[1]), div(&r1[2]));

    let bad = |what: &str| Error::Invariant(format!("triangular form is not an ideal basis: {what}"));
    let (u, r) = c2.divrem(&sp)?;
    if !r.is_zero() {
        return Err(bad("s' does not divide the second row"));
    }
    let (w, t) = if sp.is_one() {
        (Poly::zero(s.field()), b1.clone())
    } else {
        let inv = spp.inv_mod(&sp).map_err(|_| bad("gcd(s', s'') is not one"))?;
        let w = b1.mul_mod(&inv, &sp);
        let t = (&b1 - &(&spp * &w))
            .exact_div(&sp)
            .map_err(|_| bad("s' does not divide the third row"))?;
        (w, t)
    };
    let c = &c1 - &(&t * &c2);
    let (v, r) = c.divrem(&spp)?;
    if !r.is_zero() {
        return Err(bad("s'' does not divide the third row"));
    }
    if !sp.divides(&s) || !spp.divides(&s) {
        return Err(bad("s' and s'' must divide s"));
    }
    let v = v.rem(&s.div_exact(&spp));
    Ok(Ideal::raw(d, s, sp, spp, u, v, w))
}

/// Product of two ideals from the nine cross products of their bases.
pub fn oracle_ideal_mul(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<Ideal> {
    let mut gens = Vec::with_capacity(9);
    for x in a.basis().iter() {
        for y in b.basis().iter() {
            gens.push(element_mul(x, y, od));
        }
    }
    module_triangularize(&gens)
}

/// The ideal generated by the given elements.
pub fn oracle_ideal_from_gens(gens: &[Element], od: &OrderData) -> Result<Ideal> {
    let (rho, omega) = (od.rho(), od.omega());
    let mut rows = Vec::with_capacity(3 * gens.len());
    for g in gens {
        rows.push(g.clone());
        rows.push(element_mul(g, &rho, od));
        rows.push(element_mul(g, &omega, od));
    }
    module_triangularize(&rows)
}

/// Smallest degree of the norm of a nonzero combination c1 b1 + c2 b2 +
/// c3 b3 of the basis of J with deg c_i at most `bound`. Combinations are
/// taken up to a scalar: the first nonzero c_i is monic.
pub fn oracle_min_norm(j: &Ideal, bound: usize, od: &OrderData) -> Result<usize> {
    let k = od.field();
    let q = k.order();
    let per = q
        .checked_pow((bound + 1) as u32)
        .filter(|&p| p.checked_pow(3).is_some_and(|t| t <= BUDGET))
        .ok_or_else(|| Error::Budget(format!("{q}^{} coefficients per slot", bound + 1)))?;
    let coeffs: Vec<Poly> = (0..per)
        .map(|mut idx| {
            let mut c = Vec::with_capacity(bound + 1);
            for _ in 0..=bound {
                c.push(k.from_index(idx % q));
                idx /= q;
            }
            Poly::new(k, c)
        })
        .collect();
    let monic: Vec<bool> = coeffs.iter().map(|c| !c.is_zero() && c.is_monic()).collect();
    let basis = j.basis();
    let multiples: Vec<Vec<Element>> = basis
        .iter()
        .map(|b| coeffs.iter().map(|c| b.scale(c)).collect())
        .collect();
    let zero = od.zero();
    let best = AtomicUsize::new(usize::MAX);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    std::thread::scope(|sc| {
        for t in 0..threads {
            let (best, multiples, monic, zero) = (&best, &multiples, &monic, &zero);
            sc.spawn(move || {
                for i1 in (t..per as usize).step_by(threads) {
                    if i1 != 0 && !monic[i1] {
                        continue;
                    }
                    let e1 = if i1 == 0 { zero.clone() } else { multiples[0][i1].clone() };
                    for i2 in 0..per as usize {
                        if i1 == 0 && i2 != 0 && !monic[i2] {
                            continue;
                        }
                        let e12 = e1.add(&multiples[1][i2]);
                        for i3 in 0..per as usize {
                            if i1 == 0 && i2 == 0 && !monic[i3] {
                                continue;
                            }
                            let x = e12.add(&multiples[2][i3]);
                            if x.is_zero() {
                                continue;
                            }
                            let n = element_norm(&x, od).deg();
                            best.fetch_min(n, Ordering::Relaxed);
                        }
                    }
                }
            });
        }
    });
    Ok(best.into_inner())
}

/// Splitting of P read off from v_P(discriminant) and a count of the
/// roots of T^3 - AT + B in the residue field.
pub fn oracle_split(p: &Poly, od: &OrderData) -> Result<Splitting> {
    let p = p.monic();
    let k = p.field();
    let size = k.order().checked_pow(p.deg() as u32);
    if !size.is_some_and(|n| n <= 59_049) {
        return Err(Error::Budget("residue field too large".into()));
    }
    if p.is_constant() || !p.factor()?.iter().all(|(f, e)| *e == 1 && f == &p) {
        return Err(Error::Domain(format!("{p:?} is not irreducible")));
    }
    match od.delta.valuation(&p) {
        0 => {}
        1 => return Ok(Splitting::PartiallyRamified),
        _ => return Ok(Splitting::TotallyRamified),
    }
    let (a, b) = (od.a().rem(&p), od.b().rem(&p));
    let roots = Poly::all_below(k, p.deg())
        .filter(|t| (&(&t.pow(3) - &(&a * t)) + &b).rem(&p).is_zero())
        .count();
    Ok(match roots {
        0 => Splitting::Inert,
        1 => Splitting::PartiallySplit,
        _ => Splitting::CompletelySplit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Curve;
    use crate::ff::FieldCtx;
    use crate::order::compute_order_data;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(FieldCtx::prime(), cs)
    }

    fn od() -> OrderData {
        compute_order_data(&Curve::new(p(&[1]), p(&[0, 1])).unwrap()).unwrap()
    }

    fn el(a: Poly, b: Poly, c: Poly) -> Element {
        Element::new(a, b, c)
    }

    #[test]
    fn identity_rows_give_unit() {
        let j = module_triangularize(&[
            el(p(&[1]), p(&[]), p(&[])),
            el(p(&[]), p(&[1]), p(&[])),
            el(p(&[]), p(&[]), p(&[1])),
        ])
        .unwrap();
        assert_eq!(j, Ideal::unit(FieldCtx::prime()));
    }

    #[test]
    fn scalar_rows_give_content() {
        let x = p(&[0, 1]);
        let j = module_triangularize(&[
            el(x.clone(), p(&[]), p(&[])),
            el(p(&[]), x.clone(), p(&[])),
            el(p(&[]), p(&[]), x.clone()),
        ])
        .unwrap();
        assert_eq!(j.d, x);
        assert!(j.primitive_part().is_unit());
    }

    #[test]
    fn rank_deficiency_is_reported() {
        let r = module_triangularize(&[el(p(&[1]), p(&[1]), p(&[]))]);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn splitting_by_enumeration() {
        let od = od();
        assert_eq!(oracle_split(&p(&[0, 1]), &od).unwrap(), Splitting::CompletelySplit);
        assert_eq!(oracle_split(&p(&[2, 1]), &od).unwrap(), Splitting::Inert);
    }

    #[test]
    fn min_norm_of_small_ideals() {
        let od = od();
        let k = FieldCtx::prime();
        assert_eq!(oracle_min_norm(&Ideal::unit(k), 0, &od).unwrap(), 0);
        let x = Ideal::principal_poly(&p(&[0, 1]));
        assert_eq!(oracle_min_norm(&x, 1, &od).unwrap(), 3);
    }
}
