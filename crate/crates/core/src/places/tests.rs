use super::*;
use crate::ff::FieldCtx;
use crate::oracle::{oracle_ideal_mul, oracle_split};
use crate::order::compute_order_data;

fn p(cs: &[i64]) -> Poly {
    Poly::from_ints(FieldCtx::prime(), cs)
}

fn curve(a: Poly, b: Poly) -> OrderData {
    compute_order_data(&Curve::new(a, b).unwrap()).unwrap()
}

/// Curves over GF(3) covering all four prime types.
fn curves() -> Vec<OrderData> {
    vec![
        curve(p(&[1]), p(&[0, 1])),
        curve(p(&[0, 1]), p(&[1])),
        curve(p(&[0, 0, 1]), p(&[0, 0, 1])),
        curve(
            &p(&[2, 1, 1]) * &p(&[1, 0, 1]),
            p(&[1, 0, 1, 0, 1, 1, 1, 0, 2]),
        ),
        curve(p(&[1, 1, 0, 1]), p(&[2, 0, 1, 0, 1])),
    ]
}

fn places_upto(od: &OrderData, n: usize) -> Vec<FinitePlace> {
    let k = od.field();
    (1..=n)
        .flat_map(|d| Poly::monics(k, d))
        .filter(|q| q.is_irreducible())
        .map(|q| split_finite(&q, od).unwrap())
        .collect()
}

fn oracle_product(place: &FinitePlace, exps: &[usize], od: &OrderData) -> Ideal {
    let mut acc = Ideal::unit(od.field());
    for (sel, &e) in place.primes().iter().zip(exps) {
        let b = prime_basis(place, sel, od).unwrap();
        for _ in 0..e {
            acc = oracle_ideal_mul(&acc, &b, od).unwrap();
        }
    }
    acc
}

#[test]
fn all_types_occur() {
    let mut seen = std::collections::HashSet::new();
    for od in curves() {
        for pl in places_upto(&od, 2) {
            seen.insert(pl.prime_type);
        }
    }
    assert_eq!(seen.len(), 4, "{seen:?}");
}

#[test]
fn splitting_agrees_with_enumeration() {
    for od in curves() {
        for pl in places_upto(&od, 2) {
            assert_eq!(pl.splitting, oracle_split(&pl.p, &od).unwrap(), "{:?}", pl.p);
            let total: usize = pl.splitting.signature().iter().map(|(e, f)| e * f).sum();
            assert_eq!(total, 3);
        }
    }
}

#[test]
fn prime_bases_are_primes_of_the_right_norm() {
    for od in curves() {
        for pl in places_upto(&od, 2) {
            for (sel, f) in pl.primes().iter().zip(pl.inertia()) {
                let b = prime_basis(&pl, sel, &od).unwrap();
                assert!(b.is_ideal(&od), "{sel:?} over {:?}: {b:?}", pl.p);
                assert_eq!(b.norm(), pl.p.pow(f as u64));
            }
            let prod = oracle_product(&pl, &pl.ramification(), &od);
            assert_eq!(prod, Ideal::principal_poly(&pl.p), "place {:?}", pl.p);
        }
    }
}

#[test]
fn rejects_foreign_selector() {
    let od = &curves()[0];
    let pl = split_finite(&p(&[0, 1]), od).unwrap();
    assert!(prime_basis(&pl, &PrimeSel::Quadratic, od).is_err());
    assert!(split_finite(&p(&[0, 0, 1]), od).is_err());
}

fn exponent_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in exponent_vectors(n - 1, max) {
        for e in 0..=max {
            let mut v = rest.clone();
            v.push(e);
            out.push(v);
        }
    }
    out
}

#[test]
fn prime_powers_match_oracle() {
    for od in curves() {
        for pl in places_upto(&od, 1) {
            let n = pl.primes().len();
            for exps in exponent_vectors(n, 4) {
                if exps.iter().sum::<usize>() > 6 {
                    continue;
                }
                let fast = prime_power_basis(&pl, &exps, &od).unwrap();
                let slow = oracle_product(&pl, &exps, &od);
                assert_eq!(fast, slow, "place {:?} exps {exps:?}", pl.p);
            }
        }
    }
}

#[test]
fn infinite_place() {
    assert_eq!(
        split_infinite(&Curve::new(p(&[1]), p(&[0, 1])).unwrap()).unwrap(),
        Splitting::TotallyRamified
    );
    assert_eq!(
        split_infinite(&Curve::new(p(&[0, 1]), p(&[1])).unwrap()).unwrap(),
        Splitting::PartiallyRamified
    );
    // deg A = 2: Y^3 - Y + b over GF(3) splits completely for b = 0
    let c = Curve::new(p(&[0, 0, 1]), p(&[1])).unwrap();
    assert_eq!(split_infinite(&c).unwrap(), Splitting::CompletelySplit);
    let c = Curve::new(p(&[0, 0, 1]), p(&[1, 0, 0, 1])).unwrap();
    assert_eq!(split_infinite(&c).unwrap(), Splitting::Inert);
}
