//! Random curves and ideals for fuzzing. Ideals are assembled from prime
//! power bases with the brute-force product of `oracle`, so they never
//! depend on the arithmetic they are used to test.

use rand::Rng;

use crate::curve::{standardize, CubicInput, Curve};
use crate::error::Result;
use crate::ff::Field;
use crate::ideal::Ideal;
use crate::oracle::oracle_ideal_mul;
use crate::order::{compute_order_data, OrderData};
use crate::places::{prime_power_basis, split_finite, FinitePlace};
use crate::poly::Poly;

fn nonzero_poly<R: Rng + ?Sized>(k: Field, max_deg: usize, rng: &mut R) -> Poly {
    loop {
        let p = Poly::random(k, max_deg + 1, rng);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random standard curve from random A, B of bounded degree.
pub fn random_curve<R: Rng + ?Sized>(k: Field, max_a: usize, max_b: usize, rng: &mut R) -> OrderData {
    loop {
        let (a, b) = (nonzero_poly(k, max_a, rng), nonzero_poly(k, max_b, rng));
        let Ok(c) = Curve::new(a, b) else { continue };
        if let Ok((c, _)) = standardize(&CubicInput::Depressed(c)) {
            if let Ok(od) = compute_order_data(&c) {
                return od;
            }
        }
    }
}

/// A random monic irreducible of degree 1..=max_deg.
pub fn random_prime<R: Rng + ?Sized>(k: Field, max_deg: usize, rng: &mut R) -> Poly {
    loop {
        let n = rng.gen_range(1..=max_deg);
        let p = Poly::random_monic(k, n, rng);
        if p.is_irreducible() {
            return p;
        }
    }
}

/// Places dividing A, I and the discriminant: where the interesting
/// prime types live.
pub fn special_places(od: &OrderData) -> Vec<FinitePlace> {
    let prod = &(od.a() * &od.index) * &od.delta;
    prod.prime_divisors()
        .into_iter()
        .filter_map(|p| split_finite(&p, od).ok())
        .collect()
}

/// A random primitive ideal with deg s at most `max_deg_s`, built from up
/// to three random prime powers; half of the places are drawn from
/// [`special_places`] when there are any.
pub fn random_ideal<R: Rng + ?Sized>(od: &OrderData, max_deg_s: usize, rng: &mut R) -> Result<Ideal> {
    let k = od.field();
    let special = special_places(od);
    let mut acc = Ideal::unit(k);
    let factors = rng.gen_range(1..=3);
    for _ in 0..factors {
        let place = if !special.is_empty() && rng.gen_bool(0.5) {
            special[rng.gen_range(0..special.len())].clone()
        } else {
            split_finite(&random_prime(k, 2.min(max_deg_s.max(1)), rng), od)?
        };
        let exps: Vec<usize> = place.primes().iter().map(|_| rng.gen_range(0..=3)).collect();
        let local = prime_power_basis(&place, &exps, od)?.primitive_part();
        let next = oracle_ideal_mul(&acc, &local, od)?.primitive_part();
        if next.s.deg() <= max_deg_s {
            acc = next;
        }
    }
    Ok(acc)
}
