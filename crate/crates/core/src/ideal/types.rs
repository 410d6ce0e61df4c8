//! Splitting an ideal by the type of the places dividing its norm, and
//! the description of an ideal at one place by prime exponents.

use super::{ideal_contains, ideal_mul_coprime, Ideal};
use crate::error::{invariant, Error, Result};
use crate::order::OrderData;
use crate::places::{prime_power_basis, split_finite, FinitePlace, PrimeType, Splitting};
use crate::poly::Poly;

/// Components of a primitive ideal supported on Type I, II, III and IV
/// places, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeParts {
    pub parts: [Ideal; 4],
}

impl TypeParts {
    pub fn part(&self, t: PrimeType) -> &Ideal {
        &self.parts[t as usize]
    }

    /// The product of the four components.
    pub fn recombine(&self) -> Result<Ideal> {
        let mut acc = self.parts[0].clone();
        for p in &self.parts[1..] {
            acc = ideal_mul_coprime(&acc, p)?;
        }
        Ok(acc)
    }
}

pub(crate) const TYPES: [PrimeType; 4] = [PrimeType::I, PrimeType::II, PrimeType::III, PrimeType::IV];

/// The places dividing s with their multiplicity in s.
pub(crate) fn places_of(s: &Poly, od: &OrderData) -> Result<Vec<(FinitePlace, usize)>> {
    s.prime_divisors()
        .into_iter()
        .map(|p| {
            let e = s.valuation(&p);
            Ok((split_finite(&p, od)?, e))
        })
        .collect()
}

/// J + t O for t dividing s, J primitive.
pub(crate) fn restrict(j: &Ideal, t: &Poly) -> Result<Ideal> {
    Ideal::new(
        t.clone(),
        j.sp.gcd(t),
        j.spp.gcd(t),
        j.u.clone(),
        j.v.clone(),
        j.w.clone(),
    )
}

/// Factors a primitive ideal into its Type I to IV components.
pub fn type_factor(j: &Ideal, od: &OrderData) -> Result<TypeParts> {
    if !j.is_primitive() {
        return Err(Error::Domain("type_factor needs a primitive ideal".into()));
    }
    let k = j.field();
    let mut s_t = [Poly::one(k), Poly::one(k), Poly::one(k), Poly::one(k)];
    for (pl, e) in places_of(&j.s, od)? {
        let t = pl.prime_type as usize;
        s_t[t] = &s_t[t] * &pl.p.pow(e as u64);
    }
    let parts = [
        restrict(j, &s_t[0])?,
        restrict(j, &s_t[1])?,
        restrict(j, &s_t[2])?,
        restrict(j, &s_t[3])?,
    ];
    Ok(TypeParts { parts })
}

/// Exponents of the primes above P in the primitive ideal J, in the
/// order of `FinitePlace::primes`.
pub(crate) fn local_exponents(j: &Ideal, place: &FinitePlace, od: &OrderData) -> Result<Vec<usize>> {
    let n = j.norm().valuation(&place.p);
    let primes = place.primes();
    let probe = |idx: usize| -> Result<usize> {
        let mut t = 0;
        while t < n {
            let mut exps = vec![0; primes.len()];
            exps[idx] = t + 1;
            let pw = prime_power_basis(place, &exps, od)?;
            if !ideal_contains(j, &pw) {
                break;
            }
            t += 1;
        }
        Ok(t)
    };
    let exps = match place.splitting {
        Splitting::Inert => vec![n / 3],
        Splitting::TotallyRamified => vec![n],
        Splitting::CompletelySplit => vec![probe(0)?, probe(1)?, probe(2)?],
        Splitting::PartiallySplit => {
            let a = probe(0)?;
            vec![a, (n - a) / 2]
        }
        Splitting::PartiallyRamified => {
            let a = probe(0)?;
            vec![a, n - a]
        }
    };
    let total: usize = exps.iter().zip(place.inertia()).map(|(e, f)| e * f).sum();
    if total != n {
        return invariant(format!("exponents {exps:?} do not account for the norm"));
    }
    Ok(exps)
}

/// The ideal with the given exponents at each place, content included.
pub(crate) fn from_exponents(k: crate::ff::Field, data: &[(FinitePlace, Vec<usize>)], od: &OrderData) -> Result<Ideal> {
    let mut content = Poly::one(k);
    let mut acc = Ideal::unit(k);
    for (pl, exps) in data {
        let local = prime_power_basis(pl, exps, od)?;
        content = &content * &local.d;
        acc = ideal_mul_coprime(&acc, &local.primitive_part())?;
    }
    Ok(Ideal { d: content, ..acc })
}
