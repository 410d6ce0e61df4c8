//! Cubics T^3 - aT + b over a residue field F_q[x]/(P).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Poly, DEFAULT_SEED};

/// How T^3 - aT + b factors over F_q[x]/(P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCubic {
    /// deg gcd(T^Q - T, cubic), Q the residue field size: 0, 1 or 3.
    pub gcd_degree: usize,
    /// Roots as residues mod P, sorted.
    pub roots: Vec<Poly>,
    /// For a single root r, the irreducible cofactor T^2 - M T + W as (M, W).
    pub quadratic: Option<(Poly, Poly)>,
}

/// Arithmetic in R[T] with R = F_q[x]/(P). Coefficient vectors are kept
/// reduced mod P and trimmed.
struct Tower<'a> {
    p: &'a Poly,
}

type RPoly = Vec<Poly>;

impl Tower<'_> {
    fn trim(&self, mut f: RPoly) -> RPoly {
        while f.last().is_some_and(|c| c.is_zero()) {
            f.pop();
        }
        f
    }

    fn sub(&self, f: &RPoly, g: &RPoly) -> RPoly {
        let k = self.p.field();
        let n = f.len().max(g.len());
        let z = Poly::zero(k);
        let out = (0..n)
            .map(|i| (f.get(i).unwrap_or(&z) - g.get(i).unwrap_or(&z)).rem(self.p))
            .collect();
        self.trim(out)
    }

    fn mul(&self, f: &RPoly, g: &RPoly) -> RPoly {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let k = self.p.field();
        let mut out = vec![Poly::zero(k); f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                out[i + j] = (&out[i + j] + &a.mul_mod(b, self.p)).rem(self.p);
            }
        }
        self.trim(out)
    }

    fn inv(&self, c: &Poly) -> Poly {
        c.inv_mod(self.p).expect("nonzero residue in a field")
    }

    fn rem(&self, f: &RPoly, g: &RPoly) -> RPoly {
        let mut r = f.clone();
        let dg = g.len() - 1;
        let lead_inv = self.inv(&g[dg]);
        while r.len() > dg {
            let top = r.len() - 1;
            let t = r[top].mul_mod(&lead_inv, self.p);
            for (j, gj) in g.iter().enumerate() {
                let idx = top - dg + j;
                r[idx] = (&r[idx] - &t.mul_mod(gj, self.p)).rem(self.p);
            }
            r = self.trim(r);
        }
        r
    }

    fn quo(&self, f: &RPoly, g: &RPoly) -> RPoly {
        let k = self.p.field();
        let dg = g.len() - 1;
        if f.len() <= dg {
            return Vec::new();
        }
        let mut r = f.clone();
        let mut q = vec![Poly::zero(k); f.len() - dg];
        let lead_inv = self.inv(&g[dg]);
        while r.len() > dg {
            let top = r.len() - 1;
            let t = r[top].mul_mod(&lead_inv, self.p);
            for (j, gj) in g.iter().enumerate() {
                let idx = top - dg + j;
                r[idx] = (&r[idx] - &t.mul_mod(gj, self.p)).rem(self.p);
            }
            q[top - dg] = t;
            r = self.trim(r);
        }
        self.trim(q)
    }

    fn monic(&self, f: RPoly) -> RPoly {
        let Some(l) = f.last() else { return f };
        let li = self.inv(l);
        f.iter().map(|c| c.mul_mod(&li, self.p)).collect()
    }

    fn gcd(&self, f: &RPoly, g: &RPoly) -> RPoly {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    fn mul_mod(&self, f: &RPoly, g: &RPoly, m: &RPoly) -> RPoly {
        self.rem(&self.mul(f, g), m)
    }

    fn cube_mod(&self, f: &RPoly, m: &RPoly) -> RPoly {
        self.mul_mod(&self.mul_mod(f, f, m), f, m)
    }

    /// Splits a monic product of distinct linear factors into its roots.
    fn linear_roots(&self, g: &RPoly, n: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let k = self.p.field();
        if g.len() == 2 {
            return vec![(-&g[0]).rem(self.p)];
        }
        let one: RPoly = vec![Poly::one(k)];
        loop {
            let r: RPoly = self.trim(
                (0..g.len() - 1)
                    .map(|_| Poly::random(k, self.p.deg(), rng))
                    .collect(),
            );
            if r.len() < 2 {
                continue;
            }
            // r^((Q-1)/2) as the product of r^(3^j), j < n
            let mut pw = self.rem(&r, g);
            let mut acc = pw.clone();
            for _ in 1..n {
                pw = self.cube_mod(&pw, g);
                acc = self.mul_mod(&acc, &pw, g);
            }
            let h = self.gcd(&self.sub(&acc, &one), g);
            if h.len() > 1 && h.len() < g.len() {
                let other = self.monic(self.quo(g, &h));
                let mut out = self.linear_roots(&h, n, rng);
                out.extend(self.linear_roots(&other, n, rng));
                return out;
            }
        }
    }
}

/// Factorization data of T^3 - aT + b over F_q[x]/(P).
pub fn cubic_residue_factor(a: &Poly, b: &Poly, p: &Poly) -> Result<ResidueCubic> {
    if !p.is_irreducible() {
        return Err(Error::Domain(format!("{p:?} is not irreducible")));
    }
    let p = &p.monic();
    Ok(cubic_residue_factor_unchecked(a, b, p))
}

pub(crate) fn cubic_residue_factor_unchecked(a: &Poly, b: &Poly, p: &Poly) -> ResidueCubic {
    let k = p.field();
    let tw = Tower { p };
    let a = a.rem(p);
    let b = b.rem(p);
    let n = k.degree() * p.deg();
    let cubic: RPoly = tw.trim(vec![b.clone(), -&a, Poly::zero(k), Poly::one(k)]);
    let t: RPoly = vec![Poly::zero(k), Poly::one(k)];
    let mut h = t.clone();
    for _ in 0..n {
        h = tw.cube_mod(&h, &cubic);
    }
    let g = tw.gcd(&tw.sub(&h, &t), &cubic);
    let gcd_degree = g.len().saturating_sub(1);
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut roots = if gcd_degree == 0 {
        Vec::new()
    } else {
        tw.linear_roots(&g, n, &mut rng)
    };
    roots.sort();
    let quadratic = if roots.len() == 1 {
        let r = &roots[0];
        Some(((-r).rem(p), (&r.mul_mod(r, p) - &a).rem(p)))
    } else {
        None
    };
    ResidueCubic {
        gcd_degree,
        roots,
        quadratic,
    }
}
