//! Cubic curves T^3 - AT + B over F_q[x] and their standard models.

use crate::error::{Error, Result};
use crate::ff::{Fe, Field};
use crate::poly::{cube_root_mod_unchecked, Poly};

/// S T^3 + U T^2 + V T + W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralCubic {
    pub s: Poly,
    pub u: Poly,
    pub v: Poly,
    pub w: Poly,
}

impl GeneralCubic {
    pub fn new(s: Poly, u: Poly, v: Poly, w: Poly) -> Result<GeneralCubic> {
        if s.is_zero() || w.is_zero() {
            return Err(Error::Domain("need S and W nonzero".into()));
        }
        if u.is_zero() && v.is_zero() {
            return Err(Error::Domain("U = V = 0 gives a purely inseparable extension".into()));
        }
        Ok(GeneralCubic { s, u, v, w })
    }
}

/// Which degree criterion a curve satisfies.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// 3 does not divide deg B and 2 deg B > 3 deg A.
    Wild,
    /// 2 deg B <= 3 deg A.
    Tame,
}

/// One transformation applied by [`standardize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Depression of a general cubic; carries S when U = 0, otherwise
    /// C = S V^3 - U^2 V^2 + U^3 W.
    Depress(Poly),
    /// A -> A/Q^2, B -> (i^3 - iA + B)/Q^3.
    Remove { q: Poly, i: Poly },
    /// T -> T - c x^n.
    FrobShift { coef: Fe, n: usize },
}

/// The curve T^3 - AT + B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub a: Poly,
    pub b: Poly,
}

impl Curve {
    pub fn new(a: Poly, b: Poly) -> Result<Curve> {
        assert!(std::ptr::eq(a.field(), b.field()), "A and B over different fields");
        if b.is_zero() {
            return Err(Error::Domain("B = 0: T divides the cubic".into()));
        }
        if a.is_zero() {
            return Err(Error::Domain("A = 0: the extension is purely inseparable".into()));
        }
        Ok(Curve { a, b })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn criterion(&self) -> Option<Criterion> {
        let (da, db) = (self.a.deg(), self.b.deg());
        if db % 3 != 0 && 2 * db > 3 * da {
            Some(Criterion::Wild)
        } else if 2 * db <= 3 * da {
            Some(Criterion::Tame)
        } else {
            None
        }
    }

    pub fn is_standard(&self) -> bool {
        self.criterion().is_some() && remove_singular_factor(self).is_none()
    }

    /// True when T^3 - AT + B has no root in F_q[x], i.e. is irreducible
    /// over F_q(x).
    pub fn is_irreducible(&self) -> bool {
        // A root r divides B and r^3 - Ar = -B.
        let k = self.field();
        let da = self.a.deg();
        let db = self.b.deg();
        // deg r <= max(deg B / 3, deg A / 2) by comparing leading terms
        let bound = (db / 3).max(da / 2);
        let mut divisors = vec![Poly::one(k)];
        if !self.b.is_constant() {
            for (p, e) in self.b.factor().expect("nonconstant") {
                let mut next = Vec::new();
                for d in &divisors {
                    let mut cur = d.clone();
                    for _ in 0..=e {
                        if cur.deg() > bound {
                            break;
                        }
                        next.push(cur.clone());
                        cur = &cur * &p;
                    }
                }
                divisors = next;
            }
        }
        for g in divisors {
            let g3 = g.pow(3);
            let ag = &self.a * &g;
            // c^3 g^3 - c A g + B = 0 for some c in F_q^*; the top
            // coefficient gives a cubic in c
            let top = g3.deg().max(ag.deg()).max(db);
            let eq = Poly::new(k, vec![self.b.coeff(top), k.neg(ag.coeff(top)), Fe::ZERO, g3.coeff(top)]);
            let cands = if eq.is_zero() { Vec::new() } else { eq.roots() };
            for c in cands {
                if c.is_zero() {
                    continue;
                }
                let val = &(&g3.scale(k.cube(c)) - &ag.scale(c)) + &self.b;
                if val.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The curve obtained from T -> T + i: T^3 - AT + (i^3 - iA + B).
    pub fn shifted_b(&self, i: &Poly) -> Poly {
        &(&i.pow(3) - &(i * &self.a)) + &self.b
    }
}

/// Depresses S T^3 + U T^2 + V T + W to the form T^3 - AT + B.
///
/// For U != 0, T -> (Z + V)/U gives S Z^3 + U^2 Z^2 + C with
/// C = S V^3 - U^2 V^2 + U^3 W; the reciprocal made monic and integral is
/// T^3 + U^2 C T + S C^2.
pub fn depress(g: &GeneralCubic) -> Result<(Curve, Step)> {
    if g.u.is_zero() {
        let a = -(&g.s * &g.v);
        let b = &g.s.square() * &g.w;
        return Ok((Curve::new(a, b)?, Step::Depress(g.s.clone())));
    }
    let u2 = g.u.square();
    let c = &(&(&g.s * &g.v.pow(3)) - &(&u2 * &g.v.square())) + &(&(&u2 * &g.u) * &g.w);
    if c.is_zero() {
        return Err(Error::Domain("the cubic has the root V/U: reducible".into()));
    }
    let a = -(&u2 * &c);
    let b = &g.s * &c.square();
    Ok((Curve::new(a, b)?, Step::Depress(c)))
}

/// gcd(A, A'^3 B + B'^3) and whether the curve is nonsingular.
pub fn detect_singularity(c: &Curve) -> (Poly, bool) {
    let d = c.a.gcd(&(&(&c.a.derivative().pow(3) * &c.b) + &c.b.derivative().pow(3)));
    let ok = d.is_constant();
    (d, ok)
}

fn try_remove(c: &Curve, p: &Poly) -> Option<(Curve, Poly, Poly)> {
    let p2 = p.square();
    if !p2.divides(&c.a) {
        return None;
    }
    let i0 = cube_root_mod_unchecked(&(-&c.b).rem(p), p);
    let nb = c.shifted_b(&i0);
    let p3 = &p2 * p;
    if !p3.divides(&nb) {
        return None;
    }
    let curve = Curve {
        a: c.a.div_exact(&p2),
        b: nb.div_exact(&p3),
    };
    if curve.b.is_zero() {
        return None;
    }
    Some((curve, p.clone(), i0))
}

/// Removes one singular factor Q with Q^2 | A and Q^3 | i^3 - iA + B,
/// returning the new curve together with (Q, i).
pub fn remove_singular_factor(c: &Curve) -> Option<(Curve, Poly, Poly)> {
    if c.a.is_constant() {
        return None;
    }
    let (d, _) = detect_singularity(c);
    let mut tried = Vec::new();
    if !d.is_constant() {
        for p in d.prime_divisors() {
            if let Some(r) = try_remove(c, &p) {
                return Some(r);
            }
            tried.push(p);
        }
    }
    for (p, e) in c.a.factor().expect("nonconstant") {
        if e >= 2 && !tried.contains(&p) {
            if let Some(r) = try_remove(c, &p) {
                return Some(r);
            }
        }
    }
    None
}

/// One shift T -> T - c x^n lowering deg B, when 3 | deg B and
/// 2 deg B > 3 deg A.
fn b_degree_step(c: &Curve) -> Option<(Curve, Step)> {
    let (da, db) = (c.a.deg(), c.b.deg());
    if db % 3 != 0 || 2 * db <= 3 * da {
        return None;
    }
    let k = c.field();
    let n = db / 3;
    let lead = c.b.lc();
    let root = k.cube_root(lead);
    let b = &(&c.b - &Poly::monomial(k, lead, db)) + &c.a.shift(n).scale(root);
    Some((Curve { a: c.a.clone(), b }, Step::FrobShift { coef: root, n }))
}

/// Repeats the leading-term shift until criterion (wild) or (tame) holds.
pub fn reduce_b_degree(c: &Curve) -> Result<(Curve, Vec<Step>)> {
    let mut cur = c.clone();
    let mut steps = Vec::new();
    while let Some((next, step)) = b_degree_step(&cur) {
        if next.b.is_zero() {
            return Err(Error::Domain("curve is reducible: B vanished".into()));
        }
        cur = next;
        steps.push(step);
    }
    Ok((cur, steps))
}

/// Input accepted by [`standardize`].
#[derive(Clone, Debug)]
pub enum CubicInput {
    General(GeneralCubic),
    Depressed(Curve),
}

/// Standard model of a cubic, with the transformations applied.
pub fn standardize(input: &CubicInput) -> Result<(Curve, Vec<Step>)> {
    let mut steps = Vec::new();
    let mut cur = match input {
        CubicInput::General(g) => {
            let (c, s) = depress(g)?;
            steps.push(s);
            c
        }
        CubicInput::Depressed(c) => Curve::new(c.a.clone(), c.b.clone())?,
    };
    loop {
        let mut changed = false;
        while let Some((next, q, i)) = remove_singular_factor(&cur) {
            steps.push(Step::Remove { q, i });
            cur = next;
            changed = true;
        }
        let (next, s) = reduce_b_degree(&cur)?;
        if !s.is_empty() {
            changed = true;
        }
        steps.extend(s);
        cur = next;
        if !changed {
            break;
        }
    }
    if !cur.is_irreducible() {
        return Err(Error::Domain("curve is reducible over F_q(x)".into()));
    }
    debug_assert!(cur.is_standard());
    Ok((cur, steps))
}

/// Artin-Schreier test: A is a square in F_q[x].
pub fn is_artin_schreier(c: &Curve) -> bool {
    matches!(c.a.sqrt(), Ok(Some(_)))
}
