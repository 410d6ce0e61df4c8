//! Acceptance suite: eight criteria, one PASS/FAIL line each.
//!
//! Two criteria quote data that cannot be reproduced as stated: the
//! published I1^6 and final v of the GF(3^10) example, and the shift i of
//! the pathological curve. Those items are still reported as FAIL. The
//! process exits nonzero only when a failure is not exactly one of these
//! known mismatches, each of which is re-derived here before it is
//! excused.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use cubic3::classgroup::{comp_red, is_reduced, min_element};
use cubic3::curve::{remove_singular_factor, standardize, Criterion, CubicInput, Curve, GeneralCubic};
use cubic3::example::{compute, curve_with_sign, example_order, printed, verify_worked_example};
use cubic3::ideal::{ideal_divide, ideal_divide_nonprimitive, ideal_invert, ideal_mul, type_factor, Ideal};
use cubic3::oracle::{oracle_ideal_mul, oracle_min_norm, oracle_split};
use cubic3::order::{compute_order_data, element_norm, OrderData};
use cubic3::places::{prime_basis, prime_power_basis, split_finite, split_infinite, PrimeType, Splitting};
use cubic3::sample::{random_curve, random_ideal};
use cubic3::{Error, Field, FieldCtx, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    /// A failure fully accounted for by a known misprint.
    excused: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Outcome {
        Outcome {
            pass: true,
            excused: false,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Outcome {
        Outcome {
            pass: false,
            excused: false,
            detail: detail.into(),
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn fields() -> [Field; 3] {
    [1, 2, 3].map(|m| FieldCtx::of_degree(m).unwrap())
}

/// Curves whose places of degree at most two include every prime type,
/// with coefficients read in the given field.
fn constructed_curves(k: Field) -> Vec<OrderData> {
    let p = |cs: &[i64]| Poly::from_ints(k, cs);
    let specs = [
        (p(&[1]), p(&[0, 1])),
        (p(&[0, 1]), p(&[1])),
        (p(&[0, 0, 1]), p(&[0, 0, 1])),
        (&p(&[2, 1, 1]) * &p(&[1, 0, 1]), p(&[1, 0, 1, 0, 1, 1, 1, 0, 2])),
        (p(&[1, 1, 0, 1]), p(&[2, 0, 1, 0, 1])),
    ];
    specs
        .into_iter()
        .map(|(a, b)| compute_order_data(&Curve::new(a, b).unwrap()).unwrap())
        .collect()
}

fn irreducibles_upto(k: Field, n: usize) -> Vec<Poly> {
    (1..=n).flat_map(|d| Poly::monics(k, d)).filter(|q| q.is_irreducible()).collect()
}

fn with_content(d: Poly, j: Ideal) -> Ideal {
    Ideal { d, ..j }
}

fn criterion_1() -> Outcome {
    let checks = match verify_worked_example() {
        Ok(c) => c,
        Err(e) => return Outcome::fail(format!("recomputation failed: {e}")),
    };
    let required = ["genus", "artin_schreier", "infinite", "I1^6", "min_element", "can_basis", "reduced", "reduced_is_I1^2"];
    let mut failed = Vec::new();
    let mut matched = Vec::new();
    for c in &checks {
        if required.contains(&c.name) {
            if c.ok {
                matched.push(c.name);
            } else {
                failed.push(c.name);
            }
        }
    }
    if failed.is_empty() {
        return Outcome::pass(format!("all of {} match", matched.join(", ")));
    }
    // The published I1^6 is the recomputed value on T^3 - T - x^4 + a,
    // and the published final v is -1 minus the valid constant.
    let pr = printed();
    let explained = |name: &str| -> bool {
        match name {
            "I1^6" => curve_with_sign(-1)
                .and_then(|od| compute(&od))
                .map(|c| c.i1_6 == pr.i1_6)
                .unwrap_or(false),
            "reduced" => example_order().and_then(|od| compute(&od)).is_ok_and(|c| {
                let k = c.reduced.field();
                let fixed = Ideal {
                    v: &(-&Poly::one(k)) - &pr.reduced.v,
                    ..pr.reduced.clone()
                };
                fixed == c.reduced
            }),
            _ => false,
        }
    };
    let excused = failed.iter().all(|n| explained(n));
    Outcome {
        pass: false,
        excused,
        detail: format!(
            "matched {}; mismatched {} (printed I1^6 lies on T^3 - T - x^4 + a, printed v4 = -1 - (1 - u1^2))",
            matched.join(", "),
            failed.join(", ")
        ),
    }
}

/// Splitting at infinity from the leading-coefficient cubic, counting its
/// roots by running through the whole field.
fn infinite_by_enumeration(c: &Curve) -> Splitting {
    let (da, db) = (c.a.deg(), c.b.deg());
    if db % 3 != 0 && 2 * db > 3 * da {
        return Splitting::TotallyRamified;
    }
    if da % 2 == 1 {
        return Splitting::PartiallyRamified;
    }
    let k = c.field();
    let n = da / 2;
    let (a, b) = (c.a.coeff(2 * n), c.b.coeff(3 * n));
    let roots = k
        .elements()
        .filter(|&y| k.add(k.sub(k.cube(y), k.mul(a, y)), b).is_zero())
        .count();
    match roots {
        0 => Splitting::Inert,
        1 => Splitting::PartiallySplit,
        _ => Splitting::CompletelySplit,
    }
}

fn criterion_2() -> Outcome {
    let mut places = 0usize;
    for (n, k) in fields().into_iter().enumerate() {
        let mut r = rng(20 + n as u64);
        let polys = irreducibles_upto(k, 2);
        for _ in 0..200 {
            let od = random_curve(k, 3, 5, &mut r);
            match split_infinite(&od.curve) {
                Ok(s) if s == infinite_by_enumeration(&od.curve) => {}
                other => return Outcome::fail(format!("infinity on {:?}: {other:?}", od.curve)),
            }
            for p in &polys {
                let fast = split_finite(p, &od).map(|pl| pl.splitting);
                let slow = oracle_split(p, &od);
                if fast.is_err() || fast != slow {
                    return Outcome::fail(format!("P = {p:?} on {:?}: {fast:?} vs {slow:?}", od.curve));
                }
                places += 1;
            }
        }
    }
    Outcome::pass(format!("600 curves, {places} finite places, infinity on every curve"))
}

fn check_pair(a: &Ideal, b: &Ideal, od: &OrderData) -> Result<(), String> {
    let want = oracle_ideal_mul(a, b, od).map_err(|e| e.to_string())?;
    let (d, j) = ideal_mul(a, b, od).map_err(|e| format!("mul {a:?} {b:?}: {e}"))?;
    let prod = with_content(d.clone(), j.clone());
    if prod != want {
        return Err(format!("mul {a:?} {b:?}: {prod:?} vs {want:?}"));
    }
    if prod.norm() != &a.norm() * &b.norm() {
        return Err(format!("norm of {a:?} {b:?}"));
    }
    let inv = ideal_invert(a, od).map_err(|e| format!("inv {a:?}: {e}"))?;
    if !inv.is_ideal(od) || oracle_ideal_mul(a, &inv, od).ok() != Some(Ideal::principal_poly(&a.s)) {
        return Err(format!("inv {a:?}: {inv:?}"));
    }
    let quo = if d.is_one() {
        ideal_divide(&j, a, od).map_err(|e| format!("div {j:?} / {a:?}: {e}"))?
    } else {
        let (dd, q) = ideal_divide_nonprimitive(&d, &j, a, od).map_err(|e| format!("div <{d:?}>{j:?} / {a:?}: {e}"))?;
        with_content(dd, q)
    };
    if &quo != b {
        return Err(format!("div ({a:?} {b:?}) / {a:?} gave {quo:?}"));
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in fields().into_iter().take(2).enumerate() {
        let mut r = rng(30 + n as u64);
        let mut curves = constructed_curves(k);
        while curves.len() < 10 {
            curves.push(random_curve(k, 4, 6, &mut r));
        }
        let mut types = BTreeSet::new();
        let mut nonprimitive = 0;
        for i in 0..500 {
            let od = &curves[i % curves.len()];
            let (a, b) = match (random_ideal(od, 6, &mut r), random_ideal(od, 6, &mut r)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Outcome::fail("ideal sampling failed"),
            };
            for (t, part) in type_factor(&a, od).unwrap().parts.iter().enumerate() {
                if !part.is_unit() {
                    types.insert(t);
                }
            }
            if let Err(e) = check_pair(&a, &b, od) {
                return Outcome::fail(format!("q = {}: {e}", k.order()));
            }
            if !oracle_ideal_mul(&a, &b, od).unwrap().is_primitive() {
                nonprimitive += 1;
            }
        }
        if types.len() != 4 {
            return Outcome::fail(format!("q = {}: only types {types:?} covered", k.order()));
        }
        notes.push(format!("q = {}: 500 pairs, all four types, {nonprimitive} with content", k.order()));
    }
    Outcome::pass(notes.join("; "))
}

fn grid(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..=max).map(move |e| [v.clone(), vec![e]].concat()))
            .collect();
    }
    out
}

fn criterion_4() -> Outcome {
    let mut seen = BTreeSet::new();
    let mut count = 0usize;
    for k in fields().into_iter().take(2) {
        let deg = if k.degree() == 1 { 2 } else { 1 };
        for od in constructed_curves(k) {
            for p in irreducibles_upto(k, deg) {
                let pl = split_finite(&p, &od).unwrap();
                seen.insert(pl.prime_type);
                let primes: Vec<Ideal> = pl.primes().iter().map(|s| prime_basis(&pl, s, &od).unwrap()).collect();
                for exps in grid(primes.len(), 4) {
                    let mut want = Ideal::unit(k);
                    for (b, &e) in primes.iter().zip(&exps) {
                        for _ in 0..e {
                            want = oracle_ideal_mul(&want, b, &od).unwrap();
                        }
                    }
                    match prime_power_basis(&pl, &exps, &od) {
                        Ok(got) if got == want => count += 1,
                        got => {
                            return Outcome::fail(format!("{:?} over {p:?} exps {exps:?}: {got:?} vs {want:?}", pl.prime_type))
                        }
                    }
                }
            }
        }
    }
    let all = [PrimeType::I, PrimeType::II, PrimeType::III, PrimeType::IV];
    if !all.iter().all(|t| seen.contains(t)) {
        return Outcome::fail(format!("types seen: {seen:?}"));
    }
    Outcome::pass(format!("{count} exponent vectors (entries up to 4) over types I-IV, q = 3 and 9"))
}

fn distinguished_curves(n: usize, seed: u64, max_b: usize) -> Vec<OrderData> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let od = random_curve(FieldCtx::prime(), 2, max_b, &mut r);
        if od.distinguished_ok && od.genus >= 1 {
            out.push(od);
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let curves = distinguished_curves(10, 50, 5);
    let mut r = rng(51);
    for i in 0..100 {
        let od = &curves[i % curves.len()];
        let j = random_ideal(od, 3, &mut r).unwrap();
        let got = match min_element(&j, od) {
            Ok(a) if j.contains_element(&a) && !a.is_zero() => element_norm(&a, od).deg(),
            other => return Outcome::fail(format!("{j:?}: {other:?}")),
        };
        let want = oracle_min_norm(&j, 3, od).unwrap();
        if got != want {
            return Outcome::fail(format!("{j:?}: deg N = {got}, enumeration {want}"));
        }
    }
    Outcome::pass("100 ideals on 10 curves over GF(3)")
}

fn criterion_6() -> Outcome {
    let curves = distinguished_curves(4, 60, 7);
    let mut r = rng(61);
    let mut genera = Vec::new();
    for (n, od) in curves.iter().enumerate() {
        genera.push(od.genus);
        let unit = Ideal::unit(od.field());
        for _ in 0..25 {
            let [a, b, c] = [0; 3].map(|_| random_ideal(od, 6, &mut r).unwrap());
            let run = || -> cubic3::Result<Result<(), String>> {
                let ab = comp_red(&a, &b, od)?;
                let ba = comp_red(&b, &a, od)?;
                let bc = comp_red(&b, &c, od)?;
                let left = comp_red(&ab, &c, od)?;
                let right = comp_red(&a, &bc, od)?;
                let again = comp_red(&ab, &unit, od)?;
                for x in [&ab, &bc, &left, &right] {
                    if !x.is_primitive() || !is_reduced(x, od) {
                        return Ok(Err(format!("{x:?} is not reduced")));
                    }
                }
                if ab != ba {
                    return Ok(Err(format!("{a:?} {b:?} not commutative")));
                }
                if left != right {
                    return Ok(Err(format!("{a:?} {b:?} {c:?} not associative")));
                }
                if again != ab {
                    return Ok(Err(format!("{ab:?} not fixed")));
                }
                Ok(Ok(()))
            };
            match run() {
                Ok(Ok(())) => {}
                Ok(Err(e)) => return Outcome::fail(format!("curve {n}: {e}")),
                Err(e) => return Outcome::fail(format!("curve {n}: {e}")),
            }
        }
    }
    Outcome::pass(format!("100 triples on 4 curves of genus {genera:?}"))
}

fn criterion_7() -> Outcome {
    let k = FieldCtx::prime();
    let p = |cs: &[i64]| Poly::from_ints(k, cs);
    let od = compute_order_data(&Curve::new(&p(&[2, 1, 1]) * &p(&[1, 0, 1]), p(&[1, 0, 1, 0, 1, 1, 1, 0, 2])).unwrap()).unwrap();
    let mut bad = Vec::new();
    if od.index != &p(&[2, 1, 1]) * &p(&[1, 0, 1]) {
        bad.push(format!("I = {:?}", od.index));
    }
    if od.fi2.deg() != 9 {
        bad.push(format!("deg FI^2 = {}", od.fi2.deg()));
    }
    if od.distinguished_ok {
        bad.push("distinguished_ok".into());
    }
    let unit = Ideal::unit(k);
    if !matches!(comp_red(&unit, &unit, &od), Err(Error::Applicability(_))) {
        bad.push("comp_red did not refuse".into());
    }
    let file = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/pathological.curve");
    let code = Command::new(env!("CARGO_BIN_EXE_cubic3"))
        .args(["compred", file.to_str().unwrap(), "ideal", "ideal"])
        .output()
        .map(|o| o.status.code());
    if !matches!(code, Ok(Some(3))) {
        bad.push(format!("CLI exit {code:?}"));
    }
    if !bad.is_empty() {
        return Outcome::fail(bad.join("; "));
    }
    let printed_i = p(&[0, 0, 1, 1]);
    if od.i == printed_i {
        return Outcome::pass("I, i, deg 9, distinguished_ok = false, applicability error (exit 3)");
    }
    // x^3 + x^2 satisfies i^3 = B mod I rather than i^3 = -B.
    let excused = od.i == -&printed_i && !od.index.square().divides(&od.curve.shifted_b(&printed_i));
    Outcome {
        pass: false,
        excused,
        detail: format!(
            "I, deg 9, distinguished_ok = false and exit 3 hold; i = {:?}, the printed x^3 + x^2 leaves I^2 not dividing i^3 - iA + B",
            od.i
        ),
    }
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in fields().into_iter().take(2).enumerate() {
        let mut r = rng(80 + n as u64);
        let (mut done, mut reducible) = (0, 0);
        while done + reducible < 1000 {
            let with_u = r.gen_bool(0.5);
            let mut poly = |deg: usize| loop {
                let f = Poly::random(k, deg + 1, &mut r);
                if !f.is_zero() {
                    break f;
                }
            };
            let (s, w, v) = (poly(2), poly(4), poly(3));
            let u = if with_u { poly(2) } else { Poly::zero(k) };
            let Ok(g) = GeneralCubic::new(s, u, v, w) else { continue };
            let std = match standardize(&CubicInput::General(g.clone())) {
                Ok((c, _)) => c,
                Err(Error::Domain(_)) => {
                    reducible += 1;
                    continue;
                }
                Err(e) => return Outcome::fail(format!("{g:?}: {e}")),
            };
            let again = standardize(&CubicInput::Depressed(std.clone()));
            if !matches!(&again, Ok((c, steps)) if *c == std && steps.is_empty()) {
                return Outcome::fail(format!("{g:?}: not idempotent"));
            }
            let (da, db) = (std.a.deg(), std.b.deg());
            let wild = db % 3 != 0 && 2 * db > 3 * da;
            let tame = 2 * db <= 3 * da;
            if wild == tame || std.criterion() != Some(if wild { Criterion::Wild } else { Criterion::Tame }) {
                return Outcome::fail(format!("{g:?}: criteria {wild} {tame}"));
            }
            if remove_singular_factor(&std).is_some() {
                return Outcome::fail(format!("{g:?}: singular factor left"));
            }
            done += 1;
        }
        notes.push(format!("q = {}: {done} standardized, {reducible} reducible inputs rejected", k.order()));
    }
    Outcome::pass(notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("worked example over GF(3^10)", criterion_1),
        ("splitting agrees with enumeration", criterion_2),
        ("ideal arithmetic agrees with the oracle", criterion_3),
        ("prime power bases", criterion_4),
        ("minimal elements", criterion_5),
        ("class group laws", criterion_6),
        ("pathological curve invariants", criterion_7),
        ("standard forms", criterion_8),
    ];
    let mut hard_fail = false;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let secs = t.elapsed().as_secs_f64();
        let tag = match (o.pass, o.excused) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known misprint)",
            (false, false) => "FAIL",
        };
        println!("criterion {} {tag}: {name} [{secs:.1}s] {}", n + 1, o.detail);
        hard_fail |= !o.pass && !o.excused;
    }
    if hard_fail {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
