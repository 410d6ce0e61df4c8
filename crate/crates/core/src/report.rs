//! Text reports behind the command line and the browser demo. Every
//! function takes the curve file contents and returns `key = value` lines.

use std::fmt::Write as _;

use crate::classgroup::comp_red;
use crate::curve::{detect_singularity, is_artin_schreier, standardize as std_form, CubicInput, Step};
use crate::error::{Error, Result};
use crate::example::verify_worked_example;
use crate::ff::Field;
use crate::ideal::{ideal_divide, ideal_divide_nonprimitive, ideal_invert, ideal_mul, Ideal};
use crate::order::{compute_order_data, OrderData};
use crate::places::{prime_basis, split_finite, split_infinite};
use crate::text::{parse_curve, parse_ideal, parse_poly, print_fe, print_ideal, print_poly};

fn order_of(curve_text: &str) -> Result<OrderData> {
    let f = parse_curve(curve_text)?;
    compute_order_data(&f.curve).map_err(|e| match e {
        Error::Domain(m) => Error::Domain(format!("{m}; run `standardize` first")),
        e => e,
    })
}

fn ideal_arg(text: &str, od: &OrderData) -> Result<Ideal> {
    let j = parse_ideal(od.field(), text)?;
    if !j.primitive_part().is_ideal(od) {
        return Err(Error::Domain(format!("{} is not an ideal of this order", print_ideal(&j))));
    }
    Ok(j)
}

fn step_line(k: Field, s: &Step) -> String {
    match s {
        Step::Depress(n) => format!("depress {}", print_poly(n)),
        Step::Remove { q, i } => format!("remove Q={} i={}", print_poly(q), print_poly(i)),
        Step::FrobShift { coef, n } => format!("shift c={} n={n}", print_fe(k, *coef)),
    }
}

/// Standard model and the transformations applied.
pub fn standardize(curve_text: &str) -> Result<String> {
    let f = parse_curve(curve_text)?;
    let (c, steps) = std_form(&CubicInput::Depressed(f.curve))?;
    let mut out = String::new();
    let _ = writeln!(out, "A = {}", print_poly(&c.a));
    let _ = writeln!(out, "B = {}", print_poly(&c.b));
    let _ = writeln!(out, "steps = {}", steps.len());
    for (n, s) in steps.iter().enumerate() {
        let _ = writeln!(out, "step.{} = {}", n + 1, step_line(f.field, s));
    }
    Ok(out)
}

pub fn invariants(curve_text: &str) -> Result<String> {
    let od = order_of(curve_text)?;
    let lines = [
        ("I", print_poly(&od.index)),
        ("i", print_poly(&od.i)),
        ("E", print_poly(&od.e)),
        ("F", print_poly(&od.f)),
        ("Delta", print_poly(&od.delta)),
        ("genus", od.genus.to_string()),
        ("infinite", od.infinite.name().to_string()),
        ("artin_schreier", is_artin_schreier(&od.curve).to_string()),
        ("nonsingular", detect_singularity(&od.curve).1.to_string()),
        ("distinguished_ok", od.distinguished_ok.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in lines {
        let _ = writeln!(out, "{k} = {v}");
    }
    Ok(out)
}

/// Decomposition of the place `place`, a polynomial literal or `inf`.
pub fn split(curve_text: &str, place: &str) -> Result<String> {
    let od = order_of(curve_text)?;
    let mut out = String::new();
    if place.trim() == "inf" {
        let s = split_infinite(&od.curve)?;
        let _ = writeln!(out, "place = inf");
        let _ = writeln!(out, "splitting = {}", s.name());
        return Ok(out);
    }
    let p = parse_poly(od.field(), place)?;
    let pl = split_finite(&p, &od)?;
    let _ = writeln!(out, "place = {}", print_poly(&pl.p));
    let _ = writeln!(out, "splitting = {}", pl.splitting.name());
    let _ = writeln!(out, "type = {:?}", pl.prime_type);
    let (e, f) = (pl.ramification(), pl.inertia());
    for (n, sel) in pl.primes().iter().enumerate() {
        let b = prime_basis(&pl, sel, &od)?;
        let _ = writeln!(out, "prime.{} = {}", n + 1, print_ideal(&b));
        let _ = writeln!(out, "prime.{}.e = {}", n + 1, e[n]);
        let _ = writeln!(out, "prime.{}.f = {}", n + 1, f[n]);
    }
    Ok(out)
}

/// Ideal operations offered by [`ideal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Mul,
    Inv,
    Div,
}

/// I1 I2, s/I1 or I1 / I2; `i2` is ignored for the inverse.
pub fn ideal(curve_text: &str, op: IdealOp, i1: &str, i2: Option<&str>) -> Result<String> {
    let od = order_of(curve_text)?;
    let a = ideal_arg(i1, &od)?;
    let second = || -> Result<Ideal> {
        let t = i2.ok_or_else(|| Error::Parse("a second ideal is required".into()))?;
        ideal_arg(t, &od)
    };
    let r = match op {
        IdealOp::Mul => {
            let (d, j) = ideal_mul(&a, &second()?, &od)?;
            Ideal { d, ..j }
        }
        IdealOp::Inv => ideal_invert(&a, &od)?,
        IdealOp::Div => {
            let b = second()?;
            if a.is_primitive() {
                ideal_divide(&a, &b, &od)?
            } else {
                let (d, j) = ideal_divide_nonprimitive(&a.d, &a.primitive_part(), &b, &od)?;
                Ideal { d, ..j }
            }
        }
    };
    Ok(format!("result = {}\nnorm = {}\n", print_ideal(&r), print_poly(&r.norm())))
}

/// The distinguished ideal in the class of I1 I2.
pub fn compred(curve_text: &str, i1: &str, i2: &str) -> Result<String> {
    let od = order_of(curve_text)?;
    let (a, b) = (ideal_arg(i1, &od)?, ideal_arg(i2, &od)?);
    let j = comp_red(&a, &b, &od)?;
    Ok(format!("result = {}\nnorm_degree = {}\n", print_ideal(&j), j.norm().deg()))
}

/// The recomputed GF(3^10) example against its published values, and
/// whether every item matched.
pub fn verify_example() -> Result<(String, bool)> {
    let mut out = String::new();
    let mut ok = true;
    for c in verify_worked_example()? {
        let _ = writeln!(out, "{} = {}", c.name, c.detail);
        let _ = writeln!(out, "{}.match = {}", c.name, c.ok);
        ok &= c.ok;
    }
    let _ = writeln!(out, "all_match = {ok}");
    Ok((out, ok))
}
