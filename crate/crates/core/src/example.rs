//! The worked example over GF(3^10): reducing the sixth power of a degree
//! one prime on T^3 - T + x^4 + a.
//!
//! [`printed`] holds the published intermediate values verbatim and
//! [`compute`] recomputes the whole chain; [`verify_worked_example`] diffs
//! the two after canonical printing. The published I1 and final v are not
//! ideal data on this curve (the constant needed is 1 - u1^2, the printed
//! one is its negative minus one), and the published I1^6 and its inverse
//! are ideals of T^3 - T - x^4 + a instead; see the tests below.

use crate::classgroup::{can_basis, comp_red, is_reduced, min_element};
use crate::curve::{is_artin_schreier, Curve};
use crate::error::Result;
use crate::ff::{Fe, Field, FieldCtx};
use crate::ideal::{ideal_divide_nonprimitive, ideal_invert, ideal_pow, Ideal};
use crate::order::{compute_order_data, Element, OrderData};
use crate::places::Splitting;
use crate::poly::Poly;
use crate::text::{print_element, print_ideal};

/// Digits of the modulus a^10 - a^6 - a^5 - a^4 + a - 1, constant first.
pub const MODULUS: [u8; 11] = [2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1];

/// An element of GF(3^10) from signed powers of the generator.
fn fe(k: Field, terms: &[(usize, i8)]) -> Fe {
    let mut digits = [0u8; 10];
    for &(e, c) in terms {
        digits[e] = c.rem_euclid(3) as u8;
    }
    k.from_digits(&digits).expect("ten digits")
}

pub fn field() -> Field {
    FieldCtx::new(&MODULUS).expect("irreducible modulus")
}

/// The curve with B = sign x^4 + a; the example uses sign = 1.
pub fn curve_with_sign(sign: i64) -> Result<OrderData> {
    let k = field();
    let b = &Poly::x(k).pow(4).scale(k.from_int(sign)) + &Poly::constant(k, k.gen());
    compute_order_data(&Curve::new(Poly::one(k), b)?)
}

/// The example's curve T^3 - T + x^4 + a.
pub fn example_order() -> Result<OrderData> {
    curve_with_sign(1)
}

/// The constant u1 of I1 = [x, u1 + rho, v1 + omega]: a root of
/// U^3 - U - a.
pub fn u1() -> Fe {
    fe(field(), &[(9, -1), (8, -1), (7, 1), (6, 1), (5, 1), (4, -1), (3, -1)])
}

/// One row of data, either as published or as recomputed.
#[derive(Clone, Debug)]
pub struct Chain {
    pub i1: Ideal,
    /// Step 1.
    pub i1_6: Ideal,
    /// Step 2.
    pub inverse: Ideal,
    /// Step 3.
    pub min_element: Element,
    /// Step 4, with its content.
    pub principal: Ideal,
    /// Step 5.
    pub reduced: Ideal,
}

/// The published values, unvalidated.
pub fn printed() -> Chain {
    let k = field();
    let x = Poly::x(k);
    let c = |t: &[(usize, i8)]| Poly::constant(k, fe(k, t));
    let one = || Poly::one(k);
    let zero = || Poly::zero(k);
    let u1 = Poly::constant(k, u1());
    let v1 = c(&[(8, 1), (6, -1), (5, -1), (4, 1), (3, -1), (2, 1)]);
    let i1 = Ideal::raw(one(), x.clone(), one(), one(), u1.clone(), v1.clone(), zero());

    let x4 = x.pow(4);
    let x6 = x.pow(6);
    let u2 = &x4 + &u1;
    let v2 = &(&u1 * &x4) + &c(&[(8, -1), (6, 1), (5, 1), (4, -1), (3, 1), (2, -1), (0, -1)]);
    let i1_6 = Ideal::raw(one(), x6.clone(), one(), one(), u2.clone(), v2.clone(), zero());
    let inverse = Ideal::raw(one(), x6.clone(), x6, one(), zero(), -&v2, -&u2);

    let ca = c(&[(8, 1), (6, -1), (5, -1), (4, 1), (3, -1), (2, 1), (0, -1)]);
    let cb = c(&[(9, 1), (8, 1), (7, -1), (6, -1), (5, -1), (4, 1), (3, 1)]);
    let x2 = x.pow(2);
    let min_element = Element::new(&x2 * &ca, &x2 * &cb, x2.clone());
    let principal = Ideal::raw(x2.clone(), x4.clone(), x4, one(), zero(), ca, cb);
    let reduced = Ideal::raw(one(), x2, one(), one(), u1, v1, zero());
    Chain {
        i1,
        i1_6,
        inverse,
        min_element,
        principal,
        reduced,
    }
}

/// The prime I1 = [x, u1 + rho, (1 - u1^2) + omega] above x.
pub fn prime_i1(od: &OrderData) -> Result<Ideal> {
    let k = od.field();
    let u = Poly::constant(k, u1());
    let v = &Poly::one(k) - &u.square();
    Ideal::new(Poly::x(k), Poly::one(k), Poly::one(k), u, v, Poly::zero(k))
}

/// Runs the reduction of I1^6 step by step.
pub fn compute(od: &OrderData) -> Result<Chain> {
    let i1 = prime_i1(od)?;
    let i1_6 = ideal_pow(&i1, 6, od)?;
    let inverse = ideal_invert(&i1_6, od)?;
    let alpha = min_element(&inverse, od)?;
    let principal = can_basis(&alpha, od)?;
    let (content, j) = ideal_divide_nonprimitive(&principal.d, &principal.primitive_part(), &inverse, od)?;
    Ok(Chain {
        i1,
        i1_6,
        inverse,
        min_element: alpha,
        principal,
        reduced: Ideal { d: content, ..j },
    })
}

/// One compared item.
pub struct StepCheck {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

fn same(name: &'static str, got: String, want: String) -> StepCheck {
    let ok = got == want;
    let detail = if ok {
        got
    } else {
        format!("computed {got} | printed {want}")
    };
    StepCheck { name, ok, detail }
}

fn flag(name: &'static str, ok: bool, detail: String) -> StepCheck {
    StepCheck { name, ok, detail }
}

/// Recomputes the example and compares every published item.
pub fn verify_worked_example() -> Result<Vec<StepCheck>> {
    let od = example_order()?;
    let pr = printed();
    let got = compute(&od)?;
    let elt = |e: &Element| print_element("alpha", e).trim_end().replace('\n', "; ");
    let mut out = vec![
        flag("genus", od.genus == 3, od.genus.to_string()),
        flag(
            "artin_schreier",
            is_artin_schreier(&od.curve),
            is_artin_schreier(&od.curve).to_string(),
        ),
        flag(
            "infinite",
            od.infinite == Splitting::TotallyRamified,
            od.infinite.name().to_string(),
        ),
        same("I1", print_ideal(&got.i1), print_ideal(&pr.i1)),
        same("I1^6", print_ideal(&got.i1_6), print_ideal(&pr.i1_6)),
        same("inverse", print_ideal(&got.inverse), print_ideal(&pr.inverse)),
        same("min_element", elt(&got.min_element), elt(&pr.min_element)),
        same("can_basis", print_ideal(&got.principal), print_ideal(&pr.principal)),
        same("reduced", print_ideal(&got.reduced), print_ideal(&pr.reduced)),
    ];
    let sq = ideal_pow(&got.i1, 2, &od)?;
    out.push(flag(
        "reduced_is_I1^2",
        sq == got.reduced,
        print_ideal(&sq),
    ));
    let via = comp_red(&got.i1_6, &Ideal::unit(od.field()), &od)?;
    out.push(flag("comp_red", via == got.reduced, print_ideal(&via)));
    out.push(flag(
        "is_reduced",
        is_reduced(&got.reduced, &od) && !is_reduced(&got.i1_6, &od),
        format!("deg N = {}", got.reduced.norm().deg()),
    ));
    Ok(out)
}
