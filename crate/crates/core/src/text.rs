//! Plain-text surface syntax: curve files, polynomial and ideal literals.
//!
//! A polynomial is a space-separated list of coefficients, constant term
//! first. A coefficient is a digit in {0,1,2} or a tuple `(d,d,...)` of
//! GF(3) coordinates in ascending powers of the generator. The printer
//! emits a bare digit for prime-field coefficients and otherwise the tuple
//! with trailing zeros removed; the zero polynomial prints as `0`.

use std::fmt::Write as _;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::ff::{Fe, Field, FieldCtx};
use crate::ideal::Ideal;
use crate::order::Element;
use crate::poly::Poly;

fn parse_err<T>(line: usize, col: usize, msg: impl AsRef<str>) -> Result<T> {
    Err(Error::Parse(format!("{line}:{col}: {}", msg.as_ref())))
}

fn digit(c: char) -> Option<u8> {
    match c {
        '0' => Some(0),
        '1' => Some(1),
        '2' => Some(2),
        _ => None,
    }
}

pub fn print_fe(k: Field, a: Fe) -> String {
    let mut d = k.digits(a);
    while d.len() > 1 && d.last() == Some(&0) {
        d.pop();
    }
    if d.len() == 1 {
        return d[0].to_string();
    }
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn parse_fe(k: Field, tok: &str) -> Result<Fe> {
    let bad = || Error::Parse(format!("bad coefficient {tok:?}"));
    let digits: Vec<u8> = if let Some(body) = tok.strip_prefix('(') {
        let body = body.strip_suffix(')').ok_or_else(bad)?;
        body.split(',')
            .map(|s| {
                let mut cs = s.trim().chars();
                match (cs.next().and_then(digit), cs.next()) {
                    (Some(x), None) => Ok(x),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<_>>()?
    } else {
        let mut cs = tok.chars();
        match (cs.next().and_then(digit), cs.next()) {
            (Some(x), None) => vec![x],
            _ => return Err(bad()),
        }
    };
    if digits.len() > k.degree() {
        return Err(Error::Parse(format!(
            "coefficient {tok:?} has more than {} coordinates",
            k.degree()
        )));
    }
    let mut full = digits;
    full.resize(k.degree(), 0);
    k.from_digits(&full)
}

pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let k = p.field();
    let cs: Vec<String> = p.coeffs().iter().map(|&c| print_fe(k, c)).collect();
    cs.join(" ")
}

/// Splits on whitespace outside parentheses.
fn tokens(s: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced ')' at column {}", i + 1)));
        }
        if ch.is_whitespace() && depth == 0 {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    Ok(out)
}

pub fn parse_poly(k: Field, s: &str) -> Result<Poly> {
    let toks = tokens(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let cs = toks
        .iter()
        .map(|(col, t)| parse_fe(k, t).map_err(|e| Error::Parse(format!("column {}: {e}", col + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(k, cs))
}

/// A field together with a curve over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFile {
    pub field: Field,
    pub curve: Curve,
}

pub fn print_curve(field: Field, c: &Curve) -> String {
    let modulus: Vec<String> = field.modulus().iter().map(|d| d.to_string()).collect();
    format!(
        "characteristic 3\nextension {}\nmodulus {}\nA {}\nB {}\n",
        field.degree(),
        modulus.join(" "),
        print_poly(&c.a),
        print_poly(&c.b)
    )
}

pub fn parse_curve(text: &str) -> Result<CurveFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());
    let mut next = |key: &str| -> Result<(usize, usize, String)> {
        let Some((n, l)) = lines.next() else {
            return parse_err(0, 0, format!("missing {key:?} line"));
        };
        let body = l.trim_start();
        let indent = l.len() - body.len();
        match body.strip_prefix(key) {
            Some(rest) if rest.is_empty() || rest.starts_with(char::is_whitespace) => {
                let col = indent + key.len() + (rest.len() - rest.trim_start().len()) + 1;
                Ok((n, col, rest.trim().to_string()))
            }
            _ => parse_err(n, indent + 1, format!("expected {key:?}")),
        }
    };
    let (n, col, ch) = next("characteristic")?;
    if ch != "3" {
        return parse_err(n, col, format!("characteristic must be 3, got {ch:?}"));
    }
    let (n, col, ext) = next("extension")?;
    let m: usize = match ext.parse() {
        Ok(m) if m >= 1 => m,
        _ => return parse_err(n, col, format!("bad extension degree {ext:?}")),
    };
    let (n, col, modl) = next("modulus")?;
    let mut digits = Vec::new();
    for (c, t) in tokens(&modl)? {
        let mut cs = t.chars();
        match (cs.next().and_then(digit), cs.next()) {
            (Some(d), None) => digits.push(d),
            _ => return parse_err(n, col + c, format!("bad modulus digit {t:?}")),
        }
    }
    if digits.len() != m + 1 {
        return parse_err(n, col, format!("modulus needs {} digits, got {}", m + 1, digits.len()));
    }
    let field = FieldCtx::new(&digits).or_else(|e| parse_err(n, col, e.to_string()))?;
    let mut poly_line = |key: &str| -> Result<Poly> {
        let (n, col, body) = next(key)?;
        parse_poly(field, &body).or_else(|e| parse_err(n, col, e.to_string()))
    };
    let a = poly_line("A")?;
    let b = poly_line("B")?;
    if let Some((n, _)) = lines.next() {
        return parse_err(n, 1, "trailing content");
    }
    let curve = Curve::new(a, b).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(CurveFile { field, curve })
}

const IDEAL_KEYS: [&str; 7] = ["d", "s", "sp", "spp", "u", "v", "w"];

/// `ideal d=... s=... sp=... spp=... u=... v=... w=...`
pub fn print_ideal(j: &Ideal) -> String {
    let vals = [&j.d, &j.s, &j.sp, &j.spp, &j.u, &j.v, &j.w];
    let mut out = String::from("ideal");
    for (key, v) in IDEAL_KEYS.iter().zip(vals) {
        let _ = write!(out, " {key}={}", print_poly(v));
    }
    out
}

/// Parses an ideal literal; omitted d, s, sp, spp default to 1 and u, v, w
/// to 0. Only the shape is validated here; whether the module is an ideal
/// of a given order is left to [`Ideal::is_ideal`].
pub fn parse_ideal(k: Field, text: &str) -> Result<Ideal> {
    let body = text.trim();
    let body = body
        .strip_prefix("ideal")
        .ok_or_else(|| Error::Parse("ideal literal must start with \"ideal\"".into()))?;
    let mut vals: [Option<Poly>; 7] = Default::default();
    let mut cur: Option<(usize, String)> = None;
    let flush = |cur: &mut Option<(usize, String)>, vals: &mut [Option<Poly>; 7]| -> Result<()> {
        if let Some((i, s)) = cur.take() {
            vals[i] = Some(
                parse_poly(k, &s).map_err(|e| Error::Parse(format!("{}: {e}", IDEAL_KEYS[i])))?,
            );
        }
        Ok(())
    };
    for (_, tok) in tokens(body)? {
        if let Some((key, rest)) = tok.split_once('=') {
            let Some(i) = IDEAL_KEYS.iter().position(|&x| x == key) else {
                return Err(Error::Parse(format!("unknown ideal field {key:?}")));
            };
            flush(&mut cur, &mut vals)?;
            if vals[i].is_some() {
                return Err(Error::Parse(format!("field {key} given twice")));
            }
            cur = Some((i, rest.to_string()));
        } else {
            match cur.as_mut() {
                Some((_, s)) => {
                    s.push(' ');
                    s.push_str(tok);
                }
                None => return Err(Error::Parse(format!("stray token {tok:?}"))),
            }
        }
    }
    flush(&mut cur, &mut vals)?;
    let [d, s, sp, spp, u, v, w] = vals;
    let one = || Poly::one(k);
    let zero = || Poly::zero(k);
    Ideal::with_content(
        d.unwrap_or_else(one),
        s.unwrap_or_else(one),
        sp.unwrap_or_else(one),
        spp.unwrap_or_else(one),
        u.unwrap_or_else(zero),
        v.unwrap_or_else(zero),
        w.unwrap_or_else(zero),
    )
    .map_err(|e| Error::Parse(format!("not a canonical ideal basis: {e}")))
}

/// `a + b rho + c omega` as three key lines with the given prefix.
pub fn print_element(prefix: &str, e: &Element) -> String {
    format!(
        "{prefix}.a = {}\n{prefix}.b = {}\n{prefix}.c = {}\n",
        print_poly(&e.a),
        print_poly(&e.b),
        print_poly(&e.c)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_file() {
        let f = parse_curve(
            "# curve\ncharacteristic 3\nextension 10\nmodulus 2 1 0 0 2 2 2 0 0 0 1\nA 1\nB (0,1) 0 0 0 1\n",
        )
        .unwrap();
        assert_eq!(f.field.degree(), 10);
        assert_eq!(f.curve.b.deg(), 4);
        assert_eq!(print_fe(f.field, f.curve.b.coeff(0)), "(0,1)");
        assert_eq!(parse_curve(&print_curve(f.field, &f.curve)).unwrap(), f);
    }

    #[test]
    fn rejections() {
        let ok = "characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 1\n";
        assert!(parse_curve(ok).is_ok());
        for bad in [
            "characteristic 5\nextension 1\nmodulus 0 1\nA 1\nB 0 1\n",
            "characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB\n",
            "characteristic 3\nextension 2\nmodulus 2 0 1\nA 1\nB 1\n",
            "characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 3\n",
            "characteristic 3\nextension 1\nmodulus 0 1\nA 0\nB 0 1\n",
        ] {
            assert!(matches!(parse_curve(bad), Err(Error::Parse(_))), "{bad}");
        }
        let err = parse_curve("characteristic 3\nextension 1\nmodulus 0 1\nA 1\nB 0 x\n").unwrap_err();
        assert!(err.to_string().contains("5:3"), "{err}");
    }

    #[test]
    fn ideal_literals() {
        let k = FieldCtx::prime();
        let j = parse_ideal(k, "ideal s=0 1").unwrap();
        assert_eq!(j.s, Poly::x(k));
        assert!(j.u.is_zero() && j.d.is_one());
        assert_eq!(parse_ideal(k, &print_ideal(&j)).unwrap(), j);
        assert!(parse_ideal(k, "ideal q=1").is_err());
        assert!(parse_ideal(k, "ideal s=0 1 s=1").is_err());
    }
}
