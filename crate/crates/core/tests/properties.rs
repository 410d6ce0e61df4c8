use cubic3::classgroup::comp_red;
use cubic3::curve::{
    depress, detect_singularity, remove_singular_factor, standardize, Criterion, CubicInput, Curve, GeneralCubic,
};
use cubic3::ideal::{ideal_divide, ideal_mul, type_factor, Ideal};
use cubic3::oracle::{module_triangularize, oracle_ideal_mul};
use cubic3::order::{compute_order_data, element_mul, element_norm, norm_degree_parts, Element, OrderData};
use cubic3::places::{prime_basis, split_finite};
use cubic3::sample::{random_curve, random_ideal, random_prime};
use cubic3::text::{parse_curve, parse_ideal, parse_poly, print_curve, print_ideal, print_poly};
use cubic3::{Field, FieldCtx, Poly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field(m: usize) -> Field {
    FieldCtx::of_degree(m).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero(k: Field, deg_below: usize, r: &mut ChaCha8Rng) -> Poly {
    loop {
        let p = Poly::random(k, deg_below, r);
        if !p.is_zero() {
            return p;
        }
    }
}

fn element(k: Field, n: usize, r: &mut ChaCha8Rng) -> Element {
    Element::new(Poly::random(k, n, r), Poly::random(k, n, r), Poly::random(k, n, r))
}

fn curve_for(seed: u64) -> OrderData {
    let mut r = rng(seed);
    let m = if seed % 3 == 0 { 2 } else { 1 };
    random_curve(field(m), 3, 5, &mut r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frobenius_is_a_bijection(m in 1usize..=4, seed: u64) {
        let k = field(m);
        let a = k.random(&mut rng(seed));
        prop_assert_eq!(k.cube_root(k.cube(a)), a);
        prop_assert_eq!(k.cube(k.cube_root(a)), a);
    }

    #[test]
    fn field_axioms(m in 1usize..=5, seed: u64) {
        let k = field(m);
        let mut r = rng(seed);
        let (a, b, c) = (k.random(&mut r), k.random(&mut r), k.random(&mut r));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
        }
    }

    #[test]
    fn factorization_recombines(m in 1usize..=2, n in 1usize..=9, seed: u64) {
        let k = field(m);
        let f = nonzero(k, n + 1, &mut rng(seed));
        prop_assume!(!f.is_constant());
        let mut prod = Poly::constant(k, f.lc());
        for (p, e) in f.factor().unwrap() {
            prop_assert!(p.is_monic() && p.is_irreducible());
            prod = &prod * &p.pow(e as u64);
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn xgcd_bezout(m in 1usize..=2, seed: u64) {
        let k = field(m);
        let mut r = rng(seed);
        let (a, b) = (nonzero(k, 7, &mut r), nonzero(k, 6, &mut r));
        let (g, s, t) = a.xgcd(&b).unwrap();
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn crt_meets_every_congruence(seed: u64) {
        let k = field(1);
        let mut r = rng(seed);
        let mut parts: Vec<(Poly, Poly)> = Vec::new();
        while parts.len() < 3 {
            let m = random_prime(k, 3, &mut r).pow(r.gen_range(1..3));
            if parts.iter().all(|(_, q)| q.gcd(&m).is_one()) {
                parts.push((Poly::random(k, 6, &mut r), m));
            }
        }
        let x = Poly::crt(k, &parts).unwrap();
        let total = parts.iter().fold(Poly::one(k), |acc, (_, m)| &acc * m);
        prop_assert!(x.is_zero() || x.deg() < total.deg());
        for (res, m) in &parts {
            prop_assert_eq!(x.rem(m), res.rem(m));
        }
    }

    #[test]
    fn cube_roots_mod_primes(m in 1usize..=2, seed: u64) {
        let k = field(m);
        let mut r = rng(seed);
        let p = random_prime(k, 4, &mut r);
        let c = Poly::random(k, 8, &mut r);
        let f = Poly::cube_root_mod(&c, &p).unwrap();
        prop_assert_eq!(f.pow(3).rem(&p), c.rem(&p));
    }

    #[test]
    fn zero_derivative_means_cube(m in 1usize..=2, seed: u64) {
        let k = field(m);
        let g = Poly::random(k, 4, &mut rng(seed));
        let f = g.pow(3);
        prop_assert!(f.derivative().is_zero());
        prop_assert_eq!(f.cube_root_of_cube().unwrap(), g);
    }

    #[test]
    fn standard_form_properties(m in 1usize..=2, seed: u64) {
        let k = field(m);
        let mut r = rng(seed);
        let c = match Curve::new(nonzero(k, 5, &mut r), nonzero(k, 8, &mut r)) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        let Ok((s, _)) = standardize(&CubicInput::Depressed(c)) else { return Ok(()) };
        let (s2, steps) = standardize(&CubicInput::Depressed(s.clone())).unwrap();
        prop_assert_eq!(&s2, &s);
        prop_assert!(steps.is_empty());
        prop_assert!(remove_singular_factor(&s).is_none());
        let (da, db) = (s.a.deg(), s.b.deg());
        let wild = db % 3 != 0 && 2 * db > 3 * da;
        let tame = 2 * db <= 3 * da;
        prop_assert!(wild != tame);
        prop_assert_eq!(s.criterion(), Some(if wild { Criterion::Wild } else { Criterion::Tame }));
        let od = compute_order_data(&s).unwrap();
        if detect_singularity(&s).1 {
            prop_assert!(od.index.is_one());
        }
    }

    #[test]
    fn reciprocal_cubic_has_the_same_genus(seed: u64) {
        let k = field(1);
        let mut r = rng(seed);
        let (s, u, v, w) = (nonzero(k, 3, &mut r), Poly::random(k, 3, &mut r), nonzero(k, 3, &mut r), nonzero(k, 4, &mut r));
        let (Ok(g1), Ok(g2)) = (GeneralCubic::new(s.clone(), u.clone(), v.clone(), w.clone()), GeneralCubic::new(w, v, u, s)) else {
            return Ok(());
        };
        prop_assume!(depress(&g1).is_ok() && depress(&g2).is_ok());
        let (Ok((c1, _)), Ok((c2, _))) = (standardize(&CubicInput::General(g1)), standardize(&CubicInput::General(g2))) else {
            return Ok(());
        };
        let (o1, o2) = (compute_order_data(&c1).unwrap(), compute_order_data(&c2).unwrap());
        prop_assert_eq!(o1.genus, o2.genus);
    }

    #[test]
    fn order_identities(seed: u64) {
        let od = curve_for(seed);
        let k = od.field();
        let (rho, omega) = (od.rho(), od.omega());
        let cube = |e: &Element| element_mul(&element_mul(e, e, &od), e, &od);
        let lhs = cube(&rho).sub(&element_mul(&Element::from_poly(od.a().clone()), &rho, &od)).add(&Element::from_poly(od.fi2.clone()));
        prop_assert!(lhs.is_zero());
        let om2 = element_mul(&omega, &omega, &od);
        let lhs = cube(&omega).add(&om2.scale(&od.e)).sub(&Element::from_poly(od.f2i.clone()));
        prop_assert!(lhs.is_zero());
        prop_assert!(od.index.divides(od.a()));
        prop_assert!(od.index.square().divides(&od.curve.shifted_b(&od.i)));
        prop_assert_eq!(&od.delta * &od.index.square(), od.a().pow(3));
        let mut r = rng(seed ^ 1);
        let (u, v) = (element(k, 4, &mut r), element(k, 4, &mut r));
        prop_assert_eq!(element_norm(&element_mul(&u, &v, &od), &od), &element_norm(&u, &od) * &element_norm(&v, &od));
        if od.distinguished_ok && !u.is_zero() {
            let parts = norm_degree_parts(&u, &od).unwrap();
            let top = parts.iter().copied().max().unwrap();
            prop_assert_eq!(Some(element_norm(&u, &od).deg()), top.finite());
        }
    }

    #[test]
    fn primes_above_a_place(seed: u64) {
        let od = curve_for(seed);
        let mut r = rng(seed ^ 2);
        let p = random_prime(od.field(), 2, &mut r);
        let pl = split_finite(&p, &od).unwrap();
        let (es, fs) = (pl.ramification(), pl.inertia());
        prop_assert_eq!(es.iter().zip(&fs).map(|(e, f)| e * f).sum::<usize>(), 3);
        let mut prod = Ideal::unit(od.field());
        for ((sel, e), f) in pl.primes().iter().zip(&es).zip(&fs) {
            let b = prime_basis(&pl, sel, &od).unwrap();
            prop_assert_eq!(b.norm(), p.monic().pow(*f as u64));
            for _ in 0..*e {
                prod = oracle_ideal_mul(&prod, &b, &od).unwrap();
            }
        }
        prop_assert_eq!(prod, Ideal::principal_poly(&p));
    }

    #[test]
    fn ideal_arithmetic_laws(seed: u64) {
        let od = curve_for(seed);
        let mut r = rng(seed ^ 3);
        let a = random_ideal(&od, 4, &mut r).unwrap();
        let b = random_ideal(&od, 4, &mut r).unwrap();
        let (d, j) = ideal_mul(&a, &b, &od).unwrap();
        let full = Ideal { d: d.clone(), ..j.clone() };
        prop_assert_eq!(full.norm(), &a.norm() * &b.norm());
        prop_assert_eq!(&full, &oracle_ideal_mul(&a, &b, &od).unwrap());
        if d.is_one() {
            prop_assert_eq!(ideal_divide(&j, &a, &od).unwrap(), b.clone());
        }
        prop_assert_eq!(type_factor(&a, &od).unwrap().recombine().unwrap(), a);
    }

    #[test]
    fn triangularization_is_canonical(seed: u64) {
        let od = curve_for(seed);
        let mut r = rng(seed ^ 4);
        let k = od.field();
        let j = random_ideal(&od, 4, &mut r).unwrap();
        let b = j.basis();
        let mut gens: Vec<Element> = b.to_vec();
        for _ in 0..3 {
            let [c1, c2, c3] = [0; 3].map(|_| Poly::random(k, 3, &mut r));
            gens.push(b[0].scale(&c1).add(&b[1].scale(&c2)).add(&b[2].scale(&c3)));
        }
        for i in (1..gens.len()).rev() {
            gens.swap(i, r.gen_range(0..=i));
        }
        let h = module_triangularize(&gens).unwrap();
        prop_assert_eq!(&h, &j);
        prop_assert_eq!(module_triangularize(&h.basis()).unwrap(), h);
    }

    #[test]
    fn text_round_trips(seed: u64) {
        let od = curve_for(seed);
        let k = od.field();
        let mut r = rng(seed ^ 5);
        let p = Poly::random(k, 7, &mut r);
        prop_assert_eq!(parse_poly(k, &print_poly(&p)).unwrap(), p);
        let j = random_ideal(&od, 5, &mut r).unwrap();
        let j = Ideal { d: nonzero(k, 3, &mut r).monic(), ..j };
        prop_assert_eq!(parse_ideal(k, &print_ideal(&j)).unwrap(), j);
        let text = print_curve(k, &od.curve);
        let f = parse_curve(&text).unwrap();
        prop_assert_eq!(&f.curve, &od.curve);
        prop_assert_eq!(print_curve(f.field, &f.curve), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn comp_red_is_a_group_law(seed: u64) {
        let mut r = rng(seed);
        let od = loop {
            let od = random_curve(field(1), 2, 5, &mut r);
            if od.distinguished_ok {
                break od;
            }
        };
        let [a, b, c] = [0, 1, 2].map(|_| random_ideal(&od, 4, &mut r).unwrap());
        let unit = Ideal::unit(od.field());
        let ab = comp_red(&a, &b, &od).unwrap();
        prop_assert_eq!(&ab, &comp_red(&b, &a, &od).unwrap());
        prop_assert_eq!(&comp_red(&ab, &unit, &od).unwrap(), &ab);
        prop_assert!(ab.norm().deg() <= od.genus);
        let lhs = comp_red(&ab, &c, &od).unwrap();
        let rhs = comp_red(&a, &comp_red(&b, &c, &od).unwrap(), &od).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
