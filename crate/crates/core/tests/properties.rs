use std::cmp::Ordering;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use surfgen_core::{Field, Ideal, Mono, MonomialOrder, Polynomial, PrimeField, Ring, Vars};

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex), (1usize..5).prop_map(MonomialOrder::Elimination)]
}

fn exps() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..8, 5)
}

fn ring() -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), 4)
}

fn form(r: &Ring<PrimeField>, d: u32, coeffs: &[i64]) -> Polynomial<PrimeField> {
    r.vars
        .monomials_of_degree(d)
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(r.zero(), |acc, (&m, &c)| acc.add(&r.term(r.field.from_i64(c), m)))
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-50i64..50, 1..40)
}

proptest! {
    #![proptest_config(config(10_000))]

    #[test]
    fn monomial_orders_are_admissible(o in order(), a in exps(), b in exps(), c in exps()) {
        let v = Vars::new(5);
        let (a, b, c) = (v.mono(&a), v.mono(&b), v.mono(&c));
        let ab = o.cmp(&v, a, b);
        prop_assert_eq!(ab, o.cmp(&v, b, a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(ab, o.cmp(&v, a.mul(c), b.mul(c)));
        prop_assert_ne!(o.cmp(&v, Mono::ONE, a), Ordering::Greater);
        if ab == Ordering::Less && o.cmp(&v, b, c) == Ordering::Less {
            prop_assert_eq!(o.cmp(&v, a, c), Ordering::Less);
        }
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn normal_form_is_idempotent(g1 in coeffs(), g2 in coeffs(), p in coeffs()) {
        let r = ring();
        let i = Ideal::new(&r, vec![form(&r, 2, &g1), form(&r, 2, &g2)]).unwrap();
        let p = form(&r, 4, &p);
        let nf = i.normal_form(&p);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&p.sub(&nf)));
    }

    #[test]
    fn combinations_are_members(g1 in coeffs(), g2 in coeffs(), h1 in coeffs(), h2 in coeffs()) {
        let r = ring();
        let (f, g) = (form(&r, 2, &g1), form(&r, 3, &g2));
        let i = Ideal::new(&r, vec![f.clone(), g.clone()]).unwrap();
        let p = f.mul(&form(&r, 3, &h1)).add(&g.mul(&form(&r, 2, &h2)));
        prop_assert!(i.contains(&p));
        prop_assert!(i.normal_form(&p).is_zero());
    }

    #[test]
    fn ring_laws(a in coeffs(), b in coeffs(), c in coeffs()) {
        let r = ring();
        let (a, b, c) = (form(&r, 1, &a), form(&r, 2, &b), form(&r, 2, &c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(b.sub(&b).is_zero());
    }
}
