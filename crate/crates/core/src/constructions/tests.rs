use super::*;
use alloc::vec::Vec;
use crate::field::PrimeField;
use crate::homological::{betti_table, ModulePresentation};
use crate::numeric::bott_h0;
use crate::poly::Ring;
use crate::BettiTable;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p4() -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), 5)
}

fn hf(m: &ModulePresentation<PrimeField>, w: core::ops::RangeInclusive<i32>) -> Vec<i64> {
    m.hilbert(w).unwrap().function.iter().map(|p| p.1).collect()
}

#[test]
fn moore_blocks() {
    let r = p4();
    let m = moore_matrix(&r, &[1, 0, 0, 0, 0]).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            let e = m.entry(i, j);
            if i == j {
                assert_eq!(*e, r.var(2 * i % 5));
            } else {
                assert!(e.is_zero());
            }
        }
    }
}

fn table(levels: &[&[(i32, usize)]]) -> BettiTable {
    let e: Vec<(usize, i32, usize)> = levels.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&(j, b)| (i, j, b))).collect();
    BettiTable::from_entries(&e)
}

#[test]
fn horrocks_mumford_table() {
    let r = p4();
    let g = hm_gamma(&r, &MooreParameters::default()).unwrap();
    let b = betti_table(&ModulePresentation::cokernel(g)).unwrap();
    let hm = table(&[&[(0, 5)], &[(1, 15)], &[(2, 10), (3, 4), (4, 15)], &[(3, 2), (5, 35)], &[(6, 20)], &[(8, 2)]]);
    assert_eq!(b, hm);
    let zero = MooreParameters { z1: [0; 5], ..MooreParameters::default() };
    assert!(hm_gamma(&r, &zero).is_err());
}

#[test]
fn derived_module() {
    let r = p4();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = hm_derived_module(&r, &MooreParameters::default(), &DEFAULT_XI, &mut rng, 5).unwrap();
    assert_eq!(hf(&m, 0..=3), [4, 5, 0, 0]);
    let expected = table(&[&[(0, 4)], &[(1, 15)], &[(2, 15), (3, 12)], &[(3, 2), (4, 30)], &[(5, 21)], &[(6, 5)]]);
    assert_eq!(betti_table(&m).unwrap(), expected);

    // a general linear 4x15 matrix has no linear second syzygies
    let rows = (0..4).map(|_| (0..15).map(|_| r.random_form(1, &mut rng)).collect()).collect();
    let generic = ModulePresentation::cokernel(crate::ModuleMap::from_rows(
        &r,
        crate::GradedFreeModule::uniform(4, 0),
        crate::GradedFreeModule::uniform(15, 1),
        rows,
    ));
    let b = betti_table(&generic).unwrap();
    assert_eq!(b.get(3, 3), 0);
    assert_eq!(hf(&generic, 0..=2), [4, 5, 0]);

    let f = &r.field;
    let mut tau = crate::linalg::Matrix::filled(4, 5, 0u32);
    for i in 0..3 {
        tau.set(i, i, 1);
        tau.set(i, i + 1, 1);
    }
    assert!(matches!(
        hm_module_with_tau(&r, &MooreParameters::default(), &tau, &DEFAULT_XI),
        Err(crate::AlgebraError::Degenerate(_))
    ));
    let _ = f;
}

#[test]
fn cotangent_modules() {
    let r = p4();
    for p in 1..=3usize {
        let m = twisted_cotangent_module(&r, p).unwrap();
        let h = hf(&m, 0..=7);
        assert_eq!(h[0], 0);
        for t in 1..=7i64 {
            // degree t of the module is H^0(Ω^p(p + t))
            assert_eq!(h[t as usize], bott_h0(p as i64, p as i64 + t), "p={p} t={t}");
        }
    }
    assert_eq!(hf(&twisted_cotangent_module(&r, 3).unwrap(), 1..=1), [5]);
    assert!(twisted_cotangent_module(&r, 4).is_err());
}

#[test]
fn four_koszul() {
    let r = p4();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let planes: Vec<Plane<PrimeField>> = (0..4).map(|_| Plane::random(&r, &mut rng)).collect();
    let m = four_koszul_module(&r, &planes, true, &mut rng).unwrap();
    assert_eq!(hf(&m, 0..=4), [0, 3, 7, 7, 0]);
    let expected = table(&[&[(1, 3)], &[(2, 8), (3, 2)], &[(3, 4), (4, 5), (5, 15)], &[(6, 38)], &[(7, 28)], &[(8, 7)]]);
    assert_eq!(betti_table(&m).unwrap(), expected);
    // γα alone is supported at the six points where the planes meet
    assert!(four_koszul_module(&r, &planes, false, &mut rng).is_err());
    let rows = (0..3).map(|_| (0..8).map(|_| r.random_form(1, &mut rng)).collect()).collect();
    let general = ModulePresentation::cokernel(crate::ModuleMap::from_rows(
        &r,
        crate::GradedFreeModule::uniform(3, 1),
        crate::GradedFreeModule::uniform(8, 2),
        rows,
    ));
    assert_eq!(hf(&general, 0..=4), [0, 3, 7, 5, 0]);

    let mut special = planes.clone();
    special[1] = Plane { forms: [planes[0].forms[0].clone(), r.random_form(1, &mut rng)] };
    assert!(four_koszul_module(&r, &special, true, &mut rng).is_err());
}

#[test]
fn segre() {
    let r = p4();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let planes: Vec<Plane<PrimeField>> = (0..4).map(|_| Plane::random(&r, &mut rng)).collect();
    let c = segre_cubic(&planes).unwrap();
    assert_eq!(c.degree(), Some(3));
    for p in &planes {
        assert!(p.ideal().unwrap().contains(&c));
    }
    let cubic = crate::Ideal::new(&r, alloc::vec![c]).unwrap();
    let s = crate::scheme::smoothness_check(&cubic, 1, &mut rng).unwrap();
    assert_eq!((s.smooth, s.singular_dim, s.singular_degree), (false, 0, 10));
}

#[test]
fn all_recipes() {
    let r = p4();
    for name in RECIPES {
        let run = run_recipe(name, &r, 1, RunOptions::default()).unwrap();
        for c in &run.checks {
            assert!(c.passed, "{name}: {} {}", c.name, c.detail);
        }
        assert!(!run.checks.is_empty(), "{name}");
    }
    assert!(run_recipe("nosuch", &r, 1, RunOptions::default()).is_err());
}

