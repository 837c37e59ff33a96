use alloc::vec::Vec;

use super::*;
use crate::field::PrimeField;
use crate::linalg::{rank, Matrix};
use crate::mono::Mono;

fn r5() -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), 5)
}

fn polys(r: &Ring<PrimeField>, s: &[&str]) -> Vec<Polynomial<PrimeField>> {
    s.iter().map(|x| r.parse(x).unwrap()).collect()
}

// dim (R/I)_d by linear algebra on multiples of the generators
fn brute_hf(r: &Ring<PrimeField>, gens: &[Polynomial<PrimeField>], d: u32) -> usize {
    let basis = r.vars.monomials_of_degree(d);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in r.vars.monomials_of_degree(d - gd) {
            let p = g.mul_term(&1, m);
            rows.push(basis.iter().map(|b| p.coefficient(*b)).collect());
        }
    }
    if rows.is_empty() {
        return basis.len();
    }
    basis.len() - rank(&r.field, &Matrix::from_rows(rows, basis.len()))
}

fn standard_count(gb: &GroebnerBasis<PrimeField>, d: u32) -> usize {
    let leads: Vec<Mono> = gb.leads().map(|t| t.mono).collect();
    gb.ring().vars.monomials_of_degree(d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(*m))).count()
}

#[test]
fn variables_are_their_own_basis() {
    let r = r5();
    let gb = GroebnerBasis::of_ideal(&r, &polys(&r, &["x0", "x1"])).unwrap();
    assert_eq!(gb.polynomials(), polys(&r, &["x0", "x1"]));
}

#[test]
fn lead_ideal_hilbert_function_matches_linear_algebra() {
    let r = Ring::new(PrimeField::default(), 3);
    let gens = polys(&r, &["x0^2-x1*x2", "x0*x1-x2^2"]);
    let gb = GroebnerBasis::of_ideal(&r, &gens).unwrap();
    for d in 0..=6 {
        assert_eq!(standard_count(&gb, d), brute_hf(&r, &gens, d), "degree {d}");
    }
    for g in &gens {
        assert!(gb.contains_poly(g));
    }
}

#[test]
fn normal_forms() {
    let r = r5();
    let m = polys(&r, &["x0", "x1", "x2", "x3", "x4"]);
    let gb = GroebnerBasis::of_ideal(&r, &m).unwrap();
    assert_eq!(gb.normal_form_poly(&r.one()), r.one());
    let gb2 = GroebnerBasis::of_ideal(&r, &polys(&r, &["x0^2", "x1^2"])).unwrap();
    let p = r.parse("x0*x1").unwrap();
    assert_eq!(gb2.normal_form_poly(&p), p);
}

fn row_map(r: &Ring<PrimeField>, gens: &[Polynomial<PrimeField>]) -> ModuleMap<PrimeField> {
    let twists = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
    ModuleMap::from_rows(r, GradedFreeModule::uniform(1, 0), GradedFreeModule::new(twists), alloc::vec![gens.to_vec()])
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = r5();
    let s = kernel_of_map(&row_map(&r, &polys(&r, &["x0", "x1"]))).unwrap();
    assert_eq!(s.ncols(), 1);
    let col = s.column(0);
    let expect = polys(&r, &["x1", "-x0"]);
    let neg: Vec<_> = expect.iter().map(|p| p.neg()).collect();
    assert!(col == &expect[..] || col == &neg[..]);
}

#[test]
fn syzygies_of_three_variables_and_of_a_complete_intersection() {
    let r = r5();
    let s = kernel_of_map(&row_map(&r, &polys(&r, &["x0", "x1", "x2"]))).unwrap();
    assert_eq!(s.source.twists, [2, 2, 2]);
    let ci = polys(&r, &["x0^5+x1^5+x2^3*x3^2", "x3^5-x4^5+x0*x1*x2*x3*x4"]);
    let s = kernel_of_map(&row_map(&r, &ci)).unwrap();
    assert_eq!(s.source.twists, [10]);
}

#[test]
fn koszul_contraction_kernel_has_ten_quadratic_generators() {
    let r = r5();
    let m = row_map(&r, &polys(&r, &["x0", "x1", "x2", "x3", "x4"]));
    let k = kernel_of_map(&m).unwrap();
    assert_eq!(k.source.twists, [2; 10]);
    assert!(m.compose(&k).is_zero());
}
