//! Constructions by liaison and by plane models.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::matrices::{linear_coefficients, Plane};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideal::{image_of_map, intersect_all, link, quotient, saturate, Ideal};
use crate::linalg::{nullspace, Matrix};
use crate::poly::{Polynomial, Ring};
use crate::scheme::{analyze, intersection_report};

fn stage(name: &str, detail: String) -> AlgebraError {
    AlgebraError::Verification { stage: name.into(), detail }
}

fn expect_surface<F: Field>(name: &str, i: &Ideal<F>, d: i64, pi: i64, rng: &mut dyn rand_core::RngCore) -> Result<()> {
    let rep = analyze(i, rng)?;
    if rep.dim != 2 || rep.degree != d || rep.sectional_genus != Some(pi) {
        return Err(stage(name, format!("expected (d, pi) = ({d}, {pi}), got dim {} degree {} genus {:?}", rep.dim, rep.degree, rep.sectional_genus)));
    }
    Ok(())
}

/// Link of `i` by two general forms of degree `m` and `n`.
pub fn link_general<F: Field>(i: &Ideal<F>, m: u32, n: u32, rng: &mut dyn rand_core::RngCore) -> Result<(Ideal<F>, [Polynomial<F>; 2])> {
    let f = i.random_element(m, rng);
    let g = i.random_element(n, rng);
    let j = link(i, &f, &g, rng)?;
    Ok((j, [f, g]))
}

/// Ideal of the point cut out by two planes.
pub fn meet_point<F: Field>(a: &Plane<F>, b: &Plane<F>) -> Result<Ideal<F>> {
    let ring = a.forms[0].ring();
    Ideal::new(ring, alloc::vec![a.forms[0].clone(), a.forms[1].clone(), b.forms[0].clone(), b.forms[1].clone()])
}

/// Configuration of a plane `P` and the six points where four further
/// planes meet in pairs.
#[derive(Clone, Debug)]
pub struct FivePlanes<F: Field> {
    pub p: Plane<F>,
    pub others: Vec<Plane<F>>,
    /// Ideal of `P` together with the six points.
    pub union: Ideal<F>,
}

pub fn five_planes<F: Field>(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<FivePlanes<F>> {
    let planes: Vec<Plane<F>> = (0..5).map(|_| Plane::random(ring, rng)).collect();
    if !super::planes_in_general_position(&planes) {
        return Err(AlgebraError::Degenerate("planes not in general position".into()));
    }
    let p = planes[0].clone();
    let others = planes[1..].to_vec();
    let mut parts = alloc::vec![p.ideal()?];
    for i in 0..4 {
        for j in i + 1..4 {
            parts.push(meet_point(&others[i], &others[j])?);
        }
    }
    Ok(FivePlanes { p, others, union: intersect_all(&parts)? })
}

/// Generator counts of `I_{P ∪ {p_ij}}` and the residual curve of its
/// quadrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma32 {
    pub generator_degrees: Vec<(u32, usize)>,
    pub residual_degree: i64,
    pub residual_genus: Option<i64>,
    pub trisecant_length: i64,
}

pub fn lemma3_2<F: Field>(cfg: &FivePlanes<F>, rng: &mut dyn rand_core::RngCore) -> Result<Lemma32> {
    let ring = cfg.union.ring();
    let quadrics = Ideal::new(ring, cfg.union.generators_of_degree(2))?;
    let q = saturate(&quotient(&quadrics, &cfg.p.ideal()?)?, rng)?;
    let rep = analyze(&q, rng)?;
    let meet = intersection_report(&q, &cfg.p.ideal()?, rng)?;
    Ok(Lemma32 {
        generator_degrees: cfg.union.generator_degrees(),
        residual_degree: if rep.dim == 1 { rep.degree } else { -1 },
        residual_genus: rep.sectional_genus,
        trisecant_length: if meet.dim == 0 { meet.degree } else { -1 },
    })
}

/// Intermediate ideals of the linkage construction of the degree 14
/// surface.
#[derive(Clone, Debug)]
pub struct LinkageChain<F: Field> {
    pub config: FivePlanes<F>,
    pub lemma3_2: Lemma32,
    /// Generator degrees of `I_T`, `T = P ∪ ⋃ (V ∩ P_i)`.
    pub lemma3_4: Vec<(u32, usize)>,
    pub v: Polynomial<F>,
    pub w: Polynomial<F>,
    pub y: Ideal<F>,
    /// Degrees of the curves `Y ∩ P_i`.
    pub conic_degrees: Vec<i64>,
    pub z: Ideal<F>,
    pub quintics: [Polynomial<F>; 2],
    pub s: Ideal<F>,
}

pub fn prop3_1_linkage<F: Field>(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<LinkageChain<F>> {
    let cfg = five_planes(ring, rng)?;
    let l32 = lemma3_2(&cfg, rng)?;
    if l32.generator_degrees != [(2, 3), (3, 4)] || l32.residual_degree != 4 || l32.trisecant_length != 3 {
        return Err(stage("lemma3_2", format!("{l32:?}")));
    }
    let v = cfg.union.random_element(2, rng);
    let mut parts = alloc::vec![cfg.p.ideal()?];
    for pl in &cfg.others {
        parts.push(pl.ideal()?.add_generators(core::slice::from_ref(&v))?);
    }
    let t = intersect_all(&parts)?;
    let l34 = t.generator_degrees();
    if l34 != [(2, 1), (3, 2), (4, 4)] {
        return Err(stage("lemma3_4", format!("{l34:?}")));
    }
    let w = t.random_element(4, rng);
    let y = link(&cfg.p.ideal()?, &v, &w, rng)?;
    expect_surface("Y", &y, 7, 6, rng)?;
    let mut conic_degrees = Vec::new();
    for pl in &cfg.others {
        let r = intersection_report(&y, &pl.ideal()?, rng)?;
        conic_degrees.push(if r.dim == 1 { r.degree } else { -1 });
    }
    if conic_degrees.iter().any(|&d| d != 2) {
        return Err(stage("Y ∩ P_i", format!("{conic_degrees:?}")));
    }
    let mut parts = alloc::vec![y.clone()];
    for pl in &cfg.others {
        parts.push(pl.ideal()?);
    }
    let z = intersect_all(&parts)?.with_saturated_flag(true);
    expect_surface("Z", &z, 11, 10, rng)?;
    let (s, quintics) = link_general(&z, 5, 5, rng)?;
    expect_surface("S", &s, 14, 19, rng)?;
    Ok(LinkageChain { config: cfg, lemma3_2: l32, lemma3_4: l34, v, w, y, conic_degrees, z, quintics, s })
}

/// Forms of degree `d` in the plane singular at `double` and through `simple`.
pub fn plane_forms_through<F: Field>(plane: &Ring<F>, d: u32, double: &[Vec<F::Elem>], simple: &[Vec<F::Elem>]) -> Vec<Polynomial<F>> {
    let monos = plane.vars.monomials_of_degree(d);
    let basis: Vec<Polynomial<F>> = monos.iter().map(|&m| plane.term(plane.field.one(), m)).collect();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for p in double {
        for k in 0..plane.nvars() {
            rows.push(basis.iter().map(|b| b.derivative(k).eval(p)).collect());
        }
    }
    for p in simple {
        rows.push(basis.iter().map(|b| b.eval(p)).collect());
    }
    let ker = if rows.is_empty() {
        (0..basis.len()).map(|i| (0..basis.len()).map(|j| if i == j { plane.field.one() } else { plane.field.zero() }).collect()).collect()
    } else {
        nullspace(&plane.field, &Matrix::from_rows(rows, basis.len()))
    };
    ker.iter()
        .map(|v| basis.iter().zip(v).fold(plane.zero(), |acc, (b, c)| acc.add(&b.scale(c))))
        .collect()
}

/// Linear forms `Σ a_j y_j` with `Σ a_j F_j ≡ 0` modulo `c`.
fn spanning_forms<F: Field>(target: &Ring<F>, forms: &[Polynomial<F>], c: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    let plane = c.ring();
    let ci = Ideal::new(plane, alloc::vec![c.clone()])?;
    let d = forms[0].degree().unwrap_or(0);
    let monos = plane.vars.monomials_of_degree(d);
    let cols: Vec<Vec<F::Elem>> = forms
        .iter()
        .map(|f| {
            let nf = ci.normal_form(f);
            monos.iter().map(|&m| nf.coefficient(m)).collect()
        })
        .collect();
    let rows: Vec<Vec<F::Elem>> = (0..monos.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    Ok(nullspace(&plane.field, &Matrix::from_rows(rows, forms.len())).iter().map(|a| target.linear_form(a)).collect())
}

/// The degree 15 surface linked to the Castelnuovo surface plus five planes.
#[derive(Clone, Debug)]
pub struct CastelnuovoChain<F: Field> {
    pub points: Vec<Vec<F::Elem>>,
    pub y: Ideal<F>,
    pub planes: Vec<Plane<F>>,
    pub z: Ideal<F>,
    pub quintics: [Polynomial<F>; 2],
    pub s: Ideal<F>,
}

pub fn prop3_11<F: Field>(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<CastelnuovoChain<F>> {
    let plane = Ring::new(ring.field.clone(), 3);
    let pts: Vec<Vec<F::Elem>> = (0..8).map(|_| (0..3).map(|_| ring.field.random(rng)).collect()).collect();
    let quartics = plane_forms_through(&plane, 4, &pts[..1], &pts[1..]);
    if quartics.len() != 5 {
        return Err(AlgebraError::Degenerate(format!("{} quartics through the points", quartics.len())));
    }
    let y = image_of_map(&plane, &quartics, None, rng)?;
    let y = Ideal::new(ring, y.generators().iter().map(|g| g.embed(ring)).collect())?.with_saturated_flag(true);
    expect_surface("Y", &y, 5, 2, rng)?;
    let p = |ix: &[usize]| ix.iter().map(|&i| pts[i].clone()).collect::<Vec<_>>();
    let mut curves = plane_forms_through(&plane, 3, &p(&[0]), &p(&[1, 2, 3, 4, 5, 6]));
    for ix in [[0, 7, 1, 3, 5], [0, 7, 1, 4, 6], [0, 7, 2, 4, 5], [0, 7, 2, 3, 6]] {
        curves.extend(plane_forms_through(&plane, 2, &[], &p(&ix)));
    }
    if curves.len() != 5 {
        return Err(AlgebraError::Degenerate("conic classes are not unique".into()));
    }
    let mut planes = Vec::new();
    for c in &curves {
        let forms = spanning_forms(ring, &quartics, c)?;
        if forms.len() != 2 {
            return Err(stage("conic planes", format!("image of a conic spans codimension {}", forms.len())));
        }
        planes.push(Plane { forms: [forms[0].clone(), forms[1].clone()] });
    }
    let mut parts = alloc::vec![y.clone()];
    for pl in &planes {
        parts.push(pl.ideal()?);
    }
    let z = intersect_all(&parts)?.with_saturated_flag(true);
    expect_surface("Z", &z, 10, 7, rng)?;
    let (s, quintics) = link_general(&z, 5, 5, rng)?;
    expect_surface("S", &s, 15, 22, rng)?;
    Ok(CastelnuovoChain { points: pts, y, planes, z, quintics, s })
}

/// Coefficients of the linear forms cutting out a plane, for reports.
pub fn plane_coefficients<F: Field>(p: &Plane<F>) -> [Vec<F::Elem>; 2] {
    [linear_coefficients(&p.forms[0]), linear_coefficients(&p.forms[1])]
}
