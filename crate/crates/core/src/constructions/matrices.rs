//! Special matrices and module presentations over `P^4`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{usage, AlgebraError, Result};
use crate::field::Field;
use crate::homological::{koszul_map, ModulePresentation};
use crate::ideal::{intersect_all, Ideal};
use crate::linalg::{nullspace, rank, Matrix};
use crate::module::{GradedFreeModule, ModuleMap};
use crate::poly::{Polynomial, Ring};

/// The three points defining the Horrocks-Mumford matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MooreParameters {
    pub z0: [i64; 5],
    pub z1: [i64; 5],
    pub z2: [i64; 5],
}

impl Default for MooreParameters {
    fn default() -> Self {
        MooreParameters { z0: [1, 0, 0, 0, 0], z1: [0, 1, 0, 0, 1], z2: [0, 0, 1, 1, 0] }
    }
}

/// Default extension class for the Horrocks-Mumford derived module.
pub const DEFAULT_XI: [i64; 5] = [1, -1, 1, -1, 1];

fn need_p4<F: Field>(ring: &Ring<F>) -> Result<()> {
    if ring.nvars() != 5 || !ring.vars.is_standard() {
        return Err(usage("construction lives in a standard-graded ring with 5 variables"));
    }
    Ok(())
}

/// `5x5` matrix with entries `x_{i+j} z_{i-j}`, indices mod 5.
pub fn moore_matrix<F: Field>(ring: &Ring<F>, z: &[i64; 5]) -> Result<ModuleMap<F>> {
    need_p4(ring)?;
    let f = &ring.field;
    let rows = (0..5)
        .map(|i| (0..5).map(|j| ring.var((i + j) % 5).scale(&f.from_i64(z[(i + 5 - j) % 5]))).collect())
        .collect();
    Ok(ModuleMap::from_rows(ring, GradedFreeModule::uniform(5, 0), GradedFreeModule::uniform(5, 1), rows))
}

/// `γ = (M_{z0} | M_{z1} | M_{z2})`, a linear map `15R(-1) -> 5R`.
pub fn hm_gamma<F: Field>(ring: &Ring<F>, params: &MooreParameters) -> Result<ModuleMap<F>> {
    for z in [params.z0, params.z1, params.z2] {
        if z.iter().all(|&c| ring.field.is_zero(&ring.field.from_i64(c))) {
            return Err(usage("Moore parameters must be nonzero points"));
        }
    }
    Ok(moore_matrix(ring, &params.z0)?.concat(&moore_matrix(ring, &params.z1)?).concat(&moore_matrix(ring, &params.z2)?))
}

fn constant_matrix<F: Field>(ring: &Ring<F>, m: &Matrix<F::Elem>, target: i32, source: i32) -> ModuleMap<F> {
    let rows = (0..m.rows()).map(|i| (0..m.cols()).map(|j| ring.constant(m.get(i, j).clone())).collect()).collect();
    ModuleMap::from_rows(ring, GradedFreeModule::uniform(m.rows(), target), GradedFreeModule::uniform(m.cols(), source), rows)
}

/// Checks that `ξ` is a general extension class: multiplication by `ξ`
/// is injective on `R_1` and onto in degree 2 of `coker γ`.
pub fn check_extension_class<F: Field>(gamma: &ModuleMap<F>, xi: &[i64; 5]) -> Result<()> {
    let ring = &gamma.ring;
    let col: Vec<Polynomial<F>> = xi.iter().map(|&c| ring.constant(ring.field.from_i64(c))).collect();
    let xi_map = ModuleMap::from_columns(ring, gamma.target.clone(), GradedFreeModule::uniform(1, 0), alloc::vec![col]);
    let n = ModulePresentation::cokernel(gamma.concat(&xi_map));
    let h = n.hilbert(0..=2)?;
    let v: Vec<i64> = h.function.iter().map(|p| p.1).collect();
    if v[0] != 4 {
        return Err(usage("extension class must be nonzero"));
    }
    if v[1] != 5 {
        return Err(AlgebraError::Degenerate(format!("multiplication by xi is not injective in degree 1 ({})", v[1])));
    }
    if v[2] != 0 {
        return Err(AlgebraError::Degenerate(format!("multiplication by xi is not onto in degree 2 ({})", v[2])));
    }
    Ok(())
}

/// `coker(τγ)` for a given constant `4x5` matrix `τ` with `τξ = 0`.
pub fn hm_module_with_tau<F: Field>(ring: &Ring<F>, params: &MooreParameters, tau: &Matrix<F::Elem>, xi: &[i64; 5]) -> Result<ModulePresentation<F>> {
    let f = &ring.field;
    if tau.rows() != 4 || tau.cols() != 5 {
        return Err(usage("tau must be 4x5"));
    }
    if rank(f, tau) != 4 {
        return Err(AlgebraError::Degenerate("tau does not have rank 4".into()));
    }
    for i in 0..4 {
        let mut acc = f.zero();
        for (j, &c) in xi.iter().enumerate() {
            acc = f.add(&acc, &f.mul(tau.get(i, j), &f.from_i64(c)));
        }
        if !f.is_zero(&acc) {
            return Err(usage("tau must annihilate xi"));
        }
    }
    let gamma = hm_gamma(ring, params)?;
    Ok(ModulePresentation::cokernel(constant_matrix(ring, tau, 0, 0).compose(&gamma)))
}

/// The artinian module `M = coker(τγ: 15R(-1) -> 4R)` with Hilbert
/// function `(4, 5)`.
pub fn hm_derived_module<F: Field>(
    ring: &Ring<F>,
    params: &MooreParameters,
    xi: &[i64; 5],
    rng: &mut dyn rand_core::RngCore,
    attempts: usize,
) -> Result<ModulePresentation<F>> {
    let f = &ring.field;
    let gamma = hm_gamma(ring, params)?;
    check_extension_class(&gamma, xi)?;
    let row: Vec<F::Elem> = xi.iter().map(|&c| f.from_i64(c)).collect();
    let perp = nullspace(f, &Matrix::from_rows(alloc::vec![row], 5));
    for _ in 0..attempts.max(1) {
        let g: Vec<Vec<F::Elem>> = (0..4).map(|_| (0..4).map(|_| f.random(rng)).collect()).collect();
        let tau: Vec<Vec<F::Elem>> = g
            .iter()
            .map(|gi| {
                (0..5)
                    .map(|j| gi.iter().zip(&perp).fold(f.zero(), |acc, (c, v)| f.add(&acc, &f.mul(c, &v[j]))))
                    .collect()
            })
            .collect();
        match hm_module_with_tau(ring, params, &Matrix::from_rows(tau, 5), xi) {
            Err(AlgebraError::Degenerate(_)) => continue,
            other => return other,
        }
    }
    Err(AlgebraError::Degenerate("no rank-4 tau found".into()))
}

/// Module whose sheafification is `Ω^p(p)`, generated in degree 1:
/// `coker(Λ^{p+2}R(-2) -> Λ^{p+1}R(-1))`.
pub fn twisted_cotangent_module<F: Field>(ring: &Ring<F>, p: usize) -> Result<ModulePresentation<F>> {
    need_p4(ring)?;
    if !(1..=3).contains(&p) {
        return Err(usage("p must lie in 1..=3"));
    }
    Ok(ModulePresentation::cokernel(koszul_map(ring, p + 2)).shift(-(p as i32)))
}

/// A plane in `P^4` cut out by two linear forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Plane<F: Field> {
    pub forms: [Polynomial<F>; 2],
}

impl<F: Field> Plane<F> {
    pub fn random(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Self {
        Plane { forms: [ring.random_form(1, rng), ring.random_form(1, rng)] }
    }

    pub fn ideal(&self) -> Result<Ideal<F>> {
        Ideal::new(self.forms[0].ring(), self.forms.to_vec())
    }
}

/// Coefficient vector of a linear form.
pub fn linear_coefficients<F: Field>(l: &Polynomial<F>) -> Vec<F::Elem> {
    let ring = l.ring();
    (0..ring.nvars()).map(|i| l.coefficient(ring.vars.var(i))).collect()
}

fn span_rank<F: Field>(forms: &[&Polynomial<F>]) -> usize {
    let ring = forms[0].ring();
    rank(&ring.field, &Matrix::from_rows(forms.iter().map(|l| linear_coefficients(l)).collect(), ring.nvars()))
}

/// True when every pair of planes meets in exactly one point.
pub fn planes_in_general_position<F: Field>(planes: &[Plane<F>]) -> bool {
    planes.iter().all(|p| span_rank(&[&p.forms[0], &p.forms[1]]) == 2)
        && (0..planes.len()).all(|i| {
            (i + 1..planes.len()).all(|j| {
                let (a, b) = (&planes[i].forms, &planes[j].forms);
                span_rank(&[&a[0], &a[1], &b[0], &b[1]]) == 4
            })
        })
}

/// `M* = coker(ψ: 8R(-2) ⊕ 2R(-3) -> 3R(-1))` with `ψ1 = γα` built from
/// the Koszul complexes of four planes and `ψ2` general quadrics.
pub fn four_koszul_module<F: Field>(
    ring: &Ring<F>,
    planes: &[Plane<F>],
    with_quadrics: bool,
    rng: &mut dyn rand_core::RngCore,
) -> Result<ModulePresentation<F>> {
    need_p4(ring)?;
    if planes.len() != 4 || !planes_in_general_position(planes) {
        return Err(usage("need four planes meeting pairwise in single points"));
    }
    let f = &ring.field;
    let gamma: Vec<Vec<F::Elem>> = (0..3).map(|_| (0..4).map(|_| f.random(rng)).collect()).collect();
    let mut rows: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(3);
    for g in &gamma {
        let mut row = Vec::with_capacity(10);
        for (i, p) in planes.iter().enumerate() {
            row.push(p.forms[0].scale(&g[i]));
            row.push(p.forms[1].scale(&g[i]));
        }
        if with_quadrics {
            row.push(ring.random_form(2, rng));
            row.push(ring.random_form(2, rng));
        }
        rows.push(row);
    }
    let mut src = alloc::vec![2; 8];
    if with_quadrics {
        src.extend([3, 3]);
    }
    let psi = ModuleMap::from_rows(ring, GradedFreeModule::uniform(3, 1), GradedFreeModule::new(src), rows);
    let m = ModulePresentation::cokernel(psi);
    if !m.hilbert_series()?.polynomial().is_zero() {
        return Err(AlgebraError::Degenerate("module is not artinian".into()));
    }
    Ok(m)
}

/// The cubic containing four general planes.
pub fn segre_cubic<F: Field>(planes: &[Plane<F>]) -> Result<Polynomial<F>> {
    if planes.is_empty() || !planes_in_general_position(planes) {
        return Err(usage("planes must be in general position"));
    }
    let ideals = planes.iter().map(Plane::ideal).collect::<Result<Vec<_>>>()?;
    let inter = intersect_all(&ideals)?;
    let cubics = inter.degree_basis(3);
    if cubics.len() != 1 {
        return Err(AlgebraError::Degenerate(format!("{} independent cubics contain the planes", cubics.len())));
    }
    Ok(cubics[0].clone())
}
