//! End-to-end constructions of the surfaces.

use alloc::format;
use alloc::vec::Vec;

use super::matrices::{four_koszul_module, hm_derived_module, twisted_cotangent_module, MooreParameters, Plane, DEFAULT_XI};
use super::pipeline::{degeneracy_pipeline, ideal_from_module, random_module_element};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::homological::{cokernel_presentation, free_resolution, kernel_presentation, koszul_map, ModulePresentation};
use crate::ideal::Ideal;
use crate::module::{GradedFreeModule, ModuleMap};
use crate::poly::Ring;

/// `Syz_1` of a presentation `coker(ψ: G -> H)`, with generators in the
/// degrees of the syzygies of `ψ` shifted by `shift`.
fn first_syzygy_module<F: Field>(m: &ModulePresentation<F>, shift: i32) -> Result<ModulePresentation<F>> {
    let psi = &m.relations;
    let ring = psi.ring.clone();
    let src = ModulePresentation::free(&ring, psi.source.twists.clone());
    let tgt = ModulePresentation::free(&ring, m.generators().twists.clone());
    Ok(kernel_presentation(&src, psi, &tgt)?.shift(shift))
}

/// `2R(-1) ⊕ k·N_3`, all generators in degree 1.
pub fn bundle_e<F: Field>(ring: &Ring<F>, k: usize) -> Result<ModulePresentation<F>> {
    let n3 = twisted_cotangent_module(ring, 3)?;
    Ok(ModulePresentation::free(ring, alloc::vec![1, 1]).direct_sum(&n3.power(k)))
}

/// The surface of degree 12 and sectional genus 13 from the
/// Horrocks-Mumford derived module.
pub fn prop2_1<F: Field>(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<Ideal<F>> {
    let m = hm_derived_module(ring, &MooreParameters::default(), &DEFAULT_XI, rng, 5)?;
    let f = first_syzygy_module(&m, -1)?;
    degeneracy_pipeline(&bundle_e(ring, 2)?, &f, 4, rng)
}

/// Linear forms `<ψ, δ(e_S)>` for `|S| = p + 1`, with `ψ ∈ Λ^p V` given on
/// the lexicographic basis.
fn contraction<F: Field>(ring: &Ring<F>, psi: &[F::Elem], p: usize) -> Vec<crate::poly::Polynomial<F>> {
    let d = koszul_map(ring, p + 1);
    (0..d.ncols())
        .map(|j| (0..d.nrows()).fold(ring.zero(), |acc, i| acc.add(&d.entry(i, j).scale(&psi[i]))))
        .collect()
}

/// Data of an epimorphism `2N_2 ⊕ N_1 -> R`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneChoice<F: Field> {
    pub psi11: Vec<F::Elem>,
    pub psi12: Vec<F::Elem>,
    pub psi2: Vec<F::Elem>,
}

impl<F: Field> PlaneChoice<F> {
    pub fn generic(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Self {
        let f = &ring.field;
        let mut v = |n: usize| (0..n).map(|_| f.random(rng)).collect::<Vec<_>>();
        PlaneChoice { psi11: v(10), psi12: v(10), psi2: v(5) }
    }

    /// `ψ11 = 0`, `ψ12 = e0∧e1`, `ψ2 = e2`.
    pub fn special(ring: &Ring<F>) -> Self {
        let f = &ring.field;
        let unit = |n: usize, k: usize| (0..n).map(|i| if i == k { f.one() } else { f.zero() }).collect::<Vec<_>>();
        PlaneChoice { psi11: alloc::vec![f.zero(); 10], psi12: unit(10, 0), psi2: unit(5, 2) }
    }
}

/// `ker(ψ: 2N_2 ⊕ N_1 -> R)`.
pub fn plane_kernel<F: Field>(ring: &Ring<F>, choice: &PlaneChoice<F>) -> Result<ModulePresentation<F>> {
    let n2 = twisted_cotangent_module(ring, 2)?;
    let n1 = twisted_cotangent_module(ring, 1)?;
    let a = n2.power(2).direct_sum(&n1);
    let mut row = contraction(ring, &choice.psi11, 2);
    row.extend(contraction(ring, &choice.psi12, 2));
    row.extend(contraction(ring, &choice.psi2, 1));
    let f = ModuleMap::from_rows(ring, GradedFreeModule::uniform(1, 0), a.generators().clone(), alloc::vec![row]);
    kernel_presentation(&a, &f, &ModulePresentation::free(ring, alloc::vec![0]))
}

/// The surfaces of degree 12 and sectional genus 14.
pub fn prop2_6<F: Field>(ring: &Ring<F>, choice: &PlaneChoice<F>, rng: &mut dyn rand_core::RngCore) -> Result<Ideal<F>> {
    let f = plane_kernel(ring, choice)?;
    degeneracy_pipeline(&bundle_e(ring, 3)?, &f, 4, rng)
}

/// Output of the syzygy construction of the degree 14 surface.
#[derive(Clone, Debug)]
pub struct SyzygySurface<F: Field> {
    pub ideal: Ideal<F>,
    pub planes: Vec<Plane<F>>,
}

/// Surface of degree 14 and sectional genus 19 from the dual of the
/// four-plane module.
pub fn prop3_1_syzygy<F: Field>(ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<SyzygySurface<F>> {
    let planes: Vec<Plane<F>> = (0..4).map(|_| Plane::random(ring, rng)).collect();
    let mstar = four_koszul_module(ring, &planes, true, rng)?;
    let res = free_resolution(&mstar, true, 3)?;
    let d2 = res.maps.get(1).ok_or_else(|| AlgebraError::Degenerate("module has no second syzygies".into()))?;
    let f = ModulePresentation::cokernel(d2.transpose()).shift(5);
    let ones: Vec<usize> = (0..f.generators().rank()).filter(|&k| f.generators().twists[k] == 0).collect();
    if ones.len() != 15 {
        return Err(AlgebraError::Degenerate(format!("{} generators of degree 0", ones.len())));
    }
    let n = f.generators().rank();
    let mut cols = alloc::vec![random_module_element(&f, 1, rng)];
    let mut twists = alloc::vec![1];
    for &k in &ones {
        cols.push((0..n).map(|i| if i == k { ring.one() } else { ring.zero() }).collect());
        twists.push(0);
    }
    let phi = ModuleMap::from_columns(ring, f.generators().clone(), GradedFreeModule::new(twists), cols);
    let ideal = ideal_from_module(&cokernel_presentation(&f, &phi), 4, rng)?;
    Ok(SyzygySurface { ideal, planes })
}
