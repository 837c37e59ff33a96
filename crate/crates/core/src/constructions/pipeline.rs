//! Degeneracy loci of module maps and extraction of their ideals.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::homological::{cokernel_presentation, hom_degree_zero, hom_into_free, ModulePresentation};
use crate::ideal::{saturate, Ideal};
use crate::poly::Polynomial;

/// Saturated ideal `I` with `coker φ ≅ I(t)` up to finite length, read off
/// the unique degree-zero map `C -> R(t)`.
pub fn ideal_from_module<F: Field>(c: &ModulePresentation<F>, t: i32, rng: &mut dyn rand_core::RngCore) -> Result<Ideal<F>> {
    let c = c.minimal()?;
    let h = hom_into_free(&c, t)?;
    let low = h.source.twists.iter().filter(|&&s| s < t).count();
    let at: Vec<usize> = (0..h.ncols()).filter(|&j| h.source.twists[j] == t).collect();
    if low > 0 || at.len() != 1 {
        return Err(AlgebraError::Degenerate(format!(
            "Hom(C, R({t})) has {} maps of degree zero and {low} of negative degree",
            at.len()
        )));
    }
    let gens: Vec<Polynomial<F>> = h.column(at[0]).iter().filter(|p| !p.is_zero()).cloned().collect();
    let i = Ideal::new(c.ring(), gens)?;
    saturate(&i, rng)
}

/// Degeneracy locus of a random degree-zero `φ: E -> F`, as the ideal of
/// `coker φ` twisted by `t`.
pub fn degeneracy_pipeline<F: Field>(
    e: &ModulePresentation<F>,
    f: &ModulePresentation<F>,
    t: i32,
    rng: &mut dyn rand_core::RngCore,
) -> Result<Ideal<F>> {
    let hom = hom_degree_zero(e, f)?;
    let phi = hom.random_element(rng).ok_or_else(|| AlgebraError::Degenerate("Hom(E, F) vanishes in degree 0".into()))?;
    ideal_from_module(&cokernel_presentation(f, &phi), t, rng)
}

/// Random element of degree `d` in the module, as a column over its generators.
pub fn random_module_element<F: Field>(m: &ModulePresentation<F>, d: i32, rng: &mut dyn rand_core::RngCore) -> Vec<Polynomial<F>> {
    let ring = m.ring();
    m.generators()
        .twists
        .iter()
        .map(|&e| if d >= e { ring.random_form((d - e) as u32, rng) } else { ring.zero() })
        .collect()
}
