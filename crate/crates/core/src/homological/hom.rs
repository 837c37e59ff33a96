//! Degree-zero homomorphisms between presented modules.

use alloc::vec::Vec;

use super::ModulePresentation;
use crate::error::Result;
use crate::field::Field;
use crate::groebner::{syzygies, SyzygyOptions};
use crate::linalg::{nullspace, Matrix};
use crate::module::{from_svec, ModuleMap, SVec};
use crate::order::ModTerm;
use crate::poly::Polynomial;

/// A basis of `Hom(A, B)_0`, each element given by its action `A_0 -> B_0`
/// on generators (values reduced modulo the relations of `B`).
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<ModuleMap<F>>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// A random linear combination of the basis.
    pub fn random_element(&self, rng: &mut dyn rand_core::RngCore) -> Option<ModuleMap<F>> {
        let first = self.basis.first()?;
        let field = &first.ring.field;
        let coeffs: Vec<F::Elem> = self.basis.iter().map(|_| field.random(rng)).collect();
        Some(combine(&self.basis, &coeffs))
    }
}

fn combine<F: Field>(maps: &[ModuleMap<F>], coeffs: &[F::Elem]) -> ModuleMap<F> {
    let m0 = &maps[0];
    let cols = (0..m0.ncols())
        .map(|j| {
            (0..m0.nrows())
                .map(|i| {
                    let mut acc = m0.ring.zero();
                    for (m, c) in maps.iter().zip(coeffs) {
                        acc = acc.add(&m.entry(i, j).scale(c));
                    }
                    acc
                })
                .collect()
        })
        .collect();
    ModuleMap::from_columns(&m0.ring, m0.target.clone(), m0.source.clone(), cols)
}

/// `Hom(A, B)_0` by linear algebra in the degrees of `A`'s generators and
/// relations.
pub fn hom_degree_zero<F: Field>(a: &ModulePresentation<F>, b: &ModulePresentation<F>) -> Result<HomSpace<F>> {
    let ring = a.ring().clone();
    let field = &ring.field;
    let gb = b.relation_basis()?;
    let border = gb.order().clone();
    let b0 = b.generators();
    // standard terms of B_0 / im(b) in degree d
    let standard = |d: i32| -> Vec<ModTerm> {
        let mut out = Vec::new();
        for (i, &e) in b0.twists.iter().enumerate() {
            if d - e < 0 {
                continue;
            }
            for m in ring.vars.monomials_of_degree((d - e) as u32) {
                let t = ModTerm { mono: m, comp: i as u32 };
                if !gb.lead_reducible(t) {
                    out.push(t);
                }
            }
        }
        out
    };
    let a0 = a.generators();
    let mut unknowns: Vec<(usize, ModTerm)> = Vec::new();
    for (j, &e) in a0.twists.iter().enumerate() {
        for t in standard(e) {
            unknowns.push((j, t));
        }
    }
    if unknowns.is_empty() {
        return Ok(HomSpace { basis: Vec::new() });
    }
    // one block of equations per relation of A
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let rel = &a.relations;
    for k in 0..rel.ncols() {
        let fk = rel.source.twists[k];
        let targets = standard(fk);
        let pos = |t: &ModTerm| targets.iter().position(|x| x == t);
        let mut block = alloc::vec![alloc::vec![field.zero(); unknowns.len()]; targets.len()];
        for (u, (j, s)) in unknowns.iter().enumerate() {
            let ajk = rel.entry(*j, k);
            if ajk.is_zero() {
                continue;
            }
            let mut v: SVec<F::Elem> = ajk
                .terms()
                .iter()
                .map(|(m, c)| (ModTerm { mono: m.mul(s.mono), comp: s.comp }, c.clone()))
                .collect();
            v.sort_by(|x, y| border.cmp(y.0, x.0));
            for (t, c) in gb.normal_form(v) {
                let r = pos(&t).expect("normal form lies in the standard terms");
                block[r][u] = c;
            }
        }
        rows.extend(block);
    }
    let kernel = if rows.is_empty() {
        (0..unknowns.len())
            .map(|u| (0..unknowns.len()).map(|w| if u == w { field.one() } else { field.zero() }).collect())
            .collect()
    } else {
        nullspace(field, &Matrix::from_rows(rows, unknowns.len()))
    };
    let basis = kernel
        .into_iter()
        .map(|vec| {
            let mut cols: Vec<SVec<F::Elem>> = alloc::vec![Vec::new(); a0.rank()];
            for (u, c) in vec.into_iter().enumerate() {
                if !field.is_zero(&c) {
                    cols[unknowns[u].0].push((unknowns[u].1, c));
                }
            }
            let cols: Vec<Vec<Polynomial<F>>> = cols.iter().map(|v| from_svec(&ring, b0.rank(), v)).collect();
            ModuleMap::from_columns(&ring, b0.clone(), a0.clone(), cols)
        })
        .collect();
    Ok(HomSpace { basis })
}

/// Generators of `Hom(C, R(t))` up to degree zero: a map whose columns are
/// homomorphisms `C_0 -> R(t)` written as rows of polynomials, with source
/// twist `s` meaning a homomorphism of degree `s - t`.
pub fn hom_into_free<F: Field>(c: &ModulePresentation<F>, t: i32) -> Result<ModuleMap<F>> {
    let tr = c.relations.transpose();
    syzygies(&tr, SyzygyOptions { minimize: true, max_degree: Some(t) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::module::GradedFreeModule;
    use crate::poly::Ring;

    #[test]
    fn small_hom_spaces() {
        let r = Ring::new(PrimeField::default(), 5);
        let a = ModulePresentation::free(&r, alloc::vec![1]);
        let b = ModulePresentation::free(&r, alloc::vec![0]);
        assert_eq!(hom_degree_zero(&a, &b).unwrap().dim(), 5);
        let q = ModulePresentation::quotient_ring(&r, &[r.var(0)]);
        assert_eq!(hom_degree_zero(&q, &q).unwrap().dim(), 1);
        // Hom(R/(x0), R) = 0
        let free = ModulePresentation::free(&r, alloc::vec![0]);
        assert_eq!(hom_degree_zero(&q, &free).unwrap().dim(), 0);
        let _ = GradedFreeModule::default();
    }
}
