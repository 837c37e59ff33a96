//! Gröbner bases of graded submodules, normal forms and syzygies.

mod buchberger;
pub(crate) mod reduce;
mod syzygy;

use alloc::vec::Vec;

pub use buchberger::GbOptions;
pub use syzygy::{kernel_of_map, minimal_generators, syzygies, SyzygyOptions};

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::module::{from_svec, to_svec, GradedFreeModule, ModuleMap, SVec};
use crate::order::{ModTerm, MonomialOrder, TermOrder};
use crate::poly::{Polynomial, Ring};
use reduce::LeadIndex;

/// A reduced Gröbner basis of a submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    order: TermOrder,
    elems: Vec<SVec<F::Elem>>,
    index: LeadIndex,
    complete: bool,
}

/// Everything [`buchberger_full`] produces.
#[derive(Clone, Debug)]
pub struct GbResult<F: Field> {
    pub basis: GroebnerBasis<F>,
    /// `basis[k] = Σ tags[k]_l gens[l]`, present when tracking.
    pub tags: Option<Vec<SVec<F::Elem>>>,
    /// Relations among the inputs, present when tracking (not minimal).
    pub syzygies: Vec<SVec<F::Elem>>,
    /// Order used for tags and syzygies (term-over-position on the inputs).
    pub tag_order: TermOrder,
    /// Inputs forming a minimal generating set (homogeneous case).
    pub mingens: Vec<usize>,
}

fn check_homogeneous<E>(order: &TermOrder, gens: &[SVec<E>]) -> Result<()> {
    for (i, g) in gens.iter().enumerate() {
        if let Some(first) = g.first() {
            let d = order.degree(first.0);
            if g.iter().any(|t| order.degree(t.0) != d) {
                return Err(AlgebraError::NotHomogeneous(alloc::format!("generator {i}")));
            }
        }
    }
    Ok(())
}

/// Gröbner basis of the submodule generated by `gens` (vectors sorted in `order`).
pub fn buchberger<F: Field>(ring: &Ring<F>, order: &TermOrder, gens: &[SVec<F::Elem>]) -> Result<GroebnerBasis<F>> {
    Ok(buchberger_full(ring, order, gens, GbOptions::default())?.basis)
}

pub fn buchberger_full<F: Field>(
    ring: &Ring<F>,
    order: &TermOrder,
    gens: &[SVec<F::Elem>],
    opts: GbOptions,
) -> Result<GbResult<F>> {
    check_homogeneous(order, gens)?;
    let run = buchberger::run(&ring.field, order, gens, opts);
    Ok(GbResult {
        basis: GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elems: run.elems,
            index: run.index,
            complete: run.complete,
        },
        tags: opts.track.then_some(run.tags),
        syzygies: run.syzygies,
        tag_order: run.tag_order,
        mingens: run.mingens,
    })
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of an ideal in grevlex.
    pub fn of_ideal(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        Self::of_ideal_in(ring, MonomialOrder::Grevlex, gens)
    }

    pub fn of_ideal_in(ring: &Ring<F>, mono: MonomialOrder, gens: &[Polynomial<F>]) -> Result<Self> {
        let order = TermOrder::ideal(ring.vars, mono);
        let vs: Vec<_> = gens.iter().map(|g| to_svec(core::slice::from_ref(g), &order)).collect();
        buchberger(ring, &order, &vs)
    }

    /// Basis of the column span of `m` in the default order of its target.
    pub fn of_columns(m: &ModuleMap<F>) -> Result<Self> {
        let order = m.target.default_order(m.ring.vars);
        buchberger(&m.ring, &order, &m.column_svecs(&order))
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// False when computed only up to a degree bound.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn elements(&self) -> &[SVec<F::Elem>] {
        &self.elems
    }

    pub fn leads(&self) -> impl Iterator<Item = ModTerm> + '_ {
        self.elems.iter().map(|e| e[0].0)
    }

    /// Elements of an ideal basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.elems.iter().map(|e| from_svec(&self.ring, 1, e).pop().unwrap()).collect()
    }

    /// Elements as columns of length `rank`.
    pub fn columns(&self) -> Vec<Vec<Polynomial<F>>> {
        self.elems.iter().map(|e| from_svec(&self.ring, self.order.rank(), e)).collect()
    }

    pub fn normal_form(&self, v: SVec<F::Elem>) -> SVec<F::Elem> {
        reduce::reduce(&self.ring.field, &self.order, &self.index, &self.elems, None, v, None, true).rem
    }

    pub fn normal_form_poly(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let v = to_svec(core::slice::from_ref(p), &self.order);
        from_svec(&self.ring, 1, &self.normal_form(v)).pop().unwrap()
    }

    pub fn normal_form_column(&self, col: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let v = to_svec(col, &self.order);
        from_svec(&self.ring, self.order.rank(), &self.normal_form(v))
    }

    pub fn contains_poly(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(to_svec(core::slice::from_ref(p), &self.order)).is_empty()
    }

    pub fn contains_column(&self, col: &[Polynomial<F>]) -> bool {
        self.normal_form(to_svec(col, &self.order)).is_empty()
    }

    /// Is the lead term divisible by some basis lead?
    pub fn lead_reducible(&self, t: ModTerm) -> bool {
        self.index.find(t).is_some()
    }

    /// Ambient module, with twists from the order.
    pub fn ambient(&self) -> GradedFreeModule {
        GradedFreeModule::new(self.order.twists().to_vec())
    }
}

#[cfg(test)]
mod tests;
