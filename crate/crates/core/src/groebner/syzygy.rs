//! First syzygies and kernels of graded maps.

use alloc::vec::Vec;

use super::{buchberger_full, GbOptions};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::module::{check_graded_map, from_svec, GradedFreeModule, ModuleMap, SVec};
use crate::order::{MonomialOrder, TermOrder};
use crate::poly::Ring;

#[derive(Clone, Copy, Debug)]
pub struct SyzygyOptions {
    /// Reduce to a minimal generating set.
    pub minimize: bool,
    /// Only syzygies of degree at most this.
    pub max_degree: Option<i32>,
}

impl Default for SyzygyOptions {
    fn default() -> Self {
        SyzygyOptions { minimize: true, max_degree: None }
    }
}

/// Positions of a minimal generating subset of homogeneous vectors.
pub fn minimal_generators<F: Field>(ring: &Ring<F>, order: &TermOrder, vecs: &[SVec<F::Elem>]) -> Result<Vec<usize>> {
    let res = buchberger_full(ring, order, vecs, GbOptions::default())?;
    let mut idx = res.mingens;
    idx.sort_unstable_by_key(|&i| (order.degree(vecs[i][0].0), i));
    Ok(idx)
}

/// Relations among the columns of `m`: a map into `m.source` whose image is
/// the kernel of `m`.
pub fn syzygies<F: Field>(m: &ModuleMap<F>, opts: SyzygyOptions) -> Result<ModuleMap<F>> {
    let violations = check_graded_map(m);
    if !violations.is_empty() {
        return Err(AlgebraError::NotHomogeneous(alloc::format!("{} entries break the degree contract", violations.len())));
    }
    let ring = &m.ring;
    let order = m.target.default_order(ring.vars);
    let gens = m.column_svecs(&order);
    let res = buchberger_full(ring, &order, &gens, GbOptions { track: true, max_degree: opts.max_degree })?;
    let src_order = TermOrder::top(ring.vars, MonomialOrder::Grevlex, &m.source.twists);
    // re-sort in the source order (zero columns carry their own twist there)
    let mut syz: Vec<SVec<F::Elem>> = res
        .syzygies
        .into_iter()
        .map(|mut v| {
            v.sort_by(|a, b| src_order.cmp(b.0, a.0));
            v
        })
        .filter(|v| !v.is_empty())
        .filter(|v| opts.max_degree.is_none_or(|d| src_order.degree(v[0].0) <= d))
        .collect();
    if opts.minimize {
        let keep = minimal_generators(ring, &src_order, &syz)?;
        syz = keep.into_iter().map(|i| syz[i].clone()).collect();
    } else {
        syz.sort_by_key(|v| src_order.degree(v[0].0));
    }
    let twists: Vec<i32> = syz.iter().map(|v| src_order.degree(v[0].0)).collect();
    let cols = syz.iter().map(|v| from_svec(ring, m.ncols(), v)).collect();
    Ok(ModuleMap::from_columns(ring, m.source.clone(), GradedFreeModule::new(twists), cols))
}

/// Minimal generators of `ker m`, as the columns of a map into `m.source`.
pub fn kernel_of_map<F: Field>(m: &ModuleMap<F>) -> Result<ModuleMap<F>> {
    syzygies(m, SyzygyOptions::default())
}
