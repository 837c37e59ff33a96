//! Direct sums, shifts, kernels and minimal presentations.

use alloc::vec::Vec;

use super::ModulePresentation;
use crate::error::Result;
use crate::field::Field;
use crate::groebner::{minimal_generators, syzygies, SyzygyOptions};
use crate::module::{GradedFreeModule, ModuleMap};
use crate::poly::{Polynomial, Ring};

/// Block-diagonal sum of two maps.
pub fn block_sum<F: Field>(a: &ModuleMap<F>, b: &ModuleMap<F>) -> ModuleMap<F> {
    let ring = &a.ring;
    let mut cols: Vec<Vec<Polynomial<F>>> = Vec::with_capacity(a.ncols() + b.ncols());
    for c in a.columns() {
        let mut v = c.clone();
        v.extend((0..b.nrows()).map(|_| ring.zero()));
        cols.push(v);
    }
    for c in b.columns() {
        let mut v: Vec<Polynomial<F>> = (0..a.nrows()).map(|_| ring.zero()).collect();
        v.extend(c.iter().cloned());
        cols.push(v);
    }
    ModuleMap::from_columns(ring, a.target.direct_sum(&b.target), a.source.direct_sum(&b.source), cols)
}

impl<F: Field> ModulePresentation<F> {
    pub fn direct_sum(&self, other: &Self) -> Self {
        ModulePresentation { relations: block_sum(&self.relations, &other.relations) }
    }

    /// `k` copies of `self`.
    pub fn power(&self, k: usize) -> Self {
        let mut out = ModulePresentation::free(self.ring(), Vec::new());
        for _ in 0..k {
            out = out.direct_sum(self);
        }
        out
    }

    /// `M(-by)`: every generator moves up by `by`.
    pub fn shift(&self, by: i32) -> Self {
        let r = &self.relations;
        ModulePresentation {
            relations: ModuleMap::from_columns(&r.ring, r.target.shift(by), r.source.shift(by), r.columns().to_vec()),
        }
    }

    /// Equivalent presentation with no constant entries and a minimal set
    /// of relations.
    pub fn minimal(&self) -> Result<Self> {
        let ring = self.ring().clone();
        let f = &ring.field;
        let mut tw = self.generators().twists.clone();
        let mut cols: Vec<Vec<Polynomial<F>>> = self.relations.columns().to_vec();
        let mut ctw = self.relations.source.twists.clone();
        loop {
            let mut hit = None;
            'search: for (j, c) in cols.iter().enumerate() {
                for (i, e) in c.iter().enumerate() {
                    if !e.is_zero() && e.degree() == Some(0) {
                        hit = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = hit else { break };
            let pivot = cols.swap_remove(j);
            ctw.swap_remove(j);
            let inv = f.inv(&pivot[i].terms()[0].1).expect("nonzero constant");
            for c in cols.iter_mut() {
                if c[i].is_zero() {
                    continue;
                }
                let factor = c[i].scale(&inv);
                for (k, e) in c.iter_mut().enumerate() {
                    if !pivot[k].is_zero() {
                        *e = e.sub(&pivot[k].mul(&factor));
                    }
                }
            }
            for c in cols.iter_mut() {
                c.remove(i);
            }
            tw.remove(i);
        }
        let target = GradedFreeModule::new(tw);
        let keep_nonzero: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].iter().any(|e| !e.is_zero())).collect();
        let cols: Vec<Vec<Polynomial<F>>> = keep_nonzero.iter().map(|&j| cols[j].clone()).collect();
        let ctw: Vec<i32> = keep_nonzero.iter().map(|&j| ctw[j]).collect();
        let m = ModuleMap::from_columns(&ring, target.clone(), GradedFreeModule::new(ctw), cols);
        if m.ncols() == 0 {
            return Ok(ModulePresentation { relations: m });
        }
        let order = target.default_order(ring.vars);
        let keep = minimal_generators(&ring, &order, &m.column_svecs(&order))?;
        Ok(ModulePresentation { relations: m.select_columns(&keep) })
    }
}

/// Kernel of the map `coker(a) -> coker(b)` induced by `f: A0 -> B0`.
pub fn kernel_presentation<F: Field>(
    a: &ModulePresentation<F>,
    f: &ModuleMap<F>,
    b: &ModulePresentation<F>,
) -> Result<ModulePresentation<F>> {
    let n0 = a.generators().rank();
    let lifted = syzygies(&f.concat(&b.relations), SyzygyOptions::default())?;
    let rows: Vec<usize> = (0..n0).collect();
    let p = drop_zero_columns(&lifted.select_rows(&rows));
    let k = p.ncols();
    let rel = syzygies(&p.concat(&a.relations), SyzygyOptions::default())?;
    let rel = rel.select_rows(&(0..k).collect::<Vec<_>>());
    let rel = drop_zero_columns(&rel);
    ModulePresentation { relations: rel }.minimal()
}

fn drop_zero_columns<F: Field>(m: &ModuleMap<F>) -> ModuleMap<F> {
    let keep: Vec<usize> = (0..m.ncols()).filter(|&j| m.column(j).iter().any(|e| !e.is_zero())).collect();
    m.select_columns(&keep)
}

/// `coker(b) / image`, for a map into the generators of `b`.
pub fn cokernel_presentation<F: Field>(b: &ModulePresentation<F>, image: &ModuleMap<F>) -> ModulePresentation<F> {
    ModulePresentation { relations: b.relations.concat(image) }
}

/// Koszul differential `Λ^k R^n(-k) -> Λ^{k-1} R^n(-k+1)` on the standard
/// basis, subsets in lexicographic order.
pub fn koszul_map<F: Field>(ring: &Ring<F>, k: usize) -> ModuleMap<F> {
    let n = ring.nvars();
    let src = crate::ideal::subsets(n, k);
    let tgt = crate::ideal::subsets(n, k - 1);
    let cols = src
        .iter()
        .map(|s| {
            let mut col: Vec<Polynomial<F>> = (0..tgt.len()).map(|_| ring.zero()).collect();
            for (pos, &v) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != v).collect();
                let row = tgt.iter().position(|t| *t == rest).unwrap();
                let x = ring.var(v);
                col[row] = if pos % 2 == 0 { x } else { x.neg() };
            }
            col
        })
        .collect();
    ModuleMap::from_columns(
        ring,
        GradedFreeModule::uniform(tgt.len(), k as i32 - 1),
        GradedFreeModule::uniform(src.len(), k as i32),
        cols,
    )
}
