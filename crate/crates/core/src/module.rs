//! Graded free modules and homogeneous maps between them.

use alloc::vec::Vec;

use crate::field::Field;
use crate::mono::Mono;
use crate::order::{ModTerm, MonomialOrder, TermOrder};
use crate::poly::{Polynomial, Ring};

/// Sparse module element: terms sorted descending in some [`TermOrder`].
pub type SVec<E> = Vec<(ModTerm, E)>;

/// `⊕ R(-e_i)`, stored as the generator degrees `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        GradedFreeModule { twists }
    }

    /// `count` copies of `R(-deg)`.
    pub fn uniform(count: usize, deg: i32) -> Self {
        GradedFreeModule { twists: alloc::vec![deg; count] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut t = self.twists.clone();
        t.extend_from_slice(&other.twists);
        GradedFreeModule { twists: t }
    }

    pub fn shift(&self, by: i32) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|e| e + by).collect() }
    }

    /// Term-over-position grevlex order on this module.
    pub fn default_order(&self, vars: crate::mono::Vars) -> TermOrder {
        TermOrder::top(vars, MonomialOrder::Grevlex, &self.twists)
    }
}

/// A place where a matrix entry breaks the degree contract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub row: usize,
    pub col: usize,
    pub expected: i32,
    /// Degrees present in the entry (several if it is not homogeneous).
    pub found: Vec<u32>,
}

/// A homogeneous map `source -> target`; column `j` is the image of source
/// generator `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap<F: Field> {
    pub ring: Ring<F>,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    cols: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn from_columns(
        ring: &Ring<F>,
        target: GradedFreeModule,
        source: GradedFreeModule,
        cols: Vec<Vec<Polynomial<F>>>,
    ) -> Self {
        assert_eq!(cols.len(), source.rank(), "one column per source generator");
        for c in &cols {
            assert_eq!(c.len(), target.rank(), "column length must match target rank");
        }
        ModuleMap { ring: ring.clone(), source, target, cols }
    }

    /// Row-major constructor: `rows[i][j]` is entry `(i, j)`.
    pub fn from_rows(ring: &Ring<F>, target: GradedFreeModule, source: GradedFreeModule, rows: Vec<Vec<Polynomial<F>>>) -> Self {
        let ncols = source.rank();
        let mut cols: Vec<Vec<Polynomial<F>>> = (0..ncols).map(|_| Vec::with_capacity(rows.len())).collect();
        for row in rows {
            assert_eq!(row.len(), ncols);
            for (j, p) in row.into_iter().enumerate() {
                cols[j].push(p);
            }
        }
        Self::from_columns(ring, target, source, cols)
    }

    /// Map whose source twists are read off from homogeneous columns.
    pub fn from_columns_infer(ring: &Ring<F>, target: GradedFreeModule, cols: Vec<Vec<Polynomial<F>>>) -> Self {
        let twists = cols.iter().map(|c| column_degree(&target, c).unwrap_or(0)).collect();
        Self::from_columns(ring, target, GradedFreeModule::new(twists), cols)
    }

    pub fn zero(ring: &Ring<F>, target: GradedFreeModule, source: GradedFreeModule) -> Self {
        let cols = (0..source.rank()).map(|_| (0..target.rank()).map(|_| ring.zero()).collect()).collect();
        ModuleMap { ring: ring.clone(), source, target, cols }
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial<F>] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial<F>>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial<F>>> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        assert_eq!(self.ncols(), other.nrows(), "incompatible shapes");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        ModuleMap { ring: self.ring.clone(), source: other.source.clone(), target: self.target.clone(), cols }
    }

    /// Image of a vector of the source.
    pub fn apply(&self, v: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let mut out: Vec<Polynomial<F>> = (0..self.nrows()).map(|_| self.ring.zero()).collect();
        for (j, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i, e) in self.cols[j].iter().enumerate() {
                if !e.is_zero() {
                    out[i] = out[i].add(&e.mul(a));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ModuleMap<F> {
        let rows: Vec<Vec<Polynomial<F>>> = self.cols.clone();
        ModuleMap::from_columns(
            &self.ring,
            GradedFreeModule::new(self.source.twists.iter().map(|e| -e).collect()),
            GradedFreeModule::new(self.target.twists.iter().map(|e| -e).collect()),
            (0..self.nrows()).map(|i| rows.iter().map(|c| c[i].clone()).collect()).collect(),
        )
    }

    /// Columns `[self | other]` over a common target.
    pub fn concat(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        assert_eq!(self.target, other.target, "targets differ");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        ModuleMap::from_columns(&self.ring, self.target.clone(), self.source.direct_sum(&other.source), cols)
    }

    pub fn select_columns(&self, idx: &[usize]) -> ModuleMap<F> {
        let cols = idx.iter().map(|&j| self.cols[j].clone()).collect();
        let src = GradedFreeModule::new(idx.iter().map(|&j| self.source.twists[j]).collect());
        ModuleMap::from_columns(&self.ring, self.target.clone(), src, cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> ModuleMap<F> {
        let cols = self.cols.iter().map(|c| idx.iter().map(|&i| c[i].clone()).collect()).collect();
        let tgt = GradedFreeModule::new(idx.iter().map(|&i| self.target.twists[i]).collect());
        ModuleMap::from_columns(&self.ring, tgt, self.source.clone(), cols)
    }

    /// Column `j` as a sparse vector sorted in `order`.
    pub fn column_svec(&self, j: usize, order: &TermOrder) -> SVec<F::Elem> {
        to_svec(&self.cols[j], order)
    }

    /// All columns as sparse vectors in the target's default order.
    pub fn column_svecs(&self, order: &TermOrder) -> Vec<SVec<F::Elem>> {
        (0..self.ncols()).map(|j| self.column_svec(j, order)).collect()
    }
}

/// Degree of a homogeneous column (generator degree it comes from).
pub fn column_degree<F: Field>(target: &GradedFreeModule, col: &[Polynomial<F>]) -> Option<i32> {
    col.iter()
        .enumerate()
        .find(|(_, p)| !p.is_zero())
        .and_then(|(i, p)| p.degree().map(|d| d as i32 + target.twists[i]))
}

/// Every entry breaking `deg a_ij = e_j - f_i`.
pub fn check_graded_map<F: Field>(m: &ModuleMap<F>) -> Vec<Violation> {
    let mut out = Vec::new();
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            let p = m.entry(i, j);
            if p.is_zero() {
                continue;
            }
            let expected = m.source.twists[j] - m.target.twists[i];
            let mut degs: Vec<u32> = p.terms().iter().map(|t| t.0.deg()).collect();
            degs.sort_unstable();
            degs.dedup();
            if degs.len() != 1 || degs[0] as i32 != expected {
                out.push(Violation { row: i, col: j, expected, found: degs });
            }
        }
    }
    out
}

pub fn to_svec<F: Field>(col: &[Polynomial<F>], order: &TermOrder) -> SVec<F::Elem> {
    let mut v: SVec<F::Elem> = Vec::new();
    for (i, p) in col.iter().enumerate() {
        for (m, c) in p.terms() {
            v.push((ModTerm { mono: *m, comp: i as u32 }, c.clone()));
        }
    }
    v.sort_by(|a, b| order.cmp(b.0, a.0));
    v
}

pub fn from_svec<F: Field>(ring: &Ring<F>, rank: usize, v: &[(ModTerm, F::Elem)]) -> Vec<Polynomial<F>> {
    let mut parts: Vec<Vec<(Mono, F::Elem)>> = (0..rank).map(|_| Vec::new()).collect();
    for (t, c) in v {
        parts[t.comp as usize].push((t.mono, c.clone()));
    }
    parts.into_iter().map(|terms| Polynomial::from_terms(ring, terms)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn degree_contract() {
        let r = Ring::new(PrimeField::default(), 5);
        let z = ModuleMap::zero(&r, GradedFreeModule::uniform(2, 0), GradedFreeModule::uniform(3, 4));
        assert!(check_graded_map(&z).is_empty());
        let bad = ModuleMap::from_rows(
            &r,
            GradedFreeModule::uniform(1, 0),
            GradedFreeModule::uniform(1, 1),
            alloc::vec![alloc::vec![r.parse("x0^2").unwrap()]],
        );
        let v = check_graded_map(&bad);
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].row, v[0].col, v[0].expected), (0, 0, 1));
    }
}
