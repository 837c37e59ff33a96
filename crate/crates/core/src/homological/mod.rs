//! Finitely presented graded modules, resolutions, Betti tables, Hilbert
//! data and degree-zero homomorphisms.

pub mod hilbert;
mod hom;
mod ops;
mod resolution;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use hilbert::{HilbertPolynomial, HilbertSeries, LaurentPoly};
pub use hom::{hom_degree_zero, hom_into_free, HomSpace};
pub use ops::{block_sum, cokernel_presentation, kernel_presentation, koszul_map};
pub use resolution::{betti_table, free_resolution, is_complex, Resolution};

use crate::error::Result;
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::module::{GradedFreeModule, ModuleMap};
use crate::poly::{Polynomial, Ring};

/// `coker(relations: F1 -> F0)` with `F0` the generator module.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation<F: Field> {
    pub relations: ModuleMap<F>,
}

impl<F: Field> ModulePresentation<F> {
    pub fn cokernel(relations: ModuleMap<F>) -> Self {
        ModulePresentation { relations }
    }

    /// The free module itself.
    pub fn free(ring: &Ring<F>, twists: Vec<i32>) -> Self {
        let g = GradedFreeModule::new(twists);
        ModulePresentation { relations: ModuleMap::zero(ring, g, GradedFreeModule::default()) }
    }

    /// `R / I`.
    pub fn quotient_ring(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Self {
        let twists = gens.iter().map(|g| g.degree().unwrap_or(0) as i32).collect();
        ModulePresentation {
            relations: ModuleMap::from_rows(ring, GradedFreeModule::uniform(1, 0), GradedFreeModule::new(twists), alloc::vec![gens.to_vec()]),
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.relations.ring
    }

    pub fn generators(&self) -> &GradedFreeModule {
        &self.relations.target
    }

    /// Gröbner basis of the relation submodule.
    pub fn relation_basis(&self) -> Result<GroebnerBasis<F>> {
        GroebnerBasis::of_columns(&self.relations)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let gb = self.relation_basis()?;
        let leads: Vec<_> = gb.leads().map(|t| (t.mono, t.comp)).collect();
        Ok(HilbertSeries::of_lead_terms(&self.ring().vars, &self.generators().twists, &leads))
    }

    /// Hilbert function on `window` and the Hilbert polynomial.
    pub fn hilbert(&self, window: core::ops::RangeInclusive<i32>) -> Result<HilbertData> {
        let hs = self.hilbert_series()?;
        Ok(HilbertData {
            function: window.map(|d| (d, hs.function(d))).collect(),
            polynomial: hs.polynomial(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub function: Vec<(i32, i64)>,
    pub polynomial: HilbertPolynomial,
}

impl HilbertData {
    /// Nonzero values of the function, in degree order.
    pub fn nonzero_values(&self) -> Vec<i64> {
        self.function.iter().map(|x| x.1).filter(|&v| v != 0).collect()
    }
}

/// Graded Betti numbers `β_{i,j}`: `i` homological index, `j` internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn from_twists(levels: &[Vec<i32>]) -> Self {
        let mut t = BettiTable::default();
        for (i, tw) in levels.iter().enumerate() {
            for &j in tw {
                *t.entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        t
    }

    /// Build from `(i, j, β_ij)` triples.
    pub fn from_entries(e: &[(usize, i32, usize)]) -> Self {
        let mut t = BettiTable::default();
        for &(i, j, b) in e {
            if b > 0 {
                *t.entries.entry((i, j)).or_insert(0) += b;
            }
        }
        t
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, usize)> + '_ {
        self.entries.iter().map(|(k, v)| (k.0, k.1, *v))
    }

    /// Twists `j` of homological degree `i`, with multiplicity.
    pub fn twists(&self, i: usize) -> Vec<(i32, usize)> {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(k, v)| (k.1, *v)).collect()
    }

    /// Hilbert series numerator `Σ (-1)^i β_ij t^j`.
    pub fn numerator(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::default();
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&LaurentPoly::monomial(j, s * b as i64));
        }
        acc
    }

    /// One-line form `1@0 | 3@5 12@6 | 30@7`, listing `β_ij@j` per `i`.
    pub fn compact(&self) -> String {
        (0..=self.length())
            .map(|i| self.twists(i).iter().map(|(j, b)| alloc::format!("{b}@{j}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Rows indexed by `j - i`, columns by `i` (the usual diagonal layout).
    pub fn diagonal_rows(&self) -> Vec<(i32, Vec<usize>)> {
        if self.entries.is_empty() {
            return Vec::new();
        }
        let len = self.length();
        let lo = self.entries.keys().map(|k| k.1 - k.0 as i32).min().unwrap();
        let hi = self.entries.keys().map(|k| k.1 - k.0 as i32).max().unwrap();
        (lo..=hi).map(|r| (r, (0..=len).map(|i| self.get(i, r + i as i32)).collect())).collect()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.length();
        let cell = |n: usize| if n == 0 { String::from(".") } else { alloc::format!("{n}") };
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut header = alloc::vec![String::new()];
        header.extend((0..=len).map(|i| alloc::format!("{i}")));
        lines.push(header);
        let mut total = alloc::vec![String::from("total:")];
        total.extend((0..=len).map(|i| alloc::format!("{}", self.total(i))));
        lines.push(total);
        for (r, row) in self.diagonal_rows() {
            let mut l = alloc::vec![alloc::format!("{r}:")];
            l.extend(row.into_iter().map(cell));
            lines.push(l);
        }
        let width = lines.iter().flat_map(|l| l.iter().skip(1)).map(|s| s.len()).max().unwrap_or(1);
        let first = lines.iter().map(|l| l[0].len()).max().unwrap_or(0);
        for (k, l) in lines.iter().enumerate() {
            write!(f, "{:>first$}", l[0])?;
            for c in &l[1..] {
                write!(f, " {c:>width$}")?;
            }
            if k + 1 < lines.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
