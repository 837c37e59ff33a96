//! Monomial orders on a polynomial ring and term orders on graded free modules.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::mono::{Mono, Vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, x0 > x1 > ... > x_{n-1}.
    Grevlex,
    /// Pure lexicographic, x0 > x1 > ...
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on
    /// x0..x_{k-1}, ties broken by grevlex on the remaining variables.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, vars: &Vars, a: Mono, b: Mono) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.grevlex_cmp(b),
            MonomialOrder::Lex => a.lex_cmp(b),
            MonomialOrder::Elimination(k) => {
                let n = vars.len();
                let da = vars.partial_degree(a, 0..k);
                let db = vars.partial_degree(b, 0..k);
                da.cmp(&db)
                    .then_with(|| revlex_block(b, a, 0..k))
                    .then_with(|| {
                        vars.partial_degree(a, k..n).cmp(&vars.partial_degree(b, k..n))
                    })
                    .then_with(|| revlex_block(b, a, k..n))
            }
        }
    }

    /// Whether the order refines the (weighted) degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

// Compares the packed bytes of the block as one integer: highest variable
// most significant, so callers pass (b, a) to get reverse lex.
fn revlex_block(x: Mono, y: Mono, range: core::ops::Range<usize>) -> Ordering {
    if range.is_empty() {
        return Ordering::Equal;
    }
    let lo = 8 * range.start;
    let hi = 8 * range.end;
    let mask: u128 = if hi >= 128 { !0u128 << lo } else { ((1u128 << hi) - 1) & (!0u128 << lo) };
    (x.bits() & mask).cmp(&(y.bits() & mask))
}

/// A term of a free module: monomial times basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub mono: Mono,
    pub comp: u32,
}

/// Key attached to a generator of a Schreyer-ordered module: its leading term
/// pushed down to the base module and the index path used for tie-breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerKey {
    pub mono: Mono,
    pub comp: u32,
    pub path: Vec<u32>,
}

#[derive(Clone, Debug)]
enum Kind {
    TermOverPosition,
    PositionOverTerm,
    Schreyer { base: Arc<TermOrder>, keys: Arc<[SchreyerKey]> },
}

/// Order on the terms of a graded free module `⊕ R(-e_i)`.
///
/// Generator degrees are stored here because the term-over-position order
/// compares total degrees `deg m + e_i` before monomials.
#[derive(Clone, Debug)]
pub struct TermOrder {
    vars: Vars,
    mono: MonomialOrder,
    twists: Arc<[i32]>,
    kind: Kind,
}

impl TermOrder {
    pub fn top(vars: Vars, mono: MonomialOrder, twists: &[i32]) -> Self {
        TermOrder { vars, mono, twists: twists.into(), kind: Kind::TermOverPosition }
    }

    pub fn pot(vars: Vars, mono: MonomialOrder, twists: &[i32]) -> Self {
        TermOrder { vars, mono, twists: twists.into(), kind: Kind::PositionOverTerm }
    }

    /// Rank-one order for ideals.
    pub fn ideal(vars: Vars, mono: MonomialOrder) -> Self {
        Self::top(vars, mono, &[0])
    }

    /// Schreyer order induced on a module whose generator `i` maps to a
    /// vector with leading term `keys[i]` (expressed in `base`'s base module).
    pub fn schreyer(base: Arc<TermOrder>, keys: Vec<SchreyerKey>, twists: &[i32]) -> Self {
        debug_assert_eq!(keys.len(), twists.len());
        TermOrder {
            vars: base.vars,
            mono: base.mono,
            twists: twists.into(),
            kind: Kind::Schreyer { base, keys: keys.into() },
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.mono
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_schreyer(&self) -> bool {
        matches!(self.kind, Kind::Schreyer { .. })
    }

    /// Total degree of a term.
    #[inline]
    pub fn degree(&self, t: ModTerm) -> i32 {
        t.mono.deg() as i32 + self.twists[t.comp as usize]
    }

    /// The same kind of order with different generator degrees.
    pub fn with_twists(&self, twists: &[i32]) -> Self {
        let mut o = self.clone();
        o.twists = twists.into();
        if let Kind::Schreyer { .. } = o.kind {
            panic!("cannot retwist a Schreyer order");
        }
        o
    }

    /// Root (non-Schreyer) order and the key of a term in it.
    fn flatten(&self, t: ModTerm) -> (ModTerm, Option<&[u32]>) {
        match &self.kind {
            Kind::Schreyer { keys, .. } => {
                let k = &keys[t.comp as usize];
                (ModTerm { mono: t.mono.mul(k.mono), comp: k.comp }, Some(&k.path))
            }
            _ => (t, None),
        }
    }

    #[inline]
    pub fn cmp(&self, a: ModTerm, b: ModTerm) -> Ordering {
        match &self.kind {
            Kind::TermOverPosition => {
                let da = self.degree(a);
                let db = self.degree(b);
                da.cmp(&db)
                    .then_with(|| self.mono.cmp(&self.vars, a.mono, b.mono))
                    .then_with(|| b.comp.cmp(&a.comp))
            }
            Kind::PositionOverTerm => b
                .comp
                .cmp(&a.comp)
                .then_with(|| self.mono.cmp(&self.vars, a.mono, b.mono)),
            Kind::Schreyer { base, .. } => {
                // same key on both sides: multiplicativity reduces to monomials
                if a.comp == b.comp {
                    return self.mono.cmp(&self.vars, a.mono, b.mono);
                }
                let (fa, pa) = self.flatten(a);
                let (fb, pb) = self.flatten(b);
                base.cmp(fa, fb).then_with(|| pa.cmp(&pb))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elimination_order_eliminates() {
        let v = Vars::new(3);
        let o = MonomialOrder::Elimination(1);
        // anything with x0 beats anything without
        assert_eq!(o.cmp(&v, v.mono(&[1, 0, 0]), v.mono(&[0, 5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&v, v.mono(&[0, 1, 0]), v.mono(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn top_compares_total_degree_first() {
        let v = Vars::new(2);
        let o = TermOrder::top(v, MonomialOrder::Grevlex, &[0, 2]);
        let a = ModTerm { mono: v.mono(&[3, 0]), comp: 0 };
        let b = ModTerm { mono: v.mono(&[0, 2]), comp: 1 };
        // degrees 3 vs 4
        assert_eq!(o.cmp(a, b), Ordering::Less);
    }
}
