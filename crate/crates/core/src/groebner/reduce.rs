//! Polynomial-vector accumulation and reduction.

use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;

use crate::field::Field;
use crate::module::SVec;
use crate::mono::Mono;
use crate::order::{ModTerm, TermOrder};

/// A vector under construction: coefficients in a hash map, pending terms in
/// a max-heap ordered by the term order. Heap entries may be stale.
pub(crate) struct Accum<'a, F: Field> {
    field: &'a F,
    order: &'a TermOrder,
    heap: Vec<ModTerm>,
    map: HashMap<ModTerm, F::Elem>,
}

impl<'a, F: Field> Accum<'a, F> {
    pub fn new(field: &'a F, order: &'a TermOrder) -> Self {
        Accum { field, order, heap: Vec::new(), map: HashMap::new() }
    }

    pub fn from_vec(field: &'a F, order: &'a TermOrder, v: SVec<F::Elem>) -> Self {
        let mut a = Self::new(field, order);
        // a descending list is already a valid max-heap
        a.heap.reserve(v.len());
        for (t, c) in v {
            a.heap.push(t);
            a.map.insert(t, c);
        }
        a
    }

    /// `self += c * m * v`.
    pub fn add_scaled(&mut self, c: &F::Elem, m: Mono, v: &[(ModTerm, F::Elem)]) {
        let f = self.field;
        for (t, a) in v {
            let key = ModTerm { mono: t.mono.mul(m), comp: t.comp };
            let prod = f.mul(c, a);
            match self.map.get_mut(&key) {
                Some(x) => {
                    *x = f.add(x, &prod);
                    if f.is_zero(x) {
                        self.map.remove(&key);
                    }
                }
                None => {
                    self.map.insert(key, prod);
                    self.push(key);
                }
            }
        }
    }

    fn push(&mut self, t: ModTerm) {
        let o = self.order;
        let h = &mut self.heap;
        h.push(t);
        let mut i = h.len() - 1;
        while i > 0 {
            let p = (i - 1) / 2;
            if o.cmp(h[i], h[p]) == Ordering::Greater {
                h.swap(i, p);
                i = p;
            } else {
                break;
            }
        }
    }

    fn pop_heap(&mut self) -> Option<ModTerm> {
        let o = self.order;
        let h = &mut self.heap;
        let n = h.len();
        if n == 0 {
            return None;
        }
        h.swap(0, n - 1);
        let top = h.pop();
        let n = h.len();
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let mut c = l;
            if r < n && o.cmp(h[r], h[l]) == Ordering::Greater {
                c = r;
            }
            if o.cmp(h[c], h[i]) == Ordering::Greater {
                h.swap(c, i);
                i = c;
            } else {
                break;
            }
        }
        top
    }

    /// Remove and return the largest surviving term.
    pub fn pop_max(&mut self) -> Option<(ModTerm, F::Elem)> {
        while let Some(t) = self.pop_heap() {
            // drop duplicates of the same key that are still in the heap
            if let Some(c) = self.map.remove(&t) {
                return Some((t, c));
            }
        }
        None
    }

    pub fn into_sorted(mut self) -> SVec<F::Elem> {
        let mut out = Vec::with_capacity(self.map.len());
        while let Some(x) = self.pop_max() {
            out.push(x);
        }
        out
    }
}

/// Unordered accumulator used for cofactor tags.
pub(crate) struct TagAccum<'a, F: Field> {
    field: &'a F,
    map: HashMap<ModTerm, F::Elem>,
}

impl<'a, F: Field> TagAccum<'a, F> {
    pub fn new(field: &'a F, init: &[(ModTerm, F::Elem)]) -> Self {
        TagAccum { field, map: init.iter().cloned().collect() }
    }

    pub fn add_scaled(&mut self, c: &F::Elem, m: Mono, v: &[(ModTerm, F::Elem)]) {
        let f = self.field;
        for (t, a) in v {
            let key = ModTerm { mono: t.mono.mul(m), comp: t.comp };
            let prod = f.mul(c, a);
            let e = self.map.entry(key).or_insert_with(|| f.zero());
            *e = f.add(e, &prod);
        }
    }

    pub fn add_term(&mut self, t: ModTerm, c: F::Elem) {
        let f = self.field;
        let e = self.map.entry(t).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
    }

    pub fn finish(self, order: &TermOrder) -> SVec<F::Elem> {
        let f = self.field;
        let mut v: SVec<F::Elem> = self.map.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }
}

/// Lead terms indexed by component for divisor search.
#[derive(Clone, Debug, Default)]
pub(crate) struct LeadIndex {
    by_comp: Vec<Vec<(Mono, u32)>>,
}

impl LeadIndex {
    pub fn insert(&mut self, t: ModTerm, idx: usize) {
        let c = t.comp as usize;
        if self.by_comp.len() <= c {
            self.by_comp.resize_with(c + 1, Vec::new);
        }
        self.by_comp[c].push((t.mono, idx as u32));
    }

    #[inline]
    pub fn find(&self, t: ModTerm) -> Option<usize> {
        self.by_comp
            .get(t.comp as usize)?
            .iter()
            .find(|(m, _)| m.divides(t.mono))
            .map(|&(_, i)| i as usize)
    }
}

/// Outcome of reducing one vector.
pub(crate) struct Reduced<E> {
    pub rem: SVec<E>,
    pub tag: Option<SVec<E>>,
}

/// Reduce `v` modulo the monic vectors `elems` (leads indexed in `index`).
/// With `full`, every term is reduced, otherwise only the lead. When `tags`
/// is present the returned tag satisfies `tag(v) - Σ q_i tag_i`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn reduce<F: Field>(
    field: &F,
    order: &TermOrder,
    index: &LeadIndex,
    elems: &[SVec<F::Elem>],
    tags: Option<(&[SVec<F::Elem>], &TermOrder)>,
    v: SVec<F::Elem>,
    vtag: Option<&SVec<F::Elem>>,
    full: bool,
) -> Reduced<F::Elem> {
    let mut acc = Accum::from_vec(field, order, v);
    let mut tacc = tags.map(|_| TagAccum::new(field, vtag.map_or(&[][..], |t| &t[..])));
    let mut rem: SVec<F::Elem> = Vec::new();
    loop {
        let Some((t, c)) = acc.pop_max() else { break };
        match index.find(t) {
            Some(i) => {
                let g = &elems[i];
                let m = g[0].0.mono.quotient_of(t.mono);
                let q = field.neg(&c);
                acc.add_scaled(&q, m, &g[1..]);
                if let (Some(ta), Some((ts, _))) = (tacc.as_mut(), tags) {
                    ta.add_scaled(&q, m, &ts[i]);
                }
            }
            None => {
                rem.push((t, c));
                if !full {
                    rem.extend(acc.into_sorted());
                    break;
                }
            }
        }
    }
    Reduced { rem, tag: tacc.map(|t| t.finish(tags.unwrap().1)) }
}
