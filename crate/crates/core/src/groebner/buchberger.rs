//! Homogeneous Buchberger algorithm, completed degree by degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::reduce::{reduce, LeadIndex};
use crate::field::Field;
use crate::module::SVec;
use crate::mono::Mono;
use crate::order::{ModTerm, TermOrder};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: u32,
    j: u32,
    lcm: Mono,
    comp: u32,
}

/// Knobs for [`run`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GbOptions {
    /// Track cofactors with respect to the inputs and collect syzygies.
    pub track: bool,
    /// Stop after completing this degree.
    pub max_degree: Option<i32>,
}

pub(crate) struct Run<E> {
    pub elems: Vec<SVec<E>>,
    pub index: LeadIndex,
    pub tags: Vec<SVec<E>>,
    /// Input positions that survived reduction (a minimal generating set).
    pub mingens: Vec<usize>,
    pub syzygies: Vec<SVec<E>>,
    pub tag_order: TermOrder,
    pub complete: bool,
}

pub(crate) fn degree_of<E>(order: &TermOrder, v: &SVec<E>) -> Option<i32> {
    v.first().map(|t| order.degree(t.0))
}

pub(crate) fn run<F: Field>(field: &F, order: &TermOrder, gens: &[SVec<F::Elem>], opts: GbOptions) -> Run<F::Elem> {
    let input_degs: Vec<i32> = gens.iter().map(|g| degree_of(order, g).unwrap_or(0)).collect();
    let tag_order = TermOrder::top(*order.vars(), order.monomial_order(), &input_degs);
    let rank1 = order.rank() == 1;
    let mut st = State {
        field,
        order,
        tag_order: &tag_order,
        track: opts.track,
        product_criterion: rank1 && !opts.track,
        elems: Vec::new(),
        tags: Vec::new(),
        index: LeadIndex::default(),
        pairs: BTreeMap::new(),
        syz: Vec::new(),
    };

    let mut pending: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (l, g) in gens.iter().enumerate() {
        if g.is_empty() {
            if opts.track {
                st.syz.push(alloc::vec![(ModTerm { mono: Mono::ONE, comp: l as u32 }, field.one())]);
            }
            continue;
        }
        pending.entry(input_degs[l]).or_default().push(l);
    }

    let mut mingens = Vec::new();
    let mut complete = true;
    loop {
        let next_pair = st.pairs.keys().next().copied();
        let next_input = pending.keys().next().copied();
        let d = match (next_pair, next_input) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.max_degree.is_some_and(|m| d > m) {
            complete = false;
            break;
        }
        let block_start = st.elems.len();
        while let Some(p) = st.pop_pair(d) {
            let (gi, gj) = (&st.elems[p.i as usize], &st.elems[p.j as usize]);
            let mi = gi[0].0.mono.quotient_of(p.lcm);
            let mj = gj[0].0.mono.quotient_of(p.lcm);
            let spoly = st.combine(mi, p.i as usize, mj, p.j as usize, false);
            let stag = st.track.then(|| st.combine(mi, p.i as usize, mj, p.j as usize, true));
            st.process(spoly, stag);
        }
        if let Some(ls) = pending.remove(&d) {
            for l in ls {
                let tag = alloc::vec![(ModTerm { mono: Mono::ONE, comp: l as u32 }, field.one())];
                if st.process(gens[l].clone(), st.track.then_some(tag)) {
                    mingens.push(l);
                }
            }
        }
        st.interreduce_block(block_start);
    }

    Run {
        elems: st.elems,
        index: st.index,
        tags: st.tags,
        mingens,
        syzygies: st.syz,
        tag_order,
        complete,
    }
}

struct State<'a, F: Field> {
    field: &'a F,
    order: &'a TermOrder,
    tag_order: &'a TermOrder,
    track: bool,
    product_criterion: bool,
    elems: Vec<SVec<F::Elem>>,
    tags: Vec<SVec<F::Elem>>,
    index: LeadIndex,
    pairs: BTreeMap<i32, Vec<Pair>>,
    syz: Vec<SVec<F::Elem>>,
}

impl<F: Field> State<'_, F> {
    fn pop_pair(&mut self, d: i32) -> Option<Pair> {
        let v = self.pairs.get_mut(&d)?;
        let p = v.pop();
        if v.is_empty() {
            self.pairs.remove(&d);
        }
        p
    }

    /// `mi * v_i - mj * v_j` over elements or over their tags.
    fn combine(&self, mi: Mono, i: usize, mj: Mono, j: usize, tags: bool) -> SVec<F::Elem> {
        let (src, order) = if tags { (&self.tags, self.tag_order) } else { (&self.elems, self.order) };
        let f = self.field;
        let mut acc = super::reduce::Accum::new(f, order);
        acc.add_scaled(&f.one(), mi, &src[i]);
        acc.add_scaled(&f.neg(&f.one()), mj, &src[j]);
        acc.into_sorted()
    }

    /// Reduce and insert; returns whether a new element was created.
    fn process(&mut self, v: SVec<F::Elem>, tag: Option<SVec<F::Elem>>) -> bool {
        let tags = self.track.then(|| (&self.tags[..], self.tag_order));
        let r = reduce(self.field, self.order, &self.index, &self.elems, tags, v, tag.as_ref(), true);
        if r.rem.is_empty() {
            if let Some(t) = r.tag {
                if !t.is_empty() {
                    self.syz.push(t);
                }
            }
            return false;
        }
        self.insert(r.rem, r.tag);
        true
    }

    fn insert(&mut self, mut v: SVec<F::Elem>, tag: Option<SVec<F::Elem>>) {
        let f = self.field;
        let inv = f.inv(&v[0].1).expect("nonzero lead");
        for t in v.iter_mut() {
            t.1 = f.mul(&t.1, &inv);
        }
        if let Some(mut t) = tag {
            for x in t.iter_mut() {
                x.1 = f.mul(&x.1, &inv);
            }
            self.tags.push(t);
        }
        let k = self.elems.len();
        let lead = v[0].0;
        self.elems.push(v);
        self.update_pairs(k, lead);
        self.index.insert(lead, k);
    }

    fn update_pairs(&mut self, k: usize, lead: ModTerm) {
        let vars = *self.order.vars();
        let lk = lead.mono;
        // chain criterion on queued pairs
        let elems = &self.elems;
        for list in self.pairs.values_mut() {
            list.retain(|p| {
                if p.comp != lead.comp || !lk.divides(p.lcm) {
                    return true;
                }
                let li = elems[p.i as usize][0].0.mono;
                let lj = elems[p.j as usize][0].0.mono;
                vars.lcm(li, lk) == p.lcm || vars.lcm(lj, lk) == p.lcm
            });
        }
        self.pairs.retain(|_, v| !v.is_empty());

        let mut new: Vec<(Pair, bool)> = Vec::new();
        for (i, g) in self.elems[..k].iter().enumerate() {
            let li = g[0].0;
            if li.comp != lead.comp {
                continue;
            }
            let lcm = vars.lcm(li.mono, lk);
            new.push((Pair { i: i as u32, j: k as u32, lcm, comp: lead.comp }, li.mono.coprime(lk)));
        }
        // M: drop pairs whose lcm is properly divisible by another new lcm
        let lcms: Vec<Mono> = new.iter().map(|p| p.0.lcm).collect();
        new.retain(|(p, _)| !lcms.iter().any(|&m| m != p.lcm && m.divides(p.lcm)));
        // F and product criterion, per distinct lcm
        new.sort_by_key(|a| a.0.lcm);
        let mut kept: Vec<Pair> = Vec::new();
        let mut s = 0;
        while s < new.len() {
            let mut e = s;
            while e < new.len() && new[e].0.lcm == new[s].0.lcm {
                e += 1;
            }
            let any_coprime = new[s..e].iter().any(|x| x.1);
            if !(self.product_criterion && any_coprime) {
                kept.push(new[s].0);
            }
            s = e;
        }
        for p in kept {
            let d = self.order.degree(ModTerm { mono: p.lcm, comp: p.comp });
            let list = self.pairs.entry(d).or_default();
            list.push(p);
        }
        // smallest lcm is popped first
        let order = self.order;
        for list in self.pairs.values_mut() {
            list.sort_by(|a, b| {
                order.cmp(ModTerm { mono: b.lcm, comp: b.comp }, ModTerm { mono: a.lcm, comp: a.comp })
            });
        }
    }

    /// Tail-reduce the elements created in the current degree against each other.
    fn interreduce_block(&mut self, start: usize) {
        for k in start..self.elems.len() {
            let v = core::mem::take(&mut self.elems[k]);
            let lead = v[0].clone();
            let tail: SVec<F::Elem> = v[1..].to_vec();
            if tail.iter().all(|t| self.index.find(t.0).is_none()) {
                self.elems[k] = v;
                continue;
            }
            let tags = self.track.then(|| (&self.tags[..], self.tag_order));
            let tagk = self.track.then(|| self.tags[k].clone());
            // element k is absent while its tail is reduced; its lead cannot
            // divide a smaller term of the same degree
            let r = reduce(self.field, self.order, &self.index, &self.elems, tags, tail, None, true);
            let mut nv = alloc::vec![lead];
            nv.extend(r.rem);
            self.elems[k] = nv;
            if let (Some(t), Some(tk)) = (r.tag, tagk) {
                let f = self.field;
                let mut acc = super::reduce::TagAccum::new(f, &tk);
                for (term, c) in t {
                    acc.add_term(term, c);
                }
                self.tags[k] = acc.finish(self.tag_order);
            }
        }
    }
}
