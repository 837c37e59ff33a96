//! Free resolutions through Schreyer frames, minimized by pruning units.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{BettiTable, ModulePresentation};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::groebner::reduce::{Accum, LeadIndex, TagAccum};
use crate::groebner::GroebnerBasis;
use crate::linalg::{rank, Matrix};
use crate::module::{from_svec, GradedFreeModule, ModuleMap, SVec};
use crate::mono::{Mono, Vars};
use crate::order::{ModTerm, SchreyerKey, TermOrder};
use crate::poly::{Polynomial, Ring};

/// A (possibly minimal) free resolution `F_0 <- F_1 <- ... <- F_n`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    /// `maps[k]` is `d_{k+1}: F_{k+1} -> F_k`.
    pub maps: Vec<ModuleMap<F>>,
    pub betti: BettiTable,
    pub minimal: bool,
    /// False when the length cap stopped the computation.
    pub terminated: bool,
}

impl<F: Field> Resolution<F> {
    pub fn free_module(&self, k: usize) -> GradedFreeModule {
        if k == 0 {
            self.maps.first().map(|m| m.target.clone()).unwrap_or_default()
        } else {
            self.maps[k - 1].source.clone()
        }
    }
}

struct Level<E> {
    /// Columns of `d_k`, living in `F_{k-1}`.
    elems: Vec<SVec<E>>,
    twists: Vec<i32>,
    keys: Vec<SchreyerKey>,
    order: Arc<TermOrder>,
}

struct Frame<E> {
    f0: GradedFreeModule,
    levels: Vec<Level<E>>,
    terminated: bool,
}

// comp ascending, then exponents of the last variable first, descending
fn frame_sort_key(vars: &Vars, a: ModTerm, b: ModTerm) -> Ordering {
    a.comp.cmp(&b.comp).then_with(|| {
        for i in (0..vars.len()).rev() {
            match b.mono.exp(i).cmp(&a.mono.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn make_level<E>(base: &Arc<TermOrder>, prev: Option<&Level<E>>, mut elems: Vec<SVec<E>>, prev_order: &TermOrder) -> Level<E> {
    let vars = *base.vars();
    elems.sort_by(|x, y| frame_sort_key(&vars, x[0].0, y[0].0));
    let twists: Vec<i32> = elems.iter().map(|v| prev_order.degree(v[0].0)).collect();
    let keys: Vec<SchreyerKey> = elems
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let lead = v[0].0;
            match prev {
                None => SchreyerKey { mono: lead.mono, comp: lead.comp, path: alloc::vec![idx as u32] },
                Some(p) => {
                    let k = &p.keys[lead.comp as usize];
                    let mut path = k.path.clone();
                    path.push(idx as u32);
                    SchreyerKey { mono: lead.mono.mul(k.mono), comp: k.comp, path }
                }
            }
        })
        .collect();
    let order = Arc::new(TermOrder::schreyer(base.clone(), keys.clone(), &twists));
    Level { elems, twists, keys, order }
}

/// Syzygies of a Gröbner basis `lvl.elems` (in `prev_order`), expressed in
/// the Schreyer order of the level.
fn next_syzygies<F: Field>(field: &F, vars: &Vars, lvl: &Level<F::Elem>, prev_order: &TermOrder) -> Result<Vec<SVec<F::Elem>>> {
    let v = &lvl.elems;
    let mut index = LeadIndex::default();
    for (i, e) in v.iter().enumerate() {
        index.insert(e[0].0, i);
    }
    let mut out = Vec::new();
    for b in 0..v.len() {
        let lb = v[b][0].0;
        let mut cands: Vec<(Mono, usize, Mono)> = Vec::new();
        for (a, va) in v[..b].iter().enumerate() {
            let la = va[0].0;
            if la.comp != lb.comp {
                continue;
            }
            let lcm = vars.lcm(la.mono, lb.mono);
            cands.push((lb.mono.quotient_of(lcm), a, la.mono.quotient_of(lcm)));
        }
        cands.sort_by_key(|c| c.0.deg());
        let mut kept: Vec<(Mono, usize, Mono)> = Vec::new();
        for c in cands {
            if !kept.iter().any(|k| k.0.divides(c.0)) {
                kept.push(c);
            }
        }
        for (qb, a, qa) in kept {
            let one = field.one();
            let mut acc = Accum::new(field, prev_order);
            acc.add_scaled(&one, qb, &v[b]);
            acc.add_scaled(&field.neg(&one), qa, &v[a]);
            let mut tag = TagAccum::new(field, &[]);
            tag.add_term(ModTerm { mono: qb, comp: b as u32 }, one.clone());
            tag.add_term(ModTerm { mono: qa, comp: a as u32 }, field.neg(&one));
            while let Some((t, c)) = acc.pop_max() {
                let Some(i) = index.find(t) else {
                    return Err(AlgebraError::Verification {
                        stage: "schreyer frame".into(),
                        detail: "an S-pair of a Gröbner basis did not reduce to zero".into(),
                    });
                };
                let m = v[i][0].0.mono.quotient_of(t.mono);
                acc.add_scaled(&field.neg(&c), m, &v[i][1..]);
                tag.add_term(ModTerm { mono: m, comp: i as u32 }, field.neg(&c));
            }
            let sigma = tag.finish(&lvl.order);
            debug_assert_eq!(sigma[0].0, ModTerm { mono: qb, comp: b as u32 });
            out.push(sigma);
        }
    }
    Ok(out)
}

fn build_frame<F: Field>(p: &ModulePresentation<F>, length_cap: usize) -> Result<Frame<F::Elem>> {
    let ring = p.ring();
    let f0 = p.generators().clone();
    let base = Arc::new(f0.default_order(ring.vars));
    let gb = GroebnerBasis::of_columns(&p.relations)?;
    let mut levels: Vec<Level<F::Elem>> = Vec::new();
    let mut terminated = true;
    if !gb.is_empty() {
        levels.push(make_level(&base, None, gb.elements().to_vec(), &base));
        loop {
            let k = levels.len();
            let prev_order = if k == 1 { base.clone() } else { levels[k - 2].order.clone() };
            let syz = next_syzygies(&ring.field, &ring.vars, &levels[k - 1], &prev_order)?;
            if syz.is_empty() {
                break;
            }
            if k >= length_cap {
                terminated = false;
                break;
            }
            let cur_order = levels[k - 1].order.clone();
            let lvl = make_level(&base, Some(&levels[k - 1]), syz, &cur_order);
            levels.push(lvl);
        }
    }
    Ok(Frame { f0, levels, terminated })
}

fn constant_rank<F: Field>(field: &F, lvl: &Level<F::Elem>, rows_twists: &[i32], j: i32) -> usize {
    let rows: Vec<usize> = (0..rows_twists.len()).filter(|&r| rows_twists[r] == j).collect();
    let cols: Vec<usize> = (0..lvl.twists.len()).filter(|&c| lvl.twists[c] == j).collect();
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let mut m = Matrix::filled(rows.len(), cols.len(), field.zero());
    for (cj, &c) in cols.iter().enumerate() {
        for (t, a) in &lvl.elems[c] {
            if t.mono.is_one() {
                if let Some(&ri) = pos.get(&(t.comp as usize)) {
                    m.set(ri, cj, a.clone());
                }
            }
        }
    }
    rank(field, &m)
}

/// Minimal graded Betti numbers, read from a Schreyer frame through the
/// ranks of its constant parts.
pub fn betti_table<F: Field>(p: &ModulePresentation<F>) -> Result<BettiTable> {
    let frame = build_frame(p, usize::MAX)?;
    let field = &p.ring().field;
    let mut twists: Vec<&[i32]> = alloc::vec![&frame.f0.twists[..]];
    twists.extend(frame.levels.iter().map(|l| &l.twists[..]));
    let mut entries = Vec::new();
    for i in 0..twists.len() {
        let mut degs: Vec<i32> = twists[i].to_vec();
        degs.sort_unstable();
        degs.dedup();
        for j in degs {
            let n = twists[i].iter().filter(|&&e| e == j).count();
            let r_in = if i > 0 { constant_rank(field, &frame.levels[i - 1], twists[i - 1], j) } else { 0 };
            let r_out = if i + 1 < twists.len() { constant_rank(field, &frame.levels[i], twists[i], j) } else { 0 };
            entries.push((i, j, n - r_in - r_out));
        }
    }
    Ok(BettiTable::from_entries(&entries))
}

type SparseCol<F> = BTreeMap<usize, Polynomial<F>>;

/// Resolution of the presented module; with `minimize`, unit entries are
/// pruned away so the result is the minimal resolution.
pub fn free_resolution<F: Field>(p: &ModulePresentation<F>, minimize: bool, length_cap: usize) -> Result<Resolution<F>> {
    let frame = build_frame(p, length_cap)?;
    let ring = p.ring().clone();
    let mut twists: Vec<Vec<i32>> = alloc::vec![frame.f0.twists.clone()];
    twists.extend(frame.levels.iter().map(|l| l.twists.clone()));
    let mut mats: Vec<Vec<Option<SparseCol<F>>>> = frame
        .levels
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let rank = twists[k].len();
            l.elems
                .iter()
                .map(|v| {
                    let col = from_svec(&ring, rank, v);
                    Some(col.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect())
                })
                .collect()
        })
        .collect();
    let mut alive: Vec<Vec<bool>> = twists.iter().map(|t| alloc::vec![true; t.len()]).collect();
    if minimize {
        prune(&ring, &mut mats, &mut alive);
    }
    let mut maps = Vec::new();
    for (k, cols) in mats.iter().enumerate() {
        let rows: Vec<usize> = (0..alive[k].len()).filter(|&r| alive[k][r]).collect();
        let keep: Vec<usize> = (0..alive[k + 1].len()).filter(|&c| alive[k + 1][c]).collect();
        let target = GradedFreeModule::new(rows.iter().map(|&r| twists[k][r]).collect());
        let source = GradedFreeModule::new(keep.iter().map(|&c| twists[k + 1][c]).collect());
        let dense: Vec<Vec<Polynomial<F>>> = keep
            .iter()
            .map(|&c| {
                let col = cols[c].as_ref().unwrap();
                rows.iter().map(|r| col.get(r).cloned().unwrap_or_else(|| ring.zero())).collect()
            })
            .collect();
        maps.push(ModuleMap::from_columns(&ring, target, source, dense));
    }
    while maps.last().is_some_and(|m| m.ncols() == 0) {
        maps.pop();
    }
    let mut levels: Vec<Vec<i32>> = alloc::vec![(0..alive[0].len()).filter(|&r| alive[0][r]).map(|r| twists[0][r]).collect()];
    levels.extend(maps.iter().map(|m| m.source.twists.clone()));
    Ok(Resolution { betti: BettiTable::from_twists(&levels), maps, minimal: minimize, terminated: frame.terminated })
}

fn unit_entry<F: Field>(col: &SparseCol<F>) -> Option<(usize, F::Elem)> {
    col.iter().find(|(_, p)| p.len() == 1 && p.terms()[0].0.is_one()).map(|(r, p)| (*r, p.terms()[0].1.clone()))
}

fn prune<F: Field>(ring: &Ring<F>, mats: &mut [Vec<Option<SparseCol<F>>>], alive: &mut [Vec<bool>]) {
    let field = &ring.field;
    for k in 0..mats.len() {
        loop {
            let mut found = None;
            for (c, col) in mats[k].iter().enumerate() {
                if let Some(col) = col {
                    if let Some((r, u)) = unit_entry(col) {
                        found = Some((r, c, u));
                        break;
                    }
                }
            }
            let Some((r, c, u)) = found else { break };
            let pivot = mats[k][c].take().unwrap();
            let minus_inv = field.neg(&field.inv(&u).unwrap());
            for other in mats[k].iter_mut().flatten() {
                let Some(e) = other.remove(&r) else { continue };
                let factor = e.scale(&minus_inv);
                for (&rr, p) in &pivot {
                    if rr == r {
                        continue;
                    }
                    let add = p.mul(&factor);
                    let slot = other.entry(rr).or_insert_with(|| ring.zero());
                    *slot = slot.add(&add);
                    if slot.is_zero() {
                        other.remove(&rr);
                    }
                }
            }
            alive[k + 1][c] = false;
            alive[k][r] = false;
            if k + 1 < mats.len() {
                for col in mats[k + 1].iter_mut().flatten() {
                    col.remove(&c);
                }
            }
            if k > 0 {
                mats[k - 1][r] = None;
            }
        }
    }
}

/// Check that consecutive maps compose to zero.
pub fn is_complex<F: Field>(res: &Resolution<F>) -> bool {
    res.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn residue_field_has_koszul_betti_numbers() {
        let r = Ring::new(PrimeField::default(), 5);
        let vars: Vec<_> = (0..5).map(|i| r.var(i)).collect();
        let p = ModulePresentation::quotient_ring(&r, &vars);
        let res = free_resolution(&p, true, 10).unwrap();
        let expect = BettiTable::from_entries(&[(0, 0, 1), (1, 1, 5), (2, 2, 10), (3, 3, 10), (4, 4, 5), (5, 5, 1)]);
        assert_eq!(res.betti, expect);
        assert_eq!(betti_table(&p).unwrap(), expect);
        assert!(is_complex(&res));
    }

    #[test]
    fn twisted_cubic() {
        let r = Ring::new(PrimeField::default(), 4);
        let gens: Vec<_> = ["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let p = ModulePresentation::quotient_ring(&r, &gens);
        let res = free_resolution(&p, true, 10).unwrap();
        assert_eq!(res.betti, BettiTable::from_entries(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
        assert!(is_complex(&res));
    }
}
