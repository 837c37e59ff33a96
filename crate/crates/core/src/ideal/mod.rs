//! Homogeneous ideals and the operations on them.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{usage, AlgebraError, Result};
use crate::field::Field;
use crate::groebner::{buchberger_full, GbOptions, GroebnerBasis};
use crate::homological::{betti_table, BettiTable, HilbertPolynomial, HilbertSeries, ModulePresentation};
use crate::module::{from_svec, to_svec, ModuleMap, SVec};
use crate::mono::Mono;
use crate::order::{MonomialOrder, TermOrder};
use crate::poly::{Polynomial, Ring};

/// A homogeneous ideal with its grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    gb: Arc<GroebnerBasis<F>>,
    saturated: bool,
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.is_subset_of(other) && other.is_subset_of(self)
    }
}

impl<F: Field> Ideal<F> {
    /// The ideal generated by `gens`; the stored generators are a minimal
    /// subset.
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(AlgebraError::NotHomogeneous(alloc::format!("{g}")));
            }
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
        }
        let mut gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by_key(|g| g.degree());
        let order = TermOrder::ideal(ring.vars, MonomialOrder::Grevlex);
        let vs: Vec<SVec<F::Elem>> = gens.iter().map(|g| to_svec(core::slice::from_ref(g), &order)).collect();
        let res = buchberger_full(ring, &order, &vs, GbOptions::default())?;
        let mut keep = res.mingens.clone();
        keep.sort_unstable();
        let gens = keep.into_iter().map(|i| gens[i].monic()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: Arc::new(res.basis), saturated: false })
    }

    pub fn parse(ring: &Ring<F>, gens: &[&str]) -> Result<Self> {
        let ps = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, ps)
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Self::new(ring, Vec::new()).expect("zero ideal")
    }

    /// `(x_0, ..., x_{n-1})`.
    pub fn irrelevant(ring: &Ring<F>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect()).expect("variables")
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    pub fn is_saturated_flag(&self) -> bool {
        self.saturated
    }

    pub fn with_saturated_flag(mut self, flag: bool) -> Self {
        self.saturated = flag;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.leads().any(|t| t.mono.is_one())
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.gb.contains_poly(p)
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.gb.normal_form_poly(p)
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Number of minimal generators in each degree.
    pub fn generator_degrees(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for g in &self.gens {
            let d = g.degree().unwrap();
            match out.last_mut() {
                Some(x) if x.0 == d => x.1 += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn generators_of_degree(&self, d: u32) -> Vec<Polynomial<F>> {
        self.gens.iter().filter(|g| g.degree() == Some(d)).cloned().collect()
    }

    /// A basis of the degree-`d` piece `I_d`.
    pub fn degree_basis(&self, d: u32) -> Vec<Polynomial<F>> {
        let leads: Vec<Mono> = self.gb.leads().map(|t| t.mono).collect();
        let ring = &self.ring;
        ring.vars
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| leads.iter().any(|l| l.divides(*m)))
            .map(|m| {
                let p = ring.term(ring.field.one(), m);
                p.sub(&self.normal_form(&p))
            })
            .collect()
    }

    /// Uniformly random element of `I_d`.
    pub fn random_element(&self, d: u32, rng: &mut dyn rand_core::RngCore) -> Polynomial<F> {
        self.ring.random_combination(&self.degree_basis(d), rng)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let leads: Vec<(Mono, u32)> = self.gb.leads().map(|t| (t.mono, 0)).collect();
        HilbertSeries::of_lead_terms(&self.ring.vars, &[0], &leads)
    }

    /// Hilbert polynomial of `R/I`.
    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        self.hilbert_series().polynomial()
    }

    pub fn presentation(&self) -> ModulePresentation<F> {
        ModulePresentation::quotient_ring(&self.ring, &self.gens)
    }

    /// Minimal Betti table of `R/I`.
    pub fn betti_table(&self) -> Result<BettiTable> {
        betti_table(&self.presentation())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn add_generators(&self, extra: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }
}

// GB of a submodule of R^k under position-over-term; returns the elements
// whose lead lies in the last component, read as polynomials.
fn last_component<F: Field>(ring: &Ring<F>, twists: &[i32], cols: Vec<Vec<Polynomial<F>>>) -> Result<Vec<Polynomial<F>>> {
    let order = TermOrder::pot(ring.vars, MonomialOrder::Grevlex, twists);
    let last = (twists.len() - 1) as u32;
    let vs: Vec<SVec<F::Elem>> = cols.iter().map(|c| to_svec(c, &order)).filter(|v| !v.is_empty()).collect();
    let res = buchberger_full(ring, &order, &vs, GbOptions::default())?;
    Ok(res
        .basis
        .elements()
        .iter()
        .filter(|e| e[0].0.comp == last)
        .map(|e| from_svec(ring, twists.len(), e).pop().unwrap())
        .collect())
}

/// `I ∩ J`.
pub fn intersect_ideals<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let ring = &i.ring;
    let z = || ring.zero();
    let mut cols = alloc::vec![alloc::vec![ring.one(), ring.one(), ring.one()]];
    cols.extend(i.gens.iter().map(|g| alloc::vec![g.clone(), z(), z()]));
    cols.extend(j.gens.iter().map(|h| alloc::vec![z(), h.clone(), z()]));
    let gens = last_component(ring, &[0, 0, 0], cols)?;
    Ideal::new(ring, gens)
}

pub fn intersect_all<F: Field>(ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
    let mut acc = ideals.first().ok_or_else(|| usage("no ideals to intersect"))?.clone();
    for j in &ideals[1..] {
        acc = intersect_ideals(&acc, j)?;
    }
    Ok(acc)
}

/// `I : h`.
pub fn quotient_by_element<F: Field>(i: &Ideal<F>, h: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = &i.ring;
    let Some(dh) = h.homogeneous_degree() else {
        if h.is_zero() {
            return Ideal::new(ring, alloc::vec![ring.one()]);
        }
        return Err(AlgebraError::NotHomogeneous(alloc::format!("{h}")));
    };
    let mut cols = alloc::vec![alloc::vec![h.clone(), ring.one()]];
    cols.extend(i.gens.iter().map(|g| alloc::vec![g.clone(), ring.zero()]));
    let gens = last_component(ring, &[0, dh as i32], cols)?;
    let out = Ideal::new(ring, gens)?;
    Ok(out.with_saturated_flag(i.saturated))
}

/// `I : J`.
pub fn quotient<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    if j.is_zero() {
        return Ideal::new(&i.ring, alloc::vec![i.ring.one()]);
    }
    let parts = j.gens.iter().map(|h| quotient_by_element(i, h)).collect::<Result<Vec<_>>>()?;
    let out = intersect_all(&parts)?;
    Ok(out.with_saturated_flag(i.saturated))
}

/// `I : J^∞` by iterated quotients.
pub fn saturate_by<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    let mut cur = i.clone();
    loop {
        let next = quotient(&cur, j)?;
        if next.is_subset_of(&cur) {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Saturation with respect to the irrelevant ideal.
///
/// Computes `I : ℓ^∞` for a random linear form `ℓ` (moved to the last
/// variable, where grevlex divides it out of the basis), then certifies every
/// new generator `f` by finding `x_i^k f ∈ I` for all `i`. If certification
/// fails the iterated quotient is used instead.
pub fn saturate<F: Field>(i: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<Ideal<F>> {
    if i.saturated || i.is_zero() || i.is_unit() {
        return Ok(i.clone().with_saturated_flag(true));
    }
    let ring = &i.ring;
    let n = ring.nvars();
    let f = &ring.field;
    let mut a: Vec<F::Elem> = (0..n).map(|_| f.random(rng)).collect();
    if f.is_zero(&a[n - 1]) {
        a[n - 1] = f.one();
    }
    let inv_last = f.inv(&a[n - 1]).unwrap();
    // forward: x_{n-1} -> (x_{n-1} - Σ_{i<n-1} a_i x_i) / a_{n-1}
    let mut fwd: Vec<Polynomial<F>> = (0..n).map(|k| ring.var(k)).collect();
    let mut lf = ring.var(n - 1);
    for k in 0..n - 1 {
        lf = lf.sub(&ring.var(k).scale(&a[k]));
    }
    fwd[n - 1] = lf.scale(&inv_last);
    let mut back: Vec<Polynomial<F>> = (0..n).map(|k| ring.var(k)).collect();
    back[n - 1] = ring.linear_form(&a);
    let moved: Vec<Polynomial<F>> = i.gens.iter().map(|g| g.substitute(&fwd)).collect();
    let gb = GroebnerBasis::of_ideal(ring, &moved)?;
    let last = ring.vars.var(n - 1);
    let sat_moved: Vec<Polynomial<F>> = gb
        .polynomials()
        .into_iter()
        .map(|p| {
            let k = p.terms().iter().map(|t| t.0.exp(n - 1)).min().unwrap_or(0);
            let mut div = Mono::ONE;
            for _ in 0..k {
                div = div.mul(last);
            }
            let terms = p.terms().iter().map(|(m, c)| (div.quotient_of(*m), c.clone())).collect();
            Polynomial::from_sorted(ring, terms)
        })
        .collect();
    let candidate: Vec<Polynomial<F>> = sat_moved.iter().map(|p| p.substitute(&back)).collect();
    let cand = Ideal::new(ring, candidate)?;
    let bound = 4 * cand.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(1) + 8;
    let certified = cand.gens.iter().filter(|g| !i.contains(g)).all(|g| {
        (0..n).all(|v| {
            let mut p = g.clone();
            for _ in 0..bound {
                p = p.mul(&ring.var(v));
                if i.contains(&p) {
                    return true;
                }
            }
            false
        })
    });
    if certified {
        return Ok(cand.with_saturated_flag(true));
    }
    Ok(saturate_by(i, &Ideal::irrelevant(ring))?.with_saturated_flag(true))
}

/// Intersection of `I` with the subring in the variables after the first `k`,
/// returned in a ring on those variables.
pub fn eliminate<F: Field>(i: &Ideal<F>, k: usize) -> Result<(Ring<F>, Ideal<F>)> {
    let ring = &i.ring;
    let n = ring.nvars();
    let gb = GroebnerBasis::of_ideal_in(ring, MonomialOrder::Elimination(k), &i.gens)?;
    let weights: Vec<u32> = (k..n).map(|v| ring.vars.weight(v)).collect();
    let g = weights.iter().copied().fold(0, gcd);
    let sub = if weights.iter().all(|&w| w == g) {
        Ring::new(ring.field.clone(), n - k)
    } else {
        Ring::weighted(ring.field.clone(), &weights)
    };
    let kept: Vec<Polynomial<F>> = gb
        .polynomials()
        .into_iter()
        .filter(|p| p.terms().iter().all(|(m, _)| (0..k).all(|v| m.exp(v) == 0)))
        .map(|p| {
            let terms = p.terms().iter().map(|(m, c)| (sub.vars.mono(&m.exponents(n)[k..]), c.clone())).collect();
            Polynomial::from_terms(&sub, terms)
        })
        .collect();
    let out = Ideal::new(&sub, kept)?;
    Ok((sub, out))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All `k × k` minors of a polynomial matrix given by rows.
pub fn minors_of_rows<F: Field>(ring: &Ring<F>, rows: &[Vec<Polynomial<F>>], k: usize) -> Vec<Polynomial<F>> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    if k == 0 || k > nr.min(nc) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in subsets(nr, k) {
        for cs in subsets(nc, k) {
            let d = det(ring, rows, &rs, &cs);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// `k × k` minors of a module map, as an ideal.
pub fn minors<F: Field>(m: &ModuleMap<F>, k: usize) -> Result<Ideal<F>> {
    let rows: Vec<Vec<Polynomial<F>>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.entry(i, j).clone()).collect()).collect();
    Ideal::new(&m.ring, minors_of_rows(&m.ring, &rows, k))
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of the submatrix on `rs × cs` by Laplace expansion.
pub(crate) fn det<F: Field>(ring: &Ring<F>, rows: &[Vec<Polynomial<F>>], rs: &[usize], cs: &[usize]) -> Polynomial<F> {
    if rs.len() == 1 {
        return rows[rs[0]][cs[0]].clone();
    }
    let mut acc = ring.zero();
    let r0 = rs[0];
    for (t, &c) in cs.iter().enumerate() {
        let e = &rows[r0][c];
        if e.is_zero() {
            continue;
        }
        let rest_c: Vec<usize> = cs.iter().copied().filter(|&x| x != c).collect();
        let sub = det(ring, rows, &rs[1..], &rest_c);
        let term = e.mul(&sub);
        acc = if t % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Jacobian matrix of the generators: rows = generators, columns = variables.
pub(crate) fn jacobian_rows<F: Field>(i: &Ideal<F>) -> Vec<Vec<Polynomial<F>>> {
    let n = i.ring.nvars();
    i.gens.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect()
}

/// `I` plus all `c × c` minors of the Jacobian matrix.
pub fn jacobian_ideal<F: Field>(i: &Ideal<F>, c: usize) -> Result<Ideal<F>> {
    let rows = jacobian_rows(i);
    let mut g = i.gens.clone();
    g.extend(minors_of_rows(&i.ring, &rows, c));
    Ideal::new(&i.ring, g)
}

/// Closure of the image of `Proj(S/base) -> P^{m-1}` given by forms of a
/// common degree, via the graph ideal in a weighted ring.
pub fn image_of_map<F: Field>(
    source: &Ring<F>,
    forms: &[Polynomial<F>],
    base: Option<&Ideal<F>>,
    rng: &mut dyn rand_core::RngCore,
) -> Result<Ideal<F>> {
    let e = forms
        .iter()
        .find(|f| !f.is_zero())
        .and_then(|f| f.homogeneous_degree())
        .ok_or_else(|| usage("all forms are zero"))?;
    if forms.iter().any(|f| !f.is_zero() && f.homogeneous_degree() != Some(e)) {
        return Err(usage("forms must share one degree"));
    }
    let n = source.nvars();
    let m = forms.len();
    let mut weights = alloc::vec![1u32; n];
    weights.extend(core::iter::repeat_n(e, m));
    let big = Ring::weighted(source.field.clone(), &weights);
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for (j, f) in forms.iter().enumerate() {
        gens.push(big.var(n + j).sub(&f.embed(&big)));
    }
    if let Some(b) = base {
        gens.extend(b.gens.iter().map(|g| g.embed(&big)));
    }
    let graph = Ideal::new(&big, gens)?;
    let (_, img) = eliminate(&graph, n)?;
    saturate(&img, rng)
}

/// The link `(f, g) : I`, certified through the degree count of the
/// complete intersection.
pub fn link<F: Field>(i: &Ideal<F>, f: &Polynomial<F>, g: &Polynomial<F>, rng: &mut dyn rand_core::RngCore) -> Result<Ideal<F>> {
    if !i.contains(f) || !i.contains(g) {
        return Err(usage("linking forms must lie in the ideal"));
    }
    let ring = &i.ring;
    let ci = Ideal::new(ring, alloc::vec![f.clone(), g.clone()])?;
    let (df, dg) = (f.degree().unwrap_or(0) as i64, g.degree().unwrap_or(0) as i64);
    let hp = ci.hilbert_polynomial();
    if hp.dim() != ring.nvars() as i32 - 3 || hp.degree() != df * dg {
        return Err(AlgebraError::Degenerate("linking forms are not a regular sequence".into()));
    }
    let hi = i.hilbert_polynomial();
    if hi.dim() != hp.dim() {
        return Err(usage("ideal and complete intersection differ in dimension"));
    }
    let expected = df * dg - hi.degree();
    let mut degs: Vec<u32> = i.gens.iter().filter_map(|g| g.degree()).collect();
    degs.dedup();
    for d in degs {
        // residual by a general element of I_d
        for _ in 0..2 {
            let h = i.random_element(d, rng);
            if ci.contains(&h) {
                break;
            }
            let j = quotient_by_element(&ci, &h)?;
            let hj = j.hilbert_polynomial();
            if hj.dim() == hp.dim() && hj.degree() == expected {
                return Ok(j.with_saturated_flag(true));
            }
        }
    }
    // general element failed to certify: use the full quotient
    Ok(quotient(&ci, i)?.with_saturated_flag(true))
}

#[cfg(test)]
mod tests;
