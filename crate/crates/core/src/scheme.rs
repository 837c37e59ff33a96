//! Invariants and singularities of projective schemes given by ideals.

use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Field;
use crate::homological::{BettiTable, HilbertPolynomial};
use crate::ideal::{jacobian_rows, saturate, subsets, Ideal};
use crate::poly::Polynomial;

/// Numerical data of `Proj(R/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i32,
    pub degree: i64,
    /// Sectional genus for surfaces, arithmetic genus for curves.
    pub sectional_genus: Option<i64>,
    /// `χ(O)` for surfaces and curves.
    pub chi_o: Option<i64>,
    /// Whether the input equals its saturation.
    pub saturated: bool,
    pub acm: Option<bool>,
    pub hilbert_polynomial: HilbertPolynomial,
}

impl SchemeReport {
    pub fn from_hilbert_polynomial(hp: HilbertPolynomial, saturated: bool) -> Self {
        let a = &hp.binomial_coeffs;
        let (genus, chi) = match hp.dim() {
            2 => (Some(1 - a[2] - a[1]), Some(a[0] + a[1] + a[2])),
            1 => (Some(1 - a[1] - a[0]), Some(a[0] + a[1])),
            _ => (None, None),
        };
        SchemeReport {
            dim: hp.dim(),
            degree: hp.degree(),
            sectional_genus: genus,
            chi_o: chi,
            saturated,
            acm: None,
            hilbert_polynomial: hp,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }
}

/// Report on `Proj(R/I)`, saturating first when `I` is not known to be
/// saturated.
pub fn analyze<F: Field>(i: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<SchemeReport> {
    if i.is_saturated_flag() {
        return Ok(SchemeReport::from_hilbert_polynomial(i.hilbert_polynomial(), true));
    }
    let sat = saturate(i, rng)?;
    Ok(SchemeReport::from_hilbert_polynomial(sat.hilbert_polynomial(), sat == *i))
}

/// [`analyze`] plus the minimal Betti table of the saturation and the ACM flag.
pub fn analyze_with_resolution<F: Field>(i: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<(SchemeReport, BettiTable)> {
    let sat = if i.is_saturated_flag() { i.clone() } else { saturate(i, rng)? };
    let mut rep = SchemeReport::from_hilbert_polynomial(sat.hilbert_polynomial(), sat == *i);
    let betti = sat.betti_table()?;
    let codim = sat.ring().nvars() as i32 - 1 - rep.dim;
    rep.acm = Some(betti.length() as i32 == codim);
    Ok((rep, betti))
}

/// Sectional genus read off a hyperplane section by a random linear form.
pub fn sectional_genus_by_slice<F: Field>(i: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<Option<i64>> {
    let ring = i.ring();
    let l = ring.random_form(1, rng);
    let cut = i.add_generators(&[l])?;
    Ok(SchemeReport::from_hilbert_polynomial(cut.hilbert_polynomial(), false).sectional_genus)
}

/// Outcome of the Jacobian criterion over the working prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub smooth: bool,
    /// `-1` when the singular locus is empty.
    pub singular_dim: i32,
    pub singular_degree: i64,
}

/// Jacobian criterion for an equidimensional scheme of codimension `c`.
///
/// First tries a few general elements of the minor ideal in one degree; if
/// those already cut out the empty set the scheme is smooth. Otherwise the
/// full Jacobian ideal is used.
pub fn smoothness_check<F: Field>(i: &Ideal<F>, c: usize, rng: &mut dyn rand_core::RngCore) -> Result<SmoothnessReport> {
    let ring = i.ring();
    let rows = jacobian_rows(i);
    let n = ring.nvars();
    let dim = n as i32 - 1 - c as i32;
    let mut minors: Vec<Polynomial<F>> = Vec::new();
    for rs in subsets(rows.len(), c) {
        for cs in subsets(n, c) {
            let d = crate::ideal::det(ring, &rows, &rs, &cs);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    if minors.is_empty() {
        let hp = i.hilbert_polynomial();
        return Ok(SmoothnessReport { smooth: hp.dim() < 0, singular_dim: hp.dim(), singular_degree: hp.degree() });
    }
    let top = minors.iter().filter_map(|m| m.degree()).max().unwrap();
    let trials = (dim + 2).max(1) as usize;
    let mut general = Vec::with_capacity(trials);
    for _ in 0..trials {
        let mut acc = ring.zero();
        for m in &minors {
            let r = ring.random_form(top - m.degree().unwrap(), rng);
            acc = acc.add(&m.mul(&r));
        }
        general.push(acc);
    }
    let screen = i.add_generators(&general)?;
    if screen.hilbert_polynomial().dim() < 0 {
        return Ok(SmoothnessReport { smooth: true, singular_dim: -1, singular_degree: 0 });
    }
    let mut gens = i.generators().to_vec();
    gens.extend(minors);
    let hp = Ideal::new(ring, gens)?.hilbert_polynomial();
    Ok(SmoothnessReport { smooth: hp.dim() < 0, singular_dim: hp.dim(), singular_degree: hp.degree() })
}

/// Report on the scheme-theoretic intersection `Proj(R/(I + J))`.
pub fn intersection_report<F: Field>(i: &Ideal<F>, j: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<SchemeReport> {
    let s = saturate(&i.sum(j)?, rng)?;
    Ok(SchemeReport::from_hilbert_polynomial(s.hilbert_polynomial(), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ideal::link;
    use crate::numeric::chi_of_ci_surface;
    use crate::poly::Ring;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup() -> (Ring<PrimeField>, ChaCha8Rng) {
        (Ring::new(PrimeField::default(), 5), ChaCha8Rng::seed_from_u64(7))
    }

    #[test]
    fn plane_and_complete_intersection() {
        let (r, mut rng) = setup();
        let plane = Ideal::parse(&r, &["x3", "x4"]).unwrap();
        let rep = analyze(&plane, &mut rng).unwrap();
        assert_eq!((rep.dim, rep.degree, rep.sectional_genus, rep.chi_o), (2, 1, Some(0), Some(1)));
        let f = r.random_form(5, &mut rng);
        let g = r.random_form(5, &mut rng);
        let ci = Ideal::new(&r, alloc::vec![f, g]).unwrap();
        let (rep, betti) = analyze_with_resolution(&ci, &mut rng).unwrap();
        // K = 5H on a (5,5) complete intersection: 2π - 2 = (H + K)H = 6·25
        assert_eq!((rep.dim, rep.degree, rep.sectional_genus), (2, 25, Some(76)));
        assert_eq!(rep.chi_o, Some(chi_of_ci_surface(5, 5, 0)));
        assert_eq!(rep.acm, Some(true));
        assert_eq!(betti.total(2), 1);
        assert_eq!(sectional_genus_by_slice(&ci, &mut rng).unwrap(), Some(76));
    }

    #[test]
    fn castelnuovo_surface_via_linkage() {
        let (r, mut rng) = setup();
        let plane = Ideal::parse(&r, &["x3", "x4"]).unwrap();
        let f = r.parse("x0*x3+x1*x4").unwrap();
        let g = r.parse("x1^2*x3+x2^2*x4").unwrap();
        let y = link(&plane, &f, &g, &mut rng).unwrap();
        let rep = analyze(&y, &mut rng).unwrap();
        assert_eq!((rep.dim, rep.degree, rep.sectional_genus), (2, 5, Some(2)));
    }

    #[test]
    fn smoothness() {
        let (r, mut rng) = setup();
        let q = Ideal::parse(&r, &["x0*x1-x2*x3+x4^2"]).unwrap();
        assert!(smoothness_check(&q, 1, &mut rng).unwrap().smooth);
        let cone = Ideal::parse(&r, &["x0*x1-x2*x3"]).unwrap();
        let s = smoothness_check(&cone, 1, &mut rng).unwrap();
        assert_eq!((s.smooth, s.singular_dim, s.singular_degree), (false, 0, 1));
        let tc = Ideal::parse(&r, &["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2", "x4"]).unwrap();
        assert!(smoothness_check(&tc, 3, &mut rng).unwrap().smooth);
    }

    #[test]
    fn intersections() {
        let (r, mut rng) = setup();
        let p1 = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let p2 = Ideal::parse(&r, &["x2", "x3"]).unwrap();
        let rep = intersection_report(&p1, &p2, &mut rng).unwrap();
        assert_eq!((rep.dim, rep.degree), (0, 1));
    }
}
