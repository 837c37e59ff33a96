//! Named recipes with their expected output and verification.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::linkage::{five_planes, lemma3_2, link_general, prop3_1_linkage, prop3_11};
use super::matrices::{hm_derived_module, segre_cubic, MooreParameters, Plane, DEFAULT_XI};
use super::recipes::{prop2_1, prop2_6, prop3_1_syzygy, PlaneChoice};
use crate::error::{usage, AlgebraError, Result};
use crate::field::Field;
use crate::homological::{betti_table, BettiTable};
use crate::ideal::{intersect_all, link, quotient, saturate, Ideal};
use crate::numeric::{chi_of_ci_surface, liaison_chi, liaison_link, SurfaceInvariants};
use crate::poly::{Polynomial, Ring};
use crate::scheme::{analyze_with_resolution, intersection_report, smoothness_check, SchemeReport};

/// Names accepted by [`run_recipe`].
pub const RECIPES: &[&str] = &[
    "prop2_1",
    "cor2_4",
    "prop2_6_alpha",
    "prop2_6_beta",
    "prop3_1_syzygy",
    "prop3_1_linkage",
    "prop3_11",
    "lemma3_2",
    "lemma3_4",
    "segre_cubic",
    "hm_module",
];

/// Declared invariants and minimal Betti table of `R/I_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub invariants: SurfaceInvariants,
    pub betti: BettiTable,
}

fn ideal_table(gens: &[(i32, usize)], rest: &[&[(i32, usize)]]) -> BettiTable {
    let mut e = alloc::vec![(0usize, 0i32, 1usize)];
    e.extend(gens.iter().map(|&(j, b)| (1, j, b)));
    for (k, l) in rest.iter().enumerate() {
        e.extend(l.iter().map(|&(j, b)| (k + 2, j, b)));
    }
    BettiTable::from_entries(&e)
}

fn surface(d: i64, pi: i64, chi: i64, k2: i64) -> SurfaceInvariants {
    SurfaceInvariants { d, pi, chi, k2 }
}

/// Expected output of the surface recipes.
pub fn expected(name: &str) -> Option<Expected> {
    let (invariants, betti) = match name {
        "prop2_1" => (surface(12, 13, 3, 0), ideal_table(&[(5, 3), (6, 12)], &[&[(7, 30)], &[(8, 21)], &[(9, 5)]])),
        "cor2_4" => (surface(13, 16, 2, -11), ideal_table(&[(5, 4), (6, 5)], &[&[(7, 16)], &[(8, 10)], &[(9, 2)]])),
        "prop2_6_alpha" => {
            (surface(12, 14, 3, -5), ideal_table(&[(5, 8)], &[&[(6, 7), (7, 4)], &[(7, 1), (8, 4)], &[(9, 1)]]))
        }
        "prop2_6_beta" => (
            surface(12, 14, 3, -5),
            ideal_table(&[(5, 8), (6, 2)], &[&[(6, 9), (7, 5)], &[(7, 2), (8, 4)], &[(9, 1)]]),
        ),
        "prop3_1_syzygy" | "prop3_1_linkage" => {
            (surface(14, 19, 2, -15), ideal_table(&[(5, 4), (6, 4)], &[&[(6, 2), (7, 8)], &[(8, 3)]]))
        }
        "prop3_11" => (surface(15, 22, 4, -6), ideal_table(&[(5, 2), (6, 7)], &[&[(7, 12)], &[(8, 4)]])),
        _ => return None,
    };
    Some(Expected { invariants, betti })
}

/// Betti table of the union of the degree 10 surface with its five planes.
pub fn prop3_11_z_table() -> BettiTable {
    ideal_table(&[(5, 5), (6, 10)], &[&[(7, 34)], &[(8, 27)], &[(9, 7)]])
}

/// One named verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check { name: name.to_string(), passed, detail }
    }

    fn eq<T: PartialEq + core::fmt::Debug>(name: &str, got: T, want: T) -> Self {
        let passed = got == want;
        Check { name: name.to_string(), passed, detail: format!("got {got:?}, expected {want:?}") }
    }
}

fn betti_check(name: &str, got: &BettiTable, want: &BettiTable) -> Check {
    Check::new(name, got == want, format!("got {}, expected {}", got.compact(), want.compact()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Reseed bound for degenerate random choices.
    pub attempts: usize,
    pub smooth_check: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { attempts: 5, smooth_check: false }
    }
}

/// Result of a recipe: the output ideals (main one first) and all checks.
#[derive(Clone, Debug)]
pub struct RecipeRun<F: Field> {
    pub name: String,
    pub seed: u64,
    /// Seed actually used after reseeding.
    pub effective_seed: u64,
    pub ideals: Vec<(String, Ideal<F>)>,
    pub report: Option<SchemeReport>,
    pub betti: Option<BettiTable>,
    pub checks: Vec<Check>,
}

impl<F: Field> RecipeRun<F> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn main_ideal(&self) -> Option<&Ideal<F>> {
        self.ideals.first().map(|p| &p.1)
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal<F>> {
        self.ideals.iter().find(|p| p.0 == name).map(|p| &p.1)
    }
}

/// Seed of the `k`-th attempt.
pub fn attempt_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_add((k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Runs a named recipe, reseeding on degenerate random choices.
pub fn run_recipe<F: Field>(name: &str, ring: &Ring<F>, seed: u64, opts: RunOptions) -> Result<RecipeRun<F>> {
    if !RECIPES.contains(&name) {
        return Err(usage(format!("unknown recipe `{name}`")));
    }
    if ring.nvars() != 5 || !ring.vars.is_standard() {
        return Err(usage("recipes need the standard-graded ring in 5 variables"));
    }
    let mut last = None;
    for k in 0..opts.attempts.max(1) {
        let s = attempt_seed(seed, k);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        match build(name, ring, &mut rng) {
            Ok((ideals, mut checks)) => {
                let mut run = RecipeRun { name: name.into(), seed, effective_seed: s, ideals, report: None, betti: None, checks: Vec::new() };
                verify(&mut run, opts, &mut rng)?;
                run.checks.append(&mut checks);
                return Ok(run);
            }
            Err(e @ AlgebraError::Degenerate(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| AlgebraError::Degenerate("no attempt made".into())))
}

type Built<F> = (Vec<(String, Ideal<F>)>, Vec<Check>);

fn named<F: Field>(n: &str, i: Ideal<F>) -> (String, Ideal<F>) {
    (n.to_string(), i)
}

fn liaison_checks<F: Field>(from: &Ideal<F>, to: &Ideal<F>, rng: &mut dyn rand_core::RngCore) -> Result<Vec<Check>> {
    let a = crate::scheme::analyze(from, rng)?;
    let to = &crate::scheme::analyze(to, rng)?;
    let (d, pi, chi) = (a.degree, a.sectional_genus.unwrap_or(0), a.chi_o.unwrap_or(0));
    let ci = chi_of_ci_surface(5, 5, 0);
    Ok(alloc::vec![
        Check::eq("liaison (d, pi)", liaison_link(d, pi, 5, 5).ok(), Some((to.degree, to.sectional_genus.unwrap_or(i64::MIN)))),
        Check::eq("liaison chi", Some(liaison_chi(ci, d, pi, chi, 5, 5)), to.chi_o),
    ])
}

fn stage_invariants<F: Field>(name: &str, i: &Ideal<F>, want: (i64, i64), rng: &mut dyn rand_core::RngCore) -> Result<Check> {
    let r = crate::scheme::analyze(i, rng)?;
    Ok(Check::eq(&format!("{name} (d, pi)"), (r.degree, r.sectional_genus), (want.0, Some(want.1))))
}

fn build<F: Field>(name: &str, ring: &Ring<F>, rng: &mut dyn rand_core::RngCore) -> Result<Built<F>> {
    let mut checks = Vec::new();
    let ideals = match name {
        "prop2_1" => alloc::vec![named("S", prop2_1(ring, rng)?)],
        "cor2_4" => {
            let s = prop2_1(ring, rng)?;
            let (x, [f, g]) = link_general(&s, 5, 5, rng)?;
            let back = link(&x, &f, &g, rng)?;
            checks.push(Check::new("linkage involution", back == s, String::new()));
            checks.extend(liaison_checks(&s, &x, rng)?);
            alloc::vec![named("X", x), named("S", s)]
        }
        "prop2_6_alpha" => {
            let choice = PlaneChoice::generic(ring, rng);
            alloc::vec![named("S", prop2_6(ring, &choice, rng)?)]
        }
        "prop2_6_beta" => alloc::vec![named("S", prop2_6(ring, &PlaneChoice::special(ring), rng)?)],
        "prop3_1_syzygy" => {
            let out = prop3_1_syzygy(ring, rng)?;
            checks.extend(plane_checks(&out.ideal, &out.planes, rng)?);
            alloc::vec![named("S", out.ideal)]
        }
        "prop3_1_linkage" => {
            let c = prop3_1_linkage(ring, rng)?;
            checks.push(Check::eq("five planes generators", c.lemma3_2.generator_degrees.clone(), alloc::vec![(2, 3), (3, 4)]));
            checks.push(Check::eq("residual quartic (degree, trisecant)", (c.lemma3_2.residual_degree, c.lemma3_2.trisecant_length), (4, 3)));
            checks.push(Check::eq("T generators", c.lemma3_4.clone(), alloc::vec![(2, 1), (3, 2), (4, 4)]));
            checks.push(Check::eq("Y ∩ P_i degrees", c.conic_degrees.clone(), alloc::vec![2; 4]));
            checks.push(stage_invariants("Y", &c.y, (7, 6), rng)?);
            checks.push(stage_invariants("Z", &c.z, (11, 10), rng)?);
            let back = link(&c.s, &c.quintics[0], &c.quintics[1], rng)?;
            checks.push(Check::new("linkage involution", back == c.z, String::new()));
            checks.extend(liaison_checks(&c.z, &c.s, rng)?);
            alloc::vec![named("S", c.s), named("Z", c.z), named("Y", c.y)]
        }
        "prop3_11" => {
            let c = prop3_11(ring, rng)?;
            checks.push(stage_invariants("Y", &c.y, (5, 2), rng)?);
            checks.push(stage_invariants("Z", &c.z, (10, 7), rng)?);
            checks.push(betti_check("Z betti table", &c.z.betti_table()?, &prop3_11_z_table()));
            let back = link(&c.s, &c.quintics[0], &c.quintics[1], rng)?;
            checks.push(Check::new("linkage involution", back == c.z, String::new()));
            checks.extend(liaison_checks(&c.z, &c.s, rng)?);
            alloc::vec![named("S", c.s), named("Z", c.z), named("Y", c.y)]
        }
        "lemma3_2" => {
            let cfg = five_planes(ring, rng)?;
            let l = lemma3_2(&cfg, rng)?;
            checks.push(Check::eq("generators", l.generator_degrees.clone(), alloc::vec![(2, 3), (3, 4)]));
            checks.push(Check::eq("residual curve (degree, genus)", (l.residual_degree, l.residual_genus), (4, Some(0))));
            checks.push(Check::eq("trisecant length", l.trisecant_length, 3));
            alloc::vec![named("P+points", cfg.union)]
        }
        "lemma3_4" => {
            let cfg = five_planes(ring, rng)?;
            let v = cfg.union.random_element(2, rng);
            let mut parts = alloc::vec![cfg.p.ideal()?];
            for pl in &cfg.others {
                parts.push(pl.ideal()?.add_generators(core::slice::from_ref(&v))?);
            }
            let t = intersect_all(&parts)?;
            checks.push(Check::eq("generators", t.generator_degrees(), alloc::vec![(2, 1), (3, 2), (4, 4)]));
            alloc::vec![named("T", t)]
        }
        "segre_cubic" => {
            let planes: Vec<Plane<F>> = (0..4).map(|_| Plane::random(ring, rng)).collect();
            let c = segre_cubic(&planes)?;
            let contained = planes.iter().all(|p| p.ideal().map(|i| i.contains(&c)).unwrap_or(false));
            checks.push(Check::new("contains the planes", contained, String::new()));
            let x = Ideal::new(ring, alloc::vec![c])?;
            let sing = smoothness_check(&x, 1, rng)?;
            checks.push(Check::eq("singular locus (dim, degree)", (sing.singular_dim, sing.singular_degree), (0, 10)));
            alloc::vec![named("X", x)]
        }
        "hm_module" => {
            let m = hm_derived_module(ring, &MooreParameters::default(), &DEFAULT_XI, rng, 5)?;
            let h: Vec<i64> = m.hilbert(0..=2)?.function.iter().map(|p| p.1).collect();
            checks.push(Check::eq("hilbert function", h, alloc::vec![4, 5, 0]));
            let want = BettiTable::from_entries(&[
                (0, 0, 4),
                (1, 1, 15),
                (2, 2, 15),
                (2, 3, 12),
                (3, 3, 2),
                (3, 4, 30),
                (4, 5, 21),
                (5, 6, 5),
            ]);
            checks.push(betti_check("betti table", &betti_table(&m)?, &want));
            Vec::new()
        }
        _ => unreachable!(),
    };
    Ok((ideals, checks))
}

/// Planes of the four-plane module: the quintic part of `I_S` cuts out
/// `S` and the planes, and each plane meets `S` in a sextic.
fn plane_checks<F: Field>(s: &Ideal<F>, planes: &[Plane<F>], rng: &mut dyn rand_core::RngCore) -> Result<Vec<Check>> {
    let quintic = Ideal::new(s.ring(), s.generators_of_degree(5))?;
    let residual = saturate(&quotient(&quintic, s)?, rng)?;
    let union = intersect_all(&planes.iter().map(Plane::ideal).collect::<Result<Vec<_>>>()?)?;
    let mut out = alloc::vec![Check::new("quintic residual = planes", residual == union, String::new())];
    let mut degs = Vec::new();
    for p in planes {
        let r = intersection_report(s, &p.ideal()?, rng)?;
        degs.push((r.dim, r.degree));
    }
    out.push(Check::eq("plane sections", degs, alloc::vec![(1, 6); 4]));
    Ok(out)
}

fn verify<F: Field>(run: &mut RecipeRun<F>, opts: RunOptions, rng: &mut dyn rand_core::RngCore) -> Result<()> {
    let Some(exp) = expected(&run.name) else { return Ok(()) };
    let s = run.ideals[0].1.clone();
    let (rep, betti) = analyze_with_resolution(&s, rng)?;
    let inv = exp.invariants;
    run.checks.push(Check::eq("(d, pi, chi)", (rep.dim, rep.degree, rep.sectional_genus, rep.chi_o), (2, inv.d, Some(inv.pi), Some(inv.chi))));
    let measured = SurfaceInvariants { d: rep.degree, pi: rep.sectional_genus.unwrap_or(0), chi: rep.chi_o.unwrap_or(0), k2: inv.k2 };
    run.checks.push(Check::eq("double point residual", measured.double_point_residual(), 0));
    run.checks.push(betti_check("betti table", &betti, &exp.betti));
    if opts.smooth_check {
        let sm = smoothness_check(&s, 2, rng)?;
        run.checks.push(Check::new(
            "smooth",
            sm.smooth,
            format!("singular locus dim {} degree {}", sm.singular_dim, sm.singular_degree),
        ));
    }
    run.report = Some(rep);
    run.betti = Some(betti);
    Ok(())
}

/// Generators of an ideal as text, one per line.
pub fn ideal_lines<F: Field>(i: &Ideal<F>) -> Vec<String> {
    i.generators().iter().map(|g: &Polynomial<F>| format!("{g}")).collect()
}
