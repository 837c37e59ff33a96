use super::*;
use crate::field::PrimeField;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(n: usize) -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), n)
}

fn id(r: &Ring<PrimeField>, g: &[&str]) -> Ideal<PrimeField> {
    Ideal::parse(r, g).unwrap()
}

#[test]
fn quotients() {
    let r = ring(5);
    let q = quotient(&id(&r, &["x0*x1"]), &id(&r, &["x0"])).unwrap();
    assert_eq!(q, id(&r, &["x1"]));
    let q = quotient(&id(&r, &["x0^2", "x0*x1"]), &id(&r, &["x0"])).unwrap();
    assert_eq!(q, id(&r, &["x0", "x1"]));
    let i = id(&r, &["x0^2", "x1^3"]);
    assert_eq!(quotient(&i, &id(&r, &["1"])).unwrap(), i);
}

#[test]
fn saturation() {
    let r = ring(5);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let i = id(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x0*x4"]);
    let s = saturate(&i, &mut rng).unwrap();
    assert_eq!(s, id(&r, &["x0"]));
    assert!(s.is_saturated_flag());
    let s2 = saturate_by(&i, &Ideal::irrelevant(&r)).unwrap();
    assert_eq!(s2, s);
    let ci = id(&r, &["x0^2+x1*x2", "x3^3-x4*x0^2"]);
    assert_eq!(saturate(&ci, &mut rng).unwrap(), ci);
    assert_eq!(quotient(&ci, &Ideal::irrelevant(&r)).unwrap(), ci);
}

#[test]
fn elimination() {
    // graph of t -> (s^3, s^2 t, s t^2, t^3)
    let r = Ring::weighted(PrimeField::default(), &[1, 1, 3, 3, 3, 3]);
    let g = id(&r, &["x2-x0^3", "x3-x0^2*x1", "x4-x0*x1^2", "x5-x1^3"]);
    let (sub, e) = eliminate(&g, 2).unwrap();
    assert_eq!(sub.nvars(), 4);
    assert_eq!(e.generator_degrees(), alloc::vec![(2, 3)]);
    let hp = e.hilbert_polynomial();
    assert_eq!((hp.dim(), hp.degree()), (1, 3));
}

#[test]
fn minors_and_jacobian() {
    let r = ring(5);
    let rows: Vec<Vec<_>> = [["x0", "x1"], ["x1", "x2"], ["x2", "x3"]]
        .iter()
        .map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect())
        .collect();
    let m = ModuleMap::from_rows(
        &r,
        crate::GradedFreeModule::uniform(3, 0),
        crate::GradedFreeModule::uniform(2, 1),
        rows,
    );
    let i2 = minors(&m, 2).unwrap();
    assert_eq!(i2, id(&r, &["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"]));
    assert_eq!(minors(&m, 1).unwrap(), id(&r, &["x0", "x1", "x2", "x3"]));

    let q = id(&r, &["x0*x1-x2*x3+x4^2"]);
    let j = jacobian_ideal(&q, 1).unwrap();
    assert_eq!(j.hilbert_polynomial().dim(), -1);
    let cone = id(&r, &["x0*x1-x2*x3"]);
    let j = jacobian_ideal(&cone, 1).unwrap();
    assert_eq!(j, id(&r, &["x0", "x1", "x2", "x3"]));
}

#[test]
fn images() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let src = ring(2);
    let forms: Vec<_> = ["x0^2", "x0*x1", "x1^2"].iter().map(|s| src.parse(s).unwrap()).collect();
    let img = image_of_map(&src, &forms, None, &mut rng).unwrap();
    let tgt = ring(3);
    assert_eq!(img, id(&tgt, &["x0*x2-x1^2"]));

    let p2 = ring(3);
    let quads = p2.vars.monomials_of_degree(2).into_iter().map(|m| p2.term(p2.field.one(), m)).collect::<Vec<_>>();
    let v = image_of_map(&p2, &quads, None, &mut rng).unwrap();
    let hp = v.hilbert_polynomial();
    assert_eq!((hp.dim(), hp.degree()), (2, 4));
    assert_eq!(v.generator_degrees(), alloc::vec![(2, 6)]);
}

#[test]
fn intersections() {
    let r = ring(5);
    let i = intersect_ideals(&id(&r, &["x0"]), &id(&r, &["x1"])).unwrap();
    assert_eq!(i, id(&r, &["x0*x1"]));
    let i = intersect_ideals(&id(&r, &["x0", "x1"]), &id(&r, &["x2", "x3"])).unwrap();
    let hp = i.hilbert_polynomial();
    assert_eq!((hp.dim(), hp.degree()), (2, 2));
}

#[test]
fn linkage_of_a_plane() {
    let r = ring(5);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let plane = id(&r, &["x3", "x4"]);
    let f = r.parse("x0*x3+x1*x4").unwrap();
    let g = r.parse("x2^2*x3+x1*x0*x4-x4^3").unwrap();
    let y = link(&plane, &f, &g, &mut rng).unwrap();
    let hp = y.hilbert_polynomial();
    assert_eq!((hp.dim(), hp.degree()), (2, 5));
    let back = link(&y, &f, &g, &mut rng).unwrap();
    assert_eq!(back, plane);
    assert!(link(&plane, &r.parse("x0").unwrap(), &g, &mut rng).is_err());
}
