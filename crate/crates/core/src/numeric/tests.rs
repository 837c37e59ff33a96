use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qbinom(x: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (x - q(i as i64)) / q(i as i64 + 1);
    }
    acc
}

// straight transcription over the rationals
fn n6_oracle(d: i64, pi: i64, chi: i64) -> BigRational {
    let dq = q(d);
    let delta = qbinom(&q(d - 1), 2) - q(pi);
    let t = qbinom(&q(d - 1), 3) - q(pi) * q(d - 3) + q(2 * chi - 2);
    let h = (delta.clone() * (delta.clone() - q(d) + q(2)) - q(3) * t.clone()) / q(2);
    let d3 = dq.clone() * dq.clone() * dq.clone();
    let d2 = dq.clone() * dq.clone();
    -(dq.clone() * q(d - 4) * q(d - 5) * (d3 + q(30) * d2.clone() - q(577) * dq.clone() + q(786))) / q(144)
        + delta.clone()
            * (q(2) * qbinom(&dq, 4) + q(2) * qbinom(&dq, 3) - q(45) * qbinom(&dq, 2) + q(148) * dq.clone() - q(317))
        - qbinom(&delta, 2) * (d2 - q(27) * dq.clone() + q(120)) / q(2)
        - q(2) * qbinom(&delta, 3)
        + h * (delta.clone() - q(8) * dq.clone() + q(56))
        + t.clone() * (q(9) * dq - q(3) * delta + q(-28))
        + qbinom(&t, 2)
}

#[test]
fn le_barz_matches_rational_oracle() {
    let lb = le_barz(12, 13, 3).unwrap();
    assert_eq!((lb.delta, lb.t, lb.h, lb.n6), (42, 52, 594, 10));
    assert_eq!(le_barz(12, 14, 3).unwrap().n6, 4);
    assert_eq!(le_barz(13, 16, 2).unwrap().n6, 10);
    for (d, pi, chi) in [(12, 13, 3), (12, 14, 3), (13, 16, 2), (14, 19, 2), (15, 22, 4), (7, 6, 3), (5, 2, 1), (10, 7, 1)] {
        let o = n6_oracle(d, pi, chi);
        assert!(o.is_integer());
        assert_eq!(le_barz(d, pi, chi).unwrap().n6, o.to_integer().try_into().unwrap());
    }
}

#[test]
fn double_point_rows() {
    assert_eq!(double_point_residual(12, 12, 0, 3), 0);
    assert_eq!(double_point_residual(14, 22, -15, 2), 0);
    assert_eq!(double_point_residual(15, 27, -6, 4), 0);
    assert_eq!(k2_degree12(13, 3), 0);
    assert_eq!(k2_degree12(14, 3), -5);
    for pi in -10..15 {
        for chi in -5..5 {
            let inv = SurfaceInvariants::from_double_point(12, pi, chi).unwrap();
            assert_eq!(inv.k2, k2_degree12(pi, chi));
            assert_eq!(inv.double_point_residual(), 0);
        }
    }
}

#[test]
fn liaison() {
    assert_eq!(liaison_link(12, 13, 5, 5).unwrap(), (13, 16));
    assert_eq!(liaison_link(18, 39, 5, 5).unwrap(), (7, 6));
    assert_eq!(liaison_link(10, 7, 5, 5).unwrap(), (15, 22));
    assert!(liaison_link(30, 1, 5, 5).is_err());
    let ci = chi_of_ci_surface(5, 5, 0);
    assert_eq!(ci, 125);
    assert_eq!(liaison_chi(ci, 12, 13, 3, 5, 5), 2);
    assert_eq!(liaison_chi(ci, 11, 10, 3, 5, 5), 2);
    assert_eq!(liaison_chi(ci, 13, 16, 2, 5, 5), 3);
    // the CI itself: degree 4 surface (2, 2) is a del Pezzo, χ = 1
    assert_eq!(chi_of_ci_surface(2, 2, 0), 1);
}

#[test]
fn adjunction_tables() {
    let x = SurfaceInvariants { d: 13, pi: 16, chi: 2, k2: -11 };
    let x1 = adjunction_step(&AdjunctionRow::of_surface(&x), 2, 10);
    assert_eq!(x1, AdjunctionRow { hsq: 36, hk: 6, ksq: -1, pi: 22, ambient_dim: 16 });
    let flat = AdjunctionRow { hsq: 9, hk: 0, ksq: 0, pi: 5, ambient_dim: 4 };
    assert_eq!(adjunction_step(&flat, 0, 0).hsq, 9);
}

#[test]
fn severi_and_cohomology() {
    assert_eq!(severi_genus(3, 2, 0), 13);
    assert_eq!(severi_genus(3, 3, 0), 14);
    assert_eq!(severi_residual(14, 3, 3, 0), 0);
    let s = SurfaceInvariants { d: 12, pi: 13, chi: 3, k2: 0 };
    assert_eq!(chi_ideal_sheaf(4, &s), -5);
    assert_eq!(chi_ideal_sheaf(0, &s), -2);
    let empty = SurfaceInvariants { d: 0, pi: 1, chi: 0, k2: 0 };
    assert_eq!(chi_ideal_sheaf(3, &empty), 35);
    let a = (2..=6).fold(CohomologyAssumptions::standard(3, 0, 2, -2..=6), |a, p| a.with(2, p, 0)).with(0, 4, 0);
    let table = cohomology_table(&s, &a, -2..=6).unwrap();
    for c in &table {
        if c.h.iter().all(Option::is_some) {
            let h: Vec<i64> = c.h.iter().map(|v| v.unwrap()).collect();
            assert_eq!(h[0] - h[1] + h[2] - h[3], c.chi);
        }
    }
    assert_eq!(table.iter().find(|c| c.p == 0).unwrap().h, [Some(0), Some(0), Some(0), Some(2)]);
    let col = |p: i64| table.iter().find(|c| c.p == p).unwrap().h;
    assert_eq!(col(1), [Some(0), Some(0), Some(2), Some(0)]);
    assert_eq!(col(3), [Some(0), Some(4), Some(0), Some(0)]);
    assert_eq!(col(4), [Some(0), Some(5), Some(0), Some(0)]);
    let bad = CohomologyAssumptions { known: alloc::vec![(0, 4, 0), (1, 4, 0), (3, 4, 0)] };
    assert!(cohomology_table(&s, &bad, 4..=4).is_err());
}

// Koszul oracle: 0 -> Ω^p -> Λ^p V ⊗ O(-p) -> Ω^{p-1} -> 0
fn bott_oracle(p: i64, t: i64) -> i64 {
    (0..=p).map(|i| if i % 2 == 0 { 1 } else { -1 } * binom(5, (p - i) as u32) * binom(t - (p - i) + 4, 4).max(0) * i64::from(t - (p - i) >= 0)).sum()
}

#[test]
fn bott() {
    assert_eq!(bott_h0(3, 4), 5);
    assert_eq!(bott_h0(1, 2), 10);
    for t in 0..10 {
        assert_eq!(bott_h0(0, t), binom(t + 4, 4));
    }
    for p in 1..=4 {
        for t in p + 1..12 {
            assert_eq!(bott_h0(p, t), bott_oracle(p, t), "p={p} t={t}");
        }
        assert_eq!(bott_h0(p, p), 0);
    }
}
