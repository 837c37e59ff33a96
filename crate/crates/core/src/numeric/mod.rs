//! Integer formulas for smooth surfaces in projective 4-space.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::homological::hilbert::binom;

/// Numerical invariants of a surface: degree, sectional genus, `χ(O_S)`, `K²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub d: i64,
    pub pi: i64,
    pub chi: i64,
    pub k2: i64,
}

impl SurfaceInvariants {
    /// Invariants with `K²` taken from the double point formula.
    pub fn from_double_point(d: i64, pi: i64, chi: i64) -> Result<Self> {
        let hk = 2 * pi - 2 - d;
        let twice = d * d - 10 * d - 5 * hk + 12 * chi;
        if twice % 2 != 0 {
            return Err(AlgebraError::Integrality(format!("K^2 for (d, pi, chi) = ({d}, {pi}, {chi})")));
        }
        Ok(SurfaceInvariants { d, pi, chi, k2: twice / 2 })
    }

    /// `H·K = 2π - 2 - d`.
    pub fn hk(&self) -> i64 {
        2 * self.pi - 2 - self.d
    }

    pub fn double_point_residual(&self) -> i64 {
        double_point_residual(self.d, self.hk(), self.k2, self.chi)
    }
}

/// `d² - 10d - 5HK - 2K² + 12χ`; zero for a smooth surface.
pub fn double_point_residual(d: i64, hk: i64, k2: i64, chi: i64) -> i64 {
    d * d - 10 * d - 5 * hk - 2 * k2 + 12 * chi
}

/// `K²` of a smooth degree-12 surface.
pub fn k2_degree12(pi: i64, chi: i64) -> i64 {
    47 - 5 * pi + 6 * chi
}

/// Multisecant data of a general projection to 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeBarz {
    /// Degree of the double curve.
    pub delta: i64,
    /// Apparent triple points.
    pub t: i64,
    /// Apparent double points of the double curve.
    pub h: i64,
    /// 6-secant lines plus exceptional lines.
    pub n6: i64,
}

pub fn le_barz(d: i64, pi: i64, chi: i64) -> Result<LeBarz> {
    let delta = binom(d - 1, 2) - pi;
    let t = binom(d - 1, 3) - pi * (d - 3) + 2 * chi - 2;
    let h2 = delta * (delta - d + 2) - 3 * t;
    if h2 % 2 != 0 {
        return Err(AlgebraError::Integrality(format!("h = {h2}/2")));
    }
    let h = h2 / 2;
    let (d_, de, t_, h_) = (d as i128, delta as i128, t as i128, h as i128);
    let b = |x: i128, k: u32| binom(x as i64, k) as i128;
    // 144 * N6
    let n144 = -d_ * (d_ - 4) * (d_ - 5) * (d_ * d_ * d_ + 30 * d_ * d_ - 577 * d_ + 786)
        + 144 * de * (2 * b(d_, 4) + 2 * b(d_, 3) - 45 * b(d_, 2) + 148 * d_ - 317)
        - 72 * b(de, 2) * (d_ * d_ - 27 * d_ + 120)
        - 288 * b(de, 3)
        + 144 * (h_ * (de - 8 * d_ + 56) + t_ * (9 * d_ - 3 * de - 28) + b(t_, 2));
    if n144 % 144 != 0 {
        return Err(AlgebraError::Integrality(format!("N6 = {n144}/144")));
    }
    Ok(LeBarz { delta, t, h, n6: (n144 / 144) as i64 })
}

/// Degree and sectional genus of the surface linked in a `(m, n)` complete
/// intersection.
pub fn liaison_link(d: i64, pi: i64, m: i64, n: i64) -> Result<(i64, i64)> {
    let d2 = m * n - d;
    if d2 <= 0 {
        return Err(AlgebraError::Usage(format!("complete intersection ({m}, {n}) cannot contain degree {d}")));
    }
    let num = (m + n - 4) * (d - d2);
    if num % 2 != 0 {
        return Err(AlgebraError::Integrality(format!("linked genus {pi} - {num}/2")));
    }
    Ok((d2, pi - num / 2))
}

/// `χ(O_X(t))` for a complete intersection surface `X` of type `(m, n)`.
pub fn chi_of_ci_surface(m: i64, n: i64, t: i64) -> i64 {
    let p = |k: i64| binom(k + 4, 4);
    p(t) - p(t - m) - p(t - n) + p(t - m - n)
}

/// `χ(O_S(k))` by Riemann-Roch.
pub fn chi_twist(d: i64, hk: i64, chi: i64, k: i64) -> i64 {
    chi + (k * k * d - k * hk) / 2
}

/// `χ(O_{S'})` of the linked surface, given `χ(O_X)` of the complete
/// intersection.
pub fn liaison_chi(chi_ci: i64, d: i64, pi: i64, chi: i64, m: i64, n: i64) -> i64 {
    chi_ci - chi_twist(d, 2 * pi - 2 - d, chi, m + n - 5)
}

/// One row of an adjunction table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjunctionRow {
    pub hsq: i64,
    pub hk: i64,
    pub ksq: i64,
    pub pi: i64,
    pub ambient_dim: i64,
}

impl AdjunctionRow {
    pub fn of_surface(inv: &SurfaceInvariants) -> Self {
        AdjunctionRow { hsq: inv.d, hk: inv.hk(), ksq: inv.k2, pi: inv.pi, ambient_dim: 4 }
    }
}

/// Image under `|H + K|` after contracting `a` disjoint (-1)-curves `E` with
/// `(H + K)·E = 0`.
pub fn adjunction_step(row: &AdjunctionRow, chi: i64, a: i64) -> AdjunctionRow {
    let hsq = row.hsq + 2 * row.hk + row.ksq;
    let hk = row.hk + row.ksq;
    let ksq = row.ksq + a;
    AdjunctionRow { hsq, hk, ksq, pi: (hsq + hk) / 2 + 1, ambient_dim: chi + (hsq - hk) / 2 - 1 }
}

/// `π = χ + 8 + h¹(O_S(H)) - h⁰(O_S(K - H))` for a degree-12 surface.
pub fn severi_genus(chi: i64, h1_oh: i64, h0_kmh: i64) -> i64 {
    chi + 8 + h1_oh - h0_kmh
}

pub fn severi_residual(pi: i64, chi: i64, h1_oh: i64, h0_kmh: i64) -> i64 {
    pi - severi_genus(chi, h1_oh, h0_kmh)
}

/// `χ(I_S(p)) = χ(O_P4(p)) - χ(O_S(p))`.
pub fn chi_ideal_sheaf(p: i64, inv: &SurfaceInvariants) -> i64 {
    binom(p + 4, 4) - chi_twist(inv.d, inv.hk(), inv.chi, p)
}

/// Known values `h^i(I_S(p))`, used to fill a cohomology table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyAssumptions {
    pub known: Vec<(usize, i64, i64)>,
}

impl CohomologyAssumptions {
    /// Reduced, linearly normal, no forms of degree `<= m0` vanishing on
    /// `S`; `h²(I_S) = q`, `h³(I_S) = p_g`, `h³(I_S(k)) = 0` for `k >= 1`.
    pub fn standard(m0: i64, q: i64, pg: i64, range: core::ops::RangeInclusive<i64>) -> Self {
        let mut known = Vec::new();
        for p in range {
            if p <= m0 {
                known.push((0, p, 0));
            }
            if p <= 1 {
                known.push((1, p, 0));
            }
            if p >= 1 {
                known.push((3, p, 0));
            }
            if p == 0 {
                known.push((2, 0, q));
                known.push((3, 0, pg));
            }
        }
        CohomologyAssumptions { known }
    }

    /// Adds `h^i(I_S(p)) = v`.
    pub fn with(mut self, i: usize, p: i64, v: i64) -> Self {
        self.known.retain(|k| !(k.0 == i && k.1 == p));
        self.known.push((i, p, v));
        self
    }

    fn get(&self, i: usize, p: i64) -> Option<i64> {
        self.known.iter().find(|k| k.0 == i && k.1 == p).map(|k| k.2)
    }
}

/// Column `p` of a cohomology table: `h^i(I_S(p))`, `None` where unresolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyColumn {
    pub p: i64,
    pub h: [Option<i64>; 4],
    pub chi: i64,
}

/// Fills `h^0..h^3` of `I_S(p)` from the assumptions, solving for a single
/// unknown entry per column by `χ`.
pub fn cohomology_table(
    inv: &SurfaceInvariants,
    assumptions: &CohomologyAssumptions,
    range: core::ops::RangeInclusive<i64>,
) -> Result<Vec<CohomologyColumn>> {
    let mut out = Vec::new();
    for p in range {
        let chi = chi_ideal_sheaf(p, inv);
        let mut h: [Option<i64>; 4] = core::array::from_fn(|i| assumptions.get(i, p));
        let unknown: Vec<usize> = (0..4).filter(|&i| h[i].is_none()).collect();
        let known_sum: i64 = (0..4).filter_map(|i| h[i].map(|v| if i % 2 == 0 { v } else { -v })).sum();
        match unknown.as_slice() {
            [] if known_sum != chi => {
                return Err(AlgebraError::Verification {
                    stage: "cohomology table".into(),
                    detail: format!("column {p}: alternating sum {known_sum} but chi = {chi}"),
                })
            }
            [i] => {
                let v = if i % 2 == 0 { chi - known_sum } else { known_sum - chi };
                if v < 0 {
                    return Err(AlgebraError::Verification {
                        stage: "cohomology table".into(),
                        detail: format!("column {p}: forced h^{i} = {v}"),
                    });
                }
                h[*i] = Some(v);
            }
            _ => {}
        }
        out.push(CohomologyColumn { p, h, chi });
    }
    Ok(out)
}

/// `h⁰(P⁴, Ω^p(t))` by Bott's formula.
pub fn bott_h0(p: i64, t: i64) -> i64 {
    if p == 0 {
        return if t >= 0 { binom(t + 4, 4) } else { 0 };
    }
    if t <= p {
        return 0;
    }
    binom(t + 4 - p, (4 - p) as u32) * binom(t - 1, p as u32)
}

#[cfg(test)]
mod tests;
