//! JSON reports.

use serde::{Deserialize, Serialize};
use surfgen_core::constructions::Check;
use surfgen_core::scheme::SchemeReport;
use surfgen_core::BettiTable;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeJson {
    pub dim: i32,
    pub degree: i64,
    pub sectional_genus: Option<i64>,
    #[serde(rename = "chi_O")]
    pub chi_o: Option<i64>,
    pub saturated: bool,
    pub acm: Option<bool>,
    /// Coefficients `a_k` of `Σ a_k binom(t + k, k)`.
    pub hilbert_polynomial: Vec<i64>,
}

impl From<&SchemeReport> for SchemeJson {
    fn from(r: &SchemeReport) -> Self {
        SchemeJson {
            dim: r.dim,
            degree: r.degree,
            sectional_genus: r.sectional_genus,
            chi_o: r.chi_o,
            saturated: r.saturated,
            acm: r.acm,
            hilbert_polynomial: r.hilbert_polynomial.binomial_coeffs.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        CheckJson { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub name: String,
    pub file: Option<String>,
    pub generator_degrees: Vec<(u32, usize)>,
}

/// Output of `construct` and `invariants`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub schema: u32,
    pub recipe: Option<String>,
    pub input: Option<String>,
    pub seed: u64,
    pub effective_seed: u64,
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub wall_time_ms: u64,
    pub scheme: Option<SchemeJson>,
    pub smooth: Option<bool>,
    /// `(i, j, β_ij)` triples of `R/I`.
    pub betti: Option<Vec<(usize, i32, usize)>>,
    pub checks: Vec<CheckJson>,
    pub ideals: Vec<IdealJson>,
    pub passed: bool,
}

pub fn betti_json(b: &BettiTable) -> Vec<(usize, i32, usize)> {
    b.entries().collect()
}
