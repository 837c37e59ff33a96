//! Hilbert series, functions and polynomials.

use alloc::vec::Vec;

use crate::mono::{Mono, Vars};

/// Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    pub low: i32,
    pub coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn monomial(k: i32, c: i64) -> Self {
        LaurentPoly { low: k, coeffs: alloc::vec![c] }.trim()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let i = k - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            return LaurentPoly::default();
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let coeffs = (low..=high).map(|k| self.coeff(k) + o.coeff(k)).collect();
        LaurentPoly { low, coeffs }.trim()
    }

    pub fn scale(&self, c: i64) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.trim()
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::default();
        }
        let mut coeffs = alloc::vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly { low: self.low + o.low, coeffs }.trim()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Divide by `1 - t` if exact.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.eval_at_one() != 0 {
            return None;
        }
        // q_k = Σ_{i<=k} p_i
        let mut acc = 0;
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            coeffs.push(acc);
        }
        Some(LaurentPoly { low: self.low, coeffs }.trim())
    }
}

/// Generalized binomial coefficient `C(x, m)` for any integer `x`.
pub fn binom(x: i64, m: u32) -> i64 {
    let mut num: i128 = 1;
    for k in 0..m as i128 {
        num = num * (x as i128 - k) / (k + 1);
    }
    num as i64
}

fn minimalize(gens: &mut Vec<Mono>) {
    gens.sort_by_key(|m| m.deg());
    gens.dedup();
    let mut out: Vec<Mono> = Vec::with_capacity(gens.len());
    for &g in gens.iter() {
        if !out.iter().any(|h| h.divides(g)) {
            out.push(g);
        }
    }
    *gens = out;
}

/// Numerator `N(t)` of `HS(R/I) = N(t) / Π(1 - t^{w_i})` for a monomial ideal.
pub fn monomial_numerator(vars: &Vars, gens: &[Mono]) -> LaurentPoly {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    numerator_rec(vars, g)
}

fn numerator_rec(vars: &Vars, gens: Vec<Mono>) -> LaurentPoly {
    if gens.iter().any(|m| m.is_one()) {
        return LaurentPoly::default();
    }
    // pairwise coprime generators: product formula
    let mut coprime = true;
    'outer: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].coprime(gens[j]) {
                coprime = false;
                break 'outer;
            }
        }
    }
    if coprime {
        let mut acc = LaurentPoly::one();
        for g in &gens {
            acc = acc.mul(&LaurentPoly { low: 0, coeffs: one_minus_t_power(g.deg()) });
        }
        return acc;
    }
    // pivot on the variable occurring most often, with exponent 1
    let n = vars.len();
    let (var, _) = (0..n).map(|i| (i, gens.iter().filter(|m| m.exp(i) > 0).count())).max_by_key(|x| x.1).unwrap();
    let p = vars.var(var);
    let mut sum = gens.clone();
    sum.push(p);
    minimalize(&mut sum);
    let mut quot: Vec<Mono> = gens
        .iter()
        .map(|&m| if p.divides(m) { p.quotient_of(m) } else { m })
        .collect();
    minimalize(&mut quot);
    numerator_rec(vars, sum).add(&numerator_rec(vars, quot).shift(p.deg() as i32))
}

fn one_minus_t_power(d: u32) -> Vec<i64> {
    let mut c = alloc::vec![0i64; d as usize + 1];
    c[0] = 1;
    c[d as usize] -= 1;
    c
}

/// Hilbert polynomial in the basis `C(t+i, i)`, `i = 0..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HilbertPolynomial {
    pub binomial_coeffs: Vec<i64>,
}

impl HilbertPolynomial {
    /// Projective dimension (degree of the polynomial); -1 for zero.
    pub fn dim(&self) -> i32 {
        self.binomial_coeffs.len() as i32 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.binomial_coeffs.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.binomial_coeffs.iter().enumerate().map(|(i, a)| a * binom(t + i as i64, i as u32)).sum()
    }

    /// Degree of the scheme: the top binomial coefficient.
    pub fn degree(&self) -> i64 {
        self.binomial_coeffs.last().copied().unwrap_or(0)
    }
}

/// Series `N(t) / (1-t)^n` of a standard graded module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: LaurentPoly,
    pub nvars: usize,
}

impl HilbertSeries {
    /// `HS(M)` summed over components: `Σ t^{e_c} N(lead ideal in comp c)`.
    pub fn of_lead_terms(vars: &Vars, twists: &[i32], leads: &[(Mono, u32)]) -> Self {
        assert!(vars.is_standard(), "Hilbert series needs the standard grading");
        let mut num = LaurentPoly::default();
        for (c, &e) in twists.iter().enumerate() {
            let gens: Vec<Mono> = leads.iter().filter(|l| l.1 as usize == c).map(|l| l.0).collect();
            num = num.add(&monomial_numerator(vars, &gens).shift(e));
        }
        HilbertSeries { numerator: num, nvars: vars.len() }
    }

    pub fn function(&self, d: i32) -> i64 {
        let n = self.nvars as i64;
        let mut s = 0;
        for (i, c) in self.numerator.coeffs.iter().enumerate() {
            let k = self.numerator.low + i as i32;
            if d >= k {
                s += c * binom(d as i64 - k as i64 + n - 1, (n - 1) as u32);
            }
        }
        s
    }

    /// Reduced form `Q(t) / (1-t)^r` with `Q(1) != 0`.
    pub fn reduced(&self) -> (LaurentPoly, usize) {
        let mut q = self.numerator.clone();
        let mut r = self.nvars;
        while r > 0 && !q.is_zero() {
            match q.div_one_minus_t() {
                Some(x) => {
                    q = x;
                    r -= 1;
                }
                None => break,
            }
        }
        (q, r)
    }

    pub fn polynomial(&self) -> HilbertPolynomial {
        let (q, r) = self.reduced();
        if q.is_zero() || r == 0 {
            return HilbertPolynomial::default();
        }
        let r = r as i64;
        let p = |t: i64| -> i64 {
            q.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * binom(t - (q.low as i64 + i as i64) + r - 1, (r - 1) as u32))
                .sum()
        };
        // P(-s) only involves a_0..a_{s-1}
        let dim = (r - 1) as usize;
        let mut a: Vec<i64> = Vec::with_capacity(dim + 1);
        for s in 1..=dim as i64 + 1 {
            let known: i64 = a.iter().enumerate().map(|(i, ai)| ai * binom(i as i64 - s, i as u32)).sum();
            let top = binom(s - 1 - s, (s - 1) as u32);
            a.push((p(-s) - known) / top);
        }
        HilbertPolynomial { binomial_coeffs: a }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_extend_to_negative_arguments() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(-1, 3), -1);
        assert_eq!(binom(-2, 2), 3);
        assert_eq!(binom(3, 5), 0);
    }

    #[test]
    fn polynomial_ring_and_twisted_cubic_lead_ideal() {
        let v = Vars::new(5);
        let hs = HilbertSeries::of_lead_terms(&v, &[0], &[]);
        for d in 0..8 {
            assert_eq!(hs.function(d), binom(d as i64 + 4, 4));
        }
        // twisted cubic leads in grevlex: x1^2, x1x2, x2^2 in k[x0..x3]
        let v = Vars::new(4);
        let leads = [v.mono(&[0, 2, 0, 0]), v.mono(&[0, 1, 1, 0]), v.mono(&[0, 0, 2, 0])];
        let hs = HilbertSeries::of_lead_terms(&v, &[0], &leads.map(|m| (m, 0)));
        let hp = hs.polynomial();
        assert_eq!(hp.dim(), 1);
        assert_eq!(hp.degree(), 3);
        for t in 0..6 {
            assert_eq!(hp.eval(t), 3 * t + 1);
        }
    }
}
