//! Packed monomials.
//!
//! A monomial is a `u128`: byte `i` (for `i < 15`) holds the exponent of
//! variable `i`, the top byte holds the (weighted) degree. Every byte stays
//! below 128, which keeps multiplication a plain addition and makes the
//! divisibility test a single borrow-free subtraction.

use core::cmp::Ordering;
use core::fmt;

/// Maximum number of variables a ring may have.
pub const MAX_VARS: usize = 15;
/// Largest exponent or degree storable in a packed monomial.
pub const MAX_EXP: u32 = 127;

const HIGH: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
const LOW7: u128 = 0x7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f7f;
const REST: u128 = (1u128 << 120) - 1;

/// Variable count and grading weights of a polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vars {
    n: u8,
    weights: [u8; MAX_VARS],
}

impl Vars {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        Vars { n: n as u8, weights: [1; MAX_VARS] }
    }

    pub fn weighted(weights: &[u32]) -> Self {
        assert!(weights.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut w = [1u8; MAX_VARS];
        for (slot, &x) in w.iter_mut().zip(weights) {
            assert!((1..=16).contains(&x), "weights must lie in 1..=16");
            *slot = x as u8;
        }
        Vars { n: weights.len() as u8, weights: w }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i] as u32
    }

    pub fn is_standard(&self) -> bool {
        self.weights[..self.len()].iter().all(|&w| w == 1)
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights[..self.len()]
    }

    pub fn mono(&self, exps: &[u32]) -> Mono {
        assert!(exps.len() <= self.len());
        let mut bits = 0u128;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXP, "exponent {e} too large");
            bits |= (e as u128) << (8 * i);
            deg += e * self.weight(i);
        }
        assert!(deg <= MAX_EXP, "degree {deg} too large");
        Mono(bits | ((deg as u128) << 120))
    }

    pub fn var(&self, i: usize) -> Mono {
        assert!(i < self.len());
        Mono((1u128 << (8 * i)) | ((self.weight(i) as u128) << 120))
    }

    pub fn lcm(&self, a: Mono, b: Mono) -> Mono {
        let mut exps = [0u32; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate().take(self.len()) {
            *e = a.exp(i).max(b.exp(i));
        }
        self.mono(&exps[..self.len()])
    }

    pub fn gcd(&self, a: Mono, b: Mono) -> Mono {
        let mut exps = [0u32; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate().take(self.len()) {
            *e = a.exp(i).min(b.exp(i));
        }
        self.mono(&exps[..self.len()])
    }

    /// Degree of the part of `m` supported on variables `range`.
    pub fn partial_degree(&self, m: Mono, range: core::ops::Range<usize>) -> u32 {
        range.map(|i| m.exp(i) * self.weight(i)).sum()
    }

    /// Every monomial of weighted degree `d`, in descending grevlex order.
    pub fn monomials_of_degree(&self, d: u32) -> alloc::vec::Vec<Mono> {
        let mut out = alloc::vec::Vec::new();
        let mut exps = [0u32; MAX_VARS];
        self.enumerate(0, d, &mut exps, &mut out);
        out.sort_unstable_by(|a, b| b.grevlex_cmp(*a));
        out
    }

    fn enumerate(&self, i: usize, left: u32, exps: &mut [u32; MAX_VARS], out: &mut alloc::vec::Vec<Mono>) {
        let n = self.len();
        if n == 0 {
            if left == 0 {
                out.push(Mono::ONE);
            }
            return;
        }
        if i == n - 1 {
            let w = self.weight(i);
            if left.is_multiple_of(w) {
                exps[i] = left / w;
                out.push(self.mono(&exps[..n]));
            }
            return;
        }
        let w = self.weight(i);
        for e in 0..=left / w {
            exps[i] = e;
            self.enumerate(i + 1, left - e * w, exps, out);
        }
        exps[i] = 0;
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vars({}, {:?})", self.n, self.weights())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    #[inline]
    pub fn deg(self) -> u32 {
        (self.0 >> 120) as u32
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mono) -> Mono {
        let r = Mono(self.0 + other.0);
        debug_assert!(r.0 & HIGH == 0, "exponent overflow");
        r
    }

    /// Does `self` divide `other`?
    #[inline]
    pub fn divides(self, other: Mono) -> bool {
        ((other.0 | HIGH).wrapping_sub(self.0)) & HIGH == HIGH
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(self, other: Mono) -> Mono {
        debug_assert!(self.divides(other));
        Mono(other.0 - self.0)
    }

    #[inline]
    pub fn coprime(self, other: Mono) -> bool {
        let nz = |x: u128| ((x & REST) + (LOW7 & REST)) & HIGH;
        nz(self.0) & nz(other.0) == 0
    }

    /// Graded reverse lexicographic comparison (weighted degree first).
    #[inline]
    pub fn grevlex_cmp(self, other: Mono) -> Ordering {
        match self.deg().cmp(&other.deg()) {
            Ordering::Equal => (other.0 & REST).cmp(&(self.0 & REST)),
            o => o,
        }
    }

    /// Lexicographic comparison with x0 > x1 > ...
    pub fn lex_cmp(self, other: Mono) -> Ordering {
        for i in 0..MAX_VARS {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn exponents(self, n: usize) -> alloc::vec::Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    /// Highest variable index with a nonzero exponent.
    pub fn max_var(self) -> Option<usize> {
        (0..MAX_VARS).rev().find(|&i| self.exp(i) > 0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..MAX_VARS {
            let e = self.exp(i);
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{e}")?;
                }
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let v = Vars::new(5);
        let a = v.mono(&[1, 0, 2, 0, 0]);
        let b = v.mono(&[2, 1, 2, 0, 3]);
        assert!(a.divides(b));
        assert!(!b.divides(a));
        let q = a.quotient_of(b);
        assert_eq!(q.exponents(5), [1, 1, 0, 0, 3]);
        assert_eq!(q.deg(), 5);
        assert_eq!(a.mul(q), b);
    }

    #[test]
    fn coprimality() {
        let v = Vars::new(5);
        assert!(v.mono(&[1, 0, 0, 0, 0]).coprime(v.mono(&[0, 2, 0, 0, 1])));
        assert!(!v.mono(&[1, 0, 0, 0, 1]).coprime(v.mono(&[0, 2, 0, 0, 2])));
        assert!(v.mono(&[1, 0, 0, 0, 0]).coprime(v.mono(&[0, 0, 0, 0, 0])));
    }

    #[test]
    fn grevlex_degree_five_tie_break() {
        let v = Vars::new(5);
        let a = v.mono(&[4, 0, 0, 0, 1]);
        let b = v.mono(&[0, 0, 0, 1, 4]);
        assert_eq!(a.grevlex_cmp(b), Ordering::Greater);
        // x1^2 > x0*x2 in grevlex
        assert_eq!(v.mono(&[0, 2, 0]).grevlex_cmp(v.mono(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn enumeration_counts() {
        let v = Vars::new(5);
        assert_eq!(v.monomials_of_degree(5).len(), 126);
        let w = Vars::weighted(&[1, 1, 2]);
        // x0^a x1^b x2^c with a + b + 2c = 4: c=0:5, c=1:3, c=2:1
        assert_eq!(w.monomials_of_degree(4).len(), 9);
    }
}
