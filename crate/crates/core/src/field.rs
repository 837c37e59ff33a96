//! Coefficient fields: prime fields with a runtime modulus and the rationals.

use alloc::string::{String, ToString};
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_core::RngCore;

use crate::error::AlgebraError;

/// Characteristic used when nothing else is requested.
pub const DEFAULT_CHARACTERISTIC: u32 = 31991;

/// An exact coefficient field. The field value is the context (e.g. the
/// modulus); elements are plain data.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Parse a (possibly signed, arbitrarily long) decimal integer.
    fn from_decimal(&self, digits: &str) -> Result<Self::Elem, AlgebraError>;
    /// Canonical text form; integers print without a denominator.
    fn format(&self, a: &Self::Elem) -> String;

    /// A uniformly random element (small integers for the rationals).
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The prime field F_p, p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p as u64) {
            return Err(AlgebraError::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Representative in (-p/2, p/2].
    pub fn signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r: u64 = 1;
        let p = self.p as u64;
        let mut base = a as u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        a = r as u32;
        a
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_CHARACTERISTIC }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if *a >= *b {
            *a - *b
        } else {
            *a + self.p - *b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i64) as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }
    fn from_decimal(&self, digits: &str) -> Result<u32, AlgebraError> {
        let (neg, body) = match digits.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, digits.strip_prefix('+').unwrap_or(digits)),
        };
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(AlgebraError::BadInteger(digits.to_string()));
        }
        let p = self.p as u64;
        let mut acc = 0u64;
        for b in body.bytes() {
            acc = (acc * 10 + (b - b'0') as u64) % p;
        }
        let v = acc as u32;
        Ok(if neg { self.neg(&v) } else { v })
    }
    fn format(&self, a: &u32) -> String {
        self.signed(*a).to_string()
    }
    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        // rejection sampling keeps the distribution uniform
        let zone = u32::MAX - u32::MAX % self.p;
        loop {
            let x = rng.next_u32();
            if x < zone {
                return x % self.p;
            }
        }
    }
}

/// The field of rational numbers, with arbitrary-precision numerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_decimal(&self, digits: &str) -> Result<BigRational, AlgebraError> {
        let body = digits.strip_prefix('+').unwrap_or(digits);
        let n: BigInt = body
            .parse()
            .map_err(|_| AlgebraError::BadInteger(digits.to_string()))?;
        Ok(BigRational::from_integer(n))
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.from_i64((rng.next_u32() % 21) as i64 - 10)
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            let mut s = a.numer().abs().to_string();
            if a.is_negative() {
                s.insert(0, '-');
            }
            s.push('/');
            s.push_str(&a.denom().to_string());
            s
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_wraps_mod_seven() {
        let f = PrimeField::new(7).unwrap();
        // 5 * 3 = 15 = 1 mod 7
        assert_eq!(f.mul(&5, &3), 1);
        assert_eq!(f.inv(&3), Some(5));
    }

    #[test]
    fn inverse_round_trip_default_prime() {
        let f = PrimeField::default();
        for a in [1u32, 2, 17, 31990, 12345] {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&f.mul(&a, &7), &ai), 7);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(31989).is_err());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn decimal_parsing_reduces() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_decimal("-1").unwrap(), 6);
        assert_eq!(f.from_decimal("100000000000000000000").unwrap(), (100000000000000000000u128 % 7) as u32);
        assert!(f.from_decimal("1x").is_err());
        assert_eq!(f.format(&6), "-1");
    }

    #[test]
    fn rationals_format() {
        let q = Rationals;
        let half = q.div(&q.one(), &q.from_i64(-2)).unwrap();
        assert_eq!(q.format(&half), "-1/2");
    }
}
