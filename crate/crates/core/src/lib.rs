//! Exact graded commutative algebra over prime fields: polynomials, Gröbner
//! bases of graded submodules, free resolutions, Hilbert data, ideal
//! operations, and recipes that rebuild smooth surfaces in projective 4-space.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod constructions;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homological;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod mono;
pub mod numeric;
pub mod order;
pub mod poly;
pub mod scheme;

pub use error::{AlgebraError, Result};
pub use field::{Field, PrimeField, Rationals, DEFAULT_CHARACTERISTIC};
pub use groebner::GroebnerBasis;
pub use homological::{BettiTable, ModulePresentation};
pub use ideal::Ideal;
pub use module::{check_graded_map, GradedFreeModule, ModuleMap};
pub use mono::{Mono, Vars};
pub use order::{ModTerm, MonomialOrder, TermOrder};
pub use poly::{Polynomial, Ring};
