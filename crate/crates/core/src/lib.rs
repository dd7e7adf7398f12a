//! Hecke algebras over the Weyl groups of symmetrizable Kac-Moody algebras:
//! Kazhdan-Lusztig polynomials, Deodhar's parabolic variants for both
//! markers a in {q, -1}, inverse polynomials by triangular inversion, and
//! verification suites that check every identity with exact arithmetic.
//!
//! The algebraic tower is generic over the coefficient scalar through
//! [`laurent::Coeff`] (any exact signed integer type); the aliases below fix
//! the scalar to `BigInt`, which is what the command-line tools use.

pub mod cartan;
pub mod coxeter;
mod error;
pub mod hecke;
pub mod laurent;
pub mod parabolic;
pub mod verify;

pub use cartan::{preset, GeneralizedCartanMatrix};
pub use coxeter::{CoxeterSystem, Element};
pub use error::{Error, Result};
pub use parabolic::Marker;

/// Arbitrary-precision coefficient scalar used by the concrete aliases.
pub type Int = num_bigint::BigInt;

/// Laurent polynomial over arbitrary-precision integers.
pub type LaurentPoly = laurent::LaurentPoly<Int>;

/// Hecke algebra element over arbitrary-precision integers.
pub type HeckeElement = hecke::HeckeElement<Int>;

/// Kazhdan-Lusztig table over arbitrary-precision integers.
pub type KLTable = hecke::KLTable<Int>;

/// Parabolic module element over arbitrary-precision integers.
pub type ParabolicElement = parabolic::ParabolicElement<Int>;

/// Parabolic Kazhdan-Lusztig table over arbitrary-precision integers.
pub type ParabolicKLTable = parabolic::ParabolicKLTable<Int>;
