//! Generator sets of rational normal scroll ideals and their verification.
//!
//! The crate builds the 2-minor ideals of two-row matrices made of
//! catalecticant (Hankel) blocks, several smaller generating sets that
//! agree with them up to radical, and checks those radical equalities with
//! an exact Gröbner-basis engine and a finite-field point enumerator.
//!
//! Everything is generic over the coefficient field ([`algebra::Field`]);
//! the aliases below fix the two fields used in practice.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod scrolls;
pub mod verify;

pub use algebra::{Field, FieldSpec, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
pub use error::{Error, Result};

pub use algebra::{Rational, Zp};

/// Polynomials with rational coefficients.
pub type QPoly = Polynomial<Rational>;
/// Polynomials over a prime field `F_p`.
pub type FpPoly = Polynomial<Zp>;
/// Polynomial ring over the rationals.
pub type QRing = Ring<Rational>;
/// Polynomial ring over `F_p`.
pub type FpRing = Ring<Zp>;
/// Generator sets over the rationals.
pub type QGenerators = scrolls::GeneratorSet<Rational>;
/// Generator sets over `F_p`.
pub type FpGenerators = scrolls::GeneratorSet<Zp>;
