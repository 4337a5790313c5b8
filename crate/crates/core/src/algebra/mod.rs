//! Exact coefficient arithmetic, monomials, term orders and sparse
//! multivariate polynomials.

pub mod field;
pub mod monomial;
pub mod poly;
pub mod text;

pub use field::{coeff_inverse, is_prime, Field, FieldSpec, Modulus, Rational, Zp};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{poly_add, poly_mul, Polynomial, Ring};
pub use text::{parse_poly, render, ParseOptions};
