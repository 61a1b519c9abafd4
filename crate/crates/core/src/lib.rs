//! Tangent cones of monomial curve singularities.
//!
//! For a numerical semigroup `⟨n_0, …, n_c⟩` this crate computes the defining
//! ideal of the semigroup ring, the ideal `J` of its tangent cone, the leading
//! ideal of `J` under reverse lexicographic order, and the graded invariants
//! (multiplicity, codimension, minimal generator degrees, Betti numbers). On
//! top of that it checks the multiplicity bound
//! `e ≤ d^c − (d−1)·d^(c−2)` for non complete intersection tangent cones
//! generated in degree at most `d`, builds the semigroups attaining it and
//! verifies the structure forced at equality.
//!
//! Polynomial arithmetic, Gröbner bases and homology ranks are generic over
//! [`Field`]; the aliases below fix the rational numbers as the default.

pub mod error;
pub mod extremal;
pub mod groebner;
pub mod linalg;
pub mod monomideal;
pub mod poly;
pub mod scalar;
pub mod semigroup;
pub mod tangentcone;
pub mod toric;

pub use error::{Error, Result};
pub use groebner::{Binomial, EffortCaps};
pub use monomideal::{BettiTable, MonomialIdeal};
pub use poly::{Monomial, MonomialOrder, Polynomial, VarNames};
pub use scalar::{Field, Zp};
pub use semigroup::{enumerate_semigroups, NumericalSemigroup};

/// Exact rationals, the default coefficient field.
pub type Q = num_rational::BigRational;
/// Machine-word rationals; adequate for the ±1 coefficients of binomial ideals.
pub type Q64 = num_rational::Rational64;
/// A word-sized prime field for characteristic-p cross-checks.
pub type F32003 = Zp<32003>;

pub type QPolynomial = Polynomial<Q>;
