//! Exact multivariate polynomials: monomials, monomial orders, polynomials
//! over a [`Field`](crate::Field) and the textual syntax used by the CLI.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_monomial_list, parse_polynomial, VarNames};
pub use polynomial::Polynomial;
