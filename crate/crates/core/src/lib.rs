//! Divisor sums over F2[x] and a classifier for bi-unitary perfect polynomials.
//!
//! A polynomial `A` is bi-unitary perfect when `σ**(A) = A`, where `σ**` sums
//! the divisors `D` of `A` whose greatest common unitary divisor with `A/D`
//! is 1. [`search`] enumerates every such `A` with at most four distinct
//! prime factors inside explicit bounds and compares the result with
//! [`catalog`].
//!
//! ```
//! use gf2bup::{parse_poly, sigma::sigma_bistar};
//!
//! let c1 = parse_poly("x^3*(x+1)^4*(x^2+x+1)").unwrap();
//! assert_eq!(sigma_bistar(&c1).unwrap(), c1);
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod factor;
pub mod mersenne;
pub mod poly;
pub mod report;
pub mod search;
pub mod sigma;

pub use error::{Error, Result};
pub use factor::{factorize, is_irreducible, is_odd_poly, omega, Factorization, PrimePower};
pub use poly::{format_poly, parse_poly, parse_poly_with, Poly, Style};
