//! Exact scalar, polynomial, and rational-function arithmetic.
//!
//! Everything downstream is built on these three types: [`Rat`] scalars,
//! dense [`Poly`] polynomials, and canonical [`RatFunc`] quotients. All
//! values are immutable after construction and all operations are pure.

mod poly;
mod rat;
mod ratfunc;

pub use poly::{poly_gcd, Poly, PolyDisplay};
pub use rat::{binomial, binomial_int, factorial, int_gcd, Rat};
pub use ratfunc::{ratfunc_simplify, RatFunc, RatFuncDisplay};
