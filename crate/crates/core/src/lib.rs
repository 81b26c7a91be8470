//! Exact arithmetic for the Eulerian families and their identity battery.
//!
//! The crate is organized in five layers:
//!
//! * [`exact_arith`] — arbitrary-precision rationals, dense univariate
//!   polynomials, and canonical rational functions;
//! * [`power_series`] — truncated formal power series over those scalars,
//!   the independent oracle for every sequence here;
//! * [`classical_seq`] — Eulerian numbers/polynomials/fractions, Stirling,
//!   Bernoulli/Euler/Genocchi numbers, negative-order polylogarithms, and
//!   Euler-zeta values at negative integers;
//! * [`gen_eulerian`] — the graded two-parameter family q_n(a) (ln b)^n,
//!   computed by two independent routes, plus the identity-audit harness
//!   and its compiled-in registry;
//! * [`padic`] — p-adic valuations and alternating fermionic partial sums.
//!
//! Everything is exact: no floating point anywhere. All values are immutable
//! after construction and all operations are pure, so any of this can run
//! concurrently without coordination.

pub mod classical_seq;
pub mod error;
pub mod exact_arith;
pub mod gen_eulerian;
pub mod padic;
pub mod power_series;

pub use error::Error;
pub use exact_arith::{binomial, factorial, Poly, Rat, RatFunc};
