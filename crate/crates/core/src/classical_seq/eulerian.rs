//! Eulerian numbers, Eulerian polynomials, and Eulerian fractions.
//!
//! Two inequivalent conventions for the polynomials circulate under the same
//! symbol and both are needed here, so they are exposed as distinct
//! operations and never converted silently:
//!
//! * the summation convention `S`, where A_n(x)/(1-x)^(n+1) sums the power
//!   series over l of l^n x^l, so A_1(x) = x;
//! * the generating-function convention `G`, the coefficients of
//!   (1-x)/(e^(t(1-x)) - x), so A_1(x) = -1.
//!
//! The bridge between them, x * A_n^G(x) = (-1)^n * A_n^S(x) for n >= 1, is
//! verified empirically in the tests of this module.

use crate::exact_arith::{binomial, Poly, Rat, RatFunc};

/// Which Eulerian polynomial convention an operation should use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Summation convention: coefficients are the triangle entries.
    S,
    /// Generating-function convention.
    G,
}

/// One row of the Eulerian triangle, including the conventional k = 0 entry.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerianTriangleRow {
    pub n: usize,
    /// Entries A(n, 0) ..= A(n, n); A(n, 0) = 1 by convention.
    pub entries: Vec<Rat>,
}

/// The Eulerian number A(n, k) by the explicit alternating binomial sum,
/// with A(n, 0) = 1 by convention and zero outside 0 <= k <= n.
pub fn eulerian_number(n: usize, k: i64) -> Rat {
    if k < 0 || k > n as i64 {
        return Rat::zero();
    }
    let k = k as usize;
    if k == 0 {
        return Rat::one();
    }
    let mut sum = Rat::zero();
    for j in 0..=k {
        let base = Rat::from_integer((k - j) as i64).pow(n as u32);
        let term = binomial(n + 1, j) * base;
        if j % 2 == 0 {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
    }
    sum
}

/// Row n of the triangle.
pub fn triangle_row(n: usize) -> EulerianTriangleRow {
    EulerianTriangleRow {
        n,
        entries: (0..=n as i64).map(|k| eulerian_number(n, k)).collect(),
    }
}

/// Summation-convention Eulerian polynomial: the triangle row as a
/// polynomial over k = 1..n, and the constant 1 for n = 0.
pub fn eulerian_poly_s(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let mut coeffs = vec![Rat::zero()];
    coeffs.extend((1..=n as i64).map(|k| eulerian_number(n, k)));
    Poly::new(coeffs)
}

/// Generating-function-convention Eulerian polynomial, computed by the
/// recurrence A_n(x) = (1/(x-1)) * sum over k < n of
/// C(n,k) A_k(x) (1-x)^(n-k), seeded with A_0 = 1. The division is exact;
/// a nonzero remainder would mean the family is not closed and panics.
pub fn eulerian_poly_g(n: usize) -> Poly {
    let one_minus_x = Poly::from_ints(&[1, -1]);
    let x_minus_one = Poly::from_ints(&[-1, 1]);
    let mut family: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let mut sum = Poly::zero();
        for (k, prev) in family.iter().enumerate() {
            let term = prev.scale(&binomial(m, k)) * one_minus_x.pow((m - k) as u32);
            sum = &sum + &term;
        }
        let next = sum
            .exact_div(&x_minus_one)
            .expect("Eulerian recurrence must divide exactly by x - 1");
        family.push(next);
    }
    family.pop().unwrap()
}

/// Eulerian fraction: A_n(x) / (1-x)^(n+1) in canonical form, under the
/// selected polynomial convention.
pub fn eulerian_fraction(n: usize, convention: Convention) -> RatFunc {
    let numerator = match convention {
        Convention::S => eulerian_poly_s(n),
        Convention::G => eulerian_poly_g(n),
    };
    let denominator = Poly::from_ints(&[1, -1]).pow(n as u32 + 1);
    RatFunc::new(numerator, denominator).expect("nonzero denominator")
}
