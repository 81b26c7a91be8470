//! The classical families: Eulerian numbers and polynomials in both of
//! their common conventions, Eulerian fractions, Stirling numbers of the
//! second kind, Bernstein polynomials, Bernoulli/Euler/Genocchi numbers,
//! polylogarithms at negative integer order, and Euler-zeta values at
//! negative integers.

mod eulerian;
mod numbers;
mod polylog;

pub use eulerian::{
    eulerian_fraction, eulerian_number, eulerian_poly_g, eulerian_poly_s, triangle_row, Convention,
    EulerianTriangleRow,
};
pub use numbers::{bernoulli, euler, genocchi, named_number, stirling2, NamedNumberKind};
pub use polylog::{euler_zeta_neg, polylog_neg, polylog_partial};

use crate::error::Error;
use crate::exact_arith::{binomial, Poly};

/// The degree-n Bernstein basis polynomial for index k:
/// C(n,k) x^k (1-x)^(n-k), expanded to dense form.
pub fn bernstein_poly(k: usize, n: usize) -> Result<Poly, Error> {
    if k > n {
        return Err(Error::BernsteinIndex { k, n });
    }
    let x_pow = Poly::var().pow(k as u32);
    let rest = Poly::from_ints(&[1, -1]).pow((n - k) as u32);
    Ok((x_pow * rest).scale(&binomial(n, k)))
}
