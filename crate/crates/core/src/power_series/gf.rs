//! Exponential generating functions, expanded by truncated series division.
//!
//! Coefficients returned here are factorial-normalized: entry n is
//! n! * [t^n] GF. Every expansion is carried two orders past the request to
//! flush out off-by-one extraction bugs.

use super::{series_exp, Coeff, Series};
use crate::error::Error;
use crate::exact_arith::{Poly, Rat, RatFunc};

/// Truncation guard: how far past the requested order the series run.
const ORDER_GUARD: usize = 2;

/// Generating functions the oracle knows how to expand.
#[derive(Clone, Debug, PartialEq)]
pub enum GfId {
    /// (1-x)/(e^(t(1-x)) - x), symbolically in x or at a rational point.
    ClassicalEulerian { point: Option<Rat> },
    /// The graded two-parameter family reduced to one variable: every power
    /// of t carries one power of L = ln b, so the substitution tau = t*L
    /// leaves (1-a)/(e^(tau(1-a)) - a) expanded over rational functions in a.
    /// Entry n is the coefficient polynomial of L^n.
    Generalized,
    /// (tx)^k/k! * e^(t(1-x)): entry n is the degree-n Bernstein basis
    /// element for index k.
    Bernstein { k: usize, point: Option<Rat> },
    /// 2/(e^t + 1).
    Euler,
    /// t/(e^t - 1).
    Bernoulli,
    /// 2t/(e^t + 1).
    Genocchi,
    /// The a = -1 specialization 2/(e^(2 tau) + 1); entry n is the rational
    /// coefficient of L^n.
    MinusOne,
}

/// Factorial-normalized coefficients, numeric or symbolic.
#[derive(Clone, Debug, PartialEq)]
pub enum GfCoeffs {
    Rats(Vec<Rat>),
    Polys(Vec<Poly>),
}

/// Expands the identified generating function through t^order and returns
/// the factorial-normalized coefficients c_0 .. c_order.
pub fn gf_coefficients(id: &GfId, order: usize) -> Result<GfCoeffs, Error> {
    match id {
        GfId::ClassicalEulerian { point: None } | GfId::Generalized => {
            Ok(GfCoeffs::Polys(eulerian_kernel_symbolic(order)?))
        }
        GfId::ClassicalEulerian { point: Some(x) } => {
            Ok(GfCoeffs::Rats(eulerian_kernel_at(x, order)?))
        }
        GfId::MinusOne => Ok(GfCoeffs::Rats(eulerian_kernel_at(
            &Rat::from_integer(-1),
            order,
        )?)),
        GfId::Bernstein { k, point: None } => Ok(GfCoeffs::Polys(bernstein_symbolic(*k, order))),
        GfId::Bernstein { k, point: Some(x) } => {
            let polys = bernstein_symbolic(*k, order);
            Ok(GfCoeffs::Rats(polys.iter().map(|p| p.eval(x)).collect()))
        }
        GfId::Euler => Ok(GfCoeffs::Rats(euler_series(order).collect_egf(order))),
        GfId::Bernoulli => {
            // (e^t - 1)/t is a unit series; its reciprocal is the whole GF.
            let unit = Series::from_fn(order + ORDER_GUARD, |m| {
                Rat::from_bigint(crate::exact_arith::factorial(m + 1))
                    .recip()
                    .unwrap()
            });
            Ok(GfCoeffs::Rats(unit.reciprocal()?.collect_egf(order)))
        }
        GfId::Genocchi => Ok(GfCoeffs::Rats(
            euler_series(order).shift_up(1).collect_egf(order),
        )),
    }
}

impl<C: Coeff> Series<C> {
    fn collect_egf(&self, order: usize) -> Vec<C> {
        (0..=order).map(|n| self.egf_coeff(n)).collect()
    }
}

/// 2/(e^t + 1) expanded with the truncation guard.
fn euler_series(order: usize) -> Series<Rat> {
    let half_sum = Series::from_fn(order + ORDER_GUARD, |m| {
        if m == 0 {
            Rat::one()
        } else {
            Rat::ratio(1, 2)
                * Rat::from_bigint(crate::exact_arith::factorial(m))
                    .recip()
                    .unwrap()
        }
    });
    half_sum.reciprocal().expect("unit constant term")
}

/// Symbolic expansion of (1-u)/(e^(t(1-u)) - u) over rational functions in
/// the parameter. Each factorial-normalized coefficient provably clears its
/// (1-u)-power denominators; the cancellation is asserted here.
fn eulerian_kernel_symbolic(order: usize) -> Result<Vec<Poly>, Error> {
    let one_minus_u = RatFunc::from_poly(Poly::from_ints(&[1, -1]));
    let series = eulerian_kernel_series(&one_minus_u, order + ORDER_GUARD)?;
    (0..=order)
        .map(|n| {
            let c = series.egf_coeff(n);
            Ok(c.as_poly()
                .unwrap_or_else(|| panic!("coefficient {n} failed to cancel its denominators: {c}"))
                .clone())
        })
        .collect()
}

/// Numeric expansion of the same kernel at u = point.
fn eulerian_kernel_at(point: &Rat, order: usize) -> Result<Vec<Rat>, Error> {
    let one_minus_u = Rat::one() - point;
    let series = eulerian_kernel_series(&one_minus_u, order + ORDER_GUARD)?;
    Ok(series.collect_egf(order))
}

/// (1-u)/(e^(t(1-u)) - u) as a truncated series, for any coefficient field
/// element standing for 1-u.
fn eulerian_kernel_series<C: Coeff>(one_minus_u: &C, order: usize) -> Result<Series<C>, Error> {
    // e^(t(1-u)) - u has constant term 1-u and coefficient (1-u)^m/m! above.
    let exp_factor = series_exp(one_minus_u, order);
    let denominator = Series::from_fn(order, |m| {
        if m == 0 {
            one_minus_u.clone()
        } else {
            exp_factor.coeff(m)
        }
    });
    Ok(denominator.reciprocal()?.scale(one_minus_u))
}

/// Entry n of the Bernstein column GF: zero below t^k, then the closed
/// binomial form, built directly from the exponential factor.
fn bernstein_symbolic(k: usize, order: usize) -> Vec<Poly> {
    let x = Poly::var();
    let one_minus_x = Poly::from_ints(&[1, -1]);
    (0..=order)
        .map(|n| {
            if n < k {
                Poly::zero()
            } else {
                x.pow(k as u32).scale(&crate::exact_arith::binomial(n, k))
                    * one_minus_x.pow((n - k) as u32)
            }
        })
        .collect()
}
