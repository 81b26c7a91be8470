//! Polylogarithms at negative integer order and Euler-zeta values at
//! negative integers.
//!
//! Li_{-n}(x) is a rational function: the Stirling-number expansion
//! sum over k of k! S(n+1, k+1) (x/(1-x))^(k+1) is used as the defining
//! route, with exact partial sums of the series as the numeric cross-check.

use super::numbers::stirling2;
use crate::error::Error;
use crate::exact_arith::{factorial, Poly, Rat, RatFunc};

/// Li_{-n}(x) as a canonical rational function. By construction the
/// denominator divides (1-x)^(n+1); the tests pin it to exactly that power.
pub fn polylog_neg(n: usize) -> RatFunc {
    // Common denominator (1-x)^(n+1):
    //   numerator = sum over k of k! S(n+1,k+1) x^(k+1) (1-x)^(n-k).
    let one_minus_x = Poly::from_ints(&[1, -1]);
    let mut numerator = Poly::zero();
    for k in 0..=n {
        let weight = Rat::from_bigint(factorial(k)) * stirling2(n + 1, k + 1);
        let term = Poly::monomial(weight, k + 1) * one_minus_x.pow((n - k) as u32);
        numerator = &numerator + &term;
    }
    RatFunc::new(numerator, one_minus_x.pow(n as u32 + 1)).expect("nonzero denominator")
}

/// Exact partial sum of sum over k >= 1 of z^k / k^n (negative n meaning a
/// positive power of k), together with a proven upper bound on the absolute
/// value of the tail. Requires |z| < 1.
pub fn polylog_partial(n: i64, z: &Rat, terms: u32) -> Result<(Rat, Rat), Error> {
    if z.abs() >= Rat::one() {
        return Err(Error::PolylogDomain(z.to_string()));
    }
    assert!(terms >= 1, "at least one term");
    let term = |k: u32| -> Rat {
        let power = z.pow(k);
        if n >= 0 {
            power / Rat::from_integer(k as i64).pow(n as u32)
        } else {
            power * Rat::from_integer(k as i64).pow((-n) as u32)
        }
    };
    let mut value = Rat::zero();
    for k in 1..=terms {
        value = value + term(k);
    }
    if z.is_zero() {
        return Ok((value, Rat::zero()));
    }

    // |term(k+1)/term(k)| = |z| * (k/(k+1))^n, which is decreasing in k for
    // n < 0 and at most |z| for n >= 0. Walk forward until the ratio bound
    // drops below 1, accumulating the walked terms exactly, then close with
    // a geometric tail.
    let ratio_at = |k: u32| -> Rat {
        let step = Rat::new((k as i64 + 1).into(), (k as i64).into());
        if n >= 0 {
            // (k/(k+1))^n <= 1.
            z.abs()
        } else {
            z.abs() * step.pow((-n) as u32)
        }
    };
    let mut start = terms;
    let mut walked = Rat::zero();
    while ratio_at(start) >= Rat::one() {
        start += 1;
        walked = walked + term(start).abs();
    }
    let r = ratio_at(start);
    let geometric = term(start + 1).abs() / (Rat::one() - r);
    Ok((value, walked + geometric))
}

/// The Abel-summed Euler-zeta value at -n: exactly 2 * Li_{-n}(-1).
/// x = -1 is not a pole of the rational form.
pub fn euler_zeta_neg(n: usize) -> Rat {
    let value = polylog_neg(n)
        .eval(&Rat::from_integer(-1))
        .expect("-1 is not a pole of Li_{-n}");
    Rat::from_integer(2) * value
}
