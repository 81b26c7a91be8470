//! Truncated formal power series over an exact coefficient field.
//!
//! A [`Series`] stores the coefficients of t^0 .. t^order. The coefficient
//! ring is chosen per computation: plain [`Rat`] for numeric expansions,
//! [`RatFunc`] when a symbolic parameter rides along. Series division is the
//! independent oracle for every sequence in [`crate::classical_seq`] and for
//! the generalized family in [`crate::gen_eulerian`].

mod gf;

pub use gf::{gf_coefficients, GfCoeffs, GfId};

use crate::error::Error;
use crate::exact_arith::{factorial, Rat, RatFunc};

/// Coefficient field for series arithmetic.
pub trait Coeff: Clone + PartialEq + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Embedding of the rational scalars.
    fn from_rat(r: &Rat) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| &RatFunc::one() / self)
    }
    fn from_rat(r: &Rat) -> Self {
        RatFunc::constant(r.clone())
    }
}

/// Formal power series truncated at `order`: coefficients of t^0 ..= t^order.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C: Coeff> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// Builds a series with coefficient `f(m)` on t^m.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Series::from_fn(order, |m| if m == 0 { c.clone() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, m: usize) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// The factorial-normalized coefficient n! * [t^n].
    pub fn egf_coeff(&self, n: usize) -> C {
        assert!(n <= self.order, "coefficient beyond truncation order");
        self.coeff(n)
            .mul(&C::from_rat(&Rat::from_bigint(factorial(n))))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Series::from_fn(order, |m| self.coeff(m).add(&other.coeff(m)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Series::from_fn(order, |m| self.coeff(m).sub(&other.coeff(m)))
    }

    pub fn scale(&self, c: &C) -> Self {
        Series::from_fn(self.order, |m| self.coeff(m).mul(c))
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Series { order, coeffs: out }
    }

    /// Multiplies by t^k within the same truncation order; the top k
    /// coefficients fall off the end.
    pub fn shift_up(&self, k: usize) -> Self {
        Series::from_fn(self.order, |m| {
            if m < k {
                C::zero()
            } else {
                self.coeff(m - k)
            }
        })
    }

    /// Multiplicative inverse up to the truncation order. The constant term
    /// must be invertible in the coefficient field.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let c0 = self.coeff(0);
        let inv0 = c0
            .inv()
            .ok_or_else(|| Error::NonInvertibleConstant(c0.to_string()))?;
        let mut out = vec![C::zero(); self.order + 1];
        out[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                let a = self.coeff(k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&out[n - k]));
            }
            out[n] = inv0.mul(&acc).neg();
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }
}

/// The exponential series of a scalar multiple of t:
/// sum of c^m t^m / m! for m <= order.
pub fn series_exp<C: Coeff>(c: &C, order: usize) -> Series<C> {
    let mut power = C::one();
    let mut fact = Rat::one();
    Series::from_fn(order, |m| {
        if m > 0 {
            power = power.mul(c);
            fact = &fact * &Rat::from_integer(m as i64);
        }
        power.mul(&C::from_rat(&fact.recip().unwrap()))
    })
}
