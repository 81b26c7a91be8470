//! Normalized univariate rational functions.
//!
//! Canonical form: numerator and denominator coprime, denominator monic,
//! zero stored as 0/1. Equality of values is therefore decidable by
//! structural equality of the two polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{poly_gcd, Poly};
use super::rat::Rat;
use crate::error::Error;

/// Quotient of two polynomials in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and canonicalizes `num / den`. Rejects a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut rf = RatFunc { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = poly_gcd(&self.num, &self.den);
        if g.degree() > Some(0) {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let lead = self.den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Evaluates at a point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / den)
    }

    /// Substitutes the variable by its reciprocal, `x -> 1/x`, clearing the
    /// resulting denominators back to canonical polynomial form.
    pub fn substitute_inverse(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let d = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap());
        let reverse = |p: &Poly| Poly::new((0..=d).rev().map(|i| p.coeff(i)).collect());
        RatFunc::new(reverse(&self.num), reverse(&self.den))
            .expect("reversal of a nonzero polynomial is nonzero")
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn display_with(&self, var: char) -> RatFuncDisplay<'_> {
        RatFuncDisplay { rf: self, var }
    }
}

/// Canonicalizing constructor matching the two-polynomial calling
/// convention used throughout the crate.
pub fn ratfunc_simplify(num: Poly, den: Poly) -> Result<RatFunc, Error> {
    RatFunc::new(num, den)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero divisor numerator")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! ratfunc_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

ratfunc_owned_binop!(Add, add);
ratfunc_owned_binop!(Sub, sub);
ratfunc_owned_binop!(Mul, mul);
ratfunc_owned_binop!(Div, div);

pub struct RatFuncDisplay<'a> {
    rf: &'a RatFunc,
    var: char,
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rf.is_polynomial() {
            write!(f, "{}", self.rf.num.display_with(self.var))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.rf.num.display_with(self.var),
                self.rf.den.display_with(self.var)
            )
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with('x'))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
