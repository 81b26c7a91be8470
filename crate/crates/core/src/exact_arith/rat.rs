//! Arbitrary-precision rational scalars.
//!
//! `Rat` is the universal coefficient type of the crate. Canonical form is
//! maintained by construction: numerator and denominator coprime, denominator
//! positive, zero stored as 0/1. The text format is `-?digits(/digits)?` with
//! a positive denominator, and printing a canonical value round-trips.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds `numer/denom` in canonical form. Panics if `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rat(BigRational::new(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// Shorthand for small literals: `Rat::ratio(-3, 4)` is -3/4.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Rat::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rat(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        // Powers of a canonical fraction are canonical.
        Rat(BigRational::new_raw(
            self.0.numer().pow(exp),
            self.0.denom().pow(exp),
        ))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Strict parse of the literal format: optional leading `-`, a decimal
    /// integer, optionally `/` and a positive decimal integer. No signs on
    /// the denominator, no whitespace, no `+`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::InvalidRational(s.to_string());
        let (num_text, den_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num_text.strip_prefix('-').unwrap_or(num_text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let numer: BigInt = num_text.parse().map_err(|_| err())?;
        let denom: BigInt = match den_text {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                let d: BigInt = d.parse().map_err(|_| err())?;
                if d.is_zero() {
                    return Err(err());
                }
                d
            }
        };
        Ok(Rat::new(numer, denom))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Binomial coefficient C(n, k) as an exact integer; 0 when k > n.
pub fn binomial_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient C(n, k) as a `Rat` (always integer-valued).
pub fn binomial(n: usize, k: usize) -> Rat {
    Rat::from_bigint(binomial_int(n, k))
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Greatest common divisor of two integers (nonnegative result).
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let r = Rat::ratio(2, 4);
        assert_eq!(r, Rat::ratio(1, 2));
        assert_eq!(r.to_string(), "1/2");
        let r = Rat::ratio(3, -4);
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn literal_parse_and_reject() {
        assert_eq!("-3/4".parse::<Rat>().unwrap(), Rat::ratio(-3, 4));
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::from_integer(7));
        assert_eq!("2/4".parse::<Rat>().unwrap(), Rat::ratio(1, 2));
        for bad in ["", "-", "1/", "/2", "3/-4", "+3", "1 /2", "1.5", "3/0"] {
            assert!(bad.parse::<Rat>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 0), Rat::one());
        assert_eq!(binomial(3, 5), Rat::zero());
    }

    #[test]
    fn binomial_matches_pascal_triangle_oracle() {
        // Independent oracle: Pascal's recurrence.
        let mut row = vec![BigInt::one()];
        for n in 0..=12usize {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial_int(n, k), expected, "C({n},{k})");
            }
            let mut next = vec![BigInt::one()];
            for i in 1..=n {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(BigInt::one());
            row = next;
        }
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = Rat::ratio(n, d);
            let back: Rat = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn field_laws(a in -50i64..50, b in 1i64..30, c in -50i64..50, d in 1i64..30) {
            let x = Rat::ratio(a, b);
            let y = Rat::ratio(c, d);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x);
            }
        }
    }
}
