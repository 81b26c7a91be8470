//! p-adic valuations and the fermionic integral at partial-sum level.
//!
//! No p-adic number type is built: everything is exact rational arithmetic
//! plus a valuation function, which is all the convergence audits need. The
//! alternating sums S_N = sum over v < p^N of (-1)^v v^n converge p-adically
//! to the Euler numbers; [`witt_table`] tabulates the gap valuations, and
//! [`check_functional_equation`] measures the shift-relation residual, which
//! telescopes to exactly p^(nN).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

use crate::classical_seq::euler;
use crate::error::Error;
use crate::exact_arith::Rat;

/// Default cap on p^N for the alternating partial sums.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// An integer valuation with the conventional +infinity for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PadicValuation {
    Finite(i64),
    Infinity,
}

impl PadicValuation {
    pub fn is_infinite(&self) -> bool {
        matches!(self, PadicValuation::Infinity)
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            PadicValuation::Finite(v) => Some(*v),
            PadicValuation::Infinity => None,
        }
    }

    /// True when `self >= other` in the usual extended ordering.
    pub fn at_least(&self, other: i64) -> bool {
        match self {
            PadicValuation::Infinity => true,
            PadicValuation::Finite(v) => *v >= other,
        }
    }
}

impl PartialOrd for PadicValuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PadicValuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (PadicValuation::Infinity, PadicValuation::Infinity) => std::cmp::Ordering::Equal,
            (PadicValuation::Infinity, _) => std::cmp::Ordering::Greater,
            (_, PadicValuation::Infinity) => std::cmp::Ordering::Less,
            (PadicValuation::Finite(a), PadicValuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::fmt::Display for PadicValuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PadicValuation::Finite(v) => write!(f, "{v}"),
            PadicValuation::Infinity => write!(f, "inf"),
        }
    }
}

/// One level of a Witt-formula convergence table.
#[derive(Clone, Debug, PartialEq)]
pub struct WittRow {
    pub p: u32,
    pub n: usize,
    pub level: u32,
    pub partial_sum: Rat,
    /// Valuation of partial_sum - E_n.
    pub valuation_of_gap: PadicValuation,
}

fn ensure_odd_prime(p: u32) -> Result<(), Error> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::NotOddPrime(p));
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::NotOddPrime(p));
        }
        d += 2;
    }
    Ok(())
}

fn ensure_within_cap(p: u32, level: u32, cap: u64) -> Result<u64, Error> {
    let mut size: u64 = 1;
    for _ in 0..level {
        size = size
            .checked_mul(p as u64)
            .filter(|s| *s <= cap)
            .ok_or(Error::CapExceeded { p, level, cap })?;
    }
    Ok(size)
}

fn int_valuation(x: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!x.is_zero());
    let mut v = 0;
    let mut m = x.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        m = q;
    }
}

/// The exact p-adic valuation of a rational number; +infinity for zero.
/// Only odd primes are accepted (inputs are small; primality is checked by
/// trial division).
pub fn vp(x: &Rat, p: u32) -> Result<PadicValuation, Error> {
    ensure_odd_prime(p)?;
    if x.is_zero() {
        return Ok(PadicValuation::Infinity);
    }
    let p_big = BigInt::from(p);
    Ok(PadicValuation::Finite(
        int_valuation(x.numer(), &p_big) - int_valuation(x.denom(), &p_big),
    ))
}

/// The alternating partial sum S_N = sum over v in 0..p^N of (-1)^v v^n.
pub fn fermionic_partial(n: usize, p: u32, level: u32, cap: u64) -> Result<Rat, Error> {
    ensure_odd_prime(p)?;
    assert!(level >= 1, "level must be positive");
    let size = ensure_within_cap(p, level, cap)?;
    Ok(Rat::from_bigint(alternating_sum(n, size)))
}

fn alternating_sum(n: usize, size: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for v in 0..size {
        let term = BigInt::from(v).pow(n as u64);
        if v.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Residual of the shift relation at partial-sum level for f(v) = v^n with
/// n >= 1: sum over v < p^N of (-1)^v ((v+1)^n + v^n), which telescopes to
/// exactly (p^N)^n. Returned with its valuation; the summation here is
/// direct, so the telescoped value is verified rather than assumed.
pub fn check_functional_equation(
    n: usize,
    p: u32,
    level: u32,
    cap: u64,
) -> Result<(Rat, PadicValuation), Error> {
    assert!(n >= 1, "the shift-relation residual is defined for n >= 1");
    ensure_odd_prime(p)?;
    let size = ensure_within_cap(p, level, cap)?;
    let mut acc = BigInt::zero();
    for v in 0..size {
        let term = BigInt::from(v + 1).pow(n as u64) + BigInt::from(v).pow(n as u64);
        if v.is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let residual = Rat::from_bigint(acc);
    let valuation = vp(&residual, p)?;
    Ok((residual, valuation))
}

/// Gap valuations v_p(S_N - E_n) for N = 1..=n_levels, computed in one scan
/// with snapshots at each power of p.
pub fn witt_table(n: usize, p: u32, n_levels: u32, cap: u64) -> Result<Vec<WittRow>, Error> {
    ensure_odd_prime(p)?;
    assert!(n_levels >= 1, "at least one level");
    let top = ensure_within_cap(p, n_levels, cap)?;
    let target = euler(n);

    let mut rows = Vec::with_capacity(n_levels as usize);
    let mut acc = BigInt::zero();
    let mut boundary: u64 = 1;
    let mut level: u32 = 0;
    let mut v: u64 = 0;
    while level < n_levels {
        boundary *= p as u64;
        while v < boundary {
            let term = BigInt::from(v).pow(n as u64);
            if v.is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
            v += 1;
        }
        level += 1;
        let partial_sum = Rat::from_bigint(acc.clone());
        let gap = &partial_sum - &target;
        rows.push(WittRow {
            p,
            n,
            level,
            valuation_of_gap: vp(&gap, p)?,
            partial_sum,
        });
    }
    debug_assert_eq!(v, top);
    Ok(rows)
}
