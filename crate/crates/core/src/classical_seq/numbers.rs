//! Bernoulli, Euler, and Genocchi numbers, and Stirling numbers of the
//! second kind.
//!
//! The series expansion of the defining generating function is authoritative
//! for B_n, E_n, and G_n; the classical convolution recurrences serve as the
//! independent route in tests. E_n here means the rational coefficients of
//! 2/(e^t + 1) (so E_1 = -1/2), not the integer secant numbers. Stirling
//! numbers come from the triangular recurrence, with set-partition
//! enumeration as the test oracle.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::error::Error;
use crate::exact_arith::Rat;
use crate::power_series::{gf_coefficients, GfCoeffs, GfId};

/// The named number families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedNumberKind {
    Bernoulli,
    Euler,
    Genocchi,
    Stirling2,
}

/// Uniform entry point: `k` is required exactly when `kind` is `Stirling2`.
pub fn named_number(kind: NamedNumberKind, n: usize, k: Option<usize>) -> Result<Rat, Error> {
    match (kind, k) {
        (NamedNumberKind::Stirling2, Some(k)) => Ok(stirling2(n, k)),
        (NamedNumberKind::Stirling2, None) => Err(Error::StirlingIndex),
        (_, Some(_)) => Err(Error::StirlingIndex),
        (NamedNumberKind::Bernoulli, None) => Ok(bernoulli(n)),
        (NamedNumberKind::Euler, None) => Ok(euler(n)),
        (NamedNumberKind::Genocchi, None) => Ok(genocchi(n)),
    }
}

// Write-once memo of series-derived values, keyed by family and index.
// Entries are only ever inserted, never mutated, so concurrent readers
// always observe the same value for a key.
fn memo() -> &'static Mutex<HashMap<(NamedNumberKind, usize), Rat>> {
    static MEMO: OnceLock<Mutex<HashMap<(NamedNumberKind, usize), Rat>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn series_number(kind: NamedNumberKind, gf: GfId, n: usize) -> Rat {
    if let Some(v) = memo().lock().unwrap().get(&(kind, n)) {
        return v.clone();
    }
    let GfCoeffs::Rats(coeffs) = gf_coefficients(&gf, n).expect("numeric expansion") else {
        unreachable!("numeric generating function")
    };
    let mut table = memo().lock().unwrap();
    for (i, c) in coeffs.iter().enumerate() {
        table.entry((kind, i)).or_insert_with(|| c.clone());
    }
    coeffs[n].clone()
}

/// B_n, the coefficients of t/(e^t - 1).
pub fn bernoulli(n: usize) -> Rat {
    series_number(NamedNumberKind::Bernoulli, GfId::Bernoulli, n)
}

/// E_n, the coefficients of 2/(e^t + 1).
pub fn euler(n: usize) -> Rat {
    series_number(NamedNumberKind::Euler, GfId::Euler, n)
}

/// G_n, the coefficients of 2t/(e^t + 1).
pub fn genocchi(n: usize) -> Rat {
    series_number(NamedNumberKind::Genocchi, GfId::Genocchi, n)
}

/// S(n, k) by the triangular recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1), S(0, 0) = 1.
pub fn stirling2(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut row: Vec<Rat> = vec![Rat::one()];
    for m in 1..=n {
        let mut next = vec![Rat::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < m { row[j].clone() } else { Rat::zero() };
            next[j] = Rat::from_integer(j as i64) * carry + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::binomial;

    #[test]
    fn pinned_examples() {
        assert_eq!(euler(3), Rat::ratio(1, 4));
        assert_eq!(bernoulli(2), Rat::ratio(1, 6));
        assert_eq!(genocchi(0), Rat::zero());
        assert_eq!(stirling2(3, 2), Rat::from_integer(3));
    }

    #[test]
    fn named_number_arity() {
        assert_eq!(
            named_number(NamedNumberKind::Stirling2, 3, Some(2)).unwrap(),
            Rat::from_integer(3)
        );
        assert_eq!(
            named_number(NamedNumberKind::Stirling2, 3, None).unwrap_err(),
            Error::StirlingIndex
        );
        assert_eq!(
            named_number(NamedNumberKind::Euler, 3, Some(1)).unwrap_err(),
            Error::StirlingIndex
        );
        assert_eq!(
            named_number(NamedNumberKind::Genocchi, 1, None).unwrap(),
            Rat::one()
        );
    }

    /// Convolution recurrences derived from multiplying each generating
    /// function by its denominator series; independent of series division.
    fn bernoulli_recurrence(n_max: usize) -> Vec<Rat> {
        let mut b = vec![Rat::one()];
        for n in 1..=n_max {
            let mut acc = Rat::zero();
            for (k, bk) in b.iter().enumerate() {
                acc = acc + binomial(n + 1, k) * bk;
            }
            b.push(-acc / Rat::from_integer(n as i64 + 1));
        }
        b
    }

    fn euler_recurrence(n_max: usize) -> Vec<Rat> {
        let mut e = vec![Rat::one()];
        for n in 1..=n_max {
            let mut acc = Rat::zero();
            for (k, ek) in e.iter().enumerate() {
                acc = acc + binomial(n, k) * ek;
            }
            e.push(-acc / Rat::from_integer(2));
        }
        e
    }

    fn genocchi_recurrence(n_max: usize) -> Vec<Rat> {
        let mut g = vec![Rat::zero(), Rat::one()];
        for n in 2..=n_max {
            let mut acc = Rat::zero();
            for (k, gk) in g.iter().enumerate() {
                acc = acc + binomial(n, k) * gk;
            }
            g.push(-acc / Rat::from_integer(2));
        }
        g.truncate(n_max + 1);
        g
    }

    #[test]
    fn two_routes_agree() {
        let b = bernoulli_recurrence(15);
        for (n, expected) in b.iter().enumerate() {
            assert_eq!(&bernoulli(n), expected, "B_{n}");
        }
        let e = euler_recurrence(12);
        for (n, expected) in e.iter().enumerate() {
            assert_eq!(&euler(n), expected, "E_{n}");
        }
        let g = genocchi_recurrence(12);
        for (n, expected) in g.iter().enumerate() {
            assert_eq!(&genocchi(n), expected, "G_{n}");
        }
    }

    #[test]
    fn parity_vanishing() {
        for n in (3..=15).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n}");
        }
        for n in (2..=12).step_by(2) {
            assert!(euler(n).is_zero(), "E_{n}");
        }
    }

    /// Counts set partitions of {1..n} into exactly k blocks by direct
    /// enumeration: element i either joins an existing block or opens one.
    fn partition_count_oracle(n: usize, k: usize) -> u64 {
        fn walk(remaining: usize, open: usize, target: usize) -> u64 {
            if remaining == 0 {
                return (open == target) as u64;
            }
            walk(remaining - 1, open + 1, target) + open as u64 * walk(remaining - 1, open, target)
        }
        if n == 0 {
            return (k == 0) as u64;
        }
        walk(n - 1, 1, k)
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        for n in 0..=10usize {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    Rat::from_integer(partition_count_oracle(n, k) as i64),
                    "S({n},{k})"
                );
            }
            assert_eq!(stirling2(n, n + 1), Rat::zero());
        }
    }
}
