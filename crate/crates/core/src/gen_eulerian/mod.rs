//! The graded two-parameter Eulerian family and its identity-audit battery.
//!
//! The family A_n(a, b) defined by (1-a)/(b^(t(1-a)) - a) always factors as
//! q_n(a) * (ln b)^n: each power of t carries exactly one power of ln b, so
//! the value is represented as a polynomial in `a` with an integer grade
//! ([`LGraded`]) instead of a second symbolic variable. Two independent
//! routes compute it: the umbral recurrence ([`gen_eulerian`]) and series
//! expansion of the generating function ([`gen_eulerian_oracle`]).

mod audits;
mod registry;
mod verdict;

pub use audits::{
    audit_minus_one_links, check_bernstein_identity, check_polylog_identity,
    check_product_identity, check_recurrence, check_stirling_identity,
};
pub use registry::{all_identities, identity_info, run_identity, Expectation, IdentityInfo};
pub use verdict::{CheckRow, ExactValue, Form, IdentityVerdict, Status};

use std::fmt;

use crate::exact_arith::{binomial, Poly, Rat};
use crate::power_series::{gf_coefficients, GfCoeffs, GfId};

/// A polynomial in `a` times an integer power of L = ln b.
#[derive(Clone, Debug, PartialEq)]
pub struct LGraded {
    grade: usize,
    q: Poly,
}

impl LGraded {
    pub fn new(grade: usize, q: Poly) -> Self {
        LGraded { grade, q }
    }

    pub fn constant(grade: usize, c: Rat) -> Self {
        LGraded {
            grade,
            q: Poly::constant(c),
        }
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// Evaluates the coefficient polynomial, keeping the grade.
    pub fn eval_q(&self, a: &Rat) -> LGraded {
        LGraded::constant(self.grade, self.q.eval(a))
    }

    /// Two graded values are equal when both vanish or when both the grade
    /// and the coefficient polynomial agree. A zero coefficient annihilates
    /// the grade, so 0 * L^2 and 0 * L^5 are the same value.
    pub fn value_eq(&self, other: &LGraded) -> bool {
        (self.is_zero() && other.is_zero()) || (self.grade == other.grade && self.q == other.q)
    }
}

impl fmt::Display for LGraded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.grade == 0 {
            write!(f, "{}", self.q.display_with('a'))
        } else {
            write!(f, "({}) * L^{}", self.q.display_with('a'), self.grade)
        }
    }
}

/// Coefficient polynomials q_0 .. q_max by the umbral recurrence
/// q_n = (1/(a-1)) * sum over k < n of C(n,k) q_k (1-a)^(n-k).
/// The (a-1) division must leave no remainder; a nonzero remainder would
/// break the polynomial closure of the family and panics.
fn family_q(n_max: usize) -> Vec<Poly> {
    let one_minus_a = Poly::from_ints(&[1, -1]);
    let a_minus_one = Poly::from_ints(&[-1, 1]);
    let mut qs: Vec<Poly> = vec![Poly::one()];
    for n in 1..=n_max {
        let mut sum = Poly::zero();
        for (k, q) in qs.iter().enumerate() {
            sum = &sum + &(q.scale(&binomial(n, k)) * one_minus_a.pow((n - k) as u32));
        }
        let next = sum
            .exact_div(&a_minus_one)
            .expect("umbral recurrence must divide exactly by a - 1");
        qs.push(next);
    }
    qs
}

/// A_n(a, b) by the umbral recurrence route.
pub fn gen_eulerian(n: usize) -> LGraded {
    LGraded::new(n, family_q(n).pop().unwrap())
}

/// The whole family through grade `n_max` by the recurrence route.
pub fn gen_eulerian_family(n_max: usize) -> Vec<LGraded> {
    family_q(n_max)
        .into_iter()
        .enumerate()
        .map(|(n, q)| LGraded::new(n, q))
        .collect()
}

/// A_n(a, b) by the independent series route: n! times the tau^n
/// coefficient of (1-a)/(e^(tau(1-a)) - a), expanded over rational
/// functions in `a` and canonicalized down to a polynomial. This realizes
/// the derivative-limit description of the coefficients without symbolic
/// differentiation.
pub fn gen_eulerian_oracle(n: usize) -> LGraded {
    gen_eulerian_oracle_family(n).pop().unwrap()
}

/// Oracle-route family through grade `n_max`.
pub fn gen_eulerian_oracle_family(n_max: usize) -> Vec<LGraded> {
    let GfCoeffs::Polys(polys) =
        gf_coefficients(&GfId::Generalized, n_max).expect("symbolic expansion")
    else {
        unreachable!("generalized expansion is symbolic")
    };
    polys
        .into_iter()
        .enumerate()
        .map(|(n, q)| LGraded::new(n, q))
        .collect()
}
