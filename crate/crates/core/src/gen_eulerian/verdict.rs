//! Audit result records.
//!
//! Every value carried by a verdict is exact (polynomials, rational
//! functions, graded values); rendering to text happens only at report time.

use std::fmt;

use super::LGraded;
use crate::exact_arith::{Poly, Rat, RatFunc};

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
        }
    }
}

/// Which reading of an identity a verdict covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    AsStated,
    CorrectedCandidate,
}

impl Form {
    pub fn as_str(&self) -> &'static str {
        match self {
            Form::AsStated => "as_stated",
            Form::CorrectedCandidate => "corrected_candidate",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// An exact value carried by a verdict row. `GradedSum` covers differences
/// of graded values whose grades disagree; it is kept normalized (nonzero
/// terms, ascending grade).
#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Rat(Rat),
    Poly { var: char, poly: Poly },
    RatFunc { var: char, rf: RatFunc },
    Graded(LGraded),
    GradedSum(Vec<LGraded>),
}

impl ExactValue {
    pub fn poly_a(poly: Poly) -> Self {
        ExactValue::Poly { var: 'a', poly }
    }

    pub fn ratfunc_a(rf: RatFunc) -> Self {
        ExactValue::RatFunc { var: 'a', rf }
    }

    pub fn ratfunc_x(rf: RatFunc) -> Self {
        ExactValue::RatFunc { var: 'x', rf }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Rat(r) => r.is_zero(),
            ExactValue::Poly { poly, .. } => poly.is_zero(),
            ExactValue::RatFunc { rf, .. } => rf.is_zero(),
            ExactValue::Graded(g) => g.is_zero(),
            ExactValue::GradedSum(terms) => terms.iter().all(LGraded::is_zero),
        }
    }

    /// Difference of two graded values, collapsing to a single graded term
    /// when the grades line up and to a normalized graded sum otherwise.
    pub fn graded_diff(lhs: &LGraded, rhs: &LGraded) -> Self {
        if lhs.grade() == rhs.grade() || lhs.is_zero() || rhs.is_zero() {
            let grade = if lhs.is_zero() {
                rhs.grade()
            } else {
                lhs.grade()
            };
            return ExactValue::Graded(LGraded::new(grade, lhs.q() - rhs.q()));
        }
        let mut terms = vec![lhs.clone(), LGraded::new(rhs.grade(), -rhs.q())];
        terms.sort_by_key(LGraded::grade);
        ExactValue::GradedSum(terms)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rat(r) => write!(f, "{r}"),
            ExactValue::Poly { var, poly } => write!(f, "{}", poly.display_with(*var)),
            ExactValue::RatFunc { var, rf } => write!(f, "{}", rf.display_with(*var)),
            ExactValue::Graded(g) => write!(f, "{g}"),
            ExactValue::GradedSum(terms) => {
                if terms.iter().all(LGraded::is_zero) {
                    return write!(f, "0");
                }
                let mut first = true;
                for t in terms.iter().filter(|t| !t.is_zero()) {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    write!(f, "{t}")?;
                }
                Ok(())
            }
        }
    }
}

/// One audited index.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRow {
    pub n: usize,
    pub status: Status,
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub diff: ExactValue,
    /// Whether the L-powers of the two sides agree; recorded only for the
    /// a = -1 audits, where the suspected defects are in the grade.
    pub grade_match: Option<bool>,
    /// Whether the graded coefficients agree, independent of the grade.
    pub coeff_match: Option<bool>,
}

/// Aggregated verdict for one identity form over a contiguous index range.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityVerdict {
    pub identity_id: &'static str,
    pub form: Form,
    pub n_range: (usize, usize),
    /// Pass only when every row passes.
    pub status: Status,
    /// First failing row, when any.
    pub witness: Option<CheckRow>,
    pub rows: Vec<CheckRow>,
}

impl IdentityVerdict {
    pub fn from_rows(
        identity_id: &'static str,
        form: Form,
        n_range: (usize, usize),
        rows: Vec<CheckRow>,
    ) -> Self {
        let witness = rows.iter().find(|r| r.status == Status::Fail).cloned();
        let status = if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        IdentityVerdict {
            identity_id,
            form,
            n_range,
            status,
            witness,
            rows,
        }
    }
}
