//! Acceptance suite: the exit gate for the numeric/symbolic layers.
//!
//! Each criterion prints one PASS/FAIL line (run with `--nocapture` to see
//! them on success). Wall-clock budgets are asserted where a criterion
//! carries one.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use eulerian_core::classical_seq::{
    bernoulli, euler, euler_zeta_neg, eulerian_number, eulerian_poly_g, eulerian_poly_s, genocchi,
    stirling2,
};
use eulerian_core::exact_arith::{binomial, factorial, Poly, Rat};
use eulerian_core::gen_eulerian::{
    all_identities, gen_eulerian_family, gen_eulerian_oracle_family, run_identity, Status,
};
use eulerian_core::padic::{check_functional_equation, witt_table, PadicValuation, DEFAULT_CAP};
use eulerian_core::power_series::{gf_coefficients, GfCoeffs, GfId};
use itertools::Itertools;

fn criterion(name: &str, budget: Option<Duration>, body: impl FnOnce() + UnwindSafe) {
    let started = Instant::now();
    let outcome = catch_unwind(body);
    let elapsed = started.elapsed();
    match outcome {
        Ok(()) => {
            if let Some(limit) = budget {
                assert!(
                    elapsed < limit,
                    "criterion {name} exceeded its budget: {elapsed:?} >= {limit:?}"
                );
            }
            println!("acceptance criterion {name}: PASS ({elapsed:?})");
        }
        Err(cause) => {
            println!("acceptance criterion {name}: FAIL ({elapsed:?})");
            resume_unwind(cause);
        }
    }
}

#[test]
fn criterion_1_oracle_equivalence() {
    criterion(
        "1 (oracle equivalence)",
        Some(Duration::from_secs(5)),
        || {
            let recurrence = gen_eulerian_family(16);
            let oracle = gen_eulerian_oracle_family(16);
            for n in 0..=16 {
                assert_eq!(recurrence[n], oracle[n], "routes disagree at n = {n}");
            }
        },
    );
}

#[test]
fn criterion_2_classical_bridge() {
    criterion("2 (classical bridge)", None, || {
        // The generalized coefficients, read as polynomials in x, reproduce
        // the classical generating-function expansion.
        let family = gen_eulerian_family(12);
        let GfCoeffs::Polys(series) =
            gf_coefficients(&GfId::ClassicalEulerian { point: None }, 12).unwrap()
        else {
            panic!("symbolic expansion expected")
        };
        for n in 0..=12 {
            assert_eq!(family[n].q(), &series[n], "series coefficient at n = {n}");
            assert_eq!(family[n].q(), &eulerian_poly_g(n), "recurrence at n = {n}");
        }
        // Convention bridge, both sides by their own routes.
        let x = Poly::var();
        for n in 1..=12usize {
            let lhs = &x * &eulerian_poly_g(n);
            let mut rhs = eulerian_poly_s(n);
            if n % 2 == 1 {
                rhs = &Poly::zero() - &rhs;
            }
            assert_eq!(lhs, rhs, "convention bridge at n = {n}");
        }
    });
}

#[test]
fn criterion_3_eulerian_triangle() {
    criterion("3 (triangle vs descent oracle)", None, || {
        for n in 1..=8usize {
            let mut row_sum = Rat::zero();
            for k in 1..=n {
                let by_descents = (1..=n)
                    .permutations(n)
                    .filter(|p| p.windows(2).filter(|w| w[0] > w[1]).count() == k - 1)
                    .count();
                assert_eq!(
                    eulerian_number(n, k as i64),
                    Rat::from_integer(by_descents as i64),
                    "A({n},{k})"
                );
                row_sum = row_sum + eulerian_number(n, k as i64);
            }
            assert_eq!(
                row_sum,
                Rat::from_bigint(factorial(n)),
                "row sum at n = {n}"
            );
        }
    });
}

#[test]
fn criterion_4_identity_audits() {
    criterion("4 (identity audits)", Some(Duration::from_secs(30)), || {
        for info in all_identities() {
            let verdicts = run_identity(info.id, 10).expect("registered id");
            assert_eq!(verdicts.len(), info.forms.len(), "{}", info.id);
            for verdict in verdicts {
                let (_, expectation) = info
                    .expected
                    .iter()
                    .find(|(f, _)| *f == verdict.form)
                    .expect("expectation recorded");
                for row in &verdict.rows {
                    assert_eq!(
                        row.status,
                        expectation.expected_status(row.n),
                        "{} {} at n = {}",
                        info.id,
                        verdict.form,
                        row.n
                    );
                    if row.status == Status::Fail {
                        assert!(
                            !row.diff.is_zero(),
                            "{} {} FAIL at n = {} lacks a nonzero witness",
                            info.id,
                            verdict.form,
                            row.n
                        );
                    }
                }
                if verdict.status == Status::Fail {
                    let witness = verdict.witness.as_ref().expect("witness on FAIL");
                    assert!(!witness.diff.is_zero());
                }
            }
        }
    });
}

#[test]
fn criterion_5_number_families_two_routes() {
    criterion("5 (number families, two routes)", None, || {
        // Independent convolution recurrences against the series route.
        let mut b = vec![Rat::one()];
        for n in 1..=15usize {
            let mut acc = Rat::zero();
            for (k, bk) in b.iter().enumerate() {
                acc = acc + binomial(n + 1, k) * bk;
            }
            b.push(-acc / Rat::from_integer(n as i64 + 1));
        }
        for (n, expected) in b.iter().enumerate() {
            assert_eq!(&bernoulli(n), expected, "B_{n}");
            if n >= 3 && n % 2 == 1 {
                assert!(expected.is_zero(), "B_{n} should vanish");
            }
        }

        let mut e = vec![Rat::one()];
        for n in 1..=12usize {
            let mut acc = Rat::zero();
            for (k, ek) in e.iter().enumerate() {
                acc = acc + binomial(n, k) * ek;
            }
            e.push(-acc / Rat::from_integer(2));
        }
        for (n, expected) in e.iter().enumerate() {
            assert_eq!(&euler(n), expected, "E_{n}");
            if n >= 2 && n % 2 == 0 {
                assert!(expected.is_zero(), "E_{n} should vanish");
            }
        }

        let mut g = vec![Rat::zero(), Rat::one()];
        for n in 2..=12usize {
            let mut acc = Rat::zero();
            for (k, gk) in g.iter().enumerate() {
                acc = acc + binomial(n, k) * gk;
            }
            g.push(-acc / Rat::from_integer(2));
        }
        for (n, expected) in g.iter().enumerate() {
            assert_eq!(&genocchi(n), expected, "G_{n}");
        }

        // Stirling triangle against direct set-partition enumeration.
        fn partitions(remaining: usize, open: usize, target: usize) -> u64 {
            if remaining == 0 {
                return (open == target) as u64;
            }
            partitions(remaining - 1, open + 1, target)
                + open as u64 * partitions(remaining - 1, open, target)
        }
        for n in 1..=10usize {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    Rat::from_integer(partitions(n - 1, 1, k) as i64),
                    "S({n},{k})"
                );
            }
        }
    });
}

#[test]
fn criterion_6_euler_zeta_link() {
    criterion("6 (Euler-zeta link)", None, || {
        for n in 1..=12usize {
            assert_eq!(euler_zeta_neg(n), euler(n), "zeta_E(-{n})");
        }
    });
}

#[test]
fn criterion_7_padic_suite() {
    criterion("7 (p-adic suite)", Some(Duration::from_secs(60)), || {
        for p in [3u32, 5, 7] {
            for n in 0..=6usize {
                let rows = witt_table(n, p, 6, DEFAULT_CAP).unwrap();
                let mut previous = PadicValuation::Finite(i64::MIN);
                for row in &rows {
                    assert!(
                        row.valuation_of_gap.at_least(row.level as i64 - 1),
                        "gap valuation below N - 1 at p = {p}, n = {n}, N = {}",
                        row.level
                    );
                    assert!(
                        row.valuation_of_gap >= previous,
                        "gap valuation decreased at p = {p}, n = {n}, N = {}",
                        row.level
                    );
                    previous = row.valuation_of_gap;
                }
                if n >= 1 {
                    for level in 1..=6u32 {
                        let (_, valuation) =
                            check_functional_equation(n, p, level, DEFAULT_CAP).unwrap();
                        assert_eq!(
                            valuation,
                            PadicValuation::Finite(n as i64 * level as i64),
                            "residual valuation at p = {p}, n = {n}, N = {level}"
                        );
                    }
                }
            }
        }
    });
}
