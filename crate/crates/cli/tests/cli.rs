//! End-to-end checks of the table-printing commands and flag handling.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerian-audit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "command failed: {:?}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn seq_euler_prints_literals() {
    let out = stdout_of(&run(&["seq", "--name", "euler", "--n-max", "3"]));
    assert_eq!(out.trim(), "1, -1/2, 0, 1/4");
}

#[test]
fn seq_triangle_rows() {
    let out = stdout_of(&run(&[
        "seq",
        "--name",
        "eulerian-triangle",
        "--n-max",
        "3",
    ]));
    assert_eq!(out.trim(), "1 / 1 1 / 1 1 1 / 1 1 4 1");
}

#[test]
fn seq_stirling_rows() {
    let out = stdout_of(&run(&["seq", "--name", "stirling2", "--n-max", "3"]));
    assert_eq!(out.trim(), "1 / 0 1 / 0 1 1 / 0 1 3 1");
}

#[test]
fn seq_minus_one_matches_scaled_euler_numbers() {
    let out = stdout_of(&run(&["seq", "--name", "minus-one", "--n-max", "4"]));
    assert_eq!(out.trim(), "1, -1, 0, 2, 0");
}

#[test]
fn seq_unknown_name_is_input_error() {
    let out = run(&["seq", "--name", "fibonacci"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("available"));
}

#[test]
fn poly_gen_eulerian_output() {
    let out = stdout_of(&run(&["poly", "--family", "gen-eulerian", "--n", "2"]));
    assert_eq!(out.trim(), "q = 1 + 1*a^1\ngrade = 2");
    let out = stdout_of(&run(&[
        "poly",
        "--family",
        "gen-eulerian",
        "--n",
        "3",
        "--a",
        "-1",
    ]));
    assert!(out.contains("q(-1) = 2"), "{out}");
}

#[test]
fn poly_eulerian_conventions() {
    let s = stdout_of(&run(&["poly", "--family", "eulerian-S", "--n", "3"]));
    assert_eq!(s.trim(), "1*x^1 + 4*x^2 + 1*x^3");
    let g = stdout_of(&run(&["poly", "--family", "eulerian-G", "--n", "2"]));
    assert_eq!(g.trim(), "1 + 1*x^1");
}

#[test]
fn poly_fraction_prints_both_conventions() {
    let out = stdout_of(&run(&["poly", "--family", "eulerian-fraction", "--n", "1"]));
    assert!(out.starts_with("S: "), "{out}");
    assert!(out.contains("G: "), "{out}");
    // S-convention value at x = 1/2: sum of l (1/2)^l = 2.
    let out = stdout_of(&run(&[
        "poly",
        "--family",
        "eulerian-fraction",
        "--n",
        "1",
        "--a",
        "1/2",
    ]));
    assert!(out.contains("value at 1/2: 2"), "{out}");
}

#[test]
fn poly_polylog_closed_form() {
    let out = stdout_of(&run(&["poly", "--family", "polylog-neg", "--n", "2"]));
    // x(1+x)/(1-x)^3 in canonical monic-denominator form.
    assert_eq!(
        out.trim(),
        "(-1*x^1 + -1*x^2) / (-1 + 3*x^1 + -3*x^2 + 1*x^3)"
    );
}

#[test]
fn poly_bernstein_rows_and_point() {
    let out = stdout_of(&run(&[
        "poly",
        "--family",
        "bernstein",
        "--n",
        "2",
        "--a",
        "1/2",
    ]));
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("k=0: "), "{out}");
    // Partition of unity at the point: 1/4 + 1/2 + 1/4.
    assert!(
        lines.iter().all(|l| l.contains("value at 1/2: 1/")),
        "{out}"
    );
}

#[test]
fn series_symbolic_and_numeric() {
    let out = stdout_of(&run(&[
        "series",
        "--name",
        "classical-eulerian",
        "--n-max",
        "2",
    ]));
    assert_eq!(out.trim(), "0: 1\n1: -1\n2: 1 + 1*x^1");
    let out = stdout_of(&run(&["series", "--name", "generalized", "--n-max", "2"]));
    assert_eq!(out.trim(), "0: 1\n1: -1\n2: 1 + 1*a^1");
    let out = stdout_of(&run(&["series", "--name", "bernoulli", "--n-max", "2"]));
    assert_eq!(out.trim(), "1, -1/2, 1/6");
    let out = stdout_of(&run(&[
        "series",
        "--name",
        "classical-eulerian",
        "--n-max",
        "3",
        "--a",
        "-1",
    ]));
    assert_eq!(out.trim(), "1, -1, 0, 2");
    let out = stdout_of(&run(&[
        "series",
        "--name",
        "bernstein",
        "--n-max",
        "3",
        "--n",
        "1",
    ]));
    assert!(out.contains("2: 2*x^1 + -2*x^2"), "{out}");
}

#[test]
fn series_rejects_singular_point() {
    let out = run(&[
        "series",
        "--name",
        "classical-eulerian",
        "--n-max",
        "3",
        "--a",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("invertible constant term"), "{err}");
}

#[test]
fn padic_levels_table() {
    let out = stdout_of(&run(&["padic", "--p", "3", "--n", "0", "--levels", "3"]));
    let rows: Vec<&str> = out.trim().lines().skip(2).collect();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols[1], "1");
        assert_eq!(cols[2], "inf");
        assert_eq!(cols[3], "-");
    }
}

#[test]
fn padic_cap_is_configurable_and_reported() {
    let out = run(&[
        "padic", "--p", "3", "--n", "1", "--levels", "4", "--cap", "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cap"), "{err}");
    assert!(err.contains("p = 3"), "{err}");
}

#[test]
fn malformed_rational_point_is_rejected() {
    let out = run(&["poly", "--family", "eulerian-S", "--n", "2", "--a", "3/-4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid rational"));
}

#[test]
fn crosscheck_genocchi_with_offset_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("genocchi.b.txt");
    std::fs::write(&path, "0 0\n1 1\n2 -1\n3 0\n4 1\n5 0\n6 -3\n").unwrap();
    let out = run(&[
        "crosscheck",
        "--name",
        "genocchi",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn audit_out_file_matches_stdout_body() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let piped = run(&[
        "audit",
        "--identity",
        "thm9",
        "--n-max",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(piped.status.code(), Some(0));
    let written = run(&[
        "audit",
        "--identity",
        "thm9",
        "--n-max",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(written.status.code(), Some(0));
    let file_body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file_body.as_bytes(), piped.stdout.as_slice());
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    // Usage errors, by contrast, are input errors.
    let out = run(&["audit", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
}
