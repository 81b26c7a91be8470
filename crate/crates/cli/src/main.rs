//! Command-line front end for the Eulerian-family audit library.
//!
//! Subcommands: `audit` (identity battery -> JSON/CSV report), `seq` and
//! `poly` (exact value tables), `series` (generating-function coefficients),
//! `padic` (alternating-sum convergence tables), `crosscheck` (integer
//! families vs local b-files).
//!
//! Exit codes: 0 all-as-expected, 1 input or internal error, 2 verdict
//! deviation or cross-check mismatch.

mod bfile;
mod crosscheck;
mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use eulerian_core::classical_seq::{
    bernoulli, bernstein_poly, euler, eulerian_fraction, eulerian_poly_g, eulerian_poly_s,
    genocchi, polylog_neg, stirling2, triangle_row, Convention,
};
use eulerian_core::exact_arith::{Rat, RatFunc};
use eulerian_core::gen_eulerian::{all_identities, gen_eulerian, run_identity};
use eulerian_core::padic::{check_functional_equation, witt_table, DEFAULT_CAP};
use eulerian_core::power_series::{gf_coefficients, GfCoeffs, GfId};

use crosscheck::{CheckSequence, CrosscheckOutcome};

#[derive(Parser)]
#[command(
    name = "eulerian-audit",
    version,
    about = "Exact audits and tables for the Eulerian number and polynomial families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity battery and write a deterministic report.
    Audit {
        /// Identity id, or "all".
        #[arg(long, default_value = "all")]
        identity: String,
        /// Top index to audit; defaults to each identity's registry value.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a number family.
    Seq {
        /// One of: eulerian-triangle, bernoulli, euler, genocchi, stirling2,
        /// minus-one.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Print a polynomial or rational-function family member.
    Poly {
        /// One of: eulerian-S, eulerian-G, eulerian-fraction, bernstein,
        /// polylog-neg, gen-eulerian.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Optional rational evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
    },
    /// Print factorial-normalized generating-function coefficients.
    Series {
        /// One of: classical-eulerian, generalized, bernstein, euler,
        /// bernoulli, genocchi, minus-one.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Bernstein index k.
        #[arg(long)]
        n: Option<usize>,
        /// Optional rational evaluation point.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
    },
    /// Print alternating-sum convergence and shift-residual valuations.
    Padic {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        levels: u32,
        /// Cap on p^N.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Compare an integer family against a local b-file.
    Crosscheck {
        /// One of: eulerian-triangle, genocchi, stirling2.
        #[arg(long)]
        name: String,
        #[arg(long)]
        bfile: PathBuf,
        /// b-file index of the family's first element.
        #[arg(long, default_value_t = 0)]
        offset: i64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let is_error = err.use_stderr();
            let _ = err.print();
            return ExitCode::from(if is_error { 1 } else { 0 });
        }
    };
    match catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
        Err(_) => {
            // The panic hook has already printed the cause.
            eprintln!("internal error");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Audit {
            identity,
            n_max,
            format,
            out,
        } => cmd_audit(&identity, n_max, format, out.as_deref()),
        Command::Seq { name, n_max } => cmd_seq(&name, n_max),
        Command::Poly { family, n, a } => cmd_poly(&family, n, a.as_deref()),
        Command::Series { name, n_max, n, a } => cmd_series(&name, n_max, n, a.as_deref()),
        Command::Padic { p, n, levels, cap } => cmd_padic(p, n, levels, cap),
        Command::Crosscheck {
            name,
            bfile,
            offset,
        } => cmd_crosscheck(&name, &bfile, offset),
    }
}

fn parse_point(text: &str) -> Result<Rat> {
    Rat::from_str(text).map_err(|e| anyhow!("{e}"))
}

fn cmd_audit(
    identity: &str,
    n_max: Option<usize>,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<u8> {
    let ids: Vec<&'static str> = if identity == "all" {
        all_identities().iter().map(|info| info.id).collect()
    } else {
        let known = all_identities().iter().find(|info| info.id == identity);
        match known {
            Some(info) => vec![info.id],
            None => {
                let available: Vec<&str> = all_identities().iter().map(|info| info.id).collect();
                bail!(
                    "unknown identity {identity:?}; available: all, {}",
                    available.join(", ")
                );
            }
        }
    };

    let started = report::now_unix_ms();
    let clock = Instant::now();
    let mut verdicts = Vec::new();
    for id in ids {
        let info = all_identities().iter().find(|i| i.id == id).unwrap();
        let top = n_max.unwrap_or(info.n_default);
        verdicts.extend(run_identity(id, top).expect("registered id"));
    }
    let assembled = report::assemble(&verdicts, started, clock.elapsed().as_millis());

    let body = match format {
        Format::Json => report::to_json(&assembled)?,
        Format::Csv => report::to_csv(&assembled)?,
    };
    match out {
        Some(path) => std::fs::write(path, &body)
            .with_context(|| format!("write report to {}", path.display()))?,
        None => print!("{body}"),
    }
    eprintln!(
        "verdicts: {} pass, {} fail, {} deviation(s)",
        assembled.summary.pass, assembled.summary.fail, assembled.summary.deviations
    );
    Ok(report::exit_code(&assembled))
}

fn comma_list(values: impl Iterator<Item = Rat>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn triangle_text(rows: impl Iterator<Item = Vec<Rat>>) -> String {
    rows.map(|row| {
        row.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    })
    .collect::<Vec<_>>()
    .join(" / ")
}

fn cmd_seq(name: &str, n_max: usize) -> Result<u8> {
    let text = match name {
        "bernoulli" => comma_list((0..=n_max).map(bernoulli)),
        "euler" => comma_list((0..=n_max).map(euler)),
        "genocchi" => comma_list((0..=n_max).map(genocchi)),
        "minus-one" => comma_list(
            (0..=n_max).map(|n| gen_eulerian(n).eval_q(&Rat::from_integer(-1)).q().coeff(0)),
        ),
        "eulerian-triangle" => triangle_text((0..=n_max).map(|n| triangle_row(n).entries)),
        "stirling2" => triangle_text(
            (0..=n_max).map(|n| (0..=n).map(|k| stirling2(n, k)).collect()),
        ),
        _ => bail!(
            "unknown sequence {name:?}; available: eulerian-triangle, bernoulli, euler, genocchi, stirling2, minus-one"
        ),
    };
    println!("{text}");
    Ok(0)
}

fn print_ratfunc_with_point(rf: &RatFunc, var: char, point: Option<&Rat>) {
    println!("{}", rf.display_with(var));
    if let Some(p) = point {
        match rf.eval(p) {
            Some(v) => println!("value at {p}: {v}"),
            None => println!("value at {p}: pole"),
        }
    }
}

fn cmd_poly(family: &str, n: usize, a: Option<&str>) -> Result<u8> {
    let point = a.map(parse_point).transpose()?;
    match family {
        "eulerian-S" => {
            let p = eulerian_poly_s(n);
            println!("{p}");
            if let Some(pt) = &point {
                println!("value at {pt}: {}", p.eval(pt));
            }
        }
        "eulerian-G" => {
            let p = eulerian_poly_g(n);
            println!("{p}");
            if let Some(pt) = &point {
                println!("value at {pt}: {}", p.eval(pt));
            }
        }
        "eulerian-fraction" => {
            let s = eulerian_fraction(n, Convention::S);
            let g = eulerian_fraction(n, Convention::G);
            print!("S: ");
            print_ratfunc_with_point(&s, 'x', point.as_ref());
            print!("G: ");
            print_ratfunc_with_point(&g, 'x', point.as_ref());
        }
        "bernstein" => {
            for k in 0..=n {
                let p = bernstein_poly(k, n).map_err(|e| anyhow!("{e}"))?;
                print!("k={k}: {p}");
                match &point {
                    Some(pt) => println!(" | value at {pt}: {}", p.eval(pt)),
                    None => println!(),
                }
            }
        }
        "polylog-neg" => {
            print_ratfunc_with_point(&polylog_neg(n), 'x', point.as_ref());
        }
        "gen-eulerian" => {
            let g = gen_eulerian(n);
            println!("q = {}", g.q().display_with('a'));
            println!("grade = {}", g.grade());
            if let Some(pt) = &point {
                println!("q({pt}) = {}", g.q().eval(pt));
            }
        }
        _ => bail!(
            "unknown family {family:?}; available: eulerian-S, eulerian-G, eulerian-fraction, bernstein, polylog-neg, gen-eulerian"
        ),
    }
    Ok(0)
}

fn cmd_series(name: &str, n_max: usize, k: Option<usize>, a: Option<&str>) -> Result<u8> {
    let point = a.map(parse_point).transpose()?;
    let id = match name {
        "classical-eulerian" => GfId::ClassicalEulerian { point },
        "generalized" => {
            if point.is_some() {
                bail!("the generalized expansion is symbolic; evaluate with `poly --family gen-eulerian --a`");
            }
            GfId::Generalized
        }
        "bernstein" => GfId::Bernstein {
            k: k.ok_or_else(|| anyhow!("bernstein needs --n for the index k"))?,
            point,
        },
        "euler" => GfId::Euler,
        "bernoulli" => GfId::Bernoulli,
        "genocchi" => GfId::Genocchi,
        "minus-one" => GfId::MinusOne,
        _ => bail!(
            "unknown series {name:?}; available: classical-eulerian, generalized, bernstein, euler, bernoulli, genocchi, minus-one"
        ),
    };
    match gf_coefficients(&id, n_max).map_err(|e| anyhow!("{e}"))? {
        GfCoeffs::Rats(values) => println!("{}", comma_list(values.into_iter())),
        GfCoeffs::Polys(polys) => {
            let var = if matches!(id, GfId::Generalized) {
                'a'
            } else {
                'x'
            };
            for (n, p) in polys.iter().enumerate() {
                println!("{n}: {}", p.display_with(var));
            }
        }
    }
    Ok(0)
}

fn cmd_padic(p: u32, n: usize, levels: u32, cap: u64) -> Result<u8> {
    let rows = witt_table(n, p, levels, cap).map_err(|e| anyhow!("{e}"))?;
    println!("p = {p}, n = {n}, cap = {cap}");
    println!("N\tS_N\tgap_valuation\tresidual_valuation");
    for row in rows {
        let residual = if n >= 1 {
            let (_, valuation) =
                check_functional_equation(n, p, row.level, cap).map_err(|e| anyhow!("{e}"))?;
            valuation.to_string()
        } else {
            "-".to_string()
        };
        println!(
            "{}\t{}\t{}\t{}",
            row.level, row.partial_sum, row.valuation_of_gap, residual
        );
    }
    Ok(0)
}

fn cmd_crosscheck(name: &str, path: &std::path::Path, offset: i64) -> Result<u8> {
    let seq = CheckSequence::parse(name).ok_or_else(|| {
        anyhow!(
            "unknown sequence {name:?}; available: {}",
            CheckSequence::NAMES.join(", ")
        )
    })?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("read b-file {}", path.display()))?;
    let parsed =
        bfile::parse_bfile(&text).with_context(|| format!("parse b-file {}", path.display()))?;
    match crosscheck::crosscheck(seq, &parsed, offset)? {
        CrosscheckOutcome::FullMatch { compared, range } => {
            println!(
                "match: {compared} entries over b-file indices [{}, {}]",
                range.0, range.1
            );
            Ok(0)
        }
        CrosscheckOutcome::Mismatch {
            bfile_index,
            expected,
            found,
        } => {
            println!("mismatch at b-file index {bfile_index}: artifact {expected}, file {found}");
            Ok(2)
        }
    }
}
