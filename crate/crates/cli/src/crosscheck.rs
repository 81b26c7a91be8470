//! Cross-checking integer families against local b-file fixtures.

use anyhow::{bail, Result};
use eulerian_core::classical_seq::{genocchi, stirling2, triangle_row};
use num_bigint::BigInt;

use crate::bfile::BFile;

/// Integer-valued sequences exposed for cross-checking, flattened to a
/// single 0-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckSequence {
    /// Triangle rows flattened row-major, each row carrying its leading 1.
    EulerianTriangle,
    /// G_0, G_1, G_2, ...
    Genocchi,
    /// Stirling triangle S(n, k), k = 0..=n, flattened row-major.
    Stirling2,
}

impl CheckSequence {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "eulerian-triangle" => Some(CheckSequence::EulerianTriangle),
            "genocchi" => Some(CheckSequence::Genocchi),
            "stirling2" => Some(CheckSequence::Stirling2),
            _ => None,
        }
    }

    pub const NAMES: &'static [&'static str] = &["eulerian-triangle", "genocchi", "stirling2"];
}

const MAX_INDEX: u64 = 100_000;

/// Splits a flattened triangle index into (row, column).
fn triangle_position(index: u64) -> (usize, usize) {
    let mut row = 0usize;
    let mut start = 0u64;
    while start + (row as u64) < index {
        start += row as u64 + 1;
        row += 1;
    }
    (row, (index - start) as usize)
}

fn artifact_value(seq: CheckSequence, index: u64) -> BigInt {
    match seq {
        CheckSequence::EulerianTriangle => {
            let (n, k) = triangle_position(index);
            triangle_row(n).entries[k]
                .to_integer()
                .expect("triangle entries are integers")
        }
        CheckSequence::Genocchi => genocchi(index as usize)
            .to_integer()
            .expect("Genocchi numbers are integers"),
        CheckSequence::Stirling2 => {
            let (n, k) = triangle_position(index);
            stirling2(n, k)
                .to_integer()
                .expect("Stirling numbers are integers")
        }
    }
}

/// Outcome of a cross-check over the overlapping index range.
#[derive(Debug, PartialEq)]
pub enum CrosscheckOutcome {
    /// Number of entries compared and the b-file index range covered.
    FullMatch { compared: usize, range: (i64, i64) },
    Mismatch {
        bfile_index: i64,
        expected: BigInt,
        found: BigInt,
    },
}

/// Compares the artifact sequence against b-file entries. `offset` is the
/// b-file index of artifact element 0; file entries below the offset are
/// outside the map and skipped.
pub fn crosscheck(seq: CheckSequence, bfile: &BFile, offset: i64) -> Result<CrosscheckOutcome> {
    let mut compared = 0usize;
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for (index, value) in &bfile.entries {
        let Some(artifact_index) = index.checked_sub(offset).filter(|i| *i >= 0) else {
            continue;
        };
        if artifact_index as u64 > MAX_INDEX {
            bail!(
                "b-file index {index} maps to artifact index {artifact_index}, beyond the supported range {MAX_INDEX}"
            );
        }
        let expected = artifact_value(seq, artifact_index as u64);
        if &expected != value {
            return Ok(CrosscheckOutcome::Mismatch {
                bfile_index: *index,
                expected,
                found: value.clone(),
            });
        }
        compared += 1;
        lo = lo.min(*index);
        hi = hi.max(*index);
    }
    if compared == 0 {
        bail!("no b-file entries overlap the artifact range (offset {offset})");
    }
    Ok(CrosscheckOutcome::FullMatch {
        compared,
        range: (lo, hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfile::parse_bfile;

    #[test]
    fn triangle_positions() {
        assert_eq!(triangle_position(0), (0, 0));
        assert_eq!(triangle_position(1), (1, 0));
        assert_eq!(triangle_position(2), (1, 1));
        assert_eq!(triangle_position(3), (2, 0));
        assert_eq!(triangle_position(9), (3, 3));
        assert_eq!(triangle_position(10), (4, 0));
    }

    #[test]
    fn flattened_triangle_values() {
        // Rows: 1 / 1 1 / 1 1 1 / 1 1 4 1.
        let expected = [1i64, 1, 1, 1, 1, 1, 1, 1, 4, 1];
        for (i, v) in expected.iter().enumerate() {
            assert_eq!(
                artifact_value(CheckSequence::EulerianTriangle, i as u64),
                BigInt::from(*v),
                "index {i}"
            );
        }
    }

    #[test]
    fn genocchi_values() {
        let expected = [0i64, 1, -1, 0, 1, 0, -3, 0, 17];
        for (i, v) in expected.iter().enumerate() {
            assert_eq!(
                artifact_value(CheckSequence::Genocchi, i as u64),
                BigInt::from(*v),
                "G_{i}"
            );
        }
    }

    #[test]
    fn match_and_mismatch() {
        let bfile = parse_bfile("1 0\n2 1\n3 -1\n4 0\n5 1\n").unwrap();
        let outcome = crosscheck(CheckSequence::Genocchi, &bfile, 1).unwrap();
        assert_eq!(
            outcome,
            CrosscheckOutcome::FullMatch {
                compared: 5,
                range: (1, 5)
            }
        );

        let corrupted = parse_bfile("1 0\n2 1\n3 7\n").unwrap();
        let outcome = crosscheck(CheckSequence::Genocchi, &corrupted, 1).unwrap();
        assert_eq!(
            outcome,
            CrosscheckOutcome::Mismatch {
                bfile_index: 3,
                expected: BigInt::from(-1),
                found: BigInt::from(7),
            }
        );
    }

    #[test]
    fn entries_below_offset_are_skipped() {
        let bfile = parse_bfile("1 999\n2 0\n3 1\n").unwrap();
        let outcome = crosscheck(CheckSequence::Genocchi, &bfile, 2).unwrap();
        assert_eq!(
            outcome,
            CrosscheckOutcome::FullMatch {
                compared: 2,
                range: (2, 3)
            }
        );
    }
}
