//! b-file parsing: plain-text integer sequences as "index value" lines.
//!
//! Lines starting with '#' and blank lines are ignored. Anything else must
//! be exactly two whitespace-separated integer fields, and indices must be
//! strictly increasing. Parse failures name the offending line.

use anyhow::{bail, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
pub struct BFile {
    pub entries: Vec<(i64, BigInt)>,
}

pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index_text), Some(value_text), None) =
            (fields.next(), fields.next(), fields.next())
        else {
            bail!("line {line_no}: malformed entry {raw:?} (expected \"index value\")");
        };
        let Ok(index) = index_text.parse::<i64>() else {
            bail!("line {line_no}: malformed index {index_text:?}");
        };
        let Ok(value) = value_text.parse::<BigInt>() else {
            bail!("line {line_no}: malformed value {value_text:?}");
        };
        if let Some((last, _)) = entries.last() {
            if index <= *last {
                bail!("line {line_no}: index {index} does not increase past {last}");
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# header\n\n1 1\n2 -5\n10 99\n";
        let bfile = parse_bfile(text).unwrap();
        assert_eq!(bfile.entries.len(), 3);
        assert_eq!(bfile.entries[1], (2, BigInt::from(-5)));
    }

    #[test]
    fn rejects_malformed_line_with_line_number() {
        let err = parse_bfile("1 1\n5 x\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_bfile("1 1\n2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        let err = parse_bfile("1 1\n2 3 4\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn rejects_non_increasing_indices() {
        let err = parse_bfile("3 1\n3 2\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }
}
