//! Plain-text persistence for Euler-number prefixes.
//!
//! Format: line 1 is the header `# euler E0..E2N` (with the actual upper
//! index), followed by exactly N+1 signed decimal integers, one per line.
//! The reader validates the header, the line count and every digit; it
//! never repairs or truncates silently.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::IntegerSequence;

/// Write `E_0, E_2, ..., E_2N` (an index-0 sequence as produced by
/// [`crate::sequences::euler_numbers`]) to `path`.
pub fn write_euler_cache(path: &Path, euler: &IntegerSequence) -> Result<()> {
    if euler.first_index() != 0 {
        return Err(Error::WrongOffset {
            expected: 0,
            found: euler.first_index(),
        });
    }
    let top = 2 * (euler.len() as u64 - 1);
    let mut out = Vec::new();
    writeln!(out, "# euler E0..E{top}").map_err(|e| Error::CacheIo(e.to_string()))?;
    for v in euler.values() {
        writeln!(out, "{v}").map_err(|e| Error::CacheIo(e.to_string()))?;
    }
    fs::write(path, out).map_err(|e| Error::CacheIo(format!("{}: {e}", path.display())))
}

/// Read a cache file back into an index-0 Euler sequence, validating the
/// header, the advertised line count and every value strictly.
pub fn read_euler_cache(path: &Path) -> Result<IntegerSequence> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::CacheIo(format!("{}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or(Error::CacheFormat {
        line: 1,
        message: "empty file, expected `# euler E0..E2N` header".into(),
    })?;
    let top = header
        .strip_prefix("# euler E0..E")
        .and_then(|rest| rest.trim().parse::<u64>().ok())
        .ok_or_else(|| Error::CacheFormat {
            line: 1,
            message: format!("bad header {header:?}, expected `# euler E0..E2N`"),
        })?;
    if top % 2 != 0 {
        return Err(Error::CacheFormat {
            line: 1,
            message: format!("header advertises odd index E{top}"),
        });
    }
    let expected = (top / 2 + 1) as usize;
    let mut values = Vec::with_capacity(expected);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if values.len() == expected {
            if line.trim().is_empty() {
                continue; // tolerate one trailing newline artifact
            }
            return Err(Error::CacheFormat {
                line: line_no,
                message: format!("expected {expected} values, found extra data"),
            });
        }
        let value = BigInt::from_str(line.trim()).map_err(|_| Error::CacheFormat {
            line: line_no,
            message: format!("malformed integer {line:?}"),
        })?;
        values.push(value);
    }
    if values.len() != expected {
        return Err(Error::CacheFormat {
            line: values.len() + 1,
            message: format!(
                "file ends after {} of {expected} values",
                values.len()
            ),
        });
    }
    IntegerSequence::new(0, values)
}
