//! Embedded table of class-number counts for h ≤ 100: for each h, the number
//! of negative fundamental discriminants with class number h and the largest
//! such |D| (Watkins 2004, Table 4).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TABLE: &str = include_str!("../data/watkins_table4.txt");

/// FNV-1a digest of the embedded table, pinned so any edit fails the build.
const TABLE_FNV1A: u64 = 0xa1ab_acb2_e4bc_2ab2;

const fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    let mut i = 0;
    while i < bytes.len() {
        hash ^= bytes[i] as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        i += 1;
    }
    hash
}

const _: () = assert!(fnv1a(TABLE.as_bytes()) == TABLE_FNV1A, "watkins table digest mismatch");

pub const TABLE_ROWS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WatkinsRow {
    /// Class number.
    pub h: u32,
    /// Number of negative fundamental discriminants with class number `h`.
    pub count: u64,
    /// Largest such |D|.
    pub largest: u64,
}

/// Parses and validates the embedded table.
pub fn load_watkins() -> Result<Vec<WatkinsRow>> {
    parse_table(TABLE)
}

pub(crate) fn parse_table(text: &str) -> Result<Vec<WatkinsRow>> {
    let mut rows = Vec::with_capacity(TABLE_ROWS);
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Data(format!("line {}: {line:?}", lineno + 1));
        if fields.len() != 3 {
            return Err(bad());
        }
        let row = WatkinsRow {
            h: fields[0].parse().map_err(|_| bad())?,
            count: fields[1].parse().map_err(|_| bad())?,
            largest: fields[2].parse().map_err(|_| bad())?,
        };
        if row.count < 1 || row.largest < 3 {
            return Err(Error::Data(format!("row h={}: count and largest out of range", row.h)));
        }
        rows.push(row);
    }
    rows.sort_by_key(|r| r.h);
    if rows.len() != TABLE_ROWS {
        return Err(Error::Data(format!("expected {TABLE_ROWS} rows, found {}", rows.len())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.h as usize != i + 1 {
            return Err(Error::Data(format!("row h={} out of sequence (expected h={})", row.h, i + 1)));
        }
    }
    if rows[0] != (WatkinsRow { h: 1, count: 9, largest: 163 }) {
        return Err(Error::Data(format!("row h=1 is {:?}", rows[0])));
    }
    Ok(rows)
}

/// Largest-|D| witness for `h`, if tabulated.
pub fn witness(rows: &[WatkinsRow], h: u32) -> Option<u64> {
    rows.iter().find(|r| r.h == h).map(|r| r.largest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_rows() {
        let rows = load_watkins().unwrap();
        assert_eq!(rows.len(), 100);
        assert_eq!(rows[0], WatkinsRow { h: 1, count: 9, largest: 163 });
        assert_eq!(rows[1], WatkinsRow { h: 2, count: 18, largest: 427 });
        assert_eq!(rows[95], WatkinsRow { h: 96, count: 3283, largest: 1_684_027 });
        assert_eq!(rows[99], WatkinsRow { h: 100, count: 1736, largest: 1_856_563 });
        assert_eq!(rows.iter().map(|r| r.largest).max(), Some(2_383_747));
        assert_eq!(witness(&rows, 23), Some(90787));
    }

    #[test]
    fn corrupt_tables_are_rejected_with_row() {
        let mut text = TABLE.replace("\n41 109 296587\n", "\n41 0 296587\n");
        let err = parse_table(&text).unwrap_err();
        assert!(err.to_string().contains("h=41"), "{err}");

        text = TABLE.replace("\n7 31 5923\n", "\n7 31\n");
        let err = parse_table(&text).unwrap_err();
        assert!(err.to_string().contains("line 7"), "{err}");

        text = TABLE.replace("\n100 1736 1856563\n", "\n");
        assert!(parse_table(&text).is_err());

        text = TABLE.replace("1 9 163\n", "1 8 163\n");
        assert!(parse_table(&text).is_err());
    }
}
