//! The menu of hemistich splits tried on verses longer than eleven
//! syllables.

use std::path::Path;

use serde::Serialize;

use crate::error::{data_lines, DataError};

const DEFAULT_SPLITS: &str = include_str!("../data/hemistich_splits.tsv");

/// Hemistich splits available to the verse scanner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTable {
    splits: Vec<Vec<usize>>,
}

impl Default for SplitTable {
    fn default() -> Self {
        SplitTable::parse(DEFAULT_SPLITS).expect("bundled split table is well formed")
    }
}

impl SplitTable {
    /// Parses `total<TAB>a+b[+c...]` lines.
    pub fn parse(text: &str) -> Result<Self, DataError> {
        let mut splits = Vec::new();
        for (line, raw) in data_lines(text) {
            let (total, parts) = raw
                .split_once('\t')
                .ok_or_else(|| DataError::malformed(line, "expected total<TAB>split"))?;
            let total: usize = total
                .trim()
                .parse()
                .map_err(|_| DataError::malformed(line, format!("bad total {total:?}")))?;
            let parts = parts
                .trim()
                .split('+')
                .map(|p| p.trim().parse::<usize>().ok().filter(|&n| n > 1))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| DataError::malformed(line, format!("bad split {parts:?}")))?;
            if parts.len() < 2 || parts.iter().sum::<usize>() != total {
                return Err(DataError::malformed(
                    line,
                    format!("split {parts:?} does not add up to {total}"),
                ));
            }
            splits.push(parts);
        }
        if splits.is_empty() {
            return Err(DataError::Empty);
        }
        Ok(SplitTable { splits })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DataError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| DataError::io(path, e))?;
        SplitTable::parse(&text)
    }

    /// Splits ordered by how far their total lies from the flat count,
    /// file order breaking ties.
    pub fn candidates(&self, flat_measure: usize) -> Vec<&[usize]> {
        let mut out: Vec<(usize, usize, &[usize])> = self
            .splits
            .iter()
            .enumerate()
            .map(|(i, s)| {
                (
                    s.iter().sum::<usize>().abs_diff(flat_measure),
                    i,
                    s.as_slice(),
                )
            })
            .collect();
        out.sort();
        out.into_iter().map(|(_, _, s)| s).collect()
    }
}

/// One realized hemistich: its raw nucleus count and the compensation of
/// its last word. `raw + compensation == expected_measure`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hemistich {
    pub expected_measure: usize,
    pub raw: usize,
    pub compensation: i8,
}

/// The hemistich structure found for a long verse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HemistichPlan {
    pub splits: Vec<Hemistich>,
}

impl HemistichPlan {
    pub fn measure(&self) -> usize {
        self.splits.iter().map(|h| h.expected_measure).sum()
    }

    /// `8-1 / 6+1` style rendering.
    pub fn describe(&self) -> String {
        self.splits
            .iter()
            .map(|h| match h.compensation {
                0 => format!("{}", h.raw),
                c if c > 0 => format!("{}+{}", h.raw, c),
                c => format!("{}-{}", h.raw, -c),
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }
}
