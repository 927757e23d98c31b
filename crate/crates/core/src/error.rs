use std::path::PathBuf;

use thiserror::Error;

/// Errors produced while scanning words and verses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("token {0:?} has no vowel nucleus")]
    NoVowel(String),
    #[error("verse has no scannable word")]
    EmptyVerse,
}

/// Errors produced while reading data files (catalogs, lexicons, corpora).
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("no entries found")]
    Empty,
}

impl DataError {
    pub(crate) fn malformed(line: usize, message: impl Into<String>) -> Self {
        DataError::Malformed {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        DataError::Io {
            path: path.into(),
            source,
        }
    }
}

/// Iterates the meaningful lines of a data file: trimmed, 1-based line
/// numbers, blank lines and `#` comments dropped.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}
