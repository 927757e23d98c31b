//! Annotated corpora and the binary per-verse accuracy metric.

use std::path::Path;
use std::time::Instant;

use serde::Serialize;

use crate::error::{data_lines, DataError};
use crate::pattern::MetricalPattern;
use crate::poem::PoemOptions;
use crate::verse::{Scanner, VerseScansion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    /// `verse<TAB>2.6.10`, optionally `2.6.10|11`.
    #[default]
    Dotted,
    /// `verse<TAB>-+---+---+-`.
    Signs,
}

impl std::str::FromStr for CorpusFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dotted" => Ok(CorpusFormat::Dotted),
            "signs" => Ok(CorpusFormat::Signs),
            other => Err(format!(
                "unknown corpus format {other:?} (expected dotted or signs)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub verse: String,
    pub gold: MetricalPattern,
}

pub fn parse_corpus(text: &str, format: CorpusFormat) -> Result<Vec<CorpusEntry>, DataError> {
    let mut entries = Vec::new();
    for (line, raw) in data_lines(text) {
        let (verse, gold) = raw
            .rsplit_once('\t')
            .ok_or_else(|| DataError::malformed(line, "expected verse<TAB>pattern"))?;
        let verse = verse.trim();
        if verse.is_empty() {
            return Err(DataError::malformed(line, "empty verse"));
        }
        let gold = match format {
            CorpusFormat::Dotted => MetricalPattern::parse_dotted(gold),
            CorpusFormat::Signs => MetricalPattern::parse_signs(gold),
        }
        .map_err(|e| DataError::malformed(line, e.to_string()))?;
        entries.push(CorpusEntry {
            verse: verse.to_string(),
            gold,
        });
    }
    if entries.is_empty() {
        return Err(DataError::Empty);
    }
    Ok(entries)
}

pub fn load_corpus(
    path: impl AsRef<Path>,
    format: CorpusFormat,
) -> Result<Vec<CorpusEntry>, DataError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DataError::io(path, e))?;
    parse_corpus(&text, format)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalFailure {
    pub verse: String,
    pub gold: String,
    /// `None` when the verse could not be scanned at all.
    pub produced: Option<VerseScansion>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub total: usize,
    pub correct: usize,
    pub accuracy: f64,
    /// Two decimals, half away from zero.
    pub accuracy_rounded: f64,
    /// Analysis wall-clock time; corpus parsing is excluded.
    pub elapsed_seconds: f64,
    pub failures: Vec<EvalFailure>,
}

impl EvalReport {
    pub fn summary(&self) -> String {
        format!(
            "accuracy {:.2} ({}/{}) in {:.2}s",
            self.accuracy, self.correct, self.total, self.elapsed_seconds
        )
    }
}

/// Analyzes the corpus as one poem and counts verses whose stress
/// positions equal the annotation exactly.
pub fn evaluate(scanner: &Scanner, entries: &[CorpusEntry], options: &PoemOptions) -> EvalReport {
    let verses: Vec<&str> = entries.iter().map(|e| e.verse.as_str()).collect();
    let start = Instant::now();
    let analysis = scanner.analyze_poem(&verses, options);
    let elapsed_seconds = start.elapsed().as_secs_f64();

    let mut correct = 0;
    let mut failures = Vec::new();
    for (entry, row) in entries.iter().zip(analysis.rows) {
        let hit = row
            .scansion
            .as_ref()
            .is_some_and(|s| s.pattern.positions == entry.gold.positions);
        if hit {
            correct += 1;
        } else {
            failures.push(EvalFailure {
                verse: entry.verse.clone(),
                gold: entry.gold.dotted(),
                produced: row.scansion,
            });
        }
    }
    let total = entries.len();
    let accuracy = if total == 0 {
        0.0
    } else {
        correct as f64 / total as f64
    };
    EvalReport {
        total,
        correct,
        accuracy,
        accuracy_rounded: (accuracy * 100.0).round() / 100.0,
        elapsed_seconds,
        failures,
    }
}
