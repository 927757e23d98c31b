//! Poem-level analysis: infer the frequent measures, then rescan the verses
//! that do not fit them with ambiguity resolution enabled.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::verse::{ScanFlag, Scanner, VerseScansion};

/// Default context size for polymetric poems: one sonnet.
pub const DEFAULT_WINDOW: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeterMode {
    /// Fixed when a single measure is frequent over the whole poem.
    #[default]
    Auto,
    Fixed,
    Mixed,
}

impl std::str::FromStr for MeterMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(MeterMode::Auto),
            "fixed" => Ok(MeterMode::Fixed),
            "mixed" => Ok(MeterMode::Mixed),
            other => Err(format!(
                "unknown mode {other:?} (expected auto, fixed or mixed)"
            )),
        }
    }
}

/// Which verses form the mixed-mode context of a verse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowAnchor {
    /// The `window` verses before it.
    #[default]
    Preceding,
    /// Up to `window` verses around it, half on each side, itself excluded.
    Centered,
}

impl std::str::FromStr for WindowAnchor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "preceding" => Ok(WindowAnchor::Preceding),
            "centered" => Ok(WindowAnchor::Centered),
            other => Err(format!(
                "unknown window anchor {other:?} (expected preceding or centered)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoemOptions {
    /// Verses consulted in mixed mode. At least 1.
    pub window: usize,
    pub anchor: WindowAnchor,
    pub mode: MeterMode,
    /// User-declared versal tendency; when non-empty it replaces inference.
    pub forced_measures: Option<BTreeSet<usize>>,
}

impl Default for PoemOptions {
    fn default() -> Self {
        PoemOptions {
            window: DEFAULT_WINDOW,
            anchor: WindowAnchor::Preceding,
            mode: MeterMode::Auto,
            forced_measures: None,
        }
    }
}

impl PoemOptions {
    fn forced(&self) -> Option<&BTreeSet<usize>> {
        self.forced_measures.as_ref().filter(|f| !f.is_empty())
    }
}

/// One non-blank input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoemRow {
    pub line: String,
    /// `None` when the line could not be scanned.
    pub scansion: Option<VerseScansion>,
    /// Measures the verse was expected to fit.
    pub targets: BTreeSet<usize>,
    pub flags: Vec<ScanFlag>,
}

impl PoemRow {
    pub fn measure(&self) -> Option<usize> {
        self.scansion.as_ref().map(|s| s.measure)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoemAnalysis {
    pub rows: Vec<PoemRow>,
    pub frequent_measures: BTreeSet<usize>,
    pub is_fixed: bool,
    /// Row indices preceded by a blank line.
    pub stanza_breaks: Vec<usize>,
}

/// Measures occurring in at least a quarter of the list and at least
/// twice; the modal measure when none qualifies.
pub fn frequent_measures(measures: &[usize]) -> BTreeSet<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &m in measures {
        *counts.entry(m).or_default() += 1;
    }
    let total = measures.len();
    let frequent: BTreeSet<usize> = counts
        .iter()
        .filter(|(_, &c)| c >= 2 && c * 4 >= total)
        .map(|(&m, _)| m)
        .collect();
    if !frequent.is_empty() {
        return frequent;
    }
    let mut modal: Option<(usize, usize)> = None;
    for (&m, &c) in &counts {
        if modal.is_none_or(|(_, best)| c > best) {
            modal = Some((m, c));
        }
    }
    modal.map(|(m, _)| m).into_iter().collect()
}

/// The poem's measure set: the declared one if any, else the inferred one.
pub fn versal_tendency(analysis: &PoemAnalysis, options: &PoemOptions) -> BTreeSet<usize> {
    options
        .forced()
        .cloned()
        .unwrap_or_else(|| analysis.frequent_measures.clone())
}

fn context_rows(
    i: usize,
    len: usize,
    window: usize,
    anchor: WindowAnchor,
) -> impl Iterator<Item = usize> {
    let (before, after) = match anchor {
        WindowAnchor::Preceding => (window, 0),
        WindowAnchor::Centered => (window.div_ceil(2), window / 2),
    };
    let end = (i + 1 + after).min(len);
    (i.saturating_sub(before)..end).filter(move |&j| j != i)
}

impl Scanner {
    /// Analyzes a poem given as text; blank lines separate stanzas.
    pub fn analyze_text(&self, text: &str, options: &PoemOptions) -> PoemAnalysis {
        let lines: Vec<&str> = text.lines().collect();
        self.analyze_poem(&lines, options)
    }

    pub fn analyze_poem<S: AsRef<str> + Sync>(
        &self,
        lines: &[S],
        options: &PoemOptions,
    ) -> PoemAnalysis {
        let mut verses = Vec::new();
        let mut stanza_breaks = Vec::new();
        let mut pending_break = false;
        for line in lines {
            let line = line.as_ref().trim();
            if line.is_empty() {
                pending_break = !verses.is_empty();
                continue;
            }
            if pending_break {
                stanza_breaks.push(verses.len());
                pending_break = false;
            }
            verses.push(line);
        }

        let first_pass: Vec<Option<VerseScansion>> =
            verses.par_iter().map(|v| self.scan_verse(v).ok()).collect();
        let measures: Vec<Option<usize>> = first_pass
            .iter()
            .map(|s| s.as_ref().map(|s| s.measure))
            .collect();
        let all: Vec<usize> = measures.iter().flatten().copied().collect();
        let global = if all.is_empty() {
            BTreeSet::new()
        } else {
            frequent_measures(&all)
        };

        let is_fixed = match (options.forced(), options.mode) {
            (Some(f), _) => f.len() == 1,
            (None, MeterMode::Fixed) => true,
            (None, MeterMode::Mixed) => false,
            (None, MeterMode::Auto) => global.len() == 1,
        };
        let window = options.window.max(1);
        let targets: Vec<BTreeSet<usize>> = (0..verses.len())
            .map(|i| {
                if let Some(forced) = options.forced() {
                    forced.clone()
                } else if is_fixed {
                    global.clone()
                } else {
                    let context: Vec<usize> =
                        context_rows(i, measures.len(), window, options.anchor)
                            .filter_map(|j| measures[j])
                            .collect();
                    if context.is_empty() {
                        BTreeSet::new()
                    } else {
                        frequent_measures(&context)
                    }
                }
            })
            .collect();

        let rows: Vec<PoemRow> = first_pass
            .into_par_iter()
            .zip(verses.par_iter())
            .zip(targets.into_par_iter())
            .map(|((scan, line), targets)| {
                let Some(scan) = scan else {
                    return PoemRow {
                        line: line.to_string(),
                        scansion: None,
                        targets,
                        flags: vec![ScanFlag::Unscannable],
                    };
                };
                let scan = if targets.is_empty() || targets.contains(&scan.measure) {
                    scan
                } else {
                    self.scan_resolved(line, &targets).unwrap_or(scan)
                };
                PoemRow {
                    line: line.to_string(),
                    flags: scan.flags.clone(),
                    scansion: Some(scan),
                    targets,
                }
            })
            .collect();

        PoemAnalysis {
            rows,
            frequent_measures: global,
            is_fixed,
            stanza_breaks,
        }
    }
}
