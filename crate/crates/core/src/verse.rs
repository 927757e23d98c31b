//! Verse scansion: syllable count with synalephas, stress positions, end
//! of verse compensation and hemistich handling for long verses.
//!
//! A verse is scanned under a [`Reading`]: the set of dialefas, diereses
//! and synereses applied on top of the default pronunciation, where every
//! possible synalepha is taken. The default reading is the empty one.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::catalog::{Catalog, MatchResult};
use crate::error::ScanError;
use crate::hemistich::{Hemistich, HemistichPlan, SplitTable};
use crate::lexicon::LexiconConfig;
use crate::pattern::MetricalPattern;
use crate::tagged;
use crate::text::{tokenize, Token};
use crate::word::{compensation_for, scan_word, WordScan};

/// Verses longer than this are rescanned as hemistichs.
pub const HEMISTICH_THRESHOLD: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResourceKind {
    Synalepha,
    Dialefa,
    Dieresis,
    Syneresis,
    HemistichBreak,
    HemistichDialefa,
}

impl ResourceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ResourceKind::Synalepha => "synalepha",
            ResourceKind::Dialefa => "dialefa",
            ResourceKind::Dieresis => "dieresis",
            ResourceKind::Syneresis => "syneresis",
            ResourceKind::HemistichBreak => "hemistich_break",
            ResourceKind::HemistichDialefa => "hemistich_dialefa",
        }
    }
}

/// A metrical resource at a site. `word` is the 0-based index among the
/// verse's scannable words; `nucleus` is 1-based within that word. Junction
/// resources (synalepha, dialefa, hemistich marks) sit on the last nucleus
/// of the left-hand word; syneresis on the first nucleus of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ResourceTag {
    pub kind: ResourceKind,
    pub word: usize,
    pub nucleus: usize,
}

impl std::fmt::Display for ResourceTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}@{}:{}", self.kind.as_str(), self.word, self.nucleus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanFlag {
    /// Longer than eleven syllables but no hemistich split fits.
    HemistichUnsatisfied,
    /// Some token had no vowel and was ignored.
    SkippedToken,
    /// Chosen by ambiguity resolution in a second pass.
    Rescanned,
    Unscannable,
}

impl ScanFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanFlag::HemistichUnsatisfied => "hemistich_unsatisfied",
            ScanFlag::SkippedToken => "skipped_token",
            ScanFlag::Rescanned => "rescanned",
            ScanFlag::Unscannable => "unscannable",
        }
    }
}

/// Full scansion of one verse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerseScansion {
    pub text: String,
    pub tagged_text: String,
    /// Tagged text with stressed nuclei uppercased.
    pub stressed_text: String,
    pub measure: usize,
    pub pattern: MetricalPattern,
    pub hemistichs: Option<HemistichPlan>,
    pub resources: Vec<ResourceTag>,
    #[serde(rename = "match")]
    pub matched: MatchResult,
    pub flags: Vec<ScanFlag>,
}

impl VerseScansion {
    pub fn count(&self, kind: ResourceKind) -> usize {
        self.resources.iter().filter(|r| r.kind == kind).count()
    }
}

/// Which candidate wins among equally scored readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// The reading whose resources are detected first, scanning left to
    /// right (word-internal sites before the junction that follows them).
    #[default]
    SiteOrder,
    /// Dialefa before dieresis before syneresis, then site order.
    KindOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub allow_hemistich: bool,
    /// When false, punctuation between two words blocks their synalepha.
    pub synalepha_across_punctuation: bool,
    pub tie_break: TieBreak,
    /// Ambiguity sites combined exhaustively; beyond this, combinations
    /// are enumerated by increasing size up to `2^max_sites` candidates.
    pub max_sites: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            allow_hemistich: true,
            synalepha_across_punctuation: true,
            tie_break: TieBreak::SiteOrder,
            max_sites: 6,
        }
    }
}

/// The scansion engine: lexicon, catalog, split table and options.
#[derive(Debug, Clone, Default)]
pub struct Scanner {
    pub lexicon: LexiconConfig,
    pub catalog: Catalog,
    pub splits: SplitTable,
    pub config: ScanConfig,
}

impl Scanner {
    pub fn new(lexicon: LexiconConfig, catalog: Catalog) -> Self {
        Scanner {
            lexicon,
            catalog,
            ..Scanner::default()
        }
    }

    pub fn with_config(mut self, config: ScanConfig) -> Self {
        self.config = config;
        self
    }

    pub fn with_splits(mut self, splits: SplitTable) -> Self {
        self.splits = splits;
        self
    }

    /// Scans a verse under the default reading.
    pub fn scan_verse(&self, verse: &str) -> Result<VerseScansion, ScanError> {
        let prepared = self.prepare(verse)?;
        Ok(self.scan_reading(&prepared, &Reading::default()))
    }

    pub(crate) fn prepare(&self, verse: &str) -> Result<PreparedVerse, ScanError> {
        PreparedVerse::new(verse, &self.lexicon)
    }

    pub(crate) fn can_synalepha(&self, prepared: &PreparedVerse, left: usize) -> bool {
        let (a, b) = (&prepared.words[left], &prepared.words[left + 1]);
        a.scan.ends_with_vowel_sound
            && b.scan.starts_with_vowel_sound
            && (self.config.synalepha_across_punctuation || !b.punctuation_before)
    }

    /// Scans under a reading, trying hemistich splits when the flat count
    /// exceeds eleven.
    pub(crate) fn scan_reading(
        &self,
        prepared: &PreparedVerse,
        reading: &Reading,
    ) -> VerseScansion {
        let units: Vec<WordUnits> = prepared
            .words
            .iter()
            .enumerate()
            .map(|(w, word)| WordUnits::new(&word.scan, w, reading))
            .collect();
        let mut flags = Vec::new();
        if prepared.skipped_tokens {
            flags.push(ScanFlag::SkippedToken);
        }
        let flat = self
            .layout(prepared, &units, reading, None)
            .expect("flat layout always succeeds");
        let mut chosen = flat;
        if self.config.allow_hemistich && chosen.measure > HEMISTICH_THRESHOLD {
            let split = self
                .splits
                .candidates(chosen.measure)
                .into_iter()
                .find_map(|plan| self.layout(prepared, &units, reading, Some(plan)));
            match split {
                Some(layout) => chosen = layout,
                None => flags.push(ScanFlag::HemistichUnsatisfied),
            }
        }
        self.finish(prepared, reading, chosen, flags)
    }

    /// Lays words out on metric positions. With a plan, returns `None` when
    /// the words cannot be cut into hemistichs of the expected measures.
    fn layout(
        &self,
        prepared: &PreparedVerse,
        units: &[WordUnits],
        reading: &Reading,
        plan: Option<&[usize]>,
    ) -> Option<Layout> {
        let mut layout = Layout::default();
        let mut hemistichs = Vec::new();
        let mut offset = 0;
        let mut running = 0usize;
        let mut closed_previous = false;
        for (w, u) in units.iter().enumerate() {
            let mut joins = w > 0
                && self.can_synalepha(prepared, w - 1)
                && !reading.dialefas.contains(&(w - 1));
            if joins && closed_previous {
                layout.broken.push(w - 1);
                joins = false;
            }
            let start = if joins {
                layout.synalephas.push(w - 1);
                running.max(1)
            } else {
                running + 1
            };
            for (k, &stressed) in u.stressed.iter().enumerate() {
                let p = offset + start + k;
                if stressed && layout.positions.last() != Some(&p) {
                    layout.positions.push(p);
                }
            }
            running = start + u.stressed.len() - 1;
            closed_previous = false;

            let Some(plan) = plan else { continue };
            let h = hemistichs.len();
            let expected = plan[h];
            if h + 1 < plan.len() {
                if u.tonic && running as i64 + u.compensation as i64 == expected as i64 {
                    hemistichs.push(Hemistich {
                        expected_measure: expected,
                        raw: running,
                        compensation: u.compensation,
                    });
                    layout.breaks.push(w);
                    offset += expected;
                    running = 0;
                    closed_previous = true;
                } else if running > expected + 1 {
                    return None;
                }
            }
        }
        let last = units.last().expect("prepared verses have words");
        match plan {
            None => {
                layout.measure = (running as i64 + last.compensation as i64).max(1) as usize;
            }
            Some(plan) => {
                let expected = plan[plan.len() - 1];
                if hemistichs.len() + 1 != plan.len()
                    || running as i64 + last.compensation as i64 != expected as i64
                {
                    return None;
                }
                hemistichs.push(Hemistich {
                    expected_measure: expected,
                    raw: running,
                    compensation: last.compensation,
                });
                layout.measure = plan.iter().sum();
                layout.plan = Some(HemistichPlan { splits: hemistichs });
            }
        }
        Some(layout)
    }

    fn finish(
        &self,
        prepared: &PreparedVerse,
        reading: &Reading,
        layout: Layout,
        flags: Vec<ScanFlag>,
    ) -> VerseScansion {
        let last_nucleus = |w: usize| prepared.words[w].scan.syllable_count;
        let mut resources = Vec::new();
        let mut tag = |kind, word, nucleus| {
            resources.push(ResourceTag {
                kind,
                word,
                nucleus,
            })
        };
        for &w in &layout.synalephas {
            tag(ResourceKind::Synalepha, w, last_nucleus(w));
        }
        for &w in &reading.dialefas {
            tag(ResourceKind::Dialefa, w, last_nucleus(w));
        }
        for &(w, n) in &reading.diereses {
            tag(ResourceKind::Dieresis, w, n);
        }
        for &(w, n) in &reading.synereses {
            tag(ResourceKind::Syneresis, w, n);
        }
        for &w in &layout.breaks {
            tag(ResourceKind::HemistichBreak, w, last_nucleus(w));
        }
        for &w in &layout.broken {
            tag(ResourceKind::HemistichDialefa, w, last_nucleus(w));
        }
        resources.sort_by_key(|r| (r.word, r.nucleus, r.kind));

        let marks = tagged::JunctionMarks {
            synalephas: &layout.synalephas,
            dialefas: &reading.dialefas,
            breaks: &layout.breaks,
        };
        let tagged_text = tagged::render(prepared, reading, &marks, false);
        let stressed_text = tagged::render(prepared, reading, &marks, true);
        let pattern = MetricalPattern {
            positions: layout.positions,
            measure: layout.measure,
        };
        let matched = self.catalog.match_pattern(&pattern);
        VerseScansion {
            text: prepared.text.clone(),
            tagged_text,
            stressed_text,
            measure: layout.measure,
            pattern,
            hemistichs: layout.plan,
            resources,
            matched,
            flags,
        }
    }
}

#[derive(Debug, Default)]
struct Layout {
    measure: usize,
    positions: Vec<usize>,
    plan: Option<HemistichPlan>,
    /// Left word index of each synalepha taken.
    synalephas: Vec<usize>,
    /// Words that close a hemistich.
    breaks: Vec<usize>,
    /// Synalephas broken by the hemistich pause.
    broken: Vec<usize>,
}

/// Dialefas, diereses and synereses applied to a verse.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Reading {
    /// Left word index of each dissolved synalepha.
    pub dialefas: BTreeSet<usize>,
    /// (word, nucleus) of each split diphthong.
    pub diereses: BTreeSet<(usize, usize)>,
    /// (word, first nucleus) of each merged hiatus.
    pub synereses: BTreeSet<(usize, usize)>,
}

impl Reading {
    pub fn from_tags<'a>(tags: impl IntoIterator<Item = &'a ResourceTag>) -> Self {
        let mut r = Reading::default();
        for t in tags {
            match t.kind {
                ResourceKind::Dialefa => {
                    r.dialefas.insert(t.word);
                }
                ResourceKind::Dieresis => {
                    r.diereses.insert((t.word, t.nucleus));
                }
                ResourceKind::Syneresis => {
                    r.synereses.insert((t.word, t.nucleus));
                }
                _ => {}
            }
        }
        r
    }
}

/// A word's metric units after diereses and synereses.
#[derive(Debug, Clone)]
struct WordUnits {
    stressed: Vec<bool>,
    compensation: i8,
    tonic: bool,
}

impl WordUnits {
    fn new(scan: &WordScan, w: usize, reading: &Reading) -> Self {
        let mut stressed = Vec::with_capacity(scan.syllable_count + 1);
        let mut first_unit = Vec::with_capacity(scan.syllable_count);
        for (i, nucleus) in scan.nuclei.iter().enumerate() {
            let n = i + 1;
            let s = scan.is_stressed(n);
            first_unit.push(stressed.len());
            if reading.diereses.contains(&(w, n)) && nucleus.is_merged() {
                stressed.push(s && nucleus.peak == 0);
                stressed.push(s && nucleus.peak > 0);
            } else {
                stressed.push(s);
            }
        }
        // Right to left, so earlier unit indices stay valid.
        for &(_, n) in reading.synereses.iter().rev().filter(|(sw, _)| *sw == w) {
            if n == 0 || n >= scan.syllable_count {
                continue;
            }
            let right = first_unit[n];
            let merged = stressed[right - 1] || stressed[right];
            stressed[right - 1] = merged;
            stressed.remove(right);
            for f in first_unit.iter_mut().skip(n) {
                *f -= 1;
            }
        }
        let tonic = !scan.is_atonic;
        let compensation = match stressed.iter().rposition(|&s| s) {
            Some(last) if tonic => compensation_for(last + 1, stressed.len()),
            _ => 0,
        };
        WordUnits {
            stressed,
            compensation,
            tonic,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct PreparedWord {
    pub token: usize,
    pub scan: WordScan,
    /// Punctuation sits between this word and the previous one.
    pub punctuation_before: bool,
}

/// A tokenized verse with every scannable word analyzed once.
#[derive(Debug, Clone)]
pub(crate) struct PreparedVerse {
    pub text: String,
    pub tokens: Vec<Token>,
    pub words: Vec<PreparedWord>,
    pub skipped_tokens: bool,
}

impl PreparedVerse {
    fn new(verse: &str, lexicon: &LexiconConfig) -> Result<Self, ScanError> {
        let tokens = tokenize(verse);
        let mut words: Vec<PreparedWord> = Vec::new();
        let mut skipped_tokens = false;
        let mut punctuation = false;
        for (i, token) in tokens.iter().enumerate() {
            if !token.is_word() {
                punctuation = true;
                continue;
            }
            punctuation |= !token.prefix.is_empty();
            match scan_word(&token.normalized, lexicon) {
                Ok(scan) => {
                    words.push(PreparedWord {
                        token: i,
                        scan,
                        punctuation_before: punctuation && !words.is_empty(),
                    });
                    punctuation = !token.suffix.is_empty();
                }
                Err(_) => {
                    skipped_tokens = true;
                    punctuation = true;
                }
            }
        }
        if words.is_empty() {
            return Err(ScanError::EmptyVerse);
        }
        Ok(PreparedVerse {
            text: verse.trim().to_string(),
            tokens,
            words,
            skipped_tokens,
        })
    }
}
