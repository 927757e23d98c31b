//! Word lists that decide which words carry metric stress.

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{data_lines, DataError};
use crate::text::normalize_word;

const DEFAULT_ATONIC: &str = include_str!("../data/atonic.txt");

/// Tonicity configuration. Immutable once built; share it freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconConfig {
    atonic_words: BTreeSet<String>,
    forced_tonic_words: BTreeSet<String>,
    oh_is_tonic: bool,
}

impl Default for LexiconConfig {
    fn default() -> Self {
        let atonic = parse_word_list(DEFAULT_ATONIC).expect("bundled atonic list is well formed");
        LexiconConfig::new(atonic, BTreeSet::new(), true)
    }
}

impl LexiconConfig {
    /// Builds a lexicon. Words present in both sets stay tonic.
    pub fn new(
        atonic_words: BTreeSet<String>,
        forced_tonic_words: BTreeSet<String>,
        oh_is_tonic: bool,
    ) -> Self {
        let atonic_words = atonic_words
            .difference(&forced_tonic_words)
            .cloned()
            .collect();
        LexiconConfig {
            atonic_words,
            forced_tonic_words,
            oh_is_tonic,
        }
    }

    pub fn with_oh_tonic(mut self, oh_is_tonic: bool) -> Self {
        self.oh_is_tonic = oh_is_tonic;
        self
    }

    pub fn with_atonic_words(self, atonic: BTreeSet<String>) -> Self {
        LexiconConfig::new(atonic, self.forced_tonic_words, self.oh_is_tonic)
    }

    pub fn with_forced_tonic_words(self, tonic: BTreeSet<String>) -> Self {
        LexiconConfig::new(self.atonic_words, tonic, self.oh_is_tonic)
    }

    pub fn atonic_words(&self) -> &BTreeSet<String> {
        &self.atonic_words
    }

    pub fn forced_tonic_words(&self) -> &BTreeSet<String> {
        &self.forced_tonic_words
    }

    pub fn oh_is_tonic(&self) -> bool {
        self.oh_is_tonic
    }

    /// Whether a normalized word carries no metric stress.
    pub fn is_atonic(&self, word: &str) -> bool {
        if self.forced_tonic_words.contains(word) {
            return false;
        }
        if word == "oh" {
            return !self.oh_is_tonic;
        }
        self.atonic_words.contains(word)
    }
}

/// Parses a word list: one word per line, `#` comments.
pub fn parse_word_list(text: &str) -> Result<BTreeSet<String>, DataError> {
    let mut words = BTreeSet::new();
    for (line, raw) in data_lines(text) {
        let word = normalize_word(raw.trim());
        if word.is_empty() || word.contains(char::is_whitespace) {
            return Err(DataError::malformed(line, format!("not a word: {raw:?}")));
        }
        words.insert(word);
    }
    Ok(words)
}

pub fn load_word_list(path: impl AsRef<Path>) -> Result<BTreeSet<String>, DataError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DataError::io(path, e))?;
    parse_word_list(&text)
}
