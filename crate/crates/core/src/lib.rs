//! Metrical scansion of Spanish verse without syllabification.
//!
//! Words are reduced to vowel nuclei, verses are measured with synalepha
//! and stress compensation, and the resulting stress pattern is matched
//! against a catalog of rhythmical types. Ambiguous verses are resolved by
//! rescanning under every combination of metrical resources and keeping the
//! reading that best fits the poem's frequent measures.

mod ambiguity;
pub mod catalog;
pub mod corpus;
mod error;
pub mod hemistich;
pub mod lexicon;
pub mod pattern;
pub mod poem;
pub mod report;
pub mod server;
mod tagged;
pub mod text;
mod verse;
pub mod word;

pub use ambiguity::{resolve_ambiguity, Candidate, Score};
pub use catalog::{match_pattern, Catalog, MatchResult, PatternType, Ratio};
pub use error::{DataError, ScanError};
pub use hemistich::{Hemistich, HemistichPlan, SplitTable};
pub use lexicon::LexiconConfig;
pub use pattern::{MetricalPattern, PatternError};
pub use poem::{
    frequent_measures, versal_tendency, MeterMode, PoemAnalysis, PoemOptions, PoemRow, WindowAnchor,
};
pub use verse::{
    ResourceKind, ResourceTag, ScanConfig, ScanFlag, Scanner, TieBreak, VerseScansion,
    HEMISTICH_THRESHOLD,
};
pub use word::{scan_word, WordScan};
