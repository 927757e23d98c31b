//! The canonical verse typology and proximity matching against it.
//!
//! Proximity is the Jaccard similarity between the computed stress set and
//! a type's characteristic stresses. Only types that share the obligatory
//! penultimate stress with the pattern compete. Ties go to types contained
//! in the pattern (the extra stresses are then plain extrarrhythmic
//! accents), then to the type with more stresses, then to catalog order.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;

use serde::{Serialize, Serializer};

use crate::error::{data_lines, DataError};
use crate::pattern::{dotted, MetricalPattern};

const HENDECASYLLABLES: &str = include_str!("../data/catalog.tsv");
const EXTENSIONS: &str = include_str!("../data/catalog_extensions.tsv");

/// Exact non-negative fraction. Compared by value, so 2/4 == 1/2.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0, "zero denominator");
        Ratio { num, den }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.value())
    }
}

/// A canonical verse type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternType {
    pub measure: usize,
    pub family: String,
    pub variant: String,
    /// Characteristic stresses, sorted.
    pub stresses: Vec<usize>,
}

impl PatternType {
    pub fn name(&self) -> String {
        if self.variant.is_empty() {
            self.family.clone()
        } else {
            format!("{} {}", self.family, self.variant)
        }
    }

    fn generic(measure: usize) -> Self {
        PatternType {
            measure,
            family: "genérico".into(),
            variant: String::new(),
            stresses: vec![measure.saturating_sub(1).max(1)],
        }
    }
}

/// Best catalog type for a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchResult {
    pub matched_type: Option<PatternType>,
    pub coincidence_ratio: Ratio,
    /// Computed stresses absent from the matched type.
    pub extrarrhythmic: Vec<usize>,
}

impl MatchResult {
    pub fn type_name(&self) -> String {
        self.matched_type
            .as_ref()
            .map(PatternType::name)
            .unwrap_or_default()
    }

    pub fn canonical_pattern(&self) -> String {
        self.matched_type
            .as_ref()
            .map(|t| dotted(&t.stresses))
            .unwrap_or_default()
    }
}

/// Verse typology, immutable after load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    types: Vec<PatternType>,
}

impl Default for Catalog {
    /// The hendecasyllable table plus the bundled extensions.
    fn default() -> Self {
        let mut text = String::from(HENDECASYLLABLES);
        text.push('\n');
        text.push_str(EXTENSIONS);
        Catalog::parse(&text).expect("bundled catalog is well formed")
    }
}

impl Catalog {
    pub fn hendecasyllables_only() -> Self {
        Catalog::parse(HENDECASYLLABLES).expect("bundled catalog is well formed")
    }

    pub fn from_types(types: Vec<PatternType>) -> Self {
        Catalog { types }
    }

    /// Parses `measure<TAB>family<TAB>variant<TAB>dotted` lines.
    pub fn parse(text: &str) -> Result<Self, DataError> {
        let mut types = Vec::new();
        for (line, raw) in data_lines(text) {
            let fields: Vec<&str> = raw.split('\t').collect();
            let [measure, family, variant, stresses] = fields[..] else {
                return Err(DataError::malformed(
                    line,
                    format!("expected 4 tab-separated fields, found {}", fields.len()),
                ));
            };
            let measure: usize = measure
                .trim()
                .parse()
                .map_err(|_| DataError::malformed(line, format!("bad measure {measure:?}")))?;
            let pattern = MetricalPattern::parse_dotted(&format!("{stresses}|{measure}"))
                .map_err(|e| DataError::malformed(line, e.to_string()))?;
            if !pattern.is_well_formed() {
                return Err(DataError::malformed(
                    line,
                    format!("type lacks the stress on position {}", measure - 1),
                ));
            }
            types.push(PatternType {
                measure,
                family: family.trim().to_string(),
                variant: variant.trim().to_string(),
                stresses: pattern.positions,
            });
        }
        if types.is_empty() {
            return Err(DataError::Empty);
        }
        Ok(Catalog { types })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, DataError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| DataError::io(path, e))?;
        Catalog::parse(&text)
    }

    pub fn types(&self) -> &[PatternType] {
        &self.types
    }

    /// All types for a measure, in catalog order, or a single generic
    /// type stressing the penultimate position when none is catalogued.
    pub fn lookup(&self, measure: usize) -> Vec<PatternType> {
        let found: Vec<PatternType> = self
            .types
            .iter()
            .filter(|t| t.measure == measure)
            .cloned()
            .collect();
        if found.is_empty() {
            vec![PatternType::generic(measure)]
        } else {
            found
        }
    }

    pub fn match_pattern(&self, pattern: &MetricalPattern) -> MatchResult {
        match_pattern(pattern, &self.lookup(pattern.measure))
    }
}

fn jaccard(pattern: &[usize], stresses: &[usize]) -> (Ratio, usize) {
    let shared = pattern.iter().filter(|p| stresses.contains(p)).count();
    let union = pattern.len() + stresses.len() - shared;
    (Ratio::new(shared as u32, union.max(1) as u32), shared)
}

/// Picks the closest candidate type for a computed pattern.
pub fn match_pattern(pattern: &MetricalPattern, candidates: &[PatternType]) -> MatchResult {
    let obligatory = pattern.measure.saturating_sub(1);
    let mut best: Option<(Ratio, bool, usize, &PatternType)> = None;
    for t in candidates {
        if !pattern.positions.contains(&obligatory) || !t.stresses.contains(&obligatory) {
            continue;
        }
        let (ratio, shared) = jaccard(&pattern.positions, &t.stresses);
        let subset = shared == t.stresses.len();
        let better = match &best {
            None => true,
            Some((r, s, n, _)) => (ratio, subset, t.stresses.len()) > (*r, *s, *n),
        };
        if better {
            best = Some((ratio, subset, t.stresses.len(), t));
        }
    }
    match best {
        Some((ratio, _, _, t)) => MatchResult {
            matched_type: Some(t.clone()),
            coincidence_ratio: ratio,
            extrarrhythmic: pattern
                .positions
                .iter()
                .copied()
                .filter(|p| !t.stresses.contains(p))
                .collect(),
        },
        None => MatchResult {
            matched_type: None,
            coincidence_ratio: Ratio::ZERO,
            extrarrhythmic: pattern.positions.clone(),
        },
    }
}
