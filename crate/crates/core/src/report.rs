//! Output rows for the command line and the analysis endpoint.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::poem::{versal_tendency, PoemAnalysis, PoemOptions, PoemRow};

/// One analyzed verse in the stable output schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub verse: String,
    pub tagged: String,
    pub syllables: Option<usize>,
    pub pattern: String,
    pub canonical_pattern: String,
    pub type_name: String,
    pub ratio: f64,
    pub resources: Vec<String>,
    pub flags: Vec<String>,
}

impl From<&PoemRow> for Row {
    fn from(row: &PoemRow) -> Self {
        let flags = row.flags.iter().map(|f| f.as_str().to_string()).collect();
        match &row.scansion {
            Some(s) => Row {
                verse: row.line.clone(),
                tagged: s.tagged_text.clone(),
                syllables: Some(s.measure),
                pattern: s.pattern.dotted(),
                canonical_pattern: s.matched.canonical_pattern(),
                type_name: s.matched.type_name(),
                ratio: s.matched.coincidence_ratio.value(),
                resources: s.resources.iter().map(ToString::to_string).collect(),
                flags,
            },
            None => Row {
                verse: row.line.clone(),
                tagged: row.line.clone(),
                syllables: None,
                pattern: String::new(),
                canonical_pattern: String::new(),
                type_name: String::new(),
                ratio: 0.0,
                resources: Vec::new(),
                flags,
            },
        }
    }
}

pub fn rows(analysis: &PoemAnalysis) -> Vec<Row> {
    analysis.rows.iter().map(Row::from).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Green,
    Black,
    Red,
}

/// Red when the verse falls outside the tendency (or cannot be scanned),
/// green when it matches its type exactly, black otherwise.
pub fn color(row: &PoemRow, tendency: &BTreeSet<usize>) -> Color {
    let Some(s) = &row.scansion else {
        return Color::Red;
    };
    if !tendency.is_empty() && !tendency.contains(&s.measure) {
        Color::Red
    } else if s.matched.matched_type.is_some() && s.matched.coincidence_ratio.is_one() {
        Color::Green
    } else {
        Color::Black
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoredRow {
    #[serde(flatten)]
    pub row: Row,
    pub color: Color,
}

/// Everything a client needs to paint a poem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisResponse {
    pub rows: Vec<ColoredRow>,
    pub tendency: BTreeSet<usize>,
    pub frequent_measures: BTreeSet<usize>,
    pub is_fixed: bool,
    pub stanza_breaks: Vec<usize>,
}

impl AnalysisResponse {
    pub fn new(analysis: &PoemAnalysis, options: &PoemOptions) -> Self {
        let tendency = versal_tendency(analysis, options);
        AnalysisResponse {
            rows: analysis
                .rows
                .iter()
                .map(|r| ColoredRow {
                    row: Row::from(r),
                    color: color(r, &tendency),
                })
                .collect(),
            tendency,
            frequent_measures: analysis.frequent_measures.clone(),
            is_fixed: analysis.is_fixed,
            stanza_breaks: analysis.stanza_breaks.clone(),
        }
    }
}

pub fn to_json(analysis: &PoemAnalysis) -> String {
    serde_json::to_string_pretty(&rows(analysis)).expect("rows serialize")
}

fn clean(field: &str) -> String {
    field.replace(['\t', '\n'], " ")
}

pub fn to_tsv(analysis: &PoemAnalysis) -> String {
    let mut out = String::from(
        "verse\ttagged\tsyllables\tpattern\tcanonical_pattern\ttype_name\tratio\tresources\tflags\n",
    );
    for r in rows(analysis) {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{:.2}\t{}\t{}",
            clean(&r.verse),
            clean(&r.tagged),
            r.syllables.map(|s| s.to_string()).unwrap_or_default(),
            r.pattern,
            r.canonical_pattern,
            r.type_name,
            r.ratio,
            r.resources.join(","),
            r.flags.join(","),
        );
    }
    out
}

pub fn to_pretty(analysis: &PoemAnalysis) -> String {
    let mut out = String::new();
    for (i, r) in rows(analysis).iter().enumerate() {
        if analysis.stanza_breaks.contains(&i) {
            out.push('\n');
        }
        let syllables = r.syllables.map_or("?".to_string(), |s| s.to_string());
        let _ = write!(out, "{syllables:>3}  {}", r.tagged);
        if !r.pattern.is_empty() {
            let _ = write!(out, "  [{}]", r.pattern);
        }
        if !r.type_name.is_empty() {
            let _ = write!(out, "  {} {:.2}", r.type_name, r.ratio);
        }
        if !r.flags.is_empty() {
            let _ = write!(out, "  ({})", r.flags.join(", "));
        }
        out.push('\n');
    }
    out
}
