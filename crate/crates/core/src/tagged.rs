//! Tagged-text rendering.
//!
//! Synalepha `‿` and dialefa `‖` replace the space between the two words,
//! the hemistich pause is ` / `, a dieresis puts `¨` on the glide of the
//! split diphthong and a syneresis wraps the merged vowels in parentheses.

use std::collections::BTreeSet;

use crate::verse::{PreparedVerse, Reading};
use crate::word::{is_glide, WordScan};

pub(crate) struct JunctionMarks<'a> {
    pub synalephas: &'a [usize],
    pub dialefas: &'a BTreeSet<usize>,
    pub breaks: &'a [usize],
}

impl JunctionMarks<'_> {
    fn before(&self, word: usize) -> Option<&'static str> {
        let left = word.checked_sub(1)?;
        if self.breaks.contains(&left) {
            Some(" / ")
        } else if self.synalephas.contains(&left) {
            Some("‿")
        } else if self.dialefas.contains(&left) {
            Some("‖")
        } else {
            None
        }
    }
}

fn with_diaeresis(c: char) -> char {
    match c {
        'i' => 'ï',
        'u' => 'ü',
        'y' => 'ÿ',
        'I' => 'Ï',
        'U' => 'Ü',
        'Y' => 'Ÿ',
        other => other,
    }
}

fn uppercase(c: char) -> char {
    c.to_uppercase().next().unwrap_or(c)
}

fn render_word(core: &str, scan: &WordScan, w: usize, reading: &Reading, stress: bool) -> String {
    let mut chars: Vec<char> = core.chars().collect();
    let lower: Vec<char> = scan.word.chars().collect();
    if chars.len() != lower.len() {
        return core.to_string();
    }
    let mut opens = vec![false; chars.len()];
    let mut closes = vec![false; chars.len()];
    let syn = |n: usize| reading.synereses.contains(&(w, n));
    for (i, nucleus) in scan.nuclei.iter().enumerate() {
        let n = i + 1;
        let split = reading.diereses.contains(&(w, n)) && nucleus.is_merged();
        if split {
            let target = if is_glide(lower[nucleus.vowels[0]]) {
                nucleus.vowels[0]
            } else {
                nucleus.vowels[1]
            };
            chars[target] = with_diaeresis(chars[target]);
        }
        if stress && scan.is_stressed(n) {
            let vowels: &[usize] = if split && nucleus.peak == 0 {
                &nucleus.vowels[..1]
            } else if split {
                &nucleus.vowels[1..]
            } else {
                &nucleus.vowels
            };
            for &v in vowels {
                chars[v] = uppercase(chars[v]);
            }
        }
        let span = nucleus.span();
        if syn(n) && !(n > 1 && syn(n - 1)) {
            opens[span.start] = true;
        }
        if n > 1 && syn(n - 1) && !syn(n) {
            closes[span.end - 1] = true;
        }
    }
    let mut out = String::with_capacity(core.len() + 4);
    for (i, c) in chars.into_iter().enumerate() {
        if opens[i] {
            out.push('(');
        }
        out.push(c);
        if closes[i] {
            out.push(')');
        }
    }
    out
}

pub(crate) fn render(
    prepared: &PreparedVerse,
    reading: &Reading,
    marks: &JunctionMarks<'_>,
    stress: bool,
) -> String {
    let mut out = String::new();
    let mut next_word = 0;
    for (t, token) in prepared.tokens.iter().enumerate() {
        if token.is_pause_marker() {
            continue;
        }
        let word = prepared
            .words
            .get(next_word)
            .filter(|pw| pw.token == t)
            .map(|pw| (next_word, &pw.scan));
        if !out.is_empty() {
            let mark = word.and_then(|(w, _)| marks.before(w));
            out.push_str(mark.unwrap_or(" "));
        }
        out.push_str(&token.prefix);
        match word {
            Some((w, scan)) => {
                out.push_str(&render_word(&token.core, scan, w, reading, stress));
                next_word += 1;
            }
            None => out.push_str(&token.core),
        }
        out.push_str(&token.suffix);
    }
    out
}
