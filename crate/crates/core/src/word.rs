//! Word-level analysis: metric syllable count, stress and end-of-verse
//! compensation, computed by counting vowel nuclei instead of syllabifying.
//!
//! A nucleus is a maximal group of adjacent vowels that are pronounced in
//! one syllable. Two adjacent vowels merge when they form one of the
//! fourteen Spanish diphthongs; a third merges only to complete a
//! closed-open-closed triphthong (`buey`, `guiáis`). An `h` between vowels
//! is silent and does not separate them. The `u` of `qu` and of `gu`
//! before `e`/`i` is silent and is not a vowel at all.

use std::ops::Range;

use serde::Serialize;

use crate::error::ScanError;
use crate::lexicon::LexiconConfig;

/// The fourteen diphthongs, as unaccented base vowels.
const DIPHTHONGS: [[char; 2]; 14] = [
    ['a', 'i'],
    ['a', 'u'],
    ['e', 'i'],
    ['e', 'u'],
    ['o', 'i'],
    ['o', 'u'],
    ['u', 'i'],
    ['i', 'u'],
    ['i', 'a'],
    ['u', 'a'],
    ['i', 'e'],
    ['u', 'e'],
    ['i', 'o'],
    ['u', 'o'],
];

/// Whole words ending in `-mente` that are not adverbs built on a stem.
const MENTE_EXCEPTIONS: [&str; 5] = ["mente", "clemente", "inclemente", "demente", "vehemente"];

/// Unaccented base of a vowel letter; `y` maps to `i`.
pub(crate) fn base_vowel(c: char) -> Option<char> {
    Some(match c {
        'a' | 'á' | 'à' | 'â' => 'a',
        'e' | 'é' | 'è' | 'ê' => 'e',
        'i' | 'í' | 'ì' | 'î' | 'ï' | 'y' => 'i',
        'o' | 'ó' | 'ò' | 'ô' => 'o',
        'u' | 'ú' | 'ù' | 'û' | 'ü' => 'u',
        _ => return None,
    })
}

fn is_vowel_letter(c: char) -> bool {
    c != 'y' && base_vowel(c).is_some()
}

fn has_accent(c: char) -> bool {
    matches!(
        c,
        'á' | 'é' | 'í' | 'ó' | 'ú' | 'à' | 'è' | 'ì' | 'ò' | 'ù' | 'â' | 'ê' | 'î' | 'ô' | 'û'
    )
}

pub(crate) fn has_diaeresis(c: char) -> bool {
    matches!(c, 'ü' | 'ï' | 'ÿ')
}

/// Closed vowel that can act as a glide: unaccented `i`, `u` or `y`.
pub(crate) fn is_glide(c: char) -> bool {
    matches!(c, 'i' | 'u' | 'y')
}

fn is_open(c: char) -> bool {
    matches!(base_vowel(c), Some('a' | 'e' | 'o'))
}

/// Whether two adjacent vowels form a diphthong.
///
/// Accented `í`/`ú` and diaeresis marks force a hiatus; two open vowels
/// never merge.
pub fn is_diphthong(first: char, second: char) -> bool {
    let (Some(a), Some(b)) = (base_vowel(first), base_vowel(second)) else {
        return false;
    };
    if has_diaeresis(first) || has_diaeresis(second) {
        return false;
    }
    let accented_closed = |c: char| has_accent(c) && matches!(base_vowel(c), Some('i' | 'u'));
    if accented_closed(first) || accented_closed(second) {
        return false;
    }
    DIPHTHONGS.contains(&[a, b])
}

/// A group of vowels pronounced as one metric syllable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nucleus {
    /// Char offsets of the vowels, in order.
    pub vowels: Vec<usize>,
    /// Index into `vowels` of the vowel that carries stress when the
    /// nucleus is stressed.
    pub peak: usize,
}

impl Nucleus {
    /// Char range from the first to the last vowel, inclusive of any
    /// silent `h` in between.
    pub fn span(&self) -> Range<usize> {
        self.vowels[0]..self.vowels[self.vowels.len() - 1] + 1
    }

    pub fn is_merged(&self) -> bool {
        self.vowels.len() > 1
    }
}

/// Metric analysis of one normalized word.
///
/// Nucleus indices (`stress_index`, sites) are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordScan {
    pub word: String,
    pub syllable_count: usize,
    pub stress_index: Option<usize>,
    /// The `men` nucleus of `-mente` adverbs.
    pub secondary_stress_index: Option<usize>,
    /// End-of-verse adjustment: -1 proparoxytone, 0 paroxytone, +1 oxytone.
    pub compensation: i8,
    pub nuclei: Vec<Nucleus>,
    /// Adjacent nuclei pronounced in hiatus (syneresis candidates).
    pub hiatus_sites: Vec<(usize, usize)>,
    /// Nuclei holding a merged vowel group (dieresis candidates).
    pub diphthong_sites: Vec<usize>,
    pub starts_with_vowel_sound: bool,
    pub ends_with_vowel_sound: bool,
    pub is_atonic: bool,
}

impl WordScan {
    /// The last stressed nucleus, which decides end-of-verse compensation.
    pub fn last_stress(&self) -> Option<usize> {
        self.secondary_stress_index.or(self.stress_index)
    }

    pub fn is_stressed(&self, nucleus: usize) -> bool {
        self.stress_index == Some(nucleus) || self.secondary_stress_index == Some(nucleus)
    }
}

/// Compensation for a word whose last stress sits on nucleus `stress` of
/// `count`, clamped to one syllable either way.
pub fn compensation_for(stress: usize, count: usize) -> i8 {
    (stress as i64 - (count as i64 - 1)).clamp(-1, 1) as i8
}

struct Nuclei {
    nuclei: Vec<Nucleus>,
    hiatus: Vec<(usize, usize)>,
    accented: Option<usize>,
}

fn vowel_offsets(chars: &[char]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        let next = chars.get(i + 1).copied();
        let prev = if i > 0 { Some(chars[i - 1]) } else { None };
        let vowel = match c {
            'y' => !next.is_some_and(is_vowel_letter),
            'u' => {
                let silent = prev == Some('q')
                    || (prev == Some('g') && matches!(next, Some('e' | 'i' | 'é' | 'í')));
                !silent
            }
            _ => is_vowel_letter(c),
        };
        if vowel {
            out.push(i);
        }
    }
    out
}

fn group_nuclei(chars: &[char]) -> Nuclei {
    let mut nuclei: Vec<Vec<usize>> = Vec::new();
    let mut hiatus = Vec::new();
    let mut prev: Option<usize> = None;
    for pos in vowel_offsets(chars) {
        let adjacent = prev.is_some_and(|p| chars[p + 1..pos].iter().all(|&c| c == 'h'));
        let mut merged = false;
        if adjacent {
            let p = prev.unwrap();
            let current = nuclei.last_mut().unwrap();
            // The diaeresis in güe/güi only marks the u as pronounced.
            let first = match chars[p] {
                'ü' if p > 0 && chars[p - 1] == 'g' => 'u',
                c => c,
            };
            if is_diphthong(first, chars[pos]) {
                let completes_triphthong = current.len() == 2
                    && is_glide(chars[current[0]])
                    && is_open(chars[current[1]])
                    && is_glide(chars[pos]);
                if current.len() == 1 || completes_triphthong {
                    current.push(pos);
                    merged = true;
                }
            }
            if !merged {
                hiatus.push((nuclei.len(), nuclei.len() + 1));
            }
        }
        if !merged {
            nuclei.push(vec![pos]);
        }
        prev = Some(pos);
    }
    let mut accented = None;
    let nuclei = nuclei
        .into_iter()
        .enumerate()
        .map(|(n, vowels)| {
            let stressed_vowel = vowels.iter().position(|&v| has_accent(chars[v]));
            if stressed_vowel.is_some() && accented.is_none() {
                accented = Some(n + 1);
            }
            let peak = stressed_vowel
                .or_else(|| vowels.iter().position(|&v| is_open(chars[v])))
                .unwrap_or(vowels.len() - 1);
            Nucleus { vowels, peak }
        })
        .collect();
    Nuclei {
        nuclei,
        hiatus,
        accented,
    }
}

/// Default stress from the spelling rules: words ending in a vowel, `n` or
/// `s` are paroxytone, the rest (including final `y`) oxytone.
fn default_stress(chars: &[char], count: usize) -> usize {
    if count == 1 {
        return 1;
    }
    match chars.last() {
        Some(&c) if c == 'n' || c == 's' || is_vowel_letter(c) => count - 1,
        _ => count,
    }
}

fn mente_stress(word: &str, chars: &[char]) -> Option<(usize, usize)> {
    let stem = word.strip_suffix("mente")?;
    if stem.is_empty() || MENTE_EXCEPTIONS.contains(&word) {
        return None;
    }
    let stem_chars = &chars[..stem.chars().count()];
    let stem_nuclei = group_nuclei(stem_chars);
    let count = stem_nuclei.nuclei.len();
    if count == 0 || (count < 2 && stem_nuclei.accented.is_none()) {
        return None;
    }
    let stress = stem_nuclei
        .accented
        .unwrap_or_else(|| default_stress(stem_chars, count));
    Some((stress, count + 1))
}

/// Scans a normalized word (the output of [`crate::text::normalize_word`]).
pub fn scan_word(word: &str, lexicon: &LexiconConfig) -> Result<WordScan, ScanError> {
    let chars: Vec<char> = word.chars().collect();
    let Nuclei {
        nuclei,
        hiatus,
        accented,
    } = group_nuclei(&chars);
    if nuclei.is_empty() {
        return Err(ScanError::NoVowel(word.to_string()));
    }
    let count = nuclei.len();
    let is_atonic = lexicon.is_atonic(word);

    let (stress, secondary) = if is_atonic {
        (None, None)
    } else if let Some((stem_stress, men)) = mente_stress(word, &chars) {
        (Some(stem_stress), Some(men))
    } else {
        let s = accented.unwrap_or_else(|| default_stress(&chars, count));
        (Some(s), None)
    };
    let compensation = match secondary.or(stress) {
        Some(s) => compensation_for(s, count),
        None => 0,
    };

    let first = *nuclei[0].vowels.first().unwrap();
    let starts_with_vowel_sound = first == 0 || (first == 1 && chars[0] == 'h');
    let last_vowel = *nuclei[count - 1].vowels.last().unwrap();
    let ends_with_vowel_sound = chars[last_vowel + 1..].iter().all(|&c| c == 'h');

    let diphthong_sites = nuclei
        .iter()
        .enumerate()
        .filter(|(_, n)| n.is_merged())
        .map(|(i, _)| i + 1)
        .collect();

    Ok(WordScan {
        word: word.to_string(),
        syllable_count: count,
        stress_index: stress,
        secondary_stress_index: secondary,
        compensation,
        nuclei,
        hiatus_sites: hiatus,
        diphthong_sites,
        starts_with_vowel_sound,
        ends_with_vowel_sound,
        is_atonic,
    })
}
