#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

/// A worked scansion that must be reproduced exactly.
pub struct Golden {
    pub verse: &'static str,
    /// Target measures for resolution; empty means a plain scan.
    pub targets: &'static [usize],
    pub measure: usize,
    pub positions: Option<&'static [usize]>,
    pub hemistichs: Option<&'static str>,
    pub type_name: Option<&'static str>,
    pub extrarrhythmic: Option<&'static [usize]>,
    pub tagged: Option<&'static str>,
}

pub const GOLDEN: &[Golden] = &[
    Golden {
        verse: "Amigos, el amor me perjudica",
        targets: &[],
        measure: 11,
        positions: Some(&[2, 6, 10]),
        hemistichs: None,
        type_name: Some("heroico puro"),
        extrarrhythmic: Some(&[]),
        tagged: None,
    },
    Golden {
        verse: "dentro de su fluir los manantiales",
        targets: &[11],
        measure: 11,
        positions: Some(&[1, 6, 10]),
        hemistichs: None,
        type_name: Some("enfático puro"),
        extrarrhythmic: None,
        tagged: Some("dentro de su flüir los manantiales"),
    },
    Golden {
        verse: "Siempre la claridad viene del cielo",
        targets: &[],
        measure: 11,
        positions: Some(&[1, 6, 7, 10]),
        hemistichs: None,
        type_name: Some("enfático puro"),
        extrarrhythmic: Some(&[7]),
        tagged: None,
    },
    Golden {
        verse: "Oh, qué frescor, qué música / de chopos de estación",
        targets: &[],
        measure: 14,
        positions: None,
        hemistichs: Some("8-1 / 6+1"),
        type_name: None,
        extrarrhythmic: None,
        tagged: Some("Oh, qué frescor, qué música / de chopos de‿estación"),
    },
    Golden {
        verse: "Creía que te había dicho adiós",
        targets: &[],
        measure: 11,
        positions: Some(&[2, 6, 8, 10]),
        hemistichs: None,
        type_name: Some("heroico largo"),
        extrarrhythmic: None,
        tagged: Some("Creía que te‿había dicho‿adiós"),
    },
    Golden {
        verse: "Escucho solamente entre las voces una",
        targets: &[],
        measure: 14,
        positions: Some(&[2, 4, 6, 11, 13]),
        hemistichs: Some("7 / 7"),
        type_name: None,
        extrarrhythmic: None,
        tagged: Some("Escucho solamente / entre las voces una"),
    },
    Golden {
        verse: "Todas las tardes se muere un niño",
        targets: &[11],
        measure: 11,
        positions: Some(&[1, 4, 8, 9, 10]),
        hemistichs: None,
        type_name: Some("sáfico puro pleno"),
        extrarrhythmic: Some(&[9]),
        tagged: Some("Todas las tardes se müere‿un niño"),
    },
    Golden {
        verse: "una lucha común, y un descanso común",
        targets: &[],
        measure: 14,
        positions: Some(&[1, 3, 6, 8, 10, 13]),
        hemistichs: Some("6+1 / 6+1"),
        type_name: None,
        extrarrhythmic: None,
        tagged: None,
    },
];

pub struct LabeledWord {
    pub word: String,
    pub nuclei: usize,
    pub compensation: i8,
}

/// The hand-checked list: `word<TAB>nuclei<TAB>a|l|e`.
pub fn hand_checked_words() -> Vec<LabeledWord> {
    include_str!("../data/words.tsv")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            LabeledWord {
                word: f[0].to_string(),
                nuclei: f[1].parse().unwrap(),
                compensation: match f[2] {
                    "a" => 1,
                    "l" => 0,
                    "e" => -1,
                    other => panic!("bad class {other}"),
                },
            }
        })
        .collect()
}

// Reference syllable counter: split the vowel letters into maximal runs and
// find, by brute force, the fewest blocks each run can be cut into.

fn is_vowel_letter(c: char) -> bool {
    "aeiouáéíóúüy".contains(c)
}

fn weak(c: char) -> bool {
    matches!(c, 'i' | 'u' | 'y')
}

fn strong(c: char) -> bool {
    "aeoáéíóú".contains(c) && !matches!(c, 'í' | 'ú')
}

fn glides(a: char, b: char) -> bool {
    if a == b || matches!(a, 'í' | 'ú' | 'ü') || matches!(b, 'í' | 'ú' | 'ü') {
        return false;
    }
    let (a, b) = (
        if a == 'y' { 'i' } else { a },
        if b == 'y' { 'i' } else { b },
    );
    a != b && (weak(a) || weak(b))
}

fn valid_block(block: &[char]) -> bool {
    match block {
        [_] => true,
        [a, b] => glides(*a, *b),
        [a, b, c] => weak(*a) && strong(*b) && weak(*c) && glides(*a, *b) && glides(*b, *c),
        _ => false,
    }
}

fn min_blocks(run: &[char]) -> usize {
    let n = run.len();
    let mut best = vec![usize::MAX; n + 1];
    best[0] = 0;
    for end in 1..=n {
        for len in 1..=3.min(end) {
            let start = end - len;
            if best[start] != usize::MAX && valid_block(&run[start..end]) {
                best[end] = best[end].min(best[start] + 1);
            }
        }
    }
    best[n]
}

/// Number of vowel nuclei in a lowercase word, or 0 when it has none.
pub fn reference_nuclei(word: &str) -> usize {
    let chars: Vec<char> = word.chars().collect();
    let mut runs: Vec<Vec<char>> = Vec::new();
    let mut open_run = false;
    for (i, &c) in chars.iter().enumerate() {
        let next = chars.get(i + 1).copied();
        let prev = i.checked_sub(1).map(|p| chars[p]);
        let sounds = match c {
            'y' => !next.is_some_and(|n| n != 'y' && is_vowel_letter(n)),
            'u' => {
                prev != Some('q')
                    && !(prev == Some('g') && matches!(next, Some('e' | 'i' | 'é' | 'í')))
            }
            'ü' if prev == Some('g') => true,
            _ => is_vowel_letter(c),
        };
        if sounds {
            let c = if c == 'ü' && prev == Some('g') {
                'u'
            } else {
                c
            };
            if open_run {
                runs.last_mut().unwrap().push(c);
            } else {
                runs.push(vec![c]);
            }
            open_run = true;
        } else if c != 'h' {
            open_run = false;
        }
    }
    runs.iter().map(|r| min_blocks(r)).sum()
}

/// Generator vocabulary: words without internal diphthongs or hiatuses,
/// labelled by hand.
#[derive(Debug, Clone, Copy)]
pub struct GenWord {
    pub text: &'static str,
    pub nuclei: usize,
    /// 1-based stressed nucleus, 0 for unstressed words.
    pub stress: usize,
}

impl GenWord {
    fn starts_vowel(&self) -> bool {
        self.text == "y" || self.text.starts_with(|c: char| "aeiouáéíóú".contains(c))
    }

    fn ends_vowel(&self) -> bool {
        self.text.ends_with(|c: char| "aeiouáéíóúy".contains(c))
    }

    fn compensation(&self) -> isize {
        (self.stress as isize - self.nuclei as isize + 1).clamp(-1, 1)
    }
}

const fn w(text: &'static str, nuclei: usize, stress: usize) -> GenWord {
    GenWord {
        text,
        nuclei,
        stress,
    }
}

pub const GEN_LEXICON: &[GenWord] = &[
    w("luna", 2, 1),
    w("rosa", 2, 1),
    w("tarde", 2, 1),
    w("noche", 2, 1),
    w("camino", 3, 2),
    w("pálido", 3, 1),
    w("corazón", 3, 3),
    w("amor", 2, 2),
    w("alma", 2, 1),
    w("oro", 2, 1),
    w("mar", 1, 1),
    w("sol", 1, 1),
    w("luz", 1, 1),
    w("flor", 1, 1),
    w("verdad", 2, 2),
    w("música", 3, 1),
    w("lágrima", 3, 1),
    w("espada", 3, 2),
    w("olvido", 3, 2),
    w("azul", 2, 2),
    w("árbol", 2, 1),
    w("eterno", 3, 2),
    w("ventana", 3, 2),
    w("palabra", 3, 2),
    w("dolor", 2, 2),
    w("pájaro", 3, 1),
    w("cántaro", 3, 1),
    w("limón", 2, 2),
    w("rumor", 2, 2),
    w("callada", 3, 2),
    w("dormido", 3, 2),
    w("sombra", 2, 1),
    w("lento", 2, 1),
    w("canta", 2, 1),
    w("mira", 2, 1),
    w("llora", 2, 1),
    w("busca", 2, 1),
    w("espera", 3, 2),
    w("abre", 2, 1),
    w("escucha", 3, 2),
    w("pasa", 2, 1),
    w("sábado", 3, 1),
    w("nunca", 2, 1),
    w("jamás", 2, 2),
    w("una", 2, 1),
    w("un", 1, 1),
    w("la", 1, 0),
    w("el", 1, 0),
    w("de", 1, 0),
    w("en", 1, 0),
    w("con", 1, 0),
    w("los", 1, 0),
    w("las", 1, 0),
    w("mi", 1, 0),
    w("tu", 1, 0),
    w("su", 1, 0),
    w("que", 1, 0),
    w("por", 1, 0),
    w("a", 1, 0),
    w("y", 1, 0),
    w("se", 1, 0),
    w("me", 1, 0),
    w("sin", 1, 0),
];

/// Metrical positions of a word sequence under the default reading:
/// synalepha at every vowel junction, compensation from the last word.
pub fn reference_scan(words: &[GenWord]) -> Option<(usize, Vec<usize>)> {
    let last = words.last()?;
    if last.stress == 0 {
        return None;
    }
    let mut pos = 0usize;
    let mut stresses = BTreeSet::new();
    for (i, word) in words.iter().enumerate() {
        let merged = i > 0 && words[i - 1].ends_vowel() && word.starts_vowel();
        let start = if merged { pos } else { pos + 1 };
        if word.stress > 0 {
            stresses.insert(start + word.stress - 1);
        }
        pos = start + word.nuclei - 1;
    }
    let measure = (pos as isize + last.compensation()) as usize;
    Some((measure, stresses.into_iter().collect()))
}

/// A random line of exactly `measure` syllables with its gold pattern.
pub fn generate_line<R: Rng>(rng: &mut R, measure: usize) -> (String, Vec<GenWord>, Vec<usize>) {
    loop {
        let mut words: Vec<GenWord> = Vec::new();
        loop {
            words.push(*GEN_LEXICON.choose(rng).unwrap());
            let Some((m, positions)) = reference_scan(&words) else {
                if words.len() > 12 {
                    break;
                }
                continue;
            };
            if m == measure {
                let text = words.iter().map(|w| w.text).collect::<Vec<_>>().join(" ");
                return (text, words, positions);
            }
            if m > measure {
                break;
            }
        }
    }
}
