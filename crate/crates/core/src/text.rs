//! Token-level text handling: normalization and verse tokenization.

use unicode_normalization::UnicodeNormalization;

/// Lowercases, strips leading and trailing punctuation and composes the
/// word to NFC. Internal apostrophes, accents, diaeresis marks and `ñ`
/// survive. Punctuation-only tokens normalize to the empty string.
pub fn normalize_word(raw: &str) -> String {
    let composed: String = raw.nfc().collect();
    let (_, core, _) = split_affixes(&composed);
    core.chars().map(lower_char).collect()
}

/// Lowercases one character without changing the character count, so that
/// char offsets in a normalized word line up with the original token.
pub(crate) fn lower_char(c: char) -> char {
    c.to_lowercase().next().unwrap_or(c)
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Splits a token into (leading punctuation, core, trailing punctuation).
pub(crate) fn split_affixes(token: &str) -> (&str, &str, &str) {
    let start = token
        .char_indices()
        .find(|(_, c)| is_word_char(*c))
        .map(|(i, _)| i);
    let Some(start) = start else {
        return (token, "", "");
    };
    let end = token
        .char_indices()
        .rev()
        .find(|(_, c)| is_word_char(*c))
        .map(|(i, c)| i + c.len_utf8())
        .unwrap_or(token.len());
    (&token[..start], &token[start..end], &token[end..])
}

/// One whitespace-delimited piece of a verse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub prefix: String,
    /// Original-case core of the token, NFC composed.
    pub core: String,
    pub suffix: String,
    /// Normalized form; empty for punctuation-only tokens.
    pub normalized: String,
}

impl Token {
    pub fn is_word(&self) -> bool {
        !self.normalized.is_empty()
    }

    /// Whether this token is a hemistich marker typed by the user.
    pub fn is_pause_marker(&self) -> bool {
        !self.is_word() && self.prefix.trim() == "/"
    }

    /// True when the token carries punctuation on either side.
    pub fn has_punctuation(&self) -> bool {
        !self.prefix.is_empty() || !self.suffix.is_empty() || !self.is_word()
    }
}

/// Splits a verse on whitespace and on dashes and slashes, which often
/// appear glued to words.
pub fn tokenize(verse: &str) -> Vec<Token> {
    let composed: String = verse.nfc().collect();
    let mut pieces = Vec::new();
    for chunk in composed.split_whitespace() {
        let mut current = String::new();
        for c in chunk.chars() {
            if matches!(c, '—' | '–' | '/') {
                if !current.is_empty() {
                    pieces.push(std::mem::take(&mut current));
                }
                pieces.push(c.to_string());
            } else {
                current.push(c);
            }
        }
        if !current.is_empty() {
            pieces.push(current);
        }
    }
    pieces
        .into_iter()
        .map(|piece| {
            let (prefix, core, suffix) = split_affixes(&piece);
            Token {
                prefix: prefix.to_string(),
                core: core.to_string(),
                suffix: suffix.to_string(),
                normalized: core.chars().map(lower_char).collect(),
            }
        })
        .collect()
}
