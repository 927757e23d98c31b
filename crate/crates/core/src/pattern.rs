//! Metrical patterns and their two textual encodings.
//!
//! Dotted: `2.6.10`, optionally followed by `|11` to state the measure.
//! Signs: `-+---+---+-`, one character per metric position, `+` stressed.

use std::fmt;

use serde::Serialize;

/// Stressed metric positions (1-based, strictly increasing) of a verse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MetricalPattern {
    pub positions: Vec<usize>,
    pub measure: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("empty pattern")]
    Empty,
    #[error("position {0:?} is not a positive integer")]
    BadPosition(String),
    #[error("positions are not strictly increasing")]
    Unordered,
    #[error("position {position} exceeds measure {measure}")]
    OutOfRange { position: usize, measure: usize },
    #[error("unexpected character {0:?} in signs pattern")]
    BadSign(char),
}

impl MetricalPattern {
    /// Builds a pattern, checking order and range.
    pub fn new(positions: Vec<usize>, measure: usize) -> Result<Self, PatternError> {
        if positions.first() == Some(&0) {
            return Err(PatternError::BadPosition("0".into()));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PatternError::Unordered);
        }
        if let Some(&last) = positions.last() {
            if last > measure {
                return Err(PatternError::OutOfRange {
                    position: last,
                    measure,
                });
            }
        }
        Ok(MetricalPattern { positions, measure })
    }

    /// Whether the pattern carries the obligatory penultimate stress.
    pub fn is_well_formed(&self) -> bool {
        self.measure >= 2 && self.positions.contains(&(self.measure - 1))
    }

    pub fn dotted(&self) -> String {
        dotted(&self.positions)
    }

    pub fn signs(&self) -> String {
        (1..=self.measure)
            .map(|p| {
                if self.positions.contains(&p) {
                    '+'
                } else {
                    '-'
                }
            })
            .collect()
    }

    /// Parses `2.6.10` or `2.6.10|11`. Without an explicit measure the
    /// measure is one past the last stress.
    pub fn parse_dotted(text: &str) -> Result<Self, PatternError> {
        let text = text.trim();
        let (body, measure) = match text.split_once('|') {
            Some((body, m)) => {
                let m = m
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| PatternError::BadPosition(m.trim().to_string()))?;
                (body, Some(m))
            }
            None => (text, None),
        };
        if body.trim().is_empty() {
            return Err(PatternError::Empty);
        }
        let positions = body
            .split(['.', ','])
            .map(|p| {
                let p = p.trim();
                p.parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| PatternError::BadPosition(p.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let measure = measure.unwrap_or_else(|| positions.last().map_or(0, |p| p + 1));
        MetricalPattern::new(positions, measure)
    }

    pub fn parse_signs(text: &str) -> Result<Self, PatternError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(PatternError::Empty);
        }
        let mut positions = Vec::new();
        for (i, c) in text.chars().enumerate() {
            match c {
                '+' => positions.push(i + 1),
                '-' => {}
                other => return Err(PatternError::BadSign(other)),
            }
        }
        MetricalPattern::new(positions, text.chars().count())
    }
}

impl fmt::Display for MetricalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.measure, self.dotted())
    }
}

pub fn dotted(positions: &[usize]) -> String {
    positions
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dotted_infers_measure() {
        let p = MetricalPattern::parse_dotted("2.6.10").unwrap();
        assert_eq!(p.positions, vec![2, 6, 10]);
        assert_eq!(p.measure, 11);
        let p = MetricalPattern::parse_dotted("2.6.10|11").unwrap();
        assert_eq!(p.measure, 11);
        let p = MetricalPattern::parse_dotted("1,6,10").unwrap();
        assert_eq!(p.positions, vec![1, 6, 10]);
    }

    #[test]
    fn signs() {
        let p = MetricalPattern::parse_signs("-+---+---+-").unwrap();
        assert_eq!(p.positions, vec![2, 6, 10]);
        assert_eq!(p.measure, 11);
        assert_eq!(p.signs(), "-+---+---+-");
        assert_eq!(p.dotted(), "2.6.10");
    }

    #[test]
    fn rejects_bad_patterns() {
        assert_eq!(
            MetricalPattern::parse_dotted("6.2.10"),
            Err(PatternError::Unordered)
        );
        assert!(MetricalPattern::parse_dotted("2.x.10").is_err());
        assert!(MetricalPattern::parse_dotted("0.4").is_err());
        assert!(MetricalPattern::parse_dotted("2.6.12|11").is_err());
        assert!(MetricalPattern::parse_signs("-+-*").is_err());
        assert!(MetricalPattern::parse_dotted("").is_err());
    }

    #[test]
    fn well_formedness() {
        assert!(MetricalPattern::new(vec![2, 6, 10], 11)
            .unwrap()
            .is_well_formed());
        assert!(!MetricalPattern::new(vec![1, 5, 9], 11)
            .unwrap()
            .is_well_formed());
    }
}
