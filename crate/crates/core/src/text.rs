//! Tokenization and the textual-adequacy heuristic for definitions.

use std::collections::HashSet;
use std::sync::OnceLock;

/// English stopword list, one word per line. Entries containing an
/// apostrophe can never match a token and are kept only so the list stays
/// verbatim.
pub const STOPWORDS_TXT: &str = include_str!("stopwords.txt");

/// Definitions of this many tokens or more count as complete.
pub const TARGET_DEFINITION_TOKENS: usize = 10;

pub fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| STOPWORDS_TXT.lines().filter(|l| !l.is_empty()).collect())
}

pub fn is_stopword(token: &str) -> bool {
    stopwords().contains(token)
}

/// Lowercased maximal runs of alphanumeric characters, in order.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Breakdown of [`adequacy`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Adequacy {
    pub completeness: f64,
    pub quality: f64,
    pub value: f64,
}

/// Mean of completeness (token count against [`TARGET_DEFINITION_TOKENS`],
/// capped at 1) and quality (share of non-stopword tokens).
pub fn adequacy_parts<S: AsRef<str>>(tokens: &[S]) -> Adequacy {
    if tokens.is_empty() {
        return Adequacy {
            completeness: 0.0,
            quality: 0.0,
            value: 0.0,
        };
    }
    let completeness = (tokens.len() as f64 / TARGET_DEFINITION_TOKENS as f64).min(1.0);
    let content = tokens.iter().filter(|t| !is_stopword(t.as_ref())).count();
    let quality = content as f64 / tokens.len() as f64;
    Adequacy {
        completeness,
        quality,
        value: (completeness + quality) / 2.0,
    }
}

pub fn adequacy<S: AsRef<str>>(tokens: &[S]) -> f64 {
    adequacy_parts(tokens).value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stopword_list_is_pinned() {
        assert_eq!(stopwords().len(), 179);
        for w in ["a", "that", "the", "of", "is"] {
            assert!(is_stopword(w), "{w}");
        }
        for w in ["plant", "organ", "bears", "seeds"] {
            assert!(!is_stopword(w), "{w}");
        }
    }

    #[test]
    fn tokenize_examples() {
        assert_eq!(tokenize("A plant organ that bears seeds").len(), 6);
        assert!(tokenize("").is_empty());
        assert_eq!(tokenize("x-ray (2)"), vec!["x", "ray", "2"]);
        assert_eq!(tokenize("Ärger über DNA-Bindung"), vec!["ärger", "über", "dna", "bindung"]);
    }

    #[test]
    fn adequacy_examples() {
        let parts = adequacy_parts(&["a", "plant", "organ", "that", "bears", "seeds"]);
        assert!((parts.completeness - 0.6).abs() < 1e-12);
        assert!((parts.quality - 4.0 / 6.0).abs() < 1e-12);
        assert!((parts.value - 0.6333).abs() <= 0.0005);

        let rich = tokenize("leaf blade petiole stipule margin apex vein lamina node stem bud");
        assert_eq!(adequacy(&rich), 1.0);
        assert_eq!(adequacy::<&str>(&[]), 0.0);
    }
}
