//! Small arrow patterns and the pairing `⟨P, D⟩`.
//!
//! `⟨P, D⟩` sums, over all ways of choosing chords of `D` whose induced
//! subdiagram is `P` (same endpoint order, same passages, same signs where
//! `P` fixes one), the product of the signs of the chosen chords.

use std::sync::OnceLock;

use thiserror::Error;

use crate::gauss::{lex, parse::assemble, Endpoint, GaussDiagram, ParseError, Sign};
use crate::scalar::Coefficient;

/// Patterns above this size are rejected.
pub const MAX_PATTERN_CHORDS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("pattern has {0} chords, at most {MAX_PATTERN_CHORDS} allowed")]
    TooLarge(usize),
    #[error("pattern file contains no diagram line")]
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternDiagram {
    word: Vec<Endpoint>,
    signs: Vec<Option<Sign>>,
}

impl PatternDiagram {
    /// Parse one pattern line; `*` as a sign leaves that chord's sign free.
    pub fn parse(text: &str) -> Result<Self, PatternError> {
        let tokens = lex(text, true)?;
        let (word, signs) = assemble(&tokens)?;
        if signs.len() > MAX_PATTERN_CHORDS {
            return Err(PatternError::TooLarge(signs.len()));
        }
        Ok(PatternDiagram { word, signs })
    }

    /// Parse a pattern file: `#` comments, then one pattern line.
    pub fn parse_file(text: &str) -> Result<Self, PatternError> {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or(PatternError::Missing)?;
        Self::parse(line)
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn word(&self) -> &[Endpoint] {
        &self.word
    }

    pub fn signs(&self) -> &[Option<Sign>] {
        &self.signs
    }

    /// The diagram obtained by giving every free chord the sign `+`.
    pub fn to_diagram(&self) -> GaussDiagram {
        let signs: Vec<Sign> = self.signs.iter().map(|s| s.unwrap_or(Sign::Plus)).collect();
        GaussDiagram::from_parts(self.word.clone(), &signs)
    }
}

/// `⟨P, D⟩`.
pub fn pairing<C: Coefficient>(pattern: &PatternDiagram, d: &GaussDiagram) -> C {
    C::from_i64_exact(pairing_i64(pattern, d))
}

pub(crate) fn pairing_i64(pattern: &PatternDiagram, d: &GaussDiagram) -> i64 {
    let m = pattern.n();
    if m == 0 {
        return 1;
    }
    if m > d.n() {
        return 0;
    }
    // Chord indices of both diagrams follow first appearance, so an
    // order-preserving embedding maps pattern chords to increasing indices.
    let mut image = [0usize; MAX_PATTERN_CHORDS];
    let mut total = 0i64;
    visit(pattern, d, &mut image, 0, 0, &mut total);
    total
}

fn visit(
    pattern: &PatternDiagram,
    d: &GaussDiagram,
    image: &mut [usize; MAX_PATTERN_CHORDS],
    depth: usize,
    start: usize,
    total: &mut i64,
) {
    let m = pattern.n();
    if depth == m {
        if embeds(pattern, d, &image[..m]) {
            *total += image[..m]
                .iter()
                .map(|&c| d.sign(c).to_i64())
                .product::<i64>();
        }
        return;
    }
    for c in start..=d.n() - (m - depth) {
        if let Some(s) = pattern.signs[depth] {
            if d.sign(c) != s {
                continue;
            }
        }
        image[depth] = c;
        visit(pattern, d, image, depth + 1, c + 1, total);
    }
}

fn embeds(pattern: &PatternDiagram, d: &GaussDiagram, image: &[usize]) -> bool {
    let mut last = None;
    for e in &pattern.word {
        let c = image[e.chord];
        let pos = match e.passage {
            crate::gauss::Passage::Over => d.over_position(c),
            crate::gauss::Passage::Under => d.under_position(c),
        };
        if last.is_some_and(|l| pos <= l) {
            return false;
        }
        last = Some(pos);
    }
    true
}

const PATTERN_FILES: [&str; 10] = [
    include_str!("../../patterns/d01.gauss"),
    include_str!("../../patterns/d02.gauss"),
    include_str!("../../patterns/d03.gauss"),
    include_str!("../../patterns/d04.gauss"),
    include_str!("../../patterns/d05.gauss"),
    include_str!("../../patterns/d06.gauss"),
    include_str!("../../patterns/d07.gauss"),
    include_str!("../../patterns/d08.gauss"),
    include_str!("../../patterns/d09.gauss"),
    include_str!("../../patterns/d10.gauss"),
];

/// The ten patterns `D_1..D_10` from `patterns/`, index 0 is `D_1`.
pub fn standard_patterns() -> &'static [PatternDiagram; 10] {
    static PATTERNS: OnceLock<[PatternDiagram; 10]> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        PATTERN_FILES.map(|text| PatternDiagram::parse_file(text).expect("bundled pattern file"))
    })
}

/// `D_s` for `s` in `1..=10`.
pub fn standard_pattern(s: usize) -> &'static PatternDiagram {
    assert!((1..=10).contains(&s), "pattern index {s} out of range");
    &standard_patterns()[s - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> GaussDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn bundled_patterns_parse() {
        let all = standard_patterns();
        for (s, p) in all.iter().enumerate() {
            assert_eq!(p.n(), if s < 6 { 3 } else { 2 }, "D{}", s + 1);
        }
        assert!(all[..6].iter().all(|p| p.signs().iter().all(Option::is_none)));
        assert!(all[6..].iter().all(|p| p.signs().iter().all(Option::is_some)));
    }

    #[test]
    fn single_chord_pattern_is_a_signed_count() {
        let p = PatternDiagram::parse("O1* U1*").unwrap();
        let g = d("O1+ U2- U1+ O3- O2- U3-");
        // Type-0 chords: 1 (+) and 3 (-).
        assert_eq!(pairing::<i64>(&p, &g), 0);
        let g = d("O1+ U1+ O2+ U2+ U3- O3-");
        assert_eq!(pairing::<i64>(&p, &g), 2);
        let p = PatternDiagram::parse("O1- U1-").unwrap();
        assert_eq!(pairing::<i64>(&p, &d("O1- U1- O2- U2-")), -2);
    }

    #[test]
    fn nonempty_pattern_on_empty_diagram() {
        for p in standard_patterns() {
            assert_eq!(pairing::<i64>(p, &GaussDiagram::empty()), 0);
        }
    }

    #[test]
    fn pattern_on_its_own_diagram() {
        let d7 = standard_pattern(7);
        let k7 = d7.to_diagram();
        assert_eq!(k7.to_string(), "O1- U2+ U1- O2+");
        assert_eq!(pairing::<i64>(d7, &k7), -1);
        assert_eq!(pairing::<i64>(standard_pattern(8), &k7), 0);
        let d1 = standard_pattern(1).to_diagram();
        assert_eq!(pairing::<i64>(standard_pattern(1), &d1), 1);
    }

    #[test]
    fn pattern_errors() {
        assert!(matches!(
            PatternDiagram::parse("O1* U1* O2* U2* O3* U3* O4* U4*"),
            Err(PatternError::TooLarge(4))
        ));
        assert!(matches!(PatternDiagram::parse_file("# only\n"), Err(PatternError::Missing)));
        assert!(matches!(PatternDiagram::parse("O1* U1+"), Err(PatternError::Parse(_))));
    }
}
