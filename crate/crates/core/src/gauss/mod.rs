//! Gauss diagrams of long virtual knots.
//!
//! A diagram is a word of `2n` chord endpoints along a line. Each chord has
//! one over-endpoint and one under-endpoint and a sign. Chords are oriented
//! from the over-endpoint to the under-endpoint, so the under-endpoint is the
//! terminal (head) endpoint carrying the chord sign `ε` and the
//! over-endpoint is the initial (tail) endpoint carrying `-ε`. The opposite
//! orientation is kept available as [`ArrowConvention::UnderToOver`] for
//! calibration only.
//!
//! Diagrams are always stored in canonical form: chord indices `0..n` are
//! assigned by first appearance along the word. Text chord ids are these
//! indices plus one.

mod generate;
pub(crate) mod parse;

pub use generate::{
    enumerate_diagrams, enumerate_diagrams_capped, random_diagram, random_diagram_with, DetRng,
    DiagramEnumerator, EnumerationError, DEFAULT_ENUMERATION_CAP,
};
pub use parse::{lex, parse_diagram, parse_lines, ParseError, RawToken, EMPTY_DIAGRAM_LINE};

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Passage {
    Over,
    Under,
}

impl Passage {
    pub fn flip(self) -> Self {
        match self {
            Passage::Over => Passage::Under,
            Passage::Under => Passage::Over,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Passage::Over => 'O',
            Passage::Under => 'U',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_bool(positive: bool) -> Self {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool(self == rhs)
    }
}

/// One chord endpoint in the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub chord: usize,
    pub passage: Passage,
}

/// Which endpoint of a chord is its head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ArrowConvention {
    /// Tail at the over-endpoint, head at the under-endpoint.
    #[default]
    OverToUnder,
    /// Tail at the under-endpoint, head at the over-endpoint.
    UnderToOver,
}

impl ArrowConvention {
    pub fn head(self) -> Passage {
        match self {
            ArrowConvention::OverToUnder => Passage::Under,
            ArrowConvention::UnderToOver => Passage::Over,
        }
    }

    pub fn tail(self) -> Passage {
        self.head().flip()
    }

    pub fn both() -> [ArrowConvention; 2] {
        [ArrowConvention::OverToUnder, ArrowConvention::UnderToOver]
    }
}

/// Type 0 when the over-endpoint comes first along the line, type 1 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChordType {
    Zero,
    One,
}

/// Equivalence a checking context works up to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagramClass {
    Virtual,
    Welded,
}

/// Derived per-chord data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordMeta {
    pub chord: usize,
    pub chord_type: ChordType,
    pub left: usize,
    pub right: usize,
    pub left_sign: Sign,
    pub right_sign: Sign,
    pub head: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    word: Vec<Endpoint>,
    signs: Vec<Sign>,
    /// `(over position, under position)` per chord.
    positions: Vec<(usize, usize)>,
}

impl GaussDiagram {
    pub fn empty() -> Self {
        GaussDiagram {
            word: Vec::new(),
            signs: Vec::new(),
            positions: Vec::new(),
        }
    }

    /// Build from a word whose chord indices are `0..signs.len()` in any
    /// order, renumbering by first appearance. Callers guarantee each index
    /// occurs once as Over and once as Under.
    pub(crate) fn from_parts(word: Vec<Endpoint>, signs: &[Sign]) -> Self {
        let mut map = vec![usize::MAX; signs.len()];
        let mut new_signs = Vec::with_capacity(signs.len());
        let word: Vec<Endpoint> = word
            .into_iter()
            .map(|e| {
                if map[e.chord] == usize::MAX {
                    map[e.chord] = new_signs.len();
                    new_signs.push(signs[e.chord]);
                }
                Endpoint {
                    chord: map[e.chord],
                    passage: e.passage,
                }
            })
            .collect();
        let mut positions = vec![(usize::MAX, usize::MAX); new_signs.len()];
        for (pos, e) in word.iter().enumerate() {
            match e.passage {
                Passage::Over => positions[e.chord].0 = pos,
                Passage::Under => positions[e.chord].1 = pos,
            }
        }
        debug_assert!(positions
            .iter()
            .all(|&(o, u)| o != usize::MAX && u != usize::MAX));
        GaussDiagram {
            word,
            signs: new_signs,
            positions,
        }
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn word(&self) -> &[Endpoint] {
        &self.word
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, chord: usize) -> Sign {
        self.signs[chord]
    }

    pub fn over_position(&self, chord: usize) -> usize {
        self.positions[chord].0
    }

    pub fn under_position(&self, chord: usize) -> usize {
        self.positions[chord].1
    }

    /// `(left, right)` positions of a chord.
    pub fn span(&self, chord: usize) -> (usize, usize) {
        let (o, u) = self.positions[chord];
        (o.min(u), o.max(u))
    }

    pub fn chord_type(&self, chord: usize) -> ChordType {
        let (o, u) = self.positions[chord];
        if o < u {
            ChordType::Zero
        } else {
            ChordType::One
        }
    }

    pub fn chord_meta(&self, chord: usize, convention: ArrowConvention) -> ChordMeta {
        let (left, right) = self.span(chord);
        let eps = self.signs[chord];
        let head_passage = convention.head();
        let head = match head_passage {
            Passage::Over => self.positions[chord].0,
            Passage::Under => self.positions[chord].1,
        };
        let sign_at = |pos: usize| if pos == head { eps } else { -eps };
        ChordMeta {
            chord,
            chord_type: self.chord_type(chord),
            left,
            right,
            left_sign: sign_at(left),
            right_sign: sign_at(right),
            head,
        }
    }

    pub fn chord_metas(&self, convention: ArrowConvention) -> Vec<ChordMeta> {
        (0..self.n()).map(|c| self.chord_meta(c, convention)).collect()
    }

    /// `-D`: the word read backwards.
    pub fn reverse(&self) -> Self {
        let word: Vec<Endpoint> = self.word.iter().rev().copied().collect();
        Self::from_parts(word, &self.signs)
    }

    /// `D*`: every sign negated.
    pub fn mirror(&self) -> Self {
        let signs: Vec<Sign> = self.signs.iter().map(|s| -*s).collect();
        Self::from_parts(self.word.clone(), &signs)
    }

    /// `D#`: every sign negated and every chord's passages exchanged.
    pub fn switch(&self) -> Self {
        let all: Vec<usize> = (0..self.n()).collect();
        self.crossing_change(&all)
    }

    /// Negate the sign and exchange the passages of the listed chords.
    pub fn crossing_change(&self, chords: &[usize]) -> Self {
        let mut flip = vec![false; self.n()];
        for &c in chords {
            flip[c] = true;
        }
        let word = self
            .word
            .iter()
            .map(|e| Endpoint {
                chord: e.chord,
                passage: if flip[e.chord] { e.passage.flip() } else { e.passage },
            })
            .collect();
        let signs: Vec<Sign> = self
            .signs
            .iter()
            .enumerate()
            .map(|(c, s)| if flip[c] { -*s } else { *s })
            .collect();
        Self::from_parts(word, &signs)
    }

    /// Remove the listed chords.
    pub fn delete_chords(&self, chords: &[usize]) -> Self {
        let mut keep = vec![true; self.n()];
        for &c in chords {
            keep[c] = false;
        }
        let word = self.word.iter().filter(|e| keep[e.chord]).copied().collect();
        Self::from_parts(word, &self.signs)
    }

    /// `D ∘ D'`: `other` attached after `self`.
    pub fn concat(&self, other: &GaussDiagram) -> Self {
        let shift = self.n();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|e| Endpoint {
            chord: e.chord + shift,
            passage: e.passage,
        }));
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        Self::from_parts(word, &signs)
    }

    /// Concatenation of many diagrams in order.
    pub fn concat_all<'a, I: IntoIterator<Item = &'a GaussDiagram>>(parts: I) -> Self {
        parts
            .into_iter()
            .fold(GaussDiagram::empty(), |acc, d| acc.concat(d))
    }

    /// Canonical Gauss code.
    pub fn to_code(&self) -> String {
        self.to_string()
    }

    /// The code as one line of a diagram file: like [`to_code`](Self::to_code)
    /// except that the empty diagram is `-`.
    pub fn to_line(&self) -> String {
        if self.is_empty() {
            EMPTY_DIAGRAM_LINE.to_string()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(
                f,
                "{}{}{}",
                e.passage.letter(),
                e.chord + 1,
                self.signs[e.chord].symbol()
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussDiagram({:?})", self.to_string())
    }
}

impl FromStr for GaussDiagram {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_diagram(s)
    }
}

impl Serialize for GaussDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
