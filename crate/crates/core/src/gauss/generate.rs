//! Random and exhaustive diagram generation.
//!
//! Randomness comes from [`DetRng`], a ChaCha8 stream seeded through
//! `rand_core`'s `seed_from_u64`. Bounded integers are drawn by rejection
//! sampling on 64-bit outputs, so a given seed produces the same values on
//! every platform. Random diagrams use sequential pairing: the leftmost free
//! slot is paired with a uniformly chosen free slot among the rest, which
//! yields a uniform perfect matching of the `2n` positions. Each chord then
//! draws which endpoint is Over and its sign, in that order.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use super::{Endpoint, GaussDiagram, Passage, Sign};

/// Largest chord count the exhaustive enumerator accepts by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("chord count {requested} exceeds the enumeration cap {cap}")]
pub struct EnumerationError {
    pub requested: usize,
    pub cap: usize,
}

/// Deterministic, platform-independent random source.
#[derive(Debug, Clone)]
pub struct DetRng(ChaCha8Rng);

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.0.next_u64();
            if v < zone {
                return (v % bound) as usize;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo) as usize + 1) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.0.next_u64() & 1 == 1
    }

    pub fn sign(&mut self) -> Sign {
        Sign::from_bool(self.coin())
    }

    /// Derive an independent stream, e.g. one per fuzz case.
    pub fn fork(&mut self) -> DetRng {
        DetRng::new(self.next_u64())
    }
}

/// A uniformly random diagram with `n` chords.
pub fn random_diagram(n: usize, seed: u64) -> GaussDiagram {
    random_diagram_with(n, &mut DetRng::new(seed))
}

pub fn random_diagram_with(n: usize, rng: &mut DetRng) -> GaussDiagram {
    let len = 2 * n;
    let mut partner = vec![usize::MAX; len];
    let mut free: Vec<usize> = (0..len).collect();
    while !free.is_empty() {
        let first = free.remove(0);
        let pick = rng.below(free.len());
        let second = free.remove(pick);
        partner[first] = second;
        partner[second] = first;
    }
    let mut word = vec![
        Endpoint {
            chord: 0,
            passage: Passage::Over
        };
        len
    ];
    let mut signs = Vec::with_capacity(n);
    for pos in 0..len {
        let other = partner[pos];
        if other < pos {
            continue;
        }
        let chord = signs.len();
        let over_first = rng.coin();
        signs.push(rng.sign());
        let (a, b) = if over_first {
            (Passage::Over, Passage::Under)
        } else {
            (Passage::Under, Passage::Over)
        };
        word[pos] = Endpoint { chord, passage: a };
        word[other] = Endpoint { chord, passage: b };
    }
    GaussDiagram::from_parts(word, &signs)
}

/// All perfect matchings of `0..2n` as partner arrays, leftmost free slot
/// paired first, partners in increasing order.
fn matchings(n: usize) -> Vec<Vec<usize>> {
    fn rec(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = partner.iter().position(|p| *p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                rec(partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; 2 * n], &mut out);
    out
}

/// Every diagram with exactly `n` chords, each once, in a fixed order:
/// matchings outermost, then the over/under choice per chord, then signs.
pub struct DiagramEnumerator {
    n: usize,
    matchings: Vec<Vec<usize>>,
    matching: usize,
    orientation: u64,
    signs: u64,
}

impl Iterator for DiagramEnumerator {
    type Item = GaussDiagram;

    fn next(&mut self) -> Option<GaussDiagram> {
        let partner = self.matchings.get(self.matching)?;
        let mut word = Vec::with_capacity(2 * self.n);
        let mut chord_of = vec![usize::MAX; 2 * self.n];
        let mut signs = Vec::with_capacity(self.n);
        for pos in 0..2 * self.n {
            let other = partner[pos];
            let chord = if other > pos {
                let c = signs.len();
                chord_of[pos] = c;
                signs.push(Sign::from_bool(self.signs >> c & 1 == 0));
                c
            } else {
                chord_of[other]
            };
            let over_first = self.orientation >> chord & 1 == 0;
            let passage = if (other > pos) == over_first {
                Passage::Over
            } else {
                Passage::Under
            };
            word.push(Endpoint { chord, passage });
        }
        let diagram = GaussDiagram::from_parts(word, &signs);

        let limit = 1u64 << self.n;
        self.signs += 1;
        if self.signs == limit {
            self.signs = 0;
            self.orientation += 1;
            if self.orientation == limit {
                self.orientation = 0;
                self.matching += 1;
            }
        }
        Some(diagram)
    }
}

/// Enumerate all diagrams with `n` chords, refusing `n` above
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_diagrams(n: usize) -> Result<DiagramEnumerator, EnumerationError> {
    enumerate_diagrams_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_diagrams_capped(
    n: usize,
    cap: usize,
) -> Result<DiagramEnumerator, EnumerationError> {
    if n > cap || n > 16 {
        return Err(EnumerationError { requested: n, cap });
    }
    Ok(DiagramEnumerator {
        n,
        matchings: matchings(n),
        matching: 0,
        orientation: 0,
        signs: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn random_diagram_basics() {
        assert_eq!(random_diagram(0, 99), GaussDiagram::empty());
        assert_eq!(random_diagram(5, 42), random_diagram(5, 42));
        for seed in 1..=1000 {
            let d = random_diagram(3, seed);
            assert_eq!(d.n(), 3);
            let reparsed = super::super::parse_diagram(&d.to_string()).unwrap();
            assert_eq!(reparsed, d);
        }
    }

    #[test]
    fn seed_stream_is_pinned() {
        // Guards the documented generator: changing it breaks replay of old failures.
        assert_eq!(random_diagram(3, 1).to_string(), PINNED_N3_SEED1);
    }

    const PINNED_N3_SEED1: &str = "U1+ U2+ O1+ U3+ O3+ O2+";

    #[test]
    fn enumeration_counts() {
        let count = |n| enumerate_diagrams(n).unwrap().count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 4);
        assert_eq!(count(2), 48);
        assert_eq!(count(3), 15 * 64);
        assert!(enumerate_diagrams(5).is_err());
        assert_eq!(enumerate_diagrams_capped(5, 5).unwrap().take(3).count(), 3);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        for n in 0..=3 {
            let all: Vec<_> = enumerate_diagrams(n).unwrap().collect();
            let set: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|d| d.n() == n));
        }
    }

    #[test]
    fn enumeration_covers_random_samples() {
        for n in 0..=3 {
            let all: HashSet<_> = enumerate_diagrams(n).unwrap().collect();
            for seed in 0..300 {
                assert!(all.contains(&random_diagram(n, seed)));
            }
        }
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut rng = DetRng::new(7);
        for bound in 1..50 {
            for _ in 0..20 {
                assert!(rng.below(bound) < bound);
            }
        }
        let mut hits = [0usize; 3];
        for _ in 0..3000 {
            hits[rng.below(3)] += 1;
        }
        assert!(hits.iter().all(|h| *h > 800));
    }
}
