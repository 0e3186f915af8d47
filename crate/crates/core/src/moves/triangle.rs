//! Three-chord moves: Reidemeister III and Δ.
//!
//! Both act on three strands, each a pair of adjacent endpoints, such that
//! every two strands share a chord. The move reverses the order inside each
//! strand and keeps all signs. Number the strands 0, 1, 2 along the word and
//! let `c_xy` be the chord shared by strands `x < y`. Put
//! `g_xy = ε(c_xy)` if strand `x` carries the over endpoint of `c_xy`, and
//! `-ε(c_xy)` otherwise. With
//!
//! * `a`: strand 0 meets `c_01` before `c_02`,
//! * `b`: strand 1 meets `c_01` before `c_12`,
//! * `c`: strand 2 meets `c_02` before `c_12`,
//!
//! the three crossings bound a triangle exactly when
//! `g_01 g_02 = (-1)^[b ≠ c]` and `g_01 g_12 = (-1)^[a ≠ c]`.
//! For R3 one strand is over at both of its crossings and one at neither;
//! for Δ each strand is over exactly once.

use std::fmt;
use std::str::FromStr;

use crate::gauss::{DetRng, Endpoint, GaussDiagram, Passage, Sign};

use super::{insert_at, DeltaDirection, MoveKind, MoveSite};

/// Order of the top (T), middle (M) and bottom (B) strands along the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum R3Variant {
    /// T M B
    I,
    /// T B M
    II,
    /// M T B
    III,
    /// M B T
    IV,
    /// B T M
    V,
    /// B M T
    VI,
}

impl R3Variant {
    pub const ALL: [R3Variant; 6] = [
        R3Variant::I,
        R3Variant::II,
        R3Variant::III,
        R3Variant::IV,
        R3Variant::V,
        R3Variant::VI,
    ];

    /// `over_counts[x]` is how many of strand `x`'s endpoints are over.
    fn from_over_counts(over_counts: [u8; 3]) -> Option<Self> {
        Some(match over_counts {
            [2, 1, 0] => R3Variant::I,
            [2, 0, 1] => R3Variant::II,
            [1, 2, 0] => R3Variant::III,
            [1, 0, 2] => R3Variant::IV,
            [0, 2, 1] => R3Variant::V,
            [0, 1, 2] => R3Variant::VI,
            _ => return None,
        })
    }

    fn over_counts(self) -> [u8; 3] {
        match self {
            R3Variant::I => [2, 1, 0],
            R3Variant::II => [2, 0, 1],
            R3Variant::III => [1, 2, 0],
            R3Variant::IV => [1, 0, 2],
            R3Variant::V => [0, 2, 1],
            R3Variant::VI => [0, 1, 2],
        }
    }

    pub fn numeral(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi"][self as usize]
    }
}

impl fmt::Display for R3Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

impl FromStr for R3Variant {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        R3Variant::ALL.into_iter().find(|v| v.numeral() == s).ok_or(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    R3,
    Delta,
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// The R3 or Δ site on the strands starting at `starts`, if they form one.
pub(super) fn site_at(d: &GaussDiagram, starts: [usize; 3], kind: MoveKind) -> Option<MoveSite> {
    let w = d.word();
    if !(starts[0] + 1 < starts[1] && starts[1] + 1 < starts[2] && starts[2] + 1 < w.len()) {
        return None;
    }
    let strand = |x: usize| [w[starts[x]], w[starts[x] + 1]];
    let shared = |x: usize, y: usize| -> Option<usize> {
        let (s, t) = (strand(x), strand(y));
        let mut common = s.iter().filter(|e| t.iter().any(|f| f.chord == e.chord));
        let first = common.next()?;
        common.next().is_none().then_some(first.chord)
    };
    let chords = [shared(0, 1)?, shared(0, 2)?, shared(1, 2)?];
    if chords[0] == chords[1] || chords[0] == chords[2] || chords[1] == chords[2] {
        return None;
    }
    let passage_on = |x: usize, chord: usize| -> Option<Passage> {
        strand(x).iter().find(|e| e.chord == chord).map(|e| e.passage)
    };
    let mut over_counts = [0u8; 3];
    let mut g = [0i64; 3];
    for (k, &(x, y)) in PAIRS.iter().enumerate() {
        let px = passage_on(x, chords[k])?;
        let py = passage_on(y, chords[k])?;
        if px == py {
            return None;
        }
        let holder = if px == Passage::Over { x } else { y };
        over_counts[holder] += 1;
        let eps = d.sign(chords[k]).to_i64();
        g[k] = if px == Passage::Over { eps } else { -eps };
    }
    let a = w[starts[0]].chord == chords[0];
    let b = w[starts[1]].chord == chords[0];
    let c = w[starts[2]].chord == chords[1];
    let pm = |same: bool| if same { 1 } else { -1 };
    if g[0] * g[1] != pm(b == c) || g[0] * g[2] != pm(a == c) {
        return None;
    }
    match kind {
        MoveKind::R3 => R3Variant::from_over_counts(over_counts).map(|variant| MoveSite::R3 {
            strands: starts,
            variant,
        }),
        MoveKind::Delta if over_counts == [1, 1, 1] => {
            let direction = if (a as u8 + b as u8 + c as u8).is_multiple_of(2) {
                DeltaDirection::Forward
            } else {
                DeltaDirection::Backward
            };
            Some(MoveSite::Delta {
                strands: starts,
                direction,
            })
        }
        _ => None,
    }
}

pub(super) fn enumerate(d: &GaussDiagram, kind: MoveKind) -> Vec<MoveSite> {
    let w = d.word();
    let len = w.len();
    let other_end = |chord: usize, here: usize| {
        let (l, r) = d.span(chord);
        if l == here {
            r
        } else {
            l
        }
    };
    let mut found = Vec::new();
    for p in 0..len.saturating_sub(1) {
        let (ea, eb) = (w[p], w[p + 1]);
        if ea.chord == eb.chord {
            continue;
        }
        let qa = other_end(ea.chord, p);
        let qb = other_end(eb.chord, p + 1);
        for sa in [qa.wrapping_sub(1), qa] {
            for sb in [qb.wrapping_sub(1), qb] {
                if sa == usize::MAX || sb == usize::MAX || sa < p + 2 || sb < p + 2 {
                    continue;
                }
                let mut starts = [p, sa.min(sb), sa.max(sb)];
                starts.sort_unstable();
                if let Some(site) = site_at(d, starts, kind) {
                    found.push(site);
                }
            }
        }
    }
    found.sort_by_key(|s| match s {
        MoveSite::R3 { strands, .. } | MoveSite::Delta { strands, .. } => *strands,
        _ => unreachable!(),
    });
    found.dedup();
    found
}

/// Insert three new chords forming a random R3 or Δ triangle at random
/// places of `d`. The result always has at least one site of that kind.
pub fn plant_triangle(d: &GaussDiagram, kind: TriangleKind, rng: &mut DetRng) -> GaussDiagram {
    let len = d.word().len();
    let mut gaps = [rng.below(len + 1), rng.below(len + 1), rng.below(len + 1)];
    gaps.sort_unstable();
    // holds_over[k]: the lower strand of pair k carries the over endpoint.
    let holds_over: [bool; 3] = match kind {
        TriangleKind::R3 => {
            let counts = R3Variant::ALL[rng.below(6)].over_counts();
            PAIRS.map(|(x, y)| counts[x] > counts[y])
        }
        TriangleKind::Delta => {
            let cyclic = rng.coin();
            [cyclic, !cyclic, cyclic]
        }
    };
    let (a, b, c) = (rng.coin(), rng.coin(), rng.coin());
    let g01 = rng.sign().to_i64();
    let pm = |same: bool| if same { 1 } else { -1 };
    let g = [g01, g01 * pm(b == c), g01 * pm(a == c)];
    let n = d.n();
    let mut signs = d.signs().to_vec();
    for k in 0..3 {
        let eps = if holds_over[k] { g[k] } else { -g[k] };
        signs.push(Sign::from_bool(eps > 0));
    }
    let on = |x: usize, k: usize| {
        let over = if PAIRS[k].0 == x { holds_over[k] } else { !holds_over[k] };
        Endpoint {
            chord: n + k,
            passage: if over { Passage::Over } else { Passage::Under },
        }
    };
    let ordered = |first: Endpoint, second: Endpoint, keep: bool| {
        if keep {
            vec![first, second]
        } else {
            vec![second, first]
        }
    };
    let strands = [
        ordered(on(0, 0), on(0, 1), a),
        ordered(on(1, 0), on(1, 2), b),
        ordered(on(2, 1), on(2, 2), c),
    ];
    let inserts: Vec<(usize, Vec<Endpoint>)> = gaps.into_iter().zip(strands).collect();
    GaussDiagram::from_parts(insert_at(d.word(), &inserts), &signs)
}
