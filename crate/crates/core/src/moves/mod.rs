//! Local moves on Gauss diagrams.
//!
//! Positions in a [`MoveSite`] index the word of the diagram the site was
//! found on. Gaps index the `2n + 1` places where new endpoints can go:
//! gap `g` sits just before word position `g`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gauss::{DetRng, Endpoint, GaussDiagram, Passage, Sign};

mod triangle;
mod walk;

pub use triangle::{plant_triangle, R3Variant, TriangleKind};
pub use walk::{random_walk, replay, Coverage, ReplayError, Transcript, TranscriptStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
    Welded,
    Delta,
    Virtualize,
    CrossingChange,
}

impl MoveKind {
    pub const ALL: [MoveKind; 9] = [
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
        MoveKind::Welded,
        MoveKind::Delta,
        MoveKind::Virtualize,
        MoveKind::CrossingChange,
    ];

    /// R1, R2 and R3 in both directions.
    pub const REIDEMEISTER: [MoveKind; 5] = [
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Insert => "R1Insert",
            MoveKind::R1Delete => "R1Delete",
            MoveKind::R2Insert => "R2Insert",
            MoveKind::R2Delete => "R2Delete",
            MoveKind::R3 => "R3",
            MoveKind::Welded => "Welded",
            MoveKind::Delta => "Delta",
            MoveKind::Virtualize => "Virtualize",
            MoveKind::CrossingChange => "CrossingChange",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown move kind `{0}`")]
pub struct UnknownMoveKind(pub String);

impl FromStr for MoveKind {
    type Err = UnknownMoveKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownMoveKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaDirection {
    Forward,
    Backward,
}

impl DeltaDirection {
    pub fn inverse(self) -> Self {
        match self {
            DeltaDirection::Forward => DeltaDirection::Backward,
            DeltaDirection::Backward => DeltaDirection::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSite {
    /// A new isolated chord at `gap`.
    R1Insert { gap: usize, over_first: bool, sign: Sign },
    /// The chord whose endpoints sit at `pos` and `pos + 1`.
    R1Delete { pos: usize },
    /// Two new chords `a` (sign `sign`) and `b` (sign `-sign`). One adjacent
    /// pair of endpoints goes in `first_gap`, the other in `second_gap`;
    /// `overs_first` puts the over pair first. The first pair reads `a b`,
    /// the second `a b` when `parallel` and `b a` otherwise.
    R2Insert {
        first_gap: usize,
        second_gap: usize,
        overs_first: bool,
        parallel: bool,
        sign: Sign,
    },
    /// Two chords of opposite signs with over endpoints at `over_pos`,
    /// `over_pos + 1` and under endpoints at `under_pos`, `under_pos + 1`.
    R2Delete { over_pos: usize, under_pos: usize },
    /// Three strands starting at `strands`, each two adjacent endpoints.
    R3 { strands: [usize; 3], variant: R3Variant },
    /// Two adjacent initial endpoints at `pos`, `pos + 1`.
    Welded { pos: usize },
    Delta { strands: [usize; 3], direction: DeltaDirection },
    Virtualize { chord: usize },
    CrossingChange { chord: usize },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Insert { .. } => MoveKind::R1Insert,
            MoveSite::R1Delete { .. } => MoveKind::R1Delete,
            MoveSite::R2Insert { .. } => MoveKind::R2Insert,
            MoveSite::R2Delete { .. } => MoveKind::R2Delete,
            MoveSite::R3 { .. } => MoveKind::R3,
            MoveSite::Welded { .. } => MoveKind::Welded,
            MoveSite::Delta { .. } => MoveKind::Delta,
            MoveSite::Virtualize { .. } => MoveKind::Virtualize,
            MoveSite::CrossingChange { .. } => MoveKind::CrossingChange,
        }
    }

    fn params(&self) -> String {
        let b = |v: bool| if v { "1" } else { "0" };
        match *self {
            MoveSite::R1Insert { gap, over_first, sign } => {
                format!("gap={gap},over_first={},sign={}", b(over_first), sign.symbol())
            }
            MoveSite::R1Delete { pos } | MoveSite::Welded { pos } => format!("pos={pos}"),
            MoveSite::R2Insert {
                first_gap,
                second_gap,
                overs_first,
                parallel,
                sign,
            } => format!(
                "gaps={first_gap}/{second_gap},overs_first={},parallel={},sign={}",
                b(overs_first),
                b(parallel),
                sign.symbol()
            ),
            MoveSite::R2Delete { over_pos, under_pos } => {
                format!("over={over_pos},under={under_pos}")
            }
            MoveSite::R3 { strands: [p, q, r], variant } => {
                format!("strands={p}/{q}/{r},variant={variant}")
            }
            MoveSite::Delta { strands: [p, q, r], direction } => {
                let dir = match direction {
                    DeltaDirection::Forward => "forward",
                    DeltaDirection::Backward => "backward",
                };
                format!("strands={p}/{q}/{r},direction={dir}")
            }
            MoveSite::Virtualize { chord } | MoveSite::CrossingChange { chord } => {
                format!("chord={}", chord + 1)
            }
        }
    }
}

/// `kind<TAB>params`, e.g. `R1Insert\tgap=0,over_first=1,sign=+`.
/// Chords are printed 1-based like in Gauss codes.
impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.kind(), self.params())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad move site `{text}`: {message}")]
pub struct SiteParseError {
    pub text: String,
    pub message: String,
}

impl FromStr for MoveSite {
    type Err = SiteParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |message: &str| SiteParseError {
            text: s.to_string(),
            message: message.to_string(),
        };
        let (kind, params) = s
            .split_once(['\t', ' '])
            .ok_or_else(|| fail("expected a kind and parameters"))?;
        let kind: MoveKind = kind.parse().map_err(|e: UnknownMoveKind| fail(&e.to_string()))?;
        let mut fields = std::collections::HashMap::new();
        for item in params.trim().split(',') {
            let (k, v) = item.split_once('=').ok_or_else(|| fail("expected key=value"))?;
            fields.insert(k.trim(), v.trim());
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| fail(&format!("missing `{k}`")));
        let num = |k: &str| -> Result<usize, SiteParseError> {
            get(k)?.parse().map_err(|_| fail(&format!("`{k}` is not a number")))
        };
        let flag = |k: &str| -> Result<bool, SiteParseError> {
            match get(k)? {
                "1" => Ok(true),
                "0" => Ok(false),
                _ => Err(fail(&format!("`{k}` must be 0 or 1"))),
            }
        };
        let sign = || -> Result<Sign, SiteParseError> {
            match get("sign")? {
                "+" => Ok(Sign::Plus),
                "-" => Ok(Sign::Minus),
                _ => Err(fail("`sign` must be + or -")),
            }
        };
        let list = |k: &str| -> Result<Vec<usize>, SiteParseError> {
            get(k)?
                .split('/')
                .map(|x| x.parse().map_err(|_| fail(&format!("`{k}` is not a list of numbers"))))
                .collect()
        };
        let triple = |k: &str| -> Result<[usize; 3], SiteParseError> {
            list(k)?.try_into().map_err(|_| fail(&format!("`{k}` needs three entries")))
        };
        let chord = || -> Result<usize, SiteParseError> {
            num("chord")?.checked_sub(1).ok_or_else(|| fail("chords are numbered from 1"))
        };
        Ok(match kind {
            MoveKind::R1Insert => MoveSite::R1Insert {
                gap: num("gap")?,
                over_first: flag("over_first")?,
                sign: sign()?,
            },
            MoveKind::R1Delete => MoveSite::R1Delete { pos: num("pos")? },
            MoveKind::R2Insert => {
                let gaps = list("gaps")?;
                let [first_gap, second_gap] = gaps[..] else {
                    return Err(fail("`gaps` needs two entries"));
                };
                MoveSite::R2Insert {
                    first_gap,
                    second_gap,
                    overs_first: flag("overs_first")?,
                    parallel: flag("parallel")?,
                    sign: sign()?,
                }
            }
            MoveKind::R2Delete => MoveSite::R2Delete {
                over_pos: num("over")?,
                under_pos: num("under")?,
            },
            MoveKind::R3 => MoveSite::R3 {
                strands: triple("strands")?,
                variant: get("variant")?.parse().map_err(|_| fail("bad R3 variant"))?,
            },
            MoveKind::Welded => MoveSite::Welded { pos: num("pos")? },
            MoveKind::Delta => MoveSite::Delta {
                strands: triple("strands")?,
                direction: match get("direction")? {
                    "forward" => DeltaDirection::Forward,
                    "backward" => DeltaDirection::Backward,
                    _ => return Err(fail("`direction` must be forward or backward")),
                },
            },
            MoveKind::Virtualize => MoveSite::Virtualize { chord: chord()? },
            MoveKind::CrossingChange => MoveSite::CrossingChange { chord: chord()? },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{site}: parameters out of range for a diagram with {n} chords")]
    OutOfRange { site: String, n: usize },
    #[error("{site}: the required pattern is not present (stale site)")]
    StaleSite { site: String },
}

fn out_of_range(site: &MoveSite, d: &GaussDiagram) -> MoveError {
    MoveError::OutOfRange {
        site: site.to_string(),
        n: d.n(),
    }
}

fn stale(site: &MoveSite) -> MoveError {
    MoveError::StaleSite {
        site: site.to_string(),
    }
}

fn gap_pairs(len: usize) -> usize {
    (len + 1) * (len + 2) / 2
}

/// Number of sites of `kind` on `d`, computed without listing them.
pub fn count_sites(d: &GaussDiagram, kind: MoveKind) -> usize {
    let len = d.word().len();
    match kind {
        MoveKind::R1Insert => (len + 1) * 4,
        MoveKind::R2Insert => gap_pairs(len) * 8,
        MoveKind::Virtualize | MoveKind::CrossingChange => d.n(),
        _ => enumerate_sites(d, kind).len(),
    }
}

/// All sites of `kind` on `d`, in a fixed order.
pub fn enumerate_sites(d: &GaussDiagram, kind: MoveKind) -> Vec<MoveSite> {
    let word = d.word();
    let len = word.len();
    let adjacent = || (0..len.saturating_sub(1)).map(|p| (p, word[p], word[p + 1]));
    match kind {
        MoveKind::R1Insert => (0..count_sites(d, kind)).map(decode_r1).collect(),
        MoveKind::R2Insert => (0..count_sites(d, kind)).map(|i| decode_r2(len, i)).collect(),
        MoveKind::R1Delete => adjacent()
            .filter(|(_, x, y)| x.chord == y.chord)
            .map(|(pos, _, _)| MoveSite::R1Delete { pos })
            .collect(),
        MoveKind::R2Delete => adjacent()
            .filter_map(|(p, x, y)| {
                let site = MoveSite::R2Delete {
                    over_pos: p,
                    under_pos: d.under_position(x.chord).min(d.under_position(y.chord)),
                };
                r2_delete_chords(d, &site).ok().map(|_| site)
            })
            .collect(),
        MoveKind::Welded => adjacent()
            .filter(|(_, x, y)| x.passage == Passage::Over && y.passage == Passage::Over)
            .map(|(pos, _, _)| MoveSite::Welded { pos })
            .collect(),
        MoveKind::R3 | MoveKind::Delta => triangle::enumerate(d, kind),
        MoveKind::Virtualize => (0..d.n()).map(|chord| MoveSite::Virtualize { chord }).collect(),
        MoveKind::CrossingChange => (0..d.n())
            .map(|chord| MoveSite::CrossingChange { chord })
            .collect(),
    }
}

fn decode_r1(i: usize) -> MoveSite {
    MoveSite::R1Insert {
        gap: i / 4,
        over_first: i & 1 == 0,
        sign: Sign::from_bool(i & 2 == 0),
    }
}

fn decode_r2(len: usize, i: usize) -> MoveSite {
    let (mut k, bits) = (i / 8, i % 8);
    let mut first_gap = 0;
    while k > len - first_gap {
        k -= len - first_gap + 1;
        first_gap += 1;
    }
    MoveSite::R2Insert {
        first_gap,
        second_gap: first_gap + k,
        overs_first: bits & 1 == 0,
        parallel: bits & 2 == 0,
        sign: Sign::from_bool(bits & 4 == 0),
    }
}

/// A uniformly chosen site of `kind`, or `None` if there is none.
pub fn sample_site(d: &GaussDiagram, kind: MoveKind, rng: &mut DetRng) -> Option<MoveSite> {
    let len = d.word().len();
    match kind {
        MoveKind::R1Insert => Some(decode_r1(rng.below(count_sites(d, kind)))),
        MoveKind::R2Insert => Some(decode_r2(len, rng.below(count_sites(d, kind)))),
        _ => {
            let sites = enumerate_sites(d, kind);
            if sites.is_empty() {
                None
            } else {
                Some(sites[rng.below(sites.len())])
            }
        }
    }
}

fn r2_delete_chords(d: &GaussDiagram, site: &MoveSite) -> Result<(usize, usize), MoveError> {
    let MoveSite::R2Delete { over_pos, under_pos } = *site else {
        unreachable!()
    };
    let w = d.word();
    if over_pos + 1 >= w.len() || under_pos + 1 >= w.len() {
        return Err(out_of_range(site, d));
    }
    let (a, b) = (w[over_pos], w[over_pos + 1]);
    let (x, y) = (w[under_pos], w[under_pos + 1]);
    let ok = a.passage == Passage::Over
        && b.passage == Passage::Over
        && x.passage == Passage::Under
        && y.passage == Passage::Under
        && a.chord != b.chord
        && ((x.chord, y.chord) == (a.chord, b.chord) || (x.chord, y.chord) == (b.chord, a.chord))
        && d.sign(a.chord) != d.sign(b.chord);
    if ok {
        Ok((a.chord, b.chord))
    } else {
        Err(stale(site))
    }
}

fn insert_at(word: &[Endpoint], inserts: &[(usize, Vec<Endpoint>)]) -> Vec<Endpoint> {
    let mut out = Vec::with_capacity(word.len() + inserts.iter().map(|(_, v)| v.len()).sum::<usize>());
    let mut it = inserts.iter().peekable();
    for g in 0..=word.len() {
        while let Some((_, items)) = it.next_if(|(gap, _)| *gap == g) {
            out.extend_from_slice(items);
        }
        if g < word.len() {
            out.push(word[g]);
        }
    }
    out
}

fn endpoint(chord: usize, passage: Passage) -> Endpoint {
    Endpoint { chord, passage }
}

/// Apply `site` to `d`.
pub fn apply(d: &GaussDiagram, site: &MoveSite) -> Result<GaussDiagram, MoveError> {
    let w = d.word();
    let len = w.len();
    let n = d.n();
    let mut signs = d.signs().to_vec();
    match *site {
        MoveSite::R1Insert { gap, over_first, sign } => {
            if gap > len {
                return Err(out_of_range(site, d));
            }
            let (first, second) = if over_first {
                (Passage::Over, Passage::Under)
            } else {
                (Passage::Under, Passage::Over)
            };
            signs.push(sign);
            let word = insert_at(w, &[(gap, vec![endpoint(n, first), endpoint(n, second)])]);
            Ok(GaussDiagram::from_parts(word, &signs))
        }
        MoveSite::R1Delete { pos } => {
            if pos + 1 >= len {
                return Err(out_of_range(site, d));
            }
            if w[pos].chord != w[pos + 1].chord {
                return Err(stale(site));
            }
            Ok(d.delete_chords(&[w[pos].chord]))
        }
        MoveSite::R2Insert {
            first_gap,
            second_gap,
            overs_first,
            parallel,
            sign,
        } => {
            if first_gap > second_gap || second_gap > len {
                return Err(out_of_range(site, d));
            }
            let (a, b) = (n, n + 1);
            signs.push(sign);
            signs.push(-sign);
            let (p1, p2) = if overs_first {
                (Passage::Over, Passage::Under)
            } else {
                (Passage::Under, Passage::Over)
            };
            let first = vec![endpoint(a, p1), endpoint(b, p1)];
            let second = if parallel {
                vec![endpoint(a, p2), endpoint(b, p2)]
            } else {
                vec![endpoint(b, p2), endpoint(a, p2)]
            };
            let word = insert_at(w, &[(first_gap, first), (second_gap, second)]);
            Ok(GaussDiagram::from_parts(word, &signs))
        }
        MoveSite::R2Delete { .. } => {
            let (a, b) = r2_delete_chords(d, site)?;
            Ok(d.delete_chords(&[a, b]))
        }
        MoveSite::Welded { pos } => {
            if pos + 1 >= len {
                return Err(out_of_range(site, d));
            }
            if w[pos].passage != Passage::Over || w[pos + 1].passage != Passage::Over {
                return Err(stale(site));
            }
            let mut word = w.to_vec();
            word.swap(pos, pos + 1);
            Ok(GaussDiagram::from_parts(word, &signs))
        }
        MoveSite::R3 { strands, .. } | MoveSite::Delta { strands, .. } => {
            if strands.iter().any(|&p| p + 1 >= len) {
                return Err(out_of_range(site, d));
            }
            if triangle::site_at(d, strands, site.kind()).as_ref() != Some(site) {
                return Err(stale(site));
            }
            let mut word = w.to_vec();
            for p in strands {
                word.swap(p, p + 1);
            }
            Ok(GaussDiagram::from_parts(word, &signs))
        }
        MoveSite::Virtualize { chord } => {
            if chord >= n {
                return Err(out_of_range(site, d));
            }
            Ok(d.delete_chords(&[chord]))
        }
        MoveSite::CrossingChange { chord } => {
            if chord >= n {
                return Err(out_of_range(site, d));
            }
            Ok(d.crossing_change(&[chord]))
        }
    }
}

/// The site that undoes `site`, located on `after = apply(d, site)`.
/// Virtualization has no inverse site and returns `None`.
pub fn inverse_site(d: &GaussDiagram, site: &MoveSite, after: &GaussDiagram) -> Option<MoveSite> {
    match *site {
        MoveSite::R1Insert { gap, .. } => Some(MoveSite::R1Delete { pos: gap }),
        MoveSite::R1Delete { pos } => {
            let chord = d.word()[pos].chord;
            Some(MoveSite::R1Insert {
                gap: pos,
                over_first: d.word()[pos].passage == Passage::Over,
                sign: d.sign(chord),
            })
        }
        MoveSite::R2Insert {
            first_gap,
            second_gap,
            overs_first,
            ..
        } => {
            let (o, u) = if overs_first {
                (first_gap, second_gap + 2)
            } else {
                (second_gap + 2, first_gap)
            };
            Some(MoveSite::R2Delete {
                over_pos: o,
                under_pos: u,
            })
        }
        MoveSite::R2Delete { over_pos, under_pos } => {
            let w = d.word();
            let (first_gap, second_gap, overs_first) = if over_pos < under_pos {
                (over_pos, under_pos - 2, true)
            } else {
                (under_pos, over_pos - 2, false)
            };
            let first = if overs_first { over_pos } else { under_pos };
            let second = if overs_first { under_pos } else { over_pos };
            Some(MoveSite::R2Insert {
                first_gap,
                second_gap,
                overs_first,
                parallel: w[first].chord == w[second].chord,
                sign: d.sign(w[first].chord),
            })
        }
        MoveSite::Welded { pos } => Some(MoveSite::Welded { pos }),
        MoveSite::R3 { strands, .. } => triangle::site_at(after, strands, MoveKind::R3),
        MoveSite::Delta { strands, .. } => triangle::site_at(after, strands, MoveKind::Delta),
        MoveSite::Virtualize { .. } => None,
        MoveSite::CrossingChange { chord } => {
            let (left, _) = d.span(chord);
            Some(MoveSite::CrossingChange {
                chord: after.word()[left].chord,
            })
        }
    }
}
