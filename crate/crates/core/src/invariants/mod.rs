//! Linked chord pairs, intersection numbers and the V1/V2 polynomials.
//!
//! Two chords are linked when their endpoints alternate along the line.
//! A linked pair is inward when the two heads are the middle two of the
//! four endpoints, and outward when they are the outer two. `J_in` collects inward pairs
//! `(i, j)` with `i` of type 0 and `j` of type 1; `J_out` collects outward
//! pairs with `i` of type 1 and `j` of type 0. Under the frozen arrow
//! convention this reduces to: order the pair by left endpoint, then types
//! `(0, 1)` give `J_in` and `(1, 0)` give `J_out`.
//!
//! For a linked pair `a, b` in the order `ℓ_a < ℓ_b < r_a < r_b` the
//! intersection number is `S_ab` plus a correction, where `S_ab` sums the
//! endpoint sign of `ℓ_k` over chords `k` with
//!
//! 1. `ℓ_k ∈ (ℓ_a, ℓ_b)` and `r_k ∈ (ℓ_b, r_a)`, or
//! 2. `ℓ_k ∈ (ℓ_b, r_a)` and `r_k ∈ (r_a, r_b)`, or
//! 3. `ℓ_k ∈ (ℓ_a, ℓ_b)` and `r_k ∈ (r_a, r_b)`,
//!
//! and the correction is `+1` if `ℓ_a, ℓ_b` are both positive, `-1` if both
//! negative, `0` otherwise. The reverse order is the negation.

mod finite_type;
mod formulas;
mod pattern;
mod report;

pub use finite_type::{alternating_sum, crossing_change_alt_sum, virtualization_alt_sum};
pub use formulas::{
    alpha2, alpha2_gd, alpha3, alpha3_gd, pattern_terms, semantic_terms, v1_prime, v1_prime_gd,
    v2_prime, v2_prime_gd,
};
pub use pattern::{pairing, standard_pattern, standard_patterns, PatternDiagram, PatternError};
pub use report::{compute_report, Invariants};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gauss::{ArrowConvention, ChordMeta, ChordType, GaussDiagram, Sign};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("chords {0} and {1} are not linked")]
    NotLinked(usize, usize),
    #[error("chord {chord} does not exist in a diagram with {n} chords")]
    NoSuchChord { chord: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LinkKind {
    In,
    Out,
}

/// An ordered pair of `J_in` or `J_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkedPairRecord {
    pub i: usize,
    pub j: usize,
    pub kind: LinkKind,
    /// `α_i · α_j`.
    pub intersection: i64,
    /// `ε_i ε_j`.
    pub weight: Sign,
}

/// The pieces of one intersection number, always in left-endpoint order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionBreakdown {
    /// Chord whose left endpoint comes first.
    pub first: usize,
    pub second: usize,
    pub s: i64,
    pub correction: i64,
}

impl IntersectionBreakdown {
    /// `α_first · α_second`.
    pub fn value(&self) -> i64 {
        self.s + self.correction
    }
}

fn linked(a: &ChordMeta, b: &ChordMeta) -> bool {
    (a.left < b.left && b.left < a.right && a.right < b.right)
        || (b.left < a.left && a.left < b.right && b.right < a.right)
}

/// `S + correction` for `ℓ_a < ℓ_b < r_a < r_b`.
fn breakdown_ordered(metas: &[ChordMeta], a: usize, b: usize) -> IntersectionBreakdown {
    let (ma, mb) = (&metas[a], &metas[b]);
    debug_assert!(ma.left < mb.left && mb.left < ma.right && ma.right < mb.right);
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    let mut s = 0i64;
    for (k, mk) in metas.iter().enumerate() {
        if k == a || k == b {
            continue;
        }
        let (l, r) = (mk.left, mk.right);
        let counted = (inside(l, ma.left, mb.left) && inside(r, mb.left, ma.right))
            || (inside(l, mb.left, ma.right) && inside(r, ma.right, mb.right))
            || (inside(l, ma.left, mb.left) && inside(r, ma.right, mb.right));
        if counted {
            s += mk.left_sign.to_i64();
        }
    }
    let correction = match (ma.left_sign, mb.left_sign) {
        (Sign::Plus, Sign::Plus) => 1,
        (Sign::Minus, Sign::Minus) => -1,
        _ => 0,
    };
    IntersectionBreakdown {
        first: a,
        second: b,
        s,
        correction,
    }
}

fn check_chord(d: &GaussDiagram, c: usize) -> Result<(), InvariantError> {
    if c < d.n() {
        Ok(())
    } else {
        Err(InvariantError::NoSuchChord { chord: c, n: d.n() })
    }
}

pub fn intersection_breakdown(
    d: &GaussDiagram,
    i: usize,
    j: usize,
) -> Result<IntersectionBreakdown, InvariantError> {
    intersection_breakdown_with(d, i, j, ArrowConvention::default())
}

pub fn intersection_breakdown_with(
    d: &GaussDiagram,
    i: usize,
    j: usize,
    convention: ArrowConvention,
) -> Result<IntersectionBreakdown, InvariantError> {
    check_chord(d, i)?;
    check_chord(d, j)?;
    let metas = d.chord_metas(convention);
    if i == j || !linked(&metas[i], &metas[j]) {
        return Err(InvariantError::NotLinked(i, j));
    }
    let (a, b) = if metas[i].left < metas[j].left { (i, j) } else { (j, i) };
    Ok(breakdown_ordered(&metas, a, b))
}

/// `α_i · α_j` for linked chords `i`, `j` (0-based indices).
pub fn intersection_number(d: &GaussDiagram, i: usize, j: usize) -> Result<i64, InvariantError> {
    intersection_number_with(d, i, j, ArrowConvention::default())
}

pub fn intersection_number_with(
    d: &GaussDiagram,
    i: usize,
    j: usize,
    convention: ArrowConvention,
) -> Result<i64, InvariantError> {
    let b = intersection_breakdown_with(d, i, j, convention)?;
    Ok(if b.first == i { b.value() } else { -b.value() })
}

/// `J_in ∪ J_out` with intersection numbers, sorted by `(i, j)`.
pub fn linked_pairs(d: &GaussDiagram) -> Vec<LinkedPairRecord> {
    linked_pairs_with(d, ArrowConvention::default())
}

pub fn linked_pairs_with(d: &GaussDiagram, convention: ArrowConvention) -> Vec<LinkedPairRecord> {
    let metas = d.chord_metas(convention);
    let mut out = Vec::new();
    for (a, ma) in metas.iter().enumerate() {
        for (b, mb) in metas.iter().enumerate() {
            if !(ma.left < mb.left && mb.left < ma.right && ma.right < mb.right) {
                continue;
            }
            let inward = ma.head == ma.right && mb.head == mb.left;
            let outward = ma.head == ma.left && mb.head == mb.right;
            let (ta, tb) = (ma.chord_type, mb.chord_type);
            let (kind, i, j) = match (inward, outward, ta, tb) {
                (true, _, ChordType::Zero, ChordType::One) => (LinkKind::In, a, b),
                (true, _, ChordType::One, ChordType::Zero) => (LinkKind::In, b, a),
                (_, true, ChordType::One, ChordType::Zero) => (LinkKind::Out, a, b),
                (_, true, ChordType::Zero, ChordType::One) => (LinkKind::Out, b, a),
                _ => continue,
            };
            let value = breakdown_ordered(&metas, a, b).value();
            out.push(LinkedPairRecord {
                i,
                j,
                kind,
                intersection: if i == a { value } else { -value },
                weight: d.sign(i) * d.sign(j),
            });
        }
    }
    out.sort_by_key(|r| (r.i, r.j));
    out
}

/// `(V1(D;t), V2(D;t))`.
pub fn v_polys<C: Coefficient>(d: &GaussDiagram) -> (Laurent<C>, Laurent<C>) {
    v_polys_with(d, ArrowConvention::default())
}

pub fn v_polys_with<C: Coefficient>(
    d: &GaussDiagram,
    convention: ArrowConvention,
) -> (Laurent<C>, Laurent<C>) {
    let mut v1 = Laurent::zero();
    let mut v2 = Laurent::zero();
    for rec in linked_pairs_with(d, convention) {
        let c = C::from_i64_exact(rec.weight.to_i64());
        match rec.kind {
            LinkKind::In => v1.add_term(c, rec.intersection),
            LinkKind::Out => v2.add_term(c, rec.intersection),
        }
    }
    (v1, v2)
}

pub fn v1<C: Coefficient>(d: &GaussDiagram) -> Laurent<C> {
    v_polys(d).0
}

pub fn v2<C: Coefficient>(d: &GaussDiagram) -> Laurent<C> {
    v_polys(d).1
}

/// `v_{2,1}(D) = Σ_{J_in} ε_i ε_j`, computed from chord positions only.
pub fn v21_direct<C: Coefficient>(d: &GaussDiagram) -> C {
    signed_link_count(d, ChordType::Zero)
}

/// `v_{2,2}(D) = Σ_{J_out} ε_i ε_j`.
pub fn v22_direct<C: Coefficient>(d: &GaussDiagram) -> C {
    signed_link_count(d, ChordType::One)
}

// Counts pairs with ℓ_a < ℓ_b < r_a < r_b where a has `first_type` and b the other type.
fn signed_link_count<C: Coefficient>(d: &GaussDiagram, first_type: ChordType) -> C {
    let mut total = 0i64;
    for a in 0..d.n() {
        if d.chord_type(a) != first_type {
            continue;
        }
        let (la, ra) = d.span(a);
        for b in 0..d.n() {
            if d.chord_type(b) == first_type {
                continue;
            }
            let (lb, rb) = d.span(b);
            if la < lb && lb < ra && ra < rb {
                total += (d.sign(a) * d.sign(b)).to_i64();
            }
        }
    }
    C::from_i64_exact(total)
}
