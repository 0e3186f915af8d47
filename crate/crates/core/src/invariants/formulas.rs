//! First derivatives at `t = 1` and the α-invariants.
//!
//! `V1'(1)` has a pattern formula
//! `⟨D1⟩-⟨D2⟩+⟨D3⟩-⟨D4⟩+⟨D5⟩-⟨D6⟩+⟨D7⟩-⟨D8⟩`, and
//! `α3 = V1'(1) - V1(1)` has
//! `⟨D1⟩-⟨D2⟩+⟨D3⟩-⟨D4⟩+⟨D5⟩-⟨D6⟩-2⟨D8⟩-⟨D9⟩-⟨D10⟩`.
//! `α3` is only an invariant of the welded class; for an arbitrary diagram
//! these functions return `V1'(1) - V1(1)` of that diagram.

use crate::gauss::{ArrowConvention, ChordType, GaussDiagram, Sign};
use crate::scalar::Coefficient;

use super::pattern::{pairing_i64, standard_patterns};
use super::{linked_pairs, v_polys, LinkKind};

/// `V1'(D;1)` from the polynomial.
pub fn v1_prime<C: Coefficient>(d: &GaussDiagram) -> C {
    v_polys::<C>(d).0.derivative_at_one()
}

/// `V2'(D;1)` from the polynomial.
pub fn v2_prime<C: Coefficient>(d: &GaussDiagram) -> C {
    v_polys::<C>(d).1.derivative_at_one()
}

/// `[⟨D1,D⟩, …, ⟨D10,D⟩]`.
pub fn pattern_terms<C: Coefficient>(d: &GaussDiagram) -> [C; 10] {
    let patterns = standard_patterns();
    std::array::from_fn(|s| C::from_i64_exact(pairing_i64(&patterns[s], d)))
}

/// The same ten numbers as [`pattern_terms`], computed by walking `J_in`
/// and classifying third chords and endpoint signs directly.
pub fn semantic_terms<C: Coefficient>(d: &GaussDiagram) -> [C; 10] {
    let metas = d.chord_metas(ArrowConvention::OverToUnder);
    let mut t = [0i64; 10];
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    for rec in linked_pairs(d) {
        if rec.kind != LinkKind::In {
            continue;
        }
        let (mi, mj) = (&metas[rec.i], &metas[rec.j]);
        let w = rec.weight.to_i64();
        for (k, mk) in metas.iter().enumerate() {
            if k == rec.i || k == rec.j {
                continue;
            }
            let (l, r) = (mk.left, mk.right);
            let condition = if inside(l, mi.left, mj.left) && inside(r, mj.left, mi.right) {
                0
            } else if inside(l, mj.left, mi.right) && inside(r, mi.right, mj.right) {
                1
            } else if inside(l, mi.left, mj.left) && inside(r, mi.right, mj.right) {
                2
            } else {
                continue;
            };
            let slot = 2 * condition + usize::from(mk.chord_type == ChordType::Zero);
            t[slot] += w * d.sign(k).to_i64();
        }
        match (mi.left_sign, mj.left_sign) {
            (Sign::Plus, Sign::Plus) => t[6] += w,
            (Sign::Minus, Sign::Minus) => t[7] += w,
            _ if d.sign(rec.i).is_positive() => t[8] += w,
            _ => t[9] += w,
        }
    }
    t.map(C::from_i64_exact)
}

fn combine<C: Coefficient>(terms: &[C; 10], coefficients: [i64; 10]) -> C {
    terms
        .iter()
        .zip(coefficients)
        .fold(C::zero(), |acc, (t, c)| acc + t.clone() * C::from_i64_exact(c))
}

const V1_PRIME: [i64; 10] = [1, -1, 1, -1, 1, -1, 1, -1, 0, 0];
const ALPHA2: [i64; 10] = [0, 0, 0, 0, 0, 0, 1, 1, 1, 1];
const ALPHA3: [i64; 10] = [1, -1, 1, -1, 1, -1, 0, -2, -1, -1];

/// `V1'(D;1)` from the pattern formula.
pub fn v1_prime_gd<C: Coefficient>(d: &GaussDiagram) -> C {
    combine(&pattern_terms(d), V1_PRIME)
}

/// `V2'(D;1)`, using `V2(D) = V1(D#)`.
pub fn v2_prime_gd<C: Coefficient>(d: &GaussDiagram) -> C {
    v1_prime_gd(&d.switch())
}

/// `α2 = V1(1)`.
pub fn alpha2<C: Coefficient>(d: &GaussDiagram) -> C {
    v_polys::<C>(d).0.eval_at_one()
}

/// `α3 = V1'(1) - V1(1)`.
pub fn alpha3<C: Coefficient>(d: &GaussDiagram) -> C {
    let v1 = v_polys::<C>(d).0;
    v1.derivative_at_one() - v1.eval_at_one()
}

/// `α2 = ⟨D7⟩+⟨D8⟩+⟨D9⟩+⟨D10⟩`.
pub fn alpha2_gd<C: Coefficient>(d: &GaussDiagram) -> C {
    combine(&pattern_terms(d), ALPHA2)
}

/// `α3` from the pattern formula.
pub fn alpha3_gd<C: Coefficient>(d: &GaussDiagram) -> C {
    combine(&pattern_terms(d), ALPHA3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::random_diagram;

    fn d(s: &str) -> GaussDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_knot() {
        let o = GaussDiagram::empty();
        assert_eq!(v1_prime_gd::<i64>(&o), 0);
        assert_eq!(alpha3_gd::<i64>(&o), 0);
        assert_eq!(alpha2::<i64>(&o), 0);
    }

    #[test]
    fn k7_table_values() {
        let k7 = d("O1- U2+ U1- O2+");
        assert_eq!(v1_prime_gd::<i64>(&k7), -1);
        assert_eq!((alpha2::<i64>(&k7), alpha3::<i64>(&k7)), (-1, 0));
        let rk7 = k7.reverse();
        assert_eq!(v1_prime_gd::<i64>(&rk7), 1);
        assert_eq!((alpha2::<i64>(&rk7), alpha3::<i64>(&rk7)), (-1, 2));
    }

    #[test]
    fn pattern_and_semantic_terms_agree() {
        for seed in 0..500 {
            let g = random_diagram((seed % 7) as usize, seed);
            assert_eq!(pattern_terms::<i64>(&g), semantic_terms::<i64>(&g), "{g}");
            assert_eq!(v1_prime_gd::<i64>(&g), v1_prime::<i64>(&g), "{g}");
            assert_eq!(v2_prime_gd::<i64>(&g), v2_prime::<i64>(&g), "{g}");
            assert_eq!(alpha2_gd::<i64>(&g), alpha2::<i64>(&g), "{g}");
            assert_eq!(alpha3_gd::<i64>(&g), alpha3::<i64>(&g), "{g}");
        }
    }
}
