//! Alternating sums over subsets of chords.

use std::ops::{Add, Neg};

use crate::gauss::GaussDiagram;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

use super::v_polys;

/// `Σ_δ (-1)^{|δ|} f(op(D, {c ∈ C : δ_c = 1}))` over all `2^|C|` choices.
pub fn alternating_sum<T, Op, F>(d: &GaussDiagram, subset: &[usize], op: Op, f: F) -> T
where
    T: Add<Output = T> + Neg<Output = T>,
    Op: Fn(&GaussDiagram, &[usize]) -> GaussDiagram,
    F: Fn(&GaussDiagram) -> T,
{
    assert!(subset.len() < 32, "subset too large");
    assert!(subset.iter().all(|&c| c < d.n()), "chord out of range");
    let mut chosen = Vec::with_capacity(subset.len());
    let mut acc: Option<T> = None;
    for mask in 0u32..(1 << subset.len()) {
        chosen.clear();
        chosen.extend(
            subset
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, c)| *c),
        );
        let value = f(&op(d, &chosen));
        let value = if mask.count_ones() % 2 == 1 { -value } else { value };
        acc = Some(match acc {
            Some(a) => a + value,
            None => value,
        });
    }
    acc.expect("at least the empty choice")
}

/// Alternating sum of `V1` over deletions of chords in `subset`.
pub fn virtualization_alt_sum<C: Coefficient>(d: &GaussDiagram, subset: &[usize]) -> Laurent<C> {
    alternating_sum(d, subset, GaussDiagram::delete_chords, |g| v_polys::<C>(g).0)
}

/// Alternating sum of `V1` over crossing changes of chords in `subset`.
pub fn crossing_change_alt_sum<C: Coefficient>(d: &GaussDiagram, subset: &[usize]) -> Laurent<C> {
    alternating_sum(d, subset, GaussDiagram::crossing_change, |g| v_polys::<C>(g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::random_diagram;
    use crate::invariants::{linked_pairs, v1_prime};
    use num_bigint::BigInt;

    type P = Laurent<BigInt>;

    #[test]
    fn empty_subset_is_the_value() {
        let g = random_diagram(5, 3);
        assert_eq!(virtualization_alt_sum::<BigInt>(&g, &[]), v_polys::<BigInt>(&g).0);
        assert_eq!(crossing_change_alt_sum::<BigInt>(&g, &[]), v_polys::<BigInt>(&g).0);
    }

    #[test]
    fn unlinked_diagrams_sum_to_zero() {
        for seed in 0..300 {
            let g = random_diagram(4, seed);
            if linked_pairs(&g).is_empty() {
                let all: Vec<usize> = (0..g.n()).collect();
                assert!(virtualization_alt_sum::<BigInt>(&g, &all).is_zero());
                assert!(virtualization_alt_sum::<BigInt>(&g, &[1]).is_zero());
            }
        }
    }

    #[test]
    fn two_positive_chords() {
        let g: GaussDiagram = "O1+ U2+ U1+ O2+".parse().unwrap();
        assert_eq!(crossing_change_alt_sum::<BigInt>(&g, &[0, 1]), P::one());
    }

    #[test]
    fn crossing_change_degree_two() {
        for seed in 0..150 {
            let g = random_diagram(3 + (seed % 4) as usize, seed);
            assert!(crossing_change_alt_sum::<BigInt>(&g, &[0, 1, 2]).is_zero());
            if g.n() >= 4 {
                assert!(crossing_change_alt_sum::<BigInt>(&g, &[0, 1, 2, 3]).is_zero());
            }
        }
    }

    #[test]
    fn integer_alternating_sums() {
        let g: GaussDiagram = "O1+ U2+ U3+ O2+ U1+ O3+".parse().unwrap();
        let s: i64 = alternating_sum(&g, &[0, 1, 2], GaussDiagram::delete_chords, v1_prime::<i64>);
        assert_eq!(s, 1);
    }
}
