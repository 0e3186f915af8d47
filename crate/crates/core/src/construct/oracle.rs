//! Alexander polynomial of a long knot from its Wirtinger presentation.
//!
//! A diagram with `n` crossings has `n + 1` arcs and `n` relations, and
//! every row of the Fox Jacobian sums to zero, so deleting any one column
//! leaves a square matrix whose determinant is `Δ(t)` up to `±t^k`. This
//! works for virtual and welded long knots alike and gives an oracle for
//! `α_2 = Δ''(1)/2` and `α_3 = Δ'''(1)/6` that shares no code with the
//! chord-diagram formulas.

use crate::gauss::{GaussDiagram, Passage, Sign};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

/// Determinant by expansion over column subsets, `O(2^n n)` products.
fn det<C: Coefficient>(m: &[Vec<Laurent<C>>]) -> Laurent<C> {
    let n = m.len();
    assert!(n < 24, "matrix too large for the oracle");
    let mut dp = vec![Laurent::<C>::zero(); 1 << n];
    dp[0] = Laurent::one();
    for mask in 0usize..(1 << n) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask >> col & 1 == 1 || m[row][col].is_zero() {
                continue;
            }
            let term = &dp[mask] * &m[row][col];
            if (mask >> col).count_ones() % 2 == 1 {
                dp[mask | 1 << col] -= term;
            } else {
                dp[mask | 1 << col] += term;
            }
        }
    }
    dp.pop().expect("non-empty table")
}

/// `Δ(t)`, normalized so that `Δ(1) = 1` and `Δ'(1) = 0`.
pub fn alexander_polynomial<C: Coefficient>(d: &GaussDiagram) -> Laurent<C> {
    let n = d.n();
    // Arc k runs from the k-th under-passage to the next one.
    let mut arc_at = vec![0usize; 2 * n];
    let mut arc = 0;
    for (pos, e) in d.word().iter().enumerate() {
        arc_at[pos] = arc;
        if e.passage == Passage::Under {
            arc += 1;
        }
    }
    let t = |c: i64, e: i64| Laurent::monomial(C::from_i64_exact(c), e);
    let mut m = vec![vec![Laurent::<C>::zero(); n + 1]; n];
    for c in 0..n {
        let incoming = arc_at[d.under_position(c)];
        let outgoing = incoming + 1;
        let over = arc_at[d.over_position(c)];
        let row = &mut m[c];
        match d.sign(c) {
            Sign::Minus => {
                row[over] += t(1, 0) - t(1, 1);
                row[incoming] += t(1, 1);
                row[outgoing] -= t(1, 0);
            }
            Sign::Plus => {
                row[over] += t(1, 1) - t(1, 0);
                row[incoming] += t(1, 0);
                row[outgoing] -= t(1, 1);
            }
        }
    }
    let square: Vec<Vec<Laurent<C>>> = m.iter().map(|row| row[1..].to_vec()).collect();
    let mut delta = det(&square);
    let at_one = delta.eval_at_one();
    assert!(at_one.abs().is_one(), "Δ(1) = {at_one} for {d}");
    if at_one.is_negative() {
        delta = -delta;
    }
    let shift = delta.derivative_at_one();
    delta.mul_monomial(&C::one(), -shift.to_i64().expect("small shift"))
}

fn falling<C: Coefficient>(f: &Laurent<C>, k: i64) -> C {
    f.terms().fold(C::zero(), |acc, (e, c)| {
        let mut w = C::one();
        for i in 0..k {
            w = w * C::from_i64_exact(e - i);
        }
        acc + w * c.clone()
    })
}

/// `(α_2, α_3) = (Δ''(1)/2, Δ'''(1)/6)` of the normalized `Δ`.
pub fn alpha_from_alexander<C: Coefficient>(d: &GaussDiagram) -> (C, C) {
    let delta = alexander_polynomial::<C>(d);
    (
        falling(&delta, 2) / C::from_i64_exact(2),
        falling(&delta, 3) / C::from_i64_exact(6),
    )
}

/// The `z^2` coefficient of the Conway polynomial when `Δ` is symmetric,
/// as it is for classical knots.
pub fn conway_a2<C: Coefficient>(d: &GaussDiagram) -> Option<C> {
    let delta = alexander_polynomial::<C>(d);
    (delta.substitute_inverse() == delta).then(|| falling(&delta, 2) / C::from_i64_exact(2))
}
