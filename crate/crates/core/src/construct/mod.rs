//! Diagram families, realization of prescribed `(V1, V2)`, Δ-distance
//! bounds and brute-force search.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::gauss::{
    enumerate_diagrams_capped, Endpoint, EnumerationError, GaussDiagram, Passage, Sign,
    DEFAULT_ENUMERATION_CAP,
};
use crate::invariants::v_polys;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

pub mod figures;
mod oracle;

pub use oracle::{alexander_polynomial, alpha_from_alexander, conway_a2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyName {
    /// `V1 = t^n`.
    K,
    /// `V1 = -t^(n-1)`.
    Kprime,
}

impl FromStr for FamilyName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "K" | "k" => Ok(FamilyName::K),
            "Kprime" | "kprime" | "K'" => Ok(FamilyName::Kprime),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub n: usize,
}

impl FamilySpec {
    pub fn k(n: usize) -> Self {
        FamilySpec {
            name: FamilyName::K,
            n,
        }
    }

    pub fn kprime(n: usize) -> Self {
        FamilySpec {
            name: FamilyName::Kprime,
            n,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            FamilyName::K => write!(f, "K({})", self.n),
            FamilyName::Kprime => write!(f, "K'({})", self.n),
        }
    }
}

/// `O1+ U2± O3- … O(n+2)- U1+ U3- … U(n+2)- O2±`, with chord 2 negative
/// for `K'`. The `n` tail chords 3..n+2 each start between `ℓ_2` and `r_1`
/// and end between `r_1` and `r_2`.
pub fn family(spec: FamilySpec) -> GaussDiagram {
    let n = spec.n;
    let ep = |chord, passage| Endpoint { chord, passage };
    let mut word = Vec::with_capacity(2 * n + 4);
    word.push(ep(0, Passage::Over));
    word.push(ep(1, Passage::Under));
    word.extend((2..n + 2).map(|c| ep(c, Passage::Over)));
    word.push(ep(0, Passage::Under));
    word.extend((2..n + 2).map(|c| ep(c, Passage::Under)));
    word.push(ep(1, Passage::Over));
    let mut signs = vec![Sign::Plus; 2];
    if spec.name == FamilyName::Kprime {
        signs[1] = Sign::Minus;
    }
    signs.extend(std::iter::repeat_n(Sign::Minus, n));
    GaussDiagram::from_parts(word, &signs)
}

/// 0-based indices of the tail chords of [`family`].
pub fn family_tail_chords(spec: FamilySpec) -> Vec<usize> {
    (2..spec.n + 2).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("realization check failed: asked for ({want_v1}, {want_v2}), built diagram has ({got_v1}, {got_v2})")]
    Verification {
        want_v1: String,
        want_v2: String,
        got_v1: String,
        got_v2: String,
    },
    #[error("exponent {0} is too large to realize")]
    ExponentTooLarge(i64),
    #[error("coefficient {0} is too large to realize")]
    CoefficientTooLarge(String),
}

/// A diagram with `V1 = ±t^exp` and `V2 = 0`.
fn monomial_factor(positive: bool, exp: i64) -> Result<GaussDiagram, RealizeError> {
    let size = |m: i64| usize::try_from(m).map_err(|_| RealizeError::ExponentTooLarge(exp));
    Ok(match (positive, exp) {
        (true, e) if e >= 0 => family(FamilySpec::k(size(e)?)),
        (true, e) => family(FamilySpec::k(size(e.checked_neg().ok_or(RealizeError::ExponentTooLarge(exp))?)?)).reverse(),
        (false, e) if e >= -1 => family(FamilySpec::kprime(size(e + 1)?)),
        (false, e) => family(FamilySpec::kprime(size(1 - e)?)).reverse(),
    })
}

fn realize_v1<C: Coefficient>(f: &Laurent<C>) -> Result<GaussDiagram, RealizeError> {
    let mut parts = Vec::new();
    for (exp, c) in f.terms().rev() {
        let copies = c
            .abs()
            .to_usize()
            .ok_or_else(|| RealizeError::CoefficientTooLarge(c.to_string()))?;
        let factor = monomial_factor(c.is_positive(), exp)?;
        parts.extend(std::iter::repeat_n(factor, copies));
    }
    Ok(GaussDiagram::concat_all(&parts))
}

/// A diagram with `V1 = f` and `V2 = g`. Terms `a t^n` of `f` become `|a|`
/// copies of one family diagram (reversed for the exponents out of reach
/// otherwise); the same is done for `g` and the result switched and
/// appended. The answer is recomputed before it is returned.
pub fn realize<C: Coefficient>(f: &Laurent<C>, g: &Laurent<C>) -> Result<GaussDiagram, RealizeError> {
    let first = realize_v1(f)?;
    let second = realize_v1(g)?.switch();
    let d = first.concat(&second);
    let (v1, v2) = v_polys::<C>(&d);
    if &v1 != f || &v2 != g {
        return Err(RealizeError::Verification {
            want_v1: f.to_string(),
            want_v2: g.to_string(),
            got_v1: v1.to_string(),
            got_v2: v2.to_string(),
        });
    }
    Ok(d)
}

/// JSON: `{"difference": {...}, "lower_bound": int|null, "obstruction": bool}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaBoundReport<C: Coefficient> {
    /// `V1(D) - V1(D')`.
    pub difference: Laurent<C>,
    /// `||difference||`, or `None` when the two cannot be Δ-equivalent.
    pub lower_bound: Option<C>,
    /// `V1 - V2` differs, so no sequence of Δ-moves connects them.
    pub obstruction: bool,
}

impl<C: Coefficient> Serialize for DeltaBoundReport<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DeltaBoundReport", 3)?;
        st.serialize_field("difference", &self.difference)?;
        match &self.lower_bound {
            None => st.serialize_field("lower_bound", &None::<i64>)?,
            Some(b) => match b.to_i64() {
                Some(v) => st.serialize_field("lower_bound", &v)?,
                None => st.serialize_field("lower_bound", &b.to_string())?,
            },
        }
        st.serialize_field("obstruction", &self.obstruction)?;
        st.end()
    }
}

pub fn delta_bound<C: Coefficient>(d: &GaussDiagram, other: &GaussDiagram) -> DeltaBoundReport<C> {
    let (a1, a2) = v_polys::<C>(d);
    let (b1, b2) = v_polys::<C>(other);
    let obstruction = &a1 - &a2 != &b1 - &b2;
    let difference = a1 - b1;
    DeltaBoundReport {
        lower_bound: (!obstruction).then(|| difference.one_norm()),
        difference,
        obstruction,
    }
}

/// The first diagram in enumeration order with at most `n_max` chords
/// satisfying `predicate`.
pub fn search_diagram<P>(predicate: P, n_max: usize) -> Result<Option<GaussDiagram>, EnumerationError>
where
    P: FnMut(&GaussDiagram) -> bool,
{
    search_diagram_capped(predicate, n_max, DEFAULT_ENUMERATION_CAP)
}

pub fn search_diagram_capped<P>(
    mut predicate: P,
    n_max: usize,
    cap: usize,
) -> Result<Option<GaussDiagram>, EnumerationError>
where
    P: FnMut(&GaussDiagram) -> bool,
{
    // Fail before doing any work.
    enumerate_diagrams_capped(n_max, cap)?;
    for n in 0..=n_max {
        if let Some(d) = enumerate_diagrams_capped(n, cap)?.find(|d| predicate(d)) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
