//! Exact Laurent polynomials in one variable `t`.
//!
//! Text form: terms joined by `+`/`-`, each term `[coeff][*][t[^exp]]` with
//! possibly negative exponents, e.g. `-t^3-2*t+1` or `t^-2`. The zero
//! polynomial prints as `0`. Whitespace is ignored on input.
//!
//! JSON form: an object mapping decimal exponent strings to integer
//! coefficients, e.g. `{"3": -1, "1": -2}`. Coefficients that do not fit a
//! 64-bit integer are written as decimal strings.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::gauss::Sign;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at column {column}: {message}")]
pub struct PolyParseError {
    /// 1-based character column in the input.
    pub column: usize,
    pub message: String,
}

/// A Laurent polynomial with coefficients in `C`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, exp);
        p
    }

    /// `±t^exp`.
    pub fn signed_monomial(sign: Sign, exp: i64) -> Self {
        let c = if sign.is_positive() { C::one() } else { -C::one() };
        Self::monomial(c, exp)
    }

    /// The polynomial `(t - 1)^n`, by repeated monomial multiplication.
    pub fn t_minus_one_pow(n: u32) -> Self {
        let mut p = Self::one();
        for _ in 0..n {
            p = p.mul_monomial(&C::one(), 1) - p;
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, c: C, exp: i64) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Some `(c, n)` when the polynomial is the single term `c * t^n`.
    pub fn as_monomial(&self) -> Option<(C, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c.clone(), *e))
        } else {
            None
        }
    }

    /// Multiply by `c * t^shift`.
    pub fn mul_monomial(&self, c: &C, shift: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e + shift, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `f(t^-1)`.
    pub fn substitute_inverse(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `f(1)`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// `f'(1) = Σ i·a_i`.
    pub fn derivative_at_one(&self) -> C {
        self.terms
            .iter()
            .fold(C::zero(), |acc, (e, c)| acc + C::from_i64_exact(*e) * c.clone())
    }

    /// `||f|| = Σ |a_i|`.
    pub fn one_norm(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.abs())
    }

    /// Convert coefficients to another coefficient type. Panics if a value does not fit.
    pub fn convert<D: Coefficient>(&self) -> Laurent<D> {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let v = c
                        .to_i128()
                        .and_then(D::from_i128)
                        .or_else(|| c.to_string().parse::<D>().ok())
                        .unwrap_or_else(|| panic!("coefficient {c} does not fit target type"));
                    (*e, v)
                })
                .collect(),
        }
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Add<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl<C: Coefficient> AddAssign for Laurent<C> {
    fn add_assign(&mut self, rhs: Self) {
        for (e, c) in rhs.terms {
            self.add_term(c, e);
        }
    }
}

impl<C: Coefficient> SubAssign for Laurent<C> {
    fn sub_assign(&mut self, rhs: Self) {
        for (e, c) in rhs.terms {
            self.add_term(-c, e);
        }
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<C: Coefficient> Sub<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out -= rhs.clone();
        out
    }
}

impl<C: Coefficient> Mul<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;

    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                out.add_term(c.clone() * d.clone(), e + f);
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;

    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -self.clone()
    }
}

impl<C: Coefficient> std::iter::Sum for Laurent<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{abs}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coefficient> FromStr for Laurent<C> {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Parse the text form of a polynomial.
pub fn parse_poly<C: Coefficient>(text: &str) -> Result<Laurent<C>, PolyParseError> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_ascii_whitespace())
        .map(|(i, c)| (i + 1, c))
        .collect();
    let err = |idx: usize, message: &str| PolyParseError {
        column: chars.get(idx).map_or(text.chars().count() + 1, |(col, _)| *col),
        message: message.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty polynomial"));
    }

    let digits = |mut i: usize| -> (usize, String) {
        let mut s = String::new();
        while let Some((_, c)) = chars.get(i) {
            if c.is_ascii_digit() {
                s.push(*c);
                i += 1;
            } else {
                break;
            }
        }
        (i, s)
    };

    let mut poly = Laurent::zero();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        match chars[i].1 {
            '+' => i += 1,
            '-' => {
                negative = true;
                i += 1;
            }
            _ if first => {}
            _ => return Err(err(i, "expected '+' or '-' between terms")),
        }
        first = false;
        let term_start = i;

        let (next, coeff_digits) = digits(i);
        i = next;
        let has_coeff = !coeff_digits.is_empty();
        let mut coeff = if has_coeff {
            coeff_digits
                .parse::<C>()
                .map_err(|_| err(term_start, "coefficient out of range"))?
        } else {
            C::one()
        };

        let mut has_star = false;
        if chars.get(i).map(|c| c.1) == Some('*') {
            if !has_coeff {
                return Err(err(i, "'*' without a coefficient"));
            }
            has_star = true;
            i += 1;
        }

        let mut exp = 0i64;
        if chars.get(i).map(|c| c.1) == Some('t') {
            i += 1;
            exp = 1;
            if chars.get(i).map(|c| c.1) == Some('^') {
                i += 1;
                let mut exp_negative = false;
                if chars.get(i).map(|c| c.1) == Some('-') {
                    exp_negative = true;
                    i += 1;
                }
                let exp_start = i;
                let (next, exp_digits) = digits(i);
                if exp_digits.is_empty() {
                    return Err(err(exp_start, "expected exponent digits"));
                }
                i = next;
                exp = exp_digits
                    .parse::<i64>()
                    .map_err(|_| err(exp_start, "exponent out of range"))?;
                if exp_negative {
                    exp = -exp;
                }
            }
        } else if has_star {
            return Err(err(i, "expected 't' after '*'"));
        } else if !has_coeff {
            return Err(err(i, "expected a coefficient or 't'"));
        }

        if negative {
            coeff = -coeff;
        }
        poly.add_term(coeff, exp);
    }
    Ok(poly)
}

impl<C: Coefficient> Serialize for Laurent<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            let key = e.to_string();
            match c.to_i64() {
                Some(v) => map.serialize_entry(&key, &v)?,
                None => map.serialize_entry(&key, &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Laurent<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<C>(std::marker::PhantomData<C>);

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Value {
            Int(i64),
            Text(String),
        }

        impl<'de, C: Coefficient> Visitor<'de> for PolyVisitor<C> {
            type Value = Laurent<C>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to integer coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut poly = Laurent::zero();
                while let Some((key, value)) = access.next_entry::<String, Value>()? {
                    let exp: i64 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent {key:?}")))?;
                    let c = match value {
                        Value::Int(v) => C::from_i64(v),
                        Value::Text(s) => s.parse::<C>().ok(),
                    }
                    .ok_or_else(|| de::Error::custom("coefficient out of range"))?;
                    poly.add_term(c, exp);
                }
                Ok(poly)
            }
        }

        deserializer.deserialize_map(PolyVisitor(std::marker::PhantomData))
    }
}
