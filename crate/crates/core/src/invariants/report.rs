use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::gauss::GaussDiagram;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

use super::v_polys;

/// Every invariant of one diagram.
///
/// JSON shape: `{"gauss_code", "n", "v1", "v2", "v21", "v22", "v1_prime_1",
/// "v2_prime_1", "alpha2", "alpha3"}` with polynomials as exponent maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Invariants<C> {
    pub gauss_code: String,
    pub n: usize,
    pub v1: Laurent<C>,
    pub v2: Laurent<C>,
    pub v21: C,
    pub v22: C,
    pub v1_prime_1: C,
    pub v2_prime_1: C,
    pub alpha2: C,
    pub alpha3: C,
}

pub fn compute_report<C: Coefficient>(d: &GaussDiagram) -> Invariants<C> {
    let (v1, v2) = v_polys::<C>(d);
    let v21 = v1.eval_at_one();
    let v22 = v2.eval_at_one();
    let v1_prime_1 = v1.derivative_at_one();
    let v2_prime_1 = v2.derivative_at_one();
    Invariants {
        gauss_code: d.to_string(),
        n: d.n(),
        alpha2: v21.clone(),
        alpha3: v1_prime_1.clone() - v21.clone(),
        v1,
        v2,
        v21,
        v22,
        v1_prime_1,
        v2_prime_1,
    }
}

impl<C: Coefficient> std::fmt::Debug for Invariants<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Invariants")
            .field("gauss_code", &self.gauss_code)
            .field("v1", &self.v1)
            .field("v2", &self.v2)
            .field("v1_prime_1", &self.v1_prime_1)
            .field("v2_prime_1", &self.v2_prime_1)
            .finish_non_exhaustive()
    }
}

struct JsonInt<'a, C>(&'a C);

impl<C: Coefficient> Serialize for JsonInt<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<C: Coefficient> Serialize for Invariants<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("InvariantReport", 10)?;
        st.serialize_field("gauss_code", &self.gauss_code)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("v1", &self.v1)?;
        st.serialize_field("v2", &self.v2)?;
        st.serialize_field("v21", &JsonInt(&self.v21))?;
        st.serialize_field("v22", &JsonInt(&self.v22))?;
        st.serialize_field("v1_prime_1", &JsonInt(&self.v1_prime_1))?;
        st.serialize_field("v2_prime_1", &JsonInt(&self.v2_prime_1))?;
        st.serialize_field("alpha2", &JsonInt(&self.alpha2))?;
        st.serialize_field("alpha3", &JsonInt(&self.alpha3))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn json_shape_is_fixed() {
        let d: GaussDiagram = "O1- U2+ O3- U4+ U1- O2+ U3- O4+".parse().unwrap();
        let r = compute_report::<BigInt>(&d);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"gauss_code":"O1- U2+ O3- U4+ U1- O2+ U3- O4+","n":4,"v1":{"3":-1,"1":-2},"v2":{"1":-1},"v21":-3,"v22":-1,"v1_prime_1":-5,"v2_prime_1":-1,"alpha2":-3,"alpha3":-2}"#
        );
    }

    #[test]
    fn report_identities() {
        for seed in 0..100 {
            let d = crate::gauss::random_diagram((seed % 6) as usize, seed);
            let r = compute_report::<i64>(&d);
            assert_eq!(r.v21, r.v1.eval_at_one());
            assert_eq!(r.v22, r.v2.eval_at_one());
            assert_eq!(r.alpha2, r.v21);
            assert_eq!(r.alpha3, r.v1_prime_1 - r.alpha2);
        }
    }
}
