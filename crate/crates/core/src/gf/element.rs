use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::upoly::FieldOps;
use super::ExtField;
use crate::error::{Error, Result};

/// An element of `F_{q^n}`: `n` residues in `[0, q)`, little-endian in the
/// polynomial basis of the field modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtFieldElement {
    field: ExtField,
    coeffs: Vec<BigUint>,
}

impl ExtFieldElement {
    pub(crate) fn from_raw(field: ExtField, coeffs: Vec<BigUint>) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        ExtFieldElement { field, coeffs }
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The residue if this element lies in the prime field.
    pub fn as_base(&self) -> Option<&BigUint> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(FieldOps::add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(FieldOps::sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_same(other))
    }

    pub fn neg(&self) -> Self {
        self.with(FieldOps::sub(
            &self.field,
            &self.field.zero().coeffs,
            &self.coeffs,
        ))
    }

    pub fn square(&self) -> Self {
        self.mul_same(self)
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .raw_inv(&self.coeffs)
            .map(|c| self.with(c))
            .ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_same(&other.inv()?))
    }

    /// `self^e` by square-and-multiply; negative exponents invert first.
    pub fn pow(&self, e: &BigInt) -> Result<Self> {
        match e.sign() {
            Sign::Minus => Ok(self.inv()?.pow_u(e.magnitude())),
            _ => Ok(self.pow_u(e.magnitude())),
        }
    }

    pub fn pow_u(&self, e: &BigUint) -> Self {
        let mut acc = self.field.one();
        for i in (0..e.bits()).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = acc.mul_same(self);
            }
        }
        acc
    }

    pub fn pow_i64(&self, e: i64) -> Result<Self> {
        self.pow(&BigInt::from(e))
    }

    /// `self^{q^k}`
    pub fn frobenius(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.pow_u(self.field.q()))
    }

    /// Canonical total order: by the integer `sum c_i q^i`.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }

    /// The integer `sum c_i q^i`, a bijection onto `[0, q^n)`.
    pub fn to_index(&self) -> BigUint {
        let q = self.field.q();
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * q + c)
    }

    pub(crate) fn mul_same(&self, other: &Self) -> Self {
        self.with(self.field.raw_mul(&self.coeffs, &other.coeffs))
    }

    fn with(&self, coeffs: Vec<BigUint>) -> Self {
        ExtFieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl fmt::Debug for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{c}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{c}*X^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for ExtFieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        let mut st = s.serialize_struct("ExtFieldElement", 2)?;
        st.serialize_field("field", &self.field.descriptor())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::super::make_ext_field_u64;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn f4_generator_times_successor_is_one() {
        let f = make_ext_field_u64(2, 2).unwrap();
        let x = f.generator();
        let x1 = x.add(&f.one()).unwrap();
        assert!(x.mul(&x1).unwrap().is_one());
    }

    #[test]
    fn lagrange_and_inverse() {
        let f = make_ext_field_u64(7, 15).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let order_minus_one = f.order() - 1u32;
        for _ in 0..5 {
            let x = f.random_nonzero(&mut rng);
            assert!(x.pow_u(&order_minus_one).is_one());
            assert!(x.pow_i64(-1).unwrap().mul(&x).unwrap().is_one());
            assert!(x.pow_i64(0).unwrap().is_one());
        }
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = make_ext_field_u64(5, 3).unwrap();
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f.zero().pow_i64(-2), Err(Error::DivisionByZero));
        assert!(f.zero().pow_i64(3).unwrap().is_zero());
    }

    #[test]
    fn cross_field_is_an_error() {
        let a = make_ext_field_u64(5, 3).unwrap();
        let b = make_ext_field_u64(5, 2).unwrap();
        assert_eq!(a.one().mul(&b.one()), Err(Error::FieldMismatch));
        // structurally equal fields interoperate
        let c = make_ext_field_u64(5, 3).unwrap();
        assert!(a.one().mul(&c.one()).unwrap().is_one());
    }

    #[test]
    fn frobenius_has_order_n() {
        let f = make_ext_field_u64(3, 5).unwrap();
        let x = f.generator();
        assert_eq!(x.frobenius(5), x);
        assert_ne!(x.frobenius(1), x);
    }

    #[test]
    fn canonical_order_matches_index() {
        let f = make_ext_field_u64(3, 2).unwrap();
        let a = f.element_u64(&[2, 0]);
        let b = f.element_u64(&[0, 1]);
        assert_eq!(a.cmp_canonical(&b), Ordering::Less);
        assert_eq!(a.to_index(), BigUint::from(2u32));
        assert_eq!(b.to_index(), BigUint::from(3u32));
    }

    #[test]
    fn display_and_serde() {
        let f = make_ext_field_u64(2, 2).unwrap();
        let x = f.generator().add(&f.one()).unwrap();
        assert_eq!(x.to_string(), "X + 1");
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "field": {"q": "2", "n": 2, "modulus": ["1", "1", "1"]},
                "coeffs": ["1", "1"],
            })
        );
    }
}
