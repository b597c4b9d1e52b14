use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

/// A polynomial with rational coefficients stored as `num / den`.
///
/// Always kept normalized: `den >= 1` and `gcd(content(num), den) = 1`.
/// The zero polynomial therefore has `den = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawScaled", into = "RawScaled")]
pub struct ScaledPoly {
    num: IntPoly,
    den: BigInt,
}

impl ScaledPoly {
    pub fn new(num: IntPoly, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_int(num: IntPoly) -> Self {
        ScaledPoly {
            num,
            den: BigInt::one(),
        }
    }

    pub fn constant(num: i64, den: i64) -> Self {
        Self::normalize(IntPoly::constant(num.into()), den.into())
    }

    fn normalize(num: IntPoly, den: BigInt) -> Self {
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        let g = num.content().gcd(&den);
        if g.is_one() || g.is_zero() {
            return ScaledPoly { num, den };
        }
        ScaledPoly {
            num: num.div_exact_scalar(&g),
            den: den / g,
        }
    }

    /// Re-applies normalization; a no-op on any value built through this API.
    pub fn normalized(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }

    pub(crate) fn from_rationals(coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalize(IntPoly::new(num), den)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn into_int(self) -> Option<IntPoly> {
        self.is_integral().then_some(self.num)
    }

    /// The integer numerator when the polynomial is written over `den`;
    /// `None` if `den` is not a multiple of the canonical denominator.
    pub fn numerator_over(&self, den: &BigInt) -> Option<IntPoly> {
        if den.is_zero() || !den.is_multiple_of(&self.den) {
            return None;
        }
        Some(self.num.scale(&(den / &self.den)))
    }

    /// Value of the polynomial at an integer point, as an exact rational.
    pub fn eval(&self, q: &BigInt) -> BigRational {
        BigRational::new(self.num.eval(q), self.den.clone())
    }
}

impl fmt::Display for ScaledPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "(1/{})*({})", self.den, self.num)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawScaled {
    num: IntPoly,
    den: String,
}

impl From<ScaledPoly> for RawScaled {
    fn from(s: ScaledPoly) -> Self {
        RawScaled {
            num: s.num,
            den: s.den.to_string(),
        }
    }
}

impl TryFrom<RawScaled> for ScaledPoly {
    type Error = Error;
    fn try_from(raw: RawScaled) -> Result<Self> {
        let den = raw
            .den
            .parse::<BigInt>()
            .map_err(|e| Error::InvalidArgument(format!("bad denominator: {e}")))?;
        ScaledPoly::new(raw.num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_content() {
        let s = ScaledPoly::new(IntPoly::from_i64(&[4, 6]), BigInt::from(-10)).unwrap();
        assert_eq!(s.num(), &IntPoly::from_i64(&[-2, -3]));
        assert_eq!(s.den(), &BigInt::from(5));
    }

    #[test]
    fn zero_forces_unit_denominator() {
        let s = ScaledPoly::new(IntPoly::zero(), BigInt::from(7)).unwrap();
        assert_eq!(s.den(), &BigInt::one());
        assert!(s.is_integral());
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(ScaledPoly::new(IntPoly::one(), BigInt::zero()).is_err());
    }

    #[test]
    fn numerator_over_multiple() {
        let s = ScaledPoly::constant(1, 3);
        assert_eq!(
            s.numerator_over(&BigInt::from(6)),
            Some(IntPoly::from_i64(&[2]))
        );
        assert_eq!(s.numerator_over(&BigInt::from(4)), None);
    }

    #[test]
    fn serde_shape() {
        let s = ScaledPoly::new(IntPoly::from_i64(&[-4, -3, -2, -1]), BigInt::from(5)).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"num":["-4","-3","-2","-1"],"den":"5"}"#);
        let back: ScaledPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ScaledPoly>(r#"{"num":["1"],"den":"0"}"#).is_err());
    }
}
