use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the integers.
///
/// `coeffs[i]` is the coefficient of `X^i`. The leading stored coefficient is
/// never zero; the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `X^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    /// `1 + X^step + X^{2 step} + ... + X^{(terms-1) step}`
    pub fn geometric(step: usize, terms: usize) -> Self {
        if terms == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); step * (terms - 1) + 1];
        for j in 0..terms {
            coeffs[j * step] += BigInt::one();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands for the degree of the zero polynomial and orders below
    /// every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn min_coeff(&self) -> Option<&BigInt> {
        self.coeffs.iter().min()
    }

    pub fn max_coeff(&self) -> Option<&BigInt> {
        self.coeffs.iter().max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub(crate) fn div_exact_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Euclidean division by a monic divisor; quotient and remainder stay integral.
    pub fn divrem_exact(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor.leading().ok_or(Error::ZeroDivisor)?;
        if !lead.is_one() {
            return Err(Error::NonMonicDivisor(lead.clone()));
        }
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + db]);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs[..db].iter().enumerate() {
                if !b.is_zero() {
                    rem[i + j] -= &c * b;
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Remainder modulo a monic divisor.
    pub fn rem_monic(&self, divisor: &IntPoly) -> Result<IntPoly> {
        self.divrem_exact(divisor).map(|(_, r)| r)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed in Z[X].
    pub(crate) fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.coeffs.len() - 1;
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = &b.coeffs[db];
        let mut r = self.coeffs.clone();
        let mut pending = da - db + 1;
        while r.len() > db {
            let top = r.len() - 1;
            let c = r.pop().expect("nonempty");
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                r[top - db + j] -= &c * bj;
            }
            pending -= 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let rem = IntPoly::new(r);
        if pending > 0 {
            rem.scale(&num_traits::pow(lb.clone(), pending))
        } else {
            rem
        }
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> std::iter::Product<&'a IntPoly> for IntPoly {
    fn product<I: Iterator<Item = &'a IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * p)
    }
}

pub fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a + b
}

pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

pub fn divrem_exact(a: &IntPoly, b: &IntPoly) -> Result<(IntPoly, IntPoly)> {
    a.divrem_exact(b)
}

pub fn eval(a: &IntPoly, q: &BigInt) -> BigInt {
    a.eval(q)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{mag}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{mag}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Little-endian array of decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&p(&[-1, 1]) + &p(&[1, 1]), p(&[0, 2]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 0, 1]), p(&[3, 0, 1]));
        let sum = &p(&[0, 0, 1]) + &p(&[0, 0, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn zero_degree_orders_below_everything() {
        assert!(IntPoly::zero().degree() < Some(0));
        assert!(IntPoly::one().degree() < p(&[0, 1]).degree());
    }

    #[test]
    fn mul_small() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1, 1]), p(&[-1, 0, 0, 1]));
        assert!((&p(&[1, 2]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn divrem_cases() {
        let x15 = IntPoly::x_pow_minus_one(15);
        let d = &(&p(&[-1, 1]) * &p(&[1, 1, 1])) * &p(&[1, 1, 1, 1, 1]);
        let (q, r) = x15.divrem_exact(&d).unwrap();
        assert_eq!(q, p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        assert!(r.is_zero());

        let x2 = p(&[0, 0, 1]);
        assert_eq!(
            x2.divrem_exact(&x2).unwrap(),
            (IntPoly::one(), IntPoly::zero())
        );

        let (q, r) = p(&[2, 1]).divrem_exact(&p(&[0, 0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[2, 1]));
    }

    #[test]
    fn divrem_rejects_bad_divisors() {
        assert_eq!(
            p(&[1, 1]).divrem_exact(&IntPoly::zero()),
            Err(Error::ZeroDivisor)
        );
        assert!(matches!(
            p(&[1, 1]).divrem_exact(&p(&[1, 2])),
            Err(Error::NonMonicDivisor(_))
        ));
    }

    #[test]
    fn pseudo_remainder_matches_scaled_division() {
        // 2X+1 into X^3 + X: lc^3 * a = 8X^3 + 8X, remainder 8*(-1/8 - 1/2) = -5
        let r = p(&[0, 1, 0, 1]).pseudo_rem(&p(&[1, 2]));
        assert_eq!(r, p(&[-5]));
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[1, 1, 1]).eval(&BigInt::from(2)), BigInt::from(7));
        assert_eq!(p(&[-1, 1]).eval(&BigInt::from(1)), BigInt::from(0));
        let phi15 = p(&[1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(phi15.eval(&BigInt::from(2)), BigInt::from(151));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(p(&[1, -1, 0, 1]).to_string(), "X^3 - X + 1");
        assert_eq!(p(&[-6, -10]).to_string(), "-10*X - 6");
        let json = serde_json::to_string(&p(&[1, -1, 1])).unwrap();
        assert_eq!(json, r#"["1","-1","1"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[1, -1, 1]));
    }
}
