use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntPoly, ScaledPoly};
use crate::error::{Error, Result};

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn lift(p: &IntPoly) -> QPoly {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let mut out: QPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

fn q_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn q_scale(a: &QPoly, c: &BigRational) -> QPoly {
    let mut out: QPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// Division over Q; `b` must be nonzero.
fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv_lead = b[db].recip();
    let mut rem = a.clone();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = std::mem::take(&mut rem[i + db]) * &inv_lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &c * bj;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// Canonical Bezout pair over Q: `a*U + b*V = 1` with `deg U < deg b` and
/// `deg V < deg a`.
///
/// Runs a monic remainder sequence tracking only the cofactor of `a`; `V` is
/// recovered by exact division. A constant `b` yields `(0, 1/b)`.
pub fn xgcd_rational(a: &IntPoly, b: &IntPoly) -> Result<(ScaledPoly, ScaledPoly)> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument(
            "extended gcd needs nonzero operands".into(),
        ));
    }
    let qa = lift(a);
    let qb = lift(b);

    if qb.len() == 1 {
        let v = vec![qb[0].recip()];
        return Ok((
            ScaledPoly::from_int(IntPoly::zero()),
            ScaledPoly::from_rationals(&v),
        ));
    }

    let (_, mut r0) = q_divrem(&qa, &qb);
    let mut s0: QPoly = vec![BigRational::one()];
    if r0.is_empty() {
        return Err(Error::NotCoprime(qb.len() - 1));
    }
    // invariant: r_i = s_i * a (mod b)
    let lead = r0.last().unwrap().recip();
    r0 = q_scale(&r0, &lead);
    s0 = q_scale(&s0, &lead);
    let mut r1 = qb;
    let lead = r1.last().unwrap().recip();
    r1 = q_scale(&r1, &lead);
    let mut s1: QPoly = Vec::new();

    while r0.len() > 1 {
        let (q, r) = q_divrem(&r1, &r0);
        let s = q_sub(&s1, &q_mul(&q, &s0));
        if r.is_empty() {
            return Err(Error::NotCoprime(r0.len() - 1));
        }
        let lead = r.last().unwrap().recip();
        r1 = std::mem::replace(&mut r0, q_scale(&r, &lead));
        s1 = std::mem::replace(&mut s0, q_scale(&s, &lead));
    }
    // r0 is the monic constant 1, so s0 * a = 1 (mod b)
    let (_, u) = q_divrem(&s0, &lift(b));
    let residue = q_sub(&vec![BigRational::one()], &q_mul(&qa, &u));
    let (v, rem) = q_divrem(&residue, &lift(b));
    debug_assert!(rem.is_empty());
    Ok((
        ScaledPoly::from_rationals(&u),
        ScaledPoly::from_rationals(&v),
    ))
}

/// `a^{-1} mod b` over Q, i.e. the `U` of the canonical Bezout pair.
pub fn inverse_mod_poly(a: &IntPoly, b: &IntPoly) -> Result<ScaledPoly> {
    xgcd_rational(a, b).map(|(u, _)| u)
}

/// Reduces `u * a` modulo the monic `modulus` after clearing denominators:
/// returns `(num(u) * a mod modulus, den(u))`.
pub fn reduce_product(u: &ScaledPoly, a: &IntPoly, modulus: &IntPoly) -> Result<(IntPoly, BigInt)> {
    let prod = u.num() * a;
    Ok((prod.rem_monic(modulus)?, u.den().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn check_identity(a: &IntPoly, b: &IntPoly, u: &ScaledPoly, v: &ScaledPoly) {
        let lhs = &(&(a * u.num()) * &IntPoly::constant(v.den().clone()))
            + &(&(b * v.num()) * &IntPoly::constant(u.den().clone()));
        assert_eq!(lhs, IntPoly::constant(u.den() * v.den()));
        assert!(u.degree() < b.degree());
        assert!(v.degree() < a.degree());
    }

    #[test]
    fn phi3_phi5() {
        let phi3 = p(&[1, 1, 1]);
        let phi5 = p(&[1, 1, 1, 1, 1]);
        let (u, v) = xgcd_rational(&phi3, &phi5).unwrap();
        assert_eq!(u, ScaledPoly::from_int(p(&[1, 0, 0, 1])));
        check_identity(&phi3, &phi5, &u, &v);

        let (u, v) = xgcd_rational(&phi5, &phi3).unwrap();
        assert_eq!(u, ScaledPoly::from_int(p(&[0, -1])));
        check_identity(&phi5, &phi3, &u, &v);
    }

    #[test]
    fn phi3_phi1() {
        let (u, v) = xgcd_rational(&p(&[1, 1, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(u, ScaledPoly::constant(1, 3));
        assert_eq!(v, ScaledPoly::new(p(&[-2, -1]), BigInt::from(3)).unwrap());
    }

    #[test]
    fn common_factor_is_rejected() {
        let a = &p(&[-1, 1]) * &p(&[1, 1]);
        let b = &p(&[-1, 1]) * &p(&[2, 0, 1]);
        assert_eq!(xgcd_rational(&a, &b), Err(Error::NotCoprime(1)));
        assert!(matches!(xgcd_rational(&a, &a), Err(Error::NotCoprime(2))));
    }

    #[test]
    fn constant_operands() {
        let (u, v) = xgcd_rational(&p(&[1, 2, 3]), &p(&[4])).unwrap();
        assert!(u.num().is_zero());
        assert_eq!(v, ScaledPoly::constant(1, 4));
        let (u, v) = xgcd_rational(&p(&[2]), &p(&[1, 1])).unwrap();
        assert_eq!(u, ScaledPoly::constant(1, 2));
        assert!(v.num().is_zero());
    }
}
