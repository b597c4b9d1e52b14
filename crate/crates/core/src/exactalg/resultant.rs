use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// Resultant of two integer polynomials, equal to the determinant of their
/// Sylvester matrix (rows of `a` first).
///
/// Uses the subresultant pseudo-remainder sequence, so every intermediate
/// stays in Z[X]. Returns zero when either input is zero.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return BigInt::zero();
    };
    let ca = a.content();
    let cb = b.content();
    let t = pow(&ca, db) * pow(&cb, da);
    let mut a = a.div_exact_scalar(&ca);
    let mut b = b.div_exact_scalar(&cb);

    let mut sign = 1i8;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let deg_a = a.degree().expect("nonzero");
        let deg_b = b.degree().expect("nonzero");
        if deg_b == 0 {
            // Res(A, c) = c^deg A, folded into the running subresultant scale
            let lb = b.leading().expect("nonzero");
            let h_final = if deg_a == 0 {
                BigInt::one()
            } else {
                pow(lb, deg_a) / pow(&h, deg_a - 1)
            };
            let res = t * h_final;
            return if sign < 0 { -res } else { res };
        }
        if deg_a % 2 == 1 && deg_b % 2 == 1 {
            sign = -sign;
        }
        let delta = deg_a - deg_b;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        b = r.div_exact_scalar(&(&g * pow(&h, delta)));
        g = a.leading().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta) / pow(&h, delta - 1)
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_cyclotomic_values() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[1, 1])), BigInt::from(2));
        assert_eq!(resultant(&p(&[1, -1, 1]), &p(&[1, 1, 1])), BigInt::from(4));
        assert_eq!(
            resultant(&p(&[1, 1, 1]), &p(&[1, 1, 1, 1, 1])),
            BigInt::from(1)
        );
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])), BigInt::from(9));
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[3])), BigInt::from(9));
        assert_eq!(resultant(&p(&[3]), &p(&[5])), BigInt::from(1));
        assert_eq!(resultant(&IntPoly::zero(), &p(&[1, 1])), BigInt::zero());
    }

    #[test]
    fn shared_root_vanishes() {
        let a = &p(&[-2, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[-2, 1]) * &p(&[3, 1]);
        assert_eq!(resultant(&a, &b), BigInt::zero());
    }

    #[test]
    fn non_monic_linear() {
        // Res(2X - 1, X^2 + 1) = 2^2 * ((1/2)^2 + 1) = 5
        assert_eq!(resultant(&p(&[-1, 2]), &p(&[1, 0, 1])), BigInt::from(5));
        // Res(X, X - 3): both degree one, swap sign = -1
        assert_eq!(resultant(&p(&[0, 1]), &p(&[-3, 1])), BigInt::from(-3));
        assert_eq!(resultant(&p(&[-3, 1]), &p(&[0, 1])), BigInt::from(3));
    }
}
